"""Temperley-Lieb algebra of type B on decorated planar diagrams.

A diagram on ``n`` strands is a non-crossing perfect matching of 2n points.
Points are numbered in one linear order around the rectangle: bottom points
``b1..bn`` are ``0..n-1`` and top points ``tn..t1`` are ``n..2n-1``, so
``t_i`` sits at ``2n - i`` and the closing strand of the trace joins ``p``
to ``2n - 1 - p``.  The wall lies west of the rectangle; an arc may carry a
blob (the ``e0`` decoration) only if nothing separates it from the wall.

Loop bookkeeping, in terms of the parameters ``d, c, c'``:

* k blobs on one curve merge into one with factor ``c**(k-1)``;
* a closed loop left inside a product weighs ``d`` plain, ``c'`` blobbed;
* in the trace, a closure loop weighs ``d`` plain; blobbed, it weighs ``c``
  if it runs through the closure of strand 1 and ``c'`` otherwise.  With
  the ``d**-n`` normalization this gives tr(1) = 1, tr(e0) = c/d and
  tr(a e_{n-1} b) = tr(ab)/d.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .coefficients import QfScalar
from .model import ModelParams


class StrandMismatch(ValueError):
    pass


class BlobDiagram:
    __slots__ = ("n", "match", "blob", "_hash")

    def __init__(self, n: int, match: tuple[int, ...], blob: tuple[bool, ...]) -> None:
        self.n = n
        self.match = match
        self.blob = blob
        self._hash = hash((n, match, blob))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int, bool]]) -> BlobDiagram:
        match = [-1] * (2 * n)
        blob = [False] * (2 * n)
        for p, q, b in arcs:
            if match[p] != -1 or match[q] != -1 or p == q:
                raise ValueError(f"point used twice in arc {(p, q)}")
            match[p], match[q] = q, p
            blob[p] = blob[q] = bool(b)
        if -1 in match:
            raise ValueError("arcs do not cover every point")
        diagram = cls(n, tuple(match), tuple(blob))
        problems = diagram.violations()
        if problems:
            raise ValueError("; ".join(problems))
        return diagram

    def __eq__(self, other) -> bool:
        if not isinstance(other, BlobDiagram):
            return NotImplemented
        return self.n == other.n and self.match == other.match and self.blob == other.blob

    def __hash__(self) -> int:
        return self._hash

    @property
    def arcs(self) -> list[tuple[int, int, bool]]:
        return [(p, q, self.blob[p]) for p, q in enumerate(self.match) if p < q]

    def violations(self) -> list[str]:
        """Planarity and west-exposure problems (empty for a valid diagram)."""
        problems = []
        stack: list[int] = []
        for p, q in enumerate(self.match):
            if p < q:
                if self.blob[p] and stack:
                    problems.append(f"blob on enclosed arc {self._label(p)}-{self._label(q)}")
                stack.append(q)
            elif not stack or stack.pop() != p:
                problems.append(f"arc {self._label(q)}-{self._label(p)} crosses another arc")
                break
        return problems

    def is_west_exposed(self, p: int) -> bool:
        lo, hi = sorted((p, self.match[p]))
        return not any(u < lo and hi < v for u, v, _ in self.arcs)

    def n_through(self) -> int:
        return sum(1 for p in range(self.n) if self.match[p] >= self.n)

    def _label(self, p: int) -> str:
        return f"b{p + 1}" if p < self.n else f"t{2 * self.n - p}"

    def render(self) -> str:
        """ASCII arc list such as ``b1-t1* b2-b3 t2-t3`` (``*`` marks a blob)."""
        out = []
        for p, q, b in self.arcs:
            if p >= self.n:
                p, q = q, p  # top-top arcs read t_i-t_j with i < j
            out.append(f"{self._label(p)}-{self._label(q)}{'*' if b else ''}")
        return " ".join(out)

    def __repr__(self) -> str:
        return f"BlobDiagram({self.n}: {self.render()})"


def identity(n: int) -> BlobDiagram:
    if n < 1:
        raise ValueError("need at least one strand")
    return BlobDiagram(n, tuple(2 * n - 1 - p for p in range(2 * n)), (False,) * (2 * n))


def generator_diagram(n: int, i: int) -> BlobDiagram:
    if not 0 <= i < n:
        raise IndexError(f"generator e{i} does not exist on {n} strands")
    match = list(identity(n).match)
    blob = [False] * (2 * n)
    if i == 0:
        blob[0] = blob[2 * n - 1] = True
    else:
        b_lo, b_hi = i - 1, i
        t_lo, t_hi = 2 * n - i, 2 * n - i - 1
        match[b_lo], match[b_hi] = b_hi, b_lo
        match[t_lo], match[t_hi] = t_hi, t_lo
    return BlobDiagram(n, tuple(match), tuple(blob))


@lru_cache(maxsize=1 << 18)
def compose(x: BlobDiagram, y: BlobDiagram) -> tuple[int, int, int, BlobDiagram]:
    """Stack ``x`` below ``y``.

    Returns ``(merges, plain_loops, blobbed_loops, diagram)``; the scalar is
    ``c**merges * d**plain_loops * c'**blobbed_loops``.
    """
    if x.n != y.n:
        raise StrandMismatch(f"{x.n} strands against {y.n}")
    n = x.n
    two_n = 2 * n
    match = [-1] * two_n
    blob = [False] * two_n
    seen_mid = [False] * n
    merges = 0
    # x-side point p < n is a result bottom; y-side point p >= n is a result top
    for start in range(two_n):
        if match[start] != -1:
            continue
        # x and y may be the same object, so track the side explicitly
        lower = start < n
        p = start
        k = 0
        while True:
            layer = x if lower else y
            q = layer.match[p]
            k += layer.blob[p]
            if lower:
                if q < n:
                    end = q
                    break
                i = two_n - q
                seen_mid[i - 1] = True
                lower, p = False, i - 1
            else:
                if q >= n:
                    end = q
                    break
                seen_mid[q] = True
                lower, p = True, two_n - 1 - q
        match[start], match[end] = end, start
        if k:
            blob[start] = blob[end] = True
            merges += k - 1
    plain = blobbed = 0
    for i0 in range(n):
        if seen_mid[i0]:
            continue
        # closed loop through the middle row; walk it starting on y's side
        k = 0
        lower, p = False, i0
        while True:
            layer = x if lower else y
            q = layer.match[p]
            k += layer.blob[p]
            if not lower:
                seen_mid[q] = True
                lower, p = True, two_n - 1 - q
            else:
                i = two_n - q
                seen_mid[i - 1] = True
                lower, p = False, i - 1
                if i - 1 == i0:
                    break
        if k:
            blobbed += 1
            merges += k - 1
        else:
            plain += 1
    return merges, plain, blobbed, BlobDiagram(n, tuple(match), tuple(blob))


@lru_cache(maxsize=1 << 16)
def closure_counts(x: BlobDiagram) -> tuple[int, int, int, int]:
    """Loops of the east closure: ``(merges, plain, blobbed_outer, blobbed_inner)``.

    ``blobbed_outer`` counts blobbed loops through the closure of strand 1.
    """
    two_n = 2 * x.n
    seen = [False] * two_n
    merges = plain = outer = inner = 0
    for start in range(two_n):
        if seen[start]:
            continue
        k = 0
        strand1 = False
        p = start
        while True:
            q = x.match[p]
            seen[p] = seen[q] = True
            k += x.blob[p]
            strand1 = strand1 or p in (0, two_n - 1) or q in (0, two_n - 1)
            p = two_n - 1 - q
            if p == start:
                break
        if not k:
            plain += 1
        else:
            merges += k - 1
            if strand1:
                outer += 1
            else:
                inner += 1
    return merges, plain, outer, inner


@dataclass(frozen=True)
class LoopWeights:
    d: QfScalar
    c: QfScalar
    c_prime: QfScalar

    @classmethod
    def from_model(cls, m: ModelParams) -> LoopWeights:
        return cls(m.d, m.c, m.c_prime)

    @property
    def f(self) -> int:
        return self.d.f

    def scalar(self, merges: int, plain: int, blobbed: int) -> QfScalar:
        return _power_product(self, merges, plain, blobbed)


@lru_cache(maxsize=4096)
def _power_product(w: LoopWeights, merges: int, plain: int, blobbed: int) -> QfScalar:
    return w.c**merges * w.d**plain * w.c_prime**blobbed


def multiply_diagrams(x: BlobDiagram, y: BlobDiagram, w: LoopWeights) -> tuple[QfScalar, BlobDiagram]:
    merges, plain, blobbed, z = compose(x, y)
    return w.scalar(merges, plain, blobbed), z


class AlgebraElement:
    """Finite linear combination of blob diagrams with exact coefficients."""

    __slots__ = ("n", "w", "terms")

    def __init__(self, n: int, w: LoopWeights, terms: Mapping[BlobDiagram, QfScalar] | None = None):
        self.n = n
        self.w = w
        self.terms: dict[BlobDiagram, QfScalar] = {}
        for diagram, coeff in (terms or {}).items():
            if diagram.n != n:
                raise StrandMismatch(f"{diagram.n}-strand diagram in a {n}-strand element")
            if coeff:
                self.terms[diagram] = coeff

    @classmethod
    def basis(cls, diagram: BlobDiagram, w: LoopWeights, coeff: QfScalar | int = 1) -> AlgebraElement:
        if not isinstance(coeff, QfScalar):
            coeff = QfScalar(coeff, 0, w.f)
        return cls(diagram.n, w, {diagram: coeff})

    @classmethod
    def unit(cls, n: int, w: LoopWeights) -> AlgebraElement:
        return cls.basis(identity(n), w)

    @classmethod
    def zero(cls, n: int, w: LoopWeights) -> AlgebraElement:
        return cls(n, w)

    def _check(self, other: AlgebraElement) -> None:
        if other.n != self.n:
            raise StrandMismatch(f"{self.n} strands against {other.n}")

    def __add__(self, other):
        if isinstance(other, (int, QfScalar)):
            other = AlgebraElement.unit(self.n, self.w) * other
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for diagram, coeff in other.terms.items():
            terms[diagram] = terms[diagram] + coeff if diagram in terms else coeff
        return AlgebraElement(self.n, self.w, terms)

    __radd__ = __add__

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.n, self.w, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k: QfScalar | int) -> AlgebraElement:
        if not k:
            return AlgebraElement(self.n, self.w)
        return AlgebraElement(self.n, self.w, {diagram: coeff * k for diagram, coeff in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, QfScalar)):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        out: dict[BlobDiagram, QfScalar] = {}
        w = self.w
        for x, cx in self.terms.items():
            for y, cy in other.terms.items():
                merges, plain, blobbed, z = compose(x, y)
                coeff = cx * cy
                if merges or plain or blobbed:
                    coeff = coeff * w.scalar(merges, plain, blobbed)
                out[z] = out[z] + coeff if z in out else coeff
        return AlgebraElement(self.n, w, out)

    def __rmul__(self, other):
        if isinstance(other, (int, QfScalar)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[BlobDiagram, QfScalar]]:
        return iter(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = sorted(f"({c})[{d.render()}]" for d, c in self.terms.items())
        return " + ".join(parts)


def generator(n: int, i: int, w: LoopWeights) -> AlgebraElement:
    return AlgebraElement.basis(generator_diagram(n, i), w)


def word_element(n: int, indices: Iterable[int], w: LoopWeights) -> AlgebraElement:
    """Product e_{i1} e_{i2} ... with the leftmost factor at the bottom."""
    elem = AlgebraElement.unit(n, w)
    for i in indices:
        elem = elem * generator(n, i, w)
    return elem


def diagram_trace(x: BlobDiagram, w: LoopWeights) -> QfScalar:
    merges, plain, outer, inner = closure_counts(x)
    return w.c ** (merges + outer) * w.d ** (plain - x.n) * w.c_prime**inner


def markov_trace(x: AlgebraElement) -> QfScalar:
    total = QfScalar(0, 0, x.w.f)
    for diagram, coeff in x.terms.items():
        total = total + coeff * diagram_trace(diagram, x.w)
    return total


def random_word(rng: random.Random, n_gens: int, length: int) -> list[int]:
    """Uniform word in ``e0 .. e_{n_gens-1}``."""
    return [rng.randrange(n_gens) for _ in range(length)]
