"""Extended braid words, the skein map into the blob algebra, and lattice partition functions.

Letters are ``Sigma(i)``, ``SigmaPrime(i)`` and ``E(i)``.  The skein map sends

    Sigma(i)      -> beta  e_i + alpha        SigmaPrime(i) -> alpha  e_i + beta
    Sigma(0)      -> beta0 e_0 + alpha0       SigmaPrime(0) -> alpha0 e_0 + beta0
    E(i)          -> e_i

and a word evaluates to the ordered product, first letter at the bottom.
No braid relations are ever applied to words.

Lattice convention: ``n_rows`` sites touch the wall (one wall bond per row),
``m_cols`` sites per row, ``2 * m_cols`` strands.  Site ``j`` of a row is the
region between strands ``2j-1`` and ``2j``; ``Sigma(2j)`` is the horizontal
bond to site ``j+1``, ``Sigma(0)`` the wall bond of site 1 and
``SigmaPrime(2j-1)`` the vertical bond of column ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .coefficients import QfScalar
from .graph import lattice_graph  # noqa: F401  (re-exported for lattice users)
from .model import ModelParams
from .partition import BudgetExceeded
from .tlb import AlgebraElement, LoopWeights, generator_diagram, identity, markov_trace

DEFAULT_MAX_STRANDS = 8

_KINDS = {"s": "Sigma", "S": "SigmaPrime", "e": "E"}


@dataclass(frozen=True)
class Letter:
    kind: str  # "Sigma", "SigmaPrime" or "E"
    index: int

    def __post_init__(self) -> None:
        if self.kind not in _KINDS.values():
            raise ValueError(f"unknown letter kind {self.kind!r}")
        if self.index < 0:
            raise IndexError(f"negative letter index {self.index}")

    def __str__(self) -> str:
        code = {v: k for k, v in _KINDS.items()}[self.kind]
        return f"{code}{self.index}"


def Sigma(i: int) -> Letter:
    return Letter("Sigma", i)


def SigmaPrime(i: int) -> Letter:
    return Letter("SigmaPrime", i)


def E(i: int) -> Letter:
    return Letter("E", i)


@dataclass(frozen=True)
class TangleWord:
    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a word needs at least one strand")
        for letter in self.letters:
            if letter.index >= self.n:
                raise IndexError(f"letter {letter} out of range on {self.n} strands")

    def __add__(self, other: TangleWord) -> TangleWord:
        if other.n != self.n:
            raise ValueError(f"cannot concatenate {self.n}- and {other.n}-strand words")
        return TangleWord(self.n, self.letters + other.letters)

    def __mul__(self, k: int) -> TangleWord:
        return TangleWord(self.n, self.letters * k)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))

    @classmethod
    def parse(cls, n: int, text: str) -> TangleWord:
        """Whitespace-separated letters: ``s<i>`` Sigma, ``S<i>`` SigmaPrime, ``e<i>`` E."""
        letters = []
        for tok in text.split():
            if tok[0] not in _KINDS or not tok[1:].isdigit():
                raise ValueError(f"bad letter {tok!r}")
            letters.append(Letter(_KINDS[tok[0]], int(tok[1:])))
        return cls(n, tuple(letters))


@lru_cache(maxsize=1024)
def _phi_cached(letter: Letter, m: ModelParams, n: int) -> AlgebraElement:
    w = LoopWeights.from_model(m)
    e = generator_diagram(n, letter.index)
    one = identity(n)
    if letter.kind == "E":
        return AlgebraElement.basis(e, w)
    if letter.index == 0:
        on_e, on_one = (m.beta0, m.alpha0) if letter.kind == "Sigma" else (m.alpha0, m.beta0)
    else:
        on_e, on_one = (m.beta, m.alpha) if letter.kind == "Sigma" else (m.alpha, m.beta)
    return AlgebraElement(n, w, {e: on_e, one: on_one})


def phi_letter(letter: Letter, m: ModelParams, n: int) -> AlgebraElement:
    if letter.index >= n:
        raise IndexError(f"letter {letter} out of range on {n} strands")
    return _phi_cached(letter, m, n)


def evaluate_word(
    word: TangleWord, m: ModelParams, max_strands: int | None = DEFAULT_MAX_STRANDS
) -> AlgebraElement:
    if max_strands is not None and word.n > max_strands:
        raise BudgetExceeded(f"{word.n} strands exceed the budget of {max_strands}")
    elem = AlgebraElement.unit(word.n, LoopWeights.from_model(m))
    for letter in word.letters:
        elem = elem * phi_letter(letter, m, word.n)
    return elem


def _check_dims(*dims: int) -> None:
    if any(k < 1 for k in dims):
        raise ValueError(f"dimensions must be positive, got {dims}")


def tau_prime(m_cols: int) -> TangleWord:
    """sigma_0 sigma_2 ... sigma_{2m-2}: wall bond plus the horizontal bonds of one row."""
    _check_dims(m_cols)
    return TangleWord(2 * m_cols, tuple(Sigma(i) for i in range(0, 2 * m_cols - 1, 2)))


def tau_double_prime(m_cols: int) -> TangleWord:
    """sigma'_1 sigma'_3 ... sigma'_{2m-1}: the vertical bonds between two rows."""
    _check_dims(m_cols)
    return TangleWord(2 * m_cols, tuple(SigmaPrime(i) for i in range(1, 2 * m_cols, 2)))


def tau_word(n_rows: int, m_cols: int) -> TangleWord:
    """tau' (tau'' tau')**n_rows, exactly as written; it spans ``n_rows + 1`` rows of sites."""
    _check_dims(n_rows, m_cols)
    return tau_prime(m_cols) + (tau_double_prime(m_cols) + tau_prime(m_cols)) * n_rows


def e_block(m_cols: int) -> TangleWord:
    _check_dims(m_cols)
    return TangleWord(2 * m_cols, tuple(E(i) for i in range(1, 2 * m_cols, 2)))


def row_word(n_rows: int, m_cols: int) -> TangleWord:
    """Bond word of an ``n_rows`` x ``m_cols`` lattice: tau' (tau'' tau')**(n_rows-1)."""
    _check_dims(n_rows, m_cols)
    return tau_prime(m_cols) + (tau_double_prime(m_cols) + tau_prime(m_cols)) * (n_rows - 1)


def lattice_word(n_rows: int, m_cols: int) -> TangleWord:
    """Closed lattice diagram E_m (bonds) E_m."""
    return e_block(m_cols) + row_word(n_rows, m_cols) + e_block(m_cols)


def potts_bracket(word: TangleWord, m: ModelParams, max_strands: int | None = DEFAULT_MAX_STRANDS) -> QfScalar:
    """W = d**(n/2) tr(phi(word)) for a word closed off by E blocks on n strands."""
    return m.d ** (word.n // 2) * markov_trace(evaluate_word(word, m, max_strands))


def potts_bracket_lattice(
    n_rows: int, m_cols: int, m: ModelParams, max_strands: int | None = DEFAULT_MAX_STRANDS
) -> QfScalar:
    return potts_bracket(lattice_word(n_rows, m_cols), m, max_strands)


def z_from_bracket(W: QfScalar, m: ModelParams, n_boundary: int, n_vertices: int, n_wall: int = 0) -> QfScalar:
    """Z = C**#B0 * d**#V * c**(-#V0) * W."""
    return m.C**n_boundary * m.d**n_vertices * m.c ** (-n_wall) * W


def lattice_z(
    n_rows: int, m_cols: int, m: ModelParams, max_strands: int | None = DEFAULT_MAX_STRANDS
) -> QfScalar:
    """Z = C**n f**(nm/2) d**m tr(E_m phi(bonds) E_m) for ``n_rows`` = n, ``m_cols`` = m."""
    _check_dims(n_rows, m_cols)
    if max_strands is not None and 2 * m_cols > max_strands:
        raise BudgetExceeded(f"{2 * m_cols} strands exceed the budget of {max_strands}")
    W = potts_bracket_lattice(n_rows, m_cols, m, max_strands)
    return z_from_bracket(W, m, n_boundary=n_rows, n_vertices=n_rows * m_cols)


def words_commute(a: Iterable[Letter], b: Iterable[Letter], n: int, m: ModelParams) -> bool:
    """phi(ab) == phi(ba) as algebra elements."""
    a, b = tuple(a), tuple(b)
    return evaluate_word(TangleWord(n, a + b), m, None) == evaluate_word(TangleWord(n, b + a), m, None)
