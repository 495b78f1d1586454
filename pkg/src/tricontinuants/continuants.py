"""Continuant polynomials built from their three-term recurrences.

Sequences computed here (all in noncommuting a_i, b_j):

* ``A_k``, ``B_k`` -- numerators/denominators of b_0 + a_1/(b_1 + a_2/(b_2 + ...))
* ``P_k``, ``Q_k`` -- the same for b_0 + (-1+a_1)/((1+b_1) + (-1+a_2)/((1+b_2) + ...))
* ``R_k``          -- the structure polynomials with P_k = R_k + R_{k-1}
* ``C_k, D_k``     -- P_k, Q_k with every b set to 0
* ``G_k, H_k``     -- P_k, Q_k with every a and b_0 set to 0

New generators always enter by left multiplication, so every word has a
strictly decreasing subscript sequence.
"""

from __future__ import annotations

import threading
from collections.abc import Callable
from dataclasses import dataclass

from .monoid_ring import Generator, Polynomial, a, b, substitute

DEFAULT_MAX_K = 16

__all__ = [
    "DEFAULT_MAX_K",
    "PeriodicSequence",
    "PERIODIC",
    "periodic",
    "rho",
    "sigma",
    "tau",
    "chi1",
    "upsilon",
    "POLY_NAMES",
    "em_numerator",
    "em_denominator",
    "k_numerator",
    "k_denominator",
    "r_poly",
    "c_poly",
    "d_poly",
    "g_poly",
    "h_poly",
    "poly_by_name",
    "phi",
    "delta",
    "shift_up",
]


@dataclass(frozen=True)
class PeriodicSequence:
    name: str
    values: tuple[int, ...]

    @property
    def period(self) -> int:
        return len(self.values)

    def __call__(self, k: int) -> int:
        return self.values[k % len(self.values)]


PERIODIC: dict[str, PeriodicSequence] = {
    s.name: s
    for s in (
        PeriodicSequence("rho", (0, -1, 0, 0, 1, 0)),
        PeriodicSequence("sigma", (0, 1, 1, 0, -1, -1)),
        PeriodicSequence("tau", (1, -1, -1, 1)),
        PeriodicSequence("chi1", (0, 1, 0, -1)),
        PeriodicSequence("upsilon", (0, 1, 2, 0, 2, 4, 0, 4, 3, 0, 3, 1)),
    )
}

rho = PERIODIC["rho"]
sigma = PERIODIC["sigma"]
tau = PERIODIC["tau"]
chi1 = PERIODIC["chi1"]
upsilon = PERIODIC["upsilon"]


def periodic(name: str, k: int) -> int:
    """Value at ``k`` of one of rho, sigma, tau, chi1, upsilon (k < 0 extends periodically)."""
    try:
        seq = PERIODIC[name]
    except KeyError:
        raise ValueError(f"unknown periodic sequence {name!r}; known: {sorted(PERIODIC)}") from None
    return seq(k)


class _RecurrenceCache:
    """Values x_first, x_first+1, ... of a recurrence, extended on demand.

    Reads of already-computed entries take no lock; extension happens
    under ``_lock`` so concurrent callers never compute an entry twice.
    """

    def __init__(self, name: str, first: int, initial: list[Polynomial],
                 step: Callable[[int, Callable[[int], Polynomial]], Polynomial]):
        self.name = name
        self.first = first
        self._values = list(initial)
        self._step = step
        self._lock = threading.Lock()

    def _get(self, j: int) -> Polynomial:
        return self._values[j - self.first]

    def __call__(self, k: int, max_k: int = DEFAULT_MAX_K) -> Polynomial:
        if isinstance(k, bool) or not isinstance(k, int):
            raise TypeError(f"k must be an int, got {k!r}")
        if k < self.first:
            raise ValueError(f"{self.name}_k is defined for k >= {self.first}, got {k}")
        if k > max_k:
            raise ValueError(f"k={k} exceeds the polynomial cap max_k={max_k}")
        idx = k - self.first
        if idx < len(self._values):
            return self._values[idx]
        with self._lock:
            while len(self._values) <= idx:
                nxt = self.first + len(self._values)
                self._values.append(self._step(nxt, self._get))
        return self._values[idx]


def _binomial_step(k: int, two_back: Polynomial, one_back: Polynomial) -> Polynomial:
    # (-1 + a_k) X_{k-2} + (1 + b_k) X_{k-1}
    return -two_back + two_back.left_mul(a(k)) + one_back + one_back.left_mul(b(k))


def _em_step(k, get):
    return get(k - 2).left_mul(a(k)) + get(k - 1).left_mul(b(k))


def _k_step(k, get):
    return _binomial_step(k, get(k - 2), get(k - 1))


def _r_step(k, get):
    r1, r2, r3 = get(k - 1), get(k - 2), get(k - 3)
    out = -r3 + (r1 + r2).left_mul(b(k))
    if k > 0:  # a_0 = 0
        out = out + (r2 + r3).left_mul(a(k))
    return out


def _c_step(k, get):
    two = get(k - 2)
    return -two + two.left_mul(a(k)) + get(k - 1)


def _g_step(k, get):
    one = get(k - 1)
    return -get(k - 2) + one + one.left_mul(b(k))


_ONE = Polynomial.constant_poly(1)
_ZERO = Polynomial.zero()
_b0 = Polynomial.generator(b(0))
_b1 = Polynomial.generator(b(1))
_a1 = Polynomial.generator(a(1))

# A_{-1} = 1 and B_{-1} = 0 let the k = 1 step reproduce A_1 = b_1 b_0 + a_1, B_1 = b_1.
_A = _RecurrenceCache("A", -1, [_ONE, _b0], _em_step)
_B = _RecurrenceCache("B", -1, [_ZERO, _ONE], _em_step)
_P = _RecurrenceCache("P", 0, [_b0, -1 + _b0 + _b1 * _b0 + _a1], _k_step)
_Q = _RecurrenceCache("Q", 0, [_ONE, 1 + _b1], _k_step)
_R = _RecurrenceCache("R", -3, [_ZERO, _ONE, _ZERO], _r_step)
_C = _RecurrenceCache("C", 0, [_ZERO, -1 + _a1], _c_step)
_D = _RecurrenceCache("D", 0, [_ONE, _ONE], _c_step)
_G = _RecurrenceCache("G", 0, [_ZERO, -_ONE], _g_step)
_H = _RecurrenceCache("H", 0, [_ONE, 1 + _b1], _g_step)


def em_numerator(k: int, max_k: int = DEFAULT_MAX_K) -> Polynomial:
    """A_k via A_k = a_k A_{k-2} + b_k A_{k-1}, A_0 = b_0, A_1 = b_1 b_0 + a_1."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return _A(k, max_k)


def em_denominator(k: int, max_k: int = DEFAULT_MAX_K) -> Polynomial:
    """B_k via the same recurrence, B_0 = 1, B_1 = b_1."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return _B(k, max_k)


def k_numerator(k: int, max_k: int = DEFAULT_MAX_K) -> Polynomial:
    """P_k = (-1 + a_k) P_{k-2} + (1 + b_k) P_{k-1}."""
    return _P(k, max_k)


def k_denominator(k: int, max_k: int = DEFAULT_MAX_K) -> Polynomial:
    return _Q(k, max_k)


def r_poly(k: int, max_k: int = DEFAULT_MAX_K) -> Polynomial:
    """R_k = -R_{k-3} + a_k (R_{k-2} + R_{k-3}) + b_k (R_{k-1} + R_{k-2}), k >= -3."""
    return _R(k, max_k)


def c_poly(k: int, max_k: int = DEFAULT_MAX_K) -> Polynomial:
    return _C(k, max_k)


def d_poly(k: int, max_k: int = DEFAULT_MAX_K) -> Polynomial:
    return _D(k, max_k)


def g_poly(k: int, max_k: int = DEFAULT_MAX_K) -> Polynomial:
    return _G(k, max_k)


def h_poly(k: int, max_k: int = DEFAULT_MAX_K) -> Polynomial:
    return _H(k, max_k)


_BY_NAME = {
    "A": em_numerator,
    "B": em_denominator,
    "P": k_numerator,
    "Q": k_denominator,
    "R": r_poly,
    "C": c_poly,
    "D": d_poly,
    "G": g_poly,
    "H": h_poly,
}

POLY_NAMES = tuple(_BY_NAME)


def poly_by_name(name: str, k: int, max_k: int = DEFAULT_MAX_K) -> Polynomial:
    try:
        fn = _BY_NAME[name]
    except KeyError:
        raise ValueError(f"unknown polynomial {name!r}; known: {', '.join(_BY_NAME)}") from None
    return fn(k, max_k)


# ---- named substitutions ---------------------------------------------------


def _phi_image(g: Generator):
    if g.subscript <= 1:
        return 0  # a_1, b_0, b_1 -> 0
    return Polynomial.generator(Generator(g.letter, g.subscript - 1))


def phi(p: Polynomial) -> Polynomial:
    """a_1, b_0, b_1 -> 0; a_j -> a_{j-1}, b_j -> b_{j-1} for j >= 2."""
    return substitute(p, _phi_image)


def _delta_image(g: Generator):
    if g.letter == "a":
        return Polynomial.generator(g) - 1
    if g.subscript == 0:
        return None  # b_0 is not shifted
    return Polynomial.generator(g) + 1


def delta(p: Polynomial) -> Polynomial:
    """a_i -> -1 + a_i and b_i -> 1 + b_i for i >= 1; b_0 fixed."""
    return substitute(p, _delta_image)


def shift_up(p: Polynomial, by: int = 1) -> Polynomial:
    """Raise every subscript by ``by`` (a_i -> a_{i+by}, b_i -> b_{i+by})."""
    return p.map_terms(lambda m: tuple(Generator(g.letter, g.subscript + by) for g in m))
