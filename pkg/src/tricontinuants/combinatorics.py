"""Direct enumeration of the monomial and index-sequence families.

Nothing here calls a recurrence from :mod:`continuants`; the families are
generated from their index conditions alone, so the two modules can be
checked against each other.

Monomial families (words with strictly decreasing subscripts):

``A``
    first subscript exactly k; after ``a_i`` comes subscript i-2, after
    ``b_i`` comes i-1; the word ends in ``b_0`` or ``a_1``.
``R``
    first subscript <= k and congruent to k mod 3; after ``a_i`` the next
    subscript j has i != j+1 (mod 3), after ``b_i`` it has i != j (mod 3);
    a final ``a_i`` has i != 2 and a final ``b_i`` has i != 1 (mod 3).
``U``
    the members of ``R`` using only a-generators.
``V``
    the members of ``R`` using only b-generators with subscripts >= 2.

Index-sequence families (tuples of ints):

``C``
    k >= x_1, consecutive gaps >= 2, last entry 1.
``D``
    k >= x_1 > ... > x_l >= 2, x_1 = k (mod 2), parities alternate, x_l even.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from functools import lru_cache
from types import MappingProxyType

from .continuants import sigma, rho, chi1
from .monoid_ring import EPSILON, Generator, Monomial, Polynomial, a, b

__all__ = [
    "MONOMIAL_FAMILIES",
    "SEQUENCE_FAMILIES",
    "enumerate_family",
    "enumerate_seq_family",
    "family_length_sums",
    "seq_family_length_sums",
    "g",
    "g_direct",
    "sign",
    "signed_family",
    "combinatorial_A",
    "combinatorial_R",
    "combinatorial_P",
    "combinatorial_Q",
    "combinatorial_C",
    "combinatorial_D",
    "combinatorial_G",
    "combinatorial_H",
    "em_C",
    "em_G",
    "phi_word",
]

MONOMIAL_FAMILIES = ("A", "R", "U", "V")
SEQUENCE_FAMILIES = ("C", "D")

# A node is (letter, subscript).
Node = tuple


def _gen(node: Node) -> Generator:
    letter, i = node
    return a(i) if letter == "a" else b(i)


def _nodes_at(i: int, letters: str) -> list[Node]:
    return [(x, i) for x in letters if not (x == "a" and i == 0)]


class _Graph:
    """Start nodes, successor lists and terminal test for one family at one k."""

    def __init__(self, starts: list[Node], succ: Callable[[Node], list[Node]],
                 can_end: Callable[[Node], bool]):
        self.starts = starts
        self.succ = succ
        self.can_end = can_end


def _graph(name: str, k: int) -> _Graph:
    if name == "A":
        def succ(n):
            letter, i = n
            j = i - 2 if letter == "a" else i - 1
            return _nodes_at(j, "ab") if j >= 0 else []

        return _Graph(_nodes_at(k, "ab") if k >= 0 else [], succ,
                      lambda n: n == ("b", 0) or n == ("a", 1))

    if name == "R":
        letters, low = "ab", 0

        def ok_step(letter, i, j):
            return (i - j - 1) % 3 != 0 if letter == "a" else (i - j) % 3 != 0

        def can_end(n):
            letter, i = n
            return i % 3 != 2 if letter == "a" else i % 3 != 1
    elif name == "U":
        letters, low = "a", 1

        def ok_step(letter, i, j):
            return (i - j - 1) % 3 != 0

        def can_end(n):
            return n[1] % 3 != 2
    elif name == "V":
        letters, low = "b", 2

        def ok_step(letter, i, j):
            return (i - j) % 3 != 0

        def can_end(n):
            return n[1] % 3 != 1
    else:
        raise ValueError(f"unknown monomial family {name!r}; known: {MONOMIAL_FAMILIES}")

    def succ(n):
        letter, i = n
        out = []
        for j in range(i - 1, low - 1, -1):
            if ok_step(letter, i, j):
                out.extend(_nodes_at(j, letters))
        return out

    starts = []
    for i in range(k, low - 1, -3):
        starts.extend(_nodes_at(i, letters))
    return _Graph(starts, succ, can_end)


def _paths(graph: _Graph) -> Iterable[list[Node]]:
    # depth-first; every emitted path is a distinct word since nodes are distinct
    stack: list[tuple[Node, tuple]] = [(s, ()) for s in reversed(graph.starts)]
    while stack:
        node, prefix = stack.pop()
        path = prefix + (node,)
        if graph.can_end(node):
            yield path
        for nxt in reversed(graph.succ(node)):
            stack.append((nxt, path))


@lru_cache(maxsize=None)
def enumerate_family(name: str, k: int) -> frozenset:
    """All words of family ``name`` (one of A, R, U, V) at level ``k``.

    Negative ``k`` gives the empty family.
    """
    if name not in MONOMIAL_FAMILIES:
        raise ValueError(f"unknown monomial family {name!r}; known: {MONOMIAL_FAMILIES}")
    if k < 0:
        return frozenset()
    return frozenset(tuple(_gen(n) for n in p) for p in _paths(_graph(name, k)))


def _seq_graph(name: str, k: int) -> _Graph:
    if name == "C":
        return _Graph(list(range(k, 0, -1)), lambda i: list(range(i - 2, 0, -1)),
                      lambda i: i == 1)
    if name == "D":
        starts = [i for i in range(k, 1, -1) if (i - k) % 2 == 0]
        return _Graph(starts, lambda i: [j for j in range(i - 1, 1, -1) if (i - j) % 2],
                      lambda i: i % 2 == 0)
    raise ValueError(f"unknown sequence family {name!r}; known: {SEQUENCE_FAMILIES}")


@lru_cache(maxsize=None)
def enumerate_seq_family(name: str, k: int) -> frozenset:
    """All index sequences of family C or D at level ``k``."""
    if name not in SEQUENCE_FAMILIES:
        raise ValueError(f"unknown sequence family {name!r}; known: {SEQUENCE_FAMILIES}")
    if k < 0:
        return frozenset()
    return frozenset(_paths(_seq_graph(name, k)))


# ---- sign function ---------------------------------------------------------


def _checked_index(k: int, m) -> tuple[int, ...]:
    lam = tuple(x.subscript if isinstance(x, Generator) else int(x) for x in m)
    if any(x < 0 or x > k for x in lam):
        raise ValueError(f"index {list(lam)} has entries outside [0, {k}]")
    if any(x <= y for x, y in zip(lam, lam[1:])):
        raise ValueError(f"index {list(lam)} is not strictly decreasing")
    return lam


def g(k: int, m) -> int:
    """Number of disjoint adjacent triples fitting in the omitted subscripts.

    Closed form: the gaps k+1 > x_1 > ... > x_l > -2 contribute
    floor((gap - 1) / 3) each.  ``m`` is a word or an index sequence.
    """
    lam = _checked_index(k, m)
    bounds = (k + 1,) + lam + (-2,)
    return sum((hi - lo - 1) // 3 for hi, lo in zip(bounds, bounds[1:]))


def g_direct(k: int, m) -> int:
    """Same quantity as :func:`g`, computed from the omitted set itself.

    Walks {-1, ..., k} upward, packing a triple whenever three consecutive
    omitted integers have accumulated in the current run.
    """
    used = set(_checked_index(k, m))
    count = run = 0
    for x in range(-1, k + 1):
        if x in used:
            run = 0
            continue
        run += 1
        if run == 3:
            count += 1
            run = 0
    return count


def sign(k: int, m) -> int:
    return -1 if g(k, m) % 2 else 1


# ---- weighted sums without materializing the family --------------------------


def family_length_sums(name: str, k: int, weight: Callable[[Generator], object] | None = None,
                       signed: bool = True) -> dict[int, object]:
    """Map length l -> sum over words of length l in the family of sign * prod(weight).

    ``sign`` is (-1)^g_k(m) when ``signed``, else 1.  Uses the fact that g
    is a sum of per-gap terms, so the total is a path sum over the same
    successor graph :func:`enumerate_family` walks.  Cost is polynomial in k.
    """
    if name not in MONOMIAL_FAMILIES:
        raise ValueError(f"unknown monomial family {name!r}; known: {MONOMIAL_FAMILIES}")
    if k < 0:
        return {}
    graph = _graph(name, k)
    w = weight or (lambda _g: 1)

    def s(n: int) -> int:
        return -1 if signed and n % 2 else 1

    @lru_cache(maxsize=None)
    def tail(node: Node) -> dict[int, object]:
        # sums over completions starting at node (node included)
        i = node[1]
        acc: dict[int, object] = {}
        if graph.can_end(node):
            acc[1] = s((i + 1) // 3)
        for nxt in graph.succ(node):
            gap_sign = s((i - nxt[1] - 1) // 3)
            for length, val in tail(nxt).items():
                acc[length + 1] = acc.get(length + 1, 0) + gap_sign * val
        wn = w(_gen(node))
        return {length: wn * val for length, val in acc.items()}

    total: dict[int, object] = {}
    for start in graph.starts:
        lead = s((k - start[1]) // 3)
        for length, val in tail(start).items():
            total[length] = total.get(length, 0) + lead * val
    return {length: v for length, v in sorted(total.items()) if v}


def seq_family_length_sums(name: str, k: int,
                           weight: Callable[[int], object] | None = None) -> dict[int, object]:
    """Map length l -> sum over sequences of length l in C_k or D_k of prod(weight(x))."""
    if name not in SEQUENCE_FAMILIES:
        raise ValueError(f"unknown sequence family {name!r}; known: {SEQUENCE_FAMILIES}")
    if k < 0:
        return {}
    graph = _seq_graph(name, k)
    w = weight or (lambda _x: 1)

    @lru_cache(maxsize=None)
    def tail(i: int) -> dict[int, object]:
        acc: dict[int, object] = {1: 1} if graph.can_end(i) else {}
        for j in graph.succ(i):
            for length, val in tail(j).items():
                acc[length + 1] = acc.get(length + 1, 0) + val
        wi = w(i)
        return {length: wi * val for length, val in acc.items()}

    total: dict[int, object] = {}
    for start in graph.starts:
        for length, val in tail(start).items():
            total[length] = total.get(length, 0) + val
    return {length: v for length, v in sorted(total.items()) if v}


# ---- closed forms ------------------------------------------------------------


def _signed_sum(k: int, members: Iterable[Monomial]) -> dict[Monomial, int]:
    return {m: sign(k, m) for m in members}


@lru_cache(maxsize=None)
def signed_family(name: str, k: int) -> MappingProxyType:
    """Read-only map word -> (-1)^g_k(word) over family ``name`` at ``k``."""
    return MappingProxyType(_signed_sum(k, enumerate_family(name, k)))


def _merge(constant: int, *parts: dict[Monomial, int], negate: bool = False) -> Polynomial:
    acc: dict[Monomial, int] = {}
    if constant:
        acc[EPSILON] = constant
    for part in parts:
        for m, c in part.items():
            acc[m] = acc.get(m, 0) + (-c if negate else c)
    return Polynomial({m: c for m, c in acc.items() if c})


def phi_word(m: Monomial) -> Monomial | None:
    """Image of a word under a_1, b_0, b_1 -> 0 and a_j, b_j -> a_{j-1}, b_{j-1}."""
    if any(x.subscript <= 1 for x in m):
        return None
    return tuple(Generator(x.letter, x.subscript - 1) for x in m)


def _phi_signed(k: int, family: str) -> dict[Monomial, int]:
    out: dict[Monomial, int] = {}
    for m, s in signed_family(family, k).items():
        if m[-1].subscript > 1:
            out[phi_word(m)] = s
    return out


def combinatorial_A(k: int) -> Polynomial:
    """Sum of the words in A_k, each with coefficient 1."""
    return Polynomial.sum_of(enumerate_family("A", k))


def combinatorial_R(k: int) -> Polynomial:
    """rho(k) + sum over R_k of (-1)^g_k(m) m."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return _merge(rho(k), signed_family("R", k))


def _numerator_form(family: str, k: int) -> Polynomial:
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return _merge(-sigma(k),
                  signed_family(family, k - 1),
                  signed_family(family, k))


def _denominator_form(family: str, k: int) -> Polynomial:
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    body = _merge(0, _phi_signed(k, family), _phi_signed(k + 1, family), negate=True)
    return body + sigma(k + 1)


def combinatorial_P(k: int) -> Polynomial:
    return _numerator_form("R", k)


def combinatorial_Q(k: int) -> Polynomial:
    return _denominator_form("R", k)


def combinatorial_C(k: int) -> Polynomial:
    return _numerator_form("U", k)


def combinatorial_D(k: int) -> Polynomial:
    return _denominator_form("U", k)


def combinatorial_G(k: int) -> Polynomial:
    return _numerator_form("V", k)


def combinatorial_H(k: int) -> Polynomial:
    return _denominator_form("V", k)


def _binomial_product(seq: tuple[int, ...], letter: str, shift: int) -> Polynomial:
    result = Polynomial.constant_poly(1)
    for x in seq:
        gen = a(x) if letter == "a" else b(x)
        result = result * (Polynomial.generator(gen) + shift)
    return result


def em_C(k: int) -> Polynomial:
    """Sum over C_k of the ordered products (-1 + a_x1)(-1 + a_x2)...(-1 + a_xl)."""
    total = Polynomial.zero()
    for seq in sorted(enumerate_seq_family("C", k)):
        total = total + _binomial_product(seq, "a", -1)
    return total


def em_G(k: int) -> Polynomial:
    """-chi1(k) + sum over D_k of (-1)^((k-l+1)/2) (1 + b_x1)...(1 + b_xl)."""
    total = Polynomial.constant_poly(-chi1(k))
    for seq in sorted(enumerate_seq_family("D", k)):
        twice = k - len(seq) + 1
        assert twice % 2 == 0, (k, seq)
        term = _binomial_product(seq, "b", 1)
        total = total + (-term if (twice // 2) % 2 else term)
    return total
