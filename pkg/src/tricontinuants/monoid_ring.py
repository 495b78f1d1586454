"""Integer polynomials in the noncommuting generators a_1, a_2, ... and b_0, b_1, ...

A monomial is a word, stored as a tuple of :class:`Generator` values; the
empty tuple is the identity word.  Multiplication is concatenation, so
``a1 * b0`` and ``b0 * a1`` are different monomials.

Polynomials are immutable maps from words to nonzero Python ints.
"""

from __future__ import annotations

import json
import re
from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Union

__all__ = [
    "Generator",
    "Monomial",
    "EPSILON",
    "IndexVectors",
    "Polynomial",
    "a",
    "b",
    "add",
    "mul",
    "neg",
    "left_mul_gen",
    "substitute",
    "evaluate",
    "indices",
    "constant_of",
    "parse_generator",
    "parse_word",
    "word_to_str",
    "sort_key",
]


class _GeneratorFields(NamedTuple):
    letter: str
    subscript: int


class Generator(_GeneratorFields):
    """A single indeterminate ``a_u`` (u >= 1) or ``b_u`` (u >= 0)."""

    __slots__ = ()

    def __new__(cls, letter: str, subscript: int) -> "Generator":
        if letter not in ("a", "b"):
            raise ValueError(f"generator letter must be 'a' or 'b', got {letter!r}")
        if isinstance(subscript, bool) or not isinstance(subscript, int):
            raise TypeError(f"subscript must be an int, got {subscript!r}")
        if subscript < 0:
            raise ValueError(f"subscript must be nonnegative, got {subscript}")
        if letter == "a" and subscript == 0:
            # a_0 only exists as the convention a_0 = 0
            raise ValueError("a0 is not a generator")
        return super().__new__(cls, letter, subscript)

    def __str__(self) -> str:
        return f"{self.letter}{self.subscript}"

    def __repr__(self) -> str:
        return f"{self.letter}({self.subscript})"


Monomial = tuple  # tuple[Generator, ...]
EPSILON: Monomial = ()

Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def a(u: int) -> Generator:
    return Generator("a", u)


@lru_cache(maxsize=None)
def b(u: int) -> Generator:
    return Generator("b", u)


_GEN_RE = re.compile(r"^([ab])_?(\d+)$")


def parse_generator(token: str) -> Generator:
    """Parse ``"a3"`` / ``"b_0"`` into a generator."""
    match = _GEN_RE.match(token.strip())
    if match is None:
        raise ValueError(f"not a generator: {token!r}")
    letter, sub = match.groups()
    return a(int(sub)) if letter == "a" else b(int(sub))


def parse_word(text: str | Iterable[str]) -> Monomial:
    """Parse ``"b2 a1"`` (or ``["b2", "a1"]``) into a word; ``""`` is the identity."""
    tokens = text.split() if isinstance(text, str) else list(text)
    return tuple(parse_generator(t) for t in tokens)


def word_to_str(m: Monomial) -> str:
    return " ".join(str(g) for g in m)


def sort_key(m: Monomial) -> tuple:
    """Canonical order: index vector ascending lexicographically, a before b.

    The empty word sorts first, so constants lead in printed output.
    """
    return (tuple(g.subscript for g in m), tuple(g.letter for g in m))


@dataclass(frozen=True)
class IndexVectors:
    lam: tuple[int, ...]
    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.lam)


def indices(m: Monomial) -> IndexVectors:
    lam = tuple(g.subscript for g in m)
    alpha = tuple(g.subscript if g.letter == "a" else 0 for g in m)
    beta = tuple(g.subscript if g.letter == "b" else 0 for g in m)
    return IndexVectors(lam, alpha, beta)


class Polynomial:
    """An element of the integer monoid ring over the free monoid on a_i, b_j.

    >>> p = Polynomial.parse("-1 + a1 + b1 b0")
    >>> p.constant
    -1
    >>> str(p * Polynomial.generator(b(0)))
    '-b0 + a1 b0 + b1 b0 b0'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        cleaned: dict[Monomial, int] = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if not all(isinstance(g, Generator) for g in m):
                raise TypeError(f"monomial must be a tuple of Generators: {m!r}")
            c = int(c)
            if c:
                cleaned[m] = cleaned.get(m, 0) + c
                if not cleaned[m]:
                    del cleaned[m]
        self._terms = cleaned
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, terms: dict[Monomial, int]) -> "Polynomial":
        # caller guarantees: no zero coefficients, dict not shared
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._wrap({})

    @classmethod
    def constant_poly(cls, c: int) -> "Polynomial":
        return cls._wrap({EPSILON: int(c)} if c else {})

    @classmethod
    def monomial(cls, m: Monomial, c: int = 1) -> "Polynomial":
        return cls({tuple(m): c})

    @classmethod
    def generator(cls, g: Generator) -> "Polynomial":
        return cls._wrap({(g,): 1})

    @classmethod
    def sum_of(cls, monomials: Iterable[Monomial], signs: Iterable[int] | None = None) -> "Polynomial":
        """Sum of words with the given (default unit) coefficients."""
        acc: dict[Monomial, int] = {}
        if signs is None:
            for m in monomials:
                acc[m] = acc.get(m, 0) + 1
        else:
            for m, s in zip(monomials, signs):
                acc[m] = acc.get(m, 0) + s
        return cls._wrap({m: c for m, c in acc.items() if c})

    # ---- inspection -------------------------------------------------------

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, m: Monomial) -> bool:
        return m in self._terms

    def terms(self) -> Iterator[tuple[Monomial, int]]:
        """(word, coefficient) pairs in canonical order."""
        for m in sorted(self._terms, key=sort_key):
            yield m, self._terms[m]

    def items(self):
        """Unordered view of the term map."""
        return self._terms.items()

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(tuple(m), 0)

    @property
    def constant(self) -> int:
        return self._terms.get(EPSILON, 0)

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def generators(self) -> frozenset:
        return frozenset(g for m in self._terms for g in m)

    # ---- arithmetic -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({EPSILON: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "Polynomial":
        return Polynomial._wrap({m: -c for m, c in self._terms.items()})

    def __pos__(self) -> "Polynomial":
        return self

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial._wrap(_combine(self._terms, other._terms, 1))

    __radd__ = __add__

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial._wrap(_combine(self._terms, other._terms, -1))

    def __rsub__(self, other: int) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int) and not isinstance(other, bool):
            if not other:
                return Polynomial.zero()
            return Polynomial._wrap({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return Polynomial._wrap(_product(self._terms, other._terms))

    def __rmul__(self, other: int) -> "Polynomial":
        if isinstance(other, int) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = Polynomial.constant_poly(1)
        for _ in range(n):
            result = result * self
        return result

    def left_mul(self, g: Generator) -> "Polynomial":
        """``g * self`` without building a polynomial for ``g``."""
        return Polynomial._wrap({(g,) + m: c for m, c in self._terms.items()})

    def map_terms(self, fn: Callable[[Monomial], Monomial | None]) -> "Polynomial":
        """Apply a word-to-word map (``None`` kills a term) and collect."""
        acc: dict[Monomial, int] = {}
        for m, c in self._terms.items():
            m2 = fn(m)
            if m2 is not None:
                acc[m2] = acc.get(m2, 0) + c
        return Polynomial._wrap({m: c for m, c in acc.items() if c})

    def substitute(self, images) -> "Polynomial":
        return substitute(self, images)

    def evaluate(self, assignment) -> Fraction:
        return evaluate(self, assignment)

    # ---- serialization ----------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for i, (m, c) in enumerate(self.terms()):
            mag = abs(c)
            if not m:
                body = str(mag)
            elif mag == 1:
                body = word_to_str(m)
            else:
                body = f"{mag} {word_to_str(m)}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def to_dict(self) -> dict:
        return {
            "terms": [
                {"coef": str(c), "word": [str(g) for g in m]} for m, c in self.terms()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> "Polynomial":
        acc: dict[Monomial, int] = {}
        for term in data["terms"]:
            m = parse_word(term["word"])
            acc[m] = acc.get(m, 0) + int(term["coef"])
        return cls(acc)

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        return cls.from_dict(json.loads(text))

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Inverse of :meth:`to_text`; also accepts ``a_3`` and the minus sign ``−``."""
        text = text.replace("−", "-")
        tokens = re.findall(r"[+-]|[^\s+-]+", text)
        acc: dict[Monomial, int] = {}
        sign, coef, word = 1, None, []
        pending_sign = False

        def flush():
            m = tuple(word)
            acc[m] = acc.get(m, 0) + sign * (1 if coef is None else coef)

        for tok in tokens:
            if tok in ("+", "-"):
                if coef is not None or word:
                    flush()
                elif pending_sign:
                    raise ValueError(f"two signs in a row in {text!r}")
                sign = -1 if tok == "-" else 1
                coef, word, pending_sign = None, [], True
            elif tok.isdigit():
                if coef is not None or word:
                    raise ValueError(f"misplaced integer {tok!r} in {text!r}")
                coef = int(tok)
            else:
                word.append(parse_generator(tok))
        if coef is not None or word:
            flush()
        elif pending_sign:
            raise ValueError(f"dangling sign in {text!r}")
        return cls(acc)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"


def _coerce(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Polynomial.constant_poly(x)
    return NotImplemented


def _combine(p: dict, q: dict, sign: int) -> dict:
    out = dict(p)
    for m, c in q.items():
        v = out.get(m, 0) + sign * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _product(p: dict, q: dict) -> dict:
    out: dict[Monomial, int] = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = m1 + m2
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


# ---- functional surface ---------------------------------------------------


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def neg(p: Polynomial) -> Polynomial:
    return -p


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def left_mul_gen(g: Generator, p: Polynomial) -> Polynomial:
    return p.left_mul(g)


def constant_of(p: Polynomial) -> int:
    return p.constant


def _image_lookup(images) -> Callable[[Generator], Polynomial]:
    if callable(images) and not isinstance(images, Mapping):
        fn = images
    else:
        mapping = images

        def fn(g):
            return mapping.get(g)

    def lookup(g: Generator) -> Polynomial:
        img = fn(g)
        if img is None:
            return Polynomial.generator(g)
        return _coerce(img)

    return lookup


def substitute(p: Polynomial, images) -> Polynomial:
    """Apply the ring homomorphism determined by generator images.

    ``images`` is a mapping or a callable from :class:`Generator` to a
    polynomial (or int).  Generators it does not cover (mapping miss or
    callable returning ``None``) are left fixed.  Each word is replaced by
    the ordered product of the images of its letters.
    """
    lookup = _image_lookup(images)
    gen_img: dict[Generator, dict] = {}
    suffix_img: dict[Monomial, dict] = {EPSILON: {EPSILON: 1}}

    def image_of(w: Monomial) -> dict:
        hit = suffix_img.get(w)
        if hit is not None:
            return hit
        g = w[0]
        gi = gen_img.get(g)
        if gi is None:
            gi = gen_img[g] = lookup(g)._terms
        rest = image_of(w[1:])
        res = _product(gi, rest) if gi and rest else {}
        suffix_img[w] = res
        return res

    out: dict[Monomial, int] = {}
    for m, c in p._terms.items():
        for m2, c2 in image_of(m).items():
            out[m2] = out.get(m2, 0) + c * c2
    return Polynomial._wrap({m: c for m, c in out.items() if c})


def evaluate(p: Polynomial, assignment) -> Fraction:
    """Exact value of ``p`` once every generator is given a rational value.

    ``assignment`` is a mapping or callable from generators to ints or
    Fractions.  A generator with no value raises ``KeyError``.
    """
    if callable(assignment) and not isinstance(assignment, Mapping):
        fn = assignment
    else:
        fn = assignment.__getitem__
    values: dict[Generator, Fraction] = {}
    # integer numerators grouped by denominator; Fractions only at the end
    by_den: dict[int, int] = {}
    for m, c in p._terms.items():
        num, den = c, 1
        for g in m:
            v = values.get(g)
            if v is None:
                v = fn(g)
                if v is None:
                    raise KeyError(g)
                v = values[g] = Fraction(v)
            num *= v.numerator
            if not num:
                break
            den *= v.denominator
        if num:
            by_den[den] = by_den.get(den, 0) + num
    return sum((Fraction(n, d) for d, n in sorted(by_den.items())), Fraction(0))
