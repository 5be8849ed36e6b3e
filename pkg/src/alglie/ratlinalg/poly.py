"""Univariate polynomials over the rationals and the matrix polynomials built on them."""

from __future__ import annotations

from math import gcd, isqrt, lcm
from typing import Sequence

from ..errors import SplitFailure
from .matrix import _ZERO, Q, QMatrix, Rational, rational_str


class QPoly:
    """Polynomial with rational coefficients, stored lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        c = [Q(v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def _trusted(cls, coeffs: list) -> "QPoly":
        # coeffs are already Rationals; only trailing zeros are stripped
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def T(cls) -> "QPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "QPoly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots) -> "QPoly":
        """Monic polynomial ``prod (T - r)`` over ``roots`` given as (root, mult) pairs or bare roots."""
        p = cls((1,))
        for r in roots:
            root, mult = r if isinstance(r, tuple) else (r, 1)
            for _ in range(mult):
                p = p * cls((-Q(root), 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Rational:
        return self.coeffs[-1] if self.coeffs else Q(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def monic(self) -> "QPoly":
        if not self.coeffs:
            return self
        inv = 1 / self.coeffs[-1]
        return QPoly(c * inv for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (_ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (_ZERO,) * (n - len(other.coeffs))
        return QPoly._trusted([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly._trusted([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly._trusted(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = QPoly((1,))
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = 1 / other.lead
        quot = [_ZERO] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv
            if c:
                quot[k - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return QPoly._trusted(quot), QPoly._trusted(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> "QPoly":
        return QPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x):
        """Evaluate at a rational, another polynomial, or a square matrix (Horner)."""
        if isinstance(x, QMatrix):
            n = x.dim
            acc = QMatrix.zero(n)
            eye = QMatrix.identity(n)
            for c in reversed(self.coeffs):
                acc = acc @ x + eye * c
            return acc
        if isinstance(x, QPoly):
            acc = QPoly()
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = Q(x)
        acc = Q(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == _as_poly(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
            if k and c == 1:
                s = mono
            elif k and c == -1:
                s = "-" + mono
            else:
                s = rational_str(c) + ("*" + mono if mono else "")
            terms.append(s)
        return " + ".join(terms).replace("+ -", "- ")


def _as_poly(x) -> QPoly:
    return x if isinstance(x, QPoly) else QPoly._trusted([Q(x)])


def poly_gcd(p: QPoly, q: QPoly) -> QPoly:
    """Monic greatest common divisor (zero only when both inputs are zero)."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(p: QPoly, q: QPoly) -> tuple[QPoly, QPoly, QPoly]:
    """Return ``(g, s, t)`` with ``s*p + t*q == g`` and ``g`` monic."""
    r0, r1 = p, q
    s0, s1 = QPoly((1,)), QPoly()
    t0, t1 = QPoly(), QPoly((1,))
    while not r1.is_zero():
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = 1 / r0.lead
    return r0 * inv, s0 * inv, t0 * inv


def squarefree_part(p: QPoly) -> QPoly:
    """Monic ``p / gcd(p, p')``: the product of the distinct irreducible factors."""
    if p.is_zero():
        raise ValueError("square-free part of the zero polynomial is undefined")
    return (p // poly_gcd(p, p.derivative())).monic()


def charpoly(a: QMatrix) -> QPoly:
    """Monic characteristic polynomial ``det(T I - a)`` by Faddeev-LeVerrier."""
    n = a.dim
    coeffs = [Q(0)] * (n + 1)
    coeffs[n] = Q(1)
    eye = QMatrix.identity(n)
    am = QMatrix.zero(n)  # a @ m_{k-1}
    for k in range(1, n + 1):
        am = a @ (am + eye * coeffs[n - k + 1])
        coeffs[n - k] = -am.trace() / k
    return QPoly(coeffs)


def minpoly(a: QMatrix) -> QPoly:
    """Monic minimal polynomial from the first dependency among I, a, a^2, ...

    Powers are reduced incrementally against the earlier ones while
    tracking each reduced vector as a combination of powers.
    """
    n = a.dim
    reduced: list[tuple[int, list, list]] = []  # (pivot, vector, combination of powers)
    current = QMatrix.identity(n)
    for k in range(n + 1):
        if k:
            current = current @ a
        vec = list(current.flat())
        comb = [_ZERO] * (n + 1)
        comb[k] = Rational(1)
        for p, rvec, rcomb in reduced:
            c = vec[p]
            if c:
                vec = [x - c * y for x, y in zip(vec, rvec)]
                comb = [x - c * y for x, y in zip(comb, rcomb)]
        pivot = next((i for i, x in enumerate(vec) if x), None)
        if pivot is None:
            return QPoly._trusted(comb[:k + 1])
        inv = 1 / vec[pivot]
        vec = [x * inv for x in vec]
        comb = [x * inv for x in comb]
        # keep earlier vectors reduced at this pivot so later reductions stay valid
        for idx, (p, rvec, rcomb) in enumerate(reduced):
            c = rvec[pivot]
            if c:
                reduced[idx] = (p, [x - c * y for x, y in zip(rvec, vec)], [x - c * y for x, y in zip(rcomb, comb)])
        reduced.append((pivot, vec, comb))
    raise AssertionError("Cayley-Hamilton violated")  # pragma: no cover


def _divisors(m: int) -> list[int]:
    m = abs(m)
    small, large = [], []
    for d in range(1, isqrt(m) + 1):
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
    return small + large[::-1]


def rational_roots(p: QPoly) -> list[tuple[Rational, int]]:
    """All rational roots with multiplicity, sorted by value.

    Raises :class:`SplitFailure` when the roots found do not account for
    the full degree.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no well-defined roots")
    roots = []
    rest = p.monic()
    zero_mult = 0
    while rest.coeffs and not rest.coeffs[0]:
        rest = QPoly(rest.coeffs[1:])
        zero_mult += 1
    if zero_mult:
        roots.append((Q(0), zero_mult))
    if rest.degree > 0:
        sqf = squarefree_part(rest)
        den = lcm(*(c.denominator for c in sqf.coeffs))
        ints = [int(c * den) for c in sqf.coeffs]
        g = gcd(*ints)
        ints = [v // g for v in ints]
        candidates = set()
        for num in _divisors(ints[0]):
            for d in _divisors(ints[-1]):
                candidates.add(Q(num, d))
                candidates.add(Q(-num, d))
        for r in sorted(candidates):
            if sqf(r) == 0:
                lin = QPoly((-r, 1))
                mult = 0
                while True:
                    quo, rem = divmod(rest, lin)
                    if not rem.is_zero():
                        break
                    rest = quo
                    mult += 1
                roots.append((r, mult))
    if rest.degree > 0:
        raise SplitFailure(rest)
    return sorted(roots)
