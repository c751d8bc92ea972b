"""Exact polynomials and the generating-function checks built on them.

No square root is ever formed: the radical closed forms are sums of n-th
powers of the two roots of a quadratic, so they are generated by the
quadratic's trace/product recurrence instead.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .coefficients import CheckResult, gb_table
from .exact import binomial

__all__ = [
    "BiPoly",
    "Poly",
    "check_closing_identity",
    "check_contiguity",
    "check_thm2",
    "check_thm4",
    "gb_bipoly",
    "gb_column_poly",
    "gf_theorem4",
    "hyp2f1_series",
    "hyp2f1_trunc",
    "lucas_bivariate",
    "lucas_univariate",
    "lucas_univariate_check",
]


class Poly:
    """Dense univariate polynomial with Fraction coefficients, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> Poly:
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> float | int:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else -Fraction(other))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Poly([1])
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def truncate(self, degree: int) -> Poly:
        """Drop every term above ``degree``."""
        return Poly(self.coeffs[: degree + 1])

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"


class BiPoly:
    """Sparse polynomial in x, y: ``{(deg_x, deg_y): Fraction}`` with no zeros stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {
            e: Fraction(c) for e, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def const(cls, c) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @classmethod
    def from_y_poly(cls, poly: Poly, x_degree: int = 0) -> BiPoly:
        """Embed a polynomial in y, times x**x_degree."""
        return cls({(x_degree, j): c for j, c in enumerate(poly.coeffs)})

    def coeff(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly.const(other)
        return self.terms == other.terms

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly.const(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            return BiPoly({e: c * other for e, c in self.terms.items()})
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def mirror_x(self, n: int) -> BiPoly:
        """Substitute x**i -> x**(n-i)."""
        return BiPoly({(n - i, j): c for (i, j), c in self.terms.items()})

    def __repr__(self):
        body = " + ".join(f"{c}*x^{i}*y^{j}" for (i, j), c in sorted(self.terms.items()))
        return f"BiPoly({body or '0'})"


_X, _Y = BiPoly.x(), BiPoly.y()
_ONE_X_ONE_Y = (1 + _X) * (1 + _Y)
_X_ONE_Y = _X * (1 + _Y)


def lucas_bivariate(n: int) -> BiPoly:
    """alpha**n + beta**n for the roots of t**2 - (1+x)(1+y) t + x(1+y).

    Equal to 2**-n [(S + R)**n + (S - R)**n] with S = (1+x)(1+y) and
    R = sqrt(S**2 - 4x(1+y)).
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    prev, cur = BiPoly.const(2), _ONE_X_ONE_Y
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, _ONE_X_ONE_Y * cur - _X_ONE_Y * prev
    return cur


def gb_bipoly(n: int) -> BiPoly:
    """sum over p, k of gb(n,p,k) x**p y**k, boundary k = 0 included."""
    table = gb_table(n)
    return BiPoly({
        (p, k): table.rows[p][k] for p in range(n + 1) for k in range(n + 1)
    })


def check_thm2(n: int) -> CheckResult:
    """The bivariate generating function equals ``lucas_bivariate(n)``."""
    return CheckResult("thm2", {"n": n}, gb_bipoly(n), lucas_bivariate(n))


def lucas_univariate(n: int) -> Poly:
    """u_n in z with u_0 = 2, u_1 = 1, u_n = u_{n-1} + z u_{n-2}."""
    z = Poly([0, 1])
    prev, cur = Poly([2]), Poly([1])
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, cur + z * prev
    return cur


def lucas_univariate_check(n: int) -> CheckResult:
    """sum_{0<=i<n} n/(n-i) C(n-i, i) z**i against the u_n recurrence."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    explicit = Poly(Fraction(n, n - i) * binomial(n - i, i) for i in range(n))
    return CheckResult("lucas_univariate", {"n": n}, explicit, lucas_univariate(n))


def hyp2f1_series(a: int, b: int, c: int, degree: int, scale=1) -> Poly:
    """2F1(a, b; c; scale*y) as a polynomial in y, cut at ``degree``.

    Built from the term ratio, so it stops by itself once (a)_j or (b)_j
    hits zero.
    """
    if c < 1:
        raise ValueError(f"c must be >= 1, got {c}")
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    coeffs = [Fraction(1)]
    term = Fraction(1)
    for j in range(degree):
        term *= Fraction((a + j) * (b + j), (c + j) * (1 + j)) * scale
        if term == 0:
            break
        coeffs.append(term)
    return Poly(coeffs)


def hyp2f1_trunc(a: int, b: int, c: int, degree: int) -> Poly:
    """2F1(a, b; c; -y) as a polynomial in y, cut at ``degree``."""
    return hyp2f1_series(a, b, c, degree, scale=-1)


def gf_theorem4(n: int, p: int) -> Poly:
    """n y (1+y)**p 2F1(p+1, p-n+1; 2; -y), cut at y-degree n.

    The cut only matters for p = n, where the series does not terminate.
    """
    if n < 1 or not 0 <= p <= n:
        raise ValueError(f"need 1 <= n and 0 <= p <= n, got n={n}, p={p}")
    f = hyp2f1_trunc(p + 1, p - n + 1, 2, n)
    return (Poly([0, n]) * Poly([1, 1]) ** p * f).truncate(n)


def gb_column_poly(n: int, p: int) -> Poly:
    """sum_{1<=k<=n} gb(n,p,k) y**k."""
    row = gb_table(n).rows[p]
    return Poly([0] + list(row[1:]))


def check_thm4(n: int) -> CheckResult:
    """Every row p of the table matches its univariate generating function."""
    table = gb_table(n)
    lhs = tuple(Poly([0] + list(table.rows[p][1:])) for p in range(n + 1))
    rhs = tuple(gf_theorem4(n, p) for p in range(n + 1))
    return CheckResult("thm4", {"n": n}, lhs, rhs)


def check_contiguity(a: int, b: int, c: int, degree: int) -> CheckResult:
    """(c-b-1) F(a,b;c;y) - a (1-y) F(a+1,b+1;c;y) = (c-a-b-1) F(a,b+1;c;y)
    coefficientwise through y**degree."""
    f = hyp2f1_series(a, b, c, degree)
    f_up = hyp2f1_series(a + 1, b + 1, c, degree)
    f_b = hyp2f1_series(a, b + 1, c, degree)
    lhs = ((c - b - 1) * f - a * Poly([1, -1]) * f_up).truncate(degree)
    rhs = ((c - a - b - 1) * f_b).truncate(degree)
    return CheckResult("contiguity", {"a": a, "b": b, "c": c, "degree": degree}, lhs, rhs)


def check_closing_identity(n: int) -> CheckResult:
    """lucas_bivariate(n) = 1 + x**n + sum_p x**p gf_theorem4(n, p)."""
    rhs = BiPoly.const(1) + BiPoly({(n, 0): 1})
    for p in range(n + 1):
        rhs = rhs + BiPoly.from_y_poly(gf_theorem4(n, p), x_degree=p)
    return CheckResult("closing_identity", {"n": n}, lucas_bivariate(n), rhs)
