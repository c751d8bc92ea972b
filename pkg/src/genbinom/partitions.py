"""Partitions, partition-moment polynomials and their binomial-basis expansion.

The moment polynomial of a multi-index r at weight n is

    M_n^r(X) = sum_{|mu|=n} X**(l(mu)-1) / z_mu * sum_i prod_j (mu_i)_{r_j}

and it is expanded in the basis B_k(X) = C(X+n-1, n-k), k = 1..n.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .coefficients import CheckResult, gb
from .exact import factorial, raising_factorial
from .series import Poly

__all__ = [
    "BasisShapeError",
    "BinomialBasisExpansion",
    "ConjectureReport",
    "ConjectureResult",
    "MultiIndex",
    "Partition",
    "basis_poly",
    "check_conjecture",
    "check_thm5",
    "conjecture_coeffs",
    "enumerate_partitions",
    "moment_lhs",
    "partition_count",
    "to_binomial_basis",
    "z_weight",
]


class BasisShapeError(ValueError):
    """A polynomial does not fit the requested binomial basis."""


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(a < b for a, b in zip(parts, parts[1:])) or any(x < 1 for x in parts):
            raise ValueError(f"not a partition: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def multiplicity(self, i: int) -> int:
        return self.parts.count(i)


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield the partitions of n in reverse lexicographic order, (n) first."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    # a[:m] is the current partition
    a = [n]
    while True:
        yield Partition(tuple(a))
        # strip trailing ones, then decrement the last part > 1
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        largest = a.pop() - 1
        rest = ones + 1
        while rest > largest:
            a.append(largest)
            rest -= largest
        a.append(largest)
        if rest:
            a.append(rest)


def partition_count(n: int) -> int:
    """p(n) from Euler's pentagonal number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, j = 0, 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[m - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            j += 1
        p[m] = total
    return p[n]


def z_weight(mu: Partition) -> int:
    return math.prod(i**m * factorial(m) for i, m in mu.multiplicities().items())


@dataclass(frozen=True)
class MultiIndex:
    r: tuple[int, ...]

    def __post_init__(self):
        r = tuple(self.r)
        if not r or any(x < 1 for x in r):
            raise ValueError(f"multi-index needs at least one entry, all >= 1: {r}")
        object.__setattr__(self, "r", r)

    @classmethod
    def parse(cls, text: str) -> MultiIndex:
        return cls(tuple(int(t) for t in text.split(",") if t.strip()))

    @property
    def weight(self) -> int:
        return sum(self.r)

    @property
    def factorial_product(self) -> int:
        return math.prod(factorial(x) for x in self.r)


def _indices(r) -> tuple[int, ...]:
    return r.r if isinstance(r, MultiIndex) else tuple(r)


def moment_lhs(n: int, r) -> Poly:
    """The moment polynomial in X. ``r`` may contain zeros (used by r = 0 checks)."""
    r = _indices(r)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    by_length = [Fraction(0)] * n
    for mu in enumerate_partitions(n):
        moment = sum(math.prod(raising_factorial(part, rj) for rj in r) for part in mu.parts)
        by_length[mu.length - 1] += Fraction(moment, z_weight(mu))
    return Poly(by_length)


def basis_poly(n: int, k: int) -> Poly:
    """B_k(X) = C(X+n-1, n-k) as a polynomial of degree n-k."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    out = Poly([1])
    for j in range(n - k):
        out = out * Poly([n - 1 - j, 1])
    return out * Fraction(1, factorial(n - k))


@dataclass(frozen=True)
class BinomialBasisExpansion:
    n: int
    coeffs: tuple[Fraction, ...]  # coeffs[k-1] multiplies B_k

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k - 1]

    def reconstruct(self) -> Poly:
        out = Poly()
        for k, a in enumerate(self.coeffs, start=1):
            if a:
                out = out + basis_poly(self.n, k) * a
        return out


def to_binomial_basis(poly: Poly, n: int) -> BinomialBasisExpansion:
    """Coefficients a_1..a_n with sum a_k C(X+n-1, n-k) == poly.

    Peels off leading terms from the top degree down; B_k has exact
    degree n-k, so each step fixes one coefficient.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if poly.degree > n - 1:
        raise BasisShapeError(f"degree {poly.degree} exceeds n-1 = {n - 1}")
    rest = poly
    coeffs = [Fraction(0)] * n
    for k in range(1, n + 1):
        d = n - k
        b = basis_poly(n, k)
        a = rest[d] / b[d]
        coeffs[k - 1] = a
        if a:
            rest = rest - b * a
        assert rest.degree < d, "leading term survived elimination"
    assert rest == Poly(), "nonzero remainder after elimination"
    return BinomialBasisExpansion(n, tuple(coeffs))


def check_thm5(n: int, r: int, s: int) -> CheckResult:
    """Moment polynomial for (r, s) against r! s!/(r+s) sum_k gb(r+s,s,k) B_k."""
    if n < 1 or r < 0 or s < 1:
        raise ValueError(f"check_thm5 domain violated at n={n},r={r},s={s}")
    m = r + s
    scale = Fraction(factorial(r) * factorial(s), m)
    rhs = Poly()
    for k in range(1, min(n, m) + 1):
        rhs = rhs + basis_poly(n, k) * (scale * gb(m, s, k))
    return CheckResult("thm5", {"n": n, "r": r, "s": s}, moment_lhs(n, (r, s)), rhs)


@dataclass(frozen=True)
class ConjectureResult:
    n: int
    r: tuple[int, ...]
    coeffs: tuple[tuple[int, Fraction], ...]
    # basis coefficients for k > min(n, |r|) that failed to vanish
    overflow: tuple[tuple[int, Fraction], ...] = ()

    @property
    def shape_ok(self) -> bool:
        return not self.overflow

    @property
    def integral(self) -> bool:
        return all(c.denominator == 1 for _, c in self.coeffs)

    @property
    def positive(self) -> bool:
        return all(c > 0 for _, c in self.coeffs)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.coeffs)


def conjecture_coeffs(n: int, r) -> ConjectureResult:
    """c_k = a_k |r| / prod r_j! for k = 1..min(n, |r|)."""
    r = r if isinstance(r, MultiIndex) else MultiIndex(tuple(r))
    expansion = to_binomial_basis(moment_lhs(n, r), n)
    top = min(n, r.weight)
    scale = Fraction(r.weight, r.factorial_product)
    coeffs = tuple((k, expansion[k] * scale) for k in range(1, top + 1))
    overflow = tuple((k, expansion[k]) for k in range(top + 1, n + 1) if expansion[k])
    return ConjectureResult(n, r.r, coeffs, overflow)


@dataclass(frozen=True)
class ConjectureReport:
    r: tuple[int, ...]
    results: tuple[ConjectureResult, ...]
    stable: bool
    unstable: tuple[int, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.stable and all(
            res.integral and res.positive and res.shape_ok for res in self.results
        )

    @property
    def shape_ok(self) -> bool:
        return all(res.shape_ok for res in self.results)


def check_conjecture(r, n_values: Sequence[int]) -> ConjectureReport:
    """Integrality, positivity and n-stability of c_k across ``n_values``.

    Violations are recorded in the report, never raised.
    """
    r = r if isinstance(r, MultiIndex) else MultiIndex(tuple(r))
    results = tuple(conjecture_coeffs(n, r) for n in n_values)
    shared = min((len(res.coeffs) for res in results), default=0)
    unstable = tuple(
        k for k in range(1, shared + 1)
        if len({res.as_dict()[k] for res in results}) > 1
    )
    return ConjectureReport(r.r, results, not unstable, unstable)
