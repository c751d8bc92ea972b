"""Generalized binomial coefficients gb(n, p, k).

gb(n, p, k) = C(n, k) * 3F2(1-k, -p, p-n; 1-n, 1; 1)

Several closed sums for the same numbers are provided. ``gb_sum`` is the
canonical evaluator; the others exist so they can be checked against it.
Every identity checker returns a :class:`CheckResult` carrying both sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import as_int, binomial, exact_div, factorial

__all__ = [
    "CheckResult",
    "GBKey",
    "GBTable",
    "check_divisibility",
    "check_lemma",
    "check_recurrence",
    "check_sum_identity",
    "gb",
    "gb_alt",
    "gb_canonical",
    "gb_def",
    "gb_second",
    "gb_sum",
    "gb_symmetric",
    "gb_table",
    "special_value",
    "special_values",
    "FORMULAS",
]


@dataclass(frozen=True, order=True)
class GBKey:
    n: int
    p: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got n={self.n}")
        if not 0 <= self.p <= self.n:
            raise ValueError(f"p must lie in [0, n], got p={self.p}, n={self.n}")
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got k={self.k}")

    def __str__(self):
        return f"n={self.n},p={self.p},k={self.k}"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an exact identity check: both sides and the verdict."""

    name: str
    key: dict
    lhs: object
    rhs: object
    ok: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "ok", self.lhs == self.rhs)

    def __bool__(self):
        return self.ok

    def witness(self) -> str:
        key = ",".join(f"{k}={v}" for k, v in self.key.items())
        return f"{self.name}[{key}]: lhs={self.lhs} rhs={self.rhs}"


def _key(n, p, k) -> GBKey:
    return GBKey(n, p, k)


def _require_k_in_range(key: GBKey):
    if not 1 <= key.k <= key.n:
        raise ValueError(f"k must lie in [1, n] for this formula, got {key}")


# -- evaluators ------------------------------------------------------------


def gb_def(n: int, p: int, k: int) -> int:
    """Evaluate C(n,k) * 3F2(1-k, -p, p-n; 1-n, 1; 1) by its term ratio."""
    key = _key(n, p, k)
    _require_k_in_range(key)
    last = min(k - 1, p, n - p)
    term = Fraction(1)
    total = Fraction(1)
    for r in range(last):
        # (1-n+r) != 0 here since r < last <= n-1
        term *= Fraction((1 - k + r) * (-p + r) * (p - n + r), (1 - n + r) * (1 + r) * (1 + r))
        total += term
    return as_int(binomial(n, k) * total)


def gb_sum(n: int, p: int, k: int) -> int:
    """(n/k) * sum_r C(p,r) C(n-p,r) C(n-r-1,k-r-1); 0 when k > n."""
    key = _key(n, p, k)
    if k < 1:
        raise ValueError(f"gb_sum needs k >= 1, got {key}")
    if k > n:
        return 0
    inner = sum(
        binomial(p, r) * binomial(n - p, r) * binomial(n - r - 1, k - r - 1)
        for r in range(min(p, n - p, k - 1) + 1)
    )
    return exact_div(n * inner, k)


def gb_canonical(n: int, p: int, k: int) -> int:
    """Total evaluator over every valid key.

    k = 0 is a convention (1 for p in {0, n}, else 0), k > n gives 0.
    """
    _key(n, p, k)
    if k == 0:
        return 1 if p in (0, n) else 0
    if k > n:
        return 0
    return gb_sum(n, p, k)


gb = gb_canonical


def gb_alt(n: int, p: int, k: int) -> int:
    """Division-free alternating sum over 0 <= i <= n-k."""
    key = _key(n, p, k)
    _require_k_in_range(key)
    total = 0
    for i in range(n - k + 1):
        bracket = binomial(n - i, i) + binomial(n - i - 1, i - 1)
        term = binomial(n - i, k) * binomial(n - 2 * i, p - i) * bracket
        total += -term if i % 2 else term
    return total


def gb_second(n: int, p: int, k: int) -> int:
    """(n/p) * sum_{i<k} C(n-p+i, n-p) C(p, i+1) C(n-p, k-i-1)."""
    key = _key(n, p, k)
    _require_k_in_range(key)
    if p < 1:
        raise ValueError(f"gb_second needs p >= 1, got {key}")
    inner = sum(
        binomial(n - p + i, n - p) * binomial(p, i + 1) * binomial(n - p, k - i - 1)
        for i in range(k)
    )
    return exact_div(n * inner, p)


def _p_share(n: int, p: int, k: int) -> int:
    # (p/n) gb(n,p,k) as a pure integer sum over 0 <= i <= n-k
    return sum(
        binomial(k - 1 + i, n - p) * binomial(p, n - k - i) * binomial(n - p, i)
        for i in range(n - k + 1)
    )


def gb_symmetric(n: int, p: int, k: int) -> int:
    """gb = (p/n) gb(n,p,k) + ((n-p)/n) gb(n,n-p,k), both shares integral."""
    key = _key(n, p, k)
    _require_k_in_range(key)
    return _p_share(n, p, k) + _p_share(n, n - p, k)


FORMULAS = {
    "def": gb_def,
    "sum": gb_sum,
    "alt": gb_alt,
    "second": gb_second,
    "symmetric": gb_symmetric,
}


# -- closed forms ----------------------------------------------------------


def special_values(n: int, p: int, k: int) -> dict[str, int]:
    """Every closed form that applies at (n, p, k), keyed by pattern name.

    Only k >= 1 is covered; the k = 0 values are the convention in
    :func:`gb_canonical`.
    """
    _key(n, p, k)
    out: dict[str, int] = {}
    if not 1 <= k <= n:
        return out
    if k == n:
        out["k=n"] = binomial(n, p)
    if p == 0:
        out["p=0"] = binomial(n, k)
    if p == 1:
        out["p=1"] = k * binomial(n, k)
    if p == 2:
        out["p=2"] = k * binomial(n, k) + exact_div(n * (n - 3), 2) * binomial(n - 2, k - 2)
    if k == 1:
        out["k=1"] = n
    if k == 2:
        out["k=2"] = exact_div(n * (n - 1 + p * (n - p)), 2)
    if k == n - 1:
        out["k=n-1"] = n * (binomial(n - 1, p - 1) + binomial(n - 2, p))
    if k == n - 2:
        out["k=n-2"] = binomial(n, 2) * (
            binomial(n - 2, p) + binomial(n - 2, p - 2)
        ) + exact_div(n * (n - 3), 2) * binomial(n - 4, p - 2)
    return out


def special_value(n: int, p: int, k: int) -> int | None:
    """First closed form matching (n, p, k), or None."""
    values = special_values(n, p, k)
    return next(iter(values.values()), None)


# -- table -----------------------------------------------------------------


@dataclass(frozen=True)
class GBTable:
    """Rows indexed by p, columns by k, both in [0, n]."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, pk):
        p, k = pk
        if k > self.n:
            return 0
        return self.rows[p][k]


def gb_table(n: int) -> GBTable:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rows = tuple(tuple(gb_canonical(n, p, k) for k in range(n + 1)) for p in range(n + 1))
    for p in range(n + 1):
        assert rows[p] == rows[n - p], f"symmetry broken at n={n}, p={p}"
    return GBTable(n, rows)


# -- identities ------------------------------------------------------------


def check_recurrence(n: int, p: int, k: int) -> CheckResult:
    """(n-p+1) gb(n,p-1,k) - p gb(n,p,k) = n/(n-1) (n-2p+1) gb(n-1,p-1,k).

    Both sides are multiplied by (n-1) so the comparison stays in integers.
    """
    if n < 2 or not 1 <= p <= n or not 1 <= k <= n:
        raise ValueError(f"check_recurrence domain violated at n={n},p={p},k={k}")
    lhs = (n - p + 1) * gb(n, p - 1, k) - p * gb(n, p, k)
    rhs = n * (n - 2 * p + 1) * gb(n - 1, p - 1, k)
    return CheckResult("recurrence", {"n": n, "p": p, "k": k}, (n - 1) * lhs, rhs)


def _bracket(n, i):
    return binomial(n - i, i) + binomial(n - i - 1, i - 1)


def sum_identity_sides(n: int, p: int, k: int) -> tuple[int, Fraction, Fraction]:
    """The three expressions for gb(n,p,k) + gb(n,p-1,k)."""
    direct = gb(n, p, k) + gb(n, p - 1, k)
    expanded = Fraction(sum(
        (-1) ** i * binomial(n - i, k) * binomial(n - 2 * i + 1, p - i) * _bracket(n, i)
        for i in range(n - k + 1)
    ))
    correction = sum(
        (-1) ** i * binomial(n - i, k) * binomial(n - 2 * i + 1, p - i) * binomial(n - i - 1, i - 2)
        for i in range(2, n - k + 1)
    )
    lifted = Fraction((k + 1) * gb(n + 1, p, k + 1), n + 1) - correction
    return direct, expanded, lifted


def check_sum_identity(n: int, p: int, k: int) -> CheckResult:
    """gb(n,p,k) + gb(n,p-1,k) in its two alternative forms.

    ``lhs`` is the direct sum; ``rhs`` is the shifted form
    (k+1)/(n+1) gb(n+1,p,k+1) minus the correction sum. The intermediate
    alternating sum must agree too, otherwise ``rhs`` reports it instead.
    """
    if not 1 <= p <= n or not 1 <= k <= n:
        raise ValueError(f"check_sum_identity domain violated at n={n},p={p},k={k}")
    direct, expanded, lifted = sum_identity_sides(n, p, k)
    rhs = lifted if expanded == lifted else expanded
    return CheckResult("sum_identity", {"n": n, "p": p, "k": k}, Fraction(direct), rhs)


def check_lemma(r: int, s: int, k: int) -> CheckResult:
    """(r+1)! s!/(r+s+1) gb(r+s+1,s,k)
    = r! (s+1)!/(r+s+1) gb(r+s+1,s+1,k) + (r-s) r! s!/(r+s) gb(r+s,s,k)."""
    if r < 0 or s < 1 or not 1 <= k <= r + s + 1:
        raise ValueError(f"check_lemma domain violated at r={r},s={s},k={k}")
    m = r + s
    lhs = Fraction(factorial(r + 1) * factorial(s), m + 1) * gb(m + 1, s, k)
    rhs = Fraction(factorial(r) * factorial(s + 1), m + 1) * gb(m + 1, s + 1, k)
    rhs += Fraction((r - s) * factorial(r) * factorial(s), m) * gb(m, s, k)
    return CheckResult("lemma", {"r": r, "s": s, "k": k}, lhs, rhs)


def check_divisibility(n: int, p: int, k: int) -> CheckResult:
    """n | k gb(n,p,k) and, for p >= 1, n | p gb(n,p,k).

    ``lhs`` lists the remainders, ``rhs`` the zeros they must equal.
    """
    key = _key(n, p, k)
    _require_k_in_range(key)
    value = gb(n, p, k)
    remainders = [(k * value) % n]
    if p >= 1:
        remainders.append((p * value) % n)
    return CheckResult(
        "divisibility", {"n": n, "p": p, "k": k}, tuple(remainders), (0,) * len(remainders)
    )
