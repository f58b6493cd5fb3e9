"""Closed-form binomial identities for the triangle's counts.

Everything here is exact integer arithmetic.  The closed forms give a
second, independent route to values the count tables produce by
recurrence; :func:`decompose_catalan` cross-checks the two routes against
each other on every call.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dynamics import DEFAULT_POSITION_CAP, build_table, catalan
from .errors import DomainError, DyckError, ResourceLimit


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; zero when k < 0 or k > n.

    Computed by the multiplicative running product with exact division at
    each step, so no factorials ever materialize.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for step in range(1, k + 1):
        result = result * (n - step + 1) // step
    return result


def convolution(n: int, j: int) -> int:
    """Entry (n, j) of the Catalan convolution matrix.

    Equals the path-prefix count at position 2n - j, height j; the matrix
    is exactly the nj view of the count triangle.
    """
    if n < 0 or j < 0:
        raise DomainError(f"convolution needs n, j >= 0, got ({n}, {j})")
    if j > n:
        raise DomainError(f"convolution needs j <= n, got ({n}, {j})")
    return binomial(2 * n - j, n - j) - binomial(2 * n - j, n - j - 1)


def square_term(i: int, k: int) -> int:
    """Term k of the squares decomposition at column i.

    The general closed form is binomial(i, k) - binomial(i, k - 1); it
    equals the count at (i, i - 2k).  Outside 0 <= 2k <= i the difference
    turns negative and no longer counts anything, so that domain is
    rejected.
    """
    if i < 0 or k < 0 or 2 * k > i:
        raise DomainError(f"square terms need 0 <= 2k <= i, got (i={i}, k={k})")
    return binomial(i, k) - binomial(i, k - 1)


def square_term_special(i: int, k: int) -> int:
    """Term k at column i via its dedicated closed form.

    Only k in {0, 1, 2, floor(i/2)} has one: 1, i - 1, i*(i-3)/2, and the
    ceil(i/2)-th Catalan number for the final term (the column's bottom
    node, which sits at height 0 or 1 depending on parity).
    """
    if i < 0 or k < 0 or 2 * k > i:
        raise DomainError(f"square terms need 0 <= 2k <= i, got (i={i}, k={k})")
    if k == 0:
        return 1
    if k == 1:
        return i - 1
    if k == 2:
        return i * (i - 3) // 2
    if k == i // 2:
        return catalan((i + 1) // 2)
    raise DomainError(f"no dedicated closed form for term {k} at column {i}")


@dataclass(frozen=True)
class Decomposition:
    """Squares decomposition of one column: the squared terms sum to a
    Catalan number."""

    v: int
    terms: tuple[int, ...]

    @property
    def sum_of_squares(self) -> int:
        return sum(t * t for t in self.terms)

    def to_json_dict(self) -> dict:
        """JSON record with all counts as decimal strings."""
        return {
            "v": self.v,
            "terms": [str(t) for t in self.terms],
            "catalan": str(self.sum_of_squares),
        }


def decompose_catalan(v: int, *, cap: int = DEFAULT_POSITION_CAP) -> Decomposition:
    """All squares-decomposition terms of column v, cross-checked two ways.

    Terms come from the binomial closed form; each is checked against a
    freshly built count table, and the squared sum against the Catalan
    number itself.  A mismatch would mean a broken build and raises.
    """
    if v < 0:
        raise ValueError(f"v must be nonnegative, got {v}")
    if 2 * v > cap:
        raise ResourceLimit(
            f"decomposing column {v} needs positions up to {2 * v}, "
            f"beyond the cap of {cap}"
        )
    table = build_table(v, cap=cap)
    terms = tuple(square_term(v, k) for k in range(v // 2 + 1))
    for k, term in enumerate(terms):
        by_recurrence = table.count(v, v - 2 * k)
        if term != by_recurrence:
            raise DyckError(
                f"inconsistent routes at (i={v}, k={k}): closed form {term}, "
                f"recurrence {by_recurrence}"
            )
    total = sum(t * t for t in terms)
    expected = catalan(v, cap=cap)
    if total != expected:
        raise DyckError(
            f"squares of column {v} sum to {total}, but catalan({v}) = {expected}"
        )
    return Decomposition(v, terms)
