"""Closed-form genus bounds."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import InvalidParameter, OddGirthUnsupported


def thm1_bound(q: int) -> int:
    """Strong-genus lower bound from a facial distance ``q``: ``floor(q / 3)``."""
    if q < 1:
        raise InvalidParameter("facial distance is at least 1")
    return q // 3


def moore_bound_cubic(girth: int) -> int:
    """Least order of a cubic graph with the given even girth."""
    if girth < 4 or girth % 2:
        raise OddGirthUnsupported(f"girth {girth}: only even girth >= 4 is supported")
    return 2 * (2 ** (girth // 2) - 1)


def euler_girth_bound(n: int, m: int, girth: int) -> tuple[int, int]:
    """(orientable, nonorientable) genus lower bounds when every face has length >= girth."""
    if girth < 1:
        raise InvalidParameter("girth must be positive")
    f_max = (2 * m) // girth
    chi_max = n - m + f_max
    orientable = max(0, -((chi_max - 2) // 2))
    nonorientable = max(0, 2 - chi_max)
    return orientable, nonorientable


def max_genus_ub(n: int, m: int) -> int:
    """Ceiling on the genus of any orientable 2-cell embedding (one face)."""
    if m < n - 1:
        raise InvalidParameter("a connected graph has at least n - 1 edges")
    return (m - n + 1) // 2


@dataclass(frozen=True)
class BoundsReport:
    q: int | None
    thm1_bound: int | None
    orientable_lb: int
    nonorientable_lb: int
    moore_order: int | None
    max_genus_ub: int

    def as_dict(self) -> dict:
        return asdict(self)


def bounds_report(n: int, m: int, girth: int, q: int | None = None) -> BoundsReport:
    ori, non = euler_girth_bound(n, m, girth)
    try:
        moore = moore_bound_cubic(girth)
    except OddGirthUnsupported:
        moore = None
    return BoundsReport(
        q=q,
        thm1_bound=None if q is None else thm1_bound(q),
        orientable_lb=ori,
        nonorientable_lb=non,
        moore_order=moore,
        max_genus_ub=max_genus_ub(n, m),
    )
