"""Case analysis showing that, for k > c, some even d > max(6, k) forces every
graph of maximum degree k and diameter d to have defect greater than c.

All comparisons against c are exact (ints and QuadInt sign tests).
"""

from __future__ import annotations

from dataclasses import dataclass

from ddcert import bounds
from ddcert.gpoly import QuadInt, special_value, sqrt_power

CONDITIONAL_NOTE = (
    "The girth 2d / 2d-1 case needs the order of the graph to exceed the "
    "Alon-Boppana threshold N, beyond which the second eigenvalue is close to "
    "2sqrt(k-1). N is not constructive, so this d certifies every explicit "
    "inequality of the argument but cannot discharge that analytic step."
)


@dataclass(frozen=True)
class CaseBounds:
    k: int
    d: int
    c: int
    nonregular_loss: int  # ((k-1)^d - 1)/(k-2): how far a non-regular graph falls below M
    bipartite_loss: int  # (k-1)^d = M - B
    nonregular_ok: bool
    bipartite_ok: bool
    small_girth_bound: int
    high_girth_bound_pos: QuadInt
    high_girth_bound_neg: QuadInt
    moore_excluded: bool  # d > 6: no Moore or bipartite Moore graph for k >= 3
    conditional_note: str = CONDITIONAL_NOTE

    @property
    def small_girth_ok(self) -> bool:
        return self.small_girth_bound > self.c

    @property
    def high_girth_pos_ok(self) -> bool:
        return self.high_girth_bound_pos > self.c

    @property
    def high_girth_neg_ok(self) -> bool:
        # the negative-side bound is only established for even d
        return self.d % 2 == 0 and self.high_girth_bound_neg > self.c

    def all_exceed(self) -> bool:
        return (
            self.nonregular_ok
            and self.bipartite_ok
            and self.small_girth_ok
            and self.high_girth_pos_ok
            and self.high_girth_neg_ok
        )

    def table(self) -> list[tuple[str, str, bool]]:
        """(case, bound, bound > c) rows."""
        return [
            ("non-regular", str(self.nonregular_loss), self.nonregular_ok),
            ("bipartite", str(self.bipartite_loss), self.bipartite_ok),
            ("girth <= 2d-2", str(self.small_girth_bound), self.small_girth_ok),
            ("girth >= 2d-1, lambda_1 side", str(self.high_girth_bound_pos), self.high_girth_pos_ok),
            ("girth >= 2d-1, lambda_min side", str(self.high_girth_bound_neg), self.high_girth_neg_ok),
        ]


def _check_kc(k: int, c: int):
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if c < 1:
        raise ValueError(f"need c >= 1, got {c}")


def case_bounds(k: int, d: int, c: int) -> CaseBounds:
    _check_kc(k, c)
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    loss_nr = ((k - 1) ** d - 1) // (k - 2)
    loss_bip = (k - 1) ** d
    return CaseBounds(
        k=k,
        d=d,
        c=c,
        nonregular_loss=loss_nr,
        bipartite_loss=loss_bip,
        nonregular_ok=loss_nr > c,
        bipartite_ok=loss_bip > c,
        small_girth_bound=k,
        high_girth_bound_pos=special_value(k, d, "+"),
        high_girth_bound_neg=special_value(k, d, "-"),
        moore_excluded=d > 6,
    )


def min_even_diameter(k: int, c: int) -> tuple[int, bool]:
    """Smallest even d > max(6, k) at which every case bound exceeds c.

    The second component is always True: see CONDITIONAL_NOTE.
    """
    _check_kc(k, c)
    if k <= c:
        raise ValueError(f"the argument needs k > c, got k={k}, c={c}")
    d = max(6, k) + 1
    d += d % 2
    while not case_bounds(k, d, c).all_exceed():
        d += 2
    return d, True


@dataclass(frozen=True)
class DefectInterval:
    k: int
    d: int
    low_neg: QuadInt
    low_pos: QuadInt
    high: int

    @property
    def second_nonempty(self) -> bool:
        return self.low_pos <= self.high

    def contains(self, delta: int) -> bool:
        """delta lies in the union of the two intervals."""
        if delta > self.high:
            return False
        return self.low_neg <= delta or self.low_pos <= delta


def remark_defect_upper_bound(k: int, d: int) -> int:
    """k(k-1)^(d-1): the most a graph of girth >= 2d-1 can fall below M(k,d)."""
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    return k * (k - 1) ** (d - 1)


def generalized_moore_defect_interval(k: int, d: int) -> DefectInterval:
    """Defect window of a non-bipartite generalized Moore graph (even d).

    Lower ends are (d+1)r^d -+ d r^(d-1) with r = sqrt(k-1); the second
    interval may be empty for small d and is returned as is.
    """
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if d < 2 or d % 2:
        raise ValueError(f"need even d >= 2, got {d}")
    m = k - 1
    main = (d + 1) * sqrt_power(m, d)
    tail = d * sqrt_power(m, d - 1)
    return DefectInterval(k, d, main - tail, main + tail, remark_defect_upper_bound(k, d))


def bipartite_defect(k: int, d: int) -> int:
    return bounds.moore_bound(k, d) - bounds.bipartite_moore_bound(k, d)
