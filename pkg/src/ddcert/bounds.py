"""Closed-form order bounds for graphs of maximum degree k and diameter d.

Everything here is exact integer arithmetic; Python ints never overflow, so
the bounds stay trustworthy at any (k, d).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


@dataclass(frozen=True)
class Params:
    """A (degree, diameter) pair."""

    k: int
    d: int

    def __post_init__(self):
        if not isinstance(self.k, int) or not isinstance(self.d, int):
            raise TypeError("k and d must be integers")
        if self.k < 2:
            raise ValueError(f"degree k must be >= 2, got {self.k}")
        if self.d < 1:
            raise ValueError(f"diameter d must be >= 1, got {self.d}")

    def require_k3(self):
        if self.k == 2:
            raise ValueError("this bound needs k >= 3 (the formula divides by k - 2)")
        return self


@dataclass(frozen=True)
class BoundReport:
    k: int
    d: int
    moore: int
    bipartite: int
    nonregular: int | None
    girth_floor: int | None


class MooreClass(str, Enum):
    COMPLETE = "complete"
    CYCLE = "cycle"
    PETERSEN = "petersen"
    HOFFMAN_SINGLETON = "hoffman_singleton"
    OPEN_57 = "open_57"
    NONE = "none"


@dataclass(frozen=True)
class MooreExistence:
    moore: MooreClass
    bipartite_possible: bool


def _moore_sum(k: int, depth: int) -> int:
    # 1 + k + k(k-1) + ... + k(k-1)^(depth-1)
    total, layer = 1, k
    for _ in range(depth):
        total += layer
        layer *= k - 1
    return total


def moore_bound(k: int, d: int) -> int:
    """M(k, d) = 1 + k + k(k-1) + ... + k(k-1)^(d-1)."""
    Params(k, d)
    return _moore_sum(k, d)


def bipartite_moore_bound(k: int, d: int) -> int:
    Params(k, d)
    if k == 2:
        return 2 * d
    num = 2 * (k - 1) ** d - 2
    assert num % (k - 2) == 0
    return num // (k - 2)


def nonregular_upper_bound(k: int, d: int) -> int:
    """Order bound for graphs of max degree k, diameter d, with a vertex of degree < k."""
    Params(k, d).require_k3()
    loss = ((k - 1) ** d - 1) // (k - 2)
    return moore_bound(k, d) - loss


def girth_order_floor(k: int, d: int) -> int:
    """Least possible order of a (k, d)-graph of girth 2d or 2d - 1.

    Such a graph contains a full Moore tree of depth d - 1 around every vertex,
    so the order is at least 1 + k + k(k-1) + ... + k(k-1)^(d-2).
    """
    Params(k, d).require_k3()
    if d < 2:
        raise ValueError("girth_order_floor needs d >= 2")
    return _moore_sum(k, d - 1)


def defect(k: int, d: int, order: int) -> int:
    m = moore_bound(k, d)
    if order <= 0:
        raise ValueError(f"order must be positive, got {order}")
    if order > m:
        raise ValueError(
            f"order {order} exceeds the Moore bound M({k},{d}) = {m}; "
            "no graph of max degree k and diameter d is that large"
        )
    return m - order


def moore_existence(k: int, d: int) -> MooreExistence:
    """Classify which Moore graphs can exist for (k, d).

    Moore graphs: complete graphs (d = 1), odd cycles (k = 2), and for d = 2
    only k in {3, 7} plus the unresolved k = 57. Bipartite Moore graphs with
    k >= 3 need d in {2, 3, 4, 6}.
    """
    Params(k, d)
    if d == 1:
        cls = MooreClass.COMPLETE
    elif k == 2:
        cls = MooreClass.CYCLE
    elif d == 2 and k == 3:
        cls = MooreClass.PETERSEN
    elif d == 2 and k == 7:
        cls = MooreClass.HOFFMAN_SINGLETON
    elif d == 2 and k == 57:
        cls = MooreClass.OPEN_57
    else:
        cls = MooreClass.NONE
    # d = 1 only admits K_2, which is not k-regular for k >= 3
    if k == 2:
        bip = True
    else:
        bip = d in (2, 3, 4, 6)
    return MooreExistence(cls, bip)


def bound_report(k: int, d: int) -> BoundReport:
    nonreg = nonregular_upper_bound(k, d) if k >= 3 else None
    floor = girth_order_floor(k, d) if k >= 3 and d >= 2 else None
    return BoundReport(
        k=k,
        d=d,
        moore=moore_bound(k, d),
        bipartite=bipartite_moore_bound(k, d),
        nonregular=nonreg,
        girth_floor=floor,
    )
