"""The composition that makes the set of order-n tables a monoid.

For tables g and h of the same order, the composite applies h to the two
cross readings of g:

    (g ⋄ h)(x, y) = h(g(x, y), g(y, x))

The left projection table (x∘y = x) is a two-sided identity for ⋄, and the
locally-zero tables are exactly the elements commuting with everything.
"""

from __future__ import annotations

from .core import Groupoid, is_locally_zero, left_zero
from .errors import OrderMismatch, OrderTooLarge

# Exhaustive scans touch n**(n*n) tables; above this order they are refused.
EXHAUSTIVE_ORDER_LIMIT = 3


def identity(order: int) -> Groupoid:
    """The ⋄-identity of the given order (the left projection table)."""
    return left_zero(order)


def product(g: Groupoid, h: Groupoid) -> Groupoid:
    """Compose two tables of the same order.

    Labels (and likewise zero) carry over only when both operands agree
    on them; otherwise the result has none.
    """
    if g.order != h.order:
        raise OrderMismatch(f"orders {g.order} and {h.order} differ")
    n = g.order
    gt, ht = g.table, h.table
    table = tuple(
        tuple(ht[gt[x][y]][gt[y][x]] for y in range(n))
        for x in range(n)
    )
    labels = g.labels if g.labels == h.labels else None
    zero = g.zero if g.zero == h.zero else None
    return Groupoid(table, labels=labels, zero=zero)


def commutes(g: Groupoid, h: Groupoid) -> bool:
    return product(g, h) == product(h, g)


def is_identity(g: Groupoid) -> bool:
    return all(v == x for x, row in enumerate(g.table) for v in row)


def in_center(g: Groupoid, method: str = "fast") -> bool:
    """Does g commute with every table of its order?

    "fast" decides via the locally-zero predicate, the classical
    characterization of the commuting tables; "exhaustive" actually scans
    all tables of the same order (refused above order
    EXHAUSTIVE_ORDER_LIMIT).  The two disagree from order 3 up: a locally
    zero table with one left-zero pair and one right-zero pair fails to
    commute with everything, so the exhaustive scan admits only the two
    projections.  The verification registry tracks the gap as the
    expected-fail claim "center-agreement".
    """
    if method == "fast":
        return is_locally_zero(g)
    if method != "exhaustive":
        raise ValueError(f"method must be 'fast' or 'exhaustive', not {method!r}")
    if g.order > EXHAUSTIVE_ORDER_LIMIT:
        raise OrderTooLarge(
            f"exhaustive center scan supports order <= {EXHAUSTIVE_ORDER_LIMIT}"
        )
    from .enumeration import all_groupoids

    return all(commutes(g, h) for h in all_groupoids(g.order))


def find_inverse(g: Groupoid) -> Groupoid | None:
    """A table h with g ⋄ h = h ⋄ g = identity, or None.

    Locally-zero tables square to the identity, so they are their own
    inverses; anything else requires a scan, supported up to order
    EXHAUSTIVE_ORDER_LIMIT.  (Self-inverse tables outside the locally-zero
    set do exist, so the scan is a genuine search.)
    """
    if is_locally_zero(g):
        return g
    if g.order > EXHAUSTIVE_ORDER_LIMIT:
        raise OrderTooLarge(
            f"inverse search supports order <= {EXHAUSTIVE_ORDER_LIMIT}"
        )
    from .enumeration import all_groupoids

    ident = identity(g.order)
    for h in all_groupoids(g.order):
        if product(g, h) == ident and product(h, g) == ident:
            return h
    return None
