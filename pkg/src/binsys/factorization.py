"""Factoring a table into structured left/right cofactors.

Two families of factorizations are supported, each in both orders:

* signature/similar ("ua"/"au"): the signature factor keeps the target's
  off-diagonal cells over an idempotent diagonal; the similar factor keeps
  the target's diagonal over a left-projection body.
* orient/skew ("oj"/"jo"): the orient factor is the left projection with
  its anti-diagonal replaced by column indices (it depends only on the
  order); the skew factor transposes the target's anti-diagonal cells.

For each method the derived pair is cheap to compute, and
``uniqueness_search`` counts *all* in-shape factorizations of a target by
exploiting that the composite's cells depend on the candidate cells one
symmetric pair at a time.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, fields

from .core import (
    Groupoid,
    is_semi_neutral,
    left_zero,
)
from .errors import InternalError, OrderMismatch, OrderTooLarge
from .semigroup import identity, is_identity, product

# Exhaustive shape searches enumerate n**(free cells) candidates.
EXHAUSTIVE_ORDER_LIMIT = 3
# uniqueness_search reports exact counts but materializes at most this
# many solution pairs before sorting (see UniquenessReport.truncated).
MATERIALIZE_LIMIT = 4096


# --- the four derived factors ---

def signature_factor(g: Groupoid) -> Groupoid:
    """Idempotent diagonal, target's cells elsewhere."""
    n = g.order
    table = tuple(
        tuple(x if x == y else g.table[x][y] for y in range(n))
        for x in range(n)
    )
    return Groupoid(table, labels=g.labels, zero=g.zero)


def similar_factor(g: Groupoid) -> Groupoid:
    """Target's diagonal, left projection elsewhere."""
    n = g.order
    table = tuple(
        tuple(g.table[x][x] if x == y else x for y in range(n))
        for x in range(n)
    )
    return Groupoid(table, labels=g.labels, zero=g.zero)


def orient_factor(g: Groupoid) -> Groupoid:
    """Left projection with the anti-diagonal replaced by column indices.

    Depends only on the order of g.
    """
    n = g.order
    table = tuple(
        tuple(y if x + y == n - 1 else x for y in range(n))
        for x in range(n)
    )
    return Groupoid(table, labels=g.labels, zero=g.zero)


def skew_factor(g: Groupoid) -> Groupoid:
    """Target with its anti-diagonal cells transposed (an involution)."""
    n = g.order
    table = tuple(
        tuple(g.table[y][x] if x + y == n - 1 else g.table[x][y] for y in range(n))
        for x in range(n)
    )
    return Groupoid(table, labels=g.labels, zero=g.zero)


def _orient_cell(n: int, a: int, b: int) -> int:
    return b if a + b == n - 1 else a


# --- method registry ---

def _frame_free(n):
    return [[None] * n for _ in range(n)]


def _signature_frame(g):
    # identity diagonal fixed, off-diagonal free
    frame = _frame_free(g.order)
    for x in range(g.order):
        frame[x][x] = x
    return frame


def _similar_frame(g):
    # diagonal free, off-diagonal pinned to left projection
    n = g.order
    frame = [[x if x != y else None for y in range(n)] for x in range(n)]
    return frame


def _orient_frame(g):
    # fully pinned: this factor family is a single table per order
    return [list(row) for row in orient_factor(g).table]


def _skew_frame(g):
    # anti-diagonal free, all other cells pinned to the target
    n = g.order
    frame = [list(row) for row in g.table]
    for i in range(n):
        frame[i][n - 1 - i] = None
    return frame


@dataclass(frozen=True)
class FactorizationMethod:
    name: str
    family: str
    description: str
    derive_left: callable
    derive_right: callable
    left_frame: callable
    right_frame: callable

    def derive(self, g: Groupoid) -> tuple[Groupoid, Groupoid]:
        return self.derive_left(g), self.derive_right(g)


METHODS = {
    "ua": FactorizationMethod(
        "ua", "diagonal-substitution",
        "signature factor times similar factor",
        signature_factor, similar_factor, _signature_frame, _similar_frame,
    ),
    "au": FactorizationMethod(
        "au", "diagonal-substitution",
        "similar factor times signature factor",
        similar_factor, signature_factor, _similar_frame, _signature_frame,
    ),
    "oj": FactorizationMethod(
        "oj", "anti-diagonal-transform",
        "orient factor times skew factor",
        orient_factor, skew_factor, _orient_frame, _skew_frame,
    ),
    "jo": FactorizationMethod(
        "jo", "anti-diagonal-transform",
        "skew factor times orient factor",
        skew_factor, orient_factor, _skew_frame, _orient_frame,
    ),
}


def _method(name) -> FactorizationMethod:
    if isinstance(name, FactorizationMethod):
        return name
    try:
        return METHODS[name]
    except KeyError:
        raise ValueError(
            f"unknown method {name!r}; expected one of {sorted(METHODS)}"
        ) from None


@dataclass(frozen=True)
class FactorPair:
    method: str
    left: Groupoid
    right: Groupoid
    composed: Groupoid
    reproduces: bool


def factorize(g: Groupoid, method="ua") -> FactorPair:
    """Derive the method's canonical factor pair and compose it back."""
    m = _method(method)
    lt, rt = m.derive(g)
    comp = product(lt, rt)
    return FactorPair(m.name, lt, rt, comp, comp == g)


def ua_holds(g: Groupoid) -> bool:
    return factorize(g, "ua").reproduces


def au_holds(g: Groupoid) -> bool:
    return factorize(g, "au").reproduces


def oj_holds(g: Groupoid) -> bool:
    return factorize(g, "oj").reproduces


def jo_holds(g: Groupoid) -> bool:
    return factorize(g, "jo").reproduces


# --- classification ---

@dataclass(frozen=True)
class ClassificationReport:
    """Primeness/compositeness flags for one table.

    The semi_* fields need a distinguished zero on the target (the derived
    factors inherit it) and are None when it is absent.
    """

    order: int
    predicates: dict
    signature_prime: bool
    similar_prime: bool
    orient_prime: bool
    skew_prime: bool
    ua_holds: bool
    au_holds: bool
    oj_holds: bool
    jo_holds: bool
    ua_composite: bool
    au_composite: bool
    oj_composite: bool
    jo_composite: bool
    u_composite: bool
    j_composite: bool
    u_normal: bool
    j_normal: bool
    semi_normal: bool | None
    semi_composite: bool | None

    def to_dict(self) -> dict:
        out = {}
        for f in fields(self):
            out[f.name] = getattr(self, f.name)
        return out


def classify(g: Groupoid) -> ClassificationReport:
    """Evaluate every predicate and factorization flag for one table."""
    from .core import predicate_vector

    sig, sim = signature_factor(g), similar_factor(g)
    ori, skw = orient_factor(g), skew_factor(g)
    ua = product(sig, sim) == g
    au = product(sim, sig) == g
    oj = product(ori, skw) == g
    jo = product(skw, ori) == g
    sig_p, sim_p = is_identity(sig), is_identity(sim)
    ori_p, skw_p = is_identity(ori), is_identity(skw)
    ua_c = ua and not sig_p and not sim_p
    au_c = au and not sig_p and not sim_p
    oj_c = oj and not ori_p and not skw_p
    jo_c = jo and not ori_p and not skw_p
    u_n, j_n = ua and au, oj and jo
    u_c, j_c = ua_c and au_c, oj_c and jo_c
    if g.zero is None:
        semi_n = semi_c = None
    else:
        # "exactly one factor is semi-neutral", on whichever side pairs up
        one_u = is_semi_neutral(sig) != is_semi_neutral(sim)
        one_j = is_semi_neutral(ori) != is_semi_neutral(skw)
        semi_n = (u_n and one_u) or (j_n and one_j)
        semi_c = (u_c and one_u) or (j_c and one_j)
    return ClassificationReport(
        order=g.order,
        predicates=predicate_vector(g),
        signature_prime=sig_p,
        similar_prime=sim_p,
        orient_prime=ori_p,
        skew_prime=skw_p,
        ua_holds=ua,
        au_holds=au,
        oj_holds=oj,
        jo_holds=jo,
        ua_composite=ua_c,
        au_composite=au_c,
        oj_composite=oj_c,
        jo_composite=jo_c,
        u_composite=u_c,
        j_composite=j_c,
        u_normal=u_n,
        j_normal=j_n,
        semi_normal=semi_n,
        semi_composite=semi_c,
    )


def is_partially_prime(g: Groupoid, h: Groupoid, side: str = "left") -> bool:
    """Does g reproduce itself against the non-identity cofactor h?

    side "left" tests h ⋄ g = g, side "right" tests g ⋄ h = g.  The
    identity never counts as a witness (it reproduces everything).
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    if g.order != h.order:
        raise OrderMismatch(f"orders {g.order} and {h.order} differ")
    if is_identity(h):
        return False
    if side == "left":
        return product(h, g) == g
    return product(g, h) == g


# --- uniqueness of in-shape factorizations ---

@dataclass(frozen=True)
class UniquenessReport:
    method: str
    derived: FactorPair
    solution_count: int
    solutions: tuple
    other_solutions: tuple
    truncated: bool


def _assemble(frame, assignments):
    table = [list(row) for row in frame]
    for (x, y), v in assignments:
        table[x][y] = v
    return tuple(tuple(row) for row in table)


def _solve_forced(g, m):
    # au and oj: every free cell is forced, so the derived pair is the
    # single in-shape solution; its correctness is a library invariant.
    lt, rt = m.derive(g)
    if product(lt, rt) != g:
        raise InternalError(
            f"forced {m.name} factorization failed to reproduce the target"
        )
    return 1, [(lt.table, rt.table)], False


def _solve_ua(g):
    n, t = g.order, g.table
    right = similar_factor(g).table
    pair_cells = []
    choice_lists = []
    for x in range(n):
        for y in range(x + 1, n):
            vxy, vyx = t[x][y], t[y][x]
            if vxy != vyx:
                choices = [(vxy, vyx)]
            else:
                # both composite cells read the right factor's diagonal
                choices = [(a, a) for a in range(n) if t[a][a] == vxy]
            pair_cells.append((x, y))
            choice_lists.append(choices)
    count = 1
    for c in choice_lists:
        count *= len(c)
    if count == 0:
        return 0, [], False
    base = _signature_frame(g)
    sols = []
    for combo in itertools.product(*choice_lists):
        assignments = []
        for (x, y), (p, q) in zip(pair_cells, combo):
            assignments.append(((x, y), p))
            assignments.append(((y, x), q))
        sols.append((_assemble(base, assignments), right))
        if len(sols) >= MATERIALIZE_LIMIT:
            break
    return count, sols, count > len(sols)


def _solve_jo(g):
    n, t = g.order, g.table
    right = orient_factor(g).table
    # cells off the anti-diagonal are pinned to the target, so the
    # composite is already determined there; bail out if it disagrees
    for x in range(n):
        for y in range(n):
            if x == y or x + y == n - 1:
                continue
            if _orient_cell(n, t[x][y], t[y][x]) != t[x][y]:
                return 0, [], False
    pair_cells = []
    choice_lists = []
    for i in range(n // 2):
        j = n - 1 - i
        want_ij, want_ji = t[i][j], t[j][i]
        choices = [
            (a, b)
            for a in range(n)
            for b in range(n)
            if _orient_cell(n, a, b) == want_ij and _orient_cell(n, b, a) == want_ji
        ]
        pair_cells.append((i, j))
        choice_lists.append(choices)
    mid_assign = []
    if n % 2 == 1:
        m = n // 2
        mid_assign.append(((m, m), t[m][m]))
    count = 1
    for c in choice_lists:
        count *= len(c)
    if count == 0:
        return 0, [], False
    base = _skew_frame(g)
    sols = []
    for combo in itertools.product(*choice_lists):
        assignments = list(mid_assign)
        for (i, j), (a, b) in zip(pair_cells, combo):
            assignments.append(((i, j), a))
            assignments.append(((j, i), b))
        sols.append((_assemble(base, assignments), right))
        if len(sols) >= MATERIALIZE_LIMIT:
            break
    return count, sols, count > len(sols)


_SOLVERS = {
    "ua": _solve_ua,
    "au": lambda g: _solve_forced(g, METHODS["au"]),
    "oj": lambda g: _solve_forced(g, METHODS["oj"]),
    "jo": _solve_jo,
}


def uniqueness_search(g: Groupoid, method="ua", exhaustive=False) -> UniquenessReport:
    """Count every in-shape factor pair whose composite is exactly g.

    The default path counts analytically, one cell pair at a time, and is
    exact at any order; ``exhaustive=True`` instead enumerates every fill
    of both shape frames (order <= EXHAUSTIVE_ORDER_LIMIT) as a slow
    cross-check.  When more than MATERIALIZE_LIMIT solutions exist only
    the count is exact and the listing is truncated.
    """
    m = _method(method)
    derived = factorize(g, m)
    if exhaustive:
        if g.order > EXHAUSTIVE_ORDER_LIMIT:
            raise OrderTooLarge(
                f"exhaustive shape search supports order <= {EXHAUSTIVE_ORDER_LIMIT}"
            )
        count, sols, truncated = _solve_exhaustive(g, m)
    else:
        count, sols, truncated = _SOLVERS[m.name](g)
    sols.sort()
    pairs = tuple(
        (Groupoid(lt, labels=g.labels, zero=g.zero),
         Groupoid(rt, labels=g.labels, zero=g.zero))
        for lt, rt in sols
    )
    derived_tables = (derived.left.table, derived.right.table)
    others = tuple(p for p in pairs if (p[0].table, p[1].table) != derived_tables)
    if derived.reproduces and derived_tables not in sols and not truncated:
        raise InternalError(f"derived {m.name} pair missing from solution set")
    return UniquenessReport(
        method=m.name,
        derived=derived,
        solution_count=count,
        solutions=pairs,
        other_solutions=others,
        truncated=truncated,
    )


def _frame_fills(frame, n):
    free = [(x, y) for x, row in enumerate(frame) for y, v in enumerate(row) if v is None]
    for combo in itertools.product(range(n), repeat=len(free)):
        yield _assemble(frame, list(zip(free, combo)))


def _solve_exhaustive(g, m):
    n = g.order
    lframe, rframe = m.left_frame(g), m.right_frame(g)
    sols = []
    for lt in _frame_fills(lframe, n):
        left = Groupoid(lt)
        for rt in _frame_fills(rframe, n):
            if product(left, Groupoid(rt)) == g:
                sols.append((lt, rt))
    return len(sols), sols, False


def binary_equivalent(a: Groupoid, b: Groupoid, witness: Groupoid | None = None):
    """A table w with w ⋄ a = b and w ⋄ b = a, or None.

    A supplied witness is checked first; otherwise (and when the witness
    fails) the tables of that order are scanned lexicographically, which
    is supported up to order EXHAUSTIVE_ORDER_LIMIT.
    """
    if a.order != b.order:
        raise OrderMismatch(f"orders {a.order} and {b.order} differ")
    if witness is not None:
        if witness.order != a.order:
            raise OrderMismatch(f"witness order {witness.order} != {a.order}")
        if product(witness, a) == b and product(witness, b) == a:
            return witness
    if a.order > EXHAUSTIVE_ORDER_LIMIT:
        raise OrderTooLarge(
            f"equivalence search supports order <= {EXHAUSTIVE_ORDER_LIMIT}"
        )
    from .enumeration import all_groupoids

    for w in all_groupoids(a.order):
        if product(w, a) == b and product(w, b) == a:
            return w
    return None
