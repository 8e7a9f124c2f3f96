"""Exhaustive and sampled sweeps over all tables of a small order.

Three entry points:

* ``all_groupoids`` / ``random_groupoids`` — the raw streams, in row-major
  lexicographic order (respectively i.i.d. uniform cells from a seed).
* ``census`` — predicate and classification counts over a whole order.
* ``verify_claims`` — run a registry of general statements about tables
  against every table of an order (or a seeded sample at larger orders)
  and report counterexamples.  Claims that are expected to fail stay in
  the registry on purpose: their reports document *where* the general
  statement breaks.

Work is split over processes when the job is large; ``BINSYS_THREADS``
(else the CPU count) sets the worker count, and results are identical for
any worker count because shards are merged in order.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from multiprocessing import get_context

from .core import (
    Groupoid,
    check_predicate,
    has_orientation,
    is_abelian,
    is_bi_diagonal,
    is_idempotent,
    is_locally_zero,
    is_semi_neutral,
    is_strong,
    left_zero,
    right_zero,
    semi_neutral_groupoid,
)
from .axioms import axiom_holds
from .errors import OrderTooLarge, PreconditionError
from .factorization import (
    is_partially_prime,
    orient_factor,
    signature_factor,
    similar_factor,
    skew_factor,
    uniqueness_search,
)
from .graphs import all_graphs, from_graph
from .semigroup import commutes, identity, in_center, is_identity, product

ENUMERATION_ORDER_LIMIT = 3
MAX_COUNTEREXAMPLES = 5

_ALL_CACHE: dict[int, tuple] = {}


def table_count(order: int) -> int:
    return order ** (order * order)


def _tables(order: int):
    n = order
    for flat in itertools.product(range(n), repeat=n * n):
        yield tuple(flat[i * n:(i + 1) * n] for i in range(n))


def all_groupoids(order: int):
    """Every table of the order, ascending by row-major flattened cells."""
    if order > ENUMERATION_ORDER_LIMIT:
        raise OrderTooLarge(
            f"exhaustive enumeration supports order <= {ENUMERATION_ORDER_LIMIT}"
        )
    if order not in _ALL_CACHE:
        _ALL_CACHE[order] = tuple(Groupoid(t) for t in _tables(order))
    return iter(_ALL_CACHE[order])


def random_groupoids(order: int, count: int, seed=None):
    """``count`` i.i.d. uniform tables; cells drawn row-major."""
    if order < 1:
        raise PreconditionError("order must be >= 1")
    rng = random.Random(seed)
    n = order
    for _ in range(count):
        yield Groupoid(
            tuple(tuple(rng.randrange(n) for _ in range(n)) for _ in range(n))
        )


def _resolve_workers(workers, weight):
    """Worker count: explicit arg, else BINSYS_THREADS, else CPU count.

    Small jobs (low weight) always run in-process.
    """
    if workers is None:
        env = os.environ.get("BINSYS_THREADS")
        if env is not None:
            try:
                workers = int(env)
            except ValueError:
                raise PreconditionError(
                    f"BINSYS_THREADS must be an integer, got {env!r}"
                ) from None
        else:
            workers = os.cpu_count() or 1
    if workers < 1:
        raise PreconditionError("worker count must be >= 1")
    if weight < 2048:
        return 1
    return workers


# --- census ---

CENSUS_KEYS = (
    "idempotent", "strong", "locally_zero", "orientation",
    "twisted_orientation", "bi_diagonal", "abelian",
    "signature_prime", "similar_prime", "orient_prime", "skew_prime",
    "ua_holds", "au_holds", "oj_holds", "jo_holds",
    "ua_composite", "au_composite", "oj_composite", "jo_composite",
    "u_composite", "j_composite", "u_normal", "j_normal",
)


@dataclass(frozen=True)
class CensusReport:
    order: int
    total: int
    counts: dict


def _census_flags(g: Groupoid):
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
    return (
        is_idempotent(g), is_strong(g), is_locally_zero(g),
        has_orientation(g), check_predicate(g, "twisted_orientation"),
        is_bi_diagonal(g), is_abelian(g),
        sig_p, sim_p, ori_p, skw_p,
        ua, au, oj, jo,
        ua_c, au_c, oj_c, jo_c,
        ua_c and au_c, oj_c and jo_c, ua and au, oj and jo,
    )


def _census_range(order, start, stop):
    counts = [0] * len(CENSUS_KEYS)
    src = itertools.islice(all_groupoids(order), start, stop)
    for g in src:
        for i, flag in enumerate(_census_flags(g)):
            if flag:
                counts[i] += 1
    return counts


def census(order: int, workers=None) -> CensusReport:
    """Count every census flag over all tables of the order."""
    total = table_count(order)
    if order > ENUMERATION_ORDER_LIMIT:
        raise OrderTooLarge(
            f"census supports order <= {ENUMERATION_ORDER_LIMIT}"
        )
    workers = _resolve_workers(workers, total)
    if workers == 1:
        counts = _census_range(order, 0, total)
    else:
        all_groupoids(order)  # build the cache before forking
        shards = _shards(total, workers * 4)
        with get_context("fork").Pool(workers) as pool:
            parts = pool.starmap(
                _census_range, [(order, a, b) for a, b in shards]
            )
        counts = [sum(col) for col in zip(*parts)]
    return CensusReport(order, total, dict(zip(CENSUS_KEYS, counts)))


def _shards(total, pieces):
    pieces = max(1, min(pieces, total))
    step = -(-total // pieces)
    return [(a, min(a + step, total)) for a in range(0, total, step)]


# --- claim registry ---

@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    expected: str  # "pass", or "fail" for statements kept as documented breaks
    runner: callable


@dataclass(frozen=True)
class ClaimReport:
    claim: str
    statement: str
    order: int
    mode: str
    checked: int
    passed: bool
    expected: str
    counterexamples: tuple
    note: str | None = None

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "statement": self.statement,
            "order": self.order,
            "mode": self.mode,
            "checked": self.checked,
            "passed": self.passed,
            "expected": self.expected,
            "counterexamples": [
                {"table": [list(r) for r in g.table], "zero": g.zero}
                for g in self.counterexamples
            ],
            "note": self.note,
        }


class ClaimContext:
    """What a claim runner may draw on: the order, the table stream, and
    deterministic per-claim RNG streams for sampled domains."""

    def __init__(self, order, mode, count=None, seed=None, samples=None):
        self.order = order
        self.mode = mode  # "exhaustive" | "sampled"
        self.count = count
        self.seed = seed
        self.samples = samples

    def groupoids(self):
        if self.mode == "exhaustive":
            return all_groupoids(self.order)
        return iter(self.samples)

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")

    def domain_size(self):
        if self.mode == "exhaustive":
            return table_count(self.order)
        return len(self.samples)

    def side_count(self, cap=2048):
        """How many instances secondary (pair/graph) domains should draw."""
        if self.mode == "exhaustive":
            return cap
        return min(self.count, cap)

    def random_tables(self, count, salt):
        rng = self.rng(salt)
        n = self.order
        for _ in range(count):
            yield Groupoid(
                tuple(tuple(rng.randrange(n) for _ in range(n)) for _ in range(n))
            )

    def locally_zero_tables(self):
        """All of them when exhaustive (via graphs), else a seeded sample."""
        if self.mode == "exhaustive":
            for graph in all_graphs(self.order):
                yield from_graph(graph)
        else:
            rng = self.rng("graphs")
            n = self.order
            pairs = [(x, y) for x in range(n) for y in range(x + 1, n)]
            for _ in range(self.side_count()):
                table = [[y for y in range(n)] for _ in range(n)]
                for x in range(n):
                    table[x][x] = x
                for x, y in pairs:
                    if rng.random() < 0.5:
                        table[x][y], table[y][x] = x, y
                yield Groupoid(tuple(tuple(r) for r in table))

    def op_tables(self):
        """Tables where every product lands on an operand."""
        if self.mode == "exhaustive":
            return (g for g in all_groupoids(self.order) if has_orientation(g))
        rng = self.rng("op")
        n = self.order

        def gen():
            for _ in range(self.side_count()):
                table = [[x for _ in range(n)] for x in range(n)]
                for x in range(n):
                    for y in range(n):
                        if x != y and rng.random() < 0.5:
                            table[x][y] = y
                yield Groupoid(tuple(tuple(r) for r in table))

        return gen()


def _sweep(ctx, needs_zero):
    """The (table, variants) stream: zero-needing claims see every zero."""
    for g in ctx.groupoids():
        if needs_zero:
            for z in range(ctx.order):
                yield g.with_metadata(zero=z)
        else:
            yield g


def _universal(cid, statement, conclusion, hypothesis=None, needs_zero=False,
               min_order=1, expected="pass"):
    """A claim checked per table (times per zero when needs_zero)."""

    def run(ctx):
        if ctx.order < min_order:
            return 0, [], f"not checked below order {min_order}"
        checked = 0
        cexs = []
        for g in _sweep(ctx, needs_zero):
            if hypothesis is not None and not hypothesis(g):
                continue
            checked += 1
            if not conclusion(g):
                if len(cexs) < MAX_COUNTEREXAMPLES:
                    cexs.append(g)
        return checked, cexs, None

    return Claim(cid, statement, expected, run)


def _singleton(cid, statement, check, min_order=1):
    """A claim about one specific table per order."""

    def run(ctx):
        if ctx.order < min_order:
            return 0, [], f"not checked below order {min_order}"
        witness = check(ctx.order)
        if witness is None:
            return 1, [], None
        return 1, [witness], None

    return Claim(cid, statement, "pass", run)


# helpers shared by several claims

def _ua_holds(g):
    return product(signature_factor(g), similar_factor(g)) == g


def _au_holds(g):
    return product(similar_factor(g), signature_factor(g)) == g


def _oj_holds(g):
    return product(orient_factor(g), skew_factor(g)) == g


def _jo_holds(g):
    return product(skew_factor(g), orient_factor(g)) == g


def _u_normal(g):
    return _ua_holds(g) and _au_holds(g)


def _u_composite(g):
    return (
        _u_normal(g)
        and not is_identity(signature_factor(g))
        and not is_identity(similar_factor(g))
    )


def _oj_composite(g):
    return (
        _oj_holds(g)
        and not is_identity(orient_factor(g))
        and not is_identity(skew_factor(g))
    )


def _jo_composite(g):
    return (
        _jo_holds(g)
        and not is_identity(orient_factor(g))
        and not is_identity(skew_factor(g))
    )


def _semi_normal(g):
    one_u = is_semi_neutral(signature_factor(g)) != is_semi_neutral(similar_factor(g))
    one_j = is_semi_neutral(orient_factor(g)) != is_semi_neutral(skew_factor(g))
    return (_u_normal(g) and one_u) or (_oj_holds(g) and _jo_holds(g) and one_j)


def _semi_composite(g):
    one_u = is_semi_neutral(signature_factor(g)) != is_semi_neutral(similar_factor(g))
    one_j = is_semi_neutral(orient_factor(g)) != is_semi_neutral(skew_factor(g))
    return (_u_composite(g) and one_u) or (_oj_composite(g) and _jo_composite(g) and one_j)


def _ua_unique_ok(g):
    rep = uniqueness_search(g, "ua")
    return rep.solution_count == 1 and rep.derived.reproduces


def _jo_unique_ok(g):
    rep = uniqueness_search(g, "jo")
    return rep.solution_count == 1 and rep.derived.reproduces


def _is_abelian_group(g):
    t = g.table
    n = g.order
    e = next(
        (c for c in range(n)
         if all(t[c][x] == x for x in range(n))
         and all(t[x][c] == x for x in range(n))),
        None,
    )
    if e is None or not is_abelian(g):
        return False
    if any(all(t[x][y] != e for y in range(n)) for x in range(n)):
        return False
    return all(
        t[t[x][y]][z] == t[x][t[y][z]]
        for x in range(n) for y in range(n) for z in range(n)
    )


def _no_op_cells(g):
    # no idempotent element and no product equal to an operand
    t = g.table
    n = g.order
    if any(t[x][x] == x for x in range(n)):
        return False
    return all(
        t[x][y] not in (x, y)
        for x in range(n) for y in range(n) if x != y
    )


# custom runners

def _run_identity(ctx):
    ident = identity(ctx.order)
    checked = 0
    cexs = []
    for g in ctx.groupoids():
        checked += 1
        if not (product(ident, g) == g and product(g, ident) == g):
            if len(cexs) < MAX_COUNTEREXAMPLES:
                cexs.append(g)
    return checked, cexs, None


def _run_associative(ctx):
    checked = 0
    cexs = []

    def check(f, g, h):
        nonlocal checked
        checked += 1
        if product(product(f, g), h) != product(f, product(g, h)):
            if len(cexs) < MAX_COUNTEREXAMPLES * 3:
                cexs.extend([f, g, h])

    note = None
    if ctx.mode == "exhaustive" and ctx.order <= 2:
        pool = list(all_groupoids(ctx.order))
        for f in pool:
            for g in pool:
                for h in pool:
                    check(f, g, h)
    elif ctx.mode == "exhaustive":
        pool = list(all_groupoids(ctx.order))
        rng = ctx.rng("assoc")
        trials = 100_000
        for _ in range(trials):
            check(*(pool[rng.randrange(len(pool))] for _ in range(3)))
        note = f"{trials} random triples (full triple space is too large)"
    else:
        trio = [list(ctx.random_tables(ctx.side_count(), f"assoc{i}")) for i in range(3)]
        for f, g, h in zip(*trio):
            check(f, g, h)
        note = "random triples"
    if cexs:
        note = ((note + "; ") if note else "") + "counterexamples listed as flattened triples"
    return checked, cexs, note


def _run_center_closed(ctx):
    pool = list(ctx.locally_zero_tables())
    checked = 0
    cexs = []
    if ctx.mode == "exhaustive":
        pairs = ((a, b) for a in pool for b in pool)
    else:
        half = len(pool) // 2
        pairs = zip(pool[:half], pool[half:])
    for a, b in pairs:
        checked += 1
        if not is_locally_zero(product(a, b)):
            if len(cexs) < MAX_COUNTEREXAMPLES * 2:
                cexs.extend([a, b])
    note = "counterexamples listed as flattened pairs" if cexs else None
    return checked, cexs, note


def _run_center_self_inverse(ctx):
    ident = identity(ctx.order)
    checked = 0
    cexs = []
    for g in ctx.locally_zero_tables():
        checked += 1
        if product(g, g) != ident:
            if len(cexs) < MAX_COUNTEREXAMPLES:
                cexs.append(g)
    return checked, cexs, None


def _run_center_agreement(ctx):
    if ctx.order > ENUMERATION_ORDER_LIMIT:
        return 0, [], "exhaustive center scan is defined only up to order 3"
    checked = 0
    cexs = []
    for g in ctx.groupoids():
        checked += 1
        if in_center(g, "fast") != in_center(g, "exhaustive"):
            if len(cexs) < MAX_COUNTEREXAMPLES:
                cexs.append(g)
    return checked, cexs, None


def _run_op_closed(ctx):
    pool = list(ctx.op_tables())
    checked = 0
    cexs = []
    if ctx.mode == "exhaustive":
        pairs = ((a, b) for a in pool for b in pool)
    else:
        half = len(pool) // 2
        pairs = zip(pool[:half], pool[half:])
    for a, b in pairs:
        checked += 1
        if not has_orientation(product(a, b)):
            if len(cexs) < MAX_COUNTEREXAMPLES * 2:
                cexs.extend([a, b])
    note = "counterexamples listed as flattened pairs" if cexs else None
    return checked, cexs, note


def _run_semi_neutral_product(ctx):
    checked = 0
    cexs = []
    for z in range(ctx.order):
        s = semi_neutral_groupoid(ctx.order, z)
        checked += 1
        if not is_semi_neutral(product(s, s)):
            cexs.append(s)
    return checked, cexs, None


def _b1_holds(g):
    return axiom_holds(g, "B1")


CLAIMS = [
    Claim(
        "thm-2.4-identity",
        "the left projection table is a two-sided identity for the composition",
        "pass", _run_identity,
    ),
    Claim(
        "thm-2.4-associative",
        "the composition is associative",
        "pass", _run_associative,
    ),
    _singleton(
        "prop-2.5-right-zero-strong",
        "the right projection table is strong",
        lambda n: None if is_strong(right_zero(n)) else right_zero(n),
    ),
    _universal(
        "prop-2.6-projections-central",
        "both projection tables commute with every table",
        lambda g: commutes(g, left_zero(g.order)) and commutes(g, right_zero(g.order)),
    ),
    Claim(
        "cor-2.7-center-closed",
        "the composite of two locally-zero tables is locally zero",
        "pass", _run_center_closed,
    ),
    Claim(
        "prop-2.8-center-self-inverse",
        "every locally-zero table squares to the identity",
        "pass", _run_center_self_inverse,
    ),
    # The classical claim that the locally-zero tables are exactly the
    # commute-with-everything tables breaks at order 3: a table with one
    # left-zero pair and one right-zero pair is locally zero but not
    # central.  Only the two projections survive the exhaustive scan.
    Claim(
        "center-agreement",
        "the fast centrality test agrees with the exhaustive commuting scan",
        "fail", _run_center_agreement,
    ),
    _universal(
        "thm-3.1.3-strong-ua",
        "signature times similar reproduces every strong table",
        _ua_holds, hypothesis=is_strong,
    ),
    _universal(
        "cor-3.1.4-ua-unique",
        "a strong table has exactly one signature-shape/similar-shape factorization",
        _ua_unique_ok,
        hypothesis=is_strong,
    ),
    _universal(
        "thm-3.2.3-au-universal",
        "similar times signature reproduces every table",
        _au_holds,
    ),
    _universal(
        "cor-3.2.4-au-unique",
        "every table has exactly one similar-shape/signature-shape factorization",
        lambda g: uniqueness_search(g, "au").solution_count == 1,
    ),
    _universal(
        "cor-3.2.5-strong-u-normal",
        "strong tables factor both ways through signature and similar",
        _u_normal, hypothesis=is_strong,
    ),
    _universal(
        "prop-3.2-similar-factor-strong",
        "the similar factor of any table is strong",
        lambda g: is_strong(similar_factor(g)),
    ),
    _universal(
        "prop-3.2.7-prime-implies-u-normal",
        "a table whose signature or similar factor is trivial factors both ways",
        _u_normal,
        hypothesis=lambda g: is_identity(signature_factor(g))
        or is_identity(similar_factor(g)),
    ),
    _singleton(
        "prop-3.2.8-right-zero-similar-prime",
        "the right projection table has a trivial similar factor",
        lambda n: None
        if is_identity(similar_factor(right_zero(n))) and _ua_holds(right_zero(n))
        else right_zero(n),
    ),
    _universal(
        "prop-3.2.10-statement",
        "a strong table that is not locally zero is u-composite",
        _u_composite,
        hypothesis=lambda g: is_strong(g) and not is_locally_zero(g),
        expected="fail",
    ),
    _universal(
        "prop-3.2.10-proof",
        "a strong table with no idempotent cell and no operand-valued product is u-composite",
        _u_composite,
        hypothesis=lambda g: is_strong(g) and _no_op_cells(g),
    ),
    _universal(
        "thm-3.3.1-factor-primes",
        "the similar factor of a signature factor is trivial, and vice versa",
        lambda g: is_identity(similar_factor(signature_factor(g)))
        and is_identity(signature_factor(similar_factor(g))),
    ),
    _universal(
        "cor-3.3.2-ua-refactor",
        "re-deriving both factors and composing again still reproduces the table (signature first)",
        lambda g: product(
            signature_factor(signature_factor(g)),
            similar_factor(similar_factor(g)),
        ) == g,
        hypothesis=_ua_holds,
    ),
    _universal(
        "cor-3.3.3-au-refactor",
        "re-deriving both factors and composing again still reproduces the table (similar first)",
        lambda g: product(
            similar_factor(similar_factor(g)),
            signature_factor(signature_factor(g)),
        ) == g,
    ),
    _universal(
        "cor-3.3.4-strong-refactor",
        "for strong tables the re-derived factors compose back in both orders",
        lambda g: product(
            signature_factor(signature_factor(g)),
            similar_factor(similar_factor(g)),
        ) == g
        and product(
            similar_factor(similar_factor(g)),
            signature_factor(signature_factor(g)),
        ) == g,
        hypothesis=is_strong,
    ),
    _universal(
        "thm-4.1.2-oj-universal",
        "orient times skew reproduces every table",
        _oj_holds,
    ),
    _universal(
        "cor-4.1.3-oj-unique",
        "every table has exactly one orient/skew–shape factorization",
        lambda g: uniqueness_search(g, "oj").solution_count == 1,
    ),
    _universal(
        "thm-4.2.3-op-jo",
        "skew times orient reproduces every operand-valued table",
        _jo_holds, hypothesis=has_orientation,
    ),
    _universal(
        "cor-4.2.4-jo-unique",
        "an operand-valued table has exactly one skew-shape/orient factorization",
        _jo_unique_ok,
        hypothesis=has_orientation,
    ),
    _universal(
        "prop-4.2.5-op-j-normal",
        "operand-valued tables factor both ways through orient and skew",
        lambda g: _oj_holds(g) and _jo_holds(g),
        hypothesis=has_orientation,
    ),
    Claim(
        "op-product-closed",
        "the composite of two operand-valued tables is operand-valued",
        "pass", _run_op_closed,
    ),
    _singleton(
        "prop-4.4-orient-locally-zero",
        "the orient factor is locally zero",
        lambda n: None
        if is_locally_zero(orient_factor(left_zero(n)))
        else orient_factor(left_zero(n)),
    ),
    _singleton(
        "cor-4.5-orient-unit",
        "the orient factor squares to the identity",
        lambda n: None
        if product(orient_factor(left_zero(n)), orient_factor(left_zero(n)))
        == identity(n)
        else orient_factor(left_zero(n)),
    ),
    _universal(
        "thm-4.3.1-orient-skew",
        "the skew factor of the orient factor is trivial, and orient composed "
        "with the table gives its skew factor",
        lambda g: is_identity(skew_factor(orient_factor(g)))
        and product(orient_factor(g), g) == skew_factor(g),
    ),
    _singleton(
        "thm-4.3.3-right-zero-j-composite",
        "the right projection table is composite through orient and skew both ways",
        lambda n: None
        if _oj_composite(right_zero(n)) and _jo_composite(right_zero(n))
        else right_zero(n),
        min_order=3,  # at order 2 its skew factor is the identity
    ),
    _universal(
        "prop-4.3.5-bi-diagonal-partial",
        "a non-trivial table with a symmetric anti-diagonal reproduces itself "
        "against its orient factor on the left",
        lambda g: is_partially_prime(g, orient_factor(g), "left"),
        hypothesis=lambda g: is_bi_diagonal(g) and not is_identity(g),
    ),
    _universal(
        "prop-5.1-semi-neutral-prime-composite",
        "a non-trivial semi-neutral table has a trivial signature factor and "
        "is composite through orient and skew",
        lambda g: is_identity(signature_factor(g)) and _oj_composite(g),
        hypothesis=lambda g: is_semi_neutral(g) and not is_identity(g),
        needs_zero=True,
    ),
    _universal(
        "cor-5.2-semi-neutral-semi-normal",
        "a non-trivial semi-neutral table is semi-normal",
        _semi_normal,
        hypothesis=lambda g: is_semi_neutral(g) and not is_identity(g),
        needs_zero=True,
    ),
    Claim(
        "prop-5.3-semi-neutral-product",
        "the composite of the semi-neutral table with itself is semi-neutral",
        "pass", _run_semi_neutral_product,
    ),
    _universal(
        "prop-5.4-b1-similar-semi-neutral",
        "when the diagonal is constantly zero the similar factor is semi-neutral",
        lambda g: is_semi_neutral(similar_factor(g)),
        hypothesis=_b1_holds,
        needs_zero=True,
    ),
    _universal(
        "cor-5.5-strong-b1-semi-normal",
        "a strong table with constantly-zero diagonal is semi-normal",
        _semi_normal,
        hypothesis=lambda g: is_strong(g) and _b1_holds(g),
        needs_zero=True,
        min_order=2,  # at order 1 both derived factors are semi-neutral
    ),
    _universal(
        "cor-5.6-strong-b1-semi-composite",
        "a strong, constantly-zero-diagonal table that is not itself "
        "semi-neutral is semi-composite",
        _semi_composite,
        hypothesis=lambda g: is_strong(g) and _b1_holds(g) and not is_semi_neutral(g),
        needs_zero=True,
    ),
    _universal(
        "prop-5.9-magma",
        "no symmetric table of order at least 2 factors both ways through "
        "signature and similar",
        lambda g: not _u_normal(g),
        hypothesis=is_abelian,
        min_order=2,
        expected="fail",
    ),
    _universal(
        "prop-5.9-group",
        "no abelian group table of order at least 2 factors both ways through "
        "signature and similar",
        lambda g: not _u_normal(g),
        hypothesis=_is_abelian_group,
        min_order=2,
    ),
]

REGISTRY = {c.id: c for c in CLAIMS}

_ACTIVE_CTX: ClaimContext | None = None


def _run_claim(claim_id):
    claim = REGISTRY[claim_id]
    checked, cexs, note = claim.runner(_ACTIVE_CTX)
    return claim_id, checked, cexs, note


def verify_claims(order: int, sample=None, seed=None, claims=None, workers=None):
    """Run registered claims exhaustively (order <= 3) or on a seeded sample.

    Returns one ClaimReport per claim, in registry order — or, when
    ``claims`` lists specific ids, only those, in the given order.
    """
    global _ACTIVE_CTX
    if claims is None:
        selected = list(CLAIMS)
    else:
        unknown = [c for c in claims if c not in REGISTRY]
        if unknown:
            raise ValueError(f"unknown claim ids: {unknown}")
        selected = [REGISTRY[c] for c in claims]
    if sample is None:
        if order > ENUMERATION_ORDER_LIMIT:
            raise OrderTooLarge(
                f"exhaustive verification supports order <= "
                f"{ENUMERATION_ORDER_LIMIT}; pass a sample count instead"
            )
        mode = "exhaustive"
        samples = None
        all_groupoids(order)  # warm the cache before any fork
    else:
        sample = int(sample)
        if sample < 1:
            raise PreconditionError("sample count must be >= 1")
        mode = "sampled"
        if seed is None:
            seed = 0
        samples = tuple(random_groupoids(order, sample, seed))
    ctx = ClaimContext(order, mode, count=sample, seed=seed, samples=samples)
    weight = ctx.domain_size() * len(selected)
    workers = _resolve_workers(workers, weight)
    _ACTIVE_CTX = ctx
    try:
        if workers == 1 or len(selected) == 1:
            raw = [_run_claim(c.id) for c in selected]
        else:
            with get_context("fork").Pool(min(workers, len(selected))) as pool:
                raw = pool.map(_run_claim, [c.id for c in selected])
    finally:
        _ACTIVE_CTX = None
    reports = []
    for claim, (cid, checked, cexs, note) in zip(selected, raw):
        assert claim.id == cid
        reports.append(ClaimReport(
            claim=claim.id,
            statement=claim.statement,
            order=order,
            mode=mode,
            checked=checked,
            passed=not cexs,
            expected=claim.expected,
            counterexamples=tuple(cexs),
            note=note,
        ))
    return reports
