"""Finite binary systems as square Cayley tables.

A groupoid here is a set {0, .., n-1} with one total binary operation,
stored row-major: ``table[x][y]`` is x∘y (row = left operand).  Element
labels and a distinguished "zero" element are presentation metadata: two
groupoids are equal exactly when their tables are equal, regardless of
labels or zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BadLabels, BadShape, BadZero, ClosureViolation, MissingZero

Table = tuple[tuple[int, ...], ...]


def _freeze_table(rows) -> Table:
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class Groupoid:
    """An order-n magma: validated n×n table over 0..n-1.

    ``labels`` (optional) names the elements in index order; ``zero``
    (optional) is the index of a distinguished element used by the
    logic-algebra axioms.  Neither participates in equality or hashing.
    """

    table: Table
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    zero: int | None = field(default=None, compare=False)

    def __post_init__(self):
        table = _freeze_table(self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0:
            raise BadShape("empty table")
        if any(len(row) != n for row in table):
            raise BadShape(f"table is not {n}x{n}")
        for x, row in enumerate(table):
            for y, v in enumerate(row):
                if not 0 <= v < n:
                    raise ClosureViolation(
                        f"cell ({x},{y}) holds {v}, outside 0..{n - 1}"
                    )
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != n:
                raise BadLabels(f"{len(labels)} labels for {n} elements")
            if len(set(labels)) != n:
                raise BadLabels("duplicate labels")
            if any((not s) or s.split() != [s] for s in labels):
                raise BadLabels("labels must be non-empty and without whitespace")
        if self.zero is not None:
            if not 0 <= self.zero < n:
                raise BadZero(f"zero={self.zero} is not an element index")

    @property
    def order(self) -> int:
        return len(self.table)

    def __eq__(self, other):
        if not isinstance(other, Groupoid):
            return NotImplemented
        return self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    def label_of(self, index: int) -> str:
        """The display name for an element (its index as text if unlabeled)."""
        if self.labels is not None:
            return self.labels[index]
        return str(index)

    def with_metadata(self, labels=None, zero=None) -> "Groupoid":
        """Same table, different presentation metadata."""
        return Groupoid(self.table, labels=labels, zero=zero)

    def __repr__(self):
        rows = ",".join("".join(str(v) for v in row) for row in self.table)
        extra = ""
        if self.labels is not None:
            extra += f", labels={'|'.join(self.labels)}"
        if self.zero is not None:
            extra += f", zero={self.zero}"
        return f"Groupoid({rows}{extra})"


def groupoid(rows, labels=None, zero=None) -> Groupoid:
    """Build a groupoid from any nested iterable of ints.

    ``zero`` may be an element index or (when labels are given) a label.
    """
    table = _freeze_table(rows)
    if labels is not None:
        labels = tuple(str(s) for s in labels)
    if isinstance(zero, str):
        if labels is None or zero not in labels:
            raise BadZero(f"zero label {zero!r} is not an element label")
        zero = labels.index(zero)
    return Groupoid(table, labels=labels, zero=zero)


def left_zero(order: int, labels=None, zero=None) -> Groupoid:
    """The table with x∘y = x everywhere."""
    if order < 1:
        raise BadShape("order must be >= 1")
    return Groupoid(
        tuple(tuple(x for _ in range(order)) for x in range(order)),
        labels=labels, zero=zero,
    )


def right_zero(order: int, labels=None, zero=None) -> Groupoid:
    """The table with x∘y = y everywhere."""
    if order < 1:
        raise BadShape("order must be >= 1")
    return Groupoid(
        tuple(tuple(range(order)) for _ in range(order)),
        labels=labels, zero=zero,
    )


def zero_semigroup(order: int, side: str = "left") -> Groupoid:
    """A projection table: "left" keeps the row element, "right" the column."""
    if side == "left":
        return left_zero(order)
    if side == "right":
        return right_zero(order)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def semi_neutral_groupoid(order: int, zero: int = 0, labels=None) -> Groupoid:
    """The unique semi-neutral table for a given zero: x∘x = zero, x∘y = x."""
    if order < 1:
        raise BadShape("order must be >= 1")
    table = tuple(
        tuple(zero if x == y else x for y in range(order))
        for x in range(order)
    )
    return Groupoid(table, labels=labels, zero=zero)


# --- diagonals ---

@dataclass(frozen=True)
class DiagonalProfile:
    """The four reading orders of a table's two diagonals.

    main   : (x,x) cells, top-left to bottom-right
    anti   : (x, n-1-x) cells, top-right row order
    reverse: main diagonal read backwards
    skew   : anti diagonal read backwards
    """

    main: tuple[int, ...]
    anti: tuple[int, ...]
    reverse: tuple[int, ...]
    skew: tuple[int, ...]


def diagonal_profile(g: Groupoid) -> DiagonalProfile:
    n = g.order
    main = tuple(g.table[x][x] for x in range(n))
    anti = tuple(g.table[x][n - 1 - x] for x in range(n))
    return DiagonalProfile(main=main, anti=anti, reverse=main[::-1], skew=anti[::-1])


# --- predicates ---

def is_idempotent(g: Groupoid) -> bool:
    """x∘x = x for every element."""
    return all(g.table[x][x] == x for x in range(g.order))


def is_strong(g: Groupoid) -> bool:
    """Distinct elements never commute: x ≠ y implies x∘y ≠ y∘x."""
    t = g.table
    n = g.order
    return all(t[x][y] != t[y][x] for x in range(n) for y in range(x + 1, n))


def is_locally_zero(g: Groupoid) -> bool:
    """Every element is idempotent and every 2-element restriction is a
    projection table (one of the two orders)."""
    t = g.table
    n = g.order
    if not is_idempotent(g):
        return False
    for x in range(n):
        for y in range(x + 1, n):
            if (t[x][y], t[y][x]) not in ((x, y), (y, x)):
                return False
    return True


def has_orientation(g: Groupoid) -> bool:
    """Every product lands on one of its operands (and so x∘x = x)."""
    t = g.table
    return all(t[x][y] in (x, y) for x in range(g.order) for y in range(g.order))


def has_twisted_orientation(g: Groupoid) -> bool:
    """Whenever the left operand wins one way it also wins the other:
    x∘y = x implies y∘x = x."""
    t = g.table
    n = g.order
    for x in range(n):
        for y in range(n):
            if t[x][y] == x and t[y][x] != x:
                return False
    return True


def is_bi_diagonal(g: Groupoid) -> bool:
    """The anti-diagonal cells are symmetric: t[i][j] = t[j][i] when
    i + j = n - 1."""
    t = g.table
    n = g.order
    return all(t[i][n - 1 - i] == t[n - 1 - i][i] for i in range(n))


def is_abelian(g: Groupoid) -> bool:
    return all(
        g.table[x][y] == g.table[y][x]
        for x in range(g.order) for y in range(x + 1, g.order)
    )


def is_semi_neutral(g: Groupoid) -> bool:
    """Diagonal pinned to the distinguished element, left projection
    elsewhere: x∘x = 0 and x∘y = x for x ≠ y.  Needs a zero."""
    if g.zero is None:
        raise MissingZero("semi-neutral is defined relative to a zero element")
    t = g.table
    n = g.order
    for x in range(n):
        for y in range(n):
            want = g.zero if x == y else x
            if t[x][y] != want:
                return False
    return True


PREDICATES = {
    "idempotent": is_idempotent,
    "strong": is_strong,
    "locally_zero": is_locally_zero,
    "orientation": has_orientation,
    "twisted_orientation": has_twisted_orientation,
    "bi_diagonal": is_bi_diagonal,
    "abelian": is_abelian,
    "semi_neutral": is_semi_neutral,
}


def check_predicate(g: Groupoid, name: str) -> bool:
    try:
        fn = PREDICATES[name]
    except KeyError:
        raise ValueError(f"unknown predicate {name!r}") from None
    return fn(g)


def predicate_vector(g: Groupoid) -> dict:
    """All predicates at once; semi_neutral is None when no zero is set."""
    out = {}
    for name, fn in PREDICATES.items():
        if name == "semi_neutral" and g.zero is None:
            out[name] = None
        else:
            out[name] = fn(g)
    return out
