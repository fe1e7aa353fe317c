"""Finite rings given by Cayley tables.

Elements are the integers ``0 .. n-1`` and index 0 is always the additive
identity.  Every constructor validates its tables before handing back a
:class:`FiniteRing`, so downstream code can assume the ring axioms.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_RING_ORDER = 256

Table = tuple[tuple[int, ...], ...]


class DimensionError(ValueError):
    pass


class RingAxiomError(ValueError):
    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(f"tables do not define a ring: {report.summary()}")


class RingFormatError(ValueError):
    pass


class ElementParseError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{v.axiom} fails at {v.witness}" for v in self.violations)


def _as_table(rows: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(int(v) for v in row) for row in rows)


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(i) for i in hits[0])


def validate_ring(add_table: Sequence[Sequence[int]], mul_table: Sequence[Sequence[int]]) -> ValidationReport:
    """Check every ring axiom exhaustively.

    Each violated axiom is reported once, with its lexicographically smallest
    witness.  Raises :class:`DimensionError` for non-square or mismatched
    tables.
    """
    n = len(add_table)
    for name, table in (("add", add_table), ("mul", mul_table)):
        if len(table) != n or any(len(row) != n for row in table):
            raise DimensionError(f"{name} table is not {n}x{n}")
    if n == 0:
        raise DimensionError("a ring needs at least one element")

    A = np.asarray(add_table, dtype=np.int64)
    M = np.asarray(mul_table, dtype=np.int64)
    out: list[Violation] = []

    for name, T in (("add_closure", A), ("mul_closure", M)):
        w = _first((T < 0) | (T >= n))
        if w is not None:
            out.append(Violation(name, w))
    if out:
        return ValidationReport(tuple(out))

    idx = np.arange(n)
    w = _first((A[0] != idx) | (A[:, 0] != idx))
    if w is not None:
        out.append(Violation("add_identity", w))
    w = _first(A != A.T)
    if w is not None:
        out.append(Violation("add_commutative", w))
    w = _first(~(A == 0).any(axis=1))
    if w is not None:
        out.append(Violation("add_inverse", w))

    checks = (
        # (x+y)+z == x+(y+z)
        ("add_associative", lambda: A[A], lambda: A[idx[:, None, None], A[None, :, :]]),
        # (xy)z == x(yz)
        ("mul_associative", lambda: M[M], lambda: M[idx[:, None, None], M[None, :, :]]),
        # x(y+z) == xy + xz
        ("left_distributive", lambda: M[idx[:, None, None], A[None, :, :]],
         lambda: A[M[:, :, None], M[:, None, :]]),
        # (x+y)z == xz + yz
        ("right_distributive", lambda: M[A], lambda: A[M[:, None, :], M[None, :, :]]),
    )
    for name, lhs, rhs in checks:
        w = _first(lhs() != rhs())
        if w is not None:
            out.append(Violation(name, w))
    return ValidationReport(tuple(out))


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """An immutable finite ring; equality is object identity.

    ``checked=False`` skips axiom validation.  It exists only so test
    harnesses can push deliberately broken tables through the pipeline.
    """

    name: str
    add: Table
    mul: Table
    names: tuple[str, ...] = ()
    generators: tuple[tuple[str, int], ...] = ()
    checked: bool = field(default=True, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "add", _as_table(self.add))
        object.__setattr__(self, "mul", _as_table(self.mul))
        n = len(self.add)
        if not self.names:
            object.__setattr__(self, "names", tuple(str(i) for i in range(n)))
        else:
            object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) != n:
            raise DimensionError(f"{len(self.names)} names for {n} elements")
        if n > MAX_RING_ORDER:
            raise ValueError(f"order {n} exceeds the cap of {MAX_RING_ORDER}")
        if self.checked:
            report = validate_ring(self.add, self.mul)
            if not report.ok:
                raise RingAxiomError(report)

    def __repr__(self):
        return f"FiniteRing({self.name!r}, order={self.order})"

    @property
    def order(self) -> int:
        return len(self.add)

    @property
    def zero(self) -> int:
        return 0

    @property
    def elements(self) -> range:
        return range(self.order)

    # arithmetic helpers derived from the tables

    @cached_property
    def _neg(self) -> tuple[int, ...]:
        return tuple(row.index(0) if 0 in row else -1 for row in self.add)

    def neg(self, x: int) -> int:
        return self._neg[x]

    def plus(self, x: int, y: int) -> int:
        return self.add[x][y]

    def minus(self, x: int, y: int) -> int:
        return self.add[x][self._neg[y]]

    def times(self, x: int, y: int) -> int:
        return self.mul[x][y]

    def multiple(self, k: int, x: int) -> int:
        """``k`` copies of ``x`` added together; negative ``k`` negates."""
        acc = 0
        for _ in range(abs(k)):
            acc = self.add[acc][x]
        return self._neg[acc] if k < 0 else acc

    def additive_order(self, x: int) -> int:
        k, acc = 1, x
        while acc != 0:
            acc = self.add[acc][x]
            k += 1
        return k

    @cached_property
    def add_array(self) -> np.ndarray:
        return np.asarray(self.add, dtype=np.intp)

    @cached_property
    def mul_array(self) -> np.ndarray:
        return np.asarray(self.mul, dtype=np.intp)

    @cached_property
    def commutator_table(self) -> np.ndarray:
        """``C[x, y] = xy - yx``."""
        M = self.mul_array
        neg = np.asarray(self._neg, dtype=np.intp)
        table = self.add_array[M, neg[M.T]]
        table.setflags(write=False)
        return table

    @cached_property
    def _center(self) -> "ElementSet":
        C = self.commutator_table
        return ElementSet(self, frozenset(int(z) for z in np.flatnonzero((C == 0).all(axis=1))))

    @cached_property
    def _commutator_set(self) -> "ElementSet":
        return ElementSet(self, frozenset(int(v) for v in np.unique(self.commutator_table)))

    def element(self, expr: str | int) -> int:
        return parse_element(self, expr)


@dataclass(frozen=True)
class ElementSet:
    ring: FiniteRing = field(compare=False, repr=False)
    members: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        n = self.ring.order
        bad = [m for m in self.members if not 0 <= m < n]
        if bad:
            raise ValueError(f"elements {bad} are not in a ring of order {n}")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __contains__(self, x) -> bool:
        return x in self.members

    def names(self) -> list[str]:
        return [self.ring.names[m] for m in self]


# queries


def commutator(R: FiniteRing, x: int, y: int) -> int:
    return int(R.commutator_table[x, y])


def center(R: FiniteRing) -> ElementSet:
    return R._center


def centralizer(R: FiniteRing, x: int) -> ElementSet:
    row = R.commutator_table[x]
    return ElementSet(R, frozenset(int(y) for y in np.flatnonzero(row == 0)))


def generalized_centralizer(R: FiniteRing, x: int, r: int) -> ElementSet:
    """``{y : [x, y] = r}``; a coset of the centralizer of ``x`` when nonempty."""
    row = R.commutator_table[x]
    return ElementSet(R, frozenset(int(y) for y in np.flatnonzero(row == r)))


def commutator_set(R: FiniteRing) -> ElementSet:
    return R._commutator_set


def additive_span(R: FiniteRing, S: Iterable[int]) -> ElementSet:
    gens = sorted(set(S) | {R.neg(s) for s in S} - {0})
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = R.add[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return ElementSet(R, frozenset(seen))


def commutator_subgroup(R: FiniteRing) -> ElementSet:
    """The additive subgroup ``[R, R]`` generated by all commutators."""
    return additive_span(R, commutator_set(R))


def commutators_with(R: FiniteRing, x: int) -> ElementSet:
    """The additive subgroup ``[x, R]`` generated by ``{[x, y]}``."""
    return additive_span(R, (int(v) for v in R.commutator_table[x]))


def generated_subring(R: FiniteRing, gens: Iterable[int]) -> frozenset[int]:
    members = [0]
    seen = {0}
    for g in gens:
        if g not in seen:
            seen.add(g)
            members.append(g)
    i = 0
    # each new element is combined with everything already found
    while i < len(members):
        x = members[i]
        for j in range(i + 1):
            y = members[j]
            for z in (R.add[x][y], R.mul[x][y], R.mul[y][x], R.neg(x)):
                if z not in seen:
                    seen.add(z)
                    members.append(z)
        i += 1
    return frozenset(seen)


def is_commutative(R: FiniteRing) -> bool:
    return not R.commutator_table.any()


def has_unity(R: FiniteRing) -> int | None:
    M = R.mul_array
    idx = np.arange(R.order)
    for e in range(R.order):
        if (M[e] == idx).all() and (M[:, e] == idx).all():
            return e
    return None


def commutative_subrings(R: FiniteRing, generator_bound: int = 2) -> list[ElementSet]:
    """Commutative subrings generated by at most ``generator_bound`` elements.

    This is a lower-bound provider: subrings needing more generators are
    missed.  Sorted by descending size, then by member list.
    """
    if generator_bound < 1:
        raise ValueError("generator_bound must be at least 1")
    C = R.commutator_table
    found: set[frozenset[int]] = {frozenset({0})}
    for k in range(1, generator_bound + 1):
        for gens in itertools.combinations(range(1, R.order), k):
            if any(C[a, b] for a, b in itertools.combinations(gens, 2)):
                continue
            found.add(generated_subring(R, gens))
    out = []
    for S in found:
        members = sorted(S)
        if not C[np.ix_(members, members)].any():
            out.append(S)
    out.sort(key=lambda s: (-len(s), sorted(s)))
    return [ElementSet(R, s) for s in out]


def ring_isomorphism(R1: FiniteRing, R2: FiniteRing, max_order: int = 64) -> tuple[int, ...] | None:
    """A ring isomorphism ``R1 -> R2`` as an image tuple, or ``None``.

    Backtracks over images of a greedy additive generating set of ``R1``;
    candidates must agree on additive order, centralizer size and whether
    the element is idempotent.
    """
    n = R1.order
    if n != R2.order:
        return None
    if n > max_order:
        raise ValueError(f"ring isomorphism search is capped at order {max_order}")

    def invariant(R, x):
        return (R.additive_order(x), len(centralizer(R, x)), R.mul[x][x] == x, R.mul[x][x] == 0)

    inv1 = [invariant(R1, x) for x in range(n)]
    inv2 = [invariant(R2, x) for x in range(n)]
    if sorted(inv1) != sorted(inv2):
        return None

    gens: list[int] = []
    span = {0}
    for x in sorted(range(1, n), key=lambda x: (-inv1[x][0], x)):
        if x not in span:
            gens.append(x)
            span = set(additive_span(R1, gens))

    def extend(images: list[int]) -> dict[int, int] | None:
        # additive hom on the span of gens[:len(images)], or None on conflict
        f = {0: 0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g, h in zip(gens, images):
                    y, fy = R1.add[x][g], R2.add[f[x]][h]
                    if y in f:
                        if f[y] != fy:
                            return None
                    else:
                        f[y] = fy
                        nxt.append(y)
            frontier = nxt
        if len(set(f.values())) != len(f):
            return None
        return f

    def search(images: list[int]) -> tuple[int, ...] | None:
        f = extend(images)
        if f is None:
            return None
        # multiplicative consistency on the partial domain
        dom = list(f)
        for x in dom:
            for y in dom:
                xy = R1.mul[x][y]
                if xy in f and f[xy] != R2.mul[f[x]][f[y]]:
                    return None
        if len(images) == len(gens):
            return tuple(f[x] for x in range(n))
        g = gens[len(images)]
        for h in range(1, n):
            if inv2[h] == inv1[g] and h not in images:
                found = search(images + [h])
                if found is not None:
                    return found
        return None

    return search([])


# constructors


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _combo_name(coeffs: Sequence[int], gens: Sequence[str]) -> str:
    terms = []
    for c, g in zip(coeffs, gens):
        if c == 1:
            terms.append(g)
        elif c:
            terms.append(f"{c}{g}")
    return "+".join(terms) or "0"


def _vectors(p: int, k: int) -> list[tuple[int, ...]]:
    # index = base-p digits, first coordinate most significant
    return list(itertools.product(range(p), repeat=k))


def _from_vectors(name, vecs, add, mul, names, generators=()) -> FiniteRing:
    index = {v: i for i, v in enumerate(vecs)}
    add_t = [[index[add(u, v)] for v in vecs] for u in vecs]
    mul_t = [[index[mul(u, v)] for v in vecs] for u in vecs]
    return FiniteRing(name, add_t, mul_t, tuple(names), tuple(generators))


def make_Zn(n: int) -> FiniteRing:
    if n < 1:
        raise ValueError("Z_n needs n >= 1")
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    gens = (("1", 1 % n),)
    return FiniteRing(f"Z{n}", add, mul, tuple(str(i) for i in range(n)), gens)


def _rank_ring(p: int, rank: int, letters: str, left: bool, label: str) -> FiniteRing:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if rank < 2:
        raise ValueError("rank must be at least 2")
    if p ** rank > MAX_RING_ORDER:
        raise ValueError(f"order {p ** rank} exceeds the cap of {MAX_RING_ORDER}")
    gens = letters[:rank]
    vecs = _vectors(p, rank)

    def add(u, v):
        return tuple((a + b) % p for a, b in zip(u, v))

    if left:
        # x * y = s(x) y  where s sums the coordinates
        def mul(u, v):
            s = sum(u)
            return tuple(s * b % p for b in v)
    else:
        # x * y = s(y) x
        def mul(u, v):
            s = sum(v)
            return tuple(a * s % p for a in u)

    names = [_combo_name(v, gens) for v in vecs]
    generators = [(g, vecs.index(tuple(int(i == j) for j in range(rank)))) for i, g in enumerate(gens)]
    name = f"{label}{p ** rank}" if rank == 2 else f"{label}{p ** rank}r{rank}"
    return _from_vectors(name, vecs, add, mul, names, generators)


def make_E(p: int, rank: int = 2) -> FiniteRing:
    """``E(p^2) = <a, b : pa = pb = 0, a^2 = a, b^2 = b, ab = a, ba = b>``.

    Element ``i*a + j*b`` has index ``i*p + j``.  ``rank > 2`` gives the
    same construction on more generators (order ``p**rank``).
    """
    return _rank_ring(p, rank, "abcdefgh", left=False, label="E")


def make_F(p: int, rank: int = 2) -> FiniteRing:
    """``F(p^2) = <x, y : px = py = 0, x^2 = x, y^2 = y, xy = y, yx = x>``."""
    return _rank_ring(p, rank, "xyzuvwst", left=True, label="F")


def make_direct_product(R1: FiniteRing, R2: FiniteRing) -> FiniteRing:
    n1, n2 = R1.order, R2.order
    if n1 * n2 > MAX_RING_ORDER:
        raise ValueError(f"order {n1 * n2} exceeds the cap of {MAX_RING_ORDER}")

    def idx(i, j):
        return i * n2 + j

    pairs = [(i, j) for i in range(n1) for j in range(n2)]
    add = [[idx(R1.add[a][c], R2.add[b][d]) for c, d in pairs] for a, b in pairs]
    mul = [[idx(R1.mul[a][c], R2.mul[b][d]) for c, d in pairs] for a, b in pairs]
    names = [f"({R1.names[i]},{R2.names[j]})" for i, j in pairs]
    return FiniteRing(f"{R1.name}x{R2.name}", add, mul, tuple(names))


def _matrix_ring(p: int, upper: bool) -> FiniteRing:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if upper:
        vecs = [(a, b, 0, d) for a, b, d in _vectors(p, 3)]
    else:
        vecs = _vectors(p, 4)
    if len(vecs) > MAX_RING_ORDER:
        raise ValueError(f"order {len(vecs)} exceeds the cap of {MAX_RING_ORDER}")

    def add(u, v):
        return tuple((a + b) % p for a, b in zip(u, v))

    def mul(u, v):
        a, b, c, d = u
        e, f, g, h = v
        return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)

    names = [f"[{a},{b};{c},{d}]" for a, b, c, d in vecs]
    label = f"UT2Z{p}" if upper else f"M2Z{p}"
    return _from_vectors(label, vecs, add, mul, names)


def make_matrix_ring_2x2(p: int) -> FiniteRing:
    """All 2x2 matrices over ``Z_p``, entries indexed row-major."""
    return _matrix_ring(p, upper=False)


def make_upper_triangular_2x2(p: int) -> FiniteRing:
    return _matrix_ring(p, upper=True)


# element expressions

_TERM = re.compile(r"^(?:(-?\d+)\s*\*?\s*)?([A-Za-z_]\w*)$")


def parse_element(R: FiniteRing, expr: str | int) -> int:
    """Resolve an element given as an index, a display name, or ``2a+b``.

    Symbolic sums range over the ring's named generators; ``i*`` may be
    written ``i`` or left out.
    """
    if isinstance(expr, (int, np.integer)):
        if not 0 <= expr < R.order:
            raise ElementParseError(f"index {expr} out of range for {R.name}")
        return int(expr)
    text = expr.strip()
    if text in R.names:
        return R.names.index(text)
    if re.fullmatch(r"\d+", text):
        return parse_element(R, int(text))
    gens = dict(R.generators)
    compact = text.replace(" ", "")
    if not compact:
        raise ElementParseError("empty element expression")
    if not re.fullmatch(r"[+-]?[^+-]+([+-][^+-]+)*", compact):
        raise ElementParseError(f"dangling or doubled sign in {expr!r}")
    acc = 0
    for sign, term in re.findall(r"([+-]?)([^+-]+)", compact):
        m = _TERM.match(term)
        if m is None:
            raise ElementParseError(f"cannot parse term {term!r} in {expr!r}")
        coef = int(m.group(1)) if m.group(1) else 1
        g = m.group(2)
        if g not in gens:
            raise ElementParseError(f"unknown generator {g!r} for {R.name}")
        if sign == "-":
            coef = -coef
        acc = R.add[acc][R.multiple(coef, gens[g])]
    return acc


# ring files


def _normalize_zero(add: list[list[int]], mul: list[list[int]], names: list[str]):
    n = len(add)
    zero = next((e for e in range(n) if all(add[e][x] == x and add[x][e] == x for x in range(n))), None)
    if zero is None or zero == 0:
        return add, mul, names
    perm = list(range(n))
    perm[0], perm[zero] = zero, 0

    def relabel(T):
        return [[perm[T[perm[i]][perm[j]]] for j in range(n)] for i in range(n)]

    return relabel(add), relabel(mul), [names[perm[i]] for i in range(n)]


def loads_ring(text: str, validate: bool = True) -> FiniteRing:
    """Parse the text ring format.

    ::

        ring <name> order <n>
        <n rows of the add table>
        mul
        <n rows of the mul table>
        names            (optional)
        <n display strings>
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise RingFormatError("empty ring file")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "ring" or head[2] != "order":
        raise RingFormatError(f"bad header {lines[0]!r}; expected 'ring <name> order <n>'")
    name = head[1]
    try:
        n = int(head[3])
    except ValueError:
        raise RingFormatError(f"bad order {head[3]!r}") from None
    if n < 1:
        raise RingFormatError("order must be positive")

    def rows(block, what):
        if len(block) != n:
            raise RingFormatError(f"{what} table has {len(block)} rows, expected {n}")
        try:
            out = [[int(t) for t in ln.split()] for ln in block]
        except ValueError as exc:
            raise RingFormatError(f"non-integer entry in {what} table: {exc}") from None
        for ln in out:
            if len(ln) != n:
                raise RingFormatError(f"{what} table row has {len(ln)} entries, expected {n}")
        return out

    add = rows(lines[1:1 + n], "add")
    if len(lines) < 2 + n or lines[1 + n] != "mul":
        raise RingFormatError("missing 'mul' line after the add table")
    mul = rows(lines[2 + n:2 + 2 * n], "mul")
    rest = lines[2 + 2 * n:]
    names = [str(i) for i in range(n)]
    if rest:
        if rest[0].split()[0] != "names":
            raise RingFormatError(f"unexpected line {rest[0]!r}")
        tokens = rest[0].split()[1:] + [t for ln in rest[1:] for t in ln.split()]
        if len(tokens) != n:
            raise RingFormatError(f"{len(tokens)} names for {n} elements")
        names = tokens
    add, mul, names = _normalize_zero(add, mul, names)
    return FiniteRing(name, add, mul, tuple(names), checked=validate)


def dumps_ring(R: FiniteRing) -> str:
    out = [f"ring {R.name} order {R.order}"]
    out += [" ".join(map(str, row)) for row in R.add]
    out.append("mul")
    out += [" ".join(map(str, row)) for row in R.mul]
    out.append("names")
    out += list(R.names)
    return "\n".join(out) + "\n"


def load_ring(path, validate: bool = True) -> FiniteRing:
    with open(path) as fh:
        return loads_ring(fh.read(), validate=validate)
