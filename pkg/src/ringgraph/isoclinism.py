"""Isoclinisms between finite rings and the graph bijections they induce.

An isoclinism is a pair of additive isomorphisms, ``phi`` between the
quotients by the centres and ``psi`` between the commutator subgroups, that
transports commutators.  With a bijection ``theta`` between the centres it
yields ``alpha(t_i + z) = s_phi(i) + theta(z)``, a vertex bijection between
the r- and psi(r)-noncommuting graphs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphcore import UNDECIDED, Sentinel, build_gamma, node_budget
from .ringcore import FiniteRing, center, commutator_subgroup

MAX_QUOTIENT_ORDER = 16
MAX_DERIVED_ORDER = 16
MAX_GROUP_ORDER = 64


class SearchCapError(ValueError):
    pass


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class AdditiveGroup:
    """A finite abelian group by its addition table; 0 is the identity.

    ``elements[k]`` is the ring element standing for group element ``k``
    (the coset representative, for a quotient).
    """

    add: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.add)

    def element_order(self, g: int) -> int:
        k, acc = 1, g
        while acc != 0:
            acc = self.add[acc][g]
            k += 1
        return k

    def order_profile(self) -> list[int]:
        return sorted(self.element_order(g) for g in range(self.order))


@dataclass(frozen=True)
class CosetDecomposition:
    group: AdditiveGroup
    coset_of: tuple[int, ...]
    transversal: tuple[int, ...]


def quotient_by_center(R: FiniteRing) -> CosetDecomposition:
    """Cosets of the centre in (R, +), each represented by its least element."""
    Z = sorted(center(R))
    coset_of = [-1] * R.order
    transversal: list[int] = []
    for x in R.elements:
        if coset_of[x] < 0:
            k = len(transversal)
            transversal.append(x)
            for z in Z:
                coset_of[R.add[x][z]] = k
    add = tuple(tuple(coset_of[R.add[s][t]] for t in transversal) for s in transversal)
    labels = tuple(R.names[t] + "+Z" for t in transversal)
    return CosetDecomposition(AdditiveGroup(add, labels, tuple(transversal)), tuple(coset_of), tuple(transversal))


def derived_subgroup(R: FiniteRing) -> AdditiveGroup:
    members = list(commutator_subgroup(R))
    pos = {m: k for k, m in enumerate(members)}
    add = tuple(tuple(pos[R.add[a][b]] for b in members) for a in members)
    return AdditiveGroup(add, tuple(R.names[m] for m in members), tuple(members))


def _generators(A: AdditiveGroup) -> list[int]:
    gens: list[int] = []
    span = {0}
    for g in sorted(range(1, A.order), key=lambda g: (-A.element_order(g), g)):
        if g not in span:
            gens.append(g)
            span = _span(A, gens)
    return gens


def _span(A: AdditiveGroup, gens: Sequence[int]) -> set[int]:
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = A.add[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _extend(A: AdditiveGroup, B: AdditiveGroup, gens: Sequence[int], images: Sequence[int]) -> dict[int, int] | None:
    """The homomorphism on span(gens) sending gens to images, if well defined and injective."""
    f = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, h in zip(gens, images):
                y, fy = A.add[x][g], B.add[f[x]][h]
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


def additive_isomorphisms(A: AdditiveGroup, B: AdditiveGroup) -> Iterator[tuple[int, ...]]:
    """Every isomorphism A -> B, as image tuples, in a deterministic order.

    Generators of A are chosen greedily; each partial assignment of
    generator images is extended to its span and abandoned on the first
    inconsistency.
    """
    if A.order != B.order:
        return
    if A.order > MAX_GROUP_ORDER:
        raise SearchCapError(f"group order {A.order} exceeds {MAX_GROUP_ORDER}")
    if A.order_profile() != B.order_profile():
        return
    gens = _generators(A)
    orders_b = [B.element_order(h) for h in range(B.order)]

    def walk(images: list[int]):
        if _extend(A, B, gens[:len(images)], images) is None:
            return
        if len(images) == len(gens):
            f = _extend(A, B, gens, images)
            yield tuple(f[x] for x in range(A.order))
            return
        want = A.element_order(gens[len(images)])
        for h in range(1, B.order):
            if orders_b[h] == want and h not in images:
                yield from walk(images + [h])

    yield from walk([])


@dataclass(frozen=True)
class IsoclinismWitness:
    """``phi`` maps coset indices; ``psi``, ``theta``, ``alpha`` map ring elements."""

    phi: tuple[int, ...]
    psi: dict[int, int]
    theta: dict[int, int] | None
    alpha: tuple[int, ...] | None
    transversal1: tuple[int, ...]
    transversal2: tuple[int, ...]

    def to_json(self) -> str:
        def pairs(d):
            if d is None:
                return None
            keys = sorted(d)
            return {"domain": keys, "image": [d[k] for k in keys]}

        doc = {
            "phi": list(self.phi),
            "psi": pairs(self.psi),
            "theta": pairs(self.theta),
            "alpha": None if self.alpha is None else list(self.alpha),
            "transversal1": list(self.transversal1),
            "transversal2": list(self.transversal2),
        }
        return json.dumps(doc, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "IsoclinismWitness":
        doc = json.loads(text)

        def unpairs(d):
            return None if d is None else dict(zip(d["domain"], d["image"]))

        return cls(
            phi=tuple(doc["phi"]),
            psi=unpairs(doc["psi"]),
            theta=unpairs(doc["theta"]),
            alpha=None if doc["alpha"] is None else tuple(doc["alpha"]),
            transversal1=tuple(doc["transversal1"]),
            transversal2=tuple(doc["transversal2"]),
        )


def _induced_alpha(R1, R2, Q1, Q2, phi, theta) -> tuple[int, ...]:
    alpha = []
    for x in R1.elements:
        i = Q1.coset_of[x]
        z = R1.minus(x, Q1.transversal[i])
        alpha.append(R2.add[Q2.transversal[phi[i]]][theta[z]])
    return tuple(alpha)


def _package(R1, R2, Q1, Q2, phi, psi) -> IsoclinismWitness:
    Z1, Z2 = sorted(center(R1)), sorted(center(R2))
    theta = alpha = None
    if len(Z1) == len(Z2):
        theta = dict(zip(Z1, Z2))
        alpha = _induced_alpha(R1, R2, Q1, Q2, phi, theta)
    return IsoclinismWitness(tuple(phi), dict(psi), theta, alpha, Q1.transversal, Q2.transversal)


def identity_witness(R: FiniteRing) -> IsoclinismWitness:
    Q = quotient_by_center(R)
    D = commutator_subgroup(R)
    return _package(R, R, Q, Q, tuple(range(Q.group.order)), {d: d for d in D})


def find_isoclinism(R1: FiniteRing, R2: FiniteRing, budget: int | None = None) -> IsoclinismWitness | None | Sentinel:
    """Search for an isoclinism R1 -> R2.

    Returns a witness, None if none exists, or UNDECIDED if more than
    ``budget`` candidate quotient maps were examined.  ``theta`` and
    ``alpha`` are only filled in when the centres have equal size.
    """
    if R1 is R2:
        return identity_witness(R1)
    Q1, Q2 = quotient_by_center(R1), quotient_by_center(R2)
    D1, D2 = commutator_subgroup(R1), commutator_subgroup(R2)
    if Q1.group.order != Q2.group.order or len(D1) != len(D2):
        return None
    if Q1.group.order > MAX_QUOTIENT_ORDER or len(D1) > MAX_DERIVED_ORDER:
        raise SearchCapError(
            f"quotient order {Q1.group.order} / derived order {len(D1)} exceeds the isoclinism search cap"
        )
    limit = node_budget(budget)
    C1, C2 = R1.commutator_table, R2.commutator_table
    t1, t2 = Q1.transversal, Q2.transversal
    k = Q1.group.order
    gens1 = sorted(set(int(c) for c in C1.ravel()) - {0})
    tried = 0
    for phi in additive_isomorphisms(Q1.group, Q2.group):
        tried += 1
        if tried > limit:
            return UNDECIDED
        psi: dict[int, int] = {0: 0}
        ok = True
        for i in range(k):
            for j in range(k):
                c1 = int(C1[t1[i], t1[j]])
                c2 = int(C2[t2[phi[i]], t2[phi[j]]])
                if psi.setdefault(c1, c2) != c2:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        # psi is pinned on the commutators, which generate [R1, R1]
        full = _extend_on_ring(R1, R2, gens1, [psi[g] for g in gens1])
        if full is None or set(full) != set(D1) or set(full.values()) != set(D2):
            continue
        if any(full[c] != v for c, v in psi.items()):
            continue
        return _package(R1, R2, Q1, Q2, phi, full)
    return None


def _extend_on_ring(R1, R2, gens, images) -> dict[int, int] | None:
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


def compatibility_violations(w: IsoclinismWitness, R1: FiniteRing, R2: FiniteRing) -> list[tuple[int, int]]:
    """Pairs (u, v) of R1 where psi([u, v]) differs from [u', v'].

    Checked over all of R1 x R1, with u' and v' the chosen representatives
    of the image cosets.
    """
    Q1 = quotient_by_center(R1)
    t2 = w.transversal2
    bad = []
    for u in R1.elements:
        for v in R1.elements:
            c1 = int(R1.commutator_table[u, v])
            up, vp = t2[w.phi[Q1.coset_of[u]]], t2[w.phi[Q1.coset_of[v]]]
            if w.psi.get(c1) != int(R2.commutator_table[up, vp]):
                bad.append((u, v))
    return bad


def verify_witness(w: IsoclinismWitness, R1: FiniteRing, R2: FiniteRing, r: int) -> bool:
    """Does alpha carry Gamma_{R1}^r exactly onto Gamma_{R2}^{psi(r)}?"""
    if r not in w.psi:
        raise DomainError(f"{R1.names[r]} is not in [R1, R1]")
    if w.alpha is None:
        raise DomainError("witness has no vertex bijection (centres differ in size)")
    alpha = w.alpha
    if sorted(alpha) != list(range(R2.order)):
        return False
    G1 = build_gamma(R1, r)
    G2 = build_gamma(R2, w.psi[r])
    for x in range(R1.order):
        for y in range(x + 1, R1.order):
            if G1.adjacent(x, y) != G2.adjacent(alpha[x], alpha[y]):
                return False
    return True
