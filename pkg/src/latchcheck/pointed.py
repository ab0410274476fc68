"""Finite pointed sets with all the finite limits and colimits used here.

Every higher-level check in the package bottoms out in these tables.
Conventions, fixed once:

* elements of a pointed set are the indices 0..size-1 and the basepoint
  is always index 0;
* maps are total tables of codomain indices with table[0] == 0;
* quotients relabel canonically: classes are ordered by their least
  member, so the basepoint class is index 0 and equal constructions
  yield equal tables;
* all values are immutable after construction and operations are pure.

Optional labels are witness decoration only; they never participate in
equality.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .reports import Witness


class MismatchError(ValueError):
    """Domain/codomain (or truncation) mismatch between composed pieces."""


@dataclass(frozen=True)
class PointedSet:
    size: int
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError(f"pointed set needs size >= 1, got {self.size}")
        if self.labels is not None and len(self.labels) != self.size:
            raise ValueError("label table length must equal size")

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return "*" if i == 0 else f"e{i}"


POINT = PointedSet(1, labels=("*",))


@dataclass(frozen=True)
class PointedMap:
    dom: PointedSet
    cod: PointedSet
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.table) != self.dom.size:
            raise ValueError(
                f"table length {len(self.table)} != domain size {self.dom.size}"
            )
        if self.table[0] != 0:
            raise ValueError("maps must send basepoint to basepoint")
        if min(self.table) < 0 or max(self.table) >= self.cod.size:
            bad = next(i for i, v in enumerate(self.table) if not 0 <= v < self.cod.size)
            raise ValueError(
                f"table[{bad}]={self.table[bad]} outside codomain of size {self.cod.size}"
            )

    def __call__(self, i: int) -> int:
        return self.table[i]


def identity(a: PointedSet) -> PointedMap:
    return PointedMap(a, a, tuple(range(a.size)))


def zero_map(a: PointedSet, b: PointedSet) -> PointedMap:
    return PointedMap(a, b, (0,) * a.size)


def compose(f: PointedMap, g: PointedMap) -> PointedMap:
    """f followed by g: result.table[i] = g.table[f.table[i]]."""
    if f.cod != g.dom:
        raise MismatchError("compose: f.cod != g.dom")
    return PointedMap(f.dom, g.cod, tuple(g.table[v] for v in f.table))


def mono_witness(f: PointedMap) -> tuple[int, int] | None:
    """Lexicographically least colliding pair, non-basepoint pairs preferred.

    Returns None when the table is injective.  A pair involving the
    basepoint (index 0) is reported only when no two non-basepoint
    elements collide.
    """
    occurrences: dict[int, list[int]] = {}
    for i, v in enumerate(f.table):
        hits = occurrences.setdefault(v, [])
        if len(hits) < 3:
            hits.append(i)
    best: tuple[int, int] | None = None
    base_pair: tuple[int, int] | None = None
    for hits in occurrences.values():
        if len(hits) < 2:
            continue
        pair = (hits[0], hits[1])
        if hits[0] == 0:
            base_pair = pair
            if len(hits) >= 3:
                pair = (hits[1], hits[2])
            else:
                continue
        if best is None or pair < best:
            best = pair
    return best if best is not None else base_pair


def is_mono(f: PointedMap) -> bool:
    return mono_witness(f) is None


def epi_missed(f: PointedMap) -> int | None:
    """Least codomain index not hit, or None if f is surjective."""
    hit = [False] * f.cod.size
    for v in f.table:
        hit[v] = True
    for i, h in enumerate(hit):
        if not h:
            return i
    return None


def is_epi(f: PointedMap) -> bool:
    return epi_missed(f) is None


def is_iso(f: PointedMap) -> bool:
    return f.dom.size == f.cod.size and is_mono(f)


def invert(f: PointedMap) -> PointedMap:
    if not is_iso(f):
        raise ValueError("invert: map is not an isomorphism")
    table = [0] * f.cod.size
    for i, v in enumerate(f.table):
        table[v] = i
    return PointedMap(f.cod, f.dom, tuple(table))


def mono_pair_witness(f: PointedMap, location: tuple[tuple[str, int], ...],
                      describe: Callable[[int], str] | None = None) -> Witness | None:
    pair = mono_witness(f)
    if pair is None:
        return None
    if describe is None:
        prov = f"elements {f.dom.label(pair[0])} and {f.dom.label(pair[1])} share image {f.cod.label(f.table[pair[0]])}"
    else:
        prov = f"{describe(pair[0])} and {describe(pair[1])} share image index {f.table[pair[0]]}"
    return Witness(location=location, pair=pair, provenance=prov)


@dataclass(frozen=True)
class CoconeResult:
    """A colimit object with its legs and the universal factorization.

    factor takes one competing leg per defining leg (maps out of the
    original diagram's objects, commuting with the diagram) and returns
    the unique mediating map out of obj.  It raises MismatchError when
    the competing cone does not commute, which doubles as a dynamic
    well-definedness assertion everywhere quotients are extended.
    """

    obj: PointedSet
    legs: tuple[PointedMap, ...]
    factor: Callable[[Sequence[PointedMap]], PointedMap] = field(compare=False)


def wedge(parts: Sequence[PointedSet]) -> CoconeResult:
    """Coproduct: one basepoint plus the disjoint non-base parts, in order."""
    offsets: list[int] = []
    total = 1
    for p in parts:
        offsets.append(total - 1)
        total += p.size - 1
    obj = PointedSet(total)
    legs = tuple(
        PointedMap(p, obj, (0,) + tuple(offsets[j] + i for i in range(1, p.size)))
        for j, p in enumerate(parts)
    )

    def factor(competing: Sequence[PointedMap]) -> PointedMap:
        if len(competing) != len(parts):
            raise MismatchError("wedge.factor: wrong number of legs")
        cod = competing[0].cod if competing else POINT
        table = [0] * obj.size
        for leg, comp in zip(legs, competing):
            if comp.dom != leg.dom or comp.cod != cod:
                raise MismatchError("wedge.factor: leg endpoints do not match")
            for i in range(1, leg.dom.size):
                table[leg.table[i]] = comp.table[i]
        return PointedMap(obj, cod, tuple(table))

    return CoconeResult(obj=obj, legs=legs, factor=factor)


def wedge_split(parts: Sequence[PointedSet], idx: int) -> tuple[int, int]:
    """Inverse of the wedge injections: global index -> (part, local index)."""
    if idx == 0:
        return (0, 0)
    for j, p in enumerate(parts):
        if idx < p.size:
            return (j, idx)
        idx -= p.size - 1
    raise IndexError("wedge_split: index out of range")


def smash_sets(a: PointedSet, b: PointedSet) -> PointedSet:
    """Smash product: pairs with either coordinate at basepoint collapsed.

    The canonical pairing is smash_index: (i, j) with i, j >= 1 goes to
    1 + (i-1)*(b.size-1) + (j-1); anything with a basepoint coordinate
    goes to 0.  smash_split inverts it on non-basepoint indices.
    """
    labels = None
    if a.labels is not None and b.labels is not None:
        labels = ["*"]
        for i in range(1, a.size):
            for j in range(1, b.size):
                labels.append(f"{a.labels[i]}∧{b.labels[j]}")
        labels = tuple(labels)
    return PointedSet((a.size - 1) * (b.size - 1) + 1, labels=labels)


def smash_index(a: PointedSet, b: PointedSet, i: int, j: int) -> int:
    if i == 0 or j == 0:
        return 0
    return 1 + (i - 1) * (b.size - 1) + (j - 1)


def smash_split(a: PointedSet, b: PointedSet, idx: int) -> tuple[int, int]:
    if idx == 0:
        return (0, 0)
    q, r = divmod(idx - 1, b.size - 1)
    return (q + 1, r + 1)


def smash_map(f: PointedMap, g: PointedMap) -> PointedMap:
    dom = smash_sets(f.dom, g.dom)
    cod = smash_sets(f.cod, g.cod)
    table = [0] * dom.size
    gw = g.dom.size - 1
    cw = g.cod.size - 1
    ft, gt = f.table, g.table
    pos = 1
    for i in range(1, f.dom.size):
        fi = ft[i]
        if fi == 0:
            pos += gw
            continue
        base = 1 + (fi - 1) * cw
        for j in range(1, g.dom.size):
            gj = gt[j]
            if gj:
                table[pos] = base + gj - 1
            pos += 1
    return PointedMap(dom, cod, tuple(table))


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return
        # the least index of a class stays its representative
        if ri < rj:
            self.parent[rj] = ri
        else:
            self.parent[ri] = rj


def quotient_by_pairs(target: PointedSet, pairs: Sequence[tuple[int, int]]) -> PointedMap:
    """Canonical quotient of target by the relation generated by pairs.

    Classes are relabelled by least representative, ascending, so the
    basepoint class is index 0.
    """
    uf = _UnionFind(target.size)
    for x, y in pairs:
        uf.union(x, y)
    roots = sorted({uf.find(i) for i in range(target.size)})
    index_of_root = {r: k for k, r in enumerate(roots)}
    table = tuple(index_of_root[uf.find(i)] for i in range(target.size))
    return PointedMap(target, PointedSet(len(roots)), table)


def coequalizer(f: PointedMap, g: PointedMap) -> CoconeResult:
    """Coequalizer of a parallel pair, computed by union-find."""
    if f.dom != g.dom or f.cod != g.cod:
        raise MismatchError("coequalizer: maps are not a parallel pair")
    q = quotient_by_pairs(f.cod, list(zip(f.table, g.table)))
    obj = q.cod

    # least representative of each class, for factoring
    reps = [-1] * obj.size
    for i, c in enumerate(q.table):
        if reps[c] < 0:
            reps[c] = i

    def factor(competing: Sequence[PointedMap]) -> PointedMap:
        (m,) = competing
        if m.dom != f.cod:
            raise MismatchError("coequalizer.factor: wrong domain")
        table = tuple(m.table[reps[c]] for c in range(obj.size))
        for i, c in enumerate(q.table):
            if m.table[i] != table[c]:
                raise MismatchError(
                    "coequalizer.factor: competing map does not coequalize the pair"
                )
        return PointedMap(obj, m.cod, table)

    return CoconeResult(obj=obj, legs=(q,), factor=factor)


def pushout(f: PointedMap, g: PointedMap) -> CoconeResult:
    """Pushout of B <-f- A -g-> C: coequalize the two composites into B v C."""
    if f.dom != g.dom:
        raise MismatchError("pushout: maps must share their domain")
    w = wedge([f.cod, g.cod])
    co = coequalizer(compose(f, w.legs[0]), compose(g, w.legs[1]))
    q = co.legs[0]
    leg_b = compose(w.legs[0], q)
    leg_c = compose(w.legs[1], q)

    def factor(competing: Sequence[PointedMap]) -> PointedMap:
        u, v = competing
        return co.factor([w.factor([u, v])])

    return CoconeResult(obj=co.obj, legs=(leg_b, leg_c), factor=factor)


@dataclass(frozen=True)
class PullbackResult:
    obj: PointedSet
    proj1: PointedMap
    proj2: PointedMap
    pairs: tuple[tuple[int, int], ...]


def pullback(f: PointedMap, g: PointedMap) -> PullbackResult:
    """Pullback of B -f-> D <-g- C: pairs with equal image, basepoint (0,0)."""
    if f.cod != g.cod:
        raise MismatchError("pullback: maps must share their codomain")
    pairs = [
        (b, c)
        for b in range(f.dom.size)
        for c in range(g.dom.size)
        if f.table[b] == g.table[c]
    ]
    pairs.sort()
    assert pairs[0] == (0, 0)
    obj = PointedSet(len(pairs))
    proj1 = PointedMap(obj, f.dom, tuple(b for b, _ in pairs))
    proj2 = PointedMap(obj, g.dom, tuple(c for _, c in pairs))
    return PullbackResult(obj=obj, proj1=proj1, proj2=proj2, pairs=tuple(pairs))
