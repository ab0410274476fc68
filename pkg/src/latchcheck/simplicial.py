"""Truncated finite pointed simplicial sets and bisimplicial sets.

A simplicial set here is a dimension-indexed family of pointed sets with
face and degeneracy tables.  Truncation is a hard contract: trunc is the
top retained dimension, every operation states the largest dimension at
which its output is meaningful, and nothing ever reads above it.

Colimits (wedge, coequalizer, pushout) are computed dimensionwise by the
pointed-set engine; the induced operators are produced through the
universal property, so an ill-defined induction raises instead of
silently producing garbage.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from . import pointed
from .pointed import (
    MismatchError,
    PointedMap,
    PointedSet,
    compose,
    identity,
    mono_witness,
    zero_map,
)
from .reports import CheckReport, Witness, failed, passed


class TruncationError(ValueError):
    """An index exceeded the stated truncation of its object."""


@dataclass(frozen=True)
class SimplicialSet:
    trunc: int
    levels: tuple[PointedSet, ...]
    faces: tuple[tuple[PointedMap, ...], ...]
    degens: tuple[tuple[PointedMap, ...], ...]

    def __post_init__(self) -> None:
        d = self.trunc
        if d < 0:
            raise ValueError("truncation must be nonnegative")
        if len(self.levels) != d + 1:
            raise ValueError("levels must cover dimensions 0..trunc")
        if len(self.faces) != d + 1 or len(self.degens) != d + 1:
            raise ValueError("operator families must cover dimensions 0..trunc")
        if self.faces[0] != ():
            raise ValueError("dimension 0 has no faces")
        if self.degens[d] != ():
            raise ValueError("no degeneracies out of the top dimension")
        for k in range(1, d + 1):
            if len(self.faces[k]) != k + 1:
                raise ValueError(f"level {k} needs {k + 1} faces")
            for m in self.faces[k]:
                if m.dom != self.levels[k] or m.cod != self.levels[k - 1]:
                    raise ValueError(f"face at level {k} has wrong endpoints")
        for k in range(d):
            if len(self.degens[k]) != k + 1:
                raise ValueError(f"level {k} needs {k + 1} degeneracies")
            for m in self.degens[k]:
                if m.dom != self.levels[k] or m.cod != self.levels[k + 1]:
                    raise ValueError(f"degeneracy at level {k} has wrong endpoints")

    def level(self, k: int) -> PointedSet:
        if not 0 <= k <= self.trunc:
            raise TruncationError(f"dimension {k} exceeds truncation {self.trunc}")
        return self.levels[k]

    def face(self, k: int, i: int) -> PointedMap:
        return self.faces[k][i]

    def degen(self, k: int, i: int) -> PointedMap:
        return self.degens[k][i]


@dataclass(frozen=True)
class SimplicialMap:
    dom: SimplicialSet
    cod: SimplicialSet
    components: tuple[PointedMap, ...]

    def __post_init__(self) -> None:
        if self.dom.trunc != self.cod.trunc:
            raise MismatchError("simplicial map endpoints must share truncation")
        if len(self.components) != self.dom.trunc + 1:
            raise MismatchError("one component per dimension required")
        for k, m in enumerate(self.components):
            if m.dom != self.dom.levels[k] or m.cod != self.cod.levels[k]:
                raise MismatchError(f"component {k} has wrong endpoints")

    def at(self, k: int) -> PointedMap:
        return self.components[k]


def sset_identity(a: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(a, a, tuple(identity(p) for p in a.levels))


def sset_zero_map(a: SimplicialSet, b: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(a, b, tuple(zero_map(p, q) for p, q in zip(a.levels, b.levels)))


def compose_sset_maps(f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    if f.cod != g.dom:
        raise MismatchError("compose: f.cod != g.dom")
    return SimplicialMap(f.dom, g.cod, tuple(compose(a, b) for a, b in zip(f.components, g.components)))


def sset_maps_equal(f: SimplicialMap, g: SimplicialMap) -> bool:
    return f.components == g.components and f.dom == g.dom and f.cod == g.cod


def validate_sset(s: SimplicialSet) -> CheckReport:
    """Check every simplicial identity that fits inside the truncation.

    Failure names the identity family, the indices (k, i, j) and the
    least element where the two composites differ.
    """
    prop = "simplicial-identities"

    def mismatch(kind: str, k: int, i: int, j: int, lhs: PointedMap, rhs: PointedMap) -> CheckReport:
        elt = next(e for e in range(lhs.dom.size) if lhs.table[e] != rhs.table[e])
        w = Witness(
            location=(("k", k), ("i", i), ("j", j), ("element", elt)),
            pair=(lhs.table[elt], rhs.table[elt]),
            provenance=f"{kind} identity fails at (k,i,j)=({k},{i},{j}) on element {lhs.dom.label(elt)}",
        )
        return failed(prop, w, kind)

    d = s.trunc
    for k in range(2, d + 1):
        for j in range(k + 1):
            for i in range(j):
                lhs = compose(s.faces[k][j], s.faces[k - 1][i])
                rhs = compose(s.faces[k][i], s.faces[k - 1][j - 1])
                if lhs != rhs:
                    return mismatch("face-face", k, i, j, lhs, rhs)
    for k in range(d - 1):
        for j in range(k + 1):
            for i in range(j + 1):
                lhs = compose(s.degens[k][j], s.degens[k + 1][i])
                rhs = compose(s.degens[k][i], s.degens[k + 1][j + 1])
                if lhs != rhs:
                    return mismatch("degeneracy-degeneracy", k, i, j, lhs, rhs)
    for k in range(d):
        for j in range(k + 1):
            for i in range(k + 2):
                lhs = compose(s.degens[k][j], s.faces[k + 1][i])
                if i in (j, j + 1):
                    rhs = identity(s.levels[k])
                elif i < j:
                    rhs = compose(s.faces[k][i], s.degens[k - 1][j - 1])
                else:
                    rhs = compose(s.faces[k][i - 1], s.degens[k - 1][j])
                if lhs != rhs:
                    return mismatch("face-degeneracy", k, i, j, lhs, rhs)
    return passed(prop, detail=f"all identities hold up to dimension {d}")


def validate_sset_map(f: SimplicialMap) -> CheckReport:
    prop = "simplicial-map"
    for k in range(1, f.dom.trunc + 1):
        for i in range(k + 1):
            if compose(f.dom.faces[k][i], f.components[k - 1]) != compose(f.components[k], f.cod.faces[k][i]):
                return failed(prop, None, "face-commutation", f"component {k} vs face {i}")
    for k in range(f.dom.trunc):
        for i in range(k + 1):
            if compose(f.dom.degens[k][i], f.components[k + 1]) != compose(f.components[k], f.cod.degens[k][i]):
                return failed(prop, None, "degeneracy-commutation", f"component {k} vs degeneracy {i}")
    return passed(prop)


def is_mono_ssetmap(f: SimplicialMap, prop: str = "levelwise-mono",
                    location: tuple[tuple[str, int], ...] = (),
                    describe: Callable[[int, int], str] | None = None) -> CheckReport:
    """Pass iff every component is injective; witness carries (dim, pair)."""
    for k, m in enumerate(f.components):
        pair = mono_witness(m)
        if pair is not None:
            if describe is not None:
                prov = f"{describe(k, pair[0])} and {describe(k, pair[1])} share image index {m.table[pair[0]]}"
            else:
                prov = (f"{m.dom.label(pair[0])} and {m.dom.label(pair[1])} "
                        f"share image {m.cod.label(m.table[pair[0]])}")
            w = Witness(location=location + (("dim", k),), pair=pair, provenance=prov)
            return failed(prop, w, "mono")
    return passed(prop)


def is_iso_ssetmap(f: SimplicialMap) -> bool:
    return all(pointed.is_iso(m) for m in f.components)


# ---------------------------------------------------------------------------
# basic constructions


def point_sset(trunc: int) -> SimplicialSet:
    pt = PointedSet(1, labels=("*",))
    ident = identity(pt)
    return SimplicialSet(
        trunc=trunc,
        levels=(pt,) * (trunc + 1),
        faces=((),) + tuple((ident,) * (k + 1) for k in range(1, trunc + 1)),
        degens=tuple((ident,) * (k + 1) for k in range(trunc)) + ((),),
    )


def constant_sset(p: PointedSet, trunc: int) -> SimplicialSet:
    """The constant (discrete) simplicial set on a pointed set."""
    ident = identity(p)
    return SimplicialSet(
        trunc=trunc,
        levels=(p,) * (trunc + 1),
        faces=((),) + tuple((ident,) * (k + 1) for k in range(1, trunc + 1)),
        degens=tuple((ident,) * (k + 1) for k in range(trunc)) + ((),),
    )


def constant_sset_map(f: PointedMap, trunc: int) -> SimplicialMap:
    return SimplicialMap(constant_sset(f.dom, trunc), constant_sset(f.cod, trunc),
                         (f,) * (trunc + 1))


def _circle_label(k: int, a: int) -> str:
    return "0" * a + "1" * (k + 1 - a)


@lru_cache(maxsize=None)
def circle(trunc: int) -> SimplicialSet:
    """The simplicial circle: the interval with its endpoints collapsed.

    Nondegenerate cells: the basepoint and one 1-simplex.  At dimension
    k >= 1 the non-basepoint k-simplices are the nonconstant monotone
    0/1-strings of length k+1, indexed by their number of zeros.
    """
    levels = [PointedSet(1, labels=("*",))]
    for k in range(1, trunc + 1):
        levels.append(PointedSet(k + 1, labels=("*",) + tuple(_circle_label(k, a) for a in range(1, k + 1))))
    faces: list[tuple[PointedMap, ...]] = [()]
    degens: list[tuple[PointedMap, ...]] = []
    for k in range(1, trunc + 1):
        row = []
        for i in range(k + 1):
            table = [0]
            for a in range(1, k + 1):
                b = a - 1 if i < a else a
                table.append(0 if b == 0 or b == k else b)
            row.append(PointedMap(levels[k], levels[k - 1], tuple(table)))
        faces.append(tuple(row))
    for k in range(trunc):
        row = []
        for i in range(k + 1):
            table = [0]
            for a in range(1, k + 1):
                table.append(a + 1 if i < a else a)
            row.append(PointedMap(levels[k], levels[k + 1], tuple(table)))
        degens.append(tuple(row))
    degens.append(())
    return SimplicialSet(trunc=trunc, levels=tuple(levels), faces=tuple(faces), degens=tuple(degens))


def _sphere_codec(n: int, k: int):
    """encode/decode between circle-index tuples (entries 1..k) and
    non-basepoint sphere(n) indices at dimension k."""

    def encode(tup: Sequence[int]) -> int:
        idx = 0
        for a in tup:
            if a == 0:
                return 0
            idx = idx * k + (a - 1)
        return idx + 1

    def decode(idx: int) -> tuple[int, ...]:
        idx -= 1
        out = []
        for _ in range(n):
            idx, r = divmod(idx, k)
            out.append(r + 1)
        out.reverse()
        # idx was consumed most-significant first during encode
        return tuple(out)

    return encode, decode


@lru_cache(maxsize=None)
def sphere(n: int, trunc: int) -> SimplicialSet:
    """n-fold smash power of the circle (sphere(0) is the constant
    two-point simplicial set).

    At dimension k >= 1 the non-basepoint cells are tuples of k-simplices
    of the circle, one per smash factor, encoded most-significant factor
    first; any basepoint coordinate collapses the whole tuple.
    """
    if n < 0:
        raise ValueError("sphere needs n >= 0")
    if n == 0:
        return constant_sset(PointedSet(2, labels=("*", "e")), trunc)
    circ = circle(trunc)
    levels = [PointedSet(1, labels=("*",))]
    for k in range(1, trunc + 1):
        encode, decode = _sphere_codec(n, k)
        labels = ["*"]
        for idx in range(1, k**n + 1):
            labels.append("∧".join(_circle_label(k, a) for a in decode(idx)))
        levels.append(PointedSet(k**n + 1, labels=tuple(labels)))
    faces: list[tuple[PointedMap, ...]] = [()]
    for k in range(1, trunc + 1):
        encode_lo, _ = _sphere_codec(n, k - 1) if k > 1 else (lambda t: 0, None)
        _, decode = _sphere_codec(n, k)
        row = []
        for i in range(k + 1):
            ftab = circ.faces[k][i].table
            table = [0] + [
                encode_lo([ftab[a] for a in decode(idx)]) if k > 1 else 0
                for idx in range(1, k**n + 1)
            ]
            row.append(PointedMap(levels[k], levels[k - 1], tuple(table)))
        faces.append(tuple(row))
    degens: list[tuple[PointedMap, ...]] = []
    for k in range(trunc):
        _, decode = _sphere_codec(n, k) if k > 0 else (None, None)
        encode_hi, _ = _sphere_codec(n, k + 1)
        row = []
        for i in range(k + 1):
            stab = circ.degens[k][i].table
            if k == 0:
                table = [0]
            else:
                table = [0] + [
                    encode_hi([stab[a] for a in decode(idx)])
                    for idx in range(1, k**n + 1)
                ]
            row.append(PointedMap(levels[k], levels[k + 1], tuple(table)))
        degens.append(tuple(row))
    degens.append(())
    return SimplicialSet(trunc=trunc, levels=tuple(levels), faces=tuple(faces), degens=tuple(degens))


def sphere_encode_tuple(n: int, k: int, tup: Sequence[int]) -> int:
    if n == 0:
        raise ValueError("sphere(0) has no tuple codec")
    if k == 0 or any(a == 0 for a in tup):
        return 0
    encode, _ = _sphere_codec(n, k)
    return encode(tup)


def sphere_decode_index(n: int, k: int, idx: int) -> tuple[int, ...]:
    if idx == 0:
        return (0,) * n
    _, decode = _sphere_codec(n, k)
    return decode(idx)


@lru_cache(maxsize=512)
def smash_ssets(a: SimplicialSet, b: SimplicialSet) -> SimplicialSet:
    """Levelwise smash with coordinatewise (diagonal) operators.

    Memoized: results are immutable and smash domains (structure maps,
    tensor summands) recur constantly.
    """
    if a.trunc != b.trunc:
        raise MismatchError("smash: truncation mismatch")
    levels = tuple(pointed.smash_sets(p, q) for p, q in zip(a.levels, b.levels))
    faces: list[tuple[PointedMap, ...]] = [()]
    for k in range(1, a.trunc + 1):
        faces.append(tuple(
            pointed.smash_map(a.faces[k][i], b.faces[k][i]) for i in range(k + 1)
        ))
    degens: list[tuple[PointedMap, ...]] = []
    for k in range(a.trunc):
        degens.append(tuple(
            pointed.smash_map(a.degens[k][i], b.degens[k][i]) for i in range(k + 1)
        ))
    degens.append(())
    return SimplicialSet(a.trunc, levels, tuple(faces), tuple(degens))


def smash_sset_maps(f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    return SimplicialMap(
        smash_ssets(f.dom, g.dom),
        smash_ssets(f.cod, g.cod),
        tuple(pointed.smash_map(p, q) for p, q in zip(f.components, g.components)),
    )


# ---------------------------------------------------------------------------
# colimits with induced operators


@dataclass(frozen=True)
class SsetCocone:
    obj: SimplicialSet
    legs: tuple[SimplicialMap, ...]
    factor: Callable[[Sequence[SimplicialMap]], SimplicialMap] = field(compare=False)


def _assemble(trunc: int, levels: Sequence[PointedSet],
              face_for: Callable[[int, int], PointedMap],
              degen_for: Callable[[int, int], PointedMap]) -> SimplicialSet:
    faces = [()] + [tuple(face_for(k, i) for i in range(k + 1)) for k in range(1, trunc + 1)]
    degens = [tuple(degen_for(k, i) for i in range(k + 1)) for k in range(trunc)] + [()]
    return SimplicialSet(trunc, tuple(levels), tuple(faces), tuple(degens))


def wedge_ssets(parts: Sequence[SimplicialSet]) -> SsetCocone:
    trunc = parts[0].trunc
    if any(p.trunc != trunc for p in parts):
        raise MismatchError("wedge: truncation mismatch")
    cones = [pointed.wedge([p.levels[k] for p in parts]) for k in range(trunc + 1)]
    obj = _assemble(
        trunc,
        [c.obj for c in cones],
        lambda k, i: cones[k].factor([
            compose(p.faces[k][i], cones[k - 1].legs[j]) for j, p in enumerate(parts)
        ]),
        lambda k, i: cones[k].factor([
            compose(p.degens[k][i], cones[k + 1].legs[j]) for j, p in enumerate(parts)
        ]),
    )
    legs = tuple(
        SimplicialMap(p, obj, tuple(cones[k].legs[j] for k in range(trunc + 1)))
        for j, p in enumerate(parts)
    )

    def factor(competing: Sequence[SimplicialMap]) -> SimplicialMap:
        cod = competing[0].cod
        comps = tuple(
            cones[k].factor([m.components[k] for m in competing])
            for k in range(trunc + 1)
        )
        return SimplicialMap(obj, cod, comps)

    return SsetCocone(obj=obj, legs=legs, factor=factor)


def coequalizer_ssets(f: SimplicialMap, g: SimplicialMap) -> SsetCocone:
    if f.dom != g.dom or f.cod != g.cod:
        raise MismatchError("coequalizer: not a parallel pair")
    trunc = f.dom.trunc
    y = f.cod
    cones = [pointed.coequalizer(f.components[k], g.components[k]) for k in range(trunc + 1)]
    obj = _assemble(
        trunc,
        [c.obj for c in cones],
        lambda k, i: cones[k].factor([compose(y.faces[k][i], cones[k - 1].legs[0])]),
        lambda k, i: cones[k].factor([compose(y.degens[k][i], cones[k + 1].legs[0])]),
    )
    leg = SimplicialMap(y, obj, tuple(c.legs[0] for c in cones))

    def factor(competing: Sequence[SimplicialMap]) -> SimplicialMap:
        (m,) = competing
        comps = tuple(cones[k].factor([m.components[k]]) for k in range(trunc + 1))
        return SimplicialMap(obj, m.cod, comps)

    return SsetCocone(obj=obj, legs=(leg,), factor=factor)


def pushout_ssets(f: SimplicialMap, g: SimplicialMap) -> SsetCocone:
    """Pushout of B <-f- A -g-> C in pointed simplicial sets."""
    if f.dom != g.dom:
        raise MismatchError("pushout: maps must share their domain")
    w = wedge_ssets([f.cod, g.cod])
    co = coequalizer_ssets(
        compose_sset_maps(f, w.legs[0]), compose_sset_maps(g, w.legs[1])
    )
    leg_b = compose_sset_maps(w.legs[0], co.legs[0])
    leg_c = compose_sset_maps(w.legs[1], co.legs[0])

    def factor(competing: Sequence[SimplicialMap]) -> SimplicialMap:
        u, v = competing
        return co.factor([w.factor([u, v])])

    return SsetCocone(obj=co.obj, legs=(leg_b, leg_c), factor=factor)


@dataclass(frozen=True)
class SsetPullback:
    obj: SimplicialSet
    proj1: SimplicialMap
    proj2: SimplicialMap


def pullback_ssets(f: SimplicialMap, g: SimplicialMap) -> SsetPullback:
    """Pullback of B -f-> D <-g- C, dimensionwise pairs with equal image."""
    if f.cod != g.cod:
        raise MismatchError("pullback: maps must share their codomain")
    trunc = f.dom.trunc
    pbs = [pointed.pullback(f.components[k], g.components[k]) for k in range(trunc + 1)]
    index_of = [
        {pair: i for i, pair in enumerate(pb.pairs)} for pb in pbs
    ]

    def induced(k_from: int, k_to: int, mb: PointedMap, mc: PointedMap) -> PointedMap:
        table = tuple(
            index_of[k_to][(mb.table[b], mc.table[c])] for b, c in pbs[k_from].pairs
        )
        return PointedMap(pbs[k_from].obj, pbs[k_to].obj, table)

    obj = _assemble(
        trunc,
        [pb.obj for pb in pbs],
        lambda k, i: induced(k, k - 1, f.dom.faces[k][i], g.dom.faces[k][i]),
        lambda k, i: induced(k, k + 1, f.dom.degens[k][i], g.dom.degens[k][i]),
    )
    proj1 = SimplicialMap(obj, f.dom, tuple(pb.proj1 for pb in pbs))
    proj2 = SimplicialMap(obj, g.dom, tuple(pb.proj2 for pb in pbs))
    return SsetPullback(obj=obj, proj1=proj1, proj2=proj2)


# ---------------------------------------------------------------------------
# bisimplicial sets


@dataclass(frozen=True)
class BisimplicialSet:
    """A simplicial object in pointed simplicial sets.

    rows[k] is the vertical simplicial set in horizontal degree k; the
    horizontal operators are simplicial maps between rows, so the two
    operator families commute by construction of SimplicialMap validity.
    """

    htrunc: int
    vtrunc: int
    rows: tuple[SimplicialSet, ...]
    hfaces: tuple[tuple[SimplicialMap, ...], ...]
    hdegens: tuple[tuple[SimplicialMap, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.htrunc + 1:
            raise ValueError("rows must cover horizontal degrees 0..htrunc")
        for r in self.rows:
            if r.trunc != self.vtrunc:
                raise ValueError("all rows must share the vertical truncation")

    def at(self, k: int, ell: int) -> PointedSet:
        return self.rows[k].levels[ell]


def validate_bisimplicial(b: BisimplicialSet) -> CheckReport:
    prop = "bisimplicial"
    for k, row in enumerate(b.rows):
        rep = validate_sset(row)
        if not rep.passed:
            return failed(prop, rep.witness, rep.failure_kind, f"row {k}: {rep.detail}")
    for k in range(1, b.htrunc + 1):
        for i, m in enumerate(b.hfaces[k]):
            if m.dom != b.rows[k] or m.cod != b.rows[k - 1]:
                return failed(prop, None, "endpoints", f"horizontal face ({k},{i})")
            rep = validate_sset_map(m)
            if not rep.passed:
                return failed(prop, None, rep.failure_kind, f"horizontal face ({k},{i}) does not commute vertically")
    for k in range(b.htrunc):
        for i, m in enumerate(b.hdegens[k]):
            if m.dom != b.rows[k] or m.cod != b.rows[k + 1]:
                return failed(prop, None, "endpoints", f"horizontal degeneracy ({k},{i})")
            rep = validate_sset_map(m)
            if not rep.passed:
                return failed(prop, None, rep.failure_kind, f"horizontal degeneracy ({k},{i}) does not commute vertically")
    # horizontal simplicial identities, checked on composed simplicial maps
    d = b.htrunc
    for k in range(2, d + 1):
        for j in range(k + 1):
            for i in range(j):
                lhs = compose_sset_maps(b.hfaces[k][j], b.hfaces[k - 1][i])
                rhs = compose_sset_maps(b.hfaces[k][i], b.hfaces[k - 1][j - 1])
                if not sset_maps_equal(lhs, rhs):
                    return failed(prop, None, "face-face", f"horizontal (k,i,j)=({k},{i},{j})")
    for k in range(d - 1):
        for j in range(k + 1):
            for i in range(j + 1):
                lhs = compose_sset_maps(b.hdegens[k][j], b.hdegens[k + 1][i])
                rhs = compose_sset_maps(b.hdegens[k][i], b.hdegens[k + 1][j + 1])
                if not sset_maps_equal(lhs, rhs):
                    return failed(prop, None, "degeneracy-degeneracy", f"horizontal (k,i,j)=({k},{i},{j})")
    for k in range(d):
        for j in range(k + 1):
            for i in range(k + 2):
                lhs = compose_sset_maps(b.hdegens[k][j], b.hfaces[k + 1][i])
                if i in (j, j + 1):
                    rhs = sset_identity(b.rows[k])
                elif i < j:
                    rhs = compose_sset_maps(b.hfaces[k][i], b.hdegens[k - 1][j - 1])
                else:
                    rhs = compose_sset_maps(b.hfaces[k][i - 1], b.hdegens[k - 1][j])
                if not sset_maps_equal(lhs, rhs):
                    return failed(prop, None, "face-degeneracy", f"horizontal (k,i,j)=({k},{i},{j})")
    return passed(prop)


def constant_bisimplicial(s: SimplicialSet, htrunc: int) -> BisimplicialSet:
    ident = sset_identity(s)
    return BisimplicialSet(
        htrunc=htrunc,
        vtrunc=s.trunc,
        rows=(s,) * (htrunc + 1),
        hfaces=((),) + tuple((ident,) * (k + 1) for k in range(1, htrunc + 1)),
        hdegens=tuple((ident,) * (k + 1) for k in range(htrunc)) + ((),),
    )


def diagonal(b: BisimplicialSet) -> SimplicialSet:
    """Diagonal simplicial set of a square-truncated bisimplicial set.

    Level k is the (k,k) grid entry; each operator is the horizontal
    operator followed by the matching vertical one (the two commute).
    """
    if b.htrunc != b.vtrunc:
        raise TruncationError("diagonal needs square truncation")
    d = b.htrunc
    levels = [b.rows[k].levels[k] for k in range(d + 1)]
    return _assemble(
        d,
        levels,
        lambda k, i: compose(b.hfaces[k][i].components[k], b.rows[k - 1].faces[k][i]),
        lambda k, i: compose(b.hdegens[k][i].components[k], b.rows[k + 1].degens[k][i]),
    )


def diagonal_map(dom: BisimplicialSet, cod: BisimplicialSet,
                 rowmaps: Sequence[SimplicialMap]) -> SimplicialMap:
    return SimplicialMap(
        diagonal(dom),
        diagonal(cod),
        tuple(rowmaps[k].components[k] for k in range(dom.htrunc + 1)),
    )
