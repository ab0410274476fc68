"""Reedy engine: generic latching, corners, goodness, realization,
pointwise cofibers, and cross-ambient consistency."""
from __future__ import annotations

import pytest

from latchcheck.pointed import PointedSet, is_iso
from latchcheck.reports import CheckReport
from latchcheck.simplicial import (
    circle,
    constant_bisimplicial,
    constant_sset,
    point_sset,
    sphere,
    validate_sset,
)
from latchcheck.reedy import (
    SetsAmbient,
    SpectrumAmbient,
    SsetAmbient,
    SimplicialSpectrum,
    SimplicialSpectrumMap,
    bisimplicial_reedy_report,
    constant_simplicial_spectrum,
    from_zero_simplicial,
    is_good,
    is_positive_good,
    is_reedy_cofibration,
    latch_of_simplicial_spectrum,
    latching_of_map,
    pointwise_cofiber,
    realize,
    realize_map,
    reedy_cofibrant_report,
    reedy_corner,
    simplicial_latching,
    validate_simplicial_spectrum,
    validate_simplicial_spectrum_map,
    view_of_bisimplicial,
    view_of_simplicial_spectrum,
    view_of_sset,
    zero_simplicial_spectrum,
)
from latchcheck.spectra import (
    bar_s,
    smash_spectrum_sset,
    spectrum_identity,
    sphere_spectrum,
    validate_spectrum,
    validate_spectrum_map,
    wedge_spectra,
)

SETS = SetsAmbient()


def const_wedge_inclusion(ktrunc, n, d, coeff_trunc_sset=None):
    """f: constant(S) -> constant(S v S∧A), a degreewise wedge inclusion."""
    s = sphere_spectrum(n, d)
    a = coeff_trunc_sset or constant_sset(PointedSet(2), d)
    x = smash_spectrum_sset(s, a)
    w = wedge_spectra([s, x])
    dom = constant_simplicial_spectrum(s, ktrunc)
    cod = constant_simplicial_spectrum(w.obj, ktrunc)
    return SimplicialSpectrumMap(dom, cod, (w.legs[0],) * (ktrunc + 1))


class TestSetsLatching:
    def test_degree0_is_zero_object(self):
        v = view_of_sset(circle(3))
        latch = simplicial_latching(v, 0, SETS)
        assert latch.obj.size == 1

    def test_degree1_is_bottom_object_with_its_degeneracy(self):
        c = circle(3)
        latch = simplicial_latching(view_of_sset(c), 1, SETS)
        assert latch.obj == c.levels[0]
        assert latch.nu == c.degens[0][0]

    def test_circle_latching_is_mono_with_degenerate_image(self):
        c = circle(4)
        for n in range(2, 5):
            latch = simplicial_latching(view_of_sset(c), n, SETS)
            assert is_iso(latch.nu) or latch.nu.table == tuple(sorted(set(latch.nu.table)))
            image = set(latch.nu.table)
            degenerate = {0}
            for i in range(n):
                degenerate.update(c.degens[n - 1][i].table)
            assert image == degenerate

    def test_constant_object_gives_iso(self):
        z = constant_sset(PointedSet(4), 3)
        for n in range(4):
            latch = simplicial_latching(view_of_sset(z), n, SETS)
            if n >= 1:
                assert is_iso(latch.nu)

    def test_out_of_range_degree_is_an_error(self):
        with pytest.raises(Exception):
            simplicial_latching(view_of_sset(circle(2)), 3, SETS)


class TestBisimplicialReedy:
    def test_constant_bisimplicial_is_reedy_cofibrant(self):
        b = constant_bisimplicial(sphere(1, 3), 3)
        assert bisimplicial_reedy_report(b).passed

    def test_sphere_rows_are_reedy_cofibrant(self):
        b = constant_bisimplicial(sphere(2, 2), 2)
        assert bisimplicial_reedy_report(b).passed


class TestSimplicialSpectrum:
    def test_constant_validates(self):
        x = constant_simplicial_spectrum(sphere_spectrum(2, 2), 2)
        assert validate_simplicial_spectrum(x).passed

    def test_zero_validates(self):
        assert validate_simplicial_spectrum(zero_simplicial_spectrum(2, 2, 2)).passed

    def test_wedge_inclusion_map_validates(self):
        f = const_wedge_inclusion(2, 2, 2)
        assert validate_simplicial_spectrum(f.dom, deep=False).passed
        assert validate_simplicial_spectrum_map(f).passed


class TestSliceConsistency:
    def test_spectrum_latching_slices_to_sets_latching(self):
        # compute the latching object in the spectrum ambient, then slice
        # at each (level m, dim l) and compare with the pointed-set
        # latching of the sliced simplicial object: exact table equality
        f = const_wedge_inclusion(3, 2, 2)
        x = f.cod
        for n in range(x.ktrunc + 1):
            latch = latch_of_simplicial_spectrum(x, n)
            for m in range(x.strunc + 1):
                for l in range(x.dtrunc + 1):
                    slice_view = type(view_of_sset(circle(1)))(
                        top=x.ktrunc,
                        obj_at=lambda k, m=m, l=l: x.degrees[k].levels[m].levels[l],
                        degen_at=lambda k, i, m=m, l=l: x.degens[k][i].components[m].components[l],
                    )
                    small = simplicial_latching(slice_view, n, SETS)
                    if n == 0:
                        assert small.obj.size == 1
                        continue
                    assert small.obj.size == latch.obj.levels[m].levels[l].size
                    assert small.nu.table == latch.nu.components[m].components[l].table


class TestGoodness:
    def test_constant_sphere_is_good(self):
        x = constant_simplicial_spectrum(sphere_spectrum(3, 4), 3)
        assert is_good(x).passed

    def test_constant_bar_is_not_good(self):
        x = constant_simplicial_spectrum(bar_s(3, 4), 3)
        rep = is_good(x)
        assert not rep.passed
        assert rep.witness.locate("spectral_level") == 2

    def test_constant_sphere_is_not_positive_good(self):
        x = constant_simplicial_spectrum(sphere_spectrum(2, 2), 2)
        rep = is_positive_good(x)
        assert not rep.passed
        assert rep.failure_kind == "level0-iso"


class TestReedyVerdicts:
    def test_constant_object_is_reedy_flat_cofibrant(self):
        x = constant_simplicial_spectrum(sphere_spectrum(2, 2), 2)
        assert reedy_cofibrant_report(x, "flat").passed
        assert reedy_cofibrant_report(x, "levelwise").passed

    def test_zero_source_corner_equals_latching_map(self):
        x = constant_simplicial_spectrum(sphere_spectrum(2, 2), 2)
        f = from_zero_simplicial(x)
        ambient = SpectrumAmbient(2, 2)
        dv = view_of_simplicial_spectrum(f.dom)
        cv = view_of_simplicial_spectrum(f.cod)
        for n in range(3):
            corner = reedy_corner(dv, cv, lambda k: f.components[k], n, ambient)
            latch = latch_of_simplicial_spectrum(x, n)
            for m in range(3):
                assert corner.map.components[m].components == latch.nu.components[m].components

    def test_identity_passes_all_models(self):
        x = constant_simplicial_spectrum(sphere_spectrum(2, 2), 2)
        ident = SimplicialSpectrumMap(x, x, tuple(
            spectrum_identity(x.degrees[m]) for m in range(3)
        ))
        for model in ("levelwise", "positive-levelwise", "flat", "positive-flat"):
            assert is_reedy_cofibration(ident, model).passed

    def test_wedge_inclusion_is_reedy_flat(self):
        f = const_wedge_inclusion(2, 2, 2)
        assert is_reedy_cofibration(f, "flat").passed
        assert is_reedy_cofibration(f, "levelwise").passed

    def test_constant_bar_fails_reedy_flat_with_witness(self):
        x = constant_simplicial_spectrum(bar_s(2, 2), 2)
        rep = reedy_cofibrant_report(x, "flat")
        assert not rep.passed
        assert rep.witness is not None


class TestRealize:
    def test_realize_constant_is_the_value(self):
        s = sphere_spectrum(2, 2)
        x = constant_simplicial_spectrum(s, 2)
        r = realize(x)
        assert validate_spectrum(r).passed
        assert r.levels == s.levels
        assert all(a.components == b.components for a, b in zip(r.sigmas, s.sigmas))

    def test_realize_requires_square_truncation(self):
        x = constant_simplicial_spectrum(sphere_spectrum(2, 3), 2)
        with pytest.raises(Exception):
            realize(x)

    def test_realize_map_of_wedge_inclusion_is_flat(self):
        from latchcheck.spectra import is_flat_cofibration, is_levelwise_cofibration

        f = const_wedge_inclusion(2, 2, 2)
        rf = realize_map(f)
        assert validate_spectrum_map(rf).passed
        assert is_levelwise_cofibration(rf).passed
        assert is_flat_cofibration(rf).passed


class TestCornerFactorization:
    """The corner of a good object's latching map factors through the
    pushout over the pullback: F = F' ∘ F'' with F' mono by the
    pushout-over-pullback lemma and the comparison into the pullback
    surjective, forcing F'' (and hence F) mono."""

    def test_factorization_and_surjectivity(self):
        from latchcheck.generators import GenConfig, gen_good_simplicial_spectrum
        from latchcheck.pointed import PointedMap, epi_missed, is_mono
        from latchcheck.simplicial import SimplicialMap, pullback_ssets, pushout_ssets
        from latchcheck.reedy import latch_of_simplicial_spectrum
        from latchcheck.spectra import latching_map_of_spectrum_map, spectral_latching

        cfg = GenConfig(seed=23, ktrunc=2, strunc=2, dtrunc=2)
        x = gen_good_simplicial_spectrum(cfg.rng(0), cfg)
        for n in (1, 2):
            latch = latch_of_simplicial_spectrum(x, n)
            for s in range(x.strunc + 1):
                f2 = latch.nu.components[s]
                f1 = spectral_latching(x.degrees[n], s).nu
                pb = pullback_ssets(f2, f1)
                po2 = pushout_ssets(pb.proj1, pb.proj2)
                f_prime = po2.factor([f2, f1])

                nu_latch = spectral_latching(latch.nu.dom, s).nu
                l_s_nu = latching_map_of_spectrum_map(latch.nu, s)
                po1 = pushout_ssets(nu_latch, l_s_nu)
                f_corner = po1.factor([f2, f1])
                f_second = po1.factor([po2.legs[0], po2.legs[1]])

                # F = F' after F'' on every dimension
                for k in range(x.dtrunc + 1):
                    composed = tuple(
                        f_prime.components[k].table[v]
                        for v in f_second.components[k].table
                    )
                    assert composed == f_corner.components[k].table

                # the comparison into the pullback is surjective
                for k in range(x.dtrunc + 1):
                    pairs = {}
                    for i in range(nu_latch.dom.levels[k].size):
                        pairs[(nu_latch.components[k].table[i],
                               l_s_nu.components[k].table[i])] = i
                    pb_pairs = [
                        (pb.proj1.components[k].table[e], pb.proj2.components[k].table[e])
                        for e in range(pb.obj.levels[k].size)
                    ]
                    assert all(p in pairs for p in pb_pairs)

                # and the corner map itself is mono
                assert all(is_mono(c) for c in f_corner.components)


class TestPointwiseCofiber:
    def test_cofiber_of_identity_is_zero(self):
        x = constant_simplicial_spectrum(sphere_spectrum(2, 2), 2)
        ident = SimplicialSpectrumMap(x, x, tuple(spectrum_identity(d) for d in x.degrees))
        z, proj = pointwise_cofiber(ident)
        for d in z.degrees:
            assert all(p.size == 1 for lvl in d.levels for p in lvl.levels)

    def test_cofiber_of_zero_map_is_the_target(self):
        x = constant_simplicial_spectrum(sphere_spectrum(2, 2), 2)
        f = from_zero_simplicial(x)
        z, proj = pointwise_cofiber(f)
        assert validate_simplicial_spectrum(z, deep=False).passed
        for m in range(3):
            for a, b in zip(z.degrees[m].levels, x.degrees[m].levels):
                assert [p.size for p in a.levels] == [p.size for p in b.levels]

    def test_cofiber_of_wedge_inclusion_is_complement(self):
        f = const_wedge_inclusion(2, 2, 2)
        z, proj = pointwise_cofiber(f)
        assert validate_simplicial_spectrum_map(proj).passed
        comp = smash_spectrum_sset(sphere_spectrum(2, 2), constant_sset(PointedSet(2), 2))
        for m in range(3):
            for a, b in zip(z.degrees[m].levels, comp.levels):
                assert [p.size for p in a.levels] == [p.size for p in b.levels]
