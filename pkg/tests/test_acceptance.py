"""Acceptance criteria, one test per criterion, each printing a
pass/fail line and enforcing its stated runtime budget.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as
they complete.  Budgets are wall-clock upper bounds from the criteria;
exact-equality checks carry zero tolerance.
"""
from __future__ import annotations

import json
import subprocess
import sys
import time

import pytest

from latchcheck.builtins_corpus import builtin
from latchcheck.generators import (
    all_mono_cospans,
    derive_rng,
    gen_bisimplicial,
    gen_spectrum,
    gen_sset,
    latching_image_agrees,
    pushout_over_pullback_mono,
)
from latchcheck.reedy import bisimplicial_reedy_report, pointwise_cofiber, realize, realize_map
from latchcheck.spectra import (
    cofibrant_report,
    pushout_spectra,
    spectrum_zero_map,
    unit_oracle,
    zero_spectrum,
)
from latchcheck.suites import run_suite


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "latchcheck.cli", *argv],
                          capture_output=True, text=True)


def _report(number: int, label: str, elapsed: float, budget: float) -> None:
    print(f"criterion {number:2d}: PASS ({elapsed:6.2f}s / budget {budget:g}s) {label}")


class TestAcceptance:
    def test_criterion_01_bar_flat_certificate(self, tmp_path):
        budget = 1.0
        t0 = time.monotonic()
        proc = _cli("check", "--builtin", "bar-s", "flat", "--format", "json")
        elapsed = time.monotonic() - t0
        assert proc.returncode == 1
        report = json.loads(proc.stdout)["report"]
        witness = report["witness"]
        loc = dict(tuple(x) for x in witness["location"])
        assert loc["spectral_level"] == 2
        assert witness["pair"][0] != witness["pair"][1]
        witness_file = tmp_path / "witness.json"
        witness_file.write_text(proc.stdout)
        replay = _cli("check", "--builtin", "bar-s", "flat", "--replay", str(witness_file))
        assert replay.returncode == 0
        assert elapsed < budget, f"took {elapsed:.2f}s"
        _report(1, "truncated sphere spectrum fails flat at level 2, witness replays",
                elapsed, budget)

    def test_criterion_02_sphere_certificate(self):
        budget = 1.0
        t0 = time.monotonic()
        ok = _cli("check", "--builtin", "sphere", "flat", "--format", "json")
        pos = _cli("check", "--builtin", "sphere", "positive-flat", "--format", "json")
        elapsed = time.monotonic() - t0
        assert ok.returncode == 0
        assert json.loads(ok.stdout)["report"]["passed"]
        assert pos.returncode == 1
        pos_report = json.loads(pos.stdout)["report"]
        assert pos_report["failure_kind"] == "level0-iso"
        assert elapsed < budget, f"took {elapsed:.2f}s"
        _report(2, "sphere passes flat; positive-flat fails only the level-0 clause",
                elapsed, budget)

    def test_criterion_03_unit_isomorphism_oracle(self):
        budget = 60.0
        t0 = time.monotonic()
        for case in range(50):
            x = gen_spectrum(derive_rng("unit-oracle", case), strunc=3, dtrunc=4,
                             max_base=2, max_new=1)
            for n in range(4):
                unit = unit_oracle(x, n)
                assert unit.report.passed, f"case {case}, level {n}"
        elapsed = time.monotonic() - t0
        assert elapsed < budget, f"took {elapsed:.2f}s"
        _report(3, "50 random spectra: explicit unit bijection at all levels <= 3, exact",
                elapsed, budget)

    def test_criterion_04_good_implies_reedy_flat(self):
        budget = 300.0
        t0 = time.monotonic()
        summary = run_suite("3.2", seed=1, cases=200)
        elapsed = time.monotonic() - t0
        assert summary.passed, summary.to_json()
        assert summary.passes == 200
        assert summary.positives >= 1, "positive-good subcorpus is empty"
        assert elapsed < budget, f"took {elapsed:.2f}s"
        _report(4, f"200 good cases Reedy-flat (positive subcorpus: {summary.positives})",
                elapsed, budget)

    def test_criterion_05a_pointwise_flat_levelwise(self):
        budget = 300.0
        t0 = time.monotonic()
        summary = run_suite("4.1", seed=1, cases=100)
        elapsed = time.monotonic() - t0
        assert summary.passed, summary.to_json()
        assert summary.counterexample is None
        assert elapsed < budget, f"took {elapsed:.2f}s"
        _report(5, f"levelwise-map suite 100/100 (positives {summary.positives})",
                elapsed, budget)

    def test_criterion_05b_pointwise_flat_flat(self):
        budget = 300.0
        t0 = time.monotonic()
        summary = run_suite("4.2", seed=1, cases=100)
        elapsed = time.monotonic() - t0
        assert summary.passed, summary.to_json()
        assert summary.counterexample is None
        assert elapsed < budget, f"took {elapsed:.2f}s"
        _report(5, f"flat-map suite 100/100 (positives {summary.positives})",
                elapsed, budget)

    def test_criterion_06_realization_end_to_end(self):
        budget = 300.0
        t0 = time.monotonic()
        summary = run_suite("1.4", seed=1, cases=100)
        elapsed = time.monotonic() - t0
        assert summary.passed, summary.to_json()
        assert elapsed < budget, f"took {elapsed:.2f}s"
        _report(6, "100 end-to-end cases: Reedy-flat and realized-map flat verdicts",
                elapsed, budget)

    def test_criterion_07_pushout_over_pullback_exhaustive(self):
        budget = 60.0
        t0 = time.monotonic()
        count = 0
        for f1, f2 in all_mono_cospans(4):
            count += 1
            assert pushout_over_pullback_mono(f1, f2), (f1.table, f2.table)
        elapsed = time.monotonic() - t0
        assert count == 286
        assert elapsed < budget, f"took {elapsed:.2f}s"
        _report(7, f"all {count} mono cospans of size <= 4: mediating map mono",
                elapsed, budget)

    def test_criterion_08_bisimplicial_reedy_cofibrancy(self):
        budget = 60.0
        t0 = time.monotonic()
        for case in range(200):
            b = gen_bisimplicial(derive_rng("bisimplicial", case), 3, 3)
            assert bisimplicial_reedy_report(b).passed, f"case {case}"
        elapsed = time.monotonic() - t0
        assert elapsed < budget, f"took {elapsed:.2f}s"
        _report(8, "200 bisimplicial sets: latching comparison maps all mono",
                elapsed, budget)

    def test_criterion_09_oracle_agreement(self):
        budget = 60.0
        t0 = time.monotonic()
        for case in range(200):
            s = gen_sset(derive_rng("oracle", case), 3, max_base=3, max_new=2)
            for n in range(4):
                assert latching_image_agrees(s, n), f"case {case}, degree {n}"
        elapsed = time.monotonic() - t0
        assert elapsed < budget, f"took {elapsed:.2f}s"
        _report(9, "200 simplicial objects: coequalizer latching = degeneracy union",
                elapsed, budget)

    def test_criterion_10_cofiber_realization_demo(self):
        budget = 30.0
        t0 = time.monotonic()
        f = builtin("thm14-demo")
        z, proj = pointwise_cofiber(f)
        realized_cofiber = realize(z)
        rf = realize_map(f)
        zero = zero_spectrum(rf.dom.strunc, rf.dom.dtrunc)
        cofiber_of_realized = pushout_spectra(rf, spectrum_zero_map(rf.dom, zero)).obj
        assert realized_cofiber == cofiber_of_realized
        flat = cofibrant_report(realized_cofiber, "flat")
        assert flat.passed
        elapsed = time.monotonic() - t0
        assert elapsed < budget, f"took {elapsed:.2f}s"
        _report(10, "realize/cofiber interchange exact; realized cofiber flat-cofibrant",
                elapsed, budget)

    def test_criterion_11_determinism(self, tmp_path):
        budget = 120.0
        t0 = time.monotonic()
        byte_stable_commands = [
            ("check", "--builtin", "bar-s", "flat", "--format", "json"),
            ("check", "--builtin", "sphere", "positive-flat", "--format", "json"),
            ("selftest", "--suite", "lemmas", "--seed", "1", "--cases", "5",
             "--format", "json"),
            ("selftest", "--suite", "3.2", "--seed", "4", "--cases", "2",
             "--format", "json"),
            ("latch", "--builtin", "bar-s", "--spectral", "2"),
            ("realize", "--builtin", "constant-sphere"),
            ("cofiber", "--builtin", "thm14-demo"),
        ]
        for argv in byte_stable_commands:
            first = _cli(*argv)
            second = _cli(*argv)
            assert first.stdout == second.stdout, argv
            assert first.returncode == second.returncode, argv
        elapsed = time.monotonic() - t0
        assert elapsed < budget
        _report(11, f"{len(byte_stable_commands)} commands byte-identical across runs",
                elapsed, budget)
