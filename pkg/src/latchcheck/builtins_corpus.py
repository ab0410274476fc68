"""Built-in objects reachable as `--builtin NAME`, so checks and the
acceptance suite need no fixture files on disk.

Every builtin is constructed deterministically (fixed seeds), so its
serialized document is byte-stable across runs.
"""
from __future__ import annotations

from functools import lru_cache

from .generators import GenConfig, gen_thm_hypothesis_instance, gen_good_simplicial_spectrum
from .reedy import constant_simplicial_spectrum
from .spectra import bar_s, sphere_spectrum

BUILTIN_NAMES = ("bar-s", "sphere", "constant-sphere", "good-demo", "thm14-demo")


@lru_cache(maxsize=None)
def builtin(name: str):
    if name == "bar-s":
        return bar_s(3, 4)
    if name == "sphere":
        return sphere_spectrum(3, 4)
    if name == "constant-sphere":
        # square truncation so realization applies
        return constant_simplicial_spectrum(sphere_spectrum(3, 3), 3)
    if name == "good-demo":
        cfg = GenConfig(seed=32, ktrunc=3, strunc=3, dtrunc=4)
        return gen_good_simplicial_spectrum(cfg.rng(0), cfg)
    if name == "thm14-demo":
        cfg = GenConfig(seed=14, ktrunc=3, strunc=3, dtrunc=3)
        inst = gen_thm_hypothesis_instance(cfg.rng(0), cfg, "1.4")
        return inst.f
    raise KeyError(f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_NAMES)}")
