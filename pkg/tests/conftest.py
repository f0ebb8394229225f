"""Shared fixtures: seeded RNGs and a session-wide cache of LP scans.

Several tests audit the same (n, K, options) distance scans; the cache
computes each scan once per session so the audits stay exact without
repeating multi-second solves.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest

from qshadow.lp import BoundOptions, feasibility_profile

SEED = 20260814


class ProfileCache:
    """Memoizes full distance scans keyed by (n, K, options)."""

    def __init__(self) -> None:
        self._cache: dict = {}

    def profile(self, n, k_dim, opts: BoundOptions = BoundOptions()):
        key = (n, Fraction(k_dim), opts)
        if key not in self._cache:
            self._cache[key] = feasibility_profile(n, k_dim, opts)
        return self._cache[key]

    def bound(self, n, k_dim, opts: BoundOptions = BoundOptions()) -> int:
        prof = self.profile(n, k_dim, opts)
        return max((d for d, res in prof.items() if res.feasible), default=0)

    def items(self):
        return self._cache.items()


@pytest.fixture(scope="session")
def lp_cache() -> ProfileCache:
    return ProfileCache()


@pytest.fixture()
def rng() -> np.random.Generator:
    return np.random.default_rng(SEED)


@pytest.fixture()
def pyrng() -> random.Random:
    return random.Random(SEED)
