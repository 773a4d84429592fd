"""Pytest configuration and fixtures for the torusrank tests."""
import random
from pathlib import Path
from typing import List

import pytest

from torusrank.cfrac.surd import canonicalize, is_square_free
from torusrank.config import get_settings
from torusrank.models.complexity import SearchConfig
from torusrank.models.surd import QuadraticIrrational
from torusrank.store.cache import ExpansionCache

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    """Point the settings at a scratch cache and reload them for each test."""
    monkeypatch.setenv("TORUSRANK_CACHE", str(tmp_path / "cfrac-cache.jsonl"))
    monkeypatch.setenv("TORUSRANK_WORKERS", "1")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def sqrt7() -> QuadraticIrrational:
    return canonicalize(0, 1, 1, 7)


@pytest.fixture
def golden_mean() -> QuadraticIrrational:
    """(1 + sqrt(5))/2."""
    return canonicalize(1, 1, 2, 5)


@pytest.fixture
def cache(tmp_path) -> ExpansionCache:
    return ExpansionCache(tmp_path / "expansions.jsonl")


@pytest.fixture
def small_search() -> SearchConfig:
    """Single-threaded search over a small window."""
    return SearchConfig(window_max=500, workers=1)


def random_surds(count: int, seed: int) -> List[QuadraticIrrational]:
    """Seeded canonical values (a + b sqrt(d))/c with c > 0."""
    rng = random.Random(seed)
    radicands = [d for d in range(2, 400) if is_square_free(d)]
    out = []
    while len(out) < count:
        a = rng.randint(-60, 60)
        b = rng.randint(1, 9)
        c = rng.randint(1, 25)
        d = rng.choice(radicands)
        out.append(canonicalize(a, b, c, d, conjugate=rng.random() < 0.3))
    return out
