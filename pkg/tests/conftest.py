"""Pytest configuration and fixtures."""

import json
from pathlib import Path
from typing import Any, Callable, Dict, Generator, Tuple

import numpy as np
import pytest

from swobstruct.isometry.base import Isometry, reflection
from swobstruct.lattice.base import Lattice, Summand, make_lattice
from swobstruct.search.fixtures import E1E2_E1, E1E2_E2, ExampleFixture, build_example
from swobstruct.utils.config import get_settings


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch) -> Generator[None, None, None]:
    """Drop cached settings so environment overrides in a test take effect."""
    for name in ("SEARCH_WORKERS", "SEARCH_RESULT_LIMIT", "DEFAULT_OUTPUT_FORMAT"):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def hyperbolic() -> Lattice:
    """A single hyperbolic plane H."""
    return make_lattice([Summand.hyperbolic()])


@pytest.fixture
def h_minus_e8() -> Lattice:
    """H + (-E8), even with b_plus = 1 and sigma = -8."""
    return make_lattice([Summand.hyperbolic(), Summand.e8(sign=-1)])


@pytest.fixture
def odd_13() -> Lattice:
    """2(1) + 11(-1), the form of 2CP^2 # 11(-CP^2)."""
    return make_lattice([Summand.diag([1, 1]), Summand.diag([-1], count=11)])


@pytest.fixture
def reflections_e1e2(odd_13) -> Dict[str, Isometry]:
    """Reflections in the orthogonal square-2 classes e1 and e2."""
    return {"e1": reflection(odd_13, E1E2_E1), "e2": reflection(odd_13, E1E2_E2)}


@pytest.fixture(scope="session")
def order4_example() -> ExampleFixture:
    """The Z_4 example with V = R_- + C_1."""
    return build_example("order4")


@pytest.fixture(scope="session")
def z2_spin_example() -> ExampleFixture:
    """The involution example on 4(S^2 x S^2) # 2(-E8)."""
    return build_example("z2-spin")


@pytest.fixture(scope="session")
def klein_example() -> ExampleFixture:
    """The Z2 x Z2 example with (q, r, s) = (3, 3, 6)."""
    return build_example("klein")


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded random generator."""
    return np.random.default_rng(20241019)


@pytest.fixture
def unimodular(rng) -> Callable[[int], Tuple[np.ndarray, np.ndarray]]:
    """Factory for random unimodular matrices U with U^-1, entries of both at most 3.

    Each U is a few elementary column operations followed by a signed permutation.
    """

    def _draw(n: int) -> Tuple[np.ndarray, np.ndarray]:
        eye = np.eye(n, dtype=np.int64)
        while True:
            u, inv = eye.copy(), eye.copy()
            for _ in range(n // 2 + 1 if n > 1 else 0):
                i, j = (int(x) for x in rng.choice(n, size=2, replace=False))
                a = int(rng.choice([-1, 1]))
                step, back = eye.copy(), eye.copy()
                step[i, j], back[i, j] = a, -a
                u, inv = u @ step, back @ inv
            perm = np.zeros((n, n), dtype=np.int64)
            perm[rng.permutation(n), np.arange(n)] = rng.choice([-1, 1], size=n)
            u, inv = u @ perm, perm.T @ inv
            if np.abs(u).max(initial=0) <= 3 and np.abs(inv).max(initial=0) <= 3:
                return u, inv

    return _draw


@pytest.fixture
def write_document(tmp_path) -> Callable[[Any], Path]:
    """Write a JSON document to a temporary file and return its path."""
    counter = {"n": 0}

    def _write(data: Any) -> Path:
        counter["n"] += 1
        path = tmp_path / f"document_{counter['n']}.json"
        path.write_text(data if isinstance(data, str) else json.dumps(data), encoding="utf-8")
        return path

    return _write
