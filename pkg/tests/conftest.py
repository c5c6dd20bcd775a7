"""Shared fixtures and golden values."""

from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings

from blockpoly import WeightedDigraph, digraph_of_matrix

settings.register_profile("ci", max_examples=25, deadline=None)
settings.load_profile("ci")

FIXTURES = Path(__file__).parent / "fixtures"

M1 = [
    [0, 3, 2, 0, 0, 0, 0],
    [-7, 5, -1, 1, -8, 0, 0],
    [2, -1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, -3, 0],
    [0, 12, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 1, -4, 2],
    [0, 0, 0, 0, 0, 20, 3],
]

M2 = [row + [0] for row in M1] + [[0] * 8]
M2[5][7] = -2
M2[7][5] = -2
M2[7][7] = 10

# Coefficients c_0..c_n of det(A − λI) and per(A − λI)
PHI_M1 = (-3996, -18356, 2075, 5745, -367, -56, 4, -1)
PSI_M1 = (2940, 9828, 1939, 3269, 263, 90, 4, -1)
PHI_M2 = (-39960, -184124, 40770, 56659, -9919, -161, 92, -14, 1)
PSI_M2 = (29400, 99900, 8378, 31971, -1023, 605, -46, -14, 1)

DET_M1, PER_M1 = -3996, 2940
DET_M2, PER_M2 = -39960, 29400

# C5 on 1..5 with a hub 6 joined to 1, 2, 3, 4
HEURISTIC_COUNTEREXAMPLE_EDGES = [
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 1),
    (6, 1),
    (6, 2),
    (6, 3),
    (6, 4),
]


@pytest.fixture
def m1() -> WeightedDigraph:
    return digraph_of_matrix(M1)


@pytest.fixture
def m2() -> WeightedDigraph:
    return digraph_of_matrix(M2)


@pytest.fixture
def m1_matrix() -> np.ndarray:
    return np.array(M1, dtype=object)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
