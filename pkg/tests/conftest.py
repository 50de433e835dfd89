"""Shared fixtures: small hand-built instances and seeded generators."""
import numpy as np
import pytest

from ks2 import CnfFormula, F_SAT3, F_UNSAT4, Instance, ks_form_to_instance, validate
from ks2.prng import Stream, derive_key

RHALF = 1.0 / np.sqrt(2.0)


@pytest.fixture
def axis_pairs_d2():
    """Two copies of each scaled axis vector in d=2; isotropic, alpha = 1/2."""
    rows = np.array([[RHALF, 0], [RHALF, 0], [0, RHALF], [0, RHALF]])
    return validate(Instance(rows))


@pytest.fixture
def axis_pairs_d3():
    """Three axis pairs in d=3, each scaled by 1/sqrt(2)."""
    rows = np.zeros((6, 3))
    for ax in range(3):
        rows[2 * ax, ax] = RHALF
        rows[2 * ax + 1, ax] = RHALF
    return validate(Instance(rows))


@pytest.fixture
def dyadic_axes_d3():
    """Four copies of e_i/2 per axis: every subset sum is exact in binary."""
    rows = np.zeros((12, 3))
    for ax in range(3):
        for j in range(4):
            rows[4 * ax + j, ax] = 0.5
    return validate(Instance(rows))


def stress_instance(pairs_per_axis: int = 2) -> Instance:
    """Isotropic d=3 family whose third axis is a single unit vector.

    Any subset puts quadratic form 0 or 1 on that axis, so no subset can sit
    inside a band strictly between 0 and 1: the solver must report not-found.
    """
    k = 2 * pairs_per_axis
    scale = 1.0 / np.sqrt(k)
    rows = np.zeros((2 * k + 1, 3))
    for j in range(k):
        rows[j, 0] = scale
        rows[k + j, 1] = scale
    rows[2 * k, 2] = 1.0
    return validate(Instance(rows))


@pytest.fixture
def stress_notfound():
    return stress_instance(2)


@pytest.fixture(scope="session")
def fsat3_built():
    return ks_form_to_instance(F_SAT3)


@pytest.fixture(scope="session")
def funsat4_built():
    return ks_form_to_instance(F_UNSAT4)


def random_3cnf(seed: int, max_vars: int = 4, max_clauses: int = 4) -> CnfFormula:
    """Seeded random 3-CNF with distinct variables inside each clause."""
    s = Stream(derive_key(seed, 99))
    nv = 3 + (s.next_u64() % max(1, max_vars - 2))
    nc = 1 + (s.next_u64() % max_clauses)
    clauses = []
    for _ in range(nc):
        vs: list[int] = []
        while len(vs) < 3:
            v = 1 + (s.next_u64() % nv)
            if v not in vs:
                vs.append(int(v))
        clauses.append(tuple(v if s.uniform() < 0.5 else -v for v in vs))
    return CnfFormula(int(nv), tuple(clauses))


def random_subset(m: int, seed: int, tag: int = 4) -> list[int]:
    """Uniform random subset of range(m), seeded."""
    s = Stream(derive_key(seed, tag))
    return [i for i in range(m) if s.uniform() < 0.5]


def random_symmetric(d: int, seed: int) -> np.ndarray:
    s = Stream(derive_key(seed, 50, d))
    a = np.array([s.normals(d) for _ in range(d)])
    return 0.5 * (a + a.T)


def random_spd(d: int, seed: int, ridge: float = 0.1) -> np.ndarray:
    s = Stream(derive_key(seed, 51, d))
    a = np.array([s.normals(d) for _ in range(d)])
    return a @ a.T + ridge * np.eye(d)


def random_rotation(d: int, seed: int) -> np.ndarray:
    """Seeded orthogonal matrix via QR with a sign-fixed R diagonal."""
    s = Stream(derive_key(seed, 52, d))
    a = np.array([s.normals(d) for _ in range(d)])
    q, r = np.linalg.qr(a)
    return q * np.sign(np.diag(r))
