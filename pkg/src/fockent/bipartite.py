"""Alice/Bob splits: local-number sectors, coefficient matrices, reduced states."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import EmptyState, NotDensityMatrix, ShapeMismatch
from .fock import FockState, ModePartition, Occupation, _clean

SECTOR_TOL = 1e-12
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-9
NEGATIVITY_TOL = 1e-9

__all__ = [
    "ModePartition",
    "Side",
    "Sector",
    "SectorDecomposition",
    "DensityMatrix",
    "project_local_number",
    "sector_decomposition",
    "coefficient_matrix",
    "reduced_density_matrix",
    "schmidt_probabilities",
]


class Side(enum.Enum):
    ALICE = "alice"
    BOB = "bob"


@dataclass(frozen=True)
class Sector:
    n: int
    probability: float
    state: FockState


@dataclass(frozen=True)
class SectorDecomposition:
    entries: Tuple[Sector, ...]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @property
    def probabilities(self) -> dict:
        return {e.n: e.probability for e in self.entries}

    def mean(self) -> float:
        return sum(e.n * e.probability for e in self.entries)

    def variance(self) -> float:
        mu = self.mean()
        return sum((e.n - mu) ** 2 * e.probability for e in self.entries)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    matrix: np.ndarray
    labels: Tuple

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def check(self) -> None:
        """Raise :class:`NotDensityMatrix` unless Hermitian, unit trace and PSD."""
        m = self.matrix
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise NotDensityMatrix(f"matrix of shape {m.shape} is not square")
        if m.size and np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL:
            raise NotDensityMatrix("matrix is not Hermitian")
        if abs(np.trace(m) - 1.0) > TRACE_TOL:
            raise NotDensityMatrix(f"trace {np.trace(m).real:.3g} != 1")
        if m.size and np.linalg.eigvalsh(m).min() < -NEGATIVITY_TOL:
            raise NotDensityMatrix("matrix has a negative eigenvalue")

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)


def _require_nonzero(s: FockState) -> None:
    if s.is_zero:
        raise EmptyState("operation needs a non-zero state")


def _check_partition(s: FockState, p: ModePartition) -> None:
    if p.mode_count != s.mode_count:
        raise ShapeMismatch(f"partition covers {p.mode_count} modes, state has {s.mode_count}")


def project_local_number(s: FockState, p: ModePartition, n: int) -> Tuple[FockState, float]:
    """Terms with exactly ``n`` particles on Alice's side, and their weight P_n."""
    _require_nonzero(s)
    _check_partition(s, p)
    kept = {k: a for k, a in s.terms.items() if p.alice_number(k) == n}
    proj = _clean(s.stats, s.mode_count, s.total_particles, kept)
    return proj, proj.norm_sq() / s.norm_sq()


def sector_decomposition(s: FockState, p: ModePartition) -> SectorDecomposition:
    _require_nonzero(s)
    _check_partition(s, p)
    groups: dict = {}
    for k, a in s.terms.items():
        groups.setdefault(p.alice_number(k), {})[k] = a
    total = s.norm_sq()
    entries = []
    for n in sorted(groups):
        psi = _clean(s.stats, s.mode_count, s.total_particles, groups[n])
        prob = psi.norm_sq() / total
        if prob > SECTOR_TOL:
            entries.append(Sector(n, prob, psi))
    return SectorDecomposition(tuple(entries))


def coefficient_matrix(
    s: FockState, p: ModePartition
) -> Tuple[np.ndarray, List[Occupation], List[Occupation]]:
    """Dense matrix C[a, b] of amplitudes with Alice/Bob local occupations as labels.

    Labels are sorted lexicographically. The matrix is not normalized.
    """
    _require_nonzero(s)
    _check_partition(s, p)
    alice = sorted({p.alice(k) for k in s.terms})
    bob = sorted({p.bob(k) for k in s.terms})
    ia = {a: i for i, a in enumerate(alice)}
    ib = {b: j for j, b in enumerate(bob)}
    mat = np.zeros((len(alice), len(bob)), dtype=complex)
    for k, amp in s.terms.items():
        mat[ia[p.alice(k)], ib[p.bob(k)]] = amp
    return mat, alice, bob


def reduced_density_matrix(s: FockState, p: ModePartition, side: "Side | str" = Side.ALICE) -> DensityMatrix:
    side = Side(side) if not isinstance(side, Side) else side
    mat, alice, bob = coefficient_matrix(s, p)
    if side is Side.ALICE:
        rho, labels = mat @ mat.conj().T, alice
    else:
        rho, labels = mat.T @ mat.conj(), bob
    rho = rho / np.trace(rho).real
    return DensityMatrix(rho, tuple(labels))


def schmidt_probabilities(s: FockState, p: ModePartition) -> np.ndarray:
    """Squared Schmidt coefficients of the normalized state, via block SVD.

    The coefficient matrix is split into the connected components of its
    sparsity graph (rows and columns linked by nonzero entries); each block
    is decomposed on its own, so states with thousands of terms stay cheap.
    """
    _require_nonzero(s)
    _check_partition(s, p)
    alice: dict = {}
    bob: dict = {}
    rows, cols, vals = [], [], []
    for k, amp in s.terms.items():
        rows.append(alice.setdefault(p.alice(k), len(alice)))
        cols.append(bob.setdefault(p.bob(k), len(bob)))
        vals.append(amp)
    na, nb = len(alice), len(bob)
    rows_a = np.asarray(rows)
    cols_a = np.asarray(cols)
    vals_a = np.asarray(vals, dtype=complex)

    graph = coo_matrix((np.ones(len(rows)), (rows_a, na + cols_a)), shape=(na + nb, na + nb))
    _, labels = connected_components(graph, directed=False)
    comp = labels[rows_a]

    weights = []
    order = np.argsort(comp, kind="stable")
    bounds = np.flatnonzero(np.diff(comp[order])) + 1
    for idx in np.split(order, bounds):
        if len(idx) == 1:
            weights.append(abs(vals_a[idx[0]]) ** 2)
            continue
        r_u, r_inv = np.unique(rows_a[idx], return_inverse=True)
        c_u, c_inv = np.unique(cols_a[idx], return_inverse=True)
        block = np.zeros((len(r_u), len(c_u)), dtype=complex)
        block[r_inv, c_inv] = vals_a[idx]
        weights.extend(np.linalg.svd(block, compute_uv=False) ** 2)
    w = np.asarray(weights, dtype=float)
    return w / w.sum()
