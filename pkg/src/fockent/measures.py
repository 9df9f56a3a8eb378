"""Entanglement and correlation measures, all in bits.

``None`` stands for an inapplicable measure (a "-" in a results table); it is
never replaced by 0 or NaN.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .bipartite import (
    DensityMatrix,
    project_local_number,
    reduced_density_matrix,
    schmidt_probabilities,
    sector_decomposition,
)
from .errors import (
    DegeneracyViolation,
    EmptySector,
    EmptyState,
    WrongParticleNumber,
    WrongStatistics,
)
from .fock import FockState, ModePartition, Statistics, apply_annihilation, inner_product

PAIRING_TOL = 1e-6
ZERO_EIG_TOL = 1e-12


def shannon_entropy(probs: Sequence[float]) -> float:
    """Binary Shannon entropy with 0 log 0 = 0. Input need not be normalized."""
    p = np.asarray(probs, dtype=float)
    p = np.clip(p, 0.0, None)
    total = p.sum()
    if total <= 0:
        return 0.0
    p = p[p > 0] / total
    return float(-(p * np.log2(p)).sum()) + 0.0


def von_neumann_entropy(rho: DensityMatrix) -> float:
    rho.check()
    lam = np.clip(rho.eigenvalues(), 0.0, 1.0)
    lam = lam[lam > 0]
    return float(-(lam * np.log2(lam)).sum()) + 0.0


def mode_entanglement(s: FockState, p: ModePartition, method: str = "svd") -> float:
    """Entropy of Alice's reduced state.

    ``method="svd"`` uses block singular values of the coefficient matrix;
    ``method="eig"`` forms the dense reduced density matrix. They agree to
    ~1e-12 on small states; only the former scales.
    """
    if method == "svd":
        return shannon_entropy(schmidt_probabilities(s, p))
    if method == "eig":
        return von_neumann_entropy(reduced_density_matrix(s, p))
    raise ValueError(f"unknown method {method!r}")


def particle_entanglement(s: FockState, p: ModePartition) -> float:
    """Sector-weighted mode entanglement under the local particle-number rule."""
    return sum(sec.probability * mode_entanglement(sec.state, p) for sec in sector_decomposition(s, p))


def _require_pair(s: FockState) -> None:
    if s.is_zero:
        raise EmptyState("operation needs a non-zero state")
    if s.total_particles != 2:
        raise WrongParticleNumber(f"needs exactly 2 particles, state has {s.total_particles}")


def _one_body(s: FockState, modes: Sequence[int]) -> np.ndarray:
    # rho[m', m] = <c_m psi | c_m' psi>, normalized to unit trace
    lowered = [apply_annihilation(s, m) for m in modes]
    d = len(modes)
    g = np.zeros((d, d), dtype=complex)
    for i in range(d):
        for j in range(i, d):
            g[i, j] = inner_product(lowered[i], lowered[j])
            g[j, i] = g[i, j].conjugate()
    rho = g.T
    return rho / np.trace(rho).real


def single_particle_dm(s: FockState) -> DensityMatrix:
    _require_pair(s)
    modes = list(range(s.mode_count))
    return DensityMatrix(_one_body(s, modes), tuple(modes))


def single_particle_entropy(s: FockState) -> float:
    """S_b for bosons, S_f for fermions."""
    return von_neumann_entropy(single_particle_dm(s))


def qc_fermions(s: FockState) -> float:
    if s.stats is not Statistics.FERMION:
        raise WrongStatistics("fermionic quantum correlation needs a fermion state")
    return single_particle_entropy(s) - 1.0


def py_spectrum(s: FockState) -> List[float]:
    """Weights of the canonical two-particle expansion.

    Bosons: eigenvalues of the one-body matrix. Fermions: the eigenvalues come
    in equal pairs and each pair contributes its sum.
    """
    lam = np.sort(np.clip(single_particle_dm(s).eigenvalues(), 0.0, None))[::-1]
    if s.stats is Statistics.BOSON:
        out = lam[lam > ZERO_EIG_TOL]
    else:
        if len(lam) % 2:
            lam = np.append(lam, 0.0)
        first, second = lam[0::2], lam[1::2]
        bad = np.abs(first - second) > PAIRING_TOL
        if bad.any():
            i = int(np.flatnonzero(bad)[0])
            raise DegeneracyViolation(
                f"one-body eigenvalues {first[i]:.3g} and {second[i]:.3g} do not pair"
            )
        sums = first + second
        out = sums[sums > ZERO_EIG_TOL]
    out = out / out.sum()
    return [float(x) for x in out]


def modified_single_particle_dm(s: FockState, p: ModePartition) -> Tuple[DensityMatrix, float]:
    """One-body matrix over Alice's modes of the one-particle-on-Alice sector, plus P_1."""
    _require_pair(s)
    psi1, p1 = project_local_number(s, p, 1)
    if psi1.is_zero:
        raise EmptySector("state has no component with exactly one particle on Alice's side")
    modes = list(range(p.alice_modes))
    return DensityMatrix(_one_body(psi1, modes), tuple(modes)), p1


@dataclass
class MeasureReport:
    stats: Statistics
    total_particles: int
    mode_count: int
    alice_modes: int
    e_m: float
    e_p: float
    s_single: Optional[float]
    qc_fermion: Optional[float]
    sectors: List[Tuple[int, float, float]]
    variance_alice: float

    def to_dict(self) -> dict:
        return {
            "stats": self.stats.value,
            "N": self.total_particles,
            "modes": self.mode_count,
            "alice_modes": self.alice_modes,
            "E_M": self.e_m,
            "E_P": self.e_p,
            "S_single": self.s_single,
            "QC_fermion": self.qc_fermion,
            "sectors": [{"n": n, "P": prob, "E_M": e} for n, prob, e in self.sectors],
            "variance_alice": self.variance_alice,
        }


def full_report(s: FockState, p: ModePartition) -> MeasureReport:
    sectors = sector_decomposition(s, p)
    per_sector = [(sec.n, sec.probability, mode_entanglement(sec.state, p)) for sec in sectors]
    e_p = sum(prob * e for _, prob, e in per_sector)
    s_single = qc = None
    if s.total_particles == 2:
        s_single = single_particle_entropy(s)
        if s.stats is Statistics.FERMION:
            qc = s_single - 1.0
    return MeasureReport(
        stats=s.stats,
        total_particles=s.total_particles,
        mode_count=s.mode_count,
        alice_modes=p.alice_modes,
        e_m=mode_entanglement(s, p),
        e_p=e_p,
        s_single=s_single,
        qc_fermion=qc,
        sectors=per_sector,
        variance_alice=sectors.variance(),
    )
