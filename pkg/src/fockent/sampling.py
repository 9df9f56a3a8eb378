"""Reproducible random states for property checks and surveys."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .fock import MAX_OCCUPATION, FockState, ModePartition, Statistics, apply_creation, make_state, vacuum


@dataclass(frozen=True)
class RandomStateConfig:
    """Supports of at most ``max_terms`` occupation vectors over 2..``max_modes`` modes.

    Alice gets between 1 and M-1 modes. Amplitudes are complex Gaussian.
    """

    max_modes: int = 6
    max_terms: int = 6
    max_particles: int = 4
    seed: int = 2003


def occupation_vectors(mode_count: int, n: int, stats: Statistics) -> List[Tuple[int, ...]]:
    """All occupation vectors with total ``n``, in lexicographic order."""
    if stats is Statistics.FERMION:
        out = []
        for idx in itertools.combinations(range(mode_count), n):
            occ = [0] * mode_count
            for i in idx:
                occ[i] = 1
            out.append(tuple(occ))
        return sorted(out)
    cap = min(n, MAX_OCCUPATION)
    return [occ for occ in itertools.product(range(cap + 1), repeat=mode_count) if sum(occ) == n]


def random_state(
    rng: np.random.Generator,
    stats: "Statistics | str",
    cfg: RandomStateConfig = RandomStateConfig(),
    n_particles: Optional[int] = None,
) -> Tuple[FockState, ModePartition]:
    stats = Statistics.parse(stats)
    min_modes = max(2, n_particles or 0) if stats is Statistics.FERMION else 2
    m = int(rng.integers(min_modes, max(cfg.max_modes, min_modes) + 1))
    k = int(rng.integers(1, m))
    if n_particles is None:
        top = min(cfg.max_particles, m) if stats is Statistics.FERMION else cfg.max_particles
        n = int(rng.integers(1, top + 1))
    else:
        n = n_particles
    basis = occupation_vectors(m, n, stats)
    t = int(rng.integers(1, min(cfg.max_terms, len(basis)) + 1))
    chosen = rng.choice(len(basis), size=t, replace=False)
    amps = rng.normal(size=t) + 1j * rng.normal(size=t)
    state = make_state(stats, m, [(basis[i], a) for i, a in zip(chosen, amps)])
    return state, ModePartition.split(m, k)


def split_boson_pair(alpha: complex, beta: complex) -> Tuple[FockState, ModePartition]:
    """Two bosons in one mode that is split as alpha*(Alice mode) + beta*(Bob mode).

    Built as (alpha a^dag + beta b^dag)^2 |0,0> / sqrt(2).
    """
    vac = vacuum(Statistics.BOSON, 2)

    def raise_split(s: FockState) -> FockState:
        return apply_creation(s, 0).scaled(alpha) + apply_creation(s, 1).scaled(beta)

    once = raise_split(vac)
    return raise_split(once).scaled(1 / np.sqrt(2)), ModePartition(1, 1)
