"""Many-particle scaling of particle entanglement.

Covers the exact and asymptotic values for N independently split single
particles, the Alice-number variance, the super-additivity check for pairs
of states, and the growth of E_P with the number of copies of a state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .bipartite import sector_decomposition
from .errors import EmptyState, StatsMismatch, TooLarge
from .fock import FockState, ModePartition, compose, make_state
from .measures import mode_entanglement, particle_entanglement, shannon_entropy

EQUALITY_TOL = 1e-9
VARIANCE_TOL = 1e-12
MAX_COPY_TERMS = 10**6


def delta() -> float:
    """Constant offset of the large-N expansion, (-1 + log2(pi) + 1/ln 2) / 2."""
    return (-1.0 + math.log2(math.pi) + 1.0 / math.log(2.0)) / 2.0


def log2_int(x: int) -> float:
    """log2 of a positive integer of any size."""
    if x <= 0:
        raise ValueError("log2 of a non-positive integer")
    shift = max(x.bit_length() - 60, 0)
    return shift + math.log2(x >> shift)


def ep_split_singles_exact(n: int) -> float:
    """E_P of n single particles each split evenly over an Alice and a Bob mode.

    Evaluates 2**-n * sum_k C(n,k) log2 C(n,k) with exact binomials.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0.0
    c = 1
    for k in range(n + 1):
        lc = log2_int(c)
        total += 2.0 ** (lc - n) * lc
        c = c * (n - k) // (k + 1)
    return total


def ep_split_singles_asymptote(n: int) -> float:
    if n < 1:
        raise ValueError("n must be >= 1")
    return n - 0.5 * math.log2(n) - delta()


def split_single(stats="boson") -> tuple:
    """The state |0,1> + |1,0> with its one-and-one mode partition."""
    return make_state(stats, 2, [((0, 1), 1.0), ((1, 0), 1.0)]), ModePartition(1, 1)


def alice_number_variance(s: FockState, p: ModePartition) -> float:
    return sector_decomposition(s, p).variance()


@dataclass
class SuperadditivityReport:
    lhs: float
    rhs: float
    gap: float
    v_psi: float
    v_phi: float
    equality_predicted: bool
    sum_injective: bool

    def to_dict(self) -> dict:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "gap": self.gap,
            "v_psi": self.v_psi,
            "v_phi": self.v_phi,
            "equality_predicted": self.equality_predicted,
            "sum_injective": self.sum_injective,
        }


def check_superadditivity(
    x: FockState, y: FockState, px: ModePartition, py: ModePartition
) -> SuperadditivityReport:
    """Compare E_P of the composed state with the sum of the parts.

    ``equality_predicted`` is the zero-variance condition. ``sum_injective``
    is the sharper condition under which the gap vanishes: every Alice total
    of the composite arises from a single pair of part sectors. The variance
    condition implies it, but not conversely (e.g. Alice numbers {0,1} and
    {0,2} combine injectively).
    """
    if x.stats is not y.stats:
        raise StatsMismatch(f"cannot compose {x.stats.value} with {y.stats.value}")
    sx = sector_decomposition(x, px)
    sy = sector_decomposition(y, py)
    xy, pxy = compose(x, y, px, py)
    lhs = particle_entanglement(xy, pxy)
    rhs = particle_entanglement(x, px) + particle_entanglement(y, py)
    v_psi, v_phi = sx.variance(), sy.variance()
    sums = [a.n + b.n for a in sx for b in sy]
    return SuperadditivityReport(
        lhs=lhs,
        rhs=rhs,
        gap=lhs - rhs,
        v_psi=v_psi,
        v_phi=v_phi,
        equality_predicted=v_psi * v_phi <= VARIANCE_TOL,
        sum_injective=len(set(sums)) == len(sums),
    )


def alice_number_distribution(s: FockState, p: ModePartition, copies: int = 1) -> np.ndarray:
    """Distribution of Alice's particle count over ``copies`` independent copies.

    Index ``k`` holds the probability of ``k`` particles on Alice's side.
    """
    sec = sector_decomposition(s, p)
    base = np.zeros(max(e.n for e in sec) + 1)
    for e in sec:
        base[e.n] = e.probability
    out = np.array([1.0])
    for _ in range(copies):
        out = np.convolve(out, base)
    return out


def ep_of_copies(s: FockState, p: ModePartition, copies: int) -> float:
    """E_P of ``copies`` composed copies without building the composite.

    Alice's reduced state in each sector of the composite is a direct sum over
    the contributing tuples of per-copy sectors, which gives
    ``copies * E_M(s) - H(total Alice count)``.
    """
    if copies < 1:
        raise ValueError("copies must be >= 1")
    return copies * mode_entanglement(s, p) - shannon_entropy(alice_number_distribution(s, p, copies))


@dataclass
class ScalingRow:
    count: int
    exact: float
    asymptote: Optional[float]
    ratio_to_mode_entanglement: Optional[float]

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "exact": self.exact,
            "asymptote": self.asymptote,
            "ratio_to_mode_entanglement": self.ratio_to_mode_entanglement,
        }


def copies_scaling(s: FockState, p: ModePartition, max_copies: int) -> List[ScalingRow]:
    """E_P of 1..max_copies composed copies, computed on the explicit composite.

    The estimate ``C*E_M - log2(V*C)/2`` omits its O(1) term and is ``None``
    when V = 0; the ratio is ``None`` when E_M = 0.
    """
    if max_copies < 1:
        raise ValueError("max_copies must be >= 1")
    if s.is_zero:
        raise EmptyState("operation needs a non-zero state")
    if len(s) ** max_copies > MAX_COPY_TERMS:
        raise TooLarge(f"{len(s)}**{max_copies} terms exceeds {MAX_COPY_TERMS}")
    e_m = mode_entanglement(s, p)
    var = alice_number_variance(s, p)
    rows = []
    cur, cur_p = s, p
    for c in range(1, max_copies + 1):
        if c > 1:
            cur, cur_p = compose(cur, s, cur_p, p)
        exact = particle_entanglement(cur, cur_p)
        est = c * e_m - 0.5 * math.log2(var * c) if var > VARIANCE_TOL else None
        ratio = exact / (c * e_m) if e_m > EQUALITY_TOL else None
        rows.append(ScalingRow(c, exact, est, ratio))
    return rows
