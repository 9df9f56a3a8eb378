"""Sparse Fock-basis states of identical bosons or fermions.

A state is a map from occupation vectors to complex amplitudes. Modes are
globally ordered Alice-block first, then Bob-block; every fermionic sign in
the package is derived from that single order (Jordan-Wigner style: an
operator on mode ``j`` picks up ``(-1)`` per occupied mode with index ``< j``).

States are never normalized implicitly. Measures divide the norm out.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Tuple

import numpy as np

from .errors import (
    FermionOccupancyViolation,
    IndexOutOfRange,
    LengthMismatch,
    MixedParticleNumber,
    NonFiniteAmplitude,
    OccupationOverflow,
    ShapeMismatch,
    StatsMismatch,
)

PRUNE_TOL = 1e-12
MAX_OCCUPATION = 9

Occupation = Tuple[int, ...]


class Statistics(enum.Enum):
    BOSON = "boson"
    FERMION = "fermion"

    @classmethod
    def parse(cls, value: "str | Statistics") -> "Statistics":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown statistics {value!r}; expected 'boson' or 'fermion'") from None


@dataclass(frozen=True)
class ModePartition:
    """Modes ``0..alice_modes-1`` belong to Alice, the remaining ``bob_modes`` to Bob."""

    alice_modes: int
    bob_modes: int

    def __post_init__(self):
        if self.alice_modes < 0 or self.bob_modes < 0:
            raise ValueError("mode counts must be non-negative")

    @classmethod
    def split(cls, mode_count: int, alice_modes: int) -> "ModePartition":
        if not 0 <= alice_modes <= mode_count:
            raise ValueError(f"alice_modes={alice_modes} outside [0, {mode_count}]")
        return cls(alice_modes, mode_count - alice_modes)

    @property
    def mode_count(self) -> int:
        return self.alice_modes + self.bob_modes

    def alice(self, occ: Occupation) -> Occupation:
        return occ[: self.alice_modes]

    def bob(self, occ: Occupation) -> Occupation:
        return occ[self.alice_modes :]

    def alice_number(self, occ: Occupation) -> int:
        return sum(occ[: self.alice_modes])


@dataclass(frozen=True, eq=False)
class FockState:
    """Immutable pure state with a fixed total particle number.

    Build instances with :func:`make_state`; the constructor does not
    validate. The zero state has an empty ``terms`` map but still records
    ``total_particles``.
    """

    stats: Statistics
    mode_count: int
    terms: Mapping[Occupation, complex] = field(repr=False)
    total_particles: int

    def __post_init__(self):
        if not isinstance(self.terms, MappingProxyType):
            object.__setattr__(self, "terms", MappingProxyType(dict(self.terms)))

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return (
            f"FockState({self.stats.value}, M={self.mode_count}, "
            f"N={self.total_particles}, terms={len(self.terms)})"
        )

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def norm_sq(self) -> float:
        return float(sum(abs(a) ** 2 for a in self.terms.values()))

    def items(self):
        """Terms in lexicographic occupation order."""
        return sorted(self.terms.items())

    def amplitude(self, occ: Sequence[int]) -> complex:
        return self.terms.get(tuple(occ), 0j)

    def scaled(self, factor: complex) -> "FockState":
        return _clean(self.stats, self.mode_count, self.total_particles,
                      {k: factor * a for k, a in self.terms.items()})

    def normalized(self) -> "FockState":
        return self.scaled(1.0 / np.sqrt(self.norm_sq()))

    def __mul__(self, factor) -> "FockState":
        if isinstance(factor, FockState):
            return NotImplemented
        return self.scaled(complex(factor))

    __rmul__ = __mul__

    def __neg__(self) -> "FockState":
        return self.scaled(-1.0)

    def __add__(self, other: "FockState") -> "FockState":
        if not isinstance(other, FockState):
            return NotImplemented
        _check_shapes(self, other)
        merged = dict(self.terms)
        for k, a in other.terms.items():
            merged[k] = merged.get(k, 0j) + a
        if self.is_zero:
            n = other.total_particles
        elif other.is_zero:
            n = self.total_particles
        elif self.total_particles != other.total_particles:
            raise MixedParticleNumber(
                f"cannot add states with N={self.total_particles} and N={other.total_particles}"
            )
        else:
            n = self.total_particles
        return _clean(self.stats, self.mode_count, n, merged)

    def __sub__(self, other: "FockState") -> "FockState":
        return self + (-other)


def _clean(stats: Statistics, mode_count: int, n: int, terms: dict) -> FockState:
    kept = {k: complex(a) for k, a in terms.items() if abs(a) > PRUNE_TOL}
    if not all(cmath.isfinite(a) for a in kept.values()):
        raise NonFiniteAmplitude("amplitude overflowed to a non-finite value")
    return FockState(stats, mode_count, kept, n)


def make_state(
    stats: "Statistics | str",
    mode_count: int,
    terms: Iterable[Tuple[Sequence[int], complex]],
    total_particles: "int | None" = None,
) -> FockState:
    """Build a validated state from ``(occupations, amplitude)`` pairs.

    Duplicate occupation vectors are summed and near-zero amplitudes are
    dropped. ``total_particles`` only matters for a state that cancels to
    zero; otherwise it must agree with the surviving terms.
    """
    stats = Statistics.parse(stats)
    acc: dict = {}
    first_total = None
    for occ, amp in terms:
        occ = tuple(int(x) for x in occ)
        if len(occ) != mode_count:
            raise LengthMismatch(f"occupation {occ} has length {len(occ)}, expected {mode_count}")
        if any(x < 0 for x in occ):
            raise LengthMismatch(f"negative occupation in {occ}")
        if stats is Statistics.FERMION and any(x > 1 for x in occ):
            raise FermionOccupancyViolation(f"fermion occupation {occ} has a mode with more than one particle")
        if any(x > MAX_OCCUPATION for x in occ):
            raise OccupationOverflow(f"occupation {occ} exceeds {MAX_OCCUPATION} particles in a mode")
        amp = complex(amp)
        if not cmath.isfinite(amp):
            raise NonFiniteAmplitude(f"non-finite amplitude {amp}")
        if first_total is None:
            first_total = sum(occ)
        acc[occ] = acc.get(occ, 0j) + amp

    state = _clean(stats, mode_count, 0, acc)
    totals = {sum(k) for k in state.terms}
    if len(totals) > 1:
        raise MixedParticleNumber(f"terms carry different particle numbers {sorted(totals)}")
    if totals:
        n = totals.pop()
        if total_particles is not None and total_particles != n:
            raise MixedParticleNumber(f"declared N={total_particles} but terms have N={n}")
    else:
        n = total_particles if total_particles is not None else (first_total or 0)
    return FockState(stats, mode_count, state.terms, n)


def vacuum(stats: "Statistics | str", mode_count: int = 0) -> FockState:
    return make_state(stats, mode_count, [((0,) * mode_count, 1.0)])


def basis_state(stats: "Statistics | str", occ: Sequence[int]) -> FockState:
    return make_state(stats, len(occ), [(occ, 1.0)])


def _check_shapes(x: FockState, y: FockState) -> None:
    if x.stats is not y.stats:
        raise ShapeMismatch(f"statistics differ: {x.stats.value} vs {y.stats.value}")
    if x.mode_count != y.mode_count:
        raise ShapeMismatch(f"mode counts differ: {x.mode_count} vs {y.mode_count}")


def inner_product(x: FockState, y: FockState) -> complex:
    """<x|y>, antilinear in the first argument."""
    _check_shapes(x, y)
    small, large = (x, y) if len(x.terms) <= len(y.terms) else (y, x)
    total = 0j
    for k in small.terms:
        if k in large.terms:
            total += x.terms[k].conjugate() * y.terms[k]
    return total


def _check_mode(s: FockState, mode: int) -> None:
    if not 0 <= mode < s.mode_count:
        raise IndexOutOfRange(f"mode {mode} outside [0, {s.mode_count})")


def apply_annihilation(s: FockState, mode: int) -> FockState:
    _check_mode(s, mode)
    fermion = s.stats is Statistics.FERMION
    out = {}
    for occ, amp in s.terms.items():
        n = occ[mode]
        if n == 0:
            continue
        new = occ[:mode] + (n - 1,) + occ[mode + 1 :]
        if fermion:
            factor = -1.0 if sum(occ[:mode]) % 2 else 1.0
        else:
            factor = np.sqrt(n)
        out[new] = factor * amp
    return _clean(s.stats, s.mode_count, s.total_particles - 1, out)


def apply_creation(s: FockState, mode: int) -> FockState:
    _check_mode(s, mode)
    fermion = s.stats is Statistics.FERMION
    out = {}
    for occ, amp in s.terms.items():
        n = occ[mode]
        if fermion:
            if n == 1:
                continue
            factor = -1.0 if sum(occ[:mode]) % 2 else 1.0
        else:
            if n >= MAX_OCCUPATION:
                raise OccupationOverflow(f"mode {mode} would exceed {MAX_OCCUPATION} particles")
            factor = np.sqrt(n + 1)
        new = occ[:mode] + (n + 1,) + occ[mode + 1 :]
        out[new] = factor * amp
    return _clean(s.stats, s.mode_count, s.total_particles + 1, out)


def compose(
    x: FockState,
    y: FockState,
    px: ModePartition,
    py: ModePartition,
    *,
    fermion_sign: bool = True,
) -> Tuple[FockState, ModePartition]:
    """Tensor product of states living on disjoint modes.

    The result's Alice block is x's Alice modes followed by y's, and the Bob
    block likewise. Moving x's Bob operators past y's Alice operators costs
    ``(-1)**(n_B(x) * n_A(y))`` for fermions. ``fermion_sign=False`` drops that
    factor; it exists so the sign's irrelevance to the measures can be checked.
    """
    if x.stats is not y.stats:
        raise StatsMismatch(f"cannot compose {x.stats.value} with {y.stats.value}")
    if px.mode_count != x.mode_count or py.mode_count != y.mode_count:
        raise ShapeMismatch("partition does not match state mode count")
    signed = fermion_sign and x.stats is Statistics.FERMION
    ka, kb = px.alice_modes, py.alice_modes
    out = {}
    for ox, ax in x.terms.items():
        xa, xb = ox[:ka], ox[ka:]
        nbx = sum(xb)
        for oy, ay in y.terms.items():
            ya, yb = oy[:kb], oy[kb:]
            amp = ax * ay
            if signed and (nbx * sum(ya)) % 2:
                amp = -amp
            out[xa + ya + xb + yb] = amp
    part = ModePartition(ka + kb, px.bob_modes + py.bob_modes)
    state = _clean(x.stats, part.mode_count, x.total_particles + y.total_particles, out)
    return state, part
