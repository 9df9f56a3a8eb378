"""Acceptance criteria, each run at its stated tolerance and runtime bound.

Every test appends one PASS/FAIL line to conftest.ACCEPTANCE_LINES, which the
terminal summary prints at the end of the run.
"""

import time
from contextlib import contextmanager

import numpy as np

from fockent.asymptotics import (
    check_superadditivity,
    delta,
    ep_split_singles_asymptote,
    ep_split_singles_exact,
    split_single,
)
from fockent.errors import EmptySector, FockError
from fockent.fock import compose
from fockent.measures import (
    mode_entanglement,
    modified_single_particle_dm,
    particle_entanglement,
    py_spectrum,
    shannon_entropy,
    single_particle_entropy,
    von_neumann_entropy,
)
from fockent.parser import format_state, parse_state
from fockent.sampling import RandomStateConfig, random_state, split_boson_pair
from fockent.table1 import run_table1

from conftest import ACCEPTANCE_LINES

SEED = 2003
STATS = ("boson", "fermion")


@contextmanager
def criterion(label, budget):
    """Collect failures, time the block, and record one summary line."""
    failures = []
    start = time.perf_counter()
    yield failures
    elapsed = time.perf_counter() - start
    if elapsed >= budget:
        failures.append(f"runtime {elapsed:.2f}s over {budget}s")
    status = "PASS" if not failures else "FAIL"
    detail = f" ({'; '.join(failures[:3])})" if failures else ""
    ACCEPTANCE_LINES.append(f"{status} {label} [{elapsed:.2f}s]{detail}")
    assert not failures, failures


def brute_force_split_singles(n):
    s, p = split_single()
    cur, cur_p = s, p
    for _ in range(n - 1):
        cur, cur_p = compose(cur, s, cur_p, p)
    return particle_entanglement(cur, cur_p)


def test_c1_table1_golden_suite():
    with criterion("C1 table rows reproduce", 1.0) as failures:
        for row in run_table1():
            if not row.passed:
                failures.append(f"{row.state}: {row.mismatches}")


def test_c2_asymptotic_row():
    with criterion("C2 exact sum, asymptote and delta", 5.0) as failures:
        for n in range(1, 13):
            exact, brute = ep_split_singles_exact(n), brute_force_split_singles(n)
            if abs(exact - brute) > 1e-9:
                failures.append(f"N={n}: {exact} vs {brute}")
        gaps = []
        for n, bound in [(64, 0.05), (128, 0.03), (256, 0.02)]:
            gap = abs(ep_split_singles_exact(n) - ep_split_singles_asymptote(n))
            gaps.append(gap)
            if gap >= bound:
                failures.append(f"N={n}: gap {gap:.3g} >= {bound}")
        if not all(a > b for a, b in zip(gaps, gaps[1:])):
            failures.append(f"gaps not decreasing: {gaps}")
        if abs(delta() - 1.047096) > 5e-7:
            failures.append(f"delta {delta()}")


def test_c3_particle_bounded_by_mode_entanglement():
    with criterion("C3 E_P <= E_M", 10.0) as failures:
        rng = np.random.default_rng(SEED)
        for stats in STATS:
            for i in range(200):
                s, p = random_state(rng, stats)
                e_m, e_p = mode_entanglement(s, p), particle_entanglement(s, p)
                if e_p > e_m + 1e-9:
                    failures.append(f"{stats} #{i}: E_P {e_p} > E_M {e_m}")


def _random_pairs(count):
    rng = np.random.default_rng(SEED)
    cfg = RandomStateConfig(max_modes=4, max_terms=4, max_particles=3)
    for i in range(count):
        stats = STATS[i % 2]
        x, px = random_state(rng, stats, cfg)
        y, py = random_state(rng, stats, cfg)
        yield i, check_superadditivity(x, y, px, py)


def test_c4a_superadditivity_bound_and_reference_pairs():
    with criterion("C4a super-additivity gap >= 0, reference pairs", 20.0) as failures:
        for i, r in _random_pairs(200):
            if r.gap < -1e-9:
                failures.append(f"pair {i}: gap {r.gap}")
        s, p = split_single()
        r = check_superadditivity(s, s, p, p)
        if abs(r.lhs - 0.5) > 1e-9 or abs(r.rhs) > 1e-9:
            failures.append(f"self pair lhs {r.lhs} rhs {r.rhs}")
        d, pd = parse_state("(|0,1>+|1,0>)^2")
        r = check_superadditivity(d, d, pd, pd)
        if abs(r.lhs - ep_split_singles_exact(4)) > 1e-9:
            failures.append(f"double pair lhs {r.lhs}")


def test_c4b_superadditivity_equality_iff_zero_variance():
    # Held at full strength. The gap equals H(n_x) + H(n_y) - H(n_x + n_y), so
    # it also vanishes when the sum of Alice numbers is injective on the
    # support; pairs of that kind make this criterion fail.
    with criterion("C4b gap <= 1e-9 exactly when min variance < 1e-12", 20.0) as failures:
        for i, r in _random_pairs(200):
            zero_gap = r.gap <= 1e-9
            zero_var = min(r.v_psi, r.v_phi) < 1e-12
            if zero_gap != zero_var:
                failures.append(f"pair {i}: gap {r.gap:.3g}, V=({r.v_psi:.3g}, {r.v_phi:.3g})")
        if failures:
            failures.insert(0, f"{len(failures)} of 200 pairs break the biconditional")


def test_c5_one_sector_identity():
    with criterion("C5 P1 S(rho_A) = E_P", 5.0) as failures:
        rng = np.random.default_rng(SEED)
        for stats in STATS:
            for i in range(100):
                s, p = random_state(rng, stats, n_particles=2)
                e_p = particle_entanglement(s, p)
                try:
                    rho, p1 = modified_single_particle_dm(s, p)
                    lhs = p1 * von_neumann_entropy(rho)
                except EmptySector:
                    lhs = 0.0
                if abs(lhs - e_p) > 1e-9:
                    failures.append(f"{stats} #{i}: {lhs} vs {e_p}")


def test_c6_canonical_spectra_and_split_pairs():
    with criterion("C6 py spectra, split boson pairs", 5.0) as failures:
        rng = np.random.default_rng(SEED)
        for stats, offset in (("boson", 0.0), ("fermion", 1.0)):
            for i in range(100):
                s, _ = random_state(rng, stats, n_particles=2)
                h = shannon_entropy(py_spectrum(s))
                if abs(single_particle_entropy(s) - (offset + h)) > 1e-9:
                    failures.append(f"{stats} #{i}")
        for i in range(50):
            alpha, beta = rng.normal(size=2) + 1j * rng.normal(size=2)
            s, p = split_boson_pair(alpha, beta)
            if abs(particle_entanglement(s, p)) > 1e-9:
                failures.append(f"split pair #{i}")


def test_c7_copies_limit():
    with criterion("C7 exact/(C E_M) -> 1", 2.0) as failures:
        s, p = split_single()
        e_m = mode_entanglement(s, p)
        grid = [2**k for k in range(10)]
        ratios = [ep_split_singles_exact(c) / (c * e_m) for c in grid]
        if not all(a < b for a, b in zip(ratios, ratios[1:])):
            failures.append("ratio not increasing")
        if ratios[-1] <= 0.98:
            failures.append(f"C=512 ratio {ratios[-1]}")


TABLE_STATES = [
    "|0,1>+|1,0>",
    "|1,1>",
    "(|0,1>+|1,0>)(|0,1>+|1,0>)",
    "|0,2>+|2,0>",
    "|0,2>+sqrt(2)|1,1>+|2,0>",
    "|01,10>+|10,01>",
    "|11,00>+|00,11>",
]
FUZZ_ALPHABET = list("|,<>()+-^*.0123456789 sqrtje") + ["sqrt(", "|0,1>", "|1,0>", "^2"]


def test_c8_parser_round_trip_and_fuzz():
    with criterion("C8 parser round trip, 10^4 fuzz cases", 10.0) as failures:
        for text in TABLE_STATES:
            s, p = parse_state(text)
            again, q = parse_state(format_state(s, p))
            if q != p or set(again.terms) != set(s.terms):
                failures.append(f"round trip {text}")
            elif max(abs(again.terms[k] - a) for k, a in s.terms.items()) > 1e-12:
                failures.append(f"round trip amplitudes {text}")
        rng = np.random.default_rng(SEED)
        for i in range(10_000):
            length = int(rng.integers(0, 24))
            text = "".join(FUZZ_ALPHABET[j] for j in rng.integers(0, len(FUZZ_ALPHABET), size=length))
            try:
                parse_state(text, STATS[i % 2])
            except FockError:
                pass
            except Exception as exc:  # noqa: BLE001
                failures.append(f"{text!r}: {type(exc).__name__}")
