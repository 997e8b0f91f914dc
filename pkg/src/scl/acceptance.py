"""The ten acceptance criteria as runnable checks.

Each check returns ``(passed, detail)``; :func:`run_all` times them against
their budgets. ``quick`` trims sample counts so the whole run fits in CI.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from .cayley import (
    DistanceOracle,
    bfs_distances,
    brute_force_isometric_cycles,
    canonical_cycle,
    enumerate_isometric_cycles,
    from_key,
)
from .families import (
    VARIANTS,
    null_by_both_routes,
    u_k,
    verify_claim_identities,
    w_n,
    z2_distance_table,
)
from .group import STD, TWISTED, TWISTED_RELATORS, apply_automorphism, check_relators, evaluate
from .shortcut_free import best_split_value, sharpness_word, split_null_word
from .shortcut_product import LAMBDA, RATIO_THRESHOLD, shortcut, verify_certificate
from .words import Letter, Word, cyclic_conjugate, free_reduce, random_null_word


@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    budget: float  # seconds
    check: Callable[["Settings"], tuple[bool, str]]


@dataclass(frozen=True)
class Settings:
    level: str = "full"
    seed: int = 20240607
    radius_cap: int = 8

    @property
    def quick(self) -> bool:
        return self.level == "quick"

    def samples(self, full: int, quick: int) -> int:
        return quick if self.quick else full

    def rng(self, salt: int) -> random.Random:
        return random.Random(self.seed * 1_000_003 + salt)


def presentation(cfg: Settings):
    results = check_relators(TWISTED, TWISTED_RELATORS)
    return all(results), f"relators {list(TWISTED_RELATORS)} -> {results}"


def null_family(cfg: Settings):
    bad = [n for n in range(11) if not null_by_both_routes(n)]
    return not bad, f"w_n null for n=0..10 by both routes; failures {bad}"


def free_lemma(cfg: Settings):
    rng = cfg.rng(3)
    count = cfg.samples(1000, 200)
    failures = []
    start = time.perf_counter()
    for i in range(count):
        length = rng.randrange(2, 401, 2)
        u = random_null_word(length, 1.0, rng.getrandbits(64))
        rotation, u1, u2 = split_null_word(u)
        if (
            cyclic_conjugate(u, rotation) != u1 + u2
            or free_reduce(u1).letters
            or free_reduce(u2).letters
            or min(len(u1), len(u2)) < length // 3
        ):
            failures.append(i)
    random_secs = time.perf_counter() - start
    start = time.perf_counter()
    sharp = {m: best_split_value(sharpness_word(m, STD)) for m in (1, 2, 3)}
    sharp_ok = all(v == 2 * m for m, v in sharp.items())
    sharp_secs = time.perf_counter() - start
    in_time = random_secs < 10.0 and sharp_secs < 5.0
    return (
        not failures and sharp_ok and in_time,
        f"{count} random words, {len(failures)} failures [{random_secs:.2f}s < 10s]; "
        f"brute-force optimum {sharp} [{sharp_secs:.2f}s < 5s]",
    )


def product_shortcut(cfg: Settings):
    rng = cfg.rng(4)
    count = cfg.samples(1000, 200)
    failures, ratio_checked = [], 0
    for i in range(count):
        length = rng.randrange(24, 241, 2)
        w = random_null_word(length, rng.random(), rng.getrandbits(64))
        cert = shortcut(w)
        check = verify_certificate(w, cert)
        bound = length - length // 6
        ok = bool(check) and cert.loop1_length <= bound and cert.loop2_length <= bound
        if length >= RATIO_THRESHOLD:
            ratio_checked += 1
            a, b, m = len(cert.w1), len(cert.w2), len(cert.mu)
            ok = ok and (1 - LAMBDA) * length <= a <= b and m <= LAMBDA * a
        if not ok:
            failures.append((i, check.reason))
    return not failures, (
        f"{count} certificates ({ratio_checked} with |w| >= {RATIO_THRESHOLD}), "
        f"failures {failures[:5]}"
    )


def geodesic_family(cfg: Settings):
    oracle = DistanceOracle(TWISTED, radius_cap=cfg.radius_cap)
    top = 3 if cfg.quick else 5
    bad = []
    checked = 0
    for n in range(top + 1):
        for k in range(n + 1):
            for v in VARIANTS:
                u = u_k(n, k, v)
                checked += 1
                if len(u) != 2 * n + 2 or not oracle.is_geodesic(u):
                    bad.append((n, k, v))
    return not bad, f"{checked} words u_k for n <= {top} geodesic; failures {bad}"


def isometric_cycles(cfg: Settings):
    oracle = DistanceOracle(TWISTED, radius_cap=cfg.radius_cap)
    top = 3 if cfg.quick else 4
    reports = {n: oracle.is_isometric_cycle(w_n(n)) for n in range(top + 1)}
    bad = {n: r.violation for n, r in reports.items() if not r.is_isometric}
    return not bad, f"w_n isometric for n=0..{top}; violations {bad}"


def z2_lemma(cfg: Settings):
    oracle = DistanceOracle(TWISTED, radius_cap=cfg.radius_cap)
    rows = z2_distance_table(4, oracle)
    bad = [r for r in rows if r[2] != r[3]]
    return not bad, f"{len(rows)} rows b^m t^l, |m|,|l| <= 4; mismatches {bad}"


def contrast(cfg: Settings):
    std = DistanceOracle(STD, radius_cap=cfg.radius_cap)
    tw = DistanceOracle(TWISTED, radius_cap=cfg.radius_cap)
    std_max = 10 if cfg.quick else 12
    std_cycles = enumerate_isometric_cycles(std, std_max)
    std_lengths = sorted({len(w) for w in std_cycles})
    tw_cycles = enumerate_isometric_cycles(tw, 8)
    target = canonical_cycle(w_n(1))
    has_w1 = target in tw_cycles
    cross = []
    for alph in (STD, TWISTED):
        pruned = enumerate_isometric_cycles(DistanceOracle(alph, radius_cap=cfg.radius_cap), 6)
        brute = brute_force_isometric_cycles(DistanceOracle(alph, radius_cap=cfg.radius_cap), 6)
        cross.append(pruned == brute)
    ok = std_lengths == [4] and has_w1 and all(cross)
    return ok, (
        f"std <= {std_max}: {len(std_cycles)} cycles, lengths {std_lengths}; "
        f"twisted <= 8: {len(tw_cycles)} cycles, contains {target}: {has_w1}; "
        f"pruned == brute force at 6 (std, twisted): {cross}"
    )


def metric_sanity(cfg: Settings):
    rng = cfg.rng(9)
    std = DistanceOracle(STD, radius_cap=cfg.radius_cap)
    std.grow_to(8)
    keys = sorted(std.ball_elements())
    sample = rng.sample(keys, cfg.samples(1000, 200))
    closed = sum(std.distance_key(k) != from_key(k).length for k in sample)

    radius = 4 if cfg.quick else 6
    cross = {}
    for alph in (STD, TWISTED):
        reference = bfs_distances(alph, radius)
        bidi = DistanceOracle(alph, radius_cap=(radius + 1) // 2)
        cross[alph.name] = sum(bidi.distance_key(k) != d for k, d in reference.items())

    tw = DistanceOracle(TWISTED, radius_cap=cfg.radius_cap)
    iso_bad = 0
    for _ in range(cfg.samples(200, 50)):
        length = rng.randrange(1, 13)
        w = Word(tuple(Letter(rng.randrange(4), rng.choice((1, -1))) for _ in range(length)), TWISTED)
        d = tw.distance(evaluate(w))
        for which in ("phi", "psi"):
            if tw.distance(evaluate(apply_automorphism(which, w))) != d:
                iso_bad += 1
    ok = closed == 0 and not any(cross.values()) and iso_bad == 0
    return ok, (
        f"closed form mismatches {closed}/{len(sample)}; bidirectional vs BFS mismatches "
        f"on radius-{radius} balls {cross}; phi/psi isometry failures {iso_bad}"
    )


def claim_identities(cfg: Settings):
    bad = [n for n in range(11) if not verify_claim_identities(n)]
    return not bad, f"identities for n=0..10; failures {bad}"


CRITERIA = (
    Criterion(1, "presentation relators", 1.0, presentation),
    Criterion(2, "null family w_n", 1.0, null_family),
    Criterion(3, "free-group split lemma and sharpness", 15.0, free_lemma),
    Criterion(4, "product shortcut certificates", 30.0, product_shortcut),
    Criterion(5, "geodesic u-family", 300.0, geodesic_family),
    Criterion(6, "isometric cycles w_n", 300.0, isometric_cycles),
    Criterion(7, "Z^2 subgroup distances", 60.0, z2_lemma),
    Criterion(8, "cycle enumeration contrast", 600.0, contrast),
    Criterion(9, "metric sanity", 120.0, metric_sanity),
    Criterion(10, "automorphism word identities", 1.0, claim_identities),
)


@dataclass(frozen=True)
class Outcome:
    criterion: Criterion
    passed: bool
    detail: str
    seconds: float

    @property
    def in_budget(self) -> bool:
        return self.seconds <= self.criterion.budget

    @property
    def ok(self) -> bool:
        return self.passed and self.in_budget

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        budget = "" if self.in_budget else f" (over {self.criterion.budget:g}s budget)"
        return (
            f"[{tag}] {self.criterion.number:2d}. {self.criterion.name}: "
            f"{self.detail} [{self.seconds:.2f}s{budget}]"
        )


def run_criterion(criterion: Criterion, cfg: Settings) -> Outcome:
    start = time.perf_counter()
    passed, detail = criterion.check(cfg)
    return Outcome(criterion, bool(passed), detail, time.perf_counter() - start)


def run_all(cfg: Settings = Settings(), echo: Callable[[str], None] | None = print) -> list[Outcome]:
    outcomes = []
    for c in CRITERIA:
        out = run_criterion(c, cfg)
        if echo:
            echo(out.line())
        outcomes.append(out)
    return outcomes


def stretch_cycles(ns=(5, 6), radius_cap: int = 8) -> dict[int, bool]:
    """Non-gating: isometry of longer w_n."""
    oracle = DistanceOracle(TWISTED, radius_cap=radius_cap)
    return {n: oracle.is_isometric_cycle(w_n(n)).is_isometric for n in ns}
