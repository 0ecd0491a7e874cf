"""Verification harness: exhaustive / sampled checking of the structural results.

Drives every invariant suite over the degree-n universe (all ideals
generated by full-degree pair-excluding monomials), plus the random-set
suites for dominant closed forms, scaling, and the code pipeline.  A
correct implementation produces a report with zero counterexamples.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from . import codes as codes_mod
from .betti import (
    betti_table,
    dominant_check,
    dominant_invariants,
    euler_discrepancy,
    has_linear_resolution,
    reg_upper_bound_lcm,
)
from .homology import FieldTag
from .monomials import (
    Monomial,
    MonomialIdeal,
    PolarizedNeuralIdeal,
    lcm_closure,
    minimalize,
    restrict,
    scale,
    validate_polarized_neural,
)
from .structure import (
    JNotLinearError,
    betti_splitting_predict,
    linear_quotients_search,
    recursive_linear_check,
    split_at_neuron,
)


@dataclass
class Counterexample:
    suite: str
    subject: str
    detail: str

    def to_json_dict(self) -> dict:
        return {"suite": self.suite, "subject": self.subject, "detail": self.detail}


@dataclass
class VerificationReport:
    """Outcome of one verification run; deterministic given (n, mode, seed)."""

    n: int
    mode: str
    seed: int
    examined: int = 0
    field_tag: str = FieldTag.F2.value
    suite_passes: dict[str, int] = field(default_factory=dict)
    suite_checked: dict[str, int] = field(default_factory=dict)
    counterexamples: list[Counterexample] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def record(self, suite: str, subject: str, failures: list[str]) -> None:
        self.suite_checked[suite] = self.suite_checked.get(suite, 0) + 1
        if failures:
            for f in failures:
                self.counterexamples.append(Counterexample(suite, subject, f))
        else:
            self.suite_passes[suite] = self.suite_passes.get(suite, 0) + 1

    def merge_results(self, subject: str, results: dict[str, list[str]]) -> None:
        for suite, failures in results.items():
            self.record(suite, subject, failures)

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "n": self.n,
            "mode": self.mode,
            "seed": self.seed,
            "field": self.field_tag,
            "examined": self.examined,
            "suites": {
                suite: {
                    "checked": self.suite_checked[suite],
                    "passed": self.suite_passes.get(suite, 0),
                }
                for suite in sorted(self.suite_checked)
            },
            "counterexamples": [c.to_json_dict() for c in self.counterexamples],
            "findings": list(self.findings),
            "timings": {k: round(v, 3) for k, v in sorted(self.timings.items())},
        }


def degree_n_universe(n: int) -> list[Monomial]:
    """All 2^n full-degree pair-excluding monomials, canonically sorted."""
    out = []
    for choice in range(1 << n):
        mask = 0
        for i in range(n):
            mask |= 1 << (n + i) if choice >> i & 1 else 1 << i
        out.append(Monomial(mask, n))
    out.sort(key=Monomial.sort_key)
    return out


def ideal_from_subset(universe: list[Monomial], subset: int) -> PolarizedNeuralIdeal:
    gens = [universe[i] for i in range(len(universe)) if subset >> i & 1]
    # equal degrees: any nonempty subset is already an antichain
    return validate_polarized_neural(minimalize(gens, universe[0].n))


def enumerate_degree_n_subsets(n: int) -> Iterator[int]:
    yield from range(1, 1 << (1 << n))


def sample_degree_n_subsets(n: int, count: int, seed: int) -> list[int]:
    """Uniform over nonempty subsets of the degree-n universe, with replacement."""
    rng = random.Random(seed)
    top = 1 << (1 << n)
    return [rng.randrange(1, top) for _ in range(count)]


def check_degree_n_ideal(ideal: PolarizedNeuralIdeal,
                         field_tag: FieldTag = FieldTag.F2,
                         restriction_closure: bool = True,
                         field_compare: bool = False) -> dict[str, list[str]]:
    """Run every per-ideal suite; returns suite name -> list of failures."""
    inner = ideal.inner
    n = inner.n
    results: dict[str, list[str]] = {}
    table = betti_table(inner, field_tag)
    pd, reg = table.pd, table.reg

    fails = []
    if not 0 <= pd <= 2 * n - 1:
        fails.append(f"pd = {pd} outside [0, {2 * n - 1}]")
    if not 1 <= reg <= 2 * n - 1:
        fails.append(f"reg = {reg} outside [1, {2 * n - 1}]")
    if pd > n:
        fails.append(f"pd = {pd} exceeds n = {n} for a degree-n ideal")
    if reg < n:
        fails.append(f"reg = {reg} below n = {n} for a degree-n ideal")
    results["bounds"] = fails

    fails = []
    disc = euler_discrepancy(inner, table)
    if disc:
        fails.append(f"Euler identity off at multidegrees {sorted(disc)}")
    gen_masks = {g.mask for g in inner.gens}
    beta0 = {b: r for (i, b), r in table.fine.items() if i == 0}
    if beta0 != {m: 1 for m in gen_masks}:
        fails.append(f"beta_0 multidegrees {sorted(beta0)} != mingens {sorted(gen_masks)}")
    if reg < inner.max_degree():
        fails.append(f"reg = {reg} below max generator degree {inner.max_degree()}")
    bound = reg_upper_bound_lcm(inner)
    if reg > bound:
        fails.append(f"reg = {reg} exceeds the lcm-subset bound {bound}")
    results["oracle"] = fails

    fails = []
    lr = table.reg == n  # degree-n equigenerated
    rlc = recursive_linear_check(ideal, pivot="last")
    rlc_alt = recursive_linear_check(ideal, pivot="smallest")
    lq = linear_quotients_search(inner)
    if rlc != lr:
        fails.append(f"recursive check {rlc} != oracle linear resolution {lr}")
    if (lq is not None) != lr:
        fails.append(f"linear quotients {'found' if lq else 'absent'} but oracle LR is {lr}")
    if rlc_alt != rlc:
        fails.append("recursive check depends on the pivot rule")
    results["agreement"] = fails

    if restriction_closure:
        fails = []
        if lr or lq is not None:
            for m in lcm_closure(inner):
                sub = restrict(inner, m)
                if not sub.is_proper_nonzero or sub == inner:
                    continue
                if lr and not has_linear_resolution(sub, field_tag):
                    fails.append(f"restriction to {m} loses linear resolution")
                if lq is not None and linear_quotients_search(sub) is None:
                    fails.append(f"restriction to {m} loses linear quotients")
        results["restriction"] = fails

    fails = []
    split = split_at_neuron(ideal, n)
    if split.J.is_proper_nonzero and split.K.is_proper_nonzero:
        try:
            pred = betti_splitting_predict(inner, split, field_tag)
        except JNotLinearError:
            pred = None
        if pred is not None:
            if (pred.pd, pred.reg) != (pd, reg):
                fails.append(
                    f"splitting predicts (pd, reg) = ({pred.pd}, {pred.reg}), "
                    f"oracle gives ({pd}, {reg})"
                )
            if pred.fine != table.fine:
                fails.append("termwise Betti splitting identity fails")
    results["splitting"] = fails

    if field_compare:
        other = betti_table(inner, FieldTag.RATIONALS if field_tag is FieldTag.F2
                            else FieldTag.F2)
        if other.fine != table.fine:
            results.setdefault("field-compare", []).append(
                "Betti table differs between F2 and the rationals"
            )
        else:
            results.setdefault("field-compare", [])

    return results


def _check_subset(args) -> tuple[str, dict[str, list[str]]]:
    n, subset, field_value, restriction, field_compare = args
    universe = degree_n_universe(n)
    ideal = ideal_from_subset(universe, subset)
    results = check_degree_n_ideal(
        ideal, FieldTag(field_value),
        restriction_closure=restriction, field_compare=field_compare,
    )
    return str(ideal), results


def random_polarized_ideal(rng: random.Random, n: int,
                           max_gens: int = 6,
                           neurons: Optional[list[int]] = None) -> MonomialIdeal:
    """A random pair-excluding squarefree ideal, optionally confined to `neurons`."""
    pool = neurons if neurons is not None else list(range(1, n + 1))
    while True:
        gens = []
        for _ in range(rng.randint(1, max_gens)):
            mask = 0
            for i in pool:
                r = rng.random()
                if r < 1 / 3:
                    mask |= 1 << (i - 1)
                elif r < 2 / 3:
                    mask |= 1 << (n + i - 1)
            if mask:
                gens.append(Monomial(mask, n))
        ideal = minimalize(gens, n)
        if ideal.is_proper_nonzero:
            return ideal


def scaling_suite(report: VerificationReport, trials: int, seed: int, n: int = 3) -> None:
    """pd(uI) = pd(I) and reg(uI) = reg(I) + deg(u) for variable-disjoint u."""
    rng = random.Random(seed)
    for _ in range(trials):
        k = rng.randint(1, n - 1)
        inside = sorted(rng.sample(range(1, n + 1), k))
        outside = [i for i in range(1, n + 1) if i not in inside]
        ideal = random_polarized_ideal(rng, n, neurons=inside)
        umask = 0
        for i in outside:
            r = rng.random()
            if r < 0.45:
                umask |= 1 << (i - 1)
            elif r < 0.9:
                umask |= 1 << (n + i - 1)
        u = Monomial(umask, n)
        scaled = scale(u, ideal)
        t0 = betti_table(ideal)
        t1 = betti_table(scaled)
        fails = []
        if t1.pd != t0.pd:
            fails.append(f"pd changed {t0.pd} -> {t1.pd} under scaling by {u}")
        if t1.reg != t0.reg + u.degree:
            fails.append(f"reg {t0.reg} + deg {u.degree} != {t1.reg} under scaling by {u}")
        report.record("scaling", f"{u} * {ideal}", fails)


def random_dominant_ideal(rng: random.Random, n: int) -> MonomialIdeal:
    """A random ideal whose minimal generators form a dominant set."""
    while True:
        variables = list(range(2 * n))
        rng.shuffle(variables)
        q = rng.randint(1, min(4, 2 * n))
        private, shared = variables[:q], variables[q:]
        gens = []
        for k in range(q):
            mask = 1 << private[k]
            for b in shared:
                if rng.random() < 0.3:
                    mask |= 1 << b
            gens.append(Monomial(mask, n))
        ideal = minimalize(gens, n)
        if len(ideal.gens) == q and dominant_check(ideal) is not None:
            return ideal


def dominant_suite(report: VerificationReport, trials: int, seed: int, n_max: int = 4) -> None:
    """Closed-form dominant (pd, reg) equals the homology oracle exactly."""
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(1, n_max)
        ideal = random_dominant_ideal(rng, n)
        closed = dominant_invariants(ideal)
        t = betti_table(ideal)
        fails = []
        if closed != (t.pd, t.reg):
            fails.append(f"closed form {closed} != oracle ({t.pd}, {t.reg})")
        report.record("dominant", str(ideal), fails)


def code_suite(report: VerificationReport, trials: int, seed: int, n_max: int = 4) -> None:
    """Pipeline soundness for random codes: vanishing, sharpness, ideal shape."""
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(1, n_max)
        words = frozenset(w for w in range(1 << n) if rng.random() < 0.5)
        code = codes_mod.NeuralCode(n, words)
        pseudos = codes_mod.vanishing_generators(code)
        fails = []
        covered = set()
        for p in pseudos:
            for w in range(1 << n):
                val = codes_mod.evaluate(p, w, n)
                if w in words and val:
                    fails.append(f"{p} does not vanish on codeword {w:0{n}b}")
                if val:
                    covered.add(w)
        expected_off = set(range(1 << n)) - words
        if covered != expected_off:
            fails.append("indicator supports do not cover exactly the non-codewords")
        if len(pseudos) != (1 << n) - len(words):
            fails.append(f"{len(pseudos)} pseudomonomials for {(1 << n) - len(words)} non-words")
        ideal = codes_mod.code_to_polarized_ideal(code)
        if len(words) == (1 << n):
            if not ideal.inner.is_zero:
                fails.append("full code did not give the zero ideal")
        else:
            if len(ideal.inner.gens) != (1 << n) - len(words):
                fails.append("generator count != 2^n - |C|")
            if any(g.degree != n for g in ideal.inner.gens):
                fails.append("pipeline output not equigenerated in degree n")
        report.record("code-pipeline", codes_mod.word_to_string(0, n) if not words
                      else ",".join(code.word_strings()), fails)


def lr_lq_witness_findings(n: int, degree: int, trials: int, seed: int) -> list[str]:
    """Search sub-maximal-degree ideals for a linear-resolution-without-
    linear-quotients witness; reports, never asserts."""
    rng = random.Random(seed)
    universe = [Monomial(m, n) for m in range(1, 1 << (2 * n))
                if Monomial(m, n).degree == degree
                and Monomial(m, n).pair_violation() is None]
    witnesses = []
    for _ in range(trials):
        count = rng.randint(1, min(6, len(universe)))
        gens = rng.sample(universe, count)
        ideal = minimalize(gens, n)
        if not ideal.is_proper_nonzero:
            continue
        lr = has_linear_resolution(ideal)
        lq = linear_quotients_search(ideal) is not None
        if lr != lq:
            witnesses.append(f"{ideal}: linear resolution {lr}, linear quotients {lq}")
    if witnesses:
        return [f"LR/LQ disagreement at n={n}, degree {degree}: {w}" for w in witnesses]
    return [
        f"no LR/LQ disagreement found among {trials} sampled degree-{degree} "
        f"ideals at n={n}"
    ]


def run_verification(n: int, mode: str = "exhaustive", seed: int = 0,
                     count: int = 500, field_tag: FieldTag = FieldTag.F2,
                     jobs: int = 1,
                     with_random_suites: bool = True) -> VerificationReport:
    """Full verification pass; see the CLI `verify` subcommand."""
    if mode not in ("exhaustive", "sample"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "exhaustive" and n > 3:
        raise ValueError("exhaustive mode is limited to n <= 3")
    report = VerificationReport(n=n, mode=mode, seed=seed, field_tag=field_tag.value)
    restriction = mode == "exhaustive"
    field_compare = mode == "exhaustive"

    t0 = time.perf_counter()
    if mode == "exhaustive":
        subsets = list(enumerate_degree_n_subsets(n))
    else:
        subsets = sample_degree_n_subsets(n, count, seed)
    args = [(n, s, field_tag.value, restriction, field_compare) for s in subsets]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_check_subset, args, chunksize=16))
    else:
        outcomes = [_check_subset(a) for a in args]
    for subject, results in outcomes:
        report.merge_results(subject, results)
    report.examined = len(subsets)
    report.timings["degree-n-ideals"] = time.perf_counter() - t0

    if with_random_suites:
        t0 = time.perf_counter()
        scaling_suite(report, trials=100, seed=seed + 1, n=min(n, 3) if n >= 2 else 2)
        report.timings["scaling"] = time.perf_counter() - t0
        t0 = time.perf_counter()
        dominant_suite(report, trials=200, seed=seed + 2, n_max=min(n, 4))
        report.timings["dominant"] = time.perf_counter() - t0
        t0 = time.perf_counter()
        code_suite(report, trials=100, seed=seed + 3, n_max=min(n, 4))
        report.timings["code-pipeline"] = time.perf_counter() - t0

    if mode == "exhaustive" and n >= 3:
        t0 = time.perf_counter()
        report.findings.extend(lr_lq_witness_findings(n, n - 1, trials=100, seed=seed + 4))
        report.timings["lr-lq-witness"] = time.perf_counter() - t0
    if field_compare:
        if not any(c.suite == "field-compare" for c in report.counterexamples):
            report.findings.append(
                f"Betti tables agree between F2 and the rationals on all "
                f"{report.examined} degree-{n} ideals"
            )
    return report
