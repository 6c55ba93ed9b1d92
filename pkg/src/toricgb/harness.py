"""Verification campaigns over families of configurations, and the worked-example registry."""

from __future__ import annotations

import contextlib
import json
import logging
import random
import signal
import threading
import time
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Callable, Iterable, Iterator, Sequence

from .groebner import (
    BinomialBasis,
    basis_membership,
    elimination_basis,
    fiber_basis,
    format_basis,
    format_monomial,
    initial_ideal,
    reduced_groebner_basis,
    satisfies_buchberger_criterion,
    toric_basis,
    toric_ideal_by_elimination,
    toric_ideal_by_lattice,
    truncated_groebner,
)
from .invariants import (
    bounds,
    face_analysis,
    gcm_check,
    multiplicity_by_counting,
    multiplicity_from_basis,
    reduction_number,
)
from .lattice_core import Configuration, Semigroup, errors, m_alpha_d, vertices
from .order import Kind, TermOrder, Universe

log = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 20
PROVEN_ORDERS = ("revlex", "xblock")
PROVEN_BOUNDS = ("a1", "a3", "a4")
ALL_CHECKS = ("eg", "a1", "a3", "a4", "a6", "a2", "hilbert-oracle", "truncation", "criterion", "lattice")
DEFAULT_CHECKS = ("eg", "a1", "a3", "a4", "a2")


class CampaignError(ValueError):
    pass


class ConfigTimeout(Exception):
    pass


# --- enumeration -------------------------------------------------------------


def candidate_points(alpha: int, d: int) -> list[tuple[int, ...]]:
    """Non-vertex points of M_{alpha,d}, in descending lexicographic order."""
    verts = set(vertices(alpha, d))
    return sorted((p for p in m_alpha_d(alpha, d) if p not in verts), reverse=True)


def _c_values(c_range: Iterable[int] | None, n: int) -> list[int]:
    return sorted({c for c in (c_range or range(2, n + 1)) if 2 <= c <= n})


def enumerate_configs(alpha: int, d: int, c_range: Iterable[int] | None = None) -> Iterator[Configuration]:
    """Every valid configuration on subsets of the non-vertex points, by size then lexicographically."""
    pts = candidate_points(alpha, d)
    if len(pts) > EXHAUSTIVE_LIMIT:
        raise CampaignError(
            f"M_{{{alpha},{d}}} has {len(pts)} non-vertex points (limit {EXHAUSTIVE_LIMIT}); use sampling"
        )
    for c in _c_values(c_range, len(pts)):
        for gens in combinations(pts, c):
            cfg = Configuration(alpha, d, gens)
            if not errors(cfg):
                yield cfg


def sample_configs(
    alpha: int, d: int, count: int, seed: int, c_range: Iterable[int] | None = None
) -> list[Configuration]:
    """``count`` distinct configurations: uniform size from ``c_range``, then a uniform subset."""
    pts = candidate_points(alpha, d)
    sizes = _c_values(c_range, len(pts))
    available = sum(comb(len(pts), c) for c in sizes)
    if count > available:
        raise CampaignError(f"only {available} configurations exist, asked for {count}")
    rng = random.Random(seed)
    seen = set()
    out = []
    while len(out) < count:
        c = rng.choice(sizes)
        idx = tuple(sorted(rng.sample(range(len(pts)), c)))
        if idx in seen:
            continue
        seen.add(idx)
        out.append(Configuration(alpha, d, tuple(pts[i] for i in idx)))
    return out


# --- campaigns ---------------------------------------------------------------


@dataclass(frozen=True)
class Campaign:
    alpha: int
    d: int
    exhaustive: bool = True
    samples: int = 0
    seed: int = 0
    orders: tuple[str, ...] = ("revlex",)
    checks: tuple[str, ...] = DEFAULT_CHECKS
    c_range: tuple[int, ...] | None = None
    timeout: float | None = 30.0

    def __post_init__(self):
        bad = [c for c in self.checks if c not in ALL_CHECKS]
        if bad:
            raise CampaignError(f"unknown checks {bad}; expected a subset of {ALL_CHECKS}")
        for name in self.orders:
            Kind(name)
        if not self.exhaustive and self.samples <= 0:
            raise CampaignError("sample mode needs a positive sample count")

    def configs(self) -> list[Configuration]:
        if self.exhaustive:
            return list(enumerate_configs(self.alpha, self.d, self.c_range))
        return sample_configs(self.alpha, self.d, self.samples, self.seed, self.c_range)

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "d": self.d,
            "selection": {"mode": "exhaustive"}
            if self.exhaustive
            else {"mode": "sample", "count": self.samples, "seed": self.seed},
            "orders": list(self.orders),
            "checks": list(self.checks),
            "c_range": list(self.c_range) if self.c_range else None,
        }


@dataclass
class Violation:
    bound: str
    order: str | None
    observed: int
    allowed: int

    def to_dict(self) -> dict:
        return {"bound": self.bound, "order": self.order, "observed": self.observed, "allowed": self.allowed}


@dataclass
class CheckResult:
    """Outcome of one configuration across all requested orders."""

    ordinal: int
    config: Configuration
    status: str = "ok"  # "ok" | "skipped: timeout"
    r: int | None = None
    deg: int | None = None
    gb_max_degree: dict[str, int] = field(default_factory=dict)
    bound_values: dict[str, int] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)
    # exceedances under orders outside the theorems' hypotheses (lex); informational
    inapplicable: list[Violation] = field(default_factory=list)
    eg: dict[str, dict] = field(default_factory=dict)
    cross_checks: dict[str, bool] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return bool(self.violations)

    def to_dict(self) -> dict:
        return {
            "ordinal": self.ordinal,
            "config": self.config.to_dict(),
            "status": self.status,
            "r": self.r,
            "deg": self.deg,
            "codim": self.config.c,
            "gb_max_degree": self.gb_max_degree,
            "bound_values": dict(sorted(self.bound_values.items())),
            "violations": [v.to_dict() for v in self.violations],
            "inapplicable": [v.to_dict() for v in self.inapplicable],
            "eg": self.eg,
            "cross_checks": dict(sorted(self.cross_checks.items())),
        }


@contextlib.contextmanager
def _time_limit(seconds: float | None):
    usable = (
        seconds
        and hasattr(signal, "setitimer")
        and threading.current_thread() is threading.main_thread()
    )
    if not usable:
        yield
        return

    def on_alarm(signum, frame):
        raise ConfigTimeout()

    old = signal.signal(signal.SIGALRM, on_alarm)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def check_config(ordinal: int, config: Configuration, orders: Sequence[str], checks: Sequence[str]) -> CheckResult:
    """Run every requested order and check on one configuration."""
    res = CheckResult(ordinal, config)
    tick = time.perf_counter()

    def lap(name):
        nonlocal tick
        now = time.perf_counter()
        res.timings[name] = now - tick
        tick = now

    sg = Semigroup(config)
    revlex = toric_ideal_by_elimination(config)
    deg, _, _ = multiplicity_from_basis(revlex, config.c)
    r = reduction_number(config, cap=deg - config.c, semigroup=sg)
    faces = face_analysis(config)
    bv = bounds(config, r, deg, faces)
    res.r, res.deg, res.bound_values = r, deg, bv
    lap("invariants")

    bases: dict[str, BinomialBasis] = {}
    for name in orders:
        if name == "elim-revlex":
            big = elimination_basis(config)
            observed = big.max_poly_degree
            res.gb_max_degree[name] = observed
            if "a6" in checks and observed > bv["a6"]:
                res.violations.append(Violation("a6", name, observed, bv["a6"]))
            if "criterion" in checks:
                res.cross_checks[f"criterion:{name}"] = satisfies_buchberger_criterion(big)
            lap(name)
            continue
        basis = revlex if name == "revlex" else toric_basis(config, name)
        bases[name] = basis
        observed = basis.max_degree
        res.gb_max_degree[name] = observed
        if name in PROVEN_ORDERS:
            for b in PROVEN_BOUNDS:
                if b in checks and observed > bv[b]:
                    res.violations.append(Violation(b, name, observed, bv[b]))
        else:
            for b in PROVEN_BOUNDS:
                if b in checks and observed > bv[b]:
                    res.inapplicable.append(Violation(b, name, observed, bv[b]))
        if "eg" in checks:
            holds = observed <= bv["eg"]
            res.eg[name] = {"observed": observed, "allowed": bv["eg"], "holds": holds}
            # proven for d = 2 under revlex; elsewhere it is only recorded
            if not holds and name == "revlex" and config.d == 2:
                res.violations.append(Violation("eg", name, observed, bv["eg"]))
        if "criterion" in checks:
            res.cross_checks[f"criterion:{name}"] = satisfies_buchberger_criterion(basis)
        lap(name)

    if "a2" in checks:
        for label, allowed in (("a2i", deg - config.c), ("a2ii", bv["a2ii"]), ("a2iii", bv["a2iii"])):
            if r > allowed:
                res.violations.append(Violation(label, None, r, allowed))
    if "hilbert-oracle" in checks:
        counted = multiplicity_by_counting(config, semigroup=sg)
        res.cross_checks["hilbert-oracle"] = counted == deg
        res.cross_checks["alpha-divides-deg"] = deg % config.alpha == 0
        if counted != deg:
            res.violations.append(Violation("hilbert-oracle", None, deg, counted))
        if deg % config.alpha:
            res.violations.append(Violation("alpha-divides-deg", None, deg, config.alpha))
        lap("hilbert-oracle")
    if "truncation" in checks:
        ok = True
        for name, basis in bases.items():
            if name not in PROVEN_ORDERS:
                continue
            other = bases.get("xblock" if name == "revlex" else "revlex") or toric_basis(
                config, "xblock" if name == "revlex" else "revlex"
            )
            for b in PROVEN_BOUNDS:
                cap = max(bv[b], other.max_degree)
                trunc = truncated_groebner(other, basis.order, cap)
                ok = ok and trunc.elements == basis.elements
        res.cross_checks["truncation"] = ok
        lap("truncation")
    if "lattice" in checks:
        lat = toric_ideal_by_lattice(config)
        ok = True
        for name, basis in bases.items():
            ok = ok and reduced_groebner_basis(lat, basis.order).elements == basis.elements
        res.cross_checks["lattice"] = ok
        lap("lattice")
    for name, ok in res.cross_checks.items():
        if not ok and not any(v.bound == name for v in res.violations):
            res.violations.append(Violation(name, None, 0, 1))
    return res


def _work(args) -> CheckResult:
    ordinal, config, orders, checks, timeout = args
    try:
        with _time_limit(timeout):
            return check_config(ordinal, config, orders, checks)
    except ConfigTimeout:
        return CheckResult(ordinal, config, status="skipped: timeout")


def run_campaign(campaign: Campaign, jobs: int = 1, progress: Callable[[CheckResult], None] | None = None) -> list[CheckResult]:
    """Check every configuration of the campaign; results come back in ordinal order."""
    configs = campaign.configs()
    tasks = [(i, cfg, campaign.orders, campaign.checks, campaign.timeout) for i, cfg in enumerate(configs)]
    results: list[CheckResult] = []
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for res in pool.map(_work, tasks, chunksize=4):
                results.append(res)
                if progress:
                    progress(res)
    else:
        for t in tasks:
            res = _work(t)
            results.append(res)
            if progress:
                progress(res)
    results.sort(key=lambda r: r.ordinal)
    for res in results:
        for v in res.violations:
            log.error("config %d %s: %s observed %d > allowed %d", res.ordinal, res.config.generators, v.bound, v.observed, v.allowed)
    return results


def proven_violations(results: Iterable[CheckResult]) -> list[tuple[int, Violation]]:
    return [(r.ordinal, v) for r in results for v in r.violations]


# --- reports -----------------------------------------------------------------


def summarize(results: Sequence[CheckResult]) -> dict:
    done = [r for r in results if r.status == "ok"]
    orders = list(dict.fromkeys(o for r in done for o in r.gb_max_degree))
    per_order = {}
    for o in orders:
        rows = [r for r in done if o in r.gb_max_degree]
        slack: dict[str, Counter] = defaultdict(Counter)
        for r in rows:
            for b in ("eg", "a1", "a3", "a4", "a6"):
                if b in r.bound_values and (b != "a6" or o == "elim-revlex") and (o != "elim-revlex" or b == "a6"):
                    slack[b][r.bound_values[b] - r.gb_max_degree[o]] += 1
        cells = Counter((r.config.c, r.gb_max_degree[o]) for r in rows)
        per_order[o] = {
            "configs": len(rows),
            "max_gb_degree": max(r.gb_max_degree[o] for r in rows),
            "slack_histograms": {b: dict(sorted(h.items())) for b, h in sorted(slack.items())},
            "c_by_degree": [{"c": c, "degree": g, "count": n} for (c, g), n in sorted(cells.items())],
        }
    eg = {}
    for o in orders:
        recs = [r.eg[o] for r in done if o in r.eg]
        if recs:
            eg[o] = {"checked": len(recs), "violations": sum(not e["holds"] for e in recs)}
    return {
        "configs": len(results),
        "skipped": sum(r.status != "ok" for r in results),
        "proven_violations": len(proven_violations(results)),
        "orders": per_order,
        "eisenbud_goto": eg,
    }


def report(results: Sequence[CheckResult], format: str = "text", campaign: Campaign | None = None) -> str:
    """JSON document or stable, line-diffable text for a list of results."""
    summary = summarize(results)
    if format == "json":
        doc = {
            "campaign": campaign.to_dict() if campaign else None,
            "results": [r.to_dict() for r in results],
            "summary": summary,
        }
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    lines = []
    if campaign:
        sel = "exhaustive" if campaign.exhaustive else f"sample {campaign.samples} seed {campaign.seed}"
        lines.append(f"campaign alpha={campaign.alpha} d={campaign.d} {sel} orders={','.join(campaign.orders)}")
    lines.append(f"configs {summary['configs']}  skipped {summary['skipped']}  proven-bound violations {summary['proven_violations']}")
    orders = list(summary["orders"])
    if results:
        lines.append("")
        head = ["#", "c", "r", "deg"] + [f"gb[{o}]" for o in orders] + ["eg", "a1", "a3", "a4", "status"]
        lines.append("\t".join(head))
        for r in results:
            row = [str(r.ordinal), str(r.config.c), str(r.r), str(r.deg)]
            row += [str(r.gb_max_degree.get(o, "-")) for o in orders]
            row += [str(r.bound_values.get(b, "-")) for b in ("eg", "a1", "a3", "a4")]
            row.append("FAIL" if r.violations else r.status)
            lines.append("\t".join(row))
    for o, s in summary["orders"].items():
        lines.append("")
        lines.append(f"order {o}: {s['configs']} configs, max GB degree {s['max_gb_degree']}")
        for b, hist in s["slack_histograms"].items():
            bars = "  ".join(f"{k:+d}:{n}" for k, n in hist.items())
            lines.append(f"  slack {b:<4} {bars}")
        lines.append("  configs per (c, degree): " + "  ".join(
            f"({e['c']},{e['degree']}):{e['count']}" for e in s["c_by_degree"]))
    for o, e in summary["eisenbud_goto"].items():
        lines.append(f"eisenbud-goto [{o}]: {e['checked']} checked, {e['violations']} violations")
    return "\n".join(lines) + "\n"


# --- worked examples ---------------------------------------------------------


@dataclass
class Claim:
    description: str
    expected: object
    observed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.observed


@dataclass
class ExampleResult:
    name: str
    params: dict
    claims: list[Claim] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def expect(self, description: str, expected, observed) -> None:
        self.claims.append(Claim(description, expected, observed))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "passed": self.passed,
            "claims": [
                {"claim": c.description, "expected": _jsonable(c.expected), "observed": _jsonable(c.observed), "passed": c.passed}
                for c in self.claims
            ],
        }


def _jsonable(x):
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in (sorted(x) if isinstance(x, (set, frozenset)) else x)]
    return x


def _unit(n: int, i: int, e: int = 1) -> list[int]:
    v = [0] * n
    v[i] = e
    return v


def a1b_config(alpha: int, d: int) -> Configuration:
    """M_{alpha,d} minus the inner points (b, alpha-b, 0..) with 2 <= b <= alpha-2 of the edge e1e2."""
    if d < 2 or alpha < d + 1:
        raise ValueError("a1b needs d >= 2 and alpha >= d + 1")
    tail = [0] * (d - 2)
    a1 = tuple([alpha - 1, 1] + tail)
    a2 = tuple([1, alpha - 1] + tail)
    deleted = {tuple([b, alpha - b] + tail) for b in range(2, alpha - 1)}
    rest = [p for p in candidate_points(alpha, d) if p not in deleted and p not in (a1, a2)]
    return Configuration(alpha, d, (a1, a2, *rest))


def a5_config(c: int, beta: int) -> Configuration:
    if c < 3 or beta < 2:
        raise ValueError("a5 needs c = d >= 3 and beta >= 2")
    d, alpha = c, 2 * beta
    gens = []
    for i in range(c - 1):
        p = [0] * d
        p[i], p[i + 1] = 1, 2 * beta - 1
        gens.append(tuple(p))
    last = [0] * d
    last[0], last[-1] = beta, beta
    gens.append(tuple(last))
    return Configuration(alpha, d, tuple(gens))


AFTER_A3 = Configuration(4, 2, ((3, 1), (1, 3)))
C1B = Configuration(3, 3, ((2, 0, 1), (1, 2, 0), (1, 1, 1), (1, 0, 2), (0, 2, 1), (0, 1, 2)))
AFTER_A3_REVLEX = "x1*x2 - y1*y2\nx1^3 - x2*y1^2\nx2^3 - x1*y2^2\nx2^2*y1 - x1^2*y2\n"
AFTER_A3_LEX = "x1*x2 - y1*y2\nx1^3 - x2*y1^2\nx1*y2^2 - x2^3\nx1^2*y2 - x2^2*y1\nx2^4 - y1*y2^3\n"
C1B_INITIAL = (
    "x1*x2 x2*x3 x2*x5 x1^2 x1*x3 x3^2 x2*x4 x2*x6 x3*x5 x5^2 "
    "x1*x4 x3*x4 x4*x5 x4^2 x3*x6 x5*x6 x4*x6 x6^2 x2^3 x1*x6*y2"
).split()


def _lines(text: str) -> set[str]:
    return {ln for ln in text.splitlines() if ln.strip()}


def example_after_a3(params: dict) -> ExampleResult:
    res = ExampleResult("after-a3", params)
    cfg = AFTER_A3
    rev = toric_basis(cfg, "revlex")
    lex = toric_basis(cfg, "lex")
    res.expect("revlex reduced basis", _lines(AFTER_A3_REVLEX), _lines(format_basis(rev)))
    res.expect("lex reduced basis", _lines(AFTER_A3_LEX), _lines(format_basis(lex)))
    res.expect("revlex max degree", 3, rev.max_degree)
    res.expect("lex max degree", 4, lex.max_degree)
    deg = multiplicity_from_basis(rev, cfg.c)[0]
    r = reduction_number(cfg, cap=deg - cfg.c)
    res.expect("r(S)", 2, r)
    res.expect("deg - codim", 2, deg - cfg.c)
    bv = bounds(cfg, r, deg)
    res.expect("bound a1", 3, bv["a1"])
    res.expect("bound a3", 3, bv["a3"])
    return res


def example_a1b(params: dict) -> ExampleResult:
    alpha, d = int(params.get("alpha", 5)), int(params.get("d", 2))
    res = ExampleResult("a1b", {"alpha": alpha, "d": d})
    cfg = a1b_config(alpha, d)
    res.expect("r(S) = alpha - 2", alpha - 2, reduction_number(cfg))
    n = cfg.c + d
    lead = tuple(_unit(n, 0, alpha - 1))
    tail = tuple(a + b for a, b in zip(_unit(n, 1), _unit(n, cfg.c, alpha - 2)))
    for order in ("xblock", "revlex"):
        # basis elements of degree <= alpha - 1 are exact without the full basis
        part = fiber_basis(cfg, order, alpha - 1)
        res.expect(f"x1^{alpha - 1} - x2*y1^{alpha - 2} in the {order} reduced basis", True, basis_membership((lead, tail), part))
    return res


def example_a5(params: dict) -> ExampleResult:
    beta, c = int(params.get("beta", 2)), int(params.get("c", 3))
    res = ExampleResult("a5", {"beta": beta, "c": c})
    cfg = a5_config(c, beta)
    n = 2 * c
    lead = [0] * n
    for i in range(c - 1):
        lead[i] = beta
    tail = [0] * n
    tail[c - 1] = 1
    for j in range(1, c - 1):
        tail[c + j] = beta
    tail[2 * c - 1] = beta - 1
    g = (tuple(lead), tuple(tail))
    names = Universe(c, c).names()
    text = f"{format_monomial(g[0], names)} - {format_monomial(g[1], names)}"
    for order in ("revlex", "xblock", "lex"):
        basis = toric_basis(cfg, order)
        res.expect(f"{text} in the {order} reduced basis", True, basis_membership(g, basis))
    return res


def example_c1b(params: dict) -> ExampleResult:
    res = ExampleResult("c1b", {})
    cfg = C1B
    rev = toric_basis(cfg, "revlex")
    names = rev.universe.names()
    res.expect(
        "revlex initial ideal", set(C1B_INITIAL), {format_monomial(m, names) for m in initial_ideal(rev)}
    )
    g = gcm_check(cfg)
    res.expect("gcm status", "no", g.status)
    res.expect("witness", (2, 1, 0), g.witness)
    res.expect("direction e_j", 1, None if g.direction is None else g.direction + 1)
    return res


def b2_case1_config(d: int) -> Configuration:
    deleted = tuple([1, 1] + [0] * (d - 2))
    return Configuration(2, d, tuple(p for p in candidate_points(2, d) if p != deleted))


def example_b2_case1(params: dict) -> ExampleResult:
    d = int(params.get("d", 3))
    res = ExampleResult("b2-case1", {"d": d})
    res.expect("r(S)", 2, reduction_number(b2_case1_config(d)))
    return res


def facet7_configs() -> list[Configuration]:
    """M_{3,3} facet configurations: one deleted inner point per edge, (2,1,0) kept, plus (1,1,1)."""
    out = []
    for a2 in ((2, 0, 1), (1, 0, 2)):
        for a3 in ((0, 2, 1), (0, 1, 2)):
            out.append(Configuration(3, 3, ((2, 1, 0), a2, a3, (1, 1, 1))))
    return out


def example_b2_facet7(params: dict) -> ExampleResult:
    res = ExampleResult("b2-facet7", {})
    for cfg in facet7_configs():
        r = reduction_number(cfg)
        res.expect(f"r <= 3 for {list(cfg.generators)}", True, r <= 3)
    return res


def _edge_points(alpha: int, d: int, i: int, j: int) -> list[tuple[int, ...]]:
    out = []
    for k in range(1, alpha):
        p = [0] * d
        p[i], p[j] = alpha - k, k
        out.append(tuple(p))
    return out


def fig3_config() -> Configuration:
    """M_{3,4} without the inner points of the opposite edges e1e2 and e3e4."""
    deleted = set(_edge_points(3, 4, 0, 1)) | set(_edge_points(3, 4, 2, 3))
    return Configuration(3, 4, tuple(p for p in candidate_points(3, 4) if p not in deleted))


def fig4_configs() -> list[Configuration]:
    """One deleted inner point on each edge of a 4-cycle of edges of the tetrahedron."""
    cycles = [
        [(0, 1), (1, 3), (3, 2), (2, 0)],  # e1e2, e2e4, e4e3, e3e1
        [(0, 1), (1, 2), (2, 3), (3, 0)],
        [(0, 2), (2, 1), (1, 3), (3, 0)],
    ]
    out = []
    for cyc in cycles:
        choices = [_edge_points(3, 4, min(e), max(e)) for e in cyc]
        for pick in product(*choices):
            deleted = set(pick)
            out.append(Configuration(3, 4, tuple(p for p in candidate_points(3, 4) if p not in deleted)))
    return out


def example_b2_fig3(params: dict) -> ExampleResult:
    res = ExampleResult("b2-fig3", {})
    res.expect("r(S)", 2, reduction_number(fig3_config()))
    return res


def example_b2_fig4(params: dict) -> ExampleResult:
    res = ExampleResult("b2-fig4", {})
    worst = max(reduction_number(cfg) for cfg in fig4_configs())
    res.expect("max r(S) over all 4-cycle deletion patterns <= 8", True, worst <= 8)
    return res


EXAMPLES: dict[str, Callable[[dict], ExampleResult]] = {
    "after-a3": example_after_a3,
    "a1b": example_a1b,
    "a5": example_a5,
    "c1b": example_c1b,
    "b2-case1": example_b2_case1,
    "b2-facet7": example_b2_facet7,
    "b2-fig3": example_b2_fig3,
    "b2-fig4": example_b2_fig4,
}


def example(name: str, params: dict | None = None) -> ExampleResult:
    try:
        fn = EXAMPLES[name]
    except KeyError:
        raise CampaignError(f"unknown example {name!r}; known: {', '.join(EXAMPLES)}") from None
    return fn(dict(params or {}))
