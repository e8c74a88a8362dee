"""Seeded Monte Carlo and exhaustive sweeps, written as CSV.

Every trial draws from its own stream ``derive(seed, tag, trial)`` (see
:mod:`vizing.rng`), so results do not depend on how trials are scheduled
across worker processes, and rows are always emitted in trial order.
"""

import csv
import hashlib
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from enum import Enum
from pathlib import Path
from typing import Optional

from .blocks import run_repartitioning
from .errors import InvalidInputError, ParseError
from .formats import parse_graph6
from .graph import all_labeled_graphs, is_dominating, sample_gnp, vset
from .product import cartesian_product
from .rng import SplitMix64, derive
from .solver import gamma_exact
from .verify import (check_theorem_condition, max_order_under_bound, suen_tarr_holds,
                     vizing_holds)

DEFAULT_SEED = 20240601
WILSON_Z = 1.959963984540054   # two-sided 95%

DRYER_COLUMNS = ["n", "p", "epsilon", "t", "trials", "successes", "phat",
                 "wilson_lo", "wilson_hi", "seed", "config_hash"]
COROLLARY_COLUMNS = ["h_order", "g_order", "p", "gamma_g", "gamma_h", "condition_holds",
                     "vizing_checked", "vizing_holds", "seed", "trial", "config_hash"]
EXHAUSTIVE_COLUMNS = ["g_id", "h_id", "gamma_g", "gamma_h", "gamma_prod", "vizing",
                      "suen_tarr", "condition", "engine_outcome", "config_hash"]

_DRYER_TAG = 1
_SWEEP_TAG = 2


class Mode(str, Enum):
    DRYER = "DRYER"
    COROLLARY_SWEEP = "COROLLARY_SWEEP"
    EXHAUSTIVE_PAIRS = "EXHAUSTIVE_PAIRS"


@dataclass(frozen=True)
class ExperimentConfig:
    mode: Mode
    p: float = 0.5
    epsilon: float = 0.5
    trials: int = 1000
    seed: int = DEFAULT_SEED
    n: Optional[int] = None
    n_range: Optional[tuple] = None     # inclusive (lo, hi)
    g_cap: int = 60                     # largest |G| the sweep will sample
    product_cap: int = 64               # largest |G||H| checked for Vizing
    bucket_width: int = 5
    max_n: int = 4
    min_n: int = 1
    source: Optional[str] = None

    def validate(self):
        if self.trials < 1:
            raise InvalidInputError("trials must be >= 1")
        if self.mode in (Mode.DRYER, Mode.COROLLARY_SWEEP):
            if not 0.0 < self.p < 1.0:
                raise InvalidInputError(
                    f"p={self.p}: need 0 < p < 1 so that q = 1/(1-p) > 1")
        if self.mode is Mode.DRYER and not self.epsilon > 0:
            raise InvalidInputError("epsilon must be positive")
        if self.mode is Mode.DRYER and self.n is None and self.n_range is None:
            raise InvalidInputError("DRYER needs n or n_range")
        if self.mode is Mode.COROLLARY_SWEEP and self.n_range is None:
            raise InvalidInputError("COROLLARY_SWEEP needs n_range for |H|")
        return self

    def config_hash(self):
        data = asdict(self)
        data["mode"] = self.mode.value
        if self.source is not None:
            data["source"] = hashlib.sha256(Path(self.source).read_bytes()).hexdigest()
        blob = json.dumps(data, sort_keys=True, default=list).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


@dataclass
class ExperimentRow:
    values: dict
    skipped: bool = False


# -- formatting ---------------------------------------------------------------

def _fmt(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6f}"
    if value is None:
        return ""
    return str(value)


def rows_to_csv(rows, columns):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_fmt(row.values.get(c)) for c in columns])
    return buf.getvalue()


def _map(fn, items, jobs):
    items = list(items)
    if jobs and jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    return [fn(x) for x in items]


# -- Dryer's lemma --------------------------------------------------------------

def dryer_set_size(n, p, epsilon):
    """ceil((1 + epsilon) * log_q n) with q = 1/(1-p).

    A 1e-9 slack absorbs float noise so exact powers of q land on the integer.
    """
    if not 0.0 < p < 1.0:
        raise InvalidInputError(f"p={p}: log_q is undefined unless 0 < p < 1")
    if epsilon < 0:
        raise InvalidInputError("epsilon must be non-negative")
    log_q_n = math.log(n) / -math.log1p(-p)
    return math.ceil((1.0 + epsilon) * log_q_n - 1e-9)


def wilson_interval(successes, trials, z=WILSON_Z):
    if trials <= 0:
        raise InvalidInputError("Wilson interval needs trials > 0")
    phat = successes / trials
    denom = 1.0 + z * z / trials
    centre = (phat + z * z / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials)) / denom
    # the exact endpoints are 0 and 1 here; skip the float dust
    lo = 0.0 if successes == 0 else max(0.0, centre - half)
    hi = 1.0 if successes == trials else min(1.0, centre + half)
    return lo, hi


def _dryer_trial(args):
    seed, n, p, t, trial = args
    stream = SplitMix64(derive(seed, _DRYER_TAG, n, trial))
    g = sample_gnp(n, p, stream)
    chosen = stream.sample(n, t)
    return is_dominating(g, vset(chosen)), len(chosen)


def dryer_probability(cfg, n=None, jobs=1):
    cfg.validate()
    n = cfg.n if n is None else n
    t = dryer_set_size(n, cfg.p, cfg.epsilon)
    if t > n:
        raise InvalidInputError(f"set size t={t} exceeds n={n}")
    results = _map(_dryer_trial, [(cfg.seed, n, cfg.p, t, i) for i in range(cfg.trials)], jobs)
    assert all(size == t for _, size in results)
    successes = sum(1 for ok, _ in results if ok)
    lo, hi = wilson_interval(successes, cfg.trials)
    return ExperimentRow({
        "n": n, "p": cfg.p, "epsilon": cfg.epsilon, "t": t, "trials": cfg.trials,
        "successes": successes, "phat": successes / cfg.trials,
        "wilson_lo": lo, "wilson_hi": hi, "seed": cfg.seed,
        "config_hash": cfg.config_hash()})


def dryer_rows(cfg, jobs=1):
    ns = [cfg.n] if cfg.n is not None else list(range(cfg.n_range[0], cfg.n_range[1] + 1))
    return [dryer_probability(cfg, n, jobs) for n in ns]


# -- order-bound sweep --------------------------------------------------------

def _sweep_trial(args):
    cfg, trial, chash = args
    stream = SplitMix64(derive(cfg.seed, _SWEEP_TAG, trial))
    lo, hi = cfg.n_range
    h_order = stream.randint(lo, hi)
    base = {"h_order": h_order, "p": cfg.p, "seed": cfg.seed, "trial": trial,
            "config_hash": chash}
    g_max = max_order_under_bound(h_order, cfg.p, cfg.g_cap) if h_order >= 2 else None
    if g_max is None:
        base.update(condition_holds="skipped", vizing_checked=False)
        return ExperimentRow(base, skipped=True)
    g_order = stream.randint(h_order, g_max)
    g = sample_gnp(g_order, cfg.p, stream)
    h = sample_gnp(h_order, cfg.p, stream)
    gg = gamma_exact(g, canonical=False).gamma
    gh = gamma_exact(h, canonical=False).gamma
    base.update(g_order=g_order, gamma_g=gg, gamma_h=gh,
                condition_holds=check_theorem_condition(g, h, gg, gh))
    if g_order * h_order <= cfg.product_cap:
        gp = gamma_exact(cartesian_product(g, h).graph, canonical=False).gamma
        base.update(vizing_checked=True, vizing_holds=vizing_holds(gg, gh, gp))
    else:
        base.update(vizing_checked=False)
    return ExperimentRow(base)


def corollary_sweep(cfg, jobs=1):
    cfg.validate()
    chash = cfg.config_hash()
    return _map(_sweep_trial, [(cfg, i, chash) for i in range(cfg.trials)], jobs)


@dataclass
class Bucket:
    lo: int
    hi: int
    trials: int = 0
    skipped: int = 0
    condition_holds: int = 0
    vizing_checked: int = 0
    vizing_violations: int = 0

    @property
    def fraction(self):
        used = self.trials - self.skipped
        return self.condition_holds / used if used else float("nan")


def summarize_sweep(rows, bucket_width):
    buckets = {}
    for row in rows:
        h = row.values["h_order"]
        key = (h // bucket_width) * bucket_width
        b = buckets.setdefault(key, Bucket(key, key + bucket_width - 1))
        b.trials += 1
        if row.skipped:
            b.skipped += 1
            continue
        b.condition_holds += row.values["condition_holds"] is True
        if row.values.get("vizing_checked"):
            b.vizing_checked += 1
            b.vizing_violations += row.values["vizing_holds"] is False
    return [buckets[k] for k in sorted(buckets)]


# -- exhaustive pairs ---------------------------------------------------------

@dataclass
class ExhaustiveSummary:
    pairs: int = 0
    vizing_violations: int = 0
    suen_tarr_violations: int = 0
    condition_pairs: int = 0
    outcomes: dict = field(default_factory=dict)


def load_corpus(source):
    graphs = []
    text = Path(source).read_text()
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append((f"L{lineno}", parse_graph6(line)))
        except ParseError as exc:
            raise ParseError(f"corpus line {lineno}: {exc}", lineno) from None
    return graphs


def builtin_corpus(max_n, min_n=1):
    if max_n > 5:
        raise InvalidInputError("built-in labelled enumeration is limited to max_n <= 5")
    return [(f"n{n}:{code}", g) for n in range(min_n, max_n + 1)
            for code, g in enumerate(all_labeled_graphs(n))]


def _exhaustive_block(args):
    gi, corpus, gammas, product_cap, run_engine, chash = args
    g_id, g = corpus[gi]
    gg = gammas[gi]
    rows = []
    for hi, (h_id, h) in enumerate(corpus):
        if g.n * h.n > product_cap:
            continue
        gh = gammas[hi]
        pg = cartesian_product(g, h)
        res = gamma_exact(pg.graph)
        cond = check_theorem_condition(g, h, gg, gh)
        outcome = "NA"
        if cond and run_engine:
            outcome = run_repartitioning(g, h, res.witness, gg, gh).outcome.value
        rows.append(ExperimentRow({
            "g_id": g_id, "h_id": h_id, "gamma_g": gg, "gamma_h": gh,
            "gamma_prod": res.gamma, "vizing": vizing_holds(gg, gh, res.gamma),
            "suen_tarr": suen_tarr_holds(gg, gh, res.gamma), "condition": cond,
            "engine_outcome": outcome, "config_hash": chash}))
    return rows


def exhaustive_pairs(max_n=4, source=None, min_n=1, product_cap=32, run_engine=True,
                     jobs=1):
    """Every ordered pair of the corpus whose product has at most
    ``product_cap`` vertices. Returns ``(rows, summary)``."""
    corpus = load_corpus(source) if source else builtin_corpus(max_n, min_n)
    cfg = ExperimentConfig(Mode.EXHAUSTIVE_PAIRS, max_n=max_n, min_n=min_n,
                           product_cap=product_cap, source=source)
    chash = cfg.config_hash()
    gammas = [gamma_exact(g, canonical=False).gamma for _, g in corpus]
    blocks = _map(_exhaustive_block,
                  [(i, corpus, gammas, product_cap, run_engine, chash)
                   for i in range(len(corpus))], jobs)
    rows = [r for block in blocks for r in block]
    summary = ExhaustiveSummary(pairs=len(rows))
    for r in rows:
        v = r.values
        summary.vizing_violations += not v["vizing"]
        summary.suen_tarr_violations += not v["suen_tarr"]
        summary.condition_pairs += v["condition"]
        summary.outcomes[v["engine_outcome"]] = summary.outcomes.get(v["engine_outcome"], 0) + 1
    return rows, summary
