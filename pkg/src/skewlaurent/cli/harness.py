"""Batch verification harness behind ``skewlab verify``.

Every trial draws from its own ``random.Random(f"{seed}:{property}:{i}")``
so results do not depend on how trials are scheduled across workers.  The
report records enough raw data (valuations, failing trial indices,
certificates) for :func:`recompute_flags` to re-derive every pass/fail flag.
"""

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache

from ..errors import UsageError
from ..exactfield import GaloisField, RationalFunctionField
from ..grouplab import (
    Centrality,
    SeriesProfile,
    centre_check,
    commutator,
    commutator_product,
    fixed_scalar_pool,
    random_series,
)
from ..series import (
    add,
    constant,
    equals_to_precision,
    inverse,
    monomial,
    mul,
    mul_incremental,
    one,
    truncate,
)
from ..spanlab import codimension_witness_suite, combination
from .config import make_context

SCHEMA_VERSION = 1


@dataclass
class VerifyConfig:
    field: str = "q-u"
    sigma: str = "shift:1"
    prec: int = 32
    seed: int = 42
    trials_ring: int = 1000
    trials_valuation: int = 1000
    trials_inverse: int = 500
    trials_mul: int = 500
    trials_comm: int = 200
    trials_products: int = 50
    trials_combos: int = 100
    probes: int = 200
    k_max: int = 3
    budget: int = 200
    workers: int = 1

    def with_all_trials(self, n):
        for name in ("trials_ring", "trials_valuation", "trials_inverse", "trials_mul",
                     "trials_comm", "trials_products", "trials_combos", "probes", "budget"):
            setattr(self, name, n)
        return self


@lru_cache(maxsize=None)
def _context(field, sigma):
    return make_context(field, sigma)


def _rng(cfg, prop, i):
    return random.Random(f"{cfg.seed}:{prop}:{i}")


def _profile(cfg, prec=None):
    return SeriesProfile(prec=prec or cfg.prec)


# -- individual trials; module level so a process pool can run them --------


def _ring_trial(cfg, i):
    ctx = _context(cfg.field, cfg.sigma)
    rng = _rng(cfg, "ring", i)
    x, y, z = (random_series(ctx, rng, _profile(cfg)) for _ in range(3))
    assoc = equals_to_precision(mul(mul(x, y), z), mul(x, mul(y, z)))
    left = equals_to_precision(mul(x, add(y, z)), add(mul(x, y), mul(x, z)))
    right = equals_to_precision(mul(add(x, y), z), add(mul(x, z), mul(y, z)))
    return {"associativity": assoc, "left": left, "right": right, "inputs": [str(x), str(y), str(z)]}


def _valuation_trial(cfg, i):
    ctx = _context(cfg.field, cfg.sigma)
    rng = _rng(cfg, "valuation", i)
    x, y = random_series(ctx, rng, _profile(cfg)), random_series(ctx, rng, _profile(cfg))
    s = add(x, y)
    return {"vx": x.lead, "vy": y.lead, "vxy": mul(x, y).lead, "vsum": s.lead}


def _inverse_trial(cfg, i):
    ctx = _context(cfg.field, cfg.sigma)
    x = random_series(ctx, _rng(cfg, "inverse", i), _profile(cfg))
    xi = inverse(x)
    guaranteed = cfg.prec - 2 * abs(x.lead)
    ok = True
    for prod in (mul(x, xi), mul(xi, x)):
        ok = ok and prod.prec >= guaranteed and truncate(prod, guaranteed) == one(ctx, guaranteed)
    return {"ok": ok, "valuation": x.lead, "guaranteed": guaranteed, "input": str(x)}


def _mul_trial(cfg, i):
    ctx = _context(cfg.field, cfg.sigma)
    out = {}
    for prec in (cfg.prec, 2 * cfg.prec):
        rng = _rng(cfg, f"mul{prec}", i)
        x, y = random_series(ctx, rng, _profile(cfg, prec)), random_series(ctx, rng, _profile(cfg, prec))
        out[str(prec)] = mul(x, y) == mul_incremental(x, y)
    return out


def _comm_trial(cfg, i):
    ctx = _context(cfg.field, cfg.sigma)
    rng = _rng(cfg, "comm", i)
    x, y = random_series(ctx, rng, _profile(cfg)), random_series(ctx, rng, _profile(cfg))
    rec = commutator(x, y)
    return rec.valuation_of_value, rec.value


def _product_trial(cfg, i):
    ctx = _context(cfg.field, cfg.sigma)
    rng = _rng(cfg, "products", i)
    n = rng.randint(2, 4)
    records = []
    for _ in range(n):
        x, y = random_series(ctx, rng, _profile(cfg)), random_series(ctx, rng, _profile(cfg))
        records.append(commutator(x, y))
    value = commutator_product(records)
    return {"length": n, "valuation": value.lead}, value


def _run(fn, cfg, count, pool):
    if pool is None:
        return [fn(cfg, i) for i in range(count)]
    return list(pool.map(fn, [cfg] * count, range(count)))


# -- property bookkeeping ---------------------------------------------------


def _status(trials, ok):
    if trials == 0:
        return "skipped"
    return "pass" if ok else "fail"


def _failing(flags):
    return [i for i, ok in enumerate(flags) if not ok]


def _flag_property(trials, failing, first=None):
    return {
        "trials": trials,
        "status": _status(trials, not failing),
        "failures": len(failing),
        "failing_trials": failing,
        "first_counterexample": first,
    }


def _valuation_ok(row):
    return row["vxy"] == row["vx"] + row["vy"]


def _ultrametric_ok(row):
    return row["vsum"] is None or row["vsum"] >= min(row["vx"], row["vy"])


def _centre_ok(row):
    if row["verdict"] != row["expected"]:
        return False
    if row["expected"] == Centrality.NON_CENTRAL.value:
        return row["witness"] == row["expected_witness"]
    return row["witness"] is None


def _certificate_ok(row, k):
    return (row["kind"] == "NOT_IN_SPAN_OBSTRUCTION" and row["target_valuation"] == -k
            and row["min_generator_valuation"] >= 0)


def centre_candidates(ctx, prec):
    """(label, candidate, expected-central) for the centre facts of D."""
    order = ctx.order()
    out = []
    if order != float("inf") and order > 1:
        out.append((f"t^{order}", monomial(ctx, ctx.one(), order, prec), True))
    for k in range(1, 5):
        central = order != float("inf") and k % order == 0
        out.append((f"t^{k}", monomial(ctx, ctx.one(), k, prec), central))
    for c in fixed_scalar_pool(ctx)[:4]:
        out.append((f"const {c}", constant(ctx, c, prec), True))
    if isinstance(ctx.field, RationalFunctionField) and order == 2:
        u = ctx.gen()
        out.append(("const u^2", constant(ctx, u * u, prec), True))
    return out


def canonical_probes(ctx, prec):
    probes = [monomial(ctx, ctx.one(), 1, prec)]
    if isinstance(ctx.field, (RationalFunctionField, GaloisField)):
        probes.append(constant(ctx, ctx.gen(), prec))
    return probes


def run_verify(cfg):
    """Run every property suite and return the JSON-ready report."""
    if cfg.prec < 8:
        raise UsageError("verify needs precision of at least 8")
    ctx = _context(cfg.field, cfg.sigma)
    started = time.perf_counter()
    timing = {}
    props = {}
    pool = ProcessPoolExecutor(cfg.workers) if cfg.workers > 1 else None
    try:
        t0 = time.perf_counter()
        rows = _run(_ring_trial, cfg, cfg.trials_ring, pool)
        for key, name in (("associativity", "ring_associativity"), ("left", "ring_distributivity_left"),
                          ("right", "ring_distributivity_right")):
            failing = _failing([r[key] for r in rows])
            first = {"trial": failing[0], "x": rows[failing[0]]["inputs"][0], "y": rows[failing[0]]["inputs"][1],
                     "z": rows[failing[0]]["inputs"][2]} if failing else None
            props[name] = _flag_property(len(rows), failing, first)
        timing["ring"] = time.perf_counter() - t0

        t0 = time.perf_counter()
        rows = _run(_valuation_trial, cfg, cfg.trials_valuation, pool)
        for name, check in (("valuation_multiplicative", _valuation_ok), ("valuation_ultrametric", _ultrametric_ok)):
            failing = _failing([check(r) for r in rows])
            entry = _flag_property(len(rows), failing, rows[failing[0]] if failing else None)
            entry["data"] = rows
            props[name] = entry
        timing["valuation"] = time.perf_counter() - t0

        t0 = time.perf_counter()
        rows = _run(_inverse_trial, cfg, cfg.trials_inverse, pool)
        failing = _failing([r["ok"] for r in rows])
        props["inverse_two_sided"] = _flag_property(len(rows), failing, rows[failing[0]] if failing else None)
        timing["inverse"] = time.perf_counter() - t0

        t0 = time.perf_counter()
        rows = _run(_mul_trial, cfg, cfg.trials_mul, pool)
        failing = _failing([all(r.values()) for r in rows])
        entry = _flag_property(len(rows), failing, {"trial": failing[0], **rows[failing[0]]} if failing else None)
        entry["precisions"] = [cfg.prec, 2 * cfg.prec]
        props["mul_differential"] = entry
        timing["mul_differential"] = time.perf_counter() - t0

        t0 = time.perf_counter()
        comm_rows = _run(_comm_trial, cfg, cfg.trials_comm, pool)
        vals = [v for v, _ in comm_rows]
        failing = [i for i, v in enumerate(vals) if v != 0]
        entry = _flag_property(len(vals), failing, {"trial": failing[0], "valuation": vals[failing[0]]} if failing else None)
        entry["data"] = {"valuations": vals}
        props["commutator_kernel"] = entry
        timing["commutator_kernel"] = time.perf_counter() - t0

        t0 = time.perf_counter()
        prod_rows = _run(_product_trial, cfg, cfg.trials_products, pool)
        data = [d for d, _ in prod_rows]
        failing = [i for i, d in enumerate(data) if d["valuation"] != 0]
        entry = _flag_property(len(data), failing, data[failing[0]] if failing else None)
        entry["data"] = data
        props["commutator_product_kernel"] = entry
        timing["commutator_product_kernel"] = time.perf_counter() - t0

        t0 = time.perf_counter()
        generators = [v for _, v in comm_rows] + [v for _, v in prod_rows]
        props["f_combination_nonnegative"] = _combination_property(cfg, ctx, generators)
        timing["f_combination_nonnegative"] = time.perf_counter() - t0
    finally:
        if pool is not None:
            pool.shutdown()

    t0 = time.perf_counter()
    props["centre"] = _centre_property(cfg, ctx)
    timing["centre"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    span_verdicts = []
    if cfg.budget > 0 and cfg.k_max > 0:
        verdicts = codimension_witness_suite(ctx, cfg.k_max, cfg.budget, seed=cfg.seed, profile=_profile(cfg))
        span_verdicts = [{"target": f"t^-{k}", **v.to_dict()} for k, v in enumerate(verdicts, start=1)]
    failing = [i for i, row in enumerate(span_verdicts) if not _certificate_ok(row, i + 1)]
    entry = _flag_property(len(span_verdicts), failing, span_verdicts[failing[0]] if failing else None)
    entry["generator_budget"] = cfg.budget
    props["codimension_witness"] = entry
    timing["codimension_witness"] = time.perf_counter() - t0
    timing["total"] = time.perf_counter() - started

    report = {
        "schema_version": SCHEMA_VERSION,
        "context": ctx.describe(),
        "config": asdict(cfg),
        "seed": cfg.seed,
        "precision": cfg.prec,
        "properties": props,
        "span_verdicts": span_verdicts,
        "timing": {k: round(v, 4) for k, v in timing.items()},
    }
    report["passed"] = all(p["status"] != "fail" for p in props.values())
    return report


def _combination_property(cfg, ctx, generators):
    pool = fixed_scalar_pool(ctx)
    rows = []
    if generators:
        for i in range(cfg.trials_combos):
            rng = _rng(cfg, "combo", i)
            picks = rng.sample(range(len(generators)), min(len(generators), rng.randint(2, 6)))
            coeffs = [ctx(rng.choice(pool)) for _ in picks]
            gens = [generators[j] for j in picks]
            combo = combination(ctx, coeffs, gens, min(g.prec for g in gens))
            rows.append({"generators": picks, "coefficients": [str(c) for c in coeffs], "valuation": combo.lead})
    failing = [i for i, r in enumerate(rows) if r["valuation"] is not None and r["valuation"] < 0]
    entry = _flag_property(len(rows), failing, rows[failing[0]] if failing else None)
    entry["data"] = [r["valuation"] for r in rows]
    return entry


def _centre_property(cfg, ctx):
    if cfg.probes <= 0:
        return _flag_property(0, [])
    rng = _rng(cfg, "probes", 0)
    probes = canonical_probes(ctx, cfg.prec) + [random_series(ctx, rng, _profile(cfg)) for _ in range(cfg.probes)]
    witness_label = "w" if isinstance(ctx.field, GaloisField) else "u"
    rows = []
    for label, cand, expected in centre_candidates(ctx, cfg.prec):
        rep = centre_check(cand, probes)
        witness = None
        if rep.witness is not None:
            witness = witness_label if len(probes) > 1 and rep.witness == probes[1] else str(rep.witness)
        rows.append({
            "candidate": label,
            "expected": (Centrality.CENTRAL if expected else Centrality.NON_CENTRAL).value,
            "expected_witness": None if expected else witness_label,
            "verdict": rep.verdict.value,
            "witness": witness,
            "probe_count": rep.probe_count,
            "precision": rep.precision,
        })
    failing = [i for i, r in enumerate(rows) if not _centre_ok(r)]
    entry = _flag_property(len(rows), failing, rows[failing[0]] if failing else None)
    entry["data"] = rows
    return entry


def recompute_flags(report):
    """Re-derive each property's status from the data recorded in ``report``."""
    props = report["properties"]
    out = {}
    for name, entry in props.items():
        trials = entry["trials"]
        if name == "valuation_multiplicative":
            ok = all(_valuation_ok(r) for r in entry["data"])
        elif name == "valuation_ultrametric":
            ok = all(_ultrametric_ok(r) for r in entry["data"])
        elif name == "commutator_kernel":
            ok = all(v == 0 for v in entry["data"]["valuations"])
        elif name == "commutator_product_kernel":
            ok = all(d["valuation"] == 0 for d in entry["data"])
        elif name == "f_combination_nonnegative":
            ok = all(v is None or v >= 0 for v in entry["data"])
        elif name == "centre":
            ok = all(_centre_ok(r) for r in entry.get("data", []))
        elif name == "codimension_witness":
            ok = all(_certificate_ok(r, k) for k, r in enumerate(report["span_verdicts"], start=1))
            trials = len(report["span_verdicts"])
        else:
            ok = not entry["failing_trials"]
        out[name] = _status(trials, ok)
    return out


def summary_lines(report):
    ctx = report["context"]
    lines = [f"context: field={ctx['field']} sigma={ctx['sigma']} order={ctx['sigma_order']} "
             f"precision={report['precision']} seed={report['seed']}"]
    for name, entry in report["properties"].items():
        lines.append(f"  {entry['status'].upper():7s} {name} ({entry['trials']} trials, {entry['failures']} failures)")
    for v in report["span_verdicts"]:
        if v["kind"] == "NOT_IN_SPAN_OBSTRUCTION":
            lines.append(f"  certificate: {v['target']} outside T(D): v(target)={v['target_valuation']} "
                         f"< 0 <= {v['min_generator_valuation']} = min v(generators)")
        else:
            lines.append(f"  {v['target']}: {v['kind']}")
    lines.append(f"overall: {'PASS' if report['passed'] else 'FAIL'} in {report['timing']['total']:.1f}s")
    return lines
