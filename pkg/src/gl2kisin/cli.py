"""Command-line interface.

Every command reads an optional JSON profile config and emits one JSON
report on stdout (or --out).  Exit codes: 0 success, 1 bad configuration,
2 precondition violated, 3 internal invariant failed.
"""

import argparse
import json
import multiprocessing
import random
import sys

from . import d0 as d0_mod
from . import serial
from . import tangent as tangent_mod
from .errors import ConfigError, InternalCheckError, PreconditionError
from .fields import GF
from .kisin import (
    etale_matrices,
    gauge_check,
    height_check,
    kisin_matrices,
    shape_of,
    torus_rigidity_dims,
    verify_recovery,
)
from .matrices import Mat2
from .laurent import Laurent
from .oracles import coset_certify, random_truncated_invertible
from .rho import (
    RhoBar,
    inertia_exponents,
    serre_weights,
    tau_presentation,
    x_rho,
    x_sigma,
)
from .weights import ADM_COMPONENTS, adm_set, from_index, index_of


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def _load_config(args):
    if not args.config:
        raise ConfigError("this command needs --config pointing at a profile JSON")
    try:
        with open(args.config) as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ConfigError("cannot read config: %s" % exc)
    except json.JSONDecodeError as exc:
        raise ConfigError("config is not valid JSON: %s" % exc)
    if args.mode:
        cfg = dict(cfg, mode=args.mode)
    return cfg


def _load_rho(args):
    cfg = _load_config(args)
    return RhoBar.from_config(cfg), cfg


def _seed(args, cfg):
    if args.seed is not None:
        return args.seed
    return int(cfg.get("seed", 0)) if cfg else 0


def _parse_ints(text, what):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ConfigError("%s must be comma-separated integers, got %r" % (what, text))


def _parse_wtilde(rho, text):
    idx = _parse_ints(text, "--wtilde")
    if len(idx) != rho.f:
        raise ConfigError("--wtilde needs %d components" % rho.f)
    return from_index(idx)


# ---------------------------------------------------------------------------
# commands


def cmd_describe(args):
    rho, _cfg = _load_rho(args)
    inert = inertia_exponents(rho)
    out = rho.to_config()
    out.update(
        {
            "semisimple": rho.semisimple(),
            "zero_count": rho.zero_count(),
            "free_slots": list(rho.free_slots()),
            "depth": rho.depth(),
            "weight_count": len(serre_weights(rho)),
            "inertia": {
                "level": inert.level,
                "exponent": inert.exponent,
                "twist_exponent": inert.twist_exponent,
            },
        }
    )
    return out


def cmd_weights(args):
    rho, _cfg = _load_rho(args)
    ws = serre_weights(rho)
    return {
        "count": len(ws),
        "entries": [{"b": list(b), "label": label} for b, label in ws.entries],
    }


def cmd_adm(args):
    if args.config:
        rho, _cfg = _load_rho(args)
        f = rho.f
    elif args.f:
        f = args.f
    else:
        raise ConfigError("adm needs --config or --f")
    elements = adm_set(f)
    return {
        "f": f,
        "count": len(elements),
        "elements": [{"index": list(index_of(w)), "name": repr(w)} for w in elements],
    }


def cmd_xset(args):
    rho, _cfg = _load_rho(args)
    out = {
        "x_rho": [list(index_of(w)) for w in x_rho(rho)],
    }
    out["count"] = len(out["x_rho"])
    if args.sigma:
        b = _parse_ints(args.sigma, "--sigma")
        out["sigma_b"] = list(b)
        out["x_sigma"] = [list(index_of(w)) for w in x_sigma(rho, b)]
    return out


def _type_entry(rho, w):
    pres = tau_presentation(rho, w)
    return {
        "index": list(index_of(w)),
        "s_tau": list(pres.s_tau),
        "mu_tau": [list(x) for x in pres.mu_tau],
        "mu_plus_eta": [list(x) for x in pres.mu_plus_eta],
        "generic_depth": pres.generic_depth,
    }


def cmd_types(args):
    rho, _cfg = _load_rho(args)
    if args.wtilde:
        return _type_entry(rho, _parse_wtilde(rho, args.wtilde))
    entries = [_type_entry(rho, w) for w in x_rho(rho)]
    return {"count": len(entries), "types": entries}


def cmd_kisin(args):
    rho, _cfg = _load_rho(args)
    wtilde = _parse_wtilde(rho, args.wtilde) if args.wtilde else None
    targets = [wtilde] if wtilde else list(x_rho(rho))
    reports = []
    for w in targets:
        data = kisin_matrices(rho, w)
        idx = index_of(w)
        per_slot = []
        for i in range(rho.f):
            m = data.mats[i]
            comp = ADM_COMPONENTS[idx[i]]
            sh = shape_of(m)
            per_slot.append(
                {
                    "component_index": idx[i],
                    "gauge": gauge_check(m, comp),
                    "height_exact": height_check(m, (2, 1)),
                    "height_window": height_check(m, (2, 1), "window"),
                    "shape": {"s": sh.s, "nu": list(sh.nu), "adm_index": sh.adm_index()},
                    "matrix": m,
                }
            )
        entry = {
            "index": list(idx),
            "type": _type_entry(rho, w),
            "recovery": verify_recovery(rho, w),
            "per_slot": per_slot,
        }
        if rho.field.degree == 1:
            dim, expected = torus_rigidity_dims(data)
            entry["torus_rigidity"] = {"dim": dim, "expected": expected}
        reports.append(entry)
    if wtilde:
        report = reports[0]
        report["etale"] = list(etale_matrices(rho))
        return report
    return {"count": len(reports), "elements": reports}


def cmd_tangent(args):
    rho, cfg = _load_rho(args)
    b = _parse_ints(args.b, "--b") if args.b else None
    system = tangent_mod.assemble_system(
        rho, b=b, degree_bound=args.degree_bound, min_degree=args.min_degree
    )
    if args.negative_control:
        system = system.without(("pin", "p21_0"))
    report = tangent_mod.solve_claim(system)
    out = {
        "degree_bound": system.degree_bound,
        "min_degree": system.min_degree,
        "columns": system.ncols,
        "rows": len(system.rows),
        "kernel_dim": report.kernel_dim,
        "param_kernel_dim": report.param_kernel_dim,
        "m_kernel_dim": report.m_kernel_dim,
        "injective": report.injective,
        "negative_control": bool(args.negative_control),
        "consequences": tangent_mod.consequence_report(report),
        "residual_ok": tangent_mod.residual_check(report),
    }
    if args.stability:
        first, higher, stable = tangent_mod.stability_check(
            rho, b=b, degree_bound=args.degree_bound, min_degree=args.min_degree
        )
        out["stability"] = {
            "higher_degree_bound": higher.system.degree_bound,
            "higher_dims": [higher.kernel_dim, higher.param_kernel_dim, higher.m_kernel_dim],
            "stable": stable,
        }
    return out


def cmd_d0(args):
    rho, _cfg = _load_rho(args)
    report = d0_mod.d0_checks(rho)
    components = []
    for comp in report.components:
        components.append(
            {
                "socle": comp.socle,
                "signs": list(comp.profile.signs),
                "size": len(comp),
                "dim": sum(d0_mod.serre_weight_dim(lab) for lab in comp.labels),
            }
        )
    return {
        "passed": report.passed,
        "per_component_distinct": report.per_component_distinct,
        "weight_set_only_socles": report.weight_set_only_socles,
        "socles_match": report.socles_match,
        "downward_closed": report.downward_closed,
        "globally_multiplicity_free": report.globally_multiplicity_free,
        "components": components,
        "total_constituents": sum(len(c) for c in report.components),
    }


# ---------------------------------------------------------------------------
# oracle command (parallelizable batches)


def _coset_batch(task):
    p, degree, seed0, indices, prec = task
    field = GF(p, degree)
    out = []
    for i in indices:
        rng = random.Random(seed0 * 1000003 + i)
        M = random_truncated_invertible(field, rng)
        component = shape_of(M).component()
        out.append([i, bool(coset_certify(M, component, prec))])
    return out


def _shape_batch(task):
    p, degree, seed0, indices, _prec = task
    field = GF(p, degree)
    out = []
    for i in indices:
        rng = random.Random(seed0 * 1000003 + i)
        while True:
            entries = [
                Laurent(field, {d: field.random(rng) for d in range(-3, 5)})
                for _ in range(4)
            ]
            M = Mat2(field, *entries)
            if M.det():
                break
        sh = shape_of(M)
        out.append([i, bool(sh.verify(M))])
    return out


_BATCHES = {"coset": _coset_batch, "shape": _shape_batch}


def cmd_oracle(args):
    cfg = _load_config(args) if args.config else None
    if args.kind == "tangent-residual":
        if cfg is None:
            raise ConfigError("oracle --kind tangent-residual needs --config")
        rho = RhoBar.from_config(cfg)
        report = tangent_mod.solve_claim(tangent_mod.assemble_system(rho))
        return {
            "kind": args.kind,
            "kernel_dim": report.kernel_dim,
            "injective": report.injective,
            "residual_ok": tangent_mod.residual_check(report),
        }
    if cfg is not None:
        p = int(cfg["p"])
        degree = int(cfg.get("field_degree", 1))
    else:
        p, degree = args.p, 1
    seed0 = _seed(args, cfg)
    worker = _BATCHES[args.kind]
    jobs = max(args.jobs, 1)
    chunks = [
        (p, degree, seed0, list(range(k, args.trials, jobs)), args.prec)
        for k in range(jobs)
    ]
    if jobs == 1:
        results = [worker(chunks[0])]
    else:
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            results = pool.map(worker, chunks)
    flat = sorted(pair for batch in results for pair in batch)
    failures = [i for i, ok in flat if not ok]
    return {
        "kind": args.kind,
        "p": p,
        "field_degree": degree,
        "seed": seed0,
        "trials": args.trials,
        "agreements": args.trials - len(failures),
        "failures": failures,
    }


# ---------------------------------------------------------------------------
# parser


def build_parser():
    parser = _Parser(prog="gl2kisin", description=__doc__)
    common = _Parser(add_help=False)
    common.add_argument("--config", help="path to a profile JSON config")
    common.add_argument("--mode", choices=["strict", "permissive"], help="override validation mode")
    common.add_argument("--seed", type=int, default=None, help="override the RNG seed")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for bulk commands")
    common.add_argument("--out", help="write the JSON report to this path instead of stdout")

    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("describe", parents=[common], help="profile summary")
    p.set_defaults(func=cmd_describe)

    p = sub.add_parser("weights", parents=[common], help="weight set of the profile")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("adm", parents=[common], help="admissible elements")
    p.add_argument("--f", type=int, help="number of slots when no config is given")
    p.set_defaults(func=cmd_adm)

    p = sub.add_parser("xset", parents=[common], help="allowed admissible elements")
    p.add_argument("--sigma", help="weight selector b as comma-separated 0/1")
    p.set_defaults(func=cmd_xset)

    p = sub.add_parser("types", parents=[common], help="type presentations")
    p.add_argument("--wtilde", help="one admissible element as comma-separated indices")
    p.set_defaults(func=cmd_types)

    p = sub.add_parser("kisin", parents=[common], help="gauge-form matrices and classification")
    p.add_argument("--wtilde", help="one admissible element as comma-separated indices")
    p.set_defaults(func=cmd_kisin)

    p = sub.add_parser("tangent", parents=[common], help="first-order rigidity system")
    p.add_argument("--b", help="weight selector as comma-separated 0/1")
    p.add_argument("--degree-bound", type=int, default=None)
    p.add_argument("--min-degree", type=int, default=0)
    p.add_argument("--negative-control", action="store_true", help="drop the pivot pin")
    p.add_argument("--stability", action="store_true", help="re-solve one Frobenius step higher")
    p.set_defaults(func=cmd_tangent)

    p = sub.add_parser("d0", parents=[common], help="composition-series checks")
    p.set_defaults(func=cmd_d0)

    p = sub.add_parser("oracle", parents=[common], help="brute-force cross-checks")
    p.add_argument("--kind", choices=sorted(_BATCHES) + ["tangent-residual"], default="coset")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--prec", type=int, default=4)
    p.add_argument("--p", type=int, default=2, help="field characteristic when no config is given")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise ConfigError("no command given; see --help")
        report = args.func(args)
        text = serial.dumps(report)
        if getattr(args, "out", None):
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    except ConfigError as exc:
        print("config error: %s" % exc, file=sys.stderr)
        return 1
    except PreconditionError as exc:
        print("precondition failed: %s" % exc, file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print("internal check failed: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
