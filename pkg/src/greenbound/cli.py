"""Command-line experiment runner.

Every run writes one JSON report (or CSV rows of its per-trial records) that
echoes the resolved configuration.  Exit status: 0 when every check passed,
1 when some bound or verification failed, 2 for unusable input.

Options can also come from a JSON config file (``--config``) whose keys are
the option names; explicit flags win over the file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
import warnings

from . import __version__
from .corpus import random_quotient
from .lexmachine import HilbertFunction, lex_segment_ideal, lex_restricted_dim, random_hilbert_function
from .macaulay import macaulay_lower
from .polykernel import DEFAULT_PRIME, FieldSpec, GradedQuotient, Ideal, Polynomial, default_names, standard_monomial_count
from .reduction import VARIANTS, CriterionError, ReductionProblem, criterion_holds, search_reduction
from .restriction import (
    BudgetError,
    LinearForm,
    check_green_bound,
    check_iterated_bound,
    sample_linear_form,
    verify_grd,
)
from .toric import chain_toric, fiber_cone, sample_structured_form, segre, segre_veronese, veronese

TIMING_KEY = "elapsed_seconds"


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------------------
# parsing helpers


def _ints(text) -> list[int]:
    if isinstance(text, (list, tuple)):
        return [int(v) for v in text]
    return [int(v) for v in str(text).replace(" ", "").split(",") if v]


def _vectors(text) -> list[list[int]]:
    if isinstance(text, (list, tuple)):
        return [_ints(v) for v in text]
    return [_ints(chunk) for chunk in str(text).split(";") if chunk.strip()]


def _polys(text, names, field) -> list[Polynomial]:
    if not text:
        return []
    items = text if isinstance(text, (list, tuple)) else str(text).split(";")
    return [Polynomial.parse(s, names, field) for s in items if str(s).strip()]


def _names(args, n):
    if args.names:
        names = [s.strip() for s in str(args.names).split(",")]
        if len(names) != n:
            raise ConfigError(f"--names lists {len(names)} variables, expected {n}")
        return names
    return default_names(n)


def _field(args, default=DEFAULT_PRIME) -> FieldSpec:
    """Resolve ``--field`` and record the resolved value for the config echo."""
    field = FieldSpec.parse(args.field if args.field is not None else default)
    args.field = "Q" if field.p == 0 else str(field.p)
    return field


def _require_seed(args):
    if args.seed is None:
        raise ConfigError("--seed is required for randomized runs")
    return int(args.seed)


def _form(coeffs, n, field) -> LinearForm:
    if len(coeffs) != n:
        raise ConfigError(f"linear form {coeffs} does not have {n} coefficients")
    return LinearForm(tuple(coeffs), field)


def _ring_strs(R: GradedQuotient, names):
    return [g.to_str(names) for g in R.ideal.generators]


# ---------------------------------------------------------------------------
# subcommands; each returns (records, summary, failed)


def cmd_green_check(args):
    field = _field(args)
    degrees = [args.degree] if args.degree else list(range(1, args.max_degree + 1))
    records = []
    explicit = args.form is not None or args.ideal is not None
    if explicit:
        n = args.nvars or (len(_ints(args.form)) if args.form is not None else None)
        if not n:
            raise ConfigError("explicit mode needs --nvars or --form")
        names = _names(args, n)
        R = GradedQuotient.from_generators(_polys(args.ideal, names, field), n, field)
        if args.form is not None:
            l = _form(_ints(args.form), n, field)
        else:
            l = sample_linear_form(n, field, random.Random(_require_seed(args)))
        instances = [(R, l, names)]
    else:
        rng = random.Random(_require_seed(args))
        instances = []
        for _ in range(args.trials):
            R = random_quotient(rng, field, args.max_vars, args.max_gens, args.max_gen_degree)
            instances.append((R, sample_linear_form(R.nvars, field, rng), default_names(R.nvars)))
    violations = 0
    for k, (R, l, names) in enumerate(instances):
        t0 = time.perf_counter()
        checks = []
        for d in degrees:
            res = check_green_bound(R, l, d)
            violations += not res.holds
            checks.append({"d": d, **res.to_json()})
        records.append(
            {
                "trial": k,
                "nvars": R.nvars,
                "ideal": _ring_strs(R, names),
                "form": l.to_json(),
                "checks": checks,
                "holds": all(c["holds"] for c in checks),
                TIMING_KEY: time.perf_counter() - t0,
            }
        )
    summary = {"trials": len(records), "checks": len(records) * len(degrees), "violations": violations}
    return records, summary, violations > 0


def _char2_preset(args, field, rng):
    T = veronese(2, 2, field)
    z = [Polynomial.variable(i, 3, field) for i in range(3)]
    R = T.quotient([z[0], z[2]])
    # dim R_1 = 1, so r = dim R_1 + d - 1 = d forms suffice
    r = args.r or args.degree
    forms = [sample_structured_form(T, rng)[0] for _ in range(r)]
    return R, forms, list(T.names)


def cmd_grd_verify(args):
    field = _field(args, 2 if args.preset == "char2-veronese" else DEFAULT_PRIME)
    d = args.degree or 1
    records = []
    failures = 0
    if args.forms is None and args.preset is None and args.r is None:
        raise ConfigError("give --forms, --r (sampled forms) or --preset")
    if args.forms is not None and len(_vectors(args.forms)) > 12:
        raise BudgetError(f"(Gr,d) enumeration is capped at r <= 12, got r = {len(_vectors(args.forms))}")
    if args.r is not None and args.r > 12:
        raise BudgetError(f"(Gr,d) enumeration is capped at r <= 12, got r = {args.r}")
    randomized = args.forms is None
    rng = random.Random(_require_seed(args)) if randomized else None
    trials = args.trials if randomized else 1
    for k in range(trials):
        t0 = time.perf_counter()
        if args.preset == "char2-veronese":
            R, forms, names = _char2_preset(args, field, rng)
        elif args.preset is not None:
            raise ConfigError(f"unknown preset {args.preset!r}")
        else:
            n = args.nvars or (len(_vectors(args.forms)[0]) if args.forms else None)
            if not n:
                raise ConfigError("need --nvars")
            names = _names(args, n)
            R = GradedQuotient.from_generators(_polys(args.ideal, names, field), n, field)
            if args.forms is not None:
                forms = [_form(v, n, field) for v in _vectors(args.forms)]
            else:
                forms = [sample_linear_form(n, field, rng) for _ in range(args.r)]
        report = verify_grd(R, forms, d, args.stronger)
        green = check_green_bound(R, forms[0], d)
        prefixes = [check_iterated_bound(R, forms[:p], d).to_json() for p in range(1, len(forms) + 1)]
        failures += not report.passed
        records.append(
            {
                "trial": k,
                "ideal": _ring_strs(R, names),
                "forms": [f.to_json() for f in forms],
                "d": d,
                "grd": report.to_json(),
                "green_bound": green.to_json(),
                "iterated_bounds": prefixes,
                TIMING_KEY: time.perf_counter() - t0,
            }
        )
    summary = {"trials": len(records), "grd_failures": failures}
    return records, summary, failures > 0


def cmd_lex_restrict(args):
    field = _field(args)
    if args.hf is not None:
        if not args.nvars:
            raise ConfigError("--hf needs --nvars")
        hfs = [HilbertFunction(tuple(_ints(args.hf)), args.nvars)]
    else:
        rng = random.Random(_require_seed(args))
        hfs = []
        for _ in range(args.trials):
            n = rng.randint(1, args.max_vars)
            hfs.append(random_hilbert_function(n, args.horizon, rng))
    records = []
    mismatches = 0
    for k, hf in enumerate(hfs):
        t0 = time.perf_counter()
        I = lex_segment_ideal(hf, field=field)
        rows = []
        for d in range(1, hf.horizon + 1):
            got = lex_restricted_dim(I, d)
            want = macaulay_lower(hf[d], d)
            roundtrip = standard_monomial_count(I, d)
            ok = got == want and roundtrip == hf[d]
            mismatches += not ok
            rows.append({"d": d, "hf": hf[d], "restricted": got, "macaulay_lower": want, "roundtrip": roundtrip, "match": ok})
        records.append(
            {
                "trial": k,
                "nvars": hf.num_vars,
                "hf": list(hf.values),
                "lex_generators": [g.to_str() for g in I.generators],
                "degrees": rows,
                TIMING_KEY: time.perf_counter() - t0,
            }
        )
    return records, {"trials": len(records), "mismatches": mismatches}, mismatches > 0


def _parse_toric(text, field):
    kind, _, params = str(text).partition(":")
    kind = kind.strip()
    if kind == "segre":
        return segre(_ints(params), field)
    if kind == "veronese":
        s, b = _ints(params)
        return veronese(s, b, field)
    if kind == "segre-veronese":
        n_part, b_part = params.split("/")
        return segre_veronese(_ints(n_part), _ints(b_part), field)
    if kind == "chain":
        return chain_toric(_ints(params), field)
    if kind == "fiber-cone":
        return fiber_cone(_vectors(params), field)
    raise ConfigError(f"unknown toric kind {kind!r}")


PRESETS = {
    # name: (toric argument or None, nvars, ideal, i, p, variant)
    "quadric": (None, 3, "random-quadric", 2, 2, "general"),
    "segre22": ("segre:2,2", None, None, 1, 4, "segre-product"),
    "veronese22": ("veronese:2,2", None, None, 1, 2, "veronese-power"),
    "veronese22-square": ("veronese:2,2", None, None, 2, 2, "veronese-power"),
    "veronese22-z1z3": ("veronese:2,2", None, "Z1; Z3", 1, 2, "veronese-power"),
    "char2-veronese": ("veronese:2,2", None, "Z1; Z3", 1, 1, "veronese-power"),
}


def cmd_eakin_sathaye(args):
    field = _field(args, 2 if args.problem == "char2-veronese" else DEFAULT_PRIME)
    seed = _require_seed(args)
    toric_arg, nvars, ideal, i, p, variant = (None, args.nvars, args.ideal, args.i, args.p, args.variant)
    if args.problem:
        if args.problem not in PRESETS:
            raise ConfigError(f"unknown problem {args.problem!r}; choose from {sorted(PRESETS)}")
        toric_arg, nvars, ideal, i, p, variant = PRESETS[args.problem]
    toric_arg = args.toric or toric_arg
    i = args.i or i
    p = args.p or p
    variant = args.variant or variant or "general"
    if not i or not p:
        raise ConfigError("need --i and --p (or --problem)")
    rng = random.Random(seed)
    T = _parse_toric(toric_arg, field) if toric_arg else None
    if T is not None:
        names = list(T.names)
        base = T.ring()
    else:
        if not nvars:
            raise ConfigError("need --nvars, --toric or --problem")
        names = _names(args, nvars)
        base = GradedQuotient.polynomial_ring(nvars, field)
    if ideal == "random-quadric":
        extra = [Polynomial.random_homogeneous(base.nvars, 2, field, rng)]
    else:
        extra = _polys(ideal, names, field)
    R = base.quotient(extra)
    problem = ReductionProblem(R, i, p, variant, T)
    holds = criterion_holds(R, i, p)
    records = []
    failed = 0
    for k in range(args.trials):
        t0 = time.perf_counter()
        result = search_reduction(problem, random.Random(f"{seed}:{k}"), args.max_trials, args.exploratory)
        failed += not result.verified
        records.append(
            {
                "trial": k,
                "ideal": _ring_strs(R, names),
                "variables": names,
                "i": i,
                "p": p,
                "variant": variant,
                "dim_R_i": R.hilbert_dim(i),
                "criterion_holds": holds,
                **result.to_json(),
                TIMING_KEY: time.perf_counter() - t0,
            }
        )
    return records, {"searches": len(records), "unverified": failed}, failed > 0


def cmd_toric_demo(args):
    field = _field(args)
    t0 = time.perf_counter()
    kind = args.kind
    if kind == "segre":
        T = segre(_ints(args.n), field)
    elif kind == "veronese":
        if not args.s or not args.b:
            raise ConfigError("veronese needs --s and --b")
        T = veronese(args.s, _ints(args.b)[0], field)
    elif kind == "segre-veronese":
        T = segre_veronese(_ints(args.n), _ints(args.b), field)
    elif kind == "chain":
        T = chain_toric(_ints(args.n), field)
    elif kind == "fiber-cone":
        T = fiber_cone(_vectors(args.generators), field)
    else:
        raise ConfigError(f"unknown kind {kind!r}")
    R = T.ring()
    vanishes = T.kernel_vanishes()
    dim1 = R.hilbert_dim(1)
    record = {**T.to_json(), "degree1_dim": dim1, "kernel_vanishes": vanishes, "structured_sample": None}
    if args.seed is not None and T.variant is not None:
        form, underlying = sample_structured_form(T, random.Random(int(args.seed)))
        record["structured_sample"] = {
            "variant": T.variant,
            "underlying": [u.to_json() for u in underlying],
            "form": form.to_json(),
            "form_str": form.to_str(T.names),
        }
    record[TIMING_KEY] = time.perf_counter() - t0
    ok = vanishes and dim1 == T.presentation_vars
    return [record], {"presentation_vars": T.presentation_vars, "kernel_generators": len(record["kernel"]), "ok": ok}, not ok


COMMANDS = {
    "green-check": cmd_green_check,
    "grd-verify": cmd_grd_verify,
    "lex-restrict": cmd_lex_restrict,
    "eakin-sathaye": cmd_eakin_sathaye,
    "toric-demo": cmd_toric_demo,
}


# ---------------------------------------------------------------------------
# argument parser


def _common():
    # built per subcommand: parents share action objects, so defaults would leak
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with option values; flags override it")
    common.add_argument("--field", help="prime modulus or Q (default 65521; 2 for the char-2 presets)")
    common.add_argument("--seed", type=int, help="seed; required for randomized runs")
    common.add_argument("--trials", type=int, default=1)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--exploratory", action="store_true", help="search even when the criterion fails")
    common.add_argument("--names", help="comma-separated variable names")
    return common


def build_parser():

    parser = argparse.ArgumentParser(prog="greenbound", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    subs = {}

    p = sub.add_parser("green-check", parents=[_common()], help="randomized Green-bound verification")
    p.set_defaults(trials=100)
    p.add_argument("--max-vars", type=int, default=4)
    p.add_argument("--max-gens", type=int, default=3)
    p.add_argument("--max-gen-degree", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--degree", type=int, help="check only this degree")
    p.add_argument("--nvars", type=int)
    p.add_argument("--ideal", help="explicit generators separated by ';'")
    p.add_argument("--form", help="explicit linear form as comma-separated coefficients")
    subs["green-check"] = p

    p = sub.add_parser("grd-verify", parents=[_common()], help="verify property (Gr,d)")
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--nvars", type=int)
    p.add_argument("--ideal", help="generators separated by ';'")
    p.add_argument("--forms", help="coefficient vectors separated by ';', e.g. '1,0;0,1'")
    p.add_argument("--r", type=int, help="number of sampled forms")
    p.add_argument("--preset", choices=("char2-veronese",))
    p.add_argument("--stronger", action="store_true", help="also check the stronger condition (4)")
    subs["grd-verify"] = p

    p = sub.add_parser("lex-restrict", parents=[_common()], help="lex-segment restriction identity")
    p.set_defaults(trials=100)
    p.add_argument("--hf", help="explicit Hilbert function, e.g. 1,2,1,1")
    p.add_argument("--nvars", type=int)
    p.add_argument("--max-vars", type=int, default=4)
    p.add_argument("--horizon", type=int, default=5)
    subs["lex-restrict"] = p

    p = sub.add_parser("eakin-sathaye", parents=[_common()], help="reduction search")
    p.add_argument("--problem", help=f"preset: {', '.join(sorted(PRESETS))}")
    p.add_argument("--toric", help="e.g. segre:2,2  veronese:2,2  segre-veronese:2,2/2,1  chain:1,2")
    p.add_argument("--nvars", type=int)
    p.add_argument("--ideal", help="extra generators separated by ';' or 'random-quadric'")
    p.add_argument("--i", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--variant", choices=VARIANTS)
    p.add_argument("--max-trials", type=int, default=32)
    subs["eakin-sathaye"] = p

    p = sub.add_parser("toric-demo", parents=[_common()], help="toric presentation demo")
    p.add_argument("--kind", required=True, choices=("segre", "veronese", "segre-veronese", "chain", "fiber-cone"))
    p.add_argument("--n", help="block sizes / chain bounds, e.g. 2,2")
    p.add_argument("--s", type=int, help="number of variables for veronese")
    p.add_argument("--b", help="degree(s)")
    p.add_argument("--generators", help="fiber-cone exponent vectors, e.g. '2,0;1,1;0,2'")
    subs["toric-demo"] = p
    return parser, subs


def parse_args(argv):
    parser, subs = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        with open(args.config) as fh:
            cfg = json.load(fh)
        if not isinstance(cfg, dict):
            raise ConfigError("config file must hold a JSON object")
        cfg = {k.replace("-", "_"): v for k, v in cfg.items() if k not in ("command", "config")}
        subs[args.command].set_defaults(**cfg)
        args = parser.parse_args(argv)
    return args


# ---------------------------------------------------------------------------
# reports


def strip_timing(obj):
    """Copy of a report without timing fields, for replay comparisons."""
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k != TIMING_KEY}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj


def _resolved_config(args):
    return {k: v for k, v in sorted(vars(args).items())}


def run(argv=None):
    """Run one subcommand and return ``(report, exit_code)``."""
    try:
        args = parse_args(argv)
    except (ConfigError, OSError, json.JSONDecodeError) as exc:
        return {"error": str(exc)}, 2
    t0 = time.perf_counter()
    report = {"tool": "greenbound", "version": __version__, "command": args.command}
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            records, summary, failed = COMMANDS[args.command](args)
    except (ConfigError, BudgetError, CriterionError, ValueError) as exc:
        report["config"] = _resolved_config(args)
        report["error"] = f"{type(exc).__name__}: {exc}"
        return report, 2
    report["config"] = _resolved_config(args)
    notes = sorted({str(w.message) for w in caught})
    if notes:
        report["warnings"] = notes
    report["records"] = records
    report["summary"] = {**summary, "failed": failed}
    report[TIMING_KEY] = time.perf_counter() - t0
    return report, int(failed)


def _csv_text(report) -> str:
    rows = report.get("records", [])
    buf = io.StringIO()
    keys = sorted({k for r in rows for k in r})
    writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: json.dumps(v, sort_keys=True) if isinstance(v, (list, dict)) else v for k, v in r.items()})
    return buf.getvalue()


def main(argv=None):
    report, code = run(argv)
    fmt = report.get("config", {}).get("format", "json")
    text = _csv_text(report) if fmt == "csv" and "records" in report else json.dumps(report, indent=2, sort_keys=True) + "\n"
    out = report.get("config", {}).get("out")
    if "error" in report:
        print(f"greenbound: {report['error']}", file=sys.stderr)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
