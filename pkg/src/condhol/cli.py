"""Command-line interface.

Exit codes: 0 when a claim holds or a command succeeds, 1 when a
countermodel is found or a claim fails, 2 on usage or input errors.
``--json`` switches any command to structured output with the same verdict.
"""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import correspondence as corr
from . import hol
from .embedding import embed, vld_wrap
from .modelfile import ModelFormatError, load_fixture, load_model, format_model, format_set
from .search import SearchBudget, find_countermodel, render_countermodel, verify_reported_model
from .semantics import satisfies, proof_set
from .syntax import FormulaSyntaxError, atoms, desugar, format_formula, parse_formula
from .thf import emit_thf

OK, FAILS, USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _sets(m, mask) -> str:
    return format_set(m.names(mask))


def _parse_env(items, m) -> dict:
    env = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise _UsageError(f"expected NAME={{states}}, got {item!r}")
        names = [s.strip() for s in value.strip().strip("{}").split(",") if s.strip()]
        try:
            env[name.strip()] = sum(1 << m.index(s) for s in names)
        except ValueError as e:
            raise _UsageError(str(e)) from None
    return env


def fixture_path(name: str) -> Path:
    """A path as given, or the name of a fixture shipped with the package."""
    p = Path(name)
    if p.exists():
        return p
    packaged = resources.files("condhol") / "fixtures" / (name if name.endswith(".model")
                                                          else name + ".model")
    if packaged.is_file():
        return Path(str(packaged))
    raise _UsageError(f"no such fixture: {name}")


def packaged_fixtures() -> list[Path]:
    return sorted(Path(str(p)) for p in (resources.files("condhol") / "fixtures").iterdir()
                  if p.name.endswith(".model"))


# --------------------------------------------------------------------------
# Commands

def cmd_parse(args) -> int:
    f = parse_formula(args.formula)
    payload = {"formula": format_formula(f), "desugared": format_formula(desugar(f)),
               "atoms": atoms(f)}
    _emit(args, payload, f"{payload['formula']}\ndesugared: {payload['desugared']}")
    return OK


def cmd_eval(args) -> int:
    m = load_model(args.model)
    f = parse_formula(args.formula)
    env = _parse_env(args.env, m)
    missing = [a for a in atoms(f) if a not in env and a not in m.valuation]
    if missing:
        raise _UsageError(f"unbound atom(s): {', '.join(missing)}")
    mask = proof_set(m, env, f)
    if args.state is not None:
        try:
            holds = satisfies(m, env, m.index(args.state), f)
        except ValueError as e:
            raise _UsageError(str(e)) from None
        where = f"at {args.state}"
    else:
        holds = mask == m.full
        where = "in the model"
    payload = {"formula": format_formula(f), "proof_set": m.names(mask), "holds": holds,
               "state": args.state}
    _emit(args, payload, f"[{format_formula(f)}] = {_sets(m, mask)}\n"
                         f"{'holds' if holds else 'fails'} {where}")
    return OK if holds else FAILS


def cmd_translate(args) -> int:
    from .suite import validity_problem
    f = parse_formula(args.formula)
    term = hol.normalize(vld_wrap(embed(f))) if not args.predicate else hol.normalize(embed(f))
    problem = validity_problem(f)
    payload = {"formula": format_formula(f), "normal_form": hol.format_term(term),
               "type": hol.format_type(hol.typecheck(term, hol.free_vars(term))),
               "thf": emit_thf(problem)}
    if args.hol:
        text = payload["normal_form"]
    else:
        text = payload["thf"].rstrip()
    _emit(args, payload, text)
    return OK


def cmd_gen_suite(args) -> int:
    from .suite import gen_problem_suite
    manifest = gen_problem_suite(args.out)
    _emit(args, {"out": str(args.out), "problems": manifest},
          f"wrote {len(manifest)} problems and manifest.json to {args.out}")
    return OK


def _claim(text):
    try:
        return corr.parse_claim(text)
    except ValueError as e:
        raise _UsageError(str(e)) from None


def _witness_text(m, env, state) -> str:
    parts = [f"{k} = {_sets(m, v)}" for k, v in env.items()]
    if state is not None:
        parts.append(f"W = {m.states[state]}")
    return ", ".join(parts)


def cmd_check(args) -> int:
    c = _claim(args.claim)
    m = load_model(args.model)
    v = corr.check_claim(c, m)
    payload = {"claim": args.claim, "holds": v.holds,
               "witness": None if v.holds else {
                   "env": {k: m.names(x) for k, x in v.env.items()},
                   "state": None if v.state is None else m.states[v.state]}}
    text = f"{args.claim}: holds" if v.holds else (
        f"{args.claim}: fails\nwitness: {_witness_text(m, v.env, v.state)}")
    _emit(args, payload, text)
    return OK if v.holds else FAILS


def cmd_search(args) -> int:
    if (args.claim is None) == (args.formula is None):
        raise _UsageError("give exactly one of --claim or --formula")
    target = _claim(args.claim) if args.claim else parse_formula(args.formula)
    try:
        budget = SearchBudget(args.max_states, min(args.exhaustive_up_to, args.max_states),
                              args.samples, args.seed)
    except ValueError as e:
        raise _UsageError(str(e)) from None
    r = find_countermodel(target, budget)
    label = args.claim or format_formula(target)
    if not r.found:
        payload = {"target": label, "found": False, "models_checked": r.models_checked,
                   "exhaustive_up_to": r.exhaustive_up_to, "random_checked": r.random_checked}
        _emit(args, payload, f"no countermodel to {label}: {r.models_checked} models checked "
                             f"(exhaustive up to {r.exhaustive_up_to} states, "
                             f"{r.random_checked} random); this is not a proof")
        return OK
    m = r.model
    payload = {"target": label, "found": True, "states": list(m.states),
               "selection": [[m.names(x) for x in row] for row in m.selection],
               "valuation": {k: m.names(v) for k, v in m.valuation.items()},
               "env": {k: m.names(v) for k, v in r.env.items()},
               "state": None if r.state is None else m.states[r.state],
               "models_checked": r.models_checked}
    _emit(args, payload, f"countermodel to {label} with {m.size} state(s):\n"
                         f"{render_countermodel(m, r.env, r.state)}\n\n{format_model(m).rstrip()}")
    return FAILS


def cmd_verify_fixture(args) -> int:
    paths = [fixture_path(p) for p in args.fixtures] or packaged_fixtures()
    results = []
    for p in paths:
        try:
            fx = load_fixture(p)
            ok = verify_reported_model(fx)
        except ModelFormatError as e:
            raise _UsageError(f"{p}: {e}") from None
        results.append({"fixture": str(p), "target": fx.claim or format_formula(fx.formula),
                        "genuine": ok})
    text = "\n".join(f"{'OK  ' if r['genuine'] else 'FAIL'} {Path(r['fixture']).name} "
                     f"({r['target']})" for r in results)
    _emit(args, {"results": results}, text)
    return OK if all(r["genuine"] for r in results) else FAILS


def cmd_run_suite(args) -> int:
    from .prover import format_report, load_registry, run_suite
    from .suite import load_manifest
    provers = load_registry(args.registry)
    if not provers:
        raise _UsageError("the registry lists no provers")
    manifest = load_manifest(args.suite)
    names = set(args.problems.split(",")) if args.problems else None
    report = run_suite(manifest, provers, args.jobs, names)
    if args.report:
        Path(args.report).write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")
    _emit(args, report, format_report(report))
    return FAILS if report["summary"]["mismatches"] else OK


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="condhol", description=__doc__.split("\n", 1)[0])
    ap.add_argument("--json", action="store_true", help="structured output")
    sub = ap.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="structured output")

    p = sub.add_parser("parse", parents=[common], help="parse and pretty-print a formula")
    p.add_argument("formula")
    p.set_defaults(run=cmd_parse)

    p = sub.add_parser("eval", parents=[common], help="evaluate a formula in a model file")
    p.add_argument("formula")
    p.add_argument("--model", required=True)
    p.add_argument("--state")
    p.add_argument("--env", action="append", metavar="A={i1,i2}")
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("translate", parents=[common], help="embed a formula and print its THF validity problem")
    p.add_argument("formula")
    p.add_argument("--hol", action="store_true", help="print the normal form only")
    p.add_argument("--predicate", action="store_true",
                   help="with --hol, show the embedded predicate instead of its validity")
    p.set_defaults(run=cmd_translate)

    p = sub.add_parser("gen-suite", parents=[common], help="write the THF problem suite and manifest")
    p.add_argument("--out", required=True)
    p.set_defaults(run=cmd_gen_suite)

    p = sub.add_parser("check", parents=[common], help="check a claim on one model file")
    p.add_argument("--claim", required=True)
    p.add_argument("--model", required=True)
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("search", parents=[common], help="look for a countermodel")
    p.add_argument("--claim")
    p.add_argument("--formula")
    p.add_argument("--max-states", type=int, default=2)
    p.add_argument("--exhaustive-up-to", type=int, default=2)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_search)

    p = sub.add_parser("verify-fixture", parents=[common], help="confirm fixtures are genuine countermodels")
    p.add_argument("fixtures", nargs="*", help="paths or packaged names (default: all packaged)")
    p.set_defaults(run=cmd_verify_fixture)

    p = sub.add_parser("run-suite", parents=[common], help="dispatch the suite to external provers")
    p.add_argument("--suite", required=True, help="directory written by gen-suite")
    p.add_argument("--registry", required=True, help="prover registry JSON")
    p.add_argument("--problems", help="comma-separated problem names")
    p.add_argument("--jobs", type=int, default=4)
    p.add_argument("--report", help="write the JSON report here")
    p.set_defaults(run=cmd_run_suite)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.run(args)
    except (_UsageError, FormulaSyntaxError, ModelFormatError, OSError, KeyError,
            ValueError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
