"""Command-line entry point.

Exit codes: 0 success, 1 a check failed, 2 bad input, 3 computation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .algebra import Algebra, NotAdmissibleWithinBound, RelationIllFormed, blocks
from .approx import (DegenerateOmega, domdim, fadim, injective_dimension, is_tilting, is_wakamatsu,
                     lapp, pd)
from .config import RunConfig
from .corpus import algebra_names, corpus_algebra, describe
from .families import indecomposables
from .fileio import ParseError, load_algebra, load_module
from .repmod import (Representation, decompose, dsum, dual_regular_module, injective,
                     is_injective, is_projective, projective, regular_module, simple, tau,
                     tau_inverse)
from .stablecat import hypothesis_report
from .transport import CHECK_KINDS, curated_pairs, get_pair, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_COMPUTE = 0, 1, 2, 3


class InputError(ValueError):
    pass


def emit_report(results) -> dict:
    """Check records in a fixed key order; an empty run gives ``{"checks": []}``."""
    return {"checks": [r.to_json() if hasattr(r, "to_json") else r for r in results]}


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, default=str)


def resolve_algebra(spec: str) -> Algebra:
    if spec in algebra_names():
        return corpus_algebra(spec)
    path = Path(spec)
    if not path.exists():
        raise InputError(f"no corpus algebra or file named {spec!r}")
    return load_algebra(path)


def _one_module(alg: Algebra, spec: str) -> Representation:
    if spec == "regular":
        return regular_module(alg)
    if spec == "dual":
        return dual_regular_module(alg)
    if len(spec) >= 2 and spec[0] in "SPI" and spec[1:].isdigit():
        i = int(spec[1:])
        if not 1 <= i <= alg.n:
            raise InputError(f"vertex {i} outside 1..{alg.n}")
        return {"S": simple, "P": projective, "I": injective}[spec[0]](alg, i)
    path = Path(spec)
    if path.exists():
        return load_module(path, alg)
    raise InputError(f"cannot read module {spec!r}: use regular, dual, S<i>, P<i>, I<i> or a file")


def resolve_module(alg: Algebra, spec: str) -> Representation:
    """``regular``, ``dual``, ``S1``, ``P2``, ``I3``, a module file, or a ``+``-separated sum."""
    return dsum(alg, [_one_module(alg, s.strip()) for s in spec.split("+") if s.strip()])


# ---------------------------------------------------------------- commands

def cmd_algebra_check(args, cfg, out):
    alg = resolve_algebra(args.algebra)
    assoc = alg.check_associativity(seed=cfg.seed)
    rep = hypothesis_report(alg)
    doc = {"algebra": alg.name, "dim": alg.dim, "loewy_bound": alg.loewy_bound,
           "basis": [alg.label(k) for k in range(alg.dim)],
           "blocks": [{"vertices": list(b.vertices), "semisimple": b.semisimple} for b in blocks(alg)],
           "associative": assoc, "hypotheses": rep.to_json()}
    if cfg.json:
        out.append(doc)
    else:
        print(f"algebra {alg.name}: dim {alg.dim}, Loewy bound {alg.loewy_bound}")
        print("basis: " + ", ".join(doc["basis"]))
        print(f"associative: {assoc}")
        print(f"nodes: {doc['hypotheses']['nodes'] or 'none'}; "
              f"self-injective: {rep.self_injective}; proj-inj: {', '.join(doc['hypotheses']['proj_inj']) or 'none'}")
    return EXIT_OK if assoc else EXIT_FAIL


def _invariants_row(m, cutoff):
    return {"dims": list(m.dims), "projective": is_projective(m), "injective": is_injective(m),
            "pd": pd(m, cutoff).render(), "id": injective_dimension(m, cutoff).render(),
            "domdim": domdim(m, cutoff).render(),
            "tau": list(tau(m).dims), "tau_inverse": list(tau_inverse(m).dims)}


def cmd_invariants(args, cfg, out):
    alg = resolve_algebra(args.algebra)
    mods = [resolve_module(alg, args.module)] if args.module else list(indecomposables(alg))
    rows = [_invariants_row(m, cfg.cutoff) for m in mods]
    if cfg.json:
        out.append({"algebra": alg.name, "modules": rows})
    else:
        print(f"{'dims':<16}{'proj':<6}{'inj':<6}{'pd':<18}{'id':<18}{'domdim':<22}tau")
        for r in rows:
            print(f"{str(tuple(r['dims'])):<16}{str(r['projective'])[0]:<6}{str(r['injective'])[0]:<6}"
                  f"{r['pd']:<18}{r['id']:<18}{r['domdim']:<22}{tuple(r['tau'])}")
    return EXIT_OK


def cmd_lapp(args, cfg, out):
    alg = resolve_algebra(args.algebra)
    omega, m = resolve_module(alg, args.omega), resolve_module(alg, args.module)
    value, chain = lapp(omega, m, cfg.cutoff)
    if cfg.json:
        out.append({"lapp": value.to_json(), "chain": chain.to_json()})
    else:
        print(value.render())
        for k, s in enumerate(chain.steps, start=1):
            print(f"  step {k}: T{k - 1} dims {s.source_dims}, multiplicities {s.multiplicities}, mono {s.mono}")
    return EXIT_OK


def cmd_fadim(args, cfg, out):
    alg = resolve_algebra(args.algebra)
    value = fadim(resolve_module(alg, args.omega), cfg.cutoff)
    if cfg.json:
        out.append({"fadim": value.to_json()})
    else:
        print(value.render())
    return EXIT_OK


def cmd_domdim(args, cfg, out):
    alg = resolve_algebra(args.algebra)
    m = resolve_module(alg, args.module)
    if args.method == "both":
        a, b = domdim(m, cfg.cutoff, "lapp"), domdim(m, cfg.cutoff, "coresolution")
        agree = a == b
        if cfg.json:
            out.append({"lapp": a.to_json(), "coresolution": b.to_json(), "agree": agree})
        else:
            print(f"{a.render()} / {b.render()} ({'agree' if agree else 'DISAGREE'})")
        return EXIT_OK if agree else EXIT_FAIL
    v = domdim(m, cfg.cutoff, args.method)
    if cfg.json:
        out.append({"domdim": v.to_json(), "method": args.method})
    else:
        print(v.render())
    return EXIT_OK


def cmd_tau(args, cfg, out):
    alg = resolve_algebra(args.algebra)
    m = resolve_module(alg, args.module)
    t = tau_inverse(m) if args.inverse else tau(m)
    parts = [list(x.dims) for x in decompose(t).parts]
    if cfg.json:
        out.append({"direction": "inverse" if args.inverse else "forward", "dims": list(t.dims),
                    "summands": parts})
    else:
        print(f"{'tau^-1' if args.inverse else 'tau'}: dims {t.dims}; summands {parts or 'none'}")
    return EXIT_OK


def cmd_decompose(args, cfg, out):
    alg = resolve_algebra(args.algebra)
    m = resolve_module(alg, args.module)
    parts = decompose(m, cfg.seed).parts
    rows = [{"dims": list(x.dims), "projective": is_projective(x), "injective": is_injective(x)}
            for x in parts]
    if cfg.json:
        out.append({"summands": rows})
    else:
        for r in rows:
            kind = "proj-inj" if r["projective"] and r["injective"] else (
                "projective" if r["projective"] else "injective" if r["injective"] else "")
            print(f"{tuple(r['dims'])} {kind}".rstrip())
    return EXIT_OK


def _verdict_cmd(fn, good):
    def run(args, cfg, out):
        alg = resolve_algebra(args.algebra)
        v = fn(resolve_module(alg, args.omega), cfg.cutoff)
        if cfg.json:
            out.append(v.to_json())
        else:
            print(v.render())
        return EXIT_OK if v.status in good else EXIT_FAIL
    return run


def cmd_verify(args, cfg, out):
    pair = get_pair(args.pair)
    checks = CHECK_KINDS if args.check == "all" else [args.check]
    reports = []
    for check in checks:
        reports.extend(run_suite(pair, check, cfg.cutoff, cfg.seed, cfg.samples))
    failed = [r for r in reports if r.status == "fail"]
    if cfg.json:
        out.extend(reports)
    else:
        for check in checks:
            mine = [r for r in reports if r.check == check]
            counts = {s: sum(r.status == s for r in mine) for s in ("pass", "fail", "skipped")}
            print(f"{pair.name} {check}: {counts['pass']} pass, {counts['fail']} fail, "
                  f"{counts['skipped']} skipped")
        if pair.flags():
            print("hypothesis flags: " + "; ".join(pair.flags()))
    return EXIT_FAIL if failed else EXIT_OK


def cmd_corpus_list(args, cfg, out):
    algs = [{"name": n, "description": describe(n)} for n in algebra_names()]
    pairs = [{"name": p.name, "lambda": p.lam.name, "gamma": p.gamma.name,
              "functor": p.functor.label(), "negative_control": p.negative_control}
             for p in curated_pairs()]
    if cfg.json:
        out.append({"algebras": algs, "pairs": pairs})
    else:
        print("algebras:")
        for a in algs:
            print(f"  {a['name']:<8} {a['description']}")
        print("pairs:")
        for p in pairs:
            tag = " (negative control)" if p["negative_control"] else ""
            print(f"  {p['name']:<12} {p['lambda']} -> {p['gamma']} via {p['functor']}{tag}")
    return EXIT_OK


def _cutoff(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("cutoff must be at least 1")
    return v


def _seed(text: str) -> int:
    v = int(text)
    if not (-2**63 <= v < 2**64):
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_seed, default=argparse.SUPPRESS)
    common.add_argument("--cutoff", type=_cutoff, default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="approxdim", parents=[common],
                                     description="Approximation dimensions over bound quiver algebras.")
    parser.add_argument("--version", action="version", version=f"approxdim {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    p = add("algebra-check", cmd_algebra_check, "basis, blocks and standing hypotheses")
    p.add_argument("--algebra", required=True)
    p = add("invariants", cmd_invariants, "homological invariants of a module or all indecomposables")
    p.add_argument("--algebra", required=True)
    p.add_argument("--module")
    p = add("lapp", cmd_lapp, "omega-left approximation dimension")
    p.add_argument("--algebra", required=True)
    p.add_argument("--omega", required=True)
    p.add_argument("--module", required=True)
    p = add("fadim", cmd_fadim, "faithful dimension of omega")
    p.add_argument("--algebra", required=True)
    p.add_argument("--omega", required=True)
    p = add("domdim", cmd_domdim, "dominant dimension")
    p.add_argument("--algebra", required=True)
    p.add_argument("--module", required=True)
    p.add_argument("--method", choices=["lapp", "coresolution", "both"], default="coresolution")
    p = add("tau", cmd_tau, "Auslander-Reiten translate")
    p.add_argument("--algebra", required=True)
    p.add_argument("--module", required=True)
    p.add_argument("--inverse", action="store_true")
    p = add("decompose", cmd_decompose, "indecomposable summands")
    p.add_argument("--algebra", required=True)
    p.add_argument("--module", required=True)
    p = add("check-tilting", _verdict_cmd(is_tilting, {"yes"}), "tilting certification")
    p.add_argument("--algebra", required=True)
    p.add_argument("--omega", required=True)
    p = add("check-wakamatsu", _verdict_cmd(is_wakamatsu, {"certified", "up_to_cutoff"}),
            "Wakamatsu tilting certification")
    p.add_argument("--algebra", required=True)
    p.add_argument("--omega", required=True)
    p = add("verify", cmd_verify, "transfer checks on a curated pair")
    p.add_argument("--pair", required=True)
    p.add_argument("--check", required=True, choices=list(CHECK_KINDS) + ["all"])
    p.add_argument("--samples", type=int, default=50)
    add("corpus-list", cmd_corpus_list, "built-in algebras and pairs")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    ns = vars(args)
    cfg = RunConfig(seed=ns.get("seed", 0), cutoff=ns.get("cutoff", 12),
                    samples=ns.get("samples", 50), json=ns.get("json", False))
    out: list = []
    try:
        code = args.func(args, cfg, out)
    except (InputError, ParseError, RelationIllFormed, NotAdmissibleWithinBound, DegenerateOmega,
            KeyError, FileNotFoundError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"approxdim: input error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    except (ArithmeticError, RuntimeError, ValueError) as exc:
        print(f"approxdim: computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    if cfg.json:
        doc = {"tool": "approxdim", "version": __version__, "seed": cfg.seed,
               "command": args.verb, "cutoff": cfg.cutoff}
        if args.verb == "verify":
            doc.update(emit_report(out))
        else:
            doc["results"] = [r.to_json() if hasattr(r, "to_json") else r for r in out]
        print(_dump(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
