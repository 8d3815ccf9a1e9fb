"""Command-line front end.

Commands: parse, alex, criteria (alias analyze), twobridge, rs, reps,
recurrence.  Exit codes: 0 success, 1 domain error (valid input outside
an operation's domain), 2 parse/usage error.  With --json, output is a
stable Report object; identical inputs give byte-identical JSON.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Optional

from . import __version__
from .alexander import (
    DEFAULT_PRIMES,
    alexander_polynomial,
)
from .criteria import analyze
from .laurent import INFINITE, LaurentPoly
from .recurrence import AuxPolynomial, has_integer_biinfinite, witness_sequence
from .repshift import FiniteGroup, build_sft, census, enumerate_periodic
from .rscover import abelianized_recurrence, reidemeister_schreier
from .twobridge import TwoBridgeParams, family_presentation, presentation
from .words import ParseError, Presentation, parse_presentation, validate_weighting


class DomainError(Exception):
    """Wraps a domain failure with the check that failed."""


def _digest(data: str) -> str:
    return hashlib.sha256(data.encode("utf-8")).hexdigest()


def _emit(args, command: str, source: str, result: dict, human: str) -> None:
    if args.json:
        report = {
            "command": command,
            "input_digest": _digest(source),
            "version": __version__,
            "result": result,
        }
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))
    else:
        print(human)


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise DomainError(f"cannot read {path}: {e}")


def _load_presentation(path: str) -> tuple[Presentation, str]:
    text = _read_file(path)
    return parse_presentation(text), text


def _resolve_chi(p: Presentation, chi_arg: Optional[str]) -> dict[str, int]:
    if chi_arg is None:
        try:
            return p.canonical_weighting()
        except ValueError as e:
            raise DomainError(f"weighting: {e} (supply one with --chi)")
    chi = {}
    for part in chi_arg.split(","):
        if "=" not in part:
            raise DomainError(f"bad --chi entry {part!r}, expected gen=int")
        name, _, val = part.partition("=")
        try:
            chi[name.strip()] = int(val)
        except ValueError:
            raise DomainError(f"bad --chi value {val!r}")
    try:
        validate_weighting(p, chi)
    except ValueError as e:
        raise DomainError(f"weighting: {e}")
    return chi


def _parse_primes(arg: Optional[str]):
    if arg is None:
        return DEFAULT_PRIMES
    try:
        return tuple(int(x) for x in arg.split(","))
    except ValueError:
        raise DomainError(f"bad --primes list {arg!r}")


def _span_json(d):
    return "infinite" if d is INFINITE else d


def _presentation_json(p: Presentation) -> dict:
    out = p.to_json_dict()
    out["text"] = p.to_text()
    free_rank, torsion = p.abelianization_invariants()
    out["abelianization"] = {"free_rank": free_rank, "torsion": list(torsion)}
    return out


# -- subcommand handlers ------------------------------------------------


def _cmd_parse(args) -> None:
    p, text = _load_presentation(args.file)
    result = _presentation_json(p)
    try:
        result["weighting"] = p.canonical_weighting()
    except ValueError:
        result["weighting"] = None
    human = [p.to_text()]
    human.append(f"abelianization: free rank {result['abelianization']['free_rank']}, "
                 f"torsion {result['abelianization']['torsion']}")
    if result["weighting"] is not None:
        human.append("weighting: " + ", ".join(
            f"{g}={v}" for g, v in result["weighting"].items()))
    _emit(args, "parse", text, result, "\n".join(human))


def _cmd_alex(args) -> None:
    p, text = _load_presentation(args.file)
    chi = _resolve_chi(p, args.chi)
    primes = _parse_primes(args.primes)
    res = alexander_polynomial(p, chi, primes=primes)
    table = {
        str(q): {"poly": str(m), "d": _span_json(d)}
        for q, (m, d) in res.mod_p_table.items()
    }
    result = {
        "delta": str(res.delta),
        "deleted_column": res.deleted_column,
        "mod_p": table,
    }
    human = [f"delta: {res.delta}", f"deleted column: {res.deleted_column}"]
    for q in primes:
        m, d = res.mod_p_table[q]
        human.append(f"mod {q}: {m}   d({q}) = {_span_json(d)}")
    _emit(args, "alex", text, result, "\n".join(human))


def _cmd_criteria(args) -> None:
    p, text = _load_presentation(args.file)
    chi = _resolve_chi(p, args.chi)
    primes = _parse_primes(args.primes)
    rep = analyze(p, chi, primes=primes)
    result = {
        "delta": str(rep.delta),
        "beta1_Q": _span_json(rep.beta1_Q),
        "primes": [
            {
                "p": rec.p,
                "d": _span_json(rec.d),
                "r": rec.r,
                "n": rec.n,
                "classification": {
                    "kind": rec.classification.kind,
                    "count": rec.classification.count,
                },
            }
            for rec in rep.primes
        ],
        "index2": rep.index2,
        "surjects_to_Z": {
            "answer": rep.surjects.answer,
            "witness": None if rep.surjects.witness is None else str(rep.surjects.witness),
            "free_rank": rep.surjects.free_rank,
        },
        "large_flag": rep.large_flag,
        "kernel_fg": rep.kernel_fg,
        "kervaire": {
            "h1_is_Z": rep.kervaire.h1_is_Z,
            "deficiency_one": rep.kervaire.deficiency_one,
            "weight_one_witness": rep.kervaire.weight_one_witness,
            "h2_zero_inferred": rep.kervaire.h2_zero_inferred,
        },
    }
    human = [f"delta: {rep.delta}", f"beta1_Q: {_span_json(rep.beta1_Q)}"]
    for rec in rep.primes:
        cls = rec.classification
        desc = cls.kind if cls.count is None else f"{cls.kind}({cls.count})"
        human.append(f"p={rec.p}: d={_span_json(rec.d)} r={rec.r} n={rec.n} [{desc}]")
    human.append(f"index 2 subgroups: {'yes' if rep.index2 else 'no'}")
    sv = rep.surjects
    if sv.free_rank:
        human.append("surjects onto Z: yes (free rank witness)")
    elif sv.answer:
        human.append(f"surjects onto Z: yes (witness {sv.witness})")
    else:
        human.append("surjects onto Z: no")
    human.append(f"large flag: {rep.large_flag}")
    human.append(f"kernel finitely generated: {rep.kernel_fg}")
    kv = rep.kervaire
    human.append(
        "knot-group checks: "
        f"H1=Z {kv.h1_is_Z}, deficiency 1 {kv.deficiency_one}, "
        f"weight witness {kv.weight_one_witness or 'unknown'}, "
        f"H2=0 inferred {kv.h2_zero_inferred}"
    )
    _emit(args, "criteria", text, result, "\n".join(human))


def _cmd_twobridge(args) -> None:
    if args.family is not None:
        p = family_presentation(args.family)
        source = f"family:{args.family}"
    else:
        if args.p is None or args.q is None:
            raise DomainError("need P and Q, or --family N")
        p = presentation(TwoBridgeParams(args.p, args.q))
        source = f"{args.p}/{args.q}"
    _emit(args, "twobridge", source, _presentation_json(p), p.to_text())


def _cmd_rs(args) -> None:
    p, text = _load_presentation(args.file)
    chi = _resolve_chi(p, args.chi)
    sp = reidemeister_schreier(p, chi)
    rows = abelianized_recurrence(sp)
    result = {
        "symbols": list(sp.symbols),
        "templates": sp.template_texts(),
        "width": sp.width,
        "rows": [
            {
                "symbol": r.symbol,
                "coefficients": {str(o): c for o, c in r.coefficients},
                "polynomial": str(r.polynomial()),
            }
            for r in rows
        ],
    }
    human = [f"symbols: {', '.join(sp.symbols)}", f"width: {sp.width}"]
    for tpl_text in sp.template_texts():
        human.append(f"template: {tpl_text}")
    for r in rows:
        human.append(f"row[{r.symbol}]: {r.polynomial()}")
    _emit(args, "rs", text, result, "\n".join(human))


def _group_from_args(args) -> FiniteGroup:
    if args.table is not None:
        return FiniteGroup.from_table(_read_file(args.table), name=args.table)
    name = args.group
    if name is None:
        raise DomainError("need --group NAME or --table FILE")
    if name.upper().startswith("S") and name[1:].isdigit():
        return FiniteGroup.symmetric(int(name[1:]))
    if name.upper().startswith("Z") and name[1:].isdigit():
        return FiniteGroup.cyclic(int(name[1:]))
    raise DomainError(f"unknown group {name!r} (use S2..S5, Z1..Z64, or --table)")


def _cmd_reps(args) -> None:
    p, text = _load_presentation(args.file)
    chi = _resolve_chi(p, args.chi)
    F = _group_from_args(args)
    sp = reidemeister_schreier(p, chi)
    graph = build_sft(sp, F)
    c = census(graph, tol=args.tol)
    result = {
        "group": F.name,
        "window": graph.window,
        "state_count": c.state_count,
        "essential_count": c.essential_count,
        "census": {
            "classification": c.classification,
            "count": c.count,
            "entropy": c.entropy,
        },
    }
    human = [
        f"group: {F.name}",
        f"window: {graph.window}  states: {c.state_count}  essential: {c.essential_count}",
        f"census: {c.classification}"
        + (f" count={c.count}" if c.count is not None else "")
        + (f" entropy={c.entropy:.6f}" if c.classification == "PositiveEntropy" else ""),
    ]
    if args.max_period is not None:
        labelings = enumerate_periodic(graph, args.max_period)
        result["periodic"] = [list(t) for t in labelings]
        human.append(f"periodic labelings (period {args.max_period}): {len(labelings)}")
        for t in labelings[:20]:
            human.append("  " + " ".join(t))
        if len(labelings) > 20:
            human.append(f"  ... {len(labelings) - 20} more")
    _emit(args, "reps", text, result, "\n".join(human))


def _cmd_recurrence(args) -> None:
    try:
        desc = [int(x) for x in args.coeffs.split(",")]
    except ValueError:
        raise DomainError(f"bad coefficient list {args.coeffs!r}")
    f = AuxPolynomial.from_desc(desc)
    answer, witness = has_integer_biinfinite(f)
    result = {
        "polynomial": str(f),
        "answer": answer,
        "witness": None if witness is None else str(witness),
    }
    human = [f"polynomial: {f}"]
    if answer:
        human.append(f"integer biinfinite solution: yes (witness factor {witness})")
    else:
        human.append("integer biinfinite solution: no")
    if args.witness is not None:
        lo, hi = args.witness
        w = witness_sequence(f, lo, hi)
        result["window"] = {"base": w.base, "values": [int(v) for v in w.values]}
        human.append(f"window [{lo}, {hi}]: {list(w.values)}")
    _emit(args, "recurrence", args.coeffs, result, "\n".join(human))


# -- argument parsing ---------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="cycover",
        description="Finite-index structure of the kernel of a weighting onto Z.",
    )
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit a JSON report")

    def with_chi(sp):
        sp.add_argument("--chi", metavar="g=1,h=0", help="override the weighting")

    p_parse = sub.add_parser("parse", help="parse and echo a presentation")
    p_parse.add_argument("file")
    common(p_parse)

    p_alex = sub.add_parser("alex", help="Alexander polynomial and mod-p table")
    p_alex.add_argument("file")
    with_chi(p_alex)
    p_alex.add_argument("--primes", metavar="2,3,5,7")
    common(p_alex)

    for name in ("criteria", "analyze"):
        p_cr = sub.add_parser(name, help="full cover report")
        p_cr.add_argument("file")
        with_chi(p_cr)
        p_cr.add_argument("--primes", metavar="2,3,5,7")
        common(p_cr)

    p_tb = sub.add_parser("twobridge", help="two-bridge presentations")
    p_tb.add_argument("p", nargs="?", type=int, default=None)
    p_tb.add_argument("q", nargs="?", type=int, default=None)
    p_tb.add_argument("--family", type=int, metavar="N")
    common(p_tb)

    p_rs = sub.add_parser("rs", help="kernel shift presentation")
    p_rs.add_argument("file")
    with_chi(p_rs)
    common(p_rs)

    p_reps = sub.add_parser("reps", help="representation shift census")
    p_reps.add_argument("file")
    with_chi(p_reps)
    p_reps.add_argument("--group", metavar="S3|Z2|...")
    p_reps.add_argument("--table", metavar="FILE")
    p_reps.add_argument(
        "--max-period", type=int, nargs="?", const=12, default=None, metavar="N"
    )
    p_reps.add_argument("--tol", type=float, default=1e-6)
    common(p_reps)

    p_rec = sub.add_parser("recurrence", help="integer biinfinite solutions")
    p_rec.add_argument("coeffs", metavar="a_d,...,a_0")
    p_rec.add_argument("--witness", nargs=2, type=int, metavar=("LO", "HI"))
    common(p_rec)

    return top


_HANDLERS = {
    "parse": _cmd_parse,
    "alex": _cmd_alex,
    "criteria": _cmd_criteria,
    "analyze": _cmd_criteria,
    "twobridge": _cmd_twobridge,
    "rs": _cmd_rs,
    "reps": _cmd_reps,
    "recurrence": _cmd_recurrence,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _HANDLERS[args.command](args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
