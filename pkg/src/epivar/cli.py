"""Command-line interface.

Exit codes: 0 success / positive answer, 1 negative answer or failed check,
2 bad input, 3 resource limit (search budget, generation ceiling).
JSON goes to stdout, one-line human summaries to stderr.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from . import antichain as ac
from . import epigroups as eg
from . import lattice as lt
from . import varieties as vr
from . import words as wd

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class InputError(Exception):
    pass


@dataclass
class RunManifest:
    subcommand: str
    parameters: dict
    input_digests: dict = field(default_factory=dict)
    tool_version: str = __version__
    output_paths: list = field(default_factory=list)


def _digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _load_json(path, manifest):
    try:
        text = Path(path).read_text()
        manifest.input_digests[str(path)] = _digest(path)
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _word(text):
    try:
        return wd.parse_word(text)
    except wd.WordError as exc:
        raise InputError(str(exc)) from exc


def _subst_json(s):
    return {wd.format_word((c,)): wd.format_word(img) for c, img in sorted(s.items())}


def _note(msg):
    print(msg, file=sys.stderr)


# ------------------------------------------------------------------ words

def cmd_applicable(args, manifest):
    u, v = _word(args.pattern), _word(args.target)
    try:
        wit = wd.is_applicable(u, v, budget=args.budget)
    except wd.SearchBudgetExceeded as exc:
        _note(str(exc))
        return EXIT_LIMIT, {"applicable": None, "error": "budget-exceeded", "budget": exc.budget}
    if wit is None:
        _note(f"{args.pattern} is not applicable to {args.target}")
        return EXIT_NO, {"applicable": False}
    _note(f"{args.pattern} is applicable to {args.target}")
    return EXIT_OK, {"applicable": True, "substitution": _subst_json(wit.substitution),
                     "factor": [wit.start, wit.end],
                     "image": wd.format_word(v[wit.start:wit.end])}


def cmd_squarefree(args, manifest):
    if args.action == "check":
        w = _word(args.word)
        sq = wd.contains_square(w)
        if sq is None:
            return EXIT_OK, {"word": args.word, "square_free": True}
        return EXIT_NO, {"word": args.word, "square_free": False,
                         "square": {"position": sq[0], "root": wd.format_word(sq[1])}}
    found = [wd.format_word(w) for w in wd.enumerate_square_free(args.alphabet, args.max_len)]
    _note(f"{len(found)} square-free words")
    return EXIT_OK, {"alphabet": args.alphabet, "max_length": args.max_len,
                     "count": len(found), "words": found}


# ----------------------------------------------------------------- family

def cmd_family(args, manifest):
    if args.action == "generate":
        try:
            fam = ac.generate_family(args.count, args.alphabet, args.min_length, args.max_length)
        except ac.GenerationExhausted as exc:
            _note(str(exc))
            return EXIT_LIMIT, {"error": "generation-exhausted", "detail": str(exc)}
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        cert = ac.verify_antichain(fam)
        if args.family_out:
            Path(args.family_out).write_text(json.dumps(ac.family_to_json(fam), indent=2) + "\n")
            manifest.output_paths.append(args.family_out)
        _note(f"{len(fam)} words, {cert.checked_pairs} ordered pairs non-applicable")
        return EXIT_OK, {"family": ac.family_to_json(fam), "certificate": ac.certificate_to_json(cert)}

    data = _load_json(args.file, manifest)
    try:
        fam = ac.family_from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed family file: {exc}") from exc
    res = ac.verify_antichain(fam)
    if res.ok:
        _note("certificate: family is a square-free anti-chain")
        return EXIT_OK, {"certificate": ac.certificate_to_json(res)}
    _note(f"counterexample ({res.kind})")
    return EXIT_NO, {"counterexample": ac.counterexample_to_json(res)}


# ---------------------------------------------------------------- variety

def _pool_and_family(args, manifest):
    pool = vr.parse_pool(args.pool) if args.pool else None
    fam = None
    if args.family:
        try:
            fam = ac.family_from_json(_load_json(args.family, manifest))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed family file: {exc}") from exc
    return pool, fam


def _spec(text, pool, manifest):
    if text.endswith(".json"):
        spec = vr.spec_from_json(_load_json(text, manifest))
        return spec if pool is None else vr.VarietySpec(spec.kind, spec.n, spec.xi, pool)
    if pool is None:
        raise InputError(f"{text}: --pool is required with KIND:n:xi specs")
    return vr.parse_spec(text, pool)


def _system(spec, fam):
    if fam is None:
        fam = ac.family_for_indices(spec.indices)
    return vr.build_variety(spec, fam)


def cmd_variety(args, manifest):
    if args.action == "free-object":
        try:
            sys_ = vr.system_from_words(args.gens)
        except (ValueError, wd.WordError) as exc:
            raise InputError(str(exc)) from exc
        nonzero = vr.free_object_enumerate(sys_, args.alphabet, args.max_len)
        _note(f"{len(nonzero)} non-zero words")
        return EXIT_OK, {"system": vr.system_to_json(sys_), "alphabet": args.alphabet,
                         "max_length": args.max_len, "count": len(nonzero),
                         "nonzero": [wd.format_word(w) for w in nonzero]}

    try:
        pool, fam = _pool_and_family(args, manifest)
        specs = [_spec(t, pool, manifest) for t in args.specs]
        systems = [_system(s, fam) for s in specs]
    except vr.MissingFamilyMember as exc:
        _note(str(exc))
        return EXIT_INPUT, {"error": "missing-family-member", "detail": exc.args[0]}
    except (ValueError, KeyError) as exc:
        raise InputError(str(exc)) from exc

    if args.action == "build":
        return EXIT_OK, {"systems": [dict(vr.system_to_json(s), spec=vr.spec_to_json(sp))
                                     for s, sp in zip(systems, specs)]}
    if len(systems) != 2:
        raise InputError("compare takes exactly two varieties")
    res = vr.compare(*systems)
    _note(f"{systems[0].label} vs {systems[1].label}: {res.relation}")
    out = vr.comparison_to_json(res)
    out["a"], out["b"] = vr.system_to_json(systems[0]), vr.system_to_json(systems[1])
    return EXIT_OK, out


# ---------------------------------------------------------------- lattice

_NAMED = {"n5": lt.pentagon, "m3": lt.diamond, "chain2": lambda: lt.chain(2),
          "chain3": lambda: lt.chain(3)}


def _lattice(args, manifest):
    if getattr(args, "eq", None):
        try:
            return lt.equivalence_lattice(args.eq)[0]
        except lt.SizeGuardError as exc:
            raise InputError(str(exc)) from exc
    if getattr(args, "named", None):
        return _NAMED[args.named]()
    if not args.file:
        raise InputError("give a lattice JSON file, --eq s or --named NAME")
    return lt.lattice_from_json(_load_json(args.file, manifest))


def cmd_lattice(args, manifest):
    if args.action == "check-lemmas":
        if args.corpus:
            corpus = lt.all_lattices(6) + [lt.equivalence_lattice(3)[0], lt.equivalence_lattice(4)[0],
                                           lt.pentagon(), lt.diamond()]
        else:
            corpus = [_lattice(args, manifest)]
        chain_ok = anti_ok = True
        for L in corpus:
            chain_ok &= lt.chain_separation_check(L)[0]
            anti_ok &= lt.antichain_separation_check(L)[0]
        vv = {}
        for s in range(1, (args.eq or 5) + 1):
            vv[str(s)] = lt.verify_vv_proposition(s)[0]
        ok = chain_ok and anti_ok and all(vv.values())
        _note("all lemma checks pass" if ok else "lemma check FAILED")
        return (EXIT_OK if ok else EXIT_NO), {"lattices_checked": len(corpus),
                                               "chain_separation": chain_ok,
                                               "antichain_separation": anti_ok,
                                               "vv_proposition": vv}

    if args.action == "eqlattice":
        try:
            L, parts = lt.equivalence_lattice(args.size)
        except lt.SizeGuardError as exc:
            raise InputError(str(exc)) from exc
        return EXIT_OK, {"size": L.size, "partitions": [str(p) for p in parts],
                         "leq": [list(c) for c in L.covers()],
                         "nonsingleton_classes": [lt.nonsingleton_class_count(p) for p in parts],
                         "upper_modular": lt.upper_modular_elements(L)}

    L = _lattice(args, manifest)
    if args.action == "dot":
        return EXIT_OK, lt.hasse_dot(L)
    reports = [lt.modularity_report(L, x) for x in range(L.size)]
    lower = [L.labels[r.element] for r in reports if r.is_lower_modular]
    _note("lower-modular: " + ", ".join(lower))
    return EXIT_OK, {
        "size": L.size,
        "labels": L.labels,
        "lower_modular": lower,
        "upper_modular": [L.labels[r.element] for r in reports if r.is_upper_modular],
        "elements": [{"element": L.labels[r.element],
                      "lower_modular": r.is_lower_modular,
                      "upper_modular": r.is_upper_modular,
                      "lower_counterexample": _labelled(L, r.lower_counterexample, ("y", "z")),
                      "upper_counterexample": _labelled(L, r.upper_counterexample, ("y", "z"))}
                     for r in reports],
        "mutation_witness": _labelled(L, lt.separation_mutation_witness(L), ("c1", "c2", "e")),
    }


def _labelled(L, tup, names):
    return None if tup is None else {k: L.labels[v] for k, v in zip(names, tup)}


# --------------------------------------------------------------- epigroup

def cmd_epigroup(args, manifest):
    if args.action == "scan":
        total, failures, counts = 0, [], {}
        for m in range(1, args.max_order + 1):
            counts[str(m)] = 0
            for S in eg.enumerate_semigroups(m):
                total += 1
                counts[str(m)] += 1
                st = eg.analyze(S)
                problems = eg.structure_violations(st)
                if not eg.in_E_n(S, st.index):
                    problems.append("not in E_index")
                if st.index >= 2 and eg.check_E_n(S, st.index - 1)[3].holds:
                    problems.append("power identity holds below the index")
                if problems:
                    failures.append({"table": [list(r) for r in S.table], "problems": problems})
        _note(f"{total} semigroups scanned, {len(failures)} failures")
        return (EXIT_OK if not failures else EXIT_NO), {"counts": counts, "total": total,
                                                         "failures": failures}
    data = _load_json(args.file, manifest)
    try:
        S = eg.semigroup_from_json(data)
    except eg.NonAssociativeError as exc:
        _note(str(exc))
        return EXIT_INPUT, {"error": "non-associative", "triple": list(exc.triple)}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed semigroup: {exc}") from exc
    st = eg.analyze(S)
    _note(f"index {st.index}")
    return EXIT_OK, eg.analysis_to_json(st, args.n)


# ------------------------------------------------------------------ parser

def build_parser():
    p = argparse.ArgumentParser(prog="epivar", description=__doc__.splitlines()[0])
    p.add_argument("--json-out", help="also write the JSON result (and a run manifest) here")
    p.add_argument("--seed-free", action="store_true",
                   help="accepted for scripts; every command is deterministic")
    p.add_argument("--budget", type=int, default=None, help="applicability search node budget")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("applicable", help="is PATTERN applicable to TARGET?")
    a.add_argument("pattern")
    a.add_argument("target")
    a.set_defaults(func=cmd_applicable)

    s = sub.add_parser("squarefree", help="square detection and enumeration")
    ss = s.add_subparsers(dest="action", required=True)
    c = ss.add_parser("check")
    c.add_argument("word")
    e = ss.add_parser("enum")
    e.add_argument("--alphabet", type=int, default=3)
    e.add_argument("--max-len", type=int, required=True)
    s.set_defaults(func=cmd_squarefree)

    f = sub.add_parser("family", help="anti-chain word families")
    fs = f.add_subparsers(dest="action", required=True)
    g = fs.add_parser("generate")
    g.add_argument("count", type=int)
    g.add_argument("--alphabet", type=int, default=3)
    g.add_argument("--min-length", type=int, default=14)
    g.add_argument("--max-length", type=int, default=16)
    g.add_argument("--family-out", help="write the bare family array here")
    v = fs.add_parser("verify")
    v.add_argument("file")
    f.set_defaults(func=cmd_family)

    vp = sub.add_parser("variety", help="0-reduced varieties C^n_xi and A^n_xi")
    vs = vp.add_subparsers(dest="action", required=True)
    for name in ("build", "compare"):
        q = vs.add_parser(name)
        q.add_argument("specs", nargs="+", help="KIND:n:xi (e.g. C:1:0) or a spec JSON file")
        q.add_argument("--pool", help="a..b/d: the rationals k/d in [a, b]")
        q.add_argument("--family", help="family JSON; generated on demand when omitted")
    fo = vs.add_parser("free-object")
    fo.add_argument("--gens", nargs="+", required=True)
    fo.add_argument("--alphabet", type=int, required=True)
    fo.add_argument("--max-len", type=int, required=True)
    vp.set_defaults(func=cmd_variety)

    lp = sub.add_parser("lattice", help="finite lattices and modular elements")
    ls = lp.add_subparsers(dest="action", required=True)
    for name in ("analyze", "dot", "check-lemmas"):
        q = ls.add_parser(name)
        q.add_argument("file", nargs="?")
        q.add_argument("--eq", type=int, help="use the equivalence lattice Eq(s)")
        q.add_argument("--named", choices=sorted(_NAMED))
        if name == "check-lemmas":
            q.add_argument("--corpus", action="store_true",
                           help="all lattices up to 6 elements plus Eq(3), Eq(4), N5, M3")
        if name == "dot":
            q.add_argument("-o", "--output")
    el = ls.add_parser("eqlattice")
    el.add_argument("size", type=int)
    lp.set_defaults(func=cmd_lattice)

    ep = sub.add_parser("epigroup", help="finite semigroups as epigroups")
    es = ep.add_subparsers(dest="action", required=True)
    an = es.add_parser("analyze")
    an.add_argument("file")
    an.add_argument("--n", type=int, default=None, help="E_n parameter (default: the index)")
    sc = es.add_parser("scan")
    sc.add_argument("--max-order", type=int, default=3, choices=(1, 2, 3))
    ep.set_defaults(func=cmd_epigroup)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    params = {k: v for k, v in vars(args).items() if k not in ("func", "json_out")}
    manifest = RunManifest(args.command, params)
    try:
        code, result = args.func(args, manifest)
    except (InputError, lt.NotALattice) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if isinstance(result, str):
        text = result
        out_path = getattr(args, "output", None)
        if out_path:
            Path(out_path).write_text(text)
            manifest.output_paths.append(out_path)
    else:
        text = json.dumps(result, indent=2, sort_keys=True) + "\n"
    sys.stdout.write(text)
    if args.json_out:
        Path(args.json_out).write_text(text)
        manifest.output_paths.append(args.json_out)
        Path(args.json_out + ".manifest.json").write_text(
            json.dumps(asdict(manifest), indent=2, sort_keys=True) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
