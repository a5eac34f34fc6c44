"""Command-line entry point.

Exit codes: 0 success, 1 input or validation failure, 2 an Unknown verdict
under ``--strict``, 3 I/O error.  Reports are JSON documents (``-o``) plus a
one human-readable verdict line per input on stderr.
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from . import io
from .abgroup import MAX_ORDER
from .cohom import (character_from_real_cocycle, class_invariants, delta,
                    extend_cocycle_data, section_cocycle, solve_coboundary)
from .errors import GradloopError, SimplicityUnknown
from .exactnum.scalars import format_scalar
from .galg.algebra import MAX_DIM, twist
from .galg.centroid import centroid, centroid_as_twisted_group_algebra
from .galg.simplicity import DEFAULT_SEED, graded_simplicity
from .loop import canonical_quotient, classify, equivalence_check, loop_algebra, twisted_loop

EXIT_OK, EXIT_INPUT, EXIT_UNKNOWN, EXIT_IO = 0, 1, 2, 3


def _vec(v):
    return [format_scalar(x) for x in v]


def _space(W):
    basis = W.basis() if hasattr(W, "basis") else W
    return [_vec(v) for v in basis]


def _class_doc(tau):
    cls = class_invariants(tau)
    return [format_scalar(tau.coeffs.embed(x)) for x in cls.invariants]


# -- per-document operations (pure; usable from worker processes) --------------------------

def op_validate(doc, opts):
    kind, obj = io.load_any(doc, opts["max_dim"], opts["max_order"])
    out = {"kind": kind, "valid": True}
    if kind == "algebra":
        out["dim"] = obj.dim
    return "Valid", out


def op_centroid(doc, opts):
    A = io.load_algebra(doc, opts["max_dim"], opts["max_order"])
    C = centroid(A)
    out = {"centroid_dim": C.dim,
           "component_dims": [{"degree": list(g), "dim": len(m)} for g, m in C.components.items()],
           "identity_dim": C.identity_dim,
           "graded_central": C.identity_dim == 1,
           "support_is_subgroup": C.support_is_subgroup()}
    if C.identity_dim == 1:
        try:
            tga = centroid_as_twisted_group_algebra(A, C)
            out["H"] = tga.H.to_doc()
            out["tau_prime_class"] = _class_doc(tga.tau_prime)
        except GradloopError as exc:
            out["graded_field"] = f"{type(exc).__name__}: {exc}"
    return "Computed", out


def op_simplicity(doc, opts):
    A = io.load_algebra(doc, opts["max_dim"], opts["max_order"])
    v = graded_simplicity(A, seed=opts["seed"])
    out = {"verdict": v.kind}
    if v.kind == "Simple":
        out["certificate"] = v.certificate
    elif v.kind == "NotSimple":
        out["reason"] = v.reason
        out["witness"] = _space(v.witness)
    else:
        out["diagnostics"] = v.diagnostics
    return v.kind, out


def op_classify(doc, opts):
    B = io.load_algebra(doc, opts["max_dim"], opts["max_order"])
    try:
        t = classify(B, seed=opts["seed"])
    except SimplicityUnknown as exc:
        return "Unknown", {"reason": str(exc)}
    return "Classified", t.to_doc()


OPS = {"validate": op_validate, "centroid": op_centroid,
       "simplicity": op_simplicity, "classify": op_classify}


def _run_one(args):
    cmd, doc, opts = args
    try:
        verdict, result = OPS[cmd](doc, opts)
    except GradloopError as exc:
        return "Error", {"error": type(exc).__name__, "message": str(exc),
                         "location": _jsonable(exc.location)}
    return verdict, result


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    if isinstance(x, list):
        return [_jsonable(y) for y in x]
    return str(x)


# -- commands taking several inputs or flags ----------------------------------------------

def _single(docs):
    if len(docs) != 1:
        raise GradloopError("this command takes exactly one input")
    return docs[0]


def cmd_twist(docs, opts):
    A = io.load_algebra(_single(docs), opts["max_dim"], opts["max_order"])
    tau = io.load_cocycle(_need(opts, "cocycle"), opts["max_order"])
    return "Computed", twist(A, tau).to_doc()


def _need(opts, key):
    if opts.get(key) is None:
        raise GradloopError(f"--{key} is required for this command")
    return opts[key]


def _group_and_subgroup(opts):
    G = io.parse_group_flag(_need(opts, "group"), opts["max_order"])
    H = io.parse_subgroup_flag(G, opts.get("subgroup") or "")
    return G, H


def cmd_loop(docs, opts):
    A = io.load_algebra(_single(docs), opts["max_dim"], opts["max_order"])
    G, H = _group_and_subgroup(opts)
    H, Q, pi = canonical_quotient(H)
    if A.group != Q:
        raise GradloopError(f"algebra must be graded by G/H = {Q}")
    if opts.get("cocycle") is None:
        L = loop_algebra(A, pi)
    else:
        tau = io.load_cocycle(opts["cocycle"], opts["max_order"])
        L = twisted_loop(A, pi, tau)
    return "Computed", L.to_doc()


def cmd_equiv(docs, opts):
    if len(docs) != 2:
        raise GradloopError("equiv takes exactly two inputs")
    triples = []
    for d in docs:
        if io.document_kind(d) == "triple":
            triples.append(io.load_triple(d, opts["max_dim"], opts["max_order"]))
        else:
            triples.append(classify(io.load_algebra(d, opts["max_dim"], opts["max_order"]),
                                    seed=opts["seed"]))
    res = equivalence_check(*triples)
    out = {"verdict": res.kind}
    if res.kind == "Equivalent":
        out["mu"] = res.mu.to_doc()
        out["iso"] = [_vec(row) for row in res.iso.matrix]
    elif res.kind == "NotEquivalent":
        out["certificate"] = _jsonable_dict(res.certificate)
    else:
        out["diagnostics"] = _jsonable_dict(res.diagnostics)
    return res.kind, out


def _jsonable_dict(d):
    return {k: (_jsonable_dict(v) if isinstance(v, dict) else _jsonable(v)) for k, v in d.items()}


def cmd_cocycle(sub, docs, opts):
    doc = _single(docs)
    if sub == "delta":
        G, H = _group_and_subgroup(opts)
        H, Q, pi = canonical_quotient(H)
        from .abgroup import section
        chi = io.load_character(doc, H)
        sigma = section_cocycle(pi, section(pi), H)
        return "Computed", delta(chi, sigma).to_doc()
    tau = io.load_cocycle(doc, opts["max_order"])
    if sub == "validate":
        return "Valid", {"kind": "cocycle", "valid": True}
    if sub == "invariants":
        return "Computed", {"invariants": _class_doc(tau)}
    if sub == "solve":
        gamma = solve_coboundary(tau)
        if gamma is None:
            cls = class_invariants(tau)
            idx = next(i for i, x in enumerate(cls.invariants) if any(x))
            return "NotCoboundary", {"coboundary": False, "nontrivial_factor": idx,
                                     "invariants": _class_doc(tau)}
        V = gamma.coeffs
        return "Coboundary", {"coboundary": True,
                              "gamma": [format_scalar(V.embed(x)) for x in gamma.values]}
    if sub == "extend":
        G, H = _group_and_subgroup(opts)
        H, Q, pi = canonical_quotient(H)
        ext = extend_cocycle_data(tau, H)
        return "Computed", {"tau": ext.tau.to_doc(), "normal_form": ext.standard.to_doc()}
    if sub == "real-character":
        rc = character_from_real_cocycle(tau)
        V = rc.chi.codomain
        G = tau.group
        return "Computed", {"chi": [format_scalar(V.embed(rc.chi(g))) for g in G.elements],
                            "z": [format_scalar(V.embed(rc.gamma(g))) for g in G.elements],
                            "certificate": bool(rc.certificate)}
    raise GradloopError(f"unknown cocycle subcommand {sub!r}")


def cmd_demo(opts):
    from .demo import run_examples
    rows = []
    ok = True
    for name, passed, details in run_examples():
        rows.append({"example": name, "ok": passed, "details": details})
        ok = ok and passed
    return ("Passed" if ok else "Failed"), {"examples": rows}


# -- driver -----------------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="gradloop", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=["validate", "twist", "loop", "centroid", "simplicity",
                                       "classify", "equiv", "cocycle", "demo"])
    p.add_argument("subcommand", nargs="?",
                   help="for cocycle: validate|solve|extend|invariants|delta|real-character")
    p.add_argument("-i", "--input", action="append", default=[], help="input document (repeatable)")
    p.add_argument("-o", "--output", help="write the JSON report here")
    p.add_argument("--cocycle", help="cocycle document for twist/loop")
    p.add_argument("--group", help="invariant factors, e.g. 2,4")
    p.add_argument("--subgroup", help="generators, e.g. 0,2;1,0")
    p.add_argument("--strict", action="store_true", help="exit 2 on Unknown verdicts")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers across input files")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--max-order", type=int, default=MAX_ORDER)
    p.add_argument("--max-dim", type=int, default=MAX_DIM)
    p.add_argument("--paper-examples", action="store_true", help="demo: run the worked examples")
    return p


def _report(command, inputs, entries):
    verdicts = [e["verdict"] for e in entries]
    return {"command": command, "inputs": inputs,
            "verdict": verdicts[0] if len(verdicts) == 1 else verdicts,
            "results": entries}


def run(argv=None, stdout=None, stderr=None):
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    args = build_parser().parse_args(argv)
    opts = {"max_dim": args.max_dim, "max_order": args.max_order, "seed": args.seed,
            "group": args.group, "subgroup": args.subgroup}
    command = args.command + (f" {args.subcommand}" if args.subcommand else "")
    try:
        docs, inputs = [], []
        for path in args.input:
            doc, sha = io.read_document(path)
            docs.append(doc if args.command == "validate" else io.unwrap(doc))
            inputs.append({"path": path, "sha256": sha})
        if args.cocycle:
            doc, sha = io.read_document(args.cocycle)
            opts["cocycle"] = io.unwrap(doc)
            inputs.append({"path": args.cocycle, "sha256": sha})
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_IO
    except GradloopError as exc:
        print(f"error: {exc} (at {exc.location})", file=stderr)
        return EXIT_INPUT

    entries = []
    try:
        if args.command in OPS:
            if not docs:
                raise GradloopError(f"{args.command} needs at least one -i input")
            jobs = [(args.command, d, opts) for d in docs]
            if args.jobs > 1 and len(jobs) > 1:
                with ProcessPoolExecutor(max_workers=args.jobs) as ex:
                    results = list(ex.map(_run_one, jobs))
            else:
                results = [_run_one(j) for j in jobs]
            for (verdict, result), meta in zip(results, inputs):
                entries.append({"input": meta["path"], "verdict": verdict, "result": result})
        elif args.command == "demo":
            if not args.paper_examples:
                raise GradloopError("demo requires --paper-examples")
            verdict, result = cmd_demo(opts)
            entries.append({"verdict": verdict, "result": result})
        elif args.command == "cocycle":
            verdict, result = cmd_cocycle(args.subcommand, docs, opts)
            entries.append({"verdict": verdict, "result": result})
        else:
            fn = {"twist": cmd_twist, "loop": cmd_loop, "equiv": cmd_equiv}[args.command]
            verdict, result = fn(docs, opts)
            entries.append({"verdict": verdict, "result": result})
    except GradloopError as exc:
        print(f"error: {type(exc).__name__}: {exc} (at {_jsonable(exc.location)})", file=stderr)
        return EXIT_INPUT

    report = _report(command, inputs, entries)
    text = io.dumps(report)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: {exc}", file=stderr)
            return EXIT_IO
    else:
        stdout.write(text)
    for e in entries:
        label = e.get("input", command)
        print(f"{label}: {e['verdict']}", file=stderr)

    verdicts = [e["verdict"] for e in entries]
    if any(v in ("Error", "Failed") for v in verdicts):
        for e in entries:
            if e["verdict"] == "Error":
                r = e["result"]
                print(f"error: {r['error']}: {r['message']} (at {r['location']})", file=stderr)
        return EXIT_INPUT
    if "Unknown" in verdicts:
        if args.strict:
            return EXIT_UNKNOWN
        print("warning: Unknown verdict (use --strict to fail)", file=stderr)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
