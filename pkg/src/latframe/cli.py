"""Command-line entry point: ``latframe <group> <command> ...``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog
from .formats import (FormatError, format_code, format_frame, format_lattice, format_matrix,
                      parse_code, parse_frame, parse_lattice, parse_matrix)

EXIT_OK, EXIT_FAIL, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
    else:
        print(text)


def _load_code(args):
    if args.catalog:
        try:
            return catalog.code(args.catalog)
        except KeyError as exc:
            raise InputError(str(exc)) from None
    if not args.file:
        raise InputError("give a code file or --catalog NAME")
    path = Path(args.file)
    return parse_code(path.read_text(), str(path))


def _load_matrix(args):
    if args.catalog:
        try:
            return catalog.matrix(args.catalog)
        except KeyError as exc:
            raise InputError(str(exc)) from None
    if not args.file:
        raise InputError("give a matrix file or --catalog NAME")
    import numpy as np

    path = Path(args.file)
    return np.array(parse_matrix(path.read_text(), str(path)), dtype=np.int64)


def _load_lattice(args):
    from .lattice import construction_a

    if args.catalog:
        try:
            return construction_a(catalog.code(args.catalog))
        except KeyError as exc:
            raise InputError(str(exc)) from None
    if not args.file:
        raise InputError("give a lattice file or --catalog CODE")
    path = Path(args.file)
    return parse_lattice(path.read_text(), str(path))


# --- verify-paper -----------------------------------------------------------

def cmd_verify_paper(args) -> int:
    from . import verify

    if args.replay:
        report = json.loads(Path(args.replay).read_text())
        return verify.exit_code(report)
    claims = verify.select(verify.build_claims(), args.profile, args.only)
    if not claims:
        raise InputError(f"no claims match {args.only!r} in profile {args.profile}")
    opts = verify.Options(threads=args.threads, budget=args.budget, precision=args.prec,
                          checkpoint_dir=Path(args.checkpoint_dir) if args.profile == "extended"
                          else None)

    def progress(entry):
        if not args.json:
            print(f"{entry['status']:>16}  {entry['id']}  ({entry['elapsed']:.2f}s)", flush=True)

    report = verify.run_claims(claims, opts, args.profile, progress)
    if args.report:
        Path(args.report).write_text(verify.dumps(report) + "\n")
    if args.json:
        print(verify.dumps(report))
    else:
        s = report["summary"]
        print(f"{len(claims)} claims: {s['pass']} pass, {s['fail']} fail, "
              f"{s['budget-exhausted']} budget-exhausted")
    return verify.exit_code(report)


# --- code -------------------------------------------------------------------

def cmd_code(args) -> int:
    from .zkcore import (min_hamming_weight_isd, min_weight_bruteforce, self_dual_check,
                         type2_check)

    code = _load_code(args)
    label = args.catalog or args.file
    if args.action == "show":
        sys.stdout.write(format_code(code))
        return EXIT_OK
    if args.action == "selfdual":
        ok = self_dual_check(code)
        _emit(args, {"code": label, "self_dual": ok}, f"{label}: {'pass' if ok else 'fail'}")
        return EXIT_OK if ok else EXIT_FAIL
    if args.action == "type2":
        rep = type2_check(code)
        payload = {"code": label, "type2": rep.ok, "self_dual": rep.self_dual,
                   "even": rep.even, "rows_divisible": rep.rows_divisible}
        _emit(args, payload, f"{label}: {'pass' if rep.ok else 'fail'}")
        return EXIT_OK if rep.ok else EXIT_FAIL
    if args.action == "minweight":
        if args.isd:
            w = min_hamming_weight_isd(code)
        else:
            w = min_weight_bruteforce(code, args.metric)
        metric = "hamming" if args.isd else args.metric
        _emit(args, {"code": label, "metric": metric, "min_weight": w}, str(w))
        return EXIT_OK
    raise InputError(f"unknown action {args.action}")


# --- lattice ----------------------------------------------------------------

def cmd_lattice(args) -> int:
    from .lattice import (even_neighbors, is_even, is_unimodular, min_norm, short_vectors,
                          theta_coefficients)

    lat = _load_lattice(args)
    if args.action == "show":
        sys.stdout.write(format_lattice(lat))
        return EXIT_OK
    if args.action == "info":
        payload = {"dim": lat.dim, "scale": lat.scale, "unimodular": is_unimodular(lat),
                   "even": is_even(lat)}
        _emit(args, payload, " ".join(f"{k}={v}" for k, v in payload.items()))
        return EXIT_OK
    if args.action == "minnorm":
        res = min_norm(lat, budget=args.budget)
        _emit(args, res.to_json(), f"{res.value} ({res.proof_status})")
        return EXIT_OK if res.proven else EXIT_BUDGET
    if args.action == "short":
        rep = short_vectors(lat, Fraction(args.bound), budget=args.budget, threads=args.threads)
        text = "\n".join(f"{k}: {v}" for k, v in sorted(rep.counts.items()))
        _emit(args, rep.to_json(), (text + "\n" if text else "") + rep.proof_status)
        return EXIT_OK if rep.proven else EXIT_BUDGET
    if args.action == "theta":
        coeffs = theta_coefficients(lat, Fraction(args.bound), budget=args.budget)
        _emit(args, {"theta": {str(k): v for k, v in coeffs.items()}},
              "\n".join(f"{k}: {v}" for k, v in coeffs.items()))
        return EXIT_OK
    if args.action == "neighbors":
        pair = even_neighbors(lat)
        if args.out:
            for i, m in enumerate(pair.members):
                Path(f"{args.out}.{i}.lat").write_text(format_lattice(m))
        payload = {"members": [{"dim": m.dim, "scale": m.scale, "even": is_even(m),
                                "unimodular": is_unimodular(m)} for m in pair.members]}
        _emit(args, payload, "\n".join(str(x) for x in payload["members"]))
        return EXIT_OK
    raise InputError(f"unknown action {args.action}")


# --- frame ------------------------------------------------------------------

def cmd_frame(args) -> int:
    from .frames import (frame_general, frame_scale, frame_tilde, representation_count,
                         search_representation, verify_frame)

    if args.action == "search-rep":
        rep = search_representation(args.m, args.k, args.regime, args.target)
        if rep is None:
            _emit(args, {"witness": None}, "none (certified by complete search)")
            return EXIT_OK
        _emit(args, rep.to_json(), f"{rep.tuple} value={rep.value} regime={rep.regime}")
        return EXIT_OK
    if args.action == "count-rep":
        n = representation_count(args.m, args.k, args.target, regime=args.regime)
        _emit(args, {"m": args.m, "k": args.k, "target": args.target, "count": n}, str(n))
        return EXIT_OK
    if args.action in ("tilde", "general"):
        mat = _load_matrix(args)
        a, b, c, d = args.abcd
        if args.action == "tilde":
            f = frame_tilde(mat, a, b, c, d)
        else:
            f = frame_general(mat, args.k, a, b, c, d)
        if args.scale and args.scale > 1:
            f = frame_scale(f, args.scale)
        if args.out:
            Path(args.out).write_text(format_frame(int(f.constant), f.rows))
        _emit(args, {"constant": str(f.constant), "size": len(f)},
              f"{len(f)} vectors, constant {f.constant}")
        return EXIT_OK
    if args.action == "verify":
        lat = _load_lattice(args)
        path = Path(args.frame_file)
        k, vectors = parse_frame(path.read_text(), str(path))
        res = verify_frame(lat, vectors, k)
        _emit(args, {"ok": res.ok, "detail": res.detail}, "pass" if res else f"fail: {res.detail}")
        return EXIT_OK if res else EXIT_FAIL
    raise InputError(f"unknown action {args.action}")


# --- theta ------------------------------------------------------------------

def cmd_theta(args) -> int:
    from .qseries import corollary_check, extremal_theta

    if args.action == "extremal":
        s = extremal_theta(args.n, args.prec)
        text = "\n".join(f"A{2 * j} = {v}" for j, v in enumerate(s.coeffs))
        _emit(args, s.to_json(), text)
        return EXIT_OK
    if args.action == "corollary":
        rep = corollary_check(args.n, args.mmax)
        text = "\n".join(f"norm {k}: margin {v}" for k, v in sorted(rep.margins.items()))
        _emit(args, rep.to_json(), f"bound {rep.bound}\n{text}\n{'pass' if rep else 'fail'}")
        return EXIT_OK if rep else EXIT_FAIL
    raise InputError(f"unknown action {args.action}")


def cmd_catalog(args) -> int:
    if args.action == "list":
        _emit(args, {"codes": catalog.code_names(), "matrices": catalog.matrix_names()},
              "codes: " + " ".join(catalog.code_names()) + "\nmatrices: "
              + " ".join(catalog.matrix_names()))
        return EXIT_OK
    name = args.name
    try:
        if name in catalog.code_names():
            sys.stdout.write(format_code(catalog.code(name)))
        else:
            sys.stdout.write(format_matrix(catalog.matrix(name)))
    except KeyError as exc:
        raise InputError(str(exc)) from None
    return EXIT_OK


# --- parser -----------------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--budget", type=int, default=10**10, help="enumeration node budget")
    p.add_argument("--prec", type=int, default=60, help="q-series precision (max exponent)")


def _source(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", nargs="?", help="input file")
    p.add_argument("--catalog", metavar="NAME", help="use an embedded catalog entry")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="latframe", description=__doc__)
    sub = parser.add_subparsers(dest="group", required=True)

    p = sub.add_parser("verify-paper", help="run the claim suite")
    _common(p)
    p.add_argument("--profile", choices=("quick", "full", "extended"), default="quick")
    p.add_argument("--only", metavar="PREFIX", help="claim id prefix")
    p.add_argument("--report", metavar="FILE", help="also write the JSON report here")
    p.add_argument("--replay", metavar="FILE", help="exit with the code of a saved report")
    p.add_argument("--checkpoint-dir", default=".latframe-checkpoints")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("code", help="code operations")
    p.add_argument("action", choices=("show", "selfdual", "type2", "minweight"))
    _source(p)
    _common(p)
    p.add_argument("--metric", choices=("hamming", "euclidean"), default="hamming")
    p.add_argument("--isd", action="store_true", help="information-set algorithm (prime k)")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("lattice", help="lattice operations (files or Construction A of a code)")
    p.add_argument("action", choices=("show", "info", "minnorm", "short", "theta", "neighbors"))
    _source(p)
    _common(p)
    p.add_argument("--bound", default="2", help="norm bound for short/theta")
    p.add_argument("--out", help="file prefix for neighbor lattices")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("frame", help="frames and representations")
    p.add_argument("action", choices=("search-rep", "count-rep", "tilde", "general", "verify"))
    _source(p)
    _common(p)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--target", type=int)
    p.add_argument("--regime", choices=("Z4", "Zk"))
    p.add_argument("--abcd", type=int, nargs=4, default=(1, 1, -1, -1))
    p.add_argument("--scale", type=int, help="multiply the frame constant by m")
    p.add_argument("--frame-file", help="frame to verify")
    p.add_argument("--out", help="write the frame here")
    p.set_defaults(func=cmd_frame)

    p = sub.add_parser("theta", help="extremal theta series")
    p.add_argument("action", choices=("extremal", "corollary"))
    _common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mmax", type=int, default=20)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("catalog", help="embedded data")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)
    return parser


def _check_required(args) -> None:
    if args.group == "frame" and args.action in ("search-rep", "count-rep"):
        missing = [f for f in ("m", "k", "target") if getattr(args, f) is None]
        if missing:
            raise InputError("missing " + ", ".join("--" + f for f in missing))
    if args.group == "frame" and args.action == "general" and args.k is None:
        raise InputError("missing --k")
    if args.group == "frame" and args.action == "verify" and not args.frame_file:
        raise InputError("missing --frame-file")
    if args.group == "catalog" and args.action == "show" and not args.name:
        raise InputError("missing catalog name")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _check_required(args)
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
