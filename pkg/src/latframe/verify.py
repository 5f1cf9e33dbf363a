"""Registry of reproducible claims and the runner behind ``verify-paper``."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable

import numpy as np

from . import __version__, catalog
from .formats import FormatError
from .frames import (frame_general, frame_scale, frame_tilde, representation_count,
                     search_representation, verify_frame)
from .lattice import (construction_a, is_sublattice, sublattice_index, even_neighbors, even_sublattice, integer_lattice,
                      is_even, is_unimodular, min_norm, short_vectors)
from .qseries import corollary_check, extremal_theta
from .zkcore import (bordered_qr_matrix, min_hamming_weight_isd, min_weight_bruteforce,
                     random_self_dual_code, self_dual_check, type2_check, weighing_check)

PASS, FAIL, BUDGET = "pass", "fail", "budget-exhausted"
PROFILES = ("quick", "full", "extended")

TABLE1 = {2: 0, 3: 4, 5: 0, 7: 0, 11: 8, 13: 4, 17: 8, 19: 8, 23: 0, 29: 12, 31: 4, 37: 16}
TABLE2 = {2: 0, 3: 0, 5: 4, 7: 0, 11: 8, 13: 4, 17: 0, 19: 8, 23: 0, 29: 16, 31: 16,
          37: 8, 41: 8, 43: 8, 47: 8, 53: 12, 59: 16, 61: 16, 67: 32, 71: 16, 73: 8,
          79: 24, 83: 16, 89: 24, 97: 24}
COROLLARY_BOUNDS = {32: 11968, 40: 80, 48: 5197920, 56: 61712, 64: 128, 72: 36949680}
CODE_ANCHORS = {
    "C22_32": "table3", "C22_40": "table3", "C14_48": "table4", "C46_48": "table4",
    "C14_56": "table5", "C34_56": "table5", "C46_56": "table5",
    "C14_64": "len64", "C46_64": "len64", "C8_72": "fig1",
}


@dataclass
class Options:
    threads: int = 1
    budget: int = 10**10
    precision: int = 60
    checkpoint_dir: Path | None = None


@dataclass
class Outcome:
    status: str
    artifacts: dict = field(default_factory=dict)


@dataclass
class Claim:
    id: str
    anchor: str
    profile: str
    run: Callable[[Options], Outcome]


def _ok(flag: bool, **artifacts) -> Outcome:
    return Outcome(PASS if flag else FAIL, artifacts)


def _primes(lo: int, hi: int) -> list[int]:
    sieve = np.ones(hi + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(hi ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p::p] = False
    return [int(p) for p in np.nonzero(sieve)[0] if p >= lo]


# --- claim bodies -----------------------------------------------------------

def _weighing(name: str, skew: bool = True):
    def run(opts: Options) -> Outcome:
        weight, max_entry = catalog.MATRIX_WEIGHTS[name]
        res = weighing_check(catalog.matrix(name), weight, skew=skew, max_entry=max_entry)
        return _ok(bool(res), weight=weight, detail=res.detail)
    return run


def _w24_listing(opts: Options) -> Outcome:
    same = np.array_equal(bordered_qr_matrix(23), catalog.matrix("W24_23"))
    return _ok(same)


def _type2(name: str):
    def run(opts: Options) -> Outcome:
        code = catalog.code(name)
        rep = type2_check(code)
        return _ok(bool(rep), self_dual=rep.self_dual, even=rep.even,
                   rows_divisible=rep.rows_divisible)
    return run


def _self_dual(name: str):
    def run(opts: Options) -> Outcome:
        return _ok(self_dual_check(catalog.code(name)))
    return run


def _table_count(m: int, k: int, p: int, expected: int):
    def run(opts: Options) -> Outcome:
        got = representation_count(m, k, p)
        return _ok(got == expected, count=got, expected=expected)
    return run


def _sweep(m: int, k: int, limit: int, excluded: set[int], double: bool = False):
    def run(opts: Options) -> Outcome:
        lo = 3 if double else 2
        missing = []
        for p in _primes(lo, limit):
            target = 2 * p if double else p
            if search_representation(m, k, None, target) is None:
                missing.append(p)
        return _ok(set(missing) == excluded, missing=missing)
    return run


def _frame_tilde(name: str, abcd, scale_to: int = 12):
    def run(opts: Options) -> Outcome:
        w = catalog.matrix(name) if name != "QR11" else bordered_qr_matrix(11)
        f = frame_tilde(w, *abcd)
        chain = [str(f.constant)]
        g = f
        for m in range(2, scale_to + 1):
            g = frame_scale(f, m)
            chain.append(str(g.constant))
        return _ok(bool(verify_frame(f.host, f.rows, f.constant)), constant=str(f.constant),
                   scaled=chain)
    return run


def _frame_general(name: str, k: int, abcd, expected: int | None = None):
    def run(opts: Options) -> Outcome:
        f = frame_general(catalog.matrix(name), k, *abcd)
        good = bool(verify_frame(f.host, f.rows, f.constant))
        if expected is not None:
            good = good and f.constant == expected
        return _ok(good, constant=str(f.constant), abcd=list(abcd))
    return run


def _scale_chain(opts: Options) -> Outcome:
    f = frame_general(catalog.matrix("W32_17"), 3, 0, 1, -2, 0)
    constants = []
    for m in range(1, 13):
        g = frame_scale(f, m)
        if not verify_frame(g.host, g.rows, g.constant) or g.constant != 7 * m:
            return _ok(False, failed_at=m)
        constants.append(str(g.constant))
    return _ok(True, constants=constants)


def _theta_value(n: int, norm: int, expected: int):
    def run(opts: Options) -> Outcome:
        got = extremal_theta(n, max(norm, 4))[norm]
        return _ok(got == expected, value=str(got))
    return run


def _theta_32_cross(opts: Options) -> Outcome:
    lat = construction_a(catalog.code("C22_32"))
    rep = short_vectors(lat, 4, budget=opts.budget, threads=opts.threads)
    series = extremal_theta(32, 4)
    if not rep.proven:
        return Outcome(BUDGET, {"nodes_visited": rep.nodes_visited})
    counts = {str(k): v for k, v in rep.counts.items()}
    return _ok(series[4] == 146880 and rep.counts == {Fraction(4): 146880},
               series=str(series[4]), enumerated=counts)


def _corollary(n: int):
    def run(opts: Options) -> Outcome:
        rep = corollary_check(n, 20)
        return _ok(rep.ok and rep.bound == COROLLARY_BOUNDS[n], bound=rep.bound,
                   min_margin=str(min(rep.margins.values())))
    return run


def _oracle_isd(opts: Options) -> Outcome:
    rng = np.random.default_rng(2024)
    for i in range(50):
        n = int(rng.choice([4, 8, 12, 16]))
        code = random_self_dual_code(3, n, rng)
        a, b = min_weight_bruteforce(code, "hamming"), min_hamming_weight_isd(code)
        if a != b:
            return _ok(False, case=i, bruteforce=a, isd=b)
    return _ok(True, cases=50)


def _oracle_construction_a(opts: Options) -> Outcome:
    rng = np.random.default_rng(2025)
    lengths = {2: [2, 4, 6, 8], 3: [4, 8], 4: list(range(1, 9)), 5: [2, 4, 6, 8]}
    for i in range(30):
        k = int(rng.choice([2, 3, 4, 5]))
        code = random_self_dual_code(k, int(rng.choice(lengths[k])), rng)
        d_e = min_weight_bruteforce(code, "euclidean")
        res = min_norm(construction_a(code))
        if not res.proven or res.value * k != min(k * k, d_e):
            return _ok(False, case=i, k=k, d_e=d_e, min_norm=str(res.value))
    return _ok(True, cases=30)


def _min_norm_claim(build: Callable, expected: int, count_shell: int | None = None):
    def run(opts: Options) -> Outcome:
        lat = build()
        res = min_norm(lat, budget=opts.budget, threads=opts.threads)
        art = {"min_norm": str(res.value), "nodes_visited": res.nodes_visited}
        if not res.proven:
            art["certified_empty"] = str(res.certified_empty)
            return Outcome(BUDGET if res.value >= expected else FAIL, art)
        good = res.value == expected
        if count_shell is not None and good:
            rep = short_vectors(lat, expected, budget=opts.budget)
            art["shell"] = rep.counts.get(Fraction(expected), 0)
            good = rep.proven and art["shell"] == count_shell
        return _ok(good and is_unimodular(lat) and is_even(lat), **art)
    return run


def _e8():
    return even_neighbors(integer_lattice(8)).first


def _qr11_lattice():
    from .frames import tilde_code

    return construction_a(tilde_code(bordered_qr_matrix(11)))


def _w20_lattice():
    from .frames import tilde_code

    return construction_a(tilde_code(catalog.matrix("W20_11")))


def _code_lattice(name: str):
    return lambda: construction_a(catalog.code(name))


def _checkpoint(opts: Options, key: str):
    if opts.checkpoint_dir is None:
        return None
    opts.checkpoint_dir.mkdir(parents=True, exist_ok=True)
    return opts.checkpoint_dir / f"{key}.json"


def _extremal_code(name: str, expected: int):
    """Certify structure exactly; search for vectors below the extremal bound."""
    def run(opts: Options) -> Outcome:
        lat = construction_a(catalog.code(name))
        if not (is_even(lat) and is_unimodular(lat)):
            return _ok(False, even=is_even(lat), unimodular=is_unimodular(lat))
        rep = short_vectors(lat, expected - 2, budget=opts.budget, threads=opts.threads,
                            checkpoint=_checkpoint(opts, name))
        art = {"nodes_visited": rep.nodes_visited, "radius": expected - 2,
               "found": {str(k): v for k, v in rep.counts.items()}}
        if rep.counts:
            return Outcome(FAIL, art)
        return Outcome(PASS if rep.proven else BUDGET, art)
    return run


def _neighbor_claim(name: str, expected: int):
    """Both even neighbors certified exactly; one of them should be extremal."""
    def run(opts: Options) -> Outcome:
        lat = construction_a(catalog.code(name))
        pair = even_neighbors(lat)
        l0 = even_sublattice(lat)
        members = []
        for i, m in enumerate(pair.members):
            res = min_norm(m, budget=opts.budget, threads=opts.threads,
                           checkpoint=_checkpoint(opts, f"{name}.n{i}"))
            members.append({"index2": is_sublattice(l0, m) and sublattice_index(l0, m) == 2,
                            "even_unimodular": is_even(m) and is_unimodular(m),
                            "min_norm": str(res.value), "proof_status": res.proof_status,
                            "nodes_visited": res.nodes_visited})
        art = {"members": members}
        if not all(x["index2"] and x["even_unimodular"] for x in members):
            return Outcome(FAIL, art)
        if any(x["proof_status"] == "proven" and Fraction(x["min_norm"]) == expected
               for x in members):
            return Outcome(PASS, art)
        if all(Fraction(x["min_norm"]) < expected for x in members):
            return Outcome(FAIL, art)
        return Outcome(BUDGET, art)
    return run


def _isd(name: str, expected: int):
    def run(opts: Options) -> Outcome:
        got = min_hamming_weight_isd(catalog.code(name))
        return _ok(got == expected, min_weight=got)
    return run


# --- registry ---------------------------------------------------------------

def build_claims() -> list[Claim]:
    c: list[Claim] = []
    add = c.append
    for name in ("W20_11", "W24_23", "W32_23", "W32_17", "D28"):
        add(Claim(f"catalog.{name}.weighing", f"skew weighing matrix {name}", "quick",
                  _weighing(name)))
    add(Claim("catalog.W24_23.listing", "bordered quadratic-residue matrix of order 24",
              "quick", _w24_listing))
    for name, anchor in CODE_ANCHORS.items():
        add(Claim(f"{anchor}.{name}.type2", f"Type II code {name}", "quick", _type2(name)))
    add(Claim("tilde.C4T_W20_11.type2", "Z4 code [I | W20_11 + 2I]", "quick",
              _type2("C4T_W20_11")))
    for name in ("C3_W24_23", "C3_W32_23", "C3_W32_17", "C5_D28"):
        add(Claim(f"selfdual.{name}", f"self-dual code {name}", "quick", _self_dual(name)))
    for p, v in TABLE1.items():
        add(Claim(f"table1.p{p}", f"a1({p}) for (a^2+23b^2+c^2+23d^2)/3", "quick",
                  _table_count(23, 3, p, v)))
    for p, v in TABLE2.items():
        add(Claim(f"table2.p{p}", f"a2({p}) for (a^2+29b^2+c^2+29d^2)/5", "quick",
                  _table_count(29, 5, p, v)))
    add(Claim("reps.z4.sweep", "2p = (a^2+11b^2+c^2+11d^2)/4 for odd p <= 500", "quick",
              _sweep(11, 4, 500, {11}, double=True)))
    add(Claim("reps.m23.sweep", "p = (a^2+23b^2+c^2+23d^2)/3 for p <= 500", "quick",
              _sweep(23, 3, 500, {2, 5, 7, 23})))
    add(Claim("reps.m29.sweep", "p = (a^2+29b^2+c^2+29d^2)/5 for p <= 500", "quick",
              _sweep(29, 5, 500, {2, 3, 7, 17, 23})))
    add(Claim("frames.W20_11.tilde", "frames from W20_11 via [I | W + 2I]", "quick",
              _frame_tilde("W20_11", (1, 1, -1, -1))))
    add(Claim("frames.QR11.tilde", "frames from the order-12 bordered matrix", "quick",
              _frame_tilde("QR11", (2, 0, 0, 2))))
    add(Claim("frames.W24_23.general", "3-frame from W24_23", "quick",
              _frame_general("W24_23", 3, (3, 0, 0, 0), 3)))
    add(Claim("frames.W32_23.general", "3-frame from W32_23", "quick",
              _frame_general("W32_23", 3, (3, 0, 0, 0), 3)))
    add(Claim("frames.W32_17.p7", "7-frame from W32_17 with (0,1,-2,0)", "quick",
              _frame_general("W32_17", 3, (0, 1, -2, 0), 7)))
    add(Claim("frames.W32_17.p23", "23-frame from W32_17 with (0,2,-1,0)", "quick",
              _frame_general("W32_17", 3, (0, 2, -1, 0), 23)))
    add(Claim("frames.D28.general", "5-frame from D28", "quick",
              _frame_general("D28", 5, (5, 0, 0, 0), 5)))
    add(Claim("frames.scale.chain", "km-frames from a k-frame, m <= 12", "quick", _scale_chain))
    add(Claim("theta.n8.A2", "extremal theta, n = 8", "quick", _theta_value(8, 2, 240)))
    add(Claim("theta.n24.A4", "extremal theta, n = 24", "quick", _theta_value(24, 4, 196560)))
    add(Claim("theta.n32.A4", "extremal theta, n = 32, against enumeration", "quick",
              _theta_32_cross))
    for n in COROLLARY_BOUNDS:
        add(Claim(f"corollary.n{n}", f"shell sizes against the Fisher bound, n = {n}",
                  "quick", _corollary(n)))
    add(Claim("oracle.isd", "information sets against brute force", "quick", _oracle_isd))
    add(Claim("oracle.construction_a", "min norm against min{k, d_E/k}", "quick",
              _oracle_construction_a))
    add(Claim("minnorm.E8", "even neighbor of Z^8", "full", _min_norm_claim(_e8, 2, 240)))
    add(Claim("minnorm.C22_32", "extremality of A22(C22_32)", "full",
              _min_norm_claim(_code_lattice("C22_32"), 4)))
    add(Claim("minnorm.QR11", "extremality of A4 of the order-12 tilde code", "full",
              _min_norm_claim(_qr11_lattice, 4)))
    add(Claim("minnorm.C4T_W20_11", "extremality of A4 of the W20_11 tilde code", "full",
              _min_norm_claim(_w20_lattice, 4)))
    add(Claim("minnorm.C22_40", "extremality of A22(C22_40)", "full",
              _min_norm_claim(_code_lattice("C22_40"), 4)))
    for name in ("C14_48", "C46_48", "C14_56", "C34_56", "C46_56", "C14_64", "C46_64"):
        n = int(name.split("_")[1])
        add(Claim(f"extremal.{name}", f"no vectors below norm {2 * (n // 24) + 2}",
                  "extended", _extremal_code(name, 2 * (n // 24) + 2)))
    add(Claim("neighbors.C3_W24_23", "extremal even neighbor in dimension 48", "extended",
              _neighbor_claim("C3_W24_23", 6)))
    add(Claim("neighbors.C5_D28", "extremal even neighbor in dimension 56", "extended",
              _neighbor_claim("C5_D28", 6)))
    for name in ("C3_W24_23", "C3_W32_23", "C3_W32_17"):
        add(Claim(f"isd.{name}", f"minimum Hamming weight of {name}", "extended",
                  _isd(name, 15)))
    return c


def select(claims: list[Claim], profile: str, only: str | None = None) -> list[Claim]:
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}")
    allowed = PROFILES[:PROFILES.index(profile) + 1]
    out = [c for c in claims if c.profile in allowed]
    if only:
        out = [c for c in out if c.id.startswith(only)]
    return out


def run_claims(claims: list[Claim], opts: Options, profile: str, progress=None) -> dict:
    results = []
    for claim in claims:
        start = time.perf_counter()
        try:
            out = claim.run(opts)
        except FormatError:
            raise
        except Exception as exc:  # a crashing claim is a failed claim
            out = Outcome(FAIL, {"error": f"{type(exc).__name__}: {exc}"})
        entry = {"id": claim.id, "anchor": claim.anchor, "status": out.status,
                 "elapsed": round(time.perf_counter() - start, 3),
                 "artifacts": out.artifacts}
        results.append(entry)
        if progress is not None:
            progress(entry)
    summary = {s: sum(1 for r in results if r["status"] == s) for s in (PASS, FAIL, BUDGET)}
    return {"tool": "latframe", "version": __version__, "profile": profile,
            "claims": results, "summary": summary}


def exit_code(report: dict) -> int:
    """0 when every claim passes, 1 on any failure, 2 when only budgets ran out."""
    statuses = {r["status"] for r in report["claims"]}
    if FAIL in statuses:
        return 1
    if BUDGET in statuses:
        return 2
    return 0


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, default=str)
