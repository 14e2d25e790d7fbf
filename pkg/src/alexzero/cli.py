"""Command-line front end.

Subcommands: expand, poly, zeros, certify, verify, family, sweep.  Single
results are printed as JSON on stdout; sweep writes one JSON record per
word (JSONL) plus an optional re,im,cf scatter CSV.  Exit codes: 0 all
checks pass, 1 a mathematical check failed, 2 usage or input error.

Sweep records are serialized with a fixed key order, floats at 17
significant digits and exact integers as decimal strings, then sorted by
(m, word), so output files are byte-identical for any worker count.  The
environment variable ALEXZERO_JOBS overrides --jobs.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from multiprocessing import Pool

import numpy as np

from .exactmath import IntPoly, sturm_real_root_count
from .families import remark2_extremal, theorem5_verify
from .roots import NoConvergenceError, find_zeros, zero_report
from .seifert import (
    NotApplicableError,
    alexander_poly,
    normalized_alexander,
    symmetric_companion,
)
from .stability import lyapunov_certificate, theorem4_check, theorem_blocks
from .twobridge import (
    CFWord,
    Classification,
    classify,
    cf_to_fraction,
    even_cf_expand,
    normalize_fraction,
)

__all__ = [
    "KnotRecord",
    "SweepSummary",
    "InvalidRangeError",
    "SweepViolationError",
    "knot_record",
    "record_to_json_line",
    "cmd_sweep",
    "main",
]

SWEEP_TOL = 1e-12


class InvalidRangeError(ValueError):
    """Sweep parameters outside the supported window."""


class SweepViolationError(AssertionError):
    """A hard per-record invariant failed; carries the offending word."""

    def __init__(self, word: CFWord, reason: str):
        super().__init__(f"word {word}: {reason}")
        self.word = word
        self.reason = reason


@dataclass(frozen=True)
class KnotRecord:
    """Everything the sweep knows about one CF word."""

    cf: CFWord
    beta: int
    alpha: int
    m: int
    flags: Classification
    delta: IntPoly
    zeros: tuple[complex, ...]
    min_re: float
    max_re: float
    hoste_ok: bool
    thm1_ok: bool
    certs: dict[str, str]


@dataclass(frozen=True)
class SweepSummary:
    records: int
    hoste_violations: int
    thm1_violations: int
    min_margin: float


def knot_record(w: CFWord, tol: float = SWEEP_TOL) -> KnotRecord:
    """Compute the full record for one word, enforcing the hard invariants
    (reciprocal pairing, |delta(-1)| = alpha, degree = m, the (-3, 6)
    strip)."""
    beta, alpha = cf_to_fraction(w)
    flags = classify(w)
    delta = alexander_poly(w)
    zs = find_zeros(delta, tol)
    rep = zero_report(zs)
    if delta.degree != w.m:
        raise SweepViolationError(w, f"degree {delta.degree} != m {w.m}")
    if abs(delta(-1)) != alpha:
        raise SweepViolationError(w, f"|delta(-1)| != alpha {alpha}")
    if not rep.reciprocal_paired:
        raise SweepViolationError(w, "zero set not closed under z -> 1/z")
    if not rep.thm1_ok:
        raise SweepViolationError(
            w, f"zero outside the strip: re range [{rep.min_re}, {rep.max_re}]")

    certs = {
        "t1_lower": "ok" if theorem_blocks(w, "t1-lower").lemma_ok else "fail",
        "t1_upper": "ok" if theorem_blocks(w, "t1-upper").lemma_ok else "fail",
    }
    if flags.thm3_applicable:
        certs["t3"] = "ok" if theorem_blocks(w, "t3").lemma_ok else "fail"
    else:
        certs["t3"] = "n/a"
    if flags.thm3_strong:
        cert = lyapunov_certificate(w, "upper", 3, "diag-a")
        certs["upper3_diag_a"] = "pd" if cert.certified else "not-pd"
    else:
        certs["upper3_diag_a"] = "n/a"

    return KnotRecord(
        cf=w, beta=beta, alpha=alpha, m=w.m, flags=flags, delta=delta,
        zeros=zs.zeros, min_re=rep.min_re, max_re=rep.max_re,
        hoste_ok=rep.hoste_ok, thm1_ok=rep.thm1_ok, certs=certs,
    )


def _f17(x: float) -> str:
    return format(float(x), ".17g")


def record_to_json_line(rec: KnotRecord) -> str:
    """Deterministic JSONL serialization with a fixed key order."""
    flags = ",".join(f'"{k}":{"true" if v else "false"}'
                     for k, v in rec.flags.as_dict().items())
    delta = ",".join(f'"{c}"' for c in rec.delta.coeffs)
    zeros = ",".join(f"[{_f17(z.real)},{_f17(z.imag)}]" for z in rec.zeros)
    certs = ",".join(f"{json.dumps(k)}:{json.dumps(v)}"
                     for k, v in rec.certs.items())
    return (
        f'{{"cf":{json.dumps(str(rec.cf))},'
        f'"beta":{rec.beta},"alpha":{rec.alpha},"m":{rec.m},'
        f'"flags":{{{flags}}},'
        f'"delta":[{delta}],'
        f'"zeros":[{zeros}],'
        f'"min_re":{_f17(rec.min_re)},"max_re":{_f17(rec.max_re)},'
        f'"hoste_ok":{"true" if rec.hoste_ok else "false"},'
        f'"thm1_ok":{"true" if rec.thm1_ok else "false"},'
        f'"certs":{{{certs}}}}}'
    )


def _iter_words(max_m: int, max_a: int):
    entries = [a for a in range(-max_a, max_a + 1) if a != 0]
    for m in range(1, max_m + 1):
        for combo in product(entries, repeat=m):
            yield combo


def _sweep_worker(combo: tuple[int, ...]):
    rec = knot_record(CFWord(combo))
    margin = min(rec.min_re + 3.0, 6.0 - rec.max_re)
    return (len(combo), combo), record_to_json_line(rec), \
        rec.hoste_ok, rec.thm1_ok, margin


def _resolve_jobs(jobs: int | None) -> int:
    env = os.environ.get("ALEXZERO_JOBS")
    if env is not None:
        jobs = int(env)
    if jobs is None:
        jobs = os.cpu_count() or 1
    return max(1, jobs)


def cmd_sweep(max_m: int, max_a: int, out: str, jobs: int | None = None,
              plot: str | None = None) -> SweepSummary:
    """Enumerate every word with 1 <= m <= max_m, a_i in {+-1..+-max_a},
    write a sorted JSONL file and return the violation summary.

    A worker pool shares nothing; records are sorted by (m, word) before
    writing so the output does not depend on the worker count.
    """
    if not 1 <= max_m <= 12:
        raise InvalidRangeError(f"max_m {max_m} outside 1..12")
    if not 1 <= max_a <= 6:
        raise InvalidRangeError(f"max_a {max_a} outside 1..6")
    jobs = _resolve_jobs(jobs)
    words = list(_iter_words(max_m, max_a))
    if jobs == 1:
        results = [_sweep_worker(wd) for wd in words]
    else:
        chunk = max(1, len(words) // (jobs * 8))
        with Pool(jobs) as pool:
            results = list(pool.imap_unordered(_sweep_worker, words,
                                               chunksize=chunk))
    results.sort(key=lambda item: item[0])
    hoste_viol = sum(1 for item in results if not item[2])
    thm1_viol = sum(1 for item in results if not item[3])
    min_margin = min(item[4] for item in results)
    with open(out, "w") as fh:
        for item in results:
            fh.write(item[1] + "\n")
    if plot is not None:
        _write_plot_csv(plot, results)
    return SweepSummary(records=len(results), hoste_violations=hoste_viol,
                        thm1_violations=thm1_viol, min_margin=min_margin)


def _write_plot_csv(path: str, results) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["re", "im", "cf"])
        for (_, combo), line, *_ in results:
            rec = json.loads(line)
            for re_z, im_z in rec["zeros"]:
                writer.writerow([_f17(re_z), _f17(im_z), rec["cf"]])


# ---------------------------------------------------------------------------
# subcommand handlers; each returns the process exit code

def _parse_cf(text: str) -> CFWord:
    return CFWord.parse(text)


def _parse_bound(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad bound {text!r}") from exc


def _print(obj) -> None:
    print(json.dumps(obj, indent=2))


def _cmd_expand(args) -> int:
    try:
        beta_s, alpha_s = args.frac.split("/")
        beta, alpha = int(beta_s), int(alpha_s)
    except ValueError:
        print(f"bad fraction {args.frac!r}, expected B/A", file=sys.stderr)
        return 2
    nbeta, nalpha = normalize_fraction(beta, alpha)
    w = even_cf_expand(nbeta, nalpha)
    _print({
        "beta": beta,
        "alpha": alpha,
        "beta_normalized": nbeta,
        "alpha_normalized": nalpha,
        "mirrored": (nbeta, nalpha) != (beta, alpha),
        "cf": str(w),
        "flags": classify(w).as_dict(),
    })
    return 0


def _cmd_poly(args) -> int:
    w = _parse_cf(args.cf)
    delta = alexander_poly(w)
    beta, alpha = cf_to_fraction(w)
    _print({
        "cf": str(w),
        "beta": beta,
        "alpha": alpha,
        "m": w.m,
        "delta": [str(c) for c in delta.coeffs],
        "delta_normalized": [str(c) for c in normalized_alexander(w).coeffs],
        "degree": delta.degree,
        "determinant": abs(delta(-1)),
    })
    return 0


def _cmd_zeros(args) -> int:
    w = _parse_cf(args.cf)
    zs = find_zeros(alexander_poly(w), args.tol)
    rep = zero_report(zs)
    _print({
        "cf": str(w),
        "zeros": [[z.real, z.imag] for z in zs.zeros],
        "residual_max": max(zs.residuals),
        "real_count_exact": zs.real_count_exact,
        "min_re": rep.min_re,
        "max_re": rep.max_re,
        "hoste_ok": rep.hoste_ok,
        "thm1_ok": rep.thm1_ok,
        "all_real": rep.all_real,
        "all_positive_real": rep.all_positive_real,
        "reciprocal_paired": rep.reciprocal_paired,
    })
    return 0


def _cmd_certify(args) -> int:
    w = _parse_cf(args.cf)
    bound = _parse_bound(args.bound)
    cert = lyapunov_certificate(w, args.side, bound, args.v)
    _print(cert.to_json_dict())
    return 0 if cert.certified else 1


def _verify_theorem1(w: CFWord) -> tuple[bool, dict]:
    lower = theorem_blocks(w, "t1-lower")
    upper = theorem_blocks(w, "t1-upper")
    rep = zero_report(find_zeros(alexander_poly(w)))
    ok = lower.lemma_ok and upper.lemma_ok and rep.thm1_ok
    return ok, {
        "lemma_ok_lower": lower.lemma_ok,
        "lemma_ok_upper": upper.lemma_ok,
        "min_re": rep.min_re,
        "max_re": rep.max_re,
        "strip_ok": rep.thm1_ok,
    }


def _verify_theorem2(w: CFWord) -> tuple[bool, dict]:
    if not classify(w).thm2_applicable:
        raise NotApplicableError(f"{w} is not an alternating-sign word")
    delta = alexander_poly(w)
    n_real = sturm_real_root_count(delta)
    n_pos = sturm_real_root_count(delta, 0, None)
    eigs = sorted(float(v) for v in np.linalg.eigvalsh(symmetric_companion(w)))
    zs = sorted(z.real for z in find_zeros(delta).zeros)
    eig_err = max(abs(a - b) for a, b in zip(eigs, zs))
    ok = bool(n_real == w.m and n_pos == w.m and eig_err < 1e-8)
    return ok, {
        "real_count": n_real,
        "positive_real_count": n_pos,
        "m": w.m,
        "eigenvalue_mismatch": eig_err,
    }


def _verify_theorem3(w: CFWord) -> tuple[bool, dict]:
    flags = classify(w)
    if not flags.thm3_applicable:
        raise NotApplicableError(f"{w} has adjacent entries with product 1")
    blocks = theorem_blocks(w, "t3")
    rep = zero_report(find_zeros(alexander_poly(w)))
    ok = blocks.lemma_ok and rep.min_re > -1.0
    detail = {
        "lemma_ok": blocks.lemma_ok,
        "min_re": rep.min_re,
        "max_re": rep.max_re,
    }
    if flags.thm3_strong:
        cert = lyapunov_certificate(w, "upper", 3, "diag-a")
        detail["upper3_certified"] = cert.certified
        ok = ok and cert.certified and rep.max_re < 3.0
    return ok, detail


def _verify_theorem4(w: CFWord) -> tuple[bool, dict]:
    if not classify(w).fibered:
        raise NotApplicableError(f"{w} is not fibered")
    ok = theorem4_check(w)
    rep = zero_report(find_zeros(alexander_poly(w)))
    return ok, {"runs_and_blocks_ok": ok, "min_re": rep.min_re}


def _cmd_verify(args) -> int:
    w = _parse_cf(args.cf)
    handlers = {
        "1": _verify_theorem1,
        "2": _verify_theorem2,
        "3": _verify_theorem3,
        "4": _verify_theorem4,
    }
    ok, detail = handlers[args.theorem](w)
    _print({"cf": str(w), "theorem": int(args.theorem),
            "pass": ok, "detail": detail})
    return 0 if ok else 1


def _cmd_family(args) -> int:
    report = theorem5_verify(args.m, args.c)
    payload = report.to_json_dict()
    if args.remark2:
        if args.c != 1:
            print("--remark2 requires --c 1", file=sys.stderr)
            return 2
        payload["remark2_extremal"] = remark2_extremal(args.m)
    _print(payload)
    return 0 if report.all_ok else 1


def _cmd_sweep_cli(args) -> int:
    summary = cmd_sweep(args.max_m, args.max_a, args.out,
                        jobs=args.jobs, plot=args.plot)
    _print({
        "records": summary.records,
        "hoste_violations": summary.hoste_violations,
        "thm1_violations": summary.thm1_violations,
        "min_strip_margin": summary.min_margin,
        "out": args.out,
    })
    return 0 if summary.hoste_violations == 0 and summary.thm1_violations == 0 \
        else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alexzero",
        description="Two-bridge knot invariants and Alexander polynomial "
                    "zero-location certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="even continued-fraction expansion")
    p.add_argument("--frac", required=True, metavar="B/A")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("poly", help="exact Alexander polynomial")
    p.add_argument("--cf", required=True, metavar="LIST")
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("zeros", help="locate all zeros")
    p.add_argument("--cf", required=True, metavar="LIST")
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=_cmd_zeros)

    p = sub.add_parser("certify", help="Lyapunov bound certificate")
    p.add_argument("--cf", required=True, metavar="LIST")
    p.add_argument("--side", required=True, choices=["lower", "upper"])
    p.add_argument("--bound", required=True, metavar="K")
    p.add_argument("--v", default="identity", choices=["identity", "diag-a"])
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("verify", help="run one theorem's checks on a word")
    p.add_argument("--theorem", required=True, choices=["1", "2", "3", "4"])
    p.add_argument("--cf", required=True, metavar="LIST")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("family", help="constant-magnitude family report")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--remark2", action="store_true",
                   help="also report the largest zero of P_2m (c = 1)")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("sweep", help="enumerate words, write JSONL records")
    p.add_argument("--max-m", type=int, required=True, dest="max_m")
    p.add_argument("--max-a", type=int, required=True, dest="max_a")
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--plot", default=None, metavar="FILE.csv")
    p.set_defaults(func=_cmd_sweep_cli)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SweepViolationError as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 1
    except NoConvergenceError as exc:
        print(f"root finding failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, NotApplicableError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
