"""Command-line interface.

Subcommands: classify, linearize, compare, scan, verify, witness.  All numeric
input is exact "p/q" text; output values are exact, with an optional decimal
rendering (15 significant digits) that is explicitly marked approximate.

Exit codes: 0 success / property holds, 1 property violated or methods
disagree (witness printed), 2 usage or range error (message on stderr).
"""

import argparse
import csv
import json
import re
import sys
from fractions import Fraction

from .analysis import (
    SCAN_MODES,
    VERDICT_VIOLATION,
    find_negativity_witness,
    iota_zero_count,
    necessity_identity_values,
    phi_sequence,
    pq_inequality_check,
    scan_sign_pattern,
)
from .gencheb import linearize_gencheb
from .hypergeom import SingularSeriesError, dougall_coefficient, rahman_coefficient
from .jacobi import (
    FAMILY_GENCHEB,
    FAMILY_JACOBI,
    FAMILY_JACOBI_PLUS,
    gasper_boundary,
    linearize_bruteforce,
    linearize_jacobi,
    linearize_jacobi_plus,
    theta_iota_kappa,
)
from .params import classify_region, make_params

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")

_VALUE_OPTIONS = {
    "--alpha",
    "--beta",
    "--m",
    "--n",
    "--s",
    "--max-degree",
    "--family",
    "--method",
    "--format",
    "--check",
    "--property",
}


def _rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise argparse.ArgumentTypeError(
            f"not an exact rational: {text!r} (write an integer or p/q)"
        )
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}") from None


def _natural(text: str) -> int:
    if not re.match(r"^\+?\d+$", text):
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    return int(text)


def fmt_exact(v: Fraction) -> str:
    return str(v)


def fmt_approx(v: Fraction) -> str:
    return f"{float(v):.15g}"


def _merge_value_options(argv: list[str]) -> list[str]:
    # argparse rejects option values that start with "-" unless they look like
    # plain negative numbers, so "--alpha -33/100" needs joining into one token.
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTIONS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _params_from(ns) -> "JacobiParams":
    return make_params(ns.alpha, ns.beta)


def _record(command: str, ns, payload, verdict=None) -> dict:
    rec = {
        "command": command,
        "params": {"alpha": fmt_exact(ns.alpha), "beta": fmt_exact(ns.beta)},
        "payload": payload,
    }
    if verdict is not None:
        rec["verdict"] = verdict
    return rec


def _emit_json(rec: dict) -> None:
    print(json.dumps(rec, ensure_ascii=False, indent=2))


# ---------------------------------------------------------------- classify


def _cmd_classify(ns) -> int:
    p = _params_from(ns)
    rep = classify_region(p)
    payload = {
        "a": fmt_exact(p.a),
        "b": fmt_exact(p.b),
        "in_Delta": rep.in_delta,
        "in_Delta_interior": rep.in_delta_interior,
        "in_V": rep.in_v,
        "in_V_interior": rep.in_v_interior,
        "in_Vprime": rep.in_vprime,
        "above_iota_threshold": rep.above_iota_threshold,
        "on_iota_threshold": rep.on_iota_threshold,
        "label": rep.label.value,
    }
    if ns.json:
        _emit_json(_record("classify", ns, payload, verdict=rep.label.value))
    else:
        print(f"alpha = {fmt_exact(ns.alpha)}   beta = {fmt_exact(ns.beta)}")
        print(f"a = {fmt_exact(p.a)}   b = {fmt_exact(p.b)}")
        for key in (
            "in_Delta",
            "in_Delta_interior",
            "in_V",
            "in_V_interior",
            "in_Vprime",
            "above_iota_threshold",
            "on_iota_threshold",
        ):
            print(f"{key} = {payload[key]}")
        print(f"label: {rep.label.value}")
    return 0


# ---------------------------------------------------------------- linearize


def _linearize_vector(ns, p):
    family = ns.family
    method = ns.method
    if family == "gencheb":
        if method == "gasper":
            return linearize_gencheb(p, ns.m, ns.n)
        if method == "brute":
            return linearize_bruteforce(p, ns.m, ns.n, FAMILY_GENCHEB)
        raise ValueError(f"method {method!r} does not apply to the gencheb family")
    if family == "jacobi-plus":
        if method == "gasper":
            return linearize_jacobi_plus(p, ns.m, ns.n)
        if method == "brute":
            return linearize_bruteforce(p, ns.m, ns.n, FAMILY_JACOBI_PLUS)
        raise ValueError(f"method {method!r} does not apply to the jacobi-plus family")
    if method == "gasper":
        return linearize_jacobi(p, ns.m, ns.n)
    if method == "brute":
        return linearize_bruteforce(p, ns.m, ns.n, FAMILY_JACOBI)
    if method == "rahman":
        m, n = min(ns.m, ns.n), max(ns.m, ns.n)
        if m == 0:
            return linearize_jacobi(p, m, n)
        s = n - m
        vals = tuple(rahman_coefficient(p, m, s, j) for j in range(2 * m + 1))
        from .jacobi import CoeffVector

        return CoeffVector(m, n, FAMILY_JACOBI, vals)
    if method == "dougall":
        if p.alpha != p.beta:
            raise ValueError("method dougall needs alpha = beta")
        return dougall_coefficient(p.alpha, ns.m, ns.n)
    raise ValueError(f"unknown method {method!r}")


def _cmd_linearize(ns) -> int:
    p = _params_from(ns)
    cv = _linearize_vector(ns, p)
    rows = [
        {"m": cv.m, "n": cv.n, "k": k, "num": v.numerator, "den": v.denominator,
         "approx": fmt_approx(v)}
        for k, v in cv.items()
    ]
    if ns.format == "json":
        payload = {
            "family": ns.family,
            "method": ns.method,
            "m": cv.m,
            "n": cv.n,
            "coefficients": rows,
        }
        _emit_json(_record("linearize", ns, payload))
    elif ns.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["m", "n", "k", "value_num", "value_den", "approx"])
        for r in rows:
            writer.writerow([r["m"], r["n"], r["k"], r["num"], r["den"], r["approx"]])
    else:
        print(
            f"{ns.family} linearization, method {ns.method}, "
            f"m={cv.m} n={cv.n}, alpha={fmt_exact(ns.alpha)} beta={fmt_exact(ns.beta)}"
        )
        for k, v in cv.items():
            print(f"k={k}: {fmt_exact(v)} (approx {fmt_approx(v)})")
    return 0


# ---------------------------------------------------------------- compare


def _cmd_compare(ns) -> int:
    p = _params_from(ns)
    region = classify_region(p)
    mismatches = []
    entries = 0
    skipped = 0
    use_rahman = p.a > 0 and p.b > 0
    use_dougall = p.alpha == p.beta and p.alpha > Fraction(-1, 2)
    for n in range(ns.max_degree + 1):
        for m in range(n + 1):
            ref = linearize_jacobi(p, m, n)
            brute = linearize_bruteforce(p, m, n, FAMILY_JACOBI)
            entries += len(ref.values)
            if ref.values != brute.values:
                mismatches.append(("jacobi", m, n, "gasper-vs-brute"))
            refp = linearize_jacobi_plus(p, m, n)
            brutep = linearize_bruteforce(p, m, n, FAMILY_JACOBI_PLUS)
            entries += len(refp.values)
            if refp.values != brutep.values:
                mismatches.append(("jacobi_plus", m, n, "gasper-vs-brute"))
            gt = linearize_gencheb(p, m, n)
            gtb = linearize_bruteforce(p, m, n, FAMILY_GENCHEB)
            entries += len(gt.values)
            if gt.values != gtb.values:
                mismatches.append(("gencheb", m, n, "assembly-vs-brute"))
            if use_rahman and 1 <= m:
                s = n - m
                for j in range(2 * m + 1):
                    entries += 1
                    try:
                        rc = rahman_coefficient(p, m, s, j)
                    except SingularSeriesError:
                        skipped += 1
                        continue
                    if rc != ref[s + j]:
                        mismatches.append(("jacobi", m, n, f"rahman k={s + j}"))
            if use_dougall:
                dv = dougall_coefficient(p.alpha, m, n)
                entries += len(dv.values)
                if dv.values != ref.values:
                    mismatches.append(("jacobi", m, n, "dougall"))
    agree = not mismatches
    payload = {
        "max_degree": ns.max_degree,
        "region": region.label.value,
        "methods": ["gasper", "brute"]
        + (["rahman"] if use_rahman else [])
        + (["dougall"] if use_dougall else []),
        "entries_checked": entries,
        "entries_skipped_singular": skipped,
        "mismatches": [list(t) for t in mismatches],
    }
    if ns.json:
        _emit_json(_record("compare", ns, payload, verdict="agree" if agree else "disagree"))
    else:
        print(
            f"compared methods {payload['methods']} up to degree {ns.max_degree}: "
            f"{entries} entries, {skipped} skipped (singular closed form)"
        )
        if agree:
            print("all methods agree exactly")
        else:
            for t in mismatches:
                print(f"MISMATCH {t}")
    return 0 if agree else 1


# ---------------------------------------------------------------- scan


_CHECK_TO_MODE = {
    "nonneg": "jacobi_nonneg",
    "strict": "jacobi_strict",
    "all": "gencheb_all",
    "odd": "gencheb_odd",
    "oscillation": "oscillation",
}


def _cmd_scan(ns) -> int:
    p = _params_from(ns)
    mode = _CHECK_TO_MODE[ns.check]
    rep = scan_sign_pattern(p, ns.max_degree, mode)
    payload = {
        "mode": mode,
        "max_degree": ns.max_degree,
        "verdict": rep.verdict,
        "min_value": fmt_exact(rep.min_value),
        "min_value_approx": fmt_approx(rep.min_value),
        "witness": list(rep.witness) if rep.witness else None,
        "witness_value": fmt_exact(rep.witness_value) if rep.witness_value is not None else None,
    }
    if ns.json:
        _emit_json(_record("scan", ns, payload, verdict=rep.verdict))
    else:
        print(f"mode: {mode}   degrees scanned: 0..{ns.max_degree}")
        print(f"min value: {fmt_exact(rep.min_value)} (approx {fmt_approx(rep.min_value)})")
        if rep.verdict == VERDICT_VIOLATION:
            m, n, k = rep.witness
            print(f"violation at ({m},{n},{k}) value {fmt_exact(rep.witness_value)}")
        else:
            print(f"verdict: {rep.verdict}")
    return 1 if rep.verdict == VERDICT_VIOLATION else 0


# ---------------------------------------------------------------- verify


def _verify_pq(p, ns, details):
    ms = [ns.m] if ns.m is not None else [2, 3, 4]
    ss = [ns.s] if ns.s is not None else [0, 1, 2, 3]
    ok = True
    for m in ms:
        for s in ss:
            checks = pq_inequality_check(p, m, s)
            good = all(checks)
            ok = ok and good
            details.append(f"m={m} s={s}: chained inequality {'holds' if good else 'FAILS'}")
    return ok


def _verify_phi(p, ns, details):
    ms = [ns.m] if ns.m is not None else [1, 2, 3, 4]
    ss = [ns.s] if ns.s is not None else [0, 1, 2, 3]
    ok = True
    for m in ms:
        for s in ss:
            seq = phi_sequence(p, m, s)
            good = seq.alternation_holds()
            if m >= 2:
                from .analysis import pq_values

                for j in range(1, 2 * m):
                    rec = pq_values(p, m, s, j)
                    if seq.value(j + 1) != rec.p + rec.q / seq.value(j):
                        good = False
            ok = ok and good
            details.append(f"m={m} s={s}: alternation {'holds' if good else 'FAILS'}")
    return ok


def _verify_iota(p, ns, details):
    ms = [ns.m] if ns.m is not None else [1, 2, 3, 4, 5]
    ss = [ns.s] if ns.s is not None else [0, 1, 2, 3]
    rep = classify_region(p)
    if p.b == 0:
        details.append("b = 0: iota vanishes identically (degenerate); nothing to count")
        return True
    counts = {(m, s): iota_zero_count(p, m, s) for m in ms for s in ss}
    if rep.above_iota_threshold:
        ok = all(c <= 1 for c in counts.values())
        for (m, s), c in counts.items():
            details.append(f"m={m} s={s}: {c} zero(s)")
        details.append("above threshold: expected at most one zero each")
    else:
        ok = any(c >= 2 for c in counts.values())
        for (m, s), c in counts.items():
            details.append(f"m={m} s={s}: {c} zero(s)")
        details.append("below threshold: expected some count >= 2 in range")
    return ok


def _verify_recursion(p, ns, details):
    ms = [ns.m] if ns.m is not None else [1, 2, 3, 4, 5]
    ss = [ns.s] if ns.s is not None else [0, 1, 2, 3]
    ok = True
    for m in ms:
        for s in ss:
            cv = linearize_jacobi(p, m, m + s)
            lo, lo1, hi1, hi = gasper_boundary(p, m, s)
            good = (
                cv[s] == lo and cv[s + 1] == lo1
                and cv[s + 2 * m - 1] == hi1 and cv[s + 2 * m] == hi
            )
            for j in range(1, 2 * m):
                theta, iota, kappa = theta_iota_kappa(p, m, s, j)
                if theta * cv[s + j + 1] != iota * cv[s + j] + kappa * cv[s + j - 1]:
                    good = False
            if sum(cv.values) != 1:
                good = False
            ok = ok and good
            details.append(f"m={m} s={s}: recursion identity {'holds' if good else 'FAILS'}")
    return ok


def _verify_nec(p, ns, details):
    ms = [ns.m] if ns.m is not None else [1, 2, 3, 4]
    ss = [ns.s] if ns.s is not None else [0, 1, 2, 3]
    ok = True
    for m in ms:
        for s in ss:
            first, second = necessity_identity_values(p, m, s)
            good = first[0] == first[1]
            note = ""
            if second is None:
                note = " (second skipped: b = 1)"
            else:
                good = good and second[0] == second[1]
            ok = ok and good
            details.append(f"m={m} s={s}: identities {'hold' if good else 'FAIL'}{note}")
    return ok


_PROPERTIES = {
    "pq-inequality": _verify_pq,
    "phi-alternation": _verify_phi,
    "iota-zeros": _verify_iota,
    "recursion-consistency": _verify_recursion,
    "nec-identities": _verify_nec,
}


def _cmd_verify(ns) -> int:
    p = _params_from(ns)
    details: list[str] = []
    ok = _PROPERTIES[ns.property](p, ns, details)
    verdict = "pass" if ok else "fail"
    if ns.json:
        payload = {"property": ns.property, "details": details, "verdict": verdict}
        _emit_json(_record("verify", ns, payload, verdict=verdict))
    else:
        print(f"property {ns.property} at alpha={fmt_exact(ns.alpha)} beta={fmt_exact(ns.beta)}")
        for line in details:
            print("  " + line)
        print(f"{ns.property}: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


# ---------------------------------------------------------------- witness


def _cmd_witness(ns) -> int:
    p = _params_from(ns)
    w = find_negativity_witness(p, ns.max_degree)
    if ns.json:
        payload = {
            "max_degree": ns.max_degree,
            "witness": list(w[:3]) if w else None,
            "value": fmt_exact(w[3]) if w else None,
        }
        _emit_json(_record("witness", ns, payload, verdict="found" if w else "none"))
    elif w:
        m, n, k, v = w
        print(f"negative coefficient: gencheb (m={m}, n={n}, k={k}) value {fmt_exact(v)} "
              f"(approx {fmt_approx(v)})")
    else:
        print(f"no negative coefficient found in the guided families up to degree {ns.max_degree}")
    return 1 if w else 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacobilin",
        description="Exact linearization coefficients for Jacobi and generalized "
        "Chebyshev polynomials, with region classification and sign scans.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_params(sp):
        sp.add_argument("--alpha", type=_rational, required=True)
        sp.add_argument("--beta", type=_rational, required=True)

    sp = sub.add_parser("classify", help="exact region membership of a parameter point")
    add_params(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("linearize", help="one product expansion, all methods")
    add_params(sp)
    sp.add_argument("--family", choices=["jacobi", "jacobi-plus", "gencheb"],
                    default="jacobi")
    sp.add_argument("--m", type=_natural, required=True)
    sp.add_argument("--n", type=_natural, required=True)
    sp.add_argument("--method", choices=["gasper", "brute", "rahman", "dougall"],
                    default="gasper")
    sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sp.set_defaults(func=_cmd_linearize)

    sp = sub.add_parser("compare", help="cross-check all applicable methods")
    add_params(sp)
    sp.add_argument("--max-degree", type=_natural, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_compare)

    sp = sub.add_parser("scan", help="exhaustive sign scan of a coefficient family")
    add_params(sp)
    sp.add_argument("--check", choices=sorted(_CHECK_TO_MODE), required=True)
    sp.add_argument("--max-degree", type=_natural, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_scan)

    sp = sub.add_parser("verify", help="verify a structural property at one point")
    add_params(sp)
    sp.add_argument("--property", choices=sorted(_PROPERTIES), required=True)
    sp.add_argument("--m", type=_natural, default=None)
    sp.add_argument("--s", type=_natural, default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("witness", help="search the guided families for a negative entry")
    add_params(sp)
    sp.add_argument("--max-degree", type=_natural, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_witness)

    return parser


def run_command(argv: list[str]) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(_merge_value_options(list(argv)))
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return ns.func(ns)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
