"""Command-line entry point: ``superjack <group> <command> ...``.

Results go to standard output (or ``--out``), progress of sweep suites to
standard error.  Exit status is 0 when everything computed or verified, 1 on
a verification mismatch, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .algebra.ratfunc import pformat
from .combinatorics import Composition, Superpartition, all_superpartitions, conjugate, format_star
from .identities import configurations, extended, recurrences, triangular
from .jack import (
    c_min_closed,
    c_min_factors,
    c_min_via_expansion,
    jack_super,
    norm_rhs,
    sector_basis,
    verify_equacmin2,
    verify_lemma2,
    verify_sector_norms,
)
from .nonsym import E, enumerate_admissible

JOBS_ENV = "SUPERJACK_JOBS"


class UsageError(Exception):
    pass


def _default_jobs():
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(int(raw), 1)
    except ValueError:
        return 1


def _superpartition(text):
    try:
        return Superpartition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _composition(text):
    body = text.strip().strip("()")
    try:
        parts = tuple(int(x) for x in body.split(",") if x.strip())
        return Composition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a composition: {text!r}") from exc


def _gamma(text):
    try:
        return triangular.parse_gamma(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _factored(factors, latex=False):
    var = r"\alpha" if latex else "alpha"
    if not factors:
        return "1"
    body = "".join(f"({pformat((c, a), var, latex)})" for a, c in factors)
    return rf"\frac{{1}}{{{body}}}" if latex else f"1/({body})"


class Output:
    """Collects text lines or a JSON payload and writes them at the end."""

    def __init__(self, fmt, path=None):
        self.fmt = fmt
        self.path = path
        self.lines = []
        self.payload = None

    def line(self, text=""):
        self.lines.append(text)

    def data(self, obj):
        self.payload = obj

    def flush(self):
        if self.fmt == "json":
            text = json.dumps(self.payload, indent=2, sort_keys=True) + "\n"
        else:
            text = "\n".join(self.lines) + ("\n" if self.lines else "")
        if self.path:
            with open(self.path, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def progress(msg):
    print(msg, file=sys.stderr, flush=True)


# jack


def cmd_jack_expand(args, out):
    sp = args.superpartition
    N = args.N
    if N is not None and N < sp.length:
        raise UsageError(f"--N {N} is smaller than the length {sp.length} of {sp}")
    J = jack_super(sp, N, jobs=args.jobs)
    latex = args.format == "latex"
    if args.format == "json":
        out.data(J.to_json())
        return 0
    out.line(f"J_{sp} with N={J.N}")
    for key, c in J.sorted_items():
        if latex:
            out.line(rf"\left({c.format(True)}\right) m_{{{key}}}")
        else:
            out.line(f"({c.format()}) * m{key}")
    return 0


def cmd_jack_cmin(args, out):
    sp = args.superpartition
    latex = args.format == "latex"
    closed = c_min_closed(sp)
    conf = configurations.c_min_via_configurations(sp)
    ok = conf == closed
    exp = None
    if args.expansion:
        exp = c_min_via_expansion(sp, jobs=args.jobs)
        ok = ok and exp == closed
    if args.format == "json":
        payload = {
            "superpartition": str(sp),
            "closed": closed.to_json(),
            "configurations": conf.to_json(),
            "agree": ok,
        }
        if exp is not None:
            payload["expansion"] = exp.to_json()
        out.data(payload)
    else:
        out.line(f"c_min{sp} = {_factored(c_min_factors(sp), latex)}")
        out.line(f"expanded: {closed.format(latex)}")
        out.line(f"configuration sum: {conf.format(latex)}  [{'match' if conf == closed else 'MISMATCH'}]")
        if exp is not None:
            out.line(f"symmetrized expansion: {exp.format(latex)}  [{'match' if exp == closed else 'MISMATCH'}]")
    return 0 if ok else 1


def cmd_jack_norm(args, out):
    sp = args.superpartition
    n, m = sp.sector()
    basis = sector_basis(n, m)
    J = jack_super(sp, basis.N).m_basis
    got = basis.pairing(J, J)
    want = norm_rhs(sp, signed=args.signed)
    ok = got == want
    latex = args.format == "latex"
    if args.format == "json":
        out.data({"superpartition": str(sp), "norm": got.to_json(), "formula": want.to_json(), "signed": args.signed, "agree": ok})
    else:
        out.line(f"<<J|J>> = {got.format(latex)}")
        label = "signed formula" if args.signed else "formula"
        out.line(f"{label}: {want.format(latex)}  [{'match' if ok else 'MISMATCH'}]")
    return 0 if ok else 1


def cmd_superpartition_info(args, out):
    sp = args.superpartition
    n, m = sp.sector()
    d = sp.diagram
    if args.format == "json":
        out.data({"superpartition": str(sp), "n": n, "m": m, "star": format_star(sp),
                  "conjugate": str(conjugate(sp)), "diagram": d.render().split("\n")})
        return 0
    out.line(f"superpartition: {sp}  (n={n}, m={m})")
    out.line(f"star: {format_star(sp)}")
    out.line(f"conjugate: {conjugate(sp)}")
    out.line("diagram:")
    for row in d.render().split("\n"):
        out.line("  " + row)
    return 0


# nonsym and tableaux


def cmd_nonsym_E(args, out):
    eta = args.eta
    p = E(eta, jobs=args.jobs)
    if args.format == "json":
        out.data({"eta": list(eta.parts), "poly": p.to_json()})
    else:
        out.line(p.format(args.format == "latex"))
    return 0


def cmd_tableaux_list(args, out):
    tabs = [T.format() for T in enumerate_admissible(args.eta)]
    if args.format == "json":
        out.data({"eta": list(args.eta.parts), "tableaux": tabs})
    else:
        for t in tabs:
            out.line(t)
    return 0


# identities


def cmd_identity_sigma(args, out):
    gamma = args.gamma
    ok, d = triangular.identity2_check(gamma)
    latex = args.format == "latex"
    if args.format == "json":
        out.data({"gamma": triangular.gamma_str(gamma), "sigma": d["sigma"].to_json(), "holds": ok})
    else:
        out.line(d["sigma"].format(latex))
        if not ok:
            out.line(f"MISMATCH: expected {d['product'].format(latex)}")
    return 0 if ok else 1


def cmd_identity_det(args, out):
    if args.gamma is not None:
        gamma = args.gamma
    elif args.m is not None:
        if args.m < 1:
            raise UsageError("--m must be at least 1")
        gamma = (0,) * (args.m - 1)
    else:
        raise UsageError("identity det needs --m or --gamma")
    ok, d = triangular.det_check(gamma)
    latex = args.format == "latex"
    if args.format == "json":
        out.data({"gamma": triangular.gamma_str(gamma), "det": d["det"].to_json(), "holds": ok})
    else:
        out.line(d["det"].format(latex))
        if not ok:
            out.line("MISMATCH between Sigma, Sigma_pi and det M")
    return 0 if ok else 1


def _suite_identity2(max_m):
    for m in range(1, max_m + 1):
        for g in triangular.all_gammas(m):
            ok, d = triangular.identity2_check(g)
            if not ok:
                return False, f"gamma={triangular.gamma_str(g)}: sigma = {d['sigma']}"
    return True, None


def _suite_lgv(max_m):
    for m in range(1, max_m + 1):
        for g in triangular.all_gammas(m):
            ok, _ = triangular.det_check(g)
            if not ok:
                return False, f"gamma={triangular.gamma_str(g)}: Sigma, Sigma_pi, det M differ"
            ok, t, _ = triangular.lgv_involution_check(g)
            if not ok:
                return False, f"gamma={triangular.gamma_str(g)}: involution fails at {t}"
    return True, None


def _suite_iota(max_m):
    for m in range(2, max_m + 1):
        for g in triangular.all_gammas(m):
            if not any(g):
                continue
            ok, t, _ = triangular.iota_check(g)
            if not ok:
                return False, f"gamma={triangular.gamma_str(g)}: iota fails at {t}"
    return True, None


def _suite_recurrences(max_k=3, max_index=7):
    for name, fn in (("recurrences", recurrences.recurrence_check), ("interpolation", recurrences.interp_check)):
        ok, bad = fn(max_k, max_index)
        if not ok:
            return False, f"{name}: first failure at {bad[0]}"
    if not recurrences.staircase_check(max_index):
        return False, "staircase values"
    return True, None


def _suite_row_reduction(max_m):
    for m in range(1, max_m + 1):
        _, report = recurrences.row_reduce_determinant(m)
        if not all(v for k, v in report.items() if k != "factors"):
            return False, f"m={m}: {report}"
    return True, None


def _suite_appendix(max_k=3, max_index=7):
    ok, bad, _ = extended.double_count_suite(max_k, max_index)
    return ok, (None if ok else f"(j,i,k)={bad[0][0]}: {bad[0][1]}")


def _suite_configs(max_m, max_degree=8):
    for sp in all_superpartitions(max_degree):
        if sp.m > max_m:
            continue
        if not configurations.HookLinearization.of(sp).check():
            return False, f"hook linearization fails for {sp}"
        if not configurations.identity1_check(sp)[0]:
            return False, f"Identity 1 fails for {sp}"
        ok, why = configurations.bijection_check(sp)
        if not ok:
            return False, f"bijection fails for {sp}: {why}"
    return True, None


SUITES = {
    "identity2": lambda a: _suite_identity2(a.max_m),
    "lgv": lambda a: _suite_lgv(a.max_m),
    "iota": lambda a: _suite_iota(a.max_m),
    "recurrences": lambda a: _suite_recurrences(),
    "rowreduce": lambda a: _suite_row_reduction(a.max_m),
    "appendix": lambda a: _suite_appendix(),
    "configs": lambda a: _suite_configs(min(a.max_m, 4)),
}


def _run_suites(names, args, out):
    failed = False
    results = {}
    for name in names:
        t0 = time.perf_counter()
        progress(f"running {name} ...")
        ok, why = SUITES[name](args)
        progress(f"  {name}: {'ok' if ok else 'FAIL'} ({time.perf_counter() - t0:.1f}s)")
        results[name] = {"holds": ok, "counterexample": why}
        out.line(f"{name}: {'PASS' if ok else 'FAIL'}" + (f"  {why}" if why else ""))
        failed = failed or not ok
    if args.format == "json":
        out.data(results)
    return 1 if failed else 0


def cmd_identity_check(args, out):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    return _run_suites(names, args, out)


def cmd_identity_rowreduce(args, out):
    if args.gamma is None:
        raise UsageError("identity rowreduce needs --gamma")
    res = recurrences.general_row_reduction(args.gamma)
    exact = sum(1 for *_, ok in res["log"] if ok)
    if args.format == "json":
        out.data({"gamma": triangular.gamma_str(args.gamma), "log": [list(x) for x in res["log"]]})
    else:
        out.line(f"gamma={triangular.gamma_str(args.gamma)}: {exact}/{len(res['log'])} stage divisions exact (experiment)")
        for k, j, ok in res["log"]:
            out.line(f"  stage {k} row {j}: {'exact' if ok else 'not exact'}")
    return 0


# selftest


def cmd_selftest(args, out):
    D, M = args.max_degree, args.max_m
    sps = [sp for sp in all_superpartitions(D) if sp.m <= M]
    checks = []

    def record(name, ok, why=None):
        checks.append((name, ok, why))
        progress(f"  {name}: {'ok' if ok else 'FAIL'}")

    ex = Superpartition.parse("(3,1,0;5,3,2)")
    record("fixtures", format_star(ex) == "(5,3,3,2,1,0)" and str(conjugate(ex)) == "(5,4,1;3,1)")
    bad = [sp for sp in all_superpartitions(min(D, 6)) if conjugate(conjugate(sp)) != sp]
    record("conjugation involution", not bad, bad[:1])
    bad = [sp for sp in sps if not verify_lemma2(sp)[0]]
    record("hooklength factorization", not bad, bad[:1])
    bad = [sp for sp in sps if c_min_via_expansion(sp, jobs=args.jobs) != c_min_closed(sp)]
    record("minimal coefficient (expansion)", not bad, [str(x) for x in bad[:1]])
    bad = [sp for sp in sps if not verify_equacmin2(sp, with_expansion=False)[0]]
    record("minimal coefficient (configurations)", not bad, [str(x) for x in bad[:1]])
    bad = [sp for sp in sps if sp.degree <= 5 and not configurations.verify_config_reduction(sp)[0]]
    record("configuration reduction", not bad, [str(x) for x in bad[:1]])
    literal = 0
    signed_bad = []
    for n in range(min(D, 4) + 1):
        for m in range(M + 1):
            if m * (m - 1) // 2 > n:
                continue
            literal += len(verify_sector_norms(n, m))
            signed_bad += verify_sector_norms(n, m, signed=True)
    record("orthogonality and signed norm", not signed_bad, [str(x[0]) for x in signed_bad[:1]])
    for name in ("identity2", "lgv", "iota", "configs"):
        ok, why = SUITES[name](args)
        record(name, ok, why)
    if D >= 4:
        for name in ("recurrences", "appendix"):
            ok, why = SUITES[name](args)
            record(name, ok, why)
    failed = [c for c in checks if not c[1]]
    for name, ok, why in checks:
        out.line(f"{name}: {'PASS' if ok else 'FAIL'}" + (f"  counterexample: {why}" if not ok and why else ""))
    out.line(f"note: unsigned norm formula differs in {literal} diagonal entries (sign (-1)^(m(m-1)/2))")
    if args.format == "json":
        out.data({"checks": [{"name": n, "holds": ok, "counterexample": str(w) if w else None} for n, ok, w in checks],
                  "unsigned_norm_mismatches": literal})
    return 1 if failed else 0


# parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "latex"], default="text")
    common.add_argument("--out", help="write results to this file instead of standard output")
    common.add_argument("--jobs", type=int, default=_default_jobs(), help=f"worker processes (default ${JOBS_ENV} or 1)")

    parser = argparse.ArgumentParser(prog="superjack", description="Jack polynomials in superspace, exactly.")
    groups = parser.add_subparsers(dest="group", required=True)

    jack = groups.add_parser("jack", help="Jack polynomials in superspace").add_subparsers(dest="command", required=True)
    p = jack.add_parser("expand", parents=[common], help="monomial expansion of J_Lambda")
    p.add_argument("superpartition", type=_superpartition)
    p.add_argument("--N", type=int, default=None)
    p.set_defaults(func=cmd_jack_expand)
    p = jack.add_parser("cmin", parents=[common], help="minimal coefficient, closed form and configuration sum")
    p.add_argument("superpartition", type=_superpartition)
    p.add_argument("--expansion", action="store_true", help="also symmetrize the tableau formula (small cases)")
    p.set_defaults(func=cmd_jack_cmin)
    p = jack.add_parser("norm", parents=[common], help="<<J|J>> against the closed norm")
    p.add_argument("superpartition", type=_superpartition)
    p.add_argument("--signed", action="store_true", help="include the factor (-1)^(m(m-1)/2) in the formula")
    p.set_defaults(func=cmd_jack_norm)

    spg = groups.add_parser("superpartition", help="superpartition data").add_subparsers(dest="command", required=True)
    p = spg.add_parser("info", parents=[common], help="star, conjugate and circled diagram")
    p.add_argument("superpartition", type=_superpartition)
    p.set_defaults(func=cmd_superpartition_info)

    nonsym = groups.add_parser("nonsym", help="non-symmetric Jack polynomials").add_subparsers(dest="command", required=True)
    p = nonsym.add_parser("E", parents=[common], help="E_eta from admissible tableaux")
    p.add_argument("eta", type=_composition)
    p.set_defaults(func=cmd_nonsym_E)

    tab = groups.add_parser("tableaux", help="admissible tableaux").add_subparsers(dest="command", required=True)
    p = tab.add_parser("list", parents=[common], help="one tableau per line, rows joined by '/'")
    p.add_argument("eta", type=_composition)
    p.set_defaults(func=cmd_tableaux_list)

    ident = groups.add_parser("identity", help="partition identities").add_subparsers(dest="command", required=True)
    p = ident.add_parser("sigma", parents=[common], help="Sigma(gamma) after substitution")
    p.add_argument("--gamma", type=_gamma, required=True)
    p.set_defaults(func=cmd_identity_sigma)
    p = ident.add_parser("det", parents=[common], help="det M(gamma) with free indeterminates")
    p.add_argument("--m", type=int)
    p.add_argument("--gamma", type=_gamma)
    p.set_defaults(func=cmd_identity_det)
    p = ident.add_parser("check", parents=[common], help="exhaustive verification suites")
    p.add_argument("--suite", choices=["all"] + list(SUITES), default="all")
    p.add_argument("--max-m", type=int, default=5)
    p.set_defaults(func=cmd_identity_check)
    p = ident.add_parser("rowreduce", parents=[common], help="general-gamma row reduction experiment")
    p.add_argument("--gamma", type=_gamma)
    p.set_defaults(func=cmd_identity_rowreduce)

    p = groups.add_parser("selftest", parents=[common], help="run the exhaustive suites at the given sizes")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--max-m", type=int, default=3)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format, args.out)
    try:
        code = args.func(args, out)
    except (UsageError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
