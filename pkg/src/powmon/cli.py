"""Command-line front end: construct, verify, experiment.

Reports are line-oriented TSV plus a summary block.  For a fixed
configuration (including seed) the report body is byte-identical across
runs; wall-clock timestamps appear only in the header, and the per-pair
elapsed column of experiment records is the one run-dependent field
outside it.

Exit status: 0 when every gated assertion passed (expected
counterexamples are findings, not failures), 1 on an assertion failure,
2 on a usage or input error.
"""

import argparse
import sys
import time

from .census import census_monoids, groups_catalog, run_experiment
from .errors import PowmonError
from .monoid import (cyclic_group, cyclic_monoid, dihedral_group, direct_product,
                     format_table, idempotent_monoid2, klein_group,
                     parse_table_file, quaternion_group, standard_group)
from .powerset import format_subset, mask_of, parse_subset
from .suites import SUITES, suite_section4
from .verify import CheckResult, count_equation_solutions

USAGE_ERROR = 2


def parse_monoid_spec(spec):
    """Compact monoid spec: z6, d4, klein, q8, idem2, cmon2.2, z2xz3."""
    s = spec.strip().lower()
    if "x" in s and not s.startswith("x"):
        parts = s.split("x")
        if all(parts):
            acc = parse_monoid_spec(parts[0])
            for p in parts[1:]:
                acc = direct_product(acc, parse_monoid_spec(p))
            return acc
    if s == "klein":
        return klein_group()
    if s in ("q8", "quaternion8"):
        return quaternion_group()
    if s == "idem2":
        return idempotent_monoid2()
    if s.startswith("cmon"):
        body = s[4:]
        for sep in (".", ","):
            if sep in body:
                i, p = body.split(sep, 1)
                return cyclic_monoid(int(i), int(p))
    if s.startswith("z") and s[1:].isdigit():
        return cyclic_group(int(s[1:]))
    if s.startswith("d") and s[1:].isdigit():
        return dihedral_group(int(s[1:]))
    raise ValueError(f"unrecognized monoid spec {spec!r} "
                     "(try z6, d4, klein, q8, idem2, cmon2.2, z2xz3)")


class Report:
    def __init__(self, out, title, config):
        self.fh = open(out, "w") if out else sys.stdout
        self.close_needed = out is not None
        self.emit(f"# powmon {title}")
        self.emit(f"# config: {config}")
        self.emit(f"# generated: {time.strftime('%Y-%m-%dT%H:%M:%S')}")

    def emit(self, line=""):
        print(line, file=self.fh)

    def done(self):
        if self.close_needed:
            self.fh.close()


def _describe(m, report):
    report.emit(f"name: {m.name}")
    report.emit(format_table(m).rstrip("\n"))
    report.emit("identity: " + str(m.identity))
    report.emit("orders: " + " ".join(str(o) for o in m.orders()))
    report.emit("cancellative elements: " + (format_subset(mask_of(m.cancellative_elements(), m.n))
                                             if m.cancellative_elements() else "(none)"))
    report.emit("units: " + format_subset(mask_of(m.units(), m.n)))
    report.emit(f"group: {str(m.is_group()).lower()}")
    report.emit(f"commutative: {str(m.is_commutative()).lower()}")


def cmd_construct(args):
    spec = args.spec
    if spec[0] == "cyclic" and len(spec) == 3:
        m = cyclic_monoid(int(spec[1]), int(spec[2]))
    elif spec[0] == "named" and len(spec) >= 2:
        m = standard_group(" ".join(spec[1:]))
    elif spec[0] == "table" and len(spec) == 2:
        m = parse_table_file(spec[1])
    else:
        raise ValueError("construct expects: cyclic I P | named SPEC | table PATH")
    report = Report(args.out, "construct " + " ".join(spec), _config(args))
    _describe(m, report)
    report.done()
    return 0


def _config(args):
    keys = ("max_order", "group_max", "budget", "jobs", "seed", "universe")
    parts = []
    for k in keys:
        if getattr(args, k, None) is not None:
            parts.append(f"{k.replace('_', '-')}={getattr(args, k)}")
    return " ".join(parts) or "(defaults)"


def _run_suite(name, kwargs):
    return SUITES[name](**kwargs)


def _suite_kwargs(name, args):
    mo = args.max_order
    gm = args.group_max
    if name == "lemma21":
        return {"max_order": mo or 5}
    if name == "lemma22":
        return {"census_max": mo or 4, "group_max": gm or 8}
    if name in ("lemma24", "prop25"):
        return {"group_max": gm or mo or 8}
    if name == "lemma31":
        return {"max_order": mo or 4}
    if name == "thm32":
        return {"census_max": mo or 4, "group_max": gm or 6, "budget": args.budget}
    if name == "section4":
        return {"group_max": gm or mo or 6, "budget": args.budget}
    raise ValueError(name)


def cmd_verify(args):
    report = Report(args.out, f"verify {args.suite}", _config(args))
    findings = 0
    failures = 0

    def run_one(rep):
        nonlocal findings, failures
        for line in rep.lines():
            report.emit(line)
        failures += len(rep.failures)
        findings += sum(len(r.findings) for r in rep.results)
        findings += sum(1 for r in rep.results
                        if r.checker == "expected_violation" and not r.failed)

    if args.pair:
        try:
            ha, kb = args.pair.split(":", 1)
            h, k = parse_monoid_spec(ha), parse_monoid_spec(kb)
        except ValueError as exc:
            raise ValueError(f"bad --pair: {exc}")
        rep = suite_section4(budget=args.budget, pair=(h, k))
        run_one(rep)
    elif args.suite == "lemma31" and args.monoid:
        m = parse_monoid_spec(args.monoid)
        s_mask = parse_subset(args.subset, m.n) if args.subset else (1 << m.n) - 1
        sc = count_equation_solutions(m, s_mask, args.n, args.universe)
        ok = not sc.bound_applies or sc.count >= sc.bound
        rec = CheckResult("equation_solutions",
                          f"{m.name} S={format_subset(s_mask)} n={args.n} {args.universe}",
                          "pass" if ok else "fail",
                          f"count={sc.count} bound={sc.bound} "
                          f"solutions=" + " ".join(format_subset(a) for a in sc.solutions))
        report.emit(rec.line())
        report.emit(f"# summary: suite=lemma31 cases=1 failures={0 if ok else 1}")
        failures += 0 if ok else 1
    elif args.suite == "all":
        names = list(SUITES)
        if args.jobs and args.jobs > 1:
            from concurrent.futures import ProcessPoolExecutor
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                futures = [pool.submit(_run_suite, n, _suite_kwargs(n, args)) for n in names]
                for fut in futures:       # report order fixed regardless of scheduling
                    run_one(fut.result())
        else:
            for name in names:
                run_one(SUITES[name](**_suite_kwargs(name, args)))
    else:
        run_one(SUITES[args.suite](**_suite_kwargs(args.suite, args)))

    if args.expect_violation and findings == 0:
        report.emit("# expect-violation: FAILED (no violation finding occurred)")
        report.done()
        return 1
    if args.expect_violation:
        report.emit(f"# expect-violation: ok ({findings} findings)")
    report.done()
    return 1 if failures else 0


def cmd_experiment(args):
    max_order = args.max_order or (6 if args.mode == "groups" else 2)
    if args.mode == "groups":
        entries = groups_catalog(max_order)
    else:
        entries = census_monoids(max_order)
    records, summary = run_experiment(entries, mode=args.mode,
                                      budget=args.budget, jobs=args.jobs or 1)
    report = Report(args.out, f"experiment {args.mode}", _config(args))
    report.emit("pair\tH\tK\tbase_iso\tpower_iso\tpullback_ok\tcardinality_preserving\telapsed")
    for r in records:
        report.emit(r.line())
    for line in summary.lines():
        report.emit("# " + line)
    # exceptions between cancellative pairs contradict the theorem and fail
    # the run; others (the known counterexamples) are findings
    gated_failures = [r for r in summary.exceptions
                      if entries[r.pair[0]].tags["cancellative"]
                      and entries[r.pair[1]].tags["cancellative"]]
    hard_fail = bool(gated_failures or summary.pullback_failures)
    if args.expect_violation:
        ok = bool(summary.exceptions)
        report.emit(f"# expect-violation: {'ok' if ok else 'FAILED (no exception observed)'}")
        report.done()
        return 0 if ok and not hard_fail else 1
    report.done()
    return 1 if hard_fail else 0


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="powmon",
        description="Finite monoids, their reduced power monoids, and the "
                    "checkers and experiments over them.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build and describe a monoid")
    p.add_argument("spec", nargs="+",
                   help="cyclic I P | named GROUPSPEC | table PATH")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["all"] + sorted(SUITES))
    p.add_argument("--max-order", type=int, default=None, dest="max_order")
    p.add_argument("--group-max", type=int, default=None, dest="group_max")
    p.add_argument("--budget", type=int, default=5_000_000)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.add_argument("--pair", default=None, help="single pair, e.g. z2:idem2")
    p.add_argument("--monoid", default=None, help="lemma31 single-case monoid spec")
    p.add_argument("--subset", default=None, help="lemma31 subset literal, e.g. 0,1")
    p.add_argument("--n", type=int, default=3, help="lemma31 exponent")
    p.add_argument("--universe", choices=["full", "reduced"], default="full")
    p.add_argument("--expect-violation", action="store_true", dest="expect_violation")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("experiment", help="pairwise census experiment")
    p.add_argument("mode", choices=["groups", "monoids"])
    p.add_argument("--max-order", type=int, default=None, dest="max_order")
    p.add_argument("--budget", type=int, default=5_000_000)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.add_argument("--expect-violation", action="store_true", dest="expect_violation")
    p.set_defaults(fn=cmd_experiment)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (PowmonError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
