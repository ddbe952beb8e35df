"""Command-line front end.

Subcommands: ``schur``, ``ring-eval``, ``hr-check``, ``nef2``, ``hi2``,
``logconcave``, ``hl-scan``, ``paper-repro``.  Exit codes: 0 success,
1 repro-suite failure, 2 input validation error, 3 precondition violation.

Output is fully computed before anything is printed, so validation errors
never leave partial output behind; with ``--machine`` every report is a
deterministic block of ``key=value`` lines.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import repro
from .certify import (
    Nef2Coefficients,
    hi2_check,
    hl_failure_scan,
    nef2_membership,
    schur_logconcavity_report,
)
from .chernpoly import derived_schur, format_poly, schur
from .errors import PreconditionError, ScenarioError, ValidationError
from .forms import PQForm, hodge_riemann_verdict, schur_form, wedge
from .partitions import Partition
from .rings import chern, derived_schur_class, format_class, integrate, schur_class
from .scenario import Scenario, parse


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _read_scenario(path: str) -> Scenario:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse(fh.read())
    except OSError as exc:
        raise ValidationError(f"cannot read scenario file {path!r}: {exc}")


def _require_task(sc: Scenario, name: str) -> dict:
    if name not in sc.tasks:
        raise ValidationError(f"scenario has no [task {name}] section")
    return sc.tasks[name]


def _parse_fraction_arg(text: str) -> Fraction:
    try:
        if "." in text or "e" in text.lower():
            raise ValueError
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"bad rational literal {text!r} (floats are rejected)")


# -- subcommand implementations ------------------------------------------


def _cmd_schur(args) -> list[str]:
    lam = Partition.parse(args.partition)
    if args.derived is None:
        poly = schur(lam, args.rank)
    else:
        poly = derived_schur(lam, args.rank, args.derived)
    if args.machine:
        return [f"polynomial={format_poly(poly)}"]
    return [format_poly(poly)]


def _cmd_ring_eval(args) -> list[str]:
    sc = _read_scenario(args.scenario)
    model = sc.model()
    bundle = sc.bundle(model)
    d = model.dimension
    lines = [f"model={model!r}", f"dimension={d}", f"rank={bundle.rank}"]
    for p in range(0, min(bundle.rank, d) + 1):
        lines.append(f"c{p}={format_class(chern(bundle, p))}")
    task = sc.tasks.get("ring-eval", {})
    for lam in task.get("schur", []):
        cls = schur_class(bundle, lam)
        lines.append(f"schur({lam.format()})={format_class(cls)}")
        if cls.grade == d:
            lines.append(f"integral(schur({lam.format()}))={integrate(cls)}")
    for lam, order in task.get("derived", []):
        cls = derived_schur_class(bundle, lam, order)
        lines.append(f"derived({lam.format()};{order})={format_class(cls)}")
        if cls.grade == d:
            lines.append(f"integral(derived({lam.format()};{order}))={integrate(cls)}")
    return lines


def _build_hr_form(sc: Scenario, task: dict) -> tuple[PQForm, "HermitianOneOne"]:
    from .forms import HermitianOneOne  # local alias for typing only

    if "dimension" not in task:
        raise ValidationError("[task hr-check] needs a dimension")
    d = task["dimension"]
    if "reference" not in task:
        raise ValidationError("[task hr-check] needs a reference form")
    reference = sc.hermitian(task["reference"])
    if reference.dim != d:
        raise ValidationError("reference form does not match the declared dimension")
    if ("combination" in task) == ("schur" in task):
        raise ValidationError(
            "[task hr-check] needs exactly one of 'combination' or 'schur'"
        )
    if "combination" in task:
        total: PQForm | None = None
        for coeff, factors in task["combination"]:
            term = PQForm.one(d) * coeff
            for name, power in factors:
                form = sc.hermitian(name)
                if form.dim != d:
                    raise ValidationError(f"form {name!r} has the wrong dimension")
                term = wedge(term, form.to_form() ** power)
            total = term if total is None else total + term
        omega = total
    else:
        names = task.get("forms")
        if not names:
            raise ValidationError("'schur' needs a 'forms' list")
        omegas = []
        for name in names:
            form = sc.hermitian(name)
            if form.dim != d:
                raise ValidationError(f"form {name!r} has the wrong dimension")
            omegas.append(form.to_form())
        omega = schur_form(task["schur"], omegas)
    if (omega.p, omega.q) != (d - 2, d - 2):
        raise PreconditionError(
            f"the certified pairing needs a ({d - 2},{d - 2})-form, "
            f"got bidegree ({omega.p},{omega.q})"
        )
    return omega, reference


def _cmd_hr_check(args) -> list[str]:
    sc = _read_scenario(args.scenario)
    task = _require_task(sc, "hr-check")
    omega, reference = _build_hr_form(sc, task)
    rep = hodge_riemann_verdict(omega, reference)
    lines = [
        f"inertia=({rep.n_plus},{rep.n_zero},{rep.n_minus})",
        f"positivity={rep.positivity_scalar}",
        f"hr={_bool(rep.hr_flag)}",
        f"hl={_bool(rep.hl_flag)}",
    ]
    if args.machine:
        return lines
    return [
        f"pairing inertia          (n+, n0, n-) = {rep}",
        f"positivity integral      {rep.positivity_scalar}",
        f"hodge-riemann            {_bool(rep.hr_flag)}",
        f"hard-lefschetz           {_bool(rep.hl_flag)}",
    ]


def _cmd_nef2(args) -> list[str]:
    coeffs = Nef2Coefficients.of(*(_parse_fraction_arg(a) for a in args.coefficients))
    verdict = nef2_membership(coeffs)
    boundary = verdict.member and any(eq for _, _, eq in verdict.conditions)
    lines = [
        f"member={_bool(verdict.member)}",
        f"boundary={_bool(boundary)}",
        f"quartic_identically_zero={_bool(verdict.quartic_identically_zero)}",
        "failed=[" + ",".join(verdict.failed) + "]",
    ]
    for name, holds, equality in verdict.conditions:
        lines.append(f"condition.{name}={_bool(holds)}")
        lines.append(f"condition.{name}.equality={_bool(equality)}")
    if args.machine:
        return lines
    text = [
        f"member={_bool(verdict.member)} boundary={_bool(boundary)}",
    ]
    for name, holds, equality in verdict.conditions:
        note = " (equality)" if holds and equality else ""
        text.append(f"  condition {name:<13} {_bool(holds)}{note}")
    if verdict.failed:
        text.append("failed=[" + ",".join(verdict.failed) + "]")
    return text


def _cmd_hi2(args) -> list[str]:
    sc = _read_scenario(args.scenario)
    task = _require_task(sc, "hi2")
    model = sc.model()
    bundle = sc.bundle(model)
    if "h" not in task or "alpha" not in task:
        raise ValidationError("[task hi2] needs 'h' and 'alpha'")
    h = model.degree_one(task["h"])
    alpha = model.degree_one(task["alpha"])
    res = hi2_check(bundle, h, alpha)
    lines = [
        f"lhs={res.lhs}",
        f"rhs={res.rhs}",
        f"holds={_bool(res.holds)}",
        f"equality={_bool(res.equality)}",
        f"alpha_zero={_bool(res.alpha_is_zero)}",
    ]
    if args.machine:
        return lines
    relation = "=" if res.equality else "<"
    return [
        f"mixed Chern-class inequality: {res.lhs} {relation} {res.rhs}",
        f"holds={_bool(res.holds)} equality={_bool(res.equality)} "
        f"alpha_zero={_bool(res.alpha_is_zero)}",
    ]


def _cmd_logconcave(args) -> list[str]:
    sc = _read_scenario(args.scenario)
    task = _require_task(sc, "logconcave")
    model = sc.model()
    bundle = sc.bundle(model)
    if "mu" not in task or "h" not in task:
        raise ValidationError("[task logconcave] needs 'mu' and 'h'")
    h = model.degree_one(task["h"])
    rep = schur_logconcavity_report(bundle, task["mu"], h)
    lines = [f"f({i})={v}" for i, v in enumerate(rep.values)]
    lines += [
        f"positive={_bool(rep.positive)}",
        f"midpoint={_bool(rep.midpoint_ok)}",
        f"chord={_bool(rep.chord_ok)}",
        f"strict={_bool(rep.strict)}",
    ]
    for item in rep.counterexamples:
        lines.append(f"counterexample={item}")
    if args.machine:
        return lines
    text = ["i : f(i) = integral of the derived class times h^(d-i)"]
    text += [f"{i:>2} : {v}" for i, v in enumerate(rep.values)]
    text.append(
        f"positive={_bool(rep.positive)} midpoint={_bool(rep.midpoint_ok)} "
        f"chord={_bool(rep.chord_ok)} strict={_bool(rep.strict)}"
    )
    text += [f"counterexample candidate: {item}" for item in rep.counterexamples]
    return text


def _cmd_hl_scan(args) -> list[str]:
    width = _parse_fraction_arg(args.width)
    scan = hl_failure_scan(width)
    lo, hi = scan.interval
    sign = lambda v: "+" if v > 0 else ("-" if v < 0 else "0")  # noqa: E731
    lines = [
        f"det_first={scan.det_first}",
        f"det_first_sign={sign(scan.det_first)}",
        f"det_second={scan.det_second}",
        f"det_second_sign={sign(scan.det_second)}",
        f"interval=({lo},{hi})",
        f"width={hi - lo}",
    ]
    if args.machine:
        return lines
    return [
        f"det of the constant Gram:  {scan.det_first} (sign {sign(scan.det_first)})",
        f"det of the square Gram:    {scan.det_second} (sign {sign(scan.det_second)})",
        f"singular parameter inside  ({lo}, {hi})",
        f"interval width             {hi - lo}",
    ]


def _cmd_paper_repro(args) -> tuple[list[str], int]:
    examples = repro.all_examples()
    if args.list:
        lines = [f"{ex.example_id}: {ex.summary}" for ex in examples]
        return lines, 0
    lines = []
    failed = []
    for ex in examples:
        outcome = ex.run()
        if args.machine:
            lines.append(f"example={ex.example_id} status={'pass' if outcome.ok else 'fail'}")
        else:
            lines.append(f"{'PASS' if outcome.ok else 'FAIL'} {ex.example_id}")
        if not outcome.ok:
            failed.append(ex.example_id)
            for detail in outcome.details:
                lines.append(f"  {detail}" if not args.machine else f"detail={detail}")
    if args.machine:
        lines.append(f"overall={'pass' if not failed else 'fail'}")
    else:
        lines.append(
            "all examples passed"
            if not failed
            else "failing examples: " + ", ".join(failed)
        )
    return lines, 0 if not failed else 1


# -- argument parsing -----------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurcert",
        description="Exact certification of positivity properties of Schur classes.",
    )
    parser.add_argument(
        "--machine", action="store_true", help="emit machine-readable key=value lines"
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="master seed override for scenario-driven randomized tasks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schur", help="print a Schur or derived Schur polynomial")
    p.add_argument("partition", help="comma-separated parts, e.g. 2,1")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--derived", type=int, default=None, metavar="I")

    p = sub.add_parser("ring-eval", help="evaluate characteristic classes on a model")
    p.add_argument("scenario")

    p = sub.add_parser("hr-check", help="Hodge-Riemann verdict for a declared form")
    p.add_argument("scenario")

    p = sub.add_parser("nef2", help="membership in the codimension-2 nef cone")
    p.add_argument("coefficients", nargs=6, metavar="A")

    p = sub.add_parser("hi2", help="mixed Chern-class Hodge-Index inequality")
    p.add_argument("scenario")

    p = sub.add_parser("logconcave", help="strict log-concavity of Schur numbers")
    p.add_argument("scenario")

    p = sub.add_parser("hl-scan", help="scan the fixed grade-2 pencil for degeneracy")
    p.add_argument("--width", default="1/1000000", help="isolation width (rational)")

    p = sub.add_parser("paper-repro", help="run the fixed-example suite")
    p.add_argument("--list", action="store_true", help="list example ids and summaries")

    return parser


_COMMANDS = {
    "schur": _cmd_schur,
    "ring-eval": _cmd_ring_eval,
    "hr-check": _cmd_hr_check,
    "nef2": _cmd_nef2,
    "hi2": _cmd_hi2,
    "logconcave": _cmd_logconcave,
    "hl-scan": _cmd_hl_scan,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None and not 0 <= args.seed < 2**64:
        print("error: --seed must fit in an unsigned 64-bit value", file=sys.stderr)
        return 2
    try:
        if args.command == "paper-repro":
            lines, code = _cmd_paper_repro(args)
        else:
            lines = _COMMANDS[args.command](args)
            code = 0
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ZeroDivisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    for line in lines:
        print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
