"""Command-line entry point: ``symaut {forge,verify,recognize,units,model-check}``.

Exit status is 0 when every check passes, 1 when a check fails and 2 on a
usage or input error.  Negative integers in lists need the ``=`` form, e.g.
``--minpoly=-1,-2,1,1``.
"""

import argparse
import sys

from . import finmodel, matforms, serialize
from .construct import ConstructionError, forge, run_checks
from .numfield import (
    OrderError,
    fundamental_unit_quadratic,
    make_order,
    make_suborder,
    norm,
    quadratic_order,
    search_unit,
)

DEFAULT_SAMPLES = 10 ** 5


class UsageError(Exception):
    pass


def _int_list(text):
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _matrix_arg(text):
    return [_int_list(row) for row in text.split(";")]


def _order_from_args(args):
    try:
        if args.disc is not None:
            return quadratic_order(args.disc)
        return make_order(args.minpoly)
    except (OrderError, ValueError) as exc:
        raise UsageError(str(exc))


def _add_order_flags(p, required=True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--disc", type=int, metavar="D",
                   help="use Z[sqrt(D)] (the power-basis order, even when not maximal)")
    g.add_argument("--minpoly", type=_int_list, metavar="C0,C1,...",
                   help="monic minimal polynomial, constant term first")


def _add_mode_flags(p):
    p.add_argument("--exhaustive", action="store_true",
                   help="enumerate every tuple (falls back to sampling over budget)")
    p.add_argument("--samples", type=int, default=None, help="sample count")
    p.add_argument("--seed", type=int, default=0, help="sampling seed")
    p.add_argument("--budget", type=int, default=finmodel.DEFAULT_BUDGET)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="symaut",
        description="Forge and check symmetric-condition automorphisms over orders of totally real fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("forge", help="construct and certify an automorphism of X^n")
    _add_order_flags(p)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--sigma", type=_int_list, default=None, help="1-indexed images, e.g. 2,3,1")
    p.add_argument("--unit", type=_int_list, default=None, help="unit to use, power-basis coordinates")
    p.add_argument("--height-bound", type=int, default=2)
    p.add_argument("--max-exp", type=int, default=1000)
    p.add_argument("--suborder", type=_matrix_arg, default=None,
                   help="suborder basis rows, e.g. '1,0;0,2'")
    p.add_argument("-o", "--output", default=None, help="certificate path")

    p = sub.add_parser("verify", help="recheck a certificate file")
    p.add_argument("certificate")
    p.add_argument("--torsion", type=_int_list, default=None, help="moduli for finite-model checks")
    _add_mode_flags(p)

    p = sub.add_parser("recognize", help="decompose a matrix as sigma . circulant(f, g)")
    p.add_argument("matrix")

    p = sub.add_parser("units", help="print a unit certificate")
    _add_order_flags(p)
    p.add_argument("--bound", type=int, default=2, help="height bound for --minpoly search")

    p = sub.add_parser("model-check", help="finite-model descent/diagonal/naturality checks")
    p.add_argument("matrix")
    p.add_argument("--m", type=_int_list, required=True, help="moduli, e.g. 2,3,5")
    _add_mode_flags(p)
    p.add_argument("--json", dest="json_out", default=None, help="write the reports as JSON")
    return parser


def _fmt(e):
    return str(e)


def _summary(cert):
    D = cert.order.quadratic_radicand()
    label = f"Z[√{D}]" if D is not None else "Z[θ]"
    lines = [
        f"order     {label}, minpoly {list(cert.order.minpoly)} (constant first)",
        f"n         {cert.n}",
        f"alpha     {_fmt(cert.alpha.element)}  (inverse {_fmt(cert.alpha.inverse)})",
        f"exponents i = {cert.i}, j = {cert.j}",
        f"f         {_fmt(cert.f)}",
        f"g         {_fmt(cert.g)}",
        f"sigma     {serialize.perm_to_json(cert.sigma)}",
        f"det       {_fmt(cert.det_value)}  (inverse {_fmt(cert.det_inverse)})",
    ]
    lines.append(f"det norm  {norm(cert.det_value)}")
    lines.append("nonnatural: " + ("yes" if cert.checks.get("nonnatural") else "no"))
    for note in cert.unverified_assumptions:
        lines.append(f"assumption: {note}")
    return "\n".join(lines)


def _mode(args):
    if args.exhaustive:
        return "exhaustive"
    return ("sample", args.samples or DEFAULT_SAMPLES, args.seed)


def _run_model_suite(M, moduli, args, out, g=None):
    """Run the finite-model checks; returns (all_ok, reports)."""
    ok = True
    reports = []
    for m in moduli:
        model = finmodel.make_model(M.order, m)
        bij = finmodel.check_bijective(model, M)
        out.write(f"bijective [m={m}]: {'PASS' if bij else 'FAIL'}\n")
        ok &= bij
        checks = [finmodel.check_descent, finmodel.check_big_diagonal]
        if M.n >= 3:
            checks.append(finmodel.check_delta_prime)
        for check in checks:
            mode = _mode(args)
            try:
                rep = check(model, M, mode, budget=args.budget)
            except finmodel.BudgetExceeded:
                rep = check(model, M, ("sample", args.samples or DEFAULT_SAMPLES, args.seed))
            out.write(rep.to_text() + "\n")
            reports.append(rep.to_dict())
            ok &= rep.passed
        try:
            probe = finmodel.naturality_probe(model, M, budget=args.budget)
        except finmodel.BudgetExceeded:
            out.write(f"naturality_probe [m={m}]: skipped (over budget)\n")
            continue
        out.write(probe.to_text() + "\n")
        reports.append(probe.to_dict())
        if g is not None and any(c % m for c in g.coeffs) and probe.natural:
            ok = False
    return ok, reports


def cmd_forge(args, out):
    order = _order_from_args(args)
    sigma = None
    if args.sigma is not None:
        sigma = tuple(s - 1 for s in args.sigma)
        try:
            matforms.check_perm(sigma, args.n)
        except ValueError as exc:
            raise UsageError(str(exc))
    unit = None
    if args.unit is not None:
        try:
            unit = order.element(args.unit)
        except ValueError as exc:
            raise UsageError(str(exc))
    suborder = None
    if args.suborder is not None:
        try:
            suborder = make_suborder(order, args.suborder)
        except ValueError as exc:
            raise UsageError(str(exc))
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    try:
        cert = forge(order, args.n, unit=unit, height_bound=args.height_bound,
                     sigma=sigma, suborder=suborder, max_exp=args.max_exp)
    except ConstructionError as exc:
        out.write(f"forge failed: {exc}\n")
        return 1
    if args.output:
        serialize.save(serialize.certificate_to_dict(cert), args.output)
    out.write(_summary(cert) + "\n")
    return 0


def cmd_verify(args, out):
    try:
        cert = serialize.certificate_from_dict(serialize.load(args.certificate))
    except (OSError, serialize.CertificateFormatError) as exc:
        raise UsageError(str(exc))
    checks = run_checks(cert)
    ok = all(checks.values())
    for name, passed in checks.items():
        if not passed:
            out.write(f"FAILED: {name}\n")
    stale = [k for k, v in cert.checks.items() if checks.get(k) != v]
    if stale:
        out.write(f"note: stored check values disagree with recomputation: {', '.join(stale)}\n")
    out.write(f"certificate checks: {sum(checks.values())}/{len(checks)} passed\n")
    if args.torsion:
        model_ok, _ = _run_model_suite(cert.matrix, args.torsion, args, out, g=cert.g)
        ok &= model_ok
    out.write("verdict: " + ("PASS" if ok else "FAIL") + "\n")
    return 0 if ok else 1


def cmd_recognize(args, out):
    try:
        M = serialize.matrix_file_from_dict(serialize.load(args.matrix))
    except (OSError, serialize.CertificateFormatError) as exc:
        raise UsageError(str(exc))
    natural = matforms.is_natural_form(M)
    form = matforms.recognize_symmetric_form(M)
    if form is None:
        out.write("not of symmetric form\n")
    else:
        out.write(f"sigma = {serialize.perm_to_json(form.sigma)}\n")
        out.write(f"f = {_fmt(form.f)}\n")
        out.write(f"g = {_fmt(form.g)}\n")
        if form.convention:
            out.write(f"convention: {form.convention}\n")
    out.write("nonnatural: " + ("no" if natural else "yes") + "\n")
    return 0 if form is not None else 1


def cmd_units(args, out):
    order = _order_from_args(args)
    if args.disc is not None:
        cert = fundamental_unit_quadratic(args.disc)
    else:
        cert = search_unit(order, args.bound)
    if cert is None:
        out.write(f"no unit other than ±1 with height <= {args.bound}\n")
        return 1
    out.write(f"unit      {_fmt(cert.element)}\n")
    out.write(f"inverse   {_fmt(cert.inverse)}\n")
    out.write(f"charpoly constant {cert.charpoly_constant}\n")
    out.write(serialize.dumps({
        "order": serialize.order_to_json(order),
        "coeffs": serialize.element_to_json(cert.element),
        "inverse": serialize.element_to_json(cert.inverse),
        "charpoly_constant": str(cert.charpoly_constant)}))
    return 0 if cert.check() else 1


def cmd_model_check(args, out):
    try:
        M = serialize.matrix_file_from_dict(serialize.load(args.matrix))
    except (OSError, serialize.CertificateFormatError) as exc:
        raise UsageError(str(exc))
    if any(m < 2 for m in args.m):
        raise UsageError("moduli must be at least 2")
    ok, reports = _run_model_suite(M, args.m, args, out)
    if args.json_out:
        serialize.save({"reports": reports}, args.json_out)
    out.write("verdict: " + ("PASS" if ok else "FAIL") + "\n")
    return 0 if ok else 1


COMMANDS = {
    "forge": cmd_forge,
    "verify": cmd_verify,
    "recognize": cmd_recognize,
    "units": cmd_units,
    "model-check": cmd_model_check,
}


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"symaut {args.command}: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
