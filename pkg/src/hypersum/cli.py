"""Command-line front end.

    hypersum verify IDENTITY [parameters]
    hypersum fuzz IDENTITY --trials N --seed S [--threads T]
    hypersum show-polynomial {qhat,qvc} [parameters]
    hypersum selftest

Exit codes: 0 all passed, 1 an identity failed, 2 usage error, 3 degenerate parameters.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, TextIO

from . import fuzz, parametric
from .errors import DegenerateParameter, HypersumError, ProvisoViolated
from .exact import format_rational, parse_rational
from .fuzz import DEFAULT_MAX_M, DEFAULT_RESAMPLE_CAP, IDENTITIES, ResampleCapExceeded
from .parametric import ParametricContext
from .polynomials import poly_to_text
from .records import VerificationRecord, serialize_value

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _one(args, name: str, default=None, required=True):
    values = getattr(args, name)
    if not values:
        if required and default is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")
        return default
    if len(values) > 1:
        raise UsageError(f"--{name} takes a single value here")
    return values[0]


def _many(args, name: str) -> list:
    return list(getattr(args, name) or [])


def _int_n(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    if args.n.denominator != 1 or args.n < 0:
        raise UsageError("--n must be a non-negative integer for this identity")
    return int(args.n)


def _shifts(args, max_m: int):
    f_list, m_list = _many(args, "f"), _many(args, "m")
    if len(f_list) != len(m_list):
        raise UsageError("--f and --m must be given the same number of times")
    if any(m < 1 for m in m_list):
        raise UsageError("--m values must be positive integers")
    if sum(m_list) > max_m:
        raise UsageError(f"total m = {sum(m_list)} exceeds --max-m {max_m}")
    return f_list, m_list


def _order(args, default: int) -> int:
    return default if args.order is None else args.order


def _p(args, default: int | None = None) -> int:
    if args.p is None:
        if default is None:
            raise UsageError("--p is required")
        return default
    return args.p


def _build_classical(args, max_m):
    return {"a": _one(args, "a"), "b": _one(args, "b"), "c": _one(args, "c"), "n": _int_n(args)}


def _build_contiguous(args, max_m):
    return {**_build_classical(args, max_m), "p": _p(args)}


def _build_extended(args, max_m):
    f_list, m_list = _shifts(args, max_m)
    return {**_build_classical(args, max_m), "f_list": f_list, "m_list": m_list}


def _build_linear(args, max_m):
    return {**_build_classical(args, max_m), "f": _one(args, "f")}


def _build_vc(args, max_m):
    f_list, m_list = _shifts(args, max_m)
    return {"a": _one(args, "a"), "c": _one(args, "c"), "f_list": f_list, "m_list": m_list, "n": _int_n(args)}


def _build_ramanujan(args, max_m):
    if args.n is None:
        raise UsageError("--n is required")
    f_list, m_list = _shifts(args, max_m)
    return {"p": _p(args), "n": args.n, "f_list": f_list, "m_list": m_list, "order": _order(args, 20)}


def _build_ramanujan_closed(args, max_m):
    if args.n is None:
        raise UsageError("--n is required")
    return {"p": _p(args), "n": args.n, "f": _one(args, "f", required=False), "order": _order(args, 20)}


def _build_4f3(args, max_m):
    return {"a": _one(args, "a"), "b": _one(args, "b"), "n": _int_n(args)}


def _build_rearrangement(args, max_m):
    params = fuzz.kampe.KdFParams(
        alpha=_many(args, "alpha"),
        beta=_many(args, "beta"),
        a=_many(args, "a"),
        b=_many(args, "b"),
        c=_many(args, "c"),
        d=_many(args, "d"),
    )
    return {"params": params, "order": _order(args, 12), "x_sign": args.x_sign, "y_sign": args.y_sign}


def _build_first(args, max_m):
    f_list, m_list = _shifts(args, max_m)
    return {
        "alpha": _many(args, "alpha"),
        "beta": _many(args, "beta"),
        "a": _one(args, "a"),
        "b": _one(args, "b"),
        "c": _one(args, "c"),
        "f_list": f_list,
        "m_list": m_list,
        "order": _order(args, 16),
    }


def _build_exton(args, max_m):
    return {
        "alpha": _many(args, "alpha"),
        "beta": _many(args, "beta"),
        "a": _one(args, "a"),
        "b": _one(args, "b"),
        "order": _order(args, 16),
    }


def _build_second(args, max_m):
    f_list, m_list = _shifts(args, max_m)
    return {
        "alpha": _one(args, "alpha"),
        "beta": _one(args, "beta"),
        "a": _one(args, "a"),
        "c": _one(args, "c"),
        "d": _one(args, "d"),
        "f_list": f_list,
        "m_list": m_list,
        "order": _order(args, 16),
    }


def _build_second_closed(args, max_m):
    return {
        "alpha": _one(args, "alpha"),
        "beta": _one(args, "beta"),
        "a": _one(args, "a"),
        "c": _one(args, "c"),
        "d": _one(args, "d"),
        "f": _one(args, "f", required=False),
        "order": _order(args, 16),
    }


def _build_miller(args, max_m):
    f_list, m_list = _shifts(args, max_m)
    return {
        "alpha": _many(args, "alpha"),
        "beta": _many(args, "beta"),
        "a": _one(args, "a"),
        "b": _one(args, "b"),
        "f_list": f_list,
        "m_list": m_list,
        "order": _order(args, 16),
    }


def _build_euler(args, max_m):
    return {"a": _one(args, "a"), "b": _one(args, "b"), "c": _one(args, "c"), "order": _order(args, 16)}


BUILDERS: dict[str, Callable] = {
    "saalschutz-classical": _build_classical,
    "saalschutz-contiguous": _build_contiguous,
    "extended-saalschutz": _build_extended,
    "extended-saalschutz-linear": _build_linear,
    "extended-vandermonde-chu": _build_vc,
    "ramanujan-extension": _build_ramanujan,
    "ramanujan-closed-form": _build_ramanujan_closed,
    "known-4f3": _build_4f3,
    "kdf-rearrangement": _build_rearrangement,
    "first-reduction": _build_first,
    "exton-reduction": _build_exton,
    "second-reduction": _build_second,
    "second-reduction-closed-form": _build_second_closed,
    "miller-reduction": _build_miller,
    "euler-transformation": _build_euler,
}
assert set(BUILDERS) == set(IDENTITIES)

POLYNOMIAL_KIND = {
    "extended-saalschutz": "qhat",
    "first-reduction": "qhat",
    "extended-vandermonde-chu": "qvc",
    "second-reduction": "qvc",
}


def _add_parameter_flags(p: argparse.ArgumentParser) -> None:
    for name in ("a", "b", "c", "d", "alpha", "beta", "f"):
        p.add_argument(f"--{name}", type=_rational, action="append", metavar="P/Q")
    p.add_argument("--m", type=int, action="append", help="shift paired with the matching --f")
    p.add_argument("--n", type=_rational, metavar="P/Q")
    p.add_argument("--p", type=int, choices=range(0, 64), metavar="INT")
    p.add_argument("--order", type=int)
    p.add_argument("--max-m", type=int, default=DEFAULT_MAX_M)
    p.add_argument("--x-sign", type=int, choices=(1, -1), default=1)
    p.add_argument("--y-sign", type=int, choices=(1, -1), default=1)
    p.add_argument("--json", action="store_true", help="emit JSON lines")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypersum", description="Exact verification of hypergeometric identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="check one identity at explicit parameters")
    verify.add_argument("identity", choices=sorted(IDENTITIES))
    _add_parameter_flags(verify)
    verify.add_argument("--show-polynomial", action="store_true", help="also print the parametric polynomial")

    fz = sub.add_parser("fuzz", help="seeded random campaign for one identity")
    fz.add_argument("identity", choices=sorted(IDENTITIES))
    _add_parameter_flags(fz)
    fz.add_argument("--trials", type=int, default=100)
    fz.add_argument("--seed", type=int, default=0)
    fz.add_argument("--threads", type=int, default=1)
    fz.add_argument("--resample-cap", type=int, default=DEFAULT_RESAMPLE_CAP)

    show = sub.add_parser("show-polynomial", help="print Q_hat (qhat) or the Vandermonde-Chu Q (qvc)")
    show.add_argument("kind", choices=("qhat", "qvc"))
    _add_parameter_flags(show)

    st = sub.add_parser("selftest", help="run the acceptance checks")
    st.add_argument("--json", action="store_true")
    return parser


def _human(record: VerificationRecord) -> str:
    data = record.to_json()
    status = "PASS" if record.passed else "FAIL"
    inputs = " ".join(f"{k}={json.dumps(v) if isinstance(v, list) else v}" for k, v in data["inputs"].items())
    line = f"{status} {record.identity} {inputs}"
    if isinstance(data["lhs"], str):
        line += f" lhs={data['lhs']} rhs={data['rhs']}"
    if record.mismatch:
        line += f" mismatch_at={record.mismatch['index']}"
    if data["notes"]:
        line += f" [{data['notes']}]"
    return line


def _emit(record: VerificationRecord, as_json: bool, out: TextIO) -> None:
    out.write((record.to_json_line() if as_json else _human(record)) + "\n")


def _degenerate_report(identity: str, exc: Exception, as_json: bool, out: TextIO) -> None:
    locus = getattr(exc, "locus", {})
    if as_json:
        payload = {"identity": identity, "error": type(exc).__name__, "message": str(exc), "locus": serialize_value(locus)}
        out.write(json.dumps(payload, separators=(",", ":")) + "\n")
    else:
        out.write(f"DEGENERATE {identity}: {exc}\n")


def _polynomial_payload(kind: str, kwargs: dict) -> dict:
    f_list, m_list = kwargs.get("f_list", []), kwargs.get("m_list", [])
    if kind == "qhat":
        ctx = ParametricContext(kwargs["a"], kwargs["b"], kwargs["c"], tuple(f_list), tuple(m_list))
        poly = parametric.q_hat_polynomial(ctx)
        inputs = ctx.to_json()
    else:
        a, c = kwargs["a"], kwargs["c"]
        m = sum(m_list)
        poly = parametric.q_vc_polynomial(a, c - a - m, f_list, m_list)
        inputs = {"a": format_rational(a), "c": format_rational(c), "f": serialize_value(f_list), "m": list(m_list)}
    m = sum(m_list)
    return {
        "polynomial": kind,
        "inputs": inputs,
        "coefficients": [format_rational(x) for x in poly.coeffs],
        "text": poly_to_text(poly),
        "degree_drop": parametric.has_degree_drop(poly, m),
    }


def _write_polynomial(payload: dict, as_json: bool, out: TextIO) -> None:
    if as_json:
        out.write(json.dumps(payload, separators=(",", ":")) + "\n")
    else:
        flag = " (degree drop)" if payload["degree_drop"] else ""
        out.write(f"{payload['polynomial']}(t) = {payload['text']}{flag}\n")


def _cmd_verify(args, out: TextIO) -> int:
    kwargs = BUILDERS[args.identity](args, args.max_m)
    spec = IDENTITIES[args.identity]
    if not args.json:
        out.write(f"# {spec.name}: {spec.anchor}\n")
    try:
        record = spec.verifier(**kwargs)
        if args.show_polynomial:
            kind = POLYNOMIAL_KIND.get(args.identity)
            if kind is None:
                raise UsageError(f"--show-polynomial is not available for {args.identity}")
            _write_polynomial(_polynomial_payload(kind, kwargs), args.json, out)
    except (DegenerateParameter, ProvisoViolated) as exc:
        _degenerate_report(args.identity, exc, args.json, out)
        return EXIT_DEGENERATE
    _emit(record, args.json, out)
    return EXIT_PASS if record.passed else EXIT_FAIL


def _cmd_fuzz(args, out: TextIO) -> int:
    opts = {"p": args.p, "order": args.order, "max_m": args.max_m}
    if args.n is not None:
        if args.identity in ("ramanujan-extension", "ramanujan-closed-form"):
            opts["n"] = args.n
        else:
            opts["n"] = _int_n(args)
    spec = IDENTITIES[args.identity]
    if not args.json:
        out.write(f"# {spec.name}: {spec.anchor}\n")
    try:
        records = fuzz.run_fuzz(
            args.identity,
            args.trials,
            args.seed,
            threads=args.threads,
            opts=opts,
            resample_cap=args.resample_cap,
        )
    except ResampleCapExceeded as exc:
        _degenerate_report(args.identity, exc, args.json, out)
        return EXIT_DEGENERATE
    for record in records:
        _emit(record, args.json, out)
    failed = sum(not r.passed for r in records)
    if not args.json:
        out.write(f"# {len(records) - failed}/{len(records)} passed\n")
    return EXIT_PASS if not failed else EXIT_FAIL


def _cmd_show(args, out: TextIO) -> int:
    f_list, m_list = _shifts(args, args.max_m)
    kwargs = {"a": _one(args, "a"), "c": _one(args, "c"), "f_list": f_list, "m_list": m_list}
    if args.kind == "qhat":
        kwargs["b"] = _one(args, "b")
    try:
        payload = _polynomial_payload(args.kind, kwargs)
    except DegenerateParameter as exc:
        _degenerate_report(args.kind, exc, args.json, out)
        return EXIT_DEGENERATE
    _write_polynomial(payload, args.json, out)
    return EXIT_PASS


def _cmd_selftest(args, out: TextIO) -> int:
    from .acceptance import run_all

    results = run_all()
    for res in results:
        if args.json:
            out.write(json.dumps(res.to_json(), separators=(",", ":")) + "\n")
        else:
            status = "PASS" if res.passed else "FAIL"
            out.write(f"{status} [{res.number:>2}] {res.title} ({res.seconds:.1f}s) {res.detail}\n")
    return EXIT_PASS if all(r.passed for r in results) else EXIT_FAIL


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"verify": _cmd_verify, "fuzz": _cmd_fuzz, "show-polynomial": _cmd_show, "selftest": _cmd_selftest}
    try:
        return handlers[args.command](args, out)
    except UsageError as exc:
        parser.exit(EXIT_USAGE, f"hypersum: error: {exc}\n")
    except (DegenerateParameter, ProvisoViolated) as exc:
        _degenerate_report(getattr(args, "identity", args.command), exc, getattr(args, "json", False), out)
        return EXIT_DEGENERATE
    except HypersumError as exc:
        out.write(f"hypersum: {exc}\n")
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
