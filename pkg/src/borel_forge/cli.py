"""Command line interface: ``borel-forge <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .binomial import (check_filtration, filtration, gb_formulas, ideal_of, is_good,
                       normalize, validate_system, verify_chain)
from .combinat import TermOrder, borel_closure, borel_ge, borel_witness, enumerate_U, is_borel_set
from .config import load_config
from .errors import BorelForgeError, BudgetExceeded, CertificateMismatch, ParseError
from .generic import alpha, mu, p_rho, verify_alpha_shift, y_names
from .io import (emit_generators, emit_ideal, emit_monomial_ideal, emit_system, format_monomial,
                 parse_chain, parse_ideal, parse_system)
from .monomial import hilbert_function
from .generic import gin_certified
from .polyalg import default_names, saturate
from .suites import SUITES

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3


def _exponent(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.strip("[]() ").replace(",", " ").split())
    except ValueError:
        raise ParseError(f"bad exponent vector {text!r}") from None


def _load(path: str):
    try:
        return parse_ideal(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_system(path: str):
    try:
        return parse_system(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


class _Context:
    def __init__(self, args, out, err):
        cfg = load_config(args.config)
        self.cfg = cfg.with_overrides(seed=args.seed, entropy_bound=args.entropy_bound,
                                      retries=args.retries, bound=getattr(args, "bound", None))
        self.out = out
        self.err = err

    def print(self, text: str = ""):
        self.out.write(text if text.endswith("\n") else text + "\n")

    def diag(self, text: str):
        self.err.write(text + "\n")


def cmd_gb(ctx: _Context, args) -> int:
    f = _load(args.file)
    G = f.ideal.groebner(args.order, ctx.cfg.spair_budget)
    ctx.print(emit_ideal(f.ideal, f.names, G))
    return EXIT_OK


def cmd_init(ctx: _Context, args) -> int:
    f = _load(args.file)
    f.ideal.groebner(args.order, ctx.cfg.spair_budget)
    ctx.print(emit_monomial_ideal(f.ideal.initial_ideal(args.order), f.names))
    return EXIT_OK


def cmd_gin(ctx: _Context, args) -> int:
    f = _load(args.file)
    cfg = ctx.cfg
    try:
        res = gin_certified(f.ideal, args.order, cfg.seed, cfg.entropy_bound, cfg.retries,
                            cfg.spair_budget)
    except CertificateMismatch as exc:
        ctx.diag(f"certificate: FAILED ({exc})")
        for k, cand in enumerate(exc.candidates):
            ctx.diag(f"candidate {k}: " + ", ".join(format_monomial(a, f.names)
                                                   for a in cand.sorted_gens()))
        return EXIT_FAIL
    ctx.diag(f"certificate: seed {res.seed}, {res.draws} draws, Borel and two draws agree")
    ctx.print(emit_monomial_ideal(res.ideal, f.names))
    return EXIT_OK


def cmd_sat(ctx: _Context, args) -> int:
    f = _load(args.file)
    cfg = ctx.cfg
    S = saturate(f.ideal, cfg.seed, cfg.entropy_bound, cfg.retries, cfg.spair_budget)
    ctx.print(emit_ideal(S, f.names, S.groebner("rlex")))
    return EXIT_OK


def cmd_hilbert(ctx: _Context, args) -> int:
    f = _load(args.file)
    init = f.ideal.initial_ideal("rlex")
    data = hilbert_function(init, args.bound, with_polynomial=True)
    if args.quotient:
        for d, v in sorted(data.quotient().items()):
            ctx.print(f"{d}: {v}")
        ctx.print(f"poly: {data.polynomial}")
    else:
        for line in data.lines():
            ctx.print(line)
    return EXIT_OK


def _matrix_lines(M) -> list[str]:
    return ["  " + " ".join(str(x) for x in row) for row in M]


def cmd_borel(ctx: _Context, args) -> int:
    vecs = [_exponent(v) for v in args.vectors]
    if args.action == "ge":
        if len(vecs) != 2:
            raise ParseError("borel ge needs exactly two vectors")
        a, b = vecs
        ge = borel_ge(a, b)
        ctx.print("true" if ge else "false")
        if ge:
            ctx.print("witness:")
            for line in _matrix_lines(borel_witness(a, b)):
                ctx.print(line)
        return EXIT_OK
    if args.action == "enumerate":
        if len(vecs) != 2:
            raise ParseError("borel enumerate needs exactly two vectors")
        Us = enumerate_U(vecs[0], vecs[1], ctx.cfg.enum_budget)
        ctx.print(f"count: {len(Us)}")
        for M in Us:
            ctx.print(f"mu: {mu(M)}")
            for line in _matrix_lines(M):
                ctx.print(line)
        return EXIT_OK
    if args.action == "closure":
        closure = borel_closure(vecs)
        key = TermOrder.rlex(len(vecs[0])).key if vecs else None
        for a in sorted(closure, key=key, reverse=True):
            ctx.print(" ".join(map(str, a)))
        return EXIT_OK
    ok = is_borel_set(vecs)
    ctx.print("true" if ok else "false")
    return EXIT_OK


def cmd_bsys(ctx: _Context, args) -> int:
    sysm = _load_system(args.file)
    report = validate_system(sysm)
    if args.action == "validate":
        for line in report.lines():
            ctx.print(line)
        ctx.print(f"good: {'yes' if is_good(sysm) else 'no'}")
        return EXIT_OK if report.valid else EXIT_FAIL
    if not report.valid:
        for line in report.lines():
            ctx.diag(line)
        return EXIT_FAIL
    sysm, note = normalize(sysm)
    if note:
        ctx.diag(f"note: {note}")
    names = default_names(sysm.n)
    if args.action == "show":
        ctx.print(emit_system(sysm))
    elif args.action == "ideal":
        ctx.print(emit_ideal(ideal_of(sysm), names))
    elif args.action == "gb":
        f = gb_formulas(sysm)
        ctx.print("# Groebner basis of F (rlex, closed form)")
        for line in emit_generators(f.gb_rlex, names):
            ctx.print(line)
        ctx.print("# init_rlex F")
        for a in f.init_rlex.sorted_gens():
            ctx.print(f"gen {format_monomial(a, names)}")
        ctx.print("# Groebner basis of F^sat (rlex, closed form, not reduced)")
        for line in emit_generators(f.gb_rlex_sat, names):
            ctx.print(line)
    elif args.action == "filtration":
        for line in filtration(sysm, ctx.cfg.bound).lines():
            ctx.print(line)
    elif args.action == "check":
        rep = check_filtration(sysm, ctx.cfg.bound)
        for line in rep.lines():
            ctx.print(line)
        return EXIT_OK if rep.ok else EXIT_FAIL
    return EXIT_OK


def cmd_alpha(ctx: _Context, args) -> int:
    a, b = _exponent(args.a), _exponent(args.b)
    names = y_names(len(a))
    budget = ctx.cfg.enum_budget
    if args.rho is None:
        ctx.print(alpha(a, b, budget).to_str(names, "hlex"))
        return EXIT_OK
    rho = _exponent(args.rho)
    ctx.print("p: " + p_rho(a, b, rho, force=args.force, budget=budget).to_str(names, "hlex"))
    rep = verify_alpha_shift(a, b, rho, force=args.force, budget=budget)
    for key in ("lhs_low", "rhs_low", "lhs_high", "rhs_high"):
        ctx.print(f"{key}: {rep[key].to_str(names, 'hlex')}")
    ctx.print(f"equal_low: {rep['equal_low']}")
    ctx.print(f"equal_high: {rep['equal_high']}")
    return EXIT_OK if rep["equal_low"] and rep["equal_high"] else EXIT_FAIL


def cmd_chain(ctx: _Context, args) -> int:
    chain = parse_chain(args.file)
    ideals = {k: v.ideal for k, v in chain.ideals.items()}
    names = next((v.names for v in chain.ideals.values()), None)
    rep = verify_chain(chain.edges, ideals, ctx.cfg.bound, ctx.cfg.seed, names)
    for line in rep.lines():
        ctx.print(line)
    ctx.print(f"chain: {'pass' if rep.ok else 'fail'}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify(ctx: _Context, args) -> int:
    rep = SUITES[args.suite](ctx.cfg)
    for line in rep.lines():
        ctx.print(line)
    return rep.exit_status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value settings file (default: ./borel-forge.toml)")
    common.add_argument("--seed", type=int, help="seed for generic coordinate changes")
    common.add_argument("--entropy-bound", type=int, dest="entropy_bound",
                        help="matrix entries are drawn from [1, N]")
    common.add_argument("--retries", type=int, help="extra draws after a disagreement")

    p = argparse.ArgumentParser(prog="borel-forge",
                                description="Exact computations with Borel ideals, "
                                            "binomial systems and generic initial ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    def order_arg(sp):
        sp.add_argument("--order", choices=("rlex", "hlex"), default="rlex")

    sp = sub.add_parser("gb", parents=[common], help="reduced Groebner basis")
    sp.add_argument("file")
    order_arg(sp)
    sp.set_defaults(func=cmd_gb)

    sp = sub.add_parser("init", parents=[common], help="initial ideal")
    sp.add_argument("file")
    order_arg(sp)
    sp.set_defaults(func=cmd_init)

    sp = sub.add_parser("gin", parents=[common], help="certified generic initial ideal")
    sp.add_argument("file")
    order_arg(sp)
    sp.set_defaults(func=cmd_gin)

    sp = sub.add_parser("sat", parents=[common], help="saturation")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_sat)

    sp = sub.add_parser("hilbert", parents=[common], help="Hilbert function and polynomial")
    sp.add_argument("file")
    sp.add_argument("--bound", type=int, help="largest degree to print")
    sp.add_argument("--quotient", action="store_true", help="report S/I instead of I")
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("borel", parents=[common], help="Borel order and Borel sets")
    sp.add_argument("action", choices=("ge", "enumerate", "closure", "is-set"))
    sp.add_argument("vectors", nargs="*", help="exponent vectors such as 0,2,0,3,0")
    sp.set_defaults(func=cmd_borel)

    sp = sub.add_parser("bsys", parents=[common], help="binomial systems")
    sp.add_argument("action", choices=("validate", "show", "ideal", "gb", "filtration", "check"))
    sp.add_argument("file")
    sp.add_argument("--bound", type=int, help="degree bound for the filtration checks")
    sp.set_defaults(func=cmd_bsys)

    sp = sub.add_parser("alpha", parents=[common], help="coefficients of phi(X^b)")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--rho", help="also evaluate p^rho and the shift identities for (a, b)")
    sp.add_argument("--force", action="store_true", help="evaluate despite the hypothesis")
    sp.set_defaults(func=cmd_alpha)

    sp = sub.add_parser("chain", parents=[common], help="verify a deformation chain file")
    sp.add_argument("file")
    sp.add_argument("--bound", type=int, help="degree bound for Hilbert comparisons")
    sp.set_defaults(func=cmd_chain)

    sp = sub.add_parser("verify", parents=[common], help="bundled verification suites")
    sp.add_argument("suite", choices=tuple(SUITES))
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        ctx = _Context(args, out, err)
        return args.func(ctx, args)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    except BudgetExceeded as exc:
        err.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (BorelForgeError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
