"""Command-line entry point: ``cgarep {shapdet,singular,pde,tower,verify}``."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .diffop import FormatError, emit_pde, render
from .exact import DELTA, P as P_SYMBOL, ZERO, ParamPoly, Q
from .liealg import AlgebraConfig, ConfigError
from .shapovalov import gram
from .singular import InadmissibleFamilyError, check_admissible, construct_family, find_singular
from .suites import SUITES, run_suite
from .tower import build_tower
from .verma import ModulePresentation, Weight

FAMILY_NAMES = {"S": "S_even", "Sodd": "S_odd", "T": "T", "Stilde": "S_tilde",
                "P": "P_top", "PStilde": "P_S_tilde"}


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    ell: int | None = None
    level: int | None = None
    n: int = 1
    k: int = 1
    p: str = "symbolic"
    delta: str = "symbolic"
    family: str | None = None
    max_level: int | None = None
    suite: str = "all"
    require_p_eigen: bool = True
    fmt: str = "text"
    out: str | None = None
    seed: int = 0

    def validate(self) -> None:
        if self.command != "verify":
            if self.ell is None or self.ell < 1:
                raise UsageError("--ell must be a positive integer")
        if self.level is not None and self.level < 0:
            raise UsageError("--level must be >= 0")
        if self.k < 1:
            raise UsageError("--k must be >= 1")
        if self.max_level is not None and self.max_level < 1:
            raise UsageError("--max-level must be >= 1")
        if self.fmt not in ("text", "json", "latex"):
            raise UsageError(f"unknown format {self.fmt!r}")
        self.p_value()
        self.delta_value()

    def p_value(self) -> ParamPoly:
        return _param(self.p, P_SYMBOL, "--p")

    def delta_value(self) -> ParamPoly:
        return _param(self.delta, DELTA, "--delta")

    def weight(self) -> Weight:
        return Weight(self.delta_value(), self.p_value())


def _param(text: str, symbol: ParamPoly, flag: str) -> ParamPoly:
    if text == "symbolic":
        return symbol
    if text == "zero":
        return ZERO
    try:
        return ParamPoly.const(Q(text))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{flag} expects 'symbolic', 'zero' or a rational number, got {text!r}") from None


# -- commands ------------------------------------------------------------------

def cmd_shapdet(cfg: RunConfig) -> tuple[int, str]:
    if cfg.level is None:
        raise UsageError("shapdet needs --level")
    pres = ModulePresentation.verma(AlgebraConfig(cfg.ell), cfg.weight())
    rep = gram(pres, cfg.level)
    if rep.matrix != rep.matrix.transpose():
        return 1, "internal inconsistency: Gram matrix is not symmetric"
    if cfg.fmt == "json":
        return 0, json.dumps(rep.to_json(), sort_keys=True)
    return 0, rep.to_text()


def _singular_search(cfg: RunConfig):
    pres = ModulePresentation.verma(AlgebraConfig(cfg.ell))
    p_sym, d_sym = cfg.p == "symbolic", cfg.delta == "symbolic"
    strict = cfg.require_p_eigen
    if p_sym and d_sym:
        return find_singular(pres, cfg.level, "generic_p_nonzero", strict)
    if not p_sym and not d_sym:
        return find_singular(pres, cfg.level, ("specialized", cfg.delta_value().constant_value(),
                                                cfg.p_value().constant_value()), strict)
    if not p_sym and not cfg.p_value():
        return find_singular(pres, cfg.level, "p_zero_generic_delta", strict)
    pres = pres.specialize(delta=None if d_sym else cfg.delta_value(), p=None if p_sym else cfg.p_value())
    found = find_singular(pres, cfg.level, require_p_eigen=strict)
    cond = P_SYMBOL - cfg.p_value() if not p_sym else DELTA - cfg.delta_value()
    for sv in found:
        sv.parameter_conditions.append(cond)
    return found


def cmd_singular(cfg: RunConfig) -> tuple[int, str]:
    if cfg.level is None:
        raise UsageError("singular needs --level")
    found = _singular_search(cfg)
    if cfg.fmt == "json":
        return 0, json.dumps({"schema_version": 1, "ell": cfg.ell, "level": cfg.level,
                              "singular_vectors": [sv.to_json() for sv in found]}, sort_keys=True)
    if not found:
        return 0, f"no singular vectors at level {cfg.level}"
    return 0, "\n".join(str(sv) for sv in found)


def cmd_pde(cfg: RunConfig) -> tuple[int, str]:
    if cfg.family not in FAMILY_NAMES:
        raise UsageError(f"--family must be one of {', '.join(FAMILY_NAMES)}")
    family = FAMILY_NAMES[cfg.family]
    alg = AlgebraConfig(cfg.ell)
    notes = check_admissible(alg, family, cfg.n)
    x = construct_family(alg, family, cfg.n)
    hier = emit_pde(alg, x, cfg.k, family, cfg.n)
    if cfg.fmt == "json":
        return 0, json.dumps(hier.to_json(), sort_keys=True)
    text = render(hier.operator, cfg.fmt)
    if notes and cfg.fmt == "text":
        text += "\n" + "\n".join(f"note: {s}" for s in notes)
    return 0, text


def cmd_tower(cfg: RunConfig) -> tuple[int, str]:
    weight = cfg.weight()
    mode = "p_zero" if weight.p_is_zero else "generic_p_nonzero"
    rep = build_tower(AlgebraConfig(cfg.ell), weight, mode, cfg.max_level)
    if cfg.fmt == "json":
        return 0, json.dumps(rep.to_json(), sort_keys=True)
    return 0, rep.to_text()


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    if cfg.suite not in SUITES:
        raise UsageError(f"--suite must be one of {', '.join(SUITES)}")
    checks = run_suite(cfg.suite, cfg.seed)
    failed = [c for c in checks if not c.ok]
    summary = {"schema_version": 1, "suite": cfg.suite, "total": len(checks),
               "passed": len(checks) - len(failed), "failed": len(failed),
               "first_failure": failed[0].name if failed else None}
    if cfg.fmt == "json":
        summary["checks"] = [c.to_json() for c in checks]
    return (1 if failed else 0), json.dumps(summary, sort_keys=True)


COMMANDS = {"shapdet": cmd_shapdet, "singular": cmd_singular, "pde": cmd_pde,
            "tower": cmd_tower, "verify": cmd_verify}


# -- argument parsing -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", default="text", choices=["text", "json", "latex"])
    common.add_argument("--out", default=None, help="write output to this file instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    params = argparse.ArgumentParser(add_help=False)
    params.add_argument("--ell", type=int, required=True)
    params.add_argument("--p", default="symbolic", help="'symbolic', 'zero' or a rational value")
    params.add_argument("--delta", default="symbolic", help="'symbolic' or a rational value")

    parser = argparse.ArgumentParser(prog="cgarep", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("shapdet", "singular"):
        sp = sub.add_parser(name, parents=[common, params])
        sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--no-p-eigen", dest="require_p_eigen", action="store_false",
                    help="only require annihilation by C and P_j (j > ell)")
    sp = sub.add_parser("pde", parents=[common, params])
    sp.add_argument("--family", required=True, choices=sorted(FAMILY_NAMES))
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--k", type=int, default=1)
    sp = sub.add_parser("tower", parents=[common, params])
    sp.add_argument("--max-level", type=int, default=None)
    sp = sub.add_parser("verify", parents=[common])
    sp.add_argument("--suite", default="all")
    return parser


def parse_config(argv=None) -> tuple[argparse.ArgumentParser, RunConfig]:
    parser = build_parser()
    ns = parser.parse_args(argv)
    fields = {k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__}
    return parser, RunConfig(**fields)


def main(argv=None) -> int:
    parser, cfg = parse_config(argv)
    try:
        cfg.validate()
        code, text = COMMANDS[cfg.command](cfg)
    except (UsageError, ConfigError, FormatError) as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InadmissibleFamilyError as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return 3
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
