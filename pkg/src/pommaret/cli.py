"""Command line front end.

Variables are read in the order given on the ``ring:`` line and that order is
x1, x2, ..., xn with x1 the SMALLEST variable of the reverse lexicographic
order.  So in ``ring: x, y, z`` we have x < y < z, the class of x*y^2 is 1,
and z^2 has class 3 with all three variables multiplicative.

Exit codes: 0 success, 2 unreadable input (parse errors, or a polynomial
given to a command that needs monomials), 3 no finite Pommaret basis in the
coordinates used (delta-singular with ``--transform off``, or the coordinate
search gave up), 4 a self-check failed.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time

from . import __version__
from . import report as rep
from .complin import (
    InvariantViolation,
    betti_bound_check,
    betti_persistence_check,
    gin_sample,
    is_componentwise_linear,
    minimal_resolution_test,
)
from .invariants import hilbert_series, invariant_report, saturation_from_basis
from .involutive import (
    PommaretBasis,
    check_representations,
    closure_check,
    pommaret_complete,
)
from .monomial import (
    MonomialIdeal,
    NotQuasiStable,
    associated_primes_bruteforce,
    dimension,
    inverse_p_ordering,
    is_stable,
    linear_quotients_check,
    monomial_pommaret_complete,
    p_graph,
    quasi_stability_breakdown,
)
from .parser import IdealFile, ParseError, parse_ideal_file
from .polynomial import monomial_exponents
from .regularity import RegularizationError, find_delta_regular_coordinates
from .ring import LinearChange

EXIT_OK, EXIT_INPUT, EXIT_SINGULAR, EXIT_VIOLATION = 0, 2, 3, 4

COMMANDS = ("basis", "invariants", "quasistable", "stable", "complin", "quotients", "hilbert", "saturate", "gin-sample")


class CommandFailed(Exception):
    def __init__(self, code: int, message: str, data: dict | None = None):
        super().__init__(message)
        self.code = code
        self.data = data or {}


# -- shared steps -------------------------------------------------------------


def _regular_basis(src: IdealFile, args) -> tuple[PommaretBasis, LinearChange, str]:
    F = list(src.generators)
    outcome = pommaret_complete(F)
    if outcome.is_regular:
        basis, change, strategy = outcome.basis, outcome.change, "identity"
    elif args.transform == "off":
        raise CommandFailed(
            EXIT_SINGULAR,
            "the coordinates are delta-singular (lt I is not quasi-stable); rerun with --transform auto",
            {"delta_singular": rep.singular_data(outcome.singular, src.names)},
        )
    else:
        try:
            coords = find_delta_regular_coordinates(F, seed=args.seed)
        except RegularizationError as exc:
            raise CommandFailed(EXIT_SINGULAR, str(exc)) from None
        basis, change, strategy = coords.basis, coords.change, coords.strategy
    if not closure_check(list(basis.elements)):
        raise InvariantViolation("the computed basis fails the involutive criterion")
    check_representations(basis)
    return basis, change, strategy


def _monomial_ideal(src: IdealFile) -> MonomialIdeal:
    try:
        gens = monomial_exponents(src.generators)
    except ValueError as exc:
        raise CommandFailed(EXIT_INPUT, f"this command needs monomial generators: {exc}") from None
    return MonomialIdeal.from_generators(gens, src.ring.n)


def _monomial_basis(I: MonomialIdeal):
    H = monomial_pommaret_complete(I)
    if isinstance(H, NotQuasiStable):
        raise CommandFailed(
            EXIT_SINGULAR,
            "the monomial ideal is not quasi-stable, so it has no finite Pommaret basis",
            {"quasi_stable": quasi_stability_breakdown(I)},
        )
    return H


def _basis_section(basis, change, strategy) -> dict:
    return {"coordinate_change": rep.change_data(change, strategy), "basis": rep.basis_data(basis)}


# -- commands -----------------------------------------------------------------


def cmd_basis(src, args) -> dict:
    return _basis_section(*_regular_basis(src, args))


def cmd_invariants(src, args) -> dict:
    basis, change, strategy = _regular_basis(src, args)
    r = invariant_report(basis)
    mono = _monomial_basis(basis.leading_ideal())
    if invariant_report(mono).transferable() != r.transferable():
        raise InvariantViolation("invariants of I and lt I differ in delta-regular coordinates")
    out = _basis_section(basis, change, strategy)
    out["invariants"] = rep.invariants_data(r, src.names)
    return out


def cmd_quasistable(src, args) -> dict:
    I = _monomial_ideal(src)
    methods = quasi_stability_breakdown(I)
    if len(set(methods.values())) != 1:
        raise InvariantViolation(f"quasi-stability tests disagree: {methods}")
    verdict = next(iter(methods.values()))
    primes = sorted(sorted(P) for P in associated_primes_bruteforce(I))
    return {
        "ideal": rep.ideal_data(I, src.names),
        "quasi_stable": verdict,
        "methods": methods,
        "dimension": dimension(I),
        "associated_primes": [[src.names[i - 1] for i in P] for P in primes],
    }


def cmd_stable(src, args) -> dict:
    I = _monomial_ideal(src)
    return {
        "ideal": rep.ideal_data(I, src.names),
        "stable": is_stable(I),
        "quasi_stable": all(quasi_stability_breakdown(I).values()),
        "methods": quasi_stability_breakdown(I),
    }


def cmd_complin(src, args) -> dict:
    try:
        v = is_componentwise_linear(list(src.generators), seed=args.seed)
    except RegularizationError as exc:
        raise CommandFailed(EXIT_SINGULAR, f"no componentwise delta-regular coordinates found: {exc}") from None
    H = pommaret_complete(list(v.generators)).unwrap()
    minimal = minimal_resolution_test(H)
    if minimal != v.verdict:
        raise InvariantViolation("minimality of the induced resolution contradicts the verdict")
    out = {"coordinate_change": rep.change_data(v.change, "search" if not v.change.is_identity else "identity")}
    out.update(rep.complin_data(v, src.names))
    out["induced_resolution_minimal"] = minimal
    if v.verdict:
        out["betti_lower_bounds_hold"] = betti_bound_check(H)
        out["betti_persistence_total"] = betti_persistence_check(H, "total")
        out["betti_persistence_table"] = betti_persistence_check(H, "table")
    return out


def cmd_quotients(src, args) -> dict:
    I = _monomial_ideal(src)
    H = _monomial_basis(I)
    ordered = inverse_p_ordering(H)
    return rep.quotients_data(ordered, linear_quotients_check(ordered), p_graph(H), src.names)


def cmd_hilbert(src, args) -> dict:
    basis, change, strategy = _regular_basis(src, args)
    hs = hilbert_series(basis)
    top = args.max_degree if args.max_degree is not None else basis.degree() + 3
    if top < 0:
        raise CommandFailed(EXIT_INPUT, "--max-degree must be non-negative")
    return {"hilbert_series": rep.hilbert_data(hs, top), "coordinate_change": rep.change_data(change, strategy)}


def cmd_saturate(src, args) -> dict:
    basis, change, strategy = _regular_basis(src, args)
    s = saturation_from_basis(basis)
    out = _basis_section(basis, change, strategy)
    out["saturation"] = rep.saturation_data(s, src.names, basis.order)
    return out


def cmd_gin_sample(src, args) -> dict:
    trials = args.trials if args.trials is not None else 16
    if trials < 1:
        raise CommandFailed(EXIT_INPUT, "--trials must be positive")
    return {"gin_sample": rep.gin_data(gin_sample(list(src.generators), trials, args.seed), src.names)}


HANDLERS = {
    "basis": cmd_basis,
    "invariants": cmd_invariants,
    "quasistable": cmd_quasistable,
    "stable": cmd_stable,
    "complin": cmd_complin,
    "quotients": cmd_quotients,
    "hilbert": cmd_hilbert,
    "saturate": cmd_saturate,
    "gin-sample": cmd_gin_sample,
}


# -- output -------------------------------------------------------------------


def _render(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.extend(_render(v, indent + 1))
            elif isinstance(v, dict):
                lines.append(f"{pad}{k}: " + ", ".join(f"{a}={b}" for a, b in v.items()))
            elif isinstance(v, list):
                lines.append(f"{pad}{k}: " + (", ".join(str(x) for x in v) if v else "(none)"))
            else:
                lines.append(f"{pad}{k}: {v}")
    else:
        for item in value:
            if isinstance(item, dict):
                sub = _render(item, indent + 1)
                lines.append(pad + "- " + sub[0].lstrip())
                lines.extend(sub[1:])
            elif isinstance(item, list):
                lines.append(pad + "- " + ", ".join(str(x) for x in item))
            else:
                lines.append(f"{pad}- {item}")
    return lines


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="ideal file ('-' reads standard input)")
    common.add_argument("--char", type=int, default=None, help="coefficient field characteristic (0 or a prime); overrides the file")
    common.add_argument("--transform", choices=("auto", "off"), default="auto",
                        help="repair delta-singular coordinates automatically (default) or report failure")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized steps (default 0)")
    common.add_argument("--trials", type=int, default=None, help="number of random trials for gin-sample (default 16)")
    common.add_argument("--max-degree", type=int, default=None, help="last degree printed by hilbert (default reg+3)")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--timing", action="store_true", help="include wall-clock time in the report")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    parser = argparse.ArgumentParser(
        prog="pommaret",
        description="Pommaret bases and the invariants they expose. "
        "Variables are listed x1, ..., xn with x1 the smallest in the reverse lexicographic order.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "basis": "Pommaret basis (repairing coordinates if needed)",
        "invariants": "reg, pd, depth, dimension, satiety, q-vector, Betti data",
        "quasistable": "quasi-stability of a monomial ideal by every method",
        "stable": "stability of a monomial ideal",
        "complin": "componentwise linearity and Betti number checks",
        "quotients": "inverse P-ordering, colon ideals and P-graph of a monomial ideal",
        "hilbert": "Hilbert series from the cone decomposition",
        "saturate": "saturation and satiety read off the basis",
        "gin-sample": "EXPERIMENTAL: most frequent leading ideal after random coordinate changes",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name], description=helps[name])
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    start = time.perf_counter()
    data: dict = {"command": args.command}
    code = EXIT_OK
    try:
        text = _read(args.file)
        data["input_digest"] = rep.digest(text)
        src = parse_ideal_file(text, char=args.char)
        data["ring"] = rep.ring_data(src.ring)
        data["term_order"] = rep.CONVENTION
        data["generators"] = [g.to_string() for g in src.generators]
        data.update(HANDLERS[args.command](src, args))
    except (OSError, UnicodeDecodeError) as exc:
        code, data["error"] = EXIT_INPUT, f"cannot read input: {exc}"
    except ParseError as exc:
        code, data["error"] = EXIT_INPUT, f"parse error: {exc}"
    except CommandFailed as exc:
        code, data["error"] = exc.code, str(exc)
        data.update(exc.data)
    except (InvariantViolation, AssertionError) as exc:
        code, data["error"] = EXIT_VIOLATION, f"self-check failed: {exc}"
    except OverflowError as exc:
        code, data["error"] = EXIT_VIOLATION, f"computation exceeded a size limit: {exc}"
    if args.timing:
        data["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    if args.json:
        print(rep.dumps(data))
    else:
        stream = sys.stderr if code else sys.stdout
        print("\n".join(_render(data)), file=stream)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
