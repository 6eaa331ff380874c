"""Command-line surface: lemma checks over parameter grids, effective
thresholds, and thin wrappers over the library operations.

Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage or
size-guard error.  All randomness flows from the --seed flag, and reports
with identical configuration are byte-identical.
"""
from __future__ import annotations

import argparse
import json
import sys
from random import Random
from typing import Sequence, TextIO

from . import bounds, formulas, ideals, specialize
from .gradedpoly import HomPoly, basis, random_poly
from .ideals import IdealPresentation, LinearSpaceConfig, graded_piece, square, w_space
from .scalars import FieldSpec, parse_field, prime_field, rationals

SCHEMA = 1
DEFAULT_MAX_COLUMNS = 5000

EXIT_PASS = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class GuardError(ValueError):
    """A requested computation exceeds the configured size budget."""


class CheckFailure(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """Inclusive grid syntax: "4" or "2..8"."""
    if ".." in text:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _guard_columns(n: int, l: int, max_columns: int) -> None:
    cols = formulas.binom(l + n, n)
    if cols > max_columns:
        raise GuardError(
            f"S_{l} in P^{n} has {cols} monomials; budget is {max_columns} "
            "(raise --max-columns to override)")


def _emit(report: dict, args, stream: TextIO) -> None:
    if getattr(args, "format", "json") == "csv":
        rows = report.get("results", [])
        keys: list[str] = []
        for r in rows:
            for k in r:
                if k not in keys:
                    keys.append(k)
        lines = [",".join(keys)]
        for r in rows:
            lines.append(",".join(str(r.get(k, "")) for k in keys))
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
        stream.write(f"wrote {out_path}\n")
    else:
        stream.write(text)


def _grid_nb(args) -> list[tuple[int, int]]:
    pairs = []
    for n in parse_range(args.n):
        for b in parse_range(args.b):
            if 1 <= b <= n - 1 and n >= 3:
                pairs.append((n, b))
    if not pairs:
        raise GuardError("grid contains no valid (n, b) pairs")
    return pairs


def _random_directions(field: FieldSpec, n: int, b: int, d: int, rng: Random):
    seen = set()
    dirs = []
    while len(dirs) < d:
        if field.is_rational:
            cand = tuple(field.canon(rng.randint(-3, 3)) for _ in range(n - b))
        else:
            cand = tuple(rng.randrange(field.p) for _ in range(n - b))
        if cand not in seen:
            seen.add(cand)
            dirs.append(cand)
    return tuple(dirs)


# ---------------------------------------------------------------------------
# check-lemma dispatch


def _check_cod_one_lin(args, field: FieldSpec, rng: Random, max_columns: int):
    results = []
    for n, b in _grid_nb(args):
        for l in parse_range(args.l):
            _guard_columns(n, l, max_columns)
            ideal = ideals.linear_space_ideal(field, n, b)
            got = w_space(ideal, l).codim
            want = formulas.linear_codim(n, b, l)
            results.append({"n": n, "b": b, "l": l,
                            "expected": want, "got": got, "pass": got == want})
    return results


def _check_codi_d_spaces(args, field: FieldSpec, rng: Random, max_columns: int):
    results = []
    for n, b in _grid_nb(args):
        for d in parse_range(args.d):
            for l in parse_range(args.l):
                if d > (l + 1) // 2:
                    raise GuardError(f"bound needs d <= (l+1)/2; got d={d}, l={l}")
                _guard_columns(n, l, max_columns)
                for cfg_idx in range(args.configs):
                    cfg = LinearSpaceConfig(field, n, b,
                                            _random_directions(field, n, b, d, rng))
                    got = ideals.union_squared_piece(cfg, l).codim
                    want = formulas.union_bound(n, b, d, l)
                    ok = got >= want and (d != 1 or got == want)
                    results.append({"n": n, "b": b, "d": d, "l": l,
                                    "config": cfg_idx, "expected_min": want,
                                    "got": got, "pass": ok})
    return results


def _check_explct(args, field: FieldSpec, rng: Random, max_columns: int):
    results = []
    for n, b in _grid_nb(args):
        for d in parse_range(args.d):
            for l in parse_range(args.l):
                if l < 2 * d:
                    raise GuardError(f"codimension formula needs l >= 2d; got d={d}, l={l}")
                _guard_columns(n, l, max_columns)
                f = random_poly(field, n, d, rng, nvars=b + 2)
                gens = [f] + [HomPoly.variable(field, n, j) for j in range(b + 2, n + 1)]
                ideal = IdealPresentation(field, n, tuple(gens))
                got = graded_piece(square(ideal), l).codim
                want = formulas.beta(n, b, d, l)
                results.append({"n": n, "b": b, "d": d, "l": l,
                                "expected": want, "got": got, "pass": got == want})
    return results


def _quadric_ideal(field: FieldSpec, n: int, b: int = 1) -> IdealPresentation:
    """V(x0*x2 - x1^2, x_{b+2}, ..., xn): an integral degree-2 subscheme of
    dimension b (the cone over a smooth conic once b >= 2).  The quadric is
    irreducible in any k[x_0..x_{b+1}], which the squared-ideal membership
    statement requires; no irreducibility is tested at runtime."""
    x0x2 = HomPoly.monomial(field, n, tuple(1 if i in (0, 2) else 0 for i in range(n + 1)))
    x1sq = HomPoly.monomial(field, n, tuple(2 if i == 1 else 0 for i in range(n + 1)))
    gens = [x0x2 - x1sq] + [HomPoly.variable(field, n, j) for j in range(b + 2, n + 1)]
    return IdealPresentation(field, n, tuple(gens))


def _check_sq_of_ideal(args, field: FieldSpec, rng: Random, max_columns: int):
    results = []
    for n, b in _grid_nb(args):
        for l in parse_range(args.l):
            if l < 4:
                raise GuardError("squared-ideal membership check needs l >= 4")
            _guard_columns(n, l, max_columns)
            ideal = _quadric_ideal(field, n, b)
            ws = w_space(ideal, l)
            sq = graded_piece(square(ideal), l)
            want = formulas.beta(n, b, 2, l)
            ok = ws == sq and ws.codim == want
            results.append({"n": n, "b": b, "l": l, "expected": want,
                            "got": ws.codim, "spaces_equal": ws == sq, "pass": ok})
    return results


def _check_x1_accounting(args, field: FieldSpec, rng: Random, max_columns: int):
    results = []
    for n, b in _grid_nb(args):
        for l in parse_range(args.l):
            x1 = formulas.dim_x1(n, b, l)
            ok = x1.total == x1.fiber_dim + x1.grassmannian_dim
            results.append({"n": n, "b": b, "l": l, "total": x1.total,
                            "fiber": x1.fiber_dim, "grassmannian": x1.grassmannian_dim,
                            "pass": ok})
    return results


def _check_b1_consistency(args, field: FieldSpec, rng: Random, max_columns: int):
    results = []
    for n in parse_range(args.n):
        if n < 3:
            continue
        for d in parse_range(args.d):
            thm = formulas.plane_curve_rhilb_dim(n, d)
            conj = formulas.conjectural_rhilb_dim(n, 1, d)
            results.append({"n": n, "d": d, "theorem": thm, "conjecture": conj,
                            "pass": thm == conj})
    return results


LEMMA_CHECKS = {
    "cod-one-lin": (_check_cod_one_lin, "codimension of the one-linear-space locus"),
    "codi-d-spaces": (_check_codi_d_spaces, "codimension bound for d linear spaces"),
    "explct": (_check_explct, "squared-ideal codimension formula"),
    "sq-of-ideal": (_check_sq_of_ideal, "singular containment equals squared ideal"),
    "x1-accounting": (_check_x1_accounting, "accounting identity for the linear component"),
    "b1-consistency": (_check_b1_consistency, "plane-curve case of the dimension formulas"),
}


def _cmd_check_lemma(args, stream: TextIO) -> int:
    field = parse_field(args.field)
    rng = Random(args.seed)
    fn, _ = LEMMA_CHECKS[args.name]
    results = fn(args, field, rng, args.max_columns)
    all_pass = all(r["pass"] for r in results)
    report = {"schema": SCHEMA, "command": f"check-lemma {args.name}",
              "field": field.describe(), "seed": args.seed,
              "results": results, "pass": all_pass}
    _emit(report, args, stream)
    return EXIT_PASS if all_pass else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# remaining commands


def _cmd_l0(args, stream: TextIO) -> int:
    kind = bounds.SECOND_COMPONENT if args.second_component else bounds.SMALL_DEGREE
    cert = bounds.compute_l0(args.n, args.b, kind, fixed_B=args.fixed_B)
    payload = cert.to_json()
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        stream.write(f"valid l0 = {cert.l0} (d0 = {cert.d0}, "
                     f"conditional = {cert.conditional}); wrote {args.out}\n")
    else:
        stream.write(text)
    return EXIT_PASS


def _cmd_verify_certificate(args, stream: TextIO) -> int:
    with open(args.certificate, "r", encoding="utf-8") as fh:
        cert = bounds.L0Certificate.from_json(json.load(fh))
    result = bounds.verify_certificate(cert)
    report = {"schema": SCHEMA, "command": "verify-certificate",
              "l0": cert.l0, "d0": cert.d0, "kind": cert.kind,
              "conditional": cert.conditional, "results": list(result.checks),
              "pass": result.ok}
    _emit(report, args, stream)
    return EXIT_PASS if result.ok else EXIT_CHECK_FAILED


def _cmd_wspace(args, stream: TextIO) -> int:
    field = parse_field(args.field)
    ideal = IdealPresentation.load(args.ideal, field)
    _guard_columns(ideal.n, args.l, args.max_columns)
    space = w_space(ideal, args.l)
    report = {"schema": SCHEMA, "command": "wspace", "field": field.describe(),
              "l": args.l, "n": ideal.n, "dim": space.dim, "codim": space.codim,
              "pass": True}
    _emit(report, args, stream)
    return EXIT_PASS


def _cmd_codim(args, stream: TextIO) -> int:
    field = parse_field(args.field)
    ideal = IdealPresentation.load(args.ideal, field)
    _guard_columns(ideal.n, args.l, args.max_columns)
    if args.squared:
        ideal = square(ideal)
    piece = graded_piece(ideal, args.l)
    report = {"schema": SCHEMA, "command": "codim", "field": field.describe(),
              "l": args.l, "n": ideal.n, "squared": bool(args.squared),
              "dim": piece.dim, "codim": piece.codim, "pass": True,
              "saturation_note": "graded piece of the presented generators; "
                                 "no saturation is performed"}
    _emit(report, args, stream)
    return EXIT_PASS


def _cmd_beta(args, stream: TextIO) -> int:
    value = formulas.beta(args.n, args.b, args.d, args.l)
    report = {"schema": SCHEMA, "command": "beta", "n": args.n, "b": args.b,
              "d": args.d, "l": args.l, "value": value, "pass": True}
    _emit(report, args, stream)
    return EXIT_PASS


def _cmd_specialize(args, stream: TextIO) -> int:
    field = prime_field(args.q)
    ideal = IdealPresentation.load(args.ideal, field)
    report_obj = specialize.check_flat_limit_support(
        list(ideal.generators), ideal.n, args.b, args.q, expected_d=args.d)
    report = {"schema": SCHEMA, "command": "specialize", **report_obj.to_json(),
              "pass": report_obj.verdict == "EQUAL"}
    _emit(report, args, stream)
    return EXIT_PASS if report_obj.verdict == "EQUAL" else EXIT_CHECK_FAILED


def _cmd_generic_sing(args, stream: TextIO) -> int:
    field = prime_field(args.q)
    ideal = IdealPresentation.load(args.ideal, field)
    rep = specialize.generic_singular_support_check(
        ideal, args.l, args.q, args.trials, seed=args.seed)
    ok = (rep.trials == 0) or (rep.has_witness and rep.containment_count == rep.trials)
    report = {"schema": SCHEMA, "command": "generic-sing", **rep.to_json(), "pass": ok}
    _emit(report, args, stream)
    return EXIT_PASS if ok else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singloci",
        description="Exact verification of singular-locus dimension formulas")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write the JSON report to this path")
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--max-columns", type=int, default=DEFAULT_MAX_COLUMNS,
                       help="largest graded-piece dimension allowed")

    p = sub.add_parser("check-lemma", help="run an oracle-vs-formula check over a grid")
    p.add_argument("name", choices=sorted(LEMMA_CHECKS))
    p.add_argument("--n", default="3", help="grid for n, e.g. 3 or 3..4")
    p.add_argument("--b", default="1", help="grid for b")
    p.add_argument("--d", default="2", help="grid for d")
    p.add_argument("--l", default="4", help="grid for l")
    p.add_argument("--field", default="Q", help='"Q" or a prime field like q7')
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--configs", type=int, default=1,
                   help="random configurations per grid cell (codi-d-spaces)")
    common(p)
    p.set_defaults(fn=_cmd_check_lemma)

    p = sub.add_parser("l0", help="compute a certified effective threshold")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--second-component", action="store_true")
    p.add_argument("--fixed-B", type=int, default=None, dest="fixed_B",
                   help="certify only 2 <= d <= B (small-degree variant)")
    p.add_argument("--out", help="write the certificate to this path")
    p.set_defaults(fn=_cmd_l0)

    p = sub.add_parser("verify-certificate", help="replay a threshold certificate")
    p.add_argument("certificate")
    common(p)
    p.set_defaults(fn=_cmd_verify_certificate)

    p = sub.add_parser("wspace", help="dimension of the singular-containment space")
    p.add_argument("--ideal", required=True, help="ideal presentation JSON file")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--field", default="Q")
    common(p)
    p.set_defaults(fn=_cmd_wspace)

    p = sub.add_parser("codim", help="codimension of a graded piece")
    p.add_argument("--ideal", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--squared", action="store_true", help="square the ideal first")
    p.add_argument("--field", default="Q")
    common(p)
    p.set_defaults(fn=_cmd_codim)

    p = sub.add_parser("beta", help="squared-ideal codimension formula")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    common(p)
    p.set_defaults(fn=_cmd_beta)

    p = sub.add_parser("specialize", help="flat-limit support scan over F_q")
    p.add_argument("--ideal", required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, default=None,
                   help="expected number of hyperplane-section points")
    common(p)
    p.set_defaults(fn=_cmd_specialize)

    p = sub.add_parser("generic-sing", help="sample the squared-ideal piece for "
                                            "forms singular exactly along the subscheme")
    p.add_argument("--ideal", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(fn=_cmd_generic_sing)

    return parser


def run(argv: Sequence[str] | None = None, stream: TextIO | None = None) -> int:
    stream = stream or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_PASS
    try:
        return args.fn(args, stream)
    except (GuardError, FileNotFoundError, json.JSONDecodeError) as exc:
        stream.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        stream.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
