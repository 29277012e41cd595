"""Command line front end: ``delsarte <subcommand> --input poly.json``.

Input is a JSON object ``{"n": 2, "exponents": [[3,3],[3,-1]], "deformation": [2,1]}``
(``alpha`` / ``alpha_deform`` are accepted as synonyms, ``name`` is echoed).
Output is JSON by default; ``--format text`` prints one ``section.key = <json>``
line per value, with ``#`` comment lines holding readable tables.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Dict, List

from . import checks as chk
from . import ehrhart as eh
from . import hyperg, jacobi, linalg, mellin, mirror, monodromy
from . import polynomial as poly
from .errors import (DelsarteError, GcdViolation, InvariantDimension, InvariantViolation,
                     ParseError, TooLarge, ValidationError)
from .lattice import ExponentData, build_structure, gcd_condition

GAMMA_LIMIT = 10 ** 4
SECTIONS = ["meta", "lattice", "ehrhart", "ring", "mellin", "operator", "monodromy", "mirror", "series", "checks"]
SUBCOMMANDS = {
    "analyze": ["lattice"],
    "ring": ["lattice", "ehrhart", "ring"],
    "mellin": ["lattice", "mellin"],
    "operator": ["lattice", "operator"],
    "monodromy": ["lattice", "monodromy"],
    "mirror": ["lattice", "mirror"],
    "series": ["lattice", "series"],
    "selftest": ["lattice", "checks"],
    "report": SECTIONS[1:-1],
}
EXIT_OK, EXIT_INTERNAL, EXIT_VALIDATION, EXIT_INVARIANT = 0, 1, 2, 3


def enc(x):
    """JSON-ready copy: Fractions become "p/q" strings, tuples become lists, keys become strings."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, dict):
        return {str(enc(k)) if not isinstance(k, str) else k: enc(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [enc(v) for v in x]
    raise TypeError(f"cannot encode {type(x)}")


def parse_input(text: str) -> ExponentData:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from None
    if not isinstance(raw, dict):
        raise ParseError("top level must be an object")
    d = dict(raw)
    if "exponents" in d:
        d["alpha"] = d.pop("exponents")
    if "deformation" in d:
        d["alpha_deform"] = d.pop("deformation")
    if "alpha" not in d or "alpha_deform" not in d:
        raise ParseError("fields 'exponents' and 'deformation' are required")
    if "n" in d and d["n"] != len(d["alpha"]):
        raise ParseError(f"field n={d['n']} but {len(d['alpha'])} exponent vectors given")
    return ExponentData.from_dict(d)


def _point(args, n):
    if args.point is None:
        return args.ell, (0,) * n
    I = tuple(int(x) for x in args.point.split(","))
    if len(I) != n:
        raise ParseError(f"--point needs {n} coordinates")
    return args.ell, I


def section_lattice(sm) -> Dict[str, Any]:
    return {
        "n": sm.n,
        "L": [list(r) for r in sm.L],
        "det": sm.det,
        "gamma": sm.gamma,
        "B": list(sm.B),
        "B_sorted": sorted(sm.B),
        "gcd_ok": gcd_condition(sm.B),
        "forms": [{"v": list(f.v), "B": f.B, "C": f.C, "denom": f.denom, "text": f.describe()} for f in sm.columns],
    }


def section_ehrhart(sm) -> Dict[str, Any]:
    pair = eh.ehrhart(sm)
    pts = eh.parallelepiped_points(sm)
    return {"psi": list(pair.psi), "phi": list(pair.phi), "parallelepiped": [[l, list(I)] for l, I in pts]}


def section_ring(sm) -> Dict[str, Any]:
    reps = jacobi.ring_basis(sm)
    table = jacobi.hodge_weight_classification(sm)
    return {
        "dim": len(reps),
        "basis": [{"k": r.k, "ell": r.ell, "I": list(r.I), "lambda_bar": list(r.lambda_bar), "r": r.weight_defect} for r in reps],
        "z_gamma_zero": jacobi.z_gamma_zero(sm.B),
        "hodge_weight": [[p, w, d] for (p, w), d in table.table.items()],
        "pure_dim": table.pure_dim,
        "pure_ell_histogram": table.pure_ell_histogram,
    }


def section_mellin(sm, ell, I) -> Dict[str, Any]:
    gp = mellin.mellin_transform(sm, ell, I)
    out = {
        "monomial": [ell, list(I)],
        "gamma_args": [[c, a] for c, a in gp.args],
        "gamma_args_text": gp.describe(),
        "degenerate": gp.degenerate,
        "positive_poles": mellin.positive_poles(gp, sm.gamma),
        "pole_order_at_zero": mellin.pole_order_at_zero(sm, ell, I),
    }
    if gcd_condition(sm.B):
        reps = jacobi.ring_basis(sm)
        bd = mellin.beta_and_rbeta(sm, reps)
        out["beta"] = [[r.k, b] for r, b in zip(reps, bd.beta)]
        out["r_beta"] = [[b, r] for b, r in bd.r_table.items()]
        out["p"] = [[k, mellin.pk_residue(sm.B, k)] for k in jacobi.z_gamma_zero(sm.B)]
    else:
        out["p"] = "skipped: gcd(B) != 1"
    return out


def section_operator(sm, ell, I) -> Dict[str, Any]:
    op = hyperg.operators(sm, ell, I)
    sl = hyperg.singular_loci(sm.B)
    em = hyperg.exponent_multisets(sm, ell, I)
    ro = hyperg.reduced_operator(sm, ell, I)
    qo = hyperg.quantum_ode(sm.B)
    return {
        "monomial": [ell, list(I)],
        "order": op.gamma,
        "P": list(op.P),
        "Q": list(op.Q),
        "singular_locus": {"equation": sl.equation(), "sign": sl.sign, "radius_power": sl.radius_power, "arguments": list(sl.arguments)},
        "c_plus": list(em.c_plus),
        "c_minus": list(em.c_minus),
        "c_zero": list(em.c_zero),
        "gamma_bar": em.gamma_bar,
        "alphas_plus": list(ro.alphas_plus),
        "alphas_minus": list(ro.alphas_minus),
        "quantum_ode_theta": list(qo.theta_poly),
        "quantum_ode_d": list(qo.d_poly),
    }


def section_monodromy(sm) -> Dict[str, Any]:
    B = sm.B
    cp = monodromy.char_polys(B)
    md = monodromy.global_generators(B)
    n = sm.n
    gb = cp.gamma_bar
    out = {
        "Xbar0": list(cp.xbar0),
        "Xbar_inf": list(cp.xbar_inf),
        "phi": list(cp.phi),
        "gamma_bar": gb,
        "h_inf": md.h_inf,
        "h_0": md.h_0,
        "h_1": md.h_1,
        "h1_involution": linalg.is_identity(linalg.matmul(md.h_1, md.h_1)),
        "h1_reflection_rank": linalg.rank(linalg.sub(md.h_1, linalg.identity(gb))),
        "h0_order_ok": md.h0_order_ok,
        "generator_product_ok": md.product_ok,
        "M_inf": md.M_inf,
        "frak_b": list(monodromy.frak_b(B)),
        "H_inf": md.H_inf,
        "H_0": md.H_0,
    }
    if gb <= 12:
        out["generators"] = list(md.generators)
    try:
        f = monodromy.invariant_form(B)
        out["invariant"] = {"X": f.X, "kind": f.kind, "signature": list(f.signature), "rank": f.rank, "det": f.det,
                            "hodge_alternating": f.hodge_alternating, "matches_hodge": f.matches_hodge}
    except (InvariantDimension, InvariantViolation) as exc:
        out["invariant"] = {"error": exc.code, "message": str(exc)}
    if gcd_condition(B):
        out["hodge_numbers"] = monodromy.hodge_numbers(B)
    return out


def section_mirror(sm, N) -> Dict[str, Any]:
    wp = mirror.polar_and_flags(sm)
    tp = mirror.transpose_polynomial(sm)
    ps = mirror.poincare_series(sm.B, N)
    gd = mirror.gram_and_stokes(sm.B)
    return {
        "fano": wp.fano,
        "reflexive": wp.reflexive,
        "polar_vertices": [list(v) for v in wp.polar_vertices],
        "barycenter_ok": wp.barycenter_ok,
        "transpose_rows": [list(r) for r in tp.frak_rows],
        "transpose_monomials": [list(m) for m in tp.monomials],
        "transpose_degree": tp.degree,
        "poincare_numerator": list(ps.numerator),
        "poincare_denominator": list(ps.denominator),
        "poincare_coefficients": list(ps.coefficients),
        "poincare_orientation": ps.orientation,
        "poincare_sign": ps.sign,
        "hilb": list(gd.hilb),
        "G": gd.G,
        "S": gd.S,
        "X": gd.X,
        "invariance_HtXH": gd.invariance_literal,
        "invariance_HXHt": gd.invariance_transposed,
    }


def section_series(sm, ell, I, N) -> Dict[str, Any]:
    op = hyperg.operators(sm, ell, I)
    out = []
    for rho in range(sm.gamma):
        fs = hyperg.frobenius_series(op, rho, N)
        res = hyperg.annihilation_residual(op, fs)
        out.append({
            "rho": rho,
            "coefficients": [[rho + m, c] for m, c in enumerate(fs.coefficients) if c != 0],
            "residual_min_order": min(res) if res else None,
            "clean_through": rho + N,
        })
    return {"monomial": [ell, list(I)], "truncation": N, "solutions": out}


def section_checks(sm, N) -> List[Dict[str, Any]]:
    factor = max(1, N // sm.gamma)
    return [{"name": c.name, "ok": c.ok, "detail": c.detail, "reported": c.reported}
            for c in chk.run_all(sm, truncation_factor=factor)]


def build_report(data: ExponentData, subcommand: str, N: int | None, check: bool, ell: int, I) -> Dict[str, Any]:
    sm = build_structure(data)
    if sm.gamma > GAMMA_LIMIT:
        raise TooLarge(f"gamma = {sm.gamma} exceeds the limit {GAMMA_LIMIT}")
    N = 5 * sm.gamma if N is None else N
    wanted = list(SUBCOMMANDS[subcommand])
    if check and "checks" not in wanted:
        wanted.append("checks")
    if subcommand in ("series",) and N < sm.gamma:
        raise ValidationError(f"truncation {N} is below gamma = {sm.gamma}")
    needs_gcd = {"ring"} if subcommand == "ring" else set()
    if needs_gcd and not gcd_condition(sm.B):
        raise GcdViolation(f"gcd of B = {list(sm.B)} is not 1")
    report: Dict[str, Any] = {"meta": {"subcommand": subcommand, "name": data.name, "input": data.to_dict(), "truncation": N}}
    for sec in wanted:
        if sec == "lattice":
            report[sec] = section_lattice(sm)
        elif sec == "ehrhart":
            report[sec] = section_ehrhart(sm)
        elif sec == "ring":
            report[sec] = section_ring(sm) if gcd_condition(sm.B) else {"skipped": "gcd_violation"}
        elif sec == "mellin":
            report[sec] = section_mellin(sm, ell, I)
        elif sec == "operator":
            report[sec] = section_operator(sm, ell, I)
        elif sec == "monodromy":
            report[sec] = section_monodromy(sm)
        elif sec == "mirror":
            report[sec] = section_mirror(sm, N)
        elif sec == "series":
            report[sec] = section_series(sm, ell, I, N)
        elif sec == "checks":
            report[sec] = section_checks(sm, N)
    return enc(report)


def _flatten(prefix, value, out):
    if isinstance(value, dict) and value and prefix.count(".") < 1:
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, out)
    else:
        out.append((prefix, value))


def to_text(report: Dict[str, Any]) -> str:
    lines = []
    for sec in SECTIONS:
        if sec not in report:
            continue
        lines.append(f"# [{sec}]")
        if sec == "checks":
            for c in report[sec]:
                mark = "ok" if c["ok"] else ("note" if c["reported"] else "FAIL")
                lines.append(f"#   {mark:4}  {c['name']}")
        if sec == "ring" and "basis" in report[sec]:
            lines.append("#   k  ell  I  lambda_bar  r")
            for b in report[sec]["basis"]:
                lines.append(f"#   {b['k']}  {b['ell']}  {b['I']}  {' '.join(b['lambda_bar'])}  {b['r']}")
        if sec == "monodromy":
            lines.append(f"#   Xbar0    = {poly.to_str(report[sec]['Xbar0'])}")
            lines.append(f"#   Xbar_inf = {poly.to_str(report[sec]['Xbar_inf'])}")
        items: list = []
        _flatten(sec, report[sec], items)
        for key, val in items:
            lines.append(f"{key} = {json.dumps(val, separators=(',', ':'))}")
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Dict[str, Any]:
    """Inverse of :func:`to_text`: comment lines are skipped."""
    out: Dict[str, Any] = {}
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        key, _, val = line.partition(" = ")
        parts = key.split(".")
        node = out
        for p in parts[:-1]:
            node = node.setdefault(p, {})
        node[parts[-1]] = json.loads(val)
    return out


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="delsarte", description=__doc__.splitlines()[0])
    p.add_argument("command", nargs="?", choices=sorted(SUBCOMMANDS), help="what to compute (default: report)")
    p.add_argument("--subcommand", dest="subcommand", choices=sorted(SUBCOMMANDS))
    p.add_argument("--input", "-i", required=True, help="JSON polynomial description, '-' for stdin")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--truncation", type=int, default=None, help="series truncation N (default 5*gamma)")
    p.add_argument("--check", action="store_true", help="also run all cross-module invariants")
    p.add_argument("--ell", type=int, default=1, help="u-degree of the monomial for mellin/operator/series")
    p.add_argument("--point", default=None, help="exponent I of the monomial, comma separated (default 0)")
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    sub = args.command or args.subcommand or "report"
    try:
        text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf8").read()
    except OSError as exc:
        return _fail(args, ParseError(f"cannot read input: {exc}"), EXIT_VALIDATION)
    try:
        data = parse_input(text)
        ell, I = _point(args, data.n)
        report = build_report(data, sub, args.truncation, args.check or sub == "selftest", ell, I)
    except ValidationError as exc:
        return _fail(args, exc, EXIT_VALIDATION)
    except (InvariantViolation, InvariantDimension) as exc:
        return _fail(args, exc, EXIT_INVARIANT)
    except DelsarteError as exc:
        return _fail(args, exc, EXIT_VALIDATION)
    except Exception as exc:  # noqa: BLE001
        return _fail(args, exc, EXIT_INTERNAL)
    sys.stdout.write(to_text(report) if args.format == "text" else json.dumps(report, indent=1) + "\n")
    if "checks" in report and any(not c["ok"] and not c["reported"] for c in report["checks"]):
        return EXIT_INVARIANT
    return EXIT_OK


def _fail(args, exc, code) -> int:
    err = {"error": getattr(exc, "code", "internal"), "message": str(exc), "exit_code": code}
    if args.format == "json":
        sys.stdout.write(json.dumps(err) + "\n")
    else:
        sys.stdout.write(f"error = {json.dumps(err)}\n")
    print(f"delsarte: {err['error']}: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
