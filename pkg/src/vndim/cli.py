"""Command-line front end: one verb per library operation, plus table regeneration.

Usage shape:

    vndim <group> <verb> [flags] [--format {text,json,csv}] [--ascii]
    vndim table <name>   [--format ...]

Exit codes: 0 success, 1 usage error (unknown verb, malformed primitive flag),
2 domain error (NoOccurrence, NoSuchLattice, parity violations, ...).

Exact scalars serialize to JSON as {"num": int, "den": int, "pi_exp": int} and
render to text as "a/b", "a/b·π", "a/(b·π)" (--ascii switches π to "pi" and
the dot to "*").  All output is deterministic: LF line endings, record fields
and JSON keys sorted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import asdict, is_dataclass
from fractions import Fraction

from . import factors, finite_field, fuchsian, padic
from .errors import DomainError
from .exact import PiRational, parse_pi_rational
from .fuchsian import DEFAULT_SCAN_CAP, GroupMode, parse_signature
from .padic import HaarNormalization, PadicRep, parse_jl_class
from .tables import Table, build_table

SCAN_CAP_ENV = "VNDIM_SCAN_CAP"


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the CLI contract wants 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


# -- input parsing -------------------------------------------------------------


def _parse_scalar(text: str) -> PiRational:
    s = text.strip()
    try:
        if s.startswith("{"):
            return PiRational.from_json_dict(json.loads(s))
        return parse_pi_rational(s)
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse exact scalar {text!r}: {exc}") from None


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse rational {text!r}: {exc}") from None


def _parse_nu(text: str, q) -> int:
    if text == "trivial":
        return 0
    if text == "sign":
        return (finite_field.as_prime_power(q).q - 1) // 2
    try:
        return int(text)
    except ValueError:
        raise DomainError(
            f"--nu must be an integer index, 'trivial', or 'sign'; got {text!r}"
        ) from None


def _scan_cap() -> int:
    raw = os.environ.get(SCAN_CAP_ENV)
    if raw is None:
        return DEFAULT_SCAN_CAP
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{SCAN_CAP_ENV} must be an integer, got {raw!r}") from None


# -- output rendering ----------------------------------------------------------


def _cell_text(value, ascii_pi: bool) -> str:
    if isinstance(value, PiRational):
        return value.render(ascii_pi)
    if isinstance(value, Fraction):
        return PiRational(value).render(ascii_pi)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    return str(value)


def _cell_json(value):
    if isinstance(value, PiRational):
        return value.to_json_dict()
    if isinstance(value, Fraction):
        return PiRational(value).to_json_dict()
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    if isinstance(value, (bool, int, str)):
        return value
    return str(value)


def _render_table_text(table: Table, ascii_pi: bool) -> str:
    header = [str(c) for c in table.columns]
    body = [[_cell_text(cell, ascii_pi) for cell in row] for row in table.rows]
    widths = [
        max(len(header[i]), *(len(row[i]) for row in body)) if body else len(header[i])
        for i in range(len(header))
    ]
    lines = []
    for row in [header] + body:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _render_csv(columns, rows, ascii_pi: bool) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell_text(cell, ascii_pi) for cell in row])
    return out.getvalue()


def render_result(result, fmt: str, ascii_pi: bool) -> str:
    """Turn a handler result (scalar, record dict, word list, or Table) into text."""
    if is_dataclass(result) and not isinstance(result, Table):
        result = asdict(result)
    if isinstance(result, Table):
        if fmt == "json":
            payload = {
                "name": result.name,
                "columns": list(result.columns),
                "rows": [[_cell_json(c) for c in row] for row in result.rows],
            }
            return json.dumps(payload, sort_keys=True) + "\n"
        if fmt == "csv":
            return _render_csv(result.columns, result.rows, ascii_pi)
        return _render_table_text(result, ascii_pi)
    if isinstance(result, dict):
        items = sorted(result.items())
        if fmt == "json":
            return json.dumps({k: _cell_json(v) for k, v in items}, sort_keys=True) + "\n"
        if fmt == "csv":
            return _render_csv([k for k, _ in items], [[v for _, v in items]], ascii_pi)
        return "".join(f"{k}={_cell_text(v, ascii_pi)}\n" for k, v in items)
    if isinstance(result, list):
        if fmt == "json":
            return json.dumps([_cell_json(v) for v in result], sort_keys=True) + "\n"
        if fmt == "csv":
            return _render_csv(["value"], [[v] for v in result], ascii_pi)
        return "".join(_cell_text(v, ascii_pi) + "\n" for v in result)
    # scalar
    if fmt == "json":
        return json.dumps(_cell_json(result), sort_keys=True) + "\n"
    if fmt == "csv":
        return _render_csv(["value"], [[result]], ascii_pi)
    return _cell_text(result, ascii_pi) + "\n"


# -- handlers --------------------------------------------------------------------


def _mode(args) -> GroupMode:
    return GroupMode(args.mode)


def _norm(args) -> HaarNormalization:
    return HaarNormalization(args.norm)


def _h_exact_mul(args):
    return _parse_scalar(args.a) * _parse_scalar(args.b)


def _h_exact_compare(args):
    order = _parse_scalar(args.a).compare(_parse_scalar(args.b))
    return {-1: "less", 0: "equal", 1: "greater"}[order]


def _h_fuchsian_covolume(args):
    return fuchsian.covolume(parse_signature(args.sig))


def _h_fuchsian_cuspdim(args):
    return fuchsian.cusp_form_dim(parse_signature(args.sig), args.weight)


def _h_fuchsian_mult(args):
    return fuchsian.discrete_series_multiplicity(parse_signature(args.sig), args.m, _mode(args))


def _h_fuchsian_formaldim(args):
    return fuchsian.formal_dimension_psl(args.m, _mode(args))


def _h_fuchsian_vndim(args):
    return fuchsian.vn_dimension(parse_signature(args.sig), args.m, _mode(args))


def _h_fuchsian_minweight(args):
    return fuchsian.minimal_discrete_series_weight(
        parse_signature(args.sig), _mode(args), cap=_scan_cap()
    )


def _h_fuchsian_twolattice(args):
    return fuchsian.two_lattice_vn_dimension(
        parse_signature(args.sig1), parse_signature(args.sig2), args.m, cap=_scan_cap()
    )


def _h_fuchsian_catalog(args):
    sig = fuchsian.catalog(args.name)
    return {"signature": str(sig), "covolume": fuchsian.covolume(sig)}


def _h_factor_coupling(args):
    return factors.matrix_coupling(args.n, args.k)


def _h_factor_jones(args):
    return factors.jones_index(_parse_fraction(args.sub), _parse_fraction(args.ambient))


def _h_factor_fgindex(args):
    return factors.free_group_index(args.ambient_rank, args.sub_rank)


def _h_ff_orders(args):
    return finite_field.group_orders(args.q)


def _h_ff_enumerate(args):
    return finite_field.enumerate_gl2(args.q)


def _h_ff_isregular(args):
    return finite_field.is_regular(args.q, args.a)


def _h_ff_countregular(args):
    return finite_field.count_regular_characters(args.q, _parse_nu(args.nu, args.q))


def _h_ff_bruteregular(args):
    return finite_field.brute_force_regular_characters(args.q, _parse_nu(args.nu, args.q))


def _h_ff_normtrace(args):
    return finite_field.norm_trace_facts(args.q)


def _h_ff_repdims(args):
    return finite_field.finite_rep_dims(args.q)


def _h_padic_valuation(args):
    r = _parse_fraction(args.r)
    return {
        "valuation": padic.padic_valuation(r, args.p),
        "abs": padic.padic_abs(r, args.p),
    }


def _h_padic_ultrametric(args):
    return padic.ultrametric_check(_parse_fraction(args.r), _parse_fraction(args.s), args.p)


def _h_padic_level(args):
    return padic.extension_level_arithmetic(args.n, args.e)


def _h_padic_quadext(args):
    return padic.quadratic_extension_count(args.p)


def _h_padic_weyl(args):
    return [str(word) for word in padic.weyl_enumerate(args.max_length)]


def _h_padic_weylsum(args):
    return padic.weyl_partial_sum(args.q, args.max_length)


def _h_padic_weylclosed(args):
    return padic.weyl_closed_form(args.q)


def _h_padic_haar(args):
    return padic.haar_volumes(args.q, _norm(args))


def _h_padic_steinberg(args):
    return padic.steinberg_formal_dim(args.q, _norm(args))


def _h_padic_depthzero(args):
    return padic.depth_zero_formal_dim(args.q, _norm(args))


def _h_padic_lattice(args):
    lattice = padic.ihara_lattice(args.q, args.n)
    return {"q": lattice.q.q, "rank": lattice.rank, "h": lattice.h}


def _h_padic_covolume(args):
    return padic.lattice_covolume(args.q, args.n, _norm(args))


def _h_padic_vndim(args):
    return padic.vn_dimension_padic(args.q, args.n, PadicRep(args.rep), _norm(args))


def _h_padic_jl(args):
    try:
        cls = parse_jl_class(args.cls)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    return padic.jl_formal_dim(args.p, cls)


def _h_table(args):
    return build_table(args.name)


# -- parser construction -----------------------------------------------------------


def _add_common(parser):
    parser.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default: text)",
    )
    parser.add_argument(
        "--ascii", action="store_true",
        help="render pi as 'pi' instead of the unicode letter",
    )


def _add_mode(parser):
    parser.add_argument(
        "--mode", choices=("psl", "sl"), default="psl",
        help="psl: odd parameters only (default); sl: any parameter >= 1",
    )


def _add_norm(parser):
    parser.add_argument(
        "--norm", choices=("iwahori1", "k1", "kq1", "khalf"), default="k1",
        help="Haar normalization: vol(I.Z/Z)=1, vol(K.Z/Z)=1 (default), q+1, or (q-1)/2",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="vndim",
        description="Exact covolumes, cusp-form dimensions, formal dimensions, and "
        "von Neumann dimensions for lattices in PSL(2,R) and PGL(2,F).",
    )
    groups = parser.add_subparsers(dest="group", required=True, metavar="GROUP")

    def op(sub, name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        _add_common(p)
        return p

    # exact
    g = groups.add_parser("exact", help="exact pi-rational scalar arithmetic")
    sub = g.add_subparsers(dest="verb", required=True, metavar="VERB")
    p = op(sub, "mul", _h_exact_mul, "exact product of two scalars")
    p.add_argument("--a", required=True, help="scalar, e.g. '5/(4*pi)' or JSON")
    p.add_argument("--b", required=True)
    p = op(sub, "compare", _h_exact_compare, "order two like scalars: less/equal/greater")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    # fuchsian
    g = groups.add_parser("fuchsian", help="lattices in PSL(2,R)")
    sub = g.add_subparsers(dest="verb", required=True, metavar="VERB")
    p = op(sub, "covolume", _h_fuchsian_covolume, "Gauss-Bonnet covolume of a signature")
    p.add_argument("--sig", required=True, help='signature "g;m1,...;h", e.g. "0;-;3"')
    p = op(sub, "cuspdim", _h_fuchsian_cuspdim, "dimension of the weight-k cusp forms")
    p.add_argument("--sig", required=True)
    p.add_argument("--weight", type=int, required=True, help="even weight k")
    p = op(sub, "mult", _h_fuchsian_mult, "multiplicity of the parameter-m discrete series")
    p.add_argument("--sig", required=True)
    p.add_argument("--m", type=int, required=True)
    _add_mode(p)
    p = op(sub, "formaldim", _h_fuchsian_formaldim, "formal dimension m/(4*pi)")
    p.add_argument("--m", type=int, required=True)
    _add_mode(p)
    p = op(sub, "vndim", _h_fuchsian_vndim, "von Neumann dimension over the lattice algebra")
    p.add_argument("--sig", required=True)
    p.add_argument("--m", type=int, required=True)
    _add_mode(p)
    p = op(sub, "minweight", _h_fuchsian_minweight, "smallest occurring discrete-series parameter")
    p.add_argument("--sig", required=True)
    _add_mode(p)
    p = op(sub, "twolattice", _h_fuchsian_twolattice,
           "dimension of lattice 2's algebra on the series realized over lattice 1")
    p.add_argument("--sig1", required=True)
    p.add_argument("--sig2", required=True)
    p.add_argument("--m", type=int, required=True)
    p = op(sub, "catalog", _h_fuchsian_catalog, "look up a named group's signature")
    p.add_argument("--name", required=True, help='"H<q>", "Gamma0(4)", '
                   '"Gamma0(4)capGamma(2)", or "Gamma(4)"')

    # factor
    g = groups.add_parser("factor", help="coupling constants and indices of finite factors")
    sub = g.add_subparsers(dest="verb", required=True, metavar="VERB")
    p = op(sub, "coupling", _h_factor_coupling, "coupling constant k/n of M_n on C^n (x) C^k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = op(sub, "jones", _h_factor_jones, "subfactor index from two module dimensions")
    p.add_argument("--sub", required=True, help="module dimension over the subfactor")
    p.add_argument("--ambient", required=True, help="module dimension over the ambient factor")
    p = op(sub, "fgindex", _h_factor_fgindex, "Nielsen-Schreier index between free-group ranks")
    p.add_argument("--ambient-rank", type=int, required=True)
    p.add_argument("--sub-rank", type=int, required=True)

    # ff
    g = groups.add_parser("ff", help="finite-field structure of GL(2,F_q)")
    sub = g.add_subparsers(dest="verb", required=True, metavar="VERB")
    p = op(sub, "orders", _h_ff_orders, "orders of GL(2,F_q) and its Borel subgroup")
    p.add_argument("--q", type=int, required=True)
    p = op(sub, "enumerate", _h_ff_enumerate, "brute-force matrix counts (q <= 9)")
    p.add_argument("--q", type=int, required=True)
    p = op(sub, "isregular", _h_ff_isregular, "is the index-a character of F_{q^2}^x regular?")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p = op(sub, "countregular", _h_ff_countregular, "closed-form regular-character count")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--nu", required=True, help="index mod q-1, or 'trivial'/'sign'")
    p = op(sub, "bruteregular", _h_ff_bruteregular, "enumerated regular-character count (q <= 9)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--nu", required=True)
    p = op(sub, "normtrace", _h_ff_normtrace, "norm/trace surjectivity and norm kernel (q <= 9)")
    p.add_argument("--q", type=int, required=True)
    p = op(sub, "repdims", _h_ff_repdims, "dimensions of the basic GL(2,F_q) representations")
    p.add_argument("--q", type=int, required=True)

    # padic
    g = groups.add_parser("padic", help="PGL(2,F) side: valuations, lattices, dimensions")
    sub = g.add_subparsers(dest="verb", required=True, metavar="VERB")
    p = op(sub, "valuation", _h_padic_valuation, "p-adic valuation and absolute value")
    p.add_argument("--r", required=True, help="rational, e.g. 7/25")
    p.add_argument("--p", type=int, required=True)
    p = op(sub, "ultrametric", _h_padic_ultrametric, "check |r+s|_p <= max(|r|_p, |s|_p)")
    p.add_argument("--r", required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--p", type=int, required=True)
    p = op(sub, "level", _h_padic_level, "character level arithmetic for a quadratic extension")
    p.add_argument("--n", type=int, required=True, help="level of the base character")
    p.add_argument("--e", type=int, required=True, help="ramification index, 1 or 2")
    p = op(sub, "quadext", _h_padic_quadext, "number of quadratic extensions of Q_p")
    p.add_argument("--p", type=int, required=True)
    p = op(sub, "weyl", _h_padic_weyl, "reduced affine-Weyl words up to a length")
    p.add_argument("--max-length", type=int, required=True)
    p = op(sub, "weylsum", _h_padic_weylsum, "partial sum 2*sum q^(-l) over lengths <= L")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-length", type=int, required=True)
    p = op(sub, "weylclosed", _h_padic_weylclosed, "closed form 2(q+1)/(q-1) of the full series")
    p.add_argument("--q", type=int, required=True)
    p = op(sub, "haar", _h_padic_haar, "volumes of I.Z/Z and K.Z/Z under a normalization")
    p.add_argument("--q", type=int, required=True)
    _add_norm(p)
    p = op(sub, "steinberg", _h_padic_steinberg, "Steinberg formal dimension")
    p.add_argument("--q", type=int, required=True)
    _add_norm(p)
    p = op(sub, "depthzero", _h_padic_depthzero, "depth-zero cuspidal formal dimension")
    p.add_argument("--q", type=int, required=True)
    _add_norm(p)
    p = op(sub, "lattice", _h_padic_lattice, "rank-n free lattice data (h double cosets)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p = op(sub, "covolume", _h_padic_covolume, "covolume of the rank-n free lattice")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_norm(p)
    p = op(sub, "vndim", _h_padic_vndim, "von Neumann dimension over the rank-n free lattice")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rep", choices=("steinberg", "cuspidal"), default="steinberg")
    _add_norm(p)
    p = op(sub, "jl", _h_padic_jl, "formal dimension via the quaternion-side table")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--cls", required=True, help="special, unram:j=<n>, or ram:j=<n>")

    # table
    p = groups.add_parser("table", help="regenerate a reference table")
    p.set_defaults(handler=_h_table)
    p.add_argument("name", help="hecke:<qmax> | free-congruence | vn-free:<m> | "
                   "padic:<q>:<nmax> | jl:<p>:<jmax>")
    _add_common(p)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.handler(args)
    except DomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render_result(result, args.format, args.ascii))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
