"""Command-line front end: ``torusq <subcommand> <algebra> [options]``.

Exit status is 0 on success, 2 for bad input or a violated precondition, and
1 when an internal exact self-check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .errors import InternalConsistencyError, PreconditionError
from .knotinv import TorusKnot, jones_hat, jones_lattice, jones_rosso, predict_trailing
from .multiplicity import (kostant_mult, kostant_partition, min_colour_index, symmetric_power_mult,
                           weight_system)
from .plethysm import plethysm_coeffs_w
from .qlaurent import QSeries
from .rootdata import RootDatum, Weight, build_root_datum
from .verify import leading_term_fit, ratio_table, stabilization
from .wcharacter import (WModuleLabel, limit_rhs_non_simply_laced, limit_rhs_simply_laced,
                         minimum_exponent, theta_sum, verify_unique_minimum)
from .weylgroup import enumerate_weyl


def _coords(text: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed weight vector {text!r}") from None


def _weight(d: RootDatum, coords: list[Fraction] | None, basis: str, flag: str) -> Weight:
    if coords is None:
        raise PreconditionError(f"{flag} is required")
    if len(coords) != d.rank:
        raise PreconditionError(f"{flag}: expected {d.rank} coordinates for {d.lie_type}, got {len(coords)}")
    if basis == "root":
        return d.root(coords)
    if any(c.denominator != 1 for c in coords):
        raise PreconditionError(f"{flag}: weight coordinates must be integers")
    return d.weight(coords)


def _colour(d: RootDatum, coords, basis: str, flag: str = "--lambda") -> Weight:
    lam = _weight(d, coords, basis, flag)
    if not d.is_dominant_integral(lam):
        raise PreconditionError(f"{flag}: {lam} is not dominant integral")
    return lam


def _fmt(x) -> str:
    return str(x)


def _table(headers: list[str], rows: list[list]) -> str:
    cells = [headers] + [[_fmt(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)


def _wlist(d: RootDatum, x: Weight) -> list[str]:
    return [str(c) for c in d.weight_coords(x)]


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _series_payload(s: QSeries, **meta) -> dict:
    out = s.to_dict()
    out.update({k: (str(v) if isinstance(v, Fraction) else v) for k, v in meta.items()})
    return out


# -- subcommands -----------------------------------------------------------------

def cmd_info(args, d: RootDatum):
    g = enumerate_weyl(d)
    payload = {
        "type": str(d.lie_type),
        "rank": d.rank,
        "cartan": [list(r) for r in d.cartan],
        "gram": [[str(x) for x in r] for r in d.gram],
        "positive_roots": [[str(c) for c in a.root_coords] for a in d.positive_roots],
        "rho": [str(c) for c in d.rho.root_coords],
        "rho_norm2": str(d.norm2(d.rho)),
        "coxeter": d.coxeter,
        "dual_coxeter": d.dual_coxeter,
        "labels": list(d.labels),
        "colabels": list(d.colabels),
        "J": list(d.j_set),
        "sigma_bar": {str(j): list(d.sigma_bar[j].word) for j in d.j_set},
        "i_of_j": {str(j): d.i_of_j[j] for j in d.j_set},
        "short_len2": str(d.short_len),
        "weyl_order": g.order,
    }
    lines = [
        f"type            {d.lie_type}",
        f"positive roots  {len(d.positive_roots)}",
        f"rho (root)      ({', '.join(payload['rho'])})",
        f"|rho|^2         {payload['rho_norm2']}",
        f"h, h_dual       {d.coxeter}, {d.dual_coxeter}",
        f"labels          {payload['labels']}",
        f"colabels        {payload['colabels']}",
        f"J               {payload['J']}",
        f"short root |.|^2 {payload['short_len2']}",
        f"|W|             {g.order}",
    ]
    for j in d.j_set:
        word = "".join(f"r{i}" for i in d.sigma_bar[j].word) or "1"
        lines.append(f"sigma_{j}         {word}  (i = {d.i_of_j[j]})")
    _emit(args, "\n".join(lines), payload)


def cmd_mult(args, d: RootDatum):
    lam = _colour(d, args.lam, args.basis)
    if args.mu is not None:
        mu = _weight(d, args.mu, args.basis, "--mu")
        if args.engine == "kostant":
            m = kostant_mult(d, enumerate_weyl(d), lam, mu)
        else:
            m = weight_system(d, lam).mult(mu)
        _emit(args, str(m), {"lambda": _wlist(d, lam), "mu": _wlist(d, mu), "mult": str(m)})
        return
    t = weight_system(d, lam)
    rows = [[",".join(map(str, w)), m] for w, m in sorted(t.mults_w.items(), reverse=True)]
    _emit(args, _table(["weight", "mult"], rows), t.to_dict())


def _knot(args) -> TorusKnot:
    if args.p is None or args.pp is None:
        raise PreconditionError("--p and --pp are required")
    return TorusKnot(args.p, args.pp)


def cmd_jones(args, d: RootDatum):
    lam = _colour(d, args.lam, args.basis)
    k = _knot(args)
    g = enumerate_weyl(d)
    s = jones_rosso(d, g, k, lam) if args.form == "rosso" else jones_lattice(d, g, k, lam)
    _emit(args, str(s), s.to_dict())


def cmd_jhat(args, d: RootDatum):
    lam = _colour(d, args.lam, args.basis)
    s = jones_hat(d, enumerate_weyl(d), _knot(args), lam, window=args.window)
    _emit(args, str(s), s.to_dict())


def cmd_trailing(args, d: RootDatum):
    lam = _colour(d, args.lam, args.basis)
    k = _knot(args)
    g = enumerate_weyl(d)
    pred = predict_trailing(d, g, k, lam)
    e, c = jones_lattice(d, g, k, lam).trailing()
    coeff = pred.coefficient(d, lam)
    payload = {"regime": pred.regime, "exponent": str(pred.exponent), "sign": pred.sign,
               "descriptor": pred.coeff_descriptor, "predicted_coeff": str(coeff),
               "valid_from_n": pred.min_n, "empirical_exponent": str(e), "empirical_coeff": str(c)}
    text = _table(["", "exponent", "coefficient"],
                  [["predicted", pred.exponent, f"{coeff} = {pred.sign:+d}*{pred.coeff_descriptor}"],
                   ["computed", e, c]])
    text += f"\nregime {pred.regime}, valid for admissible n >= {pred.min_n}"
    _emit(args, text, payload)


def _int_w(d: RootDatum, coords, flag: str) -> tuple[int, ...] | None:
    if coords is None:
        return None
    return d.int_weight_coords(_colour(d, coords, "weight", flag))


def _label(args, d: RootDatum) -> WModuleLabel:
    if args.p is None or args.pp is None:
        raise PreconditionError("--p and --pp are required")
    return WModuleLabel(args.p, args.pp, args.j, _int_w(d, args.nu, "--nu"), _int_w(d, args.mu, "--mu"))


def cmd_wchar(args, d: RootDatum):
    label = _label(args, d)
    label.validate(d)
    s = theta_sum(d, enumerate_weyl(d), label, args.window)
    emin = minimum_exponent(d, label)
    sign = s.trailing()[1]
    _emit(args, str(s), _series_payload(s, min_exponent=emin, sign=sign))


def cmd_minimum(args, d: RootDatum):
    label = _label(args, d)
    r = verify_unique_minimum(d, enumerate_weyl(d), label, args.radius)
    payload = {"min_exponent": str(r.min_exponent), "alpha": [str(c) for c in r.alpha.root_coords],
               "w": list(r.w.word), "radius": r.radius, "certified_radius": r.certified_radius,
               "points_checked": r.points_checked, "unique": r.unique}
    word = "".join(f"r{i}" for i in r.w.word) or "1"
    text = (f"unique minimum {r.min_exponent} at alpha = ({', '.join(payload['alpha'])}), w = {word}\n"
            f"radius {r.radius:.6f} (certified {r.certified_radius:.6f}), {r.points_checked} pairs checked")
    _emit(args, text, payload)


def cmd_limit_rhs(args, d: RootDatum):
    k = _knot(args)
    g = enumerate_weyl(d)
    if d.simply_laced:
        s = limit_rhs_simply_laced(d, g, k, args.j, args.window)
    else:
        s = limit_rhs_non_simply_laced(d, g, k, args.window)
    _emit(args, str(s), s.to_dict())


def cmd_stabilize(args, d: RootDatum):
    lam = _colour(d, args.lam, args.basis)
    r = stabilization(d, _knot(args), lam, args.window, args.nmax)
    rows = [[n, dep] for n, dep in r.depths]
    text = (f"{r.label}: agreement depth of J-hat(n*lambda) with the limit series ({r.regime})\n"
            + _table(["n", "depth"], rows)
            + f"\nstabilized at: {r.stabilized_at}\nmonotone: {r.monotone}")
    _emit(args, text, r.to_dict(d))


def cmd_ratios(args, d: RootDatum):
    lam = _colour(d, args.lam, args.basis)
    mu1 = _weight(d, args.mu1, args.basis, "--mu1")
    mu2 = _weight(d, args.mu2, args.basis, "--mu2")
    r = ratio_table(d, lam, mu1, mu2, args.nmax)
    rows = [[x.n, x.m1, x.m2, "-" if x.ratio is None else x.ratio, x.status] for x in r.rows]
    text = (f"{r.label}: m(n*lambda, mu1) / m(n*lambda, mu2)\n"
            + _table(["n", "m1", "m2", "ratio", "status"], rows)
            + f"\n|ratio - 1|: first {r.first_deviation}, final {r.final_deviation}, "
              f"approaching {r.approaching}")
    _emit(args, text, r.to_dict(d))


def cmd_fit(args, d: RootDatum):
    lam = _colour(d, args.lam, args.basis)
    mu = _weight(d, args.mu, args.basis, "--mu")
    f = leading_term_fit(d, lam, mu, args.degree, args.nmax, args.stride)
    text = (f"{f.label}: degree-{f.degree} leading coefficient estimate {f.estimate}"
            f" (previous {f.previous}; stride {f.stride}, stable {f.stable})")
    _emit(args, text, f.to_dict())


def cmd_plethysm(args, d: RootDatum):
    lam = _colour(d, args.lam, args.basis)
    if args.p is None:
        raise PreconditionError("--p is required")
    coeffs = plethysm_coeffs_w(d, enumerate_weyl(d), lam, args.p)
    rows = [[",".join(map(str, w)), c] for w, c in sorted(coeffs.items(), reverse=True)]
    payload = {"lambda": _wlist(d, lam), "p": args.p,
               "coeffs": [[list(w), str(c)] for w, c in sorted(coeffs.items())]}
    _emit(args, _table(["mu", "coeff"], rows), payload)


def cmd_partition(args, d: RootDatum):
    beta = _weight(d, args.beta, "root", "--beta")
    v = kostant_partition(d, beta)
    _emit(args, str(v), {"beta": [str(c) for c in beta.root_coords], "count": str(v)})


def cmd_n0(args, d: RootDatum):
    lam = _colour(d, args.lam, args.basis)
    mu = _weight(d, args.mu, args.basis, "--mu")
    n0 = min_colour_index(d, lam, mu)
    _emit(args, str(n0), {"lambda": _wlist(d, lam), "mu": _wlist(d, mu), "n0": n0,
                          "step": d.coset_order(lam)})


def cmd_sympow(args, d: RootDatum):
    mu = _weight(d, args.mu, args.basis, "--mu")
    v = symmetric_power_mult(d.lie_type.series, d.rank, args.colour, mu)
    _emit(args, str(v), {"mult": str(v)})


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="torusq", description="Coloured torus-knot invariants "
                                 "and W-algebra characters in exact arithmetic.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, *, lam=False, mu=False, knot=False, window=False,
            window_required=False, nmax=False, j=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("algebra", help="Lie type such as A2, C2, G2")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--basis", choices=["weight", "root"], default="weight",
                       help="coordinates of weight arguments (default: fundamental weights)")
        if lam:
            p.add_argument("--lambda", dest="lam", type=_coords, help="colour, comma-separated")
        if mu:
            p.add_argument("--mu", type=_coords, help="weight, comma-separated")
        if knot:
            p.add_argument("--p", type=int)
            p.add_argument("--pp", type=int)
        if window:
            p.add_argument("--window", type=int, required=window_required)
        if nmax:
            p.add_argument("--nmax", type=int, required=True)
        if j:
            p.add_argument("--j", type=int, default=0)
        p.set_defaults(fn=fn)
        return p

    add("info", cmd_info, "root datum summary")
    p = add("mult", cmd_mult, "weight multiplicities", lam=True, mu=True)
    p.add_argument("--engine", choices=["freudenthal", "kostant"], default="freudenthal")
    p = add("jones", cmd_jones, "coloured invariant of T(p,p')", lam=True, knot=True)
    p.add_argument("--form", choices=["lattice", "rosso"], default="lattice")
    add("jhat", cmd_jhat, "invariant divided by its trailing monomial", lam=True, knot=True, window=True)
    add("trailing", cmd_trailing, "predicted and computed trailing monomial", lam=True, knot=True)
    p = add("wchar", cmd_wchar, "lattice theta-sum", knot=True, window=True, window_required=True,
            j=True, mu=True)
    p.add_argument("--nu", type=_coords, help="finite part nu, weight coordinates")
    p = add("minimum", cmd_minimum, "check the unique minimum of the theta exponent", knot=True,
            j=True, mu=True)
    p.add_argument("--nu", type=_coords, help="finite part nu, weight coordinates")
    p.add_argument("--radius", type=float)
    add("limit-rhs", cmd_limit_rhs, "predicted large-colour limit", knot=True, window=True,
        window_required=True, j=True)
    add("stabilize", cmd_stabilize, "agreement of J-hat(n lambda) with the limit", lam=True,
        knot=True, window=True, window_required=True, nmax=True)
    p = add("ratios", cmd_ratios, "multiplicity ratio table", lam=True, nmax=True)
    p.add_argument("--mu1", type=_coords, required=True)
    p.add_argument("--mu2", type=_coords, required=True)
    p = add("fit", cmd_fit, "leading coefficient by finite differences", lam=True, mu=True, nmax=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--stride", type=int)
    p = add("plethysm", cmd_plethysm, "Adams-operation plethysm coefficients", lam=True)
    p.add_argument("--p", type=int, required=True)
    p = add("partition", cmd_partition, "Kostant partition function")
    p.add_argument("--beta", type=_coords, required=True, help="root coordinates")
    add("n0", cmd_n0, "least admissible colour index with mu a weight", lam=True, mu=True)
    p = add("sympow", cmd_sympow, "closed form for j*Lambda_1 in types B, C, D", mu=True)
    p.add_argument("--colour", type=int, required=True, help="the multiple j of Lambda_1")
    return ap


def run(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        d = build_root_datum(args.algebra)
        args.fn(args, d)
    except PreconditionError as e:
        print(f"torusq: error: {e}", file=sys.stderr)
        return 2
    except InternalConsistencyError as e:
        print(f"torusq: internal consistency failure: {e}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
