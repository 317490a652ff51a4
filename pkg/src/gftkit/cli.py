"""Command line front end.

Exit codes: 0 success, 2 invalid input or usage, 3 a verification scan
found a counterexample.  All emitted numbers are formatted to 12
significant digits and the output contains no timestamps, so repeated
invocations with the same arguments produce identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Optional

from .core import AnalyticFunction
from .constants import (
    SlitSpec,
    a_min,
    arg_theorem_constants,
    c_lambda,
    eta,
    m_alpha,
    radius_convexity,
    radius_inv_alpha_convexity,
    slit_constants,
    strong_orders,
    thm3_constants,
)
from .errors import EvaluationError, GftError, ValidationError
from .functionals import FunctionalKind, FunctionalSpec, evaluate_functional
from .membership import (
    ClassSpec,
    DiskGrid,
    Verdict,
    check_membership,
    default_grid,
    sample_grid,
)
from .radii import family_property_radius
from .theorems import (
    TheoremCase,
    make_family,
    mobius_ratio_family,
    random_taylor_family,
    sector_power_family,
    verify_theorem,
)


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _round12(obj):
    if isinstance(obj, float):
        if math.isnan(obj) or math.isinf(obj):
            return None
        return float(_fmt(obj))
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round12(v) for v in obj]
    return obj


def _emit_json(obj) -> None:
    print(json.dumps(_round12(obj), sort_keys=True))


# ---------------------------------------------------------------- parsing


def _parse_floats(rest: str, want: tuple[int, ...], what: str) -> list[float]:
    parts = [t for t in rest.split(",") if t.strip()] if rest else []
    if len(parts) not in want:
        raise ValidationError(f"{what} takes {' or '.join(map(str, want))} parameters, got {len(parts)}")
    try:
        return [float(t) for t in parts]
    except ValueError as exc:
        raise ValidationError(f"bad number in {what!r}: {exc}") from None


def _parse_class(text: str) -> ClassSpec:
    head, _, rest = text.partition(":")
    key = head.strip()
    if key in ("starlike", "convex", "R"):
        if rest:
            raise ValidationError(f"class {key} takes no parameters")
        return {
            "starlike": ClassSpec.starlike,
            "convex": ClassSpec.convex,
            "R": ClassSpec.r,
        }[key]()
    if key == "G":
        a, b = _parse_floats(rest, (2,), "G")
        return ClassSpec.g(a, b)
    if key == "P_TILT":
        (lam,) = _parse_floats(rest, (1,), "P_TILT")
        return ClassSpec.p_tilt(lam)
    if key == "U":
        lam, a = _parse_floats(rest, (2,), "U")
        return ClassSpec.u(lam, a)
    if key == "SS":
        (a,) = _parse_floats(rest, (1,), "SS")
        return ClassSpec.strongly_starlike(a)
    if key == "M":
        (a,) = _parse_floats(rest, (1,), "M")
        return ClassSpec.m_alpha(a)
    raise ValidationError(
        f"unknown class {key!r}; use starlike, convex, R, G:a,b, P_TILT:lam, U:lam,a, SS:a or M:a"
    )


def _parse_functional(text: str) -> FunctionalSpec:
    head, _, rest = text.partition(":")
    key = head.strip()
    if key == "starlike":
        return FunctionalSpec.starlike()
    if key == "convex":
        return FunctionalSpec.convex()
    if key == "mixed":
        (lam,) = _parse_floats(rest, (1,), "mixed")
        return FunctionalSpec.mixed(lam)
    if key == "u":
        (a,) = _parse_floats(rest, (1,), "u")
        return FunctionalSpec.u_func(a)
    if key == "slit1":
        a, b = _parse_floats(rest, (2,), "slit1")
        return FunctionalSpec.slit1_lhs(a, b)
    if key == "tilted":
        (lam,) = _parse_floats(rest, (1,), "tilted")
        return FunctionalSpec.tilted_lhs(lam)
    if key == "thm3":
        vals = _parse_floats(rest, (3, 4), "thm3")
        p = int(vals[3]) if len(vals) == 4 else 1
        return FunctionalSpec.thm3_lhs(vals[0], vals[1], vals[2], p)
    if key == "ratio2":
        g, d = _parse_floats(rest, (2,), "ratio2")
        return FunctionalSpec.two_fn_ratio(g, d)
    if key == "power2":
        g, d, a = _parse_floats(rest, (3,), "power2")
        return FunctionalSpec.two_fn_power(g, d, a)
    if key == "argsum":
        (g,) = _parse_floats(rest, (1,), "argsum")
        return FunctionalSpec.arg_sum(g)
    raise ValidationError(f"unknown functional {key!r}")


def _load_fn(path: str) -> AnalyticFunction:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read function file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"function file {path} is not valid JSON: {exc}") from None
    return AnalyticFunction.from_json(data)


_GRID_HELP = "default, coarse, fine, or r1,r2,...@angles (e.g. 0.3,0.6,0.9@360)"


def _parse_grid(profile: Optional[str]) -> DiskGrid:
    if profile is None or profile == "default":
        return default_grid()
    if profile == "coarse":
        return sample_grid([k / 10 for k in range(1, 10)] + [0.95], 180)
    if profile == "fine":
        return sample_grid(default_grid().radii, 1440)
    radii_part, sep, angle_part = profile.partition("@")
    if sep:
        try:
            radii = [float(t) for t in radii_part.split(",") if t.strip()]
            angles = int(angle_part)
        except ValueError as exc:
            raise ValidationError(f"bad grid profile {profile!r}: {exc}") from None
        return sample_grid(radii, angles)
    raise ValidationError(f"unknown grid profile {profile!r}; use {_GRID_HELP}")


# ---------------------------------------------------------------- constants


def _cmd_constants(args) -> int:
    lines: list[tuple[str, float]] = []

    def emit(name: str, thunk) -> None:
        try:
            lines.append((name, float(thunk())))
        except GftError:
            pass

    alpha, beta, lam = args.alpha, args.beta, args.lam
    gamma, delta = args.gamma, args.delta

    if alpha is not None and beta is not None:
        emit("sector_half_angle", lambda: eta(alpha, beta))
        n = args.n if args.n is not None else 1

        def slit_parts():
            return slit_constants(alpha, beta, n)

        try:
            s = slit_parts()
            down, up = s.rays
            lines.append(("slit_x1", down.anchor.real))
            lines.append(("slit_y1", down.anchor.imag))
            lines.append(("slit_y2", up.anchor.imag))
        except GftError:
            pass
        if gamma is not None:
            try:
                w = arg_theorem_constants(alpha, beta, gamma)
                lines.append(("window_delta1", w.delta1))
                lines.append(("window_delta2", w.delta2))
                lines.append(("window_M1", w.M1))
                lines.append(("window_M2", w.M2))
            except GftError:
                pass
    if gamma is not None and delta is not None:
        p = args.p if args.p is not None else 1
        tilt = lam if lam is not None else 0.0
        try:
            c = thm3_constants(gamma, delta, p, tilt)
            lines.append(("weighted_slit_x", c.x))
            lines.append(("weighted_slit_y", c.y_min))
        except GftError:
            pass
    if alpha is not None and gamma is not None and beta is None:
        try:
            so = strong_orders(alpha, gamma)
            lines.append(("strong_arg_bound", so.delta))
            lines.append(("strong_convex_order", so.convex_order))
        except GftError:
            pass
    if alpha is not None:
        emit("ratio_bound", lambda: m_alpha(alpha))
    if lam is not None:
        emit("mixed_slit_height", lambda: c_lambda(lam))
        emit("tilted_slit_height", lambda: a_min(lam))
        if alpha is not None:
            emit("radius_convexity", lambda: radius_convexity(lam, alpha))
            emit(
                "radius_inv_alpha_convexity",
                lambda: radius_inv_alpha_convexity(lam, alpha),
            )

    if not lines:
        print("gftkit: no constants apply to the given parameters", file=sys.stderr)
        return 2
    if args.json:
        _emit_json({name: value for name, value in lines})
    else:
        for name, value in lines:
            print(f"{name} = {_fmt(value)}")
    return 0


# ---------------------------------------------------------------- check


def _cmd_check(args) -> int:
    spec = _parse_class(args.cls)
    f = _load_fn(args.fn)
    grid = _parse_grid(args.grid)
    rep = check_membership(spec, f, grid, args.eps)
    _emit_json(rep.to_json())
    return 0


# ---------------------------------------------------------------- verify


def _parse_family(text: Optional[str]):
    if text is None or text == "default":
        return None
    if text == "mobius":
        return mobius_ratio_family()
    if text == "sector":
        return sector_power_family()
    if text.startswith("random:"):
        parts = text[len("random:") :].split(",")
        if len(parts) not in (3, 4):
            raise ValidationError("random family takes seed,degree,count[,tag]")
        try:
            seed, degree, count = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError as exc:
            raise ValidationError(f"bad random family parameter: {exc}") from None
        tag = parts[3].strip() if len(parts) == 4 else "A"
        return random_taylor_family(seed, degree, count, tag)
    raise ValidationError(
        f"unknown family {text!r}; use default, mobius, sector or random:seed,degree,count[,tag]"
    )


def _cmd_verify(args) -> int:
    try:
        params = json.loads(args.params) if args.params else {}
    except json.JSONDecodeError as exc:
        raise ValidationError(f"--params is not valid JSON: {exc}") from None
    if not isinstance(params, dict):
        raise ValidationError("--params must be a JSON object")
    case = TheoremCase.make(args.case, **params)
    family = _parse_family(args.family)
    rep = verify_theorem(case, family)
    _emit_json(rep.to_json())
    if args.out:
        Path(args.out).write_text(rep.to_csv(), encoding="utf-8", newline="\n")
    return 3 if rep.counterexample_found else 0


# ---------------------------------------------------------------- radius


def _cmd_radius(args) -> int:
    lam, alpha = args.lam, args.alpha
    gate = (ClassSpec.u(lam, alpha), ClassSpec.r())  # validates lam, alpha up front
    family = _parse_family(args.family)
    if family is None:
        family = mobius_ratio_family()
    members = make_family(family)
    grid = default_grid()
    kept = [
        mem
        for mem in members
        if all(check_membership(s, mem.f, grid).verdict is Verdict.HOLDS for s in gate)
    ]
    if not kept:
        raise ValidationError("no family member passes the membership gate for these parameters")

    rows: list[tuple[str, float, float, str]] = []
    conv = family_property_radius(kept, ClassSpec.convex(), tol=args.tol)
    rows.append(("convexity", radius_convexity(lam, alpha), conv.radius, conv.witness_label))
    inv = family_property_radius(kept, ClassSpec.m_alpha(1 / alpha), tol=args.tol)
    rows.append(
        ("inv_alpha_convexity", radius_inv_alpha_convexity(lam, alpha), inv.radius, inv.witness_label)
    )
    for name, closed, envelope, witness in rows:
        print(
            f"{name}: closed_form = {_fmt(closed)}, family_envelope = {_fmt(envelope)}, "
            f"witness = {witness}"
        )
    if args.out:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["property", "lambda", "alpha", "closed_form_R", "empirical_family_R", "witness_params"]
        )
        for name, closed, envelope, witness in rows:
            writer.writerow([name, _fmt(lam), _fmt(alpha), _fmt(closed), _fmt(envelope), witness])
        Path(args.out).write_text(buf.getvalue(), encoding="utf-8", newline="\n")
    return 0


# ---------------------------------------------------------------- dump


def _geometry_for(spec: FunctionalSpec, lam: Optional[float]) -> Optional[SlitSpec]:
    from .constants import Direction, Ray

    def symmetric(height: float) -> SlitSpec:
        return SlitSpec(
            (
                Ray(complex(0.0, height), Direction.UP),
                Ray(complex(0.0, -height), Direction.DOWN),
            )
        )

    k = spec.kind
    if k is FunctionalKind.SLIT1_LHS:
        return slit_constants(spec.alpha, spec.beta, 1)
    if k is FunctionalKind.TILTED_LHS:
        return symmetric(a_min(spec.lam))
    if k is FunctionalKind.MIXED:
        return symmetric(c_lambda(spec.lam))
    if k is FunctionalKind.CONVEX:
        return symmetric(c_lambda(0.0))
    if k in (FunctionalKind.THM3_LHS, FunctionalKind.TWO_FN_RATIO, FunctionalKind.TWO_FN_POWER):
        return thm3_constants(spec.gamma, spec.delta, spec.p, lam if lam is not None else 0.0).slit
    return None


def _cmd_dump(args) -> int:
    spec = _parse_functional(args.functional)
    f = _load_fn(args.fn)
    g = _load_fn(args.fn2) if args.fn2 else None
    grid = _parse_grid(args.grid)
    values = evaluate_functional(spec, f, grid.points, g=g)
    lines = ["re_z,im_z,re_w,im_w"]
    for z, w in zip(grid.points, values):
        lines.append(f"{_fmt(z.real)},{_fmt(z.imag)},{_fmt(w.real)},{_fmt(w.imag)}")
    out = Path(args.out)
    out.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")

    slit = _geometry_for(spec, args.lam)
    geometry = {"rays": []}
    if slit is not None:
        geometry["rays"] = [
            {
                "anchor": [ray.anchor.real, ray.anchor.imag],
                "direction": ray.direction.name.lower(),
            }
            for ray in slit.rays
        ]
    side = out.with_name(out.stem + ".geometry.json")
    side.write_text(
        json.dumps(_round12(geometry), sort_keys=True) + "\n", encoding="utf-8", newline="\n"
    )
    print(f"wrote {out} and {side}")
    return 0


# ---------------------------------------------------------------- driver


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gftkit",
        description="numerical toolkit for sector and radius estimates of disk maps",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("constants", help="print the closed-form constants that apply")
    for flag in ("--alpha", "--beta", "--gamma", "--delta"):
        p.add_argument(flag, type=float)
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_constants)

    p = sub.add_parser("check", help="grid membership verdict for one function")
    p.add_argument("--class", dest="cls", required=True, help="e.g. starlike, G:0.75,0.5, U:1,1")
    p.add_argument("--fn", required=True, help="JSON file describing the function")
    p.add_argument("--grid", help=_GRID_HELP)
    p.add_argument("--eps", type=float, default=1e-9, help="margin below which a verdict is UNDECIDED")
    p.set_defaults(run=_cmd_check)

    p = sub.add_parser("verify", help="scan a family against one implication")
    p.add_argument("--case", required=True)
    p.add_argument("--params", help="JSON object overriding case parameters")
    p.add_argument("--family", help="default, mobius, sector or random:seed,degree,count[,tag]")
    p.add_argument("--out", help="write per-member CSV here")
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("radius", help="closed-form radius vs family envelope")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--family", help="mobius (default), sector or random:seed,degree,count[,tag]")
    p.add_argument("--tol", type=float, default=1e-4, help="ring-bisection tolerance")
    p.add_argument("--out", help="write CSV here")
    p.set_defaults(run=_cmd_radius)

    p = sub.add_parser("dump", help="sample one functional over the grid to CSV")
    p.add_argument("--functional", required=True, help="e.g. slit1:0.75,0.5 or mixed:0.5")
    p.add_argument("--fn", required=True)
    p.add_argument("--fn2", help="second function for the two-function functionals")
    p.add_argument("--lambda", dest="lam", type=float, help="tilt for the slit geometry sidecar")
    p.add_argument("--grid", help=_GRID_HELP)
    p.add_argument("--out", required=True)
    p.set_defaults(run=_cmd_dump)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args)
    except ValidationError as exc:
        print(f"gftkit: {exc}", file=sys.stderr)
        return 2
    except EvaluationError as exc:
        print(f"gftkit: evaluation failed: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
