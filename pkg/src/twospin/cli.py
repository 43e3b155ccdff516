"""Command-line interface.

Subcommands: verify, evolve, propagator, metric, classify, scan,
figure-data.  All numeric output is machine-readable: JSON objects carry
a schema_version field, CSV files use 17-significant-digit decimals so a
round-trip through text is lossless.  Exit codes: 0 success, 1 invalid
input, 2 oracle-suite failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .algebra import ATOL
from .entanglement import (
    Pattern,
    ProductStateAngles,
    concurrence,
    product_state,
    scan_concurrence,
)
from .errors import BadRange, NotNormalized, TwoSpinError
from .evolution import (
    EvolutionParams,
    TwoSpinState,
    evolve,
    params_from_time,
    propagator,
)
from .geometry import (
    classify_manifold,
    generator_pair,
    invariants_of,
    metric_analytic,
    metric_finite_difference,
    metric_from_variances,
)
from .model import Anisotropy, ModelParams
from .suites import run_verify

SCHEMA_VERSION = 1
# A state this close to unit norm is silently repaired (with a warning);
# anything further off is rejected.
NEAR_NORM_TOL = 1e-6

FIGURE_POINTS = 721
DEFAULT_SCAN_POINTS = 361


class UsageError(TwoSpinError):
    """Bad command-line input."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _model_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--model", choices=["heisenberg", "dm"], default="heisenberg")
    p.add_argument("--J", dest="J", type=float, default=1.0, help="exchange coupling")
    p.add_argument("--alpha", default="1", help="anisotropy, decimal or p/q")
    p.add_argument("--hz", type=float, default=0.0, help="z-axis field")
    p.add_argument("--gamma", type=float, default=1.0, help="metric scale")


def _state_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--state",
        default=None,
        help="amplitudes a,b,c,d as complex literals, e.g. 0,1,0,0 or 0.5,0.5j,-0.5,0.5j",
    )
    p.add_argument(
        "--product",
        default=None,
        help="product state chi,gamma,pattern with pattern in pm|mp|pp|mm",
    )


def _output_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.add_argument("--format", choices=["json", "csv"], default=None)
    p.add_argument(
        "--degrees", action="store_true", help="interpret input angles as degrees"
    )


def _angle(value: float, args) -> float:
    return math.radians(value) if args.degrees else value


def _resolve_params(args) -> ModelParams:
    return ModelParams(
        J=args.J,
        alpha=Anisotropy.parse(args.alpha),
        h_z=args.hz,
        kind=args.model,
    )


def _resolve_state(args):
    """Initial state from --product or --state (default |ud>).

    Returns (state, chi, pattern); the angles are None unless the state
    came from --product.
    """
    if args.state is not None and args.product is not None:
        raise UsageError("pass --state or --product, not both")
    if args.product is not None:
        parts = args.product.split(",")
        if len(parts) != 3:
            raise UsageError("--product expects chi,gamma,pattern")
        try:
            chi = _angle(float(parts[0]), args)
            gam = _angle(float(parts[1]), args)
        except ValueError as exc:
            raise UsageError(f"bad --product angles: {exc}") from None
        angles = ProductStateAngles(chi, gam, parts[2])
        return product_state(angles), chi, angles.pattern
    if args.state is not None:
        parts = args.state.split(",")
        if len(parts) != 4:
            raise UsageError("--state expects four comma-separated amplitudes")
        try:
            amps = [complex(p.strip()) for p in parts]
        except ValueError as exc:
            raise UsageError(f"bad amplitude: {exc}") from None
        norm = math.sqrt(sum(abs(z) ** 2 for z in amps))
        if abs(norm - 1.0) > NEAR_NORM_TOL:
            raise NotNormalized(
                f"state norm {norm!r} is not 1 within {NEAR_NORM_TOL}"
            )
        if abs(norm - 1.0) > ATOL:
            print(
                f"warning: state norm {norm!r} off by {abs(norm - 1.0):.3e}; renormalizing",
                file=sys.stderr,
            )
        return TwoSpinState.normalized(*amps), None, None
    return TwoSpinState(0.0, 1.0, 0.0, 0.0), None, None


def _alpha_json(alpha: Anisotropy) -> dict:
    frac = alpha.as_rational()
    return {
        "value": alpha.value,
        "exact": None if frac is None else f"{frac.numerator}/{frac.denominator}",
    }


def _complex_json(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")
        print(f"wrote {out}", file=sys.stderr)


def _emit_json(payload: dict, out: str | None) -> None:
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", out)


def _emit_csv_row(fields: dict, out: str | None) -> None:
    header = ",".join(fields)
    row = ",".join(
        v if isinstance(v, str) else f"{v:.17g}" for v in fields.values()
    )
    _emit(header + "\n" + row + "\n", out)


def _scan_csv(samples) -> str:
    lines = ["theta,concurrence"]
    lines += [f"{t:.17g},{c:.17g}" for t, c in samples]
    return "\n".join(lines) + "\n"


def _format_or(args, default: str) -> str:
    return args.format if args.format is not None else default


def cmd_verify(args) -> int:
    params = _resolve_params(args)
    state, _, _ = _resolve_state(args)
    if _format_or(args, "json") != "json":
        raise UsageError("verify reports JSON only")
    report = run_verify(
        params,
        state,
        draws=args.draws,
        seed=args.seed,
        inject_defect=args.inject_defect,
    )
    _emit_json(report, args.out)
    return 0 if report["passed"] else 2


def cmd_evolve(args) -> int:
    params = _resolve_params(args)
    state, _, _ = _resolve_state(args)
    if args.t is not None:
        if args.theta is not None or args.phi is not None:
            raise UsageError("pass either --t or the pair --theta/--phi")
        ep = params_from_time(params.J, params.h_z, args.t)
    elif args.theta is None:
        raise UsageError("--theta (or --t) is required")
    else:
        ep = EvolutionParams(
            _angle(args.theta, args),
            _angle(args.phi, args) if args.phi is not None else 0.0,
        )
    evolved = evolve(state, ep, params.alpha, params.kind)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "model": params.kind.value,
        "J": params.J,
        "alpha": _alpha_json(params.alpha),
        "h_z": params.h_z,
        "theta": ep.theta,
        "phi": ep.phi,
        "amplitudes": {
            name: _complex_json(z)
            for name, z in zip("abcd", evolved.amplitudes())
        },
        "concurrence": concurrence(evolved),
    }
    if _format_or(args, "json") == "json":
        _emit_json(payload, args.out)
    else:
        fields = {"theta": ep.theta, "phi": ep.phi}
        for name, z in zip("abcd", evolved.amplitudes()):
            fields[f"{name}_re"] = z.real
            fields[f"{name}_im"] = z.imag
        fields["concurrence"] = payload["concurrence"]
        _emit_csv_row(fields, args.out)
    return 0


def cmd_propagator(args) -> int:
    params = _resolve_params(args)
    if _format_or(args, "json") != "json":
        raise UsageError("propagator reports JSON only")
    u = propagator(params, args.t)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "model": params.kind.value,
        "J": params.J,
        "alpha": _alpha_json(params.alpha),
        "h_z": params.h_z,
        "t": args.t,
        "matrix": [[_complex_json(u[i, j]) for j in range(4)] for i in range(4)],
    }
    _emit_json(payload, args.out)
    return 0


def cmd_metric(args) -> int:
    params = _resolve_params(args)
    state, _, _ = _resolve_state(args)
    inv = invariants_of(state, params.kind)
    closed = metric_analytic(inv, params.alpha, args.gamma)
    var = metric_from_variances(state, generator_pair(params), args.gamma)
    fd = metric_finite_difference(
        state, params.alpha, params.kind, EvolutionParams(0.0, 0.0), args.gamma
    )
    defects = {
        "variance": max(
            abs(getattr(closed, n) - getattr(var, n)) for n in ("g_tt", "g_pp", "g_tp")
        ),
        "finite_difference": max(
            abs(getattr(closed, n) - getattr(fd, n)) for n in ("g_tt", "g_pp", "g_tp")
        ),
    }
    payload = {
        "schema_version": SCHEMA_VERSION,
        "model": params.kind.value,
        "alpha": _alpha_json(params.alpha),
        "gamma": args.gamma,
        "A": inv.A,
        "B": inv.B,
        "D": inv.D,
        "g_theta_theta": closed.g_tt,
        "g_phi_phi": closed.g_pp,
        "g_theta_phi": closed.g_tp,
        "flat": True,
        "cross_check_defects": defects,
    }
    if _format_or(args, "json") == "json":
        _emit_json(payload, args.out)
    else:
        _emit_csv_row(
            {
                "g_theta_theta": closed.g_tt,
                "g_phi_phi": closed.g_pp,
                "g_theta_phi": closed.g_tp,
                "A": inv.A,
                "B": inv.B,
                "D": inv.D,
                "defect_variance": defects["variance"],
                "defect_finite_difference": defects["finite_difference"],
            },
            args.out,
        )
    return 0


def cmd_classify(args) -> int:
    params = _resolve_params(args)
    state, _, _ = _resolve_state(args)
    if _format_or(args, "json") != "json":
        raise UsageError("classify reports JSON only")
    m = classify_manifold(state, params.alpha, params.kind, args.gamma)
    twist = None
    if m.twist is not None:
        twist = {
            "delta_theta": m.twist.d_theta,
            "delta_phi": m.twist.d_phi,
            "phase": _complex_json(m.twist.phase),
        }
    payload = {
        "schema_version": SCHEMA_VERSION,
        "model": params.kind.value,
        "alpha": _alpha_json(params.alpha),
        "gamma": args.gamma,
        "class": m.kind.value,
        "case": m.case_id,
        "radius": m.radius,
        "coordinate": m.coordinate,
        "theta_period": m.theta_period,
        "phi_period": m.phi_period,
        "twist": twist,
    }
    _emit_json(payload, args.out)
    return 0


def _parse_theta_range(args) -> np.ndarray:
    text = args.theta_range
    parts = text.split(",")
    if len(parts) != 3:
        raise BadRange("--theta-range expects lo,hi,n")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise BadRange(f"bad --theta-range: {exc}") from None
    lo, hi = _angle(lo, args), _angle(hi, args)
    if n < 2:
        raise BadRange("--theta-range needs at least 2 points")
    if not hi > lo:
        raise BadRange("--theta-range needs hi > lo")
    return np.linspace(lo, hi, n)


def _alpha_tokens(args) -> list[str]:
    if getattr(args, "alphas", None):
        tokens = [tok.strip() for tok in args.alphas.split(",") if tok.strip()]
        if not tokens:
            raise UsageError("--alphas is empty")
        return tokens
    return [args.alpha]


def _label(token: str) -> str:
    return token.replace("/", "_").replace(" ", "")


def cmd_scan(args) -> int:
    params = _resolve_params(args)
    state, chi, pattern = _resolve_state(args)
    if _format_or(args, "csv") != "csv":
        raise UsageError("scan emits CSV only")
    thetas = _parse_theta_range(args)
    tokens = _alpha_tokens(args)
    if len(tokens) > 1 and args.out is None:
        raise UsageError("--out is required when scanning several alphas")
    for token in tokens:
        alpha = Anisotropy.parse(token)
        result = scan_concurrence(state, alpha, params.kind, thetas, chi, pattern)
        text = _scan_csv(result.samples)
        if len(tokens) == 1:
            _emit(text, args.out)
        else:
            base = Path(args.out)
            suffix = base.suffix or ".csv"
            path = base.with_name(f"{base.stem}_alpha_{_label(token)}{suffix}")
            _emit(text, str(path))
    return 0


def cmd_figure_data(args) -> int:
    params = _resolve_params(args)
    tokens = [tok.strip() for tok in args.alphas.split(",") if tok.strip()]
    if not tokens:
        raise UsageError("--alphas is empty")
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    chi = 0.5 * math.pi
    state = product_state(ProductStateAngles(chi, 0.0, Pattern.PLUS_MINUS))
    thetas = np.linspace(0.0, math.pi, FIGURE_POINTS)
    for token in tokens:
        alpha = Anisotropy.parse(token)
        result = scan_concurrence(
            state, alpha, params.kind, thetas, chi, Pattern.PLUS_MINUS
        )
        path = out_dir / f"figure_{params.kind.value}_alpha_{_label(token)}.csv"
        _emit(_scan_csv(result.samples), str(path))
    return 0


def build_parser() -> _Parser:
    parser = _Parser(
        prog="twospin",
        description=(
            "Closed-form dynamics, quantum geometry and entanglement of two "
            "coupled spins, with every formula cross-checked against a "
            "numerical oracle"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run every oracle cross-check suite")
    _model_arguments(p)
    _state_arguments(p)
    _output_arguments(p)
    p.add_argument("--draws", type=int, default=60)
    p.add_argument("--seed", type=int, default=2026)
    p.add_argument("--inject-defect", default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("evolve", help="evolved state at (theta, phi) or time t")
    _model_arguments(p)
    _state_arguments(p)
    _output_arguments(p)
    p.add_argument("--theta", type=float, default=None)
    p.add_argument("--phi", type=float, default=None)
    p.add_argument("--t", type=float, default=None, help="physical time instead of angles")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("propagator", help="closed-form U(t) as JSON")
    _model_arguments(p)
    _output_arguments(p)
    p.add_argument("--t", type=float, required=True)
    p.set_defaults(func=cmd_propagator)

    p = sub.add_parser("metric", help="metric three ways with cross-check defects")
    _model_arguments(p)
    _state_arguments(p)
    _output_arguments(p)
    p.set_defaults(func=cmd_metric)

    p = sub.add_parser("classify", help="global geometry of the trajectory manifold")
    _model_arguments(p)
    _state_arguments(p)
    _output_arguments(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", help="concurrence along a theta grid as CSV")
    _model_arguments(p)
    _state_arguments(p)
    _output_arguments(p)
    p.add_argument(
        "--theta-range",
        default=f"0,{math.pi:.17g},{DEFAULT_SCAN_POINTS}",
        help="lo,hi,n grid (default spans [0, pi])",
    )
    p.add_argument("--alphas", default=None, help="comma list; one CSV per value")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser(
        "figure-data",
        help="chi = pi/2 product-family concurrence curves, one CSV per alpha",
    )
    _model_arguments(p)
    _output_arguments(p)
    p.add_argument("--alphas", default="1,2,3")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_figure_data)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (TwoSpinError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())
