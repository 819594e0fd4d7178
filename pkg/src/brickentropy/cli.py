"""Command line interface.

Six commands, each emitting one delimited report (dotted key = value) and
an exit status: 0 when every check passes, 1 when a check fails, 2 for a
malformed configuration, 3 when a sign enumeration would exceed its cap,
4 when an internal invariant breaks.  All randomness flows from --seed,
and reports carry no clocks, so identical invocations produce identical
bytes.  An optional figure directory renders per-section curves as PNG
files next to the report without touching its text.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .bricks import Brick, contains
from .compactness import (
    CompactnessKind,
    brick_compactness,
    epsilon_net,
    verify_window_witness,
)
from .config import (
    build_basis,
    build_heights,
    build_schedule,
    check_known_keys,
    get_float,
    get_floats,
    get_int,
    load_config,
)
from .entropy import entropy_bounds
from .errors import (
    BudgetError,
    CapExceededError,
    ConfigError,
    KernelInvariantError,
    PreconditionError,
)
from .fixtures import run_all_fixtures
from .measures import (
    hs_diagnostic,
    j_compactness,
    make_non_hs_measure,
    make_weak4_measure,
    moment,
    pettis_j,
)
from .radii import RadiusReport, TruncationSchedule, Verdict, radii_coincide
from .report import overall_passed, render_report, section_passed
from .sequences import norm

__all__ = ["main"]

_COMMON_KEYS = ("basis", "heights", "schedule", "seed", "out", "figures")
_ALLOWED_KEYS = {
    "examples": ("schedule", "seed", "out", "figures"),
    "radius": _COMMON_KEYS + ("radius",),
    "compact": _COMMON_KEYS,
    "net": _COMMON_KEYS + ("net",),
    "entropy": ("entropy", "schedule", "seed", "out", "figures"),
    "measure": ("measure", "schedule", "seed", "out", "figures"),
}


def _radius_section(rep: RadiusReport) -> dict:
    out = {
        "levels": list(rep.levels),
        "values": list(rep.values),
        "verdict": rep.verdict.value,
        "estimate": rep.estimate,
        "method": rep.method,
    }
    if rep.window_maxima:
        out["window_maxima"] = list(rep.window_maxima)
    if rep.existence is not None:
        out["existence"] = rep.existence
    nondecreasing = all(
        b >= a - 1e-12 for a, b in zip(rep.values, rep.values[1:])
    )
    out["checks"] = {"values_nondecreasing": nondecreasing}
    return out


def _cmd_examples(cfg, schedule, seed):
    return run_all_fixtures(schedule, seed)


def _cmd_radius(cfg, schedule, seed):
    brick = Brick(build_basis(cfg), build_heights(cfg))
    samples = get_int(cfg, "radius.samples", 2000)
    rep = radii_coincide(brick, schedule, seed=seed)
    unc = _radius_section(rep.unconditional)
    ext = _radius_section(rep.extreme)
    absr = _radius_section(rep.absolute)
    ext["patterns"] = {
        ev.name: {"converged": ev.converged, "method": ev.method}
        for ev in rep.extreme.patterns
    }
    ext["checks"]["existence_consistent"] = (
        rep.extreme.existence is not False
        or rep.extreme.verdict is not Verdict.FINITE_ESTIMATE
    )
    coincidence = {
        "brick": brick.label(),
        "coincide": rep.coincide,
        "spread": rep.spread,
        "notes": rep.notes or "all three radii compared",
        "checks": {"no_contradiction": rep.coincide is not False},
    }
    del samples  # the default member check inside absolute_radius covers it
    return {
        "unconditional": unc,
        "extreme": ext,
        "absolute": absr,
        "coincidence": coincidence,
    }


def _cmd_compact(cfg, schedule, seed):
    brick = Brick(build_basis(cfg), build_heights(cfg))
    rep = brick_compactness(brick, schedule)
    section = {
        "brick": brick.label(),
        "verdict": rep.verdict.value,
        "method": rep.method,
        "windows_lo": [lo for lo, _ in rep.windows],
        "windows_hi": [hi for _, hi in rep.windows],
        "window_maxima": list(rep.window_maxima),
    }
    checks = {"maxima_nonnegative": all(v >= 0.0 for v in rep.window_maxima)}
    if rep.witness is not None:
        section["witness_window"] = [rep.witness.lo, rep.witness.hi]
        section["witness_value"] = rep.witness.value
        checks["witness_verifies"] = verify_window_witness(brick, rep.witness)
    if rep.notes:
        section["notes"] = rep.notes
    section["checks"] = checks
    return {"brick_compactness": section}


def _cmd_net(cfg, schedule, seed):
    brick = Brick(build_basis(cfg), build_heights(cfg))
    eps = get_float(cfg, "net.eps", 1.0)
    level = get_int(cfg, "net.level", None)
    budget = get_int(cfg, "net.budget", 1_000_000)
    try:
        net = epsilon_net(brick, eps=eps, level=level, budget=budget)
    except (PreconditionError, BudgetError) as exc:
        return {
            "net": {
                "brick": brick.label(),
                "eps": eps,
                "error": str(exc),
                "checks": {"constructed": False},
            }
        }
    pts = np.stack([p.data for p in net.points])
    members = all(contains(brick, p.data, tol=1e-12) for p in net.points)
    rng = np.random.default_rng(seed)
    eps_vals = brick.heights.values(net.level)
    coeffs = rng.uniform(-1.0, 1.0, size=(1000, net.level)) * eps_vals
    ambient = coeffs @ brick.basis.synth_matrix(net.level).T
    tag = brick.basis.norm_tag
    worst = 0.0
    for x in ambient:
        d = min(norm(x - p[: x.size], tag) if p.size >= x.size
                else norm(np.pad(x, (0, p.size - x.size)) - p, tag)
                for p in pts)
        worst = max(worst, d)
    budget_per_point = eps - net.tail_bound
    return {
        "net": {
            "brick": brick.label(),
            "eps": eps,
            "level": net.level,
            "tail_bound": net.tail_bound,
            "delta": net.delta,
            "grid_counts": list(net.grid_counts),
            "size": len(net),
            "worst_sampled_distance": worst,
            "checks": {
                "constructed": True,
                "all_points_members": members,
                "sampled_members_covered": worst <= budget_per_point + 1e-12,
            },
        }
    }


def _entropy_vectors(cfg, seed):
    vecs = []
    i = 1
    while f"entropy.vectors.{i}" in cfg:
        vecs.append(np.array(get_floats(cfg, f"entropy.vectors.{i}")))
        i += 1
    if vecs:
        return vecs, "config"
    rng = np.random.default_rng(seed)
    return [rng.uniform(-1.0, 1.0, size=8) for _ in range(4)], "seeded-demo"


def _cmd_entropy(cfg, schedule, seed):
    from .config import _BASIS_BUILDERS  # shared kind table

    names = [s.strip() for s in cfg.get("entropy.bases", "c0").split(",") if s.strip()]
    bases = []
    for name in names:
        if name not in _BASIS_BUILDERS:
            raise ConfigError(f"entropy.bases: unknown system {name!r}")
        bases.append(_BASIS_BUILDERS[name]())
    vecs, source = _entropy_vectors(cfg, seed)
    try:
        rep = entropy_bounds(vecs, bases, schedule)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    per_basis = {
        name: {"verdict": r.verdict.value, "estimate": r.estimate}
        for name, r in rep.per_basis
    }
    upper_ok = rep.entropy_upper is None or rep.entropy_upper >= rep.member_sup - 1e-9
    e0_ok = (
        rep.one_unconditional_upper is None
        or rep.entropy_upper is None
        or rep.one_unconditional_upper >= rep.entropy_upper - 1e-12
    )
    return {
        "entropy": {
            "vector_source": source,
            "vector_count": len(vecs),
            "norm": rep.norm_tag.value,
            "per_basis": per_basis,
            "entropy_upper": rep.entropy_upper,
            "one_unconditional_upper": rep.one_unconditional_upper,
            "sudakov_lower": rep.sudakov_lower,
            "member_sup": rep.member_sup,
            "squared_clearances": dict(rep.sum_of_squares),
            "checks": {
                "upper_dominates_member_sup": upper_ok,
                "sign_stable_bound_not_below_upper": e0_ok,
            },
        }
    }


def _cmd_measure(cfg, schedule, seed):
    family = cfg.get("measure.family", "weak4")
    if family == "weak4":
        atoms = get_int(cfg, "measure.atoms", 1000)
        measure = make_weak4_measure(atoms)
    elif family == "non_hs":
        atoms = get_int(cfg, "measure.atoms", 500)
        measure = make_non_hs_measure(atoms)
    else:
        raise ConfigError(f"measure.family: unknown family {family!r}")
    p = get_float(cfg, "measure.p", 2.0)
    mode = cfg.get("measure.mode", "strong")
    if mode not in ("weak", "strong"):
        raise ConfigError(f"measure.mode: expected weak or strong, got {mode!r}")
    probe = get_floats(cfg, "measure.probe") or (1.0,)
    try:
        mom = moment(measure, p, mode, probe=np.array(probe), schedule=schedule)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    hs = hs_diagnostic(measure, schedule)
    comp = j_compactness(measure, schedule)
    rng = np.random.default_rng(seed)
    sym_err, pos_min = 0.0, np.inf
    for _ in range(25):
        u = rng.normal(size=16)
        v = rng.normal(size=16)
        ju = pettis_j(measure, u).data[:16]
        jv = pettis_j(measure, v).data[:16]
        sym_err = max(sym_err, abs(float(u @ jv) - float(v @ ju)))
        pos_min = min(pos_min, float(u @ ju))
    return {
        "moment": {
            "measure": measure.name,
            "mode": mom.mode,
            "p": mom.p,
            "levels": list(mom.levels),
            "partial_sums": list(mom.partial_sums),
            "verdict": mom.verdict.value,
            "value": mom.value,
            "method": mom.method,
            "checks": {"partials_nondecreasing": all(
                b >= a - 1e-15 for a, b in zip(mom.partial_sums, mom.partial_sums[1:])
            )},
        },
        "squared_diagonal": {
            "partial_sums": list(hs.partial_sums),
            "verdict": hs.verdict.value,
            "value": hs.value,
            "method": hs.method,
            "checks": {},
        },
        "operator": {
            "compactness": comp.verdict.value,
            "diagonal_at_levels": list(comp.diagonal),
            "symmetry_error": sym_err,
            "min_quadratic_form": pos_min,
            "checks": {
                "symmetric": sym_err <= 1e-12,
                "positive": pos_min >= -1e-12,
                "verdict_not_contradictory": comp.verdict
                in (CompactnessKind.COMPACT_EVIDENCE, CompactnessKind.INCONCLUSIVE),
            },
        },
    }


_HANDLERS = {
    "examples": _cmd_examples,
    "radius": _cmd_radius,
    "compact": _cmd_compact,
    "net": _cmd_net,
    "entropy": _cmd_entropy,
    "measure": _cmd_measure,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brickentropy",
        description="finite-truncation radius, compactness, entropy, and "
        "measure diagnostics for coordinate bricks",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, blurb in [
        ("examples", "run the worked-example gallery"),
        ("radius", "the three radii of a configured brick"),
        ("compact", "compactness verdict with a re-checkable witness"),
        ("entropy", "clearance-brick entropy bounds of a finite set"),
        ("net", "explicit eps-net for a compact brick"),
        ("measure", "moments and operator diagnostics of a discrete measure"),
    ]:
        p = sub.add_parser(name, help=blurb)
        p.add_argument("--config", help="path to a key = value config file")
        p.add_argument("--seed", type=int, default=None, help="seed for all sampling")
        p.add_argument("--levels", help="comma-separated truncation levels")
        p.add_argument("--tol", type=float, default=None, help="Cauchy tolerance")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--figures", help="directory for per-section PNG figures")
    return parser


def _parse_levels(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        levels = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise ConfigError(f"--levels: expected comma-separated integers") from exc
    if not levels:
        raise ConfigError("--levels: no levels given")
    return levels


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config) if args.config else {}
        check_known_keys(cfg, _ALLOWED_KEYS[args.command])
        seed = args.seed if args.seed is not None else get_int(cfg, "seed", 0)
        schedule = build_schedule(cfg, _parse_levels(args.levels), args.tol)
        sections = _HANDLERS[args.command](cfg, schedule, seed)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except KernelInvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 4
    header = {
        "command": args.command,
        "package": f"brickentropy {__version__}",
        "seed": seed,
        "schedule": {
            "levels": list(schedule.levels),
            "cauchy_tol": schedule.cauchy_tol,
            "divergence_floor": schedule.divergence_floor,
        },
    }
    figdir = args.figures or cfg.get("figures.dir")
    if figdir:
        from .figures import render_figures

        header["figures"] = render_figures(sections, figdir, args.command)
    passed = sum(1 for s in sections.values() if section_passed(s))
    tree = {
        "report": header,
        args.command: sections,
        "summary": {
            "sections": len(sections),
            "passed": passed,
            "failed": len(sections) - passed,
            "overall": "pass" if overall_passed(sections) else "fail",
        },
    }
    text = render_report(tree)
    if args.out or cfg.get("out"):
        path = args.out or cfg.get("out")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if overall_passed(sections) else 1


if __name__ == "__main__":
    sys.exit(main())
