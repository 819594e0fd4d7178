"""Flat key = value run configuration.

One assignment per line, dotted keys for grouping, ``#`` starts a comment
(whole-line or trailing).  Values stay strings until a typed accessor
asks for them, so error messages can cite the offending key verbatim.
Unknown keys are rejected per command, which catches typos instead of
silently ignoring them.
"""

from __future__ import annotations

from .bases import (
    BasisModel,
    BlockSpec,
    block_basis,
    make_uncompact_basis,
    standard_c0,
    standard_lp,
    summing_c,
)
from .bricks import (
    ConstantTail,
    HalfHeights,
    PowerLawTail,
    TailRule,
    ZeroTail,
    reciprocal_sqrt_tail,
    reciprocal_tail,
)
from .errors import ConfigError
from .radii import TruncationSchedule

__all__ = [
    "parse_config_text",
    "load_config",
    "check_known_keys",
    "get_float",
    "get_int",
    "get_floats",
    "get_ints",
    "build_basis",
    "build_heights",
    "build_schedule",
]


def parse_config_text(text: str) -> dict[str, str]:
    cfg: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        key, value = line.split("=", 1)
        key, value = key.strip(), value.strip()
        if not key:
            raise ConfigError(f"line {lineno}: empty key")
        if key in cfg:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        cfg[key] = value
    return cfg


def load_config(path: str) -> dict[str, str]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_config_text(fh.read())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from exc


def check_known_keys(cfg: dict[str, str], prefixes: tuple[str, ...]) -> None:
    """Reject keys outside the allowed prefixes (exact or dotted)."""
    bad = [
        k
        for k in cfg
        if not any(k == p or k.startswith(p + ".") for p in prefixes)
    ]
    if bad:
        allowed = ", ".join(sorted(prefixes))
        raise ConfigError(
            f"unknown config keys: {', '.join(sorted(bad))} (allowed groups: {allowed})"
        )


def get_float(cfg: dict[str, str], key: str, default: float | None = None) -> float | None:
    if key not in cfg:
        return default
    try:
        return float(cfg[key])
    except ValueError as exc:
        raise ConfigError(f"{key}: expected a number, got {cfg[key]!r}") from exc


def get_int(cfg: dict[str, str], key: str, default: int | None = None) -> int | None:
    if key not in cfg:
        return default
    try:
        return int(cfg[key])
    except ValueError as exc:
        raise ConfigError(f"{key}: expected an integer, got {cfg[key]!r}") from exc


def get_floats(cfg: dict[str, str], key: str) -> tuple[float, ...] | None:
    if key not in cfg:
        return None
    try:
        return tuple(float(x) for x in cfg[key].split(",") if x.strip())
    except ValueError as exc:
        raise ConfigError(f"{key}: expected comma-separated numbers") from exc


def get_ints(cfg: dict[str, str], key: str) -> tuple[int, ...] | None:
    if key not in cfg:
        return None
    try:
        return tuple(int(x) for x in cfg[key].split(",") if x.strip())
    except ValueError as exc:
        raise ConfigError(f"{key}: expected comma-separated integers") from exc


_BASIS_BUILDERS = {
    "l1": lambda: standard_lp(1),
    "l2": lambda: standard_lp(2),
    "c0": standard_c0,
    "summing": summing_c,
    "uncompact": make_uncompact_basis,
}


def build_basis(cfg: dict[str, str]) -> BasisModel:
    kind = cfg.get("basis.kind", "l2")
    if kind in _BASIS_BUILDERS:
        return _BASIS_BUILDERS[kind]()
    if kind == "blocks":
        base_kind = cfg.get("basis.base", "c0")
        if base_kind not in _BASIS_BUILDERS or base_kind == "uncompact":
            raise ConfigError(f"basis.base: unsupported base {base_kind!r}")
        base = _BASIS_BUILDERS[base_kind]()
        edges = get_ints(cfg, "basis.breakpoints")
        if not edges:
            raise ConfigError("basis.kind = blocks needs basis.breakpoints")
        weights = []
        prev = 0
        for j, edge in enumerate(edges, start=1):
            w = get_floats(cfg, f"basis.weights.{j}")
            if w is None:
                w = (1.0,) * (edge - prev)
            weights.append(w)
            prev = edge
        try:
            spec = BlockSpec(breakpoints=tuple(edges), weights=tuple(weights))
            return block_basis(base, spec)
        except ValueError as exc:
            raise ConfigError(f"bad block layout: {exc}") from exc
    raise ConfigError(
        f"basis.kind: unknown kind {kind!r} "
        "(choose l1, l2, c0, summing, uncompact, or blocks)"
    )


def _build_tail(cfg: dict[str, str]) -> TailRule:
    kind = cfg.get("heights.tail", "reciprocal")
    if kind == "zero":
        return ZeroTail()
    if kind == "reciprocal":
        return reciprocal_tail(get_float(cfg, "heights.scale", 1.0))
    if kind == "reciprocal_sqrt":
        return reciprocal_sqrt_tail(get_float(cfg, "heights.scale", 1.0))
    if kind == "power":
        alpha = get_float(cfg, "heights.alpha")
        if alpha is None:
            raise ConfigError("heights.tail = power needs heights.alpha")
        try:
            return PowerLawTail(alpha=alpha, scale=get_float(cfg, "heights.scale", 1.0))
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    if kind == "constant":
        c = get_float(cfg, "heights.c")
        if c is None:
            raise ConfigError("heights.tail = constant needs heights.c")
        try:
            return ConstantTail(level=c)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    raise ConfigError(
        f"heights.tail: unknown rule {kind!r} "
        "(choose zero, reciprocal, reciprocal_sqrt, power, constant)"
    )


def build_heights(cfg: dict[str, str]) -> HalfHeights:
    prefix = get_floats(cfg, "heights.prefix") or ()
    try:
        return HalfHeights(prefix=prefix, tail=_build_tail(cfg))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def build_schedule(
    cfg: dict[str, str],
    levels_override: tuple[int, ...] | None = None,
    tol_override: float | None = None,
) -> TruncationSchedule:
    levels = levels_override or get_ints(cfg, "schedule.levels") or (4, 8, 12, 16, 20, 24)
    tol = tol_override
    if tol is None:
        tol = get_float(cfg, "schedule.cauchy_tol", 1e-6)
    floor = get_float(cfg, "schedule.divergence_floor", 1e-3)
    try:
        return TruncationSchedule(levels=levels, cauchy_tol=tol, divergence_floor=floor)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
