"""Plain-text report rendering: one dotted key per line.

Reports are nested dictionaries of scalars, lists, and sub-dicts.  The
renderer flattens them in insertion order to ``key.path = value`` lines
with floats printed through a single %.12g gate, so identical runs
produce byte-identical output -- nothing here looks at the clock.
"""

from __future__ import annotations

import numpy as np

__all__ = ["render_scalar", "render_report", "section_passed", "overall_passed"]


def render_scalar(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return "%d" % int(value)
    if isinstance(value, (float, np.floating)):
        return "%.12g" % float(value)
    if value is None:
        return "none"
    return str(value)


def _render_lines(tree: dict, prefix: str, out: list[str]) -> None:
    for key, value in tree.items():
        path = f"{prefix}.{key}" if prefix else str(key)
        if isinstance(value, dict):
            _render_lines(value, path, out)
        elif isinstance(value, (list, tuple)):
            body = ", ".join(render_scalar(v) for v in value)
            out.append(f"{path} = [{body}]")
        else:
            out.append(f"{path} = {render_scalar(value)}")


def render_report(tree: dict) -> str:
    """Flatten a report tree to delimited text (trailing newline included)."""
    lines: list[str] = []
    _render_lines(tree, "", lines)
    return "\n".join(lines) + "\n"


def section_passed(section: dict) -> bool:
    """A section passes when every boolean under its ``checks`` key holds."""
    checks = section.get("checks", {})
    return all(bool(v) for v in checks.values())


def overall_passed(sections: dict[str, dict]) -> bool:
    return all(section_passed(s) for s in sections.values())
