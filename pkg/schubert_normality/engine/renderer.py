"""Jinja2 renderer for DOT diagrams, classification tables and flag dumps.

Sets up the Jinja2 environment with:
- StrictUndefined (missing variables raise errors)
- trimmed blocks and a preserved trailing newline, so output is byte-stable
- filters for DOT quoting and CSV cells
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from schubert_normality.dominance.hasse import HasseSegment
from schubert_normality.normality.classify import Classification, ClassificationRow

TABLE_COLUMNS = ("group", "component", "family", "verdict", "provenance")
FLAG_COLUMNS = ("element", "length", "status")


def _get_templates_dir() -> Path:
    """Return the absolute path to the templates/ directory."""
    return Path(__file__).resolve().parent.parent.parent / "templates"


def create_jinja_env(templates_dir: Path | None = None) -> Environment:
    if templates_dir is None:
        templates_dir = _get_templates_dir()

    env = Environment(
        loader=FileSystemLoader(str(templates_dir)),
        undefined=StrictUndefined,
        keep_trailing_newline=True,
        trim_blocks=True,
        lstrip_blocks=True,
    )

    env.filters["quote"] = lambda s: '"' + str(s).replace('"', '\\"') + '"'
    env.filters["csv_cell"] = _csv_cell_filter
    return env


def _csv_cell_filter(value: Any) -> str:
    """Quote a cell when it contains a comma, quote or newline."""
    s = str(value)
    if any(ch in s for ch in ',"\n'):
        return '"' + s.replace('"', '""') + '"'
    return s


def render_template(env: Environment, template_path: str, context: dict[str, Any]) -> str:
    """Render a single template with the given context.

    Raises:
        TemplateNotFound: If the template file does not exist.
    """
    template = env.get_template(template_path)
    return template.render(**context)


def render_hasse_dot(segments: Iterable[HasseSegment], env: Environment | None = None) -> str:
    env = env or create_jinja_env()
    segs = list(segments)
    context = {
        "group": segs[0].lattice.group.label() if segs else "",
        "segments": [
            {
                "component": seg.component_index,
                "nodes": seg.names(),
                "edges": [
                    (seg.nodes[e.source].name, seg.nodes[e.target].name, e.label)
                    for e in seg.edges
                ],
            }
            for seg in segs
        ],
    }
    return render_template(env, "hasse.dot.j2", context)


def table_rows(results: Iterable[Classification]) -> list[ClassificationRow]:
    return [row for c in results for row in c.rows()]


def emit_table(results: Iterable[Classification], fmt: str = "md", env: Environment | None = None) -> str:
    """Classification rows in a stable column order; ``fmt`` is md, csv or json."""
    rows = table_rows(results)
    if fmt == "json":
        return json.dumps([r.to_dict() for r in rows], indent=2) + "\n"
    if fmt not in ("md", "csv"):
        raise ValueError(f"unknown table format {fmt!r}")
    env = env or create_jinja_env()
    return render_template(env, f"classification.{fmt}.j2", {"columns": TABLE_COLUMNS, "rows": [r.to_dict() for r in rows]})


def emit_flag_csv(rows: list[dict], env: Environment | None = None) -> str:
    env = env or create_jinja_env()
    ordered = sorted(rows, key=lambda r: (r["component"], r["length"], r["element"]))
    return render_template(env, "flag.csv.j2", {"columns": FLAG_COLUMNS, "rows": ordered})
