"""Rich output helpers for the CLI.

Machine-readable output (JSON, DOT, CSV, Markdown) goes to stdout untouched;
tables and diagnostics for people go through the rich consoles.
"""

from __future__ import annotations

import sys
from collections import Counter

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from schubert_normality.normality.verdict import Verdict

console = Console()
err_console = Console(stderr=True)

_STATUS_STYLE = {"Normal": "green", "NonNormal": "red", "Unknown": "yellow"}


def emit(text: str) -> None:
    """Write text to stdout byte for byte."""
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")
    sys.stdout.flush()


def print_verdict(title: str, verdict: Verdict):
    table = Table(title=title, show_header=False, border_style="blue")
    table.add_column(style="bold")
    table.add_column()
    style = _STATUS_STYLE[verdict.status.value]
    table.add_row("Status", f"[{style}]{verdict.status.value}[/{style}]")
    table.add_row("Provenance", verdict.provenance.value)
    table.add_row("Reason", verdict.citation)
    if verdict.pi1_order is not None:
        table.add_row("pi_1 order", str(verdict.pi1_order))
    if verdict.support:
        table.add_row("Support", "{" + ",".join(str(i) for i in verdict.support) + "}")
    console.print(table)


def print_flag_summary(group: str, summary: dict[int, Counter]):
    table = Table(title=f"Flag verdicts: {group}", border_style="blue")
    table.add_column("Component", justify="right")
    for status, style in _STATUS_STYLE.items():
        table.add_column(status, justify="right", style=style)
    for k, counts in sorted(summary.items()):
        table.add_row(str(k), *(str(counts.get(s, 0)) for s in _STATUS_STYLE))
    console.print(table)


def print_success(message: str):
    """Print a success message."""
    err_console.print(f"[bold green]{escape(message)}[/bold green]")


def print_error(message: str):
    """Print an error message."""
    err_console.print(f"[bold red]{escape(message)}[/bold red]", highlight=False)


def print_warning(message: str):
    """Print a warning message."""
    err_console.print(f"[bold yellow]{escape(message)}[/bold yellow]", highlight=False)
