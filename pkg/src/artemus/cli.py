"""Authoring and operations command line.

Exit codes are uniform across subcommands: 0 success, 1 for semantic
failures (Error diagnostics, unknown entry point), 2 when the input file
does not even parse. Everything is deterministic given identical inputs;
--json output is stable and machine-readable.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .errors import GraphParseError, UnknownEntryPoint
from .model import PathwayGraph, edge_legend_tag, node_colour_token, parse_graph
from .pathfinder import RouteSet, enumerate_routes
from .search import search as search_entries
from .validation import Diagnostic, Severity, validate

_JSON_KW = {"ensure_ascii": False, "indent": 2, "sort_keys": True}


def _load_graph(path: Path) -> PathwayGraph:
    """Parse a graph file or exit 2 with the parse error on stderr."""
    try:
        return parse_graph(path.read_bytes())
    except OSError as exc:
        click.echo(f"cannot read {path}: {exc}", err=True)
        sys.exit(2)
    except GraphParseError as exc:
        click.echo(f"{exc.code} {exc.subject or path.name}: {exc.detail}", err=True)
        sys.exit(2)


def _diagnostic_doc(diag: Diagnostic) -> dict:
    return {
        "code": diag.code,
        "severity": diag.severity.value,
        "subject": diag.subject,
        "message": diag.message,
    }


@click.group()
def main() -> None:
    """Author, check and serve redress pathway graphs."""


@main.command(name="validate")
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--strict", is_flag=True, help="Treat warnings as failures.")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable diagnostics on stdout.")
def validate_cmd(file: Path, strict: bool, as_json: bool) -> None:
    """Validate FILE; exit 0 only when it is publishable."""
    try:
        graph = parse_graph(file.read_bytes())
    except OSError as exc:
        click.echo(f"cannot read {file}: {exc}", err=True)
        sys.exit(2)
    except GraphParseError as exc:
        if as_json:
            doc = {
                "diagnostics": [
                    {"code": exc.code, "severity": "Error", "subject": exc.subject or "document", "message": exc.detail}
                ],
                "publishable": False,
            }
            click.echo(json.dumps(doc, **_JSON_KW))
        else:
            click.echo(f"{exc.code} {exc.subject or file.name}: {exc.detail}", err=True)
        sys.exit(2)

    diagnostics = validate(graph)
    errors = [d for d in diagnostics if d.severity is Severity.ERROR]
    warnings = [d for d in diagnostics if d.severity is Severity.WARNING]
    failed = bool(errors) or (strict and bool(warnings))
    if as_json:
        doc = {"diagnostics": [_diagnostic_doc(d) for d in diagnostics], "publishable": not errors}
        click.echo(json.dumps(doc, **_JSON_KW))
    else:
        for d in diagnostics:
            click.echo(f"{d.code} [{d.severity.value}] {d.subject}: {d.message}", err=True)
        click.echo(f"{len(errors)} error(s), {len(warnings)} warning(s)", err=True)
    sys.exit(1 if failed else 0)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--entry", required=True, help="Entry point id to enumerate from.")
@click.option("--max-depth", default=20, show_default=True, help="Edge-count bound per route.")
@click.option("--include-abandonments", is_flag=True, help="Also list journeys stopped before a terminal.")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable route list on stdout.")
def routes(file: Path, entry: str, max_depth: int, include_abandonments: bool, as_json: bool) -> None:
    """Enumerate every distinct route FILE allows from an entry point."""
    graph = _load_graph(file)
    try:
        route_set: RouteSet = enumerate_routes(
            graph, entry, max_depth=max_depth, include_abandonments=include_abandonments
        )
    except UnknownEntryPoint as exc:
        click.echo(f"{exc.code}: {exc.detail}", err=True)
        sys.exit(1)
    if as_json:
        doc = {
            "routes": [
                {
                    "entryPointId": r.entry_point_id,
                    "edges": list(r.edges),
                    "terminalNode": r.terminal_node,
                    "abandoned": r.abandoned,
                    "flags": {
                        "containsLegalClaim": r.flags.contains_legal_claim,
                        "minTimeLimitDays": r.flags.min_time_limit_days,
                    },
                }
                for r in route_set
            ],
            "depthExceeded": route_set.depth_exceeded,
        }
        click.echo(json.dumps(doc, **_JSON_KW))
        return
    for r in route_set:
        trail = " -> ".join(r.edges) if r.edges else "(no action)"
        marks = []
        if r.abandoned:
            marks.append("abandoned")
        if r.flags.contains_legal_claim:
            marks.append("legal claim")
        if r.flags.min_time_limit_days is not None:
            marks.append(f"tightest limit {r.flags.min_time_limit_days}d")
        suffix = f"  [{', '.join(marks)}]" if marks else ""
        click.echo(f"{trail} => {r.terminal_node}{suffix}")
    summary = f"{len(route_set)} routes"
    if route_set.depth_exceeded:
        summary += f" (some routes truncated at depth {max_depth})"
    click.echo(summary)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument("query")
@click.option("--lang", type=click.Choice(["en", "cy"]), required=True)
@click.option("--k", default=5, show_default=True, help="Maximum matches to print.")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable matches on stdout.")
def search(file: Path, query: str, lang: str, k: int, as_json: bool) -> None:
    """Rank FILE's entry points against a free-text QUERY."""
    graph = _load_graph(file)
    matches = search_entries(graph, query, lang, k)
    if as_json:
        doc = {
            "matches": [
                {"entryPointId": m.entry_point_id, "score": m.score, "matchedPhrases": list(m.matched_phrases)}
                for m in matches
            ]
        }
        click.echo(json.dumps(doc, **_JSON_KW))
        return
    if not matches:
        click.echo("no matches")
        return
    for m in matches:
        click.echo(f"{m.entry_point_id}  score={m.score}  ({', '.join(m.matched_phrases)})")


@main.command()
@click.option("--port", default=8080, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option(
    "--data",
    type=click.Path(exists=True, file_okay=False, path_type=Path),
    default=None,
    help="Directory of graph JSON files; bundled datasets when omitted.",
)
def serve(port: int, host: str, data: Path | None) -> None:
    """Run the HTTP API server."""
    import uvicorn

    from .service import create_app

    app = create_app(data)
    uvicorn.run(app, host=host, port=port, log_level="info")


def _dot_quote(value: str) -> str:
    return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'


@main.command(name="export-dot")
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
def export_dot(file: Path) -> None:
    """Print FILE as a Graphviz digraph for author review."""
    graph = _load_graph(file)
    lines = [f"digraph {_dot_quote(graph.id)} {{", "  rankdir=LR;"]
    for node in graph.nodes:
        attrs = (
            f"label={_dot_quote(node.title.en)}, "
            f"category={_dot_quote(node.category.value)}, "
            f"colourtoken={_dot_quote(node_colour_token(node.category))}"
        )
        lines.append(f"  {_dot_quote(node.id)} [{attrs}];")
    for edge in graph.edges:
        attrs = (
            f"label={_dot_quote(edge.label.en)}, "
            f"id={_dot_quote(edge.id)}, "
            f"kind={_dot_quote(edge.kind.value)}, "
            f"legend={_dot_quote(edge_legend_tag(edge.kind))}"
        )
        lines.append(f"  {_dot_quote(edge.source)} -> {_dot_quote(edge.target)} [{attrs}];")
    lines.append("}")
    click.echo("\n".join(lines))


if __name__ == "__main__":
    main()
