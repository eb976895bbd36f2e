"""The authoring loop in miniature: break a graph, lint it, map it.

Run with: python3 demos/authoring_checks.py

Takes the frozen housing dataset, introduces the kind of mistakes an
author makes (a blanked translation, a deleted edge), and shows what the
checker reports for each. Ends with the route listing a reviewer reads.
"""
import json

from artemus import check_bytes, enumerate_routes
from artemus.datasets import dataset_bytes, load_bundled


def lint(label, doc):
    print(f"\n== {label} ==")
    diagnostics = check_bytes(json.dumps(doc).encode("utf-8"))
    if not diagnostics:
        print("  publishable: no diagnostics")
        return
    for diag in diagnostics:
        print(f"  {diag.code} [{diag.severity.value}] {diag.subject}: {diag.message}")


def main():
    pristine = json.loads(dataset_bytes("housing"))
    lint("the frozen dataset as shipped", pristine)

    blanked = json.loads(dataset_bytes("housing"))
    blanked["nodes"][0]["title"]["cy"] = ""
    lint("a Welsh title left blank", blanked)

    trimmed = json.loads(dataset_bytes("housing"))
    trimmed["edges"] = [e for e in trimmed["edges"] if e["id"] != "get-advice"]
    lint("the advice signpost deleted", trimmed)

    dangling = json.loads(dataset_bytes("housing"))
    dangling["edges"][0]["to"] = "no-such-node"
    lint("an edge pointing at a missing node", dangling)

    graph = load_bundled("housing")
    print("\n== every route from the homelessness entry ==")
    for route in enumerate_routes(graph, "homelessness-entry"):
        trail = " -> ".join(route.edges)
        marks = []
        if route.flags.contains_legal_claim:
            marks.append("legal claim")
        if route.flags.min_time_limit_days is not None:
            marks.append(f"tightest limit {route.flags.min_time_limit_days}d")
        suffix = f"  [{', '.join(marks)}]" if marks else ""
        print(f"  {trail} => {route.terminal_node}{suffix}")


if __name__ == "__main__":
    main()
