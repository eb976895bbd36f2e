"""Stateless HTTP/JSON API over graphs, search, journeys and view models.

The server holds only the published graphs, loaded once at startup. A
journey lives in the client's hands as a JourneyDoc; every request carries
everything needed to answer it, so any request sequence replays against a
fresh server with identical responses.

Request bodies are parsed by hand rather than through a model layer so
that malformed input surfaces the same error codes as everywhere else
(MalformedJson, MissingField, UnexpectedField, InvalidValue). Free-text
query fields are matched in memory and never written to disk or logs.
"""
from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any, Mapping

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse, Response

from . import datasets
from .errors import (
    ArtemusError,
    InvalidValue,
    MalformedJson,
    MissingField,
    UnexpectedField,
    UnknownGraph,
)
from .journey import (
    JourneyDoc,
    OptionReason,
    OptionView,
    journey_from_doc,
    journey_to_doc,
    options,
    rewind,
    start,
    step,
)
from .model import LocalizedText, PathwayGraph, parse_graph, serialize_graph
from .search import search
from .viewmodel import ViewModel, Zoom, build

#: One (status, code) pair per engine error. Parse-level problems are the
#: client's fault (400); missing things are 404; things the graph or the
#: journey's own state forbids are conflicts (409).
STATUS_BY_CODE: Mapping[str, int] = {
    "UnknownEntryPoint": 404,
    "UnknownDataset": 404,
    "UnknownGraph": 404,
    "GraphMismatch": 409,
    "JourneyConcluded": 409,
    "ChoiceNotEnabled": 409,
    "UnpublishableGraph": 409,
    "MalformedJson": 400,
    "IndexOutOfRange": 400,
    "InvalidPrefix": 400,
    "MissingField": 400,
    "InvalidValue": 400,
    "SchemaVersionMismatch": 400,
    "UnexpectedField": 400,
    "MissingTranslation": 400,
    "DuplicateId": 400,
    "DanglingReference": 400,
}


def _text_doc(text: LocalizedText) -> dict:
    return {"en": text.en, "cy": text.cy}


def _reason_doc(reason: OptionReason | None) -> dict | None:
    if reason is None:
        return None
    return {
        "code": reason.code,
        "blockingIds": list(reason.blocking_ids),
        "explanation": _text_doc(reason.explanation),
    }


def _option_doc(option: OptionView) -> dict:
    return {
        "choice": option.choice,
        "enabled": option.enabled,
        "reason": _reason_doc(option.reason),
        "label": _text_doc(option.label),
        "explanation": _text_doc(option.explanation),
        "timeLimitDays": option.time_limit_days,
        "preActionProtocol": option.pre_action_protocol,
        "disclaimerRequired": option.disclaimer_required,
    }


def _view_doc(view: ViewModel) -> dict:
    return {
        "zoom": view.zoom.value,
        "strip": list(view.strip),
        "frontier": [_option_doc(o) for o in view.frontier],
        "nodeStyles": {
            nid: {"class": s.node_class.value, "colour": s.colour} for nid, s in view.node_styles.items()
        },
        "edgeStyles": {
            eid: {"class": s.edge_class.value, "legend": s.legend} for eid, s in view.edge_styles.items()
        },
        "journeyBlocks": [
            {"stepIndex": b.step_index, "title": _text_doc(b.title), "body": _text_doc(b.body)}
            for b in view.journey_blocks
        ],
    }


def _journey_response(graph: PathwayGraph, journey: JourneyDoc) -> dict:
    body: dict[str, Any] = {"journey": journey_to_doc(journey)}
    if not journey.concluded:
        body["options"] = [_option_doc(o) for o in options(graph, journey)]
    body["view"] = _view_doc(build(graph, journey, Zoom.PATHWAY))
    return body


async def _read_body(request: Request, required: tuple[str, ...], optional: tuple[str, ...] = ()) -> dict:
    raw = await request.body()
    try:
        doc = json.loads(raw)
    except (ValueError, UnicodeDecodeError) as exc:
        raise MalformedJson(f"request body is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise MalformedJson("request body must be a JSON object")
    allowed = set(required) | set(optional)
    for key in doc:
        if key not in allowed:
            raise UnexpectedField(f"unknown field {key}", subject=key)
    for key in required:
        if key not in doc:
            raise MissingField(f"missing field {key}", subject=key)
    return doc


def _require_string(doc: dict, key: str) -> str:
    value = doc[key]
    if not isinstance(value, str) or not value:
        raise InvalidValue(f"{key} must be a non-empty string", subject=key)
    return value


def load_graphs(data_dir: str | os.PathLike | None = None) -> dict[str, PathwayGraph]:
    """Load the graphs the server publishes.

    Without a data dir (argument or ARTEMUS_DATA_DIR), the bundled
    datasets are served. With one, every *.json file in it is parsed;
    a file that does not parse stops startup — broken data must never
    come up half-served.
    """
    if data_dir is None:
        data_dir = os.environ.get("ARTEMUS_DATA_DIR") or None
    graphs: dict[str, PathwayGraph] = {}
    if data_dir is None:
        for name in datasets.bundled_names():
            graph = datasets.load_bundled(name)
            graphs[graph.id] = graph
        return graphs
    for path in sorted(Path(data_dir).glob("*.json")):
        graph = parse_graph(path.read_bytes())
        if graph.id in graphs:
            raise InvalidValue(f"two files define graph id {graph.id!r}", subject=graph.id)
        graphs[graph.id] = graph
    return graphs


def create_app(data_dir: str | os.PathLike | None = None) -> FastAPI:
    """Build the API app over the graphs in ``data_dir`` (or bundled ones)."""
    graphs = load_graphs(data_dir)
    app = FastAPI(title="artemus", docs_url=None, redoc_url=None, openapi_url=None)

    origins = [o.strip() for o in os.environ.get("ARTEMUS_ALLOW_ORIGINS", "*").split(",") if o.strip()]
    app.add_middleware(
        CORSMiddleware,
        allow_origins=origins,
        allow_methods=["GET", "POST"],
        allow_headers=["Content-Type"],
    )

    @app.exception_handler(ArtemusError)
    async def _engine_error(_request: Request, exc: ArtemusError) -> JSONResponse:
        status = STATUS_BY_CODE.get(exc.code, 400)
        error: dict[str, Any] = {"status": status, "code": exc.code, "detail": exc.detail}
        reason = getattr(exc, "reason", None)
        if reason is not None:
            error["reason"] = _reason_doc(reason)
        return JSONResponse(status_code=status, content={"error": error})

    def _graph_or_404(graph_id: str) -> PathwayGraph:
        graph = graphs.get(graph_id)
        if graph is None:
            raise UnknownGraph(f"no graph {graph_id!r} on this server", subject=graph_id)
        return graph

    @app.get("/healthz")
    async def healthz() -> PlainTextResponse:
        return PlainTextResponse("ok")

    @app.get("/api/graphs")
    async def list_graphs() -> JSONResponse:
        listing = [
            {"id": g.id, "title": _text_doc(g.title), "disclaimer": _text_doc(g.disclaimer)}
            for g in sorted(graphs.values(), key=lambda g: g.id)
        ]
        return JSONResponse(listing)

    @app.get("/api/graphs/{graph_id}")
    async def get_graph(graph_id: str) -> Response:
        graph = _graph_or_404(graph_id)
        return Response(content=serialize_graph(graph), media_type="application/json")

    @app.post("/api/search")
    async def search_entries(request: Request) -> JSONResponse:
        body = await _read_body(request, ("graphId", "query", "lang"), optional=("k",))
        graph = _graph_or_404(_require_string(body, "graphId"))
        query = body["query"]
        if not isinstance(query, str):
            raise InvalidValue("query must be a string", subject="query")
        lang = _require_string(body, "lang")
        k = body.get("k", 10)
        if not isinstance(k, int) or isinstance(k, bool):
            raise InvalidValue("k must be an integer", subject="k")
        matches = search(graph, query, lang, k)
        return JSONResponse(
            {
                "matches": [
                    {
                        "entryPointId": m.entry_point_id,
                        "score": m.score,
                        "matchedPhrases": list(m.matched_phrases),
                    }
                    for m in matches
                ]
            }
        )

    @app.post("/api/journeys")
    async def create_journey(request: Request) -> JSONResponse:
        body = await _read_body(request, ("graphId", "entryPointId", "lang"))
        graph = _graph_or_404(_require_string(body, "graphId"))
        journey = start(graph, _require_string(body, "entryPointId"), _require_string(body, "lang"))
        return JSONResponse(_journey_response(graph, journey))

    def _bound_journey(body: dict) -> tuple[PathwayGraph, JourneyDoc]:
        doc = body["journey"]
        if not isinstance(doc, dict):
            raise InvalidValue("journey must be an object", subject="journey")
        graph_id = doc.get("graphId")
        if not isinstance(graph_id, str) or not graph_id:
            raise InvalidValue("journey.graphId must be a non-empty string", subject="journey.graphId")
        graph = _graph_or_404(graph_id)
        return graph, journey_from_doc(graph, doc)

    @app.post("/api/journeys/step")
    async def step_journey(request: Request) -> JSONResponse:
        body = await _read_body(request, ("journey", "choice"))
        graph, journey = _bound_journey(body)
        stepped = step(graph, journey, _require_string(body, "choice"))
        return JSONResponse(_journey_response(graph, stepped))

    @app.post("/api/journeys/rewind")
    async def rewind_journey(request: Request) -> JSONResponse:
        body = await _read_body(request, ("journey", "keep"))
        graph, journey = _bound_journey(body)
        keep = body["keep"]
        if not isinstance(keep, int) or isinstance(keep, bool):
            raise InvalidValue("keep must be an integer", subject="keep")
        rewound = rewind(graph, journey, keep)
        return JSONResponse(_journey_response(graph, rewound))

    ui_dir = os.environ.get("ARTEMUS_UI_DIR")
    if ui_dir and Path(ui_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
