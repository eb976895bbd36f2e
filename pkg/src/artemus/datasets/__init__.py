"""Bundled pathway datasets.

The JSON files next to this module are frozen canonical artifacts,
regenerated only via tools/build_datasets.py. They double as reference
material for authors and as fixtures for the test suite, which pins
their content hashes.
"""
from __future__ import annotations

from importlib import resources

from ..errors import UnknownDataset
from ..model import PathwayGraph, parse_graph

BUNDLED = ("education", "housing")


def bundled_names() -> tuple[str, ...]:
    """Ids of the datasets shipped with the package, sorted."""
    return BUNDLED


def dataset_bytes(name: str) -> bytes:
    """Raw canonical bytes of a bundled dataset."""
    if name not in BUNDLED:
        raise UnknownDataset(f"no bundled dataset named {name!r}", subject=name)
    return (resources.files(__package__) / f"{name}.json").read_bytes()


def load_bundled(name: str) -> PathwayGraph:
    """Parse a bundled dataset; raises UnknownDataset for unknown names."""
    return parse_graph(dataset_bytes(name))
