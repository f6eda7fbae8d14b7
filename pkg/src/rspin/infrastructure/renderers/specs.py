"""Renderer specs.

Declarative shapes for renderer resolver inputs.
"""
from typing import Any, Dict, List, TypedDict


class RenderSpec(TypedDict, total=False):
    """Specification for an output renderer."""

    type: str


class Document(TypedDict):
    """Output of one command: text lines plus the same data as a mapping."""

    command: str
    lines: List[str]
    data: Dict[str, Any]
