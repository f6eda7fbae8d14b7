"""Structured (JSON) renderer."""
import json

from ..resolver import Renderer, RendererResolver
from ..specs import Document, RenderSpec


@RendererResolver.register("structured")
def _build_structured_renderer(_: RenderSpec) -> Renderer:
    """A single self-describing JSON document with sorted keys."""

    def render(document: Document) -> str:
        payload = {"command": document["command"], **document["data"]}
        return json.dumps(payload, sort_keys=True, indent=2)

    return render
