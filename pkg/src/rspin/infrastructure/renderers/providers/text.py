"""Plain text renderer."""
from ..resolver import Renderer, RendererResolver
from ..specs import Document, RenderSpec


@RendererResolver.register("text")
def _build_text_renderer(_: RenderSpec) -> Renderer:
    """One output line per document line."""

    def render(document: Document) -> str:
        return "\n".join(document["lines"])

    return render
