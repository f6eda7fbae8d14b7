"""Renderer resolver infrastructure for command output."""
from typing import Callable, Dict, Optional

from .specs import Document, RenderSpec


Renderer = Callable[[Document], str]
Builder = Callable[[RenderSpec], Renderer]


class RendererResolver:
    """Resolver for output renderers with registry extensibility."""

    _REGISTRY: Dict[str, Builder] = {}

    @classmethod
    def register(cls, renderer_type: str):
        """Decorator to register renderer builder functions."""

        def decorator(builder_func: Builder):
            cls._REGISTRY[renderer_type] = builder_func
            return builder_func

        return decorator

    @classmethod
    def resolve(cls, config: Optional[RenderSpec]) -> Renderer:
        """Resolve a renderer from configuration."""
        if config is None:
            config = {"type": "text"}

        renderer_type = config.get("type", "text")

        if renderer_type not in cls._REGISTRY:
            raise ValueError(f"Unknown output format: {renderer_type}")

        builder = cls._REGISTRY[renderer_type]
        return builder(config)
