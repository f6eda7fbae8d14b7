"""Seed resolver infrastructure for numeric correlator oracles."""
from typing import Callable, Dict

from rspin.errors import SeedUnavailableError

from .specs import SeedEntries, SeedSpec


Builder = Callable[[SeedSpec], SeedEntries]


class SeedResolver:
    """Resolver for numeric seed oracles, keyed by the root index r."""

    _REGISTRY: Dict[int, Builder] = {}

    @classmethod
    def register(cls, r: int):
        """Decorator to register a seed builder for one root index."""

        def decorator(builder_func: Builder):
            cls._REGISTRY[r] = builder_func
            return builder_func

        return decorator

    @classmethod
    def resolve(cls, config: SeedSpec) -> SeedEntries:
        """Build the seed entries for config["r"].

        Raises:
            SeedUnavailableError: If no oracle is registered for r.
        """
        r = config.get("r")
        if r not in cls._REGISTRY:
            raise SeedUnavailableError(f"no numeric oracle for r={r}")
        builder = cls._REGISTRY[r]
        return builder(config)
