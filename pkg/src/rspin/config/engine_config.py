"""Engine configuration model.

Defines EngineConfig, the defaults shared by every computation the
command line can run.
"""
from dataclasses import dataclass
from typing import Any, Dict

OUTPUT_FORMATS = ("text", "structured")


@dataclass
class EngineConfig:
    """Configuration for the rspin engine.

    Attributes:
        depth_offset: Root and power computations retain r + depth_offset orders
        truncation_order: Total degree at which potentials are cut off
        max_genus: Highest genus enumerated for formal potentials
        seed_max_points: Largest number of insertions seeded into numeric tables
        output_format: "text" or "structured"
    """

    depth_offset: int = 6
    truncation_order: int = 6
    max_genus: int = 0
    seed_max_points: int = 6
    output_format: str = "text"

    def __post_init__(self):
        for name in ("depth_offset", "truncation_order", "max_genus", "seed_max_points"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"Unknown output format: {self.output_format}")

    @classmethod
    def from_dict(cls, config_data: Dict[str, Any]) -> "EngineConfig":
        """Construct EngineConfig from a configuration dictionary.

        Args:
            config_data: Configuration dictionary; missing keys take defaults

        Returns:
            EngineConfig instance
        """
        depth_data = config_data.get("depth", {})
        potential_data = config_data.get("potentials", {})
        output_data = config_data.get("output", {})

        return cls(
            depth_offset=depth_data.get("offset", 6),
            truncation_order=potential_data.get("truncation_order", 6),
            max_genus=potential_data.get("max_genus", 0),
            seed_max_points=potential_data.get("seed_max_points", 6),
            output_format=output_data.get("format", "text"),
        )
