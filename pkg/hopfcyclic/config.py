"""
hopfcyclic Configuration Management
"""

import logging
import os
from typing import Any, Dict

from dotenv import load_dotenv
from pydantic import BaseModel, Field

from .exceptions import DimensionGuard

logger = logging.getLogger(__name__)

# Load environment variables
load_dotenv()


class EngineConfig(BaseModel):
    """Engine configuration"""

    # Size limits
    dimension_guard: int = Field(default=5000, description="Largest space dimension a builder may materialize")
    max_degree: int = Field(default=3, description="Default top degree N of built complexes")

    # Probes and searches
    order_cap: int = Field(default=24, description="Largest power tried by t_order_probe")
    power_window: int = Field(default=2, description="Exponent window |j| for pairing comparison maps t^j")

    # Output configuration
    output_format: str = Field(default="json", description="Report and dump format: json, yaml")

    # Debug configuration
    debug: bool = Field(default=False, description="Debug mode")
    log_level: str = Field(default="INFO", description="Log level")

    @classmethod
    def from_env(cls) -> "EngineConfig":
        """Create configuration from environment variables"""
        return cls(
            dimension_guard=int(os.getenv("HOPFCYC_DIMENSION_GUARD", "5000")),
            max_degree=int(os.getenv("HOPFCYC_MAX_DEGREE", "3")),
            order_cap=int(os.getenv("HOPFCYC_ORDER_CAP", "24")),
            power_window=int(os.getenv("HOPFCYC_POWER_WINDOW", "2")),
            output_format=os.getenv("HOPFCYC_OUTPUT_FORMAT", "json"),
            debug=os.getenv("HOPFCYC_DEBUG", "false").lower() == "true",
            log_level=os.getenv("HOPFCYC_LOG_LEVEL", "INFO"),
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return self.model_dump()

    def validate_limits(self) -> None:
        """Validate numeric limits and formats"""
        if self.dimension_guard <= 0:
            raise ValueError(f"dimension_guard must be positive, got {self.dimension_guard}")
        if self.max_degree < 0:
            raise ValueError(f"max_degree must be non-negative, got {self.max_degree}")
        if self.order_cap <= 0:
            raise ValueError(f"order_cap must be positive, got {self.order_cap}")
        if self.power_window <= 0:
            raise ValueError(f"power_window must be positive, got {self.power_window}")
        if self.output_format not in ("json", "yaml"):
            raise ValueError(f"Unsupported output format: {self.output_format}")

    def guard(self, dimension: int, what: str = "space") -> None:
        """Raise DimensionGuard when ``dimension`` exceeds the cap"""
        if dimension > self.dimension_guard:
            logger.warning("Dimension guard: %s needs %d > %d", what, dimension, self.dimension_guard)
            raise DimensionGuard(f"Refusing to materialize {what}", dimension, self.dimension_guard)
