"""Shared domain types, configuration, field and joint models."""

from .config import Config, ConfigError, load_config, load_config_text, parse_kv_lines
from .field import FieldModel
from .geometry import Pose2D, normalize_angle
from .joints import Joint, JointModel, JointTargets

__all__ = [
    "Config",
    "ConfigError",
    "FieldModel",
    "Joint",
    "JointModel",
    "JointTargets",
    "Pose2D",
    "load_config",
    "load_config_text",
    "normalize_angle",
    "parse_kv_lines",
]
