"""Configuration module."""

from weakly_directed_walks.config.settings import Settings, settings

__all__ = ["Settings", "settings"]
