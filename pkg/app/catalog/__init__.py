"""
Family registry and the census of small strongly regular graphs
"""

from app.catalog.census import cmd_census
from app.catalog.registry import build_family, get_registry

__all__ = ["build_family", "get_registry", "cmd_census"]
