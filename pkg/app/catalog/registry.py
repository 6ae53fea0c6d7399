"""
Family registry
Builds a ConstructedGraph from a FamilySpec and keeps built graphs for reuse
"""

import logging
import threading
from typing import Dict

from app.graphs import constructions
from app.graphs.constructions import ConstructedGraph
from app.models import FamilySpec

logger = logging.getLogger(__name__)


class FamilyRegistry:
    """Dispatches family tags to builders; results are cached per spec"""

    def __init__(self):
        self._cache: Dict[str, ConstructedGraph] = {}
        self._lock = threading.Lock()

    def _construct(self, spec: FamilySpec) -> ConstructedGraph:
        f = spec.family
        if f == "Triangular":
            return constructions.triangular(spec.m)
        if f == "Lattice":
            return constructions.lattice(spec.n)
        if f == "LatinSquare":
            if spec.latin_square is not None:
                return constructions.latin_square_graph(spec.latin_square)
            return constructions.cayley_latin(spec.n)
        if f == "Paley":
            return constructions.paley(spec.q)
        if f == "Symplectic":
            return constructions.symplectic_graph(spec.r, spec.q)
        if f == "HyperbolicQuadric":
            return constructions.quadric_graph("+", spec.r)
        if f == "EllipticQuadric":
            return constructions.quadric_graph("-", spec.r)
        if f == "Chang":
            return constructions.chang(spec.index)
        if f == "ComplementOf":
            return constructions.complement_of(self.build(spec.inner))
        builders = {
            "TwentySevenLines": constructions.twenty_seven_lines,
            "Schlafli": constructions.schlafli,
            "Clebsch": constructions.clebsch,
            "Shrikhande": constructions.shrikhande,
            "Petersen": constructions.petersen,
        }
        return builders[f]()

    def build(self, spec: FamilySpec) -> ConstructedGraph:
        key = spec.model_dump_json()
        with self._lock:
            cached = self._cache.get(key)
        if cached is not None:
            return cached
        cg = self._construct(spec)
        logger.debug(f"built {spec.label()} on {cg.n} vertices")
        with self._lock:
            self._cache.setdefault(key, cg)
        return cg

    def clear(self) -> None:
        with self._lock:
            self._cache.clear()


# Global registry instance (singleton pattern)
_registry = None


def get_registry() -> FamilyRegistry:
    """Get or create the global family registry"""
    global _registry
    if _registry is None:
        _registry = FamilyRegistry()
    return _registry


def build_family(spec: FamilySpec) -> ConstructedGraph:
    return get_registry().build(spec)
