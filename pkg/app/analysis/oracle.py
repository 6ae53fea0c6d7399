"""
Brute-force kappa2 for small graphs, independent of the branch-and-bound solver
"""

import itertools
import logging

from app.analysis.connectivity import Kappa2Result, verify_cut
from app.core.config import ORACLE_MAX_VERTICES
from app.core.errors import TooLargeError
from app.graphs.graph import Graph, VertexSet

logger = logging.getLogger(__name__)


def kappa2_bruteforce(G: Graph) -> Kappa2Result:
    """Try every vertex subset in increasing size; all optimal cuts at the first valid size"""
    n = G.n
    if n > ORACLE_MAX_VERTICES:
        raise TooLargeError(f"oracle limited to {ORACLE_MAX_VERTICES} vertices, got {n}")
    checked = 0
    for size in range(n + 1):
        found = []
        for S in itertools.combinations(range(n), size):
            checked += 1
            cert = verify_cut(G, VertexSet.from_iterable(n, S))
            if cert:
                found.append(cert)
        if found:
            found.sort(key=lambda c: c.key())
            logger.debug(f"oracle: {len(found)} cuts of size {size} after {checked} subsets")
            return Kappa2Result(size, True, found[0], found, {"subsets": checked})
    return Kappa2Result(None, True, stats={"subsets": checked})
