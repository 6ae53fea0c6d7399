"""
Strong regularity, spectra, the kappa2 search and incidence geometry
"""

from app.analysis.connectivity import kappa2_exact, verify_cut, vertex_connectivity
from app.analysis.srg import spectrum, srg_check

__all__ = ["srg_check", "spectrum", "vertex_connectivity", "verify_cut", "kappa2_exact"]
