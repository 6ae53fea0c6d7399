"""
SRG parameter verification, exact spectra, eigenvalue bounds and sufficiency predicates
All verdict-relevant arithmetic is exact: integers, Fractions and sympy quadratic surds
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Any, Dict, List, Optional

import numpy as np
import sympy
from pydantic import ValidationError

from app.core.config import INTERLACING_TOLERANCE
from app.core.errors import (
    ComplementDisconnectedError,
    CompleteGraphError,
    DisconnectedError,
    InfeasibleMultiplicitiesError,
    InfeasibleParamsError,
    NotRegularError,
    NotStronglyRegularError,
)
from app.graphs.graph import Graph, VertexSet
from app.models import SpectrumModel, SrgParams, VerdictStatus

logger = logging.getLogger(__name__)

# Rule names, in the order cmd_decide reports the first that holds
SMALL_ORDER = "small_order"
HAEMERS_PRODUCT = "haemers_product"
NEAR_EQUAL_LAMBDA_MU = "near_equal_lambda_mu"
SMALL_THETA2 = "small_theta2"
PARAMETER_RULES = (SMALL_ORDER, HAEMERS_PRODUCT, NEAR_EQUAL_LAMBDA_MU, SMALL_THETA2)

# Computed outcomes used as deciding rules
NO_VALID_CUT = "no_valid_cut"
CLIQUE_NEIGHBOURHOOD_CUT = "clique_neighbourhood_cut"
LATTICE_EDGE_CUTS = "lattice_edge_cuts"
EXHAUSTIVE_SEARCH = "exhaustive_search"


def make_params(v: int, k: int, lam: int, mu: int) -> SrgParams:
    """SrgParams from user input, raising InfeasibleParamsError on bad tuples"""
    try:
        return SrgParams(v=v, k=k, lam=lam, mu=mu)
    except ValidationError as e:
        raise InfeasibleParamsError(f"({v},{k},{lam},{mu}) is not a feasible parameter set") from e


def srg_check(G: Graph) -> SrgParams:
    """Verify strong regularity by exact counting and return (v,k,lambda,mu)"""
    n = G.n
    if n < 2 or G.is_complete():
        raise CompleteGraphError(f"graph on {n} vertices is complete")
    if not G.is_connected():
        raise DisconnectedError("graph is disconnected")
    degrees = set(G.degrees())
    if len(degrees) != 1:
        raise NotRegularError(f"degrees {sorted(degrees)} are not constant")
    k = degrees.pop()

    adj = G.adj
    lam = mu = None
    for u in range(n):
        row = adj[u]
        for w in range(u + 1, n):
            common = (row & adj[w]).bit_count()
            if row >> w & 1:
                if lam is None:
                    lam = common
                elif common != lam:
                    raise NotStronglyRegularError(f"adjacent pairs have {lam} and {common} common neighbours")
            else:
                if mu is None:
                    mu = common
                elif common != mu:
                    raise NotStronglyRegularError(f"non-adjacent pairs have {mu} and {common} common neighbours")
    return SrgParams(v=n, k=k, lam=lam or 0, mu=mu or 0)


def discriminant(p: SrgParams) -> int:
    """D = (lambda - mu)^2 + 4(k - mu)"""
    return (p.lam - p.mu) ** 2 + 4 * (p.k - p.mu)


def is_conference(p: SrgParams) -> bool:
    return p.v == 2 * p.k + 1 and p.lam == p.mu - 1 and 4 * p.mu == p.v - 1


@dataclass(frozen=True)
class Spectrum:
    """Restricted eigenvalues (exact sympy numbers) and their multiplicities"""

    params: SrgParams
    theta2: sympy.Expr
    thetav: sympy.Expr
    f: int
    g: int

    @property
    def theta2_float(self) -> float:
        return float(self.theta2)

    @property
    def thetav_float(self) -> float:
        return float(self.thetav)

    def to_model(self) -> SpectrumModel:
        return SpectrumModel(theta2=str(self.theta2), thetav=str(self.thetav), f=self.f, g=self.g)

    def table_entry(self) -> str:
        """'r^f s^g' with three decimals for irrational values"""
        def fmt(x):
            return str(int(x)) if x.is_Integer else f"{float(x):.3f}"
        return f"{fmt(self.theta2)}^{self.f} {fmt(self.thetav)}^{self.g}"


def spectrum(p: SrgParams) -> Spectrum:
    """theta2, thetav = (lambda - mu +- sqrt(D)) / 2 with f, g from the trace conditions"""
    D = discriminant(p)
    L = p.lam - p.mu
    root = sympy.sqrt(D)
    theta2 = (sympy.Integer(L) + root) / 2
    thetav = (sympy.Integer(L) - root) / 2
    # f (theta2 - thetav) = -k - (v-1) thetav, i.e. f = ((v-1) - (2k + (v-1)L)/sqrt(D)) / 2
    f = sympy.Rational(p.v - 1, 2) - sympy.Rational(2 * p.k + (p.v - 1) * L, 2) / root
    g = sympy.Integer(p.v - 1) - f
    if not (f.is_Integer and g.is_Integer and f >= 0 and g >= 0):
        raise InfeasibleMultiplicitiesError(f"{p} has multiplicities f={f}, g={g}")
    return Spectrum(p, theta2, thetav, int(f), int(g))


def complement_params(p: SrgParams, strict: bool = False) -> SrgParams:
    """(v, v-k-1, v-2k+mu-2, v-2k+lambda); a disconnected complement is flagged"""
    mu_bar = p.v - 2 * p.k + p.lam
    if mu_bar < 1:
        message = f"complement of {p} is disconnected (mu = {mu_bar})"
        if strict:
            raise ComplementDisconnectedError(message)
        logger.warning(f"⚠️ {message}")
    return SrgParams(v=p.v, k=p.v - p.k - 1, lam=p.v - 2 * p.k + p.mu - 2, mu=mu_bar)


def haemers_lower_bound(p: SrgParams, a: int, b: int) -> Fraction:
    """4ab mu / D: any separator with sides a, b has at least this many vertices"""
    if a <= 0 or b <= 0:
        return Fraction(0)
    return Fraction(4 * a * b * p.mu, discriminant(p))


def spectral_size_cap(p: SrgParams, threshold: int, a_limit: int) -> int:
    """Largest a <= a_limit allowing a cut of size <= threshold whose smaller side has a vertices

    With b >= max(a, v - threshold - a) the separator bound gives
    4 mu a max(a, v - threshold - a) <= threshold D, monotone in a.
    """
    if p.mu == 0:
        return a_limit
    rhs = threshold * discriminant(p)
    cap = 0
    for a in range(1, a_limit + 1):
        if 4 * p.mu * a * max(a, p.v - threshold - a) > rhs:
            break
        cap = a
    return cap


def connected_set_lower_bound(p: SrgParams, t: int) -> int:
    """A connected set of t >= 2 vertices has at least 2k - lambda - t neighbours"""
    return 2 * p.k - p.lam - t


def edge_neighborhood_size(p: SrgParams) -> int:
    return p.edge_bound


def theta2_below_sqrt2(p: SrgParams) -> bool:
    """theta2 < sqrt(2) in integer arithmetic on the surd L + sqrt(D) < 2 sqrt(2)"""
    L = p.lam - p.mu
    D = discriminant(p)
    if L >= 3:
        return False
    # both sides nonnegative: square to 4 L sqrt(2) < c
    c = 8 + L * L - D
    if L == 0:
        return c > 0
    if L > 0:
        return c > 0 and 32 * L * L < c * c
    return c >= 0 or 32 * L * L > c * c


@dataclass(frozen=True)
class RuleResult:
    rule: str
    holds: bool
    evidence: Dict[str, Any] = field(default_factory=dict)


def sufficiency_rules(p: SrgParams) -> List[RuleResult]:
    """Evaluate the four parameter-level sufficient conditions for OK"""
    v, k, lam, mu = p.as_tuple()
    small_order = RuleResult(SMALL_ORDER, v <= 2 * k - lam + 2, {"v": v, "2k-lambda+2": 2 * k - lam + 2})
    lhs = 4 * (k - 2 * lam) * (k - mu)
    rhs = (lam - mu) ** 2 * (2 * k - lam - 3)
    haemers = RuleResult(HAEMERS_PRODUCT, lhs > rhs, {"lhs": lhs, "rhs": rhs})
    near_equal = RuleResult(
        NEAR_EQUAL_LAMBDA_MU,
        lam - mu in (-1, 0, 1) and k >= 2 * lam + 1,
        {"lambda-mu": lam - mu, "k": k, "2lambda+1": 2 * lam + 1},
    )
    theta2 = (sympy.Integer(lam - mu) + sympy.sqrt(discriminant(p))) / 2
    small_theta = RuleResult(SMALL_THETA2, theta2_below_sqrt2(p), {"theta2": str(theta2)})
    return [small_order, haemers, near_equal, small_theta]


def delsarte_clique_bound(p: SrgParams) -> int:
    """floor(1 + k / (-thetav)) with -thetav = (sqrt(D) - L) / 2, computed in integers"""
    L = p.lam - p.mu
    D = discriminant(p)
    denom = D - L * L  # 4(k - mu)
    if denom == 0:
        # k = mu: complete multipartite, thetav = L
        return 1 + p.k // (p.mu - p.lam)
    # 2k (sqrt(D) + L) / denom; floor((x + c) / d) = floor((floor(x) + c) / d) for d > 0
    return 1 + (isqrt(4 * p.k * p.k * D) + 2 * p.k * L) // denom


def interlacing_holds(G: Graph, A: VertexSet, B: VertexSet, theta2: float) -> bool:
    """min of the spectral radii of G[A] and G[B] is at most theta2"""
    alpha = induced_spectral_radius(G, A)
    beta = induced_spectral_radius(G, B)
    return min(alpha, beta) <= theta2 + INTERLACING_TOLERANCE


def spectral_radius(G: Graph) -> float:
    """Largest adjacency eigenvalue"""
    if G.n == 0:
        return 0.0
    if G.n == 1:
        return 0.0
    return float(np.linalg.eigvalsh(G.adjacency_matrix())[-1])


def induced_spectral_radius(G: Graph, X: VertexSet) -> float:
    return spectral_radius(G.induced(list(X)))


def srg_identity_holds(G: Graph, p: SrgParams) -> bool:
    """A^2 = kI + lambda A + mu (J - I - A), checked by common-neighbour counts"""
    adj = G.adj
    for u in range(G.n):
        if adj[u].bit_count() != p.k:
            return False
        for w in range(u + 1, G.n):
            expected = p.lam if adj[u] >> w & 1 else p.mu
            if (adj[u] & adj[w]).bit_count() != expected:
                return False
    return True


@dataclass(frozen=True)
class Verdict:
    status: VerdictStatus
    rule: Optional[str]
    evidence: Dict[str, Any] = field(default_factory=dict)
    certificate: Any = None


def deciding_rule(rules: List[RuleResult], status: VerdictStatus) -> Optional[str]:
    """First parameter rule that holds, or the computed outcome that decided"""
    if status == VerdictStatus.COUNTEREXAMPLE:
        return CLIQUE_NEIGHBOURHOOD_CUT
    if status == VerdictStatus.OK_NO_VALID_CUT:
        return NO_VALID_CUT
    if status == VerdictStatus.ABOVE_BOUND:
        # not an OK outcome; no parameter rule can account for it
        return EXHAUSTIVE_SEARCH
    for r in rules:
        if r.holds:
            return r.rule
    if status == VerdictStatus.OK_EQUALITY:
        return EXHAUSTIVE_SEARCH
    return None


def decide_verdict(params: Optional[SrgParams], kappa2, rules: Optional[List[RuleResult]] = None) -> Verdict:
    """Turn a Kappa2Result (and SRG parameters, if any) into a Verdict"""
    rules = rules or []
    evidence = {"kappa2": kappa2.value, "closed": kappa2.closed}
    if params is not None:
        evidence["2k-lambda-2"] = params.edge_bound
    if params is None:
        status = VerdictStatus.NOT_SRG
    elif not kappa2.closed:
        status = VerdictStatus.UNDECIDED
    elif kappa2.value is None:
        status = VerdictStatus.OK_NO_VALID_CUT
    elif kappa2.value < params.edge_bound:
        status = VerdictStatus.COUNTEREXAMPLE
    elif kappa2.value == params.edge_bound:
        status = VerdictStatus.OK_EQUALITY
    else:
        status = VerdictStatus.ABOVE_BOUND
    rule = deciding_rule(rules, status) if params is not None and status != VerdictStatus.UNDECIDED else None
    return Verdict(status, rule, evidence, kappa2.certificate)
