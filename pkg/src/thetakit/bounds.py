"""Closed-form spectral bounds: clique/chromatic/eigenvalue inequalities
for regular graphs and strong products, with uniform reporting."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graphs import Graph
from .spectra import complement_spectrum, eigenvalues, spectrum_from_groups
from .srg import SrgParams, srg_check

EQUALITY_TOL = 1e-6


@dataclass(frozen=True)
class BoundReport:
    """One evaluated inequality lhs <relation> rhs.

    slack is rhs-lhs for "<=" and lhs-rhs for ">=", so slack >= -tol means
    the bound holds and |slack| <= tol means it is tight.
    """

    name: str
    lhs: float
    rhs: float
    relation: str  # "<=" or ">="
    slack: float
    applicable: bool
    reason: Optional[str] = None

    def holds(self, tol: float = EQUALITY_TOL) -> bool:
        return not self.applicable or self.slack >= -tol

    def is_equality(self, tol: float = EQUALITY_TOL) -> bool:
        return self.applicable and abs(self.slack) <= tol

    def as_dict(self) -> dict:
        out = {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "slack": self.slack,
            "applicable": self.applicable,
        }
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def make_report(name: str, lhs: float, rhs: float, relation: str,
                applicable: bool = True, reason: Optional[str] = None) -> BoundReport:
    if relation not in ("<=", ">="):
        raise ValueError("relation must be '<=' or '>='")
    slack = (rhs - lhs) if relation == "<=" else (lhs - rhs)
    return BoundReport(name, float(lhs), float(rhs), relation, float(slack),
                       applicable, reason)


def _ceil(x: float) -> int:
    # guard against float noise pushing an exact integer up a step
    return math.ceil(x - 1e-9)


def _floor(x: float) -> int:
    return math.floor(x + 1e-9)


# -- eigenvalue inequality and the derived sequence -------------------


def eig_inequality_cor0(n: int, d: int, l2: float, lmin: float,
                        tol: float = EQUALITY_TOL):
    """Both directions of the spectral inequality tying lmin and l2 for a
    regular non-complete non-empty graph; equality holds exactly for
    strongly regular graphs.

    Returns (report for lmin <= f(l2), report for l2 >= f(lmin)).
    """
    if not 0 < d < n - 1:
        raise ValueError("need a non-complete, non-empty regular graph")
    rhs1 = -d * (n - d + l2) / (d + (n - 1) * l2)
    up = make_report("eigmin-upper-from-l2", lmin, rhs1, "<=")
    rhs2 = -d * (n - d + lmin) / (d + (n - 1) * lmin)
    low = make_report("l2-lower-from-eigmin", l2, rhs2, ">=")
    return up, low


@dataclass(frozen=True)
class GSequence:
    """Per-index values eig_l(complement) - d(n-d+eig_l)/(d+(n-1)eig_l)."""

    values: tuple
    tol: float

    @property
    def head(self) -> float:
        return self.values[0]  # always n - d - 2

    def _group(self, vals) -> tuple:
        groups = []
        for v in sorted(vals, reverse=True):
            if groups and abs(groups[-1][0] - v) <= self.tol:
                groups[-1][1] += 1
            else:
                groups.append([v, 1])
        return tuple((v, m) for v, m in groups)

    def tail_groups(self) -> tuple:
        """Distinct values over indices l >= 2 with multiplicities, descending."""
        return self._group(self.values[1:])

    def groups(self) -> tuple:
        """Distinct values over the whole sequence with multiplicities."""
        return self._group(self.values)

    def distinct_count(self) -> int:
        return len(self.groups())


def g_sequence(g: Graph, tol: float = 1e-5) -> GSequence:
    """The sequence g_l = eig_l(complement) - d(n-d+eig_l)/(d+(n-1)eig_l),
    with both spectra sorted descending and paired by index.

    g_1 is always n-d-2, and g_n <= -1 <= g_2 with equality exactly for
    strongly regular graphs. For a strongly regular graph the whole
    sequence takes 2 or 3 distinct values; a third value appears when the
    two non-principal eigenvalue multiplicities differ, and then exactly
    |m1 - m2| times.
    """
    n = g.n
    d = g.degree()
    if not 0 < d < n - 1:
        raise ValueError("need a non-complete, non-empty regular graph")
    spec = eigenvalues(g)
    comp = complement_spectrum(spec, n, d)
    ev = spec.expanded()
    cev = comp.expanded()
    vals = []
    for l in range(n):
        lam = float(ev[l])
        denom = d + (n - 1) * lam
        vals.append(float(cev[l]) - d * (n - d + lam) / denom)
    return GSequence(tuple(vals), tol)


def self_complementary_eig_bounds(n: int):
    """(lower bound on l2, upper bound on lmin) for a regular
    self-complementary graph; tight when it is also strongly regular."""
    return ((math.sqrt(n) - 1) / 2.0, -(math.sqrt(n) + 1) / 2.0)


# -- clique bounds ----------------------------------------------------


def haemers_clique_upper(n: int, d: int, l2: float) -> float:
    """Clique upper bound n(1+l2)/(n-d+l2) for a d-regular graph."""
    denom = n - d + l2
    if denom <= 0:
        raise ValueError("degenerate parameters")
    return n * (1.0 + l2) / denom


def haemers_clique_upper_maxdeg(n: int, avg_d: float, l1: float, l2: float,
                                dmax: int) -> float:
    """Clique upper bound n(d+l1*l2)/(dn - dmax^2 + l1*l2) for an arbitrary
    graph, with d the average degree 2|E|/n; reduces to the regular form
    when the graph is regular."""
    denom = avg_d * n - dmax ** 2 + l1 * l2
    if denom <= 0:
        raise ValueError("degenerate parameters")
    return n * (avg_d + l1 * l2) / denom


@dataclass(frozen=True)
class RamanujanBounds:
    clique_upper: int
    theta_lower: float
    chromatic_complement_lower: int
    clique_upper_raw: float


def ramanujan_bounds(n: int, d: int) -> RamanujanBounds:
    """Bounds valid for any d-regular Ramanujan graph, using only (n, d):
    replace the nontrivial eigenvalues by +-2 sqrt(d-1)."""
    s = 2.0 * math.sqrt(d - 1.0)
    raw = n * (1.0 + s) / (n - d + s)
    theta_lower = (n - d + s) / (1.0 + s)
    return RamanujanBounds(_floor(raw), theta_lower, _ceil(theta_lower), raw)


def wei_bounds(degrees):
    """Wei's degree-sequence bounds: (lower bound on alpha, lower bound on omega)."""
    ds = np.asarray(degrees, dtype=np.float64)
    n = len(ds)
    alpha_lb = float((1.0 / (1.0 + ds)).sum())
    omega_lb = float((1.0 / (n - ds)).sum())
    return alpha_lb, omega_lb


# -- strong product eigenvalue bounds ---------------------------------


def eig2_lower_product(factors) -> float:
    """Lower bound on l2 of a strong product from per-factor (n, d, theta).

    Valid unless every factor is complete.
    """
    ns = [f[0] for f in factors]
    ds = [f[1] for f in factors]
    thetas = [f[2] for f in factors]
    if all(d == n - 1 for n, d in zip(ns, ds)):
        raise ValueError("all factors complete")
    denom = math.prod(float(t) for t in thetas) - 1.0
    if denom <= 0:
        raise ValueError("need prod(theta) > 1")
    return (math.prod(ns) - math.prod(1 + d for d in ds)) / denom - 1.0


def eig2_lower_product_lmin(factors) -> float:
    """Weakened form of eig2_lower_product with theta replaced by the
    spectral upper bound -n*lmin/(d-lmin) per factor (n, d, lmin); equals
    the theta form when each factor is edge-transitive or strongly regular."""
    subs = [(n, d, -n * lm / (d - lm)) for n, d, lm in factors]
    return eig2_lower_product(subs)


def eigmin_upper_product(factors) -> float:
    """Upper bound on lmin of a strong product from per-factor (n, d, theta).

    Valid unless every factor is empty.
    """
    ns = [f[0] for f in factors]
    ds = [f[1] for f in factors]
    thetas = [float(f[2]) for f in factors]
    if all(d == 0 for d in ds):
        raise ValueError("all factors empty")
    denom = math.prod(n / t for n, t in zip(ns, thetas)) - 1.0
    if denom <= 0:
        raise ValueError("need prod(n/theta) > 1")
    return -(math.prod(1 + d for d in ds) - 1.0) / denom


def eigmin_upper_product_lmin(factors) -> float:
    """Equivalent form of eigmin_upper_product taking (n, d, lmin) factors;
    only valid when each factor is edge-transitive or strongly regular
    (then 1 - d/lmin equals n/theta)."""
    ds = [f[1] for f in factors]
    denom = math.prod(1.0 - d / lm for _, d, lm in factors) - 1.0
    if denom <= 0:
        raise ValueError("degenerate factors")
    return -(math.prod(1 + d for d in ds) - 1.0) / denom


def alon_boppana(d: int) -> float:
    """Asymptotic floor 2 sqrt(d-1) on the second eigenvalue of large
    d-regular graphs; the Ramanujan threshold."""
    if d < 2:
        raise ValueError("need d >= 2")
    return 2.0 * math.sqrt(d - 1.0)


def non_ramanujan_k0(n: int, d: int, theta: float) -> int:
    """Smallest certified k0: every strong power with k >= k0 of a connected
    regular graph with theta < n/sqrt(d+1) is non-Ramanujan.
    """
    if not 0 < d < n - 1:
        raise ValueError("need a non-complete, non-empty regular graph")
    theta = float(theta)
    if theta >= n / math.sqrt(d + 1.0):
        raise ValueError("condition theta < n/sqrt(d+1) fails")
    num = math.log(2.0 + (d + 1.0) ** -1.5) \
        + math.log(n ** 3 / (n ** 3 - (d + 1.0) ** 3))
    den = math.log(n / (theta * math.sqrt(d + 1.0)))
    return max(3, _ceil(num / den))


def k0_self_complementary_vt(n: int) -> int:
    """k0 for a self-complementary vertex-transitive graph of order n
    (there theta = sqrt(n) and d = (n-1)/2)."""
    if n < 5 or n % 4 != 1:
        raise ValueError("need n = 1 (mod 4), n >= 5")
    return non_ramanujan_k0(n, (n - 1) // 2, math.sqrt(n))


# -- chromatic lower bounds for strong products -----------------------


def chromatic_lb_strong_product(factors):
    """(lower bound on chi(product), lower bound on chi(complement of product))
    from per-factor (n, theta): ceil(prod n/theta) and ceil(prod theta)."""
    ratio = 1.0
    prod_theta = 1.0
    for n, t in factors:
        t = float(t)
        ratio *= n / t
        prod_theta *= t
    return _ceil(ratio), _ceil(prod_theta)


def chromatic_lb_regular(factors) -> int:
    """ceil(prod (1 - d/lmin)) lower bound on chi of the strong product of
    regular factors (n, d, lmin); matches the n/theta form when each factor
    is edge-transitive or strongly regular."""
    prod = 1.0
    for _, d, lm in factors:
        if lm >= 0:
            raise ValueError("need lmin < 0")
        prod *= 1.0 - d / lm
    return _ceil(prod)


def chromatic_lb_complement_product(factors) -> int:
    """ceil(prod (-n*lmin/(d-lmin))) lower bound on chi of the complement of
    the strong product; requires each (n, d, lmin) factor edge-transitive or
    strongly regular (caller gates on that metadata)."""
    prod = 1.0
    for n, d, lm in factors:
        if lm >= 0:
            raise ValueError("need lmin < 0")
        prod *= -n * lm / (d - lm)
    return _ceil(prod)


def chromatic_lb_self_complementary(orders) -> int:
    """ceil(sqrt(prod n)) lower bound on chi of a strong product (and of its
    complement) whose factors are self-complementary and each vertex-transitive
    or strongly regular."""
    return _ceil(math.sqrt(math.prod(orders)))


def srg_product_chromatic_bounds(params_list, chis=None):
    """Chromatic bounds for a strong product of strongly regular factors.

    Lower: ceil(prod (1 + 2d/(t+mu-lam))) from the closed-form theta of each
    complement factor. Upper: prod of factor chromatic numbers when given.
    """
    prod = 1.0
    for p in params_list:
        if not isinstance(p, SrgParams):
            p = SrgParams(*p)
        t = math.sqrt(p.disc)
        prod *= 1.0 + 2.0 * p.d / (t + p.mu - p.lam)
    upper = None
    if chis is not None:
        upper = math.prod(chis)
    return _ceil(prod), upper


def srg_chromatic_factor(p: SrgParams) -> float:
    """The per-factor value 1 + 2d/(t+mu-lam) (theta of the complement)."""
    if not isinstance(p, SrgParams):
        p = SrgParams(*p)
    t = math.sqrt(p.disc)
    return 1.0 + 2.0 * p.d / (t + p.mu - p.lam)


# -- affine polar graph parameters ------------------------------------


@dataclass(frozen=True)
class AffinePolarInfo:
    params: SrgParams
    sign: str
    l2: int
    lmin: int
    theta: float
    theta_complement: float


def affine_polar_params(e: int, q: int, sign: str) -> AffinePolarInfo:
    """SRG parameters and closed-form theta for the affine polar graphs
    VO+(2e, q) and VO-(2e, q); q a prime power, e >= 2."""
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    if e < 2:
        raise ValueError("need e >= 2")
    if q < 2:
        raise ValueError("need a prime power q >= 2")
    n = q ** (2 * e)
    if sign == "+":
        d = (q ** (e - 1) + 1) * (q ** e - 1)
        lam = q * (q ** (e - 2) + 1) * (q ** (e - 1) - 1) + q - 2
        mu = q ** (e - 1) * (q ** (e - 1) + 1)
        l2 = q ** e - q ** (e - 1) - 1
        lmin = -(q ** (e - 1)) - 1
        theta = float(q ** e)
        theta_c = float(q ** e)
    else:
        d = (q ** (e - 1) - 1) * (q ** e + 1)
        lam = q * (q ** (e - 2) - 1) * (q ** (e - 1) + 1) + q - 2
        mu = q ** (e - 1) * (q ** (e - 1) - 1)
        l2 = q ** (e - 1) - 1
        lmin = -(q ** e) + q ** (e - 1) - 1
        theta = float(q * (q ** e - q ** (e - 1) + 1))
        theta_c = q ** (2 * e - 1) / (q ** e - q ** (e - 1) + 1)
    return AffinePolarInfo(SrgParams(n, d, lam, mu), sign, l2, lmin, theta, theta_c)


# -- report bundles ---------------------------------------------------


def product_bound_reports(factors_data, product_l2: float,
                          product_lmin: float) -> list[BoundReport]:
    """Reports for the strong-product eigenvalue bounds against realized
    product eigenvalues; factors_data is a list of dicts with keys n, d,
    theta and optionally lmin, tight (edge-transitive or SRG)."""
    reports = []
    triples = [(f["n"], f["d"], f["theta"]) for f in factors_data]
    reports.append(make_report("eig2-product-lower",
                               eig2_lower_product(triples), product_l2, "<="))
    reports.append(make_report("eigmin-product-upper",
                               product_lmin, eigmin_upper_product(triples), "<="))
    if all("lmin" in f for f in factors_data):
        lmin_triples = [(f["n"], f["d"], f["lmin"]) for f in factors_data]
        reports.append(make_report("eig2-product-lower-lmin",
                                   eig2_lower_product_lmin(lmin_triples),
                                   product_l2, "<="))
        tight = all(f.get("tight") for f in factors_data)
        reports.append(make_report(
            "eigmin-product-upper-lmin", product_lmin,
            eigmin_upper_product_lmin(lmin_triples), "<=",
            applicable=tight,
            reason=None if tight else "factors not all edge-transitive or SRG"))
    return reports
