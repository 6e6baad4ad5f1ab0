"""Strong regularity: certification and parameter arithmetic."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .graphs import Graph


@dataclass(frozen=True)
class SrgParams:
    """Parameter tuple (n, d, lam, mu) of a strongly regular graph."""

    n: int
    d: int
    lam: int
    mu: int

    def as_tuple(self):
        return (self.n, self.d, self.lam, self.mu)

    def complement(self) -> "SrgParams":
        n, d, lam, mu = self.as_tuple()
        return SrgParams(n, n - d - 1, n - 2 * d + mu - 2, n - 2 * d + lam)

    @property
    def disc(self) -> int:
        """Discriminant (lam-mu)^2 + 4(d-mu) of the non-principal eigenvalues."""
        return (self.lam - self.mu) ** 2 + 4 * (self.d - self.mu)

    def eigenvalues(self) -> tuple[float, float]:
        """The two non-principal eigenvalues (p1 >= 0 > p2)."""
        t = math.sqrt(self.disc)
        return ((self.lam - self.mu + t) / 2, (self.lam - self.mu - t) / 2)

    def multiplicities(self):
        """Multiplicities (m1, m2) of the non-principal eigenvalues, exact when defined.

        Returns Fractions; integrality is part of feasibility, not assumed here.
        """
        n, d, lam, mu = self.as_tuple()
        num = 2 * d + (n - 1) * (lam - mu)
        if num == 0:
            half = Fraction(n - 1, 2)
            return (half, half)
        s = math.isqrt(self.disc)
        if s * s != self.disc:
            return None  # irrational split with nonzero numerator: infeasible
        return (Fraction(n - 1 - Fraction(num, s), 2),
                Fraction(n - 1 + Fraction(num, s), 2))


def srg_check(g: Graph) -> Optional[SrgParams]:
    """Certify strong regularity by the exact identity A^2 = dI + lam*A + mu*(J-I-A).

    Integer arithmetic throughout. Complete and empty graphs are excluded
    (lam or mu would be vacuous); returns None for them and for any graph
    failing regularity or the identity.
    """
    n = g.n
    if n < 2 or not g.is_regular():
        return None
    d = g.degree()
    if d == 0 or d == n - 1:
        return None  # empty / complete: not treated as strongly regular
    a = g.adj.astype(np.int64)
    a2 = a @ a
    iu, iv = np.nonzero(np.triu(g.adj, 1))
    lam_vals = a2[iu, iv]
    non = np.triu(~g.adj, 1)
    np.fill_diagonal(non, False)
    ju, jv = np.nonzero(non)
    mu_vals = a2[ju, jv]
    if lam_vals.size == 0 or mu_vals.size == 0:
        return None
    lam = int(lam_vals[0])
    mu = int(mu_vals[0])
    if (lam_vals != lam).any() or (mu_vals != mu).any():
        return None
    return SrgParams(n, d, lam, mu)


@dataclass(frozen=True)
class SrgFeasibility:
    params: SrgParams
    relation_ok: bool       # (n-d-1)mu = d(d-lam-1)
    ranges_ok: bool
    conference: bool        # 2d + (n-1)(lam-mu) = 0
    p1: Optional[float]
    p2: Optional[float]
    m1: Optional[Fraction]
    m2: Optional[Fraction]
    integral_ok: bool
    feasible: bool
    reason: str = ""


def srg_params_feasible(p: SrgParams) -> SrgFeasibility:
    """Arithmetic feasibility of an SRG parameter tuple.

    Checks the counting relation, parameter ranges, and integrality of the
    eigenvalue multiplicities. Passing these is necessary, not sufficient,
    for a graph to exist.
    """
    n, d, lam, mu = p.as_tuple()
    bad = lambda why: SrgFeasibility(p, False, False, False, None, None,
                                     None, None, False, False, why)
    if not (0 < d < n - 1):
        return bad("need 0 < d < n-1")
    if not (0 <= lam <= d - 1 and 0 <= mu <= d):
        return bad("lam/mu out of range")
    relation_ok = (n - d - 1) * mu == d * (d - lam - 1)
    conference = 2 * d + (n - 1) * (lam - mu) == 0
    mults = p.multiplicities()
    p1, p2 = p.eigenvalues()
    if mults is None:
        return SrgFeasibility(p, relation_ok, True, conference, p1, p2,
                              None, None, False, False,
                              "irrational eigenvalues with unequal multiplicities")
    m1, m2 = mults
    integral_ok = (m1.denominator == 1 and m2.denominator == 1
                   and m1 >= 0 and m2 >= 0 and m1 + m2 == n - 1)
    feasible = relation_ok and integral_ok
    reason = "" if feasible else "counting relation fails" if not relation_ok \
        else "non-integral multiplicities"
    return SrgFeasibility(p, relation_ok, True, conference, p1, p2,
                          m1, m2, integral_ok, feasible, reason)
