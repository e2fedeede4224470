"""Chow weight of a complete intersection under an SL(5) diagonal 1-PS.

For the intersection S of a quadric (form q) and a degree-d hypersurface
(form f), the complete-intersection Chow weight under a diagonal chi is

    mu(S, chi) = deg(f) * mu(q, chi) + deg(q) * mu(f, chi).

A single chi with negative combined weight certifies Chow instability; a
non-negative value for one chi proves nothing, so the only verdicts are
"chow-unstable-witness" and "no-conclusion".
"""

from __future__ import annotations

from dataclasses import dataclass

from .polynomials import Polynomial
from .weights import DiagonalOnePS, mu

CHOW_UNSTABLE_WITNESS = "chow-unstable-witness"
NO_CONCLUSION = "no-conclusion"


@dataclass(frozen=True)
class ChowVerdict:
    mu_q: int
    mu_y: int
    deg_q: int
    deg_y: int
    combined: int  # deg_y * mu_q + deg_q * mu_y
    verdict: str


def ci_chow_weight(q: Polynomial, f: Polynomial, chi: DiagonalOnePS) -> ChowVerdict:
    """Evaluate the complete-intersection Chow weight for one witness chi."""
    for name, g in (("q", q), ("f", f)):
        if g.arity != 5:
            raise ValueError(f"{name} must be a form in x0..x4 (arity 5)")
        if g.is_zero():
            raise ValueError(f"{name} must be nonzero")
        if not g.is_homogeneous():
            raise ValueError(f"{name} must be homogeneous")
    mu_q = mu(chi, q)
    mu_y = mu(chi, f)
    deg_q = q.degree()
    deg_y = f.degree()
    combined = deg_y * mu_q + deg_q * mu_y
    verdict = CHOW_UNSTABLE_WITNESS if combined < 0 else NO_CONCLUSION
    return ChowVerdict(mu_q, mu_y, deg_q, deg_y, combined, verdict)
