"""Complexity regime of an instance from its distance profile."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..matrix import DistanceProfile


class RegimeTag(str, Enum):
    POLYNOMIAL_BINARY = "PolynomialBinary"
    NP_COMPLETE_BINARY = "NPCompleteBinary"
    UNKNOWN_NON_BINARY = "UnknownNonBinary"


@dataclass(frozen=True)
class Regime:
    tag: RegimeTag
    reason: str
    profile: DistanceProfile

    @property
    def polynomial(self) -> bool:
        return self.tag is RegimeTag.POLYNOMIAL_BINARY

    def headline(self) -> str:
        h, H = self.profile.as_tuple()
        label = {
            RegimeTag.POLYNOMIAL_BINARY: "Polynomial-time regime",
            RegimeTag.NP_COMPLETE_BINARY: "NP-complete regime",
            RegimeTag.UNKNOWN_NON_BINARY: "Unclassified non-binary regime",
        }[self.tag]
        return f"{label} (h={h}, H={H})"


def polynomial_bound(h: int) -> int:
    """Largest maximum distance that keeps binary instances polynomial: 2*ceil(h/2)+1."""
    return 2 * ((h + 1) // 2) + 1


def classify(p: DistanceProfile, sigma_size: int) -> Regime:
    h, H = p.as_tuple()
    if sigma_size > 2:
        return Regime(
            RegimeTag.UNKNOWN_NON_BINARY,
            "alphabet larger than two symbols: the Hamming-distance dichotomy covers "
            "binary matrices only",
            p,
        )
    if H <= polynomial_bound(h):
        if H <= h + 1:
            why = "H <= h+1: weight classes are uniform weak delta-systems (sunflower case analysis)"
        else:
            why = "h odd and H = h+2: sunflower case analysis with bipartite matching"
        return Regime(RegimeTag.POLYNOMIAL_BINARY, why, p)
    return Regime(
        RegimeTag.NP_COMPLETE_BINARY,
        "H >= 2*ceil(h/2)+2: NP-complete via the distance-3 independent set "
        "reduction padded with inessential columns",
        p,
    )
