from __future__ import annotations

from .errors import DegreeError, NotAGroupError, NotNormalError, NotSubgroupError, TrivialSubgroupError
from .permcore import PermSet, is_normal_in


def check_gqp_pair(Q: PermSet, P: PermSet) -> None:
    """Raise unless ``1 != Q``, ``Q <= P`` and ``Q`` is normal in ``P``."""
    if Q.kind != "group" or P.kind != "group":
        raise NotAGroupError("Q and P must both be groups")
    if Q.degree != P.degree:
        raise DegreeError(f"Q has degree {Q.degree} but P has degree {P.degree}")
    if len(Q) == 1:
        raise TrivialSubgroupError("Q must be a nontrivial group")
    if not Q.issubset(P):
        raise NotSubgroupError("Q is not contained in P")
    if not is_normal_in(Q, P):
        raise NotNormalError("Q is not normal in P")
