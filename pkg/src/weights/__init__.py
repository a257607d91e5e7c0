"""Operads, span calculi and weighted limits for objects of monoids."""
from .fincat import FinCategory, FinMonoidalCategory, load_monoidal
from .limits import WCone, weighted_limit
from .oracles import enumerate_monoids
from .theory import weight

__all__ = ["FinCategory", "FinMonoidalCategory", "WCone", "enumerate_monoids", "load_monoidal",
           "weight", "weighted_limit"]
