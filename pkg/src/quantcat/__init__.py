"""Exact-arithmetic toolkit for quantale-enriched categories.

Quantales, V-categories, distributors, presheaf/ball/Lawvere monads,
Beck-Chevalley checks, weighted colimits and algebra extraction, with a
JSON-document CLI (`quantcat`).
"""

__version__ = "0.1.0"
