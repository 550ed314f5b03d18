"""Exact symbolic workbench for algebraic minimal cones."""

try:
    from . import _mincone as _impl
except ImportError:  # extension on sys.path rather than inside the package
    import _mincone as _impl

__all__ = [
    "admissible_pairs",
    "cartan_cubic",
    "clifford_cubic",
    "congruence_class_count",
    "delta",
    "det_weight_formula",
    "determinant_cone",
    "fkm_quartic",
    "hsiang_cubic",
    "hurwitz_radon",
    "irreducibility_certificate",
    "is_realizable",
    "quadric_cone",
    "realizability_scan",
    "reducible_example",
    "selftest",
    "system_invariants",
    "system_text",
    "verify",
]

for _name in __all__:
    globals()[_name] = getattr(_impl, _name)
del _name
