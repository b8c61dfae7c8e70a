"""Finite double bicategories, tidier and monogon models, cubical oracles."""

from __future__ import annotations

from .base import KINDS, FiniteModel, ModelBuilder, ModelError, Undefined, dumps_model, loads_model, model_from_dict, model_to_dict
from .convert import TARGETS, Conversion, ConversionError, NotTidy, convert, double_bicategory_to_tidier
from .cubical import (CubicalOracle, LabelledSquare, MonoidOracle, OracleOutOfRange, PerturbedOracle, TidierOracle,
                      check_cubical_coherence, check_cubical_tidiness)
from .double_bicat import check_double_bicategory, check_tidiness
from .fixtures import TIDIER_FIXTURES, c_m, fixtures, pair, quintet, terminal
from .functors import (Icon, ModelFunctor, check_equivalence, check_functor, check_icon, find_isomorphism,
                       identity_functor, identity_icon)
from .monogon import check_monogon
from .monoid import Monoid, NonCommutativeMonoid, cyclic, loads_monoid, monoid_from_dict, named_monoid
from .report import Entry, Report
from .symmetry import symmetry_model
from .tidier import check_tidier, to_double_bicategory


def check_axioms(m: FiniteModel) -> Report:
    """Every law of the model's kind, over every instance in the finite carriers."""
    if m.kind == "tidier":
        return check_tidier(m)
    if m.kind == "double-bicat":
        return check_double_bicategory(m)
    if m.kind == "monogon":
        return check_monogon(m)
    raise ModelError(f"unknown model kind {m.kind!r}")


def counterexample(kind: str, monoid: Monoid) -> FiniteModel | MonoidOracle:
    """C_M as a double bicategory, or as a cubical oracle (commutative M only)."""
    if kind == "double-bicat":
        return c_m(monoid)
    if kind == "cubical":
        return MonoidOracle(monoid)
    raise ValueError(f"unknown counterexample kind {kind!r}; expected double-bicat or cubical")


__all__ = [
    "KINDS", "TARGETS", "TIDIER_FIXTURES", "Conversion", "ConversionError", "CubicalOracle", "Entry",
    "FiniteModel", "Icon", "LabelledSquare", "ModelBuilder", "ModelError", "ModelFunctor", "Monoid",
    "MonoidOracle", "NonCommutativeMonoid", "NotTidy", "OracleOutOfRange", "PerturbedOracle", "Report",
    "TidierOracle", "Undefined", "c_m", "check_axioms", "check_cubical_coherence", "check_cubical_tidiness",
    "check_double_bicategory", "check_equivalence", "check_functor", "check_icon", "check_monogon",
    "check_tidier", "check_tidiness", "convert", "counterexample", "cyclic", "double_bicategory_to_tidier",
    "dumps_model", "find_isomorphism", "fixtures", "identity_functor", "identity_icon", "loads_model",
    "loads_monoid", "model_from_dict", "model_to_dict", "monoid_from_dict", "named_monoid", "pair",
    "quintet", "symmetry_model", "terminal", "to_double_bicategory",
]
