"""Drinfeld modules over finite fields: Frobenius invariants, endomorphism
rings, ideal actions and isomorphism class censuses.

Inputs use the same JSON shapes as the command line tool and may be given
as dicts or JSON text.
"""

import json

from . import _drinfeld
from ._drinfeld import (
    DrinfeldError,
    InputError,
    NonCommutativeEndomorphismRing,
    NotSublattice,
    TooLarge,
    schema_version,
)

__all__ = [
    "DrinfeldError",
    "InputError",
    "NonCommutativeEndomorphismRing",
    "NotSublattice",
    "TooLarge",
    "analyze",
    "census",
    "end_ring",
    "ideal_act",
    "kernel_test",
    "paper_examples",
    "schema_version",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def analyze(module):
    """Frobenius profile: m(x), m~(x), H, d, NK and the local maximality verdict."""
    return json.loads(_drinfeld.analyze(_text(module)))


def end_ring(module):
    """Basis of End(phi) as skew polynomials and in pi-coordinates."""
    return json.loads(_drinfeld.end_ring(_text(module)))


def ideal_act(module, ideal):
    """u_I, the acted module I*phi and the kernel and O_I comparisons."""
    return json.loads(_drinfeld.ideal_act(_text(module), _text(ideal)))


def kernel_test(module, ideal):
    return json.loads(_drinfeld.kernel_test(_text(module), _text(ideal)))


def census(spec, jobs=1, max_norm_deg=4, lin_equiv_bound=64, seed=1, validate=True):
    """Header, one record per isomorphism class and, if requested, a validation record."""
    return json.loads(
        _drinfeld.census(_text(spec), jobs, max_norm_deg, lin_equiv_bound, seed, validate)
    )


def paper_examples():
    return json.loads(_drinfeld.paper_examples())
