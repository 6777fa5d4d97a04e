"""Deterministic JSON encoding for the library's value types.

Field elements encode as their integer representation, Laurent polynomials
as sorted [degree, int] pairs, matrices as nested 2x2 lists, extended Weyl
elements as component-index lists, weight labels as {"diffs", "twist"}.
dumps always sorts keys so output is byte-stable for fixed input.
"""

import json

from .fields import FieldElement
from .laurent import Laurent
from .matrices import Mat2
from .weights import ExtendedWeylElt, SerreWeightLabel, index_of


def to_jsonable(obj):
    if isinstance(obj, FieldElement):
        return obj.to_int()
    if isinstance(obj, Laurent):
        return [[d, c.to_int()] for d, c in sorted(obj.coeffs.items())]
    if isinstance(obj, Mat2):
        return [
            [to_jsonable(obj.a11), to_jsonable(obj.a12)],
            [to_jsonable(obj.a21), to_jsonable(obj.a22)],
        ]
    if isinstance(obj, ExtendedWeylElt):
        return list(index_of(obj))
    if isinstance(obj, SerreWeightLabel):
        return {"diffs": list(obj.diffs), "twist": obj.twist}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, float, str)):
        return obj
    raise TypeError("cannot serialize %r" % (type(obj),))


def dumps(obj):
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2) + "\n"
