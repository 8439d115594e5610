"""JSON encoding, decoding, and schema validation for every document type.

Every document carries a top-level ``"format": "taftlab/1"``.  Field
elements are ``{"m": m, "coeffs": ["p/q", ...]}`` with exact rational
strings (the coefficient list is the canonical residue, shortest first);
matrices are row-major nested lists of those.  ``dumps_canonical`` emits
sorted-key two-space-indented JSON so parse -> emit -> parse is the
identity on canonical files.

Decoders validate against a JSON schema first — violations raise
InputError with the offending path — then rebuild the domain object, whose
own constructor re-checks the semantic invariants (associativity, Hopf
relations, grading compatibility, and so on).
"""

from __future__ import annotations

import json
from fractions import Fraction

import jsonschema

from .algebra_core import FinDimAlgebra, GradingDecomposition, grading_from_c
from .constructions import NilpotentExtensionSpec, SemisimpleSpec
from .cyclotomic import CycNum
from .errors import InputError
from .hmodule import HModuleAlgebra
from .linalg import Matrix
from .taft_hopf import HopfElement, TaftAlgebra

FORMAT_TAG = "taftlab/1"

_RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/-?[0-9]+)?$"}
_CYC = {
    "type": "object",
    "required": ["m", "coeffs"],
    "additionalProperties": False,
    "properties": {
        "m": {"type": "integer", "minimum": 2},
        "coeffs": {"type": "array", "items": _RATIONAL},
    },
}
_VECTOR = {"type": "array", "items": _CYC}
_MATRIX = {"type": "array", "items": _VECTOR}
_ALGEBRA_FIELDS = {
    "dim": {"type": "integer", "minimum": 1},
    "mult": {"type": "array", "items": {"type": "array", "items": _VECTOR}},
    "unit": {"anyOf": [{"type": "null"}, _VECTOR]},
}
_ALGEBRA_OBJ = {
    "type": "object",
    "required": ["dim", "mult"],
    "additionalProperties": False,
    "properties": dict(_ALGEBRA_FIELDS),
}
_FORMAT = {"const": FORMAT_TAG}


def _doc(required, properties):
    props = {"format": _FORMAT}
    props.update(properties)
    return {
        "type": "object",
        "required": ["format"] + required,
        "additionalProperties": False,
        "properties": props,
    }


ALGEBRA_SCHEMA = _doc(["dim", "mult"], _ALGEBRA_FIELDS)
HMA_SCHEMA = _doc(["m", "algebra", "c", "v"], {
    "m": {"type": "integer", "minimum": 2},
    "algebra": _ALGEBRA_OBJ,
    "c": _MATRIX,
    "v": _MATRIX,
})
SS_SPEC_SCHEMA = _doc(["m", "k", "t", "P", "Q"], {
    "m": {"type": "integer", "minimum": 2},
    "k": {"type": "integer", "minimum": 1},
    "t": {"type": "integer", "minimum": 1},
    "P": _MATRIX,
    "Q": _MATRIX,
    "alpha": _CYC,
})
NILEXT_SCHEMA = _doc(["m", "algebra", "c"], {
    "m": {"type": "integer", "minimum": 2},
    "algebra": _ALGEBRA_OBJ,
    "c": _MATRIX,
})
MATRIX_SCHEMA = _doc(["m", "rows"], {
    "m": {"type": "integer", "minimum": 2},
    "rows": _MATRIX,
})
HOPF_SCHEMA = _doc(["m", "terms"], {
    "m": {"type": "integer", "minimum": 2},
    "terms": {
        "type": "array",
        "items": {
            "type": "object",
            "required": ["c", "v", "coeff"],
            "additionalProperties": False,
            "properties": {
                "c": {"type": "integer", "minimum": 0},
                "v": {"type": "integer", "minimum": 0},
                "coeff": _CYC,
            },
        },
    },
})


def dumps_canonical(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("malformed JSON: %s" % exc)


def validate(doc, schema, what: str) -> None:
    """Schema check with the failing path in the error message."""
    errors = sorted(jsonschema.Draft202012Validator(schema).iter_errors(doc),
                    key=lambda e: list(e.absolute_path))
    if errors:
        err = jsonschema.exceptions.best_match(errors)
        raise InputError("invalid %s document: %s (at %s)"
                         % (what, err.message, err.json_path))


# ---------------------------------------------------------------- scalars

def cyc_to_json(x: CycNum) -> dict:
    return x.to_json()


def json_to_cyc(obj, m: int | None = None) -> CycNum:
    if m is not None and obj["m"] != m:
        raise InputError("field element has conductor %d; expected %d"
                         % (obj["m"], m))
    try:
        coeffs = [Fraction(s) for s in obj["coeffs"]]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError("bad rational coefficient: %s" % exc)
    return CycNum.make(obj["m"], coeffs)


def matrix_to_json(mat: Matrix) -> list:
    return [[cyc_to_json(x) for x in row] for row in mat.rows]


def json_to_matrix(obj, m: int, *, what: str = "matrix") -> Matrix:
    if not obj:
        raise InputError("%s must have at least one row" % what)
    width = len(obj[0])
    rows = []
    for i, row in enumerate(obj):
        if len(row) != width:
            raise InputError("%s row %d has length %d; expected %d"
                             % (what, i, len(row), width))
        rows.append(tuple(json_to_cyc(x, m) for x in row))
    return Matrix.from_rows(m, rows)


def matrix_doc_to_json(mat: Matrix) -> dict:
    return {"format": FORMAT_TAG, "m": mat.m, "rows": matrix_to_json(mat)}


def json_to_matrix_doc(doc) -> Matrix:
    validate(doc, MATRIX_SCHEMA, "matrix")
    return json_to_matrix(doc["rows"], doc["m"])


def vector_to_json(vec) -> list:
    return [cyc_to_json(x) for x in vec]


def json_to_vector(obj, m: int) -> tuple:
    return tuple(json_to_cyc(x, m) for x in obj)


# --------------------------------------------------------------- algebras

def _algebra_body(a: FinDimAlgebra) -> dict:
    return {
        "dim": a.dim,
        "mult": [[vector_to_json(cell) for cell in row] for row in a.mult],
        "unit": None if a.unit is None else vector_to_json(a.unit),
    }


def algebra_to_json(a: FinDimAlgebra) -> dict:
    doc = {"format": FORMAT_TAG}
    doc.update(_algebra_body(a))
    return doc


def _algebra_from_body(obj, m: int | None = None) -> FinDimAlgebra:
    dim = obj["dim"]
    mult = obj["mult"]
    if len(mult) != dim:
        raise InputError("mult table has %d rows; dim is %d" % (len(mult), dim))
    if m is None:
        # conductor lives on the entries; find any one of them
        for row in mult:
            for cell in row:
                for entry in cell:
                    m = entry["m"]
                    break
                if m is not None:
                    break
            if m is not None:
                break
        if m is None:
            raise InputError("cannot infer the conductor from an empty table")
    table = []
    for i, row in enumerate(mult):
        if len(row) != dim:
            raise InputError("mult row %d has %d cells; dim is %d"
                             % (i, len(row), dim))
        cells = []
        for j, cell in enumerate(row):
            if len(cell) != dim:
                raise InputError("mult entry (%d, %d) has length %d; dim is %d"
                                 % (i, j, len(cell), dim))
            cells.append(json_to_vector(cell, m))
        table.append(tuple(cells))
    unit = obj.get("unit")
    if unit is not None:
        if len(unit) != dim:
            raise InputError("unit has length %d; dim is %d" % (len(unit), dim))
        unit = json_to_vector(unit, m)
    return FinDimAlgebra(m, tuple(table), unit=unit)


def json_to_algebra(doc) -> FinDimAlgebra:
    validate(doc, ALGEBRA_SCHEMA, "algebra")
    return _algebra_from_body(doc)


# ---------------------------------------------------------- module algebras

def hma_to_json(mod: HModuleAlgebra) -> dict:
    return {
        "format": FORMAT_TAG,
        "m": mod.m,
        "algebra": _algebra_body(mod.algebra),
        "c": matrix_to_json(mod.c_op),
        "v": matrix_to_json(mod.v_op),
    }


def json_to_hma(doc) -> HModuleAlgebra:
    validate(doc, HMA_SCHEMA, "module algebra")
    m = doc["m"]
    algebra = _algebra_from_body(doc["algebra"], m)
    c_op = json_to_matrix(doc["c"], m, what="c operator")
    v_op = json_to_matrix(doc["v"], m, what="v operator")
    return HModuleAlgebra(hopf=TaftAlgebra(m), algebra=algebra,
                          c_op=c_op, v_op=v_op)


# ------------------------------------------------------------------- specs

def ss_spec_to_json(spec: SemisimpleSpec) -> dict:
    return {
        "format": FORMAT_TAG,
        "m": spec.m,
        "k": spec.k,
        "t": spec.t,
        "P": matrix_to_json(spec.P),
        "Q": matrix_to_json(spec.Q),
        "alpha": cyc_to_json(spec.alpha),
    }


def json_to_ss_spec(doc) -> SemisimpleSpec:
    validate(doc, SS_SPEC_SCHEMA, "semisimple spec")
    m = doc["m"]
    spec = SemisimpleSpec(
        m=m, k=doc["k"], t=doc["t"],
        P=json_to_matrix(doc["P"], m, what="P"),
        Q=json_to_matrix(doc["Q"], m, what="Q"),
    )
    if "alpha" in doc:
        claimed = json_to_cyc(doc["alpha"], m)
        if claimed != spec.alpha:
            raise InputError("document claims alpha = %r but P^m gives %r"
                             % (claimed, spec.alpha))
    return spec


def nilext_spec_to_json(spec: NilpotentExtensionSpec, c_op: Matrix) -> dict:
    """The base-algebra document; the grading travels as its c operator."""
    return {
        "format": FORMAT_TAG,
        "m": spec.m,
        "algebra": _algebra_body(spec.B),
        "c": matrix_to_json(c_op),
    }


def grading_to_c_matrix(grading: GradingDecomposition) -> Matrix:
    """The diagonalizable operator acting by zeta^i on component i."""
    from .cyclotomic import zeta_power
    from .linalg import EchelonBasis, vec_scale
    m, n = grading.m, grading.ambient
    cols = []
    vecs = []
    for g, comp in enumerate(grading.components):
        for v in comp.basis:
            vecs.append(v)
            cols.append(vec_scale(zeta_power(m, g), v))
    basis_mat = Matrix(m, tuple(zip(*vecs)))
    image_mat = Matrix(m, tuple(zip(*cols)))
    return image_mat @ basis_mat.inverse()


def json_to_nilext_spec(doc) -> NilpotentExtensionSpec:
    validate(doc, NILEXT_SCHEMA, "base algebra")
    m = doc["m"]
    B = _algebra_from_body(doc["algebra"], m)
    c_op = json_to_matrix(doc["c"], m, what="grading operator")
    grading = grading_from_c(B, c_op)
    return NilpotentExtensionSpec(m=m, B=B, grading=grading)


# ------------------------------------------------------------ Hopf elements

def hopf_to_json(x: HopfElement) -> dict:
    terms = [{"c": i, "v": k, "coeff": cyc_to_json(coeff)}
             for (i, k), coeff in sorted(x.terms.items())]
    return {"format": FORMAT_TAG, "m": x.algebra.m, "terms": terms}


def json_to_hopf(doc) -> HopfElement:
    validate(doc, HOPF_SCHEMA, "Hopf element")
    m = doc["m"]
    H = TaftAlgebra(m)
    terms = {}
    for entry in doc["terms"]:
        i, k = entry["c"], entry["v"]
        if i >= m or k >= m:
            raise InputError("basis monomial (c=%d, v=%d) out of range for "
                             "conductor %d" % (i, k, m))
        key = (i, k)
        coeff = json_to_cyc(entry["coeff"], m)
        terms[key] = terms[key] + coeff if key in terms else coeff
    return HopfElement(H, terms)
