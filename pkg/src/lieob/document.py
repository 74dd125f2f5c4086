"""JSON algebra documents with exact rational coefficients.

    {
      "name": "heisenberg3",
      "dim": 3,
      "basis_names": ["x", "y", "z"],
      "structure_constants": [
        {"i": 0, "j": 1, "coeffs": {"2": "1"}}
      ]
    }

Indices are 0-based, every entry has i < j, and coefficients are strings
"p" or "p/q" with q > 0.  :func:`emit_document` writes the canonical form:
entries sorted by (i, j), coefficient keys in increasing order, zero
coefficients dropped, fractions in lowest terms.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import MAX_DIM, LieAlgebra, verify_jacobi


class DocumentError(ValueError):
    """Base class for rejected algebra documents."""


class DocumentSyntaxError(DocumentError):
    def __init__(self, msg: str, line: int, column: int):
        super().__init__(f"syntax error at line {line}, column {column}: {msg}")
        self.line = line
        self.column = column


class DocumentSchemaError(DocumentError):
    pass


class IndexRangeError(DocumentError):
    pass


class IndexOrderError(DocumentError):
    pass


class JacobiViolationError(DocumentError):
    def __init__(self, triple, residual):
        i, j, k = triple
        super().__init__(f"Jacobi identity fails at triple ({i}, {j}, {k}), residual "
                         f"({', '.join(format_rational(a) for a in residual)})")
        self.triple = triple
        self.residual = residual


_RATIONAL = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL.match(text) if isinstance(text, str) else None
    if not m:
        raise DocumentSchemaError(f"malformed rational {text!r}; expected 'p' or 'p/q'")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise DocumentSchemaError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class AlgebraDocument:
    name: str
    algebra: LieAlgebra

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def basis_names(self) -> tuple:
        return self.algebra.basis_names


def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise DocumentSchemaError(f"duplicate key {k!r}")
        out[k] = v
    return out


def _require(obj, key, kind, where):
    if key not in obj:
        raise DocumentSchemaError(f"{where}: missing field {key!r}")
    value = obj[key]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise DocumentSchemaError(f"{where}: field {key!r} must be an integer")
    if kind is not int and not isinstance(value, kind):
        raise DocumentSchemaError(f"{where}: field {key!r} has the wrong type")
    return value


def load_document(text: str, check_jacobi: bool = True) -> AlgebraDocument:
    try:
        raw = json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(raw, dict):
        raise DocumentSchemaError("top level must be an object")
    name = _require(raw, "name", str, "document")
    n = _require(raw, "dim", int, "document")
    if not 0 <= n <= MAX_DIM:
        raise DocumentSchemaError(f"dim {n} outside supported range 0..{MAX_DIM}")
    names = _require(raw, "basis_names", list, "document")
    if len(names) != n or not all(isinstance(s, str) for s in names):
        raise DocumentSchemaError(f"basis_names must be {n} strings")
    entries = _require(raw, "structure_constants", list, "document")
    brackets = {}
    for pos, entry in enumerate(entries):
        where = f"structure_constants[{pos}]"
        if not isinstance(entry, dict):
            raise DocumentSchemaError(f"{where}: entry must be an object")
        i = _require(entry, "i", int, where)
        j = _require(entry, "j", int, where)
        coeffs = _require(entry, "coeffs", dict, where)
        for idx in (i, j):
            if not 0 <= idx < n:
                raise IndexRangeError(f"{where}: index {idx} out of range 0..{n - 1}")
        if i >= j:
            raise IndexOrderError(f"{where}: entries need i < j, got i={i}, j={j}")
        if (i, j) in brackets:
            raise DocumentSchemaError(f"{where}: pair ({i}, {j}) given twice")
        vec = [Fraction(0)] * n
        for key, value in coeffs.items():
            if not re.fullmatch(r"\d+", key):
                raise DocumentSchemaError(f"{where}: coefficient key {key!r} is not an index")
            k = int(key)
            if k >= n:
                raise IndexRangeError(f"{where}: coefficient index {k} out of range 0..{n - 1}")
            vec[k] = parse_rational(value)
        brackets[(i, j)] = vec
    g = LieAlgebra.from_brackets(n, brackets, names)
    if check_jacobi:
        report = verify_jacobi(g)
        if not report.ok:
            raise JacobiViolationError(*report.violations[0])
    return AlgebraDocument(name, g)


def parse_algebra(text: str) -> LieAlgebra:
    return load_document(text).algebra


def document_dict(name: str, g: LieAlgebra) -> dict:
    return {
        "name": name,
        "dim": g.dim,
        "basis_names": list(g.basis_names),
        "structure_constants": [
            {"i": i, "j": j, "coeffs": {str(k): format_rational(a) for k, a in enumerate(c) if a}}
            for (i, j), c in g.structure_constants
        ],
    }


def emit_document(name: str, g: LieAlgebra) -> str:
    return json.dumps(document_dict(name, g), indent=2) + "\n"
