"""JSON formats for algebras and modules.

Algebra::

    {"field": {"char": 101}, "dim": 3, "basis": ["e", "x", "y"], "one": [1, 0, 0],
     "mul": [[i, j, [[k, coeff], ...]], ...], "idempotents": [[1, 0, 0]],
     "rad_basis": [[0, 1, 0], [0, 0, 1]]}

Module::

    {"algebra": <fingerprint or inline algebra>, "dim": m, "action": [m x m matrix per basis element]}

Coefficients are integers or "p/q" strings.
"""

import json
from typing import Any, Dict, List, Optional, Union

from algebras.algebra import Algebra, validate
from exactlin import matrix as ml
from exactlin.field import FieldSpec
from utils.utils import AlgebraMismatch, SchemaError

JsonDict = Dict[str, Any]


def _require(data: JsonDict, key: str, kind, where: str = "algebra") -> Any:
    if key not in data:
        raise SchemaError(f"{where} JSON is missing required key {key!r}")
    value = data[key]
    if not isinstance(value, kind):
        raise SchemaError(f"{where} JSON key {key!r} has the wrong type")
    return value


def _dense_vector(field: FieldSpec, values: List[Any], dim: int, what: str) -> Dict[int, Any]:
    if not isinstance(values, list) or len(values) != dim:
        raise SchemaError(f"{what} must be a list of {dim} coefficients")
    out = {}
    for k, v in enumerate(values):
        x = field.scalar(v)
        if x:
            out[k] = x
    return out


def algebra_to_dict(a: Algebra) -> JsonDict:
    f = a.field
    mul = []
    for (i, j) in sorted(a.products):
        terms = [[k, f.to_json(c)] for k, c in sorted(a.products[(i, j)].items())]
        mul.append([i, j, terms])

    def dense(v):
        return [f.to_json(v[k]) if k in v else 0 for k in range(a.dim)]

    data: JsonDict = {
        "field": {"char": f.characteristic},
        "dim": a.dim,
        "basis": list(a.labels),
        "one": dense(a.one),
        "mul": mul,
        "idempotents": [dense(e) for e in a.idempotents],
        "rad_basis": ml.to_python_rows(f, a.rad_basis),
    }
    if a.name:
        data["name"] = a.name
    data["vertices"] = list(a.vertex_labels)
    return data


def algebra_from_dict(data: JsonDict, check: bool = True) -> Algebra:
    """Build (and by default validate) an algebra from its JSON dict.

    Raises:
        SchemaError: missing keys or malformed entries
        BadRadical: no radical basis in positive characteristic
        NotAssociative, BadUnit, BadIdempotents: from validation
    """
    if not isinstance(data, dict):
        raise SchemaError("algebra JSON must be an object")
    field_data = _require(data, "field", dict)
    if "char" not in field_data or not isinstance(field_data["char"], int):
        raise SchemaError("algebra JSON field must carry an integer 'char'")
    field = FieldSpec(field_data["char"])
    dim = _require(data, "dim", int)
    labels = data.get("basis") or [f"b{i}" for i in range(dim)]
    if len(labels) != dim:
        raise SchemaError(f"basis lists {len(labels)} labels for dimension {dim}")
    one = _dense_vector(field, _require(data, "one", list), dim, "one")

    products = {}
    for entry in _require(data, "mul", list):
        if not (isinstance(entry, list) and len(entry) == 3):
            raise SchemaError("mul entries must be [i, j, [[k, coeff], ...]]")
        i, j, terms = entry
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < dim and 0 <= j < dim):
            raise SchemaError(f"mul entry index out of range: {entry!r}")
        vec: Dict[int, Any] = {}
        for term in terms:
            if not (isinstance(term, list) and len(term) == 2 and isinstance(term[0], int)
                    and 0 <= term[0] < dim):
                raise SchemaError(f"malformed mul term {term!r}")
            vec[term[0]] = vec.get(term[0], field.zero) + field.scalar(term[1])
        products[(i, j)] = {k: c for k, c in vec.items() if c}

    idempotents = [_dense_vector(field, e, dim, "idempotent")
                   for e in _require(data, "idempotents", list)]
    rad_basis = None
    if data.get("rad_basis") is not None:
        rows = data["rad_basis"]
        if any(not isinstance(r, list) or len(r) != dim for r in rows):
            raise SchemaError(f"rad_basis rows must have length {dim}")
        rad_basis = ml.from_rows(field, rows, cols=dim)
    algebra = Algebra(field, labels, products, one, idempotents, rad_basis=rad_basis,
                      vertex_labels=data.get("vertices"), name=data.get("name"))
    if check:
        validate(algebra)
    return algebra


def read_algebra_json(text: str, check: bool = True) -> Algebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON: {e}")
    return algebra_from_dict(data, check=check)


def write_algebra_json(a: Algebra) -> str:
    return json.dumps(algebra_to_dict(a), indent=2, ensure_ascii=False)


def module_to_dict(m, inline_algebra: bool = False) -> JsonDict:
    f = m.algebra.field
    return {
        "algebra": algebra_to_dict(m.algebra) if inline_algebra else m.algebra.fingerprint,
        "dim": m.dim,
        "action": [ml.to_python_rows(f, mat) for mat in m.action],
    }


def module_from_dict(data: JsonDict, algebra: Optional[Algebra] = None):
    """Build a module; a fingerprint reference is resolved against ``algebra``.

    Raises:
        SchemaError: malformed input or unresolved algebra reference
        AlgebraMismatch: the fingerprint names a different algebra
        MorphismError: the matrices do not define an action
    """
    from modrep.module import Module

    if not isinstance(data, dict):
        raise SchemaError("module JSON must be an object")
    ref: Union[str, JsonDict] = _require(data, "algebra", (str, dict), "module")
    if isinstance(ref, dict):
        resolved = algebra_from_dict(ref)
        if algebra is not None and algebra != resolved:
            raise AlgebraMismatch("inline algebra differs from the supplied algebra")
        algebra = resolved
    else:
        if algebra is None:
            raise SchemaError(f"module refers to algebra {ref} but no algebra was supplied")
        if algebra.fingerprint != ref:
            raise AlgebraMismatch(f"module refers to algebra {ref}, got {algebra.fingerprint}")
    dim = _require(data, "dim", int, "module")
    action = _require(data, "action", list, "module")
    if len(action) != algebra.dim:
        raise SchemaError(f"module action lists {len(action)} matrices for an algebra of dimension {algebra.dim}")
    mats = []
    for mat in action:
        if len(mat) != dim or any(len(row) != dim for row in mat):
            raise SchemaError(f"action matrices must be {dim} x {dim}")
        mats.append(ml.from_rows(algebra.field, mat, cols=dim))
    return Module(algebra, dim, mats, check=True)


def read_module_json(text: str, algebra: Optional[Algebra] = None):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON: {e}")
    return module_from_dict(data, algebra)


def write_module_json(m, inline_algebra: bool = False) -> str:
    return json.dumps(module_to_dict(m, inline_algebra), indent=2, ensure_ascii=False)
