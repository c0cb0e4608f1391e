"""Built-in example algebras with expected invariants.

Each fixture file in ``fixtures/`` holds a construction recipe (quiver DSL,
Kupisch series or structure constants), the characteristics it is verified
over and a list of expected invariants. Every expected value carries its
provenance: PAPER and TRIVIAL entries name a ``source``, DERIVED entries name
the ``oracle`` that produced the value.
"""

import copy
import json
import logging
from dataclasses import dataclass, field as dataclass_field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Union

from algebras.algebra import Algebra, center_dim, is_connected, is_selfinjective
from algebras.presentation import KupischSeries, compile_dsl, nakayama
from algebras.serialization import algebra_from_dict
from config.config_loader import default_cap, get_config
from exactlin.field import FieldSpec
from modrep.hom import a_dual
from modrep.module import regular_module, simple_module
from homology.derived import ext_dims
from homology.dimension import DimensionValue
from homology.invariants import algebra_dominant_dimension, global_dimension, reflexive
from homology.resolutions import inj_coresolution, syzygy
from bimodule_lab.hochschild import hochschild_cohomology_dims, hochschild_homology_dims
from bimodule_lab.probes import pd_bimodule_report
from bimodule_lab.theorems import is_gendo_symmetric
from utils.utils import SchemaError, UnknownName

logger = logging.getLogger(__name__)

PROVENANCE = ('PAPER', 'TRIVIAL', 'DERIVED')
RECIPES = ('dsl', 'kupisch', 'structure')
INFINITE = "infinite"

JsonValue = Union[int, bool, str, List[Any]]
Invariant = Callable[..., JsonValue]

INVARIANTS: Dict[str, Invariant] = {}


def invariant(name: str) -> Callable[[Invariant], Invariant]:
    """Register ``fn(algebra, cap, **args)`` under ``name``."""
    def register(fn: Invariant) -> Invariant:
        INVARIANTS[name] = fn
        return fn
    return register


def render(value: DimensionValue) -> Union[int, str]:
    """An exact value, or "infinite" for a value not reached within the cap."""
    return value.value if value.is_exact else INFINITE


def _vertex(a: Algebra, label: str) -> int:
    try:
        return list(a.vertex_labels).index(str(label))
    except ValueError:
        raise UnknownName(f"{a!r} has no vertex {label!r}")


@invariant("dim")
def _dim(a: Algebra, cap: int) -> JsonValue:
    return a.dim


@invariant("center_dim")
def _center(a: Algebra, cap: int) -> JsonValue:
    return center_dim(a)


@invariant("connected")
def _connected(a: Algebra, cap: int) -> JsonValue:
    return is_connected(a)


@invariant("selfinjective")
def _selfinjective(a: Algebra, cap: int) -> JsonValue:
    return is_selfinjective(a)


@invariant("gldim")
def _gldim(a: Algebra, cap: int) -> JsonValue:
    return render(global_dimension(a, cap))


@invariant("domdim")
def _domdim(a: Algebra, cap: int) -> JsonValue:
    return render(algebra_dominant_dimension(a, cap))


@invariant("gendo_symmetric")
def _gendo(a: Algebra, cap: int) -> JsonValue:
    return is_gendo_symmetric(a, cap)


@invariant("pd_bimodule_regular")
def _pd_regular(a: Algebra, cap: int) -> JsonValue:
    return render(pd_bimodule_report(a, cap)[0])


@invariant("pd_bimodule_coregular")
def _pd_coregular(a: Algebra, cap: int) -> JsonValue:
    return render(pd_bimodule_report(a, cap)[1])


@invariant("hochschild_cohomology")
def _hh_upper(a: Algebra, cap: int, l_max: int) -> JsonValue:
    return hochschild_cohomology_dims(a, l_max)


@invariant("hochschild_homology")
def _hh_lower(a: Algebra, cap: int, l_max: int) -> JsonValue:
    return hochschild_homology_dims(a, l_max)


@invariant("syzygy_dim")
def _syzygy_dim(a: Algebra, cap: int, vertex: str, n: int) -> JsonValue:
    return syzygy(simple_module(a, _vertex(a, vertex)), n).dim


@invariant("syzygy_dual_dim")
def _syzygy_dual_dim(a: Algebra, cap: int, vertex: str, n: int, depth: int) -> JsonValue:
    m = syzygy(simple_module(a, _vertex(a, vertex)), n)
    for _ in range(depth):
        m = a_dual(m)
    return m.dim


@invariant("syzygy_reflexive")
def _syzygy_reflexive(a: Algebra, cap: int, vertex: str, n: int) -> JsonValue:
    return reflexive(syzygy(simple_module(a, _vertex(a, vertex)), n))


@invariant("simple_dual_dim")
def _simple_dual_dim(a: Algebra, cap: int, vertex: str) -> JsonValue:
    return a_dual(simple_module(a, _vertex(a, vertex))).dim


@invariant("ext_simple_dims")
def _ext_simple(a: Algebra, cap: int, source: str, target: str, length: int) -> JsonValue:
    return ext_dims(simple_module(a, _vertex(a, source)), simple_module(a, _vertex(a, target)), length)


@invariant("coresolution_vertices")
def _coresolution_vertices(a: Algebra, cap: int, length: int) -> JsonValue:
    cores = inj_coresolution(regular_module(a), length)
    labels = a.vertex_labels
    return [sorted(labels[v] for v in cores.vertices(i)) for i in range(length + 1)]


@dataclass
class ExpectedValue:
    invariant: str
    value: JsonValue
    provenance: str
    note: str
    args: Dict[str, Any] = dataclass_field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"invariant": self.invariant, "value": self.value,
                               "provenance": self.provenance}
        if self.args:
            out["args"] = self.args
        out["oracle" if self.provenance == "DERIVED" else "source"] = self.note
        return out


@dataclass
class Fixture:
    """A named algebra recipe with expected invariants."""

    name: str
    description: str
    recipe: Dict[str, Any]
    fields: List[int]
    expected: List[ExpectedValue]

    def build(self, characteristic: Optional[int] = None) -> Algebra:
        """Construct the algebra over the given characteristic (default: the first listed field)."""
        char = self.fields[0] if characteristic is None else int(characteristic)
        field = FieldSpec(char)
        kind = self.recipe["kind"]
        if kind == "dsl":
            return compile_dsl("\n".join(self.recipe["text"]), field, name=self.name)
        if kind == "kupisch":
            series = KupischSeries(tuple(self.recipe["series"]), self.recipe.get("shape", "linear"))
            return nakayama(series, field)
        data = copy.deepcopy(self.recipe["algebra"])
        data["field"] = {"char": char}
        return algebra_from_dict(data)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "recipe": self.recipe,
            "fields": self.fields,
            "expected": [e.to_dict() for e in self.expected],
        }


def _parse_expected(entry: Dict[str, Any], where: str) -> ExpectedValue:
    for key in ("invariant", "value", "provenance"):
        if key not in entry:
            raise SchemaError(f"{where}: expected entry is missing {key!r}")
    if entry["invariant"] not in INVARIANTS:
        raise SchemaError(f"{where}: unknown invariant {entry['invariant']!r}")
    provenance = entry["provenance"]
    if provenance not in PROVENANCE:
        raise SchemaError(f"{where}: provenance must be one of {PROVENANCE}, got {provenance!r}")
    note_key = "oracle" if provenance == "DERIVED" else "source"
    if not entry.get(note_key):
        raise SchemaError(f"{where}: {provenance} entry for {entry['invariant']!r} needs {note_key!r}")
    return ExpectedValue(entry["invariant"], entry["value"], provenance, entry[note_key],
                         dict(entry.get("args") or {}))


def fixture_from_dict(data: Dict[str, Any]) -> Fixture:
    """Validate and build a Fixture.

    Raises:
        SchemaError: missing keys, unknown recipe kind, invariant or provenance
    """
    name = data.get("name")
    if not isinstance(name, str) or not name:
        raise SchemaError("fixture needs a non-empty 'name'")
    recipe = data.get("recipe")
    if not isinstance(recipe, dict) or recipe.get("kind") not in RECIPES:
        raise SchemaError(f"fixture {name}: recipe kind must be one of {RECIPES}")
    fields = data.get("fields") or [int(get_config().get('field.characteristic', 101))]
    expected = [_parse_expected(e, f"fixture {name}") for e in data.get("expected", [])]
    return Fixture(name, data.get("description", ""), recipe, [int(c) for c in fields], expected)


def fixtures_dir() -> Path:
    configured = get_config().get('corpus.fixtures_dir')
    if configured:
        return Path(configured)
    return Path(__file__).parent / "fixtures"


def corpus_list() -> List[Fixture]:
    """All fixtures, sorted by name."""
    fixtures = []
    for path in sorted(fixtures_dir().glob("*.json")):
        with open(path, 'r', encoding='utf-8') as handle:
            try:
                data = json.load(handle)
            except json.JSONDecodeError as e:
                raise SchemaError(f"{path.name}: invalid JSON: {e}")
        fixtures.append(fixture_from_dict(data))
    return sorted(fixtures, key=lambda f: f.name)


def load_fixture(name: str) -> Fixture:
    """Raises UnknownName for a name that is not in the corpus."""
    for fixture in corpus_list():
        if fixture.name == name:
            return fixture
    raise UnknownName(f"no corpus fixture named {name!r}")


def compute_invariant(a: Algebra, name: str, cap: Optional[int] = None,
                      args: Optional[Dict[str, Any]] = None) -> JsonValue:
    if name not in INVARIANTS:
        raise UnknownName(f"unknown invariant {name!r}")
    return INVARIANTS[name](a, default_cap(cap), **(args or {}))


def corpus_verify(name: str, cap: Optional[int] = None,
                  characteristic: Optional[int] = None) -> Dict[str, Any]:
    """Rebuild a fixture and compare every expected invariant with a fresh computation.

    Runs over every listed characteristic unless one is given.
    """
    cap = default_cap(cap)
    fixture = load_fixture(name)
    chars = fixture.fields if characteristic is None else [int(characteristic)]
    runs = []
    for char in chars:
        a = fixture.build(char)
        mismatches = []
        for entry in fixture.expected:
            computed = compute_invariant(a, entry.invariant, cap, entry.args)
            if computed != entry.value:
                mismatches.append({
                    "invariant": entry.invariant,
                    "args": entry.args,
                    "expected": entry.value,
                    "computed": computed,
                    "provenance": entry.provenance,
                })
        logger.info(f"Fixture {name} over characteristic {char}: "
                    f"{len(fixture.expected) - len(mismatches)}/{len(fixture.expected)} invariants match")
        runs.append({"characteristic": char, "algebra": a.fingerprint,
                     "checked": len(fixture.expected), "mismatches": mismatches,
                     "passed": not mismatches})
    return {"fixture": name, "cap": cap, "runs": runs, "passed": all(r["passed"] for r in runs)}
