"""Unit tests for algebras, quiver presentations and their JSON form."""

import json
import unittest

from algebras.algebra import (center_dim, corner_algebra, enveloping, is_connected, is_selfinjective,
                              opposite, tensor_algebra, validate)
from algebras.presentation import (KupischSeries, compile_dsl, format_quiver_dsl, nakayama, parse_kupisch,
                                   parse_quiver_dsl)
from algebras.serialization import algebra_from_dict, read_algebra_json, write_algebra_json
from exactlin.field import FieldSpec
from utils.utils import (BadRadical, BadUnit, DslSyntaxError, InvalidKupischSeries, NonParallelRelation,
                         NotAdmissible, NotAssociative, SchemaError, UnknownName)

F101 = FieldSpec(101)
QQ = FieldSpec(0)

A2 = "vertex u v\narrow a: u -> v\n"
KX2 = "vertex v\narrow x: v -> v\nrelation x*x\n"
LOCAL = ("vertex v\narrow x: v -> v\narrow y: v -> v\n"
         "relation x*x\nrelation y*y\nrelation x*y\nrelation y*x\n")


def kx2_dict(one=(1, 0)):
    return {
        "field": {"char": 101},
        "dim": 2,
        "basis": ["1", "x"],
        "one": list(one),
        "mul": [[0, 0, [[0, 1]]], [0, 1, [[1, 1]]], [1, 0, [[1, 1]]]],
        "idempotents": [[1, 0]],
        "rad_basis": [[0, 1]],
    }


class TestQuiverDsl(unittest.TestCase):
    """Test parsing of the quiver text format."""

    def test_parse_counts(self):
        quiver, relations = parse_quiver_dsl(LOCAL)
        self.assertEqual(quiver.vertices, ("v",))
        self.assertEqual(len(quiver.arrows), 2)
        self.assertEqual(len(relations), 4)

    def test_comments_and_blank_lines(self):
        quiver, relations = parse_quiver_dsl("# a comment\n\nvertex v  # trailing\n")
        self.assertEqual(quiver.vertices, ("v",))
        self.assertEqual(len(relations), 0)

    def test_unknown_keyword_reports_position(self):
        with self.assertRaises(DslSyntaxError) as ctx:
            parse_quiver_dsl("vertex v\nedge x: v -> v\n")
        self.assertEqual(ctx.exception.line, 2)
        self.assertEqual(ctx.exception.column, 1)

    def test_unknown_vertex(self):
        with self.assertRaises(UnknownName):
            parse_quiver_dsl("vertex v\narrow x: v -> w\n")

    def test_unknown_arrow_in_relation(self):
        with self.assertRaises(UnknownName):
            parse_quiver_dsl("vertex v\narrow x: v -> v\nrelation x*z\n")

    def test_non_parallel_relation(self):
        text = ("vertex u v w\narrow a: u -> v\narrow b: v -> w\narrow c: u -> v\narrow d: v -> v\n"
                "relation a*b - c*d\n")
        with self.assertRaises(NonParallelRelation):
            parse_quiver_dsl(text)

    def test_format_parses_back(self):
        text = ("vertex u v w\narrow a: u -> v\narrow b: v -> w\narrow c: u -> v\narrow d: v -> w\n"
                "relation a*b - 1/2*c*d\n")
        quiver, relations = parse_quiver_dsl(text)
        self.assertEqual(parse_quiver_dsl(format_quiver_dsl(quiver, relations)), (quiver, relations))


class TestCompilation(unittest.TestCase):
    """Test compiling presentations to structure constants."""

    def test_path_algebra_of_a2(self):
        a = compile_dsl(A2, F101)
        report = validate(a)
        self.assertEqual(a.dim, 3)
        self.assertEqual(report.dims, (3, 2))
        self.assertEqual(report.radical_dim, 1)
        self.assertTrue(report.connected)
        self.assertFalse(report.selfinjective)

    def test_local_example(self):
        a = compile_dsl(LOCAL, QQ)
        report = validate(a)
        self.assertEqual(a.dim, 3)
        self.assertEqual(report.loewy_length, 2)
        self.assertEqual(center_dim(a), 3)

    def test_dual_numbers_selfinjective(self):
        a = compile_dsl(KX2, F101)
        self.assertEqual(a.dim, 2)
        self.assertTrue(is_selfinjective(a))

    def test_not_admissible(self):
        with self.assertRaises(NotAdmissible):
            compile_dsl("vertex v\narrow x: v -> v\n", F101, length_cap=4)

    def test_mixed_length_relation_not_admissible(self):
        # x^2 - x^3 = x^2 (1 - x) contains no power of x
        with self.assertRaises(NotAdmissible):
            compile_dsl("vertex v\narrow x: v -> v\nrelation x*x - x*x*x\n", F101, length_cap=10)

    def test_mixed_length_admissible_relations(self):
        # x^2 = y^3 with xy = yx = 0; y^4 only dies through y*(x*x - y*y*y)
        text = ("vertex v\narrow x: v -> v\narrow y: v -> v\n"
                "relation x*x - y*y*y\nrelation x*y\nrelation y*x\n")
        a = compile_dsl(text, F101, length_cap=8)
        self.assertEqual(a.dim, 5)
        self.assertEqual(validate(a).loewy_length, 4)

    def test_arrow_convention(self):
        a = compile_dsl(A2, F101)
        arrow = a.arrows[0]
        self.assertEqual((arrow.source, arrow.target), (0, 1))
        # x = e_v x e_u
        self.assertEqual(a.vertex_of(arrow.vector), (0, 1))


class TestConstructions(unittest.TestCase):
    """Test opposite, tensor and corner algebras."""

    def test_opposite_is_involutive(self):
        a = compile_dsl(A2, F101)
        self.assertIs(opposite(opposite(a)), a)
        self.assertEqual(opposite(a).arrows[0].source, 1)

    def test_enveloping_dimension(self):
        a = compile_dsl(KX2, F101)
        e = enveloping(a)
        self.assertEqual(e.dim, 4)
        self.assertEqual(e.vertex_count, 1)
        validate(e)

    def test_tensor_of_a2_with_itself(self):
        a = compile_dsl(A2, F101)
        t = tensor_algebra(a, a)
        self.assertEqual(t.dim, 9)
        self.assertEqual(t.vertex_count, 4)
        self.assertEqual(validate(t).radical_dim, 9 - 4)

    def test_center_of_path_algebra(self):
        self.assertEqual(center_dim(compile_dsl(A2, F101)), 1)

    def test_corner_algebra(self):
        a = compile_dsl(A2, F101)
        corner = corner_algebra(a, [1])
        self.assertEqual(corner.dim, 1)
        self.assertTrue(is_connected(corner))


class TestNakayama(unittest.TestCase):
    """Test Kupisch series and Nakayama algebras."""

    def test_linear_series(self):
        a = nakayama(KupischSeries((2, 1)), F101)
        self.assertEqual(a.dim, 3)
        self.assertEqual(a.vertex_labels, ["1", "2"])

    def test_cyclic_selfinjective(self):
        a = nakayama(parse_kupisch("2,2", "cyclic"), F101)
        self.assertEqual(a.dim, 4)
        self.assertTrue(is_selfinjective(a))

    def test_cyclic_dimension_is_sum(self):
        a = nakayama(parse_kupisch("2,3", "cyclic"), F101)
        self.assertEqual(a.dim, 5)

    def test_invalid_series(self):
        for text, shape in (("1,2", "linear"), ("3,1", "linear"), ("2,2", "linear"), ("1,2", "cyclic")):
            with self.assertRaises(InvalidKupischSeries):
                parse_kupisch(text, shape)

    def test_invalid_shape(self):
        with self.assertRaises(InvalidKupischSeries):
            KupischSeries((2, 1), "spiral")

    def test_non_numeric_series(self):
        with self.assertRaises(InvalidKupischSeries):
            parse_kupisch("2,x")


class TestAlgebraJson(unittest.TestCase):
    """Test reading and writing algebra JSON."""

    def test_structure_constants(self):
        a = algebra_from_dict(kx2_dict())
        self.assertEqual(a.dim, 2)
        self.assertTrue(is_selfinjective(a))

    def test_write_then_read_keeps_fingerprint(self):
        a = nakayama(KupischSeries((2, 2, 1)), F101)
        b = read_algebra_json(write_algebra_json(a))
        self.assertEqual(a.fingerprint, b.fingerprint)
        self.assertEqual(b.vertex_labels, a.vertex_labels)

    def test_bad_unit(self):
        with self.assertRaises(BadUnit):
            algebra_from_dict(kx2_dict(one=(0, 1)))

    def test_not_associative(self):
        data = {
            "field": {"char": 101},
            "dim": 3,
            "one": [1, 0, 0],
            "mul": [[0, 0, [[0, 1]]], [0, 1, [[1, 1]]], [1, 0, [[1, 1]]],
                    [0, 2, [[2, 1]]], [2, 0, [[2, 1]]], [1, 2, [[1, 1]]]],
            "idempotents": [[1, 0, 0]],
            "rad_basis": [[0, 1, 0], [0, 0, 1]],
        }
        with self.assertRaises(NotAssociative):
            algebra_from_dict(data)

    def test_radical_required_in_positive_characteristic(self):
        data = kx2_dict()
        del data["rad_basis"]
        with self.assertRaises(BadRadical):
            algebra_from_dict(data)

    def test_radical_from_trace_form_over_rationals(self):
        data = kx2_dict()
        data["field"] = {"char": 0}
        del data["rad_basis"]
        self.assertEqual(validate(algebra_from_dict(data)).radical_dim, 1)

    def test_missing_key(self):
        data = kx2_dict()
        del data["mul"]
        with self.assertRaises(SchemaError):
            algebra_from_dict(data)

    def test_invalid_json(self):
        with self.assertRaises(SchemaError):
            read_algebra_json("{not json")

    def test_json_is_plain(self):
        a = compile_dsl(KX2, QQ)
        data = json.loads(write_algebra_json(a))
        self.assertEqual(data["field"], {"char": 0})
        self.assertEqual(data["dim"], 2)


if __name__ == '__main__':
    unittest.main()
