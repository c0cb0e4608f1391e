"""Unit tests for bimodules, the theorem checkers, Hochschild routes and probes."""

import unittest
from unittest.mock import patch

from algebras.presentation import KupischSeries, compile_dsl, nakayama
from exactlin.field import FieldSpec
from homology.dimension import DimensionValue
from bimodule_lab.base_checker import BaseChecker
from bimodule_lab.bimodules import (canonical_bimodule, canonical_module, coregular_bimodule, iso_check_1,
                                    iso_check_2, iso_check_3, regular_bimodule)
from bimodule_lab.checkers import DomdimChecker, FkyChecker, MainTheoremChecker, MhoPathChecker
from bimodule_lab.hochschild import hochschild_cohomology_dims, hochschild_homology_dims, hochschild_report
from bimodule_lab.probes import bimodule_dual_ext_bridge, conjecture_probe, pd_bimodule_report, tachikawa_dims
from bimodule_lab.theorems import (check_main_theorem, domdim_via_ext_formula, ext_formula_report, fky_check,
                                   gendo_symmetric_report, is_faithful, minimal_faithful_projective_injective)
from modrep.module import simple_module
from utils.utils import DisagreementDetected, PreconditionError, ValidationError

F101 = FieldSpec(101)
QQ = FieldSpec(0)

A2 = "vertex u v\narrow a: u -> v\n"
KX2 = "vertex v\narrow x: v -> v\nrelation x*x\n"
AUS_KX2 = "vertex P S\narrow i: S -> P\narrow p: P -> S\nrelation i*p\n"
LOCAL = ("vertex v\narrow x: v -> v\narrow y: v -> v\n"
         "relation x*x\nrelation y*y\nrelation x*y\nrelation y*x\n")


class TestBimodules(unittest.TestCase):
    """Test the regular, coregular and canonical bimodules."""

    def setUp(self):
        self.kx2 = compile_dsl(KX2, F101, name="kx2")
        self.a2 = compile_dsl(A2, F101)

    def test_dimensions(self):
        self.assertEqual(regular_bimodule(self.a2).dim, 3)
        self.assertEqual(coregular_bimodule(self.a2).dim, 3)

    def test_canonical_bimodule_of_symmetric_algebra(self):
        canonical = canonical_bimodule(self.kx2, seed=1)
        self.assertEqual(canonical.module.dim, 2)
        self.assertTrue(canonical.witness.holds)
        self.assertEqual(canonical.to_dict()["dim"], 2)

    def test_canonical_module_of_hereditary_algebra(self):
        v = canonical_module(self.a2)
        self.assertEqual(v.name, "V")
        self.assertEqual(v.algebra, regular_bimodule(self.a2).algebra)

    def test_comparison_isomorphisms(self):
        self.assertTrue(iso_check_1(self.kx2, seed=1).holds)
        self.assertTrue(iso_check_2(self.kx2, regular_bimodule(self.kx2), seed=1).holds)
        self.assertTrue(iso_check_3(self.kx2, seed=1).holds)

    def test_comparison_isomorphisms_over_hereditary_algebra(self):
        self.assertTrue(iso_check_1(self.a2, seed=2).holds)
        self.assertTrue(iso_check_3(self.a2, seed=2).holds)


class TestMainTheorem(unittest.TestCase):
    """Test the equivalent conditions for dominant dimension at least n."""

    def test_hereditary_nakayama(self):
        a = nakayama(KupischSeries((2, 1)), F101)
        reports = check_main_theorem(a, 3, cap=4, seed=1)
        self.assertEqual([r.domdim for r in reports], [True, False, False])
        self.assertTrue(all(r.agreement for r in reports))
        self.assertEqual(reports[0].to_dict()["theorem"], "main-theorem")

    def test_auslander_algebra(self):
        a = compile_dsl(AUS_KX2, F101)
        reports = check_main_theorem(a, 3, cap=4, seed=1)
        self.assertEqual([r.domdim for r in reports], [True, True, False])
        self.assertEqual([r.torsionfree for r in reports], [True, True, False])
        self.assertTrue(reports[1].syzygy)
        self.assertFalse(reports[2].syzygy)

    def test_selfinjective(self):
        reports = check_main_theorem(compile_dsl(KX2, F101), 2, cap=3, seed=1)
        self.assertTrue(all(r.domdim and r.torsionfree and r.syzygy for r in reports))

    def test_n_max_below_one(self):
        with self.assertRaises(PreconditionError):
            check_main_theorem(compile_dsl(KX2, F101), 0)


class TestCharacterizations(unittest.TestCase):
    """Test the embedding, Ext-formula and gendo-symmetric routes."""

    def setUp(self):
        self.a2 = compile_dsl(A2, F101)
        self.kx2 = compile_dsl(KX2, F101)
        self.aus = compile_dsl(AUS_KX2, F101)

    def test_embedding_of_hereditary_algebra(self):
        report = fky_check(self.a2, cap=3, seed=1)
        self.assertTrue(report.mono.holds)
        self.assertFalse(report.iso.holds)
        self.assertTrue(report.evaluation_injective)
        self.assertFalse(report.evaluation_bijective)

    def test_embedding_of_selfinjective_algebra(self):
        report = fky_check(self.kx2, cap=3, seed=1)
        self.assertTrue(report.iso.holds)
        self.assertTrue(report.agreement)

    def test_ext_formula_not_applicable(self):
        report = ext_formula_report(self.a2, cap=3)
        self.assertFalse(report["applicable"])
        with self.assertRaises(PreconditionError):
            domdim_via_ext_formula(self.a2, cap=3)

    def test_ext_formula_on_auslander_algebra(self):
        report = ext_formula_report(self.aus, cap=4)
        self.assertTrue(report["applicable"])
        self.assertTrue(report["agreement"])
        self.assertEqual(domdim_via_ext_formula(self.aus, cap=4), DimensionValue.exact(2, 4))

    def test_ext_formula_on_selfinjective(self):
        self.assertFalse(domdim_via_ext_formula(self.kx2, cap=3).is_exact)

    def test_gendo_symmetric(self):
        self.assertTrue(gendo_symmetric_report(self.kx2, cap=3, seed=1)["gendo_symmetric"]["by_v"])
        report = gendo_symmetric_report(self.a2, cap=3, seed=1)
        self.assertFalse(report["gendo_symmetric"]["by_v"])
        self.assertFalse(report["gendo_symmetric"]["by_corner"])
        self.assertIn("below 2", report["corner_reason"])

    def test_faithful_projective_injective(self):
        self.assertTrue(is_faithful(self.a2, [0]))
        self.assertFalse(is_faithful(self.a2, []))
        self.assertEqual(minimal_faithful_projective_injective(self.a2), [0])
        self.assertIsNone(minimal_faithful_projective_injective(compile_dsl(LOCAL, QQ)))


class TestHochschild(unittest.TestCase):
    """Test Hochschild dimensions by both routes."""

    def test_dual_numbers(self):
        a = compile_dsl(KX2, F101)
        self.assertEqual(hochschild_cohomology_dims(a, 3), [2, 1, 1, 1])
        self.assertEqual(hochschild_homology_dims(a, 3), [2, 1, 1, 1])

    def test_hereditary(self):
        a = compile_dsl(A2, F101)
        self.assertEqual(hochschild_cohomology_dims(a, 2), [1, 0, 0])

    def test_formula_route_on_auslander_algebra(self):
        report = hochschild_report(compile_dsl(AUS_KX2, F101), 2, cap=4)
        self.assertTrue(report["formula_matches"])
        self.assertTrue(report["hh0_is_center"])
        self.assertTrue(report["agreement"])

    def test_formula_route_skipped_below_two(self):
        report = hochschild_report(compile_dsl(A2, F101), 2, cap=3)
        self.assertIsNone(report["formula"])
        self.assertIn("formula_reason", report)


class TestProbes(unittest.TestCase):
    """Test the bounded conjecture probes."""

    def test_tachikawa_on_selfinjective(self):
        self.assertEqual(tachikawa_dims(compile_dsl(KX2, F101), 3), [0, 0, 0])
        self.assertEqual(tachikawa_dims(compile_dsl(KX2, F101), 0), [])

    def test_bridge(self):
        report = bimodule_dual_ext_bridge(compile_dsl(A2, F101), cap=3)
        self.assertTrue(report["agreement"])

    def test_pd_bimodule(self):
        pd_a, pd_da = pd_bimodule_report(compile_dsl(A2, F101), cap=3)
        self.assertEqual(pd_a, DimensionValue.exact(1, 3))
        self.assertEqual(pd_da, DimensionValue.exact(1, 3))

    def test_probe_selfinjective(self):
        report = conjecture_probe(compile_dsl(KX2, F101), cap=2, seed=1)
        self.assertTrue(report["selfinjective"])
        self.assertTrue(report["tachikawa_probe"])
        self.assertTrue(report["gorenstein_bimodule"]["holds_up_to_bound"])
        self.assertEqual(report["contradictions"], [])

    def test_probe_hereditary(self):
        report = conjecture_probe(compile_dsl(A2, F101), cap=2, seed=1)
        self.assertFalse(report["gorenstein_bimodule"]["holds_up_to_bound"])
        self.assertTrue(report["agreement"])
        paths = report["mho_paths"]["paths"]
        self.assertEqual([p["domdim_at_least"] for p in paths], [True, False])
        self.assertEqual([p["exists"] for p in paths], [True, False])


class _StubChecker(BaseChecker):
    def __init__(self, algebra, outcome):
        super().__init__('stub', algebra, cap=2, seed=5)
        self.outcome = outcome

    def check(self):
        if isinstance(self.outcome, Exception):
            raise self.outcome
        return self.outcome


class TestCheckers(unittest.TestCase):
    """Test the verdict envelope of the checkers."""

    def setUp(self):
        self.a = compile_dsl(KX2, F101, name="kx2")

    def test_envelope(self):
        result = _StubChecker(self.a, {'value': 1}).run()
        self.assertEqual(result['status'], 'completed')
        self.assertEqual(result['algebra'], self.a.fingerprint)
        self.assertEqual(result['algebra_name'], 'kx2')
        self.assertEqual((result['cap'], result['seed']), (2, 5))
        self.assertNotIn('duration', result)

    def test_disagreement(self):
        checker = _StubChecker(self.a, {'agreement': False})
        self.assertEqual(checker.run(strict=False)['status'], 'disagreement')
        with self.assertRaises(DisagreementDetected) as ctx:
            checker.run()
        self.assertEqual(ctx.exception.report['status'], 'disagreement')

    def test_failure(self):
        checker = _StubChecker(self.a, ValidationError("broken"))
        result = checker.run(strict=False)
        self.assertEqual(result['status'], 'failed')
        self.assertEqual(result['errors'][0]['type'], 'ValidationError')
        with self.assertRaises(ValidationError):
            checker.run()

    def test_domdim_methods_agree(self):
        result = DomdimChecker(self.a, cap=3).run()
        self.assertEqual(set(result['methods']), {'coresolution', 'torsionfree', 'formula'})
        self.assertTrue(result['agreement'])

    def test_domdim_formula_not_applicable(self):
        result = DomdimChecker(compile_dsl(A2, F101), cap=3).run()
        self.assertEqual(result['methods']['coresolution'], {"kind": "exact", "value": 1, "cap": 3})
        self.assertIn('formula', result['notes'])

    def test_main_theorem_checker(self):
        result = MainTheoremChecker(compile_dsl(AUS_KX2, F101), 3, cap=4).run()
        self.assertEqual(result['status'], 'completed')
        self.assertEqual(len(result['reports']), 3)

    def test_main_theorem_checker_reports_disagreement(self):
        with patch('bimodule_lab.theorems.n_torsionfree', return_value=False):
            result = MainTheoremChecker(self.a, 1, cap=3).run(strict=False)
        self.assertEqual(result['status'], 'disagreement')

    def test_fky_checker(self):
        self.assertEqual(FkyChecker(compile_dsl(A2, F101), cap=3).run()['status'], 'completed')

    def test_mho_path_checker(self):
        m = simple_module(self.a, 0)
        result = MhoPathChecker(self.a, m, 2, cap=3).run()
        self.assertTrue(result['ending_at']['exists'])
        self.assertTrue(result['agreement'])


if __name__ == '__main__':
    unittest.main()
