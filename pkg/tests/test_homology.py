"""Unit tests for resolutions, derived functors, capped dimensions and mho-paths."""

import unittest

from algebras.algebra import tensor_algebra
from algebras.presentation import compile_dsl
from exactlin.field import FieldSpec
from modrep.module import dual, regular_module, simple_module
from modrep.projectives import indecomposable_projective
from homology.cache import ResolutionCache, clear_caches, resolution_cache
from homology.derived import ext_dims, ext_vanishes, higher_ar_translate, tor_dims, transpose
from homology.dimension import DimensionValue, dimension_max
from homology.invariants import (algebra_dominant_dimension, global_dimension, gorenstein_projective_up_to,
                                 injective_dimension, n_torsionfree, projective_dimension, reflexive,
                                 torsionfree_degree, torsionless)
from homology.mho import is_mho_vertex, mho, mho_path_ending_at, mho_path_starting_at
from homology.resolutions import cosyzygy, inj_coresolution, proj_resolution, syzygy
from homology.sampling import sample_modules, syzygy_filtration_check
from utils.utils import PreconditionError, ResolutionError

F101 = FieldSpec(101)
QQ = FieldSpec(0)

A2 = "vertex u v\narrow a: u -> v\n"
KX2 = "vertex v\narrow x: v -> v\nrelation x*x\n"
LOCAL = ("vertex v\narrow x: v -> v\narrow y: v -> v\n"
         "relation x*x\nrelation y*y\nrelation x*y\nrelation y*x\n")


class TestDimensionValue(unittest.TestCase):
    """Test capped dimension values."""

    def test_at_least_n(self):
        self.assertTrue(DimensionValue.exact(2).at_least_n(2))
        self.assertFalse(DimensionValue.exact(1).at_least_n(2))
        self.assertTrue(DimensionValue.at_least(5, 4).at_least_n(3))
        self.assertIsNone(DimensionValue.at_least(5, 4).at_least_n(6))

    def test_compatible_with(self):
        exact3 = DimensionValue.exact(3)
        self.assertTrue(exact3.compatible_with(DimensionValue.at_least(2, 1)))
        self.assertFalse(exact3.compatible_with(DimensionValue.at_least(5, 4)))
        self.assertFalse(exact3.compatible_with(DimensionValue.exact(2)))
        self.assertTrue(DimensionValue.at_least(5, 4).compatible_with(DimensionValue.at_least(9, 8)))

    def test_dimension_max(self):
        self.assertEqual(dimension_max(), DimensionValue.exact(0))
        top = dimension_max(DimensionValue.exact(3), DimensionValue.at_least(3, 2))
        self.assertFalse(top.is_exact)

    def test_to_dict_and_str(self):
        value = DimensionValue.at_least(9, 8)
        self.assertEqual(value.to_dict(), {"kind": "at_least", "value": 9, "cap": 8})
        self.assertEqual(str(DimensionValue.exact(2)), "2")


class TestResolutions(unittest.TestCase):
    """Test minimal projective resolutions and injective coresolutions."""

    def setUp(self):
        self.a2 = compile_dsl(A2, F101)
        self.local = compile_dsl(LOCAL, QQ)

    def test_resolution_of_simple(self):
        res = proj_resolution(simple_module(self.a2, 0), 3)
        self.assertTrue(res.complete)
        self.assertEqual(res.term(0).vertices, (0,))
        self.assertEqual(res.term(1).vertices, (1,))
        self.assertTrue(res.term(2).is_zero())

    def test_negative_length(self):
        with self.assertRaises(ResolutionError):
            proj_resolution(simple_module(self.a2, 0), -1)

    def test_local_syzygies_double(self):
        s = simple_module(self.local, 0)
        self.assertEqual([syzygy(s, n).dim for n in range(4)], [1, 2, 4, 8])

    def test_coresolution_vertices(self):
        cores = inj_coresolution(regular_module(self.a2), 2)
        self.assertEqual(cores.vertices(0), (1, 1))
        self.assertEqual(cores.vertices(1), (0,))
        self.assertEqual(cores.first_nonprojective(), 1)

    def test_cosyzygy(self):
        self.assertEqual(cosyzygy(simple_module(self.a2, 1), 1).dimension_vector, (1, 0))

    def test_cache_serves_truncations(self):
        cache = ResolutionCache()
        calls = []

        def compute():
            calls.append(1)
            return 5

        self.assertEqual(cache.get_or_compute("m", 5, compute, lambda r: r, lambda r, n: n), 5)
        self.assertEqual(cache.get_or_compute("m", 3, compute, lambda r: r, lambda r, n: n), 3)
        self.assertEqual(len(calls), 1)
        self.assertEqual(cache.hits, 1)

    def test_cache_drops_least_recently_used(self):
        cache = ResolutionCache(max_entries=2)
        keep = (lambda r: r, lambda r, n: n)
        cache.get_or_compute("a", 2, lambda: 2, *keep)
        cache.get_or_compute("b", 2, lambda: 2, *keep)
        cache.get_or_compute("a", 1, lambda: 2, *keep)
        cache.get_or_compute("c", 2, lambda: 2, *keep)
        self.assertEqual(len(cache), 2)
        self.assertEqual((cache.hits, cache.misses), (1, 3))
        recomputed = []
        cache.get_or_compute("b", 2, lambda: recomputed.append(1) or 2, *keep)
        self.assertEqual(recomputed, [1])

    def test_clear_caches(self):
        a = compile_dsl(A2, F101)
        cache = ResolutionCache()
        cache.get_or_compute("m", 1, lambda: 1, lambda r: r, lambda r, n: n)
        cache.clear()
        self.assertEqual((len(cache), cache.hits, cache.misses), (0, 0, 0))
        projective = indecomposable_projective(a, 0)
        square = tensor_algebra(a, a)
        self.assertIs(indecomposable_projective(a, 0), projective)
        self.assertIs(tensor_algebra(a, a), square)
        clear_caches()
        self.assertEqual(len(resolution_cache), 0)
        self.assertIsNot(indecomposable_projective(a, 0), projective)
        self.assertIsNot(tensor_algebra(a, a), square)


class TestDerived(unittest.TestCase):
    """Test Ext, Tor and the transpose."""

    def setUp(self):
        self.a2 = compile_dsl(A2, F101)
        self.kx2 = compile_dsl(KX2, F101)
        self.local = compile_dsl(LOCAL, QQ)

    def test_ext_of_hereditary_simples(self):
        su, sv = simple_module(self.a2, 0), simple_module(self.a2, 1)
        self.assertEqual(ext_dims(su, sv, 2), [0, 1, 0])
        self.assertEqual(ext_dims(sv, su, 2), [0, 0, 0])

    def test_ext_of_dual_numbers(self):
        s = simple_module(self.kx2, 0)
        self.assertEqual(ext_dims(s, s, 3), [1, 1, 1, 1])

    def test_ext_of_local_example(self):
        s = simple_module(self.local, 0)
        self.assertEqual(ext_dims(s, s, 3), [1, 2, 4, 8])

    def test_ext_vanishes(self):
        su, sv = simple_module(self.a2, 0), simple_module(self.a2, 1)
        self.assertEqual(ext_vanishes(su, sv, 1, 3), 1)
        self.assertIsNone(ext_vanishes(sv, su, 1, 3))

    def test_tor_matches_dual_ext(self):
        s = simple_module(self.kx2, 0)
        self.assertEqual(tor_dims(dual(s), s, 3), [1, 1, 1, 1])

    def test_transpose(self):
        self.assertEqual(transpose(simple_module(self.a2, 0)).dim, 1)
        self.assertEqual(transpose(indecomposable_projective(self.a2, 0).module).dim, 0)

    def test_higher_translate_needs_n_at_least_two(self):
        with self.assertRaises(PreconditionError):
            higher_ar_translate(simple_module(self.a2, 0), 1)


class TestInvariants(unittest.TestCase):
    """Test capped dimensions and torsionfreeness."""

    def setUp(self):
        self.a2 = compile_dsl(A2, F101)
        self.kx2 = compile_dsl(KX2, F101)
        self.local = compile_dsl(LOCAL, QQ)

    def test_hereditary_dimensions(self):
        self.assertEqual(projective_dimension(simple_module(self.a2, 0), 4), DimensionValue.exact(1, 4))
        self.assertEqual(global_dimension(self.a2, 4), DimensionValue.exact(1, 4))
        self.assertEqual(algebra_dominant_dimension(self.a2, 4), DimensionValue.exact(1, 4))
        self.assertEqual(injective_dimension(simple_module(self.a2, 1), 4).value, 1)

    def test_selfinjective_dimensions(self):
        self.assertEqual(global_dimension(self.kx2, 3), DimensionValue.at_least(4, 3))
        self.assertEqual(algebra_dominant_dimension(self.kx2, 3), DimensionValue.at_least(4, 3))

    def test_local_dominant_dimension_zero(self):
        self.assertEqual(algebra_dominant_dimension(self.local, 3).value, 0)

    def test_torsionless(self):
        self.assertFalse(torsionless(simple_module(self.a2, 0)))
        self.assertTrue(torsionless(simple_module(self.a2, 1)))
        self.assertTrue(reflexive(regular_module(self.a2)))

    def test_second_syzygy_not_reflexive(self):
        u = syzygy(simple_module(self.local, 0), 2)
        self.assertTrue(torsionless(u))
        self.assertFalse(reflexive(u))

    def test_torsionfree_degree(self):
        self.assertEqual(torsionfree_degree(simple_module(self.a2, 0), 3), DimensionValue.exact(0, 3))
        self.assertFalse(torsionfree_degree(regular_module(self.a2), 3).is_exact)
        self.assertTrue(n_torsionfree(simple_module(self.kx2, 0), 3))

    def test_gorenstein_projective(self):
        verdict = gorenstein_projective_up_to(simple_module(self.kx2, 0), 3)
        self.assertTrue(verdict.holds)
        failing = gorenstein_projective_up_to(simple_module(self.a2, 0), 3)
        self.assertFalse(failing.holds)
        self.assertEqual(failing.to_dict()["first_failure"]["degree"], 1)


class TestMho(unittest.TestCase):
    """Test mho and the paths it defines."""

    def setUp(self):
        self.a2 = compile_dsl(A2, F101)
        self.kx2 = compile_dsl(KX2, F101)

    def test_mho_of_simple_over_dual_numbers(self):
        s = simple_module(self.kx2, 0)
        self.assertEqual(mho(s).dim, 1)

    def test_paths_over_dual_numbers(self):
        s = simple_module(self.kx2, 0)
        ending = mho_path_ending_at(s, 2)
        starting = mho_path_starting_at(s, 2)
        self.assertTrue(ending.exists)
        self.assertTrue(starting.exists)
        self.assertEqual(ending.to_dict()["dims"], [1, 1, 1])

    def test_projective_is_not_a_vertex(self):
        self.assertEqual(is_mho_vertex(simple_module(self.a2, 1)), "has a projective summand")
        self.assertFalse(mho_path_ending_at(simple_module(self.a2, 1), 1).exists)

    def test_not_torsionless(self):
        path = mho_path_ending_at(simple_module(self.a2, 0), 1)
        self.assertFalse(path.exists)
        self.assertIn("torsionless", path.reason)


class TestSampling(unittest.TestCase):
    """Test the deterministic samples and the syzygy filtration check."""

    def test_samples_are_nonzero_and_distinct(self):
        a = compile_dsl(A2, F101)
        samples = sample_modules(a)
        self.assertTrue(samples)
        self.assertEqual(len({m.fingerprint for _, m in samples}), len(samples))
        self.assertTrue(all(m.dim for _, m in samples))

    def test_filtration_check_on_selfinjective(self):
        report = syzygy_filtration_check(compile_dsl(KX2, F101), 2, cap=3)
        self.assertTrue(report["agreement"])

    def test_filtration_check_needs_dominant_dimension(self):
        with self.assertRaises(PreconditionError):
            syzygy_filtration_check(compile_dsl(LOCAL, QQ), 1, cap=3)


if __name__ == '__main__':
    unittest.main()
