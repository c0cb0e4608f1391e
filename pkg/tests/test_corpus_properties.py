"""Cross-checks of independent computations over every corpus fixture."""

import unittest

from algebras.algebra import center_dim
from corpus.corpus import corpus_list, load_fixture
from modrep.isomorphism import YES, certify_isomorphism
from modrep.module import dual
from homology.derived import tor_dims_direct, tor_dims_via_ext, transpose
from homology.invariants import (algebra_dominant_dimension, n_torsionfree, projective_dimension,
                                 torsionless)
from homology.mho import is_mho_vertex, mho, mho_path_ending_at, mho_power, strip_projective_summands
from homology.resolutions import syzygy
from homology.sampling import sample_modules, sample_pairs
from bimodule_lab.bimodules import regular_bimodule
from bimodule_lab.hochschild import hochschild_cohomology_dims, hochschild_homology_dims, hochschild_report
from bimodule_lab.probes import conjecture_probe
from bimodule_lab.theorems import check_main_theorem, gendo_symmetric_report, minimal_faithful_projective_injective

MAIN_THEOREM_CAP = 4
CONJECTURE_CAP = 8
# the bimodule resolution of the local example doubles in rank at every step
CONJECTURE_CAP_OVERRIDES = {'paper-local': 4}


def fixture_algebras():
    return [(fixture.name, fixture.build()) for fixture in corpus_list()]


class TestMainTheoremOnCorpus(unittest.TestCase):
    """domdim >= n, n-torsionfree regular bimodule and the syzygy witness agree."""

    def test_conditions_agree_up_to_first_failure(self):
        cap = MAIN_THEOREM_CAP
        for name, a in fixture_algebras():
            with self.subTest(fixture=name):
                domdim = algebra_dominant_dimension(a, cap)
                n_max = min(cap, domdim.value + 1) if domdim.is_exact else cap
                if n_max < 1:
                    continue
                reports = check_main_theorem(a, n_max, cap=cap, strict=False, seed=0)
                self.assertEqual(len(reports), n_max)
                for report in reports:
                    self.assertTrue(report.agreement, report.to_dict())
                    expected = domdim.at_least_n(report.n)
                    self.assertEqual(report.torsionfree, expected)
                    self.assertEqual(report.syzygy, expected)
                if domdim.is_exact and domdim.value < cap:
                    first_failure = reports[-1]
                    self.assertEqual(first_failure.n, domdim.value + 1)
                    self.assertFalse(first_failure.domdim)
                    self.assertFalse(first_failure.torsionfree)
                    self.assertFalse(first_failure.syzygy)

    def test_local_example_fails_at_one(self):
        a = load_fixture('paper-local').build()
        report = check_main_theorem(a, 1, cap=MAIN_THEOREM_CAP, strict=False)[0]
        self.assertEqual((report.domdim, report.torsionfree, report.syzygy), (False, False, False))


class TestTorExtDuality(unittest.TestCase):
    """Tor_i(M, N) against D Ext^i(M, D N) on sampled pairs."""

    def test_sampled_pairs(self):
        checked = 0
        algebras = 0
        for name in ('nak-2-1', 'aus-kx2', 'paper-local', 'hered-A3'):
            a = load_fixture(name).build()
            pairs = sample_pairs(a, 10)
            algebras += 1
            for x, y in pairs:
                right = dual(x)
                with self.subTest(fixture=name, left=x.name, right=y.name):
                    self.assertEqual(tor_dims_direct(right, y, 5), tor_dims_via_ext(right, y, 5))
                checked += 1
        self.assertGreaterEqual(algebras, 3)
        self.assertGreaterEqual(checked, 20)


class TestHochschildOnCorpus(unittest.TestCase):
    """Direct and formula routes for Hochschild (co)homology."""

    def test_auslander_algebra_formulas(self):
        a = load_fixture('aus-kx2').build()
        report = hochschild_report(a, 4, cap=6, strict=False)
        self.assertEqual(report['domdim']['value'], 2)
        self.assertTrue(report['formula_matches'], report['failures'])
        self.assertEqual(report['formula']['homology'], report['direct']['homology'][1:])
        self.assertEqual(report['formula']['cohomology'], report['direct']['cohomology'][1:])
        self.assertEqual(len(report['direct']['cohomology']), 5)
        self.assertTrue(report['agreement'])

    def test_zeroth_cohomology_is_center(self):
        for fixture in corpus_list():
            a = fixture.build()
            with self.subTest(fixture=fixture.name):
                center = center_dim(a)
                self.assertEqual(hochschild_cohomology_dims(a, 0), [center])
                expected = {e.invariant: e.value for e in fixture.expected}
                if 'center_dim' in expected:
                    self.assertEqual(center, expected['center_dim'])

    def test_homology_vanishes_above_bound(self):
        cap, l_max = 4, 4
        for name, a in fixture_algebras():
            pd_a = projective_dimension(regular_bimodule(a), cap)
            if not pd_a.is_exact:
                continue
            with self.subTest(fixture=name):
                domdim = algebra_dominant_dimension(a, cap)
                n = domdim.value if domdim.is_exact else 0
                homology = hochschild_homology_dims(a, l_max)
                bound = pd_a.value - n
                self.assertEqual([homology[l] for l in range(max(1, bound + 1), l_max + 1)],
                                 [0] * (l_max - max(1, bound + 1) + 1))


class TestGendoSymmetricOnCorpus(unittest.TestCase):
    """V = A against the eAe route on QF-3 fixtures."""

    def test_routes_agree(self):
        cap = 4
        qf3 = 0
        for name, a in fixture_algebras():
            if minimal_faithful_projective_injective(a) is None:
                continue
            qf3 += 1
            with self.subTest(fixture=name):
                report = gendo_symmetric_report(a, cap, strict=False, seed=0)
                routes = report['gendo_symmetric']
                self.assertEqual(routes['by_v'], routes['by_corner'], report)
                if routes['by_v']:
                    self.assertTrue(report['domdim_by_ext_matches'], report)
                self.assertTrue(report['agreement'])
        self.assertGreaterEqual(qf3, 3)

    def test_expected_gendo_symmetric_fixtures(self):
        for name in ('aus-kx2', 'nak-2-3', 'kx2'):
            with self.subTest(fixture=name):
                report = gendo_symmetric_report(load_fixture(name).build(), 4, strict=False, seed=0)
                self.assertTrue(report['gendo_symmetric']['by_v'])
                self.assertTrue(report['gendo_symmetric']['by_corner'])


class TestMhoOnCorpus(unittest.TestCase):
    """The cokernel of the minimal approximation against syzygies and transposes."""

    def vertex_samples(self):
        for name, a in fixture_algebras():
            for label, m in sample_modules(a, with_sums=False):
                if is_mho_vertex(m) is None:
                    yield name, label, m

    def test_syzygy_of_mho_returns_module(self):
        seen = 0
        for name, label, m in self.vertex_samples():
            if not torsionless(m):
                continue
            with self.subTest(fixture=name, module=label):
                verdict = certify_isomorphism(syzygy(mho(m), 1), m, seed=0)
                self.assertEqual(verdict.verdict, YES)
            seen += 1
        self.assertGreater(seen, 0)

    def test_mho_powers_match_transpose_syzygies(self):
        for name, a in fixture_algebras():
            for label, m in sample_modules(a, with_sums=False):
                if strip_projective_summands(m)[1]:
                    continue
                for k in (1, 2):
                    with self.subTest(fixture=name, module=label, k=k):
                        by_transpose = transpose(syzygy(transpose(m), k))
                        self.assertEqual(mho_power(m, k).dim, by_transpose.dim)

    def test_torsionfree_iff_path_ends_at_module(self):
        for name, label, m in self.vertex_samples():
            for t in (1, 2, 3):
                with self.subTest(fixture=name, module=label, t=t):
                    self.assertEqual(mho_path_ending_at(m, t).exists, n_torsionfree(m, t))


class TestConjecturesOnCorpus(unittest.TestCase):
    """Bounded conjecture statements are internally consistent."""

    def test_every_fixture_is_consistent(self):
        for name, a in fixture_algebras():
            cap = CONJECTURE_CAP_OVERRIDES.get(name, CONJECTURE_CAP)
            with self.subTest(fixture=name):
                report = conjecture_probe(a, cap, strict=False, seed=0)
                self.assertEqual(report['contradictions'], [])
                self.assertEqual(report['tachikawa_dims'], report['bimodule_ext_dims'])
                self.assertEqual(len(report['tachikawa_dims']), cap)
                gp = report['gorenstein_bimodule']['holds_up_to_bound']
                if report['selfinjective']:
                    self.assertTrue(report['tachikawa_probe'])
                    self.assertTrue(gp)
                elif report['finitistic_dimension_finite']:
                    self.assertFalse(gp)


if __name__ == '__main__':
    unittest.main()
