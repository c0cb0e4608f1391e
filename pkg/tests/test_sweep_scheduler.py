"""Unit tests for the Nakayama sweep scheduler."""

import json
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from homology.cache import resolution_cache
from scheduler.sweep_scheduler import SweepScheduler, kupisch_family
from utils.utils import DisagreementDetected


class TestKupischFamily(unittest.TestCase):
    """Test enumeration of admissible Kupisch series."""

    def test_small_family(self):
        family = kupisch_family(2, 2)
        listed = {(s.shape, s.lengths) for s in family}
        self.assertIn(('linear', (1,)), listed)
        self.assertIn(('linear', (2, 1)), listed)
        self.assertIn(('cyclic', (2, 2)), listed)
        self.assertNotIn(('linear', (1, 2)), listed)

    def test_cyclic_rotations_listed_once(self):
        family = kupisch_family(3, 2, shapes=('cyclic',))
        cyclic = [s.lengths for s in family]
        self.assertIn((2, 3), cyclic)
        self.assertNotIn((3, 2), cyclic)

    def test_all_series_are_admissible(self):
        for series in kupisch_family(3, 3):
            series.check()


class TestSweepScheduler(unittest.TestCase):
    """Test running the probes over a family."""

    def setUp(self):
        self.scheduler = SweepScheduler(2, 2, cap=2, seed=1, jobs=2)

    def test_initialization(self):
        self.assertEqual(self.scheduler.cap, 2)
        self.assertEqual(self.scheduler.jobs, 2)
        self.assertEqual(self.scheduler.field.characteristic, 101)
        self.assertEqual(len(self.scheduler.family), len(kupisch_family(2, 2)))

    def test_run_keeps_family_order(self):
        report = self.scheduler.run()
        listed = [(e['shape'], tuple(e['series'])) for e in report['algebras']]
        self.assertEqual(listed, [(s.shape, s.lengths) for s in self.scheduler.family])
        summary = report['summary']
        self.assertEqual(summary['total'], len(self.scheduler.family))
        self.assertEqual(summary['disagreement'], 0)
        self.assertEqual(summary['failed'], 0)

    def test_run_empties_caches(self):
        self.scheduler.run()
        self.assertEqual(len(resolution_cache), 0)

    def test_failure_is_isolated(self):
        def broken(*args, **kwargs):
            raise DisagreementDetected("forced")

        with patch('scheduler.sweep_scheduler.nakayama', side_effect=broken):
            report = self.scheduler.run()
        self.assertEqual(report['summary']['failed'], len(self.scheduler.family))
        self.assertEqual(report['algebras'][0]['errors'][0]['type'], 'DisagreementDetected')

    def test_summarize_empty(self):
        self.assertEqual(SweepScheduler.summarize([])['total'], 0)

    def test_summarize_counts(self):
        entries = [
            {'shape': 'linear', 'status': 'completed', 'selfinjective': False, 'tachikawa_probe': True,
             'gp_probe': False},
            {'shape': 'cyclic', 'status': 'disagreement', 'selfinjective': True, 'tachikawa_probe': True,
             'gp_probe': True},
        ]
        summary = SweepScheduler.summarize(entries)
        self.assertEqual(summary['completed'], 1)
        self.assertEqual(summary['disagreement'], 1)
        self.assertEqual(summary['by_shape']['cyclic']['gp_probe'], 1)
        self.assertEqual(summary['by_shape']['linear']['tachikawa_probe'], 1)

    def test_save_report(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = self.scheduler.save_report({'summary': {'total': 0}}, str(Path(tmp, 'out', 'r.json')))
            self.assertEqual(json.loads(target.read_text(encoding='utf-8')), {'summary': {'total': 0}})


if __name__ == '__main__':
    unittest.main()
