"""Sweep scheduler for bounded families of Nakayama algebras.

This module enumerates admissible Kupisch series up to a size bound and runs
the conjecture probes on every algebra concurrently, with failure isolation
and a summary of the outcomes.
"""

import json
import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from datetime import datetime, timezone
from itertools import product
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd
from tqdm import tqdm

from algebras.presentation import KupischSeries, nakayama
from bimodule_lab.checkers import ConjectureProbeChecker
from config.config_loader import default_cap, default_seed, get_config
from exactlin.field import FieldSpec
from homology.cache import clear_caches
from utils.utils import DomDimLabError, InvalidKupischSeries, setup_logging

SHAPES = ('linear', 'cyclic')


def _canonical_rotation(lengths: Tuple[int, ...]) -> Tuple[int, ...]:
    return min(lengths[i:] + lengths[:i] for i in range(len(lengths)))


def kupisch_family(max_entry: int, max_vertices: int,
                   shapes: Tuple[str, ...] = SHAPES) -> List[KupischSeries]:
    """Admissible Kupisch series with entries <= max_entry on at most max_vertices vertices.

    Cyclic series are listed once per rotation class.
    """
    family: List[KupischSeries] = []
    seen = set()
    for shape in shapes:
        for n in range(1, max_vertices + 1):
            for lengths in product(range(1, max_entry + 1), repeat=n):
                key = (shape, _canonical_rotation(lengths) if shape == 'cyclic' else lengths)
                if key in seen:
                    continue
                series = KupischSeries(tuple(lengths), shape)
                try:
                    series.check()
                except InvalidKupischSeries:
                    continue
                seen.add(key)
                family.append(series)
    return family


class SweepScheduler:
    """Runs the conjecture probes over a bounded Nakayama family."""

    def __init__(self, max_entry: int, max_vertices: int, cap: Optional[int] = None,
                 seed: Optional[int] = None, jobs: Optional[int] = None,
                 characteristic: Optional[int] = None):
        """Initialize the sweep.

        Args:
            max_entry: Largest Kupisch entry
            max_vertices: Largest number of vertices
            cap: Probe cap; None uses the configured cap
            seed: Isomorphism seed; None uses the configured seed
            jobs: Worker threads; None uses scheduler.max_concurrent_jobs
            characteristic: Ground field; None uses field.characteristic
        """
        self.config = get_config()
        self.logger = self._setup_logging()

        self.scheduler_config = self.config.get('scheduler', {}) or {}
        self.max_entry = max_entry
        self.max_vertices = max_vertices
        self.cap = default_cap(cap)
        self.seed = default_seed(seed)
        self.jobs = int(jobs or self.scheduler_config.get('max_concurrent_jobs', 4))
        self.field = FieldSpec(int(characteristic if characteristic is not None
                                   else self.config.get('field.characteristic', 101)))

        self.family = kupisch_family(max_entry, max_vertices)
        self.logger.info(f"Sweep over {len(self.family)} Nakayama algebras "
                         f"(entries <= {max_entry}, vertices <= {max_vertices})")

    def _setup_logging(self) -> logging.Logger:
        """Setup logging for the scheduler."""
        log_level = self.config.get('logging_config.level', 'INFO')
        log_format = self.config.get('logging_config.format', 'text')

        return setup_logging(
            "scheduler.sweep",
            level=log_level,
            log_format=log_format
        )

    def _probe(self, series: KupischSeries) -> Dict[str, Any]:
        """Probe a single algebra; errors are recorded, never raised."""
        entry: Dict[str, Any] = {'series': list(series.lengths), 'shape': series.shape}
        try:
            a = nakayama(series, self.field)
            entry['dim'] = a.dim
            result = ConjectureProbeChecker(a, self.cap, self.seed).run(strict=False)
            entry['status'] = result['status']
            entry['selfinjective'] = result.get('selfinjective')
            entry['domdim'] = result.get('domdim')
            entry['tachikawa_probe'] = result.get('tachikawa_probe')
            entry['gp_probe'] = (result.get('gorenstein_bimodule') or {}).get('holds_up_to_bound')
            entry['contradictions'] = result.get('contradictions', [])
            entry['errors'] = result.get('errors', [])
        except DomDimLabError as e:
            self.logger.error(f"Sweep entry {series.shape} {list(series.lengths)} failed: {e}")
            entry['status'] = 'failed'
            entry['errors'] = [{'error': str(e), 'type': type(e).__name__}]
        return entry

    def run(self) -> Dict[str, Any]:
        """Probe every algebra of the family.

        Returns:
            Report with per-algebra entries in family order and a summary
        """
        start_time = datetime.now(timezone.utc)
        entries: Dict[int, Dict[str, Any]] = {}

        with ThreadPoolExecutor(max_workers=self.jobs) as executor:
            future_to_index = {
                executor.submit(self._probe, series): k
                for k, series in enumerate(self.family)
            }
            for future in tqdm(as_completed(future_to_index), total=len(future_to_index),
                               desc="nakayama sweep", disable=None):
                k = future_to_index[future]
                entries[k] = future.result()
        clear_caches()

        ordered = [entries[k] for k in range(len(self.family))]
        report = {
            'parameters': {
                'max_entry': self.max_entry,
                'max_vertices': self.max_vertices,
                'cap': self.cap,
                'seed': self.seed,
                'characteristic': self.field.characteristic,
            },
            'algebras': ordered,
            'summary': self.summarize(ordered),
        }

        duration = (datetime.now(timezone.utc) - start_time).total_seconds()
        self.logger.info(
            f"Sweep completed - "
            f"Algebras: {len(ordered)}, "
            f"Disagreements: {report['summary']['disagreement']}, "
            f"Duration: {duration:.2f}s"
        )
        return report

    @staticmethod
    def summarize(entries: List[Dict[str, Any]]) -> Dict[str, Any]:
        """Counts by status and by probe outcome."""
        if not entries:
            return {'total': 0, 'completed': 0, 'disagreement': 0, 'failed': 0, 'by_shape': {}}
        frame = pd.DataFrame(entries)
        status = frame['status'].value_counts()
        summary: Dict[str, Any] = {
            'total': int(len(frame)),
            'completed': int(status.get('completed', 0)),
            'disagreement': int(status.get('disagreement', 0)),
            'failed': int(status.get('failed', 0)),
        }
        by_shape: Dict[str, Any] = {}
        for shape, group in frame.groupby('shape', sort=True):
            row: Dict[str, Any] = {'algebras': int(len(group))}
            for column in ('selfinjective', 'tachikawa_probe', 'gp_probe'):
                if column in group:
                    row[column] = int((group[column] == True).sum())  # noqa: E712
            by_shape[str(shape)] = row
        summary['by_shape'] = by_shape
        return summary

    def save_report(self, report: Dict[str, Any], path: Optional[str] = None) -> Path:
        """Write the report as JSON; the default path lives under scheduler.report_dir."""
        if path is None:
            report_dir = Path(self.scheduler_config.get('report_dir', 'reports'))
            path = str(report_dir / f"nakayama_sweep_e{self.max_entry}_v{self.max_vertices}.json")
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, 'w', encoding='utf-8') as handle:
            json.dump(report, handle, indent=2, sort_keys=True)
        self.logger.info(f"Sweep report saved to {target}")
        return target
