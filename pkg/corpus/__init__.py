"""Example algebras with expected invariants and provenance."""

from corpus.corpus import (INFINITE, INVARIANTS, ExpectedValue, Fixture, compute_invariant, corpus_list,
                           corpus_verify, fixture_from_dict, fixtures_dir, invariant, load_fixture, render)

__all__ = [
    'INFINITE', 'INVARIANTS', 'ExpectedValue', 'Fixture', 'compute_invariant', 'corpus_list',
    'corpus_verify', 'fixture_from_dict', 'fixtures_dir', 'invariant', 'load_fixture', 'render',
]
