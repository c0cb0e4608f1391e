"""Scheduler package for bounded algebra sweeps."""

from .sweep_scheduler import SweepScheduler, kupisch_family

__all__ = ['SweepScheduler', 'kupisch_family']
