"""Constructions on A^e and the checkers built on them."""

from bimodule_lab.base_checker import BaseChecker
from bimodule_lab.bimodules import (CanonicalBimodule, canonical_bimodule, canonical_module, coregular_bimodule,
                                    double_dual_side, enveloping_dual, escalated_verdict, hom_k_bimodule,
                                    iso_check_1, iso_check_2, iso_check_3, regular_bimodule)
from bimodule_lab.checkers import (DOMDIM_METHODS, BimoduleIsoChecker, ConjectureProbeChecker, DomdimChecker,
                                   ExtFormulaChecker, FkyChecker, GendoSymmetricChecker, HochschildChecker,
                                   InvariantsChecker, MainTheoremChecker, MhoPathChecker)
from bimodule_lab.hochschild import (formula_dims, hochschild_cohomology_dims, hochschild_homology_dims,
                                     hochschild_report)
from bimodule_lab.probes import (bimodule_dual_ext_bridge, bimodule_ext_dims, conjecture_probe,
                                 gorenstein_probe, pd_bimodule_report, tachikawa_dims)
from bimodule_lab.theorems import (FkyReport, TheoremReport, check_main_theorem, domdim_via_ext_formula,
                                   ext_formula_report, fky_characterization, fky_check, gendo_symmetric_report,
                                   is_faithful, is_gendo_symmetric, minimal_faithful_projective_injective,
                                   syzygy_of_translate)

__all__ = [
    'BaseChecker',
    'CanonicalBimodule', 'canonical_bimodule', 'canonical_module', 'coregular_bimodule', 'double_dual_side',
    'enveloping_dual', 'escalated_verdict', 'hom_k_bimodule', 'iso_check_1', 'iso_check_2', 'iso_check_3',
    'regular_bimodule',
    'DOMDIM_METHODS', 'BimoduleIsoChecker', 'ConjectureProbeChecker', 'DomdimChecker', 'ExtFormulaChecker',
    'FkyChecker', 'GendoSymmetricChecker', 'HochschildChecker', 'InvariantsChecker', 'MainTheoremChecker',
    'MhoPathChecker',
    'formula_dims', 'hochschild_cohomology_dims', 'hochschild_homology_dims', 'hochschild_report',
    'bimodule_dual_ext_bridge', 'bimodule_ext_dims', 'conjecture_probe', 'gorenstein_probe',
    'pd_bimodule_report', 'tachikawa_dims',
    'FkyReport', 'TheoremReport', 'check_main_theorem', 'domdim_via_ext_formula', 'ext_formula_report',
    'fky_characterization', 'fky_check', 'gendo_symmetric_report', 'is_faithful', 'is_gendo_symmetric',
    'minimal_faithful_projective_injective', 'syzygy_of_translate',
]
