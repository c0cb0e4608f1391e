"""Checkers wrapping the theorem reports in the common verdict envelope."""

from typing import Any, Dict, List, Optional

from algebras.algebra import Algebra, center_dim, is_connected, is_selfinjective, validate
from modrep.module import Module
from homology.dimension import DimensionValue
from homology.invariants import (algebra_dominant_dimension, global_dimension, torsionfree_degree)
from homology.mho import mho_path_ending_at, mho_path_starting_at
from bimodule_lab.base_checker import BaseChecker
from bimodule_lab.bimodules import canonical_bimodule, iso_check_1, iso_check_2, iso_check_3, regular_bimodule
from bimodule_lab.hochschild import hochschild_report
from bimodule_lab.probes import bimodule_dual_ext_bridge, conjecture_probe, pd_bimodule_report
from bimodule_lab.theorems import (check_main_theorem, domdim_via_ext_formula, ext_formula_report, fky_check,
                                   gendo_symmetric_report)

DOMDIM_METHODS = ('coresolution', 'torsionfree', 'formula')


class InvariantsChecker(BaseChecker):
    """Structural report plus gldim, domdim, selfinjectivity and gendo-symmetry."""

    def __init__(self, algebra: Algebra, cap: Optional[int] = None, seed: Optional[int] = None):
        super().__init__('invariants', algebra, cap, seed)

    def check(self) -> Dict[str, Any]:
        a = self.algebra
        gendo = gendo_symmetric_report(a, self.cap, strict=False, seed=self.seed)
        return {
            'structure': validate(a).to_dict(),
            'connected': is_connected(a),
            'center_dim': center_dim(a),
            'gldim': global_dimension(a, self.cap).to_dict(),
            'domdim': algebra_dominant_dimension(a, self.cap).to_dict(),
            'selfinjective': is_selfinjective(a),
            'gendo_symmetric': gendo['gendo_symmetric']['by_v'],
            'agreement': gendo['agreement'],
        }


class DomdimChecker(BaseChecker):
    """Dominant dimension by coresolution, bimodule torsionfreeness and the Ext formula."""

    def __init__(self, algebra: Algebra, methods: Optional[List[str]] = None,
                 cap: Optional[int] = None, seed: Optional[int] = None):
        super().__init__('domdim', algebra, cap, seed)
        self.methods = list(methods or DOMDIM_METHODS)
        self.logger.debug(f"Dominant dimension methods: {self.methods}")

    def check(self) -> Dict[str, Any]:
        a = self.algebra
        values: Dict[str, DimensionValue] = {}
        notes: Dict[str, str] = {}
        coresolution = algebra_dominant_dimension(a, self.cap)
        if 'coresolution' in self.methods:
            values['coresolution'] = coresolution
        if 'torsionfree' in self.methods:
            values['torsionfree'] = torsionfree_degree(regular_bimodule(a), self.cap)
        if 'formula' in self.methods:
            if coresolution.at_least_n(2) is True:
                values['formula'] = domdim_via_ext_formula(a, self.cap)
            else:
                notes['formula'] = f"not applicable: dominant dimension {coresolution} is below 2"
        listed = list(values.values())
        agreement = all(x.compatible_with(y) for x in listed for y in listed)
        result: Dict[str, Any] = {
            'methods': {name: value.to_dict() for name, value in values.items()},
            'agreement': agreement,
        }
        if notes:
            result['notes'] = notes
        return result


class MainTheoremChecker(BaseChecker):
    def __init__(self, algebra: Algebra, n_max: int, cap: Optional[int] = None, seed: Optional[int] = None):
        super().__init__('main-theorem', algebra, cap, seed)
        self.n_max = n_max

    def check(self) -> Dict[str, Any]:
        reports = check_main_theorem(self.algebra, self.n_max, self.cap, strict=False, seed=self.seed)
        return {
            'n_max': self.n_max,
            'reports': [r.to_dict() for r in reports],
            'agreement': all(r.agreement for r in reports),
        }


class BimoduleIsoChecker(BaseChecker):
    """The three comparison isomorphisms and the canonical bimodule certificate."""

    def __init__(self, algebra: Algebra, cap: Optional[int] = None, seed: Optional[int] = None):
        super().__init__('bimodule-isos', algebra, cap, seed)

    def check(self) -> Dict[str, Any]:
        a = self.algebra
        canonical = canonical_bimodule(a, seed=self.seed)
        checks = {
            'enveloping_is_hom_k': iso_check_1(a, seed=self.seed),
            'dual_of_regular': iso_check_2(a, regular_bimodule(a), seed=self.seed),
            'double_dual': iso_check_3(a, seed=self.seed),
        }
        return {
            'canonical_bimodule': canonical.to_dict(),
            'isomorphisms': {name: v.to_dict(include_witness=False) for name, v in checks.items()},
            'agreement': all(v.holds for v in checks.values()),
        }


class FkyChecker(BaseChecker):
    def __init__(self, algebra: Algebra, cap: Optional[int] = None, seed: Optional[int] = None):
        super().__init__('fky', algebra, cap, seed)

    def check(self) -> Dict[str, Any]:
        return fky_check(self.algebra, self.cap, strict=False, seed=self.seed).to_dict()


class ExtFormulaChecker(BaseChecker):
    def __init__(self, algebra: Algebra, cap: Optional[int] = None, seed: Optional[int] = None):
        super().__init__('ext-formula', algebra, cap, seed)

    def check(self) -> Dict[str, Any]:
        return ext_formula_report(self.algebra, self.cap)


class GendoSymmetricChecker(BaseChecker):
    def __init__(self, algebra: Algebra, cap: Optional[int] = None, seed: Optional[int] = None):
        super().__init__('gendo-symmetric', algebra, cap, seed)

    def check(self) -> Dict[str, Any]:
        return gendo_symmetric_report(self.algebra, self.cap, strict=False, seed=self.seed)


class HochschildChecker(BaseChecker):
    def __init__(self, algebra: Algebra, l_max: int, cap: Optional[int] = None, seed: Optional[int] = None):
        super().__init__('hochschild', algebra, cap, seed)
        self.l_max = l_max

    def check(self) -> Dict[str, Any]:
        gendo = gendo_symmetric_report(self.algebra, self.cap, strict=False, seed=self.seed)
        certified = gendo['gendo_symmetric']['by_v'] and gendo['gendo_symmetric']['by_corner']
        return hochschild_report(self.algebra, self.l_max, self.cap, strict=False,
                                 gendo_symmetric=certified)


class ConjectureProbeChecker(BaseChecker):
    """Conjecture probes together with the Ext bridge and the bimodule projective dimensions."""

    def __init__(self, algebra: Algebra, cap: Optional[int] = None, seed: Optional[int] = None):
        super().__init__('probe-conjectures', algebra, cap, seed)

    def check(self) -> Dict[str, Any]:
        a = self.algebra
        probe = conjecture_probe(a, self.cap, strict=False, seed=self.seed)
        bridge = bimodule_dual_ext_bridge(a, self.cap, strict=False)
        pd_a, pd_da = pd_bimodule_report(a, self.cap)
        probe['bridge'] = bridge
        probe['pd_bimodule'] = {'regular': pd_a.to_dict(), 'coregular': pd_da.to_dict()}
        probe['agreement'] = probe['agreement'] and bridge['agreement']
        return probe


class MhoPathChecker(BaseChecker):
    """mho-paths of length t into and out of a module, against its torsionfree degree."""

    def __init__(self, algebra: Algebra, module: Module, length: int,
                 cap: Optional[int] = None, seed: Optional[int] = None):
        super().__init__('mho-path', algebra, cap, seed)
        self.module = module
        self.length = length

    def check(self) -> Dict[str, Any]:
        m = self.module
        ending = mho_path_ending_at(m, self.length)
        starting = mho_path_starting_at(m, self.length)
        result: Dict[str, Any] = {
            'module': m.name,
            'module_dim': m.dim,
            'length': self.length,
            'ending_at': ending.to_dict(),
            'starting_at': starting.to_dict(),
        }
        # only vertices of the mho-quiver carry paths
        if ending.exists or 'torsionless' in ending.reason:
            degree = torsionfree_degree(m, self.cap)
            result['torsionfree_degree'] = degree.to_dict()
            expected = degree.at_least_n(self.length)
            result['agreement'] = expected is None or expected == ending.exists
        return result
