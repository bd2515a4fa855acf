"""Numerical checks for the positivity of Re xi'/xi(s)."""

from xipos.explicit_bounds import BoundReport, bound_A, bound_B, eps1, eps2, lemma3_F, theorem1_bounds
from xipos.kernels import GAMMA1, KernelParams
from xipos.quadrature_oracle import IntegralResult, finite_kernel_integral, kernel_integral
from xipos.region_explorer import HypotheticalZeroSet, RegionGrid, compute_region, export_grid, scenario_sides
from xipos.special_functions import digamma, log_gamma, zeta, zeta_logderiv
from xipos.xi_core import (
    XiLogDerivResult,
    modulus_slope_probe,
    sigma1_real_part,
    sigma1_sandwich,
    xi,
    xi_logderiv_direct,
    xi_logderiv_zero_sum,
)
from xipos.zero_catalog import (
    CountingReport,
    ZeroTable,
    count_zeros_below,
    fixture_path,
    kernel_sum,
    load_zero_table,
    validate_zero_table,
    verify_counting_bound,
)

__version__ = "0.1.0"
