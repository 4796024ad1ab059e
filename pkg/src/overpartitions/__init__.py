"""Exact counts, asymptotics and crank multisections for (k, j)-coloured overpartitions."""

from .asymptotics import (
    ConeDomain,
    WrightParams,
    eta_major,
    f1_major_arc,
    lerch_weight2,
    li2_unit,
    main_term,
    major_arc_value,
    minor_arc_bound,
    ratio_report,
    wright_expansion,
)
from .crank import (
    CrankSpec,
    MultisectionRow,
    certify_phi_divisibility,
    crank_series_laurent,
    equidistribution_deviation,
    load_crank_spec,
    multisect_bucket,
    multisect_roots,
    quotient_coefficients,
    validate_crank,
)
from .cyclotomic import (
    CycloElem,
    IntPoly,
    cyclotomic_poly,
    divides_exactly,
    evaluate_at_root,
    laurent_quotient,
    reduce_mod_phi,
)
from .inequalities import (
    CoeffSequence,
    JensenPoly,
    bessenrodt_ono_scan,
    is_hyperbolic,
    jensen_poly,
    laguerre_check,
    log_concavity_front,
    turan_threshold,
)
from .partitions import (
    ColourParams,
    CongruenceClaim,
    coloured_overpartition_series,
    enumerate_coloured_overpartitions,
    scan_congruences,
)
from .series import (
    BigSeries,
    ZetaPoly,
    ZetaSeries,
    expand_inverse_pochhammer,
    expand_overline_factor,
    series_mul,
    zeta_series_mul,
)

__version__ = "0.1.0"
