"""Lambert-W quantile functions, inverse-transform sampling, and printed-
formula verification for 28 lifetime distribution families.

The public surface:

- ``w_principal`` / ``w_lower`` / ``w_series`` / ``tree_t``: real branches
  of the Lambert W function with identity-residual reporting.
- ``std_normal_cdf`` / ``std_normal_quantile``: the normal special
  functions the lognormal-type families need.
- ``validate`` / ``survival`` / ``cdf`` / ``quantile`` /
  ``numeric_quantile`` / ``wl_hazard``: the distribution registry.
- ``sample`` / ``ks_statistic`` / ``empirical_moments``: deterministic
  counter-seeded inverse-transform sampling.
- ``verify_family`` / ``errata_report``: machine verification of every
  catalogued closed-form quantile against the family's own CDF.
"""

from .errors import (
    BracketError,
    DomainError,
    LambertQError,
    NoAnalyticFormError,
    ParamError,
)
from .lambertw import (
    Branch,
    WEvaluation,
    tree_t,
    w_lower,
    w_principal,
    w_principal_from_log,
    w_series,
)
from .normal import std_normal_cdf, std_normal_quantile
from .families import (
    DistributionSpec,
    HazardShape,
    QuantilePath,
    QuantileResult,
    cdf,
    family_ids,
    family_info,
    gm_subtractive_quantile,
    quantile,
    quantile_values,
    survival,
    validate,
    wl_hazard,
)
from .invert import invert_cdf, numeric_quantile
from .refsets import (
    all_reference_specs,
    reference_params,
    reference_specs,
    refsets_version,
)
from .sampling import (
    ALGORITHM_ID,
    SampleBatch,
    SampleMethod,
    SeededStream,
    batch_to_csv,
    batch_to_json,
    counter_uniforms,
    empirical_moments,
    ks_statistic,
    sample,
)
from .verify import (
    ErrataEntry,
    Verdict,
    default_grid,
    errata_report,
    report_to_csv,
    report_to_json,
    verify_family,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHM_ID",
    "Branch",
    "BracketError",
    "DistributionSpec",
    "DomainError",
    "ErrataEntry",
    "HazardShape",
    "LambertQError",
    "NoAnalyticFormError",
    "ParamError",
    "QuantilePath",
    "QuantileResult",
    "SampleBatch",
    "SampleMethod",
    "SeededStream",
    "Verdict",
    "WEvaluation",
    "all_reference_specs",
    "batch_to_csv",
    "batch_to_json",
    "cdf",
    "counter_uniforms",
    "default_grid",
    "empirical_moments",
    "errata_report",
    "family_ids",
    "family_info",
    "gm_subtractive_quantile",
    "invert_cdf",
    "ks_statistic",
    "numeric_quantile",
    "quantile",
    "quantile_values",
    "refsets_version",
    "reference_params",
    "reference_specs",
    "report_to_csv",
    "report_to_json",
    "sample",
    "std_normal_cdf",
    "std_normal_quantile",
    "survival",
    "tree_t",
    "validate",
    "verify_family",
    "w_lower",
    "w_principal",
    "w_principal_from_log",
    "w_series",
    "wl_hazard",
    "__version__",
]
