"""Versioned reference parameter sets, loaded from the packaged data file.

Every family carries at least three parameter sets spanning its shape
regimes; these drive the roundtrip sweeps, formula verification, and
sampling goodness-of-fit checks.
"""

import json
from functools import lru_cache
from importlib import resources

from .errors import ParamError

__all__ = ["refsets_version", "reference_params", "reference_specs", "all_reference_specs"]


@lru_cache(maxsize=1)
def _load():
    text = resources.files("lambertq.data").joinpath("reference_params.json").read_text()
    blob = json.loads(text)
    by_family = {}
    for row in blob["sets"]:
        by_family.setdefault(row["family"], []).append(dict(row["params"]))
    return blob["version"], by_family


def refsets_version():
    """Version stamp of the packaged reference-parameter file."""
    return _load()[0]


def reference_params(family):
    """The reference parameter dictionaries for one family (>= 3 sets)."""
    by_family = _load()[1]
    if family not in by_family:
        raise ParamError("no reference parameter sets for family %r" % family)
    return [dict(p) for p in by_family[family]]


def reference_specs(family):
    """Validated DistributionSpec objects for one family's reference sets."""
    from .families import validate

    return [validate(family, **params) for params in reference_params(family)]


def all_reference_specs():
    """Validated specs across the whole registry, in registry order."""
    from .families import family_ids

    specs = []
    for name in family_ids():
        specs.extend(reference_specs(name))
    return specs
