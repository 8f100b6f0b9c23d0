"""Exact counts of bipartite maps, constellations and monotone Hurwitz numbers."""

from ._core import (
    DegreeProfile,
    ExactnessViolation,
    WorkCapExceeded,
    binomial,
    catalan,
    count_angulation,
    count_bipartite,
    count_constellation,
    count_constellation_by_faces,
    count_monotone,
    count_one_faced,
    oracle_constellations,
    oracle_monotone,
    parse_profile,
    planar_angulation_series,
    run_cli,
    subprofiles,
)

__all__ = [
    "DegreeProfile",
    "ExactnessViolation",
    "WorkCapExceeded",
    "binomial",
    "catalan",
    "count_angulation",
    "count_bipartite",
    "count_constellation",
    "count_constellation_by_faces",
    "count_monotone",
    "count_one_faced",
    "oracle_constellations",
    "oracle_monotone",
    "parse_profile",
    "planar_angulation_series",
    "run_cli",
    "subprofiles",
]
