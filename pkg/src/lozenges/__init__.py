"""Exact lozenge-tiling toolkit for staircase-cored hexagons."""

from .cells import TriCell, are_adjacent, transform_cell
from .engine import (
    DualGraph,
    EngineLimitError,
    count_bruteforce,
    count_dp,
    dual_graph,
    enumerate_tilings,
    tiling_weight,
)
from .formulas import (
    ParameterRangeError,
    ciucu_weighted_count,
    hyperfactorial,
    macmahon,
    pochhammer,
    proctor_count,
    proctor_count_alt,
    s_count,
    s_prime_count,
    stdh_count,
)
from .regions import (
    Region,
    build_hexagon,
    dump_region,
    is_balanced,
    load_region,
    region_from_json_dict,
    region_to_json_dict,
    remove_cells,
    transform_region,
    translate_region,
)

__all__ = [name for name in dir() if not name.startswith("_")]
