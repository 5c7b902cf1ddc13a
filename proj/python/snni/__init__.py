"""SNNI analysis of bounded labeled Petri nets."""

import json

from ._snni import (
    AssumptionError,
    CapacityError,
    InputError,
    Net,
    SnniError,
    brg_markings,
    decide_snni,
    export_dot,
    load_net,
    minimal_e_vectors,
    parse_net,
    random_net,
    snni_oracle,
)
from ._snni import _analyze_json, _assumptions


def check_assumptions(net, cap=100000):
    return _assumptions(net, cap)


def analyze(net, cap=100000, node_cap=2000000):
    """Full report as a dict: verdict, tag sets, witnesses, sizes, timings."""
    return json.loads(_analyze_json(net, cap, node_cap))


__all__ = [
    "AssumptionError",
    "CapacityError",
    "InputError",
    "Net",
    "SnniError",
    "analyze",
    "brg_markings",
    "check_assumptions",
    "decide_snni",
    "export_dot",
    "load_net",
    "minimal_e_vectors",
    "parse_net",
    "random_net",
    "snni_oracle",
]
