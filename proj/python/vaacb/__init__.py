"""Python access to the UAV virtual antenna array beamforming planner.

Scenarios, genomes, configs and reports are plain dicts with the same layout
as the JSON files the command-line tool reads and writes.
"""

import json

from . import _vaacb
from ._vaacb import (
    InputError,
    chaotic_sequence,
    gain,
    hypervolume,
    max_range_speed,
    propulsion_power,
)

__all__ = [
    "InputError",
    "before_cb_genome",
    "chaotic_sequence",
    "evaluate",
    "gain",
    "hypervolume",
    "make_scenario",
    "max_range_speed",
    "propulsion_power",
    "run",
    "validate",
]


def make_scenario(n_uavs=8, seed=1):
    return json.loads(_vaacb.scenario_json(n_uavs, seed))


def validate(scenario):
    """Return None for a valid scenario, else the error message."""
    msg = _vaacb.validate_json(json.dumps(scenario))
    return msg or None


def before_cb_genome(scenario):
    return json.loads(_vaacb.before_cb_json(json.dumps(scenario)))


def evaluate(scenario, genome):
    return json.loads(_vaacb.evaluate_json(json.dumps(scenario), json.dumps(genome)))


def run(scenario, config=None, algo="cnsga2"):
    """Run the optimizer and return the report dict (archive, factor, hypervolume)."""
    cfg = "" if config is None else json.dumps(config)
    return json.loads(_vaacb.run_json(json.dumps(scenario), cfg, algo))
