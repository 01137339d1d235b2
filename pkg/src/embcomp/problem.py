"""JSON problem files.

::

    {
      "variables": ["x", "y"],
      "generators": ["x*(y^2-x^3)", "y*(y^2-x^3)"],
      "suspects": [{"point": [[0, 0], [0, 0]], "dim": 0}],
      "components": [{"id": "cusp", "dim": 1, "parametrization": ["t1^2", "t1^3"]}],
      "config": {"delta": 1e-8, "seed": 0, "max_degree": 12, "max_samples": 50}
    }

Complex numbers are ``[re, im]`` pairs (plain numbers are accepted too).  A
positive-dimensional suspect carries its own ``parametrization``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .dual import NumericalConfig
from .errors import EmbcompError
from .oracle import ComponentSpec, component_from_dict
from .parse import parse_system
from .poly import Ring


class ProblemError(EmbcompError):
    pass


def parse_complex(v):
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, (list, tuple)) and len(v) == 2 and all(isinstance(t, (int, float)) for t in v):
        return complex(v[0], v[1])
    raise ProblemError(f"not a complex number: {v!r}")


def parse_complex_vector(vs):
    return np.array([parse_complex(v) for v in vs], dtype=complex)


def complex_to_json(z):
    return [float(np.real(z)), float(np.imag(z))]


@dataclass
class Suspect:
    point: np.ndarray
    dim: int = 0
    component: ComponentSpec = None
    label: str = ""


@dataclass
class Problem:
    ring: Ring
    generators: list
    suspects: list = field(default_factory=list)
    components: list = field(default_factory=list)
    config: NumericalConfig = field(default_factory=NumericalConfig)
    extra: dict = field(default_factory=dict)


_CONFIG_KEYS = {"delta", "seed", "max_degree", "max_samples", "max_d", "max_e"}


def problem_from_dict(data):
    if not isinstance(data, dict):
        raise ProblemError("problem file must hold a JSON object")
    names = data.get("variables")
    if not names:
        raise ProblemError("problem file needs a nonempty 'variables' list")
    ring = Ring(tuple(names))
    gens = data.get("generators") or []
    if not gens:
        raise ProblemError("problem file has no generators")
    F = parse_system(gens, ring)
    cfg_data = data.get("config", {})
    unknown = set(cfg_data) - _CONFIG_KEYS
    if unknown:
        raise ProblemError(f"unknown config keys: {sorted(unknown)}")
    cfg = NumericalConfig(**cfg_data)
    comps = [component_from_dict(c) for c in data.get("components", [])]
    suspects = []
    for k, s in enumerate(data.get("suspects", [])):
        dim = int(s.get("dim", 0))
        comp = None
        if dim > 0:
            if "parametrization" not in s:
                raise ProblemError(f"suspect {k} has dim {dim} but no parametrization")
            comp = component_from_dict({"id": s.get("id", f"suspect{k}"), **s})
        point = parse_complex_vector(s["point"]) if "point" in s else None
        if point is None and comp is None:
            raise ProblemError(f"suspect {k} needs a point")
        if point is not None and point.size != ring.nvars:
            raise ProblemError(f"suspect {k} has {point.size} coordinates, ring has {ring.nvars}")
        suspects.append(Suspect(point, dim, comp, str(s.get("id", k))))
    extra = {k: v for k, v in data.items()
             if k not in {"variables", "generators", "suspects", "components", "config"}}
    return Problem(ring, F, suspects, comps, cfg, extra)


def load_problem(path):
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ProblemError(f"{path}: invalid JSON ({exc.msg}, line {exc.lineno}, column {exc.colno})") from None
    return problem_from_dict(data)
