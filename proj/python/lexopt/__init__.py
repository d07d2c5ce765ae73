# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact lex-maximal and maximum-weight solvers.

Weights are positive rationals given as ``int``, ``fractions.Fraction`` or
``"n/d"`` strings. Floats are rejected. Results carry ``Fraction`` weights.
"""

import json
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple, Union

from . import _lexopt
from ._lexopt import LexoptError, Matroid

Weight = Union[int, Fraction, str]

__all__ = [
    "LexoptError",
    "Matroid",
    "Result",
    "alpha",
    "explicit",
    "generate",
    "graphic",
    "lex_maximal_common_independent",
    "lex_maximal_matching",
    "linear",
    "max_weight_common_independent",
    "max_weight_matching",
    "partition",
    "solve",
    "sweep",
    "tightness_example",
    "uniform",
    "verify",
]


class Result(NamedTuple):
    elements: list
    weight: Fraction
    signature: list


def _q(value: Weight) -> str:
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"weights must be exact rationals, got {value!r}")
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    if isinstance(value, str):
        return value
    raise TypeError(f"unsupported weight {value!r}")


def _result(raw) -> Result:
    elements, weight, signature = raw
    return Result(list(elements), Fraction(weight), list(signature))


def _edges(edges: Iterable[Tuple[int, int, Weight]]):
    return [(int(u), int(v), _q(w)) for u, v, w in edges]


def max_weight_matching(vertex_count: int, edges) -> Result:
    """Maximum-weight matching of a multigraph given as (u, v, w) triples."""
    return _result(_lexopt.max_weight_matching(vertex_count, _edges(edges)))


def lex_maximal_matching(vertex_count: int, edges, base: int = 3) -> Result:
    return _result(_lexopt.lex_maximal_matching(vertex_count, _edges(edges), base))


def _matroid(descriptor: dict, ground_size: int) -> Matroid:
    return _lexopt._matroid(json.dumps(descriptor), ground_size)


def uniform(ground_size: int, rank: int) -> Matroid:
    return _matroid({"type": "uniform", "rank": rank}, ground_size)


def partition(ground_size: int, blocks: Sequence[Sequence[int]],
              capacities: Sequence[int]) -> Matroid:
    return _matroid({"type": "partition", "blocks": [list(b) for b in blocks],
                     "capacities": list(capacities)}, ground_size)


def graphic(vertex_count: int, edges: Sequence[Tuple[int, int]]) -> Matroid:
    return _matroid({"type": "graphic", "vertex_count": vertex_count,
                     "edges": [list(e) for e in edges]}, len(edges))


def linear(rows: Sequence[Sequence[Weight]]) -> Matroid:
    width = len(rows[0]) if rows else 0
    return _matroid({"type": "linear",
                     "rows": [[_q(x) for x in row] for row in rows]}, width)


def explicit(ground_size: int, independent_sets) -> Matroid:
    return _matroid({"type": "explicit",
                     "independent_sets": [sorted(s) for s in independent_sets]},
                    ground_size)


def max_weight_common_independent(m1: Matroid, m2: Matroid,
                                  weights: Sequence[Weight]) -> Result:
    return _result(_lexopt.max_weight_common_independent(
        m1, m2, [_q(w) for w in weights]))


def lex_maximal_common_independent(m1: Matroid, m2: Matroid,
                                   weights: Sequence[Weight],
                                   base: int = 3) -> Result:
    return _result(_lexopt.lex_maximal_common_independent(
        m1, m2, [_q(w) for w in weights], base))


def alpha(weights: Sequence[Weight]) -> Optional[Fraction]:
    """Smallest ratio of consecutive weight levels; None when infinite."""
    value = _lexopt.alpha([_q(w) for w in weights])
    return None if value == "inf" else Fraction(value)


def solve(instance: dict, objective: str = "max-weight") -> dict:
    """Solves an instance document (the JSON file format, as a dict)."""
    return json.loads(_lexopt._solve(json.dumps(instance), objective))


def verify(instance: dict, vice_versa: bool = True, chain: bool = False) -> dict:
    return json.loads(_lexopt._verify(json.dumps(instance), vice_versa, chain))


def generate(**params) -> dict:
    """Random instance document; keyword arguments as in sweep batches."""
    params.setdefault("kind", "matching")
    for key in ("alpha_min", "alpha_max"):
        if key in params and params[key] != "inf":
            params[key] = _q(params[key])
    return json.loads(_lexopt._generate(json.dumps(params)))


def tightness_example(x: Weight) -> dict:
    return json.loads(_lexopt._tightness(_q(x)))


def sweep(config: dict) -> dict:
    return json.loads(_lexopt._sweep(json.dumps(config)))
