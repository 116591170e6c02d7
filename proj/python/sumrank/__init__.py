# Copyright 2026 The sumrank Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Sum-rank metric (generalized) linearized Reed-Solomon codes.

Field elements are plain integers: the base-p packing of their coefficient
vector over F_p. Vectors are lists and matrices are lists of rows.
"""

from ._sumrank import (
    Field,
    GlrsParams,
    OreCtx,
    SumrankError,
    canonical_generator,
    intersection_distinguisher,
    min_distance,
    overbeck_distinguisher,
    random_disguise,
    random_glrs,
    recover,
    run_experiment,
    square_distinguisher,
    sum_rank_weight,
)

__all__ = [
    "Field",
    "GlrsParams",
    "OreCtx",
    "SumrankError",
    "canonical_generator",
    "intersection_distinguisher",
    "min_distance",
    "overbeck_distinguisher",
    "random_disguise",
    "random_glrs",
    "recover",
    "run_experiment",
    "square_distinguisher",
    "sum_rank_weight",
]
