# Copyright 2026 The reppack Authors.
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

"""Exact solvers for weighted q-dimensional matching and q-set packing."""

from ._core import (
    BudgetExceeded,
    Instance,
    InstanceError,
    KernelResult,
    Member,
    Solution,
    binomial,
    brute_force_solve,
    format_solution,
    gen_planted,
    gen_random,
    is_feasible_solution,
    kernel_bound,
    kernelize,
    parse_instance,
    representatives,
    serialize_instance,
    solve_dm3,
    solve_wdm,
    solve_wsp,
)

__all__ = [
    "BudgetExceeded",
    "Instance",
    "InstanceError",
    "KernelResult",
    "Member",
    "Solution",
    "binomial",
    "brute_force_solve",
    "format_solution",
    "gen_planted",
    "gen_random",
    "is_feasible_solution",
    "kernel_bound",
    "kernelize",
    "parse_instance",
    "representatives",
    "serialize_instance",
    "solve_dm3",
    "solve_wdm",
    "solve_wsp",
]
