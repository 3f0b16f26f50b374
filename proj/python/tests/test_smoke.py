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


import pytest

import reppack


TINY = """WDM 3 2
T a x m 5
T b y n 1
T a y o 3
T b x p 4
"""


def test_parse_and_solve():
    inst = reppack.parse_instance(TINY)
    assert inst.kind == "wdm"
    assert len(inst) == 4
    assert inst.validate() == []
    sol = reppack.solve_wdm(inst)
    assert sol.total_weight == 7
    assert sol.picked == [2, 3]
    assert reppack.format_solution(sol) == "WEIGHT 7\nPICK 2\nPICK 3\n"


def test_round_trip():
    inst = reppack.gen_random("wsp", 3, 2, [9], 12, seed=4, weight_lo=-5, weight_hi=5)
    assert reppack.parse_instance(reppack.serialize_instance(inst)) == inst


def test_solvers_agree_with_oracle():
    for seed in range(1, 21):
        inst = reppack.gen_random("wdm", 3, 2, [4, 4, 4], 15, seed=seed, weight_lo=-9, weight_hi=9)
        expect = reppack.brute_force_solve(inst)
        got = reppack.solve_wdm(inst)
        packed = reppack.solve_wsp(inst.as_packing())
        if expect is None:
            assert got is None and packed is None
        else:
            assert got.total_weight == expect.total_weight == packed.total_weight


def test_dm3_finds_planted_matching():
    inst, planted = reppack.gen_planted("wdm", 3, 3, [5, 5, 5], 10, seed=3)
    sol = reppack.solve_dm3(inst)
    assert sol is not None
    assert sol.total_weight == planted
    assert reppack.is_feasible_solution(inst, sol)


def test_kernel_lifts_back():
    inst = reppack.gen_random("wdm", 3, 2, [6, 6, 6], 100, seed=8, weight_lo=-9, weight_hi=9)
    kr = reppack.kernelize(inst)
    assert len(kr.kernel) <= reppack.kernel_bound(3, 2) == 20
    sol = reppack.solve_wdm(kr.kernel)
    lifted = kr.lift(sol)
    assert reppack.is_feasible_solution(inst, lifted)
    assert lifted.total_weight == reppack.solve_wdm(inst).total_weight


def test_representatives():
    family = [([0], 3), ([1], 2), ([2], 1)]
    assert reppack.representatives(3, 1, 1, family) == [0, 1]
    assert reppack.binomial(6, 3) == 20


def test_errors():
    with pytest.raises(reppack.InstanceError):
        reppack.parse_instance("WSP 3 1\nS a b a 5\n")
    with pytest.raises(ValueError):
        reppack.gen_random("xyz", 3, 2, [5], 3)
    with pytest.raises(reppack.InstanceError):
        reppack.solve_dm3(reppack.parse_instance("WDM 2 1\nT a b 1\n"))
