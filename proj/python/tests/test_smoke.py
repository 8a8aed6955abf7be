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


import pytest

import spikelab


def test_construct_and_query():
    u24 = spikelab.uniform(2, 4)
    assert u24.size == 4
    assert u24.rank == 2
    assert len(u24.bases()) == 6
    assert u24.rank_of([0, 1, 2]) == 2
    assert spikelab.is_isomorphic(u24, u24.dual())
    assert u24.contract([0]) == spikelab.uniform(1, 3)


def test_expressions_and_lines():
    p7 = spikelab.parse("spike(3;tip=1;trav=[xxx,yyy])")
    assert p7 == spikelab.named("P7")
    assert spikelab.from_line(p7.line()) == p7
    with pytest.raises(spikelab.MatroidError):
        spikelab.parse("U(2,")


def test_minors_and_membership():
    p8 = spikelab.named("P8")
    witness = spikelab.has_minor(p8, spikelab.named("P7"))
    assert witness is not None
    assert len(witness["contracted"]) == 1
    assert spikelab.has_minor(spikelab.uniform(2, 4), spikelab.uniform(2, 5)) is None
    assert not spikelab.is_spike_minor(p8)
    assert not spikelab.is_spike_minor_excluded(p8)
    assert spikelab.is_spike_minor(spikelab.uniform(3, 6))
    assert spikelab.is_three_connected(p8)
    assert spikelab.is_ternary(p8)
    assert not spikelab.is_binary(p8)


def test_catalog_and_verification():
    assert spikelab.level_counts(5) == [1, 2, 4, 8, 17, 38]
    passed, text = spikelab.verify("theorem1", 5)
    assert passed, text
    passed, text = spikelab.verify("certificates")
    assert passed, text
