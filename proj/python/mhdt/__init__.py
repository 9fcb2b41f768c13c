# Copyright 2026 The mhdt Authors.
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


"""Minimum-height decision trees for binary instance sets.

Rows, coordinates and lattice elements are 0-based here, as in the C++ API.
Transcripts and reports come back as plain dicts.
"""

import json as _json

from ._mhdt import (
    InputError,
    InstanceSet,
    Lattice,
    LimitError,
    MhdtError,
    den,
    etd,
    etd_at,
    hitting_set,
    maj,
    mami,
    opt,
    setd,
    setd_at,
    solve,
    verify,
)

__all__ = [
    "InputError",
    "InstanceSet",
    "Lattice",
    "LimitError",
    "MhdtError",
    "den",
    "etd",
    "etd_at",
    "hitting_set",
    "learn",
    "maj",
    "mami",
    "opt",
    "play",
    "report",
    "setd",
    "setd_at",
    "solve",
    "verify",
]


def report(a):
    """Measures and bound flags for `a`."""
    from ._mhdt import _report_json

    return _json.loads(_report_json(a))


def play(a, learner, hidden=None, greedy_spec=False):
    """Play `learner` against row `hidden` of `a`, or against the adversary when hidden is None."""
    from ._mhdt import _play_json

    return _json.loads(_play_json(a, learner, hidden, greedy_spec))


def learn(lattice, hidden):
    """Learn element `hidden` of `lattice`; returns (element, transcript)."""
    element, transcript = lattice.learn(hidden)
    return element, _json.loads(transcript)
