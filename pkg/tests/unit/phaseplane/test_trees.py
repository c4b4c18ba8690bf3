# Copyright (C) 2026, the carlesonlab developers.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Tests for trees and the enumeration of tree tops."""

import numpy as np
import pytest

from carlesonlab.errors import TreeTypeError
from carlesonlab.phaseplane import (
    LACUNARY,
    MIXED,
    OVERLAPPING,
    Top,
    Tree,
    all_tops,
    scan_tops,
    tree_remarks_hold,
)
from carlesonlab.weights import DyadicInterval


def test_top__omega_and_shift():
    top = Top(DyadicInterval(2, 1), 6.0)
    assert top.omega == (4.0, 8.0)
    assert top.shifted(1).xi == 8.0
    assert top.shifted(-2).omega == (0.0, 4.0)
    assert top.sort_key() == (6.0, 0.25, 4.0)


def test_tree__maximal_members_fit(two_scale_collection):
    for top in all_tops(two_scale_collection)[:50]:
        tree = Tree.maximal(two_scale_collection, top)
        assert len(tree) > 0
        for index in tree.members:
            bitile = two_scale_collection[int(index)]
            assert top.interval.contains(bitile.spatial)
            assert bitile.omega_tilde[0] <= top.omega[0] and top.omega[1] <= bitile.omega_tilde[1]


def test_tree__rejects_foreign_member(collection):
    top = Top(DyadicInterval(1, 0), collection[0].upper.omega[0])
    outside = int(np.flatnonzero(collection.positions == 1)[0])
    with pytest.raises(TreeTypeError):
        Tree(collection, [outside], top)


def test_tree__kinds_and_split(collection):
    bitile = collection[0]
    top = Top(bitile.spatial, bitile.upper.omega[0] + 0.5)
    tree = Tree(collection, [0], top)
    assert tree.kind == OVERLAPPING
    lacunary_top = Top(bitile.spatial, bitile.lower.omega[0] + 1.0)
    lacunary = Tree(collection, [0], lacunary_top)
    assert lacunary.kind == LACUNARY
    overlapping, rest = lacunary.split()
    assert len(overlapping) == 0 and len(rest) == 1


def test_tree__split_is_a_partition(two_scale_collection):
    for top in all_tops(two_scale_collection)[:50]:
        tree = Tree.maximal(two_scale_collection, top)
        overlapping, lacunary = tree.split()
        assert overlapping.kind == OVERLAPPING
        assert len(lacunary) == 0 or lacunary.kind == LACUNARY
        assert len(overlapping) + len(lacunary) == len(tree)
        if len(overlapping) and len(lacunary):
            assert tree.kind == MIXED


def test_tree__remarks_hold(two_scale_collection):
    for top in all_tops(two_scale_collection):
        assert tree_remarks_hold(Tree.maximal(two_scale_collection, top).split()[0])


def test_scan_tops__order(two_scale_collection):
    scans = list(scan_tops(two_scale_collection))
    keys = [(scan.interval.level, scan.interval.index) for scan in scans]
    assert keys == sorted(keys)
    for scan in scans:
        assert np.all(np.diff(scan.xis) > 0)
        assert np.all(np.any(scan.tree, axis=1))
        assert np.all(scan.overlapping <= scan.tree)


def test_scan_tops__restricted_frequencies(two_scale_collection):
    for scan in scan_tops(two_scale_collection):
        steps = scan.xis / (0.5 / scan.interval.length)
        assert np.allclose(steps, np.round(steps))


def test_scan_tops__inactive(collection):
    assert list(scan_tops(collection, np.zeros(len(collection), dtype=bool))) == []


def test_all_tops__nonempty_trees(collection):
    tops = all_tops(collection)
    assert tops
    assert all(len(Tree.maximal(collection, top)) > 0 for top in tops)
