from __future__ import annotations

import os
import random
import subprocess
import sys

import numpy as np
import pytest

from cluster_forge import _backend
from cluster_forge import constructions as C
from cluster_forge import invariants as I
from cluster_forge.group_core import all_subgroups
from cluster_forge.groupspec import parse_spec

import oracles

compiled = _backend.compiled_kernels
py = _backend.python_kernels
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")


def backends():
    out = [py]
    if compiled is not None:
        out.append(compiled)
    return out


def test_backend_names():
    assert py.NAME == "python"
    assert _backend.BACKEND in ("python", "cython")
    if compiled is not None:
        assert compiled.NAME == "cython"


@pytest.mark.parametrize("spec", ["sym:4,1", "holo:12", "sdp:2,3", "frob:9"])
def test_dimino_parity(spec):
    G = parse_spec(spec).model.table
    rng = random.Random(5)
    for S in all_subgroups(G):
        outside = [x for x in range(G.order) if x not in S]
        if not outside:
            continue
        x = rng.choice(outside)
        results = [sorted(k.dimino_extend(G.mul_table, S.members, S.generators(), x)) for k in backends()]
        brute = oracles.Brute(G)
        expected = brute.closure([G.elements[i] for i in S.members] + [G.elements[x]])
        assert {G.elements[i] for i in results[0]} == expected
        assert all(r == results[0] for r in results)


@pytest.mark.parametrize("spec", ["frob:7", "holo:15", "sym:5,1", "sdp:2,4"])
def test_irredundant_search_parity(spec):
    m = parse_spec(spec).model
    masks = I._conjugate_masks(m)
    full = (1 << m.table.order) - 1
    outs = [k.irredundant_search(masks, len(masks), full) for k in backends()]
    for found, cut in outs:
        assert sorted(map(tuple, found)) == sorted(map(tuple, outs[0][0]))
        assert cut == outs[0][1]
    sizes = {len(b) for b in outs[0][0]}
    for k in sizes:
        counts = {kern.count_minimal_of_size(masks, k) for kern in backends()}
        assert counts == {sum(1 for b in outs[0][0] if len(b) == k)}


def test_irredundant_search_cut_flag():
    m = C.holomorph_model(105)
    masks = I._conjugate_masks(m)
    full = (1 << m.table.order) - 1
    for k in backends():
        found, cut = k.irredundant_search(masks, 2, full)
        assert cut and {len(b) for b in found} == {2}
        found, cut = k.irredundant_search(masks, 4, full)
        assert not cut


def test_triplet_grid_parity():
    grids = [k.triplet_grid(60) for k in backends()]
    for g in grids:
        for a, b in zip(g, grids[0]):
            assert a.dtype == np.bool_
            assert (a == b).all()


def test_env_var_forces_fallback():
    env = dict(os.environ, CLUSTER_FORGE_KERNELS="python")
    out = subprocess.run([sys.executable, "-c", "import cluster_forge; print(cluster_forge.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
