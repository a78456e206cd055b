"""The ten acceptance criteria, each at its stated tolerance."""

import random
import subprocess
import sys

from leakyforcing.corpus import CHECKS, all_graphs, enumerate_graphs, sweep
from leakyforcing.families import (clique_prism, clique_with_leaves, grid, grid_one_leaky_set,
                                   leaves_of, random_tree, spider, supertriangle)
from leakyforcing.forcing import closure, forcers_of, possible_forces
from leakyforcing.graph import (cycle_graph, delete_vertex, from_edge_list, members, path_graph,
                                vset)
from leakyforcing.leaky import verify_leaky_adversary, verify_leaky_characterization
from leakyforcing.solver import (all_minimum_leaky_sets, classification_shape, clear_cache,
                                 leaky_forcing_number, resilience_classification,
                                 zero_forcing_number)
from oracles import all_process_forces


def _random_graph(n, rng):
    return from_edge_list(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < 0.5])


def test_criterion_01_verifier_equivalence(record_property):
    disagreements = 0
    checked = 0
    for n in range(1, 6):
        for g in all_graphs(n):
            for l in (1, 2):
                if l > n:
                    continue
                for blue in range(1 << n):
                    a = verify_leaky_adversary(g, blue, l).accepted
                    c = verify_leaky_characterization(g, blue, l).accepted
                    disagreements += a != c
                    checked += 1
    rng = random.Random(2024)
    for n in (6, 7):
        for _ in range(500):
            g = _random_graph(n, rng)
            blue = rng.randrange(1 << n)
            for l in (1, 2):
                a = verify_leaky_adversary(g, blue, l).accepted
                c = verify_leaky_characterization(g, blue, l).accepted
                disagreements += a != c
                checked += 1
    record_property("detail", f"{checked} verdict pairs, {disagreements} disagreements")
    assert disagreements == 0


def test_criterion_02_possible_forces_oracle(record_property):
    disagreements = 0
    checked = 0
    for n in range(1, 6):
        for g in all_graphs(n, connected=False):
            for blue in range(1 << n):
                ours = {tuple(f) for f in possible_forces(g, blue)}
                disagreements += ours != all_process_forces(g, members(blue))
                checked += 1
    record_property("detail", f"{checked} (G,B) pairs, {disagreements} disagreements")
    assert disagreements == 0


def test_criterion_03_known_values(record_property):
    for n in range(4, 11):
        assert leaky_forcing_number(path_graph(n), 1).value == 2
        assert leaky_forcing_number(cycle_graph(n), 1).value == 2
    assert leaky_forcing_number(grid(4, 5), 1).value == 5
    assert zero_forcing_number(grid(4, 5)).value == 4
    for n in (2, 3, 4):
        assert leaky_forcing_number(grid(n, n), 1).value == n
    assert leaky_forcing_number(grid(2, 8), 1).value == 4
    trees = 0
    for n in range(5, 13):
        for seed in range(100):
            t = random_tree(n, seed)
            for l in (1, 2):
                low = sum(1 for d in t.degrees() if d <= l)
                assert leaky_forcing_number(t, l).value == low, (n, seed, l)
            trees += 1
    for n in (3, 4):
        t = supertriangle(n)
        assert leaky_forcing_number(t, 0).value == n
        assert leaky_forcing_number(t, 1).value == n
        assert leaky_forcing_number(t, 4).value == 3 * n - 3
        assert leaky_forcing_number(t, 5).value == 3 * n - 3
        assert leaky_forcing_number(t, 2).value <= 2 * n - 1
        assert leaky_forcing_number(t, 3).value <= 2 * n - 1
    record_property("detail", f"{trees} random trees")


def test_criterion_04_clique_prism_counterexample(record_property):
    for l in (2, 3):
        g = clique_prism(l)
        u = vset(range(l + 1))
        for v in members(g.vertices & ~u):
            assert forcers_of(g, u, 0, v).bit_count() == l + 1
        a = verify_leaky_adversary(g, u, l)
        c = verify_leaky_characterization(g, u, l)
        assert not a.accepted and not c.accepted
        # the stalling set u_2..u_{l+1} from the construction
        assert closure(g, u, vset(range(1, l + 1))) != g.vertices
    record_property("detail", "l = 2, 3 rejected by both verifiers")


def test_criterion_05_unique_minimum(record_property):
    g = clique_with_leaves(1)
    sets = all_minimum_leaky_sets(g, 1)
    assert sets == [leaves_of(g)]
    record_property("detail", f"unique minimum {members(sets[0])}")


def test_criterion_06_grid_certificates(record_property):
    g = grid(8, 13)
    b = grid_one_leaky_set(8, 13, check=False)
    assert b.bit_count() == 13
    assert verify_leaky_characterization(g, b, 1).accepted
    assert verify_leaky_adversary(g, b, 1).accepted
    pairs = 0
    for n in range(1, 16):
        for m in range(n, 16):
            # check=True certifies each set with the exhaustive single-leak adversary
            assert grid_one_leaky_set(n, m, check=True).bit_count() == min(2 * n, m)
            pairs += 1
    record_property("detail", f"8x13 certified, {pairs} sizes checked")


def test_criterion_07_theorem_battery(record_property):
    graphs = enumerate_graphs(6)
    report = sweep(graphs, 5, CHECKS)
    assert report.failures == []
    for k in (2, 3):
        found = resilience_classification(k)
        shapes = {classification_shape(g, k) for g in found}
        assert None not in shapes and f"K{k + 1}" in shapes
    record_property("detail", f"{len(graphs)} graphs, {len(CHECKS)} checks, 0 violations")


def test_criterion_08_deletion_delta_witnesses(record_property):
    report = sweep(enumerate_graphs(7), 1, ("delete",))
    found = report.delta_witnesses
    assert report.ok
    assert {-2, -1, 0, 1, 2} <= set(found)
    record_property("detail", "; ".join(
        f"{d:+d}: {found[d]['graph6']} {tuple(found[d]['edge'])}" for d in sorted(found)))


def test_criterion_09_spider(record_property):
    for k in (2, 3, 4):
        s = spider(k, 3)
        h, _ = delete_vertex(s, 0)
        assert leaky_forcing_number(s, 1).value == k
        assert leaky_forcing_number(h, 1).value == 2 * k
    record_property("detail", "k = 2, 3, 4")


def _cli(*argv):
    out = subprocess.run([sys.executable, "-m", "leakyforcing", *argv], capture_output=True,
                         check=False)
    return out.returncode, out.stdout


def test_criterion_10_determinism(record_property):
    commands = [
        ["solve", "grid:4,5", "--l", "1"],
        ["solve", "supertriangle:4", "--l", "3"],
        ["verify", "prism:3", "--blue", "0,1,2,3", "--l", "3", "--method", "both"],
        ["verify", "grid:5,6", "--blue", "0,1,2,3,4,5", "--l", "2"],
        ["family", "grid", "8", "13", "--l", "1", "--verify", "--adversary"],
        ["sweep", "--enumerate", "6", "--l", "2", "--json"],
    ]
    for cmd in commands:
        outputs = {_cli(*cmd, "--jobs", str(j)) for j in (1, 4) for _ in range(2)}
        assert len(outputs) == 1, cmd
    rng = random.Random(7)
    for _ in range(5):
        g = _random_graph(8, rng)
        clear_cache()
        a = leaky_forcing_number(g, 1, prune=False)
        clear_cache()
        b = leaky_forcing_number(g, 1, prune=False, jobs=4)
        assert (a.value, a.witness) == (b.value, b.witness)
    record_property("detail", f"{len(commands)} CLI commands x 2 runs x jobs 1/4")
