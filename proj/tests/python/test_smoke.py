import itertools
import random

import pytest

import switchiso as si


def k(n):
    return si.Graph.builtin("complete", n)


def test_graph_basics():
    g = k(6)
    assert (g.n, g.m, g.c) == (6, 15, 1)
    assert g.is_complete()
    assert g.edges[0] == (0, 1)
    assert si.Graph.parse(g.to_text()) == g
    assert si.Graph.from_spec("petersen").m == 15


def test_class_counts():
    counts = {spec: len(si.enumerate_isomorphism_classes(si.Graph.from_spec(spec)))
              for spec in ["complete:3", "complete:4", "complete:5", "complete:6", "petersen"]}
    assert counts == {"complete:3": 2, "complete:4": 3, "complete:5": 7,
                      "complete:6": 16, "petersen": 6}


def test_k6_reports_partition_signatures():
    reports = si.Classifier(k(6)).enumerate_isomorphism_classes(max_cycle_len=5, workers=2)
    assert sum(r["class_size"] for r in reports) == 2**15
    assert all(r["class_size"] % 32 == 0 for r in reports)
    triples = {(r["spectrum"][3], r["spectrum"][4], r["spectrum"][5]) for r in reports}
    assert len(triples) == 16
    assert (4, 12, 24) in triples


def test_spectrum_and_frustration():
    g = k(6)
    s = si.Signature(g, "0-1")
    assert si.negative_cycle_spectrum(s) == {3: 4, 4: 12, 5: 24, 6: 24}
    size, rep = si.frustration_index(si.Signature(k(3), "0-1,1-2,0-2"))
    assert size == 1 and str(rep) == "0-1"
    assert si.is_balanced(si.switch_at(si.Signature(g), [1, 4]))


def test_witness_verifies():
    g = k(6)
    classifier = si.Classifier(g)
    a = si.Signature(g, "0-1,2-5,3-4")
    b = si.Signature(g, "0-1,1-2,2-3,3-4,4-5,0-5")
    perm, switch_set = classifier.is_switching_isomorphic(a, b)
    assert si.switch_at(si.apply_automorphism(a, perm), switch_set) == b
    assert classifier.is_switching_isomorphic(
        si.Signature(g, "0-1"), si.Signature(g, "0-1,1-2")) is None


def test_canonical_form_invariance():
    g = k(6)
    classifier = si.Classifier(g)
    group = si.automorphism_group(g)
    rng = random.Random(3)
    for _ in range(100):
        s = si.Signature(g, [e for e in g.edges if rng.random() < 0.5])
        t = si.switch_at(si.apply_automorphism(s, rng.choice(group)),
                         [v for v in range(6) if rng.random() < 0.5])
        assert classifier.canonical_form(t) == classifier.canonical_form(s)


def test_automorphism_group_matches_networkx():
    nx = pytest.importorskip("networkx")
    for spec in ["petersen", "heawood", "cycle:7"]:
        g = si.Graph.from_spec(spec)
        ng = nx.Graph(g.edges)
        matcher = nx.algorithms.isomorphism.GraphMatcher(ng, ng)
        assert len(si.automorphism_group(g)) == sum(1 for _ in matcher.isomorphisms_iter())


def test_cycles_match_networkx():
    nx = pytest.importorskip("networkx")
    g = si.Graph.from_spec("petersen")
    ours = si.enumerate_cycles(g, 10)
    theirs = list(nx.simple_cycles(nx.Graph(g.edges)))
    assert len(ours) == len(theirs)


def test_types_and_named_representatives():
    g = k(6)
    assert [si.automorphic_type_count(g, size, 2) for size in range(7)] == [1, 1, 2, 4, 5, 4, 2]
    reps = si.named_k6_representatives()
    assert len(reps) == 19
    assert set(reps["S7"].negative_edges) == {(0, 1), (0, 2), (1, 2)}


def test_switching_equivalence_matches_cycle_sets_k4():
    g = k(4)
    sigs = [si.Signature(g, [e for i, e in enumerate(g.edges) if mask >> i & 1])
            for mask in range(64)]
    for a, b in itertools.product(sigs[::7], sigs):
        same = {tuple(c.vertices) for c in si.unbalanced_cycle_set(a)} == \
               {tuple(c.vertices) for c in si.unbalanced_cycle_set(b)}
        assert si.is_switching_equivalent(a, b) == same


def test_errors_carry_codes():
    with pytest.raises(si.SwitchIsoError) as info:
        si.Signature(k(6), "0-1,0-1")
    assert info.value.code == "DuplicateEdge"
    with pytest.raises(ValueError):
        si.Signature(k(6), "0-9")
    with pytest.raises(si.SwitchIsoError) as info:
        si.Classifier(si.Graph.from_spec("complete:9")).enumerate_isomorphism_classes()
    assert info.value.code == "TooLarge"
