"""Smoke tests for the python bindings: build a tiny pipeline end to end."""

import math

import pytest

import graphiq


def test_synthesize_and_extract():
    face = graphiq.synthesize_face("happy", noise=0.0, seed=1)
    assert len(face) == 68
    assert face.label == "happy"
    mouth = graphiq.extract_mouth(face)
    assert len(mouth) == 20
    assert mouth.points[0] == face.points[48]


def test_graphs_and_encoding():
    mouth = graphiq.extract_mouth(graphiq.synthesize_face("sad", noise=1.0, seed=3))
    idx = graphiq.sample_vertex_indices(20, 6, seed=9)
    sub = graphiq.select_vertices(mouth, idx)
    complete = graphiq.complete_graph(sub)
    meshed = graphiq.delaunay_graph(sub)
    assert complete.n == 6 and meshed.n == 6
    assert len(meshed.edges()) <= len(complete.edges()) == 15

    vec = graphiq.adjacency_vector(complete)
    assert len(vec.entries) == 15
    amp = graphiq.encode(vec)
    assert amp.qubit_count == 4
    assert math.isclose(sum(abs(a) ** 2 for a in amp.amplitudes), 1.0, abs_tol=1e-12)

    prep = graphiq.synthesize_state_prep(amp)
    assert len(prep) > 0
    assert "ry" in prep.to_text()


def test_edge_index_pinned():
    assert graphiq.edge_index(1, 2, 4) == 1
    assert graphiq.edge_index(3, 4, 4) == 6
    with pytest.raises(ValueError):
        graphiq.edge_index(2, 2, 4)


def test_classification_pipeline():
    idx = graphiq.sample_vertex_indices(20, 8, seed=5)

    def vec(kind, seed):
        face = graphiq.synthesize_face(kind, noise=1.4, seed=seed)
        sub = graphiq.select_vertices(graphiq.extract_mouth(face), idx)
        return graphiq.adjacency_vector(graphiq.complete_graph(sub))

    test, sad, happy = vec("happy", 11), vec("sad", 12), vec("happy", 13)
    p = graphiq.exact_class_probability(test, sad, happy)
    assert 0.0 <= p <= 1.0
    assert p > 0.5  # the happy test face is closer to the happy member

    assert graphiq.classify_single_face(test, sad, happy, backend="classical") == "happy"
    assert graphiq.classify_single_face(test, sad, happy, backend="quantum-exact") == "happy"
    shots = graphiq.classify_single_face(
        test, sad, happy, backend="quantum-shots", shots=2048, seed=4
    )
    assert shots in ("happy", "unknown")

    assert graphiq.frobenius_distance(test, test) == 0.0


def test_run_experiment_small():
    faces = [graphiq.synthesize_face("happy", noise=1.4, seed=100 + i) for i in range(6)]
    faces += [graphiq.synthesize_face("sad", noise=1.4, seed=200 + i) for i in range(6)]
    rows = graphiq.run_experiment(
        faces,
        n_values=[4],
        subsets_per_n=2,
        test_faces=3,
        training_pairs=4,
        backends=["classical"],
        strategies=["complete"],
        seed=3,
    )
    assert len(rows) == 1
    row = rows[0]
    assert row["n"] == 4
    assert 0.0 <= row["single_mean"] <= 1.0
    assert row["item_count"] == 12


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        graphiq.encode(graphiq.AdjacencyVector(3, [0.0, 0.0, 0.0]))
