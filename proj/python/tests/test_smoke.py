import math

import braidstab as bs


def test_hamiltonian_and_flow():
    # rotation preset: H = c (r^2 - 1) / 2
    assert abs(bs.hamiltonian_value("rotation", {"c": 2.0}, 0.0, 0.0, 0.0) + 1.0) < 1e-12
    # quarter-turn rotation sends (1, 0) near (0, -1)
    pts = bs.integrate("quadratic", {"c": math.pi / 2}, 1.0, 0.0, 0.0, 1.0, 1e-3)
    t, x, y = pts[-1]
    assert abs(t - 1.0) < 1e-12
    assert math.hypot(x - 0.0, y + 1.0) < 1e-5


def test_hofer_norm_of_bump():
    norm = bs.hofer_norm("bump", {"amp": 2.5, "cx": 0.25, "cy": 0.0, "radius": 0.2}, 16, 129)
    assert abs(norm - 2.5) < 1e-5


def test_orbit_finder_rotation():
    orbits = bs.find_periodic_points("rotation", {"c": 1.0}, 1, 16, 0.85)
    assert len(orbits) == 1
    x, y = orbits[0]["seed"]
    assert math.hypot(x, y) < 1e-7
    assert abs(orbits[0]["action"] + 0.5) < 1e-9


def test_braid_words_and_conjugacy():
    word = bs.braid_word_of_rotation([0.1, 0.1 + 2 * math.pi / 3, 0.1 + 4 * math.pi / 3])
    assert len(word.split()) == 6  # full twist on 3 strands
    assert bs.words_equal("1 2 1", "2 1 2", 3)
    assert not bs.words_equal("1 2", "2 1", 3)
    res = bs.are_conjugate("1 2", "2 1", 3)
    assert res["answer"] == "yes"


def test_gamma_estimate():
    est = bs.gamma_estimate("1 -2", 3, 18)
    assert 0.952 <= est["rate"] <= 0.973
    low = bs.gamma_estimate("1 2", 3, 12)
    assert low["rate"] <= 0.05


def test_symbolic_q():
    assert bs.build_q(3) == [3, 2, 1, 2, 1, 2, 3, 2]
    rep = bs.verify_q_structure(5)
    assert rep["all_pass"]
    assert rep["period"] == 24
    demo = bs.q_braid_gamma(4, 10)
    assert demo["gamma"] >= math.log(2.0) - 0.1


def test_gf2_corpus():
    res = bs.gf2_corpus(50, 42)
    assert res["constructed_ok"] == res["total"] == 50
    assert res["failures"] == 0
