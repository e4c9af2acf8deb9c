import math

import numpy as np
import pytest

from gravlayout import (
    Graph,
    LayoutConfig,
    LayoutState,
    Schedule,
    attractive_force,
    centroid,
    gravity_force,
    initialize_positions,
    net_impulse,
    normalize_mass,
    repulsive_force,
    run_layout,
    schedule_gamma,
    step,
    terminal_gamma,
    uniform_centrality,
)
from oracles import random_graph


def uniform_mass(g):
    return normalize_mass(uniform_centrality(g))


def test_repulsive_examples():
    assert np.allclose(repulsive_force((0, 0), (80, 0), 80.0), (80.0, 0.0))
    assert np.allclose(repulsive_force((0, 0), (160, 0), 80.0), (40.0, 0.0))


def test_repulsive_antisymmetry():
    rng = np.random.default_rng(2)
    for _ in range(30):
        pu, pv = rng.uniform(-100, 100, (2, 2))
        f = repulsive_force(pu, pv, 80.0)
        assert np.allclose(f, -repulsive_force(pv, pu, 80.0))
        assert np.linalg.norm(f) == pytest.approx(80.0**2 / np.linalg.norm(pv - pu))


def test_repulsive_coincident_raises():
    with pytest.raises(ValueError):
        repulsive_force((1, 1), (1, 1), 80.0)


def test_attractive_examples():
    assert np.allclose(attractive_force((0, 0), (80, 0), 80.0), (-80.0, 0.0))
    assert np.allclose(attractive_force((0, 0), (0, 0), 80.0), (0.0, 0.0))
    f = attractive_force((0, 0), (40, 0), 80.0)
    assert np.linalg.norm(f) == pytest.approx(20.0)


def test_attractive_antisymmetry():
    rng = np.random.default_rng(3)
    for _ in range(30):
        pu, pv = rng.uniform(-100, 100, (2, 2))
        assert np.allclose(attractive_force(pu, pv, 80.0), -attractive_force(pv, pu, 80.0))


def test_forces_cancel_at_natural_length():
    pu, pv = np.array([0.0, 0.0]), np.array([80.0, 0.0])
    total = repulsive_force(pu, pv, 80.0) + attractive_force(pu, pv, 80.0)
    assert np.all(total == 0.0)


def test_centroid():
    assert np.allclose(centroid([(0, 0), (2, 0)]), (1.0, 0.0))
    assert np.allclose(centroid([(3, 4)]), (3.0, 4.0))
    assert np.allclose(centroid([(1, 1), (-1, 1), (1, -1), (-1, -1)]), (0.0, 0.0))
    with pytest.raises(ValueError):
        centroid(np.empty((0, 2)))


def test_gravity_force():
    assert np.allclose(gravity_force((10, 0), (0, 0), 1.0, 0.2), (-2.0, 0.0))
    assert np.allclose(gravity_force((5, 7), (1, 2), 3.0, 0.0), (0.0, 0.0))
    assert np.allclose(gravity_force((4, 4), (4, 4), 2.0, 1.5), (0.0, 0.0))


def test_schedule_stepped_by_iteration():
    cfg = LayoutConfig()
    state = LayoutState(positions=np.zeros((1, 2)))
    assert schedule_gamma(199, state, cfg) == 0.0
    assert schedule_gamma(200, state, cfg) == pytest.approx(0.2)
    assert schedule_gamma(1000, state, cfg) == pytest.approx(1.0)
    assert schedule_gamma(3000, state, cfg) == pytest.approx(2.5)


def test_schedule_constant_and_none():
    state = LayoutState(positions=np.zeros((1, 2)))
    cfg = LayoutConfig(schedule=Schedule.CONSTANT, gamma_const=2.5)
    assert schedule_gamma(0, state, cfg) == 2.5
    assert schedule_gamma(99999, state, cfg) == 2.5
    cfg = LayoutConfig(schedule=Schedule.NONE)
    assert schedule_gamma(500, state, cfg) == 0.0


def test_schedule_stepped_by_equilibrium():
    cfg = LayoutConfig(schedule=Schedule.STEPPED_EQUILIBRIUM, equilibrium_eps=1.0)
    busy = LayoutState(positions=np.zeros((1, 2)), gamma=0.4, last_max_impulse=5.0)
    assert schedule_gamma(10, busy, cfg) == pytest.approx(0.4)
    settled = LayoutState(positions=np.zeros((1, 2)), gamma=0.4, last_max_impulse=0.5)
    assert schedule_gamma(10, settled, cfg) == pytest.approx(0.6)
    capped = LayoutState(positions=np.zeros((1, 2)), gamma=2.5, last_max_impulse=0.0)
    assert schedule_gamma(10, capped, cfg) == pytest.approx(2.5)


def test_terminal_gamma():
    assert terminal_gamma(LayoutConfig()) == 2.5
    assert terminal_gamma(LayoutConfig(schedule=Schedule.NONE)) == 0.0
    assert terminal_gamma(LayoutConfig(schedule=Schedule.CONSTANT, gamma_const=1.2)) == 1.2


def test_config_validation():
    with pytest.raises(ValueError):
        LayoutConfig(k=0)
    with pytest.raises(ValueError):
        LayoutConfig(sigma=-1)
    with pytest.raises(ValueError):
        LayoutConfig(block_len=0)
    with pytest.raises(ValueError):
        LayoutConfig(equilibrium_eps=0.0)
    LayoutConfig(gamma_max=0.0)  # allowed: disables gravity under stepped schedule


def test_initialize_deterministic_and_in_range():
    g = Graph(400)
    a = initialize_positions(g, seed=9, k=80.0)
    b = initialize_positions(g, seed=9, k=80.0)
    assert np.array_equal(a, b)
    assert a.shape == (400, 2)
    assert np.all(np.abs(a) <= 0.5 * 80.0 * math.sqrt(400))
    assert initialize_positions(Graph(0), 1, 80.0).shape == (0, 2)


def test_net_impulse_k2_at_natural_length():
    g = Graph.from_edges(2, [(0, 1)])
    state = LayoutState(positions=np.array([[0.0, 0.0], [80.0, 0.0]]), gamma=0.0)
    cfg = LayoutConfig(schedule=Schedule.NONE)
    for v in (0, 1):
        assert np.all(net_impulse(v, state, g, uniform_mass(g), cfg) == 0.0)


def test_net_impulse_single_vertex():
    g = Graph(1)
    state = LayoutState(positions=np.array([[5.0, 5.0]]), gamma=2.0)
    imp = net_impulse(0, state, g, uniform_mass(g), LayoutConfig())
    assert np.allclose(imp, 0.0)


def test_net_impulse_isolated_vertex_is_gravity_plus_repulsion():
    g = Graph.from_edges(3, [(0, 1)])  # vertex 2 isolated
    pos = np.array([[0.0, 0.0], [50.0, 0.0], [10.0, 40.0]])
    state = LayoutState(positions=pos, gamma=1.5)
    mass = normalize_mass(uniform_centrality(g))
    cfg = LayoutConfig()
    got = net_impulse(2, state, g, mass, cfg)
    want = (
        repulsive_force(pos[0], pos[2], cfg.k)
        + repulsive_force(pos[1], pos[2], cfg.k)
        + gravity_force(pos[2], centroid(pos), 1.0, 1.5)
    )
    assert np.allclose(got, want, atol=1e-12)


def test_step_clamp_rule():
    # two unconnected vertices at distance d feel repulsion k^2/d each
    cfg = LayoutConfig(schedule=Schedule.NONE)
    for d, expected in ((256.0, 1.0), (1600.0, 0.4)):  # impulses 25 and 4
        g = Graph(2)
        state = LayoutState(positions=np.array([[0.0, 0.0], [d, 0.0]]))
        nxt = step(state, g, uniform_mass(g), cfg)
        moved = np.linalg.norm(nxt.positions - state.positions, axis=1)
        assert moved == pytest.approx([expected, expected])


def test_step_zero_impulse_fixed_point():
    g = Graph.from_edges(2, [(0, 1)])
    state = LayoutState(positions=np.array([[0.0, 0.0], [80.0, 0.0]]))
    nxt = step(state, g, uniform_mass(g), LayoutConfig(schedule=Schedule.NONE))
    assert np.array_equal(nxt.positions, state.positions)
    assert nxt.t == state.t + 1
    assert nxt.last_max_impulse == 0.0


def test_step_displacement_never_exceeds_cap():
    rng = np.random.default_rng(31)
    for _ in range(10):
        g = random_graph(rng, 2, 14)
        cfg = LayoutConfig(schedule=Schedule.CONSTANT, gamma_const=2.5)
        state = LayoutState(
            positions=rng.uniform(-50, 50, (g.vertex_count, 2)), gamma=2.5
        )
        mass = uniform_mass(g)
        for _ in range(5):
            nxt = step(state, g, mass, cfg)
            moved = np.linalg.norm(nxt.positions - state.positions, axis=1)
            assert np.all(moved <= cfg.sigma * cfg.i_max + 1e-12)
            state = nxt


def test_step_matches_scalar_reference():
    rng = np.random.default_rng(41)
    g = random_graph(rng, 8, 14)
    mass = uniform_mass(g)
    cfg = LayoutConfig(schedule=Schedule.CONSTANT, gamma_const=1.3)
    state = LayoutState(positions=rng.uniform(-300, 300, (g.vertex_count, 2)), gamma=1.3)
    nxt = step(state, g, mass, cfg)
    for v in range(g.vertex_count):
        imp = net_impulse(v, state, g, mass, cfg)
        mag = float(np.linalg.norm(imp))
        want = cfg.sigma * imp * min(1.0, cfg.i_max / mag) if mag else np.zeros(2)
        got = nxt.positions[v] - state.positions[v]
        assert np.linalg.norm(got - want) <= 1e-9


def test_gamma_monotone_and_capped():
    g = random_graph(np.random.default_rng(5), 8, 12)
    mass = uniform_mass(g)
    for schedule in (Schedule.STEPPED_ITERATION, Schedule.STEPPED_EQUILIBRIUM):
        cfg = LayoutConfig(schedule=schedule, block_len=5, max_iterations=60, gamma_max=0.6)
        state = LayoutState(positions=initialize_positions(g, 1, cfg.k))
        prev = state.gamma
        while state.t < cfg.max_iterations:
            state = step(state, g, mass, cfg)
            assert state.gamma >= prev
            assert state.gamma <= cfg.gamma_max
            prev = state.gamma


def test_run_layout_k2_natural_length():
    g = Graph.from_edges(2, [(0, 1)])
    cfg = LayoutConfig(schedule=Schedule.NONE, seed=17)
    pos = run_layout(g, uniform_mass(g), cfg)
    length = np.linalg.norm(pos[0] - pos[1])
    assert 0.95 * 80 <= length <= 1.05 * 80


def test_run_layout_single_vertex_stays_put():
    g = Graph(1)
    cfg = LayoutConfig(seed=2, max_iterations=50)
    init = initialize_positions(g, cfg.seed, cfg.k)
    pos = run_layout(g, uniform_mass(g), cfg)
    assert np.allclose(pos, init)


def test_run_layout_empty_graph():
    g = Graph(0)
    pos = run_layout(g, uniform_mass(g), LayoutConfig())
    assert pos.shape == (0, 2)


def test_run_layout_deterministic():
    g = random_graph(np.random.default_rng(8), 10, 16)
    mass = uniform_mass(g)
    cfg = LayoutConfig(seed=4, max_iterations=150)
    assert np.array_equal(run_layout(g, mass, cfg), run_layout(g, mass, cfg))


def test_run_layout_matches_manual_step_loop():
    g = random_graph(np.random.default_rng(9), 8, 12)
    mass = uniform_mass(g)
    cfg = LayoutConfig(seed=6, max_iterations=80)
    auto = run_layout(g, mass, cfg)
    state = LayoutState(positions=initialize_positions(g, cfg.seed, cfg.k))
    while state.t < cfg.max_iterations:
        state = step(state, g, mass, cfg)
    assert np.array_equal(auto, state.positions)


def test_translation_equivariance():
    g = random_graph(np.random.default_rng(12), 8, 12)
    mass = uniform_mass(g)
    cfg = LayoutConfig(seed=0, max_iterations=40, equilibrium_eps=1e-12)
    init = initialize_positions(g, 3, cfg.k)
    shift = np.array([123.0, -77.0])
    base = run_layout(g, mass, cfg, initial=init)
    moved = run_layout(g, mass, cfg, initial=init + shift)
    assert np.allclose(moved, base + shift, atol=1e-6)


def test_rotation_equivariance():
    g = random_graph(np.random.default_rng(14), 8, 12)
    mass = uniform_mass(g)
    cfg = LayoutConfig(seed=0, max_iterations=40, equilibrium_eps=1e-12)
    init = initialize_positions(g, 5, cfg.k)
    theta = 0.83
    rot = np.array([[math.cos(theta), -math.sin(theta)], [math.sin(theta), math.cos(theta)]])
    base = run_layout(g, mass, cfg, initial=init)
    rotated = run_layout(g, mass, cfg, initial=init @ rot.T)
    assert np.allclose(rotated, base @ rot.T, atol=1e-6)


def test_jitter_separates_coincident_vertices():
    g = Graph(3)
    pos = np.array([[0.0, 0.0], [0.0, 0.0], [50.0, 0.0]])
    state = LayoutState(positions=pos)
    nxt = step(state, g, uniform_mass(g), LayoutConfig(schedule=Schedule.NONE))
    assert np.all(np.isfinite(nxt.positions))
    assert np.linalg.norm(nxt.positions[0] - nxt.positions[1]) > 0


def test_jitter_never_moves_frozen_vertices():
    g = Graph(3)
    pos = np.array([[0.0, 0.0], [0.0, 0.0], [50.0, 0.0]])
    frozen = np.array([True, False, True])
    state = LayoutState(positions=pos)
    nxt = step(state, g, uniform_mass(g), LayoutConfig(schedule=Schedule.NONE), frozen=frozen)
    assert np.array_equal(nxt.positions[0], pos[0])
    assert np.array_equal(nxt.positions[2], pos[2])
    assert not np.array_equal(nxt.positions[1], pos[1])
