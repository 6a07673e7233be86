import numpy as np
import pytest
import scipy.special
import scipy.stats
from hypothesis import given, settings
from hypothesis import strategies as st

from lawcluster import (
    DataSet,
    Grid,
    ecdf,
    distance_matrix,
    kolmogorov_sf,
    ks_gof_test,
    ks_two_sample,
    pair_distance,
    sample_directions,
)
from lawcluster.distance import PairDistance, ks_columns
from lawcluster.errors import DirectionCountMismatch, EmptyInput, TooFewSets
from lawcluster.projection import ProjectionSet


def brute_force_ks(x, y, n_points=10_000):
    """sup |F_x - F_y| over a dense evaluation grid, by direct counting."""
    x, y = np.asarray(x), np.asarray(y)
    lo = min(x.min(), y.min()) - 1.0
    hi = max(x.max(), y.max()) + 1.0
    t = np.linspace(lo, hi, n_points)
    fx = (x[None, :] <= t[:, None]).sum(axis=1) / x.size
    fy = (y[None, :] <= t[:, None]).sum(axis=1) / y.size
    return float(np.max(np.abs(fx - fy)))


def lattice_pair(rng, max_size=64):
    """Integer-valued samples: the ECDFs are constant on [k, k+1), so a grid
    finer than 1 sees every value the supremum can take."""
    nx, ny = rng.integers(1, max_size + 1, size=2)
    spread = rng.choice([5, 50, 3000])
    return (
        rng.integers(-spread, spread + 1, nx).astype(float),
        rng.integers(-spread, spread + 1, ny).astype(float),
    )


def test_ecdf_counts():
    f = ecdf([1, 2, 3])
    assert f(2) == pytest.approx(2 / 3)
    assert f(0.5) == 0.0
    assert f(5) == 1.0
    assert f(1) == pytest.approx(1 / 3)  # right-continuous


def test_ecdf_empty():
    with pytest.raises(EmptyInput):
        ecdf([])


def test_ks_identical():
    x = np.array([0.3, -1.0, 2.0, 2.0])
    assert ks_two_sample(x, x) == 0.0


def test_ks_disjoint():
    assert ks_two_sample([1, 2], [3, 4]) == 1.0


def test_ks_interleaved():
    # pooled 1,2,3,4: F_x - F_y = 1/2, 0, 1/2, 0
    assert ks_two_sample([1, 3], [2, 4]) == 0.5


def test_ks_ties_evaluated_after_all_jumps():
    # at t = 1 both ECDFs jump to 1/2: no gap must be reported there
    assert ks_two_sample([1, 2], [1, 3]) == 0.5
    assert ks_two_sample([1, 1], [1, 1]) == 0.0


def test_ks_empty():
    with pytest.raises(EmptyInput):
        ks_two_sample([], [1.0])


def test_ks_matches_dense_grid_oracle():
    rng = np.random.default_rng(0)
    for _ in range(200):
        x, y = lattice_pair(rng)
        assert abs(ks_two_sample(x, y) - brute_force_ks(x, y)) <= 1e-12


def test_ks_matches_scipy_on_continuous_data():
    rng = np.random.default_rng(1)
    for _ in range(100):
        x = rng.standard_normal(rng.integers(1, 80))
        y = rng.standard_normal(rng.integers(1, 80)) * 1.5
        ref = scipy.stats.ks_2samp(x, y).statistic
        assert ks_two_sample(x, y) == pytest.approx(ref, abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.integers(-20, 20), min_size=1, max_size=30),
    st.lists(st.integers(-20, 20), min_size=1, max_size=30),
    st.floats(0.01, 100.0),
    st.floats(-100.0, 100.0),
)
def test_ks_invariant_under_common_affine_map(x, y, a, b):
    x, y = np.array(x, float), np.array(y, float)
    # monotone map; integers keep distinct values distinct after rounding
    assert ks_two_sample(a * x + b, a * y + b) == ks_two_sample(x, y)


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=40),
    st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=40),
)
def test_ks_in_unit_interval_and_symmetric(x, y):
    d = ks_two_sample(x, y)
    assert 0.0 <= d <= 1.0
    assert d == ks_two_sample(y, x)


def test_columnwise_ks_equals_scalar_ks():
    rng = np.random.default_rng(2)
    for _ in range(50):
        nu, nv, M = rng.integers(1, 40, size=3)
        u = rng.integers(0, 6, (nu, M)).astype(float)
        v = rng.normal(size=(nv, M)).round(1)
        got = ks_columns(u, v)
        want = [ks_two_sample(u[:, m], v[:, m]) for m in range(M)]
        np.testing.assert_array_equal(got, want)


def _proj(values, name):
    return ProjectionSet(np.asarray(values, float), name)


def test_pair_distance_identical():
    rng = np.random.default_rng(3)
    u = _proj(rng.normal(size=(10, 4)), "u")
    pd = pair_distance(u, u)
    assert pd.mean == 0.0
    assert pd.variance == 0.0


def test_pair_distance_hand_values():
    # shifting {1..5} by 1 and 2 gives KS distances 0.2 and 0.4
    base = np.arange(1.0, 6.0)
    u = _proj(np.column_stack([base, base]), "u")
    v = _proj(np.column_stack([base + 1, base + 2]), "v")
    pd = pair_distance(u, v)
    np.testing.assert_allclose(pd.per_direction, [0.2, 0.4])
    assert pd.mean == pytest.approx(0.3, abs=1e-12)
    assert pd.variance == pytest.approx(0.02, abs=1e-12)


def test_pair_distance_single_direction():
    pd = PairDistance.from_per_direction([0.7])
    assert pd.mean == 0.7
    assert pd.variance == 0.0


def test_pair_distance_direction_mismatch():
    with pytest.raises(DirectionCountMismatch):
        pair_distance(_proj(np.zeros((3, 2)), "u"), _proj(np.zeros((3, 3)), "v"))


def test_pair_distance_summary_consistency():
    rng = np.random.default_rng(4)
    pd = pair_distance(_proj(rng.normal(size=(30, 25)), "u"), _proj(rng.normal(size=(20, 25)), "v"))
    d = pd.per_direction
    assert abs(pd.mean - d.sum() / d.size) <= 1e-12
    assert abs(pd.variance - ((d - d.mean()) ** 2).sum() / (d.size - 1)) <= 1e-12


def test_triangle_surrogate():
    rng = np.random.default_rng(5)
    for _ in range(30):
        M = 20
        u, v, w = (_proj(rng.normal(s, 1, size=(rng.integers(2, 30), M)), n) for s, n in [(0, "u"), (0.5, "v"), (1, "w")])
        assert pair_distance(u, v).mean <= pair_distance(u, w).mean + pair_distance(w, v).mean + 2e-12


def _sets(rng, grid, scales, N=20):
    return [DataSet(f"s{i}", s * rng.standard_normal((N, grid.size)), grid) for i, s in enumerate(scales)]


def test_distance_matrix_structure(grid80, rng):
    sets = _sets(rng, grid80, [1, 1, 2, 2, 2, 4, 4])
    m = distance_matrix(sets, sample_directions(grid80, 10, seed=1))
    assert m.dist.shape == (7, 7)
    np.testing.assert_array_equal(m.dist, m.dist.T)
    np.testing.assert_array_equal(np.diag(m.dist), 0.0)
    off = m.dist[~np.eye(7, dtype=bool)]
    assert np.all((off >= 0) & (off <= 1))
    assert np.count_nonzero(np.triu(m.dist, 1)) == 21


def test_distance_matrix_identical_sets(grid80, rng):
    values = rng.standard_normal((15, 80))
    sets = [DataSet("a", values, grid80), DataSet("b", values.copy(), grid80)]
    m = distance_matrix(sets, sample_directions(grid80, 8, seed=3))
    assert m["a", "b"] == 0.0


def test_distance_matrix_parallel_equals_serial(grid80, rng):
    sets = _sets(rng, grid80, [1, 2, 3, 4, 5])
    dirs = sample_directions(grid80, 30, seed=9)
    a = distance_matrix(sets, dirs)
    b = distance_matrix(sets, dirs, workers=4)
    np.testing.assert_array_equal(a.dist, b.dist)
    np.testing.assert_array_equal(a.var, b.var)


def test_distance_matrix_unequal_sizes(grid80, rng):
    sets = [
        DataSet("a", rng.standard_normal((10, 80)), grid80),
        DataSet("b", rng.standard_normal((25, 80)), grid80),
    ]
    dirs = sample_directions(grid80, 6, seed=0)
    m = distance_matrix(sets, dirs)
    from lawcluster import project_set

    pu, pv = project_set(sets[0], dirs), project_set(sets[1], dirs)
    expected = np.mean([ks_two_sample(pu.values[:, k], pv.values[:, k]) for k in range(6)])
    assert m["a", "b"] == pytest.approx(expected, abs=1e-12)


def test_distance_matrix_needs_two_sets(grid80, rng):
    with pytest.raises(TooFewSets):
        distance_matrix(_sets(rng, grid80, [1]), sample_directions(grid80, 2, seed=0))


def test_distance_matrix_csv(tmp_path, grid80, rng):
    from lawcluster import DistanceMatrix

    m = distance_matrix(_sets(rng, grid80, [1, 2, 3]), sample_directions(grid80, 5, seed=0))
    m.to_csv(tmp_path / "d.csv")
    back = DistanceMatrix.from_csv(tmp_path / "d.csv")
    assert back.labels == m.labels
    np.testing.assert_array_equal(back.dist, m.dist)
    assert (tmp_path / "d.csv").read_text().splitlines()[0] == ",s0,s1,s2"


@pytest.mark.parametrize("x", [0.0, 0.01, 0.1, 0.3, 0.5, 0.8, 1.0, 1.358, 2.0, 3.0, 5.0])
def test_kolmogorov_sf_matches_scipy(x):
    ref = 1.0 if x <= 0.02 else scipy.special.kolmogorov(x)
    assert kolmogorov_sf(x) == pytest.approx(ref, abs=1e-10)


def test_kolmogorov_sf_reference_points():
    assert kolmogorov_sf(0.0) == 1.0
    assert kolmogorov_sf(10.0) <= 1e-12
    # classical 5% critical value; ten terms of the series give 0.0501
    ten_terms = 2 * sum((-1) ** (k - 1) * np.exp(-2 * k * k * 1.358**2) for k in range(1, 11))
    assert kolmogorov_sf(1.358) == pytest.approx(ten_terms, abs=1e-12)
    assert kolmogorov_sf(1.358) == pytest.approx(0.05, abs=2e-3)


def test_gof_identical_samples():
    res = ks_gof_test([1.0, 2.0, 3.0], [1.0, 2.0, 3.0])
    assert res.statistic == 0.0
    assert res.p_value == 1.0


def test_gof_disjoint_pair():
    # N = 2: sqrt(N/2) * 1.0
    res = ks_gof_test([1.0, 2.0], [3.0, 4.0])
    assert res.statistic == 1.0
    assert res.p_value == pytest.approx(kolmogorov_sf(1.0))


def test_gof_unequal_sizes_use_effective_size():
    x = np.arange(6.0)
    y = np.arange(3.0) + 10
    res = ks_gof_test(x, y)
    assert res.statistic == pytest.approx(np.sqrt(6 * 3 / 9) * 1.0)


def test_gof_matches_limiting_kolmogorov_law():
    rng = np.random.default_rng(8)
    x, y = rng.normal(size=200), rng.normal(0.2, 1, size=200)
    res = ks_gof_test(x, y)
    d = scipy.stats.ks_2samp(x, y).statistic
    assert res.statistic == pytest.approx(np.sqrt(100) * d)
    assert res.p_value == pytest.approx(scipy.stats.kstwobign.sf(res.statistic), abs=1e-10)
