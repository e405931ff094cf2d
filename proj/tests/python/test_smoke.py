"""Smoke tests for the Python bindings."""
import math

import pytest

import quatode as q


def qdist(a, b):
    return (a - b).norm() if hasattr(a, "norm") else abs(a - b)


def test_quaternion_algebra():
    i = q.Quaternion(0, 1, 0, 0)
    j = q.Quaternion("j")
    k = q.Quaternion([0, 0, 0, 1])
    assert (i * j - k).norm() <= 1e-15
    assert (j * i + k).norm() <= 1e-15
    assert ((1 + i) * (1 - i) - 2).norm() <= 1e-15
    assert q.parse_quaternion("1-0.5j+2k").to_list() == (1.0, 0.0, -0.5, 2.0)
    assert q.format_quaternion(j) == "j"
    assert (q.qexp(j * math.pi) + 1).norm() <= 1e-12
    assert q.standardize(j).approx_equal(i)
    ok, alpha = q.similar(i, j)
    assert ok
    assert (alpha.inverse() * i * alpha - j).norm() <= 1e-12


def test_determinants_and_independence():
    m = q.QMatrix([["1", "-0.5k"], [0, 1]])
    assert abs(q.ddet(m) - 1.0) <= 1e-12
    assert abs(q.wronskian(q.QMatrix.identity(2)) - 0.5) <= 1e-12

    a = q.QMatrix([["i", "j"], ["k", 1]])
    hand = a[1, 1] * a[0, 0] - a[1, 0] * a[0, 1]
    assert (q.det_p(a) - hand).norm() <= 1e-12

    v = q.QVector(["i", 1])
    assert q.right_independent([v, q.QVector([1, "j"])])
    assert not q.right_independent([v, v * q.Quaternion("1+2i-k")])


def test_adjoint_round_trip():
    v = q.QVector(["1+k", "-0.5j"])
    assert (q.unphi_vec(q.phi_vec(v)) - v).norm() <= 1e-14
    m = q.QMatrix([["i", 1], [0, "j"]])
    inv = q.q_inverse(q.QMatrix([[1, "-0.5j"], [0, "1+k"]]))
    assert (inv[0, 1] - q.Quaternion([0, -0.25, 0.25, 0])).norm() <= 1e-12
    x = q.q_solve(m, q.QVector(["j", "k"]))
    assert (m.mat_vec(x) - q.QVector(["j", "k"])).norm() <= 1e-9


def test_spectra():
    a = q.QMatrix([["i", 1], [0, "1+i"]])
    evs = q.right_eigenvalues(a)
    assert len(evs) == 2
    assert evs[0][0].approx_equal(q.Quaternion(0, 1), 1e-8) and evs[0][1] == 1
    assert evs[1][0].approx_equal(q.Quaternion(1, 1), 1e-8) and evs[1][1] == 1

    vs = q.eigenvectors(a, q.Quaternion(0, 1))
    assert len(vs) == 1
    assert not q.right_independent([vs[0], q.QVector([1, 0])])

    defective = q.QMatrix([["i", 1], [0, "j"]])
    spec = q.full_spectrum(defective)
    assert len(spec.entries) == 1
    assert spec.entries[0].multiplicity == 2
    assert len(spec.entries[0].chains) == 1
    assert len(spec.entries[0].chains[0]) == 2

    u = q.chain_extend(defective, q.Quaternion(0, 1), q.QVector([1, 0]))
    assert u is not None
    residual = defective.mat_vec(u) - u * q.Quaternion(0, 1) - q.QVector([1, 0])
    assert residual.norm() <= 1e-8
    assert q.chain_extend(q.QMatrix.zero(2, 2), 0, q.QVector([1, 0])) is None


def test_fundamental_matrix_and_exp():
    a = q.QMatrix([["i", 1], [0, "1+i"]])
    basis = q.fundamental_matrix(a)
    assert basis.dim == 2
    assert q.ddet(basis.eval(0.0)) > 1e-6
    assert q.fd_residual(lambda t: basis.eval(t), a, [0.0, 0.5, 1.0]) <= 1e-6

    e0 = q.exp_at(a, 0.0) - q.QMatrix.identity(2)
    assert e0.norm() <= 1e-10
    gap = q.exp_at(a, 1.0) - q.exp_series(a, 1.0)
    assert gap.norm() <= 1e-8

    x0 = q.QVector([1, 1])
    x = q.solve_ivp(a, 0.0, x0, 1.0)
    rk = q.rk4_integrate(a, 0.0, x0, 1.0, 1e-4)
    assert (x - rk.state).norm() <= 1e-6
    assert rk.steps == 10000

    fn = q.superpose(basis, q.q_solve(basis.eval(0.0), x0).to_list())
    assert (fn(1.0) - x).norm() <= 1e-9


def test_split_and_diagonal():
    d = q.QMatrix([["j", 0], [0, "j"]])
    n = q.QMatrix([[0, 1], [0, 0]])
    split = q.commuting_split_exp(d, n, 0.5)
    series = q.exp_series(d + n, 0.5)
    assert (split - series).norm() <= 1e-9

    with pytest.raises(ArithmeticError):
        q.commuting_split_exp(q.QMatrix([["i", 0], [0, "j"]]), n, 1.0)

    x = q.solve_diagonal([["j", "j"]], 0.0, q.QVector([1]), 1.0)
    expected = q.qexp(q.Quaternion("j") * 1.5)
    assert (x[0] - expected).norm() <= 1e-10

    with pytest.raises(ArithmeticError):
        q.solve_diagonal([["i", "j"]], 0.0, q.QVector([1]), 1.0)


def test_liouville():
    report = q.liouville_check(q.QMatrix([[0.8]]), 0.0, 1.0)
    brute = math.log(math.exp(2 * 0.8)) / 0.8
    assert abs(report.factor - brute) <= 1e-9
    assert report.max_rel_err <= 1e-9

    traceless = q.QMatrix([["i", 0], [0, "j"]])
    assert q.liouville_check(traceless, 0.0, 1.0).max_rel_err <= 1e-8


def test_error_types():
    with pytest.raises(ValueError):
        q.det_p(q.QMatrix.zero(2, 3))
    with pytest.raises(ValueError):
        q.det_p(q.QMatrix.identity(9))
    with pytest.raises(ArithmeticError):
        q.q_inverse(q.QMatrix.zero(2, 2))
    with pytest.raises(ValueError):
        q.parse_quaternion("nonsense")
