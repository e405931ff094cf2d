#include <doctest.h>

#include "quatode/adjoint.hpp"
#include "quatode/errors.hpp"
#include "quatode/qmatrix.hpp"
#include "test_support.hpp"

using namespace quatode;
using namespace quatode::testing;

TEST_CASE("matrix basics") {
    Rng rng(10);
    const QMatrix a = rng.matrix(3, 3);
    CHECK(approx_equal(mat_mul(QMatrix::identity(3), a), a));
    CHECK(approx_equal(mat_mul(a, QMatrix::identity(3)), a));

    CHECK(approx_equal(dagger(QMatrix{{kI}}), QMatrix{{-kI}}));
    CHECK(approx_equal(dagger(dagger(a)), a));
    const QMatrix b = rng.matrix(3, 3);
    CHECK(approx_equal(dagger(mat_mul(a, b)), mat_mul(dagger(b), dagger(a)), 1e-12));

    // [[j, i], [0, j]] (1,0)^T = (j, 0)^T
    const QMatrix m{{kJ, kI}, {Quaternion{}, kJ}};
    const QVector x{Quaternion{1.0}, Quaternion{}};
    CHECK(approx_equal(mat_vec(m, x), QVector{kJ, Quaternion{}}));

    CHECK_THROWS_AS(mat_mul(rng.matrix(2, 3), rng.matrix(2, 3)), DimensionError);
    CHECK_THROWS_AS(mat_vec(rng.matrix(2, 3), rng.vector(2)), DimensionError);
}

TEST_CASE("inner product positivity") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const QVector v = rng.vector(4);
        const Quaternion p = inner(v, v);
        CHECK(imag_norm(p) <= 1e-12);
        CHECK(p.w >= 0.0);
    }
}

TEST_CASE("phi_mat structure and homomorphism") {
    // phi([[j]]) = [[0, 1], [-1, 0]]
    const ComplexMatrix pj = phi_mat(QMatrix{{kJ}});
    CHECK(std::abs(pj(0, 0)) <= 1e-15);
    CHECK(std::abs(pj(0, 1) - Complex{1.0, 0.0}) <= 1e-15);
    CHECK(std::abs(pj(1, 0) - Complex{-1.0, 0.0}) <= 1e-15);
    CHECK(std::abs(pj(1, 1)) <= 1e-15);

    CHECK((phi_mat(QMatrix::identity(2)) - ComplexMatrix::Identity(4, 4)).norm() <= 1e-15);

    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const QMatrix a = rng.matrix(3, 3);
        const QMatrix b = rng.matrix(3, 3);
        CHECK((phi_mat(a + b) - (phi_mat(a) + phi_mat(b))).norm() <= 1e-11);
        CHECK((phi_mat(mat_mul(a, b)) - phi_mat(a) * phi_mat(b)).norm() <= 1e-11);
        CHECK((phi_mat(dagger(a)) - phi_mat(a).adjoint()).norm() <= 1e-11);
        CHECK(approx_equal(unphi_mat(phi_mat(a)), a, 1e-14));

        const QVector v = rng.vector(3);
        CHECK((phi_mat(a) * phi_vec(v) - phi_vec(mat_vec(a, v))).norm() <= 1e-11);
    }
}

TEST_CASE("phi_vec reference values") {
    // phi((1,0)^T) = (1,0,0,0)^T
    ComplexVector e1(4);
    e1 << Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0};
    CHECK((phi_vec(QVector{Quaternion{1.0}, Quaternion{}}) - e1).norm() <= 1e-15);

    // (0, 1, 1/2, i)^T pulls back to (-j/2, 1+k)^T
    ComplexVector pu(4);
    pu << Complex{0, 0}, Complex{1, 0}, Complex{0.5, 0}, Complex{0, 1};
    const QVector u = unphi_vec(pu);
    CHECK(approx_equal(u, QVector{-0.5 * kJ, Quaternion{1.0} + kK}, 1e-15));
    CHECK((phi_vec(u) - pu).norm() <= 1e-15);

    // star vector of phi(v) is phi_vec_star(v)
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const QVector v = rng.vector(3);
        CHECK(approx_equal(unphi_vec(phi_vec(v)), v, 1e-14));
        CHECK((star_vec(phi_vec(v)) - phi_vec_star(v)).norm() <= 1e-14);
        // unphi of the star image is v * (-j), the same eigenline
        CHECK(approx_equal(unphi_vec(phi_vec_star(v)), v * (-kJ), 1e-14));
    }
}

TEST_CASE("adjoint pair identity") {
    // if phi(A)phi(v) = phi(u) + phi(v) lambda then
    // phi(A)phi(v)* = phi(u)* + phi(v)* conj(lambda); construct u from A, v.
    Rng rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        const QMatrix a = rng.matrix(3, 3);
        const QVector v = rng.vector(3);
        const Complex lambda{rng.real(), rng.real()};
        const Quaternion ql{lambda.real(), lambda.imag()};
        const QVector u = mat_vec(a, v) - v * ql;
        CHECK((phi_mat(a) * phi_vec(v) - (phi_vec(u) + phi_vec(v) * lambda)).norm() <= 1e-12);
        CHECK((phi_mat(a) * phi_vec_star(v) -
               (phi_vec_star(u) + phi_vec_star(v) * std::conj(lambda)))
                  .norm() <= 1e-12);
    }
}

TEST_CASE("q_inverse") {
    CHECK(approx_equal(q_inverse(QMatrix::identity(3)), QMatrix::identity(3), 1e-13));

    // [[1+k]]^{-1} = [[(1-k)/2]]
    CHECK(approx_equal(q_inverse(QMatrix{{Quaternion{1, 0, 0, 1}}}),
                       QMatrix{{Quaternion{0.5, 0, 0, -0.5}}}, 1e-13));

    // M(0)^{-1} of the length-2 chain example
    const QMatrix m{{Quaternion{1.0}, -0.5 * kJ}, {Quaternion{}, Quaternion{1, 0, 0, 1}}};
    const QMatrix expect{{Quaternion{1.0}, 0.25 * (kJ - kI)},
                         {Quaternion{}, Quaternion{0.5, 0, 0, -0.5}}};
    const QMatrix inv = q_inverse(m);
    CHECK(approx_equal(inv, expect, 1e-13));
    CHECK(approx_equal(mat_mul(m, inv), QMatrix::identity(2), 1e-13));
    CHECK(approx_equal(mat_mul(inv, m), QMatrix::identity(2), 1e-13));

    Rng rng(15);
    for (int trial = 0; trial < 30; ++trial) {
        const QMatrix a = rng.matrix(4, 4);
        const QMatrix ainv = q_inverse(a);
        CHECK(approx_equal(mat_mul(a, ainv), QMatrix::identity(4), 1e-9));
        CHECK(approx_equal(mat_mul(ainv, a), QMatrix::identity(4), 1e-9));
        // dagger and inverse commute
        CHECK(approx_equal(q_inverse(dagger(a)), dagger(ainv), 1e-9));
    }

    QMatrix singular(2, 2);
    singular(0, 0) = kI;
    singular(0, 1) = kI;
    singular(1, 0) = kJ;
    singular(1, 1) = kJ;
    CHECK_THROWS_AS(q_inverse(singular), SingularMatrixError);
}

TEST_CASE("q_solve") {
    const QVector b{kI, kJ};
    CHECK(approx_equal(q_solve(QMatrix::identity(2), b), b, 1e-13));

    Rng rng(16);
    for (int trial = 0; trial < 30; ++trial) {
        const QMatrix a = rng.matrix(3, 3);
        const QVector x = rng.vector(3);
        const QVector solved = q_solve(a, mat_vec(a, x));
        CHECK(norm(solved - x) <= 1e-9 * std::max(1.0, norm(x)));
        CHECK(norm(mat_vec(a, solved) - mat_vec(a, x)) <= 1e-9);
    }

    CHECK_THROWS_AS(q_solve(rng.matrix(3, 3), rng.vector(2)), DimensionError);
    CHECK_THROWS_AS(q_solve(QMatrix::zero(2, 2), b), SingularMatrixError);
}

TEST_CASE("chain equation through phi (example 2x2 system)") {
    // A = [[i, 1], [0, j]]: solving (phi(A) - i I) phi(u) = phi(v) with
    // v = (1,0)^T recovers u = (-j/2, 1+k)^T up to eigenvector freedom.
    const QMatrix a{{kI, Quaternion{1.0}}, {Quaternion{}, kJ}};
    const QVector v{Quaternion{1.0}, Quaternion{}};
    ComplexMatrix b = phi_mat(a) - Complex{0.0, 1.0} * ComplexMatrix::Identity(4, 4);
    auto [sol, residual] = detail::least_squares(b, phi_vec(v));
    CHECK(residual <= 1e-10);
    const QVector u = unphi_vec(sol);
    const QVector expected{-0.5 * kJ, Quaternion{1, 0, 0, 1}};
    // difference must be an eigenvector for i (a complex multiple of v here)
    const QVector diff = u - expected;
    CHECK(norm(mat_vec(a, diff) - diff * kI) <= 1e-9);
    // and u itself satisfies A u - u i = v
    CHECK(norm(mat_vec(a, u) - u * kI - v) <= 1e-9);
}
