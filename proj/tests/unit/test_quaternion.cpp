#include <doctest.h>

#include <cmath>

#include "quatode/errors.hpp"
#include "quatode/quaternion.hpp"
#include "test_support.hpp"

using namespace quatode;
using namespace quatode::testing;

TEST_CASE("multiplication table") {
    CHECK(approx_equal(kI * kJ, kK));
    CHECK(approx_equal(kJ * kK, kI));
    CHECK(approx_equal(kK * kI, kJ));
    CHECK(approx_equal(kJ * kI, -kK));
    CHECK(approx_equal(kI * kI, Quaternion{-1.0}));
    CHECK(approx_equal(kJ * kJ, Quaternion{-1.0}));
    CHECK(approx_equal(kK * kK, Quaternion{-1.0}));
    CHECK(approx_equal(kI * kJ * kK, Quaternion{-1.0}));
}

TEST_CASE("identity and hand-expanded product") {
    Rng rng(1);
    const Quaternion q = rng.quaternion();
    CHECK(approx_equal(q * Quaternion{1.0}, q));
    CHECK(approx_equal(Quaternion{1.0} * q, q));
    // (1+i)(1-i) = 1 - i + i - i^2 = 2
    CHECK(approx_equal(Quaternion{1.0, 1.0} * Quaternion{1.0, -1.0}, Quaternion{2.0}));
}

TEST_CASE("conjugate, norm, inverse") {
    const Quaternion q{1.0, 2.0, 3.0, 4.0};
    CHECK(approx_equal(conj(q), Quaternion{1.0, -2.0, -3.0, -4.0}));
    CHECK(norm(q) == doctest::Approx(std::sqrt(30.0)).epsilon(1e-14));
    CHECK(approx_equal(inverse(kJ), -kJ));
    CHECK_THROWS_AS(inverse(Quaternion{}), SingularMatrixError);

    Rng rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const Quaternion a = rng.nonzero_quaternion();
        CHECK(approx_equal(a * inverse(a), Quaternion{1.0}, 1e-12));
        CHECK(approx_equal(inverse(a) * a, Quaternion{1.0}, 1e-12));
        CHECK(approx_equal(conj(conj(a)), a));
        const Quaternion b = rng.quaternion();
        CHECK(approx_equal(conj(a * b), conj(b) * conj(a), 1e-12));
        CHECK(norm_sq(a) == doctest::Approx(real_part(a * conj(a))).epsilon(1e-12));
        CHECK(norm_sq(a) == doctest::Approx(real_part(conj(a) * a)).epsilon(1e-12));
    }
}

TEST_CASE("algebra invariants on random values") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Quaternion a = rng.quaternion(2.0);
        const Quaternion b = rng.quaternion(2.0);
        const Quaternion c = rng.quaternion(2.0);
        const double scale = std::max(1.0, norm(a) * norm(b) * norm(c));
        CHECK(norm((a * b) * c - a * (b * c)) <= 1e-12 * scale);
        CHECK(real_part(a * b) == doctest::Approx(real_part(b * a)).epsilon(1e-12));
        CHECK(norm(a * b) == doctest::Approx(norm(a) * norm(b)).epsilon(1e-12));
    }
}

namespace {

// 40-term Taylor series of exp, the independent oracle.
Quaternion exp_taylor(const Quaternion& q) {
    Quaternion sum{1.0};
    Quaternion term{1.0};
    for (int s = 1; s <= 40; ++s) {
        term = term * q * (1.0 / s);
        sum += term;
    }
    return sum;
}

} // namespace

TEST_CASE("exponential") {
    CHECK(approx_equal(exp(Quaternion{}), Quaternion{1.0}));
    CHECK(approx_equal(exp(kJ * M_PI), Quaternion{-1.0}, 1e-12));

    // exp(j t) = cos t + j sin t against a truncated series at t = 0.7
    const double t = 0.7;
    const Quaternion direct = exp(kJ * t);
    CHECK(approx_equal(direct, Quaternion{std::cos(t), 0.0, std::sin(t), 0.0}, 1e-12));
    CHECK(approx_equal(direct, exp_taylor(kJ * t), 1e-12));

    // pure-complex arguments reduce to the classical complex exponential
    const std::complex<double> z{0.3, -1.1};
    const Quaternion qz{z.real(), z.imag()};
    const std::complex<double> ez = std::exp(z);
    CHECK(approx_equal(exp(qz), Quaternion{ez.real(), ez.imag()}, 1e-13));

    Rng rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const Quaternion q = rng.quaternion(3.0 / 2.0);
        CHECK(approx_equal(exp(q), exp_taylor(q), 1e-12));
        CHECK(norm(exp(q)) == doctest::Approx(std::exp(q.w)).epsilon(1e-12));
    }
    // tiny imaginary part goes through the sinc series branch
    const Quaternion tiny{0.5, 1e-10, -2e-10, 1e-10};
    CHECK(approx_equal(exp(tiny), exp_taylor(tiny), 1e-13));
}

TEST_CASE("standardize") {
    CHECK(approx_equal(standardize(kJ), kI));
    CHECK(approx_equal(standardize(Quaternion{3.0}), Quaternion{3.0}));
    CHECK(approx_equal(standardize(Quaternion{1.0, -2.0}), Quaternion{1.0, 2.0}));

    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Quaternion lambda = rng.quaternion();
        const Quaternion s = standardize(lambda);
        CHECK(approx_equal(standardize(s), s, 1e-12));
        CHECK(s.x >= 0.0);
        // similarity invariance under random conjugation
        const Quaternion alpha = rng.nonzero_quaternion();
        const Quaternion conjugated = inverse(alpha) * lambda * alpha;
        CHECK(approx_equal(standardize(conjugated), s, 1e-10));
    }
}

TEST_CASE("similarity with witness") {
    const SimilarityResult ij = similar(kI, kJ);
    REQUIRE(ij.similar);
    CHECK(norm(ij.alpha) > 0.0);
    CHECK(approx_equal(inverse(ij.alpha) * kI * ij.alpha, kJ, 1e-12));

    // 1+i+j+k conjugates i to j from the left (alpha i alpha^{-1} = j);
    // equivalently 1-i-j-k is a right-side witness.
    const Quaternion alpha{1.0, 1.0, 1.0, 1.0};
    CHECK(approx_equal(alpha * kI * inverse(alpha), kJ, 1e-12));
    const Quaternion beta{1.0, -1.0, -1.0, -1.0};
    CHECK(approx_equal(inverse(beta) * kI * beta, kJ, 1e-12));

    const Quaternion lambda{0.4, -0.3, 0.2, 0.9};
    const SimilarityResult self = similar(lambda, lambda);
    REQUIRE(self.similar);
    CHECK(approx_equal(inverse(self.alpha) * lambda * self.alpha, lambda, 1e-12));

    CHECK_FALSE(similar(kI, Quaternion{1.0, 1.0}).similar);

    // opposite imaginary directions need the orthogonal-axis witness
    const SimilarityResult opp = similar(kI, -kI);
    REQUIRE(opp.similar);
    CHECK(approx_equal(inverse(opp.alpha) * kI * opp.alpha, -kI, 1e-12));
    const SimilarityResult oppk = similar(kK, -kK);
    REQUIRE(oppk.similar);
    CHECK(approx_equal(inverse(oppk.alpha) * kK * oppk.alpha, -kK, 1e-12));

    Rng rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const Quaternion l = rng.quaternion();
        const Quaternion a = rng.nonzero_quaternion();
        const Quaternion theta = inverse(a) * l * a;
        const SimilarityResult res = similar(l, theta, 1e-8);
        REQUIRE(res.similar);
        CHECK(approx_equal(inverse(res.alpha) * l * res.alpha, theta, 1e-8));
    }
}

TEST_CASE("literal grammar") {
    CHECK(approx_equal(parse_quaternion("1-0.5j+2k"), Quaternion{1.0, 0.0, -0.5, 2.0}));
    CHECK(approx_equal(parse_quaternion("-j"), -kJ));
    CHECK(approx_equal(parse_quaternion("i"), kI));
    CHECK(approx_equal(parse_quaternion("3"), Quaternion{3.0}));
    CHECK(approx_equal(parse_quaternion("1+2i+3j+4k"), Quaternion{1.0, 2.0, 3.0, 4.0}));
    CHECK(approx_equal(parse_quaternion(" 0.25 - 1e-3i "), Quaternion{0.25, -1e-3}));
    CHECK(approx_equal(parse_quaternion("0"), Quaternion{}));

    CHECK_THROWS_AS(parse_quaternion(""), ParseError);
    CHECK_THROWS_AS(parse_quaternion("1 2"), ParseError);
    CHECK_THROWS_AS(parse_quaternion("q"), ParseError);
    CHECK_THROWS_AS(parse_quaternion("1+"), ParseError);

    CHECK(format_quaternion(Quaternion{1.0, 0.0, -0.5, 2.0}) == "1-0.5j+2k");
    CHECK(format_quaternion(Quaternion{}) == "0");
    CHECK(format_quaternion(-kJ) == "-j");

    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Quaternion q = rng.quaternion(5.0);
        // 17 significant digits round-trip doubles exactly
        CHECK(approx_equal(parse_quaternion(format_quaternion(q, 17)), q, 1e-15));
        CHECK(approx_equal(parse_quaternion(format_quaternion(q)), q, 1e-7));
    }
}
