#include "ccrlab/errors.hpp"
#include "ccrlab/linalg.hpp"
#include "ccrlab/random.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace ccrlab;

TEST_CASE("factorization bookkeeping") {
    const HilbertFactorization f({{"a", 2}, {"b", 3}});
    CHECK(f.total_dim() == 6);
    CHECK(f.index_of("b") == 1);
    CHECK(f.dim_of("a") == 2);
    CHECK_FALSE(f.contains("c"));
    CHECK_THROWS_AS(f.index_of("c"), ValidationError);
    CHECK_THROWS_AS(HilbertFactorization({{"a", 2}, {"a", 3}}), ValidationError);
    CHECK_THROWS_AS(HilbertFactorization({{"a", 0}}), ValidationError);
    CHECK(f.concat(HilbertFactorization({{"c", 4}})).total_dim() == 24);
    CHECK_THROWS_AS(f.concat(f), ValidationError);
}

TEST_CASE("state vector dimension must match") {
    const HilbertFactorization f({{"a", 2}});
    CHECK_THROWS_AS(StateVector(ComplexVector::Zero(3), f), ValidationError);
    StateVector v(ComplexVector::Constant(2, Complex(3.0, 4.0)), f);
    CHECK(v.normalized().norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("hermitian_eig rejects bad input") {
    ComplexMatrix m(2, 2);
    m << 1.0, Complex(0.0, 1.0), 0.0, 1.0;
    CHECK_THROWS_AS(hermitian_eig(m), ValidationError);
    CHECK_THROWS_AS(hermitian_eig(ComplexMatrix::Zero(2, 3)), ValidationError);
    ComplexMatrix nan = ComplexMatrix::Identity(2, 2);
    nan(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(hermitian_eig(nan), ValidationError);
}

TEST_CASE("hermitian_eig residual and ordering on random matrices") {
    SeededRng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const auto n = static_cast<Eigen::Index>(rng.integer(1, 10));
        const ComplexMatrix h = random_hermitian(n, rng);
        const auto eig = hermitian_eig(h);
        const ComplexMatrix v = eig.eigenvectors;
        CHECK(max_abs(v * eig.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint() - h) <= 1e-12);
        CHECK(max_abs(v.adjoint() * v - identity(static_cast<std::size_t>(n))) <= 1e-12);
        for (Eigen::Index i = 1; i < n; ++i) CHECK(eig.eigenvalues(i - 1) <= eig.eigenvalues(i));
    }
}

TEST_CASE("matrix_function_psd clamps tiny negatives and rejects real ones") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1e-12;
    const ComplexMatrix root = matrix_function_psd(m, [](double x) { return std::sqrt(x); });
    CHECK(std::abs(root(1, 1)) == 0.0);
    m(1, 1) = -1e-6;
    CHECK_THROWS_AS(matrix_function_psd(m, [](double x) { return std::sqrt(x); }), PositivityError);
}

TEST_CASE("sinc_scaled branches agree near the threshold") {
    CHECK(sinc_scaled(0.0, 1.0) == 1.0);
    CHECK(sinc_scaled(5.0, 0.0) == 1.0);
    for (double y : {1e-6, 9.9e-5, 1.01e-4, 1e-3, 0.5, 2.0}) {
        const double x = y * y;
        CHECK(std::abs(sinc_scaled(x, 1.0) - std::sin(y) / y) <= 1e-15);
    }
    CHECK_THROWS_AS(sinc_scaled(-1.0, 1.0), DomainError);
}

TEST_CASE("expm_generator matches the Taylor oracle") {
    SeededRng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto n = static_cast<Eigen::Index>(rng.integer(2, 8));
        const ComplexMatrix h = random_hermitian(n, rng);
        const double t = 3.0 * rng.uniform();
        CHECK(max_abs(expm_generator(h, t) - oracle::taylor_expm(h, t)) <= 1e-12);
    }
}

TEST_CASE("expm_generator group property and unitarity") {
    SeededRng rng(13);
    const ComplexMatrix h = random_hermitian(6, rng);
    const ComplexMatrix u = expm_generator(h, 0.7);
    CHECK(max_abs(u * u.adjoint() - identity(6)) <= 1e-12);
    CHECK(max_abs(expm_generator(h, 0.3) * expm_generator(h, 0.4) - u) <= 1e-12);
    CHECK(max_abs(expm_generator(h, 0.0) - identity(6)) <= 1e-14);
}

TEST_CASE("kron of small matrices by hand") {
    ComplexMatrix a(2, 2);
    a << 1.0, 2.0, 3.0, 4.0;
    ComplexMatrix b(1, 2);
    b << 5.0, 6.0;
    ComplexMatrix expected(2, 4);
    expected << 5.0, 6.0, 10.0, 12.0, 15.0, 18.0, 20.0, 24.0;
    CHECK(max_abs(kron(a, b) - expected) == 0.0);
    const std::vector<ComplexMatrix> three{a, b, identity(2)};
    CHECK(max_abs(kron_all(three) - kron(kron(a, b), identity(2))) == 0.0);
}

TEST_CASE("permute_factors is consistent with kron order") {
    SeededRng rng(17);
    const ComplexMatrix a = random_matrix(2, 2, rng);
    const ComplexMatrix b = random_matrix(3, 3, rng);
    const ComplexMatrix c = random_matrix(2, 2, rng);
    const HilbertFactorization f({{"a", 2}, {"b", 3}, {"c", 2}});
    const std::vector<std::size_t> order{2, 0, 1};
    const ComplexMatrix permuted = permute_factors(kron(kron(a, b), c), f, order);
    CHECK(max_abs(permuted - kron(kron(c, a), b)) <= 1e-15);

    const ComplexVector va = random_state(2, rng);
    const ComplexVector vb = random_state(3, rng);
    const ComplexVector vc = random_state(2, rng);
    const ComplexVector pv = permute_factors(kron(kron(va, vb), vc), f, order);
    CHECK((pv - kron(kron(vc, va), vb)).norm() <= 1e-15);
}

TEST_CASE("embed places the local operator") {
    ComplexMatrix a(2, 2);
    a << 0.0, 1.0, 0.0, 0.0;
    CHECK(max_abs(embed(a, 1, 3) - kron(kron(identity(2), a), identity(2))) == 0.0);
}
