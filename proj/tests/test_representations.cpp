#include "ccrlab/errors.hpp"
#include "ccrlab/representations.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace ccrlab;

TEST_CASE("vacuum profile validation") {
    CHECK_THROWS_AS(VacuumProfile::from_probabilities({"a", "b"}, {0.5, 0.6}), ValidationError);
    CHECK_THROWS_AS(VacuumProfile::from_probabilities({"a", "a"}, {0.5, 0.5}), ValidationError);
    CHECK_THROWS_AS(VacuumProfile::from_probabilities({"a", "b"}, {1.5, -0.5}), DomainError);
    const auto u = VacuumProfile::uniform(4);
    CHECK(u.z_max() == 0.25);
    CHECK(u.probability("k3") == 0.25);
    CHECK_THROWS_AS(u.index_of("k9"), ConfigError);
}

TEST_CASE("plateau profile is flat on its window and decays outside") {
    const auto p = VacuumProfile::plateau(9, 3, 5, 0.8);
    double total = 0.0;
    for (double z : p.probabilities()) total += z;
    CHECK(std::abs(total - 1.0) <= 1e-12);
    CHECK(p.probabilities()[3] == doctest::Approx(p.probabilities()[5]).epsilon(1e-15));
    CHECK(p.probabilities()[2] < p.probabilities()[3]);
    CHECK(p.probabilities()[0] < p.probabilities()[1]);
    CHECK(p.z_max() == doctest::Approx(p.probabilities()[4]).epsilon(1e-15));
    CHECK_THROWS_AS(VacuumProfile::plateau(5, 3, 2, 1.0), ConfigError);
}

TEST_CASE("infinity representation satisfies the CCR below truncation") {
    for (std::size_t n_max : {1, 2, 4}) {
        const auto rep = build_infinity_two_mode(n_max);
        CHECK(rep.field_dim() == (n_max + 1) * (n_max + 1));
        const auto ccr = ccr_check(rep);
        CHECK(ccr.max_commutator() <= 1e-12);
        CHECK(ccr.max_centrality() <= 1e-12);
        CHECK(ccr.vacuum_annihilation <= 1e-12);
        CHECK(max_abs(rep.modes[0].central - identity(rep.field_dim())) == 0.0);
    }
    CHECK_THROWS(build_infinity_two_mode(0));
}

TEST_CASE("berezin space dimension and unique vacuum") {
    // d modes with at most c quanta: C(d + c, c) states.
    CHECK(build_berezin(2, 1, {1, 2}).field_dim() == 3);
    CHECK(build_berezin(3, 2, {1, 2}).field_dim() == 10);
    const auto rep = build_berezin(3, 2, {1, 3});
    CHECK(rep.modes[1].label == "f3");
    CHECK(std::abs(rep.vacuum.amplitudes(0) - Complex(1.0, 0.0)) == 0.0);
    const auto ccr = ccr_check(rep);
    CHECK(ccr.max_commutator() <= 1e-12);
    CHECK(ccr.max_centrality() <= 1e-12);
    CHECK_THROWS(build_berezin(2, 1, {3}));
}

TEST_CASE("reducible representation: CCR, central elements, vacuum expectations") {
    const auto profile = VacuumProfile::from_probabilities({"k1", "k2", "k3"}, {0.2, 0.3, 0.5});
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto rep = build_reducible(n, profile, 1, {"k1", "k2"});
        const auto ccr = ccr_check(rep);
        CHECK(ccr.max_commutator() <= 1e-12);
        CHECK(ccr.max_centrality() <= 1e-12);
        CHECK(ccr.vacuum_annihilation <= 1e-12);
        const ComplexVector& v = rep.vacuum.amplitudes;
        for (const auto& m : rep.modes) {
            const double z = profile.probability(m.label);
            CHECK(std::abs(v.dot(m.central * v).real() - z) <= 1e-12);
            CHECK(std::abs((m.annihilation.adjoint() * v).squaredNorm() - z) <= 1e-12);
            // I_k is not the identity: the representation is reducible.
            CHECK(max_abs(m.central - identity(rep.field_dim())) > 0.1);
        }
        CHECK(std::abs(rep.renormalization_z() - 0.5) == 0.0);
    }
    CHECK_THROWS_AS(build_infinity_two_mode(1).renormalization_z(), ConfigError);
}

TEST_CASE("reducible builder enforces the ceiling") {
    const auto profile = VacuumProfile::uniform(2);
    CHECK_THROWS_AS(build_reducible(7, profile, 1, {"k1", "k2"}), SizeError);
    CHECK_THROWS_AS(build_reducible(2, profile, 1, {"k1", "k2"}, 10), SizeError);
    CHECK_THROWS_AS(build_reducible(2, profile, 1, {"k7"}), ConfigError);
}

TEST_CASE("central spectral projectors resolve I_k") {
    const auto profile = VacuumProfile::from_probabilities({"k1", "k2", "k3"}, {0.2, 0.3, 0.5});
    const auto rep = build_reducible(3, profile, 0, {"k1", "k2"});
    const auto spec = central_spectral_projectors(rep, "k2");
    REQUIRE(spec.projectors.size() == 4);
    ComplexMatrix sum = ComplexMatrix::Zero(rep.field_dim(), rep.field_dim());
    ComplexMatrix weighted = sum;
    for (std::size_t s = 0; s < spec.projectors.size(); ++s) {
        const auto& p = spec.projectors[s];
        CHECK(max_abs(p * p - p) <= 1e-12);
        CHECK(max_abs(p - p.adjoint()) == 0.0);
        CHECK(spec.eigenvalues[s] == doctest::Approx(static_cast<double>(s) / 3.0));
        sum += p;
        weighted += spec.eigenvalues[s] * p;
    }
    CHECK(max_abs(sum - identity(rep.field_dim())) <= 1e-12);
    CHECK(max_abs(weighted - rep.mode("k2").central) <= 1e-12);
}

TEST_CASE("vacuum weights match the long-double oracle") {
    for (std::int64_t n : {1, 2, 7, 40, 300}) {
        for (double z : {0.1, 0.25, 0.5, 0.9}) {
            for (std::int64_t s = 0; s <= n; ++s) {
                const double ref = oracle::binomial(n, s, z);
                CHECK(std::abs(vacuum_weight(n, s, z) - ref) <= 1e-13 * std::max(1.0, ref) + 1e-300);
            }
        }
    }
    for (std::int64_t n = 1; n <= 6; ++n) {
        for (std::int64_t s = 0; s <= n; ++s) {
            for (std::int64_t sp = 0; sp <= n; ++sp) {
                CHECK(std::abs(vacuum_weight(n, s, sp, 0.2, 0.3) - oracle::multinomial(n, s, sp, 0.2, 0.3)) <=
                      1e-14);
            }
        }
    }
    CHECK(vacuum_weight(3, 2, 2, 0.2, 0.3) == 0.0);
    CHECK_THROWS_AS(vacuum_weight(3, 1, 1.5), DomainError);
    CHECK_THROWS_AS(vacuum_weight(0, 0, 0.5), DomainError);
    CHECK_THROWS_AS(vacuum_weight(5, 6, 0.5), DomainError);
    CHECK(std::abs(vacuum_weight(1, 1, 0.3) - 0.3) <= 1e-16);
    CHECK(vacuum_weight(1, 1, 1, 0.3, 0.4) == 0.0);
}

TEST_CASE("vacuum weights are normalized up to N = 1e6") {
    for (std::int64_t n : {1, 10, 1000, 1000000}) {
        for (double z : {0.1, 0.25, 0.5}) {
            long double sum = 0.0L;
            for (std::int64_t s = 0; s <= n; ++s) sum += vacuum_weight(n, s, z);
            CHECK(std::abs(static_cast<double>(sum) - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("joint weights marginalize to single weights") {
    const std::int64_t n = 25;
    for (std::int64_t s = 0; s <= n; ++s) {
        double marginal = 0.0;
        for (std::int64_t sp = 0; sp <= n; ++sp) marginal += vacuum_weight(n, s, sp, 0.2, 0.3);
        CHECK(std::abs(marginal - vacuum_weight(n, s, 0.2)) <= 1e-14);
    }
}
