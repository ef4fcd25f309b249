// Seeded invariant suite behind `ccrlab validate`.

#include "ccrlab/dynamics.hpp"
#include "ccrlab/entanglement.hpp"
#include "ccrlab/errors.hpp"
#include "ccrlab/fock.hpp"
#include "ccrlab/random.hpp"
#include "ccrlab/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ccrlab {

namespace {

constexpr double kPi = std::numbers::pi;

void check_linalg(ScenarioReport& r, SeededRng& rng) {
    double eig_residual = 0.0;
    double psd_defect = 0.0;
    double group_defect = 0.0;
    double kron_defect = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto n = static_cast<Eigen::Index>(rng.integer(2, 8));
        const ComplexMatrix h = random_hermitian(n, rng);
        const auto eig = hermitian_eig(h);
        const ComplexMatrix recon =
            eig.eigenvectors * eig.eigenvalues.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
        eig_residual = std::max(eig_residual, max_abs(recon - h) / std::max(1.0, max_abs(h)));

        const ComplexMatrix p = random_density(n, rng);
        const ComplexMatrix root = matrix_function_psd(p, [](double x) { return std::sqrt(x); });
        psd_defect = std::max(psd_defect, max_abs(root * root - p));

        const double s = rng.uniform() * 2.0;
        const double t = rng.uniform() * 2.0;
        group_defect = std::max(group_defect,
                                max_abs(expm_generator(h, s) * expm_generator(h, t) - expm_generator(h, s + t)));

        const ComplexMatrix u = random_unitary(2, rng);
        const ComplexMatrix v = random_unitary(n, rng);
        const ComplexMatrix uv = kron(u, v);
        kron_defect = std::max(kron_defect, max_abs(uv * uv.adjoint() - identity(uv.rows())));
    }
    r.check_le("eigen_residual", eig_residual, 1e-12);
    r.check_le("psd_square_root", psd_defect, 1e-12);
    r.check_le("expm_group_property", group_defect, 1e-12);
    r.check_le("kron_unitary", kron_defect, 1e-12);
}

// Closed-form propagator against the spectral exponential of the generator.
void check_master_oracle(ScenarioReport& r, SeededRng& rng, bool flip) {
    double worst = 0.0;
    const double sign = flip ? -1.0 : 1.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<Eigen::Index>(rng.integer(2, 8));
        const ComplexMatrix a = random_matrix(n, n, rng);
        const ComplexMatrix h = atom_field_generator(a);
        for (double t : {0.3, 0.9, kPi / 2.0}) {
            const ComplexMatrix closed = detail::closed_form_evolution_signed(a, t, sign);
            worst = std::max(worst, max_abs(closed - expm_generator(h, t)));
        }
    }
    r.check_le("closed_form_propagator", worst, 1e-10, "100 random A, dims 2..8, t in {0.3, 0.9, pi/2}");
}

void check_fock(ScenarioReport& r) {
    double worst = 0.0;
    for (std::size_t n_max : {1, 2, 5, 10}) {
        // Only the top-level entry may deviate.
        const auto n = static_cast<Eigen::Index>(n_max);
        worst = std::max(worst, max_abs(fock::commutator_defect(n_max).topLeftCorner(n, n)));
    }
    r.check_le("fock_commutator_below_truncation", worst, 1e-12);
}

void check_representations(ScenarioReport& r) {
    double ccr = 0.0;
    double vac = 0.0;
    auto absorb = [&](const RepresentationInstance& rep) {
        const auto rep_ccr = ccr_check(rep);
        ccr = std::max({ccr, rep_ccr.max_commutator(), rep_ccr.max_centrality()});
        vac = std::max(vac, rep_ccr.vacuum_annihilation);
    };
    absorb(build_infinity_two_mode(1));
    absorb(build_infinity_two_mode(3));
    absorb(build_berezin(2, 1, {1, 2}));
    absorb(build_berezin(3, 2, {1, 3}));
    const auto uniform = VacuumProfile::uniform(2);
    const auto skewed = VacuumProfile::from_probabilities({"k1", "k2", "k3"}, {0.2, 0.3, 0.5});
    for (std::size_t n = 1; n <= 3; ++n) absorb(build_reducible(n, uniform, 1, {"k1", "k2"}));
    absorb(build_reducible(2, skewed, 0, {"k1", "k2"}));
    r.check_le("ccr_all_representations", ccr, 1e-12);
    r.check_le("vacuum_annihilated", vac, 1e-12);

    // Vacuum expectations, central spectra and joint weights on the skewed profile.
    double z_dev = 0.0;
    double spectrum = 0.0;
    double weights = 0.0;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto rep = build_reducible(n, skewed, 1, {"k1", "k2", "k3"});
        const ComplexVector& v = rep.vacuum.amplitudes;
        for (const auto& m : rep.modes) {
            const double zk = skewed.probability(m.label);
            z_dev = std::max(z_dev, std::abs(v.dot(m.central * v).real() - zk));
            z_dev = std::max(z_dev, std::abs((m.annihilation.adjoint() * v).squaredNorm() - zk));
        }
        const auto e1 = central_spectral_projectors(rep, "k1");
        const auto e2 = central_spectral_projectors(rep, "k2");
        ComplexMatrix sum = ComplexMatrix::Zero(v.size(), v.size());
        for (const auto& p : e1.projectors) {
            sum += p;
            spectrum = std::max(spectrum, max_abs(p * p - p));
        }
        spectrum = std::max(spectrum, max_abs(sum - identity(rep.field_dim())));
        const auto ni = static_cast<std::int64_t>(n);
        for (std::int64_t s = 0; s <= ni; ++s) {
            for (std::int64_t sp = 0; sp <= ni; ++sp) {
                const double brute =
                    v.dot(e1.projectors[static_cast<std::size_t>(s)] * e2.projectors[static_cast<std::size_t>(sp)] * v)
                        .real();
                weights = std::max(weights, std::abs(brute - vacuum_weight(ni, s, sp, 0.2, 0.3)));
            }
        }
    }
    r.check_le("vacuum_expectations_Z", z_dev, 1e-12);
    r.check_le("central_spectrum_resolution", spectrum, 1e-10);
    r.check_le("joint_vacuum_weights", weights, 1e-12);
}

void check_weights(ScenarioReport& r) {
    double worst = 0.0;
    for (std::int64_t n : {1, 10, 1000, 100000, 1000000}) {
        for (double z : {1e-3, 0.1, 0.25, 0.5, 0.9}) {
            double sum = 0.0;
            double comp = 0.0;
            for (std::int64_t s = 0; s <= n; ++s) {
                const double y = vacuum_weight(n, s, z) - comp;
                const double t = sum + y;
                comp = (t - sum) - y;
                sum = t;
            }
            worst = std::max(worst, std::abs(sum - 1.0));
        }
    }
    r.check_le("binomial_weights_normalized", worst, 1e-12, "N up to 1e6");
}

void check_closed_forms(ScenarioReport& r, SeededRng& rng) {
    double limit_dev = 0.0;
    double conc_dev = 0.0;
    for (int k = 0; k <= 16; ++k) {
        const double t = kPi * k / 16.0;
        limit_dev = std::max(limit_dev, trace_distance(rho_atoms_limit(t, 0.5, 0.5, 0.5), rho_atoms_irreducible(t)));
        conc_dev = std::max(conc_dev, std::abs(concurrence(rho_atoms_irreducible(t)) - std::sin(t) * std::sin(t)));
    }
    r.check_le("limit_equals_irreducible_on_plateau", limit_dev, 1e-12);
    r.check_le("irreducible_concurrence_sin2", conc_dev, 1e-8);

    // Finite-N closed form against brute force, random time.
    const auto profile = VacuumProfile::uniform(2);
    double brute_dev = 0.0;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto rep = build_reducible(n, profile, 1, {"k1", "k2"});
        const ComplexMatrix h = jc_hamiltonian(rep, default_pairs(rep));
        const StateVector psi0 = beam_splitter_initial_state(rep);
        const double t = rng.uniform() * kPi;
        const auto rho = atomic_reduction(evolve(rep, h, psi0, t, true));
        brute_dev = std::max(brute_dev,
                             trace_distance(rho, rho_atoms_reducible(t, static_cast<std::int64_t>(n), 0.5, 0.5, 0.5)));
    }
    r.check_le("finite_N_closed_form_vs_brute", brute_dev, 1e-8, "N = 1..3");

    // Local-unitary invariance of concurrence.
    double lu_dev = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix rho = random_density(4, rng);
        const ComplexMatrix u = kron(random_unitary(2, rng), random_unitary(2, rng));
        lu_dev = std::max(lu_dev, std::abs(concurrence(rho) - concurrence(ComplexMatrix(u * rho * u.adjoint()))));
    }
    r.check_le("concurrence_local_unitary_invariant", lu_dev, 1e-10);
}

void check_entanglement(ScenarioReport& r, SeededRng& rng) {
    const HilbertFactorization f({{"a", 2}, {"b", 3}, {"c", 2}});
    const Bipartition ab(f, {"a", "b"});
    const Bipartition a(f, {"a"});
    const Bipartition bc(f, {"b", "c"});

    double convex = 0.0;
    double triangle = 0.0;
    double schmidt = 0.0;
    double symmetric = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix r1(random_density(12, rng), f);
        const DensityMatrix r2(random_density(12, rng), f);
        const DensityMatrix r3(random_density(12, rng), f);
        const double w = rng.uniform();
        const DensityMatrix mix(w * r1.matrix() + (1.0 - w) * r2.matrix(), f);
        const ComplexMatrix lhs = partial_trace(mix, ab).matrix();
        const ComplexMatrix rhs = w * partial_trace(r1, ab).matrix() + (1.0 - w) * partial_trace(r2, ab).matrix();
        convex = std::max(convex, max_abs(lhs - rhs));

        const double excess = trace_distance(r1, r3) - trace_distance(r1, r2) - trace_distance(r2, r3);
        triangle = std::max(triangle, excess);

        const StateVector psi(random_state(12, rng), f);
        const auto coeffs = schmidt_coefficients(psi, a);
        auto eig = hermitian_eig(partial_trace(psi, a).matrix()).eigenvalues;
        std::vector<double> marg(eig.data(), eig.data() + eig.size());
        std::sort(marg.rbegin(), marg.rend());
        for (std::size_t i = 0; i < marg.size(); ++i) {
            const double c = i < coeffs.size() ? coeffs[i] : 0.0;
            schmidt = std::max(schmidt, std::abs(c * c - marg[i]));
        }
        symmetric = std::max(symmetric, std::abs(von_neumann_entropy(partial_trace(psi, a)) -
                                                 von_neumann_entropy(partial_trace(psi, bc))));
    }
    r.check_le("partial_trace_linear", convex, 1e-12);
    r.check_le("trace_distance_triangle", triangle, 1e-12, "d(r1,r3) - d(r1,r2) - d(r2,r3)");
    r.check_le("schmidt_squares_are_marginal_spectrum", schmidt, 1e-12);
    r.check_le("pure_state_marginal_entropies_equal", symmetric, 1e-10);
}

void check_convergence(ScenarioReport& r) {
    const double t = kPi / 4.0;
    const auto limit = rho_atoms_limit(t, 0.5, 0.5, 0.5);
    const double d100 = trace_distance(rho_atoms_reducible(t, 100, 0.5, 0.5, 0.5), limit);
    const double d10000 = trace_distance(rho_atoms_reducible(t, 10000, 0.5, 0.5, 0.5), limit);
    r.check_lt("convergence_ordering", d10000, d100, "D(1e4) < D(1e2) at t = pi/4");
}

}  // namespace

ScenarioReport validate(const ValidateOptions& options) {
    ScenarioReport r;
    r.scenario = "validate";
    r.provenance = {{"tool", "ccrlab"}, {"version", kVersion}, {"seed", options.seed}};
    SeededRng rng(options.seed);
    check_linalg(r, rng);
    check_master_oracle(r, rng, options.flip_propagator_sign);
    check_fock(r);
    check_representations(r);
    check_weights(r);
    check_closed_forms(r, rng);
    check_entanglement(r, rng);
    check_convergence(r);
    return r;
}

}  // namespace ccrlab
