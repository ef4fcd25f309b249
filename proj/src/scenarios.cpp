#include "ccrlab/scenarios.hpp"

#include "ccrlab/dynamics.hpp"
#include "ccrlab/entanglement.hpp"
#include "ccrlab/errors.hpp"
#include "ccrlab/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ccrlab {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
const double kLn2 = std::log(2.0);

nlohmann::ordered_json provenance(const ScenarioConfig& c) {
    nlohmann::ordered_json p;
    p["tool"] = "ccrlab";
    p["version"] = kVersion;
    std::ostringstream eigen;
    eigen << EIGEN_WORLD_VERSION << "." << EIGEN_MAJOR_VERSION << "." << EIGEN_MINOR_VERSION;
    p["eigen"] = eigen.str();
    p["config"] = c.to_json();
    return p;
}

std::string at_t(double t) {
    return "t=" + format_number(t);
}

std::string at_n(std::int64_t n) {
    return "N=" + std::to_string(n);
}

double expectation(const ComplexMatrix& op, const ComplexVector& v) {
    return v.dot(op * v).real();
}

// (a_1^dagger + a_2^dagger)/sqrt(2) |vacuum>, normalized, on the field factorization.
StateVector photon_state(const RepresentationInstance& rep) {
    const ComplexVector v = (rep.modes[0].annihilation.adjoint() * rep.vacuum.amplitudes +
                             rep.modes[1].annihilation.adjoint() * rep.vacuum.amplitudes) /
                            std::sqrt(2.0);
    return StateVector(v, rep.factorization()).normalized();
}

void ccr_checks(ScenarioReport& r, const RepresentationInstance& rep, const ScenarioConfig& c,
                const std::string& suffix) {
    const auto ccr = ccr_check(rep);
    r.check_le("ccr_commutator" + suffix, ccr.max_commutator(), c.tolerance("ccr"),
               "[a_k, a_k'^dagger] - delta I_k below truncation");
    r.check_le("ccr_centrality" + suffix, ccr.max_centrality(), c.tolerance("ccr"));
    r.check_le("vacuum_annihilated" + suffix, ccr.vacuum_annihilation, c.tolerance("vacuum"));
}

RhoDump dump(const std::string& label, double n, double t, const AtomicDensity& rho) {
    return {label, n, t, rho.matrix()};
}

// Atomic density matrices of the irreducible brute-force evolution, one per time.
std::vector<AtomicDensity> irreducible_trajectory(const RepresentationInstance& rep,
                                                  const std::vector<double>& times) {
    const ComplexMatrix h = jc_hamiltonian(rep, default_pairs(rep));
    const StateVector psi0 = beam_splitter_initial_state(rep);
    std::vector<AtomicDensity> out;
    for (double t : times) out.push_back(atomic_reduction(evolve(rep, h, psi0, t, false)));
    return out;
}

ScenarioReport run_infinity(const ScenarioConfig& c) {
    ScenarioReport r;
    r.scenario = "infinity";
    r.provenance = provenance(c);
    const auto rep = build_infinity_two_mode(c.n_max);
    ccr_checks(r, rep, c, "");

    const StateVector photon = photon_state(rep);
    const Bipartition mode_split(rep.factorization(), {"mode1"});
    r.check_near("initial_mode_entropy", entanglement_entropy(photon, mode_split), kLn2,
                 c.tolerance("entropy"), "mode1 | mode2 entropy of the photon state, nats");

    const auto pairs = default_pairs(rep);
    const ComplexMatrix h1 = jc_term(rep, pairs[0]);
    const ComplexMatrix h2 = jc_term(rep, pairs[1]);
    const ComplexMatrix h = h1 + h2;
    const ComplexMatrix n_exc = excitation_number(rep);
    r.check_le("terms_commute", max_abs(commutator(h1, h2)), c.tolerance("ccr"), "[H_1, H_2]");
    r.check_le("excitation_conserved", max_abs(commutator(h, n_exc)), c.tolerance("ccr"), "[H, N_exc]");

    const StateVector psi0 = beam_splitter_initial_state(rep);
    const double n0 = expectation(n_exc, psi0.amplitudes);
    const HilbertFactorization full = full_factorization(rep);
    const std::size_t d = c.n_max + 1;
    const HilbertFactorization local_order({{"atom1", 2}, {"mode1", d}, {"atom2", 2}, {"mode2", d}});
    const std::vector<std::size_t> to_full{0, 2, 1, 3};
    const ComplexMatrix coupling = Complex(0.0, 1.0) * fock::annihilation(c.n_max);
    const Bipartition pair_split(full, {"atom1", "mode1"});
    const Bipartition atoms_field(full, {"atom1", "atom2"});

    r.table.columns = {"t",
                       "concurrence",
                       "concurrence_closed_form",
                       "trace_distance_closed_form",
                       "entropy_atoms_field",
                       "locality_deviation",
                       "second_operator_schmidt",
                       "excitation_drift"};
    auto times = c.times;
    for (double t : times) {
        const ComplexMatrix u = expm_generator(h, t);
        const ComplexMatrix local = closed_form_evolution(coupling, t);
        const ComplexMatrix product = permute_factors(kron(local, local), local_order, to_full);
        const double loc_dev = max_abs(u - product);
        const auto op_schmidt = operator_schmidt_coefficients(u, pair_split);
        const double second = op_schmidt.size() > 1 ? op_schmidt[1] : 0.0;

        const StateVector psi(u * psi0.amplitudes, full);
        const AtomicDensity rho = atomic_reduction(psi);
        const AtomicDensity rho8 = rho_atoms_irreducible(t);
        const double td = trace_distance(rho, rho8);
        const double conc = concurrence(rho);
        const double conc8 = concurrence(rho8);
        const double ent = entanglement_entropy(psi, atoms_field);
        const double drift = std::abs(expectation(n_exc, psi.amplitudes) - n0);

        r.check_le("propagator_local_product " + at_t(t), loc_dev, c.tolerance("propagator"),
                   "expm(H) vs kron of closed-form local propagators");
        r.check_le("propagator_local_rank " + at_t(t), second, c.tolerance("propagator"),
                   "second operator-Schmidt coefficient across (atom1,mode1)|(atom2,mode2)");
        r.check_le("rho_matches_irreducible " + at_t(t), td, c.tolerance("rho_irreducible"));
        r.check_near("concurrence_sin2 " + at_t(t), conc, std::sin(t) * std::sin(t),
                     c.tolerance("concurrence_curve"));
        r.check_le("excitation_drift " + at_t(t), drift, c.tolerance("conservation"));
        r.table.rows.push_back({t, conc, conc8, td, ent, loc_dev, second, drift});
        r.rho.push_back(dump("brute", 0.0, t, rho));
    }
    const AtomicDensity rho_half = atomic_reduction(
        StateVector(expm_generator(h, kHalfPi) * psi0.amplitudes, full));
    r.check_near("concurrence_max_entangled", concurrence(rho_half), 1.0, c.tolerance("concurrence_bell"),
                 "t = pi/2");
    return r;
}

ScenarioReport run_berezin(const ScenarioConfig& c) {
    ScenarioReport r;
    r.scenario = "berezin";
    r.provenance = provenance(c);
    const auto rep = build_berezin(c.d, c.cutoff, {1, 2});
    ccr_checks(r, rep, c, "");

    // The common kernel of every a_n is one-dimensional.
    std::vector<std::size_t> all_modes(c.d);
    for (std::size_t i = 0; i < c.d; ++i) all_modes[i] = i + 1;
    const auto all = build_berezin(c.d, c.cutoff, all_modes);
    const auto dim = static_cast<Eigen::Index>(all.field_dim());
    ComplexMatrix stacked(dim * static_cast<Eigen::Index>(c.d), dim);
    for (std::size_t i = 0; i < c.d; ++i) {
        stacked.block(static_cast<Eigen::Index>(i) * dim, 0, dim, dim) = all.modes[i].annihilation;
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(stacked);
    const auto sv = svd.singularValues();
    double kernel = 0.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) kernel += sv(i) < 1e-10 ? 1.0 : 0.0;
    r.check_near("vacuum_unique", kernel, 1.0, 0.5, "dimension of the common kernel of all a_n");

    const HilbertFactorization full = full_factorization(rep);
    const StateVector psi0 = beam_splitter_initial_state(rep);
    const Bipartition atoms_field(full, {"atom1", "atom2"});
    const Bipartition atom1_rest(full, {"atom1"});
    const Bipartition atom2_rest(full, {"atom2"});
    const auto s_af = schmidt_coefficients(psi0, atoms_field);
    const auto s_a1 = schmidt_coefficients(psi0, atom1_rest);
    r.check_le("initial_product_atoms_field", s_af.size() > 1 ? s_af[1] : 0.0, c.tolerance("schmidt"),
               "second Schmidt coefficient, atoms | field");
    r.check_le("initial_product_atom1_rest", s_a1.size() > 1 ? s_a1[1] : 0.0, c.tolerance("schmidt"),
               "second Schmidt coefficient, atom1 | atom2 field");

    const ComplexMatrix h = jc_hamiltonian(rep, default_pairs(rep));
    const ComplexMatrix n_exc = excitation_number(rep);
    r.check_le("excitation_conserved", max_abs(commutator(h, n_exc)), c.tolerance("ccr"), "[H, N_exc]");
    const double n0 = expectation(n_exc, psi0.amplitudes);

    const auto inf_rep = build_infinity_two_mode(1);
    const auto inf_traj = irreducible_trajectory(inf_rep, c.times);

    std::ostringstream field_note;
    field_note << "field dimension " << rep.field_dim();
    r.table.columns = {"t",
                       "concurrence",
                       "trace_distance_closed_form",
                       "trace_distance_infinity",
                       "operator_schmidt_atom1",
                       "operator_schmidt_atom2",
                       "excitation_drift"};
    for (std::size_t k = 0; k < c.times.size(); ++k) {
        const double t = c.times[k];
        const ComplexMatrix u = expm_generator(h, t);
        const auto os1 = operator_schmidt_coefficients(u, atom1_rest);
        const auto os2 = operator_schmidt_coefficients(u, atom2_rest);
        const double second1 = os1.size() > 1 ? os1[1] : 0.0;
        const double second2 = os2.size() > 1 ? os2[1] : 0.0;
        const StateVector psi(u * psi0.amplitudes, full);
        const AtomicDensity rho = atomic_reduction(psi);
        const double td8 = trace_distance(rho, rho_atoms_irreducible(t));
        const double td_inf = trace_distance(rho, inf_traj[k]);
        const double conc = concurrence(rho);
        const double drift = std::abs(expectation(n_exc, psi.amplitudes) - n0);
        if (t > 0.0) {
            r.check_gt("propagator_nonproduct_atom1 " + at_t(t), second1, c.tolerance("nonproduct"),
                       "second operator-Schmidt coefficient across atom1 | atom2 field; " + field_note.str());
            r.check_gt("propagator_nonproduct_atom2 " + at_t(t), second2, c.tolerance("nonproduct"),
                       "second operator-Schmidt coefficient across atom1 field | atom2; " + field_note.str());
        }
        r.check_le("rho_matches_irreducible " + at_t(t), td8, c.tolerance("rho_irreducible"));
        r.check_le("rho_matches_infinity " + at_t(t), td_inf, c.tolerance("rho_irreducible"));
        r.check_near("concurrence_sin2 " + at_t(t), conc, std::sin(t) * std::sin(t),
                     c.tolerance("concurrence_curve"));
        r.check_le("excitation_drift " + at_t(t), drift, c.tolerance("conservation"));
        r.table.rows.push_back({t, conc, td8, td_inf, second1, second2, drift});
        r.rho.push_back(dump("brute", 0.0, t, rho));
    }

    // At t = pi/2 the state is the atomic Bell state times the unique vacuum.
    const StateVector final_state = evolve(rep, h, psi0, kHalfPi, false);
    const ComplexVector bell =
        (kron(atom::excited(), atom::ground()) + kron(atom::ground(), atom::excited())) / std::sqrt(2.0);
    const ComplexVector target = kron(bell, rep.vacuum.amplitudes);
    const double fidelity = std::norm(target.dot(final_state.amplitudes));
    r.check_near("final_bell_times_vacuum", fidelity, 1.0, c.tolerance("fidelity"), "t = pi/2");
    r.check_near("concurrence_max_entangled", concurrence(atomic_reduction(final_state)), 1.0,
                 c.tolerance("concurrence_bell"), "t = pi/2");
    return r;
}

std::size_t reducible_field_dim(const ScenarioConfig& c, std::int64_t n, std::size_t labels) {
    std::size_t dim = 1;
    const std::size_t local = labels * (c.n_max + 1);
    for (std::int64_t i = 0; i < n; ++i) {
        if (dim > c.ceiling / local) return c.ceiling + 1;
        dim *= local;
    }
    return dim;
}

ScenarioReport run_reducible_brute(const ScenarioConfig& c) {
    ScenarioReport r;
    r.scenario = "reducible-brute";
    r.provenance = provenance(c);
    const VacuumProfile profile = c.profile.build();
    const auto modes = c.coupled_modes();
    if (modes.size() != 2) throw ConfigError("reducible-brute needs two coupled modes");
    const double z1 = profile.probability(modes[0]);
    const double z2 = profile.probability(modes[1]);
    const double z = profile.z_max();

    r.table.columns = {"N",
                       "t",
                       "trace_distance_closed_form",
                       "concurrence",
                       "concurrence_closed_form",
                       "coherence_re",
                       "coherence_im",
                       "coherence_closed_form",
                       "excitation_drift"};
    for (const auto n : c.n_values) {
        const std::string tag = " " + at_n(n);
        const std::size_t field = reducible_field_dim(c, n, profile.size());
        if (field > c.ceiling || 4 * field > c.ceiling) {
            std::ostringstream os;
            os << "brute-force dimension above ceiling " << c.ceiling;
            r.skip("reducible_brute_force" + tag, os.str());
            continue;
        }
        const auto rep = build_reducible(static_cast<std::size_t>(n), profile, c.n_max, modes, c.ceiling);
        ccr_checks(r, rep, c, tag);

        const ComplexVector& vac = rep.vacuum.amplitudes;
        double vac_dev = 0.0;
        for (const auto& m : rep.modes) {
            const double zk = profile.probability(m.label);
            vac_dev = std::max(vac_dev, std::abs(expectation(m.central, vac) - zk));
            vac_dev = std::max(vac_dev, std::abs((m.annihilation.adjoint() * vac).squaredNorm() - zk));
        }
        r.check_le("vacuum_expectation_Z" + tag, vac_dev, c.tolerance("vacuum"),
                   "<0|I_k|0> and <0|a_k a_k^dagger|0> vs Z_k");
        const ComplexVector raw = (rep.modes[0].annihilation.adjoint() * vac +
                                   rep.modes[1].annihilation.adjoint() * vac) /
                                  std::sqrt(2.0);
        r.check_near("normalization_constant" + tag, raw.norm() * normalization_constant(z1, z2), 1.0,
                     c.tolerance("vacuum"));

        // Central spectra and vacuum weights.
        const auto e1 = central_spectral_projectors(rep, modes[0]);
        const auto e2 = central_spectral_projectors(rep, modes[1]);
        double resolution = 0.0;
        double weight_dev = 0.0;
        for (const auto* spec : {&e1, &e2}) {
            ComplexMatrix sum = ComplexMatrix::Zero(e1.projectors[0].rows(), e1.projectors[0].cols());
            ComplexMatrix weighted = sum;
            for (std::size_t s = 0; s < spec->projectors.size(); ++s) {
                sum += spec->projectors[s];
                weighted += spec->eigenvalues[s] * spec->projectors[s];
            }
            resolution = std::max(resolution, max_abs(sum - identity(rep.field_dim())));
            resolution = std::max(resolution, max_abs(weighted - rep.mode(spec->mode).central));
        }
        for (std::int64_t s = 0; s <= n; ++s) {
            const ComplexVector e1v = e1.projectors[static_cast<std::size_t>(s)] * vac;
            weight_dev = std::max(weight_dev, std::abs(vac.dot(e1v).real() - vacuum_weight(n, s, z1)));
            for (std::int64_t sp = 0; sp <= n; ++sp) {
                const double brute = vac.dot(e2.projectors[static_cast<std::size_t>(sp)] * e1v).real();
                weight_dev = std::max(weight_dev, std::abs(brute - vacuum_weight(n, s, sp, z1, z2)));
            }
        }
        r.check_le("central_spectrum" + tag, resolution, c.tolerance("central"),
                   "sum_s E(s) = I and sum_s (s/N) E(s) = I_k");
        r.check_le("vacuum_weights" + tag, weight_dev, c.tolerance("weights"),
                   "<0|E1(s)E2(s')|0> vs multinomial weight");

        const ComplexMatrix h = jc_hamiltonian(rep, default_pairs(rep));
        const ComplexMatrix n_exc = excitation_number(rep);
        const StateVector psi0 = beam_splitter_initial_state(rep);
        const double n0 = expectation(n_exc, psi0.amplitudes);
        for (double t : c.times) {
            const std::string key = tag + " " + at_t(t);
            const StateVector psi = evolve(rep, h, psi0, t, true);
            const AtomicDensity rho = atomic_reduction(psi);
            const AtomicDensity rho27 = rho_atoms_reducible(t, n, z1, z2, z);
            const double td = trace_distance(rho, rho27);
            const double conc = concurrence(rho);
            const double conc27 = concurrence(rho27);
            const double drift = std::abs(expectation(n_exc, psi.amplitudes) - n0);
            r.check_le("rho_matches_finite_N" + key, td, c.tolerance("rho_reducible"));
            r.check_le("excitation_drift" + key, drift, c.tolerance("conservation"));
            if (n == 1) {
                r.check_le("coherence_closed_form_zero" + key, std::abs(rho27.coherence()), 0.0,
                           "exact zero required");
                r.check_le("coherence_brute_zero" + key, std::abs(rho.coherence()), c.tolerance("coherence"));
                r.check_le("concurrence_zero" + key, conc, c.tolerance("coherence"));
            }
            r.table.rows.push_back({static_cast<double>(n), t, td, conc, conc27, rho.coherence().real(),
                                    rho.coherence().imag(), rho27.coherence().real(), drift});
            r.rho.push_back(dump("brute", static_cast<double>(n), t, rho));
            r.rho.push_back(dump("closed_form", static_cast<double>(n), t, rho27));
        }
    }
    return r;
}

ScenarioReport run_single_mode(const ScenarioConfig& c) {
    ScenarioReport r;
    r.scenario = "single-mode";
    r.provenance = provenance(c);
    const VacuumProfile profile = c.profile.build();
    const auto modes = c.coupled_modes();
    if (modes.empty()) throw ConfigError("single-mode needs one mode label");
    const double z1 = profile.probability(modes[0]);

    // Infinity representation: a_1^dagger |0>|0> = |1>|0> is a product state.
    const auto inf = build_infinity_two_mode(std::max<std::size_t>(c.n_max, 1));
    const StateVector inf_state(inf.modes[0].annihilation.adjoint() * inf.vacuum.amplitudes,
                                inf.factorization());
    const double inf_entropy = entanglement_entropy(inf_state.normalized(),
                                                    Bipartition(inf.factorization(), {"mode1"}));
    r.check_near("infinity_single_mode_entropy", inf_entropy, 0.0, c.tolerance("entropy"),
                 "mode1 | mode2");

    r.table.columns = {"N", "entropy_reducible", "schmidt_rank", "entropy_infinity_single_mode",
                       "entropy_infinity_n_modes"};
    for (const auto n : c.n_values) {
        const std::string tag = " " + at_n(n);
        if (reducible_field_dim(c, n, profile.size()) > c.ceiling) {
            r.skip("single_mode_entropy" + tag, "brute-force dimension above ceiling");
            continue;
        }
        const auto rep =
            build_reducible(static_cast<std::size_t>(n), profile, c.n_max, {modes[0]}, c.ceiling);
        const ComplexVector raw = rep.modes[0].annihilation.adjoint() * rep.vacuum.amplitudes;
        r.check_near("single_mode_norm" + tag, raw.squaredNorm(), z1, c.tolerance("vacuum"),
                     "<0|a a^dagger|0> = Z_1");
        const StateVector state = StateVector(raw, rep.factorization()).normalized();
        const Bipartition split(rep.factorization(), {"osc1"});
        const double entropy = entanglement_entropy(state, split);
        const auto schmidt = schmidt_coefficients(state, split);
        const auto rank = static_cast<double>(
            std::count_if(schmidt.begin(), schmidt.end(), [](double s) { return s > 1e-12; }));

        // Infinity-representation superposition of N distinct modes, one photon.
        const auto un = static_cast<std::size_t>(n);
        ComplexVector w = ComplexVector::Zero(Eigen::Index{1} << un);
        std::vector<Factor> qubits;
        for (std::size_t i = 0; i < un; ++i) {
            w(Eigen::Index{1} << (un - 1 - i)) = 1.0 / std::sqrt(static_cast<double>(n));
            qubits.push_back({"mode" + std::to_string(i + 1), 2});
        }
        const HilbertFactorization wf(qubits);
        const double w_entropy = entanglement_entropy(StateVector(w, wf), Bipartition(wf, {"mode1"}));

        if (n == 1) {
            r.check_near("single_mode_entropy" + tag, entropy, 0.0, c.tolerance("entropy"),
                         "one oscillator: no bipartition, degenerate case");
        } else {
            r.check_gt("single_mode_entropy" + tag, entropy, c.tolerance("single_mode_entropy"),
                       "osc1 | remaining oscillators, nats");
        }
        r.table.rows.push_back({static_cast<double>(n), entropy, rank, inf_entropy, w_entropy});
    }
    return r;
}

}  // namespace

ScenarioReport convergence_sweep(const ScenarioConfig& c) {
    ScenarioReport r;
    r.scenario = c.scenario.empty() ? "sweep" : c.scenario;
    r.provenance = provenance(c);
    if (c.n_values.empty()) throw ConfigError("convergence sweep needs at least one N");
    for (auto n : c.n_values) {
        if (n > 1'000'000) throw DomainError("convergence sweep: N above 1e6");
    }
    const VacuumProfile profile = c.profile.build();
    const auto modes = c.coupled_modes();
    if (modes.size() != 2) throw ConfigError("convergence sweep needs two coupled modes");
    const double z1 = profile.probability(modes[0]);
    const double z2 = profile.probability(modes[1]);
    const double z = profile.z_max();
    const bool plateau = std::abs(z1 - z) <= 1e-15 && std::abs(z2 - z) <= 1e-15;

    auto ns = c.n_values;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

    r.table.columns = {"N", "t", "Z1", "Z2", "Z", "D"};
    for (double t : c.times) {
        const AtomicDensity limit = rho_atoms_limit(t, z1, z2, z);
        if (plateau) {
            r.check_le("limit_equals_irreducible " + at_t(t), trace_distance(limit, rho_atoms_irreducible(t)),
                       c.tolerance("limit"), "Z1 = Z2 = Z");
        }
        std::vector<double> dists;
        for (auto n : ns) {
            const double dist = trace_distance(rho_atoms_reducible(t, n, z1, z2, z), limit);
            dists.push_back(dist);
            r.table.rows.push_back({static_cast<double>(n), t, z1, z2, z, dist});
        }
        if (t == 0.0) {
            r.check_le("no_dynamics_zero_distance " + at_t(t), *std::max_element(dists.begin(), dists.end()),
                       c.tolerance("zero_time"));
        } else {
            if (ns.size() > 1) {
                r.check_lt("distance_decreases " + at_t(t), dists.back(), dists.front(),
                           "D(N_max) < D(N_min) with N_min = " + std::to_string(ns.front()));
            }
            r.check_le("distance_at_largest_N " + at_t(t), dists.back(), c.tolerance("convergence"),
                       "N = " + std::to_string(ns.back()));
        }
    }
    return r;
}

ScenarioReport run_scenario(const ScenarioConfig& config) {
    config.validate();
    const std::string& name = config.scenario;
    if (name == "infinity") return run_infinity(config);
    if (name == "berezin") return run_berezin(config);
    if (name == "reducible-brute") return run_reducible_brute(config);
    if (name == "reducible-limit") return convergence_sweep(config);
    if (name == "single-mode") return run_single_mode(config);
    throw ConfigError("unknown scenario '" + name + "'");
}

}  // namespace ccrlab
