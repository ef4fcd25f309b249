// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "ccrlab/dynamics.hpp"
#include "ccrlab/entanglement.hpp"
#include "ccrlab/random.hpp"
#include "ccrlab/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

using namespace ccrlab;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool ok{true};
    std::string detail;

    void require(bool cond, const std::string& what, double measured) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "=%.3g", measured);
        if (!detail.empty()) detail += "; ";
        detail += what + buf;
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(const char* id, const char* title, double time_limit, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit > 0.0) out.require(elapsed < time_limit, "seconds(limit " + format_number(time_limit) + ")", elapsed);
    std::printf("%s %s  %s  [%s]\n", id, out.ok ? "PASS" : "FAIL", title, out.detail.c_str());
    failures += out.ok ? 0 : 1;
}

std::vector<AtomicDensity> trajectory(const RepresentationInstance& rep, const std::vector<double>& times,
                                      bool renormalize) {
    const ComplexMatrix h = jc_hamiltonian(rep, default_pairs(rep));
    const StateVector psi0 = beam_splitter_initial_state(rep);
    std::vector<AtomicDensity> out;
    for (double t : times) out.push_back(atomic_reduction(evolve(rep, h, psi0, t, renormalize)));
    return out;
}

}  // namespace

int main() {
    const auto times = default_times();

    criterion("AC1", "closed-form propagator vs spectral exponential", 5.0, [] {
        SeededRng rng(ValidateOptions{}.seed);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const auto n = static_cast<Eigen::Index>(rng.integer(2, 8));
            const ComplexMatrix a = random_matrix(n, n, rng);
            const ComplexMatrix h = atom_field_generator(a);
            for (double t : {0.3, 0.9, kPi / 2.0}) {
                worst = std::max(worst, max_abs(closed_form_evolution(a, t) - expm_generator(h, t)));
            }
        }
        Outcome o;
        o.require(worst <= 1e-10, "max_err", worst);
        return o;
    });

    criterion("AC2", "irreducible atomic density in infinity and Berezin representations", 1.0, [&] {
        const auto inf = trajectory(build_infinity_two_mode(1), times, false);
        const auto ber = trajectory(build_berezin(2, 1, {1, 2}), times, false);
        double d_inf = 0.0;
        double d_ber = 0.0;
        double d_mut = 0.0;
        for (std::size_t k = 0; k < times.size(); ++k) {
            const auto ref = rho_atoms_irreducible(times[k]);
            d_inf = std::max(d_inf, trace_distance(inf[k], ref));
            d_ber = std::max(d_ber, trace_distance(ber[k], ref));
            d_mut = std::max(d_mut, trace_distance(inf[k], ber[k]));
        }
        Outcome o;
        o.require(d_inf <= 1e-10, "D_infinity", d_inf);
        o.require(d_ber <= 1e-10, "D_berezin", d_ber);
        o.require(d_mut <= 1e-10, "D_mutual", d_mut);
        return o;
    });

    criterion("AC3", "entanglement accounting", 0.0, [&] {
        Outcome o;
        const auto inf = build_infinity_two_mode(1);
        const ComplexVector photon = (inf.modes[0].annihilation.adjoint() * inf.vacuum.amplitudes +
                                      inf.modes[1].annihilation.adjoint() * inf.vacuum.amplitudes) /
                                     std::sqrt(2.0);
        const double s = entanglement_entropy(StateVector(photon, inf.factorization()),
                                              Bipartition(inf.factorization(), {"mode1"}));
        o.require(std::abs(s - std::log(2.0)) <= 1e-12, "|S-ln2|", std::abs(s - std::log(2.0)));

        const auto ber = build_berezin(2, 1, {1, 2});
        const auto coeffs = schmidt_coefficients(beam_splitter_initial_state(ber),
                                                 Bipartition(full_factorization(ber), {"atom1", "atom2"}));
        const double second = coeffs.size() > 1 ? coeffs[1] : 0.0;
        o.require(second <= 1e-12, "berezin_second_schmidt", second);

        const auto traj = trajectory(inf, times, false);
        const double c_half = concurrence(trajectory(inf, {kPi / 2.0}, false)[0]);
        o.require(std::abs(c_half - 1.0) <= 1e-10, "|C(pi/2)-1|", std::abs(c_half - 1.0));
        double curve = 0.0;
        for (std::size_t k = 0; k < times.size(); ++k) {
            curve = std::max(curve, std::abs(concurrence(traj[k]) - std::sin(times[k]) * std::sin(times[k])));
        }
        o.require(curve <= 1e-8, "|C-sin^2|", curve);
        return o;
    });

    criterion("AC4", "finite-N closed form vs brute force, N = 1..3", 10.0, [&] {
        const auto profile = VacuumProfile::uniform(2);
        double worst = 0.0;
        for (std::int64_t n = 1; n <= 3; ++n) {
            const auto rep = build_reducible(static_cast<std::size_t>(n), profile, 1, {"k1", "k2"});
            const auto traj = trajectory(rep, times, true);
            for (std::size_t k = 0; k < times.size(); ++k) {
                worst = std::max(worst, trace_distance(traj[k], rho_atoms_reducible(times[k], n, 0.5, 0.5, 0.5)));
            }
        }
        Outcome o;
        o.require(worst <= 1e-8, "max_D", worst);
        return o;
    });

    criterion("AC5", "coherence vanishes at N = 1", 0.0, [&] {
        const auto rep = build_reducible(1, VacuumProfile::uniform(2), 1, {"k1", "k2"});
        const auto traj = trajectory(rep, times, true);
        double closed = 0.0;
        double brute = 0.0;
        double conc = 0.0;
        for (std::size_t k = 0; k < times.size(); ++k) {
            closed = std::max(closed, std::abs(rho_atoms_reducible(times[k], 1, 0.5, 0.5, 0.5).coherence()));
            brute = std::max(brute, std::abs(traj[k].coherence()));
            conc = std::max(conc, concurrence(traj[k]));
        }
        Outcome o;
        o.require(closed == 0.0, "closed_form_coherence", closed);
        o.require(brute <= 1e-10, "brute_coherence", brute);
        o.require(conc <= 1e-10, "concurrence", conc);
        return o;
    });

    criterion("AC6", "large-N limit and convergence", 30.0, [&] {
        Outcome o;
        double limit = 0.0;
        for (double t : times) {
            limit = std::max(limit, max_abs(rho_atoms_limit(t, 0.5, 0.5, 0.5).matrix() -
                                            rho_atoms_irreducible(t).matrix()));
        }
        o.require(limit <= 1e-12, "limit_vs_irreducible", limit);
        const double t = kPi / 2.0;
        const auto lim = rho_atoms_limit(t, 0.25, 0.25, 0.25);
        const double d2 = trace_distance(rho_atoms_reducible(t, 100, 0.25, 0.25, 0.25), lim);
        const double d3 = trace_distance(rho_atoms_reducible(t, 1000, 0.25, 0.25, 0.25), lim);
        const double d4 = trace_distance(rho_atoms_reducible(t, 10000, 0.25, 0.25, 0.25), lim);
        o.require(d3 < d2, "D(1e2)", d2);
        o.require(d4 < d3, "D(1e3)", d3);
        o.require(d4 <= 0.02, "D(1e4)", d4);
        return o;
    });

    criterion("AC7", "vacuum weight identities", 0.0, [] {
        Outcome o;
        double norm = 0.0;
        for (std::int64_t n : {1, 10, 1000, 1000000}) {
            for (double z : {0.1, 0.25, 0.5}) {
                long double sum = 0.0L;
                for (std::int64_t s = 0; s <= n; ++s) sum += vacuum_weight(n, s, z);
                norm = std::max(norm, std::abs(static_cast<double>(sum) - 1.0));
            }
        }
        o.require(norm <= 1e-12, "|sum-1|", norm);
        const auto profile = VacuumProfile::uniform(2);
        double joint = 0.0;
        for (std::int64_t n = 1; n <= 3; ++n) {
            const auto rep = build_reducible(static_cast<std::size_t>(n), profile, 1, {"k1", "k2"});
            const auto e1 = central_spectral_projectors(rep, "k1");
            const auto e2 = central_spectral_projectors(rep, "k2");
            const ComplexVector& v = rep.vacuum.amplitudes;
            for (std::int64_t s = 0; s <= n; ++s) {
                for (std::int64_t sp = 0; sp <= n; ++sp) {
                    const double brute = v.dot(e1.projectors[static_cast<std::size_t>(s)] *
                                               e2.projectors[static_cast<std::size_t>(sp)] * v)
                                             .real();
                    joint = std::max(joint, std::abs(brute - vacuum_weight(n, s, sp, 0.5, 0.5)));
                }
            }
        }
        o.require(joint <= 1e-12, "joint_weight_err", joint);
        return o;
    });

    criterion("AC8", "single-mode entanglement depends on the representation", 0.0, [] {
        auto c = ScenarioConfig::defaults_for("single-mode");
        c.n_values = {1, 2};
        const auto r = run_scenario(c);
        Outcome o;
        const double s1 = r.table.rows.at(0).at(1);
        const double s2 = r.table.rows.at(1).at(1);
        const double s_inf = r.table.rows.at(0).at(3);
        // Schmidt-oracle value for N = 2, Z1 = 1/2, frozen.
        const double frozen = 0.69314718055994529;
        o.require(std::abs(s1) <= 1e-12, "S(N=1)", s1);
        o.require(s2 > 0.1, "S(N=2)", s2);
        o.require(std::abs(s2 - frozen) <= 1e-12, "|S(N=2)-frozen|", std::abs(s2 - frozen));
        o.require(std::abs(s_inf) <= 1e-12, "S_infinity", s_inf);
        return o;
    });

    criterion("AC9", "validate is byte-identical across runs", 0.0, [] {
        const auto a = validate();
        const auto b = validate();
        Outcome o;
        const bool same = report_json(a) == report_json(b) && checks_csv(a) == checks_csv(b);
        o.require(same, "identical", same ? 1.0 : 0.0);
        o.require(a.passed(), "validate_passed", a.passed() ? 1.0 : 0.0);
        return o;
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
