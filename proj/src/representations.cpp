#include "ccrlab/representations.hpp"

#include "ccrlab/errors.hpp"
#include "ccrlab/fock.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ccrlab {

// ---------------------------------------------------------------------------
// VacuumProfile

VacuumProfile::VacuumProfile(std::vector<std::string> labels, std::vector<Complex> amplitudes)
    : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
    if (labels_.empty()) throw ValidationError("vacuum profile needs at least one label");
    if (labels_.size() != amplitudes_.size()) {
        throw ValidationError("vacuum profile: label and amplitude counts differ");
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw ValidationError("vacuum profile: duplicate label");

    probabilities_.reserve(amplitudes_.size());
    double total = 0.0;
    for (const auto& o : amplitudes_) {
        if (!std::isfinite(o.real()) || !std::isfinite(o.imag())) {
            throw ValidationError("vacuum profile: non-finite amplitude");
        }
        probabilities_.push_back(std::norm(o));
        total += probabilities_.back();
    }
    if (std::abs(total - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "vacuum profile: probabilities sum to " << total << ", expected 1";
        throw ValidationError(os.str());
    }
    z_max_ = *std::max_element(probabilities_.begin(), probabilities_.end());
}

VacuumProfile VacuumProfile::from_probabilities(std::vector<std::string> labels,
                                                const std::vector<double>& probabilities) {
    std::vector<Complex> amps;
    amps.reserve(probabilities.size());
    for (double z : probabilities) {
        if (!(z >= 0.0)) throw DomainError("vacuum profile: negative probability");
        amps.emplace_back(std::sqrt(z), 0.0);
    }
    VacuumProfile profile(std::move(labels), std::move(amps));
    // Keep the caller's Z_k exactly; |sqrt(z)|^2 can be off by an ulp.
    profile.probabilities_ = probabilities;
    profile.z_max_ = *std::max_element(probabilities.begin(), probabilities.end());
    return profile;
}

namespace {

std::vector<std::string> default_labels(std::size_t count) {
    std::vector<std::string> labels;
    labels.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) labels.push_back("k" + std::to_string(i));
    return labels;
}

}  // namespace

VacuumProfile VacuumProfile::uniform(std::size_t count) {
    if (count == 0) throw ValidationError("uniform profile needs at least one label");
    return from_probabilities(default_labels(count),
                              std::vector<double>(count, 1.0 / static_cast<double>(count)));
}

VacuumProfile VacuumProfile::plateau(std::size_t count, std::size_t window_begin,
                                     std::size_t window_end, double rolloff) {
    if (count == 0) throw ValidationError("plateau profile needs at least one label");
    if (window_begin > window_end || window_end >= count) {
        throw ConfigError("plateau profile: window must satisfy begin <= end < count");
    }
    if (!(rolloff >= 0.0)) throw DomainError("plateau profile: rolloff must be >= 0");
    std::vector<double> g(count);
    for (std::size_t i = 0; i < count; ++i) {
        double dist = 0.0;
        if (i < window_begin) dist = static_cast<double>(window_begin - i);
        if (i > window_end) dist = static_cast<double>(i - window_end);
        g[i] = std::exp(-rolloff * dist);
    }
    const double sum = std::accumulate(g.begin(), g.end(), 0.0);
    for (auto& v : g) v /= sum;
    // Renormalise once more so the sum is 1 to the last bit the validator checks.
    const double resum = std::accumulate(g.begin(), g.end(), 0.0);
    for (auto& v : g) v /= resum;
    return from_probabilities(default_labels(count), g);
}

std::size_t VacuumProfile::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw ConfigError("vacuum profile has no label '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

// ---------------------------------------------------------------------------
// RepresentationInstance

std::string to_string(RepresentationKind kind) {
    switch (kind) {
        case RepresentationKind::Infinity: return "infinity";
        case RepresentationKind::Berezin: return "berezin";
        case RepresentationKind::Reducible: return "reducible";
    }
    return "unknown";
}

const ModeOperators& RepresentationInstance::mode(const std::string& label) const {
    for (const auto& m : modes) {
        if (m.label == label) return m;
    }
    throw ConfigError("representation has no mode '" + label + "'");
}

std::vector<std::string> RepresentationInstance::mode_labels() const {
    std::vector<std::string> out;
    for (const auto& m : modes) out.push_back(m.label);
    return out;
}

double RepresentationInstance::renormalization_z() const {
    if (const auto* p = std::get_if<ReducibleParams>(&params)) return p->profile.z_max();
    throw ConfigError("renormalization constant Z exists only for the reducible representation");
}

RepresentationInstance build_infinity_two_mode(std::size_t n_max) {
    if (n_max < 1) throw ConfigError("infinity representation needs n_max >= 1");
    const std::size_t d = n_max + 1;
    const ComplexMatrix a = fock::annihilation(n_max);
    const ComplexMatrix id = identity(d);

    RepresentationInstance rep;
    rep.kind = RepresentationKind::Infinity;
    rep.params = InfinityParams{n_max};
    const std::size_t field = d * d;
    rep.modes.push_back({"mode1", kron(a, id), identity(field)});
    rep.modes.push_back({"mode2", kron(id, a), identity(field)});

    HilbertFactorization fact({{"mode1", d}, {"mode2", d}});
    rep.vacuum = StateVector(kron(fock::number_state(n_max, 0), fock::number_state(n_max, 0)), fact);
    const ComplexMatrix n = fock::number_operator(n_max);
    rep.number_operator = kron(n, id) + kron(id, n);
    rep.below_truncation.resize(field);
    for (std::size_t i = 0; i < field; ++i) {
        rep.below_truncation[i] = (i / d) < n_max && (i % d) < n_max;
    }
    return rep;
}

RepresentationInstance build_berezin(std::size_t modes, std::size_t total_cutoff,
                                     const std::vector<std::size_t>& selected_modes) {
    if (modes < 1) throw ConfigError("berezin representation needs d >= 1");
    if (total_cutoff < 1) throw ConfigError("berezin representation needs cutoff >= 1");
    for (auto m : selected_modes) {
        if (m < 1 || m > modes) {
            throw ConfigError("berezin: selected mode " + std::to_string(m) + " outside 1.." +
                              std::to_string(modes));
        }
    }

    // Occupation tuples ordered by total quanta, then lexicographically; the
    // vacuum (0,...,0) is index 0.
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> cur(modes, 0);
    for (std::size_t total = 0; total <= total_cutoff; ++total) {
        std::vector<std::vector<std::size_t>> level;
        // enumerate compositions of `total` into `modes` parts
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t slot, std::size_t left) {
            if (slot + 1 == modes) {
                cur[slot] = left;
                level.push_back(cur);
                return;
            }
            for (std::size_t k = left + 1; k-- > 0;) {
                cur[slot] = k;
                rec(slot + 1, left - k);
            }
        };
        rec(0, total);
        tuples.insert(tuples.end(), level.begin(), level.end());
    }
    std::map<std::vector<std::size_t>, Eigen::Index> index;
    for (std::size_t i = 0; i < tuples.size(); ++i) index[tuples[i]] = static_cast<Eigen::Index>(i);

    const auto dim = static_cast<Eigen::Index>(tuples.size());
    RepresentationInstance rep;
    rep.kind = RepresentationKind::Berezin;
    rep.params = BerezinParams{modes, total_cutoff};

    for (auto m : selected_modes) {
        const std::size_t slot = m - 1;
        ComplexMatrix create = ComplexMatrix::Zero(dim, dim);
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            const auto& t = tuples[i];
            const std::size_t total = std::accumulate(t.begin(), t.end(), std::size_t{0});
            if (total >= total_cutoff) continue;
            auto up = t;
            ++up[slot];
            create(index.at(up), static_cast<Eigen::Index>(i)) =
                std::sqrt(static_cast<double>(up[slot]));
        }
        rep.modes.push_back({"f" + std::to_string(m), create.adjoint(), identity(tuples.size())});
    }

    ComplexVector vac = ComplexVector::Zero(dim);
    vac(0) = 1.0;
    rep.vacuum = StateVector(vac, HilbertFactorization({{"field", tuples.size()}}));
    rep.number_operator = ComplexMatrix::Zero(dim, dim);
    rep.below_truncation.resize(tuples.size());
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        const std::size_t total = std::accumulate(tuples[i].begin(), tuples[i].end(), std::size_t{0});
        rep.number_operator(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
            static_cast<double>(total);
        rep.below_truncation[i] = total < total_cutoff;
    }
    return rep;
}

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t ceiling) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (out > ceiling / base) {
            std::ostringstream os;
            os << "brute-force dimension " << base << "^" << exp << " exceeds ceiling " << ceiling;
            throw SizeError(os.str());
        }
        out *= base;
    }
    return out;
}

ComplexMatrix local_mode_projector(std::size_t labels, std::size_t k, std::size_t n_max) {
    ComplexMatrix p = ComplexMatrix::Zero(static_cast<Eigen::Index>(labels),
                                          static_cast<Eigen::Index>(labels));
    p(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = 1.0;
    return kron(p, identity(n_max + 1));
}

}  // namespace

RepresentationInstance build_reducible(std::size_t oscillators, const VacuumProfile& profile,
                                       std::size_t n_max,
                                       const std::vector<std::string>& selected_modes,
                                       std::size_t ceiling) {
    if (oscillators < 1) throw ConfigError("reducible representation needs N >= 1");
    if (selected_modes.size() > profile.size()) {
        throw ConfigError("reducible representation: more selected modes than profile labels");
    }
    const std::size_t labels = profile.size();
    const std::size_t local_dim = labels * (n_max + 1);
    const std::size_t field_dim = checked_power(local_dim, oscillators, ceiling);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(oscillators));
    const double inv_n = 1.0 / static_cast<double>(oscillators);

    const ComplexMatrix a = fock::annihilation(n_max);

    RepresentationInstance rep;
    rep.kind = RepresentationKind::Reducible;
    rep.params = ReducibleParams{oscillators, profile, n_max};

    for (const auto& label : selected_modes) {
        const std::size_t k = profile.index_of(label);
        const ComplexMatrix proj = local_mode_projector(labels, k, n_max);
        const ComplexMatrix a_local = proj * kron(identity(labels), a);
        ComplexMatrix a_bar = ComplexMatrix::Zero(static_cast<Eigen::Index>(field_dim),
                                                  static_cast<Eigen::Index>(field_dim));
        ComplexMatrix i_bar = a_bar;
        for (std::size_t n = 0; n < oscillators; ++n) {
            a_bar += embed(a_local, n, oscillators);
            i_bar += embed(proj, n, oscillators);
        }
        rep.modes.push_back({label, inv_sqrt_n * a_bar, inv_n * i_bar});
    }

    ComplexVector single = ComplexVector::Zero(static_cast<Eigen::Index>(local_dim));
    for (std::size_t k = 0; k < labels; ++k) {
        single(static_cast<Eigen::Index>(k * (n_max + 1))) = profile.amplitudes()[k];
    }
    ComplexVector vac = single;
    std::vector<Factor> factors{{"osc1", local_dim}};
    for (std::size_t n = 1; n < oscillators; ++n) {
        vac = kron(vac, single);
        factors.push_back({"osc" + std::to_string(n + 1), local_dim});
    }
    rep.vacuum = StateVector(vac, HilbertFactorization(std::move(factors)));

    const ComplexMatrix n_local = kron(identity(labels), fock::number_operator(n_max));
    rep.number_operator = ComplexMatrix::Zero(static_cast<Eigen::Index>(field_dim),
                                              static_cast<Eigen::Index>(field_dim));
    for (std::size_t n = 0; n < oscillators; ++n) rep.number_operator += embed(n_local, n, oscillators);

    rep.below_truncation.resize(field_dim);
    for (std::size_t idx = 0; idx < field_dim; ++idx) {
        bool ok = true;
        for (std::size_t rest = idx, n = 0; n < oscillators; ++n, rest /= local_dim) {
            if ((rest % local_dim) % (n_max + 1) >= n_max) ok = false;
        }
        rep.below_truncation[idx] = ok;
    }
    return rep;
}

CentralSpectrum central_spectral_projectors(const RepresentationInstance& rep,
                                            const std::string& mode) {
    const auto* params = std::get_if<ReducibleParams>(&rep.params);
    if (params == nullptr) {
        throw ValidationError("central spectral projectors need a reducible representation");
    }
    const std::size_t n_osc = params->oscillators;
    if (n_osc >= 63) throw SizeError("central spectral projectors: too many oscillators");
    const ComplexMatrix p = local_mode_projector(params->profile.size(),
                                                 params->profile.index_of(mode), params->n_max);
    const ComplexMatrix q = identity(static_cast<std::size_t>(p.rows())) - p;

    CentralSpectrum out;
    out.mode = mode;
    const auto dim = static_cast<Eigen::Index>(rep.field_dim());
    out.projectors.assign(n_osc + 1, ComplexMatrix::Zero(dim, dim));
    for (std::size_t s = 0; s <= n_osc; ++s) {
        out.eigenvalues.push_back(static_cast<double>(s) / static_cast<double>(n_osc));
    }
    std::vector<ComplexMatrix> chain(n_osc);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_osc); ++mask) {
        for (std::size_t n = 0; n < n_osc; ++n) chain[n] = ((mask >> n) & 1U) ? p : q;
        out.projectors[static_cast<std::size_t>(std::popcount(mask))] += kron_all(chain);
    }
    return out;
}

// ---------------------------------------------------------------------------
// CCR report

double CcrReport::max_commutator() const {
    double m = 0.0;
    for (const auto& d : commutators) m = std::max(m, d.value);
    return m;
}

double CcrReport::max_centrality() const {
    double m = 0.0;
    for (const auto& d : centrality) m = std::max(m, d.value);
    return m;
}

CcrReport ccr_check(const RepresentationInstance& rep) {
    const auto dim = static_cast<Eigen::Index>(rep.field_dim());
    RealVector mask(dim);
    for (Eigen::Index i = 0; i < dim; ++i) mask(i) = rep.below_truncation[static_cast<std::size_t>(i)] ? 1.0 : 0.0;

    CcrReport report;
    for (const auto& m : rep.modes) {
        for (const auto& o : rep.modes) {
            ComplexMatrix c = commutator(m.annihilation, o.annihilation.adjoint());
            if (m.label == o.label) c -= m.central;
            report.commutators.push_back({m.label, o.label, max_abs(c * mask.asDiagonal())});
            const double cent = std::max(max_abs(commutator(m.central, o.annihilation)),
                                         max_abs(commutator(m.central, o.annihilation.adjoint())));
            report.centrality.push_back({m.label, o.label, cent});
        }
        report.vacuum_annihilation =
            std::max(report.vacuum_annihilation, (m.annihilation * rep.vacuum.amplitudes).norm());
    }
    return report;
}

}  // namespace ccrlab
