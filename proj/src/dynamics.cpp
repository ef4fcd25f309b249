#include "ccrlab/dynamics.hpp"

#include "binomial.hpp"
#include "ccrlab/entanglement.hpp"
#include "ccrlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ccrlab {

namespace atom {

ComplexMatrix lowering() {
    ComplexMatrix r = ComplexMatrix::Zero(2, 2);
    r(kGround, kExcited) = 1.0;
    return r;
}

ComplexVector excited() {
    ComplexVector v = ComplexVector::Zero(2);
    v(kExcited) = 1.0;
    return v;
}

ComplexVector ground() {
    ComplexVector v = ComplexVector::Zero(2);
    v(kGround) = 1.0;
    return v;
}

}  // namespace atom

// ---------------------------------------------------------------------------
// AtomicDensity

namespace {

constexpr double kTolAtomic = 1e-12;
constexpr double kTolAtomicPsd = 1e-10;
constexpr std::int64_t kMaxAnalyticN = 1'000'000;
// Binomial terms below this fraction of the modal term are dropped from the
// double sum; the discarded mass is far below double precision.
constexpr double kSupportCutoff = 1e-35;

void validate_atomic(const Eigen::Matrix4cd& m) {
    if (!m.allFinite()) throw ValidationError("atomic density: non-finite entry");
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kTolAtomic) {
        std::ostringstream os;
        os << "atomic density: Hermiticity defect " << herm;
        throw ValidationError(os.str());
    }
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > kTolAtomic) {
        std::ostringstream os;
        os << "atomic density: trace " << tr;
        throw ValidationError(os.str());
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kTolAtomicPsd) {
        std::ostringstream os;
        os << "atomic density: eigenvalue " << es.eigenvalues().minCoeff();
        throw PositivityError(os.str());
    }
}

}  // namespace

AtomicDensity::AtomicDensity(const Eigen::Matrix4cd& m) : m_(m) {
    validate_atomic(m_);
}

AtomicDensity::AtomicDensity(const ComplexMatrix& m) {
    if (m.rows() != 4 || m.cols() != 4) throw ValidationError("atomic density must be 4x4");
    m_ = m;
    validate_atomic(m_);
}

HilbertFactorization AtomicDensity::factorization() {
    return HilbertFactorization({{"atom1", 2}, {"atom2", 2}});
}

// ---------------------------------------------------------------------------
// Closed-form propagator

ComplexMatrix atom_field_generator(const ComplexMatrix& a) {
    const ComplexMatrix r = atom::lowering();
    return kron(r.adjoint(), a) + kron(r, ComplexMatrix(a.adjoint()));
}

namespace detail {

ComplexMatrix closed_form_evolution_signed(const ComplexMatrix& a, double t, double sinc_sign) {
    if (a.rows() != a.cols()) throw ValidationError("closed_form_evolution: A must be square");
    const Eigen::Index n = a.rows();
    const ComplexMatrix aad = a * a.adjoint();
    const ComplexMatrix ada = a.adjoint() * a;
    auto cos_f = [t](double x) { return std::cos(t * std::sqrt(x)); };
    auto sinc_f = [t](double x) { return sinc_scaled(x, t); };
    const Complex minus_it{0.0, -t * sinc_sign};

    ComplexMatrix u(2 * n, 2 * n);
    // Block rows/cols: first |+>, then |->.
    u.block(0, 0, n, n) = matrix_function_psd(aad, cos_f);
    u.block(n, n, n, n) = matrix_function_psd(ada, cos_f);
    u.block(0, n, n, n) = minus_it * matrix_function_psd(aad, sinc_f) * a;
    u.block(n, 0, n, n) = minus_it * matrix_function_psd(ada, sinc_f) * a.adjoint();
    return u;
}

}  // namespace detail

ComplexMatrix closed_form_evolution(const ComplexMatrix& a, double t) {
    return detail::closed_form_evolution_signed(a, t, 1.0);
}

// ---------------------------------------------------------------------------
// Jaynes-Cummings assembly

std::vector<ModeAtomPair> default_pairs(const RepresentationInstance& rep) {
    if (rep.modes.size() < 2) throw ConfigError("two coupled modes are required");
    return {{rep.modes[0].label, 1}, {rep.modes[1].label, 2}};
}

HilbertFactorization full_factorization(const RepresentationInstance& rep) {
    return AtomicDensity::factorization().concat(rep.factorization());
}

namespace {

ComplexMatrix atom_operator(const ComplexMatrix& single, int which) {
    const ComplexMatrix id2 = identity(2);
    if (which == 1) return kron(single, id2);
    if (which == 2) return kron(id2, single);
    throw ConfigError("atom index must be 1 or 2, got " + std::to_string(which));
}

}  // namespace

ComplexMatrix jc_term(const RepresentationInstance& rep, const ModeAtomPair& pair) {
    const ComplexMatrix rk = atom_operator(atom::lowering(), pair.atom);
    const ComplexMatrix& a = rep.mode(pair.mode).annihilation;
    const Complex i{0.0, 1.0};
    return kron(ComplexMatrix(rk.adjoint()), ComplexMatrix(i * a)) -
           kron(rk, ComplexMatrix(i * a.adjoint()));
}

ComplexMatrix jc_hamiltonian(const RepresentationInstance& rep, const std::vector<ModeAtomPair>& pairs) {
    if (pairs.empty()) throw ConfigError("jc_hamiltonian: no mode-atom pairs");
    bool used[3] = {false, false, false};
    for (const auto& p : pairs) {
        if (p.atom != 1 && p.atom != 2) {
            throw ConfigError("atom index must be 1 or 2, got " + std::to_string(p.atom));
        }
        if (used[p.atom]) {
            throw ConfigError("atom " + std::to_string(p.atom) + " is coupled to more than one mode");
        }
        used[p.atom] = true;
    }
    const auto dim = static_cast<Eigen::Index>(4 * rep.field_dim());
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    for (const auto& p : pairs) h += jc_term(rep, p);
    return h;
}

ComplexMatrix excitation_number(const RepresentationInstance& rep) {
    const ComplexMatrix r = atom::lowering();
    const ComplexMatrix up = r.adjoint() * r;
    const ComplexMatrix atoms = atom_operator(up, 1) + atom_operator(up, 2);
    return kron(atoms, identity(rep.field_dim())) + kron(identity(4), rep.number_operator);
}

StateVector beam_splitter_initial_state(const RepresentationInstance& rep) {
    if (rep.modes.size() < 2) throw ConfigError("beam-splitter state needs two modes");
    const ComplexVector photon = (rep.modes[0].annihilation.adjoint() * rep.vacuum.amplitudes +
                                  rep.modes[1].annihilation.adjoint() * rep.vacuum.amplitudes) /
                                 std::sqrt(2.0);
    const double n = photon.norm();
    if (n == 0.0) throw DomainError("beam-splitter state vanishes (zero vacuum weight on both modes)");
    const ComplexVector atoms = kron(atom::ground(), atom::ground());
    return StateVector(kron(atoms, ComplexVector(photon / n)), full_factorization(rep));
}

StateVector evolve(const RepresentationInstance& rep, const ComplexMatrix& h, const StateVector& psi0,
                   double t, bool renormalize) {
    if (h.rows() != h.cols() || static_cast<std::size_t>(h.rows()) != psi0.dim()) {
        std::ostringstream os;
        os << "evolve: generator is " << h.rows() << "x" << h.cols() << " but state has dimension "
           << psi0.dim();
        throw ValidationError(os.str());
    }
    if (std::abs(psi0.norm() - 1.0) > 1e-10) throw ValidationError("evolve: initial state not normalized");
    const double scale = renormalize ? 1.0 / std::sqrt(rep.renormalization_z()) : 1.0;
    const ComplexMatrix u = expm_generator(scale * h, t);
    return StateVector(u * psi0.amplitudes, psi0.factorization);
}

AtomicDensity atomic_reduction(const StateVector& psi) {
    const Bipartition atoms(psi.factorization, {"atom1", "atom2"});
    return AtomicDensity(partial_trace(psi, atoms).matrix());
}

// ---------------------------------------------------------------------------
// Closed-form atomic density matrices

namespace {

Eigen::Matrix4cd atomic_matrix(double minus_minus, double plus_minus, double minus_plus,
                               double coherence) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(atom::kMinusMinus, atom::kMinusMinus) = minus_minus;
    m(atom::kPlusMinus, atom::kPlusMinus) = plus_minus;
    m(atom::kMinusPlus, atom::kMinusPlus) = minus_plus;
    m(atom::kPlusMinus, atom::kMinusPlus) = coherence;
    m(atom::kMinusPlus, atom::kPlusMinus) = coherence;
    return m;
}

void check_profile_args(double z1, double z2, double z) {
    std::ostringstream os;
    if (!(z1 > 0.0) || !(z2 > 0.0)) {
        os << "Z1 and Z2 must be positive (got " << z1 << ", " << z2 << ")";
    } else if (z1 + z2 > 1.0 + 1e-12) {
        os << "Z1 + Z2 = " << z1 + z2 << " exceeds 1";
    } else if (!(z <= 1.0 + 1e-12) || z < std::max(z1, z2) - 1e-12) {
        os << "Z = " << z << " must lie in [max(Z1, Z2), 1]";
    } else {
        return;
    }
    throw DomainError(os.str());
}

// Compensated summation keeps the O(N) sums accurate at N = 1e6.
struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + comp; }
};

}  // namespace

AtomicDensity rho_atoms_irreducible(double t) {
    const double c2 = std::cos(t) * std::cos(t);
    const double s2 = std::sin(t) * std::sin(t);
    return AtomicDensity(atomic_matrix(c2, 0.5 * s2, 0.5 * s2, 0.5 * s2));
}

AtomicDensity rho_atoms_reducible(double t, std::int64_t n, double z1, double z2, double z) {
    if (n < 1 || n > kMaxAnalyticN) {
        throw DomainError("rho_atoms_reducible: N must lie in [1, 1e6], got " + std::to_string(n));
    }
    if (!std::isfinite(t)) throw DomainError("rho_atoms_reducible: t must be finite");
    check_profile_args(z1, z2, z);

    const auto nd = static_cast<double>(n);
    // sin(t sqrt(s/(NZ))) sqrt(s/N) and the matching squared sine/cosine.
    std::vector<double> amp(static_cast<std::size_t>(n) + 1);
    std::vector<double> sin2(amp.size());
    std::vector<double> cos2(amp.size());
    for (std::int64_t s = 0; s <= n; ++s) {
        const double frac = static_cast<double>(s) / nd;
        const double arg = t * std::sqrt(frac / z);
        const double sn = std::sin(arg);
        const double cs = std::cos(arg);
        amp[static_cast<std::size_t>(s)] = sn * std::sqrt(frac);
        sin2[static_cast<std::size_t>(s)] = sn * sn;
        cos2[static_cast<std::size_t>(s)] = cs * cs;
    }

    NeumaierSum mm;
    NeumaierSum pm;
    NeumaierSum mp;
    for (std::int64_t s = 1; s <= n; ++s) {
        const auto i = static_cast<std::size_t>(s);
        const double frac = static_cast<double>(s) / nd;
        const double w1 = detail::binomial_pmf(n, s, z1) * frac;
        const double w2 = detail::binomial_pmf(n, s, z2) * frac;
        mm.add(cos2[i] * (w1 + w2));
        pm.add(sin2[i] * w1);
        mp.add(sin2[i] * w2);
    }

    // Joint term: multinomial(N; s, s') = Binom(N, s; Z1) Binom(N - s, s'; Z2/(1 - Z1)).
    NeumaierSum coh;
    const double conditional = std::min(1.0, z2 / (1.0 - z1));
    const auto [lo, hi] = detail::binomial_support(n, z1, kSupportCutoff);
    for (std::int64_t s = std::max<std::int64_t>(lo, 1); s <= hi; ++s) {
        const double outer = detail::binomial_pmf(n, s, z1) * amp[static_cast<std::size_t>(s)];
        if (outer == 0.0) continue;
        const std::int64_t rest = n - s;
        if (rest < 1) continue;
        const auto [lo2, hi2] = detail::binomial_support(rest, conditional, kSupportCutoff);
        const std::int64_t first = std::max<std::int64_t>(lo2, 1);
        const auto row = detail::binomial_row(rest, conditional, first, hi2);
        NeumaierSum inner;
        for (std::int64_t sp = first; sp <= hi2; ++sp) {
            inner.add(row[static_cast<std::size_t>(sp - first)] * amp[static_cast<std::size_t>(sp)]);
        }
        coh.add(outer * inner.value());
    }

    const double pref = 1.0 / (z1 + z2);
    return AtomicDensity(
        atomic_matrix(pref * mm.value(), pref * pm.value(), pref * mp.value(), pref * coh.value()));
}

AtomicDensity rho_atoms_limit(double t, double z1, double z2, double z) {
    if (!std::isfinite(t)) throw DomainError("rho_atoms_limit: t must be finite");
    check_profile_args(z1, z2, z);
    const double sum = z1 + z2;
    const double a1 = t * std::sqrt(z1 / z);
    const double a2 = t * std::sqrt(z2 / z);
    const double c1 = std::cos(a1), s1 = std::sin(a1);
    const double c2 = std::cos(a2), s2 = std::sin(a2);
    const double mm = (z1 * c1 * c1 + z2 * c2 * c2) / sum;
    const double pm = z1 / sum * s1 * s1;
    const double mp = z2 / sum * s2 * s2;
    const double coh = std::sqrt(z1 / sum) * s1 * std::sqrt(z2 / sum) * s2;
    return AtomicDensity(atomic_matrix(mm, pm, mp, coh));
}

double normalization_constant(double z1, double z2) {
    if (!(z1 + z2 > 0.0)) throw DomainError("normalization_constant: Z1 + Z2 must be positive");
    return std::sqrt(2.0 / (z1 + z2));
}

}  // namespace ccrlab
