// representations.hpp: concrete matrix realisations of the canonical
// commutation relations [a_k, a_k'^dagger] = delta_kk' I_k with I_k central.
//
// Three families are built:
//   - Infinity:  two-mode reduction of the infinite tensor product, a_1 = a ⊗ 1,
//                a_2 = 1 ⊗ a, vacuum |0>|0>.
//   - Berezin:   a single symmetric Fock space in the occupation-number basis over
//                d abstract orthonormal modes, unique vacuum.
//   - Reducible: N oscillators each carrying every mode label k. The N = 1
//                operators are a_k = |k><k| ⊗ a and I_k = |k><k| ⊗ 1; the
//                collective ones average them over the N factors.

#pragma once

#include "ccrlab/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ccrlab {

inline constexpr std::size_t kDefaultBruteForceCeiling = 4096;

// Vacuum wave function of the reducible representation: amplitudes O_k over the
// mode labels, probabilities Z_k = |O_k|^2 and their maximum Z.
class VacuumProfile {
public:
    VacuumProfile(std::vector<std::string> labels, std::vector<Complex> amplitudes);

    // O_k = sqrt(Z_k); phases carry no physics here.
    static VacuumProfile from_probabilities(std::vector<std::string> labels,
                                            const std::vector<double>& probabilities);
    static VacuumProfile uniform(std::size_t count);
    // Unit plateau over [window_begin, window_end] (inclusive label indices) with
    // exp(-rolloff * distance) tails on both sides, then normalised.
    static VacuumProfile plateau(std::size_t count, std::size_t window_begin, std::size_t window_end,
                                 double rolloff);

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
    const std::vector<double>& probabilities() const noexcept { return probabilities_; }
    double z_max() const noexcept { return z_max_; }
    std::size_t size() const noexcept { return labels_.size(); }
    std::size_t index_of(const std::string& label) const;
    double probability(const std::string& label) const { return probabilities_[index_of(label)]; }

private:
    std::vector<std::string> labels_;
    std::vector<Complex> amplitudes_;
    std::vector<double> probabilities_;
    double z_max_{0.0};
};

enum class RepresentationKind { Infinity, Berezin, Reducible };

std::string to_string(RepresentationKind kind);

struct ModeOperators {
    std::string label;
    ComplexMatrix annihilation;
    ComplexMatrix central;  // I_k
};

struct InfinityParams {
    std::size_t n_max{1};
};

struct BerezinParams {
    std::size_t modes{2};
    std::size_t total_cutoff{1};
};

struct ReducibleParams {
    std::size_t oscillators{1};
    VacuumProfile profile;
    std::size_t n_max{1};
};

struct RepresentationInstance {
    RepresentationKind kind{RepresentationKind::Infinity};
    std::vector<ModeOperators> modes;
    StateVector vacuum;
    // Total field quanta; used for excitation-number bookkeeping.
    ComplexMatrix number_operator;
    // Per field basis state: true when no oscillator sits at its truncation, so
    // one more creation is represented exactly.
    std::vector<bool> below_truncation;
    std::variant<InfinityParams, BerezinParams, ReducibleParams> params;

    const HilbertFactorization& factorization() const noexcept { return vacuum.factorization; }
    std::size_t field_dim() const noexcept { return vacuum.dim(); }
    const ModeOperators& mode(const std::string& label) const;
    std::vector<std::string> mode_labels() const;
    // Z of the vacuum profile; throws unless the representation is reducible.
    double renormalization_z() const;
};

RepresentationInstance build_infinity_two_mode(std::size_t n_max);

// selected_modes are 1-based indices into the d abstract modes f_1..f_d.
RepresentationInstance build_berezin(std::size_t modes, std::size_t total_cutoff,
                                     const std::vector<std::size_t>& selected_modes);

RepresentationInstance build_reducible(std::size_t oscillators, const VacuumProfile& profile,
                                       std::size_t n_max,
                                       const std::vector<std::string>& selected_modes,
                                       std::size_t ceiling = kDefaultBruteForceCeiling);

// Spectral resolution of the central element Ī_k = Σ_s (s/N) E_k(s).
struct CentralSpectrum {
    std::string mode;
    std::vector<ComplexMatrix> projectors;  // E_k(s), s = 0..N
    std::vector<double> eigenvalues;        // s / N
};

CentralSpectrum central_spectral_projectors(const RepresentationInstance& rep,
                                            const std::string& mode);

// Binomial vacuum weight C(N,s) Z1^s (1-Z1)^(N-s).
double vacuum_weight(std::int64_t n, std::int64_t s, double z1);
// Joint multinomial weight C(N; s, s') Z1^s Z2^s' (1-Z1-Z2)^(N-s-s'); zero when s+s' > N.
double vacuum_weight(std::int64_t n, std::int64_t s, std::int64_t s_prime, double z1, double z2);

struct CcrDeviation {
    std::string mode;
    std::string other;
    double value{0.0};
};

struct CcrReport {
    std::vector<CcrDeviation> commutators;  // |[a_k, a_k'^dagger] - δ I_k| on the safe subspace
    std::vector<CcrDeviation> centrality;   // |[I_k, a_k']| and |[I_k, a_k'^dagger]|
    double vacuum_annihilation{0.0};        // max_k |a_k vacuum|
    double max_commutator() const;
    double max_centrality() const;
};

CcrReport ccr_check(const RepresentationInstance& rep);

}  // namespace ccrlab
