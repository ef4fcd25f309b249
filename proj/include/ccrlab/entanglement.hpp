// entanglement.hpp: partial traces and bipartite entanglement measures.
//
// Entanglement is only defined relative to a declared factorization, so every
// measure here takes an explicit Bipartition of a HilbertFactorization.

#pragma once

#include "ccrlab/dynamics.hpp"
#include "ccrlab/linalg.hpp"

#include <string>
#include <vector>

namespace ccrlab {

inline constexpr double kTolDensity = 1e-10;

// Hermitian, unit-trace, positive semidefinite matrix on a factorization.
class DensityMatrix {
public:
    DensityMatrix(ComplexMatrix m, HilbertFactorization f);

    static DensityMatrix from_state(const StateVector& psi);
    static DensityMatrix from_atomic(const AtomicDensity& rho);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    const HilbertFactorization& factorization() const noexcept { return f_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }

private:
    struct Trusted {};
    DensityMatrix(ComplexMatrix m, HilbertFactorization f, Trusted);

    ComplexMatrix m_;
    HilbertFactorization f_;
};

// Which factors are kept. Kept factors retain their original relative order.
class Bipartition {
public:
    Bipartition(HilbertFactorization whole, const std::vector<std::string>& keep);

    const HilbertFactorization& whole() const noexcept { return whole_; }
    const std::vector<std::size_t>& keep() const noexcept { return keep_; }
    const std::vector<std::size_t>& discard() const noexcept { return discard_; }
    HilbertFactorization kept_factorization() const;
    std::size_t keep_dim() const noexcept;
    std::size_t discard_dim() const noexcept;

    // table[i * discard_dim + r] = full index of (kept index i, discarded index r)
    std::vector<Eigen::Index> index_table() const;

private:
    HilbertFactorization whole_;
    std::vector<std::size_t> keep_;
    std::vector<std::size_t> discard_;
};

DensityMatrix partial_trace(const DensityMatrix& rho, const Bipartition& part);
DensityMatrix partial_trace(const StateVector& psi, const Bipartition& part);

// Singular values of the kept x discarded amplitude matrix, nonincreasing.
std::vector<double> schmidt_coefficients(const StateVector& psi, const Bipartition& part);

// Natural-log entropy -Σ p ln p of the spectrum.
double von_neumann_entropy(const DensityMatrix& rho);
double von_neumann_entropy(const ComplexMatrix& rho);
// Entropy of the kept marginal of a pure state, from its Schmidt coefficients.
double entanglement_entropy(const StateVector& psi, const Bipartition& part);

// Wootters concurrence.
double concurrence(const AtomicDensity& rho);
double concurrence(const ComplexMatrix& rho);

// (1/2) Σ |eig(rho - sigma)|
double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);
double trace_distance(const AtomicDensity& rho, const AtomicDensity& sigma);

// Operator Schmidt coefficients of `op` across the bipartition, normalised so
// their squares sum to 1. A single nonzero coefficient means op = A ⊗ B.
std::vector<double> operator_schmidt_coefficients(const ComplexMatrix& op, const Bipartition& part);

}  // namespace ccrlab
