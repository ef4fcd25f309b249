#pragma once

#include "ccrlab/linalg.hpp"

#include <cstddef>

namespace ccrlab::fock {

// Single oscillator truncated at occupation n_max; dim = n_max + 1.
struct TruncatedOscillator {
    std::size_t n_max{1};

    std::size_t dim() const noexcept { return n_max + 1; }
};

// a with a[n-1, n] = sqrt(n).
ComplexMatrix annihilation(std::size_t n_max);
ComplexMatrix creation(std::size_t n_max);
// a^dagger a = diag(0, 1, ..., n_max)
ComplexMatrix number_operator(std::size_t n_max);

// [a, a^dagger] - I. Zero except the (n_max, n_max) entry, which is -(n_max + 1).
ComplexMatrix commutator_defect(std::size_t n_max);

// Basis vector |n> in the truncated space.
ComplexVector number_state(std::size_t n_max, std::size_t n);

}  // namespace ccrlab::fock
