#include "ccrlab/fock.hpp"

#include "ccrlab/errors.hpp"

#include <cmath>

namespace ccrlab::fock {

ComplexMatrix annihilation(std::size_t n_max) {
    const auto d = static_cast<Eigen::Index>(n_max + 1);
    ComplexMatrix a = ComplexMatrix::Zero(d, d);
    for (Eigen::Index n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

ComplexMatrix creation(std::size_t n_max) {
    return annihilation(n_max).adjoint();
}

ComplexMatrix number_operator(std::size_t n_max) {
    const auto d = static_cast<Eigen::Index>(n_max + 1);
    ComplexMatrix n = ComplexMatrix::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k) n(k, k) = static_cast<double>(k);
    return n;
}

ComplexMatrix commutator_defect(std::size_t n_max) {
    const ComplexMatrix a = annihilation(n_max);
    return commutator(a, a.adjoint()) - identity(n_max + 1);
}

ComplexVector number_state(std::size_t n_max, std::size_t n) {
    if (n > n_max) throw DomainError("number_state: occupation above truncation");
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(n_max + 1));
    v(static_cast<Eigen::Index>(n)) = 1.0;
    return v;
}

}  // namespace ccrlab::fock
