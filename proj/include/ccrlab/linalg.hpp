// linalg.hpp: dense complex linear algebra shared by every other module.
//
// Matrices are plain Eigen dense types. Spectral routines go through a single
// Hermitian eigensolver so all matrix functions share the same residual bound.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ccrlab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kTolHermitian = 1e-12;
inline constexpr double kTolPsd = 1e-10;
inline constexpr double kSincSeriesThreshold = 1e-4;

// One tensor factor: a label and its dimension.
struct Factor {
    std::string label;
    std::size_t dim{1};

    bool operator==(const Factor&) const = default;
};

// Ordered list of tensor factors. Index convention is row-major over the
// factors: the first factor is the most significant digit.
class HilbertFactorization {
public:
    HilbertFactorization() = default;
    explicit HilbertFactorization(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }
    std::size_t total_dim() const noexcept;
    std::size_t dim_of(const std::string& label) const;
    // Position of a label in the factor list; throws ValidationError if absent.
    std::size_t index_of(const std::string& label) const;
    bool contains(const std::string& label) const noexcept;
    std::vector<std::string> labels() const;

    // this ⊗ other; labels must stay unique.
    HilbertFactorization concat(const HilbertFactorization& other) const;

    bool operator==(const HilbertFactorization&) const = default;

private:
    std::vector<Factor> factors_;
};

// Amplitudes tagged with the factorization they live on.
struct StateVector {
    ComplexVector amplitudes;
    HilbertFactorization factorization;

    StateVector() = default;
    StateVector(ComplexVector amps, HilbertFactorization fact);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(amplitudes.size()); }
    double norm() const { return amplitudes.norm(); }
    StateVector normalized() const;
};

struct HermitianEig {
    RealVector eigenvalues;     // ascending
    ComplexMatrix eigenvectors; // columns, unitary
};

double max_abs(const ComplexMatrix& m);
double hermiticity_defect(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);
ComplexMatrix identity(std::size_t dim);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

HermitianEig hermitian_eig(const ComplexMatrix& m);

// V diag(f(λ)) V† for a positive semidefinite M. Eigenvalues in [-kTolPsd, 0)
// are clamped to zero; anything more negative throws PositivityError.
ComplexMatrix matrix_function_psd(const ComplexMatrix& m, const std::function<double(double)>& f);

// sin(t√x)/(t√x) with sinc(0) = 1.
double sinc_scaled(double x, double t);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
// Left-to-right grouped n-fold Kronecker product.
ComplexMatrix kron_all(std::span<const ComplexMatrix> factors);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

// e^{-iHt} through the spectral decomposition of H.
ComplexMatrix expm_generator(const ComplexMatrix& h, double t);

// Reorders the tensor factors of an operator: the result acts on
// factorization `from` reordered so that new factor j is old factor order[j].
ComplexMatrix permute_factors(const ComplexMatrix& op, const HilbertFactorization& from,
                              std::span<const std::size_t> order);
ComplexVector permute_factors(const ComplexVector& v, const HilbertFactorization& from,
                              std::span<const std::size_t> order);

// A ⊗ on factor `position` of an N-factor uniform space, identities elsewhere.
ComplexMatrix embed(const ComplexMatrix& local, std::size_t position, std::size_t count);

}  // namespace ccrlab
