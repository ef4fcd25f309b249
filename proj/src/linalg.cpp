#include "ccrlab/linalg.hpp"

#include "ccrlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace ccrlab {

HilbertFactorization::HilbertFactorization(std::vector<Factor> factors)
    : factors_(std::move(factors)) {
    std::set<std::string> seen;
    for (const auto& f : factors_) {
        if (f.dim < 1) {
            throw ValidationError("factor '" + f.label + "' has dimension 0");
        }
        if (!seen.insert(f.label).second) {
            throw ValidationError("duplicate factor label '" + f.label + "'");
        }
    }
}

std::size_t HilbertFactorization::total_dim() const noexcept {
    std::size_t d = 1;
    for (const auto& f : factors_) d *= f.dim;
    return d;
}

std::size_t HilbertFactorization::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].label == label) return i;
    }
    throw ValidationError("no factor labelled '" + label + "'");
}

std::size_t HilbertFactorization::dim_of(const std::string& label) const {
    return factors_[index_of(label)].dim;
}

bool HilbertFactorization::contains(const std::string& label) const noexcept {
    return std::any_of(factors_.begin(), factors_.end(),
                       [&](const Factor& f) { return f.label == label; });
}

std::vector<std::string> HilbertFactorization::labels() const {
    std::vector<std::string> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.push_back(f.label);
    return out;
}

HilbertFactorization HilbertFactorization::concat(const HilbertFactorization& other) const {
    auto all = factors_;
    all.insert(all.end(), other.factors_.begin(), other.factors_.end());
    return HilbertFactorization(std::move(all));
}

StateVector::StateVector(ComplexVector amps, HilbertFactorization fact)
    : amplitudes(std::move(amps)), factorization(std::move(fact)) {
    if (static_cast<std::size_t>(amplitudes.size()) != factorization.total_dim()) {
        std::ostringstream os;
        os << "state has " << amplitudes.size() << " amplitudes but factorization dimension is "
           << factorization.total_dim();
        throw ValidationError(os.str());
    }
}

StateVector StateVector::normalized() const {
    const double n = norm();
    if (n == 0.0) throw DomainError("cannot normalize the zero vector");
    return StateVector(amplitudes / n, factorization);
}

double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
    return max_abs(m - m.adjoint());
}

bool all_finite(const ComplexMatrix& m) {
    return m.allFinite();
}

ComplexMatrix identity(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix::Identity(n, n);
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

namespace {

void require_hermitian(const ComplexMatrix& m, const char* where) {
    if (m.rows() != m.cols()) {
        std::ostringstream os;
        os << where << ": square check failed (" << m.rows() << "x" << m.cols() << ")";
        throw ValidationError(os.str());
    }
    if (!all_finite(m)) {
        throw ValidationError(std::string(where) + ": finiteness check failed (NaN or Inf entry)");
    }
    const double defect = hermiticity_defect(m);
    const double scale = std::max(1.0, max_abs(m));
    if (defect > kTolHermitian * scale) {
        std::ostringstream os;
        os << where << ": Hermiticity check failed, max|M - M^dagger| = " << defect;
        throw ValidationError(os.str());
    }
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& m) {
    require_hermitian(m, "hermitian_eig");
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw ValidationError("hermitian_eig: eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix matrix_function_psd(const ComplexMatrix& m, const std::function<double(double)>& f) {
    const auto eig = hermitian_eig(m);
    RealVector fx(eig.eigenvalues.size());
    for (Eigen::Index i = 0; i < fx.size(); ++i) {
        double lambda = eig.eigenvalues(i);
        if (lambda < -kTolPsd) {
            std::ostringstream os;
            os << "matrix_function_psd: positivity check failed, eigenvalue " << lambda;
            throw PositivityError(os.str());
        }
        fx(i) = f(std::max(lambda, 0.0));
    }
    return eig.eigenvectors * fx.asDiagonal() * eig.eigenvectors.adjoint();
}

double sinc_scaled(double x, double t) {
    if (!(x >= 0.0)) throw DomainError("sinc_scaled: x must be >= 0");
    const double y = t * std::sqrt(x);
    if (std::abs(y) < kSincSeriesThreshold) {
        const double y2 = y * y;
        return 1.0 - y2 / 6.0 + y2 * y2 / 120.0;
    }
    return std::sin(y) / y;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

ComplexMatrix kron_all(std::span<const ComplexMatrix> factors) {
    if (factors.empty()) return identity(1);
    ComplexMatrix acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = kron(acc, factors[i]);
    return acc;
}

ComplexMatrix expm_generator(const ComplexMatrix& h, double t) {
    const auto eig = hermitian_eig(h);
    ComplexVector phases(eig.eigenvalues.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
        phases(i) = std::polar(1.0, -eig.eigenvalues(i) * t);
    }
    return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

namespace {

// perm[new_index] = old_index
std::vector<Eigen::Index> permutation_table(const HilbertFactorization& from,
                                            std::span<const std::size_t> order) {
    const auto& fs = from.factors();
    const std::size_t k = fs.size();
    if (order.size() != k) throw ValidationError("permute_factors: order length mismatch");
    std::vector<std::size_t> check(order.begin(), order.end());
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < k; ++i) {
        if (check[i] != i) throw ValidationError("permute_factors: order is not a permutation");
    }
    std::vector<std::size_t> old_stride(k, 1);
    for (std::size_t i = k; i-- > 1;) old_stride[i - 1] = old_stride[i] * fs[i].dim;

    const std::size_t total = from.total_dim();
    std::vector<Eigen::Index> perm(total);
    std::vector<std::size_t> digits(k, 0);  // digits in the new ordering
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t old_idx = 0;
        for (std::size_t j = 0; j < k; ++j) old_idx += digits[j] * old_stride[order[j]];
        perm[idx] = static_cast<Eigen::Index>(old_idx);
        for (std::size_t j = k; j-- > 0;) {
            if (++digits[j] < fs[order[j]].dim) break;
            digits[j] = 0;
        }
    }
    return perm;
}

}  // namespace

ComplexMatrix permute_factors(const ComplexMatrix& op, const HilbertFactorization& from,
                              std::span<const std::size_t> order) {
    const auto perm = permutation_table(from, order);
    const auto n = static_cast<Eigen::Index>(perm.size());
    if (op.rows() != n || op.cols() != n) throw ValidationError("permute_factors: dimension mismatch");
    ComplexMatrix out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) out(i, j) = op(perm[i], perm[j]);
    }
    return out;
}

ComplexVector permute_factors(const ComplexVector& v, const HilbertFactorization& from,
                              std::span<const std::size_t> order) {
    const auto perm = permutation_table(from, order);
    const auto n = static_cast<Eigen::Index>(perm.size());
    if (v.size() != n) throw ValidationError("permute_factors: dimension mismatch");
    ComplexVector out(n);
    for (Eigen::Index i = 0; i < n; ++i) out(i) = v(perm[i]);
    return out;
}

ComplexMatrix embed(const ComplexMatrix& local, std::size_t position, std::size_t count) {
    if (position >= count) throw ValidationError("embed: position out of range");
    const auto d = static_cast<std::size_t>(local.rows());
    std::size_t left = 1;
    std::size_t right = 1;
    for (std::size_t i = 0; i < position; ++i) left *= d;
    for (std::size_t i = position + 1; i < count; ++i) right *= d;
    return kron(kron(identity(left), local), identity(right));
}

}  // namespace ccrlab
