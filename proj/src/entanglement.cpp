#include "ccrlab/entanglement.hpp"

#include "ccrlab/errors.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ccrlab {

namespace {

void require_density(const ComplexMatrix& m, std::size_t dim) {
    if (m.rows() != m.cols() || static_cast<std::size_t>(m.rows()) != dim) {
        std::ostringstream os;
        os << "density matrix is " << m.rows() << "x" << m.cols() << ", factorization dimension "
           << dim;
        throw ValidationError(os.str());
    }
    const double herm = hermiticity_defect(m);
    if (herm > kTolDensity) {
        std::ostringstream os;
        os << "density matrix Hermiticity check failed, defect " << herm;
        throw ValidationError(os.str());
    }
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > kTolDensity) {
        std::ostringstream os;
        os << "density matrix trace check failed, trace " << tr;
        throw ValidationError(os.str());
    }
    const double lowest = hermitian_eig(0.5 * (m + m.adjoint())).eigenvalues.minCoeff();
    if (lowest < -kTolDensity) {
        std::ostringstream os;
        os << "density matrix positivity check failed, eigenvalue " << lowest;
        throw PositivityError(os.str());
    }
}

// Eigenvalues clamped at zero; anything below -kTolDensity is an error.
RealVector clamped_spectrum(const ComplexMatrix& rho) {
    RealVector p = hermitian_eig(0.5 * (rho + rho.adjoint())).eigenvalues;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) < -kTolDensity) {
            std::ostringstream os;
            os << "spectrum has eigenvalue " << p(i) << " below the clamp threshold";
            throw PositivityError(os.str());
        }
        p(i) = std::max(p(i), 0.0);
    }
    return p;
}

double entropy_of(const RealVector& p) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) > 0.0) h -= p(i) * std::log(p(i));
    }
    return std::max(h, 0.0);
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, HilbertFactorization f)
    : m_(std::move(m)), f_(std::move(f)) {
    require_density(m_, f_.total_dim());
}

DensityMatrix::DensityMatrix(ComplexMatrix m, HilbertFactorization f, Trusted)
    : m_(std::move(m)), f_(std::move(f)) {}

DensityMatrix DensityMatrix::from_state(const StateVector& psi) {
    const double n = psi.norm();
    if (std::abs(n - 1.0) > kTolDensity) {
        std::ostringstream os;
        os << "density from state: norm " << n << " is not 1";
        throw ValidationError(os.str());
    }
    return DensityMatrix(psi.amplitudes * psi.amplitudes.adjoint(), psi.factorization, Trusted{});
}

DensityMatrix DensityMatrix::from_atomic(const AtomicDensity& rho) {
    return DensityMatrix(ComplexMatrix(rho.matrix()), AtomicDensity::factorization(), Trusted{});
}

Bipartition::Bipartition(HilbertFactorization whole, const std::vector<std::string>& keep)
    : whole_(std::move(whole)) {
    if (keep.empty()) throw ValidationError("bipartition: keep set is empty");
    std::vector<bool> kept(whole_.size(), false);
    for (const auto& label : keep) {
        const std::size_t i = whole_.index_of(label);
        if (kept[i]) throw ValidationError("bipartition: label '" + label + "' listed twice");
        kept[i] = true;
    }
    for (std::size_t i = 0; i < whole_.size(); ++i) (kept[i] ? keep_ : discard_).push_back(i);
}

HilbertFactorization Bipartition::kept_factorization() const {
    std::vector<Factor> fs;
    for (auto i : keep_) fs.push_back(whole_.factors()[i]);
    return HilbertFactorization(std::move(fs));
}

std::size_t Bipartition::keep_dim() const noexcept {
    std::size_t d = 1;
    for (auto i : keep_) d *= whole_.factors()[i].dim;
    return d;
}

std::size_t Bipartition::discard_dim() const noexcept {
    std::size_t d = 1;
    for (auto i : discard_) d *= whole_.factors()[i].dim;
    return d;
}

std::vector<Eigen::Index> Bipartition::index_table() const {
    const auto& fs = whole_.factors();
    const std::size_t k = fs.size();
    std::vector<std::size_t> stride(k, 1);
    for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * fs[i].dim;

    auto offsets = [&](const std::vector<std::size_t>& which) {
        std::size_t count = 1;
        for (auto i : which) count *= fs[i].dim;
        std::vector<std::size_t> out(count, 0);
        std::vector<std::size_t> digits(which.size(), 0);
        for (std::size_t n = 0; n < count; ++n) {
            std::size_t off = 0;
            for (std::size_t j = 0; j < which.size(); ++j) off += digits[j] * stride[which[j]];
            out[n] = off;
            for (std::size_t j = which.size(); j-- > 0;) {
                if (++digits[j] < fs[which[j]].dim) break;
                digits[j] = 0;
            }
        }
        return out;
    };
    const auto kept = offsets(keep_);
    const auto disc = offsets(discard_);
    std::vector<Eigen::Index> table(kept.size() * disc.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        for (std::size_t r = 0; r < disc.size(); ++r) {
            table[i * disc.size() + r] = static_cast<Eigen::Index>(kept[i] + disc[r]);
        }
    }
    return table;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const Bipartition& part) {
    if (!(rho.factorization() == part.whole())) {
        throw ValidationError("partial_trace: bipartition belongs to a different factorization");
    }
    const auto table = part.index_table();
    const auto dk = static_cast<Eigen::Index>(part.keep_dim());
    const auto dr = static_cast<Eigen::Index>(part.discard_dim());
    const ComplexMatrix& m = rho.matrix();
    ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
    for (Eigen::Index i = 0; i < dk; ++i) {
        for (Eigen::Index j = 0; j < dk; ++j) {
            Complex acc{0.0, 0.0};
            for (Eigen::Index r = 0; r < dr; ++r) {
                acc += m(table[static_cast<std::size_t>(i * dr + r)],
                         table[static_cast<std::size_t>(j * dr + r)]);
            }
            out(i, j) = acc;
        }
    }
    return DensityMatrix(std::move(out), part.kept_factorization());
}

namespace {

ComplexMatrix amplitude_matrix(const StateVector& psi, const Bipartition& part) {
    if (!(psi.factorization == part.whole())) {
        throw ValidationError("bipartition belongs to a different factorization");
    }
    const auto table = part.index_table();
    const auto dk = static_cast<Eigen::Index>(part.keep_dim());
    const auto dr = static_cast<Eigen::Index>(part.discard_dim());
    ComplexMatrix psi_mat(dk, dr);
    for (Eigen::Index i = 0; i < dk; ++i) {
        for (Eigen::Index r = 0; r < dr; ++r) {
            psi_mat(i, r) = psi.amplitudes(table[static_cast<std::size_t>(i * dr + r)]);
        }
    }
    return psi_mat;
}

}  // namespace

DensityMatrix partial_trace(const StateVector& psi, const Bipartition& part) {
    const ComplexMatrix psi_mat = amplitude_matrix(psi, part);
    return DensityMatrix(psi_mat * psi_mat.adjoint(), part.kept_factorization());
}

std::vector<double> schmidt_coefficients(const StateVector& psi, const Bipartition& part) {
    const ComplexMatrix psi_mat = amplitude_matrix(psi, part);
    Eigen::JacobiSVD<ComplexMatrix> svd(psi_mat);
    const RealVector& s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

double von_neumann_entropy(const ComplexMatrix& rho) {
    return entropy_of(clamped_spectrum(rho));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    return von_neumann_entropy(rho.matrix());
}

double entanglement_entropy(const StateVector& psi, const Bipartition& part) {
    const auto s = schmidt_coefficients(psi, part);
    RealVector p(static_cast<Eigen::Index>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) p(static_cast<Eigen::Index>(i)) = s[i] * s[i];
    return entropy_of(p);
}

double concurrence(const ComplexMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4) throw ValidationError("concurrence needs a 4x4 matrix");
    require_density(rho, 4);
    // With rho = W W^dagger, W = V sqrt(diag p), the Wootters λ_i are the
    // singular values of W^dagger (σy⊗σy) W^*. This avoids square roots of
    // eigenvalues that should be exactly zero.
    const auto eig = hermitian_eig(0.5 * (rho + rho.adjoint()));
    RealVector sqrt_p(4);
    for (Eigen::Index i = 0; i < 4; ++i) {
        if (eig.eigenvalues(i) < -kTolDensity) throw PositivityError("concurrence: negative eigenvalue");
        sqrt_p(i) = std::sqrt(std::max(eig.eigenvalues(i), 0.0));
    }
    const ComplexMatrix w = eig.eigenvectors * sqrt_p.asDiagonal();
    ComplexMatrix flip = ComplexMatrix::Zero(4, 4);
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;
    const ComplexMatrix tau = w.adjoint() * flip * w.conjugate();
    Eigen::JacobiSVD<ComplexMatrix> svd(tau);
    const RealVector& l = svd.singularValues();  // descending
    return std::clamp(l(0) - l(1) - l(2) - l(3), 0.0, 1.0);
}

double concurrence(const AtomicDensity& rho) {
    return concurrence(ComplexMatrix(rho.matrix()));
}

double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
        throw ValidationError("trace_distance: dimension mismatch");
    }
    const ComplexMatrix diff = rho - sigma;
    const RealVector ev = hermitian_eig(0.5 * (diff + diff.adjoint())).eigenvalues;
    return 0.5 * ev.cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    return trace_distance(rho.matrix(), sigma.matrix());
}

double trace_distance(const AtomicDensity& rho, const AtomicDensity& sigma) {
    return trace_distance(ComplexMatrix(rho.matrix()), ComplexMatrix(sigma.matrix()));
}

std::vector<double> operator_schmidt_coefficients(const ComplexMatrix& op, const Bipartition& part) {
    const auto n = static_cast<Eigen::Index>(part.whole().total_dim());
    if (op.rows() != n || op.cols() != n) {
        throw ValidationError("operator_schmidt_coefficients: dimension mismatch");
    }
    const auto table = part.index_table();
    const auto dk = static_cast<Eigen::Index>(part.keep_dim());
    const auto dr = static_cast<Eigen::Index>(part.discard_dim());
    ComplexMatrix realigned(dk * dk, dr * dr);
    for (Eigen::Index ik = 0; ik < dk; ++ik) {
        for (Eigen::Index jk = 0; jk < dk; ++jk) {
            for (Eigen::Index ir = 0; ir < dr; ++ir) {
                for (Eigen::Index jr = 0; jr < dr; ++jr) {
                    realigned(ik * dk + jk, ir * dr + jr) =
                        op(table[static_cast<std::size_t>(ik * dr + ir)],
                           table[static_cast<std::size_t>(jk * dr + jr)]);
                }
            }
        }
    }
    const double frob = op.norm();
    if (frob == 0.0) return {};
    Eigen::JacobiSVD<ComplexMatrix> svd(realigned);
    const RealVector s = svd.singularValues() / frob;
    return {s.data(), s.data() + s.size()};
}

}  // namespace ccrlab
