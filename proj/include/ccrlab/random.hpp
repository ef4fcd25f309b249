// random.hpp: seeded test matrices. Values are built from raw mt19937_64
// output so the same seed gives the same bits on every standard library.

#pragma once

#include "ccrlab/linalg.hpp"

#include <cstdint>
#include <random>

namespace ccrlab {

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    // Uniform on [-1, 1).
    double symmetric() { return 2.0 * uniform() - 1.0; }
    // Uniform integer on [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

private:
    std::mt19937_64 engine_;
};

inline ComplexMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, SeededRng& rng) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = Complex(rng.symmetric(), rng.symmetric());
    }
    return m;
}

inline ComplexMatrix random_hermitian(Eigen::Index n, SeededRng& rng) {
    const ComplexMatrix g = random_matrix(n, n, rng);
    return 0.5 * (g + g.adjoint());
}

inline ComplexMatrix random_unitary(Eigen::Index n, SeededRng& rng) {
    return expm_generator(random_hermitian(n, rng), 1.0);
}

// Full-rank mixed state G G^dagger / tr.
inline ComplexMatrix random_density(Eigen::Index n, SeededRng& rng) {
    const ComplexMatrix g = random_matrix(n, n, rng);
    const ComplexMatrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

inline ComplexVector random_state(Eigen::Index n, SeededRng& rng) {
    ComplexVector v = random_matrix(n, 1, rng);
    return v / v.norm();
}

}  // namespace ccrlab
