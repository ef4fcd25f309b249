#include "ccrlab/representations.hpp"

#include "binomial.hpp"
#include "ccrlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ccrlab {
namespace detail {

namespace {

// log(n!) - log(sqrt(2 pi n) (n/e)^n)
double stirlerr(double n) {
    constexpr double s0 = 1.0 / 12.0;
    constexpr double s1 = 1.0 / 360.0;
    constexpr double s2 = 1.0 / 1260.0;
    constexpr double s3 = 1.0 / 1680.0;
    constexpr double s4 = 1.0 / 1188.0;
    if (n <= 15.0) {
        return std::lgamma(n + 1.0) - (n + 0.5) * std::log(n) + n -
               0.5 * std::log(2.0 * std::numbers::pi);
    }
    const double nn = n * n;
    if (n > 500.0) return (s0 - s1 / nn) / n;
    if (n > 80.0) return (s0 - (s1 - s2 / nn) / nn) / n;
    if (n > 35.0) return (s0 - (s1 - (s2 - s3 / nn) / nn) / nn) / n;
    return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

// x log(x/np) + np - x, evaluated without cancellation near x = np.
double bd0(double x, double np) {
    if (std::abs(x - np) < 0.1 * (x + np)) {
        double v = (x - np) / (x + np);
        double s = (x - np) * v;
        double ej = 2.0 * x * v;
        v *= v;
        for (int j = 1; j < 1000; ++j) {
            ej *= v;
            const double s1 = s + ej / (2 * j + 1);
            if (s1 == s) return s1;
            s = s1;
        }
        return s;
    }
    return x * std::log(x / np) + np - x;
}

}  // namespace

double binomial_pmf(std::int64_t n, std::int64_t k, double p) {
    if (k < 0 || k > n) return 0.0;
    const double q = 1.0 - p;
    if (p == 0.0) return k == 0 ? 1.0 : 0.0;
    if (q == 0.0) return k == n ? 1.0 : 0.0;
    const auto nd = static_cast<double>(n);
    const auto kd = static_cast<double>(k);
    if (k == 0) {
        if (n == 0) return 1.0;
        const double lc = p < 0.1 ? -bd0(nd, nd * q) - nd * p : nd * std::log1p(-p);
        return std::exp(lc);
    }
    if (k == n) {
        const double lc = q < 0.1 ? -bd0(nd, nd * p) - nd * q : nd * std::log(p);
        return std::exp(lc);
    }
    const double lc = stirlerr(nd) - stirlerr(kd) - stirlerr(nd - kd) - bd0(kd, nd * p) -
                      bd0(nd - kd, nd * q);
    const double lf = std::log(2.0 * std::numbers::pi) + std::log(kd) + std::log1p(-kd / nd);
    return std::exp(lc - 0.5 * lf);
}

std::pair<std::int64_t, std::int64_t> binomial_support(std::int64_t n, double p, double relative) {
    if (p <= 0.0) return {0, 0};
    if (p >= 1.0) return {n, n};
    const double odds = p / (1.0 - p);
    auto mode = static_cast<std::int64_t>(std::floor(static_cast<double>(n + 1) * p));
    mode = std::clamp<std::int64_t>(mode, 0, n);
    // pmf(k+1)/pmf(k) = (n-k)/(k+1) * odds
    std::int64_t hi = mode;
    for (double r = 1.0; hi < n;) {
        r *= static_cast<double>(n - hi) / static_cast<double>(hi + 1) * odds;
        if (r < relative) break;
        ++hi;
    }
    std::int64_t lo = mode;
    for (double r = 1.0; lo > 0;) {
        r *= static_cast<double>(lo) / static_cast<double>(n - lo + 1) / odds;
        if (r < relative) break;
        --lo;
    }
    return {lo, hi};
}

std::vector<double> binomial_row(std::int64_t n, double p, std::int64_t lo, std::int64_t hi) {
    constexpr std::int64_t kAnchorEvery = 32;
    std::vector<double> row(static_cast<std::size_t>(std::max<std::int64_t>(hi - lo + 1, 0)));
    if (row.empty()) return row;
    if (p <= 0.0 || p >= 1.0) {
        for (std::int64_t k = lo; k <= hi; ++k) row[static_cast<std::size_t>(k - lo)] = binomial_pmf(n, k, p);
        return row;
    }
    const double odds = p / (1.0 - p);
    double value = 0.0;
    for (std::int64_t k = lo; k <= hi; ++k) {
        if ((k - lo) % kAnchorEvery == 0) {
            value = binomial_pmf(n, k, p);
        } else {
            value *= static_cast<double>(n - k + 1) / static_cast<double>(k) * odds;
        }
        row[static_cast<std::size_t>(k - lo)] = value;
    }
    return row;
}

}  // namespace detail

namespace {

void check_probability(double z, const char* name) {
    if (!(z >= 0.0 && z <= 1.0)) {
        std::ostringstream os;
        os << "vacuum_weight: " << name << " = " << z << " outside [0, 1]";
        throw DomainError(os.str());
    }
}

void check_count(std::int64_t n, std::int64_t s, const char* name) {
    if (n < 1) throw DomainError("vacuum_weight: N must be >= 1");
    if (s < 0 || s > n) {
        std::ostringstream os;
        os << "vacuum_weight: " << name << " = " << s << " outside [0, " << n << "]";
        throw DomainError(os.str());
    }
}

}  // namespace

double vacuum_weight(std::int64_t n, std::int64_t s, double z1) {
    check_count(n, s, "s");
    check_probability(z1, "Z1");
    return detail::binomial_pmf(n, s, z1);
}

double vacuum_weight(std::int64_t n, std::int64_t s, std::int64_t s_prime, double z1, double z2) {
    check_count(n, s, "s");
    check_count(n, s_prime, "s'");
    check_probability(z1, "Z1");
    check_probability(z2, "Z2");
    if (z1 + z2 > 1.0 + 1e-12) throw DomainError("vacuum_weight: Z1 + Z2 exceeds 1");
    if (s + s_prime > n) return 0.0;
    // Multinomial = Binom(N, s; Z1) * Binom(N - s, s'; Z2 / (1 - Z1)).
    const double first = detail::binomial_pmf(n, s, z1);
    if (first == 0.0) return 0.0;
    const double rest = 1.0 - z1;
    if (rest <= 0.0) return s_prime == 0 ? first : 0.0;
    const double conditional = std::min(1.0, z2 / rest);
    return first * detail::binomial_pmf(n - s, s_prime, conditional);
}

}  // namespace ccrlab
