// Private helpers shared by vacuum_weight and the closed-form density matrices.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ccrlab::detail {

// Binomial probability mass via Loader's saddle-point expansion; relative
// accuracy near machine precision for n up to ~1e9.
double binomial_pmf(std::int64_t n, std::int64_t k, double p);

// Smallest index range [lo, hi] outside of which every pmf term is below
// `relative` times the modal term.
std::pair<std::int64_t, std::int64_t> binomial_support(std::int64_t n, double p, double relative);

// pmf(n, k, p) for k in [lo, hi]. Fills by the ratio recurrence and re-anchors
// on binomial_pmf every few steps so rounding cannot build up.
std::vector<double> binomial_row(std::int64_t n, double p, std::int64_t lo, std::int64_t hi);

}  // namespace ccrlab::detail
