#pragma once

#include "svir/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace svir {

using Mat = std::vector<std::vector<Rational>>;

Mat mat_zero(std::size_t rows, std::size_t cols);
Mat mat_identity(std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(const Rational& s, const Mat& a);
bool mat_equal(const Mat& a, const Mat& b);
bool mat_is_zero(const Mat& a);

// Exact rank by fraction-free (Bareiss) elimination after clearing row
// denominators.
std::size_t mat_rank(const Mat& a);

inline std::size_t kernel_dim(const Mat& a) {
    return a.empty() ? 0 : a[0].size() - mat_rank(a);
}

struct PsdReport {
    bool is_psd = true;
    // When not PSD: the offending pivot step (negative pivot, or zero pivot
    // with a nonzero residual row).
    std::optional<std::size_t> witness_index;
};

// Exact PSD certificate for a symmetric matrix: symmetric elimination where a
// positive pivot produces a Schur complement and a zero pivot is admissible
// only with an identically zero residual row.
PsdReport mat_psd(const Mat& a);

} // namespace svir
