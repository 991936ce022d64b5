#include "svir/exactla.hpp"

#include <stdexcept>

namespace svir {

Mat mat_zero(std::size_t rows, std::size_t cols) {
    return Mat(rows, std::vector<Rational>(cols, Rational(0)));
}

Mat mat_identity(std::size_t n) {
    Mat out = mat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i)
        out[i][i] = Rational(1);
    return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty())
        return {};
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    if (a[0].size() != k)
        throw std::invalid_argument("mat_mul: shape mismatch");
    Mat out = mat_zero(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero())
                continue;
            for (std::size_t j = 0; j < m; ++j)
                out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
    Mat out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            out[i][j] += b[i][j];
    return out;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    Mat out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            out[i][j] -= b[i][j];
    return out;
}

Mat mat_scale(const Rational& s, const Mat& a) {
    Mat out = a;
    for (auto& row : out)
        for (auto& x : row)
            x *= s;
    return out;
}

bool mat_equal(const Mat& a, const Mat& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size())
            return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j])
                return false;
    }
    return true;
}

bool mat_is_zero(const Mat& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero())
                return false;
    return true;
}

std::size_t mat_rank(const Mat& a) {
    if (a.empty() || a[0].empty())
        return 0;
    std::size_t rows = a.size(), cols = a[0].size();

    // Clear denominators row by row; row scaling leaves the rank unchanged.
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class lcm = 1;
        for (std::size_t j = 0; j < cols; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a[i][j].raw().get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            mpq_class scaled = a[i][j].raw() * mpq_class(lcm);
            m[i][j] = scaled.get_num();
        }
    }

    // Bareiss fraction-free elimination.
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class num = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

PsdReport mat_psd(const Mat& a) {
    std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        if (a[i].size() != n)
            throw std::invalid_argument("mat_psd: not square");
    Mat s = a;
    for (std::size_t k = 0; k < n; ++k) {
        const Rational& piv = s[k][k];
        if (piv.sgn() < 0)
            return {false, k};
        if (piv.is_zero()) {
            // A PSD matrix with zero diagonal entry has a zero row there.
            for (std::size_t j = k; j < n; ++j)
                if (!s[k][j].is_zero())
                    return {false, k};
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (s[i][k].is_zero())
                continue;
            Rational f = s[i][k] / piv;
            for (std::size_t j = k; j < n; ++j)
                s[i][j] -= f * s[k][j];
        }
    }
    return {true, std::nullopt};
}

} // namespace svir
