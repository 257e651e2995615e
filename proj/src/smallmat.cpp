#include "valgebra/smallmat.hpp"

#include <cmath>

#include "valgebra/errors.hpp"

namespace valgebra {

SquareMatrix SquareMatrix::identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool is_symmetric(const SquareMatrix& m, double tol) {
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = i + 1; j < m.n; ++j)
            if (std::abs(m(i, j) - m(j, i)) > tol) return false;
    return true;
}

double inf_norm(const SquareMatrix& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < m.n; ++j) row += std::abs(m(i, j));
        best = std::max(best, row);
    }
    return best;
}

std::optional<SquareMatrix> cholesky(const SquareMatrix& m) {
    SquareMatrix lower(m.n);
    for (std::size_t j = 0; j < m.n; ++j) {
        double d = m(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= lower(j, k) * lower(j, k);
        if (d <= 0.0) return std::nullopt;
        lower(j, j) = std::sqrt(d);
        for (std::size_t i = j + 1; i < m.n; ++i) {
            double s = m(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= lower(i, k) * lower(j, k);
            lower(i, j) = s / lower(j, j);
        }
    }
    return lower;
}

std::vector<double> cholesky_solve(const SquareMatrix& lower, const std::vector<double>& b) {
    const std::size_t n = lower.n;
    std::vector<double> y(n), x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= lower(i, k) * y[k];
        y[i] = s / lower(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = y[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= lower(k, i) * x[k];
        x[i] = s / lower(i, i);
    }
    return x;
}

SquareMatrix invert_spd(const SquareMatrix& m) {
    auto lower = cholesky(m);
    if (!lower) fail(ErrorKind::not_positive_definite, "matrix is not positive definite");
    SquareMatrix inv(m.n);
    std::vector<double> e(m.n, 0.0);
    for (std::size_t j = 0; j < m.n; ++j) {
        e[j] = 1.0;
        auto col = cholesky_solve(*lower, e);
        for (std::size_t i = 0; i < m.n; ++i) inv(i, j) = col[i];
        e[j] = 0.0;
    }
    // symmetrize away the last-bit asymmetry from the two solves
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = i + 1; j < m.n; ++j)
            inv(i, j) = inv(j, i) = 0.5 * (inv(i, j) + inv(j, i));
    return inv;
}

std::vector<double> multiply(const SquareMatrix& m, const std::vector<double>& v) {
    std::vector<double> out(m.n, 0.0);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) out[i] += m(i, j) * v[j];
    return out;
}

} // namespace valgebra
