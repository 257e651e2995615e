#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace valgebra {

/// Dense square matrix, row-major. Sized for the handful of variables a
/// Gaussian potential carries; positive definiteness doubles as the
/// membership test, so everything routes through Cholesky.
struct SquareMatrix {
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n(n), a(n * n, 0.0) {}

    std::size_t n = 0;
    std::vector<double> a;

    double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    static SquareMatrix identity(std::size_t n);
};

bool is_symmetric(const SquareMatrix& m, double tol = 1e-12);
double inf_norm(const SquareMatrix& m);

/// Lower Cholesky factor, or nullopt when a pivot is not strictly positive.
std::optional<SquareMatrix> cholesky(const SquareMatrix& m);

/// Solves L L^T x = b given the lower factor.
std::vector<double> cholesky_solve(const SquareMatrix& lower, const std::vector<double>& b);

/// Inverse of a symmetric positive definite matrix; throws not_positive_definite.
SquareMatrix invert_spd(const SquareMatrix& m);

std::vector<double> multiply(const SquareMatrix& m, const std::vector<double>& v);

} // namespace valgebra
