#pragma once

#include <cstddef>
#include <vector>

namespace h2diss {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
[[nodiscard]] QuadratureRule gauss_legendre(std::size_t n);

/// Gauss-Legendre rule mapped onto [a, b].
[[nodiscard]] QuadratureRule gauss_legendre(std::size_t n, double a, double b);

}  // namespace h2diss
