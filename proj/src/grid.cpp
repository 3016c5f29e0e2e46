#include "wpl/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wpl {

bool is_power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

Grid1D::Grid1D(std::size_t n, double x_min, double x_max) : n_(n), x_min_(x_min) {
    if (!is_power_of_two(n) || n < 8)
        throw std::invalid_argument("grid size must be a power of two >= 8, got " +
                                    std::to_string(n));
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min))
        throw std::invalid_argument("grid interval is degenerate: [" + std::to_string(x_min) +
                                    ", " + std::to_string(x_max) + ")");
    dx_ = (x_max - x_min) / static_cast<double>(n);
}

double Grid1D::k(std::size_t j) const {
    return 2.0 * std::numbers::pi * static_cast<double>(freq_index(j)) /
           (static_cast<double>(n_) * dx_);
}

std::vector<double> Grid1D::xs() const {
    std::vector<double> v(n_);
    for (std::size_t j = 0; j < n_; ++j) v[j] = x(j);
    return v;
}

std::vector<double> Grid1D::ks() const {
    std::vector<double> v(n_);
    for (std::size_t j = 0; j < n_; ++j) v[j] = k(j);
    return v;
}

Grid1D make_grid(std::size_t n, double x_min, double x_max) {
    return Grid1D(n, x_min, x_max);
}

}  // namespace wpl
