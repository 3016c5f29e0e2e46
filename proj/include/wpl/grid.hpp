#pragma once

#include <cstddef>
#include <vector>

namespace wpl {

// Uniform periodic sample grid x_j = x_min + j dx, j = 0..n-1 (x_max itself is
// the wrap point and carries no sample), together with its conjugate
// wavenumber grid
//
//   k_j = 2 pi f_j / (n dx),   f_j in {0, 1, ..., n/2-1, -n/2, ..., -1},
//
// the signed discrete-transform frequencies in standard FFT bin order. The
// k grid is antisymmetric about zero except for the single Nyquist mode.
class Grid1D {
public:
    // n must be a power of two >= 8; requires x_max > x_min.
    Grid1D(std::size_t n, double x_min, double x_max);

    std::size_t size() const { return n_; }
    double dx() const { return dx_; }
    double x_min() const { return x_min_; }
    double x_max() const { return x_min_ + static_cast<double>(n_) * dx_; }
    double length() const { return static_cast<double>(n_) * dx_; }

    double x(std::size_t j) const { return x_min_ + static_cast<double>(j) * dx_; }

    /// Signed frequency index f_j of transform bin j.
    long freq_index(std::size_t j) const {
        return j < n_ / 2 ? static_cast<long>(j) : static_cast<long>(j) - static_cast<long>(n_);
    }

    double k(std::size_t j) const;

    std::vector<double> xs() const;
    std::vector<double> ks() const;

    friend bool operator==(const Grid1D&, const Grid1D&) = default;

private:
    std::size_t n_;
    double dx_;
    double x_min_;
};

bool is_power_of_two(std::size_t n);

Grid1D make_grid(std::size_t n, double x_min, double x_max);

}  // namespace wpl
