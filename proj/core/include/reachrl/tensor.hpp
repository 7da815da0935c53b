#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "reachrl/rng.hpp"

namespace reachrl::ad {

/// Dense row-major array of 64-bit floats. Shapes used in practice are
/// [n], [rows, cols] and [batch, h, w, channels].
struct Tensor {
    std::vector<int> shape;
    std::vector<double> values;

    Tensor() = default;
    Tensor(std::vector<int> s, std::vector<double> v);

    static Tensor zeros(const std::vector<int>& shape);
    static Tensor full(const std::vector<int>& shape, double value);
    static Tensor scalar(double value);
    /// Uniform on [-bound, bound].
    static Tensor uniform(const std::vector<int>& shape, double bound, Rng& rng);
    static Tensor normal(const std::vector<int>& shape, double stddev, Rng& rng);

    std::size_t size() const { return values.size(); }
    int dim(std::size_t i) const { return shape[i]; }
    int rank() const { return static_cast<int>(shape.size()); }

    /// Rows/cols of a rank-2 tensor (rank-1 is treated as a single row).
    int rows() const { return rank() >= 2 ? shape[0] : 1; }
    int cols() const { return rank() >= 2 ? shape[1] : (rank() == 1 ? shape[0] : 1); }

    double& at(int r, int c) { return values[static_cast<std::size_t>(r) * cols() + c]; }
    double at(int r, int c) const { return values[static_cast<std::size_t>(r) * cols() + c]; }

    bool all_finite() const;
    bool same_shape(const Tensor& other) const { return shape == other.shape; }
    std::string shape_str() const;
};

std::size_t shape_numel(const std::vector<int>& shape);
std::string shape_to_string(const std::vector<int>& shape);

}  // namespace reachrl::ad
