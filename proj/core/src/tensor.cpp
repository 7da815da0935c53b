#include "reachrl/tensor.hpp"

#include <cmath>
#include <sstream>

#include "reachrl/errors.hpp"

namespace reachrl::ad {

std::size_t shape_numel(const std::vector<int>& shape) {
    std::size_t n = 1;
    for (int d : shape) {
        if (d <= 0) throw ShapeError("non-positive dimension in shape " + shape_to_string(shape));
        n *= static_cast<std::size_t>(d);
    }
    return n;
}

std::string shape_to_string(const std::vector<int>& shape) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) os << ", ";
        os << shape[i];
    }
    os << "]";
    return os.str();
}

Tensor::Tensor(std::vector<int> s, std::vector<double> v)
    : shape(std::move(s)), values(std::move(v)) {
    if (shape_numel(shape) != values.size()) {
        throw ShapeError("tensor value count " + std::to_string(values.size()) +
                         " does not match shape " + shape_to_string(shape));
    }
}

Tensor Tensor::zeros(const std::vector<int>& shape) {
    return Tensor(shape, std::vector<double>(shape_numel(shape), 0.0));
}

Tensor Tensor::full(const std::vector<int>& shape, double value) {
    return Tensor(shape, std::vector<double>(shape_numel(shape), value));
}

Tensor Tensor::scalar(double value) { return Tensor({1}, {value}); }

Tensor Tensor::uniform(const std::vector<int>& shape, double bound, Rng& rng) {
    Tensor t = zeros(shape);
    for (auto& v : t.values) v = rng.uniform(-bound, bound);
    return t;
}

Tensor Tensor::normal(const std::vector<int>& shape, double stddev, Rng& rng) {
    Tensor t = zeros(shape);
    for (auto& v : t.values) v = rng.normal(0.0, stddev);
    return t;
}

bool Tensor::all_finite() const {
    for (double v : values) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

std::string Tensor::shape_str() const { return shape_to_string(shape); }

}  // namespace reachrl::ad
