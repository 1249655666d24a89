#pragma once

#include <vector>

namespace hsymm {

// Monotone piecewise-cubic interpolation (Fritsch-Carlson slope limiting).
// Monotone data produces a monotone interpolant; smooth data is reproduced to
// third order.
class MonotoneCubic {
public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double derivative(double x) const;

    const std::vector<double>& grid() const { return x_; }
    const std::vector<double>& values() const { return y_; }
    double front() const { return x_.front(); }
    double back() const { return x_.back(); }
    bool empty() const { return x_.empty(); }

private:
    size_t interval(double x) const;
    std::vector<double> x_, y_, d_;  // nodes, values, node slopes
};

}  // namespace hsymm
