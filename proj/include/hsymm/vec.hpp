#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace hsymm {

// Small euclidean vector for the geometric dimensions we support (n = 2 or 3).
// The unused third component of a 2D vector is kept at zero so that dot/norm
// work uniformly.
struct Vec {
    int n = 2;
    std::array<double, 3> c{0.0, 0.0, 0.0};

    static Vec xy(double x, double y) { return Vec{2, {x, y, 0.0}}; }
    static Vec xyz(double x, double y, double z) { return Vec{3, {x, y, z}}; }
    static Vec zero(int dim) { return Vec{dim, {0.0, 0.0, 0.0}}; }

    double& operator[](int i) { return c[static_cast<size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<size_t>(i)]; }
    double x() const { return c[0]; }
    double y() const { return c[1]; }
    double z() const { return c[2]; }

    Vec operator+(const Vec& o) const { return Vec{n, {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]}}; }
    Vec operator-(const Vec& o) const { return Vec{n, {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]}}; }
    Vec operator*(double s) const { return Vec{n, {c[0] * s, c[1] * s, c[2] * s}}; }
    Vec operator-() const { return Vec{n, {-c[0], -c[1], -c[2]}}; }
    Vec& operator+=(const Vec& o) {
        c[0] += o.c[0];
        c[1] += o.c[1];
        c[2] += o.c[2];
        return *this;
    }

    double dot(const Vec& o) const { return c[0] * o.c[0] + c[1] * o.c[1] + c[2] * o.c[2]; }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }

    Vec normalized() const {
        const double m = norm();
        if (m == 0.0) throw std::invalid_argument("cannot normalize zero vector");
        return *this * (1.0 / m);
    }
};

inline Vec operator*(double s, const Vec& v) { return v * s; }

inline Vec cross(const Vec& a, const Vec& b) {
    return Vec{3,
               {a.c[1] * b.c[2] - a.c[2] * b.c[1],
                a.c[2] * b.c[0] - a.c[0] * b.c[2],
                a.c[0] * b.c[1] - a.c[1] * b.c[0]}};
}

// 2D cross product (z component of the 3D one).
inline double cross2(const Vec& a, const Vec& b) { return a.c[0] * b.c[1] - a.c[1] * b.c[0]; }

// Unit vector on S^{n-1}; checked at construction (norm within 1e-12 of 1).
class Direction {
public:
    explicit Direction(const Vec& v) : v_(v) {
        if (std::abs(v.norm() - 1.0) > 1e-12) throw std::invalid_argument("direction must be a unit vector");
    }
    static Direction angle(double theta) { return Direction(Vec::xy(std::cos(theta), std::sin(theta))); }
    const Vec& vec() const { return v_; }
    int dim() const { return v_.n; }

private:
    Vec v_;
};

}  // namespace hsymm
