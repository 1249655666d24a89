#pragma once

#include <array>
#include <memory>
#include <vector>

#include "hsymm/quadrature.hpp"
#include "hsymm/vec.hpp"

namespace hsymm {

enum class BodyKind { Polytope2D, Polytope3D, Fourier2D, Ball, Ellipsoid, Inflated };

struct PolygonData {
    std::vector<Vec> v;  // counterclockwise
    bool degenerate = false;
};

struct Polytope3Data {
    std::vector<Vec> v;
    std::vector<std::array<int, 3>> faces;  // outward-oriented triangles
    struct Edge {
        int a, b;
        double length;
        double exterior_angle;  // angle between adjacent outward normals
    };
    std::vector<Edge> edges;
    double volume = 0.0;
    double surface_area = 0.0;
    bool degenerate = false;  // flat (rank-2) hull
};

struct FourierData {
    double a0;
    std::vector<std::array<double, 2>> ab;  // (a_j, b_j), j = 1..J
    double eval(double theta) const;        // support value h(theta)
    double curvature_radius(double theta) const;  // h + h''
};

struct BallData {
    Vec center;
    double radius;
};

struct EllipsoidData {
    Vec center;
    std::vector<double> a;  // semi-axes
};

struct BodyRep;

struct InflatedData {
    std::shared_ptr<const BodyRep> inner;
    double rho;
};

// Immutable convex body. All constructors validate; operations never fail on
// a constructed body.
class ConvexBody {
public:
    static ConvexBody polygon(std::vector<Vec> ccw_vertices);
    static ConvexBody polytope3d(const std::vector<Vec>& points);  // hull built here
    static ConvexBody fourier2d(double a0, std::vector<std::array<double, 2>> coeffs);
    static ConvexBody ball(const Vec& center, double radius);
    static ConvexBody ellipsoid(const Vec& center, std::vector<double> semi_axes);

    int dim() const;
    BodyKind kind() const;
    bool degenerate() const;

    // support function h(Omega, u) = max_{x in Omega} x.u
    double support(const Direction& u) const { return support_hom(u.vec()); }
    // 1-homogeneous extension to arbitrary nonzero vectors
    double support_hom(const Vec& v) const;

    // Euclidean distance to the body (0 inside).
    double distance(const Vec& x) const;
    bool contains(const Vec& x, double tol = 1e-12) const { return distance(x) <= tol; }

    ConvexBody translated(const Vec& t) const;

    const PolygonData* as_polygon() const;
    const Polytope3Data* as_polytope3() const;
    const FourierData* as_fourier() const;
    const BallData* as_ball() const;
    const EllipsoidData* as_ellipsoid() const;
    const InflatedData* as_inflated() const;

private:
    explicit ConvexBody(std::shared_ptr<const BodyRep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const BodyRep> rep_;
    friend ConvexBody minkowski_add_ball(const ConvexBody&, double);
    friend ConvexBody homothety(const ConvexBody&, double, const Vec&);
    friend ConvexBody rep_body(std::shared_ptr<const BodyRep>);
};

// Internal: wrap a shared representation (used by modules that unwrap the
// Inflated variant).
ConvexBody rep_body(std::shared_ptr<const BodyRep> rep);

struct ShapeSummary {
    double diameter = 0.0;
    double mean_width = 0.0;
    Vec steiner_point;
    double steiner_radius = 0.0;  // mean_width / 2
    BallData steiner_ball() const { return BallData{steiner_point, steiner_radius}; }
};

double support(const ConvexBody& body, const Direction& u);

// Diameter (exact for polytopes), mean width and Steiner point by spherical
// quadrature. Passing a grid overrides the standard design.
ShapeSummary shape_summary(const ConvexBody& body, const SphereGrid* grid = nullptr);

// Body with support function h + rho (rho >= 0). Balls stay balls.
ConvexBody minkowski_add_ball(const ConvexBody& body, double rho);

// sup |h_E - h_F| over the sphere: grid sup plus local refinement.
double hausdorff_distance(const ConvexBody& a, const ConvexBody& b, const SphereGrid* grid = nullptr);

// Scaling by t > 0 about `center`.
ConvexBody homothety(const ConvexBody& body, double t, const Vec& center);

}  // namespace hsymm
