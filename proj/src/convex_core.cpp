#include "hsymm/convex_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <variant>

namespace hsymm {

namespace {

constexpr double kGeomTol = 1e-12;

double point_segment_distance(const Vec& x, const Vec& a, const Vec& b) {
    const Vec ab = b - a;
    const double len2 = ab.norm2();
    if (len2 == 0.0) return (x - a).norm();
    double t = (x - a).dot(ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return (x - (a + ab * t)).norm();
}

double point_triangle_distance(const Vec& x, const Vec& a, const Vec& b, const Vec& c) {
    const Vec n = cross(b - a, c - a);
    const double n2 = n.norm2();
    if (n2 < 1e-30) {  // sliver: fall back to edges
        return std::min({point_segment_distance(x, a, b), point_segment_distance(x, b, c),
                         point_segment_distance(x, a, c)});
    }
    const Vec p = x - n * ((x - a).dot(n) / n2);  // projection onto the plane
    // inside test via same-side checks
    const double s1 = cross(b - a, p - a).dot(n);
    const double s2 = cross(c - b, p - b).dot(n);
    const double s3 = cross(a - c, p - c).dot(n);
    if (s1 >= 0 && s2 >= 0 && s3 >= 0) return (x - p).norm();
    return std::min({point_segment_distance(x, a, b), point_segment_distance(x, b, c),
                     point_segment_distance(x, a, c)});
}

}  // namespace

double FourierData::eval(double theta) const {
    double h = a0;
    for (size_t j = 0; j < ab.size(); ++j) {
        const double jj = static_cast<double>(j + 1);
        h += ab[j][0] * std::cos(jj * theta) + ab[j][1] * std::sin(jj * theta);
    }
    return h;
}

double FourierData::curvature_radius(double theta) const {
    double r = a0;
    for (size_t j = 0; j < ab.size(); ++j) {
        const double jj = static_cast<double>(j + 1);
        r += (1.0 - jj * jj) * (ab[j][0] * std::cos(jj * theta) + ab[j][1] * std::sin(jj * theta));
    }
    return r;
}

struct BodyRep {
    int n = 2;
    BodyKind kind = BodyKind::Ball;
    bool degenerate = false;
    std::variant<PolygonData, Polytope3Data, FourierData, BallData, EllipsoidData, InflatedData> data;
};

ConvexBody rep_body(std::shared_ptr<const BodyRep> rep) { return ConvexBody(std::move(rep)); }

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

ConvexBody ConvexBody::polygon(std::vector<Vec> v) {
    if (v.empty()) throw std::invalid_argument("polygon: empty vertex list");
    for (const Vec& p : v)
        if (p.n != 2) throw std::invalid_argument("polygon: vertices must be 2D");
    double scale = 0.0;
    for (const Vec& p : v) scale = std::max(scale, std::abs(p.x()) + std::abs(p.y()));
    scale = std::max(scale, 1.0);

    auto rep = std::make_shared<BodyRep>();
    rep->n = 2;
    rep->kind = BodyKind::Polytope2D;

    const size_t m = v.size();
    if (m >= 3) {
        double area2 = 0.0;
        for (size_t i = 0; i < m; ++i) {
            const Vec& p = v[i];
            const Vec& q = v[(i + 1) % m];
            area2 += cross2(p, q);
        }
        if (area2 < -kGeomTol * scale * scale)
            throw std::invalid_argument("polygon: vertices must be counterclockwise");
        for (size_t i = 0; i < m; ++i) {
            const Vec& a = v[i];
            const Vec& b = v[(i + 1) % m];
            const Vec& c = v[(i + 2) % m];
            if (cross2(b - a, c - b) < -1e-9 * scale * scale)
                throw std::invalid_argument("polygon: vertices not in convex position");
        }
        rep->degenerate = area2 <= kGeomTol * scale * scale;
    } else {
        rep->degenerate = true;  // point or segment
    }
    rep->data = PolygonData{std::move(v), rep->degenerate};
    return ConvexBody(rep);
}

namespace {

// Incremental convex hull. Inputs are deduplicated; rank-2 point sets produce
// the flat two-sided representation, rank <= 1 is rejected.
Polytope3Data build_hull(std::vector<Vec> pts) {
    // dedupe
    std::vector<Vec> p;
    for (const Vec& q : pts) {
        bool dup = false;
        for (const Vec& r : p)
            if ((q - r).norm() < 1e-12) {
                dup = true;
                break;
            }
        if (!dup) p.push_back(q);
    }
    const size_t m = p.size();
    if (m < 3) throw std::invalid_argument("polytope3d: fewer than 3 distinct points");
    double scale = 0.0;
    for (const Vec& q : p) scale = std::max(scale, q.norm());
    scale = std::max(scale, 1.0);
    const double tol = 1e-10 * scale;

    // extreme pair
    size_t i0 = 0, i1 = 1;
    double best = -1.0;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            const double d = (p[i] - p[j]).norm();
            if (d > best) {
                best = d;
                i0 = i;
                i1 = j;
            }
        }
    if (best < tol) throw std::invalid_argument("polytope3d: degenerate point set");

    // farthest from the line
    size_t i2 = m;
    best = tol;
    for (size_t i = 0; i < m; ++i) {
        if (i == i0 || i == i1) continue;
        const double d = cross(p[i1] - p[i0], p[i] - p[i0]).norm() / (p[i1] - p[i0]).norm();
        if (d > best) {
            best = d;
            i2 = i;
        }
    }
    if (i2 == m) throw std::invalid_argument("polytope3d: rank-1 point set (segment) unsupported");

    // farthest from the plane
    Vec n0 = cross(p[i1] - p[i0], p[i2] - p[i0]).normalized();
    size_t i3 = m;
    best = tol;
    for (size_t i = 0; i < m; ++i) {
        const double d = std::abs((p[i] - p[i0]).dot(n0));
        if (d > best) {
            best = d;
            i3 = i;
        }
    }

    Polytope3Data out;
    if (i3 == m) {
        // flat hull: 2D hull in-plane, faces doubled with both orientations
        Vec e1 = (p[i1] - p[i0]).normalized();
        Vec e2 = cross(n0, e1);
        std::vector<std::pair<Vec, size_t>> plane(m);
        for (size_t i = 0; i < m; ++i)
            plane[i] = {Vec::xy((p[i] - p[i0]).dot(e1), (p[i] - p[i0]).dot(e2)), i};
        std::sort(plane.begin(), plane.end(), [](const auto& a, const auto& b) {
            return a.first.x() < b.first.x() || (a.first.x() == b.first.x() && a.first.y() < b.first.y());
        });
        auto build_chain = [&](bool lower) {
            std::vector<size_t> chain;
            for (size_t i = 0; i < m; ++i) {
                const size_t idx = lower ? i : m - 1 - i;
                while (chain.size() >= 2) {
                    const Vec a = plane[chain[chain.size() - 2]].first;
                    const Vec b = plane[chain[chain.size() - 1]].first;
                    if (cross2(b - a, plane[idx].first - b) <= 0)
                        chain.pop_back();
                    else
                        break;
                }
                chain.push_back(idx);
            }
            return chain;
        };
        std::vector<size_t> lower = build_chain(true), upper = build_chain(false);
        std::vector<size_t> hull2(lower.begin(), lower.end() - 1);
        hull2.insert(hull2.end(), upper.begin(), upper.end() - 1);

        for (size_t h : hull2) out.v.push_back(p[plane[h].second]);
        const int hm = static_cast<int>(out.v.size());
        double area2 = 0.0;
        for (int i = 0; i < hm; ++i) area2 += cross2(plane[hull2[static_cast<size_t>(i)]].first,
                                                     plane[hull2[static_cast<size_t>((i + 1) % hm)]].first);
        for (int i = 1; i + 1 < hm; ++i) {
            out.faces.push_back({0, i, i + 1});
            out.faces.push_back({0, i + 1, i});
        }
        for (int i = 0; i < hm; ++i) {
            const Vec& a = out.v[static_cast<size_t>(i)];
            const Vec& b = out.v[static_cast<size_t>((i + 1) % hm)];
            out.edges.push_back({i, (i + 1) % hm, (b - a).norm(), std::numbers::pi});
        }
        out.volume = 0.0;
        out.surface_area = std::abs(area2);  // both sides
        out.degenerate = true;
        return out;
    }

    // full-dimensional hull
    struct Face {
        int a, b, c;
        Vec normal;  // unit outward
        double offset;
        bool alive = true;
    };
    std::vector<Face> faces;
    auto make_face = [&](int a, int b, int c) {
        Vec nn = cross(p[static_cast<size_t>(b)] - p[static_cast<size_t>(a)],
                       p[static_cast<size_t>(c)] - p[static_cast<size_t>(a)]);
        const double area2 = nn.norm();
        if (area2 < 1e-20 * scale * scale)
            throw std::runtime_error("polytope3d: degenerate face encountered during hull construction");
        nn = nn * (1.0 / area2);
        faces.push_back(Face{a, b, c, nn, nn.dot(p[static_cast<size_t>(a)]), true});
    };

    // initial tetrahedron, oriented outward
    {
        int a = static_cast<int>(i0), b = static_cast<int>(i1), c = static_cast<int>(i2), d = static_cast<int>(i3);
        if ((p[static_cast<size_t>(d)] - p[static_cast<size_t>(a)]).dot(n0) > 0) std::swap(b, c);
        make_face(a, b, c);
        make_face(a, c, d);
        make_face(a, d, b);
        make_face(b, d, c);
    }

    for (size_t i = 0; i < m; ++i) {
        if (i == i0 || i == i1 || i == i2 || i == i3) continue;
        std::vector<size_t> visible;
        for (size_t f = 0; f < faces.size(); ++f) {
            if (!faces[f].alive) continue;
            if (faces[f].normal.dot(p[i]) - faces[f].offset > tol) visible.push_back(f);
        }
        if (visible.empty()) continue;
        // horizon: directed edges of visible faces whose neighbor is hidden
        std::map<std::pair<int, int>, int> edge_count;
        for (size_t f : visible) {
            const Face& fc = faces[f];
            const int e[3][2] = {{fc.a, fc.b}, {fc.b, fc.c}, {fc.c, fc.a}};
            for (const auto& ed : e) edge_count[{ed[0], ed[1]}] += 1;
        }
        std::vector<std::pair<int, int>> horizon;
        for (const auto& [ed, cnt] : edge_count) {
            (void)cnt;
            if (edge_count.find({ed.second, ed.first}) == edge_count.end()) horizon.push_back(ed);
        }
        for (size_t f : visible) faces[f].alive = false;
        for (const auto& ed : horizon) make_face(ed.first, ed.second, static_cast<int>(i));
    }

    // compact vertices and faces
    std::vector<int> remap(m, -1);
    for (const Face& f : faces) {
        if (!f.alive) continue;
        for (int vi : {f.a, f.b, f.c})
            if (remap[static_cast<size_t>(vi)] < 0) {
                remap[static_cast<size_t>(vi)] = static_cast<int>(out.v.size());
                out.v.push_back(p[static_cast<size_t>(vi)]);
            }
    }
    for (const Face& f : faces) {
        if (!f.alive) continue;
        out.faces.push_back({remap[static_cast<size_t>(f.a)], remap[static_cast<size_t>(f.b)],
                             remap[static_cast<size_t>(f.c)]});
    }

    // convexity audit: every input point lies inside every face plane
    for (const Face& f : faces) {
        if (!f.alive) continue;
        for (size_t i = 0; i < m; ++i)
            if (f.normal.dot(p[i]) - f.offset > 64 * tol)
                throw std::runtime_error("polytope3d: hull convexity audit failed");
    }

    // volume, surface area, edges with exterior dihedral angles
    std::map<std::pair<int, int>, std::vector<size_t>> edge_faces;
    std::vector<Vec> face_normals(out.faces.size());
    for (size_t f = 0; f < out.faces.size(); ++f) {
        const auto& [a, b, c] = out.faces[f];
        const Vec& A = out.v[static_cast<size_t>(a)];
        const Vec& B = out.v[static_cast<size_t>(b)];
        const Vec& C = out.v[static_cast<size_t>(c)];
        const Vec nn = cross(B - A, C - A);
        const double area = 0.5 * nn.norm();
        out.surface_area += area;
        out.volume += A.dot(nn) / 6.0;
        face_normals[f] = nn.normalized();
        const int e[3][2] = {{a, b}, {b, c}, {c, a}};
        for (const auto& ed : e)
            edge_faces[{std::min(ed[0], ed[1]), std::max(ed[0], ed[1])}].push_back(f);
    }
    for (const auto& [ed, fs] : edge_faces) {
        if (fs.size() != 2) throw std::runtime_error("polytope3d: non-manifold hull edge");
        const double c = std::clamp(face_normals[fs[0]].dot(face_normals[fs[1]]), -1.0, 1.0);
        const double s = cross(face_normals[fs[0]], face_normals[fs[1]]).norm();
        out.edges.push_back({ed.first, ed.second,
                             (out.v[static_cast<size_t>(ed.second)] - out.v[static_cast<size_t>(ed.first)]).norm(),
                             std::atan2(s, c)});
    }
    return out;
}

}  // namespace

ConvexBody ConvexBody::polytope3d(const std::vector<Vec>& points) {
    for (const Vec& q : points)
        if (q.n != 3) throw std::invalid_argument("polytope3d: points must be 3D");
    auto rep = std::make_shared<BodyRep>();
    rep->n = 3;
    rep->kind = BodyKind::Polytope3D;
    Polytope3Data hull = build_hull(points);
    rep->degenerate = hull.degenerate;
    rep->data = std::move(hull);
    return ConvexBody(rep);
}

ConvexBody ConvexBody::fourier2d(double a0, std::vector<std::array<double, 2>> coeffs) {
    FourierData f{a0, std::move(coeffs)};
    double min_cr = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 1024; ++i)
        min_cr = std::min(min_cr, f.curvature_radius(2.0 * std::numbers::pi * i / 1024.0));
    if (!(min_cr > 0.0))
        throw std::invalid_argument("fourier2d: coefficients violate convexity (h + h'' <= 0)");
    auto rep = std::make_shared<BodyRep>();
    rep->n = 2;
    rep->kind = BodyKind::Fourier2D;
    rep->data = std::move(f);
    return ConvexBody(rep);
}

ConvexBody ConvexBody::ball(const Vec& center, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("ball: radius must be positive");
    auto rep = std::make_shared<BodyRep>();
    rep->n = center.n;
    rep->kind = BodyKind::Ball;
    rep->data = BallData{center, radius};
    return ConvexBody(rep);
}

ConvexBody ConvexBody::ellipsoid(const Vec& center, std::vector<double> semi_axes) {
    if (semi_axes.size() != static_cast<size_t>(center.n))
        throw std::invalid_argument("ellipsoid: semi-axis count must match dimension");
    for (double a : semi_axes)
        if (!(a > 0.0)) throw std::invalid_argument("ellipsoid: semi-axes must be positive");
    auto rep = std::make_shared<BodyRep>();
    rep->n = center.n;
    rep->kind = BodyKind::Ellipsoid;
    rep->data = EllipsoidData{center, std::move(semi_axes)};
    return ConvexBody(rep);
}

// ---------------------------------------------------------------------------
// queries
// ---------------------------------------------------------------------------

int ConvexBody::dim() const { return rep_->n; }
BodyKind ConvexBody::kind() const { return rep_->kind; }
bool ConvexBody::degenerate() const { return rep_->degenerate; }

const PolygonData* ConvexBody::as_polygon() const { return std::get_if<PolygonData>(&rep_->data); }
const Polytope3Data* ConvexBody::as_polytope3() const { return std::get_if<Polytope3Data>(&rep_->data); }
const FourierData* ConvexBody::as_fourier() const { return std::get_if<FourierData>(&rep_->data); }
const BallData* ConvexBody::as_ball() const { return std::get_if<BallData>(&rep_->data); }
const EllipsoidData* ConvexBody::as_ellipsoid() const { return std::get_if<EllipsoidData>(&rep_->data); }
const InflatedData* ConvexBody::as_inflated() const { return std::get_if<InflatedData>(&rep_->data); }

double ConvexBody::support_hom(const Vec& v) const {
    switch (rep_->kind) {
        case BodyKind::Polytope2D: {
            const auto& d = std::get<PolygonData>(rep_->data);
            double h = -std::numeric_limits<double>::infinity();
            for (const Vec& p : d.v) h = std::max(h, p.dot(v));
            return h;
        }
        case BodyKind::Polytope3D: {
            const auto& d = std::get<Polytope3Data>(rep_->data);
            double h = -std::numeric_limits<double>::infinity();
            for (const Vec& p : d.v) h = std::max(h, p.dot(v));
            return h;
        }
        case BodyKind::Fourier2D: {
            const auto& d = std::get<FourierData>(rep_->data);
            const double r = v.norm();
            return r * d.eval(std::atan2(v.y(), v.x()));
        }
        case BodyKind::Ball: {
            const auto& d = std::get<BallData>(rep_->data);
            return d.center.dot(v) + d.radius * v.norm();
        }
        case BodyKind::Ellipsoid: {
            const auto& d = std::get<EllipsoidData>(rep_->data);
            double s = 0.0;
            for (int i = 0; i < rep_->n; ++i) s += d.a[static_cast<size_t>(i)] * d.a[static_cast<size_t>(i)] * v[i] * v[i];
            return d.center.dot(v) + std::sqrt(s);
        }
        case BodyKind::Inflated: {
            const auto& d = std::get<InflatedData>(rep_->data);
            return rep_body(d.inner).support_hom(v) + d.rho * v.norm();
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

double polygon_distance(const PolygonData& d, const Vec& x) {
    const size_t m = d.v.size();
    if (m == 1) return (x - d.v[0]).norm();
    if (m == 2) return point_segment_distance(x, d.v[0], d.v[1]);
    bool inside = true;
    double dist = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < m; ++i) {
        const Vec& a = d.v[i];
        const Vec& b = d.v[(i + 1) % m];
        if (cross2(b - a, x - a) < 0.0) inside = false;
        dist = std::min(dist, point_segment_distance(x, a, b));
    }
    if (inside && !d.degenerate) return 0.0;
    return dist;
}

double ellipsoid_distance(const EllipsoidData& d, const Vec& x, int n) {
    Vec y = x - d.center;
    double q = 0.0;
    for (int i = 0; i < n; ++i) {
        const double a = d.a[static_cast<size_t>(i)];
        q += (y[i] / a) * (y[i] / a);
    }
    if (q <= 1.0) return 0.0;
    // root of sum (a_i^2 y_i^2)/(a_i^2+t)^2 = 1 for t > 0, bisection
    auto g = [&](double t) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            const double a2 = d.a[static_cast<size_t>(i)] * d.a[static_cast<size_t>(i)];
            const double u = d.a[static_cast<size_t>(i)] * y[i] / (a2 + t);
            s += u * u;
        }
        return s - 1.0;
    };
    double lo = 0.0, hi = 1.0;
    while (g(hi) > 0.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? lo : hi) = mid;
        if (hi - lo < 1e-15 * (1.0 + hi)) break;
    }
    const double t = 0.5 * (lo + hi);
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double a2 = d.a[static_cast<size_t>(i)] * d.a[static_cast<size_t>(i)];
        const double u = y[i] * t / (a2 + t);
        s += u * u;
    }
    return std::sqrt(s);
}

double fourier_distance(const FourierData& d, const Vec& x) {
    // dist(x, Omega) = max(0, sup_theta x.u(theta) - h(theta))
    const int m = 256;
    double best = -std::numeric_limits<double>::infinity();
    double best_t = 0.0;
    for (int i = 0; i < m; ++i) {
        const double t = 2.0 * std::numbers::pi * i / m;
        const double val = x.x() * std::cos(t) + x.y() * std::sin(t) - d.eval(t);
        if (val > best) {
            best = val;
            best_t = t;
        }
    }
    // local refinement by window shrinking
    double half = std::numbers::pi / m;
    for (int round = 0; round < 6; ++round) {
        const double lo = best_t - half, hi = best_t + half;
        for (int i = 0; i <= 16; ++i) {
            const double t = lo + (hi - lo) * i / 16.0;
            const double val = x.x() * std::cos(t) + x.y() * std::sin(t) - d.eval(t);
            if (val > best) {
                best = val;
                best_t = t;
            }
        }
        half /= 8.0;
    }
    return std::max(0.0, best);
}

}  // namespace

double ConvexBody::distance(const Vec& x) const {
    switch (rep_->kind) {
        case BodyKind::Polytope2D:
            return polygon_distance(std::get<PolygonData>(rep_->data), x);
        case BodyKind::Polytope3D: {
            const auto& d = std::get<Polytope3Data>(rep_->data);
            if (!d.degenerate) {
                bool inside = true;
                for (const auto& f : d.faces) {
                    const Vec& a = d.v[static_cast<size_t>(f[0])];
                    const Vec nn = cross(d.v[static_cast<size_t>(f[1])] - a, d.v[static_cast<size_t>(f[2])] - a);
                    if ((x - a).dot(nn) > 0.0) {
                        inside = false;
                        break;
                    }
                }
                if (inside) return 0.0;
            }
            double dist = std::numeric_limits<double>::infinity();
            for (const auto& f : d.faces)
                dist = std::min(dist, point_triangle_distance(x, d.v[static_cast<size_t>(f[0])],
                                                              d.v[static_cast<size_t>(f[1])],
                                                              d.v[static_cast<size_t>(f[2])]));
            return dist;
        }
        case BodyKind::Fourier2D:
            return fourier_distance(std::get<FourierData>(rep_->data), x);
        case BodyKind::Ball: {
            const auto& d = std::get<BallData>(rep_->data);
            return std::max(0.0, (x - d.center).norm() - d.radius);
        }
        case BodyKind::Ellipsoid:
            return ellipsoid_distance(std::get<EllipsoidData>(rep_->data), x, rep_->n);
        case BodyKind::Inflated: {
            const auto& d = std::get<InflatedData>(rep_->data);
            return std::max(0.0, rep_body(d.inner).distance(x) - d.rho);
        }
    }
    throw std::logic_error("unreachable");
}

ConvexBody ConvexBody::translated(const Vec& t) const {
    auto rep = std::make_shared<BodyRep>(*rep_);
    switch (rep_->kind) {
        case BodyKind::Polytope2D: {
            auto& d = std::get<PolygonData>(rep->data);
            for (Vec& p : d.v) p += t;
            break;
        }
        case BodyKind::Polytope3D: {
            auto& d = std::get<Polytope3Data>(rep->data);
            for (Vec& p : d.v) p += t;
            break;
        }
        case BodyKind::Fourier2D: {
            auto& d = std::get<FourierData>(rep->data);
            if (d.ab.empty()) d.ab.push_back({0.0, 0.0});
            d.ab[0][0] += t.x();
            d.ab[0][1] += t.y();
            break;
        }
        case BodyKind::Ball:
            std::get<BallData>(rep->data).center += t;
            break;
        case BodyKind::Ellipsoid:
            std::get<EllipsoidData>(rep->data).center += t;
            break;
        case BodyKind::Inflated: {
            auto& d = std::get<InflatedData>(rep->data);
            d.inner = rep_body(d.inner).translated(t).rep_;
            break;
        }
    }
    return ConvexBody(rep);
}

// ---------------------------------------------------------------------------
// operations
// ---------------------------------------------------------------------------

double support(const ConvexBody& body, const Direction& u) {
    if (u.dim() != body.dim()) throw std::invalid_argument("support: dimension mismatch");
    return body.support(u);
}

ShapeSummary shape_summary(const ConvexBody& body, const SphereGrid* grid) {
    const SphereGrid& g = grid ? *grid : SphereGrid::standard(body.dim());
    if (g.n != body.dim()) throw std::invalid_argument("shape_summary: grid dimension mismatch");
    if ((body.dim() == 2 && g.size() < 64) || (body.dim() == 3 && g.size() < 590))
        throw std::invalid_argument("shape_summary: grid too coarse");
    const int n = body.dim();
    const double omega_n = unit_ball_volume(n);

    ShapeSummary s;
    // diameter
    if (const auto* poly = body.as_polygon()) {
        for (size_t i = 0; i < poly->v.size(); ++i)
            for (size_t j = i + 1; j < poly->v.size(); ++j)
                s.diameter = std::max(s.diameter, (poly->v[i] - poly->v[j]).norm());
    } else if (const auto* p3 = body.as_polytope3()) {
        for (size_t i = 0; i < p3->v.size(); ++i)
            for (size_t j = i + 1; j < p3->v.size(); ++j)
                s.diameter = std::max(s.diameter, (p3->v[i] - p3->v[j]).norm());
    } else if (const auto* b = body.as_ball()) {
        s.diameter = 2.0 * b->radius;
    } else if (const auto* e = body.as_ellipsoid()) {
        s.diameter = 2.0 * *std::max_element(e->a.begin(), e->a.end());
    } else {
        for (const Vec& u : g.dirs) s.diameter = std::max(s.diameter, body.support_hom(u) + body.support_hom(-u));
    }

    double hint = 0.0;
    Vec sp = Vec::zero(n);
    for (size_t i = 0; i < g.size(); ++i) {
        const double h = body.support_hom(g.dirs[i]);
        hint += g.weights[i] * h;
        sp += g.dirs[i] * (g.weights[i] * h);
    }
    s.mean_width = 2.0 / (n * omega_n) * hint;
    s.steiner_point = sp * (1.0 / omega_n);
    s.steiner_radius = 0.5 * s.mean_width;
    return s;
}

ConvexBody minkowski_add_ball(const ConvexBody& body, double rho) {
    if (rho < 0.0) throw std::invalid_argument("minkowski_add_ball: rho must be nonnegative");
    if (rho == 0.0) return body;
    if (const auto* b = body.as_ball()) return ConvexBody::ball(b->center, b->radius + rho);
    auto rep = std::make_shared<BodyRep>();
    rep->n = body.dim();
    rep->kind = BodyKind::Inflated;
    rep->degenerate = false;  // positive inflation is full-dimensional
    rep->data = InflatedData{body.rep_, rho};
    return ConvexBody(rep);
}

namespace {

// Maximize |h_a - h_b| near u0 by shrinking tangent-plane windows.
double refine_sup(const ConvexBody& a, const ConvexBody& b, Vec u0, double delta) {
    const int n = u0.n;
    auto val = [&](const Vec& u) { return std::abs(a.support_hom(u) - b.support_hom(u)) / u.norm(); };
    double best = val(u0);
    if (n == 2) {
        double t0 = std::atan2(u0.y(), u0.x());
        for (int round = 0; round < 7; ++round) {
            double bt = t0;
            for (int i = -8; i <= 8; ++i) {
                const double t = t0 + delta * i / 8.0;
                const double v = val(Vec::xy(std::cos(t), std::sin(t)));
                if (v > best) {
                    best = v;
                    bt = t;
                }
            }
            t0 = bt;
            delta /= 8.0;
        }
        return best;
    }
    // local orthonormal tangent frame
    Vec e1 = std::abs(u0.z()) < 0.9 ? cross(u0, Vec::xyz(0, 0, 1)).normalized()
                                    : cross(u0, Vec::xyz(1, 0, 0)).normalized();
    for (int round = 0; round < 8; ++round) {
        Vec e2 = cross(u0, e1).normalized();
        Vec bu = u0;
        for (int i = -4; i <= 4; ++i)
            for (int j = -4; j <= 4; ++j) {
                Vec u = (u0 + e1 * (delta * i / 4.0) + e2 * (delta * j / 4.0)).normalized();
                const double v = val(u);
                if (v > best) {
                    best = v;
                    bu = u;
                }
            }
        u0 = bu;
        e1 = (e1 - u0 * e1.dot(u0)).normalized();
        delta /= 4.0;
    }
    return best;
}

}  // namespace

double hausdorff_distance(const ConvexBody& a, const ConvexBody& b, const SphereGrid* grid) {
    if (a.dim() != b.dim()) throw std::invalid_argument("hausdorff_distance: dimension mismatch");
    const SphereGrid& g = grid ? *grid : SphereGrid::standard(a.dim());
    double best = -1.0;
    size_t arg = 0;
    for (size_t i = 0; i < g.size(); ++i) {
        const double v = std::abs(a.support_hom(g.dirs[i]) - b.support_hom(g.dirs[i]));
        if (v > best) {
            best = v;
            arg = i;
        }
    }
    const double step = (a.dim() == 2) ? 2.0 * std::numbers::pi / static_cast<double>(g.size())
                                       : 2.0 / std::sqrt(static_cast<double>(g.size()));
    return refine_sup(a, b, g.dirs[arg], step);
}

ConvexBody homothety(const ConvexBody& body, double t, const Vec& center) {
    if (!(t > 0.0)) throw std::invalid_argument("homothety: scale must be positive");
    if (center.n != body.dim()) throw std::invalid_argument("homothety: center dimension mismatch");
    auto map = [&](const Vec& p) { return center + (p - center) * t; };
    switch (body.kind()) {
        case BodyKind::Polytope2D: {
            std::vector<Vec> v = body.as_polygon()->v;
            for (Vec& p : v) p = map(p);
            return ConvexBody::polygon(std::move(v));
        }
        case BodyKind::Polytope3D: {
            std::vector<Vec> v = body.as_polytope3()->v;
            for (Vec& p : v) p = map(p);
            return ConvexBody::polytope3d(v);
        }
        case BodyKind::Fourier2D: {
            FourierData d = *body.as_fourier();
            d.a0 *= t;
            for (auto& c : d.ab) {
                c[0] *= t;
                c[1] *= t;
            }
            if (d.ab.empty()) d.ab.push_back({0.0, 0.0});
            d.ab[0][0] += (1.0 - t) * center.x();
            d.ab[0][1] += (1.0 - t) * center.y();
            return ConvexBody::fourier2d(d.a0, std::move(d.ab));
        }
        case BodyKind::Ball: {
            const auto* b = body.as_ball();
            return ConvexBody::ball(map(b->center), t * b->radius);
        }
        case BodyKind::Ellipsoid: {
            const auto* e = body.as_ellipsoid();
            std::vector<double> a = e->a;
            for (double& ai : a) ai *= t;
            return ConvexBody::ellipsoid(map(e->center), std::move(a));
        }
        case BodyKind::Inflated: {
            const auto* d = body.as_inflated();
            return minkowski_add_ball(homothety(rep_body(d->inner), t, center), t * d->rho);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace hsymm
