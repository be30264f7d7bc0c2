#pragma once

// Exact low-dimensional convex geometry: orientation predicates, 2D hulls,
// point-in-polytope tests (orientation walk in the plane, simplex-style
// exact feasibility in dimensions up to 6), lattice-point enumeration, and
// halfspace clipping.

#include "helly/linalg.hpp"
#include "helly/scalars.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace helly {

template <typename S>
using Point = std::vector<S>;

template <typename S>
struct Box {
    Point<S> lo, hi;

    int dim() const { return static_cast<int>(lo.size()); }
    bool contains(const Point<S>& p) const {
        for (size_t i = 0; i < lo.size(); ++i) {
            if (sgn_of(p[i] - lo[i]) == Sign::negative) return false;
            if (sgn_of(hi[i] - p[i]) == Sign::negative) return false;
        }
        return true;
    }
    Box shrunk(const S& margin) const {
        Box b = *this;
        for (size_t i = 0; i < lo.size(); ++i) {
            b.lo[i] = b.lo[i] + margin;
            b.hi[i] = b.hi[i] - margin;
        }
        return b;
    }
};

template <typename S>
struct VPolytope {
    std::vector<Point<S>> vertices;  // 2D: counterclockwise extreme points
    int dim = 0;                     // affine dimension of the hull
};

template <typename S>
struct Halfspace {
    std::vector<S> normal;
    S offset;  // normal . x <= offset
};

template <typename S>
struct HPolytope {
    std::vector<Halfspace<S>> halfspaces;
    Box<S> bbox;  // bounding box, kept alongside for enumeration
};

enum class Containment { in, out, uncertain };
enum class HullMode { closed, open };

template <typename S>
Sign orientation2d(const Point<S>& p, const Point<S>& q, const Point<S>& r) {
    if (p.size() != 2 || q.size() != 2 || r.size() != 2)
        fail(Errc::dimension_mismatch, "orientation2d expects 2D points");
    return sgn_of((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]));
}

template <typename S>
bool points_equal(const Point<S>& a, const Point<S>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (sgn_of(a[i] - b[i]) != Sign::zero) return false;
    return true;
}

// Lexicographic comparison; order must be decidable.
template <typename S>
int lex_compare(const Point<S>& a, const Point<S>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        Sign s = sgn_of(a[i] - b[i]);
        if (s == Sign::uncertain) fail(Errc::uncertain_predicate, "uncertain lexicographic compare");
        if (s == Sign::negative) return -1;
        if (s == Sign::positive) return 1;
    }
    return 0;
}

template <typename S>
Box<S> bounding_box(const std::vector<Point<S>>& pts) {
    if (pts.empty()) fail(Errc::internal, "bounding box of empty point set");
    Box<S> b{pts[0], pts[0]};
    for (const auto& p : pts)
        for (size_t i = 0; i < p.size(); ++i) {
            if (sgn_of(p[i] - b.lo[i]) == Sign::negative) b.lo[i] = p[i];
            if (sgn_of(p[i] - b.hi[i]) == Sign::positive) b.hi[i] = p[i];
        }
    return b;
}

// Andrew's monotone chain. Collinear points interior to edges are dropped;
// degenerate inputs are flagged with dim < 2 rather than rejected.
template <typename S>
VPolytope<S> convex_hull_2d(std::vector<Point<S>> pts) {
    if (pts.empty()) fail(Errc::dimension_mismatch, "hull of empty point set");
    for (const auto& p : pts)
        if (p.size() != 2) fail(Errc::dimension_mismatch, "convex_hull_2d expects 2D points");
    std::sort(pts.begin(), pts.end(),
              [](const Point<S>& a, const Point<S>& b) { return lex_compare(a, b) < 0; });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point<S>& a, const Point<S>& b) { return points_equal(a, b); }),
              pts.end());
    VPolytope<S> out;
    size_t n = pts.size();
    if (n == 1) {
        out.vertices = pts;
        out.dim = 0;
        return out;
    }
    auto turn = [](const Point<S>& a, const Point<S>& b, const Point<S>& c) {
        Sign s = orientation2d(a, b, c);
        if (s == Sign::uncertain)
            fail(Errc::uncertain_predicate, "orientation straddles zero in convex hull");
        return s;
    };
    std::vector<Point<S>> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && turn(h[k - 2], h[k - 1], pts[i]) != Sign::positive) --k;
        h[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && turn(h[k - 2], h[k - 1], pts[i]) != Sign::positive) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() == 2) {
        out.vertices = {pts.front(), pts.back()};  // extreme points of the segment
        out.dim = 1;
        return out;
    }
    out.vertices = std::move(h);
    out.dim = 2;
    return out;
}

// Certify that the given cyclic vertex order traces a simple, strictly
// convex, counterclockwise polygon: every consecutive triple turns strictly
// left and the edge directions wrap around the circle exactly once. Returns
// the polygon in the given order, nullopt when the certificate fails, and
// throws uncertain_predicate when the backend cannot decide.
template <typename S>
std::optional<VPolytope<S>> cyclic_convex_polygon(const std::vector<Point<S>>& verts) {
    size_t n = verts.size();
    if (n < 3) return std::nullopt;
    for (size_t i = 0; i < n; ++i) {
        Sign s = orientation2d(verts[i], verts[(i + 1) % n], verts[(i + 2) % n]);
        if (s == Sign::uncertain)
            fail(Errc::uncertain_predicate, "turn direction straddles zero");
        if (s != Sign::positive) return std::nullopt;
    }
    auto upper_half = [&](size_t i) {
        const Point<S>& a = verts[i];
        const Point<S>& b = verts[(i + 1) % n];
        Sign sy = sgn_of(b[1] - a[1]);
        if (sy == Sign::positive) return true;
        if (sy == Sign::negative) return false;
        Sign sx = sgn_of(b[0] - a[0]);
        if (sx == Sign::uncertain)
            fail(Errc::uncertain_predicate, "edge direction straddles zero");
        return sx == Sign::positive;
    };
    int wraps = 0;
    for (size_t i = 0; i < n; ++i)
        if (!upper_half(i) && upper_half((i + 1) % n)) ++wraps;
    if (wraps != 1) return std::nullopt;
    return VPolytope<S>{verts, 2};
}

namespace detail {

// On-segment test (closed), endpoints included.
template <typename S>
Containment on_segment(const Point<S>& a, const Point<S>& b, const Point<S>& x) {
    bool unsure = false;
    if (a.size() == 2) {
        Sign o = orientation2d(a, b, x);
        if (o == Sign::positive || o == Sign::negative) return Containment::out;
        if (o == Sign::uncertain) unsure = true;
    } else {
        // collinearity via proportional differences
        for (size_t i = 0; i + 1 < a.size(); ++i) {
            Sign o = sgn_of((b[i] - a[i]) * (x[i + 1] - a[i + 1]) - (b[i + 1] - a[i + 1]) * (x[i] - a[i]));
            if (o == Sign::positive || o == Sign::negative) return Containment::out;
            if (o == Sign::uncertain) unsure = true;
        }
    }
    for (size_t i = 0; i < a.size(); ++i) {
        S lo = a[i], hi = b[i];
        if (sgn_of(hi - lo) == Sign::negative) std::swap(lo, hi);
        Sign s1 = sgn_of(x[i] - lo), s2 = sgn_of(hi - x[i]);
        if (s1 == Sign::negative || s2 == Sign::negative) return Containment::out;
        if (s1 == Sign::uncertain || s2 == Sign::uncertain) unsure = true;
    }
    return unsure ? Containment::uncertain : Containment::in;
}

// Exact phase-1/phase-2 simplex for x in conv(V): find mu >= 0, t >= 0 with
// sum(mu) + m t = 1 and V mu + (sum of columns) t = x; maximize t. The hull
// membership is feasibility; relative-interior membership is optimum t > 0.
// Returns nullopt when infeasible, otherwise the optimal t.
template <typename S>
std::optional<S> barycentric_lp(const std::vector<Point<S>>& verts, const Point<S>& x) {
    const int d = static_cast<int>(x.size());
    const int m = static_cast<int>(verts.size());
    const int rows = d + 1;
    const int nvar = m + 1;  // mu_1..mu_m, t
    // tableau: rows x (nvar + rows artificials + rhs)
    const int cols = nvar + rows + 1;
    std::vector<std::vector<S>> tab(rows, std::vector<S>(cols, S(0)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < m; ++j) tab[i][j] = verts[j][i];
        S colsum(0);
        for (int j = 0; j < m; ++j) colsum = colsum + verts[j][i];
        tab[i][m] = colsum;
        tab[i][cols - 1] = x[i];
    }
    for (int j = 0; j < m; ++j) tab[d][j] = S(1);
    tab[d][m] = S(m);
    tab[d][cols - 1] = S(1);
    // make rhs nonnegative, install artificial basis
    std::vector<int> basis(rows);
    for (int i = 0; i < rows; ++i) {
        Sign s = sgn_of(tab[i][cols - 1]);
        if (s == Sign::uncertain) fail(Errc::uncertain_predicate, "uncertain rhs in membership LP");
        if (s == Sign::negative)
            for (int j = 0; j < cols; ++j) tab[i][j] = -tab[i][j];
        tab[i][nvar + i] = S(1);
        basis[i] = nvar + i;
    }
    auto pivot = [&](int pr, int pc) {
        S d0 = tab[pr][pc];
        for (int j = 0; j < cols; ++j) tab[pr][j] = tab[pr][j] / d0;
        for (int i = 0; i < rows; ++i) {
            if (i == pr) continue;
            S f = tab[i][pc];
            if (sgn_of(f) == Sign::zero) continue;
            for (int j = 0; j < cols; ++j) tab[i][j] = tab[i][j] - f * tab[pr][j];
        }
        basis[pr] = pc;
    };
    auto run_simplex = [&](const std::vector<S>& cost, int var_limit) {
        // minimize cost . vars with Bland's rule; returns objective value
        for (;;) {
            // reduced costs: c_j - c_B B^-1 A_j; tableau is kept in canonical
            // form so reduced cost of column j is cost[j] - sum over rows of
            // cost[basis[i]] * tab[i][j].
            int enter = -1;
            for (int j = 0; j < var_limit; ++j) {
                bool in_basis = false;
                for (int i = 0; i < rows; ++i)
                    if (basis[i] == j) { in_basis = true; break; }
                if (in_basis) continue;
                S rc = cost[j];
                for (int i = 0; i < rows; ++i) {
                    if (sgn_of(tab[i][j]) == Sign::zero) continue;
                    rc = rc - cost[basis[i]] * tab[i][j];
                }
                Sign s = sgn_of(rc);
                if (s == Sign::uncertain)
                    fail(Errc::uncertain_predicate, "uncertain reduced cost in membership LP");
                if (s == Sign::negative) { enter = j; break; }  // Bland: first improving
            }
            if (enter < 0) break;
            int leave = -1;
            S best_ratio(0);
            for (int i = 0; i < rows; ++i) {
                Sign s = sgn_of(tab[i][enter]);
                if (s == Sign::uncertain)
                    fail(Errc::uncertain_predicate, "uncertain pivot column in membership LP");
                if (s != Sign::positive) continue;
                S ratio = tab[i][cols - 1] / tab[i][enter];
                if (leave < 0) { leave = i; best_ratio = ratio; continue; }
                Sign c = sgn_of(ratio - best_ratio);
                if (c == Sign::negative || (c == Sign::zero && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) fail(Errc::unbounded_region, "membership LP unbounded");
            pivot(leave, enter);
        }
        S obj(0);
        for (int i = 0; i < rows; ++i) obj = obj + cost[basis[i]] * tab[i][cols - 1];
        return obj;
    };
    // phase 1: minimize sum of artificials
    std::vector<S> cost1(cols - 1, S(0));
    for (int i = 0; i < rows; ++i) cost1[nvar + i] = S(1);
    S infeas = run_simplex(cost1, cols - 1);
    if (sgn_of(infeas) == Sign::positive) return std::nullopt;
    // drive leftover artificials out of the basis where possible
    for (int i = 0; i < rows; ++i) {
        if (basis[i] < nvar) continue;
        int repl = -1;
        for (int j = 0; j < nvar; ++j) {
            Sign s = sgn_of(tab[i][j]);
            if (s == Sign::positive || s == Sign::negative) { repl = j; break; }
        }
        if (repl >= 0) pivot(i, repl);
    }
    // phase 2: maximize t == minimize -t; artificial columns stay out
    std::vector<S> cost2(cols - 1, S(0));
    cost2[m] = S(-1);
    for (int i = 0; i < rows; ++i) cost2[nvar + i] = S(1);  // parked basics cost nothing at 0
    S negt = run_simplex(cost2, nvar);
    return -negt;
}

template <typename S>
int affine_rank(const std::vector<Point<S>>& pts) {
    if (pts.size() <= 1) return 0;
    int d = static_cast<int>(pts[0].size());
    Mat<S> m(static_cast<int>(pts.size()) - 1, d);
    for (size_t i = 1; i < pts.size(); ++i)
        for (int j = 0; j < d; ++j) m(static_cast<int>(i) - 1, j) = pts[i][j] - pts[0][j];
    return d - static_cast<int>(nullspace(m).size());
}

}  // namespace detail

// Membership of x in the closed (or open = interior) hull of P. In the plane
// this is an orientation walk over the CCW boundary; in higher dimensions an
// exact feasibility problem over the scalar field.
template <typename S>
Containment point_in_hull(const VPolytope<S>& P, const Point<S>& x, HullMode mode) {
    if (P.vertices.empty()) return Containment::out;
    size_t d = P.vertices[0].size();
    if (x.size() != d) fail(Errc::dimension_mismatch, "point/polytope dimension mismatch");
    if (d > 6) fail(Errc::dimension_mismatch, "point_in_hull supports dimension <= 6");

    if (P.dim == 0)
        return mode == HullMode::closed
                   ? (points_equal(P.vertices[0], x) ? Containment::in : Containment::out)
                   : Containment::out;
    if (P.dim == 1) {
        if (mode == HullMode::open) return Containment::out;
        return detail::on_segment(P.vertices.front(), P.vertices.back(), x);
    }

    if (d == 2 && P.dim == 2) {
        bool unsure = false, boundary = false;
        size_t n = P.vertices.size();
        for (size_t i = 0; i < n; ++i) {
            Sign s = orientation2d(P.vertices[i], P.vertices[(i + 1) % n], x);
            if (s == Sign::negative) return Containment::out;
            if (s == Sign::zero) boundary = true;
            if (s == Sign::uncertain) unsure = true;
        }
        if (unsure) return Containment::uncertain;
        if (mode == HullMode::open && boundary) return Containment::out;
        return Containment::in;
    }

    // d >= 3 (or a full-dimensional polytope given in higher ambient space)
    if (mode == HullMode::open && P.dim < static_cast<int>(d)) return Containment::out;
    auto t = detail::barycentric_lp(P.vertices, x);
    if (!t) return Containment::out;
    Sign s = sgn_of(*t);
    if (s == Sign::uncertain) return Containment::uncertain;
    if (mode == HullMode::closed) return Containment::in;
    return s == Sign::positive ? Containment::in : Containment::out;
}

// Full-dimensional 2D polygon facets are its CCW edges; facet i joins vertex i
// and vertex i+1. True iff x lies strictly between the edge endpoints.
template <typename S>
bool relative_interior_of_facet_contains(const VPolytope<S>& P, size_t facet_index,
                                         const Point<S>& x) {
    if (P.dim != 2) fail(Errc::dimension_mismatch, "facet test expects a full-dimensional polygon");
    size_t n = P.vertices.size();
    if (facet_index >= n) fail(Errc::facet_index_out_of_range, "facet index out of range");
    const Point<S>& a = P.vertices[facet_index];
    const Point<S>& b = P.vertices[(facet_index + 1) % n];
    if (points_equal(a, x) || points_equal(b, x)) return false;
    return detail::on_segment(a, b, x) == Containment::in;
}

template <typename S>
Halfspace<S> halfspace_from_edge(const Point<S>& u, const Point<S>& v) {
    // inside = left of the directed edge u -> v
    S dx = v[0] - u[0], dy = v[1] - u[1];
    Halfspace<S> h;
    h.normal = {dy, S(0) - dx};
    h.offset = h.normal[0] * u[0] + h.normal[1] * u[1];
    return h;
}

// Sutherland-Hodgman clip of a CCW convex polygon by one halfspace.
template <typename S>
std::vector<Point<S>> clip_polygon(const std::vector<Point<S>>& poly, const Halfspace<S>& h) {
    std::vector<Point<S>> out;
    size_t n = poly.size();
    if (n == 0) return out;
    auto eval = [&](const Point<S>& p) {
        S v = h.offset;
        for (size_t i = 0; i < p.size(); ++i) v = v - h.normal[i] * p[i];
        return v;  // >= 0 inside
    };
    std::vector<S> val;
    val.reserve(n);
    for (const auto& p : poly) val.push_back(eval(p));
    for (size_t i = 0; i < n; ++i) {
        size_t j = (i + 1) % n;
        Sign si = sgn_of(val[i]), sj = sgn_of(val[j]);
        if (si == Sign::uncertain || sj == Sign::uncertain)
            fail(Errc::uncertain_predicate, "uncertain halfspace clip");
        if (si != Sign::negative) out.push_back(poly[i]);
        if ((si == Sign::positive && sj == Sign::negative) ||
            (si == Sign::negative && sj == Sign::positive)) {
            S t = val[i] / (val[i] - val[j]);
            Point<S> p(poly[i].size());
            for (size_t k = 0; k < p.size(); ++k)
                p[k] = poly[i][k] + t * (poly[j][k] - poly[i][k]);
            out.push_back(std::move(p));
        }
    }
    // drop exact duplicates introduced by touching edges
    std::vector<Point<S>> dedup;
    for (auto& p : out)
        if (dedup.empty() || !points_equal(dedup.back(), p)) dedup.push_back(std::move(p));
    while (dedup.size() > 1 && points_equal(dedup.front(), dedup.back())) dedup.pop_back();
    return dedup;
}

// Intersection of two convex polygons (vertex lists in CCW order); the result
// is normalized through convex_hull_2d and may be degenerate.
template <typename S>
VPolytope<S> polygon_intersection(const VPolytope<S>& A, const VPolytope<S>& B) {
    if (A.dim < 2) {
        // clip the segment/point against B instead
        std::vector<Point<S>> pts;
        for (const auto& v : A.vertices)
            if (point_in_hull(B, v, HullMode::closed) == Containment::in) pts.push_back(v);
        if (A.dim == 1 && B.dim == 2) {
            std::vector<Point<S>> seg = A.vertices;
            size_t nb = B.vertices.size();
            for (size_t i = 0; i < nb; ++i) {
                seg = clip_polygon(seg, halfspace_from_edge(B.vertices[i], B.vertices[(i + 1) % nb]));
                if (seg.empty()) break;
            }
            for (auto& p : seg) pts.push_back(std::move(p));
        }
        if (pts.empty()) return VPolytope<S>{{}, -1};
        return convex_hull_2d(pts);
    }
    if (B.dim < 2) return polygon_intersection(B, A);
    std::vector<Point<S>> cur = A.vertices;
    size_t nb = B.vertices.size();
    for (size_t i = 0; i < nb && !cur.empty(); ++i)
        cur = clip_polygon(cur, halfspace_from_edge(B.vertices[i], B.vertices[(i + 1) % nb]));
    if (cur.empty()) return VPolytope<S>{{}, -1};
    return convex_hull_2d(cur);
}

namespace detail {

template <typename S>
void integer_range_of(const S& lo, const S& hi, long& zlo, long& zhi);

inline long checked_si(const mpz_class& z) {
    if (!mpz_fits_slong_p(z.get_mpz_t()))
        fail(Errc::unbounded_region, "enumeration range exceeds machine integers");
    return z.get_si();
}

template <>
inline void integer_range_of<Rational>(const Rational& lo, const Rational& hi, long& zlo, long& zhi) {
    zlo = checked_si(lo.ceil());
    zhi = checked_si(hi.floor());
}
template <>
inline void integer_range_of<QuadScalar>(const QuadScalar& lo, const QuadScalar& hi, long& zlo,
                                         long& zhi) {
    zlo = checked_si(lo.ceil());
    zhi = checked_si(hi.floor());
}
template <>
inline void integer_range_of<CertFloat>(const CertFloat& lo, const CertFloat& hi, long& zlo,
                                        long& zhi) {
    // conservative outward rounding; callers filter by exact membership
    zlo = lo.floor_lower();
    zhi = hi.ceil_upper();
}

// Iterate all integer vectors in [lo, hi] (componentwise); f(z) per vector.
template <typename F>
void for_each_integer_vector(const std::vector<long>& lo, const std::vector<long>& hi, F&& f) {
    size_t d = lo.size();
    for (size_t i = 0; i < d; ++i)
        if (lo[i] > hi[i]) return;
    std::vector<long> z(lo);
    for (;;) {
        f(z);
        size_t i = 0;
        while (i < d && z[i] == hi[i]) {
            z[i] = lo[i];
            ++i;
        }
        if (i == d) return;
        ++z[i];
    }
}

// Integer bounding box of the basis-preimage of an ambient-space box.
template <typename S>
void lattice_index_box(const Mat<S>& basis_inv, const Box<S>& box, std::vector<long>& zlo,
                       std::vector<long>& zhi) {
    int d = box.dim();
    std::vector<Point<S>> corners;
    for (long mask = 0; mask < (1L << d); ++mask) {
        Point<S> c(d);
        for (int i = 0; i < d; ++i) c[i] = (mask >> i) & 1 ? box.hi[i] : box.lo[i];
        corners.push_back(basis_inv.mul_vec(c));
    }
    zlo.assign(d, 0);
    zhi.assign(d, 0);
    for (int i = 0; i < d; ++i) {
        S lo = corners[0][i], hi = corners[0][i];
        for (const auto& c : corners) {
            if (sgn_of(c[i] - lo) == Sign::negative) lo = c[i];
            if (sgn_of(c[i] - hi) == Sign::positive) hi = c[i];
        }
        integer_range_of<S>(lo, hi, zlo[i], zhi[i]);
    }
}

}  // namespace detail

// All lattice vectors z with basis*z inside the closed polytope Q.
template <typename S>
std::vector<std::vector<long>> lattice_points_in_polytope(const Mat<S>& basis,
                                                          const VPolytope<S>& Q) {
    if (Q.vertices.empty()) return {};
    Mat<S> inv = inverse(basis);
    Box<S> bb = bounding_box(Q.vertices);
    std::vector<long> zlo, zhi;
    detail::lattice_index_box(inv, bb, zlo, zhi);
    std::vector<std::vector<long>> out;
    detail::for_each_integer_vector(zlo, zhi, [&](const std::vector<long>& z) {
        Point<S> p(z.size());
        for (size_t i = 0; i < z.size(); ++i) p[i] = S(z[i]);
        p = basis.mul_vec(p);
        Containment c = point_in_hull(Q, p, HullMode::closed);
        if (c == Containment::uncertain)
            fail(Errc::uncertain_predicate, "uncertain lattice membership");
        if (c == Containment::in) out.push_back(z);
    });
    return out;
}

template <typename S>
std::vector<std::vector<long>> lattice_points_in_polytope(const Mat<S>& basis,
                                                          const HPolytope<S>& Q) {
    Mat<S> inv = inverse(basis);
    std::vector<long> zlo, zhi;
    detail::lattice_index_box(inv, Q.bbox, zlo, zhi);
    std::vector<std::vector<long>> out;
    detail::for_each_integer_vector(zlo, zhi, [&](const std::vector<long>& z) {
        Point<S> p(z.size());
        for (size_t i = 0; i < z.size(); ++i) p[i] = S(z[i]);
        p = basis.mul_vec(p);
        for (const auto& h : Q.halfspaces) {
            S v = h.offset;
            for (size_t i = 0; i < p.size(); ++i) v = v - h.normal[i] * p[i];
            Sign s = sgn_of(v);
            if (s == Sign::uncertain)
                fail(Errc::uncertain_predicate, "uncertain lattice membership");
            if (s == Sign::negative) return;
        }
        out.push_back(z);
    });
    return out;
}

}  // namespace helly
