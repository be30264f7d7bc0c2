#include "helly/bounds.hpp"

namespace helly {

int crystal_upper_bound(int d, int k, std::string& provenance) {
    if (k == 1) {
        provenance = "doignon";
        return 1 << d;
    }
    if (d == 2) {
        provenance = "twodim_table";
        static const int table[] = {0, 4, 6, 7, 9, 10};
        return k <= 5 ? table[k] : k + 6;
    }
    provenance = "union_k2d";
    return k * (1 << d);
}

int scheme_upper_bound(int d, int k, std::string& provenance) {
    provenance = "cnp_2dk";
    return 1 << (d + k);
}

ProductLift product_certificate(const Crystal<Rational>& base,
                                const EmptyHullCertificate<Rational>& planar, int extra_dims) {
    if (planar.status != CertStatus::verified)
        fail(Errc::invalid_config, "product lift needs a verified planar certificate");
    if (base.dim() != 2 || planar.vertices.empty() || planar.vertices[0].size() != 2)
        fail(Errc::dimension_mismatch, "product lift starts from a 2D crystal certificate");
    if (extra_dims < 1 || 2 + extra_dims > 6)
        fail(Errc::dimension_mismatch, "product lift supports 1 to 4 extra dimensions");
    int dim = 2 + extra_dims;
    Mat<Rational> basis = Mat<Rational>::identity(dim);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) basis(i, j) = base.lattice.basis(i, j);
    std::vector<Point<Rational>> translates;
    for (const auto& t : base.translates) {
        Point<Rational> lifted(dim, Rational(0));
        lifted[0] = t[0];
        lifted[1] = t[1];
        translates.push_back(std::move(lifted));
    }
    ProductLift out{make_crystal(std::move(basis), std::move(translates)), {}};
    std::vector<Point<Rational>> verts;
    for (long mask = 0; mask < (1L << extra_dims); ++mask)
        for (const auto& v : planar.vertices) {
            Point<Rational> p(dim);
            p[0] = v[0];
            p[1] = v[1];
            for (int i = 0; i < extra_dims; ++i) p[2 + i] = Rational((mask >> i) & 1);
            verts.push_back(std::move(p));
        }
    out.certificate =
        is_empty_hull(out.crystal, verts, nullptr,
                      planar.source_id.empty() ? "product-lift" : planar.source_id + "-lift");
    return out;
}

namespace {

using RPoint = Point<Rational>;

RPoint apply_affine(const Mat<Rational>& m, const RPoint& shift, const RPoint& p) {
    RPoint q = m.mul_vec(p);
    return {q[0] + shift[0], q[1] + shift[1]};
}

}  // namespace

ParallelogramResult find_parallelogram(const std::array<RPoint, 4>& quad) {
    std::vector<RPoint> pts(quad.begin(), quad.end());
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            if (points_equal(pts[i], pts[j])) fail(Errc::degenerate_quad, "duplicate quad vertex");
    VPolytope<Rational> hull = convex_hull_2d(pts);
    if (hull.dim < 2) fail(Errc::degenerate_quad, "quad is collinear");
    if (hull.vertices.size() != 4)
        fail(Errc::not_convex, "the four points are not in strictly convex position");
    // Cyclic labels: A, B, C consecutive hull vertices, D the fourth.
    const RPoint &A = hull.vertices[0], &B = hull.vertices[1], &C = hull.vertices[2],
                 &D = hull.vertices[3];
    auto input_index = [&](const RPoint& p) {
        for (int i = 0; i < 4; ++i)
            if (points_equal(quad[i], p)) return i;
        fail(Errc::internal, "hull vertex not among inputs");
    };
    // Normalize: B -> (0,0), C -> (1,0), A -> (0,1).
    Mat<Rational> m(2, 2);
    m(0, 0) = C[0] - B[0];
    m(1, 0) = C[1] - B[1];
    m(0, 1) = A[0] - B[0];
    m(1, 1) = A[1] - B[1];
    Mat<Rational> inv = inverse(m);
    auto fwd = [&](const RPoint& p) {
        RPoint t = {p[0] - B[0], p[1] - B[1]};
        return inv.mul_vec(t);
    };
    auto back = [&](const RPoint& p) { return apply_affine(m, B, p); };
    RPoint dm = fwd(D);
    const Rational &x = dm[0], &y = dm[1];
    Rational one(1);
    ParallelogramResult out;
    if (x == one && y == one) {
        out.parallelogram = {A, B, C, D};
        out.shared = {input_index(A), input_index(B), input_index(C), input_index(D)};
        return out;
    }
    if (x > one && y > one) {
        out.parallelogram = {A, B, C, back({one, one})};
        out.shared = {input_index(A), input_index(B), input_index(C)};
    } else if (x > one) {
        out.parallelogram = {B, C, D, back({x - one, y})};
        out.shared = {input_index(B), input_index(C), input_index(D)};
    } else if (y > one) {
        out.parallelogram = {A, B, back({x, y - one}), D};
        out.shared = {input_index(A), input_index(B), input_index(D)};
    } else {
        out.parallelogram = {A, back({one - x, one - y}), C, D};
        out.shared = {input_index(A), input_index(C), input_index(D)};
    }
    return out;
}

int parallel_segments_witness(const std::array<std::pair<RPoint, RPoint>, 3>& segments) {
    const RPoint &X = segments[0].first, &Xp = segments[0].second;
    RPoint v = {Xp[0] - X[0], Xp[1] - X[1]};
    if (v[0].is_zero() && v[1].is_zero())
        fail(Errc::segments_not_equal_parallel, "zero-length segment");
    std::array<RPoint, 6> pts = {X, Xp, segments[1].first, segments[1].second, segments[2].first,
                                 segments[2].second};
    for (int s = 1; s < 3; ++s) {
        RPoint w = {segments[s].second[0] - segments[s].first[0],
                    segments[s].second[1] - segments[s].first[1]};
        if (w[0] != v[0] || w[1] != v[1])
            fail(Errc::segments_not_equal_parallel, "segments are not equal and parallel");
    }
    auto hull_of_others = [&](int skip) {
        std::vector<RPoint> others;
        for (int i = 0; i < 6; ++i)
            if (i != skip) others.push_back(pts[i]);
        return convex_hull_2d(others);
    };
    // Transverse heights separate the three parallel lines; two segments on
    // one line is the degenerate case settled by direct search.
    Rational h[3];
    for (int s = 0; s < 3; ++s) {
        const RPoint& p = s == 0 ? X : segments[s].first;
        h[s] = v[0] * p[1] - v[1] * p[0];
    }
    if (h[0] == h[1] || h[0] == h[2] || h[1] == h[2]) {
        for (int i = 0; i < 6; ++i)
            if (point_in_hull(hull_of_others(i), pts[i], HullMode::closed) == Containment::in)
                return i;
        fail(Errc::internal, "no witness in degenerate parallel-segment configuration");
    }
    int order[3] = {0, 1, 2};
    std::sort(order, order + 3, [&](int a, int b) { return h[a] < h[b]; });
    int bottom = order[0], middle = order[1], top = order[2];
    // Normalize: Bottom -> (0,0), Bottom' -> (1,0), Middle -> (0,1); then the
    // top segment sits at height > 1 and the witness is Middle' when the top
    // start is right of the middle start, else Middle.
    const RPoint &Bp0 = segments[bottom].first, &Bp1 = segments[bottom].second;
    const RPoint& Mp0 = segments[middle].first;
    Mat<Rational> m(2, 2);
    m(0, 0) = Bp1[0] - Bp0[0];
    m(1, 0) = Bp1[1] - Bp0[1];
    m(0, 1) = Mp0[0] - Bp0[0];
    m(1, 1) = Mp0[1] - Bp0[1];
    Mat<Rational> inv = inverse(m);
    RPoint t = {segments[top].first[0] - Bp0[0], segments[top].first[1] - Bp0[1]};
    RPoint z = inv.mul_vec(t);
    bool prime = z[0].sign() == Sign::positive;
    return 2 * middle + (prime ? 1 : 0);
}

}  // namespace helly
