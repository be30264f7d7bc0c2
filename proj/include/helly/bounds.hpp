#pragma once

// Helly-number bound calculators, the product-construction certificate lift,
// the two appendix lemmas as constructive operations, and the fractional
// Helly experiment harness.

#include "helly/emptyhull.hpp"

namespace helly {

struct BoundReport {
    std::string source_id;
    int lower = 0;  // max vertex count over verified certificates
    int upper = 0;
    std::string upper_provenance;  // doignon | union_k2d | cnp_2dk | twodim_table
    bool consistent = true;        // lower <= upper
};

// Sharp two-dimensional crystal table {1:4, 2:6, 3:7, 4:9, 5:10, k>=6: k+6};
// k 2^d for higher-dimensional crystals; 2^(d+k) for schemes.
int crystal_upper_bound(int d, int k, std::string& provenance);
int scheme_upper_bound(int d, int k, std::string& provenance);

template <typename S>
BoundReport upper_bound_report(const Crystal<S>& c, const std::string& source_id = "") {
    BoundReport r;
    r.source_id = source_id;
    r.upper = crystal_upper_bound(c.dim(), c.copies(), r.upper_provenance);
    return r;
}

template <typename S>
BoundReport upper_bound_report(const Scheme<S>& s, const std::string& source_id = "") {
    BoundReport r;
    r.source_id = source_id;
    r.upper = scheme_upper_bound(s.d, s.k, r.upper_provenance);
    return r;
}

// ---------------------------------------------------------------------------
// Product lift: a verified planar certificate over a 2D crystal times the
// unit cube in the extra coordinates gives a verified certificate over the
// lifted crystal, with m * 2^extra vertices.

struct ProductLift {
    Crystal<Rational> crystal;  // the (2 + extra)-dimensional crystal
    EmptyHullCertificate<Rational> certificate;
};

ProductLift product_certificate(const Crystal<Rational>& base,
                                const EmptyHullCertificate<Rational>& planar, int extra_dims);

// ---------------------------------------------------------------------------
// Appendix lemma: every strictly convex quadrilateral contains a
// parallelogram sharing at least three of its vertices.

struct ParallelogramResult {
    std::array<Point<Rational>, 4> parallelogram;  // cyclic order
    std::vector<int> shared;                       // indices into the input quad
};

ParallelogramResult find_parallelogram(const std::array<Point<Rational>, 4>& quad);

// Appendix lemma: three equal parallel segments XX', YY', ZZ'; one of the six
// endpoints lies in the closed hull of the other five. Points are indexed
// X=0, X'=1, Y=2, Y'=3, Z=4, Z'=5; returns the witness index.
int parallel_segments_witness(const std::array<std::pair<Point<Rational>, Point<Rational>>, 3>& segments);

// ---------------------------------------------------------------------------
// Fractional experiment and the direct Helly-property check

struct FractionalReport {
    int n = 0;
    long pierced_triples = 0;
    long total_triples = 0;
    Rational alpha{0};          // pierced fraction of (d+1)-tuples
    Rational beta_observed{0};  // deepest coverage / n
    long deep_cover = 0;
    Point<Rational> deep_point;
};

namespace detail {

template <typename Src>
std::optional<Point<Rational>> pierce_point(const Src& src,
                                            const std::vector<const VPolytope<Rational>*>& members) {
    if (members.empty()) return std::nullopt;
    VPolytope<Rational> inter = *members[0];
    for (size_t i = 1; i < members.size(); ++i) {
        if (inter.dim < 0 || inter.vertices.empty()) return std::nullopt;
        inter = polygon_intersection(inter, *members[i]);
    }
    if (inter.dim < 0 || inter.vertices.empty()) return std::nullopt;
    Box<Rational> bb = bounding_box(inter.vertices);
    Patch<Rational> patch = enumerate_box(src, bb);
    for (const auto& pp : patch.points)
        if (point_in_hull(inter, pp.pos, HullMode::closed) == Containment::in) return pp.pos;
    return std::nullopt;
}

}  // namespace detail

template <typename Src>
FractionalReport fractional_experiment(const Src& src,
                                       const std::vector<VPolytope<Rational>>& family,
                                       int threads = 1) {
    if (family.size() > 60) fail(Errc::family_too_large, "fractional harness caps families at 60");
    if (family.size() < 3) fail(Errc::invalid_config, "need at least three family members");
    FractionalReport rep;
    rep.n = static_cast<int>(family.size());
    int n = rep.n;
    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) triples.push_back({i, j, k});
    std::vector<char> pierced(triples.size(), 0);
    parallel_for(triples.size(), threads, [&](size_t t) {
        std::vector<const VPolytope<Rational>*> trio = {
            &family[triples[t][0]], &family[triples[t][1]], &family[triples[t][2]]};
        pierced[t] = detail::pierce_point(src, trio) ? 1 : 0;
    });
    rep.total_triples = static_cast<long>(triples.size());
    for (char p : pierced) rep.pierced_triples += p;
    rep.alpha = Rational(rep.pierced_triples, std::max(1L, rep.total_triples));
    // Deepest set point over the union bounding box; deterministic reduction
    // (max count, ties to the lexicographically first point).
    std::vector<Point<Rational>> all;
    for (const auto& f : family)
        for (const auto& v : f.vertices) all.push_back(v);
    Box<Rational> bb = bounding_box(all);
    Patch<Rational> patch = enumerate_box(src, bb);
    std::vector<long> cover(patch.points.size(), 0);
    parallel_for(patch.points.size(), threads, [&](size_t i) {
        for (const auto& f : family)
            if (point_in_hull(f, patch.points[i].pos, HullMode::closed) == Containment::in)
                ++cover[i];
    });
    for (size_t i = 0; i < patch.points.size(); ++i) {
        if (cover[i] > rep.deep_cover) {
            rep.deep_cover = cover[i];
            rep.deep_point = patch.points[i].pos;
        }
    }
    rep.beta_observed = Rational(rep.deep_cover, static_cast<long>(n));
    return rep;
}

// Definition-level check: if every h-subfamily meets at a set point, the
// whole family must meet at a set point. Returns true when the implication
// holds (conclusion true or hypothesis false); a false return over a proven
// bound h would falsify the theorem and is treated as a build-failing bug.
template <typename Src>
bool helly_direct_check(const Src& src, const std::vector<VPolytope<Rational>>& family, int h) {
    int n = static_cast<int>(family.size());
    if (n > 60) fail(Errc::family_too_large, "direct check caps families at 60");
    if (h < 1 || n < h) return true;  // quantifier ranges over h-subfamilies only
    std::vector<int> pick(h);
    for (int i = 0; i < h; ++i) pick[i] = i;
    for (;;) {
        std::vector<const VPolytope<Rational>*> sub;
        for (int i : pick) sub.push_back(&family[i]);
        if (!detail::pierce_point(src, sub)) return true;  // hypothesis fails
        int i = h - 1;
        while (i >= 0 && pick[i] == n - h + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < h; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::vector<const VPolytope<Rational>*> whole;
    for (const auto& f : family) whole.push_back(&f);
    return detail::pierce_point(src, whole).has_value();
}

}  // namespace helly
