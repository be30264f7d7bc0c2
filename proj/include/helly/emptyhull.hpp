#pragma once

// Finding and verifying maximal empty convex polygons/polytopes with
// vertices in a crystal or model set. Verification always runs over the full
// exact (or certified) scalar backend; the planar search additionally has a
// fast path over scaled 64-bit coordinates when the patch permits it.

#include "helly/concurrency.hpp"
#include "helly/pointsets.hpp"

#include <array>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>

namespace helly {

enum class CertStatus { verified, refuted, uncertain };

inline const char* cert_status_name(CertStatus s) {
    switch (s) {
        case CertStatus::verified: return "VERIFIED";
        case CertStatus::refuted: return "REFUTED";
        default: return "UNCERTAIN";
    }
}

struct VertexProvenance {
    int coset = -1;
    std::vector<long> preimage;
};

template <typename S>
struct EmptyHullCertificate {
    std::string source_id;
    std::vector<Point<S>> vertices;
    std::vector<VertexProvenance> provenance;
    CertStatus status = CertStatus::uncertain;
    std::vector<Point<S>> witnesses;  // violating points when refuted
    std::string note;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
};

template <typename S>
struct FacetCertificate {
    std::string source_id;
    VPolytope<S> polytope;
    std::vector<Point<S>> facet_points;  // one per facet, facet i = edge (v_i, v_{i+1})
    CertStatus status = CertStatus::uncertain;
    std::vector<Point<S>> witnesses;
    std::string note;
};

// ---------------------------------------------------------------------------
// Membership of a point in the generating set

template <typename S>
Patch<S> enumerate_box(const Crystal<S>& c, const Box<S>& b, const std::string& id = "crystal") {
    return crystal_points_in_box(c, b, id);
}
template <typename S>
Patch<S> enumerate_box(const Scheme<S>& s, const Box<S>& b, const std::string& id = "scheme") {
    return model_points_in_box(s, b, id);
}

template <typename S>
std::optional<VertexProvenance> set_membership(const Crystal<S>& c, const Point<S>& v) {
    for (int ci = 0; ci < c.copies(); ++ci) {
        Point<S> diff(v.size());
        for (size_t i = 0; i < v.size(); ++i) diff[i] = v[i] - c.translates[ci][i];
        Point<S> z = c.lattice.basis_inv.mul_vec(diff);
        bool integral = true;
        std::vector<long> zi(z.size());
        for (size_t i = 0; i < z.size() && integral; ++i) {
            mpz_class f = floor_of(z[i]);
            S rem = z[i] - scalar_from_rational<S>(Rational(f, mpz_class(1)));
            if (sgn_of(rem) != Sign::zero)
                integral = false;
            else
                zi[i] = f.get_si();
        }
        if (integral) return VertexProvenance{ci, zi};
    }
    return std::nullopt;
}

template <typename S>
std::optional<VertexProvenance> set_membership(const Scheme<S>& s, const Point<S>& v) {
    static_assert(scalar_traits<S>::exact,
                  "raw-coordinate scheme membership needs an exact backend");
    Box<S> tiny{v, v};
    Patch<S> p = model_points_in_box(s, tiny);
    for (const auto& pp : p.points)
        if (points_equal(pp.pos, v)) return VertexProvenance{-1, pp.preimage};
    return std::nullopt;
}

namespace detail {

template <typename S>
VertexProvenance resolve_vertex(const Crystal<S>& src, const Point<S>& v,
                                const VertexProvenance* hint) {
    if (hint && hint->coset >= 0 &&
        hint->coset < src.copies() &&
        hint->preimage.size() == v.size()) {
        Point<S> p = src.lattice.point_at(hint->preimage);
        bool match = true;
        for (size_t i = 0; i < p.size(); ++i) {
            p[i] = p[i] + src.translates[hint->coset][i];
            if (sgn_of(p[i] - v[i]) != Sign::zero) match = false;
        }
        if (match) return *hint;
    }
    auto m = set_membership(src, v);
    if (!m) fail(Errc::vertex_not_in_set, "certificate vertex is not a point of the crystal");
    return *m;
}

template <typename S>
VertexProvenance resolve_vertex(const Scheme<S>& src, const Point<S>& v,
                                const VertexProvenance* hint) {
    if (hint && static_cast<int>(hint->preimage.size()) == src.n()) {
        // Recompute the physical point and window membership from the preimage.
        Point<S> x = src.ambient.point_at(hint->preimage);
        Point<S> phys = src.pi1.mul_vec(x);
        Point<S> internal = src.pi2.mul_vec(x);
        for (const auto& h : src.window.halfspaces) {
            S val = h.offset;
            for (size_t i = 0; i < internal.size(); ++i) val = val - h.normal[i] * internal[i];
            Sign s = sgn_of(val);
            if (s == Sign::negative)
                fail(Errc::vertex_not_in_set, "vertex preimage falls outside the window");
            if (s == Sign::uncertain)
                fail(Errc::uncertain_verdict, "window membership of a vertex is uncertain");
        }
        for (size_t i = 0; i < phys.size(); ++i) {
            Sign s = sgn_of(phys[i] - v[i]);
            if (s == Sign::positive || s == Sign::negative)
                fail(Errc::vertex_not_in_set, "vertex does not match its preimage");
        }
        return *hint;
    }
    if constexpr (scalar_traits<S>::exact) {
        auto m = set_membership(src, v);
        if (!m) fail(Errc::vertex_not_in_set, "certificate vertex is not a point of the model set");
        return *m;
    } else {
        fail(Errc::uncertain_verdict,
             "certified-float scheme vertices need preimage provenance to verify");
    }
}

inline bool same_provenance(const VertexProvenance& a, const VertexProvenance& b) {
    return a.coset == b.coset && a.preimage == b.preimage;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// is_empty_hull: vertex-form certificate check. The closed hull of the given
// vertices must contain no other point of the set. Provenance, when supplied,
// pins each vertex to its lattice preimage so certified-float sources verify
// without exact coordinate equality.

template <typename S, typename Src>
EmptyHullCertificate<S> is_empty_hull(const Src& src, const std::vector<Point<S>>& vertices,
                                      const std::vector<VertexProvenance>* provenance = nullptr,
                                      const std::string& source_id = "") {
    EmptyHullCertificate<S> cert;
    cert.source_id = source_id;
    cert.vertices = vertices;
    if (vertices.empty()) fail(Errc::not_convex_position, "no vertices");
    const size_t d = vertices[0].size();
    if (vertices.size() < d + 1)
        fail(Errc::not_convex_position, "fewer vertices than dimension + 1");

    bool unsure = false;
    try {
        for (size_t i = 0; i < vertices.size(); ++i) {
            const VertexProvenance* hint =
                provenance && i < provenance->size() ? &(*provenance)[i] : nullptr;
            cert.provenance.push_back(detail::resolve_vertex(src, vertices[i], hint));
        }

        VPolytope<S> hull;
        if (d == 2) {
            // Certificates arrive in cyclic order; certify convex position on
            // that order directly so exact coordinate ties never force a sort.
            auto cyclic = cyclic_convex_polygon(vertices);
            if (cyclic) {
                hull = std::move(*cyclic);
            } else {
                hull = convex_hull_2d(vertices);
                if (hull.dim != 2 || hull.vertices.size() != vertices.size())
                    fail(Errc::not_convex_position,
                         "vertices are not in strictly convex position");
            }
        } else {
            hull.vertices = vertices;
            hull.dim = detail::affine_rank(vertices);
            if (hull.dim != static_cast<int>(d))
                fail(Errc::not_convex_position, "vertex set is not full-dimensional");
            for (size_t i = 0; i < vertices.size(); ++i) {
                std::vector<Point<S>> others;
                for (size_t j = 0; j < vertices.size(); ++j)
                    if (j != i) others.push_back(vertices[j]);
                VPolytope<S> rest{std::move(others), static_cast<int>(d)};
                Containment c = point_in_hull(rest, vertices[i], HullMode::closed);
                if (c == Containment::in)
                    fail(Errc::not_convex_position, "a listed vertex is not extreme");
                if (c == Containment::uncertain) unsure = true;
            }
        }

        // Every set point in the hull's bounding box, other than the listed
        // vertices, must sit outside the closed hull.
        Box<S> bb = bounding_box(vertices);
        Patch<S> patch = enumerate_box(src, bb);
        auto consider = [&](const PatchPoint<S>& pp, bool membership_uncertain) {
            for (size_t i = 0; i < cert.provenance.size(); ++i) {
                if (detail::same_provenance(cert.provenance[i],
                                            VertexProvenance{pp.coset, pp.preimage}))
                    return;
                if constexpr (scalar_traits<S>::exact) {
                    if (points_equal(vertices[i], pp.pos)) return;
                }
            }
            Containment c = point_in_hull(hull, pp.pos, HullMode::closed);
            if (c == Containment::in) {
                if (membership_uncertain)
                    unsure = true;  // a maybe-point of the set inside the hull
                else
                    cert.witnesses.push_back(pp.pos);
            } else if (c == Containment::uncertain) {
                unsure = true;
            }
        };
        for (const auto& pp : patch.points) consider(pp, false);
        for (const auto& pp : patch.uncertain) consider(pp, true);
    } catch (const Error& e) {
        if (e.code() == Errc::uncertain_predicate || e.code() == Errc::uncertain_verdict) {
            cert.status = CertStatus::uncertain;
            cert.note = e.what();
            return cert;
        }
        throw;
    }

    if (!cert.witnesses.empty())
        cert.status = CertStatus::refuted;
    else if (unsure)
        cert.status = CertStatus::uncertain;
    else
        cert.status = CertStatus::verified;
    return cert;
}

// ---------------------------------------------------------------------------
// Facet-form certificate: each facet of the polygon holds exactly one set
// point in its relative interior and the closed polygon holds no other set
// point. Vertices of the polygon need not belong to the set.

template <typename S, typename Src>
FacetCertificate<S> verify_facet_certificate(const Src& src, const VPolytope<S>& polytope,
                                             const std::vector<Point<S>>& facet_points,
                                             const std::string& source_id = "") {
    FacetCertificate<S> cert;
    cert.source_id = source_id;
    cert.polytope = polytope;
    cert.facet_points = facet_points;
    if (polytope.dim != 2 || polytope.vertices.empty() || polytope.vertices[0].size() != 2)
        fail(Errc::dimension_mismatch, "facet certificates are supported for 2D polygons");
    size_t n = polytope.vertices.size();
    if (facet_points.size() != n) {
        cert.status = CertStatus::refuted;
        cert.note = "facet assignment is not exhaustive";
        return cert;
    }
    bool unsure = false;
    for (size_t i = 0; i < n; ++i) {
        if (!set_membership(src, facet_points[i])) {
            cert.status = CertStatus::refuted;
            cert.note = "assigned facet point is not a set point";
            cert.witnesses.push_back(facet_points[i]);
            return cert;
        }
        if (!relative_interior_of_facet_contains(polytope, i, facet_points[i])) {
            cert.status = CertStatus::refuted;
            cert.note = "assigned point is not in the relative interior of its facet";
            cert.witnesses.push_back(facet_points[i]);
            return cert;
        }
    }
    Box<S> bb = bounding_box(polytope.vertices);
    Patch<S> patch = enumerate_box(src, bb);
    for (const auto& pp : patch.points) {
        Containment c = point_in_hull(polytope, pp.pos, HullMode::closed);
        if (c == Containment::uncertain) {
            unsure = true;
            continue;
        }
        if (c != Containment::in) continue;
        bool assigned = false;
        for (const auto& fp : facet_points)
            if (points_equal(fp, pp.pos)) assigned = true;
        if (!assigned) {
            cert.status = CertStatus::refuted;
            cert.note = "polygon contains an unassigned set point";
            cert.witnesses.push_back(pp.pos);
            return cert;
        }
    }
    cert.status = unsure ? CertStatus::uncertain : CertStatus::verified;
    return cert;
}

// ---------------------------------------------------------------------------
// Search geometry over deduplicated patch positions. Predicates returning
// "uncertain" count as failures and taint the search result, never the
// certificate: every search winner is re-verified through is_empty_hull.

namespace detail {

struct IQ {
    std::int64_t a = 0, b = 0;  // a + b sqrt(D)
};

inline Sign iq_sign(const IQ& v, long d) {
    if (v.b == 0) return v.a > 0 ? Sign::positive : (v.a < 0 ? Sign::negative : Sign::zero);
    if (v.a == 0) return v.b > 0 ? Sign::positive : Sign::negative;
    if ((v.a > 0) == (v.b > 0)) return v.a > 0 ? Sign::positive : Sign::negative;
    __int128 lhs = static_cast<__int128>(v.a) * v.a;
    __int128 rhs = static_cast<__int128>(d) * v.b * v.b;
    if (lhs == rhs) return Sign::zero;  // unreachable for square-free d >= 2
    return lhs > rhs ? (v.a > 0 ? Sign::positive : Sign::negative)
                     : (v.b > 0 ? Sign::positive : Sign::negative);
}

struct ScaledGeo {
    long d = 0;  // shared radicand, 0 when purely rational
    std::vector<std::array<IQ, 2>> pts;
    mutable bool tainted = false;

    static IQ sub(const IQ& x, const IQ& y) { return IQ{x.a - y.a, x.b - y.b}; }
    IQ mul(const IQ& x, const IQ& y) const {
        return IQ{x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    int size() const { return static_cast<int>(pts.size()); }
    Sign cross_of_diffs(int au, int av, int bu, int bv) const {
        IQ ux = sub(pts[av][0], pts[au][0]), uy = sub(pts[av][1], pts[au][1]);
        IQ vx = sub(pts[bv][0], pts[bu][0]), vy = sub(pts[bv][1], pts[bu][1]);
        IQ m1 = mul(ux, vy), m2 = mul(uy, vx);
        return iq_sign(IQ{m1.a - m2.a, m1.b - m2.b}, d);
    }
    Sign orient(int i, int j, int k) const { return cross_of_diffs(i, j, i, k); }
    Sign coord_cmp(int i, int j, int axis) const {
        return iq_sign(sub(pts[i][axis], pts[j][axis]), d);
    }
    Sign dist_cmp(int a, int i, int j) const {
        IQ dix = sub(pts[i][0], pts[a][0]), diy = sub(pts[i][1], pts[a][1]);
        IQ djx = sub(pts[j][0], pts[a][0]), djy = sub(pts[j][1], pts[a][1]);
        IQ qi = IQ{mul(dix, dix).a + mul(diy, diy).a, mul(dix, dix).b + mul(diy, diy).b};
        IQ qj = IQ{mul(djx, djx).a + mul(djy, djy).a, mul(djx, djx).b + mul(djy, djy).b};
        return iq_sign(sub(qi, qj), d);
    }
};

template <typename S>
struct PlainGeo {
    std::vector<std::array<S, 2>> pts;
    mutable bool tainted = false;

    int size() const { return static_cast<int>(pts.size()); }
    Sign guard(Sign s) const {
        if (s == Sign::uncertain) tainted = true;
        return s;
    }
    Sign cross_of_diffs(int au, int av, int bu, int bv) const {
        S c = (pts[av][0] - pts[au][0]) * (pts[bv][1] - pts[bu][1]) -
              (pts[av][1] - pts[au][1]) * (pts[bv][0] - pts[bu][0]);
        return guard(sgn_of(c));
    }
    Sign orient(int i, int j, int k) const { return cross_of_diffs(i, j, i, k); }
    Sign coord_cmp(int i, int j, int axis) const { return guard(sgn_of(pts[i][axis] - pts[j][axis])); }
    Sign dist_cmp(int a, int i, int j) const {
        auto sq = [&](int t) {
            S dx = pts[t][0] - pts[a][0], dy = pts[t][1] - pts[a][1];
            return dx * dx + dy * dy;
        };
        return guard(sgn_of(sq(i) - sq(j)));
    }
};

// (y, x) vertex order: "lowest then leftmost".
template <typename Geo>
bool yx_less(const Geo& g, int i, int j) {
    Sign s = g.coord_cmp(i, j, 1);
    if (s == Sign::negative) return true;
    if (s == Sign::positive) return false;
    return g.coord_cmp(i, j, 0) == Sign::negative;
}

template <typename S>
struct SearchInput {
    std::vector<Point<S>> positions;            // unique, sorted by (x, y)
    std::vector<VertexProvenance> provenances;  // first provenance per position
    std::vector<char> candidate;                // inside the shrunk region
    bool has_uncertain_blockers = false;
};

template <typename S>
SearchInput<S> collect_search_input(const Patch<S>& patch, const Box<S>& candidate_region) {
    struct Row {
        const PatchPoint<S>* pp;
        bool candidate_ok;
    };
    std::vector<Row> rows;
    for (const auto& pp : patch.points) rows.push_back({&pp, true});
    for (const auto& pp : patch.uncertain) rows.push_back({&pp, false});  // blockers only
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        for (int axis = 0; axis < 2; ++axis) {
            Sign s = sgn_of(a.pp->pos[axis] - b.pp->pos[axis]);
            if (s == Sign::negative) return true;
            if (s == Sign::positive) return false;
        }
        return false;
    });
    SearchInput<S> out;
    out.has_uncertain_blockers = !patch.uncertain.empty();
    for (const Row& r : rows) {
        if (!out.positions.empty() && points_equal(out.positions.back(), r.pp->pos)) continue;
        bool cand = r.candidate_ok;
        if (cand) {
            for (size_t i = 0; i < r.pp->pos.size() && cand; ++i) {
                if (sgn_of(r.pp->pos[i] - candidate_region.lo[i]) == Sign::negative) cand = false;
                if (sgn_of(candidate_region.hi[i] - r.pp->pos[i]) == Sign::negative) cand = false;
            }
        }
        out.positions.push_back(r.pp->pos);
        out.provenances.push_back(VertexProvenance{r.pp->coset, r.pp->preimage});
        out.candidate.push_back(cand ? 1 : 0);
    }
    return out;
}

constexpr std::int64_t kScaledCoordBound = 1L << 20;
constexpr long kScaledRadicandBound = 64;

inline std::optional<ScaledGeo> build_scaled_geo(const std::vector<Point<Rational>>& positions) {
    ScaledGeo g;
    mpz_class lcm_den(1);
    for (const auto& p : positions)
        for (const auto& c : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                                        c.denominator().get_mpz_t());
    if (lcm_den > 1 << 16) return std::nullopt;
    for (const auto& p : positions) {
        std::array<IQ, 2> q;
        for (int axis = 0; axis < 2; ++axis) {
            mpz_class v = p[axis].numerator() * (lcm_den / p[axis].denominator());
            if (!mpz_fits_slong_p(v.get_mpz_t())) return std::nullopt;
            long vv = v.get_si();
            if (vv > kScaledCoordBound || vv < -kScaledCoordBound) return std::nullopt;
            q[axis] = IQ{vv, 0};
        }
        g.pts.push_back(q);
    }
    return g;
}

inline std::optional<ScaledGeo> build_scaled_geo(const std::vector<Point<QuadScalar>>& positions) {
    ScaledGeo g;
    mpz_class lcm_den(1);
    for (const auto& p : positions)
        for (const auto& c : p) {
            if (c.radicand() != 0) {
                if (g.d == 0) g.d = c.radicand();
                if (g.d != c.radicand()) return std::nullopt;
            }
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                    c.rational_part().denominator().get_mpz_t());
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                    c.radical_coeff().denominator().get_mpz_t());
        }
    if (g.d > kScaledRadicandBound || lcm_den > 1 << 16) return std::nullopt;
    if (g.d == 0) g.d = 2;  // irrelevant when every b is 0
    for (const auto& p : positions) {
        std::array<IQ, 2> q;
        for (int axis = 0; axis < 2; ++axis) {
            const Rational& a = p[axis].rational_part();
            const Rational& b = p[axis].radical_coeff();
            mpz_class va = a.numerator() * (lcm_den / a.denominator());
            mpz_class vb = b.numerator() * (lcm_den / b.denominator());
            if (!mpz_fits_slong_p(va.get_mpz_t()) || !mpz_fits_slong_p(vb.get_mpz_t()))
                return std::nullopt;
            long la = va.get_si(), lb = vb.get_si();
            if (la > kScaledCoordBound || la < -kScaledCoordBound || lb > kScaledCoordBound ||
                lb < -kScaledCoordBound)
                return std::nullopt;
            q[axis] = IQ{la, lb};
        }
        g.pts.push_back(q);
    }
    return g;
}

inline std::optional<ScaledGeo> build_scaled_geo(const std::vector<Point<CertFloat>>&) {
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Per-anchor largest empty convex chain DP. Chain vertices rotate CCW around
// the anchor (its yx-lowest polygon vertex); a chain edge is valid when its
// fan triangle with the anchor contains no patch point; longest chains are
// combined with an angular sliding-window maximum over predecessor edges.

template <typename Geo>
class AnchorEngine {
public:
    AnchorEngine(const Geo& geo, const std::vector<char>& candidate, int anchor)
        : g_(geo), anchor_(anchor) {
        if (!candidate[anchor]) return;
        int n = g_.size();
        for (int i = 0; i < n; ++i)
            if (i != anchor_ && yx_less(g_, anchor_, i)) pts_.push_back(i);
        std::sort(pts_.begin(), pts_.end(), [&](int i, int j) {
            Sign s = g_.orient(anchor_, i, j);
            if (s == Sign::positive) return true;
            if (s == Sign::negative) return false;
            return g_.dist_cmp(anchor_, i, j) == Sign::negative;  // same ray: nearer first
        });
        usable_.assign(pts_.size(), 0);
        for (size_t t = 0; t < pts_.size(); ++t) {
            bool nearest = t == 0 || g_.orient(anchor_, pts_[t - 1], pts_[t]) != Sign::zero;
            usable_[t] = (nearest && candidate[pts_[t]]) ? 1 : 0;
        }
        build_edges();
        run_forward();
    }

    int best_count() const { return best_; }

    // Lexicographically smallest maximizer (in (y, x) vertex order) among
    // polygons anchored here with exactly target vertices; indices are into
    // the global geometry.
    std::vector<int> reconstruct(int target) {
        run_suffix();
        int first = -1;
        for (size_t ei = 0; ei < edges_.size(); ++ei) {
            const Edge& e = edges_[ei];
            if (e.suf < 0 || 3 + e.suf != target) continue;
            if (first < 0 || edge_vertex_less(edges_[ei], edges_[first])) first = static_cast<int>(ei);
        }
        if (first < 0) return {};
        std::vector<int> chain = {anchor_, pts_[edges_[first].u], pts_[edges_[first].v]};
        int cur = first, count = 3;
        while (count < target) {
            int next = -1;
            for (int fi : out_adj_[edges_[cur].v]) {
                const Edge& f = edges_[fi];
                if (f.suf < 0 || count + 1 + f.suf != target) continue;
                if (g_.cross_of_diffs(pts_[edges_[cur].u], pts_[edges_[cur].v], pts_[f.u],
                                      pts_[f.v]) != Sign::positive)
                    continue;
                if (next < 0 || yx_less(g_, pts_[f.v], pts_[edges_[next].v])) next = fi;
            }
            if (next < 0) return {};  // inconsistent tables; caller treats as failure
            chain.push_back(pts_[edges_[next].v]);
            cur = next;
            ++count;
        }
        if (!edges_[cur].closable) return {};
        return chain;
    }

private:
    struct Edge {
        int u, v;      // indices into pts_
        int fwd = 3;   // vertex count of the longest chain ending here
        int suf = -1;  // vertices addable after this edge; >= 0 iff completable
        bool closable = false;
    };

    bool edge_vertex_less(const Edge& a, const Edge& b) const {
        if (a.u != b.u) return yx_less(g_, pts_[a.u], pts_[b.u]);
        if (a.v != b.v) return yx_less(g_, pts_[a.v], pts_[b.v]);
        return false;
    }

    bool triangle_empty(int tu, int tv) const {
        for (int t = tu + 1; t < tv; ++t) {
            int q = pts_[t];
            if (g_.orient(anchor_, pts_[tu], q) == Sign::negative) continue;
            if (g_.orient(pts_[tv], anchor_, q) == Sign::negative) continue;
            if (g_.orient(pts_[tu], pts_[tv], q) != Sign::negative) return false;
        }
        return true;
    }

    void build_edges() {
        int m = static_cast<int>(pts_.size());
        out_adj_.assign(m, {});
        for (int u = 0; u < m; ++u) {
            if (!usable_[u]) continue;
            for (int v = u + 1; v < m; ++v) {
                if (!usable_[v]) continue;
                if (g_.orient(anchor_, pts_[u], pts_[v]) != Sign::positive) continue;
                if (!triangle_empty(u, v)) continue;
                Edge e;
                e.u = u;
                e.v = v;
                e.closable = g_.orient(pts_[u], pts_[v], anchor_) == Sign::positive;
                out_adj_[u].push_back(static_cast<int>(edges_.size()));
                edges_.push_back(e);
            }
        }
        order_.resize(edges_.size());
        for (size_t i = 0; i < order_.size(); ++i) order_[i] = static_cast<int>(i);
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            int c = dir_compare(edges_[a], edges_[b]);
            if (c != 0) return c < 0;
            return a < b;
        });
    }

    // Direction order of edge vectors over [0, 2pi); 0 means equal direction.
    int dir_compare(const Edge& a, const Edge& b) const {
        int ha = dir_half(a), hb = dir_half(b);
        if (ha != hb) return ha < hb ? -1 : 1;
        Sign s = g_.cross_of_diffs(pts_[a.u], pts_[a.v], pts_[b.u], pts_[b.v]);
        if (s == Sign::positive) return -1;
        if (s == Sign::negative) return 1;
        return 0;
    }
    int dir_half(const Edge& e) const {
        Sign sy = g_.coord_cmp(pts_[e.v], pts_[e.u], 1);
        if (sy == Sign::positive) return 0;
        if (sy == Sign::negative) return 1;
        return g_.coord_cmp(pts_[e.v], pts_[e.u], 0) == Sign::positive ? 0 : 1;
    }
    Sign edge_cross(int a, int b) const {
        return g_.cross_of_diffs(pts_[edges_[a].u], pts_[edges_[a].v], pts_[edges_[b].u],
                                 pts_[edges_[b].v]);
    }

    // Process edges in direction order; for each edge the admissible
    // predecessors form an angular window maintained as a max-deque per node.
    void run_forward() {
        best_ = 0;
        if (edges_.empty()) return;
        struct Entry {
            int edge;
            int value;
        };
        std::vector<std::deque<Entry>> incoming(pts_.size());
        size_t gi = 0;
        while (gi < order_.size()) {
            size_t gj = gi;
            while (gj + 1 < order_.size() &&
                   dir_compare(edges_[order_[gj + 1]], edges_[order_[gi]]) == 0)
                ++gj;
            for (size_t t = gi; t <= gj; ++t) {
                Edge& e = edges_[order_[t]];
                auto& dq = incoming[e.u];
                while (!dq.empty() && edge_cross(dq.front().edge, order_[t]) != Sign::positive)
                    dq.pop_front();
                if (!dq.empty()) e.fwd = std::max(e.fwd, 1 + dq.front().value);
            }
            for (size_t t = gi; t <= gj; ++t) {
                const Edge& e = edges_[order_[t]];
                auto& dq = incoming[e.v];
                while (!dq.empty() && dq.back().value <= e.fwd) dq.pop_back();
                dq.push_back(Entry{static_cast<int>(order_[t]), e.fwd});
            }
            gi = gj + 1;
        }
        for (const Edge& e : edges_)
            if (e.closable) best_ = std::max(best_, e.fwd);
    }

    void run_suffix() {
        for (Edge& e : edges_) e.suf = e.closable ? 0 : -1;
        if (edges_.empty()) return;
        struct Entry {
            int edge;
            int value;
        };
        std::vector<std::deque<Entry>> outgoing(pts_.size());
        size_t gi = order_.size();
        while (gi > 0) {
            size_t gj = gi;  // group is [gk, gj)
            size_t gk = gj - 1;
            while (gk > 0 && dir_compare(edges_[order_[gk - 1]], edges_[order_[gj - 1]]) == 0)
                --gk;
            for (size_t t = gk; t < gj; ++t) {
                Edge& e = edges_[order_[t]];
                auto& dq = outgoing[e.v];
                while (!dq.empty() && edge_cross(order_[t], dq.front().edge) != Sign::positive)
                    dq.pop_front();
                if (!dq.empty()) e.suf = std::max(e.suf, 1 + dq.front().value);
            }
            for (size_t t = gk; t < gj; ++t) {
                const Edge& e = edges_[order_[t]];
                if (e.suf < 0) continue;
                auto& dq = outgoing[e.u];
                while (!dq.empty() && dq.back().value <= e.suf) dq.pop_back();
                dq.push_back(Entry{static_cast<int>(order_[t]), e.suf});
            }
            gi = gk;
        }
    }

    const Geo& g_;
    int anchor_;
    std::vector<int> pts_;
    std::vector<char> usable_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_adj_;
    std::vector<int> order_;
    int best_ = 0;
};

struct DpRun {
    int count = 0;
    std::vector<int> vertex_indices;  // winning polygon, anchor first
    bool tainted = false;
};

template <typename Geo>
DpRun run_dp(const Geo& geo, const std::vector<char>& candidate, int threads) {
    DpRun out;
    int n = geo.size();
    std::vector<int> anchors;
    for (int i = 0; i < n; ++i)
        if (candidate[i]) anchors.push_back(i);
    std::sort(anchors.begin(), anchors.end(), [&](int a, int b) { return yx_less(geo, a, b); });
    std::vector<int> counts(anchors.size(), 0);
    parallel_for(anchors.size(), threads, [&](size_t idx) {
        AnchorEngine<Geo> eng(geo, candidate, anchors[idx]);
        counts[idx] = eng.best_count();
    });
    int best = 0;
    size_t win = anchors.size();
    for (size_t i = 0; i < anchors.size(); ++i)
        if (counts[i] > best) {
            best = counts[i];
            win = i;
        }
    out.tainted = geo.tainted;
    if (best < 3) return out;
    out.count = best;
    AnchorEngine<Geo> eng(geo, candidate, anchors[win]);
    out.vertex_indices = eng.reconstruct(best);
    out.tainted = geo.tainted;
    return out;
}

// Brute-force oracle: enumerate candidate subsets (as bitmasks), keep those
// in strictly convex position whose hull excludes every other patch point.
template <typename Geo>
DpRun run_oracle(const Geo& geo, const std::vector<char>& candidate, int max_vertices) {
    DpRun out;
    int n = geo.size();
    if (n > 22) fail(Errc::patch_too_large, "brute-force oracle supports at most 22 points");
    std::uint32_t usable = 0;
    for (int i = 0; i < n; ++i)
        if (candidate[i]) usable |= 1u << i;
    int best = 2;
    std::vector<int> best_hull;
    std::vector<int> idx, hull;
    for (std::uint32_t mask = usable; mask; mask = (mask - 1) & usable) {
        int m = __builtin_popcount(mask);
        if (m <= best || m < 3 || m > max_vertices) continue;
        idx.clear();
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);  // ascending = (x, y) order
        // monotone chain over the subset
        hull.clear();
        size_t lower = 0;
        auto push = [&](int p) {
            while (hull.size() >= lower + 2 &&
                   geo.orient(hull[hull.size() - 2], hull[hull.size() - 1], p) != Sign::positive)
                hull.pop_back();
            hull.push_back(p);
        };
        for (int p : idx) push(p);
        lower = hull.size() - 1;
        for (size_t t = idx.size() - 1; t-- > 0;) push(idx[t]);
        hull.pop_back();
        if (static_cast<int>(hull.size()) != m) continue;
        bool blocked = false;
        for (int q = 0; q < n && !blocked; ++q) {
            if (mask & (1u << q)) continue;
            bool inside = true;
            for (size_t t = 0; t < hull.size() && inside; ++t)
                if (geo.orient(hull[t], hull[(t + 1) % hull.size()], q) == Sign::negative)
                    inside = false;
            if (inside) blocked = true;
        }
        if (blocked) continue;
        best = m;
        best_hull = hull;
    }
    out.tainted = geo.tainted;
    if (best < 3) return out;
    out.count = best;
    out.vertex_indices = best_hull;
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Search drivers

template <typename S>
struct SearchOutcome {
    EmptyHullCertificate<S> certificate;
    int max_vertices = 0;           // vertex count of the winner (0 = none found)
    bool search_uncertain = false;  // a predicate was uncertain during search
    std::string algorithm;
};

namespace detail {

template <typename S, typename Src>
SearchOutcome<S> finish_search(const Src& src, const SearchInput<S>& input, const DpRun& run,
                               const std::string& algorithm, const std::string& source_id) {
    SearchOutcome<S> out;
    out.algorithm = algorithm;
    out.search_uncertain = run.tainted || input.has_uncertain_blockers;
    out.max_vertices = run.count;
    out.certificate.source_id = source_id;
    if (run.count < 3) {
        out.certificate.status = CertStatus::verified;
        out.certificate.note = "no empty polygon with 3+ vertices in the search region";
        out.max_vertices = 0;
        return out;
    }
    if (run.vertex_indices.empty())
        fail(Errc::internal, "search reported a maximum but could not reconstruct a polygon");
    std::vector<Point<S>> verts;
    std::vector<VertexProvenance> provs;
    for (int i : run.vertex_indices) {
        verts.push_back(input.positions[i]);
        provs.push_back(input.provenances[i]);
    }
    out.certificate = is_empty_hull(src, verts, &provs, source_id);
    return out;
}

}  // namespace detail

// Avis-Rappaport style dynamic program per anchor over angularly sorted
// candidates. Candidates are restricted to the region shrunk by the margin,
// so the winning hull lies inside the saturated patch region and emptiness
// against the patch certifies emptiness against the full set; the result is
// a lower bound for the Helly number (upper bounds come from theorems).
template <typename S, typename Src>
SearchOutcome<S> largest_empty_polygon_dp(const Src& src, const Patch<S>& patch, const S& margin,
                                          int threads = 1) {
    Box<S> inner = patch.region.shrunk(margin);
    auto input = detail::collect_search_input(patch, inner);
    detail::DpRun run;
    if (auto scaled = detail::build_scaled_geo(input.positions)) {
        run = detail::run_dp(*scaled, input.candidate, threads);
    } else {
        detail::PlainGeo<S> plain;
        for (const auto& p : input.positions) plain.pts.push_back({p[0], p[1]});
        run = detail::run_dp(plain, input.candidate, threads);
    }
    return detail::finish_search(src, input, run, "dp", patch.source_id);
}

template <typename S, typename Src>
SearchOutcome<S> largest_empty_polygon_bruteforce(const Src& src, const Patch<S>& patch,
                                                  int max_vertices = 64) {
    auto input = detail::collect_search_input(patch, patch.region);
    detail::DpRun run;
    if (auto scaled = detail::build_scaled_geo(input.positions)) {
        run = detail::run_oracle(*scaled, input.candidate, max_vertices);
    } else {
        detail::PlainGeo<S> plain;
        for (const auto& p : input.positions) plain.pts.push_back({p[0], p[1]});
        run = detail::run_oracle(plain, input.candidate, max_vertices);
    }
    return detail::finish_search(src, input, run, "bruteforce", patch.source_id);
}

// Oracle comparison on a margin-restricted patch: both searches see the same
// candidate set and blockers.
template <typename S, typename Src>
bool dp_agrees_with_oracle(const Src& src, const Patch<S>& patch, const S& margin,
                           int threads = 1) {
    Box<S> inner = patch.region.shrunk(margin);
    auto input = detail::collect_search_input(patch, inner);
    detail::DpRun dp, oracle;
    if (auto scaled = detail::build_scaled_geo(input.positions)) {
        dp = detail::run_dp(*scaled, input.candidate, threads);
        oracle = detail::run_oracle(*scaled, input.candidate, 64);
    } else {
        detail::PlainGeo<S> plain;
        for (const auto& p : input.positions) plain.pts.push_back({p[0], p[1]});
        dp = detail::run_dp(plain, input.candidate, threads);
        oracle = detail::run_oracle(plain, input.candidate, 64);
    }
    (void)src;
    return dp.count == oracle.count;
}

}  // namespace helly
