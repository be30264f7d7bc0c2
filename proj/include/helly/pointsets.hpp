#pragma once

// Point-set constructors and saturated enumerators: lattices, k-crystals,
// cut-and-project schemes with convex polytope windows, and the preset
// catalog of worked examples.

#include "helly/geometry.hpp"

#include <string>
#include <variant>

namespace helly {

inline mpz_class floor_of(const Rational& x) { return x.floor(); }
inline mpz_class floor_of(const QuadScalar& x) { return x.floor(); }

template <typename S>
S scalar_from_rational(const Rational& x) {
    if constexpr (std::is_same_v<S, Rational>) return x;
    else if constexpr (std::is_same_v<S, QuadScalar>) return QuadScalar(x);
    else return CertFloat::from_rational(x);
}

Rational rational_lower_bound(const Rational& x);
Rational rational_upper_bound(const Rational& x);
Rational rational_lower_bound(const QuadScalar& x);
Rational rational_upper_bound(const QuadScalar& x);

template <typename S>
struct Lattice {
    Mat<S> basis;      // columns generate the lattice
    Mat<S> basis_inv;  // cached inverse

    int dim() const { return basis.rows(); }
    Point<S> point_at(const std::vector<long>& z) const {
        Point<S> p(z.size());
        for (size_t i = 0; i < z.size(); ++i) p[i] = S(z[i]);
        return basis.mul_vec(p);
    }
};

template <typename S>
Lattice<S> make_lattice(Mat<S> basis) {
    Lattice<S> l;
    l.basis_inv = inverse(basis);  // throws rank_deficient when singular
    l.basis = std::move(basis);
    return l;
}

template <typename S>
struct Crystal {
    using value_type = S;

    Lattice<S> lattice;
    std::vector<Point<S>> translates;  // reduced into the fundamental cell

    int dim() const { return lattice.dim(); }
    int copies() const { return static_cast<int>(translates.size()); }
};

// Reduce t into the fundamental cell: t - B * floor(B^-1 t).
template <typename S>
Point<S> reduce_mod_lattice(const Lattice<S>& L, const Point<S>& t) {
    Point<S> c = L.basis_inv.mul_vec(t);
    std::vector<long> fl(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        mpz_class f = floor_of(c[i]);
        if (!mpz_fits_slong_p(f.get_mpz_t())) fail(Errc::invalid_config, "translate out of range");
        fl[i] = f.get_si();
    }
    Point<S> shift = L.point_at(fl);
    Point<S> r(t.size());
    for (size_t i = 0; i < t.size(); ++i) r[i] = t[i] - shift[i];
    return r;
}

template <typename S>
bool lattice_equivalent(const Lattice<S>& L, const Point<S>& a, const Point<S>& b) {
    Point<S> d(a.size());
    for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    Point<S> c = L.basis_inv.mul_vec(d);
    for (const auto& v : c) {
        mpz_class f = floor_of(v);
        S rem = v - scalar_from_rational<S>(Rational(f, mpz_class(1)));
        if (sgn_of(rem) != Sign::zero) return false;
    }
    return true;
}

template <typename S>
Crystal<S> make_crystal(Mat<S> basis, std::vector<Point<S>> translates) {
    static_assert(scalar_traits<S>::exact, "crystals require an exact backend");
    Crystal<S> c;
    c.lattice = make_lattice(std::move(basis));
    if (translates.empty()) translates.push_back(Point<S>(c.lattice.dim(), S(0)));
    for (auto& t : translates) t = reduce_mod_lattice(c.lattice, t);
    for (size_t i = 0; i < translates.size(); ++i)
        for (size_t j = i + 1; j < translates.size(); ++j)
            if (lattice_equivalent(c.lattice, translates[i], translates[j]))
                fail(Errc::invalid_config, "crystal translates coincide modulo the lattice");
    c.translates = std::move(translates);
    return c;
}

template <typename S>
struct Scheme {
    using value_type = S;

    int d = 0, k = 0;
    Lattice<S> ambient;   // dimension d + k
    Mat<S> pi1;           // d x (d+k), physical projection
    Mat<S> pi2;           // k x (d+k), internal projection
    HPolytope<S> window;  // in R^k, convex, bounded, full-dimensional
    Mat<S> stacked_inv;   // inverse of [pi1; pi2]
    long injectivity_checked_radius = 0;
    bool injective_up_to_radius = true;

    int n() const { return d + k; }
};

template <typename S>
Scheme<S> make_scheme(int d, int k, Lattice<S> ambient, Mat<S> pi1, Mat<S> pi2,
                      HPolytope<S> window, long injectivity_radius = 2) {
    if (pi1.rows() != d || pi2.rows() != k || pi1.cols() != d + k || pi2.cols() != d + k ||
        ambient.dim() != d + k)
        fail(Errc::dimension_mismatch, "scheme projection shapes inconsistent");
    Scheme<S> s;
    Mat<S> stacked(d + k, d + k);
    for (int j = 0; j < d + k; ++j) {
        for (int i = 0; i < d; ++i) stacked(i, j) = pi1(i, j);
        for (int i = 0; i < k; ++i) stacked(d + i, j) = pi2(i, j);
    }
    s.stacked_inv = inverse(stacked);  // throws when the projections do not decompose R^n
    s.d = d;
    s.k = k;
    s.ambient = std::move(ambient);
    s.pi1 = std::move(pi1);
    s.pi2 = std::move(pi2);
    s.window = std::move(window);
    // Bounded injectivity certificate: no nonzero lattice vector with
    // coefficients in [-R, R]^n lies in ker(pi1). Recorded, not enforced;
    // rational-slope slabs legitimately fail it and still enumerate fine.
    s.injectivity_checked_radius = injectivity_radius;
    s.injective_up_to_radius = true;
    int n = d + k;
    std::vector<long> lo(n, -injectivity_radius), hi(n, injectivity_radius);
    detail::for_each_integer_vector(lo, hi, [&](const std::vector<long>& z) {
        if (!s.injective_up_to_radius) return;
        bool zero = true;
        for (long c : z)
            if (c != 0) zero = false;
        if (zero) return;
        Point<S> x = s.ambient.point_at(z);
        Point<S> y = s.pi1.mul_vec(x);
        for (const auto& v : y) {
            Sign sg = sgn_of(v);
            if (sg == Sign::positive || sg == Sign::negative) return;
        }
        s.injective_up_to_radius = false;
    });
    return s;
}

// ---------------------------------------------------------------------------
// Saturated patches

template <typename S>
struct PatchPoint {
    Point<S> pos;
    int coset = -1;              // crystal provenance
    std::vector<long> preimage;  // lattice coefficients (crystal: within its coset)
};

template <typename S>
struct Patch {
    std::string source_id;
    Box<S> region;
    std::vector<PatchPoint<S>> points;
    std::vector<PatchPoint<S>> uncertain;  // memberships straddling a boundary

    size_t size() const { return points.size(); }
};

namespace detail {

template <typename S>
int patch_point_compare(const PatchPoint<S>& a, const PatchPoint<S>& b) {
    for (size_t i = 0; i < a.pos.size(); ++i) {
        Sign s = sgn_of(a.pos[i] - b.pos[i]);
        if (s == Sign::negative) return -1;
        if (s == Sign::positive) return 1;
        // zero or uncertain: fall through to the next coordinate
    }
    if (a.coset != b.coset) return a.coset < b.coset ? -1 : 1;
    if (a.preimage != b.preimage) return a.preimage < b.preimage ? -1 : 1;
    return 0;
}

template <typename S>
void sort_patch(std::vector<PatchPoint<S>>& pts) {
    std::sort(pts.begin(), pts.end(), [](const PatchPoint<S>& a, const PatchPoint<S>& b) {
        return patch_point_compare(a, b) < 0;
    });
}

}  // namespace detail

template <typename S>
Patch<S> crystal_points_in_box(const Crystal<S>& C, const Box<S>& region,
                               const std::string& source_id = "crystal") {
    static_assert(scalar_traits<S>::exact, "crystal enumeration requires an exact backend");
    Patch<S> patch;
    patch.source_id = source_id;
    patch.region = region;
    int d = C.dim();
    for (int ci = 0; ci < C.copies(); ++ci) {
        Box<S> shifted = region;
        for (int i = 0; i < d; ++i) {
            shifted.lo[i] = shifted.lo[i] - C.translates[ci][i];
            shifted.hi[i] = shifted.hi[i] - C.translates[ci][i];
        }
        std::vector<long> zlo, zhi;
        detail::lattice_index_box(C.lattice.basis_inv, shifted, zlo, zhi);
        detail::for_each_integer_vector(zlo, zhi, [&](const std::vector<long>& z) {
            Point<S> p = C.lattice.point_at(z);
            for (int i = 0; i < d; ++i) p[i] = p[i] + C.translates[ci][i];
            if (!region.contains(p)) return;
            patch.points.push_back(PatchPoint<S>{std::move(p), ci, z});
        });
    }
    detail::sort_patch(patch.points);
    return patch;
}

template <typename S>
Patch<S> model_points_in_box(const Scheme<S>& sch, const Box<S>& region,
                             const std::string& source_id = "scheme") {
    Patch<S> patch;
    patch.source_id = source_id;
    patch.region = region;
    int n = sch.n();
    // Ambient bounding box of (region x window bbox) pulled back through the
    // stacked projection, then through the ambient basis.
    Box<S> product;
    product.lo.resize(n);
    product.hi.resize(n);
    for (int i = 0; i < sch.d; ++i) {
        product.lo[i] = region.lo[i];
        product.hi[i] = region.hi[i];
    }
    for (int i = 0; i < sch.k; ++i) {
        product.lo[sch.d + i] = sch.window.bbox.lo[i];
        product.hi[sch.d + i] = sch.window.bbox.hi[i];
    }
    Mat<S> pullback = sch.ambient.basis_inv * sch.stacked_inv;
    std::vector<long> zlo, zhi;
    detail::lattice_index_box(pullback, product, zlo, zhi);
    detail::for_each_integer_vector(zlo, zhi, [&](const std::vector<long>& z) {
        Point<S> x = sch.ambient.point_at(z);
        Point<S> phys = sch.pi1.mul_vec(x);
        Point<S> internal = sch.pi2.mul_vec(x);
        bool unsure = false;
        for (int i = 0; i < sch.d; ++i) {
            Sign a = sgn_of(phys[i] - region.lo[i]);
            Sign b = sgn_of(region.hi[i] - phys[i]);
            if (a == Sign::negative || b == Sign::negative) return;
            if (a == Sign::uncertain || b == Sign::uncertain) unsure = true;
        }
        for (const auto& h : sch.window.halfspaces) {
            S v = h.offset;
            for (int i = 0; i < sch.k; ++i) v = v - h.normal[i] * internal[i];
            Sign s = sgn_of(v);
            if (s == Sign::negative) return;
            if (s == Sign::uncertain) unsure = true;
        }
        PatchPoint<S> pp{std::move(phys), -1, z};
        if (unsure)
            patch.uncertain.push_back(std::move(pp));
        else
            patch.points.push_back(std::move(pp));
    });
    detail::sort_patch(patch.points);
    detail::sort_patch(patch.uncertain);
    // Physical duplicates can occur when pi1 is not injective on the lattice;
    // keep the first preimage.
    std::vector<PatchPoint<S>> dedup;
    for (auto& p : patch.points) {
        if (!dedup.empty()) {
            bool same = true;
            for (size_t i = 0; i < p.pos.size() && same; ++i)
                if (sgn_of(dedup.back().pos[i] - p.pos[i]) != Sign::zero) same = false;
            if (same) continue;
        }
        dedup.push_back(std::move(p));
    }
    patch.points = std::move(dedup);
    return patch;
}

// ---------------------------------------------------------------------------
// Slab construction: physical space gamma spanned by the rows of gamma_basis,
// internal space its orthogonal complement, window an axis box inscribed in
// the epsilon-ball of internal space.

template <typename S>
Scheme<S> build_slab_scheme(const Mat<S>& gamma_basis, const S& epsilon) {
    static_assert(scalar_traits<S>::exact, "slab schemes require an exact backend");
    int d = gamma_basis.rows(), n = gamma_basis.cols();
    if (d <= 0 || d >= n) fail(Errc::rank_deficient, "slab subspace dimension out of range");
    int k = n - d;
    auto ns = nullspace(gamma_basis);
    if (static_cast<int>(ns.size()) != k) fail(Errc::rank_deficient, "gamma basis rows dependent");
    Mat<S> delta(k, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) delta(i, j) = ns[static_cast<size_t>(i)][j];
    // pi = (Gram)^-1 * rows: coordinates of the orthogonal projections.
    Mat<S> pi1 = inverse(gamma_basis * gamma_basis.transposed()) * gamma_basis;
    Mat<S> d_gram = delta * delta.transposed();
    Mat<S> pi2 = inverse(d_gram) * delta;
    // Inscribed box: |c_i| <= r with r^2 * sum|Gram_ij| <= eps^2 keeps the box
    // inside the epsilon-ball of internal space.
    Rational t(0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Rational u = rational_upper_bound(d_gram(i, j)).abs();
            Rational l = rational_lower_bound(d_gram(i, j)).abs();
            t += (u > l ? u : l);
        }
    Rational eps_lo = rational_lower_bound(epsilon);
    if (eps_lo.sign() != Sign::positive) fail(Errc::invalid_config, "epsilon must be positive");
    Rational r = rational_sqrt_lower(eps_lo * eps_lo / t);
    S rs = scalar_from_rational<S>(r);
    HPolytope<S> window;
    window.bbox.lo.assign(k, S(0) - rs);
    window.bbox.hi.assign(k, rs);
    for (int i = 0; i < k; ++i) {
        Halfspace<S> up, dn;
        up.normal.assign(k, S(0));
        dn.normal.assign(k, S(0));
        up.normal[i] = S(1);
        up.offset = rs;
        dn.normal[i] = S(-1);
        dn.offset = rs;
        window.halfspaces.push_back(std::move(up));
        window.halfspaces.push_back(std::move(dn));
    }
    return make_scheme(d, k, make_lattice(Mat<S>::identity(n)), pi1, pi2, std::move(window));
}

// ---------------------------------------------------------------------------
// Preset catalog

using AnySource = std::variant<Crystal<Rational>, Crystal<QuadScalar>, Scheme<Rational>,
                               Scheme<QuadScalar>, Scheme<CertFloat>>;

std::vector<std::string> preset_names();
AnySource preset(const std::string& name);

// Known extremal empty polygons for the 2D crystal presets (re-verified by
// the certificate machinery in tests and by `bounds`).
std::vector<Point<Rational>> preset_reference_polygon(const std::string& name);

// Example 4.1 arc extension: a (6+m)-crystal whose extra translates are
// rational points on the circular arc bulging right of the chord between
// (13/10, 8/10) and (13/10, 5/10), together with the (12+m)-gon vertex list.
struct ArcExtension {
    Crystal<Rational> crystal;
    std::vector<Point<Rational>> polygon;  // counterclockwise
};
ArcExtension extend_6crystal_on_arc(int extra);

}  // namespace helly
