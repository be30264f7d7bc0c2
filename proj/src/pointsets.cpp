#include "helly/pointsets.hpp"

namespace helly {

Rational rational_lower_bound(const Rational& x) { return x; }
Rational rational_upper_bound(const Rational& x) { return x; }

namespace {

// Two-sided rational bounds for sqrt(D), D a positive integer.
void sqrt_bounds(long d, Rational& lo, Rational& hi) {
    const unsigned digits = 18;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 2 * digits);
    mpz_class n = mpz_class(d) * scale;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, digits);
    lo = Rational(r, den);
    hi = Rational(r + 1, den);
}

}  // namespace

Rational rational_lower_bound(const QuadScalar& x) {
    if (x.is_rational()) return x.rational_part();
    Rational lo, hi;
    sqrt_bounds(x.radicand(), lo, hi);
    const Rational& b = x.radical_coeff();
    return x.rational_part() + b * (b.sign() == Sign::negative ? hi : lo);
}

Rational rational_upper_bound(const QuadScalar& x) {
    if (x.is_rational()) return x.rational_part();
    Rational lo, hi;
    sqrt_bounds(x.radicand(), lo, hi);
    const Rational& b = x.radical_coeff();
    return x.rational_part() + b * (b.sign() == Sign::negative ? lo : hi);
}

namespace {

using RPoint = Point<Rational>;

Crystal<Rational> z2_crystal(std::vector<RPoint> translates) {
    return make_crystal(Mat<Rational>::identity(2), std::move(translates));
}

std::vector<RPoint> six_crystal_translates() {
    return {{Rational(0), Rational(0)},
            {Rational(3, 10), Rational(5, 10)},
            {Rational(6, 10), Rational(8, 10)},
            {Rational(9, 10), Rational(9, 10)},
            {Rational(11, 10), Rational(9, 10)},
            {Rational(13, 10), Rational(8, 10)}};
}

std::vector<RPoint> four_crystal_translates() {
    return {{Rational(0), Rational(0)},
            {Rational(2, 10), Rational(3, 10)},
            {Rational(7, 10), Rational(8, 10)},
            {Rational(12, 10), Rational(8, 10)}};
}

// ---------------------------------------------------------------------------
// Fibonacci scheme: ambient Z^2 over Q(sqrt 5), physical line of slope 1/phi
// (projection coordinates [phi, 1]), internal [1, -phi], window the internal
// image of the unit cell.

Scheme<QuadScalar> fibonacci_scheme() {
    using Q = QuadScalar;
    Q phi(Rational(1, 2), Rational(1, 2), 5);  // (1 + sqrt 5) / 2
    Mat<Q> pi1(1, 2), pi2(1, 2);
    pi1(0, 0) = phi;
    pi1(0, 1) = Q(1);
    pi2(0, 0) = Q(1);
    pi2(0, 1) = Q(0) - phi;
    // Internal images of the unit-cell corners are {0, 1, -phi, 1-phi}.
    Q lo = Q(0) - phi, hi = Q(1);
    HPolytope<Q> window;
    window.bbox.lo = {lo};
    window.bbox.hi = {hi};
    window.halfspaces.push_back(Halfspace<Q>{{Q(1)}, hi});
    window.halfspaces.push_back(Halfspace<Q>{{Q(-1)}, Q(0) - lo});
    return make_scheme(1, 1, make_lattice(Mat<Q>::identity(2)), pi1, pi2, std::move(window), 3);
}

// ---------------------------------------------------------------------------
// Zonotope windows (internal image of the ambient unit cell, plus a shift).

template <typename S>
void zonotope_extent(const std::vector<Point<S>>& gens, const Point<S>& shift, Box<S>& bbox) {
    size_t k = gens[0].size();
    bbox.lo.assign(k, S(0));
    bbox.hi.assign(k, S(0));
    for (size_t i = 0; i < k; ++i) {
        for (const auto& g : gens) {
            Sign s = sgn_of(g[i]);
            if (s != Sign::positive) bbox.lo[i] = bbox.lo[i] + g[i];
            if (s != Sign::negative) bbox.hi[i] = bbox.hi[i] + g[i];
        }
        bbox.lo[i] = bbox.lo[i] + shift[i];
        bbox.hi[i] = bbox.hi[i] + shift[i];
    }
}

template <typename S>
S abs_of(const S& x) { return x.abs(); }

// 2D zonotope: one facet-normal direction per generator.
template <typename S>
HPolytope<S> zonotope_window_2d(const std::vector<Point<S>>& gens, const Point<S>& shift) {
    HPolytope<S> w;
    Point<S> c(2, S(0));
    for (const auto& g : gens) {
        c[0] = c[0] + g[0];
        c[1] = c[1] + g[1];
    }
    c[0] = c[0] / S(2) + shift[0];
    c[1] = c[1] / S(2) + shift[1];
    for (const auto& g : gens) {
        std::vector<S> n = {S(0) - g[1], g[0]};
        S h(0);
        for (const auto& q : gens) h = h + abs_of(n[0] * q[0] + n[1] * q[1]);
        h = h / S(2);
        S nc = n[0] * c[0] + n[1] * c[1];
        w.halfspaces.push_back(Halfspace<S>{n, nc + h});
        w.halfspaces.push_back(Halfspace<S>{{S(0) - n[0], S(0) - n[1]}, h - nc});
    }
    zonotope_extent(gens, shift, w.bbox);
    return w;
}

// 3D zonotope: one facet-normal direction per generator pair.
template <typename S>
HPolytope<S> zonotope_window_3d(const std::vector<Point<S>>& gens, const Point<S>& shift) {
    HPolytope<S> w;
    Point<S> c(3, S(0));
    for (const auto& g : gens)
        for (int i = 0; i < 3; ++i) c[i] = c[i] + g[i];
    for (int i = 0; i < 3; ++i) c[i] = c[i] / S(2) + shift[i];
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = a + 1; b < gens.size(); ++b) {
            const auto& u = gens[a];
            const auto& v = gens[b];
            std::vector<S> n = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                u[0] * v[1] - u[1] * v[0]};
            S h(0);
            for (const auto& q : gens) h = h + abs_of(n[0] * q[0] + n[1] * q[1] + n[2] * q[2]);
            h = h / S(2);
            S nc = n[0] * c[0] + n[1] * c[1] + n[2] * c[2];
            w.halfspaces.push_back(Halfspace<S>{n, nc + h});
            w.halfspaces.push_back(
                Halfspace<S>{{S(0) - n[0], S(0) - n[1], S(0) - n[2]}, h - nc});
        }
    zonotope_extent(gens, shift, w.bbox);
    return w;
}

// ---------------------------------------------------------------------------
// Ammann-Beenker: Z^4 over Q(sqrt 2); physical star at angles pi j/4,
// internal star at 3 pi j/4; window the internal image of the unit 4-cube
// (a regular octagon).

Scheme<QuadScalar> ammann_beenker_scheme() {
    using Q = QuadScalar;
    Q s(Rational(0), Rational(1, 2), 2);  // sqrt(2)/2
    Mat<Q> pi1(2, 4), pi2(2, 4);
    // u_j = (cos(pi j/4), sin(pi j/4)), v_j = (cos(3 pi j/4), sin(3 pi j/4))
    Q u[4][2] = {{Q(1), Q(0)}, {s, s}, {Q(0), Q(1)}, {Q(0) - s, s}};
    Q v[4][2] = {{Q(1), Q(0)}, {Q(0) - s, s}, {Q(0), Q(-1)}, {s, s}};
    for (int j = 0; j < 4; ++j) {
        pi1(0, j) = u[j][0];
        pi1(1, j) = u[j][1];
        pi2(0, j) = v[j][0];
        pi2(1, j) = v[j][1];
    }
    std::vector<Point<Q>> gens;
    for (int j = 0; j < 4; ++j) gens.push_back({v[j][0], v[j][1]});
    Point<Q> shift = {Q(0), Q(0)};
    return make_scheme(2, 2, make_lattice(Mat<Q>::identity(4)), pi1, pi2,
                       zonotope_window_2d(gens, shift), 3);
}

// ---------------------------------------------------------------------------
// Penrose via de Bruijn: Z^5; physical star at angles 2 pi j/5; internal
// space is the second-harmonic star plus the sum direction; window the
// internal image of the unit 5-cube (20-facet zonotope) shifted by a fixed
// offset so typical patches stay clear of the boundary.

Scheme<CertFloat> penrose_scheme() {
    using C = CertFloat;
    Mat<C> pi1(2, 5), pi2(3, 5);
    std::vector<Point<C>> gens;
    for (int j = 0; j < 5; ++j) {
        Rational tphys(2 * j, 5), tint(4 * j, 5);
        pi1(0, j) = C::cos_pi(tphys);
        pi1(1, j) = C::sin_pi(tphys);
        pi2(0, j) = C::cos_pi(tint);
        pi2(1, j) = C::sin_pi(tint);
        pi2(2, j) = C(1);
        gens.push_back({pi2(0, j), pi2(1, j), C(1)});
    }
    // Offset gamma = (1/10, 1/5, 0, 0, 1/5): sums to 1/2, so the sum
    // coordinate of accepted lattice points ranges over exactly five integers.
    std::vector<Rational> gamma = {Rational(1, 10), Rational(1, 5), Rational(0), Rational(0),
                                   Rational(1, 5)};
    Point<C> shift(3, C(0));
    for (int i = 0; i < 3; ++i) {
        C acc(0);
        for (int j = 0; j < 5; ++j) acc = acc + pi2(i, j) * C::from_rational(gamma[j]);
        shift[i] = C(0) - acc;
    }
    return make_scheme(2, 3, make_lattice(Mat<C>::identity(5)), pi1, pi2,
                       zonotope_window_3d(gens, shift), 1);
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"z2",
            "paper-6crystal",
            "paper-5crystal",
            "paper-4crystal",
            "paper-3crystal",
            "paper-2crystal-hex",
            "ammann-beenker",
            "fibonacci",
            "penrose-debruijn"};
}

AnySource preset(const std::string& name) {
    if (name == "z2") return z2_crystal({{Rational(0), Rational(0)}});
    if (name == "paper-6crystal") return z2_crystal(six_crystal_translates());
    if (name == "paper-5crystal") {
        auto t = six_crystal_translates();
        t.pop_back();
        return z2_crystal(std::move(t));
    }
    if (name == "paper-4crystal") return z2_crystal(four_crystal_translates());
    if (name == "paper-3crystal") {
        auto t = four_crystal_translates();
        t.pop_back();
        return z2_crystal(std::move(t));
    }
    if (name == "paper-2crystal-hex")
        return z2_crystal({{Rational(0), Rational(0)}, {Rational(2, 5), Rational(1, 2)}});
    if (name == "fibonacci") return fibonacci_scheme();
    if (name == "ammann-beenker") return ammann_beenker_scheme();
    if (name == "penrose-debruijn") return penrose_scheme();
    fail(Errc::unknown_preset, "unknown preset: " + name);
}

std::vector<Point<Rational>> preset_reference_polygon(const std::string& name) {
    auto R = [](long n, long d) { return Rational(n, d); };
    if (name == "z2")
        return {{R(0, 1), R(0, 1)}, {R(1, 1), R(0, 1)}, {R(1, 1), R(1, 1)}, {R(0, 1), R(1, 1)}};
    if (name == "paper-2crystal-hex")
        return {{R(0, 1), R(0, 1)}, {R(2, 5), R(-1, 2)}, {R(1, 1), R(0, 1)},
                {R(7, 5), R(1, 2)}, {R(1, 1), R(1, 1)},  {R(2, 5), R(1, 2)}};
    if (name == "paper-3crystal")
        return {{R(-1, 1), R(-1, 1)}, {R(7, 10), R(-1, 5)}, {R(1, 1), R(0, 1)},
                {R(6, 5), R(3, 10)},  {R(0, 1), R(0, 1)},   {R(-3, 10), R(-1, 5)},
                {R(-4, 5), R(-7, 10)}};
    if (name == "paper-4crystal")
        return {{R(-4, 5), R(-1, 5)}, {R(-3, 10), R(-1, 5)}, {R(0, 1), R(0, 1)},
                {R(1, 5), R(3, 10)},  {R(1, 5), R(4, 5)},    {R(0, 1), R(1, 1)},
                {R(-3, 10), R(4, 5)}, {R(-4, 5), R(3, 10)},  {R(-1, 1), R(0, 1)}};
    if (name == "paper-5crystal")
        return {{R(0, 1), R(0, 1)},    {R(1, 10), R(-1, 10)}, {R(6, 10), R(-2, 10)},
                {R(9, 10), R(-1, 10)}, {R(1, 1), R(0, 1)},    {R(13, 10), R(5, 10)},
                {R(11, 10), R(9, 10)}, {R(9, 10), R(9, 10)},  {R(6, 10), R(8, 10)},
                {R(3, 10), R(5, 10)}};
    if (name == "paper-6crystal")
        return {{R(0, 1), R(0, 1)},     {R(1, 10), R(-1, 10)}, {R(3, 10), R(-2, 10)},
                {R(6, 10), R(-2, 10)},  {R(9, 10), R(-1, 10)}, {R(1, 1), R(0, 1)},
                {R(13, 10), R(5, 10)},  {R(13, 10), R(8, 10)}, {R(11, 10), R(9, 10)},
                {R(9, 10), R(9, 10)},   {R(6, 10), R(8, 10)},  {R(3, 10), R(5, 10)}};
    fail(Errc::unknown_preset, "no reference polygon for preset: " + name);
}

ArcExtension extend_6crystal_on_arc(int extra) {
    if (extra < 0) fail(Errc::invalid_config, "arc extension count must be >= 0");
    if (extra > 1000) fail(Errc::arc_exhausted, "arc extension count out of supported range");
    // Circle through A = (13/10, 8/10) and (13/10, 5/10) centered at
    // (1, 13/20); rational points from chords of integer slope through A.
    Rational ax(13, 10), ay(8, 10), ox(1), oy(13, 20);
    std::vector<Point<Rational>> arc;
    for (int i = 0; i < extra; ++i) {
        Rational s(-3 - i);
        Rational u = (Rational(-2) * ((ax - ox) + (ay - oy) * s)) / (Rational(1) + s * s);
        arc.push_back({ax + u, ay + u * s});
    }
    std::sort(arc.begin(), arc.end(),
              [](const Point<Rational>& a, const Point<Rational>& b) { return a[1] < b[1]; });
    auto translates = six_crystal_translates();
    for (const auto& p : arc) translates.push_back(p);
    ArcExtension out;
    out.crystal = make_crystal(Mat<Rational>::identity(2), std::move(translates));
    auto poly = preset_reference_polygon("paper-6crystal");
    // Insert arc points (by increasing y) between (13/10, 5/10) and (13/10, 8/10).
    std::vector<Point<Rational>> verts;
    for (const auto& v : poly) {
        verts.push_back(v);
        if (v[0] == Rational(13, 10) && v[1] == Rational(5, 10))
            for (const auto& p : arc) verts.push_back(p);
    }
    out.polygon = std::move(verts);
    return out;
}

}  // namespace helly
