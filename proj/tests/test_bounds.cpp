#include "helly/bounds.hpp"
#include "helly/rng.hpp"

#include <doctest.h>

using namespace helly;
using RPoint = Point<Rational>;

namespace {

RPoint rp(long x, long y) { return {Rational(x), Rational(y)}; }
RPoint rp(long xn, long xd, long yn, long yd) { return {Rational(xn, xd), Rational(yn, yd)}; }

VPolytope<Rational> rect(Rational x0, Rational y0, Rational x1, Rational y1) {
    return convex_hull_2d<Rational>({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

}  // namespace

TEST_CASE("upper bounds by provenance") {
    std::string prov;
    CHECK(crystal_upper_bound(2, 1, prov) == 4);
    CHECK(prov == "doignon");
    CHECK(crystal_upper_bound(2, 2, prov) == 6);
    CHECK(crystal_upper_bound(2, 3, prov) == 7);
    CHECK(crystal_upper_bound(2, 4, prov) == 9);
    CHECK(crystal_upper_bound(2, 5, prov) == 10);
    CHECK(crystal_upper_bound(2, 6, prov) == 12);
    CHECK(crystal_upper_bound(2, 9, prov) == 15);
    CHECK(prov == "twodim_table");
    CHECK(crystal_upper_bound(3, 6, prov) == 48);
    CHECK(prov == "union_k2d");
    CHECK(scheme_upper_bound(2, 3, prov) == 32);  // Penrose ceiling
    CHECK(scheme_upper_bound(2, 2, prov) == 16);  // octagonal ceiling
    CHECK(prov == "cnp_2dk");
}

TEST_CASE("preset bound reports are consistent") {
    for (const auto& name : preset_names()) {
        auto src = preset(name);
        std::visit(
            [&](const auto& s) {
                BoundReport r = upper_bound_report(s, name);
                CHECK(r.upper >= 4);
                CHECK(r.lower <= r.upper);
            },
            src);
    }
}

TEST_CASE("verified reference polygons meet their upper bounds exactly") {
    const char* names[] = {"z2",             "paper-2crystal-hex", "paper-3crystal",
                           "paper-4crystal", "paper-5crystal",     "paper-6crystal"};
    for (const char* name : names) {
        auto crystal = std::get<Crystal<Rational>>(preset(name));
        auto poly = preset_reference_polygon(name);
        auto cert = is_empty_hull(crystal, poly, nullptr, name);
        REQUIRE(cert.status == CertStatus::verified);
        BoundReport r = upper_bound_report(crystal, name);
        r.lower = cert.vertex_count();
        REQUIRE(r.lower <= r.upper);
        REQUIRE(r.lower == r.upper);  // each catalog polygon is extremal
    }
}

TEST_CASE("product certificate: unit square to unit cube") {
    auto z2 = std::get<Crystal<Rational>>(preset("z2"));
    auto square = is_empty_hull(z2, preset_reference_polygon("z2"), nullptr, "z2");
    REQUIRE(square.status == CertStatus::verified);
    auto lift = product_certificate(z2, square, 1);
    CHECK(lift.certificate.status == CertStatus::verified);
    CHECK(lift.certificate.vertex_count() == 8);
    CHECK(lift.crystal.dim() == 3);
}

TEST_CASE("product certificate: the 12-gon lifts to 24 and 48 vertices") {
    auto c6 = std::get<Crystal<Rational>>(preset("paper-6crystal"));
    auto planar = is_empty_hull(c6, preset_reference_polygon("paper-6crystal"), nullptr,
                                "paper-6crystal");
    REQUIRE(planar.status == CertStatus::verified);
    auto lift1 = product_certificate(c6, planar, 1);
    CHECK(lift1.certificate.status == CertStatus::verified);
    CHECK(lift1.certificate.vertex_count() == 24);
    std::string prov;
    CHECK(crystal_upper_bound(lift1.crystal.dim(), lift1.crystal.copies(), prov) == 48);

    auto lift2 = product_certificate(c6, planar, 2);
    CHECK(lift2.certificate.status == CertStatus::verified);
    CHECK(lift2.certificate.vertex_count() == 48);
}

TEST_CASE("product lift rejects unverified input") {
    auto z2 = std::get<Crystal<Rational>>(preset("z2"));
    EmptyHullCertificate<Rational> bogus;
    bogus.status = CertStatus::refuted;
    CHECK_THROWS_AS(product_certificate(z2, bogus, 1), Error);
}

TEST_CASE("parallelogram lemma on the worked cases") {
    // a parallelogram returns itself with all four vertices shared
    auto self = find_parallelogram({rp(0, 0), rp(1, 0), rp(1, 1), rp(0, 1)});
    CHECK(self.shared.size() == 4);

    // appendix case x > 1, y > 1: quad A(0,1) B(0,0) C(1,0) D(2,2) -> ABCM, M=(1,1)
    auto far = find_parallelogram({rp(0, 1), rp(0, 0), rp(1, 0), rp(2, 2)});
    CHECK(far.shared.size() == 3);
    bool has_m = false;
    for (const auto& v : far.parallelogram)
        if (points_equal(v, rp(1, 1))) has_m = true;
    CHECK(has_m);

    // appendix case x <= 1, y <= 1: D=(3/4,3/4) -> AMCD, M=(1/4,1/4)
    auto near = find_parallelogram({rp(0, 1), rp(0, 0), rp(1, 0), rp(3, 4, 3, 4)});
    CHECK(near.shared.size() == 3);
    bool has_m2 = false;
    for (const auto& v : near.parallelogram)
        if (points_equal(v, rp(1, 4, 1, 4))) has_m2 = true;
    CHECK(has_m2);

    CHECK_THROWS_AS(find_parallelogram({rp(0, 0), rp(1, 0), rp(2, 0), rp(3, 0)}), Error);
    CHECK_THROWS_AS(find_parallelogram({rp(0, 0), rp(2, 0), rp(1, 0), rp(1, 1)}), Error);
    CHECK_THROWS_AS(find_parallelogram({rp(0, 0), rp(0, 0), rp(1, 0), rp(1, 1)}), Error);
}

TEST_CASE("parallelogram lemma properties on random quads") {
    SplitMix64 rng(555);
    int done = 0;
    while (done < 1000) {
        std::array<RPoint, 4> quad;
        for (auto& q : quad)
            q = rp(rng.range(-12, 12), rng.range(1, 6), rng.range(-12, 12), rng.range(1, 6));
        ParallelogramResult res;
        try {
            res = find_parallelogram(quad);
        } catch (const Error&) {
            continue;  // degenerate or non-convex sample
        }
        auto hull = convex_hull_2d(std::vector<RPoint>(quad.begin(), quad.end()));
        // all output vertices inside the closed quad
        for (const auto& v : res.parallelogram)
            REQUIRE(point_in_hull(hull, v, HullMode::closed) == Containment::in);
        // opposite edges equal
        const auto& p = res.parallelogram;
        REQUIRE(p[1][0] - p[0][0] == p[2][0] - p[3][0]);
        REQUIRE(p[1][1] - p[0][1] == p[2][1] - p[3][1]);
        // shared vertices really are quad vertices
        REQUIRE(res.shared.size() >= 3);
        for (int idx : res.shared) {
            bool found = false;
            for (const auto& v : res.parallelogram)
                if (points_equal(v, quad[static_cast<size_t>(idx)])) found = true;
            REQUIRE(found);
        }
        ++done;
    }
}

TEST_CASE("parallel segments lemma on the worked cases") {
    using Seg = std::pair<RPoint, RPoint>;
    std::array<Seg, 3> a = {Seg{rp(0, 0), rp(1, 0)}, Seg{rp(0, 1), rp(1, 1)},
                            Seg{rp(1, 2, 2, 1), rp(3, 2, 2, 1)}};
    CHECK(parallel_segments_witness(a) == 3);  // Y'
    std::array<Seg, 3> b = {Seg{rp(0, 0), rp(1, 0)}, Seg{rp(0, 1), rp(1, 1)},
                            Seg{rp(-1, 2, 2, 1), rp(1, 2, 2, 1)}};
    CHECK(parallel_segments_witness(b) == 2);  // Y
    // collinear: all three segments on one line
    std::array<Seg, 3> c = {Seg{rp(0, 0), rp(1, 0)}, Seg{rp(3, 0), rp(4, 0)},
                            Seg{rp(6, 0), rp(7, 0)}};
    int w = parallel_segments_witness(c);
    CHECK(w >= 0);
    CHECK(w < 6);
    // unequal segments are rejected
    std::array<Seg, 3> bad = {Seg{rp(0, 0), rp(1, 0)}, Seg{rp(0, 1), rp(2, 1)},
                              Seg{rp(0, 2), rp(1, 2)}};
    CHECK_THROWS_AS(parallel_segments_witness(bad), Error);
}

TEST_CASE("parallel segments witness always lies in the hull of the rest") {
    SplitMix64 rng(333);
    using Seg = std::pair<RPoint, RPoint>;
    int done = 0;
    while (done < 1000) {
        RPoint v = rp(rng.range(-6, 6), rng.range(1, 4), rng.range(-6, 6), rng.range(1, 4));
        if (v[0].is_zero() && v[1].is_zero()) continue;
        std::array<Seg, 3> segs;
        for (auto& s : segs) {
            RPoint start =
                rp(rng.range(-10, 10), rng.range(1, 4), rng.range(-10, 10), rng.range(1, 4));
            s = Seg{start, {start[0] + v[0], start[1] + v[1]}};
        }
        // occasionally force the degenerate collinear configuration
        if (rng.below(5) == 0) {
            segs[1].first = {segs[0].first[0] + v[0] * Rational(3),
                             segs[0].first[1] + v[1] * Rational(3)};
            segs[1].second = {segs[1].first[0] + v[0], segs[1].first[1] + v[1]};
        }
        int w = parallel_segments_witness(segs);
        std::array<RPoint, 6> pts = {segs[0].first, segs[0].second, segs[1].first,
                                     segs[1].second, segs[2].first, segs[2].second};
        std::vector<RPoint> others;
        for (int i = 0; i < 6; ++i)
            if (i != w) others.push_back(pts[static_cast<size_t>(i)]);
        auto hull = convex_hull_2d(others);
        REQUIRE(point_in_hull(hull, pts[static_cast<size_t>(w)], HullMode::closed) ==
                Containment::in);
        ++done;
    }
}

TEST_CASE("fractional experiment: all-overlapping family") {
    auto z2 = std::get<Crystal<Rational>>(preset("z2"));
    std::vector<VPolytope<Rational>> family;
    for (long i = 0; i < 10; ++i)
        family.push_back(rect(Rational(-3) - Rational(i, 7), Rational(-3), Rational(3), Rational(3)));
    auto rep = fractional_experiment(z2, family);
    CHECK(rep.alpha == Rational(1));
    CHECK(rep.beta_observed == Rational(1));
    CHECK(rep.deep_cover == 10);
}

TEST_CASE("fractional experiment: one member disjoint from the rest") {
    auto z2 = std::get<Crystal<Rational>>(preset("z2"));
    int n = 8;
    std::vector<VPolytope<Rational>> family;
    for (int i = 0; i + 1 < n; ++i)
        family.push_back(rect(Rational(-2) - Rational(i, 5), Rational(-2), Rational(2), Rational(2)));
    family.push_back(rect(Rational(50), Rational(50), Rational(52), Rational(51)));
    auto rep = fractional_experiment(z2, family);
    // C(n-1,3) pierced triples out of C(n,3)
    long expect_pierced = 35;  // C(7,3)
    CHECK(rep.pierced_triples == expect_pierced);
    CHECK(rep.alpha == Rational(expect_pierced, 56));
    CHECK(rep.beta_observed == Rational(n - 1, n));
}

TEST_CASE("fractional sanity: beta at least 3/n whenever alpha positive") {
    auto z2 = std::get<Crystal<Rational>>(preset("z2"));
    SplitMix64 rng(987);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<VPolytope<Rational>> family;
        for (int i = 0; i < 12; ++i) {
            Rational x0(rng.range(0, 28), 4), y0(rng.range(0, 28), 4);
            Rational w(rng.range(4, 12), 4), h(rng.range(4, 12), 4);
            family.push_back(rect(x0, y0, x0 + w, y0 + h));
        }
        auto rep = fractional_experiment(z2, family);
        if (rep.alpha.sign() == Sign::positive)
            REQUIRE(rep.beta_observed >= Rational(3, 12));
    }
}

TEST_CASE("direct helly check over the integer lattice and the hex crystal") {
    auto z2 = std::get<Crystal<Rational>>(preset("z2"));
    std::vector<VPolytope<Rational>> family;
    for (long i = 0; i < 8; ++i)
        family.push_back(rect(Rational(-4) - Rational(i, 3), Rational(-4) + Rational(i, 9),
                              Rational(4) + Rational(i, 5), Rational(4)));
    CHECK(helly_direct_check(z2, family, 4));

    SplitMix64 rng(31337);
    auto hex = std::get<Crystal<Rational>>(preset("paper-2crystal-hex"));
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<VPolytope<Rational>> f;
        int n = 5 + static_cast<int>(rng.below(4));
        for (int i = 0; i < n; ++i) {
            Rational x0(rng.range(0, 20), 4), y0(rng.range(0, 20), 4);
            Rational w(rng.range(6, 14), 4), h(rng.range(6, 14), 4);
            f.push_back(rect(x0, y0, x0 + w, y0 + h));
        }
        REQUIRE(helly_direct_check(z2, f, 4));
        REQUIRE(helly_direct_check(hex, f, 6));
    }
}
