#include "helly/jsonio.hpp"

namespace helly {

Json bound_report_json(const BoundReport& r) {
    Json j;
    j["source"] = r.source_id;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["upper_provenance"] = r.upper_provenance;
    j["consistent"] = r.consistent;
    return j;
}

Json fractional_report_json(const FractionalReport& r) {
    Json j;
    j["n"] = r.n;
    j["pierced_triples"] = r.pierced_triples;
    j["total_triples"] = r.total_triples;
    j["alpha"] = r.alpha.to_string();
    j["beta_observed"] = r.beta_observed.to_string();
    j["deep_cover"] = r.deep_cover;
    j["deep_point"] = point_json(r.deep_point);
    return j;
}

namespace {

template <typename S>
Mat<S> mat_from_json(const Json& j) {
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
    Mat<S> m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = scalar_from_json<S>(j.at(r).at(c));
    return m;
}

template <typename S>
Crystal<S> crystal_from_json(const Json& j) {
    Mat<S> basis = mat_from_json<S>(j.at("basis"));
    std::vector<Point<S>> translates;
    if (j.contains("translates"))
        for (const auto& t : j.at("translates")) translates.push_back(point_from_json<S>(t));
    return make_crystal(std::move(basis), std::move(translates));
}

template <typename S>
Scheme<S> scheme_from_json(const Json& j) {
    int d = j.at("d").get<int>();
    int k = j.at("k").get<int>();
    Mat<S> ambient = j.contains("ambient_basis") ? mat_from_json<S>(j.at("ambient_basis"))
                                                 : Mat<S>::identity(d + k);
    Mat<S> pi1 = mat_from_json<S>(j.at("pi1"));
    Mat<S> pi2 = mat_from_json<S>(j.at("pi2"));
    const Json& w = j.at("window");
    HPolytope<S> window;
    for (const auto& h : w.at("halfspaces")) {
        Halfspace<S> hs;
        for (const auto& c : h.at("normal")) hs.normal.push_back(scalar_from_json<S>(c));
        hs.offset = scalar_from_json<S>(h.at("offset"));
        window.halfspaces.push_back(std::move(hs));
    }
    window.bbox.lo = point_from_json<S>(w.at("bbox").at("lo"));
    window.bbox.hi = point_from_json<S>(w.at("bbox").at("hi"));
    long inj = j.value("injectivity_radius", 2);
    return make_scheme(d, k, make_lattice(std::move(ambient)), std::move(pi1), std::move(pi2),
                       std::move(window), inj);
}

}  // namespace

AnySource source_from_config(const Json& config) {
    std::string type = config.at("type").get<std::string>();
    std::string backend = config.value("backend", "rational");
    if (type == "crystal") {
        if (backend == "rational") return crystal_from_json<Rational>(config);
        if (backend == "quadratic") return crystal_from_json<QuadScalar>(config);
        fail(Errc::invalid_config, "crystals require an exact backend, got: " + backend);
    }
    if (type == "scheme") {
        if (backend == "rational") return scheme_from_json<Rational>(config);
        if (backend == "quadratic") return scheme_from_json<QuadScalar>(config);
        if (backend == "certfloat") return scheme_from_json<CertFloat>(config);
        fail(Errc::invalid_config, "unknown backend: " + backend);
    }
    fail(Errc::invalid_config, "config type must be crystal or scheme, got: " + type);
}

Json family_polygons_json(const std::vector<VPolytope<Rational>>& family) {
    Json a = Json::array();
    for (const auto& f : family) {
        Json poly = Json::array();
        for (const auto& v : f.vertices) poly.push_back(point_json(v));
        a.push_back(std::move(poly));
    }
    return Json{{"polygons", a}};
}

std::vector<VPolytope<Rational>> family_from_json(const Json& j) {
    std::vector<VPolytope<Rational>> family;
    for (const auto& poly : j.at("polygons")) {
        std::vector<Point<Rational>> pts;
        for (const auto& v : poly) pts.push_back(point_from_json<Rational>(v));
        family.push_back(convex_hull_2d(pts));
    }
    return family;
}

}  // namespace helly
