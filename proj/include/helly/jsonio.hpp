#pragma once

// JSON (and CSV) serialization: scalars as exact strings ("p/q",
// "a+b*sqrt(D)") or value/radius objects for certified floats; certificates,
// patches, reports, and source configuration files.

#include "helly/bounds.hpp"

#include <json.hpp>

namespace helly {

using Json = nlohmann::ordered_json;

inline Json scalar_json(const Rational& x) { return x.to_string(); }
inline Json scalar_json(const QuadScalar& x) { return x.to_string(); }
inline Json scalar_json(const CertFloat& x) {
    return Json{{"value", x.to_string()}, {"radius", x.radius_to_string()}};
}

template <typename S>
S scalar_from_json(const Json& j);
template <>
inline Rational scalar_from_json<Rational>(const Json& j) {
    return Rational::parse(j.get<std::string>());
}
template <>
inline QuadScalar scalar_from_json<QuadScalar>(const Json& j) {
    return QuadScalar::parse(j.get<std::string>());
}
template <>
inline CertFloat scalar_from_json<CertFloat>(const Json& j) {
    if (j.is_object())
        return CertFloat::from_decimal(j.at("value").get<std::string>(),
                                       std::stod(j.at("radius").get<std::string>()));
    return CertFloat::from_decimal(j.get<std::string>());
}

template <typename S>
Json point_json(const Point<S>& p) {
    Json a = Json::array();
    for (const auto& c : p) a.push_back(scalar_json(c));
    return a;
}

template <typename S>
Point<S> point_from_json(const Json& j) {
    Point<S> p;
    for (const auto& c : j) p.push_back(scalar_from_json<S>(c));
    return p;
}

template <typename S>
Json certificate_json(const EmptyHullCertificate<S>& cert) {
    Json j;
    j["source"] = cert.source_id;
    j["backend"] = scalar_traits<S>::name;
    j["vertices"] = Json::array();
    for (const auto& v : cert.vertices) j["vertices"].push_back(point_json(v));
    j["provenance"] = Json::array();
    for (const auto& p : cert.provenance)
        j["provenance"].push_back(Json{{"coset", p.coset}, {"preimage", p.preimage}});
    j["status"] = cert_status_name(cert.status);
    j["witnesses"] = Json::array();
    for (const auto& w : cert.witnesses) j["witnesses"].push_back(point_json(w));
    j["helly_lower_bound"] = cert.status == CertStatus::verified ? cert.vertex_count() : 0;
    if (!cert.note.empty()) j["note"] = cert.note;
    return j;
}

template <typename S>
Json patch_json(const Patch<S>& patch) {
    Json j;
    j["source"] = patch.source_id;
    j["backend"] = scalar_traits<S>::name;
    j["region"] = Json{{"lo", point_json(patch.region.lo)}, {"hi", point_json(patch.region.hi)}};
    auto rows = [](const std::vector<PatchPoint<S>>& pts) {
        Json a = Json::array();
        for (const auto& pp : pts) {
            Json r;
            r["pos"] = point_json(pp.pos);
            if (pp.coset >= 0) r["coset"] = pp.coset;
            r["preimage"] = pp.preimage;
            a.push_back(std::move(r));
        }
        return a;
    };
    j["points"] = rows(patch.points);
    j["uncertain"] = rows(patch.uncertain);
    return j;
}

template <typename S>
std::string patch_csv(const Patch<S>& patch) {
    std::string out;
    size_t d = patch.region.lo.size();
    for (size_t i = 0; i < d; ++i) out += (i ? ",x" : "x") + std::to_string(i);
    out += ",provenance\n";
    for (const auto& pp : patch.points) {
        for (size_t i = 0; i < pp.pos.size(); ++i) {
            if (i) out += ",";
            out += pp.pos[i].to_string();
        }
        if (pp.coset >= 0)
            out += ",coset" + std::to_string(pp.coset);
        else {
            out += ",z";
            for (size_t i = 0; i < pp.preimage.size(); ++i)
                out += (i ? ";" : "") + std::to_string(pp.preimage[i]);
        }
        out += "\n";
    }
    return out;
}

Json bound_report_json(const BoundReport& r);
Json fractional_report_json(const FractionalReport& r);

// Source configuration files: {"type": "crystal"|"scheme", "backend":
// "rational"|"quadratic"|"certfloat", ...}.
AnySource source_from_config(const Json& config);
Json family_polygons_json(const std::vector<VPolytope<Rational>>& family);
std::vector<VPolytope<Rational>> family_from_json(const Json& j);

}  // namespace helly
