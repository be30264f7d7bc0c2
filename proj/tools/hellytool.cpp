// hellytool: generate patches of crystals and cut-and-project sets, search
// them for maximal empty convex polygons, verify certificates, print Helly
// bound reports, and run fractional-Helly experiments.

#include "helly/jsonio.hpp"
#include "helly/rng.hpp"
#include "helly/svgout.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace helly;

constexpr std::uint64_t kDefaultSeed = 42424242ULL;

// Exit codes: 0 ok, 2 config, 3 uncertain-fatal, 4 verifier contradiction,
// 5 bound inconsistency.
enum ExitCode { exit_ok = 0, exit_config = 2, exit_uncertain = 3, exit_contradiction = 4,
                exit_inconsistent = 5 };

struct SourceSpec {
    std::string id;
    AnySource source;
};

SourceSpec load_source(const std::string& preset_name, const std::string& config_path) {
    if (!preset_name.empty() && !config_path.empty())
        fail(Errc::invalid_config, "give either --preset or --config, not both");
    if (!preset_name.empty()) return SourceSpec{"preset:" + preset_name, preset(preset_name)};
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) fail(Errc::invalid_config, "cannot open config file: " + config_path);
        Json j = Json::parse(in);
        return SourceSpec{"config:" + config_path, source_from_config(j)};
    }
    fail(Errc::invalid_config, "a source is required (--preset or --config)");
}

template <typename S>
int source_dim(const Crystal<S>& c) { return c.dim(); }
template <typename S>
int source_dim(const Scheme<S>& s) { return s.d; }

template <typename S>
Box<S> parse_region(const std::string& text, int d) {
    std::vector<Rational> vals;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find(',', pos);
        std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
        if (!tok.empty()) vals.push_back(Rational::parse(tok));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (static_cast<int>(vals.size()) != 2 * d)
        fail(Errc::invalid_config, "--region needs " + std::to_string(2 * d) +
                                       " comma-separated values for a " + std::to_string(d) +
                                       "D source");
    Box<S> b;
    for (int i = 0; i < d; ++i) b.lo.push_back(scalar_from_rational<S>(vals[i]));
    for (int i = 0; i < d; ++i) b.hi.push_back(scalar_from_rational<S>(vals[d + i]));
    for (int i = 0; i < d; ++i)
        if (sgn_of(b.hi[i] - b.lo[i]) == Sign::negative)
            fail(Errc::invalid_config, "--region is empty");
    return b;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::invalid_config, "cannot write: " + path);
    out << content;
}

template <typename S>
double approx(const S& v) { return v.to_double(); }

template <typename S>
SvgScene scene_of(const Patch<S>& patch, const std::vector<std::vector<Point<S>>>& polygons) {
    SvgScene scene;
    int d = patch.region.dim();
    scene.min_x = approx(patch.region.lo[0]);
    scene.max_x = approx(patch.region.hi[0]);
    scene.min_y = d > 1 ? approx(patch.region.lo[1]) : -1.0;
    scene.max_y = d > 1 ? approx(patch.region.hi[1]) : 1.0;
    for (const auto& pp : patch.points)
        scene.points.push_back(SvgPoint{approx(pp.pos[0]), d > 1 ? approx(pp.pos[1]) : 0.0,
                                        pp.coset >= 0 ? pp.coset : 0});
    for (const auto& poly : polygons) {
        std::vector<std::array<double, 2>> rendered;
        for (const auto& v : poly)
            rendered.push_back({approx(v[0]), v.size() > 1 ? approx(v[1]) : 0.0});
        scene.polygons.push_back(std::move(rendered));
    }
    return scene;
}

int cmd_generate(const SourceSpec& spec, const std::string& region, const std::string& out_prefix) {
    return std::visit(
        [&](const auto& src) -> int {
            using S = typename std::decay_t<decltype(src)>::value_type;
            Box<S> box = parse_region<S>(region, source_dim(src));
            auto patch = enumerate_box(src, box, spec.id);
            std::cout << "points = " << patch.points.size() << "\n";
            std::cout << "uncertain = " << patch.uncertain.size() << "\n";
            if (!out_prefix.empty()) {
                write_file(out_prefix + ".csv", patch_csv(patch));
                write_file(out_prefix + ".json", patch_json(patch).dump(2) + "\n");
                if (!patch.uncertain.empty()) {
                    Patch<S> unc;
                    unc.source_id = patch.source_id;
                    unc.region = patch.region;
                    unc.points = patch.uncertain;
                    write_file(out_prefix + "-uncertain.csv", patch_csv(unc));
                }
            }
            return exit_ok;
        },
        spec.source);
}

int cmd_search(const SourceSpec& spec, const std::string& region, const std::string& margin,
               const std::string& out_prefix, int threads) {
    return std::visit(
        [&](const auto& src) -> int {
            using S = typename std::decay_t<decltype(src)>::value_type;
            if (source_dim(src) != 2)
                fail(Errc::invalid_config, "search runs on 2D sources only");
            Box<S> box = parse_region<S>(region, 2);
            S m = scalar_from_rational<S>(Rational::parse(margin));
            auto patch = enumerate_box(src, box, spec.id);
            auto outcome = largest_empty_polygon_dp(src, patch, m, threads);
            std::cout << "helly_lower_bound = " << outcome.max_vertices << "\n";
            std::cout << "status = " << cert_status_name(outcome.certificate.status) << "\n";
            if (outcome.search_uncertain) std::cout << "search_uncertain = true\n";
            if (!out_prefix.empty()) {
                Json j = certificate_json(outcome.certificate);
                j["algorithm"] = outcome.algorithm;
                j["search_uncertain"] = outcome.search_uncertain;
                write_file(out_prefix + ".cert.json", j.dump(2) + "\n");
                std::vector<std::vector<Point<S>>> polys;
                if (!outcome.certificate.vertices.empty())
                    polys.push_back(outcome.certificate.vertices);
                write_file(out_prefix + ".svg", render_svg(scene_of(patch, polys)));
            }
            if (outcome.max_vertices > 0 && outcome.certificate.status == CertStatus::refuted)
                return exit_contradiction;  // the searcher produced a non-empty polygon
            return exit_ok;
        },
        spec.source);
}

int cmd_verify(const SourceSpec& spec, const std::string& cert_path) {
    std::ifstream in(cert_path);
    if (!in) fail(Errc::invalid_config, "cannot open certificate: " + cert_path);
    Json j = Json::parse(in);
    return std::visit(
        [&](const auto& src) -> int {
            using S = typename std::decay_t<decltype(src)>::value_type;
            std::vector<Point<S>> verts;
            for (const auto& v : j.at("vertices")) verts.push_back(point_from_json<S>(v));
            std::vector<VertexProvenance> prov;
            if (j.contains("provenance"))
                for (const auto& p : j.at("provenance")) {
                    VertexProvenance vp;
                    vp.coset = p.value("coset", -1);
                    if (p.contains("preimage"))
                        vp.preimage = p.at("preimage").get<std::vector<long>>();
                    prov.push_back(std::move(vp));
                }
            auto cert = is_empty_hull(src, verts, prov.empty() ? nullptr : &prov, spec.id);
            std::cout << "status = " << cert_status_name(cert.status) << "\n";
            for (const auto& w : cert.witnesses) {
                std::cout << "witness =";
                for (const auto& c : w) std::cout << " " << scalar_json(c).dump();
                std::cout << "\n";
            }
            if (cert.status == CertStatus::verified) return exit_ok;
            if (cert.status == CertStatus::refuted) return 1;
            return exit_uncertain;
        },
        spec.source);
}

// Sharp two-dimensional crystal table in the familiar row layout.
int cmd_table() {
    std::cout << "k      |  1 |  2 |  3 |  4 |  5 | >=6\n";
    std::cout << "max. n |  4 |  6 |  7 |  9 | 10 | k+6\n";
    return exit_ok;
}

int cmd_bounds(const SourceSpec& spec, const std::string& preset_name, const std::string& region,
               const std::string& margin, int lift, const std::string& out_path, int threads) {
    return std::visit(
        [&](const auto& src) -> int {
            using Src = std::decay_t<decltype(src)>;
            using S = typename Src::value_type;
            BoundReport report = upper_bound_report(src, spec.id);
            EmptyHullCertificate<Rational> planar_cert;
            if constexpr (std::is_same_v<Src, Crystal<Rational>>) {
                if (!preset_name.empty() && preset_name != "ammann-beenker" &&
                    preset_name != "fibonacci" && preset_name != "penrose-debruijn") {
                    auto poly = preset_reference_polygon(preset_name);
                    planar_cert = is_empty_hull(src, poly, nullptr, spec.id);
                    if (planar_cert.status == CertStatus::verified)
                        report.lower = planar_cert.vertex_count();
                }
            }
            if (report.lower == 0 && !region.empty() && source_dim(src) == 2) {
                Box<S> box = parse_region<S>(region, 2);
                S m = scalar_from_rational<S>(Rational::parse(margin));
                auto patch = enumerate_box(src, box, spec.id);
                auto outcome = largest_empty_polygon_dp(src, patch, m, threads);
                if (outcome.certificate.status == CertStatus::verified)
                    report.lower = outcome.max_vertices;
            }
            Json extra;
            if (lift > 0) {
                if constexpr (std::is_same_v<Src, Crystal<Rational>>) {
                    if (planar_cert.status != CertStatus::verified)
                        fail(Errc::invalid_config,
                             "--lift needs a preset with a verified reference polygon");
                    ProductLift lifted = product_certificate(src, planar_cert, lift);
                    BoundReport lifted_report =
                        upper_bound_report(lifted.crystal, spec.id + "-lift" + std::to_string(lift));
                    lifted_report.lower = lifted.certificate.status == CertStatus::verified
                                              ? lifted.certificate.vertex_count()
                                              : 0;
                    lifted_report.consistent = lifted_report.lower <= lifted_report.upper;
                    std::cout << lifted_report.source_id << ": lower = " << lifted_report.lower
                              << ", upper = " << lifted_report.upper << " ("
                              << lifted_report.upper_provenance << ")\n";
                    extra["lift"] = bound_report_json(lifted_report);
                    extra["lift"]["certificate_status"] =
                        cert_status_name(lifted.certificate.status);
                    if (!lifted_report.consistent) return exit_inconsistent;
                } else {
                    fail(Errc::invalid_config, "--lift applies to 2D rational crystals");
                }
            }
            report.consistent = report.lower <= report.upper;
            std::cout << report.source_id << ": lower = " << report.lower
                      << ", upper = " << report.upper << " (" << report.upper_provenance << ")\n";
            if (!out_path.empty()) {
                Json j = bound_report_json(report);
                if (!extra.is_null()) j["lift"] = extra["lift"];
                write_file(out_path, j.dump(2) + "\n");
            }
            return report.consistent ? exit_ok : exit_inconsistent;
        },
        spec.source);
}

std::vector<VPolytope<Rational>> random_rectangles(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<VPolytope<Rational>> family;
    for (int i = 0; i < n; ++i) {
        long x0 = rng.range(0, 28), y0 = rng.range(0, 28);
        long w = rng.range(4, 12), h = rng.range(4, 12);
        std::vector<Point<Rational>> pts = {
            {Rational(x0, 4), Rational(y0, 4)},
            {Rational(x0 + w, 4), Rational(y0, 4)},
            {Rational(x0 + w, 4), Rational(y0 + h, 4)},
            {Rational(x0, 4), Rational(y0 + h, 4)}};
        family.push_back(convex_hull_2d(pts));
    }
    return family;
}

int cmd_fractional(const SourceSpec& spec, const std::string& family_path, int random_n,
                   std::uint64_t seed, const std::string& out_path, int threads) {
    std::vector<VPolytope<Rational>> family;
    if (!family_path.empty()) {
        std::ifstream in(family_path);
        if (!in) fail(Errc::invalid_config, "cannot open family file: " + family_path);
        family = family_from_json(Json::parse(in));
    } else if (random_n > 0) {
        family = random_rectangles(random_n, seed);
    } else {
        fail(Errc::invalid_config, "fractional needs --family or --random");
    }
    return std::visit(
        [&](const auto& src) -> int {
            using Src = std::decay_t<decltype(src)>;
            if constexpr (std::is_same_v<typename Src::value_type, Rational>) {
                FractionalReport rep = fractional_experiment(src, family, threads);
                std::cout << "n = " << rep.n << "\n";
                std::cout << "alpha = " << rep.alpha.to_string() << "\n";
                std::cout << "beta_observed = " << rep.beta_observed.to_string() << "\n";
                if (!out_path.empty())
                    write_file(out_path, fractional_report_json(rep).dump(2) + "\n");
                return exit_ok;
            } else {
                fail(Errc::invalid_config, "fractional experiments run over rational sources");
            }
        },
        spec.source);
}

int cmd_presets() {
    for (const auto& name : preset_names()) {
        auto spec = preset(name);
        std::visit(
            [&](const auto& src) {
                using Src = std::decay_t<decltype(src)>;
                BoundReport r = upper_bound_report(src, name);
                std::cout << name << ": ";
                if constexpr (requires { src.copies(); }) {
                    std::cout << "crystal d=" << src.dim() << " k=" << src.copies();
                } else {
                    std::cout << "scheme d=" << src.d << " k=" << src.k
                              << " pi1-injective-up-to-radius-"
                              << src.injectivity_checked_radius << "="
                              << (src.injective_up_to_radius ? "yes" : "no");
                }
                std::cout << " backend=" << scalar_traits<typename Src::value_type>::name
                          << " upper=" << r.upper << " (" << r.upper_provenance << ")\n";
            },
            spec);
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crystals, cut-and-project sets, and their empty-polygon Helly certificates"};
    app.require_subcommand(1);

    std::string preset_name, config_path, region, margin = "0", out_prefix, cert_path,
                family_path, out_path;
    int threads = 1, lift = 0, random_n = 0;
    unsigned precision = 100;
    std::uint64_t seed = kDefaultSeed;

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("--preset", preset_name, "preset name (see `presets`)");
        cmd->add_option("--config", config_path, "source config JSON file");
        cmd->add_option("--precision", precision, "certified-float precision in bits");
    };

    auto* gen = app.add_subcommand("generate", "enumerate a saturated patch");
    add_source(gen);
    gen->add_option("--region", region, "box lo..hi, comma separated")->required();
    gen->add_option("--out", out_prefix, "output prefix (.csv/.json)");

    auto* search = app.add_subcommand("search", "largest empty polygon search (lower bound)");
    add_source(search);
    search->add_option("--region", region, "box lo..hi, comma separated")->required();
    search->add_option("--margin", margin, "candidate-region margin");
    search->add_option("--threads", threads, "worker threads");
    search->add_option("--out", out_prefix, "output prefix (.cert.json/.svg)");

    auto* verify = app.add_subcommand("verify", "verify an empty-hull certificate");
    add_source(verify);
    verify->add_option("--cert", cert_path, "certificate JSON")->required();

    auto* bounds = app.add_subcommand("bounds", "Helly bound report (lower vs theorem upper)");
    bool show_table = false;
    bounds->add_flag("--table", show_table, "print the sharp 2D crystal table");
    add_source(bounds);
    bounds->add_option("--region", region, "search region for the lower bound");
    bounds->add_option("--margin", margin, "candidate-region margin");
    bounds->add_option("--lift", lift, "extra product dimensions for the certificate lift");
    bounds->add_option("--threads", threads, "worker threads");
    bounds->add_option("--out", out_path, "report JSON path");

    auto* fractional = app.add_subcommand("fractional", "fractional Helly experiment");
    add_source(fractional);
    fractional->add_option("--family", family_path, "family JSON ({\"polygons\": [...]})");
    fractional->add_option("--random", random_n, "generate this many random rectangles");
    fractional->add_option("--seed", seed, "RNG seed");
    fractional->add_option("--threads", threads, "worker threads");
    fractional->add_option("--out", out_path, "report JSON path");

    auto* presets_cmd = app.add_subcommand("presets", "list presets");

    CLI11_PARSE(app, argc, argv);

    try {
        CertFloat::set_default_precision(precision);
        if (presets_cmd->parsed()) return cmd_presets();
        if (bounds->parsed() && show_table) return cmd_table();
        SourceSpec spec = load_source(preset_name, config_path);
        if (gen->parsed()) return cmd_generate(spec, region, out_prefix);
        if (search->parsed()) return cmd_search(spec, region, margin, out_prefix, threads);
        if (verify->parsed()) return cmd_verify(spec, cert_path);
        if (bounds->parsed())
            return cmd_bounds(spec, preset_name, region, margin, lift, out_path, threads);
        if (fractional->parsed())
            return cmd_fractional(spec, family_path, random_n, seed, out_path, threads);
    } catch (const helly::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.code() == helly::Errc::uncertain_predicate ||
            e.code() == helly::Errc::uncertain_divisor || e.code() == helly::Errc::uncertain_verdict)
            return exit_uncertain;
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    }
    return exit_config;
}
