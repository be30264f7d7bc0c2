// End-to-end checks of the command-line surface: exit codes, file outputs,
// certificate round trips, and SVG shape. Takes the tool path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;
std::string g_tool;
fs::path g_dir;

void check(bool ok, const std::string& what) {
    if (!ok) {
        std::cout << "[FAIL] " << what << "\n";
        ++g_failures;
    } else {
        std::cout << "[ok] " << what << "\n";
    }
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& tag) {
    fs::path out_file = g_dir / (tag + ".log");
    std::string cmd = g_tool + " " + args + " > " + out_file.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return {rc == -1 ? -1 : WEXITSTATUS(rc), ss.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

size_t count_occurrences(const std::string& hay, const std::string& needle) {
    size_t n = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-hellytool>\n";
        return 64;
    }
    g_tool = argv[1];
    g_dir = fs::temp_directory_path() / "helly-cli-tests";
    std::error_code ec;
    fs::remove_all(g_dir, ec);
    fs::create_directories(g_dir);

    // unknown preset and missing source are config errors (exit 2)
    check(run("generate --preset nonsense --region 0,0,1,1", "bad-preset").exit_code == 2,
          "unknown preset exits 2");
    check(run("search --region 0,0,1,1", "no-source").exit_code == 2, "missing source exits 2");
    check(run("generate --preset z2 --region 5,5,0,0", "empty-region").exit_code == 2,
          "empty region exits 2");

    // search produces a certificate and an SVG with exactly one polygon
    auto s = run("search --preset paper-4crystal --region -2,-2,3,3 --margin 1 --out " +
                     (g_dir / "c4").string(),
                 "search4");
    check(s.exit_code == 0, "search exits 0");
    check(s.out.find("helly_lower_bound = 9") != std::string::npos, "search reports 9");
    std::string svg = slurp(g_dir / "c4.svg");
    check(svg.rfind("<?xml", 0) == 0, "svg starts with an xml declaration");
    check(count_occurrences(svg, "<polygon") == 1, "svg holds one polygon element");
    check(count_occurrences(svg, "<circle") > 50, "svg renders the patch points");
    check(svg.find("</svg>") != std::string::npos, "svg is closed");

    // verify accepts the emitted certificate
    auto v = run("verify --preset paper-4crystal --cert " + (g_dir / "c4.cert.json").string(),
                 "verify4");
    check(v.exit_code == 0 && v.out.find("status = VERIFIED") != std::string::npos,
          "emitted certificate verifies");

    // a refutable certificate exits 1 and prints a witness
    {
        std::ofstream bad(g_dir / "bad.cert.json");
        bad << R"({"vertices": [["0","0"],["2","0"],["2","2"],["0","2"]]})";
    }
    auto r = run("verify --preset z2 --cert " + (g_dir / "bad.cert.json").string(), "refute");
    check(r.exit_code == 1 && r.out.find("status = REFUTED") != std::string::npos,
          "non-empty square is refuted with exit 1");
    check(r.out.find("witness") != std::string::npos, "refutation prints a witness");

    // a vertex outside the set is a hard error
    {
        std::ofstream bad(g_dir / "notin.cert.json");
        bad << R"({"vertices": [["0","0"],["1","0"],["1/3","2"]]})";
    }
    check(run("verify --preset z2 --cert " + (g_dir / "notin.cert.json").string(), "notin")
                  .exit_code == 2,
          "vertex outside the set exits 2");

    // generate writes CSV rows for every point, 1D sources included
    auto g = run("generate --preset fibonacci --region 0,10 --out " + (g_dir / "fib").string(),
                 "genfib");
    check(g.exit_code == 0, "1D generate exits 0");
    std::string csv = slurp(g_dir / "fib.csv");
    size_t rows = count_occurrences(csv, "\n") - 1;  // minus header
    std::string points_line = g.out.substr(g.out.find("points = ") + 9);
    check(rows == static_cast<size_t>(std::stol(points_line)), "csv row count matches the patch");

    // config files load and search
    {
        std::ofstream cfg(g_dir / "hex.json");
        cfg << R"({"type":"crystal","backend":"rational",)"
            << R"("basis":[["1","0"],["0","1"]],)"
            << R"("translates":[["0","0"],["2/5","1/2"]]})";
    }
    auto cs = run("search --config " + (g_dir / "hex.json").string() +
                      " --region -2,-2,3,3 --margin 1",
                  "cfgsearch");
    check(cs.exit_code == 0 && cs.out.find("helly_lower_bound = 6") != std::string::npos,
          "config-file crystal searches to 6");

    // the sharp table in the familiar layout
    auto tb = run("bounds --table", "table");
    check(tb.exit_code == 0 && tb.out.find("max. n |  4 |  6 |  7 |  9 | 10 | k+6") !=
                                   std::string::npos,
          "bounds --table prints the sharp row");

    // bounds with a lift reports both reports and exits consistently
    auto bl = run("bounds --preset paper-6crystal --lift 2 --out " + (g_dir / "b.json").string(),
                  "lift2");
    check(bl.exit_code == 0 && bl.out.find("lower = 48, upper = 96") != std::string::npos,
          "two-step lift reports 48 of 96");
    auto bl1 = run("bounds --preset paper-6crystal --lift 1", "lift1");
    check(bl1.exit_code == 0 && bl1.out.find("lower = 24, upper = 48") != std::string::npos,
          "one-step lift reports 24 of 48");

    // bounds can derive the lower bound by searching a region
    auto bab = run("bounds --preset ammann-beenker --region -5,-5,5,5 --margin 1", "bab");
    check(bab.exit_code == 0 && bab.out.find("upper = 16") != std::string::npos,
          "octagonal scheme upper bound is 16");
    check(bab.out.find("lower = 8") != std::string::npos, "octagonal search certifies 8");

    // 1D sources cannot be searched
    check(run("search --preset fibonacci --region 0,10 --margin 1", "fib1d").exit_code == 2,
          "1D search exits 2");

    // fractional from a family file: an all-overlapping family
    {
        std::ofstream fam(g_dir / "family.json");
        fam << R"({"polygons": [)";
        for (int i = 0; i < 5; ++i)
            fam << (i ? "," : "") << R"([["-3","-3"],["3","-3"],["3","3"],["-3","3"]])";
        fam << "]}";
    }
    auto fr = run("fractional --preset z2 --family " + (g_dir / "family.json").string(), "fam");
    check(fr.exit_code == 0 && fr.out.find("alpha = 1") != std::string::npos &&
              fr.out.find("beta_observed = 1") != std::string::npos,
          "family-file fractional reports alpha = beta = 1");

    // certified-float precision is configurable
    auto pz = run("generate --preset penrose-debruijn --region -2,-2,2,2 --precision 160 --out " +
                      (g_dir / "pz").string(),
                  "pz160");
    check(pz.exit_code == 0, "penrose at 160 bits exits 0");

    // scheme certificates round-trip through JSON with their preimages
    auto abs_ = run("search --preset ammann-beenker --region -3,-3,3,3 --margin 1 --out " +
                        (g_dir / "ab").string(),
                    "absearch");
    check(abs_.exit_code == 0, "octagonal search exits 0");
    auto abv = run("verify --preset ammann-beenker --cert " + (g_dir / "ab.cert.json").string(),
                   "abverify");
    check(abv.exit_code == 0 && abv.out.find("status = VERIFIED") != std::string::npos,
          "octagonal certificate verifies from file");
    auto pzs = run("search --preset penrose-debruijn --region -4,-4,4,4 --margin 1 --out " +
                       (g_dir / "pzc").string(),
                   "pzsearch");
    check(pzs.exit_code == 0, "penrose search exits 0");
    auto pzv = run("verify --preset penrose-debruijn --cert " + (g_dir / "pzc.cert.json").string(),
                   "pzverify");
    check(pzv.exit_code == 0 && pzv.out.find("status = VERIFIED") != std::string::npos,
          "penrose certificate verifies from file via preimages");

    std::cout << (g_failures == 0 ? "cli checks passed\n"
                                  : std::to_string(g_failures) + " cli checks FAILED\n");
    return g_failures == 0 ? 0 : 1;
}
