#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string binary() {
    const char* env = std::getenv("KOROVKIN_LAB");
    REQUIRE_MESSAGE(env != nullptr, "KOROVKIN_LAB env var must point at the CLI binary");
    return env;
}

int run(const std::string& config, const std::string& outdir) {
    std::string cmd = binary() + " --config " + config + " --output-dir " + outdir +
                      " --quiet > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

fs::path write_config(const std::string& name, const std::string& body) {
    fs::path dir = fs::temp_directory_path() / "korovkin-cli-tests";
    fs::create_directories(dir);
    fs::path file = dir / name;
    std::ofstream(file) << body;
    return file;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// All CSVs in a directory, concatenated in filename order with the
// timestamp segment stripped (filenames are <tag>-<stamp>.csv).
std::string csv_bodies(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".csv") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::string all;
    for (const auto& f : files) all += slurp(f);
    return all;
}

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "korovkin-cli-tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("config errors exit with status 2 and name the field") {
    fs::path bad = write_config("bad_schedule.json", R"({"command":"beispiel6","schedule":[32,8]})");
    CHECK(run(bad.string(), fresh_dir("bad1").string()) == 2);

    fs::path unknown = write_config("unknown_key.json", R"({"command":"axioms","gridm":65})");
    CHECK(run(unknown.string(), fresh_dir("bad2").string()) == 2);

    fs::path coarse = write_config("coarse.json", R"({"command":"axioms","grid-m":5})");
    CHECK(run(coarse.string(), fresh_dir("bad3").string()) == 2);

    CHECK(run("/nonexistent/config.json", fresh_dir("bad4").string()) == 2);
}

TEST_CASE("beispiel6 defaults pass and rerun is byte-identical") {
    fs::path cfg = write_config("b6.json",
        R"({"command":"beispiel6","grid-m":129,"schedule":[8,32,128]})");
    fs::path d1 = fresh_dir("b6a"), d2 = fresh_dir("b6b");
    CHECK(run(cfg.string(), d1.string()) == 0);
    CHECK(run(cfg.string(), d2.string()) == 0);
    std::string a = csv_bodies(d1), b = csv_bodies(d2);
    CHECK(!a.empty());
    CHECK(a == b);
    CHECK(a.find("target,n,error,p,family\n") != std::string::npos);
    CHECK(slurp(d1 / "summary.txt").find("verdict: PASS") != std::string::npos);
}

TEST_CASE("determinacy with the affine set reports a finding, not a failure") {
    fs::path cfg = write_config("det.json",
        R"({"command":"determinacy","test-set":[0,1],"grid-m":33})");
    fs::path dir = fresh_dir("det");
    CHECK(run(cfg.string(), dir.string()) == 0);
    CHECK(slurp(dir / "summary.txt").find("NOT a Korovkin set") != std::string::npos);
    CHECK(csv_bodies(dir).find("x,determined,max_spread,probe_objective\n") !=
          std::string::npos);
}

TEST_CASE("lattice campaign is seed-deterministic") {
    fs::path cfg = write_config("lc.json", R"({"command":"lattice-campaign","seed":99})");
    fs::path d1 = fresh_dir("lc1"), d2 = fresh_dir("lc2");
    CHECK(run(cfg.string(), d1.string()) == 0);
    CHECK(run(cfg.string(), d2.string()) == 0);
    CHECK(csv_bodies(d1) == csv_bodies(d2));

    fs::path other = write_config("lc_other.json",
        R"({"command":"lattice-campaign","seed":100})");
    fs::path d3 = fresh_dir("lc3");
    CHECK(run(other.string(), d3.string()) == 0);
    CHECK(csv_bodies(d1) != csv_bodies(d3));
}

TEST_CASE("axioms command passes and emits the axiom csv") {
    fs::path cfg = write_config("ax.json", R"({"command":"axioms","grid-m":65,"seed":7})");
    fs::path dir = fresh_dir("ax");
    CHECK(run(cfg.string(), dir.string()) == 0);
    std::string body = csv_bodies(dir);
    CHECK(body.find("axiom,instance,parameter,pass,detail\n") != std::string::npos);
    CHECK(slurp(dir / "summary.txt").find("verdict: PASS") != std::string::npos);
}

TEST_CASE("csv fields never contain unescaped commas beyond the header arity") {
    fs::path cfg = write_config("kc.json", R"({"command":"korovkin-check","test-set":[0,1,2]})");
    fs::path dir = fresh_dir("kc");
    CHECK(run(cfg.string(), dir.string()) == 0);
    std::string body = csv_bodies(dir);
    std::istringstream in(body);
    std::string header;
    std::getline(in, header);
    auto count = [](const std::string& s) { return std::count(s.begin(), s.end(), ','); };
    long arity = count(header);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) CHECK(count(line) == arity);
}
