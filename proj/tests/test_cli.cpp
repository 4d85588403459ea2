#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

// Drives the installed binary and checks the exit-code contract:
// 0 success/verified, 1 property fails, 2 input error, 3 internal error.

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(BFACET_BIN) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string data(const std::string& name) { return std::string(BFACET_DATA_DIR) + "/" + name; }

std::string capture(const std::string& args) {
    std::string cmd = std::string(BFACET_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
}

}  // namespace

TEST_CASE("classify exits 0 and reports the class") {
    CHECK(run("classify " + data("flat_border_5pt.pts")) == 0);
    std::string out = capture("--format structured classify " + data("flat_border_5pt.pts"));
    CHECK(out.find("\"FlatBorder\"") != std::string::npos);
    CHECK(out.find("\"holds\": false") != std::string::npos);
    CHECK(out.find("counterexample") != std::string::npos);

    std::string cross = capture("--format structured classify " + data("cross_polytope.pts"));
    CHECK(cross.find("\"CrossPolytope\"") != std::string::npos);
    CHECK(cross.find("\"holds\": true") != std::string::npos);
}

TEST_CASE("check uses exit code 1 for failing properties") {
    CHECK(run("check b-facet " + data("cross_polytope.pts")) == 0);
    CHECK(run("check b-facet " + data("flat_border_5pt.pts")) == 1);
    CHECK(run("check marked-b-polytope " + data("square_strip.pts")) == 0);
    CHECK(run("check v-faces " + data("cross_polytope.pts")) == 0);
}

TEST_CASE("input errors exit 2") {
    CHECK(run("classify " + data("mixed_sign.pts")) == 2);       // not dim 4
    CHECK(run("check b-facet " + data("mixed_sign.pts")) == 2);  // mixed-sign covector
    CHECK(run("classify /nonexistent/file.pts") == 2);
    CHECK(run("check no-such-predicate " + data("cross_polytope.pts")) == 2);
    CHECK(run("census theorem --max-points 2") == 2);  // invalid bounds
}

TEST_CASE("examples corpus self-check passes") {
    CHECK(run("examples") == 0);
}

TEST_CASE("census commands verify at small bounds") {
    CHECK(run("census theorem --max-covector 1 --max-offset 2 --max-points 6") == 0);
    CHECK(run("census theorem --max-covector 1 --max-offset 2 --max-points 10") == 0);
    CHECK(run("census remark --max-covector 1 --max-offset 2 --max-points 6 --samples 5") == 0);
    CHECK(run("census 2d --poly-cap 2 --poly-max-points 4 --marked-cap 2 --marked-max-points 4 --one-d-max 6") == 0);
    CHECK(run("census exotic --a-max 2 --star-max 4") == 0);
}

TEST_CASE("structured census output is stable json") {
    std::string args = "--format structured census theorem --max-covector 1 --max-offset 2 --max-points 6";
    std::string a = capture(args);
    std::string b = capture(args + " --jobs 2");
    auto strip = [](const std::string& s) {
        nlohmann::json doc = nlohmann::json::parse(s);
        doc.erase("elapsed_ms");
        return doc.dump();
    };
    CHECK(strip(a) == strip(b));
    CHECK(a.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("round trip through a written file") {
    std::string path = "/tmp/bfacet_cli_roundtrip.pts";
    {
        std::ofstream out(path);
        out << "dim 4\n0 0 0 3\n0 0 2 1\n2 0 0 1\n0 1 1 1\n1 1 0 1\n";
    }
    std::string out = capture("--format structured classify " + path);
    CHECK(out.find("\"Pyramid\"") != std::string::npos);
    std::remove(path.c_str());
}
