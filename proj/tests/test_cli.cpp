#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct Run {
    int code = -1;
    std::string out;
};

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "vgr_cli_tests";
    fs::create_directories(dir);
    return dir;
}

Run vgr(const std::string& args) {
    const fs::path out = scratch_dir() / "stdout.txt";
    const std::string cmd = std::string(VGR_BINARY) + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream text;
    text << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text.str()};
}

std::string write_file(const std::string& name, const std::string& text) {
    const fs::path path = scratch_dir() / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("solve reports the class and the cycle") {
    const std::string k3 = write_file("k3.txt", "3 3\n0 1\n1 2\n2 0\n");
    const Run run = vgr("solve " + k3);
    CHECK(run.code == 0);
    CHECK(run.out == "# tower\n0 1 2\n");

    const Run tri = vgr("solve --kind pseudo-triangle " + k3);
    CHECK(tri.code == 0);
    CHECK(tri.out == "0 1 2\n");
}

TEST_CASE("exit codes") {
    const std::string k33 =
        write_file("k33.txt", "6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n");
    CHECK(vgr("solve " + k33).code == 2);
    CHECK(vgr("solve /nonexistent/graph.txt").code == 1);
    CHECK(vgr("solve " + write_file("bad.txt", "3 1\n0 0\n")).code == 1);
    CHECK(vgr("gen --n 2").code == 1);
    CHECK(vgr("--help").code == 0);
    CHECK(vgr("frobnicate").code == 1);
}

TEST_CASE("gen, visgraph, solve and verify compose") {
    const std::string poly = (scratch_dir() / "pt.poly").string();
    const std::string graph = (scratch_dir() / "pt.graph").string();
    REQUIRE(vgr("gen --kind pseudo-triangle --n 12 --seed 4 -o " + poly).code == 0);
    REQUIRE(vgr("visgraph " + poly + " -o " + graph).code == 0);
    const Run solved = vgr("solve --kind pseudo-triangle " + graph);
    CHECK(solved.code == 0);
    CHECK(solved.out.find("0 1 2 3 4 5 6 7 8 9 10 11\n") != std::string::npos);

    const std::string truth = write_file("truth.txt", "0 1 2 3 4 5 6 7 8 9 10 11\n");
    CHECK(vgr("verify " + graph + " " + truth).code == 0);
    const std::string wrong = write_file("wrong.txt", "0 2 1 3 4 5 6 7 8 9 10 11\n");
    CHECK(vgr("verify " + graph + " " + wrong).code == 2);
}

TEST_CASE("json report") {
    const std::string graph = write_file("t5.txt", "5 8\n0 1\n1 2\n2 3\n3 4\n4 0\n1 4\n1 3\n2 4\n");
    const Run run = vgr("solve --json --kind tower " + graph);
    CHECK(run.code == 0);
    CHECK(run.out.find("\"kind\"") != std::string::npos);
    CHECK(run.out.find("\"candidates\"") != std::string::npos);
}

TEST_CASE("bench prints a CSV header and one row per size") {
    const Run run = vgr("bench --kind pseudo-triangle --sizes 8,12 --count 2");
    CHECK(run.code == 0);
    CHECK(run.out.rfind("kind,n,m,millis,candidates\n", 0) == 0);
    std::size_t lines = 0;
    for (char c : run.out) lines += c == '\n';
    CHECK(lines >= 3);
}

TEST_CASE("render writes SVG") {
    const std::string poly = (scratch_dir() / "tower.poly").string();
    REQUIRE(vgr("gen --kind tower --n 8 --seed 1 -o " + poly).code == 0);
    const Run run = vgr("render --edges " + poly);
    CHECK(run.code == 0);
    CHECK(run.out.find("<svg") != std::string::npos);
    CHECK(run.out.find("<line") != std::string::npos);
}
