#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rainbow/cli.hpp"
#include "rainbow/io.hpp"

using namespace rainbow;
namespace fs = std::filesystem;

namespace {

struct Workspace {
    fs::path dir;

    Workspace() : dir(fs::temp_directory_path() / "rainbow_cli_test")
    {
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~Workspace() { fs::remove_all(dir); }

    std::string file(const std::string& name) const { return (dir / name).string(); }
};

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    args.insert(args.begin(), "rainbow");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("construct, color, verify")
{
    Workspace ws;
    const auto g = ws.file("g.json");
    REQUIRE(run({"construct", "--a", "3", "--b", "3", "--out", g}).code == 0);
    const json gj = read_json_file(g);
    CHECK(gj.at("n") == 21);
    CHECK(gj.at("edges").size() == 55);
    CHECK(gj.at("labels").at("cycle_n") == 18);

    const auto rc = ws.file("rc.json");
    REQUIRE(run({"color", "--graph", g, "--scheme", "rc", "--out", rc}).code == 0);
    CHECK(read_json_file(rc).at("k") == 3);

    const auto report = ws.file("r.json");
    CHECK(run({"verify", "--graph", g, "--coloring", rc, "--mode", "rainbow", "--report", report}).code == 0);
    CHECK(read_json_file(report).at("passed") == true);

    const auto strong = run({"verify", "--graph", g, "--coloring", rc, "--mode", "strong", "--report", report});
    CHECK(strong.code == 1);
    const json r = read_json_file(report);
    CHECK(r.at("passed") == false);
    CHECK(r.at("violating_pair").is_array());
    CHECK(r.at("mode") == "strong");

    const auto src = ws.file("src.json");
    REQUIRE(run({"color", "--graph", g, "--scheme", "src", "--out", src}).code == 0);
    CHECK(run({"verify", "--graph", g, "--coloring", src, "--mode", "strong", "--report", report}).code == 0);
}

TEST_CASE("export json reproduces the constructed file; dot carries colors")
{
    Workspace ws;
    const auto g = ws.file("g.json");
    REQUIRE(run({"construct", "--a", "4", "--b", "5", "--out", g}).code == 0);
    const auto copy = ws.file("copy.json");
    REQUIRE(run({"export", "--graph", g, "--format", "json", "--out", copy}).code == 0);
    CHECK(slurp(copy) == slurp(g));

    const auto c = ws.file("c.json");
    REQUIRE(run({"color", "--graph", g, "--scheme", "src", "--out", c}).code == 0);
    const auto dot = ws.file("g.dot");
    REQUIRE(run({"export", "--graph", g, "--coloring", c, "--format", "dot", "--out", dot}).code == 0);
    const std::string text = slurp(dot);
    CHECK(text.rfind("graph G {", 0) == 0);
    CHECK(text.find("label=\"5\", color=\"" + dot_palette()[4] + "\"") != std::string::npos);
    CHECK(text.find("[label=\"w\"]") != std::string::npos);
}

TEST_CASE("solve")
{
    Workspace ws;
    const auto g = ws.file("c6.json");
    write_file_atomic(g, canonical_dump(to_json(build_cycle(6))));
    const auto out = ws.file("s.json");
    REQUIRE(run({"solve", "--graph", g, "--kind", "src", "--out", out}).code == 0);
    const json s = read_json_file(out);
    CHECK(s.at("value") == 3);
    CHECK(s.at("kind") == "src");

    CHECK(run({"solve", "--graph", g, "--kind", "rc", "--k-max", "2", "--out", out}).code == 2);

    const auto w = ws.file("w.json");
    REQUIRE(run({"construct", "--a", "3", "--b", "3", "--out", w}).code == 0);
    CHECK(run({"solve", "--graph", w, "--kind", "rc", "--out", out}).code == 2);
}

TEST_CASE("audit")
{
    Workspace ws;
    const auto wg = build_witness({3, 3});
    const auto base = src_coloring(wg);
    std::vector<int> colors(base.colors().begin(), base.colors().end());
    for (int& x : colors) {
        x = std::min(x, 2);
    }
    const auto c = ws.file("c.json");
    write_file_atomic(c, canonical_dump(to_json(EdgeColoring(2, colors))));
    const auto t = ws.file("t.json");
    REQUIRE(run({"audit", "--a", "3", "--b", "3", "--coloring", c, "--out", t}).code == 0);
    CHECK(read_json_file(t).at("outcome") == "trace");

    const auto full = ws.file("full.json");
    write_file_atomic(full, canonical_dump(to_json(src_coloring(wg))));
    CHECK(run({"audit", "--a", "3", "--b", "3", "--coloring", full, "--out", t}).code == 65);
}

TEST_CASE("sweep")
{
    Workspace ws;
    const auto report = ws.file("sweep.json");
    const auto result = run({"sweep", "--a-max", "3", "--b-max", "4", "--samples", "6", "--report", report});
    CHECK(result.code == 0);
    const json j = read_json_file(report);
    CHECK(j.at("passed") == true);
    CHECK(j.at("points").size() == 2);
    CHECK(j.at("seed") == 0);
    CHECK(result.out.find("G(3,4) ok") != std::string::npos);

    // deterministic for a fixed seed
    const auto again = ws.file("again.json");
    run({"sweep", "--a-max", "3", "--b-max", "4", "--samples", "6", "--report", again});
    CHECK(slurp(again) == slurp(report));
}

TEST_CASE("exit codes for bad input")
{
    Workspace ws;
    const auto out = ws.file("o.json");
    CHECK(run({"construct", "--a", "2", "--b", "3", "--out", out}).code == 65);
    CHECK(run({"construct", "--a", "3", "--out", out}).code == 64);
    CHECK(run({"frobnicate"}).code == 64);
    CHECK(run({}).code == 64);
    CHECK(run({"color", "--graph", ws.file("missing.json"), "--scheme", "rc", "--out", out}).code == 64);
    CHECK(run({"color", "--graph", out, "--scheme", "xyz", "--out", out}).code == 64);

    const auto bad = ws.file("bad.json");
    std::ofstream(bad) << R"({"n":3,"edges":[[1,2],[0,1]]})";
    CHECK(run({"export", "--graph", bad, "--out", ws.file("x.dot")}).code == 64);

    const auto plain = ws.file("p.json");
    write_file_atomic(plain, canonical_dump(to_json(build_cycle(5))));
    CHECK(run({"color", "--graph", plain, "--scheme", "rc", "--out", out}).code == 65);

    const auto short_coloring = ws.file("sc.json");
    write_file_atomic(short_coloring, canonical_dump(to_json(EdgeColoring::constant(2))));
    CHECK(run({"verify", "--graph", plain, "--coloring", short_coloring, "--mode", "rainbow", "--report", out}).code
          == 65);

    CHECK(run({"--help"}).code == 0);
}
