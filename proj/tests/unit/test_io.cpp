#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "rainbow/error.hpp"
#include "rainbow/io.hpp"

using namespace rainbow;

TEST_CASE("graph json is canonical and round-trips byte for byte")
{
    const Graph c4 = build_cycle(4);
    const std::string text = canonical_dump(to_json(c4));
    CHECK(text == "{\"edges\":[[0,1],[0,3],[1,2],[2,3]],\"n\":4}\n");
    const Graph back = graph_from_json(json::parse(text));
    CHECK(back == c4);
    CHECK(canonical_dump(to_json(back)) == text);

    for (int b = 3; b <= 5; ++b) {
        const auto wg = build_witness({3, b});
        const std::string w = canonical_dump(to_json(wg));
        const auto reloaded = witness_from_json(json::parse(w));
        CHECK(canonical_dump(to_json(reloaded)) == w);
        CHECK(reloaded.graph() == wg.graph());
    }
}

TEST_CASE("graph loader rejects rather than normalizes")
{
    auto load = [](const char* text) { return graph_from_json(json::parse(text)); };
    CHECK_THROWS_AS(load(R"({"n":3,"edges":[[1,0],[1,2]]})"), ParseError);
    CHECK_THROWS_AS(load(R"({"n":3,"edges":[[1,2],[0,1]]})"), ParseError);
    CHECK_THROWS_AS(load(R"({"n":3,"edges":[[0,1],[0,1],[1,2]]})"), ParseError);
    CHECK_THROWS_AS(load(R"({"n":4,"edges":[[0,1],[2,3]]})"), ParseError);
    CHECK_THROWS_AS(load(R"({"n":3,"edges":[[0,1,2]]})"), ParseError);
    CHECK_THROWS_AS(load(R"({"n":"3","edges":[]})"), ParseError);
    CHECK_THROWS_AS(load(R"({"edges":[[0,1]]})"), ParseError);
    CHECK_THROWS_AS(load(R"([1,2])"), ParseError);
    CHECK_NOTHROW(load(R"({"n":2,"edges":[[0,1]]})"));
}

TEST_CASE("witness labels")
{
    const auto wg = build_witness({4, 5});
    const json j = to_json(wg);
    const json& labels = j.at("labels");
    CHECK(labels.at("a") == 4);
    CHECK(labels.at("b") == 5);
    CHECK(labels.at("cycle_n") == 45);
    CHECK(labels.at("w") == 45);
    CHECK(labels.at("v") == 46);
    CHECK(labels.at("path") == json::array({48, 47}));
    CHECK(labels.at("cycle").size() == 45);
    CHECK(has_witness_labels(j));
    CHECK_FALSE(has_witness_labels(to_json(wg.graph())));

    json tampered = j;
    tampered["labels"]["w"] = 46;
    CHECK_THROWS_AS(witness_from_json(tampered), ParseError);
    json wrong_graph = to_json(build_witness({4, 6}));
    wrong_graph["labels"] = labels;
    CHECK_THROWS_AS(witness_from_json(wrong_graph), ParseError);
    CHECK_THROWS_AS(witness_from_json(to_json(wg.graph())), ParseError);
}

TEST_CASE("coloring json")
{
    const EdgeColoring c(3, {1, 3, 2});
    CHECK(canonical_dump(to_json(c)) == "{\"colors\":[1,3,2],\"k\":3}\n");
    CHECK(coloring_from_json(to_json(c)) == c);
    CHECK_THROWS_AS(coloring_from_json(json::parse(R"({"k":2,"colors":[1,3]})")), ParseError);
    CHECK_THROWS_AS(coloring_from_json(json::parse(R"({"k":0,"colors":[]})")), ParseError);
    CHECK_THROWS_AS(coloring_from_json(json::parse(R"({"colors":[1]})")), ParseError);
}

TEST_CASE("report, solve and audit json")
{
    const auto wg = build_witness({3, 3});
    const auto failed = is_strong_rainbow_connected(wg.graph(), rc_coloring(wg));
    const json r = to_json(failed);
    CHECK(r.at("mode") == "strong");
    CHECK(r.at("passed") == false);
    CHECK(r.at("violating_pair").is_array());
    CHECK(r.at("checked_pairs") == failed.checked_pairs);
    CHECK(r.size() == 4);

    const json ok = to_json(is_rainbow_connected(wg.graph(), rc_coloring(wg)));
    CHECK(ok.at("violating_pair").is_null());
    CHECK(ok.at("checked_pairs") == 210);

    const json s = to_json(rc_exact(build_cycle(4)));
    CHECK(s.at("kind") == "rc");
    CHECK(s.at("value") == 2);
    CHECK(s.at("certificate").at("colors").size() == 4);
    CHECK(s.contains("colorings_tested"));

    const auto base = src_coloring(wg);

    std::vector<int> colors(base.colors().begin(), base.colors().end());
    for (int& x : colors) {
        x = std::min(x, 2);
    }
    const json t = to_json(audit_lower_bound(wg, EdgeColoring(2, colors)));
    CHECK(t.at("outcome") == "trace");
    CHECK(t.at("set_a_class").at("edges").size() >= 10);
    CHECK(t.at("set_b_class").at("edges").size() >= 4);
    CHECK(t.at("chosen_pair").size() == 2);
    CHECK(t.at("geodesic_failures").size() == 2);
}

TEST_CASE("dot export")
{
    const Graph p3 = build_path(3);
    CHECK(to_dot(p3) == "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");

    const EdgeColoring c(13, {2, 13});
    const std::string dot = to_dot(p3, &c);
    CHECK(dot.find("0 -- 1 [label=\"2\", color=\"" + dot_palette()[1] + "\"]") != std::string::npos);
    CHECK(dot.find("1 -- 2 [label=\"13\", color=\"" + dot_palette()[0] + "\"]") != std::string::npos);
    CHECK(dot_palette().size() == 12);

    const auto wg = build_witness({3, 3});
    const auto names = witness_vertex_names(wg);
    const std::string wdot = to_dot(wg.graph(), nullptr, &names);
    CHECK(wdot.find("18 [label=\"w\"]") != std::string::npos);
    CHECK(wdot.find("20 [label=\"u1\"]") != std::string::npos);

    const auto unbound = EdgeColoring::constant(3);
    CHECK_THROWS_AS(to_dot(p3, &unbound), BindingError);
}

TEST_CASE("atomic write and file reading")
{
    const auto dir = std::filesystem::temp_directory_path() / "rainbow_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "g.json";
    write_file_atomic(path, canonical_dump(to_json(build_cycle(5))));
    CHECK_FALSE(std::filesystem::exists(dir / "g.json.tmp"));
    CHECK(graph_from_json(read_json_file(path)) == build_cycle(5));

    std::ofstream(dir / "bad.json") << "{not json";
    CHECK_THROWS_AS(read_json_file(dir / "bad.json"), ParseError);
    CHECK_THROWS_AS(read_json_file(dir / "missing.json"), ParseError);
    std::filesystem::remove_all(dir);
}
