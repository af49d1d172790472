#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "corpus.hpp"

using namespace latder;

namespace {

const char* const kPentagonText = R"({
  "format": "latder-lattice-v1",
  "size": 5,
  "covers": [[0,1],[0,2],[1,4],[2,3],[3,4]],
  "names": ["bot","a","b","c","top"],
  "provenance": {"family":"pentagon","params":{},"seed":null}
}
)";

std::string fnv1a(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

TEST_CASE("canonical lattice text") {
    const Provenance prov{"pentagon", nlohmann::ordered_json::object(), std::nullopt};
    CHECK(dump_lattice(pentagon(), prov) == kPentagonText);
    const auto doc = parse_lattice(kPentagonText);
    REQUIRE(doc.provenance.has_value());
    CHECK(doc.provenance->family == "pentagon");
    CHECK(dump_lattice(doc.lattice, doc.provenance) == kPentagonText);
}

TEST_CASE("lattice files round-trip") {
    for (const auto& e : corpus::full(10)) {
        const auto text = dump_lattice(e.lattice);
        const auto back = parse_lattice(text);
        CHECK(dump_lattice(back.lattice) == text);
        CHECK_FALSE(back.provenance.has_value());
    }
    const auto dir = std::filesystem::temp_directory_path() / "latder-io-test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "n5.json").string();
    Provenance prov{"random-dm", {{"elements", 5}, {"density", 0.25}}, 9};
    save_lattice(pentagon(), path, prov);
    const auto loaded = load_lattice(path);
    CHECK(loaded.provenance->seed == std::optional<std::uint64_t>{9});
    CHECK(loaded.provenance->params.at("elements") == 5);
    CHECK(lattice_hash(loaded.lattice) == lattice_hash(pentagon()));
    std::filesystem::remove_all(dir);
    CHECK_THROWS_AS(load_lattice((dir / "missing.json").string()), IoError);
}

TEST_CASE("unsorted covers load and save sorted") {
    const auto doc = parse_lattice(
        R"({"format":"latder-lattice-v1","size":4,"covers":[[2,3],[0,2],[1,3],[0,1]]})");
    CHECK(doc.lattice.hasse() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("malformed lattice files") {
    CHECK_THROWS_AS(parse_lattice("{\n  \"format\": \n"), ParseError);
    try {
        parse_lattice("{\n  \"format\": \"latder-lattice-v1\",\n  \"size\": 2,\n  oops\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_lattice(R"({"format":"other","size":1,"covers":[]})"), ParseError);
    CHECK_THROWS_AS(parse_lattice(R"({"format":"latder-lattice-v1","covers":[]})"), ParseError);
    CHECK_THROWS_AS(parse_lattice(R"({"format":"latder-lattice-v1","size":2,"covers":[[0,2]]})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_lattice(R"({"format":"latder-lattice-v1","size":2,"covers":[[0,1],[1,0]]})"),
        ParseError);
    CHECK_THROWS_AS(parse_lattice(
                        R"({"format":"latder-lattice-v1","size":3,"covers":[[0,1],[1,2],[0,2]]})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_lattice(R"({"format":"latder-lattice-v1","size":3,"covers":[[0,1],[0,2]]})"),
        NotLatticeError);
    CHECK_THROWS_AS(parse_lattice(
                        R"({"format":"latder-lattice-v1","size":2,"covers":[[0,1]],"names":["x"]})"),
                    ParseError);
}

TEST_CASE("lattice hash") {
    const auto L = pentagon();
    CHECK(lattice_hash(L) == fnv1a(dump_lattice(L)));
    CHECK(lattice_hash(L).size() == 16);
    CHECK(lattice_hash(L) != lattice_hash(diamond()));
}

TEST_CASE("labels files") {
    const auto cp = cover_poset(pentagon());
    const auto f = *construct_strict_facet_labelling(pentagon());
    const auto text = dump_labels(cp, f);
    CHECK(text ==
          "{\n  \"format\": \"latder-labels-v1\",\n"
          "  \"entries\": [[0,1,0],[0,2,0],[1,4,0],[2,3,1],[3,4,0]]\n}\n");
    CHECK(parse_labels(cp, text) == f);
    CHECK_THROWS_AS(
        parse_labels(cp, R"({"format":"latder-labels-v1","entries":[[0,1,0],[0,2,0]]})"),
        PartialLabellingError);
    CHECK_THROWS_AS(parse_labels(cp, R"({"format":"latder-labels-v1","entries":[[0,3,0]]})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_labels(cp, R"({"format":"latder-labels-v1","entries":[[0,1,0],[0,1,1]]})"),
        ParseError);
}

TEST_CASE("cover poset dump and dot export") {
    const auto cp = cover_poset(pentagon());
    const auto doc = nlohmann::json::parse(dump_cover_poset(cp));
    CHECK(doc.at("format") == "latder-covers-v1");
    CHECK(doc.at("order") == nlohmann::json::parse("[[0,4],[1,2]]"));
    CHECK(doc.at("components") == nlohmann::json::parse("[[0,4],[1,2],[3]]"));
    const auto dot = export_dot(chain(2));
    CHECK(dot == "digraph lattice {\n  rankdir=BT;\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n"
                 "  0 -> 1;\n}\n");
    CHECK(export_dot(cp).find("3 [label=\"(b,c)\"]") != std::string::npos);
}

TEST_CASE("check report") {
    const auto r = check_report(pentagon());
    const auto entries = report_entries(r);
    REQUIRE(entries.size() == 16);
    CHECK(entries.front().first == "sd-join");
    CHECK(entries.back() == std::pair<std::string, bool>{"distributive", false});
    CHECK(render_text(r).find("bounded: true\n") != std::string::npos);
    CHECK(render_json(r).at("lower-bounded") == true);
    const auto m3 = check_report(diamond());
    CHECK_FALSE(m3.lower_bounded);
    CHECK_FALSE(m3.sd.sd_join_direct);
}
