#include <catch2/catch_amalgamated.hpp>

#include "recolor/io.hpp"
#include "support.hpp"

using namespace recolor;
using Catch::Matchers::ContainsSubstring;

namespace {

ParseError capture(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e;
    }
    throw std::logic_error("expected a parse error");
}

}  // namespace

TEST_CASE("graph round-trip with embedding") {
    auto eg = testsupport::k4_fixture();
    std::string text = serialize_graph(eg.graph, &eg.embedding);
    CHECK(text ==
          "p 4 6\n"
          "e 1 2\n"
          "e 1 3\n"
          "e 1 4\n"
          "e 2 3\n"
          "e 2 4\n"
          "e 3 4\n"
          "r 1 2 3 4\n"
          "r 2 1 4 3\n"
          "r 3 1 2 4\n"
          "r 4 1 3 2\n");
    auto parsed = parse_graph(text);
    CHECK(parsed.graph.edges == eg.graph.edges);
    REQUIRE(parsed.embedding.has_value());
    CHECK(parsed.embedding->rotation == eg.embedding.rotation);
    CHECK(serialize_graph(parsed.graph, &*parsed.embedding) == text);
}

TEST_CASE("graph parsing tolerates comments, blanks, and CRLF") {
    std::string text = "# header comment\r\n\np 3 2\n  # indented comment\ne 1 2\r\ne 2 3\n\n";
    auto parsed = parse_graph(text);
    CHECK(parsed.graph.n == 3);
    CHECK(parsed.graph.edge_count() == 2);
    CHECK_FALSE(parsed.embedding.has_value());
}

TEST_CASE("graph parse errors carry position and code") {
    auto e1 = capture("p 2 1\ne 1 1\n");
    CHECK(e1.code() == ErrorCode::syntax);
    CHECK(e1.line() == 2);
    CHECK_THAT(e1.what(), ContainsSubstring("u < v"));

    auto e2 = capture("p 2 2\ne 1 2\ne 1 2\n");
    CHECK(e2.code() == ErrorCode::duplicate_edge);
    CHECK(e2.line() == 3);

    auto e3 = capture("p 2 1\ne 1 5\n");
    CHECK(e3.code() == ErrorCode::index_out_of_range);
    CHECK(e3.line() == 2);
    CHECK(e3.column() == 5);

    CHECK(capture("e 1 2\n").code() == ErrorCode::syntax);           // header missing
    CHECK(capture("p 3 2\ne 1 2\n").line() == 3);                    // edge count short
    CHECK(capture("p 3 1\ne 1 2\ne 2 3\n").line() == 3);             // edge count long
    CHECK(capture("p 3 1\nz 1 2\ne 1 2\n").line() == 2);             // unknown line type
    CHECK(capture("p 2 1\ne 1 x\n").code() == ErrorCode::syntax);    // not a number
    CHECK(capture("").code() == ErrorCode::syntax);                  // empty input
}

TEST_CASE("rotation lines are all-or-none and validated") {
    std::string base = "p 3 3\ne 1 2\ne 1 3\ne 2 3\n";
    auto partial = capture(base + "r 1 2 3\n");
    CHECK(partial.code() == ErrorCode::syntax);
    CHECK_THAT(partial.what(), ContainsSubstring("vertex 2 has none"));

    auto wrong = capture(base + "r 1 2 3\nr 2 1 1\nr 3 1 2\n");
    CHECK(wrong.code() == ErrorCode::invalid_embedding);
    CHECK(wrong.line() == 6);

    auto repeated = capture(base + "r 1 2 3\nr 1 3 2\nr 2 1 3\nr 3 1 2\n");
    CHECK(repeated.code() == ErrorCode::syntax);
    CHECK(repeated.line() == 6);

    auto self = capture(base + "r 1 1 2 3\nr 2 1 3\nr 3 1 2\n");
    CHECK(self.code() == ErrorCode::syntax);
    CHECK_THAT(self.what(), ContainsSubstring("own rotation"));

    auto parsed = parse_graph(base + "r 1 3 2\nr 2 1 3\nr 3 2 1\n");
    REQUIRE(parsed.embedding.has_value());
    CHECK(parsed.embedding->rotation[1] == std::vector<int>{3, 2});
}

TEST_CASE("a thousand-edge file parses back to its header") {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= 25; ++i)
        for (int j = 1; j <= 40; ++j) edges.emplace_back(i, 25 + j);
    auto g = Graph::from_edges(65, std::move(edges));
    std::string text = serialize_graph(g);
    CHECK(text.substr(0, 9) == "p 65 1000");
    auto parsed = parse_graph(text);
    CHECK(parsed.graph.edge_count() == 1000);
    CHECK(parsed.graph.edges == g.edges);
}

TEST_CASE("coloring round-trip and errors") {
    Coloring c = make_coloring(4, 10);
    c[1] = 1; c[2] = 10; c[3] = 2; c[4] = 7;
    std::string text = serialize_coloring(c);
    CHECK(text == "1 10 2 7\n");
    CHECK(parse_coloring(text, 4, 10) == c);
    CHECK(parse_coloring("# note\n\n 1 10 2 7 \n", 4, 10) == c);

    CHECK_THROWS_AS(parse_coloring("1 2 3\n", 4, 10), ParseError);
    CHECK_THROWS_AS(parse_coloring("1 2 3 11\n", 4, 10), ParseError);
    CHECK_THROWS_AS(parse_coloring("1 2 3 0\n", 4, 10), ParseError);
    CHECK_THROWS_AS(parse_coloring("1 2\n3 4\n", 4, 10), ParseError);
    CHECK_THROWS_AS(parse_coloring("", 4, 10), ParseError);
    try {
        parse_coloring("1 2 3 11\n", 4, 10);
    } catch (const ParseError& e) {
        CHECK(e.code() == ErrorCode::index_out_of_range);
        CHECK(e.column() == 7);
    }
}

TEST_CASE("list round-trip with and without the universe header") {
    auto l = make_lists(3, 7);
    l[1] = mask_of(1) | mask_of(5);
    l[2] = mask_full(7);
    l[3] = mask_of(2);
    std::string text = serialize_lists(l);
    CHECK(text == "l 7\n1 5\n1 2 3 4 5 6 7\n2\n");
    auto back = parse_lists(text, 3);
    CHECK(back.universe == 7);
    CHECK(back.lists == l.lists);

    auto bare = parse_lists("1 5\n2 3\n4\n", 3);
    CHECK(bare.universe == 5);
    CHECK(bare[3] == mask_of(4));

    auto dup = parse_lists("l 4\n1 1 2\n3\n4 4\n", 3);
    CHECK(dup[1] == (mask_of(1) | mask_of(2)));
    CHECK(dup[3] == mask_of(4));

    CHECK_THROWS_AS(parse_lists("l 4\n1\n2\n", 3), ParseError);            // too few rows
    CHECK_THROWS_AS(parse_lists("l 4\n1\n2\n3\n4\n", 3), ParseError);      // too many rows
    CHECK_THROWS_AS(parse_lists("l 4\n1\n2\n5\n", 3), ParseError);         // out of universe
    CHECK_THROWS_AS(parse_lists("l 0\n1\n", 1), ParseError);
}

TEST_CASE("sequence round-trip guards its checksum") {
    std::vector<RecolorStep> steps = {{3, 1, 4}, {1, 2, 5}};
    std::string text = serialize_sequence(5, 6, steps);
    CHECK(text == "s 5 6 2\n3 1 4\n1 2 5\nend 17\n");
    auto back = parse_sequence(text);
    CHECK(back.n == 5);
    CHECK(back.universe == 6);
    CHECK(back.steps == steps);

    try {
        parse_sequence("s 5 6 2\n3 1 4\n1 2 5\nend 18\n");
        FAIL("expected a checksum error");
    } catch (const ParseError& e) {
        CHECK(e.code() == ErrorCode::checksum_mismatch);
        CHECK(e.line() == 4);
        CHECK(e.column() == 5);
    }
}

TEST_CASE("sequence structural errors") {
    CHECK_THROWS_AS(parse_sequence(""), ParseError);                          // no header
    CHECK_THROWS_AS(parse_sequence("s 5 6 1\n3 1 4\n"), ParseError);          // no end line
    CHECK_THROWS_AS(parse_sequence("s 5 6 2\n3 1 4\nend 12\n"), ParseError);  // short
    CHECK_THROWS_AS(parse_sequence("s 5 6 1\n3 1 4\n1 2 5\nend 17\n"), ParseError);
    CHECK_THROWS_AS(parse_sequence("s 5 6 1\n3 1 4\nend 12\nx\n"), ParseError);
    CHECK_THROWS_AS(parse_sequence("s 5 6 1\n3 1\nend 12\n"), ParseError);    // short step
    CHECK_THROWS_AS(parse_sequence("s 5 6 1\n6 1 4\nend 24\n"), ParseError);  // bad vertex
    CHECK_THROWS_AS(parse_sequence("s 5 6 1\n3 1 7\nend 21\n"), ParseError);  // bad color
    auto ok = parse_sequence("# preamble\ns 2 3 0\nend 0\n");
    CHECK(ok.steps.empty());
}
