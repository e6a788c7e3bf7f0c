#include "rainbow/io.hpp"

#include <gtest/gtest.h>

#include "rainbow/errors.hpp"
#include "rainbow/generate.hpp"

namespace rainbow {
namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseGraph, Basics) {
  EXPECT_EQ(parse_graph("p edge 2 1\ne 1 2"), build_graph(2, {{1, 2}}));
  EXPECT_EQ(parse_graph("# header comment\n\np edge 3 2\n# mid\ne 3 2\n\ne 1 2\n"),
            build_graph(3, {{1, 2}, {2, 3}}));
  EXPECT_EQ(parse_graph("p edge 1 0\n"), build_graph(1, {}));
}

TEST(ParseGraph, Errors) {
  EXPECT_NE(error_of([] { parse_graph("p edge 2 2\ne 1 2"); }).find("count mismatch"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_graph("p edge 2 1\ne 1 x"); }).find("line 2"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_graph("p edge 3 2\ne 1 2\ne 2 1"); }).find("duplicate"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_graph("p edge 3 1\ne 2 2"); }).find("self-loop"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_graph("p edge 3 1\ne 1 4"); }).find("line 2"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_graph("e 1 2"); }).find("line 1"), std::string::npos);
  EXPECT_NE(error_of([] { parse_graph(""); }).find("header"), std::string::npos);
  EXPECT_NE(error_of([] { parse_graph("p edge 2 1\ne 1 2 3"); }).find("line 2"),
            std::string::npos);
}

TEST(ParseColoring, Basics) {
  Graph k2 = build_graph(2, {{1, 2}});
  EXPECT_EQ(parse_coloring("c 1 2 7", k2).colors(), (std::vector<Color>{7}));
  Graph p3 = build_graph(3, {{1, 2}, {2, 3}});
  EXPECT_EQ(parse_coloring("c 3 2 4\nc 1 2 9\n", p3).colors(), (std::vector<Color>{9, 4}));
}

TEST(ParseColoring, Errors) {
  Graph k2 = build_graph(2, {{1, 2}});
  EXPECT_NE(error_of([&] { parse_coloring("c 1 3 1", k2); }).find("unknown edge"),
            std::string::npos);
  Graph p3 = build_graph(3, {{1, 2}, {2, 3}});
  EXPECT_NE(error_of([&] { parse_coloring("c 1 2 1", p3); }).find("(2,3)"), std::string::npos);
  EXPECT_NE(error_of([&] { parse_coloring("c 1 2 1\nc 2 1 2\nc 2 3 1", p3); }).find("duplicate"),
            std::string::npos);
  EXPECT_NE(error_of([&] { parse_coloring("c 1 2 0\nc 2 3 1", p3); }).find("positive"),
            std::string::npos);
}

// Round trips over generated corpora of every family.
TEST(RoundTrip, GeneratedCorpora) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    GeneratorSpec spec;
    spec.family = static_cast<Family>(i % 7);
    spec.n = 3 + static_cast<int>(rng.below(8));
    spec.s = 1 + static_cast<int>(rng.below(4));
    spec.t = 1 + static_cast<int>(rng.below(5));
    spec.seed = rng.next();
    Graph g = generate(spec);
    const std::string text = serialize_graph(g);
    EXPECT_EQ(parse_graph(text), g);
    EXPECT_EQ(serialize_graph(parse_graph(text)), text);

    std::vector<Color> colors(g.size());
    for (auto& c : colors) c = 1 + static_cast<int>(rng.below(100));
    EdgeColoring c(g, colors);
    const std::string ctext = serialize_coloring(g, c);
    EXPECT_EQ(parse_coloring(ctext, g), c);
    EXPECT_EQ(serialize_coloring(g, parse_coloring(ctext, g)), ctext);
  }
}

TEST(Provenance, Format) {
  Graph p3 = build_graph(3, {{1, 2}, {2, 3}});
  auto out = subdivide_reduce(p3, EdgeColoring(p3, {5, 2}));
  EXPECT_EQ(serialize_provenance(out), "s 1 2 4\ns 2 3 5\nf 1 2 6\nf 2 3 7\n");
  EXPECT_EQ(serialize_coloring(out.g_prime, out.c_prime),
            "c 1 4 5\nc 2 4 6\nc 2 5 2\nc 3 5 7\n");
}

}  // namespace
}  // namespace rainbow
