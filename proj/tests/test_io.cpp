#include <filesystem>

#include <gtest/gtest.h>

#include "support/helpers.hpp"

using namespace netmetric;
namespace fs = std::filesystem;

TEST(Io, ParsesJsonNetwork) {
  const auto net = parse_network_json(R"({"labels":["a","b"],"dissim":[[0,1],[1,0]]})");
  EXPECT_EQ(net.size(), 2u);
  EXPECT_EQ(net.labels(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(net(0, 1), 1.0);
}

TEST(Io, ParsesCsvWithHeader) {
  const auto net = parse_network_csv("a,b,c\n0,1,1\n1,0,11\n1,11,0\n");
  EXPECT_EQ(net.dissim(), testutil::gamma(1).dissim());
  EXPECT_EQ(net.labels(), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(Io, MalformedJsonIsParseError) {
  try {
    parse_network_json("{\"labels\": [\"a\",\n  \"dissim\": }");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Io, BadCsvCellIsParseError) {
  try {
    parse_network_csv("a,b\n0,x\n1,0\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  }
}

TEST(Io, AsymmetricCsvReportsIndices) {
  try {
    parse_network_csv("a,b\n0,1\n2,0\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AsymmetricMatrix);
  }
}

TEST(Io, RoundTripsThroughJsonAndCsv) {
  SplitMix64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto net = testutil::random_network(2 + t % 6, rng, 1e-3, 1e3);
    const auto j = parse_network_json(network_to_json_text(net));
    const auto c = parse_network_csv(network_to_csv(net));
    EXPECT_LE(max_abs_diff(j.dissim(), net.dissim()), 1e-15);
    EXPECT_LE(max_abs_diff(c.dissim(), net.dissim()), 1e-15);
    EXPECT_EQ(j.labels(), net.labels());
    EXPECT_EQ(c.labels(), net.labels());
  }
}

TEST(Io, FilesByExtension) {
  const auto dir = fs::temp_directory_path() / "netmetric_io_test";
  fs::create_directories(dir);
  const auto net = testutil::gamma(2);
  save_network(net, dir / "g.json");
  save_network(net, dir / "g.csv");
  EXPECT_EQ(load_network(dir / "g.json"), net);
  EXPECT_EQ(load_network(dir / "g.csv"), net);
  try {
    load_network(dir / "missing.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IoError);
  }
  fs::remove_all(dir);
}

TEST(Io, SampledSpaceRoundTrip) {
  const auto space = midpoint_augment(testutil::gamma(1));
  const auto back = parse_sampled_space_json(sampled_space_to_json_text(space));
  EXPECT_EQ(back.size(), 6u);
  EXPECT_EQ(back.labels(), space.labels());
  EXPECT_EQ(back.dissim(), space.dissim());
  EXPECT_EQ(back.points(), space.points());
}

TEST(Io, EmbeddingCsvRoundTrip) {
  const Matrix coords{{0.25, -1.5}, {3.0, 1e-7}};
  const auto text = embedding_to_csv(coords, {"er-0", "circle-0"}, {"er", "circle"});
  EXPECT_EQ(text.substr(0, text.find('\n')), "name,x,y,model");
  const auto table = parse_embedding_csv(text);
  EXPECT_EQ(table.coords, coords);
  EXPECT_EQ(table.names, (std::vector<std::string>{"er-0", "circle-0"}));
  EXPECT_EQ(table.classes, (std::vector<std::string>{"er", "circle"}));
}

TEST(Io, ShortestNumberFormatting) {
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}
