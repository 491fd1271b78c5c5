#include <gtest/gtest.h>

#include "ccm/io.hpp"

using namespace ccm;

namespace {

IntMatrix ones(Index r, Index c) { return IntMatrix::Constant(r, c, Int(1)); }

void expect_round_trip(const Instance& inst) {
  const std::string first = canonical_dump(instance_to_json(inst));
  const auto back = instance_from_json(parse_json(first));
  EXPECT_EQ(canonical_dump(instance_to_json(back.instance)), first) << inst.name;
  EXPECT_EQ(back.instance.W, inst.W);
  EXPECT_EQ(kind_name(back.instance.set), kind_name(inst.set));
}

std::string parse_error(const std::string& text) {
  try {
    instance_from_json(parse_json(text));
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "no error for " << text;
  return {};
}

}  // namespace

TEST(Io, RoundTripAllFamilies) {
  expect_round_trip(octagon_example());
  expect_round_trip(parabola_explicit(8));
  expect_round_trip(parabola_binary(2));
  expect_round_trip(parabola_doubling(2));
  expect_round_trip(tables_3way(2, 2, 2, ones(2, 2), ones(2, 2), ones(2, 2), ones(1, 8)));
  expect_round_trip(partition_instance(2, 3, IntVec{{Int(1), Int(2)}}, {ones(2, 3)}));
  TransshipmentSpec t{3, {{0, 1}, {1, 2}}, IntVec{{Int(-1), Int(0), Int(1)}}, IntVec::Zero(2), ones(2, 1)};
  expect_round_trip(transshipment_instance(t, ones(1, 2)));
  Instance g;
  g.name = "k3";
  g.set = MatroidSpec::graphic(3, {{0, 1}, {1, 2}, {0, 2}});
  g.W = ones(1, 3);
  g.edge_bound = 2;
  expect_round_trip(g);
}

TEST(Io, IlpWithInfiniteBounds) {
  const std::string text = R"({"name":"line","oracle":{"kind":"ilp","A":[[1,1]],"b":[3],
    "lower":[0,null],"upper":[null,5]},"W":[[1,0]],"edge_bound":2})";
  const auto f = instance_from_json(parse_json(text));
  const auto& s = std::get<IlpSpec>(f.instance.set);
  EXPECT_FALSE(s.upper[0].has_value());
  EXPECT_EQ(*s.upper[1], Int(5));
  const std::string dumped = canonical_dump(instance_to_json(f.instance));
  EXPECT_NE(dumped.find("null"), std::string::npos);
  EXPECT_EQ(canonical_dump(instance_to_json(instance_from_json(parse_json(dumped)).instance)), dumped);
}

TEST(Io, CanonicalLayout) {
  Json j;
  j["a"] = 1;
  j["v"] = Json::array({1, 2});
  j["m"] = Json::array({Json::array({1, 2}), Json::array({3, 4})});
  j["e"] = Json::array();
  EXPECT_EQ(canonical_dump(j), "{\n  \"a\": 1,\n  \"v\": [1,2],\n  \"m\": [\n    [1,2],\n    [3,4]\n  ],\n  \"e\": []\n}\n");
}

TEST(Io, ErrorsNameTheField) {
  EXPECT_NE(parse_error("{").find("malformed"), std::string::npos);
  EXPECT_NE(parse_error(R"({"oracle":{"kind":"explicit","points":[[0]]},"edge_bound":1})").find("'W'"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"oracle":{"kind":"explicit","points":[[0,"x"]]},"W":[[1,1]],"edge_bound":1})")
                .find("oracle.points[0][1]"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"oracle":{"kind":"cube"},"W":[[1]],"edge_bound":1})").find("oracle.kind"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"oracle":{"kind":"uniform_matroid","n":4},"W":[[1,1,1,1]],"edge_bound":1})")
                .find("oracle.rank"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"oracle":{"kind":"explicit","points":[[0]]},"W":[[1]],"edge_bound":-1})")
                .find("edge_bound"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"oracle":{"kind":"explicit","points":[[0]]},"W":[[1]],"edge_bound":1,
      "objective":{"kind":"linear","c":[1,2]}})")
                .find("objective.c"),
            std::string::npos);
}

TEST(Io, ShapeErrorsKeepTheirKind) {
  try {
    instance_from_json(parse_json(R"({"oracle":{"kind":"explicit","points":[[0,1]]},"W":[[1]],"edge_bound":1})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
  try {
    instance_from_json(
        parse_json(R"({"oracle":{"kind":"uniform_matroid","n":3,"rank":4},"W":[[1,1,1]],"edge_bound":1})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidRank);
  }
}

TEST(Io, ObjectiveRoundTrip) {
  const std::vector<ConvexObjective> fs = {
      ConvexObjective::linear(IntVec{{Int(1), Int(-2)}}),
      ConvexObjective::max_of_linear({IntVec{{Int(1), Int(0)}}, IntVec{{Int(0), Int(1)}}}, {Int(3), Int(-1)}),
      ConvexObjective::squared_euclidean(IntVec{{Int(2), Int(2)}}),
      ConvexObjective::weighted_p_norm(0, IntVec{{Int(1), Int(3)}}),
      ConvexObjective::weighted_p_norm(2, IntVec{{Int(1), Int(1)}}),
  };
  for (const auto& f : fs) {
    const Json j = objective_to_json(f);
    EXPECT_EQ(objective_to_json(objective_from_json(j, 2)), j);
  }
  EXPECT_EQ(objective_to_json(fs[3])["p"], "inf");
}

TEST(Io, ResultFiles) {
  const auto inst = octagon_example();
  ProjectionConfig cfg;
  cfg.W = inst.W;
  cfg.edge_bound = inst.edge_bound;
  const auto oracle = make_oracle(inst);
  const auto r = project(*oracle, cfg);
  const Json j = projection_to_json(inst, cfg, r);
  EXPECT_EQ(j["vertices"], to_json(*inst.expected_vertices));
  EXPECT_EQ(j["preimages"].size(), 8U);
  EXPECT_FALSE(j["stats"].contains("wall_ms"));
  EXPECT_TRUE(projection_to_json(inst, cfg, r, RunStats{1.5})["stats"].contains("wall_ms"));

  const auto f = ConvexObjective::squared_euclidean(IntVec{{Int(0), Int(0)}});
  const auto m = maximize(*oracle, cfg, f);
  const Json mj = maximize_to_json(inst, cfg, f, m);
  EXPECT_EQ(mj["optimal"]["value_rational"], "13/1");
  EXPECT_EQ(mj["optimal"]["y"], to_json(m.y));
}
