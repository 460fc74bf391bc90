// Copyright 2026 The cfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "helpers.hpp"

namespace cfkit {
namespace {

using testing::ex1;
using testing::fixture;

template <typename F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "none";
}

TEST(Parse, WorkedExampleFixture) {
  const Instance inst = load_instance(fixture("ex1.json"));
  EXPECT_EQ(inst.kind, InstanceKind::cf_space);
  EXPECT_EQ(inst.meta.name, "ex1");
  EXPECT_EQ(inst.cf().family.size(), 5u);
  EXPECT_EQ(to_cf_space(inst.cf()), ex1());
}

TEST(Parse, IntegersAreIndicesAndStringsAreNames) {
  const Instance a = parse_instance(R"({"kind":"cf_space","ga":{"universe":["x","y"],"pairs":[[0,0],["y","y"]]},
                                       "family":[[0],["y"],[]]})");
  EXPECT_EQ(a.cf().family, (std::vector<Subset>{Subset{0}, Subset{1}, Subset{}}));
  EXPECT_TRUE(a.cf().ga.related(0, 0));
  EXPECT_TRUE(a.cf().ga.related(1, 1));
  // Integer names in the universe are read as their decimal text.
  const Instance b = parse_instance(R"({"kind":"ga_space","universe":[7,8],"rel":[[1,0],[0,1]]})");
  EXPECT_EQ(b.ga().universe().name(0), "7");
}

TEST(Parse, MalformedReportsLine) {
  try {
    load_instance(fixture("bad/malformed.json"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5u);
    EXPECT_EQ(e.code(), "ParseError");
  }
}

TEST(Parse, SchemaErrorsNameTheField) {
  try {
    load_instance(fixture("bad/schema.json"));
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.field(), "family[0][0]");
  }
  EXPECT_EQ(error_code([] { parse_instance(R"({"kind":"lattice"})"); }), "SchemaError");
  EXPECT_EQ(error_code([] { parse_instance(R"([1,2])"); }), "SchemaError");
  EXPECT_EQ(error_code([] { parse_instance(R"({"kind":"poset","elements":["a"]})"); }), "SchemaError");
  EXPECT_EQ(error_code([] { parse_instance(R"({"kind":"ga_space","universe":["a"]})"); }), "SchemaError");
  EXPECT_EQ(error_code([] {
              parse_instance(R"({"kind":"ga_space","universe":["a"],"rel":[[true]],"pairs":[]})");
            }),
            "SchemaError");
  EXPECT_EQ(error_code([] { parse_instance(R"({"kind":"poset","elements":["a"],"leq":[[2]]})"); }),
            "SchemaError");
  EXPECT_EQ(error_code([] { parse_instance(R"({"kind":"poset","meta":{"seed":-1},"elements":[],"leq":[]})"); }),
            "SchemaError");
  EXPECT_EQ(error_code([] { to_poset(parse_instance(R"({"kind":"poset","elements":["a","a"],"leq":[[1,0],[0,1]]})")); }),
            "DuplicateElement");
  EXPECT_EQ(error_code([] { load_instance(fixture("does-not-exist.json")); }), "FileNotReadable");
}

TEST(Parse, UnknownTopLevelFieldsAreKept) {
  const Instance inst = parse_instance(R"({"kind":"poset","elements":[],"leq":[],"comment":"hi"})");
  EXPECT_EQ(inst.extra["comment"], "hi");
}

TEST(Parse, RelationPairsFollowFileOrder) {
  const Instance inst = load_instance(fixture("ex1_identity.json"));
  const ApproxRel theta = to_approx_rel(inst.rel());
  EXPECT_EQ(theta, identity_rel(share(ex1())));
  EXPECT_EQ(error_code([] {
              parse_instance(R"({"kind":"approx_rel",
                "source":{"ga":{"universe":["a"],"rel":[[1]]},"family":[[]]},
                "target":{"ga":{"universe":["a"],"rel":[[1]]},"family":[[]]},
                "pairs":[[0,1]]})");
            }),
            "SchemaError");
}

TEST(Export, SortsNamesAndPermutesRelation) {
  const Instance inst = parse_instance(R"({"kind":"poset","elements":["b","a"],"leq":[[1,0],[1,1]]})");
  const Json j = Json::parse(export_json(inst));
  EXPECT_EQ(j["elements"], Json::array({"a", "b"}));
  // a <= b in the input, so row "a" is [1,1] after sorting.
  EXPECT_EQ(j["leq"], Json::parse("[[true,true],[false,true]]"));
  EXPECT_EQ(j["kind"], "poset");
}

TEST(Export, CfSpaceFamilyIsCanonicalNames) {
  const Json j = Json::parse(export_json(load_instance(fixture("ex1.json"))));
  EXPECT_EQ(j["family"], Json::parse(R"([[],["1"],["1","2"],["5"],["6"]])"));
  EXPECT_EQ(j["meta"]["name"], "ex1");
}

TEST(Export, IdempotentOnFixturesAndRandomInstances) {
  std::vector<Instance> all;
  for (auto name : {"ex1.json", "chain2.json", "antichain2.json", "diamond.json", "singleton.json", "ga_mixed.json",
                    "chain3_basis.json", "topological.json", "empty_family.json", "ex1_identity.json"})
    all.push_back(load_instance(fixture(name)));
  for (auto& [id, inst] : random_instances(100, 9)) all.push_back(inst);
  for (const auto& inst : all) {
    const std::string once = export_json(inst);
    const Instance back = parse_instance(once);
    EXPECT_EQ(back.kind, inst.kind);
    EXPECT_EQ(export_json(back), once);
  }
}

TEST(Export, RoundTripPreservesMeaning) {
  for (auto& [id, inst] : random_instances(100, 12)) {
    const Instance back = parse_instance(export_json(inst));
    switch (inst.kind) {
      case InstanceKind::poset:
        EXPECT_TRUE(order_isomorphic(to_poset(inst), to_poset(back)));
        break;
      case InstanceKind::cf_space: {
        const CFSpace a = to_cf_space(inst.cf()), b = to_cf_space(back.cf());
        EXPECT_EQ(enumerate_cf_closed(a).sets.size(), enumerate_cf_closed(b).sets.size());
        EXPECT_EQ(a.family_size(), b.family_size());
        break;
      }
      case InstanceKind::approx_rel:
        EXPECT_EQ(to_approx_rel(inst.rel()).pairs().size(), to_approx_rel(back.rel()).pairs().size());
        break;
      default:
        EXPECT_EQ(inst.ga().pairs().size(), back.ga().pairs().size());
    }
  }
}

TEST(Dot, ChainHasseDiagram) {
  const std::string dot = hasse_dot(testing::chain(3), "c3");
  EXPECT_NE(dot.find("digraph \"c3\""), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n1;"), std::string::npos);
  EXPECT_NE(dot.find("n1 -> n2;"), std::string::npos);
  EXPECT_EQ(dot.find("n0 -> n2;"), std::string::npos);
  EXPECT_EQ(dot_quote("a\"b"), "\"a\\\"b\"");
}

}  // namespace
}  // namespace cfkit
