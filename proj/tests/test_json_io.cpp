#include <doctest.h>

#include "test_helpers.hpp"
#include "xindlab/json_io.hpp"

using namespace xindlab;
namespace io = xindlab::io;

TEST_CASE("group JSON round trip and names") {
  auto s3 = FiniteGroup::symmetric(3);
  auto j = io::write_group(s3);
  CHECK(io::parse_group(j) == s3);
  CHECK(io::parse_group(io::Json("Z2")) == FiniteGroup::cyclic(2));
  CHECK(io::parse_group(io::Json("S4")) == FiniteGroup::symmetric(4));
  CHECK_THROWS_WITH_AS(io::parse_group(io::Json("Q8")), doctest::Contains("ParseError"),
                       Error);
}

TEST_CASE("poset round trip for every generator family") {
  auto z2 = FiniteGroup::cyclic(2);
  auto z3 = FiniteGroup::cyclic(3);
  std::vector<GPoset> posets{
      gen_qn(z2, 2),
      gen_qn(z3, -1),
      gen_pg(z3, 1).poset,
      gen_mu_example(z3, 0, 1, 2).poset,
      gen_sharp_family(z3, 1, 0).poset,
      gen_z2_sharp(2, 1).poset,
      gen_join_power(gen_qn(z2, 1), 2),
      random_free_gposet(z3, 3, 0.5, 99),
  };
  for (const auto& p : posets) {
    auto j = io::write_poset(p);
    auto q = io::parse_poset(j);
    REQUIRE(q == p);
  }
}

TEST_CASE("complex round trip") {
  auto z2 = FiniteGroup::cyclic(2);
  for (const auto& k :
       {e_n_g(z2, 1), k_times_g({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}}, z2),
        order_complex(gen_pg(z2, 1).poset)}) {
    auto j = io::write_complex(k);
    REQUIRE(io::parse_complex(j) == k);
  }
}

TEST_CASE("certificate round trip, including report wrappers") {
  auto z3 = FiniteGroup::cyclic(3);
  auto q = gen_qn(z3, 2);
  auto report = xind_exact(q);
  auto j = io::write_certificate(report.certificate, q.group());
  auto c = io::parse_gmap_certificate(j, q.group());
  CHECK(c.target_n == report.certificate.target_n);
  CHECK(c.assignment == report.certificate.assignment);
  auto wrapped = io::write_report(report, q.group());
  auto c2 = io::parse_gmap_certificate(wrapped, q.group());
  CHECK(c2.assignment == report.certificate.assignment);
  CHECK(wrapped["n"] == 2);
  CHECK(wrapped["infeasible_below"] == 1);
}

TEST_CASE("parse errors carry line and column") {
  try {
    io::parse_text("{\n  \"group\": Z2,\n}");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_WITH_AS(io::parse_poset(io::parse_text("{}")), doctest::Contains("group"),
                       Error);
  CHECK_THROWS_WITH_AS(
      io::parse_poset(io::parse_text(
          R"({"group":"Z2","elements":["a"],"covers":[["a","zzz"]],"action":{}})")),
      doctest::Contains("unknown element"), Error);
}

TEST_CASE("action rows must cover the group") {
  auto text = R"({
    "group": "Z2",
    "elements": ["a", "b"],
    "covers": [],
    "action": {}
  })";
  CHECK_THROWS_WITH_AS(io::parse_poset(io::parse_text(text)),
                       doctest::Contains("action row"), Error);
}

TEST_CASE("sign maps and subsets") {
  auto z2 = FiniteGroup::cyclic(2);
  auto j = io::parse_text(R"({"a": "0", "b": "1"})");
  auto m = io::parse_sign_map(j, z2);
  CHECK(m.at("a") == 0);
  CHECK(m.at("b") == 1);
  CHECK(io::write_sign_map(m, z2) == j);
  CHECK(io::parse_subset(io::parse_text(R"(["x","y"])")) ==
        std::vector<std::string>{"x", "y"});
}

TEST_CASE("bundle serialization carries subsets and expectations") {
  auto b = gen_z2_sharp(2, 0);
  auto j = io::write_bundle(b);
  CHECK(j["subsets"].contains("A"));
  CHECK(j["expected"]["xind"]["value"] == 2);
  CHECK(io::parse_poset(j) == b.poset);  // extra keys ignored by the parser
}

TEST_CASE("diagnostics serialization") {
  auto z2 = FiniteGroup::cyclic(2);
  GPoset bad(z2, {"x", "y"}, {{"x", "y"}}, {{0, 1}, {0, 1}});
  auto j = io::write_diagnostics(bad.validate());
  CHECK(j["valid"] == false);
  CHECK(j["diagnostics"].size() >= 1);
  auto ok = io::write_diagnostics(gen_qn(z2, 1).validate());
  CHECK(ok["valid"] == true);
}
