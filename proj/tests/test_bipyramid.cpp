#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "vres/bipyramid.hpp"
#include "vres/chain.hpp"
#include "vres/virtualcheck.hpp"

using vres::BipyramidClassification;
using vres::FieldSpec;
using vres::LabeledComplex;
using vres::Monomial;

TEST_SUITE_BEGIN("bipyramid");

namespace {
const FieldSpec Q = FieldSpec::rationals();
using Verdict = BipyramidClassification::Verdict;

// vertex order of bipyramid_over_simplex: v0..vk, then w0, w1
LabeledComplex labeled_bipyramid(int k, const vres::ToricContext& ctx,
                                 const std::vector<std::string>& labels) {
  std::vector<Monomial> ms;
  for (const auto& s : labels) ms.push_back(vres::parse_monomial(s, ctx.variables));
  return LabeledComplex::from_vertex_labels(vres::bipyramid_over_simplex(k), std::move(ms));
}
}  // namespace

// every classify() call below doubles as a consistency test: the verdict is
// cross-validated against the homological engine internally and a mismatch
// throws

TEST_CASE("the fixture bipyramid is virtual by the second condition") {
  const auto doc = testutil::load_fixture("bipyramid_p2p1.json");
  const auto c = vres::classify(doc.labeled, doc.context, Q);
  CHECK(c.verdict == Verdict::virtual_case2);
  CHECK(std::string(vres::to_string(c.verdict)) == "virtual_case2");
  CHECK(c.base == std::vector<std::string>{"v0", "v1"});
  CHECK(c.apexes.first == "w0");
  CHECK(c.apexes.second == "w1");
  CHECK(vres::render_monomial(c.apex_lcm, doc.context.variables) == "x0*x1*x2^2");
  CHECK(!c.dividing_vertex.has_value());
  CHECK(!c.swapped);
  REQUIRE(c.assignment.size() == 2);
  REQUIRE(c.p.size() == 2);
  REQUIRE(c.m.size() == 2);
  for (int j = 0; j < 2; ++j) {
    CHECK(c.p[j] >= 1);
    CHECK(c.m[j].divides(c.apex_lcm));
    // the recorded factorization really multiplies back to the base label
    Monomial yj = Monomial::one(doc.labeled.nvars());
    yj = yj.times(vres::parse_monomial(doc.context.variables[c.assignment[j]],
                                       doc.context.variables));
    CHECK(yj.pow(c.p[j]).times(c.m[j]) == doc.labeled.vertex_label(j));
  }
  CHECK(c.m[0] == vres::parse_monomial("x0", doc.context.variables));
  CHECK(c.m[1] == vres::parse_monomial("x1", doc.context.variables));
}

TEST_CASE("standard labelings across several products") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    const auto ctx = vres::product_of_projective_spaces(n, k);
    const LabeledComplex l = vres::standard_virtual_labeling(n, k);
    const auto c = vres::classify(l, ctx, Q);
    CHECK(c.verdict == Verdict::virtual_case2);
    CHECK(!c.swapped);
    for (int j = 0; j <= k; ++j) {
      CHECK(c.p[j] == 1);
      CHECK(c.m[j].is_one());
    }
  }
  const auto v = vres::check_virtual(vres::standard_virtual_labeling(2, 1),
                                     vres::product_of_projective_spaces(2, 1), Q);
  CHECK(v.is_virtual);
  CHECK(!v.is_free);
  CHECK_THROWS_AS(vres::standard_virtual_labeling(0, 0), vres::ArgumentError);
  CHECK_THROWS_AS(vres::standard_virtual_labeling(1, 2), vres::ArgumentError);
}

TEST_CASE("a dividing base label lands in the first case, and is free") {
  const auto ctx = vres::product_of_projective_spaces(1, 1);
  const LabeledComplex l = labeled_bipyramid(1, ctx, {"x0", "y1", "x0*y0", "x1*y0"});
  const auto c = vres::classify(l, ctx, Q);
  CHECK(c.verdict == Verdict::virtual_case1);
  REQUIRE(c.dividing_vertex.has_value());
  CHECK(*c.dividing_vertex == "v0");
  CHECK(vres::check_free(l, Q).is_free);
  vres::AcyclicityCache cache(Q);
  CHECK(testutil::free_oracle(l, cache));
}

TEST_CASE("labels that satisfy neither condition") {
  const auto ctx = vres::product_of_projective_spaces(1, 1);
  const LabeledComplex l = labeled_bipyramid(1, ctx, {"y0*y1", "y0*y1", "x0", "x1"});
  const auto c = vres::classify(l, ctx, Q);
  CHECK(c.verdict == Verdict::not_virtual);
  vres::AcyclicityCache cache(Q);
  CHECK(!testutil::virtual_oracle(l, ctx.irrelevant, cache));
}

TEST_CASE("equal blocks allow the roles to swap") {
  const auto ctx = vres::product_of_projective_spaces(1, 1);
  const LabeledComplex l = labeled_bipyramid(1, ctx, {"x0", "x1", "y0", "y1"});
  const auto c = vres::classify(l, ctx, Q);
  CHECK(c.verdict == Verdict::virtual_case2);
  CHECK(c.swapped);
  for (int j = 0; j < 2; ++j) {
    CHECK(c.p[j] == 1);
    CHECK(c.m[j].is_one());
  }
}

TEST_CASE("higher powers on the base are still the second case") {
  const auto ctx = vres::product_of_projective_spaces(2, 1);
  const LabeledComplex l = labeled_bipyramid(1, ctx, {"y0^2", "y1^3", "x0", "x1"});
  const auto c = vres::classify(l, ctx, Q);
  CHECK(c.verdict == Verdict::virtual_case2);
  CHECK(c.p == std::vector<int>{2, 3});
  CHECK(c.m[0].is_one());
  CHECK(c.m[1].is_one());
}

TEST_CASE("eliminating the homology of the fixture") {
  const auto doc = testutil::load_fixture("bipyramid_p2p1.json");
  const auto& names = doc.context.variables;
  const LabeledComplex out = vres::eliminate_homology(doc.labeled, doc.context, Q);
  CHECK(out.complex().vertex_count() == 5);
  CHECK(out.complex().vertex_names().back() == "vp");
  CHECK(out.vertex_label(4) == vres::parse_monomial("x0*x1", names));
  CHECK(out.complex().dim() == doc.labeled.complex().dim());
  CHECK(vres::check_free(out, Q).is_free);
  CHECK(vres::FreeChainComplex::build(out).ranks() == std::vector<int>{1, 5, 8, 4});
  const auto& b = doc.context.irrelevant;
  CHECK(out.vertex_label_ideal().saturate(b) == doc.labeled.vertex_label_ideal().saturate(b));
}

TEST_CASE("the standard labelings are freed by a unit label") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}) {
    const auto ctx = vres::product_of_projective_spaces(n, k);
    const LabeledComplex l = vres::standard_virtual_labeling(n, k);
    const LabeledComplex out = vres::eliminate_homology(l, ctx, Q);
    CHECK(out.vertex_label(k + 3).is_one());
    CHECK(vres::check_free(out, Q).is_free);
    CHECK(out.vertex_label_ideal().saturate(ctx.irrelevant).is_unit());
  }
}

TEST_CASE("argument screening") {
  const auto doc = testutil::load_fixture("bipyramid_p2p1.json");
  const auto split = testutil::load_fixture("bipyramid_p2p1_split.json");
  // not a bipyramid over a simplex
  CHECK_THROWS_AS(vres::classify(split.labeled, split.context, Q), vres::ArgumentError);
  // ring mismatch
  CHECK_THROWS_AS(vres::classify(doc.labeled, vres::product_of_projective_spaces(1, 1), Q),
                  vres::ArgumentError);
  // base size must match the smaller variable block
  const auto p2p1 = vres::product_of_projective_spaces(2, 1);
  const LabeledComplex big =
      labeled_bipyramid(2, p2p1, {"y0", "y1", "y0*y1", "x0", "x1"});
  CHECK_THROWS_AS(vres::classify(big, p2p1, Q), vres::ArgumentError);

  // elimination wants virtual_case2 with a one-dimensional base
  const auto p1p1 = vres::product_of_projective_spaces(1, 1);
  const LabeledComplex freeb = labeled_bipyramid(1, p1p1, {"x0", "y1", "x0*y0", "x1*y0"});
  CHECK_THROWS_AS(vres::eliminate_homology(freeb, p1p1, Q), vres::ArgumentError);
  const auto p1p0 = vres::product_of_projective_spaces(1, 0);
  const LabeledComplex tiny = labeled_bipyramid(0, p1p0, {"y0", "x0", "x1"});
  CHECK_THROWS_AS(vres::eliminate_homology(tiny, p1p0, Q), vres::ArgumentError);
}

TEST_CASE("elimination picks a fresh vertex name when vp is taken") {
  const auto doc = testutil::load_fixture("bipyramid_p2p1.json");
  const auto& sc = doc.labeled.complex();
  std::vector<std::string> names = sc.vertex_names();
  names[0] = "vp";  // rename v0 to collide
  vres::SimplicialComplex renamed(names, sc.facets());
  std::vector<Monomial> labels;
  for (int i = 0; i < sc.vertex_count(); ++i) labels.push_back(doc.labeled.vertex_label(i));
  const LabeledComplex l = LabeledComplex::from_vertex_labels(renamed, std::move(labels));
  const LabeledComplex out = vres::eliminate_homology(l, doc.context, Q);
  CHECK(out.complex().vertex_count() == 5);
  CHECK(out.complex().vertex_names().back() != "vp");
  CHECK(vres::check_free(out, Q).is_free);
}

TEST_SUITE_END();
