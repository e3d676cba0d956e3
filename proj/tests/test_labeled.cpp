#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "vres/labeled.hpp"

using vres::Face;
using vres::LabeledComplex;
using vres::Monomial;
using vres::SimplicialComplex;

TEST_SUITE_BEGIN("labeled");

TEST_CASE("lcm labeling from vertex labels") {
  const auto doc = testutil::load_fixture("bipyramid_p2p1.json");
  const LabeledComplex& l = doc.labeled;
  const auto& names = doc.context.variables;
  CHECK(l.lcm_labeled());
  CHECK(l.nvars() == 5);
  CHECK(l.label({}) == Monomial::one(5));
  // edge {v0,v1} = lcm(x0y0, x1y1)
  CHECK(l.label({0, 1}) == vres::parse_monomial("x0*x1*y0*y1", names));
  CHECK(l.label({0, 1, 2}) == vres::parse_monomial("x0*x1*x2*y0*y1", names));
  CHECK(l.vertex_label(3) == vres::parse_monomial("x0*x2^2", names));
  CHECK(l.top_label() == vres::parse_monomial("x0*x1*x2^2*y0*y1", names));
  CHECK(l.vertex_label_ideal().generators().size() == 4);
  CHECK_THROWS_AS(l.label({0, 3, 9}), vres::ArgumentError);
}

TEST_CASE("labels weakly increase along inclusions") {
  testutil::Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const testutil::Instance inst = testutil::random_instance(rng);
    for (const auto& [face, lab] : inst.labeled.labels())
      for (std::size_t drop = 0; drop < face.size(); ++drop) {
        Face sub = face;
        sub.erase(sub.begin() + drop);
        CHECK(inst.labeled.label(sub).divides(lab));
      }
  }
}

TEST_CASE("explicit face labels validate divisibility") {
  const SimplicialComplex edge({"a", "b"}, {{0, 1}});
  std::map<Face, Monomial> good{{{}, Monomial::one(2)},
                                {{0}, Monomial({1, 0})},
                                {{1}, Monomial({0, 1})},
                                {{0, 1}, Monomial({1, 2})}};
  const LabeledComplex l = LabeledComplex::with_face_labels(edge, good);
  CHECK(!l.lcm_labeled());  // {0,1} label exceeds the lcm
  CHECK(l.label({0, 1}) == Monomial({1, 2}));

  std::map<Face, Monomial> lcmish{{{}, Monomial::one(2)},
                                  {{0}, Monomial({1, 0})},
                                  {{1}, Monomial({0, 1})},
                                  {{0, 1}, Monomial({1, 1})}};
  CHECK(LabeledComplex::with_face_labels(edge, lcmish).lcm_labeled());

  std::map<Face, Monomial> bad{{{}, Monomial::one(2)},
                               {{0}, Monomial({1, 0})},
                               {{1}, Monomial({0, 1})},
                               {{0, 1}, Monomial({1, 0})}};  // drops the b exponent
  CHECK_THROWS_AS(LabeledComplex::with_face_labels(edge, bad), vres::ArgumentError);
}

TEST_CASE("subcomplex at a monomial keeps exactly the dividing labels") {
  const auto doc = testutil::load_fixture("bipyramid_p2p1.json");
  const LabeledComplex& l = doc.labeled;
  const auto& names = doc.context.variables;
  const SimplicialComplex sub = l.subcomplex_at(vres::parse_monomial("x0*x1*x2^2", names));
  // w0 = x1x2 and w1 = x0x2^2 divide; v0, v1 do not
  CHECK(sub.has_face({2}));
  CHECK(sub.has_face({3}));
  CHECK(!sub.has_face({0}));
  CHECK(!sub.has_face({1}));
  CHECK(!sub.has_face({2, 3}));  // not a face of the ambient complex
  CHECK(sub.vertex_names() == l.complex().vertex_names());

  for (const Face& f : l.subcomplex_at(l.top_label()).all_faces())
    CHECK(l.complex().has_face(f));
}

TEST_CASE("subcomplex intersection law") {
  // Δ_{gcd(f,g)·m} = Δ_{f·m} ∩ Δ_{g·m} — divisibility into a gcd is exactly
  // divisibility into both sides
  testutil::Rng rng(17);
  for (int t = 0; t < 15; ++t) {
    const testutil::Instance inst = testutil::random_instance(rng);
    const int nv = inst.ctx.nvars();
    const Monomial m = testutil::random_monomial(rng, nv, 2);
    const Monomial f = testutil::random_monomial(rng, nv, 2);
    const Monomial g = testutil::random_monomial(rng, nv, 2);
    const SimplicialComplex left = inst.labeled.subcomplex_at(gcd(f.times(m), g.times(m)));
    const SimplicialComplex a = inst.labeled.subcomplex_at(f.times(m));
    const SimplicialComplex b = inst.labeled.subcomplex_at(g.times(m));
    for (const Face& face : inst.labeled.complex().all_faces())
      CHECK(left.has_face(face) == (a.has_face(face) && b.has_face(face)));
  }
}

TEST_CASE("attainable subcomplexes are exhaustive with minimal witnesses") {
  testutil::Rng rng(23);
  for (int t = 0; t < 12; ++t) {
    const testutil::Instance inst = testutil::random_instance(rng, 5);
    const LabeledComplex& l = inst.labeled;
    const auto attainable = l.attainable_subcomplexes();
    const int cap = testutil::max_label_exponent(l);

    // every box monomial's subcomplex appears, and the witness divides any
    // realizing monomial (so it is the unique divisibility-minimal one)
    for (const Monomial& m : testutil::monomial_box(l.nvars(), cap)) {
      const SimplicialComplex sub = l.subcomplex_at(m);
      bool found = false;
      for (const auto& att : attainable)
        if (vres::same_faces(att.subcomplex, sub)) {
          found = true;
          CHECK(att.witness.divides(m));
          CHECK(vres::same_faces(l.subcomplex_at(att.witness), sub));
        }
      CHECK(found);
    }

    // no duplicates
    for (std::size_t i = 0; i < attainable.size(); ++i)
      for (std::size_t j = i + 1; j < attainable.size(); ++j)
        CHECK(!vres::same_faces(attainable[i].subcomplex, attainable[j].subcomplex));
  }
}

TEST_CASE("attainable subcomplexes above a floor") {
  const auto doc = testutil::load_fixture("bipyramid_p2p1.json");
  const auto& names = doc.context.variables;
  const Monomial floor = vres::parse_monomial("x1*x2", names);
  for (const auto& att : doc.labeled.attainable_subcomplexes(floor)) {
    CHECK(floor.divides(att.witness));
    CHECK(att.subcomplex.has_face({2}));  // w0 = x1x2 divides every witness
  }
}

TEST_CASE("truncation zeroes the chosen block and keeps lcm structure") {
  const auto doc = testutil::load_fixture("bipyramid_p2p1.json");
  const auto& names = doc.context.variables;
  const Monomial b = vres::parse_monomial("x0*y0", names);
  const LabeledComplex t = doc.labeled.truncate_labels(b);
  CHECK(t.lcm_labeled());
  CHECK(t.vertex_label(0) == Monomial::one(5));                            // x0y0 -> 1
  CHECK(t.vertex_label(3) == vres::parse_monomial("x2^2", names));        // x0x2^2 -> x2^2
  CHECK(t.label({0, 1}) == vres::parse_monomial("x1*y1", names));
  CHECK_THROWS_AS(doc.labeled.truncate_labels(vres::parse_monomial("x0^2", names)),
                  vres::ArgumentError);
}

TEST_SUITE_END();
