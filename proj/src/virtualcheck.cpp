#include "vres/virtualcheck.hpp"

#include <algorithm>
#include <set>

#include "vres/error.hpp"
#include "vres/homology.hpp"

namespace vres {

namespace {

int max_label_exponent(const LabeledComplex& l) {
  int e = 0;
  for (const auto& [face, label] : l.labels())
    for (int i = 0; i < label.nvars(); ++i) e = std::max(e, label.exponent(i));
  return e;
}

std::vector<int> subcomplex_vertices(const SimplicialComplex& k) {
  std::vector<int> out;
  for (const Face& f : k.faces_of_dim(0)) out.push_back(f[0]);
  return out;
}

void require_context(const LabeledComplex& l, const ToricContext& ctx) {
  if (ctx.variables.size() != static_cast<size_t>(l.nvars()))
    throw ArgumentError("context has " + std::to_string(ctx.variables.size()) +
                        " variables but labels live in " + std::to_string(l.nvars()));
  for (const Monomial& b : ctx.irrelevant.generators())
    for (int i = 0; i < b.nvars(); ++i)
      if (b.exponent(i) > 1)
        throw ArgumentError("irrelevant ideal must be square-free: offending generator " +
                            render_monomial(b, ctx.variables));
}

}  // namespace

FreeCheck check_free(const LabeledComplex& l, const FieldSpec& field) {
  FreeCheck out;
  AcyclicityCache cache(field);
  for (const auto& att : l.attainable_subcomplexes()) {
    if (cache.is_acyclic(att.subcomplex)) continue;
    for (const HomologyGroup& g : reduced_homology(att.subcomplex, field)) {
      if (g.index < 0 || g.dimension == 0) continue;
      out.is_free = false;
      out.witness_degree = att.witness;
      out.witness_index = g.index;
      return out;
    }
    throw TheoremViolation("acyclicity test disagrees with homology dimensions");
  }
  return out;
}

Verdict check_virtual(const LabeledComplex& l, const ToricContext& ctx, const FieldSpec& field) {
  require_context(l, ctx);
  Verdict v;
  v.field = field;
  v.free_check = check_free(l, field);
  v.is_free = v.free_check.is_free;

  const int bracket = 1 + max_label_exponent(l);
  v.is_virtual = true;
  for (const Monomial& b : ctx.irrelevant.generators()) {
    GeneratorCheck g;
    g.generator = b;
    FreeCheck fc = check_free(l.truncate_labels(b), field);
    g.free_after_truncation = fc.is_free;
    if (!fc.is_free) {
      v.is_virtual = false;
      g.truncated_witness = fc.witness_degree;
      g.witness_index = fc.witness_index;
      g.persistent_degree = fc.witness_degree->times(b.pow(bracket));
    }
    v.per_generator.push_back(std::move(g));
  }
  if (v.is_free && !v.is_virtual)
    throw TheoremViolation("free complex failed the virtual test");

  if (!v.is_free) {
    AcyclicityCache cache(field);
    for (const auto& att : l.attainable_subcomplexes()) {
      if (cache.is_acyclic(att.subcomplex)) continue;
      for (const HomologyGroup& g : reduced_homology(att.subcomplex, field)) {
        if (g.index < 0 || g.dimension == 0) continue;
        v.homology_positions.push_back({g.index + 1, att.witness, g.dimension});
      }
    }
  }
  return v;
}

MonomialIdeal annihilator_ideal(const LabeledComplex& l, const Monomial& m,
                                const FieldSpec& field) {
  if (!l.lcm_labeled())
    throw ArgumentError("annihilator ideal requires an lcm-labeling");
  if (m.nvars() != l.nvars())
    throw ArgumentError("degree lives in the wrong ring");
  AcyclicityCache cache(field);
  std::vector<Monomial> gens;
  for (const auto& att : l.attainable_subcomplexes(m)) {
    if (!cache.is_acyclic(att.subcomplex)) continue;
    gens.push_back(att.witness.quotient(m));
  }
  return MonomialIdeal(gens, m.nvars());
}

PrimeSearch prime_annihilator(const LabeledComplex& l, Monomial m, const FieldSpec& field) {
  PrimeSearch out;
  out.ideal = annihilator_ideal(l, m, field);
  // Unit annihilator means Δ_m is acyclic: there is no homology class at m
  // to localize, so the walk has nowhere to go. Steps below multiply m by a
  // variable outside the (proper) ideal, which keeps it proper.
  if (out.ideal.contains(Monomial::one(l.nvars())))
    throw ArgumentError("the subcomplex at the starting degree is acyclic; "
                        "the annihilator is the unit ideal");
  // Each step adds a variable not in the current annihilator to m's support
  // budget; the attainable lattice above m strictly shrinks, so termination
  // is guaranteed well before this bound.
  const int limit = 64 * (l.nvars() + 1);
  while (!out.ideal.is_prime()) {
    Monomial f = Monomial::one(l.nvars());
    bool found = false;
    for (const Monomial& g : out.ideal.generators()) {
      if (g.total_degree() < 2) continue;
      for (int i = 0; i < g.nvars() && !found; ++i) {
        if (g.exponent(i) == 0) continue;
        std::vector<int> e(g.nvars(), 0);
        e[i] = 1;
        Monomial x(e);
        if (!out.ideal.contains(x)) {
          f = x;
          found = true;
        }
      }
      if (found) break;
    }
    if (!found)
      throw TheoremViolation("no proper factor available: annihilator not prime yet has "
                             "no usable non-variable generator");
    m = m.times(f);
    out.ideal = annihilator_ideal(l, m, field);
    if (++out.steps > limit)
      throw TheoremViolation("prime annihilator walk failed to terminate");
  }
  out.degree = m;
  return out;
}

MinVertexReport verify_min_vertices(const LabeledComplex& l, const ToricContext& ctx,
                                    const FieldSpec& field) {
  require_context(l, ctx);
  if (!l.lcm_labeled())
    throw ArgumentError("vertex-count bound requires an lcm-labeling");
  Verdict v = check_virtual(l, ctx, field);
  if (!v.is_virtual)
    throw ArgumentError("vertex-count bound applies to virtual resolutions only");

  MinVertexReport report;
  report.codim = ctx.irrelevant.codimension();
  report.total_vertices = static_cast<int>(l.complex().faces_of_dim(0).size());

  AcyclicityCache cache(field);
  std::vector<std::pair<Monomial, std::set<int>>> bad;
  for (const auto& att : l.attainable_subcomplexes()) {
    if (cache.is_acyclic(att.subcomplex)) continue;
    std::vector<int> verts = subcomplex_vertices(att.subcomplex);
    bad.emplace_back(att.witness, std::set<int>(verts.begin(), verts.end()));
  }
  for (size_t i = 0; i < bad.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < bad.size() && maximal; ++j) {
      if (i == j) continue;
      if (bad[i].second != bad[j].second &&
          std::includes(bad[j].second.begin(), bad[j].second.end(), bad[i].second.begin(),
                        bad[i].second.end()))
        maximal = false;
    }
    if (!maximal) continue;
    MinVertexEntry e;
    e.degree = bad[i].first;
    e.subcomplex_vertices = static_cast<int>(bad[i].second.size());
    e.slack = report.total_vertices - report.codim - e.subcomplex_vertices;
    if (e.slack < 0)
      throw TheoremViolation("vertex-count bound violated at degree " +
                             render_monomial(e.degree, ctx.variables));
    report.entries.push_back(std::move(e));
  }
  return report;
}

BipyramidShape verify_unique_minimum(const LabeledComplex& l, const ToricContext& ctx,
                                     const FieldSpec& field) {
  require_context(l, ctx);
  if (!l.lcm_labeled())
    throw ArgumentError("minimal-complex recognition requires an lcm-labeling");
  const int c = ctx.irrelevant.codimension();
  const int nverts = static_cast<int>(l.complex().faces_of_dim(0).size());
  if (nverts != c + 2)
    throw ArgumentError("minimal-complex recognition requires exactly codim+2 = " +
                        std::to_string(c + 2) + " vertices, found " + std::to_string(nverts));
  Verdict v = check_virtual(l, ctx, field);
  if (!v.is_virtual)
    throw ArgumentError("minimal-complex recognition requires a virtual resolution");
  if (v.is_free)
    throw ArgumentError("minimal-complex recognition requires homology above level zero");

  auto shape = is_bipyramid(l.complex());
  if (!shape)
    throw TheoremViolation("virtual-not-free complex on codim+2 vertices is not a bipyramid");
  if (static_cast<int>(shape->base.size()) != c)
    throw TheoremViolation("bipyramid base has " + std::to_string(shape->base.size()) +
                           " vertices, expected codim = " + std::to_string(c));
  return *shape;
}

}  // namespace vres
