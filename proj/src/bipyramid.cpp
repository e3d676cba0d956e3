#include "vres/bipyramid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "vres/error.hpp"
#include "vres/subdivision.hpp"
#include "vres/virtualcheck.hpp"

namespace vres {

namespace {

struct Blocks {
  std::vector<int> x, y;  // variable indices; |x| ≥ |y|
};

// Recovers the two variable blocks from a complete-bipartite irrelevant
// ideal (the P^a×P^b shape): every generator is a product of one variable
// from each block, and every such product appears.
Blocks infer_blocks(const ToricContext& ctx) {
  const auto& gens = ctx.irrelevant.generators();
  if (gens.empty())
    throw ArgumentError("irrelevant ideal has no generators");
  std::vector<std::set<int>> partners(ctx.nvars());
  for (const Monomial& g : gens) {
    std::vector<int> supp = g.support();
    if (supp.size() != 2 || g.total_degree() != 2)
      throw ArgumentError("irrelevant ideal is not that of a product of two "
                          "projective spaces");
    partners[supp[0]].insert(supp[1]);
    partners[supp[1]].insert(supp[0]);
  }
  const std::vector<int> first = gens.front().support();
  std::set<int> a(partners[first[1]].begin(), partners[first[1]].end());
  std::set<int> b(partners[first[0]].begin(), partners[first[0]].end());
  if (static_cast<int>(a.size() + b.size()) != ctx.nvars() ||
      gens.size() != a.size() * b.size())
    throw ArgumentError("irrelevant ideal is not complete bipartite");
  for (int v : a)
    if (b.count(v)) throw ArgumentError("irrelevant ideal blocks overlap");
  for (const Monomial& g : gens) {
    std::vector<int> supp = g.support();
    if (a.count(supp[0]) == a.count(supp[1]))
      throw ArgumentError("irrelevant ideal generator inside one block");
  }
  Blocks blocks;
  blocks.x.assign(a.begin(), a.end());
  blocks.y.assign(b.begin(), b.end());
  if (blocks.x.size() < blocks.y.size()) std::swap(blocks.x, blocks.y);
  return blocks;
}

// Tries to factor every base label as var^{p}·m with p ≥ 1 and m | f, the
// j-th base vertex using vars[perm[j]]. Maximal p is optimal: it minimizes m.
bool try_assignment(const LabeledComplex& l, const std::vector<int>& base_verts,
                    const Monomial& f, const std::vector<int>& vars,
                    const std::vector<int>& perm, std::vector<int>& p_out,
                    std::vector<Monomial>& m_out) {
  p_out.clear();
  m_out.clear();
  for (size_t j = 0; j < base_verts.size(); ++j) {
    const Monomial& label = l.vertex_label(base_verts[j]);
    int var = vars[perm[j]];
    int p = label.exponent(var);
    if (p < 1) return false;
    std::vector<int> e = label.exponents();
    e[var] = 0;
    Monomial m(e);
    if (!m.divides(f)) return false;
    p_out.push_back(p);
    m_out.push_back(std::move(m));
  }
  return true;
}

}  // namespace

const char* to_string(BipyramidClassification::Verdict v) {
  switch (v) {
    case BipyramidClassification::Verdict::not_virtual: return "not_virtual";
    case BipyramidClassification::Verdict::virtual_case1: return "virtual_case1";
    case BipyramidClassification::Verdict::virtual_case2: return "virtual_case2";
    case BipyramidClassification::Verdict::free: return "free";
  }
  return "?";
}

BipyramidClassification classify(const LabeledComplex& l, const ToricContext& ctx,
                                 const FieldSpec& field) {
  if (!l.lcm_labeled())
    throw ArgumentError("bipyramid classification requires an lcm-labeling");
  if (ctx.variables.size() != static_cast<size_t>(l.nvars()))
    throw ArgumentError("toric context does not match the labeling's ring");
  auto shape = is_bipyramid(l.complex());
  if (!shape)
    throw ArgumentError("complex is not a bipyramid over a simplex");
  Blocks blocks = infer_blocks(ctx);
  if (shape->base.size() != blocks.y.size())
    throw ArgumentError("base has " + std::to_string(shape->base.size()) +
                        " vertices but the smaller block has " +
                        std::to_string(blocks.y.size()) + " variables");

  BipyramidClassification out;
  out.base = shape->base;
  out.apexes = shape->apexes;

  std::vector<int> base_verts;
  for (const std::string& name : shape->base)
    base_verts.push_back(l.complex().vertex_index(name));
  int w0 = l.complex().vertex_index(shape->apexes.first);
  int w1 = l.complex().vertex_index(shape->apexes.second);
  out.apex_lcm = lcm(l.vertex_label(w0), l.vertex_label(w1));

  for (size_t j = 0; j < base_verts.size(); ++j) {
    if (l.vertex_label(base_verts[j]).divides(out.apex_lcm)) {
      out.verdict = BipyramidClassification::Verdict::virtual_case1;
      out.dividing_vertex = shape->base[j];
      break;
    }
  }

  if (!out.dividing_vertex) {
    const bool swap_allowed = blocks.x.size() == blocks.y.size();
    for (int swapped = 0; swapped <= (swap_allowed ? 1 : 0); ++swapped) {
      const std::vector<int>& vars = swapped ? blocks.x : blocks.y;
      std::vector<int> perm(vars.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<int> p;
        std::vector<Monomial> m;
        if (try_assignment(l, base_verts, out.apex_lcm, vars, perm, p, m)) {
          out.verdict = BipyramidClassification::Verdict::virtual_case2;
          out.swapped = swapped != 0;
          out.assignment.clear();
          for (size_t j = 0; j < perm.size(); ++j) out.assignment.push_back(vars[perm[j]]);
          out.p = std::move(p);
          out.m = std::move(m);
          break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (out.verdict == BipyramidClassification::Verdict::virtual_case2) break;
    }
  }

  Verdict engine = check_virtual(l, ctx, field);
  const bool combinatorial_virtual =
      out.verdict != BipyramidClassification::Verdict::not_virtual;
  if (combinatorial_virtual != engine.is_virtual)
    throw TheoremViolation("bipyramid classification disagrees with the homological "
                           "virtual test");
  const bool case1 = out.verdict == BipyramidClassification::Verdict::virtual_case1;
  if (case1 != engine.is_free)
    throw TheoremViolation("bipyramid case-1 verdict disagrees with the free test");
  return out;
}

LabeledComplex eliminate_homology(const LabeledComplex& l, const ToricContext& ctx,
                                  const FieldSpec& field) {
  BipyramidClassification cls = classify(l, ctx, field);
  if (cls.verdict != BipyramidClassification::Verdict::virtual_case2)
    throw ArgumentError("homology elimination needs a virtual_case2 labeling, got " +
                        std::string(to_string(cls.verdict)));
  if (cls.base.size() < 2)
    throw ArgumentError("homology elimination needs a base of dimension at least 1");

  Face omega = l.complex().face_by_names(cls.base);
  Monomial label = Monomial::one(l.nvars());
  for (const Monomial& mj : cls.m) label = lcm(label, mj);

  std::string name = "vp";
  for (int suffix = 1; l.complex().vertex_index(name) >= 0; ++suffix)
    name = "vp" + std::to_string(suffix);

  SubdivisionPlan plan = plan_subdivision(l, omega, label, ctx, name);
  if (!plan.virtual_compatible())
    throw TheoremViolation("constructed subdivision is not virtual-compatible");
  LabeledComplex lp = apply_subdivision(l, plan);

  if (!check_free(lp, field).is_free)
    throw TheoremViolation("homology elimination did not produce a free resolution");
  MonomialIdeal before = l.vertex_label_ideal().saturate(ctx.irrelevant);
  MonomialIdeal after = lp.vertex_label_ideal().saturate(ctx.irrelevant);
  if (before != after)
    throw TheoremViolation("homology elimination changed the saturated ideal");
  if (lp.complex().dim() != l.complex().dim())
    throw TheoremViolation("homology elimination changed the resolution length");
  return lp;
}

LabeledComplex standard_virtual_labeling(int n, int k) {
  if (k < 0 || n < k || n < 1)
    throw ArgumentError("parameters must satisfy n ≥ k ≥ 0 and n ≥ 1");
  SimplicialComplex bip = bipyramid_over_simplex(k);
  const int nvars = (n + 1) + (k + 1);
  std::vector<Monomial> labels;
  for (int i = 0; i <= k; ++i) {
    std::vector<int> e(nvars, 0);
    e[n + 1 + i] = 1;  // y_i
    labels.emplace_back(e);
  }
  for (int i = 0; i <= 1; ++i) {
    std::vector<int> e(nvars, 0);
    e[i] = 1;  // x_i
    labels.emplace_back(e);
  }
  LabeledComplex l = LabeledComplex::from_vertex_labels(bip, std::move(labels));

  Verdict v = check_virtual(l, product_of_projective_spaces(n, k), FieldSpec::rationals());
  if (!v.is_virtual || v.is_free)
    throw TheoremViolation("standard labeling is not virtual-not-free");
  return l;
}

}  // namespace vres
