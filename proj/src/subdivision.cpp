#include "vres/subdivision.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vres/chain.hpp"
#include "vres/error.hpp"
#include "vres/homology.hpp"
#include "vres/linalg.hpp"

namespace vres {

namespace {

// The link of ω, carrying the ambient labels of its faces.
LabeledComplex labeled_link(const LabeledComplex& l, const Face& omega) {
  SimplicialComplex gamma = l.complex().link(omega);
  std::map<Face, Monomial> labels;
  for (const Face& f : gamma.all_faces()) {
    Face ambient = l.complex().face_by_names(gamma.face_names(f));
    labels[f] = l.label(ambient);
  }
  return LabeledComplex::with_face_labels(gamma, std::move(labels));
}

// dim H̃_{j}(K) for j = -1..dim, padded with zeros up to j = levels-2.
std::vector<int> homology_dims(const SimplicialComplex& k, const FieldSpec& field,
                               int levels) {
  std::vector<int> dims(static_cast<size_t>(levels), 0);
  for (const HomologyGroup& g : reduced_homology(k, field)) {
    size_t slot = static_cast<size_t>(g.index + 1);
    if (slot < dims.size()) dims[slot] = g.dimension;
  }
  return dims;
}

void require_plan_face(const LabeledComplex& l, const SubdivisionPlan& plan) {
  if (!l.complex().has_face(plan.omega))
    throw ArgumentError("subdivision target is not a face of the complex");
  if (plan.omega.size() < 2)
    throw ArgumentError("subdivision target must have dimension at least 1");
  if (plan.label.nvars() != l.nvars())
    throw ArgumentError("subdivision label lives in the wrong ring");
}

}  // namespace

SubdivisionPlan plan_subdivision(const LabeledComplex& l, const Face& omega,
                                 const Monomial& label, const ToricContext& ctx,
                                 const std::string& new_vertex_name) {
  SubdivisionPlan plan;
  plan.omega = omega;
  plan.new_vertex_name = new_vertex_name;
  plan.label = label;
  require_plan_face(l, plan);
  if (ctx.variables.size() != static_cast<size_t>(l.nvars()))
    throw ArgumentError("toric context does not match the labeling's ring");
  if (l.complex().vertex_index(new_vertex_name) >= 0)
    throw ArgumentError("new vertex name '" + new_vertex_name + "' already in use");

  plan.divides_face_label = label.divides(l.label(omega));

  std::vector<Monomial> omega_labels;
  for (int v : omega) omega_labels.push_back(l.vertex_label(v));
  MonomialIdeal face_ideal(omega_labels, l.nvars());
  plan.in_saturation = face_ideal.saturate(ctx.irrelevant).contains(label);
  return plan;
}

LabeledComplex apply_subdivision(const LabeledComplex& l, const SubdivisionPlan& plan) {
  require_plan_face(l, plan);
  if (!l.lcm_labeled())
    throw ArgumentError("subdivision requires an lcm-labeling");
  if (l.complex().vertex_index(plan.new_vertex_name) >= 0)
    throw ArgumentError("new vertex name '" + plan.new_vertex_name + "' already in use");

  SimplicialComplex sub = l.complex().stellar_subdivide(plan.omega, plan.new_vertex_name);
  std::vector<Monomial> labels;
  for (int v = 0; v < l.complex().vertex_count(); ++v) labels.push_back(l.vertex_label(v));
  labels.push_back(plan.label);
  LabeledComplex lp = LabeledComplex::from_vertex_labels(sub, std::move(labels));

  const int old_count = l.complex().vertex_count();
  for (const Face& f : sub.all_faces()) {
    if (!f.empty() && f.back() >= old_count) continue;
    if (!l.complex().has_face(f)) continue;
    if (lp.label(f) != l.label(f))
      throw TheoremViolation("label changed on a shared face during subdivision");
  }
  return lp;
}

HypothesisReport check_reduction_hypothesis(const LabeledComplex& l,
                                            const SubdivisionPlan& plan,
                                            const FieldSpec& field) {
  require_plan_face(l, plan);
  if (!l.lcm_labeled())
    throw ArgumentError("reduction hypothesis requires an lcm-labeling");
  if (!plan.virtual_compatible())
    throw ArgumentError("reduction hypothesis requires a virtual-compatible plan");

  LabeledComplex gamma = labeled_link(l, plan.omega);
  HypothesisReport report;
  for (const auto& att : l.attainable_subcomplexes(plan.label)) {
    bool excluded = false;
    for (int v : plan.omega)
      if (l.vertex_label(v).divides(att.witness)) {
        excluded = true;
        break;
      }
    if (excluded) continue;
    ++report.degrees_checked;

    SimplicialComplex gamma_m = gamma.subcomplex_at(att.witness);
    for (const HomologyGroup& g : reduced_homology(gamma_m, field)) {
      if (g.dimension == 0) continue;
      InducedMapReport map =
          induced_map_on_homology(gamma_m, att.subcomplex, g.index, field);
      if (!map.injective) {
        report.pass = false;
        report.failures.push_back({att.witness, g.index});
      }
    }
  }
  return report;
}

ReductionReport verify_reduction(const LabeledComplex& l, const LabeledComplex& lp,
                                 const SubdivisionPlan& plan, const FieldSpec& field) {
  LabeledComplex expected = apply_subdivision(l, plan);
  if (!same_faces(expected.complex(), lp.complex()) || expected.labels() != lp.labels())
    throw ArgumentError("subdivided complex does not match the plan applied to the source");

  ReductionReport report;
  report.hypothesis = check_reduction_hypothesis(l, plan, field);

  LabeledComplex gamma = labeled_link(l, plan.omega);
  std::set<Monomial> degrees;
  for (const auto& att : l.attainable_subcomplexes()) degrees.insert(att.witness);
  for (const auto& att : lp.attainable_subcomplexes()) degrees.insert(att.witness);

  std::vector<Monomial> ordered(degrees.begin(), degrees.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a < b;
  });

  int levels = 2;
  if (!l.complex().is_void()) levels = std::max(levels, l.complex().dim() + 2);
  if (!lp.complex().is_void()) levels = std::max(levels, lp.complex().dim() + 2);

  for (const Monomial& m : ordered) {
    std::vector<int> before = homology_dims(l.subcomplex_at(m), field, levels);
    std::vector<int> after = homology_dims(lp.subcomplex_at(m), field, levels);
    std::vector<int> link = homology_dims(gamma.subcomplex_at(m), field, levels);
    bool label_divides = plan.label.divides(m);
    // Strictness can only happen away from the degrees where some vertex of
    // ω lands in Δ_m: there the comparison map is an isomorphism, so the
    // strictness clause inherits the hypothesis's filter.
    bool omega_vertex_in = false;
    for (int v : plan.omega)
      if (l.vertex_label(v).divides(m)) {
        omega_vertex_in = true;
        break;
      }
    for (int i = 0; i < levels; ++i) {
      ReductionRow row;
      row.degree = m;
      row.index = i;
      row.before = before[i];
      row.after = after[i];
      row.link_dim = link[i];
      row.strict_required = label_divides && !omega_vertex_in && link[i] > 0;
      if (row.after > row.before) report.inequality_holds = false;
      if (row.strict_required && row.after >= row.before) report.strictness_holds = false;
      if (row.before > 0 || row.after > 0 || row.strict_required)
        report.rows.push_back(std::move(row));
    }
  }

  if (report.hypothesis.pass && !(report.inequality_holds && report.strictness_holds))
    throw TheoremViolation("homology reduction failed despite a passing hypothesis");
  return report;
}

bool kernel_membership(const LabeledComplex& l, const LabeledComplex& lp,
                       const SubdivisionPlan& plan, const StrandCycle& cycle,
                       const Monomial& m, const FieldSpec& field) {
  if (!plan.label.divides(m))
    throw ArgumentError("the plan's label must divide the strand degree");
  ChainMap iota = subdivision_chain_map(l, lp, plan.omega, plan.new_vertex_name);
  const FreeChainComplex& fsrc = iota.source();
  const FreeChainComplex& ftgt = iota.target();
  Strand src = strand(fsrc, m);
  Strand tgt = strand(ftgt, m);

  if (cycle.empty()) return true;
  const size_t level = cycle.front().first.size();
  for (const auto& [face, coeff] : cycle) {
    (void)coeff;
    if (face.size() != level)
      throw ArgumentError("cycle mixes faces of different dimensions");
    if (!l.complex().has_face(face))
      throw ArgumentError("cycle uses a face outside the complex");
    if (!l.label(face).divides(m))
      throw ArgumentError("cycle uses a face outside the strand");
  }
  if (level > src.bases.size() - 1)
    throw ArgumentError("cycle dimension exceeds the complex");

  std::vector<long> coef(src.bases[level].size(), 0);
  for (const auto& [face, c] : cycle) {
    int term = fsrc.face_index(static_cast<int>(level), face);
    auto it = std::find(src.bases[level].begin(), src.bases[level].end(), term);
    if (it == src.bases[level].end())
      throw ArgumentError("cycle uses a face outside the strand");
    coef[static_cast<size_t>(it - src.bases[level].begin())] += c;
  }

  // A class must be a cycle: the strand differential kills it.
  if (level >= 1 && level < src.maps.size()) {
    const auto& d = src.maps[level];
    for (size_t r = 0; r < d.size(); ++r) {
      long acc = 0;
      for (size_t c = 0; c < coef.size(); ++c) acc += static_cast<long>(d[r][c]) * coef[c];
      if (acc != 0) throw ArgumentError("input is not a cycle in the strand");
    }
  }

  auto mats = iota.strand_matrices(src, tgt);
  const auto& block = mats[level];
  std::vector<long> image(tgt.bases[level].size(), 0);
  for (size_t r = 0; r < image.size(); ++r)
    for (size_t c = 0; c < coef.size(); ++c)
      image[r] += static_cast<long>(block[r][c]) * coef[c];

  bool has_next = level + 1 < tgt.maps.size();
  if (!has_next) {
    for (long v : image)
      if (v != 0) return false;
    return true;
  }
  const auto& d_next = tgt.maps[level + 1];
  return with_field(field, [&](auto f) {
    using F = decltype(f);
    Matrix<F> a(f, static_cast<int>(image.size()),
                static_cast<int>(tgt.bases[level + 1].size()));
    for (int r = 0; r < a.rows; ++r)
      for (int c = 0; c < a.cols; ++c) a.at(r, c) = f.from_int(d_next[r][c]);
    std::vector<typename F::Value> b;
    b.reserve(image.size());
    for (long v : image) b.push_back(f.from_int(v));
    return solve(f, a, b).has_value() ? 1 : 0;
  }) != 0;
}

}  // namespace vres
