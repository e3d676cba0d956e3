#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vres/field.hpp"
#include "vres/labeled.hpp"
#include "vres/monomial.hpp"

namespace vres {

// A proposed labeled stellar subdivision: replace the face ω by a new vertex
// v' carrying the given label. Compatible (verdict-preserving) when both
// conditions hold: the label divides ℓ(ω), and the label lies in the
// saturation ⟨ℓ(v) : v ∈ ω⟩ : B^∞.
struct SubdivisionPlan {
  Face omega;
  std::string new_vertex_name;
  Monomial label;
  bool divides_face_label = false;
  bool in_saturation = false;

  bool virtual_compatible() const { return divides_face_label && in_saturation; }
};

// Evaluates both compatibility conditions exactly; does not mutate l.
// ω must be a face of positive dimension (subdividing a vertex is rejected).
SubdivisionPlan plan_subdivision(const LabeledComplex& l, const Face& omega,
                                 const Monomial& label, const ToricContext& ctx,
                                 const std::string& new_vertex_name = "vp");

// Stellar subdivision of the complex with the lcm-labeling regenerated from
// the old vertex labels plus the plan's label on v'. Asserts that labels are
// unchanged on the shared faces.
LabeledComplex apply_subdivision(const LabeledComplex& l, const SubdivisionPlan& plan);

struct HypothesisFailure {
  Monomial degree;
  int index = 0;  // reduced simplicial index j ≥ -1
};
struct HypothesisReport {
  bool pass = true;
  std::vector<HypothesisFailure> failures;
  int degrees_checked = 0;
};

// The homology-reduction hypothesis for a plan: with Γ = link_ω(Δ), every
// degree m with ℓ'(v') | m and ℓ(v) ∤ m for all v ∈ ω must give an injection
// H̃_j(Γ_m) → H̃_j(Δ_m) for every j ≥ -1. Checked over the finitely many
// attainable patterns above ℓ'(v').
HypothesisReport check_reduction_hypothesis(const LabeledComplex& l,
                                            const SubdivisionPlan& plan,
                                            const FieldSpec& field);

struct ReductionRow {
  Monomial degree;
  int index = 0;  // homological index of the free complexes (≥ 0)
  int before = 0;
  int after = 0;
  int link_dim = 0;          // dim H̃_{index-1}(Γ_m)
  // ℓ'(v') | degree, no ω-vertex label divides it, and link_dim > 0. (When an
  // ω-vertex label divides the degree, the comparison map is an isomorphism
  // and no strict drop can occur.)
  bool strict_required = false;
};
struct ReductionReport {
  HypothesisReport hypothesis;
  std::vector<ReductionRow> rows;
  bool inequality_holds = true;  // after ≤ before at every position
  bool strictness_holds = true;  // after < before wherever strictness is required
};

// Before/after comparison of homology dimensions over the union of the two
// attainable degree sets, with the theorem's assertions enforced when the
// hypothesis passes: never an increase, and a strict drop wherever the
// plan's label divides the degree and the link subcomplex has homology one
// step down. When the hypothesis fails the comparison is reported without
// enforcement. lp must equal apply_subdivision(l, plan).
ReductionReport verify_reduction(const LabeledComplex& l, const LabeledComplex& lp,
                                 const SubdivisionPlan& plan, const FieldSpec& field);

// A strand homology class, given as faces of l (all the same dimension) with
// integer coefficients.
using StrandCycle = std::vector<std::pair<Face, long>>;

// True iff the image of the cycle under the comparison chain map is a
// boundary in the degree-m strand of the subdivided complex, i.e. the class
// dies. The cycle must be a cycle of the degree-m strand of l's complex and
// the plan's label must divide m.
bool kernel_membership(const LabeledComplex& l, const LabeledComplex& lp,
                       const SubdivisionPlan& plan, const StrandCycle& cycle,
                       const Monomial& m, const FieldSpec& field);

}  // namespace vres
