#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vres/field.hpp"
#include "vres/labeled.hpp"
#include "vres/monomial.hpp"
#include "vres/simplicial.hpp"

namespace vres {

// Classification of an lcm-labeled bipyramid-over-a-simplex over a product
// of two projective spaces. With f = lcm of the two apex labels:
//   virtual_case1 — some base label divides f (these complexes are free);
//   virtual_case2 — up to an allowed variable permutation, every base label
//                   factors as y_j^{p_j}·m_j with p_j ≥ 1 and m_j | f;
//   not_virtual   — neither condition holds.
// The `free` value exists for completeness of the vocabulary but is never
// produced: case 1 is exactly the free case, so it subsumes it.
struct BipyramidClassification {
  enum class Verdict { not_virtual, virtual_case1, virtual_case2, free };
  Verdict verdict = Verdict::not_virtual;

  std::vector<std::string> base;  // base vertex names, recognition order
  std::pair<std::string, std::string> apexes;
  Monomial apex_lcm;  // f

  // case 1 witness
  std::optional<std::string> dividing_vertex;

  // case 2 witness: assignment[j] is the variable playing the role of y_j
  // for the j-th base vertex; swapped means the x-block provides those
  // variables (allowed only when the blocks have equal size).
  bool swapped = false;
  std::vector<int> assignment;
  std::vector<int> p;
  std::vector<Monomial> m;
};

const char* to_string(BipyramidClassification::Verdict v);

// Decides Prop-5.1-style virtuality purely combinatorially and
// cross-validates the verdict against the homological engine; a mismatch is
// a TheoremViolation. The complex must be a bipyramid over a simplex whose
// base size matches the smaller variable block of ctx, and ctx must be a
// product of two projective spaces (complete bipartite irrelevant ideal).
BipyramidClassification classify(const LabeledComplex& l, const ToricContext& ctx,
                                 const FieldSpec& field);

// The homology-killing subdivision for a virtual_case2 bipyramid: subdivide
// at the base with the new vertex labeled lcm(m_0,…,m_k). Asserts the
// outcome: the result is free, the vertex-label ideals have equal
// saturations, and the complex dimension (hence resolution length) is
// unchanged. Requires a base of dimension ≥ 1.
LabeledComplex eliminate_homology(const LabeledComplex& l, const ToricContext& ctx,
                                  const FieldSpec& field);

// The standard virtual-not-free labeling of the bipyramid over a k-simplex
// for P^n×P^k: base labels y_0,…,y_k, apex labels x_0 and x_1. Asserted
// virtual and not free before returning.
LabeledComplex standard_virtual_labeling(int n, int k);

}  // namespace vres
