#pragma once

#include <optional>
#include <vector>

#include "vres/field.hpp"
#include "vres/labeled.hpp"
#include "vres/monomial.hpp"
#include "vres/simplicial.hpp"

namespace vres {

struct FreeCheck {
  bool is_free = true;
  // When not free: the smallest attainable degree (total degree, then lex)
  // whose subcomplex has homology, and the smallest simplicial index there.
  std::optional<Monomial> witness_degree;
  int witness_index = -1;
};

// Free-resolution test: every attainable Δ_m must have vanishing reduced
// homology in every dimension ≥ 0.
FreeCheck check_free(const LabeledComplex& l, const FieldSpec& field);

struct GeneratorCheck {
  Monomial generator;  // a minimal generator b of the irrelevant ideal
  bool free_after_truncation = true;
  std::optional<Monomial> truncated_witness;  // witness inside the truncated labeling
  int witness_index = -1;
  // b^E · witness for E beyond every label exponent: a degree in every power
  // of B where the homology persists, certifying failure of virtuality.
  std::optional<Monomial> persistent_degree;
};

struct HomologyPosition {
  int index = 0;  // homological index of F_Δ (≥ 1)
  Monomial degree;
  int dimension = 0;
};

struct Verdict {
  bool is_free = false;
  bool is_virtual = false;
  FreeCheck free_check;
  std::vector<GeneratorCheck> per_generator;
  // Positions (i, α) with H_i(F_Δ)_α ≠ 0, i ≥ 1; filled when not free.
  std::vector<HomologyPosition> homology_positions;
  FieldSpec field;
};

// Virtual-resolution test. F_Δ is a virtual resolution iff for every minimal
// generator b of the irrelevant ideal, the labeling truncated at b passes
// the free test: for m = b^d·m̄ with d beyond every label exponent, Δ_m
// equals the truncated complex's Δ_m̄, and vanishing on such degrees for one
// uniform d is equivalent to vanishing on a power of B.
Verdict check_virtual(const LabeledComplex& l, const ToricContext& ctx, const FieldSpec& field);

// I(Δ,m): the ideal generated by all f with Δ_{fm} acyclic (reduced
// homology zero in every dimension ≥ 0). Computed exactly over the finite
// lattice of attainable subcomplexes above m: for each acyclic attainable
// pattern with witness m_W, the minimal monomial moving m there is m_W/m.
MonomialIdeal annihilator_ideal(const LabeledComplex& l, const Monomial& m,
                                const FieldSpec& field);

struct PrimeSearch {
  Monomial degree;      // final m with I(Δ,m) prime
  MonomialIdeal ideal;  // that prime ideal
  int steps = 0;
};
// Walks m ← f·m, with f a variable properly dividing a non-variable minimal
// generator of I(Δ,m), until the annihilator is prime. Terminates because
// the attainable lattice strictly shrinks. Δ_m must have homology at the
// start (a unit annihilator is rejected); the walk preserves that.
PrimeSearch prime_annihilator(const LabeledComplex& l, Monomial m, const FieldSpec& field);

struct MinVertexEntry {
  Monomial degree;
  int subcomplex_vertices = 0;
  int slack = 0;  // total vertices - codim - subcomplex vertices
};
struct MinVertexReport {
  int codim = 0;
  int total_vertices = 0;
  std::vector<MinVertexEntry> entries;
};
// For every inclusion-maximal attainable Δ_m with homology, asserts
// #vertices(Δ) ≥ codim(B) + #vertices(Δ_m) and reports the slack. Requires
// an lcm-labeling and a virtual verdict; a free input yields no entries.
MinVertexReport verify_min_vertices(const LabeledComplex& l, const ToricContext& ctx,
                                    const FieldSpec& field);

// For virtual-not-free lcm-labeled complexes with exactly codim(B)+2
// vertices: asserts the complex is the bipyramid over a (codim-1)-simplex
// and returns the recognized shape. A failure here is a TheoremViolation.
BipyramidShape verify_unique_minimum(const LabeledComplex& l, const ToricContext& ctx,
                                     const FieldSpec& field);

}  // namespace vres
