#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "vres/field.hpp"
#include "vres/labeled.hpp"
#include "vres/monomial.hpp"
#include "vres/simplicial.hpp"

namespace vres {

struct CycleTerm {
  Face face;
  std::string coefficient;  // rendered in the reporting field
};
using Cycle = std::vector<CycleTerm>;

struct HomologyGroup {
  int index = 0;  // reduced simplicial index j, ranging over -1 .. dim
  int dimension = 0;
  std::vector<Cycle> representatives;
};

// Reduced simplicial homology over the chosen field: one group per index
// -1..dim(K), in order; the void complex gives an empty list. Representatives
// are the reduced-echelon kernel basis vectors that stay independent modulo
// boundaries — deterministic given the face order.
std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& k, const FieldSpec& field);

// True iff H̃_j(K) = 0 for every j ≥ 0. The j = -1 group (nonzero exactly
// for the complex {∅}) is deliberately not counted: it corresponds to the
// cokernel a resolution is allowed to have.
bool is_acyclic(const SimplicialComplex& k, const FieldSpec& field);

// Memoizes is_acyclic over face sets (keyed by facet vertex names), for the
// enumeration-heavy checks that revisit the same subcomplex many times.
class AcyclicityCache {
public:
  explicit AcyclicityCache(FieldSpec field) : field_(field) {}
  bool is_acyclic(const SimplicialComplex& k);
  const FieldSpec& field() const { return field_; }
  std::size_t size() const { return memo_.size(); }

private:
  FieldSpec field_;
  std::unordered_map<std::string, bool> memo_;
};

struct HomologyEntry {
  int index = 0;    // homological index of F_Δ, i.e. simplicial index + 1
  Monomial degree;  // canonical witness monomial x^α
  int dimension = 0;
  std::vector<Cycle> representatives;  // module-level coefficients, rendered
};

struct HomologyReport {
  FieldSpec field;
  std::vector<HomologyEntry> entries;
};

// One entry per attainable degree and homological index where F_Δ has
// nonvanishing homology, computed simplicially through the strand
// correspondence H_i(F_Δ)_α ≅ H̃_{i-1}(Δ_m). Indices use F_Δ numbering
// (i ≥ 1); the i = 0 entries — classes of the resolved quotient — appear
// only when include_h0 is set. Representative coefficients are the
// module-level multiples coeff · x^α/ℓ(σ), rendered in the given variable
// names. Entries are sorted by (index, total degree, exponents).
HomologyReport homology_table(const LabeledComplex& l,
                              const std::vector<std::string>& variable_names,
                              const FieldSpec& field, bool include_h0 = false);

struct InducedMapReport {
  int index = 0;  // reduced homology index j
  int source_dim = 0;
  int target_dim = 0;
  int rank = 0;
  bool injective = true;
  bool surjective = true;
  std::vector<std::vector<std::string>> matrix;  // target_dim rows × source_dim cols
};

// The map H̃_index(sub) → H̃_index(super) induced by inclusion, expressed in
// the two representative bases. Faces are matched by vertex names; sub must
// be a subcomplex of super, and vertices shared by the two complexes must
// appear in the same relative order in both vertex lists (all subcomplexes
// produced by this library inherit the ambient order, so this holds by
// construction).
InducedMapReport induced_map_on_homology(const SimplicialComplex& sub,
                                         const SimplicialComplex& super, int index,
                                         const FieldSpec& field);

}  // namespace vres
