#pragma once

#include <string>
#include <vector>

#include "vres/field.hpp"
#include "vres/labeled.hpp"
#include "vres/monomial.hpp"
#include "vres/simplicial.hpp"

namespace vres {

struct BasisElement {
  Face face;
  Monomial degree;  // the face's label; the summand is S(-deg)
};

// One nonzero entry of a differential or chain-map matrix over S: the value
// is sign · ratio with ratio a monomial.
struct MatrixEntry {
  int row = 0;
  int col = 0;
  int sign = 1;  // +1 or -1
  Monomial ratio;
};

// The free complex of a labeled simplicial complex: one generator per
// (i-1)-face in homological degree i (the empty face sits in degree 0), with
// ∂[σ] = Σ_j (-1)^j · ℓ(σ)/ℓ(σ∖v_j) · [σ∖v_j], v_j the j-th smallest vertex.
class FreeChainComplex {
public:
  static FreeChainComplex build(const LabeledComplex& l);

  // Top homological index; -1 when built from the void complex.
  int length() const { return static_cast<int>(terms_.size()) - 1; }
  const std::vector<std::vector<BasisElement>>& terms() const { return terms_; }
  // differentials()[i] maps degree i to i-1 (i ≥ 1); index 0 is empty.
  const std::vector<std::vector<MatrixEntry>>& differentials() const { return diffs_; }
  std::vector<int> ranks() const;
  const LabeledComplex& labeling() const { return labeling_; }

  // Position of a face in terms()[i]; -1 if absent.
  int face_index(int i, const Face& f) const;

  // Symbolic check that consecutive differentials compose to zero over S.
  void verify_d_squared() const;

private:
  std::vector<std::vector<BasisElement>> terms_;
  std::vector<std::vector<MatrixEntry>> diffs_;
  LabeledComplex labeling_;
};

// The degree-α slice of F_Δ as a complex of k-vector spaces: basis in
// homological degree i = faces with label dividing x^α, maps = the sign
// patterns of ∂ restricted to those bases.
struct Strand {
  Monomial degree;  // x^α
  std::vector<std::vector<int>> bases;               // indices into F.terms()[i]
  std::vector<std::vector<std::vector<int>>> maps;   // maps[i][row][col] ∈ {-1,0,1}, i ≥ 1
};

Strand strand(const FreeChainComplex& f, const Monomial& alpha);

// dim H_i of the strand for i = 0..length.
std::vector<int> strand_homology(const Strand& s, const FieldSpec& field);

// Chain map between the free complexes of a labeled complex and its labeled
// stellar subdivision: the identity on faces not containing ω, and on σ ⊇ ω
// the signed sum over the faces σ∖{x} ∪ {v'} (x ∈ ω) with coefficient
// ℓ(σ)/ℓ'(σ∖{x} ∪ {v'}). Signs place v' in the last position of the global
// vertex order.
class ChainMap {
public:
  const FreeChainComplex& source() const { return source_; }
  const FreeChainComplex& target() const { return target_; }
  // maps()[i]: rows index target terms[i], cols index source terms[i].
  const std::vector<std::vector<MatrixEntry>>& maps() const { return maps_; }
  const Face& subdivided_face() const { return omega_; }
  int new_vertex_index() const { return new_vertex_; }

  // Symbolic commutation with the differentials; throws TheoremViolation.
  void verify_commutes() const;
  // Injectivity certificate: every target row is hit by at most one column
  // and every source column is nonzero. Because each entry's target label
  // divides its source label, the same structure persists in every strand,
  // so this certifies full column rank in every degree. Also numerically
  // confirms full column rank on the top-degree strand. Throws
  // TheoremViolation on failure.
  void verify_injective(const FieldSpec& field) const;

  // Dense sign matrix of this map between two strands of the same degree.
  std::vector<std::vector<std::vector<int>>> strand_matrices(const Strand& src,
                                                             const Strand& tgt) const;

private:
  friend ChainMap subdivision_chain_map(const LabeledComplex& l, const LabeledComplex& lp,
                                        const Face& omega, const std::string& new_vertex);
  FreeChainComplex source_;
  FreeChainComplex target_;
  std::vector<std::vector<MatrixEntry>> maps_;
  Face omega_;
  int new_vertex_ = -1;
};

// Builds the comparison map for a labeled subdivision: lp must be l's
// stellar subdivision at omega with the new vertex appended last, relabeled
// by lcm with the old vertex labels kept; the new vertex's label must divide
// ℓ(omega) (otherwise a coefficient would fail to be a monomial).
ChainMap subdivision_chain_map(const LabeledComplex& l, const LabeledComplex& lp,
                               const Face& omega, const std::string& new_vertex);

// Text rendering of the differential matrices, one block per differential,
// rows labeled by target basis faces and columns by source basis faces.
std::string render_matrices(const FreeChainComplex& f,
                            const std::vector<std::string>& variable_names);

}  // namespace vres
