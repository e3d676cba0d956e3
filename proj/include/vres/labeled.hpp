#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vres/monomial.hpp"
#include "vres/simplicial.hpp"

namespace vres {

// Simplicial complex with a monomial label on every face, weakly increasing
// along inclusions. lcm-labelings (face label = lcm of its vertex labels,
// empty face labeled 1) are the case all structural operations assume;
// general labelings are accepted for complex construction and the acyclicity
// tests only.
class LabeledComplex {
public:
  LabeledComplex() = default;

  // The lcm-labeling generated by per-vertex labels, index-aligned with the
  // complex's vertex order.
  static LabeledComplex from_vertex_labels(const SimplicialComplex& k,
                                           std::vector<Monomial> vertex_labels);
  static LabeledComplex from_vertex_labels(const SimplicialComplex& k,
                                           const std::map<std::string, Monomial>& by_name);
  // Explicit labels on every face. Validates divisibility along inclusions
  // and detects whether the labeling happens to be an lcm-labeling.
  static LabeledComplex with_face_labels(const SimplicialComplex& k,
                                         std::map<Face, Monomial> labels);

  const SimplicialComplex& complex() const { return complex_; }
  bool lcm_labeled() const { return lcm_flag_; }
  int nvars() const { return nvars_; }

  const Monomial& label(const Face& f) const;
  const Monomial& vertex_label(int v) const;
  const std::map<Face, Monomial>& labels() const { return labels_; }
  // ⟨ℓ(v) : v a vertex⟩ — the ideal the complex resolves.
  MonomialIdeal vertex_label_ideal() const;
  // lcm of every label (1 for complexes without faces).
  Monomial top_label() const;

  // Δ_m: the subcomplex of faces whose labels divide m. The result keeps the
  // ambient vertex list, so names and their order stay aligned with the
  // parent complex (vertices outside Δ_m simply appear in no face).
  SimplicialComplex subcomplex_at(const Monomial& m) const;

  struct Attainable {
    Monomial witness;  // divisibility-minimal monomial realizing the pattern
    SimplicialComplex subcomplex;
  };
  // Every distinct Δ_m over monomials m with floor | m (all m when no floor
  // is given), each with its unique minimal witness. Finite because Δ_m only
  // depends on which labels divide m, and each such pattern is realized
  // minimally by lcm(floor, labels in the pattern). Sorted by (total degree,
  // exponents) of the witness.
  std::vector<Attainable> attainable_subcomplexes(
      const std::optional<Monomial>& floor = std::nullopt) const;

  // New labeling with the exponents of supp(b) zeroed in every label;
  // b must be square-free. Truncation commutes with lcm, so the lcm flag is
  // preserved.
  LabeledComplex truncate_labels(const Monomial& b) const;

private:
  SimplicialComplex complex_;
  std::map<Face, Monomial> labels_;
  bool lcm_flag_ = false;
  int nvars_ = 0;
};

}  // namespace vres
