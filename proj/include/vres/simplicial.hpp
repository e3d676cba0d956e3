#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vres/error.hpp"

namespace vres {

// A face is a strictly increasing list of vertex indices. The empty face is
// the empty list.
using Face = std::vector<int>;

// Abstract simplicial complex over named vertices. Stored by its maximal
// faces. The distinction between the void complex (no faces at all) and the
// complex {∅} (one empty face) is kept: the former has no facets, the latter
// has the single facet ∅.
//
// Vertex order is significant: it fixes the orientation convention used by
// the chain complexes built downstream (boundary signs are (-1)^position in
// the sorted face). Derived complexes (induced, link, star, subdivision)
// preserve the ambient order.
class SimplicialComplex {
public:
  SimplicialComplex() = default;  // void
  SimplicialComplex(std::vector<std::string> vertex_names, std::vector<Face> facets);

  static SimplicialComplex empty_face_only();  // the complex {∅}

  const std::vector<std::string>& vertex_names() const { return names_; }
  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::vector<Face>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  // Dimension; -1 for {∅}. Calling this on the void complex throws.
  int dim() const;

  bool has_face(const Face& f) const;
  // Faces of dimension d (d = -1 gives {∅} when the complex is non-void),
  // sorted lexicographically.
  std::vector<Face> faces_of_dim(int d) const;
  // All faces including ∅ (unless void), sorted by (dimension, lex).
  std::vector<Face> all_faces() const;
  // f_vector()[d] = number of faces of dimension d, d = 0..dim.
  std::vector<int> f_vector() const;
  // Standard Euler characteristic (faces of dimension >= 0).
  int euler_characteristic() const;

  SimplicialComplex induced(const std::vector<int>& vertices) const;
  SimplicialComplex link(const Face& f) const;
  SimplicialComplex star(const Face& f) const;
  // Stellar subdivision at the face f (dim >= 0): remove every face
  // containing f, add cones σ ∪ {v'} for every σ with σ ∪ f a face and
  // f ⊄ σ. The new vertex is appended at the end of the vertex order.
  SimplicialComplex stellar_subdivide(const Face& f, const std::string& new_vertex) const;

  int vertex_index(const std::string& name) const;  // -1 if absent
  Face face_by_names(const std::vector<std::string>& names) const;
  std::vector<std::string> face_names(const Face& f) const;

private:
  std::vector<std::string> names_;
  std::vector<Face> facets_;  // maximal faces, sorted (size, lex)
  void check_face_indices(const Face& f) const;
};

// Join of two complexes on disjoint vertex name sets; b's vertices follow
// a's in the order. join(void, K) = void; join({∅}, K) = K.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// The bipyramid over the k-simplex: base v0..vk joined with apexes w0, w1.
SimplicialComplex bipyramid_over_simplex(int k);

struct BipyramidShape {
  std::pair<std::string, std::string> apexes;
  std::vector<std::string> base;  // vertex names of the base simplex
};

// Recognizes bipyramids-over-a-simplex: exactly two facets whose
// intersection has codimension one in each. Returns the apexes and base.
std::optional<BipyramidShape> is_bipyramid(const SimplicialComplex& k);

// Same faces under vertex names (ignores vertex order).
bool same_faces(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace vres
