#include "vres/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace vres {

namespace {

bool face_order(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face face_union(const Face& a, const Face& b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint(const Face& a, const Face& b) {
  Face tmp;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(tmp));
  return tmp.empty();
}

std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), face_order);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> out;
  for (size_t i = 0; i < faces.size(); ++i) {
    bool contained = false;
    for (size_t j = 0; j < faces.size() && !contained; ++j)
      if (i != j && faces[i].size() <= faces[j].size() && subset(faces[i], faces[j]) &&
          faces[i] != faces[j])
        contained = true;
    if (!contained) out.push_back(faces[i]);
  }
  return out;
}

void enumerate_subsets(const Face& f, std::set<Face>& out) {
  const int n = static_cast<int>(f.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Face s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(f[i]);
    out.insert(std::move(s));
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_names,
                                     std::vector<Face> facets)
    : names_(std::move(vertex_names)) {
  {
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) throw ArgumentError("duplicate vertex names");
  }
  for (Face& f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw ArgumentError("facet with repeated vertex");
    check_face_indices(f);
  }
  facets_ = maximal_faces(std::move(facets));
}

SimplicialComplex SimplicialComplex::empty_face_only() {
  SimplicialComplex k;
  k.facets_.push_back(Face{});
  return k;
}

void SimplicialComplex::check_face_indices(const Face& f) const {
  for (int v : f)
    if (v < 0 || v >= vertex_count())
      throw ArgumentError("face refers to vertex index " + std::to_string(v) +
                          " outside the vertex list");
}

int SimplicialComplex::dim() const {
  if (is_void()) throw ArgumentError("dimension of the void complex");
  int d = -1;
  for (const Face& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::has_face(const Face& f) const {
  for (const Face& g : facets_)
    if (subset(f, g)) return true;
  return false;
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::set<Face> faces;
  for (const Face& f : facets_) enumerate_subsets(f, faces);
  std::vector<Face> out(faces.begin(), faces.end());
  std::sort(out.begin(), out.end(), face_order);
  return out;
}

std::vector<Face> SimplicialComplex::faces_of_dim(int d) const {
  std::vector<Face> out;
  for (const Face& f : all_faces())
    if (static_cast<int>(f.size()) == d + 1) out.push_back(f);
  return out;
}

std::vector<int> SimplicialComplex::f_vector() const {
  if (is_void()) return {};
  std::vector<int> fv(std::max(0, dim() + 1), 0);
  for (const Face& f : all_faces())
    if (!f.empty()) ++fv[f.size() - 1];
  return fv;
}

int SimplicialComplex::euler_characteristic() const {
  int chi = 0, sign = 1;
  for (int count : f_vector()) {
    chi += sign * count;
    sign = -sign;
  }
  return chi;
}

SimplicialComplex SimplicialComplex::induced(const std::vector<int>& vertices) const {
  std::set<int> keep(vertices.begin(), vertices.end());
  std::vector<Face> kept;
  for (const Face& f : facets_) {
    Face g;
    for (int v : f)
      if (keep.count(v)) g.push_back(v);
    kept.push_back(std::move(g));  // largest subface of f inside the subset
  }
  if (is_void()) return SimplicialComplex();
  // Restrict the vertex list to vertices that actually appear, keeping order.
  std::set<int> used;
  for (const Face& f : kept)
    for (int v : f) used.insert(v);
  std::vector<std::string> names;
  std::map<int, int> renumber;
  for (int v = 0; v < vertex_count(); ++v)
    if (used.count(v)) {
      renumber[v] = static_cast<int>(names.size());
      names.push_back(names_[v]);
    }
  std::vector<Face> facets;
  for (Face& f : kept) {
    for (int& v : f) v = renumber[v];
    facets.push_back(std::move(f));
  }
  SimplicialComplex out(std::move(names), std::move(facets));
  return out;
}

SimplicialComplex SimplicialComplex::link(const Face& f) const {
  check_face_indices(f);
  if (!has_face(f)) throw ArgumentError("link of a non-face");
  std::vector<Face> faces;
  for (const Face& g : all_faces())
    if (disjoint(f, g) && has_face(face_union(f, g))) faces.push_back(g);
  // faces always contains ∅ (f itself is a face), so the link is non-void.
  std::set<int> used;
  for (const Face& g : faces)
    for (int v : g) used.insert(v);
  std::vector<std::string> names;
  std::map<int, int> renumber;
  for (int v = 0; v < vertex_count(); ++v)
    if (used.count(v)) {
      renumber[v] = static_cast<int>(names.size());
      names.push_back(names_[v]);
    }
  std::vector<Face> renumbered;
  for (Face g : faces) {
    for (int& v : g) v = renumber[v];
    renumbered.push_back(std::move(g));
  }
  return SimplicialComplex(std::move(names), maximal_faces(std::move(renumbered)));
}

SimplicialComplex SimplicialComplex::star(const Face& f) const {
  check_face_indices(f);
  if (!has_face(f)) throw ArgumentError("star of a non-face");
  std::vector<Face> faces;
  for (const Face& g : all_faces())
    if (has_face(face_union(f, g))) faces.push_back(g);
  std::set<int> used;
  for (const Face& g : faces)
    for (int v : g) used.insert(v);
  std::vector<std::string> names;
  std::map<int, int> renumber;
  for (int v = 0; v < vertex_count(); ++v)
    if (used.count(v)) {
      renumber[v] = static_cast<int>(names.size());
      names.push_back(names_[v]);
    }
  std::vector<Face> renumbered;
  for (Face g : faces) {
    for (int& v : g) v = renumber[v];
    renumbered.push_back(std::move(g));
  }
  return SimplicialComplex(std::move(names), maximal_faces(std::move(renumbered)));
}

SimplicialComplex SimplicialComplex::stellar_subdivide(const Face& f,
                                                       const std::string& new_vertex) const {
  check_face_indices(f);
  if (f.empty()) throw ArgumentError("cannot subdivide the empty face");
  if (!has_face(f)) throw ArgumentError("cannot subdivide a non-face");
  if (vertex_index(new_vertex) >= 0)
    throw ArgumentError("new vertex name '" + new_vertex + "' already in use");

  std::vector<std::string> names(names_);
  names.push_back(new_vertex);
  const int vp = static_cast<int>(names.size()) - 1;

  std::vector<Face> faces;
  for (const Face& g : all_faces()) {
    if (!subset(f, g)) faces.push_back(g);        // survives untouched
    if (has_face(face_union(f, g)) && !subset(f, g)) {
      Face cone = g;
      cone.push_back(vp);                          // vp is the largest index
      faces.push_back(std::move(cone));
    }
  }
  return SimplicialComplex(std::move(names), maximal_faces(std::move(faces)));
}

int SimplicialComplex::vertex_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

Face SimplicialComplex::face_by_names(const std::vector<std::string>& names) const {
  Face f;
  for (const std::string& n : names) {
    int idx = vertex_index(n);
    if (idx < 0) throw ArgumentError("unknown vertex '" + n + "'");
    f.push_back(idx);
  }
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end())
    throw ArgumentError("repeated vertex in face");
  return f;
}

std::vector<std::string> SimplicialComplex::face_names(const Face& f) const {
  check_face_indices(f);
  std::vector<std::string> out;
  for (int v : f) out.push_back(names_[v]);
  return out;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.is_void() || b.is_void()) return SimplicialComplex();
  for (const std::string& n : b.vertex_names())
    if (a.vertex_index(n) >= 0)
      throw ArgumentError("join requires disjoint vertex names ('" + n + "' is shared)");
  std::vector<std::string> names(a.vertex_names());
  names.insert(names.end(), b.vertex_names().begin(), b.vertex_names().end());
  const int shift = a.vertex_count();
  std::vector<Face> facets;
  for (const Face& fa : a.facets())
    for (const Face& fb : b.facets()) {
      Face f = fa;
      for (int v : fb) f.push_back(v + shift);
      facets.push_back(std::move(f));
    }
  return SimplicialComplex(std::move(names), std::move(facets));
}

SimplicialComplex bipyramid_over_simplex(int k) {
  if (k < 0) throw ArgumentError("bipyramid_over_simplex: k must be >= 0");
  std::vector<std::string> names;
  for (int i = 0; i <= k; ++i) names.push_back("v" + std::to_string(i));
  names.push_back("w0");
  names.push_back("w1");
  Face base;
  for (int i = 0; i <= k; ++i) base.push_back(i);
  Face f0 = base, f1 = base;
  f0.push_back(k + 1);
  f1.push_back(k + 2);
  return SimplicialComplex(std::move(names), {f0, f1});
}

std::optional<BipyramidShape> is_bipyramid(const SimplicialComplex& k) {
  if (k.facets().size() != 2) return std::nullopt;
  const Face& f0 = k.facets()[0];
  const Face& f1 = k.facets()[1];
  if (f0.size() != f1.size()) return std::nullopt;
  Face inter, d0, d1;
  std::set_intersection(f0.begin(), f0.end(), f1.begin(), f1.end(), std::back_inserter(inter));
  std::set_difference(f0.begin(), f0.end(), f1.begin(), f1.end(), std::back_inserter(d0));
  std::set_difference(f1.begin(), f1.end(), f0.begin(), f0.end(), std::back_inserter(d1));
  if (d0.size() != 1 || d1.size() != 1 || inter.empty()) return std::nullopt;
  BipyramidShape shape;
  shape.apexes = {k.vertex_names()[d0[0]], k.vertex_names()[d1[0]]};
  shape.base = k.face_names(inter);
  return shape;
}

bool same_faces(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto facet_names = [](const SimplicialComplex& k) {
    std::set<std::vector<std::string>> out;
    for (const Face& f : k.facets()) {
      std::vector<std::string> names = k.face_names(f);
      std::sort(names.begin(), names.end());
      out.insert(std::move(names));
    }
    return out;
  };
  return facet_names(a) == facet_names(b);
}

}  // namespace vres
