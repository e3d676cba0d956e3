#include "vres/labeled.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace vres {

LabeledComplex LabeledComplex::from_vertex_labels(const SimplicialComplex& k,
                                                  std::vector<Monomial> vertex_labels) {
  if (static_cast<int>(vertex_labels.size()) != k.vertex_count())
    throw ArgumentError("expected one label per vertex (" +
                        std::to_string(k.vertex_count()) + " vertices, " +
                        std::to_string(vertex_labels.size()) + " labels)");
  LabeledComplex out;
  out.complex_ = k;
  out.lcm_flag_ = true;
  out.nvars_ = vertex_labels.empty() ? 0 : vertex_labels.front().nvars();
  for (const Monomial& m : vertex_labels)
    if (m.nvars() != out.nvars_) throw ArgumentError("vertex labels live in different rings");
  for (const Face& f : k.all_faces()) {
    Monomial l = Monomial::one(out.nvars_);
    for (int v : f) l = lcm(l, vertex_labels[v]);
    out.labels_.emplace(f, std::move(l));
  }
  return out;
}

LabeledComplex LabeledComplex::from_vertex_labels(
    const SimplicialComplex& k, const std::map<std::string, Monomial>& by_name) {
  std::vector<Monomial> labels;
  for (const std::string& name : k.vertex_names()) {
    auto it = by_name.find(name);
    if (it == by_name.end()) throw ArgumentError("vertex '" + name + "' has no label");
    labels.push_back(it->second);
  }
  return from_vertex_labels(k, std::move(labels));
}

LabeledComplex LabeledComplex::with_face_labels(const SimplicialComplex& k,
                                                std::map<Face, Monomial> labels) {
  LabeledComplex out;
  out.complex_ = k;
  const std::vector<Face> faces = k.all_faces();
  if (labels.size() != faces.size())
    throw ArgumentError("labeling must cover every face exactly once (" +
                        std::to_string(faces.size()) + " faces, " +
                        std::to_string(labels.size()) + " labels)");
  for (const Face& f : faces)
    if (!labels.count(f)) throw ArgumentError("a face is missing its label");
  out.nvars_ = labels.empty() ? 0 : labels.begin()->second.nvars();
  for (const auto& [f, m] : labels)
    if (m.nvars() != out.nvars_) throw ArgumentError("face labels live in different rings");

  // Divisibility along inclusions; codimension-one inclusions suffice.
  for (const Face& f : faces)
    for (size_t j = 0; j < f.size(); ++j) {
      Face sub = f;
      sub.erase(sub.begin() + j);
      if (!labels.at(sub).divides(labels.at(f)))
        throw ArgumentError("label of a subface does not divide the face label");
    }

  // lcm detection: empty face labeled 1 and every face of dimension >= 1
  // labeled by the lcm of its codimension-one subfaces.
  bool lcm_flag = !k.is_void() && labels.at(Face{}).is_one();
  for (const Face& f : faces) {
    if (!lcm_flag) break;
    if (f.size() < 2) continue;
    Monomial expect = Monomial::one(out.nvars_);
    for (size_t j = 0; j < f.size(); ++j) {
      Face sub = f;
      sub.erase(sub.begin() + j);
      expect = lcm(expect, labels.at(sub));
    }
    if (!(expect == labels.at(f))) lcm_flag = false;
  }
  out.lcm_flag_ = lcm_flag;
  out.labels_ = std::move(labels);
  return out;
}

const Monomial& LabeledComplex::label(const Face& f) const {
  auto it = labels_.find(f);
  if (it == labels_.end()) throw ArgumentError("label requested for a non-face");
  return it->second;
}

const Monomial& LabeledComplex::vertex_label(int v) const { return label(Face{v}); }

MonomialIdeal LabeledComplex::vertex_label_ideal() const {
  std::vector<Monomial> gens;
  for (const Face& f : complex_.faces_of_dim(0)) gens.push_back(label(f));
  return MonomialIdeal(std::move(gens), nvars_);
}

Monomial LabeledComplex::top_label() const {
  Monomial top = Monomial::one(nvars_);
  for (const auto& [f, m] : labels_) top = lcm(top, m);
  return top;
}

SimplicialComplex LabeledComplex::subcomplex_at(const Monomial& m) const {
  std::vector<Face> kept;
  for (const auto& [f, l] : labels_)
    if (l.divides(m)) kept.push_back(f);
  // Labels increase along inclusions, so `kept` is already closed under
  // taking subfaces; the constructor reduces it to its maximal elements.
  return SimplicialComplex(complex_.vertex_names(), std::move(kept));
}

std::vector<LabeledComplex::Attainable> LabeledComplex::attainable_subcomplexes(
    const std::optional<Monomial>& floor) const {
  const Monomial base = floor ? *floor : Monomial::one(nvars_);
  if (base.nvars() != nvars_) throw ArgumentError("floor lives in a different ring");

  // Seeds: the monomials whose divisibility decides membership of a face in
  // Δ_m. For lcm-labelings the vertex labels suffice; in general every face
  // label can matter.
  std::vector<Monomial> seeds;
  if (lcm_flag_) {
    for (const Face& f : complex_.faces_of_dim(0)) seeds.push_back(label(f));
  } else {
    for (const auto& [f, l] : labels_) seeds.push_back(l);
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  // Close {base} under lcm with every seed. Each closure element is the
  // minimal monomial above `base` realizing its divisibility pattern, and
  // distinct elements give distinct patterns.
  std::set<Monomial> closure;
  std::deque<Monomial> work;
  closure.insert(base);
  work.push_back(base);
  while (!work.empty()) {
    Monomial m = work.front();
    work.pop_front();
    for (const Monomial& s : seeds) {
      Monomial t = lcm(m, s);
      if (closure.insert(t).second) work.push_back(t);
    }
  }

  std::vector<Monomial> witnesses(closure.begin(), closure.end());
  std::sort(witnesses.begin(), witnesses.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a < b;
  });

  std::vector<Attainable> out;
  out.reserve(witnesses.size());
  for (Monomial& w : witnesses) {
    SimplicialComplex sub = subcomplex_at(w);
    out.push_back(Attainable{std::move(w), std::move(sub)});
  }
  return out;
}

LabeledComplex LabeledComplex::truncate_labels(const Monomial& b) const {
  if (b.nvars() != nvars_) throw ArgumentError("truncation monomial lives in a different ring");
  for (int e : b.exponents())
    if (e > 1) throw ArgumentError("truncation requires a square-free monomial");
  LabeledComplex out;
  out.complex_ = complex_;
  out.lcm_flag_ = lcm_flag_;
  out.nvars_ = nvars_;
  for (const auto& [f, m] : labels_) out.labels_.emplace(f, m.drop_support_of(b));
  return out;
}

}  // namespace vres
