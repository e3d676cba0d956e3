#include "vres/homology.hpp"

#include <algorithm>
#include <map>

#include "vres/linalg.hpp"

namespace vres {

namespace {

// The augmented chain complex of K: level t holds the faces of dimension
// t-1, so level 0 is {∅} and boundary[1] is the augmentation [v] ↦ [∅].
// Signs follow the global vertex order: dropping the j-th smallest vertex
// carries (-1)^j.
template <class Field>
struct Augmented {
  std::vector<std::vector<Face>> levels;
  std::vector<Matrix<Field>> boundary;  // boundary[t]: level t → level t-1, t ≥ 1
};

template <class Field>
Augmented<Field> build_augmented(const Field& f, const SimplicialComplex& k) {
  Augmented<Field> aug;
  if (k.is_void()) return aug;
  const int top = k.dim() + 1;
  for (int t = 0; t <= top; ++t) aug.levels.push_back(k.faces_of_dim(t - 1));
  aug.boundary.emplace_back(f, 0, 0);  // placeholder for t = 0
  for (int t = 1; t <= top; ++t) {
    const auto& src = aug.levels[t];
    const auto& dst = aug.levels[t - 1];
    Matrix<Field> d(f, static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (int c = 0; c < static_cast<int>(src.size()); ++c) {
      const Face& sigma = src[c];
      for (size_t j = 0; j < sigma.size(); ++j) {
        Face tau = sigma;
        tau.erase(tau.begin() + j);
        auto it = std::lower_bound(dst.begin(), dst.end(), tau);
        const int r = static_cast<int>(it - dst.begin());
        d.at(r, c) = f.from_int(j % 2 == 0 ? 1 : -1);
      }
    }
    aug.boundary.push_back(std::move(d));
  }
  return aug;
}

template <class Field>
struct LevelHomology {
  int dim = 0;
  std::vector<std::vector<typename Field::Value>> reps;  // coordinates in level faces
};

template <class Field>
struct HomologyData {
  Augmented<Field> aug;
  std::vector<LevelHomology<Field>> level;
};

template <class Field>
std::vector<std::vector<typename Field::Value>> boundary_columns(const Field& f,
                                                                 const Matrix<Field>& m) {
  std::vector<std::vector<typename Field::Value>> cols;
  for (int c = 0; c < m.cols; ++c) {
    std::vector<typename Field::Value> v;
    v.reserve(m.rows);
    for (int r = 0; r < m.rows; ++r) v.push_back(m.at(r, c));
    cols.push_back(std::move(v));
  }
  return cols;
}

template <class Field>
HomologyData<Field> compute_homology(const Field& f, const SimplicialComplex& k) {
  HomologyData<Field> out;
  out.aug = build_augmented(f, k);
  const int nlevels = static_cast<int>(out.aug.levels.size());
  out.level.resize(nlevels);
  for (int t = 0; t < nlevels; ++t) {
    const int n = static_cast<int>(out.aug.levels[t].size());
    std::vector<std::vector<typename Field::Value>> cycles;
    if (t == 0) {
      // no boundary below the empty face: everything is a cycle
      for (int i = 0; i < n; ++i) {
        std::vector<typename Field::Value> e(n, f.zero());
        e[i] = f.one();
        cycles.push_back(std::move(e));
      }
    } else {
      cycles = kernel_basis(f, out.aug.boundary[t]);
    }
    RankTracker<Field> tracker(f, n);
    if (t + 1 < nlevels)
      for (auto& col : boundary_columns(f, out.aug.boundary[t + 1])) tracker.add(std::move(col));
    for (auto& z : cycles)
      if (tracker.add(z)) out.level[t].reps.push_back(std::move(z));
    out.level[t].dim = static_cast<int>(out.level[t].reps.size());
  }
  return out;
}

template <class Field>
Cycle render_cycle(const Field& f, const std::vector<Face>& faces,
                   const std::vector<typename Field::Value>& v) {
  Cycle c;
  for (size_t i = 0; i < faces.size(); ++i)
    if (!f.is_zero(v[i])) c.push_back(CycleTerm{faces[i], f.render(v[i])});
  return c;
}

std::string facet_key(const SimplicialComplex& k) {
  std::vector<std::string> parts;
  for (const Face& f : k.facets()) {
    std::vector<std::string> names = k.face_names(f);
    std::sort(names.begin(), names.end());
    std::string part;
    for (size_t i = 0; i < names.size(); ++i) {
      if (i) part += ',';
      part += names[i];
    }
    parts.push_back(std::move(part));
  }
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const std::string& p : parts) {
    key += p;
    key += ';';
  }
  return key.empty() ? std::string("(void)") : key;
}

// Positions of sub's level-t faces inside super's level-t face list, matched
// through vertex names.
std::vector<int> face_positions(const SimplicialComplex& sub, const SimplicialComplex& super,
                                const std::vector<Face>& sub_faces,
                                const std::vector<Face>& super_faces) {
  std::vector<int> pos;
  for (const Face& f : sub_faces) {
    Face g;
    for (int v : f) {
      int idx = super.vertex_index(sub.vertex_names()[v]);
      if (idx < 0) throw ArgumentError("subcomplex vertex missing from the ambient complex");
      g.push_back(idx);
    }
    std::sort(g.begin(), g.end());
    auto it = std::lower_bound(super_faces.begin(), super_faces.end(), g);
    if (it == super_faces.end() || *it != g)
      throw ArgumentError("inclusion-induced map requires a subcomplex");
    pos.push_back(static_cast<int>(it - super_faces.begin()));
  }
  return pos;
}

void check_order_consistency(const SimplicialComplex& sub, const SimplicialComplex& super) {
  int last = -1;
  for (const std::string& name : sub.vertex_names()) {
    int idx = super.vertex_index(name);
    if (idx < 0) continue;  // phantom name never used in a face; harmless
    if (idx < last)
      throw ArgumentError("vertex orders of the two complexes disagree on shared vertices");
    last = idx;
  }
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& super) {
  for (const Face& f : sub.facets()) {
    Face g;
    for (int v : f) {
      int idx = super.vertex_index(sub.vertex_names()[v]);
      if (idx < 0) return false;
      g.push_back(idx);
    }
    std::sort(g.begin(), g.end());
    if (!super.has_face(g)) return false;
  }
  return true;
}

template <class Field>
InducedMapReport induced_map_impl(const Field& f, const SimplicialComplex& sub,
                                  const SimplicialComplex& super, int index) {
  InducedMapReport rep;
  rep.index = index;
  const int t = index + 1;

  HomologyData<Field> hsub = compute_homology(f, sub);
  HomologyData<Field> hsup = compute_homology(f, super);

  rep.source_dim = t < static_cast<int>(hsub.level.size()) ? hsub.level[t].dim : 0;
  rep.target_dim = t < static_cast<int>(hsup.level.size()) ? hsup.level[t].dim : 0;
  rep.matrix.assign(rep.target_dim, std::vector<std::string>());
  if (rep.source_dim == 0) {
    rep.rank = 0;
    rep.injective = true;
    rep.surjective = rep.target_dim == 0;
    return rep;
  }
  // source has a class in level t, so super must have level t too (sub ⊆ super)
  const auto& sub_faces = hsub.aug.levels[t];
  const auto& sup_faces = hsup.aug.levels[t];
  const std::vector<int> pos = face_positions(sub, super, sub_faces, sup_faces);
  const int n_sup = static_cast<int>(sup_faces.size());

  // columns available to express an image cycle: super's representatives
  // first, then the boundaries from level t+1
  std::vector<std::vector<typename Field::Value>> span_cols = hsup.level[t].reps;
  if (t + 1 < static_cast<int>(hsup.aug.levels.size()))
    for (auto& col : boundary_columns(f, hsup.aug.boundary[t + 1]))
      span_cols.push_back(std::move(col));
  Matrix<Field> span(f, n_sup, static_cast<int>(span_cols.size()));
  for (int c = 0; c < span.cols; ++c)
    for (int r = 0; r < n_sup; ++r) span.at(r, c) = span_cols[c][r];

  Matrix<Field> result(f, rep.target_dim, rep.source_dim);
  for (int s = 0; s < rep.source_dim; ++s) {
    std::vector<typename Field::Value> image(n_sup, f.zero());
    const auto& r = hsub.level[t].reps[s];
    for (size_t i = 0; i < r.size(); ++i)
      image[pos[i]] = f.add(image[pos[i]], r[i]);
    auto x = solve(f, span, image);
    if (!x)
      throw TheoremViolation("image of a cycle under inclusion failed to decompose "
                             "against the ambient cycle space");
    for (int tgt = 0; tgt < rep.target_dim; ++tgt) result.at(tgt, s) = (*x)[tgt];
  }

  rep.rank = rank_of(f, result);
  rep.injective = rep.rank == rep.source_dim;
  rep.surjective = rep.rank == rep.target_dim;
  for (int r = 0; r < rep.target_dim; ++r)
    for (int c = 0; c < rep.source_dim; ++c)
      rep.matrix[r].push_back(f.render(result.at(r, c)));
  return rep;
}

}  // namespace

std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& k, const FieldSpec& field) {
  return with_field(field, [&](const auto& f) {
    std::vector<HomologyGroup> out;
    auto data = compute_homology(f, k);
    for (size_t t = 0; t < data.level.size(); ++t) {
      HomologyGroup g;
      g.index = static_cast<int>(t) - 1;
      g.dimension = data.level[t].dim;
      for (const auto& v : data.level[t].reps)
        g.representatives.push_back(render_cycle(f, data.aug.levels[t], v));
      out.push_back(std::move(g));
    }
    return out;
  });
}

bool is_acyclic(const SimplicialComplex& k, const FieldSpec& field) {
  return with_field(field, [&](const auto& f) {
    auto aug = build_augmented(f, k);
    const int nlevels = static_cast<int>(aug.levels.size());
    if (nlevels <= 1) return true;  // void or {∅}: nothing in dimensions ≥ 0
    std::vector<int> ranks(nlevels + 1, 0);
    for (int t = 1; t < nlevels; ++t) ranks[t] = rank_of(f, aug.boundary[t]);
    for (int t = 1; t < nlevels; ++t) {
      const int n = static_cast<int>(aug.levels[t].size());
      const int next_rank = t + 1 < nlevels ? ranks[t + 1] : 0;
      if (n - ranks[t] - next_rank != 0) return false;
    }
    return true;
  });
}

bool AcyclicityCache::is_acyclic(const SimplicialComplex& k) {
  const std::string key = facet_key(k);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const bool result = vres::is_acyclic(k, field_);
  memo_.emplace(key, result);
  return result;
}

namespace {

std::string scale_coefficient(const std::string& coeff, const Monomial& q,
                              const std::vector<std::string>& names) {
  if (q.is_one()) return coeff;
  const std::string mono = render_monomial(q, names);
  if (coeff == "1") return mono;
  if (coeff == "-1") return "-" + mono;
  return coeff + "*" + mono;
}

}  // namespace

HomologyReport homology_table(const LabeledComplex& l,
                              const std::vector<std::string>& variable_names,
                              const FieldSpec& field, bool include_h0) {
  HomologyReport rep;
  rep.field = field;
  for (const auto& att : l.attainable_subcomplexes()) {
    for (const HomologyGroup& g : reduced_homology(att.subcomplex, field)) {
      if (g.dimension == 0) continue;
      if (g.index < 0 && !include_h0) continue;
      HomologyEntry e;
      e.index = g.index + 1;
      e.degree = att.witness;
      e.dimension = g.dimension;
      for (const Cycle& cyc : g.representatives) {
        Cycle scaled;
        for (const CycleTerm& t : cyc) {
          const Monomial q = att.witness.quotient(l.label(t.face));
          scaled.push_back(CycleTerm{t.face, scale_coefficient(t.coefficient, q, variable_names)});
        }
        e.representatives.push_back(std::move(scaled));
      }
      rep.entries.push_back(std::move(e));
    }
  }
  std::stable_sort(rep.entries.begin(), rep.entries.end(),
                   [](const HomologyEntry& a, const HomologyEntry& b) {
                     if (a.index != b.index) return a.index < b.index;
                     if (a.degree.total_degree() != b.degree.total_degree())
                       return a.degree.total_degree() < b.degree.total_degree();
                     return a.degree < b.degree;
                   });
  return rep;
}

InducedMapReport induced_map_on_homology(const SimplicialComplex& sub,
                                         const SimplicialComplex& super, int index,
                                         const FieldSpec& field) {
  if (index < -1) throw ArgumentError("homology index must be ≥ -1");
  check_order_consistency(sub, super);
  if (!is_subcomplex(sub, super))
    throw ArgumentError("inclusion-induced map requires a subcomplex");
  return with_field(field,
                    [&](const auto& f) { return induced_map_impl(f, sub, super, index); });
}

}  // namespace vres
