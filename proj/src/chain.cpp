#include "vres/chain.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "vres/linalg.hpp"

namespace vres {

namespace {

bool subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Sparse product over S of two entry lists, accumulated as
// (row, col) -> exponent vector -> integer coefficient.
using SymbolicMatrix = std::map<std::pair<int, int>, std::map<std::vector<int>, long>>;

void accumulate_product(SymbolicMatrix& acc, const std::vector<MatrixEntry>& outer,
                        const std::vector<MatrixEntry>& inner, long scale) {
  for (const MatrixEntry& a : inner)
    for (const MatrixEntry& b : outer) {
      if (b.col != a.row) continue;
      const Monomial prod = b.ratio.times(a.ratio);
      acc[{b.row, a.col}][prod.exponents()] +=
          scale * static_cast<long>(b.sign) * static_cast<long>(a.sign);
    }
}

bool all_zero(const SymbolicMatrix& acc) {
  for (const auto& [pos, poly] : acc)
    for (const auto& [expv, coeff] : poly)
      if (coeff != 0) return false;
  return true;
}

}  // namespace

FreeChainComplex FreeChainComplex::build(const LabeledComplex& l) {
  FreeChainComplex f;
  f.labeling_ = l;
  const SimplicialComplex& k = l.complex();
  if (k.is_void()) return f;
  const int top = k.dim() + 1;
  for (int i = 0; i <= top; ++i) {
    std::vector<BasisElement> basis;
    for (const Face& face : k.faces_of_dim(i - 1)) basis.push_back({face, l.label(face)});
    f.terms_.push_back(std::move(basis));
  }
  f.diffs_.resize(top + 1);
  for (int i = 1; i <= top; ++i) {
    const auto& src = f.terms_[i];
    for (int c = 0; c < static_cast<int>(src.size()); ++c) {
      const Face& sigma = src[c].face;
      for (size_t j = 0; j < sigma.size(); ++j) {
        Face tau = sigma;
        tau.erase(tau.begin() + j);
        const int r = f.face_index(i - 1, tau);
        if (r < 0) throw TheoremViolation("face missing its boundary face");
        MatrixEntry e;
        e.row = r;
        e.col = c;
        e.sign = j % 2 == 0 ? 1 : -1;
        e.ratio = src[c].degree.quotient(f.terms_[i - 1][r].degree);
        f.diffs_[i].push_back(std::move(e));
      }
    }
  }
  return f;
}

std::vector<int> FreeChainComplex::ranks() const {
  std::vector<int> out;
  for (const auto& t : terms_) out.push_back(static_cast<int>(t.size()));
  return out;
}

int FreeChainComplex::face_index(int i, const Face& f) const {
  if (i < 0 || i >= static_cast<int>(terms_.size())) return -1;
  const auto& basis = terms_[i];
  auto it = std::lower_bound(basis.begin(), basis.end(), f,
                             [](const BasisElement& b, const Face& g) { return b.face < g; });
  if (it == basis.end() || it->face != f) return -1;
  return static_cast<int>(it - basis.begin());
}

void FreeChainComplex::verify_d_squared() const {
  for (int i = 2; i <= length(); ++i) {
    SymbolicMatrix acc;
    accumulate_product(acc, diffs_[i - 1], diffs_[i], 1);
    if (!all_zero(acc))
      throw TheoremViolation("d" + std::to_string(i - 1) + "∘d" + std::to_string(i) +
                             " is nonzero");
  }
}

Strand strand(const FreeChainComplex& f, const Monomial& alpha) {
  Strand s;
  s.degree = alpha;
  const int len = f.length();
  if (len < 0) return s;
  std::vector<std::map<int, int>> position(len + 1);  // term index -> strand index
  for (int i = 0; i <= len; ++i) {
    std::vector<int> basis;
    const auto& terms = f.terms()[i];
    for (int k = 0; k < static_cast<int>(terms.size()); ++k)
      if (terms[k].degree.divides(alpha)) {
        position[i][k] = static_cast<int>(basis.size());
        basis.push_back(k);
      }
    s.bases.push_back(std::move(basis));
  }
  s.maps.resize(len + 1);
  for (int i = 1; i <= len; ++i) {
    const int rows = static_cast<int>(s.bases[i - 1].size());
    const int cols = static_cast<int>(s.bases[i].size());
    s.maps[i].assign(rows, std::vector<int>(cols, 0));
    for (const MatrixEntry& e : f.differentials()[i]) {
      auto c = position[i].find(e.col);
      if (c == position[i].end()) continue;
      // the row label divides the column label, which divides alpha
      auto r = position[i - 1].find(e.row);
      if (r == position[i - 1].end())
        throw TheoremViolation("strand dropped the target of a differential entry");
      s.maps[i][r->second][c->second] = e.sign;
    }
  }
  return s;
}

std::vector<int> strand_homology(const Strand& s, const FieldSpec& field) {
  return with_field(field, [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    const int len = static_cast<int>(s.bases.size()) - 1;
    std::vector<int> dims;
    if (len < 0) return dims;
    std::vector<int> ranks(len + 2, 0);
    for (int i = 1; i <= len; ++i) {
      const int rows = static_cast<int>(s.bases[i - 1].size());
      const int cols = static_cast<int>(s.bases[i].size());
      Matrix<F> m(f, rows, cols);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = f.from_int(s.maps[i][r][c]);
      ranks[i] = rank_of(f, m);
    }
    for (int i = 0; i <= len; ++i)
      dims.push_back(static_cast<int>(s.bases[i].size()) - ranks[i] - ranks[i + 1]);
    return dims;
  });
}

ChainMap subdivision_chain_map(const LabeledComplex& l, const LabeledComplex& lp,
                               const Face& omega, const std::string& new_vertex) {
  if (!l.lcm_labeled() || !lp.lcm_labeled())
    throw ArgumentError("subdivision comparison requires lcm-labelings");
  if (static_cast<int>(omega.size()) < 2)
    throw ArgumentError("subdivided face must have dimension ≥ 1");
  if (!l.complex().has_face(omega)) throw ArgumentError("subdivided face is not a face");

  // the subdivided complex must extend the original vertex order by v'
  const auto& old_names = l.complex().vertex_names();
  const auto& new_names = lp.complex().vertex_names();
  if (new_names.size() != old_names.size() + 1 || new_names.back() != new_vertex ||
      !std::equal(old_names.begin(), old_names.end(), new_names.begin()))
    throw ArgumentError("subdivided complex does not extend the original vertex order");
  if (!same_faces(lp.complex(), l.complex().stellar_subdivide(omega, new_vertex)))
    throw ArgumentError("complexes are not related by stellar subdivision at the given face");

  const int vp = static_cast<int>(new_names.size()) - 1;
  for (int v = 0; v < static_cast<int>(old_names.size()); ++v)
    if (l.complex().has_face({v}) && !(l.vertex_label(v) == lp.vertex_label(v)))
      throw ArgumentError("old vertex labels changed across the subdivision");
  const Monomial& vp_label = lp.vertex_label(vp);
  if (!vp_label.divides(l.label(omega)))
    throw ArgumentError("new vertex label must divide the subdivided face's label");

  ChainMap cm;
  cm.source_ = FreeChainComplex::build(l);
  cm.target_ = FreeChainComplex::build(lp);
  cm.omega_ = omega;
  cm.new_vertex_ = vp;
  cm.maps_.resize(cm.source_.terms().size());

  for (int i = 0; i < static_cast<int>(cm.source_.terms().size()); ++i) {
    const auto& basis = cm.source_.terms()[i];
    for (int c = 0; c < static_cast<int>(basis.size()); ++c) {
      const Face& sigma = basis[c].face;
      if (!subset(omega, sigma)) {
        const int r = cm.target_.face_index(i, sigma);
        if (r < 0) throw TheoremViolation("surviving face missing from the subdivision");
        if (!(cm.target_.terms()[i][r].degree == basis[c].degree))
          throw TheoremViolation("label changed on a face untouched by the subdivision");
        cm.maps_[i].push_back({r, c, 1, Monomial::one(l.nvars())});
        continue;
      }
      const int top_pos = static_cast<int>(sigma.size()) - 1;
      for (int x : omega) {
        const int pos = static_cast<int>(
            std::lower_bound(sigma.begin(), sigma.end(), x) - sigma.begin());
        Face tau;
        for (int v : sigma)
          if (v != x) tau.push_back(v);
        tau.push_back(vp);  // vp is the largest index, so tau stays sorted
        const int r = cm.target_.face_index(i, tau);
        if (r < 0) throw TheoremViolation("cone face missing from the subdivision");
        const Monomial& tgt = cm.target_.terms()[i][r].degree;
        if (!tgt.divides(basis[c].degree))
          throw TheoremViolation("comparison coefficient is not a monomial");
        MatrixEntry e;
        e.row = r;
        e.col = c;
        e.sign = (top_pos - pos) % 2 == 0 ? 1 : -1;
        e.ratio = basis[c].degree.quotient(tgt);
        cm.maps_[i].push_back(std::move(e));
      }
    }
  }
  return cm;
}

void ChainMap::verify_commutes() const {
  for (int i = 1; i < static_cast<int>(maps_.size()); ++i) {
    SymbolicMatrix acc;
    // target differential after the map, minus the map after the source
    // differential
    accumulate_product(acc, target_.differentials()[i], maps_[i], 1);
    accumulate_product(acc, maps_[i - 1], source_.differentials()[i], -1);
    if (!all_zero(acc))
      throw TheoremViolation("comparison map fails to commute with differentials at degree " +
                             std::to_string(i));
  }
}

void ChainMap::verify_injective(const FieldSpec& field) const {
  for (int i = 0; i < static_cast<int>(maps_.size()); ++i) {
    std::map<int, int> row_hits;
    std::map<int, int> col_hits;
    for (const MatrixEntry& e : maps_[i]) {
      ++row_hits[e.row];
      ++col_hits[e.col];
    }
    for (const auto& [row, n] : row_hits)
      if (n > 1)
        throw TheoremViolation("two columns of the comparison map share a target row");
    for (int c = 0; c < static_cast<int>(source_.terms()[i].size()); ++c)
      if (!col_hits.count(c))
        throw TheoremViolation("a column of the comparison map is zero");
  }
  // Numeric confirmation at the top degree, where every face participates.
  const Monomial alpha = target_.labeling().top_label();
  const Strand src = strand(source_, alpha);
  const Strand tgt = strand(target_, alpha);
  const auto mats = strand_matrices(src, tgt);
  with_field(field, [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    for (int i = 0; i < static_cast<int>(mats.size()); ++i) {
      const int rows = static_cast<int>(mats[i].size());
      const int cols = rows ? static_cast<int>(mats[i][0].size())
                            : static_cast<int>(src.bases[i].size());
      Matrix<F> m(f, rows, cols);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = f.from_int(mats[i][r][c]);
      if (rank_of(f, m) != cols)
        throw TheoremViolation("comparison map lost column rank at degree " + std::to_string(i));
    }
    return 0;
  });
}

std::vector<std::vector<std::vector<int>>> ChainMap::strand_matrices(const Strand& src,
                                                                     const Strand& tgt) const {
  if (!(src.degree == tgt.degree))
    throw ArgumentError("strand degrees differ");
  std::vector<std::vector<std::vector<int>>> out;
  for (int i = 0; i < static_cast<int>(src.bases.size()); ++i) {
    std::map<int, int> src_pos, tgt_pos;
    for (int k = 0; k < static_cast<int>(src.bases[i].size()); ++k) src_pos[src.bases[i][k]] = k;
    if (i < static_cast<int>(tgt.bases.size()))
      for (int k = 0; k < static_cast<int>(tgt.bases[i].size()); ++k)
        tgt_pos[tgt.bases[i][k]] = k;
    std::vector<std::vector<int>> m(tgt_pos.size(), std::vector<int>(src_pos.size(), 0));
    for (const MatrixEntry& e : maps_[i]) {
      auto c = src_pos.find(e.col);
      if (c == src_pos.end()) continue;
      auto r = tgt_pos.find(e.row);
      if (r == tgt_pos.end())
        throw TheoremViolation("strand of the comparison map dropped a target face");
      m[r->second][c->second] = e.sign;
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::string render_matrices(const FreeChainComplex& f,
                            const std::vector<std::string>& variable_names) {
  std::ostringstream out;
  if (f.length() < 0) {
    out << "no terms\n";
    return out.str();
  }
  out << "ranks:";
  for (int r : f.ranks()) out << ' ' << r;
  out << '\n';

  const SimplicialComplex& k = f.labeling().complex();
  auto face_label = [&](const Face& face) {
    std::string s = "{";
    const auto names = k.face_names(face);
    for (size_t i = 0; i < names.size(); ++i) {
      if (i) s += ',';
      s += names[i];
    }
    return s + "}";
  };

  for (int i = 1; i <= f.length(); ++i) {
    const auto& src = f.terms()[i];
    const auto& dst = f.terms()[i - 1];
    std::vector<std::vector<std::string>> grid(dst.size(),
                                               std::vector<std::string>(src.size(), "0"));
    for (const MatrixEntry& e : f.differentials()[i]) {
      std::string s = render_monomial(e.ratio, variable_names);
      if (e.sign < 0) s = "-" + s;
      grid[e.row][e.col] = std::move(s);
    }
    std::vector<std::string> col_heads, row_heads;
    for (const auto& b : src) col_heads.push_back(face_label(b.face));
    for (const auto& b : dst) row_heads.push_back(face_label(b.face));

    size_t head_w = 0;
    for (const auto& h : row_heads) head_w = std::max(head_w, h.size());
    std::vector<size_t> col_w(src.size(), 0);
    for (size_t c = 0; c < src.size(); ++c) {
      col_w[c] = col_heads[c].size();
      for (size_t r = 0; r < dst.size(); ++r) col_w[c] = std::max(col_w[c], grid[r][c].size());
    }

    out << "\nd" << i << ": F_" << i << " -> F_" << (i - 1) << '\n';
    out << std::string(head_w, ' ');
    for (size_t c = 0; c < src.size(); ++c)
      out << "  " << std::string(col_w[c] - col_heads[c].size(), ' ') << col_heads[c];
    out << '\n';
    for (size_t r = 0; r < dst.size(); ++r) {
      out << row_heads[r] << std::string(head_w - row_heads[r].size(), ' ');
      for (size_t c = 0; c < src.size(); ++c)
        out << "  " << std::string(col_w[c] - grid[r][c].size(), ' ') << grid[r][c];
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace vres
