#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vres/error.hpp"

namespace vres {

// Dense exact linear algebra templated over a field object (see field.hpp).
// The matrices here are tiny (strands of small complexes), so a dense
// row-major layout with full Gauss-Jordan pivoting is both fast enough and
// deterministic.

template <class Field>
struct Matrix {
  using Value = typename Field::Value;
  int rows = 0, cols = 0;
  std::vector<Value> data;

  Matrix() = default;
  Matrix(const Field& f, int r, int c) : rows(r), cols(c), data(r * c, f.zero()) {}

  Value& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  const Value& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

// In-place reduced row echelon form. Pivots are the first nonzero entry in
// each column scanned left to right (deterministic). Returns the rank;
// pivot_cols (if given) receives the pivot column of each of the first
// `rank` rows.
template <class Field>
int rref_in_place(const Field& f, Matrix<Field>& m, std::vector<int>* pivot_cols = nullptr) {
  if (pivot_cols) pivot_cols->clear();
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i)
      if (!f.is_zero(m.at(i, c))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    const auto inv = f.div(f.one(), m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      const auto factor = m.at(i, c);
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

template <class Field>
int rank_of(const Field& f, Matrix<Field> m) {
  return rref_in_place(f, m);
}

// Basis of the null space in reduced echelon form: one vector per free
// column, in ascending free-column order; entry 1 at the free column,
// the negated rref column above the pivots, 0 elsewhere.
template <class Field>
std::vector<std::vector<typename Field::Value>> kernel_basis(const Field& f, Matrix<Field> m) {
  std::vector<int> pivots;
  const int rank = rref_in_place(f, m, &pivots);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename Field::Value>> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<typename Field::Value> v(m.cols, f.zero());
    v[c] = f.one();
    for (int i = 0; i < rank; ++i) v[pivots[i]] = f.neg(m.at(i, c));
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of A·x = b with free variables set to zero, or nullopt when
// the system is inconsistent.
template <class Field>
std::optional<std::vector<typename Field::Value>> solve(
    const Field& f, const Matrix<Field>& a, const std::vector<typename Field::Value>& b) {
  if (static_cast<int>(b.size()) != a.rows) throw ArgumentError("solve: size mismatch");
  Matrix<Field> aug(f, a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  std::vector<int> pivots;
  const int rank = rref_in_place(f, aug, &pivots);
  for (int i = 0; i < rank; ++i)
    if (pivots[i] == a.cols) return std::nullopt;  // pivot in the augmented column
  std::vector<typename Field::Value> x(a.cols, f.zero());
  for (int i = 0; i < rank; ++i) x[pivots[i]] = aug.at(i, a.cols);
  return x;
}

// Incremental independence tracking: feed vectors one at a time; add()
// reports whether the vector enlarged the span.
template <class Field>
class RankTracker {
public:
  RankTracker(const Field& f, int dim) : f_(f), dim_(dim) {}

  bool add(std::vector<typename Field::Value> v) {
    if (static_cast<int>(v.size()) != dim_) throw ArgumentError("rank tracker: size mismatch");
    for (const auto& [pivot, row] : rows_) {
      if (f_.is_zero(v[pivot])) continue;
      const auto factor = v[pivot];
      for (int j = 0; j < dim_; ++j) v[j] = f_.sub(v[j], f_.mul(factor, row[j]));
    }
    int pivot = -1;
    for (int j = 0; j < dim_; ++j)
      if (!f_.is_zero(v[j])) {
        pivot = j;
        break;
      }
    if (pivot < 0) return false;
    const auto inv = f_.div(f_.one(), v[pivot]);
    for (int j = 0; j < dim_; ++j) v[j] = f_.mul(v[j], inv);
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

private:
  Field f_;
  int dim_;
  std::vector<std::pair<int, std::vector<typename Field::Value>>> rows_;
};

}  // namespace vres
