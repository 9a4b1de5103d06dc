#include "lrc/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace lrc {

FqMatrix::FqMatrix(Field field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      entries_(std::size_t(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

FqMatrix FqMatrix::identity(const Field& field, int n) {
  FqMatrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FqMatrix FqMatrix::from_rows(const Field& field,
                             const std::vector<std::vector<FieldElement>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  FqMatrix m(field, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = field.element(rows[i][j]);
  }
  return m;
}

std::vector<FieldElement> FqMatrix::row(int r) const {
  return {entries_.begin() + std::size_t(r) * cols_,
          entries_.begin() + std::size_t(r + 1) * cols_};
}

FqMatrix FqMatrix::transposed() const {
  FqMatrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

FqMatrix FqMatrix::columns(const std::vector<int>& keep) const {
  for (int c : keep)
    if (c < 0 || c >= cols_) throw std::invalid_argument("column index out of range");
  FqMatrix m(field_, rows_, static_cast<int>(keep.size()));
  for (int i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      m.at(i, static_cast<int>(j)) = at(i, keep[j]);
  return m;
}

bool FqMatrix::operator==(const FqMatrix& other) const {
  return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  if (a.field() != b.field()) throw std::invalid_argument("field mismatch");
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
  const Field& f = a.field();
  FqMatrix out(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int l = 0; l < a.cols(); ++l) {
      const FieldElement s = a.at(i, l);
      if (s == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(s, b.at(l, j)));
    }
  }
  return out;
}

std::vector<FieldElement> vec_mat(const std::vector<FieldElement>& v, const FqMatrix& m) {
  if (static_cast<int>(v.size()) != m.rows())
    throw std::invalid_argument("dimension mismatch");
  const Field& f = m.field();
  std::vector<FieldElement> out(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j)
      out[j] = f.add(out[j], f.mul(v[i], m.at(i, j)));
  }
  return out;
}

std::vector<FieldElement> mat_vec(const FqMatrix& m, const std::vector<FieldElement>& v) {
  if (static_cast<int>(v.size()) != m.cols())
    throw std::invalid_argument("dimension mismatch");
  const Field& f = m.field();
  std::vector<FieldElement> out(m.rows(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    FieldElement acc = 0;
    for (int j = 0; j < m.cols(); ++j)
      if (v[j] != 0) acc = f.add(acc, f.mul(m.at(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

FqMatrix hstack(const FqMatrix& a, const FqMatrix& b) {
  if (a.field() != b.field() || a.rows() != b.rows())
    throw std::invalid_argument("hstack mismatch");
  FqMatrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

FqMatrix vstack(const FqMatrix& a, const FqMatrix& b) {
  if (a.field() != b.field() || a.cols() != b.cols())
    throw std::invalid_argument("vstack mismatch");
  FqMatrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
  return out;
}

FqMatrix block_diag(const FqMatrix& a, const FqMatrix& b) {
  if (a.field() != b.field()) throw std::invalid_argument("field mismatch");
  FqMatrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

FqMatrix scaled(const FqMatrix& m, FieldElement s) {
  const Field& f = m.field();
  FqMatrix out = m;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = f.mul(s, m.at(i, j));
  return out;
}

FqMatrix rref(const FqMatrix& m, std::vector<int>* pivots) {
  const Field& f = m.field();
  FqMatrix r = m;
  int lead = 0;
  for (int c = 0; c < r.cols() && lead < r.rows(); ++c) {
    int pivot = -1;
    for (int i = lead; i < r.rows(); ++i) {
      if (r.at(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(pivot, j), r.at(lead, j));
    const FieldElement scale = f.inv(r.at(lead, c));
    for (int j = c; j < r.cols(); ++j) r.at(lead, j) = f.mul(scale, r.at(lead, j));
    for (int i = 0; i < r.rows(); ++i) {
      if (i == lead) continue;
      const FieldElement factor = r.at(i, c);
      if (factor == 0) continue;
      for (int j = c; j < r.cols(); ++j)
        r.at(i, j) = f.sub(r.at(i, j), f.mul(factor, r.at(lead, j)));
    }
    if (pivots) pivots->push_back(c);
    ++lead;
  }
  return r;
}

int rank(const FqMatrix& m) {
  std::vector<int> pivots;
  rref(m, &pivots);
  return static_cast<int>(pivots.size());
}

FqMatrix nullspace_basis(const FqMatrix& m) {
  const Field& f = m.field();
  std::vector<int> pivots;
  const FqMatrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  FqMatrix basis(f, m.cols() - static_cast<int>(pivots.size()), m.cols());
  int row = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    basis.at(row, c) = 1;
    for (std::size_t t = 0; t < pivots.size(); ++t)
      basis.at(row, pivots[t]) = f.neg(r.at(static_cast<int>(t), c));
    ++row;
  }
  return basis;
}

FieldElement det(const FqMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Field& f = m.field();
  FqMatrix a = m;
  const int n = m.rows();
  FieldElement result = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i) {
      if (a.at(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(c, j));
      result = f.neg(result);
    }
    result = f.mul(result, a.at(c, c));
    const FieldElement inv = f.inv(a.at(c, c));
    for (int i = c + 1; i < n; ++i) {
      const FieldElement factor = f.mul(a.at(i, c), inv);
      if (factor == 0) continue;
      for (int j = c; j < n; ++j)
        a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(c, j)));
    }
  }
  return result;
}

SolveResult solve(const FqMatrix& m, const std::vector<FieldElement>& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw std::invalid_argument("right-hand side length mismatch");
  FqMatrix aug(m.field(), m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<int> pivots;
  const FqMatrix r = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == m.cols())
    return {SolveStatus::NoSolution, {}};
  if (static_cast<int>(pivots.size()) < m.cols())
    return {SolveStatus::Underdetermined, {}};
  std::vector<FieldElement> x(m.cols(), 0);
  for (std::size_t t = 0; t < pivots.size(); ++t)
    x[pivots[t]] = r.at(static_cast<int>(t), m.cols());
  return {SolveStatus::Unique, std::move(x)};
}

bool in_row_space(const FqMatrix& m, const std::vector<FieldElement>& v) {
  if (static_cast<int>(v.size()) != m.cols())
    throw std::invalid_argument("vector length mismatch");
  const Field& f = m.field();
  std::vector<int> pivots;
  const FqMatrix r = rref(m, &pivots);
  std::vector<FieldElement> w = v;
  for (std::size_t t = 0; t < pivots.size(); ++t) {
    const FieldElement factor = w[pivots[t]];
    if (factor == 0) continue;
    for (int j = 0; j < m.cols(); ++j)
      w[j] = f.sub(w[j], f.mul(factor, r.at(static_cast<int>(t), j)));
  }
  for (FieldElement x : w)
    if (x != 0) return false;
  return true;
}

}  // namespace lrc
