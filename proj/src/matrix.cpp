#include "extremal/matrix.hpp"

#include <sstream>

#include "extremal/errors.hpp"

namespace extremal {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rat>& d) {
  Matrix m((int)d.size(), (int)d.size());
  for (int i = 0; i < (int)d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : m_data)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  for (size_t i = 0; i < m_data.size(); ++i) r.m_data[i] += o.m_data[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  for (size_t i = 0; i < m_data.size(); ++i) r.m_data[i] -= o.m_data[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (m_cols != o.m_rows) throw InternalError("matrix shape mismatch");
  Matrix r(m_rows, o.m_cols);
  for (int i = 0; i < m_rows; ++i)
    for (int k = 0; k < m_cols; ++k) {
      const Rat& a = at(i, k);
      if (sgn(a) == 0) continue;
      for (int j = 0; j < o.m_cols; ++j) {
        const Rat& b = o.at(k, j);
        if (sgn(b) != 0) r.at(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator*(const Rat& c) const {
  Matrix r = *this;
  for (auto& x : r.m_data) x *= c;
  return r;
}

Matrix Matrix::transposed() const {
  Matrix r(m_cols, m_rows);
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < m_cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Rat> Matrix::apply(const std::vector<Rat>& v) const {
  if ((int)v.size() != m_cols) throw InternalError("matrix/vector shape mismatch");
  std::vector<Rat> r(m_rows, Rat(0));
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < m_cols; ++j)
      if (sgn(at(i, j)) != 0) r[i] += at(i, j) * v[j];
  return r;
}

std::vector<int> Matrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m_cols && row < m_rows; ++col) {
    int p = -1;
    for (int r = row; r < m_rows; ++r)
      if (sgn(at(r, col)) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m_cols; ++c) std::swap(at(p, c), at(row, c));
    Rat inv = 1 / at(row, col);
    for (int c = col; c < m_cols; ++c) at(row, c) *= inv;
    for (int r = 0; r < m_rows; ++r) {
      if (r == row || sgn(at(r, col)) == 0) continue;
      Rat f = at(r, col);
      for (int c = col; c < m_cols; ++c) at(r, c) -= f * at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Matrix::rank() const {
  Matrix tmp = *this;
  return (int)tmp.rref().size();
}

Matrix Matrix::kernel_basis() const {
  Matrix tmp = *this;
  std::vector<int> pivots = tmp.rref();
  std::vector<bool> is_pivot(m_cols, false);
  for (int p : pivots) is_pivot[p] = true;
  int nfree = m_cols - (int)pivots.size();
  Matrix ker(m_cols, nfree);
  int k = 0;
  for (int col = 0; col < m_cols; ++col) {
    if (is_pivot[col]) continue;
    ker.at(col, k) = 1;
    for (int r = 0; r < (int)pivots.size(); ++r) ker.at(pivots[r], k) = -tmp.at(r, col);
    ++k;
  }
  return ker;
}

std::optional<std::vector<Rat>> Matrix::solve(const std::vector<Rat>& b) const {
  Matrix aug(m_rows, m_cols + 1);
  for (int i = 0; i < m_rows; ++i) {
    for (int j = 0; j < m_cols; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, m_cols) = b[i];
  }
  std::vector<int> pivots = aug.rref();
  for (int p : pivots)
    if (p == m_cols) return std::nullopt;  // inconsistent
  std::vector<Rat> x(m_cols, Rat(0));
  for (int r = 0; r < (int)pivots.size(); ++r) x[pivots[r]] = aug.at(r, m_cols);
  return x;
}

Matrix Matrix::column_space_basis() const {
  Matrix tmp = *this;
  std::vector<int> pivots = tmp.rref();
  Matrix basis(m_rows, (int)pivots.size());
  for (int k = 0; k < (int)pivots.size(); ++k)
    for (int i = 0; i < m_rows; ++i) basis.at(i, k) = at(i, pivots[k]);
  return basis;
}

bool same_column_span(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) return false;
  Matrix joint(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) joint.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) joint.at(i, a.cols() + j) = b.at(i, j);
  }
  int ra = a.rank(), rb = b.rank();
  return ra == rb && joint.rank() == ra;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < m_rows; ++i) {
    os << (i ? "\n[" : "[");
    for (int j = 0; j < m_cols; ++j) os << (j ? " " : "") << rat_str(at(i, j));
    os << "]";
  }
  return os.str();
}

}  // namespace extremal
