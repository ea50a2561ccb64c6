#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "extremal/rational.hpp"

namespace extremal {

/// Dense matrix over Rat.  Small sizes only (module dimensions are capped),
/// so everything is plain row-major storage and cubic elimination.
class Matrix {
 public:
  Matrix() : m_rows(0), m_cols(0) {}
  Matrix(int rows, int cols) : m_rows(rows), m_cols(cols), m_data((size_t)rows * cols, Rat(0)) {}

  static Matrix identity(int n);
  static Matrix diagonal(const std::vector<Rat>& d);

  int rows() const { return m_rows; }
  int cols() const { return m_cols; }
  Rat& at(int r, int c) { return m_data[(size_t)r * m_cols + c]; }
  const Rat& at(int r, int c) const { return m_data[(size_t)r * m_cols + c]; }

  bool operator==(const Matrix& o) const {
    return m_rows == o.m_rows && m_cols == o.m_cols && m_data == o.m_data;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rat& c) const;
  Matrix transposed() const;

  std::vector<Rat> apply(const std::vector<Rat>& v) const;

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<int> rref();
  int rank() const;
  /// Basis of the right kernel (as columns of the returned matrix).
  Matrix kernel_basis() const;
  /// Solves A x = b; std::nullopt if inconsistent.  If the solution is not
  /// unique an arbitrary particular solution is returned.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;
  /// Basis of the column space (a subset of columns, reduced).
  Matrix column_space_basis() const;

  std::string str() const;

 private:
  int m_rows, m_cols;
  std::vector<Rat> m_data;
};

/// True if the spans of the columns of a and b coincide.
bool same_column_span(const Matrix& a, const Matrix& b);

}  // namespace extremal
