#include "sphact/intmat.hpp"

#include <sstream>
#include <stdexcept>

namespace sphact {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("matrix dimensions must be non-negative");
  a_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(int i, int j, const Int& c) {
  for (int k = 0; k < cols_; ++k) at(j, k) += c * at(i, k);
}

void IntMatrix::add_col(int i, int j, const Int& c) {
  for (int k = 0; k < rows_; ++k) at(k, j) += c * at(k, i);
}

void IntMatrix::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int j) {
  for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

Int IntMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Int t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum dimension mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference dimension mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& v) {
  if (static_cast<size_t>(a.cols()) != v.size())
    throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<Int> w(a.rows(), Int(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) w[i] += a.at(i, j) * v[j];
  return w;
}

// Bareiss fraction-free elimination; divisions are exact.
Int determinant(const IntMatrix& m) {
  if (!m.is_square())
    throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (int t = 0; t < n - 1; ++t) {
    if (w.at(t, t) == 0) {
      int p = -1;
      for (int i = t + 1; i < n; ++i)
        if (w.at(i, t) != 0) { p = i; break; }
      if (p < 0) return 0;
      w.swap_rows(t, p);
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i)
      for (int j = t + 1; j < n; ++j) {
        Int num = w.at(i, j) * w.at(t, t) - w.at(i, t) * w.at(t, j);
        w.at(i, j) = num / prev;
      }
    prev = w.at(t, t);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  Int d = determinant(m);
  return d == 1 || d == -1;
}

IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Int>> rows;
  std::string row_text;
  std::stringstream ss(text);
  while (std::getline(ss, row_text, ';')) {
    std::vector<Int> row;
    std::stringstream rs(row_text);
    std::string tok;
    while (rs >> tok) {
      try {
        row.emplace_back(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad matrix entry '" + tok + "'");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) return IntMatrix(0, 0);
  size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols)
      throw std::invalid_argument("ragged matrix rows");
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::string format_matrix(const IntMatrix& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m.at(i, j).str();
    }
  }
  return out;
}

}  // namespace sphact
