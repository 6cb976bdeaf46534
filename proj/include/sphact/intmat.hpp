#ifndef SPHACT_INTMAT_HPP_
#define SPHACT_INTMAT_HPP_

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sphact {

// All matrix arithmetic in this library is exact; there is no floating
// point anywhere.
using Int = boost::multiprecision::cpp_int;

class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  /// row j += c * row i
  void add_row(int i, int j, const Int& c);
  /// col j += c * col i
  void add_col(int i, int j, const Int& c);
  void negate_row(int i);
  void negate_col(int i);

  Int trace() const;
  IntMatrix transposed() const;

private:
  int rows_, cols_;
  std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& v);

/// Exact determinant (fraction-free elimination). Empty matrix has det 1.
Int determinant(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

/// Text form: rows separated by ';', entries by whitespace, e.g. "1 0; 1 -1".
IntMatrix parse_matrix(const std::string& text);
std::string format_matrix(const IntMatrix& m);

}  // namespace sphact

#endif
