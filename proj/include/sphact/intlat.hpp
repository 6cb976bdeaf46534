#ifndef SPHACT_INTLAT_HPP_
#define SPHACT_INTLAT_HPP_

#include <optional>
#include <vector>

#include "sphact/intmat.hpp"

namespace sphact {

/// U * M * V == D with U, V unimodular and D diagonal, each diagonal entry
/// dividing the next. The inverse transforms are accumulated alongside.
/// The identity is re-verified on every call.
struct SmithResult {
  IntMatrix u, d, v;
  IntMatrix u_inv, v_inv;

  int diagonal_rank() const;
  Int diagonal(int i) const { return d.at(i, i); }
};

SmithResult smith_normal_form(const IntMatrix& m);

/// Basis of an integer sublattice of Z^ambient, one vector per entry.
/// Kernel lattices are saturated: no vector outside has a multiple inside.
struct LatticeBasis {
  int ambient = 0;
  std::vector<std::vector<Int>> vectors;
  bool saturated = false;

  int dimension() const { return static_cast<int>(vectors.size()); }
  IntMatrix as_columns() const;
};

/// Basis of { v : M v = 0 }.
LatticeBasis kernel_lattice(const IntMatrix& m);

/// Solve basis * X = targets over the integers, column by column.
/// Throws if some target column is not an integer combination.
IntMatrix solve_in_lattice(const IntMatrix& basis, const IntMatrix& targets);

/// The conjugacy invariants (k, r, s) of an integral involution: k swap
/// blocks [[0,1],[1,0]], then r diagonal entries +1, then s entries -1.
struct CanonicalInvolution {
  int k = 0;
  int r = 0;
  int s = 0;

  int dimension() const { return 2 * k + r + s; }
  IntMatrix matrix() const;

  bool operator==(const CanonicalInvolution& o) const {
    return k == o.k && r == o.r && s == o.s;
  }
};

/// Detects whether m literally is some A(k, r, s): swap blocks first, then
/// the +1 diagonal, then the -1 diagonal.
std::optional<CanonicalInvolution> match_canonical_pattern(const IntMatrix& m);

/// (k, r, s) for an involution M, computed from the lattice data: r is the
/// 2-rank of Fix/(M+I)Z^m, s the 2-rank of Anti/(M-I)Z^m, and k fills up
/// the dimension. Throws unless M * M == I.
CanonicalInvolution involution_invariants(const IntMatrix& m);

struct Canonicalization {
  CanonicalInvolution invariants;
  IntMatrix conjugator;  // P with P^-1 * M * P == A(k, r, s), verified
};

/// Constructive change of basis putting an integral involution into its
/// canonical block form. The returned conjugator is verified before it is
/// returned; verification failure is a defect, not an input error.
Canonicalization canonicalize_involution(const IntMatrix& m);

/// Exact inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace sphact

#endif
