#ifndef SPHACT_AUTOMORPHISM_HPP_
#define SPHACT_AUTOMORPHISM_HPP_

#include <vector>

#include "sphact/word.hpp"

namespace sphact {

/// An endomorphism of a finite-rank free group, given by the images of the
/// generators. Whether it is an involution is checked on demand, not at
/// construction.
class FreeAutomorphism {
public:
  explicit FreeAutomorphism(int rank, std::vector<Word> images);

  static FreeAutomorphism identity(int rank);

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int index) const { return images_[index - 1]; }

  /// Longest generator image, in letters.
  size_t max_image_length() const;

  bool operator==(const FreeAutomorphism& o) const {
    return rank_ == o.rank_ && images_ == o.images_;
  }

private:
  int rank_;
  std::vector<Word> images_;
};

Word apply_aut(const FreeAutomorphism& f, const Word& g);

/// compose(f, g) applies g first: x |-> f(g(x)).
FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g);

bool is_involution(const FreeAutomorphism& f);

/// Matrix of the induced automorphism of the abelianization; entry (i, j)
/// is the x_i-exponent of the image of x_j.
IntMatrix abelianization_matrix(const FreeAutomorphism& f);

}  // namespace sphact

#endif
