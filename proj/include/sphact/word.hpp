#ifndef SPHACT_WORD_HPP_
#define SPHACT_WORD_HPP_

#include <string>
#include <vector>

#include "sphact/intmat.hpp"

namespace sphact {

/// One occurrence of a generator x_i or its inverse. Generators are
/// 1-indexed; sign is +1 or -1.
struct Letter {
  int index;
  int sign;

  Letter inverse() const { return Letter{index, -sign}; }
  bool operator==(const Letter& o) const {
    return index == o.index && sign == o.sign;
  }
};

/// A reduced word in the free group of the given rank. Reduction happens
/// eagerly on construction, so equality of group elements is sequence
/// equality. The empty word is the identity.
class Word {
public:
  explicit Word(int rank) : rank_(rank) { check_rank(rank); }
  Word(int rank, std::vector<Letter> letters);

  static Word identity(int rank) { return Word(rank); }
  static Word generator(int rank, int index, int sign = +1) {
    return Word(rank, {Letter{index, sign}});
  }

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  bool operator==(const Word& o) const {
    return rank_ == o.rank_ && letters_ == o.letters_;
  }
  bool operator!=(const Word& o) const { return !(*this == o); }

private:
  static void check_rank(int rank);
  int rank_;
  std::vector<Letter> letters_;
};

/// Free reduction of a letter sequence; idempotent.
Word reduce(const std::vector<Letter>& letters, int rank);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);

/// Signed count of occurrences of x_i in g; the i-th coordinate of the
/// abelianized image of g.
Int exponent_sum(const Word& g, int index);

/// Text form: whitespace-separated tokens `x<k>` or `x<k>^-1`; the empty
/// string is the identity.
Word parse_word(const std::string& text, int rank);
std::string format_word(const Word& w);

}  // namespace sphact

#endif
