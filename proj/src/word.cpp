#include "sphact/word.hpp"

#include <sstream>
#include <stdexcept>

namespace sphact {

void Word::check_rank(int rank) {
  if (rank < 0) throw std::invalid_argument("rank must be non-negative");
}

Word::Word(int rank, std::vector<Letter> letters) : rank_(rank) {
  check_rank(rank);
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.index < 1 || l.index > rank_)
      throw std::invalid_argument("generator index " + std::to_string(l.index) +
                                  " out of range for rank " +
                                  std::to_string(rank_));
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("letter sign must be +1 or -1");
    if (!letters_.empty() && letters_.back().index == l.index &&
        letters_.back().sign == -l.sign) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word reduce(const std::vector<Letter>& letters, int rank) {
  return Word(rank, letters);
}

Word multiply(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    throw std::invalid_argument("rank mismatch in word multiplication");
  std::vector<Letter> all = u.letters();
  all.insert(all.end(), v.letters().begin(), v.letters().end());
  return Word(u.rank(), std::move(all));
}

Word invert(const Word& u) {
  std::vector<Letter> rev(u.letters().rbegin(), u.letters().rend());
  for (Letter& l : rev) l.sign = -l.sign;
  return Word(u.rank(), std::move(rev));
}

Int exponent_sum(const Word& g, int index) {
  if (index < 1 || index > g.rank())
    throw std::invalid_argument("generator index out of range");
  Int sum = 0;
  for (const Letter& l : g.letters())
    if (l.index == index) sum += l.sign;
  return sum;
}

Word parse_word(const std::string& text, int rank) {
  std::vector<Letter> letters;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    if (tok.size() < 2 || tok[0] != 'x')
      throw std::invalid_argument("bad word token '" + tok + "'");
    size_t caret = tok.find('^');
    std::string digits = tok.substr(1, caret == std::string::npos
                                           ? std::string::npos
                                           : caret - 1);
    int sign = 1;
    if (caret != std::string::npos) {
      if (tok.substr(caret) != "^-1")
        throw std::invalid_argument("bad word token '" + tok +
                                    "' (only ^-1 is allowed)");
      sign = -1;
    }
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad word token '" + tok + "'");
    letters.push_back(Letter{std::stoi(digits), sign});
  }
  return Word(rank, std::move(letters));
}

std::string format_word(const Word& w) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace sphact
