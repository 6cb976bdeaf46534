#include "sphact/automorphism.hpp"

#include <stdexcept>

namespace sphact {

FreeAutomorphism::FreeAutomorphism(int rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
  if (rank < 0) throw std::invalid_argument("rank must be non-negative");
  if (images_.size() != static_cast<size_t>(rank))
    throw std::invalid_argument("automorphism needs one image per generator");
  for (const Word& w : images_)
    if (w.rank() != rank)
      throw std::invalid_argument("automorphism image rank mismatch");
}

FreeAutomorphism FreeAutomorphism::identity(int rank) {
  std::vector<Word> images;
  images.reserve(rank);
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i));
  return FreeAutomorphism(rank, std::move(images));
}

size_t FreeAutomorphism::max_image_length() const {
  size_t n = 0;
  for (const Word& w : images_) n = std::max(n, w.length());
  return n;
}

Word apply_aut(const FreeAutomorphism& f, const Word& g) {
  if (f.rank() != g.rank())
    throw std::invalid_argument("rank mismatch in automorphism application");
  std::vector<Letter> out;
  for (const Letter& l : g.letters()) {
    const Word& img = f.image(l.index);
    if (l.sign > 0) {
      for (const Letter& m : img.letters()) out.push_back(m);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        out.push_back(it->inverse());
    }
  }
  return Word(g.rank(), std::move(out));
}

FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g) {
  if (f.rank() != g.rank())
    throw std::invalid_argument("rank mismatch in automorphism composition");
  std::vector<Word> images;
  images.reserve(f.rank());
  for (int i = 1; i <= f.rank(); ++i)
    images.push_back(apply_aut(f, g.image(i)));
  return FreeAutomorphism(f.rank(), std::move(images));
}

bool is_involution(const FreeAutomorphism& f) {
  for (int i = 1; i <= f.rank(); ++i)
    if (apply_aut(f, f.image(i)) != Word::generator(f.rank(), i)) return false;
  return true;
}

IntMatrix abelianization_matrix(const FreeAutomorphism& f) {
  IntMatrix m(f.rank(), f.rank());
  for (int j = 1; j <= f.rank(); ++j)
    for (int i = 1; i <= f.rank(); ++i)
      m.at(i - 1, j - 1) = exponent_sum(f.image(j), i);
  return m;
}

}  // namespace sphact
