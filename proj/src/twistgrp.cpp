#include "sphact/twistgrp.hpp"

#include <stdexcept>

namespace sphact {

TwistedGroup::TwistedGroup(FreeAutomorphism theta) : theta_(std::move(theta)) {
  if (!is_involution(theta_))
    throw std::invalid_argument("theta is not an involution");
}

SemidirectElement sd_identity(const TwistedGroup& g) {
  return {Word::identity(g.rank()), 0};
}

static void check_element(const TwistedGroup& g, const SemidirectElement& a) {
  if (a.word.rank() != g.rank())
    throw std::invalid_argument("element rank mismatch");
  if (a.bit != 0 && a.bit != 1)
    throw std::invalid_argument("element bit must be 0 or 1");
}

SemidirectElement sd_multiply(const TwistedGroup& g, const SemidirectElement& a,
                              const SemidirectElement& b) {
  check_element(g, a);
  check_element(g, b);
  Word right = a.bit ? g.apply_theta(b.word) : b.word;
  return {multiply(a.word, right), a.bit ^ b.bit};
}

SemidirectElement sd_invert(const TwistedGroup& g, const SemidirectElement& a) {
  check_element(g, a);
  Word w = invert(a.word);
  if (a.bit) w = g.apply_theta(w);
  return {std::move(w), a.bit};
}

bool has_order_two(const TwistedGroup& g, const SemidirectElement& a) {
  check_element(g, a);
  if (a == sd_identity(g))
    throw std::invalid_argument("has_order_two rejects the identity");
  return sd_multiply(g, a, a) == sd_identity(g);
}

OrientationHom::OrientationHom(std::vector<int> bits) : bits_(std::move(bits)) {
  for (int b : bits_)
    if (b != 0 && b != 1)
      throw std::invalid_argument("orientation values must be bits");
}

std::optional<int> orientation_violation(const TwistedGroup& g,
                                         const OrientationHom& phi) {
  if (phi.size() != g.rank())
    throw std::invalid_argument("orientation length mismatch");
  for (int j = 1; j <= g.rank(); ++j) {
    int image_value = evaluate_orientation_word(phi, g.theta().image(j));
    if (image_value != phi.value(j)) return j;
  }
  return std::nullopt;
}

bool validate_orientation(const TwistedGroup& g, const OrientationHom& phi) {
  return !orientation_violation(g, phi).has_value();
}

int evaluate_orientation_word(const OrientationHom& phi, const Word& w) {
  if (phi.size() != w.rank())
    throw std::invalid_argument("orientation length mismatch");
  Int total = 0;
  for (int i = 1; i <= w.rank(); ++i)
    if (phi.value(i)) total += exponent_sum(w, i);
  return total % 2 != 0 ? 1 : 0;
}

int evaluate_orientation(const TwistedGroup& g, const OrientationHom& phi,
                         const SemidirectElement& a) {
  check_element(g, a);
  if (!validate_orientation(g, phi))
    throw std::invalid_argument("orientation is not a homomorphism");
  return (evaluate_orientation_word(phi, a.word) + a.bit) % 2;
}

FreeProductResult free_product_with_z2(
    const std::vector<TwistedGroup>& factors) {
  if (factors.empty())
    throw std::invalid_argument("free product needs at least one factor");
  if (factors.size() == 1) return {factors[0], {{0, factors[0].rank(), 0}}};

  const int n = static_cast<int>(factors.size());
  int total_factor_rank = 0;
  for (const TwistedGroup& f : factors) total_factor_rank += f.rank();
  const int rank = total_factor_rank + (n - 1);

  std::vector<FactorEmbedding> embeddings;
  int offset = 0;
  for (int i = 0; i < n; ++i) {
    int new_letter = i == 0 ? 0 : total_factor_rank + i;
    embeddings.push_back({offset, factors[i].rank(), new_letter});
    offset += factors[i].rank();
  }

  auto relabel = [&](const Word& w, int factor) {
    std::vector<Letter> letters;
    for (const Letter& l : w.letters())
      letters.push_back({l.index + embeddings[factor].generator_offset, l.sign});
    return Word(rank, std::move(letters));
  };

  std::vector<Word> images(rank, Word::identity(rank));
  for (int i = 0; i < n; ++i) {
    const TwistedGroup& f = factors[i];
    for (int j = 1; j <= f.rank(); ++j) {
      Word img = relabel(f.theta().image(j), i);
      if (i != 0) {
        Word x = Word::generator(rank, embeddings[i].new_letter);
        img = multiply(multiply(invert(x), img), x);
      }
      images[embeddings[i].generator_offset + j - 1] = std::move(img);
    }
  }
  for (int i = 1; i < n; ++i) {
    int x = embeddings[i].new_letter;
    images[x - 1] = Word::generator(rank, x, -1);
  }

  // The TwistedGroup constructor re-verifies that the result is an
  // involution.
  return {TwistedGroup(FreeAutomorphism(rank, std::move(images))),
          std::move(embeddings)};
}

bool verify_dyer_scott(const TwistedGroup& g, const DyerScottClaim& claim) {
  std::vector<int> seen(g.rank() + 1, 0);
  auto mark = [&](int i) {
    if (i < 1 || i > g.rank())
      throw std::invalid_argument("claim index out of range");
    ++seen[i];
  };
  for (int i : claim.fixed) mark(i);
  for (auto [a, b] : claim.swaps) { mark(a); mark(b); }
  for (const auto& l : claim.lambdas) {
    mark(l.x);
    for (int y : l.ys) mark(y);
  }
  for (int i = 1; i <= g.rank(); ++i)
    if (seen[i] != 1)
      throw std::invalid_argument("claim does not partition the generators");

  const int m = g.rank();
  for (int i : claim.fixed)
    if (g.theta().image(i) != Word::generator(m, i)) return false;
  for (auto [a, b] : claim.swaps) {
    if (g.theta().image(a) != Word::generator(m, b)) return false;
    if (g.theta().image(b) != Word::generator(m, a)) return false;
  }
  for (const auto& l : claim.lambdas) {
    Word x = Word::generator(m, l.x);
    if (g.theta().image(l.x) != invert(x)) return false;
    for (int yi : l.ys) {
      Word y = Word::generator(m, yi);
      if (g.theta().image(yi) != multiply(multiply(invert(x), y), x))
        return false;
    }
  }
  return true;
}

}  // namespace sphact
