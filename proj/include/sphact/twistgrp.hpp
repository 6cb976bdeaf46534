#ifndef SPHACT_TWISTGRP_HPP_
#define SPHACT_TWISTGRP_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "sphact/automorphism.hpp"

namespace sphact {

/// The semidirect product of a finite-rank free group with the two-element
/// group, determined by an involutive automorphism theta.
class TwistedGroup {
public:
  explicit TwistedGroup(FreeAutomorphism theta);

  int rank() const { return theta_.rank(); }
  const FreeAutomorphism& theta() const { return theta_; }
  Word apply_theta(const Word& g) const { return apply_aut(theta_, g); }

private:
  FreeAutomorphism theta_;
};

/// Element (word, bit) with bit the coordinate in the two-element factor.
struct SemidirectElement {
  Word word;
  int bit;  // 0 or 1

  bool operator==(const SemidirectElement& o) const {
    return word == o.word && bit == o.bit;
  }
};

SemidirectElement sd_identity(const TwistedGroup& g);

/// Multiplication convention: (g, e)(g', e') = (g * theta^e(g'), e xor e').
SemidirectElement sd_multiply(const TwistedGroup& g, const SemidirectElement& a,
                              const SemidirectElement& b);
SemidirectElement sd_invert(const TwistedGroup& g, const SemidirectElement& a);

/// True iff a * a is the identity; for bit 1 this is g * theta(g) = e.
/// The identity element is rejected as input.
bool has_order_two(const TwistedGroup& g, const SemidirectElement& a);

/// Homomorphism to the two-element group with value 1 on (e, 1), stored as
/// its values on the free generators.
class OrientationHom {
public:
  OrientationHom() = default;
  explicit OrientationHom(std::vector<int> bits);

  int size() const { return static_cast<int>(bits_.size()); }
  int value(int index) const { return bits_[index - 1]; }
  const std::vector<int>& bits() const { return bits_; }

  bool operator==(const OrientationHom& o) const { return bits_ == o.bits_; }

private:
  std::vector<int> bits_;
};

/// True iff phi extends to a homomorphism on the semidirect product, i.e.
/// phi(x_i) = phi(theta(x_i)) for every generator (mod 2).
bool validate_orientation(const TwistedGroup& g, const OrientationHom& phi);
/// First generator index violating the compatibility condition, if any.
std::optional<int> orientation_violation(const TwistedGroup& g,
                                         const OrientationHom& phi);

/// phi(a) = sum_i exponent_sum(word, i) * phi(x_i) + bit (mod 2).
int evaluate_orientation(const TwistedGroup& g, const OrientationHom& phi,
                         const SemidirectElement& a);
int evaluate_orientation_word(const OrientationHom& phi, const Word& w);

/// Where each factor landed in a free product presentation: its generators
/// occupy [generator_offset + 1, generator_offset + rank]; new_letter is the
/// extra generator attached to the factor, 0 for the distinguished first one.
struct FactorEmbedding {
  int generator_offset;
  int rank;
  int new_letter;
};

struct FreeProductResult {
  TwistedGroup group;
  std::vector<FactorEmbedding> factors;
};

/// Presents the free product of the given twisted groups as a single
/// twisted group: one fresh generator per non-distinguished factor, with
/// theta inverting it and conjugating that factor's images by it.
FreeProductResult free_product_with_z2(const std::vector<TwistedGroup>& factors);

/// Claimed splitting of the generators: theta fixes each fixed generator,
/// swaps each pair, and on a lambda block inverts x and conjugates each y
/// by it.
struct DyerScottClaim {
  struct Lambda {
    int x;
    std::vector<int> ys;
  };
  std::vector<int> fixed;
  std::vector<std::pair<int, int>> swaps;
  std::vector<Lambda> lambdas;
};

bool verify_dyer_scott(const TwistedGroup& g, const DyerScottClaim& claim);

}  // namespace sphact

#endif
