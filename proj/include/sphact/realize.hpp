#ifndef SPHACT_REALIZE_HPP_
#define SPHACT_REALIZE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sphact/intlat.hpp"
#include "sphact/twistgrp.hpp"

namespace sphact {

enum class Realizability { Realizable, NotRealizable, Unknown };

/// Decision certificate. A NotRealizable verdict always carries a witness
/// g with theta(g) = g^-1 and phi(g, 0) = 1; both equations are re-verified
/// on construction. The kernel basis of rho(theta) + I is attached as
/// evidence on every verdict.
class Verdict {
public:
  static Verdict realizable(std::vector<std::vector<Int>> kernel_basis,
                            long budget);
  static Verdict not_realizable(const TwistedGroup& g,
                                const OrientationHom& phi, Word witness,
                                std::vector<std::vector<Int>> kernel_basis,
                                long budget);
  static Verdict unknown(std::vector<std::vector<Int>> kernel_basis,
                         long budget);

  Realizability kind() const { return kind_; }
  const std::optional<Word>& witness() const { return witness_; }
  const std::vector<std::vector<Int>>& kernel_basis() const {
    return kernel_basis_;
  }
  long budget() const { return budget_; }

private:
  Verdict() = default;
  Realizability kind_ = Realizability::Unknown;
  std::optional<Word> witness_;
  std::vector<std::vector<Int>> kernel_basis_;
  long budget_ = 0;
};

/// The generator-level involution whose abelianization is exactly
/// A(k, r, s): k generator swaps, r fixed generators, s inverted ones.
FreeAutomorphism standard_involution(const CanonicalInvolution& shape);

/// Exhaustive search for a witness of non-realizability among reduced words
/// of length <= max_length, in length order then lexicographic on
/// (generator index, sign) with the positive letter first.
std::optional<Word> find_witness(const TwistedGroup& g,
                                 const OrientationHom& phi, int max_length);

/// General decider: realizable iff phi vanishes mod 2 on the kernel lattice
/// of rho(theta) + I. A negative answer is only emitted with a concrete
/// witness; if the search cap is exhausted first the verdict degrades to
/// Unknown with the kernel evidence attached.
Verdict realizable_general(const TwistedGroup& g, const OrientationHom& phi,
                           int witness_cap = 16);

/// Fast path requiring the abelianization of theta to be literally some
/// A(k, r, s): realizable iff phi vanishes on the -1 block. A violating
/// generator is emitted as witness only when theta inverts it at word
/// level; otherwise the general decider takes over.
Verdict realizable_canonical(const TwistedGroup& g, const OrientationHom& phi,
                             int witness_cap = 16);

/// Symbolic check of the explicit product action model: composition
/// identities on random elements, plus an exhaustive sweep for solutions of
/// the freeness system g * theta(g) = e, sgn(g) = -1 up to max_length.
struct ActionModelReport {
  long samples = 0;
  int max_length = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> axiom_failures;
  std::vector<Word> freeness_failures;

  bool passed() const {
    return axiom_failures.empty() && freeness_failures.empty();
  }
};

ActionModelReport verify_action_model(const TwistedGroup& g,
                                      const OrientationHom& phi, long samples,
                                      int max_length, std::uint64_t seed);

}  // namespace sphact

#endif
