#ifndef SPHACT_CLASSIFY_HPP_
#define SPHACT_CLASSIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sphact/realize.hpp"

namespace sphact {

/// The five orbit-space homotopy types; the dimension parameter 2n is
/// symbolic and carried only in rendering.
enum class Manifold { RP2n, S1xS2n, S1twistS2n, S1xRP2n, RPsharpRP };

std::string manifold_name(Manifold m);
std::optional<Manifold> manifold_from_name(const std::string& name);

enum class VCShape { Z2, Z, ZxZ2, ZsemiZ2 };

std::string vc_shape_name(VCShape s);
std::optional<VCShape> vc_shape_from_name(const std::string& name);

/// A virtually cyclic group together with orientation data: the value of
/// phi on the infinite generator (shapes containing Z) and on the torsion
/// generator (shapes containing the two-element group).
struct VCGroupSpec {
  VCShape shape;
  std::optional<int> phi_z;
  std::optional<int> phi_torsion;
};

struct VCOutcome {
  enum class Kind { OrbitSpace, NotRealizable, InvalidInput };
  Kind kind;
  Manifold orbit_space = Manifold::RP2n;  // meaningful when kind == OrbitSpace
  std::string reason;                     // meaningful otherwise
};

/// Total classification of virtually cyclic actions: returns the orbit
/// space homotopy type, or an explicit rejection. Realizable torsion cases
/// are cross-checked internally against the general decider on the
/// one-generator encodings.
VCOutcome classify_vc(const VCGroupSpec& spec);

enum class FiniteFamily { Cyclic, CyclicTimesZ2, Dihedral };

std::string finite_family_name(FiniteFamily f);

/// Isomorphism class of a finite quotient, normalized so each class has a
/// single spelling; the raw pre-normalization structure is kept for table
/// comparison.
struct FiniteGroupLabel {
  FiniteFamily family;
  long k;
  FiniteFamily raw_family;
  long raw_k;

  static FiniteGroupLabel normalized(FiniteFamily family, long k);

  bool same_class(const FiniteGroupLabel& o) const {
    return family == o.family && k == o.k;
  }
};

/// Which infinite ambient group a subgroup computation runs in.
enum class AmbientShape { Z, ZxZ2, Dinf };

/// Element (t, flip) of Z, Z + Z2 or the infinite dihedral group; the flip
/// inverts translations exactly in the dihedral case.
struct AmbientGroupElement {
  long long t;
  int flip;  // 0 or 1; always 0 in shape Z

  bool operator==(const AmbientGroupElement& o) const {
    return t == o.t && flip == o.flip;
  }
};

AmbientGroupElement ambient_multiply(AmbientShape shape,
                                     const AmbientGroupElement& a,
                                     const AmbientGroupElement& b);
AmbientGroupElement ambient_inverse(AmbientShape shape,
                                    const AmbientGroupElement& a);

/// Builds the finite quotient by coset enumeration and classifies it among
/// the three families. Throws if the subgroup does not have finite index
/// (within the given coset bound) or the quotient falls outside the
/// families, which cannot happen for these ambient groups.
FiniteGroupLabel identify_finite_quotient(
    AmbientShape shape, const std::vector<AmbientGroupElement>& generators,
    long coset_bound = 4096);

/// Quotient order alongside the label.
struct QuotientInfo {
  FiniteGroupLabel label;
  long order;
};
QuotientInfo analyze_finite_quotient(
    AmbientShape shape, const std::vector<AmbientGroupElement>& generators,
    long coset_bound = 4096);

struct CoverRow {
  FiniteGroupLabel group;
  Manifold base;
  long index;
};

/// All pairs (finite group G, base manifold M) such that G acts freely on
/// the given cover with orbit space M, found as normal finite-index
/// subgroups of the base fundamental groups whose isomorphism type and
/// restricted orientation match the cover. Sorted by (index, base, group).
/// Note: cyclic groups of order divisible by 4 never appear with base
/// S1xRP2n over the cover S1xS2n; the orientation restriction rules them
/// out, so only orders 2 mod 4 occur there.
std::vector<CoverRow> enumerate_covers(Manifold cover, long max_index = 48);

}  // namespace sphact

#endif
