#include "sphact/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace sphact {

namespace {

[[noreturn]] void defect(const std::string& what) {
  throw std::logic_error("internal defect: " + what);
}

}  // namespace

std::string manifold_name(Manifold m) {
  switch (m) {
    case Manifold::RP2n: return "RP2n";
    case Manifold::S1xS2n: return "S1xS2n";
    case Manifold::S1twistS2n: return "S1twistS2n";
    case Manifold::S1xRP2n: return "S1xRP2n";
    case Manifold::RPsharpRP: return "RPsharpRP";
  }
  defect("manifold name");
}

std::optional<Manifold> manifold_from_name(const std::string& name) {
  for (Manifold m : {Manifold::RP2n, Manifold::S1xS2n, Manifold::S1twistS2n,
                     Manifold::S1xRP2n, Manifold::RPsharpRP})
    if (manifold_name(m) == name) return m;
  return std::nullopt;
}

std::string vc_shape_name(VCShape s) {
  switch (s) {
    case VCShape::Z2: return "Z2";
    case VCShape::Z: return "Z";
    case VCShape::ZxZ2: return "ZxZ2";
    case VCShape::ZsemiZ2: return "ZsemiZ2";
  }
  defect("shape name");
}

std::optional<VCShape> vc_shape_from_name(const std::string& name) {
  for (VCShape s : {VCShape::Z2, VCShape::Z, VCShape::ZxZ2, VCShape::ZsemiZ2})
    if (vc_shape_name(s) == name) return s;
  return std::nullopt;
}

std::string finite_family_name(FiniteFamily f) {
  switch (f) {
    case FiniteFamily::Cyclic: return "cyclic";
    case FiniteFamily::CyclicTimesZ2: return "cyclic_times_z2";
    case FiniteFamily::Dihedral: return "dihedral";
  }
  defect("family name");
}

FiniteGroupLabel FiniteGroupLabel::normalized(FiniteFamily family, long k) {
  FiniteGroupLabel l{family, k, family, k};
  if (family == FiniteFamily::CyclicTimesZ2 && k % 2 == 1) {
    l.family = FiniteFamily::Cyclic;
    l.k = 2 * k;
  } else if (family == FiniteFamily::Dihedral && k == 1) {
    l.family = FiniteFamily::Cyclic;
    l.k = 2;
  } else if (family == FiniteFamily::Dihedral && k == 2) {
    l.family = FiniteFamily::CyclicTimesZ2;
    l.k = 2;
  }
  return l;
}

namespace {

// One-generator encodings used for the internal cross-check of the table.
Verdict torsion_encoding_verdict(VCShape shape, int phi_z) {
  switch (shape) {
    case VCShape::Z2: {
      TwistedGroup g{FreeAutomorphism::identity(0)};
      return realizable_general(g, OrientationHom(std::vector<int>{}));
    }
    case VCShape::ZxZ2: {
      TwistedGroup g{FreeAutomorphism::identity(1)};
      return realizable_general(g, OrientationHom({phi_z}));
    }
    case VCShape::ZsemiZ2: {
      TwistedGroup g{FreeAutomorphism(1, {Word::generator(1, 1, -1)})};
      return realizable_general(g, OrientationHom({phi_z}));
    }
    default: defect("no torsion encoding for this shape");
  }
}

void cross_check(VCShape shape, int phi_z, bool expect_realizable) {
  Verdict v = torsion_encoding_verdict(shape, phi_z);
  bool got = v.kind() == Realizability::Realizable;
  if (v.kind() == Realizability::Unknown || got != expect_realizable)
    defect("classify_vc disagrees with the general decider");
}

}  // namespace

VCOutcome classify_vc(const VCGroupSpec& spec) {
  auto need = [](const std::optional<int>& v, const char* what) -> int {
    if (!v) throw std::invalid_argument(std::string("missing ") + what);
    if (*v != 0 && *v != 1)
      throw std::invalid_argument(std::string(what) + " must be a bit");
    return *v;
  };
  switch (spec.shape) {
    case VCShape::Z2: {
      int t = need(spec.phi_torsion, "phi_torsion");
      if (t == 1) {
        cross_check(VCShape::Z2, 0, true);
        return {VCOutcome::Kind::OrbitSpace, Manifold::RP2n, ""};
      }
      return {VCOutcome::Kind::NotRealizable, Manifold::RP2n,
              "a finite group of order two must act non-trivially on the top "
              "cohomology"};
    }
    case VCShape::Z: {
      int z = need(spec.phi_z, "phi_z");
      return {VCOutcome::Kind::OrbitSpace,
              z ? Manifold::S1twistS2n : Manifold::S1xS2n, ""};
    }
    case VCShape::ZxZ2: {
      int t = need(spec.phi_torsion, "phi_torsion");
      if (t == 0)
        return {VCOutcome::Kind::NotRealizable, Manifold::RP2n,
                "the torsion generator must act non-trivially on the top "
                "cohomology"};
      int z = need(spec.phi_z, "phi_z");
      // Both translation values give the same orbit space; the two pairs
      // differ by the automorphism (1,0) -> (1,1).
      cross_check(VCShape::ZxZ2, z, true);
      return {VCOutcome::Kind::OrbitSpace, Manifold::S1xRP2n, ""};
    }
    case VCShape::ZsemiZ2: {
      int t = need(spec.phi_torsion, "phi_torsion");
      if (t == 0)
        return {VCOutcome::Kind::NotRealizable, Manifold::RP2n,
                "the torsion generator must act non-trivially on the top "
                "cohomology"};
      int z = need(spec.phi_z, "phi_z");
      cross_check(VCShape::ZsemiZ2, z, z == 0);
      if (z == 0)
        return {VCOutcome::Kind::OrbitSpace, Manifold::RPsharpRP, ""};
      return {VCOutcome::Kind::NotRealizable, Manifold::RP2n,
              "the translation generator is inverted and oriented "
              "non-trivially: it is itself a witness"};
    }
  }
  return {VCOutcome::Kind::InvalidInput, Manifold::RP2n, "unknown shape"};
}

AmbientGroupElement ambient_multiply(AmbientShape shape,
                                     const AmbientGroupElement& a,
                                     const AmbientGroupElement& b) {
  if (shape == AmbientShape::Z && (a.flip || b.flip))
    throw std::invalid_argument("shape Z has no flip");
  long long sigma = (shape == AmbientShape::Dinf && a.flip) ? -1 : 1;
  return {a.t + sigma * b.t, a.flip ^ b.flip};
}

AmbientGroupElement ambient_inverse(AmbientShape shape,
                                    const AmbientGroupElement& a) {
  if (a.flip == 0) return {-a.t, 0};
  if (shape == AmbientShape::Dinf) return a;  // flips are involutions
  return {-a.t, 1};
}

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

// Closed description of a subgroup of Z, Z + Z2 or D_inf: translations are
// d * Z, flip elements (if any) sit at b0 + d * Z.
struct SubgroupArith {
  AmbientShape shape;
  long long d = 0;
  bool has_flip = false;
  long long b0 = 0;

  bool contains(const AmbientGroupElement& e) const {
    if (e.flip == 0) return d == 0 ? e.t == 0 : e.t % d == 0;
    if (!has_flip) return false;
    return d == 0 ? e.t == b0 : (e.t - b0) % d == 0;
  }
};

SubgroupArith subgroup_arith(AmbientShape shape,
                             const std::vector<AmbientGroupElement>& gens) {
  SubgroupArith sub;
  sub.shape = shape;
  std::vector<long long> flips;
  for (const auto& g : gens) {
    if (g.flip == 0) {
      sub.d = gcd_ll(sub.d, std::abs(g.t));
    } else {
      if (shape == AmbientShape::Z)
        throw std::invalid_argument("shape Z has no flip generators");
      flips.push_back(g.t);
    }
  }
  if (!flips.empty()) {
    sub.has_flip = true;
    sub.b0 = flips[0];
    for (long long a : flips)
      for (long long b : flips) {
        // product of two flip-type generators is a translation
        sub.d = gcd_ll(sub.d, std::abs(a - b));
        if (shape == AmbientShape::ZxZ2) sub.d = gcd_ll(sub.d, std::abs(a + b));
      }
    if (sub.d != 0) sub.b0 = ((sub.b0 % sub.d) + sub.d) % sub.d;
  }
  return sub;
}

std::vector<AmbientGroupElement> ambient_generators(AmbientShape shape) {
  if (shape == AmbientShape::Z) return {{1, 0}, {-1, 0}};
  return {{1, 0}, {-1, 0}, {0, 1}};
}

bool is_normal_subgroup(AmbientShape shape, const SubgroupArith& sub,
                        const std::vector<AmbientGroupElement>& gens) {
  for (const auto& g : gens)
    for (const auto& a : ambient_generators(shape)) {
      AmbientGroupElement conj = ambient_multiply(
          shape, ambient_multiply(shape, a, g), ambient_inverse(shape, a));
      if (!sub.contains(conj)) return false;
    }
  return true;
}

struct QuotientTable {
  long order;
  std::vector<std::vector<int>> table;  // coset composition
};

QuotientTable coset_table(AmbientShape shape, const SubgroupArith& sub,
                          long coset_bound) {
  std::vector<AmbientGroupElement> reps{{0, 0}};
  auto find_coset = [&](const AmbientGroupElement& e) -> int {
    for (size_t i = 0; i < reps.size(); ++i) {
      AmbientGroupElement diff =
          ambient_multiply(shape, e, ambient_inverse(shape, reps[i]));
      if (sub.contains(diff)) return static_cast<int>(i);
    }
    return -1;
  };
  std::vector<AmbientGroupElement> gens = ambient_generators(shape);
  for (size_t i = 0; i < reps.size(); ++i) {
    for (const auto& g : gens) {
      AmbientGroupElement next = ambient_multiply(shape, reps[i], g);
      if (find_coset(next) < 0) {
        reps.push_back(next);
        if (static_cast<long>(reps.size()) > coset_bound)
          throw std::invalid_argument(
              "subgroup does not have finite index within the coset bound");
      }
    }
  }
  QuotientTable q;
  q.order = static_cast<long>(reps.size());
  q.table.assign(q.order, std::vector<int>(q.order, 0));
  for (long i = 0; i < q.order; ++i)
    for (long j = 0; j < q.order; ++j) {
      int c = find_coset(ambient_multiply(shape, reps[i], reps[j]));
      if (c < 0) defect("coset table closure");
      q.table[i][j] = c;
    }
  return q;
}

FiniteGroupLabel classify_table(const QuotientTable& q) {
  const long n = q.order;
  bool abelian = true;
  for (long i = 0; i < n && abelian; ++i)
    for (long j = 0; j < n; ++j)
      if (q.table[i][j] != q.table[j][i]) { abelian = false; break; }

  std::vector<long> order_of(n, 0);
  long max_order = 0, involutions = 0;
  for (long i = 0; i < n; ++i) {
    int x = static_cast<int>(i);
    long o = 1;
    while (x != 0) {
      x = q.table[x][i];
      ++o;
      if (o > n) defect("element order exceeds group order");
    }
    order_of[i] = o;
    max_order = std::max(max_order, o);
    if (o == 2) ++involutions;
  }

  if (abelian && max_order == n)
    return FiniteGroupLabel::normalized(FiniteFamily::Cyclic, n);
  if (abelian && 2 * max_order == n) {
    if (involutions != 3) defect("abelian quotient is not cyclic times Z2");
    return FiniteGroupLabel::normalized(FiniteFamily::CyclicTimesZ2, n / 2);
  }
  if (!abelian && n % 2 == 0) {
    long m = n / 2;
    long expect = m + (m % 2 == 0 ? 1 : 0);
    bool has_rotation = false;
    for (long i = 0; i < n; ++i)
      if (order_of[i] == m) has_rotation = true;
    if (!has_rotation || involutions != expect)
      defect("non-abelian quotient is not dihedral");
    return FiniteGroupLabel::normalized(FiniteFamily::Dihedral, m);
  }
  defect("quotient outside the three families");
}

}  // namespace

QuotientInfo analyze_finite_quotient(
    AmbientShape shape, const std::vector<AmbientGroupElement>& generators,
    long coset_bound) {
  SubgroupArith sub = subgroup_arith(shape, generators);
  if (!is_normal_subgroup(shape, sub, generators))
    throw std::invalid_argument("subgroup is not normal");
  QuotientTable q = coset_table(shape, sub, coset_bound);
  return {classify_table(q), q.order};
}

FiniteGroupLabel identify_finite_quotient(
    AmbientShape shape, const std::vector<AmbientGroupElement>& generators,
    long coset_bound) {
  return analyze_finite_quotient(shape, generators, coset_bound).label;
}

namespace {

struct BaseManifold {
  Manifold manifold;
  AmbientShape shape;
  int phi_t;     // orientation of the translation generator
  int phi_flip;  // orientation of the torsion / flip generator
};

// The four base manifolds with infinite fundamental group, each with its
// unique realizable orientation.
const BaseManifold kBases[] = {
    {Manifold::S1xS2n, AmbientShape::Z, 0, 0},
    {Manifold::S1twistS2n, AmbientShape::Z, 1, 0},
    {Manifold::S1xRP2n, AmbientShape::ZxZ2, 0, 1},
    {Manifold::RPsharpRP, AmbientShape::Dinf, 0, 1},
};

// Isomorphism type of a subgroup together with its restricted orientation.
struct SubgroupProfile {
  AmbientShape type;
  int phi_gen;      // phi of the infinite generator
  int phi_torsion;  // phi of the torsion part, when present
};

std::optional<SubgroupProfile> subgroup_profile(const BaseManifold& base,
                                                const SubgroupArith& sub) {
  if (sub.d == 0 && !sub.has_flip) return std::nullopt;  // trivial
  auto phi_of = [&](long long t, int flip) {
    return static_cast<int>(((t % 2 + 2) % 2) * base.phi_t + flip * base.phi_flip) %
           2;
  };
  if (!sub.has_flip) {
    if (sub.d == 0) return std::nullopt;
    return SubgroupProfile{AmbientShape::Z, phi_of(sub.d, 0), 0};
  }
  if (base.shape == AmbientShape::ZxZ2) {
    if (sub.d == 0) return std::nullopt;  // finite subgroup, infinite index
    if (sub.b0 % sub.d == 0)
      return SubgroupProfile{AmbientShape::ZxZ2, phi_of(sub.d, 0),
                             phi_of(0, 1)};
    // torsion-free with flips: infinite cyclic on (b0, 1)
    return SubgroupProfile{AmbientShape::Z, phi_of(sub.b0, 1), 0};
  }
  if (base.shape == AmbientShape::Dinf) {
    if (sub.d == 0) return std::nullopt;  // order-two subgroup
    return SubgroupProfile{AmbientShape::Dinf, phi_of(sub.d, 0),
                           phi_of(sub.b0, 1)};
  }
  return std::nullopt;
}

bool profile_matches_cover(const SubgroupProfile& p, Manifold cover) {
  switch (cover) {
    case Manifold::S1xS2n:
      return p.type == AmbientShape::Z && p.phi_gen == 0;
    case Manifold::S1twistS2n:
      return p.type == AmbientShape::Z && p.phi_gen == 1;
    case Manifold::S1xRP2n:
      return p.type == AmbientShape::ZxZ2 && p.phi_torsion == 1;
    case Manifold::RPsharpRP:
      return p.type == AmbientShape::Dinf && p.phi_gen == 0 &&
             p.phi_torsion == 1;
    default:
      return false;
  }
}

// Index of the subgroup in its ambient group, from the closed description.
long subgroup_index(AmbientShape shape, const SubgroupArith& sub) {
  if (sub.d == 0) return 0;  // infinite index (or trivial)
  long d = static_cast<long>(sub.d);
  switch (shape) {
    case AmbientShape::Z: return d;
    case AmbientShape::ZxZ2: return sub.has_flip ? d : 2 * d;
    case AmbientShape::Dinf: return sub.has_flip ? d : 2 * d;
  }
  return 0;
}

std::vector<std::vector<AmbientGroupElement>> subgroup_candidates(
    AmbientShape shape, long max_index) {
  std::vector<std::vector<AmbientGroupElement>> out;
  switch (shape) {
    case AmbientShape::Z:
      for (long long m = 2; m <= max_index; ++m) out.push_back({{m, 0}});
      break;
    case AmbientShape::ZxZ2:
      for (long long m = 1; 2 * m <= max_index; ++m) {
        out.push_back({{m, 0}});
        out.push_back({{m, 1}});
      }
      for (long long m = 2; m <= max_index; ++m) {
        out.push_back({{m, 0}, {0, 1}});
        for (long long j = 1; j < m; ++j) out.push_back({{m, 0}, {j, 1}});
      }
      break;
    case AmbientShape::Dinf:
      for (long long m = 1; 2 * m <= max_index; ++m) out.push_back({{m, 0}});
      for (long long m = 2; m <= max_index; ++m)
        for (long long j = 0; j < m; ++j) out.push_back({{m, 0}, {j, 1}});
      break;
  }
  return out;
}

}  // namespace

std::vector<CoverRow> enumerate_covers(Manifold cover, long max_index) {
  if (cover == Manifold::RP2n)
    throw std::invalid_argument(
        "covers with finite fundamental group are excluded");
  if (max_index < 1) throw std::invalid_argument("max_index must be positive");

  std::vector<CoverRow> rows;
  std::set<std::tuple<int, long, int, long>> seen;  // base, index, family, k
  for (const BaseManifold& base : kBases) {
    for (const auto& gens : subgroup_candidates(base.shape, max_index)) {
      SubgroupArith sub = subgroup_arith(base.shape, gens);
      long index = subgroup_index(base.shape, sub);
      if (index < 2 || index > max_index) continue;
      // Normality is decided computationally, never assumed.
      if (!is_normal_subgroup(base.shape, sub, gens)) continue;
      auto profile = subgroup_profile(base, sub);
      if (!profile || !profile_matches_cover(*profile, cover)) continue;
      QuotientInfo q = analyze_finite_quotient(base.shape, gens,
                                               std::max(max_index * 2, 16L));
      if (q.order != index) defect("quotient order disagrees with index");
      auto key = std::make_tuple(static_cast<int>(base.manifold), q.order,
                                 static_cast<int>(q.label.family), q.label.k);
      if (!seen.insert(key).second) continue;
      rows.push_back({q.label, base.manifold, q.order});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const CoverRow& a, const CoverRow& b) {
    auto key = [](const CoverRow& r) {
      return std::make_tuple(r.index, static_cast<int>(r.base),
                             static_cast<int>(r.group.family), r.group.k);
    };
    return key(a) < key(b);
  });
  return rows;
}

}  // namespace sphact
