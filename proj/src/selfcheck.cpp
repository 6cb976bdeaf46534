#include "sphact/selfcheck.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <tuple>

#include "sphact/realize.hpp"

namespace sphact {

namespace {

constexpr std::uint64_t kSuiteSeed = 0x5eedc0de2024ull;

struct Fixture {
  CanonicalInvolution shape;
  OrientationHom phi;
  bool expect_realizable;
};

// Every rank m <= 3, every block shape with 2k+r+s = m, the generator-level
// involution realizing it, and every compatible orientation vector.
std::vector<Fixture> canonical_fixtures() {
  std::vector<Fixture> out;
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; 2 * k <= m; ++k)
      for (int r = 0; 2 * k + r <= m; ++r) {
        CanonicalInvolution shape{k, r, m - 2 * k - r};
        TwistedGroup g{standard_involution(shape)};
        for (int bits = 0; bits < (1 << m); ++bits) {
          std::vector<int> v(m);
          for (int i = 0; i < m; ++i) v[i] = (bits >> i) & 1;
          OrientationHom phi(v);
          if (!validate_orientation(g, phi)) continue;
          bool realizable = true;
          for (int l = 2 * shape.k + shape.r + 1; l <= m; ++l)
            if (phi.value(l)) realizable = false;
          out.push_back({shape, phi, realizable});
        }
      }
  return out;
}

CriterionResult criterion_agreement() {
  CriterionResult res{1, "three-way decider agreement on canonical shapes",
                      true, ""};
  long cases = 0;
  for (const Fixture& f : canonical_fixtures()) {
    TwistedGroup g{standard_involution(f.shape)};
    Verdict canonical = realizable_canonical(g, f.phi);
    Verdict general = realizable_general(g, f.phi);
    auto witness = find_witness(g, f.phi, 4);
    bool ok =
        canonical.kind() == general.kind() &&
        general.kind() != Realizability::Unknown &&
        (general.kind() == Realizability::NotRealizable) ==
            witness.has_value() &&
        (general.kind() == Realizability::Realizable) == f.expect_realizable;
    ++cases;
    if (!ok) {
      res.passed = false;
      res.detail = "disagreement at shape (" + std::to_string(f.shape.k) +
                   "," + std::to_string(f.shape.r) + "," +
                   std::to_string(f.shape.s) + ")";
      return res;
    }
  }
  res.detail = std::to_string(cases) + " orientation cases";
  return res;
}

CriterionResult criterion_canonical_roundtrip() {
  CriterionResult res{2, "canonical form round-trip on random conjugates",
                      true, ""};
  std::mt19937_64 rng(kSuiteSeed);
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    int m = 1 + static_cast<int>(rng() % 6);
    int k = static_cast<int>(rng() % (m / 2 + 1));
    int r = static_cast<int>(rng() % (m - 2 * k + 1));
    CanonicalInvolution shape{k, r, m - 2 * k - r};
    IntMatrix a = shape.matrix();

    IntMatrix q = IntMatrix::identity(m);
    IntMatrix q_inv = IntMatrix::identity(m);
    int ops = static_cast<int>(rng() % 13);
    for (int o = 0; o < ops && m >= 2; ++o) {
      int i = static_cast<int>(rng() % m);
      int j = static_cast<int>(rng() % m);
      if (i == j) continue;
      static const int coeffs[4] = {-2, -1, 1, 2};
      Int c = coeffs[rng() % 4];
      q.add_col(i, j, c);       // right-multiply by I + c*E_ij
      q_inv.add_row(j, i, -c);  // left-multiply by the inverse
    }
    IntMatrix conj = q * a * q_inv;

    CanonicalInvolution inv = involution_invariants(conj);
    Canonicalization canon = canonicalize_involution(conj);
    bool ok = inv == shape && canon.invariants == shape &&
              unimodular_inverse(canon.conjugator) * conj * canon.conjugator ==
                  a;
    if (!ok) {
      res.passed = false;
      res.detail = "failed at trial " + std::to_string(t);
      return res;
    }
  }
  res.detail = std::to_string(trials) + "/" + std::to_string(trials) +
               " conjugates recovered and verified";
  return res;
}

CriterionResult criterion_vc_table() {
  CriterionResult res{3, "virtually cyclic classification table", true, ""};
  struct Row {
    VCGroupSpec spec;
    bool realizable;
    Manifold label;
  };
  const std::vector<Row> rows = {
      {{VCShape::Z2, std::nullopt, 0}, false, Manifold::RP2n},
      {{VCShape::Z2, std::nullopt, 1}, true, Manifold::RP2n},
      {{VCShape::Z, 0, std::nullopt}, true, Manifold::S1xS2n},
      {{VCShape::Z, 1, std::nullopt}, true, Manifold::S1twistS2n},
      {{VCShape::ZxZ2, 0, 0}, false, Manifold::RP2n},
      {{VCShape::ZxZ2, 0, 1}, true, Manifold::S1xRP2n},
      {{VCShape::ZxZ2, 1, 1}, true, Manifold::S1xRP2n},
      {{VCShape::ZsemiZ2, 0, 0}, false, Manifold::RP2n},
      {{VCShape::ZsemiZ2, 0, 1}, true, Manifold::RPsharpRP},
      {{VCShape::ZsemiZ2, 1, 1}, false, Manifold::RP2n},
  };
  for (size_t i = 0; i < rows.size(); ++i) {
    VCOutcome out = classify_vc(rows[i].spec);
    bool ok = rows[i].realizable
                  ? (out.kind == VCOutcome::Kind::OrbitSpace &&
                     out.orbit_space == rows[i].label)
                  : out.kind == VCOutcome::Kind::NotRealizable;
    if (!ok) {
      res.passed = false;
      res.detail = "row " + std::to_string(i) + " mismatch";
      return res;
    }
  }
  res.detail = "10/10 shape-orientation rows";
  return res;
}

using RowKey = std::tuple<long, int, int, long>;

RowKey row_key(const CoverRow& r) {
  return {r.index, static_cast<int>(r.base), static_cast<int>(r.group.family),
          r.group.k};
}

CriterionResult criterion_cover_table() {
  CriterionResult res{4, "covering action table at index bound 48", true, ""};
  long total = 0;
  for (Manifold cover : {Manifold::S1xS2n, Manifold::S1twistS2n,
                         Manifold::S1xRP2n, Manifold::RPsharpRP}) {
    std::vector<RowKey> got, want;
    for (const CoverRow& r : enumerate_covers(cover, 48))
      got.push_back(row_key(r));
    for (const CoverRow& r : expected_cover_rows(cover, 48))
      want.push_back(row_key(r));
    std::sort(want.begin(), want.end());
    std::vector<RowKey> sorted_got = got;
    std::sort(sorted_got.begin(), sorted_got.end());
    if (sorted_got != want) {
      res.passed = false;
      res.detail = "cover " + manifold_name(cover) + ": " +
                   std::to_string(got.size()) + " rows, expected " +
                   std::to_string(want.size());
      return res;
    }
    // No cyclic group of order divisible by 4 acts on this cover with
    // orbit space S1xRP2n.
    if (cover == Manifold::S1xS2n) {
      for (const CoverRow& r : enumerate_covers(cover, 48))
        if (r.base == Manifold::S1xRP2n &&
            r.group.family == FiniteFamily::Cyclic && r.group.k % 4 == 0) {
          res.passed = false;
          res.detail = "forbidden cyclic order " + std::to_string(r.group.k);
          return res;
        }
    }
    total += static_cast<long>(got.size());
  }
  res.detail = std::to_string(total) + " rows across the four covers";
  return res;
}

CriterionResult criterion_free_product() {
  CriterionResult res{5, "free product constructor sweep", true, ""};
  std::vector<CanonicalInvolution> shapes = {
      {0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0},
      {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  std::vector<std::vector<int>> lists;
  const int n = static_cast<int>(shapes.size());
  for (int a = 0; a < n; ++a) {
    lists.push_back({a});
    for (int b = 0; b < n; ++b) {
      lists.push_back({a, b});
      for (int c = 0; c < n; ++c) lists.push_back({a, b, c});
    }
  }
  long cases = 0;
  for (const auto& list : lists) {
    std::vector<TwistedGroup> factors;
    int rank_sum = 0;
    for (int idx : list) {
      factors.emplace_back(standard_involution(shapes[idx]));
      rank_sum += shapes[idx].dimension();
    }
    FreeProductResult result = free_product_with_z2(factors);
    int expected_rank = rank_sum + static_cast<int>(list.size()) - 1;
    bool ok = result.group.rank() == expected_rank &&
              is_involution(result.group.theta());

    // Abelianized theta: one block per factor, then -1 per new letter.
    IntMatrix m = abelianization_matrix(result.group.theta());
    IntMatrix want(expected_rank, expected_rank);
    int off = 0;
    for (int idx : list) {
      IntMatrix block = shapes[idx].matrix();
      for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j)
          want.at(off + i, off + j) = block.at(i, j);
      off += block.rows();
    }
    for (; off < expected_rank; ++off) want.at(off, off) = -1;
    ok = ok && m == want;

    ++cases;
    if (!ok) {
      res.passed = false;
      res.detail = "failed on a list of " + std::to_string(list.size()) +
                   " factors";
      return res;
    }
  }
  res.detail = std::to_string(cases) + " factor lists";
  return res;
}

CriterionResult criterion_action_model() {
  CriterionResult res{6, "action model verification on every fixture", true,
                      ""};
  long cases = 0;
  for (const Fixture& f : canonical_fixtures()) {
    TwistedGroup g{standard_involution(f.shape)};
    ActionModelReport report = verify_action_model(g, f.phi, 1000, 4,
                                                   kSuiteSeed);
    bool ok = report.axiom_failures.empty() &&
              (f.expect_realizable ? report.freeness_failures.empty()
                                   : !report.freeness_failures.empty());
    ++cases;
    if (!ok) {
      res.passed = false;
      res.detail = "report mismatch at shape (" + std::to_string(f.shape.k) +
                   "," + std::to_string(f.shape.r) + "," +
                   std::to_string(f.shape.s) + ")";
      return res;
    }
  }
  res.detail = std::to_string(cases) + " fixtures at 1000 samples each";
  return res;
}

void print_results(std::ostream& out,
                   const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results)
    out << (r.passed ? "[PASS]" : "[FAIL]") << " criterion " << r.number
        << ": " << r.name << " (" << r.detail << ")\n";
}

}  // namespace

std::vector<CoverRow> expected_cover_rows(Manifold cover, long max_index) {
  std::vector<CoverRow> rows;
  auto add = [&](FiniteFamily family, long k, Manifold base, long index) {
    if (index >= 2 && index <= max_index)
      rows.push_back({FiniteGroupLabel::normalized(family, k), base, index});
  };
  switch (cover) {
    case Manifold::S1xS2n:
      for (long m = 2; m <= max_index; ++m)
        add(FiniteFamily::Cyclic, m, Manifold::S1xS2n, m);
      for (long m = 2; m <= max_index; m += 2)
        add(FiniteFamily::Cyclic, m, Manifold::S1twistS2n, m);
      for (long m = 1; 2 * m <= max_index; ++m) {
        if (m % 2 == 1)
          add(FiniteFamily::Cyclic, 2 * m, Manifold::S1xRP2n, 2 * m);
        else
          add(FiniteFamily::CyclicTimesZ2, m, Manifold::S1xRP2n, 2 * m);
      }
      for (long m = 1; 2 * m <= max_index; ++m)
        add(FiniteFamily::Dihedral, m, Manifold::RPsharpRP, 2 * m);
      break;
    case Manifold::S1twistS2n:
      for (long m = 3; m <= max_index; m += 2)
        add(FiniteFamily::Cyclic, m, Manifold::S1twistS2n, m);
      for (long m = 1; 2 * m <= max_index; ++m)
        add(FiniteFamily::Cyclic, 2 * m, Manifold::S1xRP2n, 2 * m);
      break;
    case Manifold::S1xRP2n:
      for (long m = 2; m <= max_index; ++m)
        add(FiniteFamily::Cyclic, m, Manifold::S1xRP2n, m);
      break;
    case Manifold::RPsharpRP:
      add(FiniteFamily::Cyclic, 2, Manifold::RPsharpRP, 2);
      break;
    case Manifold::RP2n:
      break;
  }
  std::sort(rows.begin(), rows.end(), [](const CoverRow& a, const CoverRow& b) {
    return row_key(a) < row_key(b);
  });
  return rows;
}

std::vector<CriterionResult> run_acceptance_criteria() {
  std::vector<CriterionResult> results;
  results.push_back(criterion_agreement());
  results.push_back(criterion_canonical_roundtrip());
  results.push_back(criterion_vc_table());
  results.push_back(criterion_cover_table());
  results.push_back(criterion_free_product());
  results.push_back(criterion_action_model());
  return results;
}

bool run_selfcheck(std::ostream& out) {
  std::ostringstream first, second;
  std::vector<CriterionResult> results = run_acceptance_criteria();
  print_results(first, results);
  print_results(second, run_acceptance_criteria());

  bool deterministic = first.str() == second.str();
  results.push_back({7, "byte-identical log across two runs", deterministic,
                     deterministic ? "double run compared" : "logs differ"});

  out << first.str();
  print_results(out, {results.back()});
  bool all = true;
  for (const CriterionResult& r : results) all = all && r.passed;
  out << "selfcheck: " << (all ? "all criteria passed" : "FAILURES above")
      << "\n";
  return all;
}

}  // namespace sphact
