#pragma once

// Weierstrass semigroups at infinity and at the second point Q, read off
// from the minimal nongaps modulo m.

#include <cstdint>
#include <string>
#include <vector>

#include "gk/basis.hpp"
#include "gk/curve.hpp"

namespace gk {

/// (a, b): pole order a at infinity, order b at Q. Vanishing orders are kept
/// nonnegative internally and only printed negated, as in "(6,-1)".
struct NongapPair {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const NongapPair&, const NongapPair&) = default;
};

std::string to_string(const NongapPair& p);

/// For a minimal nongap a with maximal vanishing order b in [0, m):
/// a' = i m - a and b' = i m - b with i = ceil(a / m).
NongapPair bijection(std::uint64_t a, std::uint64_t b_vanish, std::uint64_t m);

struct SemigroupDescription {
  std::uint64_t m = 0;
  std::vector<std::uint64_t> minimal_nongaps;  // sorted, one per class mod m
  std::vector<std::uint64_t> generators;       // minimal generating set
  std::uint64_t gaps = 0;
};

/// Builds the description from an Apery set with respect to m.
SemigroupDescription describe_semigroup(std::uint64_t m, std::vector<std::uint64_t> minimal_nongaps);

/// Minimal generating set of the semigroup generated by `elements`.
std::vector<std::uint64_t> minimal_generators(std::vector<std::uint64_t> elements);

/// Number of positive integers outside the semigroup generated by `generators`
/// (which must have gcd 1).
std::uint64_t count_gaps(const std::vector<std::uint64_t>& generators);

/// Throws std::logic_error if the gap count differs from the genus.
SemigroupDescription semigroup_at_Q(const BasisTable& table);
SemigroupDescription semigroup_at_infinity(const CurveParams& params);

struct PatternReport {
  std::uint32_t q = 0;
  std::vector<NongapPair> expected_pairs;
  std::vector<NongapPair> missing_pairs;
  std::vector<NongapPair> expected_dual_pairs;  // (a', b'), a' printed as vanishing
  std::vector<NongapPair> missing_dual_pairs;
  std::vector<std::uint64_t> expected_generators;
  std::vector<std::uint64_t> generators;
  bool ok = false;
};

/// The general-q patterns for nu = 3 on the gk model, checked against a table.
PatternReport check_patterns(const BasisTable& table);
/// Builds the gk table for (q, 3) at a rational point with z != 0 and checks it.
PatternReport verify_patterns(std::uint32_t q);

}  // namespace gk
