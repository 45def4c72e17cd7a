#pragma once

// Reference computations for tests. None of these reuse the library's
// elimination, enumeration or filters; they are deliberately naive.

#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <vector>

#include "pya/core.hpp"

namespace pyatest {

using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by textbook elimination over Q.
int rational_rank(RationalMatrix m);

struct ExplicitRanks {
  pya::HalfInt e_min;
  pya::HalfInt e_max;
  std::vector<std::vector<long>> entries;  // l x l, 0-based
};

/// Builds the base point f of a single-line multi-segment as an explicit
/// rational matrix and computes every composition rank f^k : W_s -> W_{s+k}.
ExplicitRanks explicit_rank_matrix(const pya::MultiSegment& m);

/// All multi-segments on one class line with the given exponent multiset,
/// by choosing a multiplicity for every admissible segment in turn.
std::set<pya::MultiSegment> brute_force_line(const pya::InfinitesimalParameter& support);

/// Contragredient-closed with every self-centered segment of even
/// multiplicity, checked by direct counting.
bool closed_under_dual(const pya::MultiSegment& m);
bool self_centered_even(const pya::MultiSegment& m);

}  // namespace pyatest
