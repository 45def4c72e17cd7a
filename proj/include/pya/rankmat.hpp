#pragma once

// Rank matrices of single-class lines and the closure-order criterion.

#include <Eigen/Core>
#include <map>

#include "pya/core.hpp"

namespace pya {

using RankEntries = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;

/// Upper-triangular l x l matrix of composition ranks on the exponent
/// window [e_min, e_max], l = e_max - e_min. Entry (i, j), 1-based, is the
/// rank of the composite map from exponent e_max - j up to e_max - i + 1.
/// Storage is 0-based: entries(i - 1, j - 1).
struct RankMatrix {
  HalfInt e_min;
  HalfInt e_max;
  RankEntries entries;

  static RankMatrix zero(HalfInt e_min, HalfInt e_max);

  Eigen::Index size() const { return entries.rows(); }
  /// 1-based accessor matching the usual (i, j) indexing.
  long at(Eigen::Index i, Eigen::Index j) const { return entries(i - 1, j - 1); }

  std::string to_string() const;

  friend bool operator==(const RankMatrix& a, const RankMatrix& b) {
    return a.e_min == b.e_min && a.e_max == b.e_max && a.entries == b.entries;
  }
};

/// Rank matrix of a nonempty multi-segment supported on one class line,
/// anchored at its own exponent window.
RankMatrix rank_matrix(const MultiSegment& m);

/// Same, anchored on a window containing the support of m (m may be empty).
RankMatrix rank_matrix(const MultiSegment& m, HalfInt e_min, HalfInt e_max);

/// Re-anchor onto a larger window; composition ranks through exponents
/// outside the original window are zero.
RankMatrix pad(const RankMatrix& r, HalfInt e_min, HalfInt e_max);

bool rm_leq(const RankMatrix& r1, const RankMatrix& r2);
RankMatrix rm_add(const RankMatrix& r1, const RankMatrix& r2);

/// Entrywise monotonicity of composition ranks.
bool is_monotone(const RankMatrix& r);

using RankMap = std::map<LineKey, RankMatrix, LineKeyOrder>;

/// One rank matrix per single-class line of m.
RankMap rank_matrices(const MultiSegment& m);

/// p1 <=_C p2 (orbit of p1 inside the closure of the orbit of p2).
/// DomainError when the groups or infinitesimal parameters differ.
bool closure_leq(const LParameter& p1, const LParameter& p2);

/// Entrywise comparison of two rank maps over the same lines.
bool rank_maps_leq(const RankMap& a, const RankMap& b);

}  // namespace pya
