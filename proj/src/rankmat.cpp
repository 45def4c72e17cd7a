#include "pya/rankmat.hpp"

#include <algorithm>
#include <sstream>

#include "pya/errors.hpp"

namespace pya {

namespace {

void require_same_anchors(const RankMatrix& r1, const RankMatrix& r2) {
  if (r1.e_min != r2.e_min || r1.e_max != r2.e_max) {
    throw DomainError("rank matrix anchors differ: (" + r1.e_min.to_string() + "," + r1.e_max.to_string() +
                      ") vs (" + r2.e_min.to_string() + "," + r2.e_max.to_string() + ")");
  }
}

void require_single_class_line(const MultiSegment& m) {
  if (m.empty()) return;
  const LineKey key = class_line_key(m.begin()->first);
  for (const auto& [s, k] : m) {
    if (!(class_line_key(s) == key)) {
      throw DomainError("rank matrix needs a single-class line, got " + m.to_string());
    }
  }
}

}  // namespace

RankMatrix RankMatrix::zero(HalfInt e_min, HalfInt e_max) {
  const auto l = integer_distance(e_max, e_min);
  if (l < 0) throw DomainError("empty exponent window");
  return {e_min, e_max, RankEntries::Zero(l, l)};
}

std::string RankMatrix::to_string() const {
  std::ostringstream os;
  os << "(" << e_min.to_string() << "," << e_max.to_string() << ")[";
  for (Eigen::Index i = 0; i < size(); ++i) {
    os << (i ? ",[" : "[");
    for (Eigen::Index j = 0; j < size(); ++j) os << (j ? "," : "") << entries(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

RankMatrix rank_matrix(const MultiSegment& m) {
  if (m.empty()) throw DomainError("rank matrix of an empty multi-segment");
  HalfInt lo = m.begin()->first.b;
  HalfInt hi = m.begin()->first.e;
  for (const auto& [s, k] : m) {
    lo = std::min(lo, s.b);
    hi = std::max(hi, s.e);
  }
  return rank_matrix(m, lo, hi);
}

RankMatrix rank_matrix(const MultiSegment& m, HalfInt e_min, HalfInt e_max) {
  require_single_class_line(m);
  RankMatrix r = RankMatrix::zero(e_min, e_max);
  for (const auto& [s, k] : m) {
    if (s.b < e_min || s.e > e_max) throw DomainError(s.to_string() + " lies outside the anchor window");
    integer_distance(s.b, e_min);
    // Segment [b, e] contributes to (i, j) iff e_max - e + 1 <= i <= j <= e_max - b.
    const auto lo = integer_distance(e_max, s.e) + 1;
    const auto hi = integer_distance(e_max, s.b);
    for (auto i = lo; i <= hi; ++i) {
      for (auto j = i; j <= hi; ++j) r.entries(i - 1, j - 1) += k;
    }
  }
  return r;
}

RankMatrix pad(const RankMatrix& r, HalfInt e_min, HalfInt e_max) {
  if (e_min > r.e_min || e_max < r.e_max) throw DomainError("padding window must contain the original window");
  RankMatrix out = RankMatrix::zero(e_min, e_max);
  const auto shift = integer_distance(e_max, r.e_max);
  integer_distance(e_min, r.e_min);
  out.entries.block(shift, shift, r.size(), r.size()) = r.entries;
  return out;
}

bool rm_leq(const RankMatrix& r1, const RankMatrix& r2) {
  require_same_anchors(r1, r2);
  return (r1.entries.array() <= r2.entries.array()).all();
}

RankMatrix rm_add(const RankMatrix& r1, const RankMatrix& r2) {
  require_same_anchors(r1, r2);
  return {r1.e_min, r1.e_max, r1.entries + r2.entries};
}

bool is_monotone(const RankMatrix& r) {
  const auto l = r.size();
  for (Eigen::Index i = 0; i < l; ++i) {
    for (Eigen::Index j = 0; j < l; ++j) {
      const long v = r.entries(i, j);
      if (v < 0) return false;
      if (j < i) {
        if (v != 0) return false;
        continue;
      }
      if (j + 1 < l && r.entries(i, j + 1) > v) return false;
      if (i > 0 && r.entries(i - 1, j) > v) return false;
    }
  }
  return true;
}

RankMap rank_matrices(const MultiSegment& m) {
  RankMap out;
  for (const auto& [key, line] : decompose_class_lines(m)) out.emplace(key, rank_matrix(line));
  return out;
}

bool rank_maps_leq(const RankMap& a, const RankMap& b) {
  if (a.size() != b.size()) throw DomainError("rank maps cover different lines");
  for (const auto& [key, ra] : a) {
    auto it = b.find(key);
    if (it == b.end()) throw DomainError("line " + key.to_string() + " missing");
    const HalfInt lo = std::min(ra.e_min, it->second.e_min);
    const HalfInt hi = std::max(ra.e_max, it->second.e_max);
    if (!rm_leq(pad(ra, lo, hi), pad(it->second, lo, hi))) return false;
  }
  return true;
}

bool closure_leq(const LParameter& p1, const LParameter& p2) {
  if (!(p1.group == p2.group)) throw DomainError("parameters belong to different groups");
  if (!(infinitesimal(p1.mseg) == infinitesimal(p2.mseg))) {
    throw DomainError("parameters have different infinitesimal parameters");
  }
  return rank_maps_leq(rank_matrices(p1.mseg), rank_matrices(p2.mseg));
}

}  // namespace pya
