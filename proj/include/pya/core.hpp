#pragma once

// Data model: supercuspidal classes, segments, multi-segments, groups and
// parameters, plus the isotypic (line) decomposition and parity rules.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pya/halfint.hpp"

namespace pya {

enum class Duality { none, orthogonal, symplectic };

/// Opaque unitary supercuspidal class. Non-selfdual classes name their
/// contragredient explicitly through dual_label.
struct RhoClass {
  std::string label;
  int dim = 1;
  Duality selfdual = Duality::orthogonal;
  std::string dual_label;

  static RhoClass trivial();
  static RhoClass selfdual_class(std::string label, int dim, Duality kind);
  /// Non-selfdual class paired with `dual_label`.
  static RhoClass paired_class(std::string label, std::string dual_label, int dim = 1);

  bool is_selfdual() const { return selfdual != Duality::none; }
  /// +1 orthogonal, -1 symplectic; DomainError when not selfdual.
  int sign() const;
  RhoClass dual() const;

  friend bool operator==(const RhoClass&, const RhoClass&) = default;
};

/// Throws DomainError if the class violates selfdual = none <=> dual_label != label.
void check_rho_class(const RhoClass& rho);

/// Nonempty segment [b, e] over rho; e - b is a nonnegative integer.
struct Segment {
  RhoClass rho;
  HalfInt b;
  HalfInt e;

  Segment(RhoClass rho, HalfInt b, HalfInt e);

  std::int64_t length() const { return (e - b).twice() / 2 + 1; }
  bool is_self_centered() const { return rho.is_selfdual() && b == -e; }
  std::string to_string() const;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// [b, e]_rho -> [-e, -b]_{rho dual}.
Segment seg_dual(const Segment& s);
/// [b, e - 1], or nothing when that is empty.
std::optional<Segment> seg_minus(const Segment& s);
/// [b + 1, e], or nothing when that is empty.
std::optional<Segment> seg_preminus(const Segment& s);
/// s1 precedes s2: same class, same grid, b1 < b2, e1 < e2, b2 <= e1 + 1.
bool precedes(const Segment& s1, const Segment& s2);

/// Canonical order: rho label ascending, then e descending, then b descending.
struct SegmentOrder {
  bool operator()(const Segment& x, const Segment& y) const;
};

class MultiSegment {
 public:
  using Storage = std::map<Segment, int, SegmentOrder>;
  using const_iterator = Storage::const_iterator;

  MultiSegment() = default;
  MultiSegment(std::initializer_list<Segment> segments);

  void add(const Segment& s, int mult = 1);
  /// Throws DomainError on multiplicity underflow.
  void remove(const Segment& s, int mult = 1);
  int multiplicity(const Segment& s) const;

  bool empty() const { return entries_.empty(); }
  /// Number of segments counted with multiplicity.
  int size() const;
  std::size_t distinct() const { return entries_.size(); }
  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }

  /// Segments with multiplicity expanded, in canonical order.
  std::vector<Segment> expanded() const;

  /// Sum over segments of dim(rho) * length.
  std::int64_t dimension() const;

  MultiSegment& operator+=(const MultiSegment& other);
  friend MultiSegment operator+(MultiSegment a, const MultiSegment& b) { return a += b; }
  friend bool operator==(const MultiSegment& a, const MultiSegment& b);
  friend bool operator<(const MultiSegment& a, const MultiSegment& b);

  std::string to_string() const;

 private:
  Storage entries_;
};

/// Segment-wise contragredient.
MultiSegment dual(const MultiSegment& m);
bool is_selfdual(const MultiSegment& m);

struct Exponent {
  RhoClass rho;
  HalfInt a;
};

struct ExponentOrder {
  bool operator()(const Exponent& x, const Exponent& y) const;
};

/// Multiset of (class, exponent) pairs.
class InfinitesimalParameter {
 public:
  using Storage = std::map<Exponent, int, ExponentOrder>;

  void add(const Exponent& x, int mult = 1);
  int multiplicity(const Exponent& x) const;
  int size() const;
  bool empty() const { return entries_.empty(); }
  Storage::const_iterator begin() const { return entries_.begin(); }
  Storage::const_iterator end() const { return entries_.end(); }

  InfinitesimalParameter& operator+=(const InfinitesimalParameter& other);
  friend bool operator==(const InfinitesimalParameter& a, const InfinitesimalParameter& b);
  std::string to_string() const;

 private:
  Storage entries_;
};

InfinitesimalParameter infinitesimal(const MultiSegment& m);
InfinitesimalParameter dual(const InfinitesimalParameter& lambda);

/// Isotypic line: a class (the smaller label of a non-selfdual pair) plus
/// the half-integer grid offset delta in {0, 1/2}.
struct LineKey {
  RhoClass rho;
  HalfInt delta;

  std::string to_string() const;
  friend bool operator==(const LineKey&, const LineKey&) = default;
};

struct LineKeyOrder {
  bool operator()(const LineKey& x, const LineKey& y) const;
};

using LineMap = std::map<LineKey, MultiSegment, LineKeyOrder>;

/// Key of the isotypic line containing s (non-selfdual classes are paired).
LineKey line_key(const Segment& s);
/// Key of the single-class line containing s (no pairing; the GL notion).
LineKey class_line_key(const Segment& s);

LineMap decompose_lines(const MultiSegment& m);
LineMap decompose_class_lines(const MultiSegment& m);

enum class GroupKind { GL, SO_odd, Sp, O_even };

/// GL(n) = GL_n, SO_odd(n) = SO_{2n+1}, Sp(n) = Sp_{2n}, O_even(n) = O_{2n}.
struct GroupType {
  GroupKind kind = GroupKind::GL;
  int n = 0;

  bool is_classical() const { return kind != GroupKind::GL; }
  /// Dimension of the standard representation of the dual group.
  int std_dim() const;
  /// Sign of the bilinear form preserved by the dual group; DomainError for GL.
  int form_sign() const;
  std::string name() const;

  friend bool operator==(const GroupType&, const GroupType&) = default;
};

std::string to_string(GroupKind kind);

enum class Parity { good, bad, nonselfdual };

std::string to_string(Parity p);

/// Parity of an isotypic line inside a classical group; DomainError for GL.
Parity line_parity(const LineKey& key, const GroupType& group);

struct LParameter {
  GroupType group;
  MultiSegment mseg;

  friend bool operator==(const LParameter&, const LParameter&) = default;
};

enum class ViolationKind { dimension_mismatch, not_selfdual, bad_line_odd_multiplicity };

struct Violation {
  ViolationKind kind;
  std::string detail;
};

std::string to_string(ViolationKind kind);

/// True when every self-centered segment of the (single, selfdual) line
/// has even multiplicity and the line is closed under contragredient; i.e.
/// a fixed-point-free pairing i -> i^vee exists.
bool is_valid_bad_line(const MultiSegment& line);

std::vector<Violation> validate(const LParameter& p);

}  // namespace pya
