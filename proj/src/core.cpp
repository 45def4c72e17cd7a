#include "pya/core.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "pya/errors.hpp"

namespace pya {

// ---------------------------------------------------------------- RhoClass

RhoClass RhoClass::trivial() { return selfdual_class("1", 1, Duality::orthogonal); }

RhoClass RhoClass::selfdual_class(std::string label, int dim, Duality kind) {
  RhoClass rho;
  rho.dual_label = label;
  rho.label = std::move(label);
  rho.dim = dim;
  rho.selfdual = kind;
  return rho;
}

RhoClass RhoClass::paired_class(std::string label, std::string dual_label, int dim) {
  RhoClass rho;
  rho.label = std::move(label);
  rho.dual_label = std::move(dual_label);
  rho.dim = dim;
  rho.selfdual = Duality::none;
  check_rho_class(rho);
  return rho;
}

int RhoClass::sign() const {
  switch (selfdual) {
    case Duality::orthogonal: return 1;
    case Duality::symplectic: return -1;
    case Duality::none: break;
  }
  throw DomainError("class '" + label + "' is not selfdual");
}

RhoClass RhoClass::dual() const {
  if (is_selfdual()) return *this;
  RhoClass d = *this;
  std::swap(d.label, d.dual_label);
  return d;
}

void check_rho_class(const RhoClass& rho) {
  if (rho.label.empty()) throw DomainError("class label must be nonempty");
  if (rho.dim < 1) throw DomainError("class '" + rho.label + "' must have positive dimension");
  if (rho.is_selfdual() != (rho.dual_label == rho.label)) {
    throw DomainError("class '" + rho.label + "': selfdual classes are their own dual, others must name a different dual");
  }
}

// ---------------------------------------------------------------- Segment

Segment::Segment(RhoClass rho_, HalfInt b_, HalfInt e_) : rho(std::move(rho_)), b(b_), e(e_) {
  if (b > e || !(e - b).is_integer()) {
    throw DomainError("invalid segment [" + b.to_string() + "," + e.to_string() + "]");
  }
}

std::string Segment::to_string() const {
  return "[" + b.to_string() + "," + e.to_string() + "]_" + rho.label;
}

Segment seg_dual(const Segment& s) { return Segment(s.rho.dual(), -s.e, -s.b); }

std::optional<Segment> seg_minus(const Segment& s) {
  if (s.b == s.e) return std::nullopt;
  return Segment(s.rho, s.b, s.e - 1);
}

std::optional<Segment> seg_preminus(const Segment& s) {
  if (s.b == s.e) return std::nullopt;
  return Segment(s.rho, s.b + 1, s.e);
}

bool precedes(const Segment& s1, const Segment& s2) {
  if (s1.rho.label != s2.rho.label) return false;
  if (!(s1.b - s2.b).is_integer()) return false;
  return s1.b < s2.b && s1.e < s2.e && s2.b <= s1.e + 1;
}

bool SegmentOrder::operator()(const Segment& x, const Segment& y) const {
  if (x.rho.label != y.rho.label) return x.rho.label < y.rho.label;
  if (x.e != y.e) return x.e > y.e;
  return x.b > y.b;
}

// ---------------------------------------------------------------- MultiSegment

MultiSegment::MultiSegment(std::initializer_list<Segment> segments) {
  for (const auto& s : segments) add(s);
}

void MultiSegment::add(const Segment& s, int mult) {
  if (mult < 0) throw DomainError("negative multiplicity");
  if (mult == 0) return;
  auto [it, inserted] = entries_.try_emplace(s, 0);
  if (!inserted && !(it->first.rho == s.rho)) {
    throw DomainError("conflicting class descriptors for label '" + s.rho.label + "'");
  }
  it->second += mult;
}

void MultiSegment::remove(const Segment& s, int mult) {
  auto it = entries_.find(s);
  if (it == entries_.end() || it->second < mult) {
    throw DomainError("multiplicity underflow removing " + s.to_string());
  }
  it->second -= mult;
  if (it->second == 0) entries_.erase(it);
}

int MultiSegment::multiplicity(const Segment& s) const {
  auto it = entries_.find(s);
  return it == entries_.end() ? 0 : it->second;
}

int MultiSegment::size() const {
  int n = 0;
  for (const auto& [s, m] : entries_) n += m;
  return n;
}

std::vector<Segment> MultiSegment::expanded() const {
  std::vector<Segment> out;
  for (const auto& [s, m] : entries_) out.insert(out.end(), static_cast<std::size_t>(m), s);
  return out;
}

std::int64_t MultiSegment::dimension() const {
  std::int64_t n = 0;
  for (const auto& [s, m] : entries_) n += static_cast<std::int64_t>(m) * s.rho.dim * s.length();
  return n;
}

MultiSegment& MultiSegment::operator+=(const MultiSegment& other) {
  for (const auto& [s, m] : other.entries_) add(s, m);
  return *this;
}

bool operator==(const MultiSegment& a, const MultiSegment& b) {
  return a.entries_.size() == b.entries_.size() &&
         std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

bool operator<(const MultiSegment& a, const MultiSegment& b) {
  SegmentOrder order;
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
                                      [&](const auto& x, const auto& y) {
                                        if (order(x.first, y.first)) return true;
                                        if (order(y.first, x.first)) return false;
                                        return x.second < y.second;
                                      });
}

std::string MultiSegment::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [s, m] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << s.to_string();
    if (m > 1) os << " x" << m;
  }
  os << '}';
  return os.str();
}

MultiSegment dual(const MultiSegment& m) {
  MultiSegment out;
  for (const auto& [s, k] : m) out.add(seg_dual(s), k);
  return out;
}

bool is_selfdual(const MultiSegment& m) { return dual(m) == m; }

// ---------------------------------------------------------------- InfinitesimalParameter

bool ExponentOrder::operator()(const Exponent& x, const Exponent& y) const {
  return std::tie(x.rho.label, x.a) < std::tie(y.rho.label, y.a);
}

void InfinitesimalParameter::add(const Exponent& x, int mult) {
  if (mult <= 0) return;
  entries_[x] += mult;
}

int InfinitesimalParameter::multiplicity(const Exponent& x) const {
  auto it = entries_.find(x);
  return it == entries_.end() ? 0 : it->second;
}

int InfinitesimalParameter::size() const {
  int n = 0;
  for (const auto& [x, m] : entries_) n += m;
  return n;
}

InfinitesimalParameter& InfinitesimalParameter::operator+=(const InfinitesimalParameter& other) {
  for (const auto& [x, m] : other.entries_) add(x, m);
  return *this;
}

bool operator==(const InfinitesimalParameter& a, const InfinitesimalParameter& b) {
  return a.entries_.size() == b.entries_.size() &&
         std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), [](const auto& x, const auto& y) {
           return x.first.rho.label == y.first.rho.label && x.first.a == y.first.a && x.second == y.second;
         });
}

std::string InfinitesimalParameter::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [x, m] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << '(' << x.rho.label << ',' << x.a.to_string() << ')';
    if (m > 1) os << " x" << m;
  }
  os << '}';
  return os.str();
}

InfinitesimalParameter infinitesimal(const MultiSegment& m) {
  InfinitesimalParameter lambda;
  for (const auto& [s, k] : m) {
    for (HalfInt a = s.b; a <= s.e; a += 1) lambda.add({s.rho, a}, k);
  }
  return lambda;
}

InfinitesimalParameter dual(const InfinitesimalParameter& lambda) {
  InfinitesimalParameter out;
  for (const auto& [x, m] : lambda) out.add({x.rho.dual(), -x.a}, m);
  return out;
}

// ---------------------------------------------------------------- lines

std::string LineKey::to_string() const { return rho.label + ":" + delta.to_string(); }

bool LineKeyOrder::operator()(const LineKey& x, const LineKey& y) const {
  return std::tie(x.rho.label, x.delta) < std::tie(y.rho.label, y.delta);
}

LineKey class_line_key(const Segment& s) { return {s.rho, s.b.frac()}; }

LineKey line_key(const Segment& s) {
  if (s.rho.is_selfdual() || s.rho.label < s.rho.dual_label) return {s.rho, s.b.frac()};
  return {s.rho.dual(), s.b.frac()};
}

LineMap decompose_lines(const MultiSegment& m) {
  LineMap lines;
  for (const auto& [s, k] : m) lines[line_key(s)].add(s, k);
  return lines;
}

LineMap decompose_class_lines(const MultiSegment& m) {
  LineMap lines;
  for (const auto& [s, k] : m) lines[class_line_key(s)].add(s, k);
  return lines;
}

// ---------------------------------------------------------------- groups

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::GL: return "GL";
    case GroupKind::SO_odd: return "SO_odd";
    case GroupKind::Sp: return "Sp";
    case GroupKind::O_even: return "O_even";
  }
  return "?";
}

int GroupType::std_dim() const {
  switch (kind) {
    case GroupKind::GL: return n;
    case GroupKind::SO_odd: return 2 * n;
    case GroupKind::Sp: return 2 * n + 1;
    case GroupKind::O_even: return 2 * n;
  }
  return 0;
}

int GroupType::form_sign() const {
  switch (kind) {
    case GroupKind::SO_odd: return -1;
    case GroupKind::Sp:
    case GroupKind::O_even: return 1;
    case GroupKind::GL: break;
  }
  throw DomainError("GL has no invariant bilinear form");
}

std::string GroupType::name() const {
  switch (kind) {
    case GroupKind::GL: return "GL_" + std::to_string(n);
    case GroupKind::SO_odd: return "SO_" + std::to_string(2 * n + 1);
    case GroupKind::Sp: return "Sp_" + std::to_string(2 * n);
    case GroupKind::O_even: return "O_" + std::to_string(2 * n);
  }
  return "?";
}

std::string to_string(Parity p) {
  switch (p) {
    case Parity::good: return "good";
    case Parity::bad: return "bad";
    case Parity::nonselfdual: return "nonselfdual";
  }
  return "?";
}

Parity line_parity(const LineKey& key, const GroupType& group) {
  const int eps_group = group.form_sign();
  if (!key.rho.is_selfdual()) return Parity::nonselfdual;
  const int eps_line = key.rho.sign() * (key.delta.is_integer() ? 1 : -1);
  return eps_group * eps_line == 1 ? Parity::good : Parity::bad;
}

// ---------------------------------------------------------------- validation

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::dimension_mismatch: return "dimension-mismatch";
    case ViolationKind::not_selfdual: return "not-selfdual";
    case ViolationKind::bad_line_odd_multiplicity: return "bad-line-odd-multiplicity";
  }
  return "?";
}

bool is_valid_bad_line(const MultiSegment& line) {
  if (!is_selfdual(line)) return false;
  return std::all_of(line.begin(), line.end(),
                     [](const auto& entry) { return !entry.first.is_self_centered() || entry.second % 2 == 0; });
}

std::vector<Violation> validate(const LParameter& p) {
  std::vector<Violation> out;
  const std::int64_t dim = p.mseg.dimension();
  if (dim != p.group.std_dim()) {
    out.push_back({ViolationKind::dimension_mismatch, "total dimension " + std::to_string(dim) + " but " +
                                                          p.group.name() + " needs " +
                                                          std::to_string(p.group.std_dim())});
  }
  if (!p.group.is_classical()) return out;

  if (!is_selfdual(p.mseg)) {
    out.push_back({ViolationKind::not_selfdual, p.mseg.to_string() + " is not closed under contragredient"});
  }
  for (const auto& [key, line] : decompose_lines(p.mseg)) {
    if (line_parity(key, p.group) != Parity::bad) continue;
    for (const auto& [s, k] : line) {
      if (s.is_self_centered() && k % 2 != 0) {
        out.push_back({ViolationKind::bad_line_odd_multiplicity,
                       s.to_string() + " has odd multiplicity " + std::to_string(k) + " on bad-parity line " +
                           key.to_string()});
      }
    }
  }
  return out;
}

}  // namespace pya
