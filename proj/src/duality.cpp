#include "pya/duality.hpp"

#include <algorithm>
#include <stdexcept>

#include "pya/errors.hpp"

namespace pya {

namespace {

void require_single_class_line(const MultiSegment& m, const char* what) {
  if (m.empty()) return;
  const LineKey key = class_line_key(m.begin()->first);
  for (const auto& [s, k] : m) {
    if (!(class_line_key(s) == key)) {
      throw DomainError(std::string(what) + " needs a single-class line, got " + m.to_string());
    }
  }
}

void require_selfdual_line(const MultiSegment& m, const char* what) {
  require_single_class_line(m, what);
  if (!m.empty() && !m.begin()->first.rho.is_selfdual()) {
    throw DomainError(std::string(what) + " needs a selfdual class, got " + m.to_string());
  }
}

// Chain extraction shared by both algorithms. With `bad_parity` set, a
// candidate whose contragredient already sits in the chain is eligible only
// if it occurs at least twice.
std::vector<Segment> extract_chain(const MultiSegment& m, bool bad_parity) {
  // Canonical order puts the maximal end first, and among those the maximal b.
  std::vector<Segment> chain{m.begin()->first};
  const HalfInt d = chain.front().e;
  for (int k = 1;; ++k) {
    const HalfInt target = d - k;
    const Segment& previous = chain.back();
    const Segment* best = nullptr;
    for (const auto& [s, mult] : m) {
      if (s.e != target || !precedes(s, previous)) continue;
      if (bad_parity) {
        const Segment sd = seg_dual(s);
        const bool dual_in_chain = std::any_of(chain.begin(), chain.end(), [&](const Segment& c) { return c == sd; });
        if (dual_in_chain && mult < 2) continue;
      }
      if (best == nullptr || s.b > best->b) best = &s;
    }
    if (best == nullptr) break;
    chain.push_back(*best);
  }
  return chain;
}

MultiSegment mw_dual_impl(const MultiSegment& m, std::vector<ExtractionTrace>* trace) {
  MultiSegment out;
  MultiSegment current = m;
  while (!current.empty()) {
    ExtractionTrace step = mw_step(current);
    out.add(Segment(step.chain.front().rho, step.d - step.r, step.d));
    current = step.remainder;
    if (trace != nullptr) trace->push_back(std::move(step));
  }
  return out;
}

MultiSegment az_bad_impl(const MultiSegment& m, std::vector<ExtractionTrace>* trace) {
  MultiSegment out;
  MultiSegment current = m;
  while (!current.empty()) {
    if (!is_valid_bad_line(current)) {
      throw std::logic_error("bad-parity remainder left the valid domain: " + current.to_string());
    }
    ExtractionTrace step = az_bad_step(current);
    const RhoClass& rho = step.chain.front().rho;
    out.add(Segment(rho, step.d - step.r, step.d));
    out.add(Segment(rho, -step.d, -step.d + step.r));
    current = step.remainder;
    if (trace != nullptr) trace->push_back(std::move(step));
  }
  return out;
}

}  // namespace

ExtractionTrace mw_step(const MultiSegment& m) {
  if (m.empty()) throw DomainError("mw_step on an empty multi-segment");
  require_single_class_line(m, "mw_step");
  ExtractionTrace t;
  t.chain = extract_chain(m, false);
  t.d = t.chain.front().e;
  t.r = static_cast<int>(t.chain.size()) - 1;
  t.remainder = m;
  for (const auto& s : t.chain) t.remainder.remove(s);
  for (const auto& s : t.chain) {
    if (auto shorter = seg_minus(s)) t.remainder.add(*shorter);
  }
  return t;
}

MultiSegment mw_dual(const MultiSegment& m) { return mw_dual(m, nullptr); }

MultiSegment mw_dual(const MultiSegment& m, std::vector<ExtractionTrace>* trace) {
  require_single_class_line(m, "mw_dual");
  return mw_dual_impl(m, trace);
}

MultiSegment gl_dual(const MultiSegment& m) {
  MultiSegment out;
  for (const auto& [key, line] : decompose_class_lines(m)) out += mw_dual_impl(line, nullptr);
  return out;
}

ExtractionTrace az_bad_step(const MultiSegment& m) {
  if (m.empty()) throw DomainError("az_bad_step on an empty multi-segment");
  require_selfdual_line(m, "az_bad_step");
  if (!is_valid_bad_line(m)) {
    throw DomainError(m.to_string() + " admits no fixed-point-free contragredient pairing");
  }
  ExtractionTrace t;
  t.chain = extract_chain(m, true);
  t.d = t.chain.front().e;
  t.r = static_cast<int>(t.chain.size()) - 1;
  t.remainder = m;
  for (const auto& s : t.chain) {
    t.remainder.remove(s);
    t.remainder.remove(seg_dual(s));
  }
  for (const auto& s : t.chain) {
    if (auto shorter = seg_minus(s)) t.remainder.add(*shorter);
    if (auto shorter = seg_preminus(seg_dual(s))) t.remainder.add(*shorter);
  }
  return t;
}

MultiSegment az_bad(const MultiSegment& m) { return az_bad(m, nullptr); }

MultiSegment az_bad(const MultiSegment& m, std::vector<ExtractionTrace>* trace) {
  require_selfdual_line(m, "az_bad");
  if (!m.empty() && !is_valid_bad_line(m)) {
    throw DomainError(m.to_string() + " admits no fixed-point-free contragredient pairing");
  }
  return az_bad_impl(m, trace);
}

MultiSegment dual_nonselfdual(const MultiSegment& m) { return dual_nonselfdual(m, nullptr); }

MultiSegment dual_nonselfdual(const MultiSegment& m, std::vector<ExtractionTrace>* trace) {
  if (m.empty()) return {};
  const LineKey key = line_key(m.begin()->first);
  if (key.rho.is_selfdual()) throw DomainError("dual_nonselfdual needs a non-selfdual class");
  MultiSegment half;
  MultiSegment other;
  for (const auto& [s, k] : m) {
    if (!(line_key(s) == key)) throw DomainError("dual_nonselfdual needs a single paired line, got " + m.to_string());
    (s.rho.label == key.rho.label ? half : other).add(s, k);
  }
  if (!(dual(half) == other)) {
    throw DomainError(m.to_string() + " is not of the form m1 + dual(m1)");
  }
  const MultiSegment half_dual = mw_dual_impl(half, trace);
  return half_dual + dual(half_dual);
}

MultiSegment dual_good(const MultiSegment& m) { return dual_good(m, nullptr); }

MultiSegment dual_good(const MultiSegment& m, std::vector<ExtractionTrace>* trace) {
  require_selfdual_line(m, "dual_good");
  MultiSegment out = mw_dual_impl(m, trace);
  if (is_selfdual(m) && !is_selfdual(out)) {
    throw std::logic_error("MW dual of the selfdual good-parity line " + m.to_string() + " is not selfdual");
  }
  return out;
}

LParameter pyasetskii_dual(const LParameter& p) { return pyasetskii_dual(p, nullptr); }

LParameter pyasetskii_dual(const LParameter& p, std::vector<LineTrace>* trace) {
  const auto violations = validate(p);
  if (!violations.empty()) {
    std::string message = "invalid parameter:";
    for (const auto& v : violations) message += " " + to_string(v.kind) + " (" + v.detail + ");";
    throw DomainError(message);
  }

  LParameter out{p.group, {}};
  auto steps = [&](LineTrace& lt) { return trace != nullptr ? &lt.steps : nullptr; };

  if (!p.group.is_classical()) {
    for (const auto& [key, line] : decompose_class_lines(p.mseg)) {
      LineTrace lt{key, "mw", {}};
      out.mseg += mw_dual_impl(line, steps(lt));
      if (trace != nullptr) trace->push_back(std::move(lt));
    }
    return out;
  }

  for (const auto& [key, line] : decompose_lines(p.mseg)) {
    LineTrace lt{key, "", {}};
    switch (line_parity(key, p.group)) {
      case Parity::nonselfdual:
        lt.algorithm = "mw-paired";
        out.mseg += dual_nonselfdual(line, steps(lt));
        break;
      case Parity::good:
        lt.algorithm = "mw";
        out.mseg += dual_good(line, steps(lt));
        break;
      case Parity::bad:
        lt.algorithm = "az-bad";
        out.mseg += az_bad_impl(line, steps(lt));
        break;
    }
    if (trace != nullptr) trace->push_back(std::move(lt));
  }
  return out;
}

Unramified unramify(const MultiSegment& line, const GroupType& group) {
  if (line.empty()) throw DomainError("unramify on an empty line");
  require_selfdual_line(line, "unramify");
  const RhoClass& rho = line.begin()->first.rho;

  Unramified u;
  u.form_sign = group.form_sign() * rho.sign();
  const RhoClass one = RhoClass::trivial();
  for (const auto& [s, k] : line) u.mseg.add(Segment(one, s.b, s.e), k);

  const auto dim = static_cast<int>(u.mseg.dimension());
  if (u.form_sign < 0) {
    if (dim % 2 != 0) throw DomainError("odd-dimensional symplectic space in unramify");
    u.group = {GroupKind::SO_odd, dim / 2};
  } else if (dim % 2 != 0) {
    u.group = {GroupKind::Sp, (dim - 1) / 2};
  } else {
    u.group = {GroupKind::O_even, dim / 2};
  }
  return u;
}

}  // namespace pya
