#include "pya/vogan_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "pya/duality.hpp"
#include "pya/errors.hpp"

namespace pya {

namespace {

int minus_one_power(std::int64_t n) { return n % 2 == 0 ? 1 : -1; }

void require_single_class_line(const MultiSegment& m) {
  if (m.empty()) throw DomainError("cannot realize an empty line");
  const LineKey key = class_line_key(m.begin()->first);
  for (const auto& [s, k] : m) {
    if (!(class_line_key(s) == key)) throw DomainError("realization needs a single-class line, got " + m.to_string());
  }
}

std::mt19937_64 trial_rng(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

HalfInt exponent_of(const Realization& r, Eigen::Index idx) { return r.basis[static_cast<std::size_t>(idx)].second; }

RankMatrix max_over_trials(const Realization& r, const CommutantSpace& space, int trials, std::uint64_t seed,
                           bool transpose) {
  if (trials < 1) throw DomainError("oracle needs at least one trial");
  RankMatrix best = RankMatrix::zero(r.e_min, r.e_max);
  for (int t = 0; t < trials; ++t) {
    Mat<Zp> x = sample(space, r.dim(), seed, t);
    if (transpose) x = x.transpose().eval();
    const RankMatrix ranks = composition_ranks<Zp>(r, x);
    best.entries = best.entries.cwiseMax(ranks.entries);
  }
  return best;
}

}  // namespace

Eigen::Index Realization::index(int instance, HalfInt a) const {
  auto it = lookup_.find({instance, a.twice()});
  if (it == lookup_.end()) throw DomainError("exponent " + a.to_string() + " is not in instance " + std::to_string(instance));
  return it->second;
}

std::vector<Eigen::Index> Realization::graded(HalfInt a) const {
  std::vector<Eigen::Index> out;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].second == a) out.push_back(static_cast<Eigen::Index>(k));
  }
  return out;
}

Realization build_realization(const MultiSegment& m, bool with_form, std::uint64_t split_seed) {
  require_single_class_line(m);
  Realization r;
  r.mseg = m;
  r.with_form = with_form;
  r.delta = m.begin()->first.b.frac();
  r.epsilon = r.delta.is_integer() ? -1 : 1;
  r.e_min = m.begin()->first.b;
  r.e_max = m.begin()->first.e;
  for (const auto& [s, k] : m) {
    r.e_min = std::min(r.e_min, s.b);
    r.e_max = std::max(r.e_max, s.e);
    for (int c = 0; c < k; ++c) r.instances.push_back({s, c});
  }
  const int count = static_cast<int>(r.instances.size());

  for (int i = 0; i < count; ++i) {
    const Segment& s = r.instances[static_cast<std::size_t>(i)].segment;
    for (HalfInt a = s.b; a <= s.e; a += 1) {
      r.lookup_[{i, a.twice()}] = r.dim();
      r.basis.emplace_back(i, a);
    }
  }

  const Eigen::Index n = r.dim();
  r.f = IntMat::Zero(n, n);
  for (int i = 0; i < count; ++i) {
    const Segment& s = r.instances[static_cast<std::size_t>(i)].segment;
    for (HalfInt a = s.b; a < s.e; a += 1) r.f(r.index(i, a + 1), r.index(i, a)) = 1;
  }

  if (with_form) {
    if (!m.begin()->first.rho.is_selfdual() || !is_valid_bad_line(m)) {
      throw DomainError(m.to_string() + " admits no fixed-point-free contragredient pairing");
    }
    r.pairing.assign(static_cast<std::size_t>(count), -1);
    r.signs.assign(static_cast<std::size_t>(count), 0);
    std::mt19937_64 rng(split_seed);
    for (int i = 0; i < count; ++i) {
      if (r.pairing[static_cast<std::size_t>(i)] >= 0) continue;
      const Segment& s = r.instances[static_cast<std::size_t>(i)].segment;
      const Segment target = seg_dual(s);
      int partner = -1;
      for (int j = 0; j < count && partner < 0; ++j) {
        if (j != i && r.pairing[static_cast<std::size_t>(j)] < 0 && r.instances[static_cast<std::size_t>(j)].segment == target) {
          partner = j;
        }
      }
      if (partner < 0) throw DomainError("no contragredient partner for " + s.to_string());
      r.pairing[static_cast<std::size_t>(i)] = partner;
      r.pairing[static_cast<std::size_t>(partner)] = i;
      int sign = 0;
      if (s.b + s.e > 0) {
        sign = 1;
      } else if (s.b + s.e < 0) {
        sign = -1;
      } else {
        sign = (rng() & 1U) != 0 ? 1 : -1;
      }
      r.signs[static_cast<std::size_t>(i)] = sign;
      r.signs[static_cast<std::size_t>(partner)] = -sign;
    }

    // J(Delta_i(a)) = eps(i^vee) (-1)^(-a - delta) Delta_{i^vee}(-a).
    r.J = IntMat::Zero(n, n);
    for (Eigen::Index col = 0; col < n; ++col) {
      const auto [i, a] = r.basis[static_cast<std::size_t>(col)];
      const int iv = r.pairing[static_cast<std::size_t>(i)];
      const int value = r.signs[static_cast<std::size_t>(iv)] * minus_one_power((-a - r.delta).to_integer());
      r.J(r.index(iv, -a), col) = value;
    }
  }

  const StructureReport report = check_structure(r);
  if (!report.ok()) throw std::logic_error("realization of " + m.to_string() + " violates its structural invariants");
  return r;
}

StructureReport check_structure(const Realization& r) {
  StructureReport out;
  const Eigen::Index n = r.dim();

  out.f_graded = true;
  for (Eigen::Index col = 0; col < n; ++col) {
    const auto [i, a] = r.basis[static_cast<std::size_t>(col)];
    const bool top = a == r.instances[static_cast<std::size_t>(i)].segment.e;
    for (Eigen::Index row = 0; row < n; ++row) {
      if (r.f(row, col) == 0) continue;
      if (top || exponent_of(r, row) != a + 1) out.f_graded = false;
    }
  }

  const RankMatrix of_f = composition_ranks<Zp>(r, r.f.cast<Zp>());
  out.f_rank_matrix = of_f == rank_matrix(r.mseg);

  if (!r.with_form) {
    out.form_symmetry = out.form_involution = out.f_in_lie_algebra = true;
    return out;
  }
  out.form_symmetry = IntMat(r.J.transpose()) == IntMat(r.epsilon * r.J);
  out.form_involution = IntMat(r.epsilon * r.J * r.J) == IntMat::Identity(n, n);
  out.f_in_lie_algebra = IntMat(r.f.transpose() * r.J + r.J * r.f).isZero();
  return out;
}

ConstraintSystem commutant_constraints(const Realization& r, Orientation o) {
  const Eigen::Index n = r.dim();
  const int shift = o == Orientation::dual_degree_plus ? 1 : -1;
  ConstraintSystem sys;
  for (Eigen::Index col = 0; col < n; ++col) {
    for (Eigen::Index row = 0; row < n; ++row) {
      if (exponent_of(r, row) == exponent_of(r, col) + shift) sys.unknowns.emplace_back(row, col);
    }
  }

  // The unknown commutes with y: f^T for the dual side, f for the centralizer.
  const IntMat y = o == Orientation::dual_degree_plus ? IntMat(r.f.transpose()) : r.f;
  const Eigen::Index blocks = r.with_form ? 2 : 1;
  sys.equations = IntMat::Zero(blocks * n * n, static_cast<Eigen::Index>(sys.unknowns.size()));
  for (std::size_t u = 0; u < sys.unknowns.size(); ++u) {
    IntMat e = IntMat::Zero(n, n);
    e(sys.unknowns[u].first, sys.unknowns[u].second) = 1;
    const IntMat commutator = e * y - y * e;
    auto column = sys.equations.col(static_cast<Eigen::Index>(u));
    column.head(n * n) = commutator.reshaped();
    if (r.with_form) {
      const IntMat lie = e.transpose() * r.J + r.J * e;
      column.tail(n * n) = lie.reshaped();
    }
  }
  return sys;
}

CommutantSpace dual_commutant_space(const Realization& r) {
  return {r.with_form, 1, commutant_basis<Zp>(r, Orientation::dual_degree_plus)};
}

CommutantSpace centralizer_space(const Realization& r) {
  return {r.with_form, -1, commutant_basis<Zp>(r, Orientation::commutant_degree_minus)};
}

std::size_t structured_dimension(const Realization& r) {
  std::size_t pairs = 0;
  std::size_t self_related = 0;
  const auto count = r.instances.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (!precedes(r.instances[j].segment, r.instances[i].segment)) continue;
      ++pairs;
      if (r.with_form && r.pairing[i] == static_cast<int>(j)) ++self_related;
    }
  }
  return r.with_form ? (pairs - self_related) / 2 : pairs;
}

Mat<Zp> sample(const CommutantSpace& space, Eigen::Index dim, std::uint64_t seed, int trial) {
  std::mt19937_64 rng = trial_rng(seed, trial);
  Mat<Zp> x = Mat<Zp>::Constant(dim, dim, Zp(0));
  for (const auto& b : space.basis) x += Zp::random(rng) * b;
  return x;
}

RankMatrix oracle_dual_rank_matrix(const Realization& r, int trials, std::uint64_t seed) {
  return max_over_trials(r, dual_commutant_space(r), trials, seed, false);
}

RankMatrix oracle_dual_rank_matrix_transposed(const Realization& r, int trials, std::uint64_t seed) {
  return max_over_trials(r, centralizer_space(r), trials, seed, true);
}

bool nilpotency_check(const Realization& r, int trials, std::uint64_t seed) {
  if (!r.with_form) throw DomainError("nilpotency check needs a realization with a form");
  const ExtractionTrace step = az_bad_step(r.mseg);
  const CommutantSpace space = centralizer_space(r);
  std::vector<Eigen::Index> starts;
  for (std::size_t i = 0; i < r.instances.size(); ++i) {
    if (r.instances[i].segment == step.chain.front()) starts.push_back(r.index(static_cast<int>(i), step.d));
  }
  for (int t = 0; t < trials; ++t) {
    const Mat<Zp> g = sample(space, r.dim(), seed, t);
    for (auto start : starts) {
      Mat<Zp> v = g.col(start);
      for (int k = 1; k <= step.r; ++k) v = (g * v).eval();
      for (Eigen::Index k = 0; k < v.rows(); ++k) {
        if (!v(k, 0).is_zero()) return false;
      }
    }
  }
  return true;
}

bool VerifyReport::all_match() const {
  return std::all_of(lines.begin(), lines.end(), [](const LineVerification& l) { return l.match; });
}

namespace {

LineVerification verify_line(const LineKey& key, const std::string& mode, const MultiSegment& realized, bool with_form,
                             const RankMatrix& algorithm, const VerifyOptions& options) {
  LineVerification v;
  v.line = key;
  v.mode = mode;
  v.algorithm = algorithm;
  const Realization r = build_realization(realized, with_form, options.split_seed);
  v.structure_ok = check_structure(r).ok();
  v.oracle = oracle_dual_rank_matrix(r, options.trials, options.seed);
  v.routes_agree = oracle_dual_rank_matrix_transposed(r, options.trials, options.seed) == v.oracle;
  v.match = v.structure_ok && v.routes_agree && v.oracle == v.algorithm;
  return v;
}

}  // namespace

VerifyReport verify_dual(const LParameter& p, const VerifyOptions& options) {
  const LParameter dual_p = pyasetskii_dual(p);
  const LineMap dual_class_lines = decompose_class_lines(dual_p.mseg);
  VerifyReport report;

  auto verify_gl = [&](const MultiSegment& line) {
    for (const auto& [key, class_line] : decompose_class_lines(line)) {
      const RankMatrix algorithm = rank_matrix(dual_class_lines.at(key));
      report.lines.push_back(verify_line(key, "gl", class_line, false, algorithm, options));
    }
  };

  if (!p.group.is_classical()) {
    verify_gl(p.mseg);
    return report;
  }
  for (const auto& [key, line] : decompose_lines(p.mseg)) {
    if (line_parity(key, p.group) != Parity::bad) {
      verify_gl(line);
      continue;
    }
    const Unramified u = unramify(line, p.group);
    report.lines.push_back(verify_line(key, "classical", u.mseg, true, rank_matrix(az_bad(line)), options));
  }
  return report;
}

}  // namespace pya
