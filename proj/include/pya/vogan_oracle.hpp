#pragma once

// Brute-force verification of the duality. A single line is realized as a
// graded vector space with basis vectors indexed by (instance, exponent), a
// nilpotent degree +1 base point f and, for bad-parity lines, a bilinear
// form J. The dual orbit's rank matrix is recovered from generic elements
// of the commutant of the transposed base point.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pya/core.hpp"
#include "pya/field.hpp"
#include "pya/linalg.hpp"
#include "pya/rankmat.hpp"

namespace pya {

struct Instance {
  Segment segment;
  int copy = 0;  // index among the copies of this segment
};

/// Concrete model of one line. f and J have entries in {-1, 0, 1} and are
/// stored as integer matrices so a realization is independent of the prime.
struct Realization {
  MultiSegment mseg;
  bool with_form = false;
  std::vector<Instance> instances;
  std::vector<int> pairing;  // i -> i^vee; empty without a form
  std::vector<int> signs;    // epsilon(i); empty without a form
  HalfInt delta;
  int epsilon = 0;  // sign of the form, (-1)^(2 delta + 1)
  HalfInt e_min;
  HalfInt e_max;
  std::vector<std::pair<int, HalfInt>> basis;  // index -> (instance, exponent)
  IntMat f;
  IntMat J;

  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis.size()); }
  Eigen::Index index(int instance, HalfInt a) const;
  /// Basis indices of the graded piece of exponent a (possibly empty).
  std::vector<Eigen::Index> graded(HalfInt a) const;

 private:
  friend Realization build_realization(const MultiSegment&, bool, std::uint64_t);
  std::map<std::pair<int, std::int64_t>, Eigen::Index> lookup_;
};

/// Builds the realization of a single-class line and asserts the structural
/// invariants (throws std::logic_error if any fails). With a form, m must be
/// a valid bad-parity line; split_seed picks which instance of each
/// self-centered pair gets sign +1.
Realization build_realization(const MultiSegment& m, bool with_form, std::uint64_t split_seed = 0);

struct StructureReport {
  bool f_graded = false;        // f raises the exponent by one and kills top vectors
  bool f_rank_matrix = false;   // composition ranks of f equal rank_matrix(mseg)
  bool form_symmetry = false;   // J^T = epsilon J
  bool form_involution = false; // (epsilon J) J = 1
  bool f_in_lie_algebra = false;  // f^T J + J f = 0

  bool ok() const { return f_graded && f_rank_matrix && form_symmetry && form_involution && f_in_lie_algebra; }
};

/// Recomputes every structural invariant; form checks pass vacuously
/// without a form.
StructureReport check_structure(const Realization& r);

/// Composition ranks of a degree +1 endomorphism x on the realization's
/// exponent window: entry (i, j) is the rank of x^(j-i+1) restricted to the
/// graded piece of exponent e_max - j.
template <class Scalar>
RankMatrix composition_ranks(const Realization& r, const Mat<Scalar>& x) {
  RankMatrix out = RankMatrix::zero(r.e_min, r.e_max);
  const auto l = out.size();
  for (Eigen::Index j = 1; j <= l; ++j) {
    const auto source = r.graded(r.e_max - static_cast<int>(j));
    if (source.empty()) continue;
    Mat<Scalar> c(r.dim(), static_cast<Eigen::Index>(source.size()));
    for (std::size_t k = 0; k < source.size(); ++k) c.col(static_cast<Eigen::Index>(k)) = x.col(source[k]);
    for (Eigen::Index i = j; i >= 1; --i) {
      out.entries(i - 1, j - 1) = static_cast<long>(rank<Scalar>(c));
      if (i > 1) c = (x * c).eval();
    }
  }
  return out;
}

enum class Orientation {
  dual_degree_plus,    // x of degree +1 with [x, f^T] = 0
  commutant_degree_minus,  // g of degree -1 with [f, g] = 0
};

/// Linear constraints on the free entries of a graded unknown: columns are
/// indexed by `unknowns`, rows by the flattened commutator (and form)
/// equations.
struct ConstraintSystem {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> unknowns;  // (row, col) of each free entry
  IntMat equations;
};

ConstraintSystem commutant_constraints(const Realization& r, Orientation o);

/// Basis of the commutant space as dim x dim matrices.
template <class Scalar>
std::vector<Mat<Scalar>> commutant_basis(const Realization& r, Orientation o) {
  const ConstraintSystem sys = commutant_constraints(r, o);
  const Mat<Scalar> kernel = kernel_basis<Scalar>(sys.equations.template cast<Scalar>());
  std::vector<Mat<Scalar>> out;
  for (Eigen::Index k = 0; k < kernel.cols(); ++k) {
    Mat<Scalar> x = Mat<Scalar>::Constant(r.dim(), r.dim(), Scalar(0));
    for (std::size_t u = 0; u < sys.unknowns.size(); ++u) {
      x(sys.unknowns[u].first, sys.unknowns[u].second) = kernel(static_cast<Eigen::Index>(u), k);
    }
    out.push_back(std::move(x));
  }
  return out;
}

struct CommutantSpace {
  bool classical = false;
  int degree = 1;
  std::vector<Mat<Zp>> basis;  // valid under the PrimeScope active at construction

  std::size_t dimension() const { return basis.size(); }
};

/// Degree +1 maps commuting with f^T, inside the form's Lie algebra when the
/// realization carries a form.
CommutantSpace dual_commutant_space(const Realization& r);

/// Degree -1 maps commuting with f, inside the form's Lie algebra when the
/// realization carries a form.
CommutantSpace centralizer_space(const Realization& r);

/// Independent count of the dual commutant's dimension: pairs of instances
/// (i, j) with segment j preceding segment i, halved by the form relation
/// that ties (i, j) to (j^vee, i^vee), self-related pairs being forced to
/// vanish.
std::size_t structured_dimension(const Realization& r);

/// Generic element of a commutant space for trial `trial`; the generator is
/// derived from (seed, trial) only.
Mat<Zp> sample(const CommutantSpace& space, Eigen::Index dim, std::uint64_t seed, int trial);

/// Entrywise maximum of the composition ranks of `trials` generic elements
/// of the dual commutant.
RankMatrix oracle_dual_rank_matrix(const Realization& r, int trials, std::uint64_t seed);

/// Same quantity through the degree -1 centralizer of f: ranks of g^T.
RankMatrix oracle_dual_rank_matrix_transposed(const Realization& r, int trials, std::uint64_t seed);

/// For generic g in the degree -1 centralizer, g^(r+1) kills Delta_i(d) for
/// each instance i carrying the first chain segment of the bad-parity
/// extraction step. Requires a form.
bool nilpotency_check(const Realization& r, int trials, std::uint64_t seed);

struct VerifyOptions {
  int trials = 5;
  std::uint64_t seed = 0;
  std::uint64_t split_seed = 0;
};

struct LineVerification {
  LineKey line;
  std::string mode;  // "classical" or "gl"
  RankMatrix algorithm;
  RankMatrix oracle;
  bool routes_agree = false;  // both oracle orientations coincide
  bool structure_ok = false;
  bool match = false;
};

struct VerifyReport {
  std::vector<LineVerification> lines;
  bool all_match() const;
};

/// Compares the algorithmic dual's rank matrices with the oracle, line by
/// line, under the active PrimeScope. Bad-parity lines are unramified and
/// realized with a form; every other line is checked class by class in GL
/// mode. DomainError on an invalid parameter.
VerifyReport verify_dual(const LParameter& p, const VerifyOptions& options = {});

}  // namespace pya
