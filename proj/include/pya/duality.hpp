#pragma once

// Dualization algorithms on multi-segments and the per-line dispatch that
// computes the Pyasetskii involution of a parameter.

#include <vector>

#include "pya/core.hpp"

namespace pya {

/// One extraction step: the chain of segments ending at d, d-1, ..., d-r and
/// the multi-segment left for the next recursion level.
struct ExtractionTrace {
  HalfInt d;
  std::vector<Segment> chain;
  int r = 0;
  MultiSegment remainder;
};

/// Single extraction step of the Moeglin-Waldspurger algorithm.
ExtractionTrace mw_step(const MultiSegment& m);

/// Moeglin-Waldspurger involution on a single-class line (possibly empty).
MultiSegment mw_dual(const MultiSegment& m);
MultiSegment mw_dual(const MultiSegment& m, std::vector<ExtractionTrace>* trace);

/// GL-side involution of an arbitrary multi-segment, class line by class line.
MultiSegment gl_dual(const MultiSegment& m);

/// Single extraction step of the bad-parity algorithm. The input must be a
/// valid bad-parity line (selfdual, even multiplicity of self-centered
/// segments).
ExtractionTrace az_bad_step(const MultiSegment& m);

/// Bad-parity involution on a single selfdual line.
MultiSegment az_bad(const MultiSegment& m);
MultiSegment az_bad(const MultiSegment& m, std::vector<ExtractionTrace>* trace);

/// Dual of a paired line m1 + dual(m1) with m1 on the smaller label.
MultiSegment dual_nonselfdual(const MultiSegment& m);
MultiSegment dual_nonselfdual(const MultiSegment& m, std::vector<ExtractionTrace>* trace);

/// Dual of a selfdual good-parity line: the MW dual, which is selfdual again.
MultiSegment dual_good(const MultiSegment& m);
MultiSegment dual_good(const MultiSegment& m, std::vector<ExtractionTrace>* trace);

struct LineTrace {
  LineKey line;
  std::string algorithm;  // "mw", "mw-paired", "az-bad"
  std::vector<ExtractionTrace> steps;
};

/// Pyasetskii involution. Throws DomainError listing violations when the
/// parameter is invalid.
LParameter pyasetskii_dual(const LParameter& p);
LParameter pyasetskii_dual(const LParameter& p, std::vector<LineTrace>* trace);

struct Unramified {
  MultiSegment mseg;  // over the trivial class
  GroupType group;    // split group whose dual preserves the induced form
  int form_sign = 0;  // epsilon(G) * epsilon(rho)
};

/// Replace the selfdual class of a line by the trivial class. `group` is the
/// ambient classical group providing epsilon(G).
Unramified unramify(const MultiSegment& line, const GroupType& group);

}  // namespace pya
