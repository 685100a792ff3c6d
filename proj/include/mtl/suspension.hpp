#pragma once

// Mapping tori F x|_alpha <t> with t x t^-1 = alpha(x), and suspensions of
// subgroups.  Elements are kept in the normal form t^m * tail.

#include <cstddef>
#include <string>
#include <vector>

#include "mtl/autos.hpp"
#include "mtl/splittings.hpp"
#include "mtl/subgroups.hpp"
#include "mtl/words.hpp"

namespace mtl {

struct TorusPresentation {
  FreeBasis base;
  /// Name of the stable letter: 't', or the first free letter after it.
  char stable = 't';
  Automorphism alpha;
  Automorphism alpha_inverse;

  /// Base letters followed by the stable letter (index rank + 1).
  FreeBasis extended() const;
  Letter stable_letter() const { return static_cast<Letter>(base.rank()) + 1; }
  /// One relator per generator, as text: "tat^-1 = ab".
  std::vector<std::string> relators() const;
};

TorusPresentation torus_presentation(const FreeBasis& base, const Automorphism& alpha);

struct TorusElement {
  long m = 0;
  Word tail;

  friend bool operator==(const TorusElement&, const TorusElement&) = default;
};

/// Rewrites a word over the extended alphabet to t^m * tail.
TorusElement normal_form(const TorusPresentation& p, const Word& w);
TorusElement multiply(const TorusPresentation& p, const TorusElement& x,
                      const TorusElement& y);
TorusElement inverse(const TorusPresentation& p, const TorusElement& x);
/// t^m tail as a word over the extended alphabet.
Word to_word(const TorusPresentation& p, const TorusElement& x);
std::string format(const TorusPresentation& p, const TorusElement& x);

/// Every relator normal-forms to (0, identity).
bool relators_hold(const TorusPresentation& p);

/// u q u^-1 and u^-1 q u lie in Q for every basis element q.
bool normalizes(const TorusPresentation& p, const TorusElement& u, const SubgroupGraph& q);

struct SuspensionData {
  SubgroupGraph subgroup;
  std::size_t exponent = 0;
  /// g with g^-1 Q g = alpha^k(Q).
  Word conjugator;
  /// g t^k, stored as (k, alpha^-k(g)).
  TorusElement stable;
  bool verified = false;
  /// t^k g^-1, kept for the report.
  TorusElement literal;
  bool literal_verified = false;
  std::string discrepancy;
};

/// Least k <= max_exp with alpha^k(Q) conjugate to Q, and a verified
/// normalizing element.  BoundedFailure when no k works.
SuspensionData suspend_subgroup(const TorusPresentation& p, const SubgroupGraph& q,
                                std::size_t max_exp);

struct RelHypStructure {
  std::vector<SuspensionData> entries;
  std::vector<std::string> provenance;
  std::string case_label;
  /// Splitting identities of the non-leaf nodes, root last.
  std::vector<std::string> identities;
  bool degenerate = false;
  Bounds bounds;
};

RelHypStructure relhyp_structure(const TorusPresentation& p,
                                 const DecompositionResult& decomposition,
                                 const Bounds& bounds);

}  // namespace mtl
