#pragma once

#include <string>
#include <vector>

#include "mixcay/context.hpp"
#include "mixcay/enumerate.hpp"

namespace mixcay {

struct ClassificationRow {
  std::string group;
  /// e.g. "Cl[(0 1)(2 3)] + Cl[(0 1 2)]→"; a trailing arrow marks a class
  /// included without its inverse class.
  std::string descriptor;
  std::string symmetric_part;
  std::string skew_part;
  bool normal = true;
  bool hs_integral = false;
  bool eisenstein_integral = false;
  /// Merged HS-spectrum, e.g. "{-5^1, -1^9, 7^2}".
  std::string spectrum;
  ClassMask mask = 0;
};

/// Class descriptor in class-index order; "∅" for the empty set.
std::string describe_set(const GroupContext& ctx, ClassMask mask);

/// Set argument for the CLI selecting exactly these classes, e.g.
/// "Cl[(0 1 2)];Cl[(0 1)(2 3)]".
std::string set_argument(const GroupContext& ctx, ClassMask mask);

struct ClassifyOptions {
  EnumerationMode mode = EnumerationMode::All;
  std::size_t bound = kDefaultEnumerationBound;
  double tol = kSnapTolerance;
};

/// One row per normal set. Every row is checked against the cross-route
/// invariants (structural vs spectral HS-integrality, the decomposition into
/// symmetric and skew parts, both part-wise characterizations, Eisenstein
/// integrality implying HS-integrality, and agreement of the two Eisenstein
/// routes); the first violation throws InvariantViolation with a command
/// line reproducing it.
void classify(const GroupContext& ctx, const ClassifyOptions& options, std::vector<ClassificationRow>& rows);
std::vector<ClassificationRow> classify(const std::vector<GroupSpec>& groups, const ClassifyOptions& options = {},
                                        const ContextOptions& context_options = {});

/// Built-in family catalog sorted by (order, spec): cyclic groups,
/// dihedral k >= 3, dicyclic k >= 2, symmetric n >= 3, alternating n >= 4,
/// cyclic:a x cyclic:b with 1 < a | b, and a few small non-abelian groups
/// times cyclic:3.
std::vector<GroupSpec> builtin_catalog(std::size_t max_order);

}  // namespace mixcay
