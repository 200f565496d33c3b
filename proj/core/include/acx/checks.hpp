#pragma once

#include "acx/cohomology.hpp"

namespace acx {

/// Named outcome list; all_ok() is the conjunction.
struct CheckList {
  std::vector<std::pair<std::string, bool>> items;
  void add(const std::string& name, bool ok) { items.emplace_back(name, ok); }
  bool all_ok() const {
    for (const auto& [n, ok] : items)
      if (!ok) return false;
    return true;
  }
  std::vector<std::string> failures() const {
    std::vector<std::string> f;
    for (const auto& [n, ok] : items)
      if (!ok) f.push_back(n);
    return f;
  }
};

/// Structural operator identities on the invariant complex, as exact
/// matrix identities in every degree: d^2 = (dc)^2 = 0, the bidegree
/// relations forced by d^2 = 0, the delta/deltabar combinations, the
/// closure of the B complex and the parity table. Metric-dependent
/// identities (star, adjoints, Hodge decompositions, harmonic
/// isomorphisms) and symplectic ones (Lefschetz weights, d^Lam) are
/// included when the context carries the structures.
CheckList operator_identity_checks(const OperatorContext& ctx);

/// Cohomology-level checks: Bott-Chern/Aeppli via delta agree with the
/// d, dc definitions, the parity splitting is a direct sum, degree-1
/// bigraded splitting, harmonic-to-cohomology injections with the
/// degree 0/1/2m-1/2m isomorphisms, duality between H^1 and H^{2m-1},
/// and the cohomology diagram.
CheckList cohomology_checks(const OperatorContext& ctx,
                            const Cohomology& cohom);

}  // namespace acx
