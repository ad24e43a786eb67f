#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gmn/conjugacy.hpp"
#include "gmn/gmn_groups.hpp"

namespace gmn {

// A separability certificate: modulus t >= 2 such that the images of the two
// inputs in G_mn(t) are not conjugate. Every certificate is re-verified by
// the mod-t decision procedure before it is returned.
struct WitnessCertificate {
  Int t = 2;
  std::string case_label;  // "length" | "factor_core" | "factor_search" | "rotations"
  std::vector<std::pair<std::string, Int>> moduli;  // named constituents
  std::vector<std::string> trace;
};

struct WitnessOptions {
  Int cap = 1000000;      // iteration budget for verified searches
  bool minimize = false;  // linearly scan for the least verified t <= bound
};

// The least t0 >= 2 such that every positive multiple t of t0 preserves the
// canonical form of g atom-by-atom under rho_t (no nonzero H-atom exponent is
// divisible by t), hence preserves its length.
Int length_preserving_modulus(const GroupContext& ctx, const GNormal& g);

// True iff the images of f and g under rho_t are not conjugate in G_mn(t).
// Pure re-check, shares no state with certificate generation.
bool verify_witness(const GroupContext& ctx, const GNormal& f, const GNormal& g,
                    const Int& t);

// Requires an infinite-modulus context and a non-conjugate pair (throws
// InputsConjugate with the conjugator otherwise). Throws CapExhausted when a
// verified search exceeds the iteration budget.
WitnessCertificate find_witness_modulus(const GroupContext& ctx, const GNormal& f,
                                        const GNormal& g,
                                        const WitnessOptions& opts = {});

}  // namespace gmn
