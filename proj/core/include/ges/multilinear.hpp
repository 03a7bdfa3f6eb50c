#pragma once

// Self-multilinear map: one blinded base raised to the integer product of
// non-blinded encodings, in a single modular exponentiation.

#include <vector>

#include "ges/encoding.hpp"

namespace ges {

struct MapInput {
  BlindedEncoding base;
  std::vector<Encoding> factors;  // non-empty, arbitrary levels
};

// base^{prod_j factors[j].value} mod N at level base.level + sum of factor
// levels. Equals iterated ext in any order. Throws Error on empty factors.
BlindedEncoding multilinear_eval(const MapInput& input, const SystemParams& sp);

// Test oracle (needs msk): true iff the output has multiplicative order
// exactly xq mod N, i.e. it still generates the published subgroup.
bool check_nondegenerate(const BlindedEncoding& out, const SystemParams& sp,
                         const MasterSecret& msk);

}  // namespace ges
