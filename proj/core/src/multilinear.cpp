#include "ges/multilinear.hpp"

namespace ges {

BlindedEncoding multilinear_eval(const MapInput& input, const SystemParams& sp) {
  if (input.factors.empty()) {
    throw Error("multilinear_eval: factor list must be non-empty");
  }
  // One mod-exp with the unreduced product exponent; no public reduction of
  // the exponent is possible without xq.
  BigNat exponent = 1;
  std::size_t level = input.base.level;
  for (const Encoding& factor : input.factors) {
    exponent *= factor.value;
    level += factor.level;
  }
  return BlindedEncoding{mod_pow(input.base.value, exponent, sp.modulus), level};
}

bool check_nondegenerate(const BlindedEncoding& out, const SystemParams& sp,
                         const MasterSecret& msk) {
  const BigNat ring = msk.ring_order();
  return mod_pow(out.value, ring, sp.modulus) == 1 &&
         mod_pow(out.value, msk.x, sp.modulus) != 1 &&
         mod_pow(out.value, msk.q, sp.modulus) != 1;
}

}  // namespace ges
