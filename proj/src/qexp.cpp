#include "eiskron/qexp.hpp"

namespace eiskron::qexp {

QExpansion<arith::PadicCyc> embed(const QExpansion<arith::CycRat>& a, arith::u64 p,
                                  int precision) {
  return a.map([&](const arith::CycRat& x) { return arith::PadicCyc::embed(x, p, precision); });
}

}  // namespace eiskron::qexp
