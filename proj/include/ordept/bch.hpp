#pragma once

#include "ordept/code.hpp"

namespace ordept {

/// Narrow-sense primitive BCH code of length 2^m - 1 with designed
/// error-correcting capability t; the generator polynomial is the lcm of the
/// minimal polynomials of alpha, alpha^3, ..., alpha^(2t-1). With extend set,
/// an overall even-parity bit is appended (length 2^m, same dimension).
/// Primitive polynomials are shipped for 3 <= m <= 10.
CodeSpec build_bch_code(int m, int t, bool extend);

}  // namespace ordept
