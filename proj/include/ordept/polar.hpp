#pragma once

#include <vector>

#include "ordept/code.hpp"

namespace ordept {

/// Channel reliabilities for the length-n Arikan transform under the BEC
/// Bhattacharyya recursion from erasure probability 1/2, natural (non
/// bit-reversed) index order. Returns indices sorted most reliable first,
/// ties toward the lower index.
std::vector<int> polar_reliability_order(int n);

/// Polar code with the k most reliable indices as information set. G holds
/// the transform rows of the information set; H holds the transform columns
/// of the frozen set, so G*H^T = 0 by the involution property of the
/// transform.
CodeSpec build_polar_code(int n, int k);

}  // namespace ordept
