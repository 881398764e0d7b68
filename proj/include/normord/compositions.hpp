#pragma once

#include "normord/placements.hpp"

#include <vector>

namespace normord {

/// Weak compositions of total into `parts` parts, as placement types of
/// length parts (so s = parts - 1), in ascending lexicographic order.
std::vector<PlacementType> weakCompositions(int parts, int total);
/// Those with sum_j (j - 1) k_j == creation.
std::vector<PlacementType> weakCompositions(int parts, int total, int creation);

/// k-element subsets of {1..m}, each ascending.
std::vector<std::vector<int>> columnChoices(int m, int k);
/// Gap sizes m_1..m_{k+1} of a column choice pi in {1..m}: columns right of the
/// first chosen one, between consecutive ones, and left of the last.
std::vector<int> blockSizes(const std::vector<int>& pi, int m);
/// Weak compositions of ell with part j bounded by bounds[j].
std::vector<std::vector<int>> boundedCompositions(int ell, const std::vector<int>& bounds);

}  // namespace normord
