#pragma once

#include "lozenge/lozenge.hpp"
#include "oracle.hpp"

#include <vector>

namespace testing_support {

inline std::vector<oracle::Tri> to_oracle(const lozenge::Region& r) {
  std::vector<oracle::Tri> out;
  for (const auto& c : r.cells()) out.push_back({c.row, c.col, c.orient == lozenge::Orientation::Up});
  std::sort(out.begin(), out.end());
  return out;
}

/// Every valid (x, y, z, k) of the family with x + y + z <= max_sum.
inline std::vector<lozenge::RegionParams> family_sweep(lozenge::Family f, int max_sum, int gap = 1) {
  std::vector<lozenge::RegionParams> out;
  for (int x = 0; x <= max_sum; ++x)
    for (int y = 0; x + y <= max_sum; ++y)
      for (int z = 0; x + y + z <= max_sum; ++z)
        for (int k = 0; k <= std::min({x, y, z}); ++k) {
          lozenge::RegionParams p{f, x, y, z, k, gap};
          if (lozenge::params_valid(p)) out.push_back(p);
        }
  return out;
}

}  // namespace testing_support
