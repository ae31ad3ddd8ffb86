#pragma once

#include <optional>
#include <span>
#include <vector>

#include "oddramsey/parity.hpp"

namespace oddramsey {

/// Smallest-prefix linear dependency among `rows` over F_2: the returned
/// index set J (ascending, nonempty) satisfies sum_{j in J} rows[j] = 0 and
/// rows[0..max J) are independent. nullopt if all rows are independent.
inline std::optional<std::vector<int>> find_dependency(std::span<const ParityVector> rows) {
  struct Reduced {
    ParityVector row;
    std::vector<bool> combo;  // which input rows were summed into `row`
    Colour pivot;
  };
  std::vector<Reduced> basis;
  const std::size_t k = rows.size();
  for (std::size_t i = 0; i < k; ++i) {
    ParityVector row = rows[i];
    std::vector<bool> combo(k, false);
    combo[i] = true;
    for (const auto& b : basis) {
      if (row.test(b.pivot)) {
        row ^= b.row;
        for (std::size_t j = 0; j < k; ++j)
          if (b.combo[j]) combo[j] = !combo[j];
      }
    }
    if (row.none()) {
      std::vector<int> out;
      for (std::size_t j = 0; j < k; ++j)
        if (combo[j]) out.push_back(static_cast<int>(j));
      return out;
    }
    basis.push_back({row, std::move(combo), row.lowest()});
  }
  return std::nullopt;
}

}  // namespace oddramsey
