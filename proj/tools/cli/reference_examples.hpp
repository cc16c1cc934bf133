#pragma once

#include <cstddef>
#include <vector>

#include "eqa/lincomplex.hpp"

namespace eqa::cli {

struct ReferenceExample {
  std::size_t p;
  std::vector<std::size_t> one_positions;
  std::vector<Breakpoint> profile;
};

inline const std::vector<ReferenceExample>& reference_examples() {
  static const std::vector<ReferenceExample> examples = {
      {5, {3, 9, 13, 21, 29, 37, 41, 47}, {{0, 40}, {8, 0}}},
      {11,
       {5,   7,   13,  15,  17,  21,  25,  39,  45,  47,  51,  53,  59,
        61,  63,  65,  75,  79,  83,  85,  89,  101, 107, 109, 117, 125,
        133, 135, 141, 153, 157, 159, 163, 167, 177, 179, 181, 183, 189,
        191, 195, 197, 203, 217, 221, 225, 227, 229, 235, 237},
       {{0, 240}, {1, 222}, {10, 220}, {50, 0}}},
  };
  return examples;
}

}  // namespace eqa::cli
