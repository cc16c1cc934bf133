#pragma once

#include <cstddef>
#include <vector>

namespace eqa::fixtures {

// Reference one-positions and first periods of the p = 5 and p = 11
// sequences.
inline const std::vector<std::size_t> kOnesP5 = {3, 9, 13, 21, 29, 37, 41, 47};

inline const char* const kBitsP5 =
    "00010, 00001, 00010, 00000, 01000, 00001, 00000, 00100, 01000, 00100";

inline const std::vector<std::size_t> kOnesP11 = {
    5,   7,   13,  15,  17,  21,  25,  39,  45,  47,  51,  53,  59,
    61,  63,  65,  75,  79,  83,  85,  89,  101, 107, 109, 117, 125,
    133, 135, 141, 153, 157, 159, 163, 167, 177, 179, 181, 183, 189,
    191, 195, 197, 203, 217, 221, 225, 227, 229, 235, 237};

inline const char* const kBitsP11 =
    "00000101000, 00101010001, 00010000000, 00000010000, 01010001010, "
    "00001010101, 00000000010, 00100010100, 01000000000, 00100000101, "
    "00000001000, 00001000000, 01010000010, 00000000001, 00010100010, "
    "00100000000, 01010101000, 00101000101, 00000100000, 00000000100, "
    "01000101010, 00001010000";

}  // namespace eqa::fixtures
