#ifndef SWITCHISO_TOOLS_GOLDEN_HPP_
#define SWITCHISO_TOOLS_GOLDEN_HPP_

#include <array>
#include <string_view>

// Published values for signed complete graphs and the Petersen graph, kept
// verbatim so `reproduce` checks the implementation against them rather than
// against itself.
namespace switchiso::golden {

inline constexpr int kVersion = 1;

struct NegativeCycleColumn {
  std::string_view label;
  int c3;
  int c4;
  int c5;
};

// Negative 3-, 4- and 5-cycle counts of the sixteen signed K6.
inline constexpr std::array<NegativeCycleColumn, 16> kK6Table = {{
    {"S0", 0, 0, 0},
    {"S1", 4, 12, 24},
    {"S2", 6, 18, 24},
    {"S3", 8, 20, 32},
    {"S4", 8, 24, 40},
    {"S5", 10, 22, 36},
    {"S6", 12, 24, 24},
    {"S7", 10, 18, 36},
    {"S8", 10, 26, 36},
    {"S9", 12, 24, 32},
    {"S10", 12, 20, 40},
    {"S11", 14, 18, 36},
    {"S12", 8, 24, 48},
    {"S15", 16, 12, 48},
    {"S16", 10, 30, 36},
    {"S18", 20, 0, 72},
}};

struct ClassCount {
  std::string_view graph;
  int classes;
};

inline constexpr std::array<ClassCount, 5> kClassCounts = {{
    {"complete:3", 2},
    {"complete:4", 3},
    {"complete:5", 7},
    {"complete:6", 16},
    {"petersen", 6},
}};

struct CosetCount {
  std::string_view graph;
  long cosets;
};

inline constexpr std::array<CosetCount, 3> kCosetCounts = {{
    {"complete:3", 2},
    {"complete:6", 1024},
    {"petersen", 64},
}};

// Automorphic types of K6 signatures with max negative degree 2, by size.
inline constexpr std::array<int, 7> kK6TypeCounts = {1, 1, 2, 4, 5, 4, 2};
inline constexpr int kK6TypeTotal = 19;

// Switching `from` at `switch_set` lands in the automorphism orbit of `to`.
struct SwitchingWitness {
  std::string_view from;
  std::string_view to;
  std::array<int, 3> switch_set;
};

inline constexpr std::array<SwitchingWitness, 3> kK6Witnesses = {{
    {"S6", "S17", {1, 2, 3}},
    {"S10", "S14", {0, 2, 4}},
    {"S13", "S9", {1, 3, 5}},
}};

inline constexpr int kK6MaxFrustration = 6;

}  // namespace switchiso::golden

#endif  // SWITCHISO_TOOLS_GOLDEN_HPP_
