#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace loosecyc {

enum class Color : std::uint8_t { Red, Blue, Green };

char color_letter(Color c);

/// Vertex coloring of the 2-uniform cycle on positions 1..n, where position i
/// is adjacent to i+1 and position n to position 1. `colors[i - 1]` is the
/// color of position i. The declared part sizes are a = #green, b = #blue,
/// c = #red.
struct CycleColoring {
    int n = 0;
    std::vector<Color> colors;
    int a = 0;
    int b = 0;
    int c = 0;

    Color at(int position) const { return colors[static_cast<std::size_t>(position - 1)]; }
};

/// Proper coloring of C_n with part sizes (a, b, c). Requires a + b + c = n,
/// 0 <= a <= b <= c <= floor(n/2) and n >= 3; throws InvalidInput otherwise.
///
/// Odd positions 1, 3, ..., 2c-1 are red. The leftover odd positions A' are
/// blue, and when |A'| < b the even positions 2, 4, ..., 2(b - |A'|) are blue
/// too. Everything else is green.
CycleColoring color_cycle(int n, int a, int b, int c);

/// True when adjacent positions differ and the color counts equal (a, b, c).
bool is_proper(const CycleColoring& coloring);

/// One letter per position: R, B or G.
std::string to_string(const CycleColoring& coloring);

}  // namespace loosecyc
