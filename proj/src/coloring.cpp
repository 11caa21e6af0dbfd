#include "loosecyc/coloring.hpp"

#include "loosecyc/error.hpp"

#include <string>

namespace loosecyc {

char color_letter(Color c) {
    switch (c) {
        case Color::Red: return 'R';
        case Color::Blue: return 'B';
        case Color::Green: return 'G';
    }
    return '?';
}

CycleColoring color_cycle(int n, int a, int b, int c) {
    if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
    if (a + b + c != n) throw InvalidInput("part sizes must sum to n");
    if (!(0 <= a && a <= b && b <= c && c <= n / 2)) {
        throw InvalidInput("part sizes must satisfy 0 <= a <= b <= c <= floor(n/2); got (" +
                           std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                           ") for n=" + std::to_string(n));
    }

    CycleColoring out{n, std::vector<Color>(static_cast<std::size_t>(n), Color::Green), a, b, c};
    auto paint = [&](int position, Color color) { out.colors[static_cast<std::size_t>(position - 1)] = color; };

    // A = odd positions (|A| = ceil(n/2)), B = even positions.
    const int odd_count = (n + 1) / 2;
    for (int i = 1; i <= 2 * c - 1; i += 2) paint(i, Color::Red);
    const int leftover_odd = odd_count - c;  // |A'|

    if (leftover_odd >= b) {
        // Then |B| <= a, forcing a = floor(n/2) and |A'| = b.
        if (a != n / 2 || leftover_odd != b) {
            throw ClaimViolation("color_cycle: |A'| >= b without a = floor(n/2) and |A'| = b");
        }
        for (int i = 2 * c + 1; i <= n; i += 2) paint(i, Color::Blue);
        return out;
    }

    if (leftover_odd == 0) {
        // All odd positions are red, so n is even and c = n/2.
        if (n % 2 != 0 || 2 * c != n) throw ClaimViolation("color_cycle: A' empty with n odd or c != n/2");
        for (int i = 2; i <= 2 * b; i += 2) paint(i, Color::Blue);
        return out;
    }

    for (int i = 2 * c + 1; i <= n; i += 2) paint(i, Color::Blue);
    for (int i = 2; i <= 2 * (b - leftover_odd); i += 2) paint(i, Color::Blue);
    return out;
}

bool is_proper(const CycleColoring& coloring) {
    const int n = coloring.n;
    if (n < 3 || static_cast<int>(coloring.colors.size()) != n) return false;
    int counts[3] = {0, 0, 0};
    for (int i = 0; i < n; ++i) {
        if (coloring.colors[i] == coloring.colors[(i + 1) % n]) return false;
        ++counts[static_cast<int>(coloring.colors[i])];
    }
    return counts[static_cast<int>(Color::Red)] == coloring.c &&
           counts[static_cast<int>(Color::Blue)] == coloring.b &&
           counts[static_cast<int>(Color::Green)] == coloring.a;
}

std::string to_string(const CycleColoring& coloring) {
    std::string s;
    s.reserve(coloring.colors.size());
    for (Color c : coloring.colors) s += color_letter(c);
    return s;
}

}  // namespace loosecyc
