#pragma once

#include <physort/error.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>

namespace physort {

/// Places n_red reds and n_blue blues uniformly on distinct bottom-row cells of a width-m row.
/// With normal_only, resamples until the leftmost agent is red and the rightmost blue. Same seed,
/// same string.
inline std::string random_config(int width, int n_red, int n_blue, std::uint64_t seed, bool normal_only) {
    if (width < 1 || n_red < 0 || n_blue < 0 || n_red + n_blue > width) {
        throw InvalidArgument("infeasible counts: need 0 <= n_red + n_blue <= width and width >= 1");
    }
    if (normal_only && (n_red < 1 || n_blue < 1)) {
        throw InvalidArgument("infeasible counts: a normal configuration needs at least one agent of each color");
    }
    std::string cells(static_cast<std::size_t>(width), '.');
    std::fill_n(cells.begin(), n_red, 'R');
    std::fill_n(cells.begin() + n_red, n_blue, 'B');
    std::mt19937_64 rng(seed);
    for (;;) {
        std::shuffle(cells.begin(), cells.end(), rng);
        if (!normal_only) {
            return cells;
        }
        const auto first = cells.find_first_not_of('.');
        const auto last = cells.find_last_not_of('.');
        if (cells[first] == 'R' && cells[last] == 'B') {
            return cells;
        }
    }
}

}  // namespace physort
