#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sendov/certify.hpp"

namespace sendov {

/// Search space: k roots with fixed multiplicities, positions free in the
/// closed unit disk; the distinguished root either pinned or free in [0,1].
struct SearchSpace {
    int k = 1;
    int n = 1;
    std::vector<int> multiplicities;  // n_j, length k
    bool a_free = false;
    double a_fixed = 1.0;
    std::uint64_t seed = 0;
};

struct SearchOptions {
    int restarts = 32;
    int iters = 400;   // Nelder-Mead iterations per restart (0 = initial sample only)
    int threads = 0;   // <= 0: hardware concurrency
};

struct SearchReport {
    FactoredPolynomial best_config;
    double best_margin = 0.0;
    long long evaluations = 0;
    // (cumulative evaluation count, margin) at each improvement, reduced over
    // restarts in index order so the history is independent of thread timing.
    std::vector<std::pair<long long, double>> history;
};

/// min |a - zeta| over eligible critical points zeta != a.
double margin(const FactoredPolynomial& fp, const SolveOptions& opt = {});

/// True when the space pins a = 1 with n >= 2 and sum n_j >= k n, i.e. every
/// configuration it contains carries a certified |zeta - 1/2| <= 1/2 witness;
/// any search margin above 1 then indicates a defect in the pipeline.
bool corollary1_applicable(const SearchSpace& space);

/// Maximize the margin by Nelder-Mead with random restarts.  Restart r uses
/// a generator seeded from (space.seed, r), so results are deterministic for
/// a fixed seed and identical whether restarts run sequentially or in
/// parallel.
SearchReport maximize_margin(const SearchSpace& space, const SearchOptions& opt = {});

}  // namespace sendov
