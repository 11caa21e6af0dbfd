#pragma once

#include "loosecyc/hypercore.hpp"

#include <cstdint>

namespace loosecyc {

/// Each triple independently with probability edge_prob, triples visited in
/// lexicographic order.
ThreeGraph gen_random(int n, double edge_prob, std::uint64_t seed);

struct CodegreeInstance {
    ThreeGraph graph;
    int target = 0;
    int achieved = 0;  // min codegree of `graph`, >= target
};

/// Visits the pairs in random order and tops each one up with random third
/// vertices until its codegree reaches the target. Throws InvalidInput when
/// the target lies outside 0..n-2.
CodegreeInstance gen_codegree_floor(int n, int delta2_target, std::uint64_t seed);

/// splitmix64 step; used to derive per-row seeds.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace loosecyc
