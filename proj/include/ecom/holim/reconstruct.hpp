#pragma once

#include <cstddef>
#include <cstdint>
#include <compare>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ecom/holim/diagram.hpp"
#include "ecom/holim/limits.hpp"

namespace ecom::holim {

/// One degree of a diagram on S(2) with p_{(0,2),(0,1,2)} = id. Such a block is fixed by
/// p03, p13, p15, p25, p36, p56 subject to p36·p13 = p56·p15; the rest are composites.
struct BlockShape {
    std::vector<std::size_t> dims;  // 7 entries, object order of PosetSn(2)
    std::uint32_t p = 2;
    int degree = 0;
    std::vector<MapConstraint> constraints;
};

/// Ranks of every arrow, of [p_ab]_a into each b, and of [p_ab]_b out of each a.
struct RankProfile {
    std::vector<std::size_t> arrows, joint_in, joint_out;
    auto operator<=>(const RankProfile&) const = default;
};

RankProfile rank_profile(const PosetSn& poset, const Block& b, const std::vector<std::size_t>& dims);

/// Fills in the composites from the six generating maps.
Block complete_block(const BlockShape& s, const FpMatrix& p03, const FpMatrix& p13, const FpMatrix& p15,
                     const FpMatrix& p25, const FpMatrix& p36, const FpMatrix& p56);

/// A random functorial block meeting the shape's constraints, or nothing if this draw missed them.
/// Generating maps get random ranks so that degenerate blocks are reachable.
std::optional<Block> sample_block(const BlockShape& s, std::mt19937& rng);

/// Number of raw choices an exhaustive walk visits, saturating at UINT64_MAX.
std::uint64_t enumeration_bound(const BlockShape& s);

struct RobustnessReport {
    int degree = 0;
    bool exhaustive = false;
    std::uint64_t examined = 0;  // blocks with all constraints and the reference rank profile
    std::set<std::pair<std::size_t, std::size_t>> observed;  // (lim0, lim1)
    HigherLimits reference;
    bool constant() const { return observed.size() <= 1; }
};

/// Every block (or, above `budget`, `samples` random blocks) with the shape's constraints and
/// the same rank profile as `reference`; records the (lim0, lim1) values met.
RobustnessReport robustness_check(const BlockShape& s, const Block& reference, std::uint64_t budget,
                                  std::uint64_t samples, std::uint32_t seed);
RobustnessReport robustness_check(const PosetDiagram& d, int k, std::uint64_t budget, std::uint64_t samples,
                                  std::uint32_t seed);

BlockShape block_shape(const PosetDiagram& d, int k);

}  // namespace ecom::holim
