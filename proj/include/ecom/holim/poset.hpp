#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ecom::holim {

using Subset = std::vector<int>;
/// Strictly increasing object indices a_0 ⊂ a_1 ⊂ ... ⊂ a_m.
using Chain = std::vector<std::size_t>;

/// Nonempty subsets of {0..n}. Objects are sorted by size, then lexicographically,
/// so for n = 2 the indices are i0 = (0), i1 = (1), ..., i6 = (0,1,2).
/// Arrows run from a subset to its strict supersets (the direction of the maps p_jl).
class PosetSn {
public:
    explicit PosetSn(int n);

    int n() const { return n_; }
    std::size_t size() const { return objects_.size(); }
    const Subset& object(std::size_t i) const { return objects_.at(i); }
    const std::vector<Subset>& objects() const { return objects_; }
    std::size_t index_of(const Subset& s) const;
    bool less(std::size_t a, std::size_t b) const;

    /// Nondegenerate chains with `length` objects, in lexicographic order of indices.
    const std::vector<Chain>& chains(std::size_t length) const;
    /// Comparable pairs (a, b) with a ⊂ b; the same list as chains(2).
    const std::vector<Chain>& arrows() const { return chains(2); }
    std::size_t chain_index(const Chain& c) const;

    /// "(0,1)".
    std::string name(std::size_t i) const;

private:
    int n_;
    std::vector<Subset> objects_;
    std::vector<std::vector<Chain>> chains_;  // by length, index 0 unused
};

PosetSn poset(int n);

}  // namespace ecom::holim
