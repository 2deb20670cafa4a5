#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ecom/exactla/int_matrix.hpp"

namespace ecom::exactla {

/// Finitely generated abelian group Z^r + Z/t1 + ... + Z/tk with t1 | t2 | ... | tk,
/// every ti >= 2. Construction always canonicalizes, so == is structural.
class AbelianGroup {
public:
    AbelianGroup() = default;

    /// Accepts any list of cyclic orders; 0 counts as a free summand, 1 is dropped.
    AbelianGroup(std::size_t free_rank, const std::vector<Integer>& cyclic_orders);

    static AbelianGroup zero() { return {}; }
    static AbelianGroup free(std::size_t r) { return AbelianGroup(r, {}); }
    static AbelianGroup cyclic(const Integer& n) { return AbelianGroup(0, {n}); }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }

    bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_free() const { return torsion_.empty(); }

    /// Number of cyclic summands of p-power order in the primary decomposition.
    std::size_t p_torsion_count(unsigned long p) const;

    AbelianGroup operator+(const AbelianGroup& other) const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

    /// "0", "Z", "Z^2 + Z/2 + Z/6".
    std::string to_string() const;

private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
};

/// Free part plus the p-power torsion: the group after localizing at p.
AbelianGroup p_primary(const AbelianGroup& g, unsigned long p);

/// Inverse of AbelianGroup::to_string. Whitespace is ignored.
AbelianGroup parse_abelian_group(const std::string& text);

}  // namespace ecom::exactla
