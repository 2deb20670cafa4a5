#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ecom/exactla/abelian_group.hpp"

namespace ecom::specseq {

using exactla::AbelianGroup;

struct Bidegree {
    int col = 0;
    int row = 0;
    auto operator<=>(const Bidegree&) const = default;
};

/// One page of a first-quadrant cohomological spectral sequence, p-local.
///
/// Entries are stored explicitly for columns 0..column_limit(). Beyond that a
/// periodic page answers from the last stored period. `shadow` holds, per row,
/// the torsion that a free column-0 entry can still push along a differential
/// (the Tate H^0 of the fiber module); it is not part of the entry itself.
class BigradedPage {
public:
    BigradedPage() = default;
    BigradedPage(unsigned prime, int page_index, int truncation, int fiber_top, std::optional<int> period);

    unsigned prime() const { return prime_; }
    int page_index() const { return page_index_; }
    void set_page_index(int r) { page_index_ = r; }
    int truncation() const { return truncation_; }
    int fiber_top() const { return fiber_top_; }
    std::optional<int> period() const { return period_; }
    /// truncation + 2: every source of total degree <= truncation and every target of
    /// total degree <= truncation + 1 is held.
    int column_limit() const { return truncation_ + 2; }

    AbelianGroup at(int col, int row) const;
    AbelianGroup at(Bidegree b) const { return at(b.col, b.row); }
    void set(int col, int row, AbelianGroup g);

    std::size_t shadow(int row) const;
    void set_shadow(int row, std::size_t dim);
    const std::map<int, std::size_t>& shadows() const { return shadow_; }

    /// Rows that have a nonzero entry somewhere.
    std::vector<int> rows() const;
    const std::map<Bidegree, AbelianGroup>& entries() const { return entries_; }

    /// Number of Z/p summands at (col, row); throws ConfigError on Z/p^k, k > 1.
    std::size_t torsion_dim(int col, int row) const;

    /// Alternating sum of torsion dimensions plus shadows over the window of total degree <= bound.
    long long euler_window(int bound) const;

    friend bool operator==(const BigradedPage&, const BigradedPage&) = default;

    /// Grid text, highest row first, columns 0..max_col.
    std::string to_string(int max_col) const;

private:
    unsigned prime_ = 2;
    int page_index_ = 2;
    int truncation_ = 16;
    int fiber_top_ = 0;
    std::optional<int> period_;
    std::map<Bidegree, AbelianGroup> entries_;
    std::map<int, std::size_t> shadow_;
};

/// d_r(source) -> target of the given rank (number of Z/p summands hit).
struct Arrow {
    Bidegree source;
    Bidegree target;
    std::size_t rank = 0;
    auto operator<=>(const Arrow&) const = default;
};

struct DifferentialSpec {
    int r = 2;
    std::vector<Arrow> arrows;
    auto operator<=>(const DifferentialSpec&) const = default;
};

/// Throws ShapeMismatch when an arrow does not have bidegree (r, 1 - r).
void check_bidegrees(const DifferentialSpec& spec);

std::string to_string(const DifferentialSpec& spec);

}  // namespace ecom::specseq
