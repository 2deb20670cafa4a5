#include "ecom/specseq/page.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ecom/error.hpp"

namespace ecom::specseq {

BigradedPage::BigradedPage(unsigned prime, int page_index, int truncation, int fiber_top,
                           std::optional<int> period)
    : prime_(prime), page_index_(page_index), truncation_(truncation), fiber_top_(fiber_top), period_(period) {
    if (period_ && *period_ <= 0) throw ConfigError("period must be positive");
}

AbelianGroup BigradedPage::at(int col, int row) const {
    if (col < 0 || row < 0 || row > fiber_top_) return AbelianGroup::zero();
    if (col > column_limit()) {
        if (!period_) return AbelianGroup::zero();
        const int p = *period_;
        const int lo = column_limit() - p + 1;
        col = lo + ((col - lo) % p);
    }
    auto it = entries_.find({col, row});
    return it == entries_.end() ? AbelianGroup::zero() : it->second;
}

void BigradedPage::set(int col, int row, AbelianGroup g) {
    if (col < 0 || row < 0 || row > fiber_top_ || col > column_limit())
        throw ShapeMismatch("entry (" + std::to_string(col) + "," + std::to_string(row) + ") outside the page");
    if (g.is_zero())
        entries_.erase({col, row});
    else
        entries_[{col, row}] = std::move(g);
}

std::size_t BigradedPage::shadow(int row) const {
    auto it = shadow_.find(row);
    return it == shadow_.end() ? 0 : it->second;
}

void BigradedPage::set_shadow(int row, std::size_t dim) {
    if (dim == 0)
        shadow_.erase(row);
    else
        shadow_[row] = dim;
}

std::vector<int> BigradedPage::rows() const {
    std::set<int> r;
    for (const auto& [b, g] : entries_) r.insert(b.row);
    for (const auto& [q, d] : shadow_) r.insert(q);
    return {r.begin(), r.end()};
}

std::size_t BigradedPage::torsion_dim(int col, int row) const {
    const AbelianGroup g = at(col, row);
    for (const auto& t : g.torsion())
        if (t != prime_)
            throw ConfigError("entry (" + std::to_string(col) + "," + std::to_string(row) + ") = " + g.to_string() +
                              " is not elementary " + std::to_string(prime_) + "-torsion");
    return g.torsion().size();
}

long long BigradedPage::euler_window(int bound) const {
    long long chi = 0;
    for (const auto& [b, g] : entries_) {
        if (b.col + b.row > bound) continue;
        const long long d = static_cast<long long>(g.torsion().size());
        chi += ((b.col + b.row) % 2 == 0) ? d : -d;
    }
    for (const auto& [q, d] : shadow_)
        if (q <= bound) chi += (q % 2 == 0) ? static_cast<long long>(d) : -static_cast<long long>(d);
    return chi;
}

std::string BigradedPage::to_string(int max_col) const {
    std::ostringstream os;
    os << "E_" << page_index_ << " (p=" << prime_ << ")\n";
    std::vector<int> rs = rows();
    std::reverse(rs.begin(), rs.end());
    for (int q : rs) {
        os << q << " |";
        for (int c = 0; c <= max_col; ++c) {
            const AbelianGroup g = at(c, q);
            os << ' ' << (g.is_zero() ? "." : g.to_string());
        }
        os << '\n';
    }
    return os.str();
}

void check_bidegrees(const DifferentialSpec& spec) {
    for (const Arrow& a : spec.arrows)
        if (a.target.col != a.source.col + spec.r || a.target.row != a.source.row - spec.r + 1)
            throw ShapeMismatch("arrow does not have bidegree (" + std::to_string(spec.r) + "," +
                                std::to_string(1 - spec.r) + ")");
}

std::string to_string(const DifferentialSpec& spec) {
    std::ostringstream os;
    os << "d" << spec.r << ":";
    for (const Arrow& a : spec.arrows)
        os << " (" << a.source.col << "," << a.source.row << ")->(" << a.target.col << "," << a.target.row
           << ")x" << a.rank;
    return os.str();
}

}  // namespace ecom::specseq
