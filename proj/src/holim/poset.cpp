#include "ecom/holim/poset.hpp"

#include <algorithm>
#include <sstream>

#include "ecom/error.hpp"

namespace ecom::holim {

PosetSn::PosetSn(int n) : n_(n) {
    if (n < 0 || n > 10) throw ConfigError("poset size out of range");
    for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
        Subset s;
        for (int i = 0; i <= n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        objects_.push_back(s);
    }
    std::sort(objects_.begin(), objects_.end(), [](const Subset& a, const Subset& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    chains_.resize(2);
    for (std::size_t i = 0; i < size(); ++i) chains_[1].push_back({i});
    while (true) {
        std::vector<Chain> next;
        for (const auto& c : chains_.back())
            for (std::size_t j = 0; j < size(); ++j)
                if (less(c.back(), j)) {
                    Chain e = c;
                    e.push_back(j);
                    next.push_back(std::move(e));
                }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        chains_.push_back(std::move(next));
    }
}

std::size_t PosetSn::index_of(const Subset& s) const {
    auto it = std::find(objects_.begin(), objects_.end(), s);
    if (it == objects_.end()) throw UnknownName("subset not in S(" + std::to_string(n_) + ")");
    return static_cast<std::size_t>(it - objects_.begin());
}

bool PosetSn::less(std::size_t a, std::size_t b) const {
    const Subset& x = objects_.at(a);
    const Subset& y = objects_.at(b);
    return x.size() < y.size() && std::includes(y.begin(), y.end(), x.begin(), x.end());
}

const std::vector<Chain>& PosetSn::chains(std::size_t length) const {
    static const std::vector<Chain> none;
    if (length == 0 || length >= chains_.size()) return none;
    return chains_[length];
}

std::size_t PosetSn::chain_index(const Chain& c) const {
    const auto& list = chains(c.size());
    auto it = std::lower_bound(list.begin(), list.end(), c);
    if (it == list.end() || *it != c) throw ShapeMismatch("not a nondegenerate chain");
    return static_cast<std::size_t>(it - list.begin());
}

std::string PosetSn::name(std::size_t i) const {
    std::ostringstream os;
    os << "(";
    const Subset& s = objects_.at(i);
    for (std::size_t j = 0; j < s.size(); ++j) os << (j ? "," : "") << s[j];
    os << ")";
    return os.str();
}

PosetSn poset(int n) { return PosetSn(n); }

}  // namespace ecom::holim
