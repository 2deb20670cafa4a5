#include "ecom/grpcoh/finite_group.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "ecom/error.hpp"
#include "ecom/util/hash.hpp"

namespace ecom::grpcoh {

Permutation compose(const Permutation& g, const Permutation& h) {
    Permutation out(h.size());
    for (std::size_t x = 0; x < h.size(); ++x) out[x] = g[h[x]];
    return out;
}

FiniteGroup::FiniteGroup(std::string name, std::size_t degree, std::vector<Permutation> generators)
    : name_(std::move(name)), degree_(degree) {
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0);
    for (const auto& g : generators) {
        if (g.size() != degree) throw ShapeMismatch("generator acts on the wrong number of points");
        std::vector<bool> seen(degree, false);
        for (auto x : g) {
            if (x >= degree || seen[x]) throw ShapeMismatch("generator is not a permutation");
            seen[x] = true;
        }
    }

    std::map<Permutation, std::size_t> index;
    elements_.push_back(id);
    word_gen_.push_back(0);
    word_parent_.push_back(0);
    index[id] = 0;
    for (std::size_t head = 0; head < elements_.size(); ++head) {
        for (std::size_t k = 0; k < generators.size(); ++k) {
            Permutation next = compose(generators[k], elements_[head]);
            if (index.count(next)) continue;
            index[next] = elements_.size();
            elements_.push_back(std::move(next));
            word_gen_.push_back(k);
            word_parent_.push_back(head);
        }
    }
    // Generators by index; a generator equal to an earlier one or to the identity is dropped.
    for (const auto& g : generators) {
        const std::size_t i = index.at(g);
        bool dup = i == 0;
        for (auto j : generators_) dup = dup || j == i;
        if (!dup) generators_.push_back(i);
    }
    // word_gen_ refers to positions in the raw generator list; remap to element indices.
    for (std::size_t g = 1; g < elements_.size(); ++g) word_gen_[g] = index.at(generators[word_gen_[g]]);

    const std::size_t n = elements_.size();
    table_.assign(n * n, 0);
    inverse_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t c = index.at(compose(elements_[a], elements_[b]));
            table_[a * n + b] = c;
            if (c == 0) inverse_[a] = b;
        }
}

std::size_t FiniteGroup::index_of(const Permutation& p) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == p) return i;
    throw UnknownName("permutation is not an element of " + name_);
}

std::string FiniteGroup::canonical_text() const {
    std::ostringstream os;
    os << "degree " << degree_ << "\norder " << order() << "\nelements";
    for (const auto& e : elements_) {
        os << ' ';
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    }
    os << "\ngenerators";
    for (auto g : generators_) os << ' ' << g;
    os << '\n';
    return os.str();
}

std::string FiniteGroup::content_hash() const { return util::sha256_hex(canonical_text()); }

FiniteGroup symmetric_group(std::size_t n) {
    if (n < 1 || n > 6) throw ShapeMismatch("symmetric_group supports 1 <= n <= 6");
    Permutation cycle(n), swap(n);
    for (std::size_t i = 0; i < n; ++i) {
        cycle[i] = (i + 1) % n;
        swap[i] = i;
    }
    if (n >= 2) std::swap(swap[0], swap[1]);
    return FiniteGroup("S" + std::to_string(n), n, {cycle, swap});
}

FiniteGroup cyclic_group(std::size_t n) {
    if (n < 1) throw ShapeMismatch("cyclic_group needs n >= 1");
    Permutation cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    return FiniteGroup("C" + std::to_string(n), n, {cycle});
}

}  // namespace ecom::grpcoh
