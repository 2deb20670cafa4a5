#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ecom::grpcoh {

using Permutation = std::vector<std::size_t>;

/// Finite permutation group, closed from its generators.
///
/// Elements are indexed in breadth-first order from the identity (index 0);
/// the product is composition, (g*h)(x) = g(h(x)).
class FiniteGroup {
public:
    FiniteGroup(std::string name, std::size_t degree, std::vector<Permutation> generators);

    const std::string& name() const { return name_; }
    std::size_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    std::size_t identity() const { return 0; }

    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& element(std::size_t i) const { return elements_[i]; }
    /// Indices of the designated generators.
    const std::vector<std::size_t>& generators() const { return generators_; }

    std::size_t mul(std::size_t g, std::size_t h) const { return table_[g * order() + h]; }
    std::size_t inverse(std::size_t g) const { return inverse_[g]; }
    std::size_t index_of(const Permutation& p) const;

    /// Each element as generator * (earlier element), following the closure order.
    /// parent(0) is meaningless; for g > 0, element(g) = element(gen) * element(parent).
    std::size_t word_generator(std::size_t g) const { return word_gen_[g]; }
    std::size_t word_parent(std::size_t g) const { return word_parent_[g]; }

    /// Stable text form of the multiplication table; hashed for cache keys.
    std::string canonical_text() const;
    std::string content_hash() const;

private:
    std::string name_;
    std::size_t degree_;
    std::vector<Permutation> elements_;
    std::vector<std::size_t> generators_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> word_gen_, word_parent_;
};

/// Σ_n generated by the n-cycle (1 2 ... n) and the transposition (1 2); 1 <= n <= 6.
FiniteGroup symmetric_group(std::size_t n);
/// C_n generated by the n-cycle.
FiniteGroup cyclic_group(std::size_t n);

Permutation compose(const Permutation& g, const Permutation& h);

}  // namespace ecom::grpcoh
