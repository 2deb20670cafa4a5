#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ecom/exactla/int_matrix.hpp"
#include "ecom/grpcoh/finite_group.hpp"

namespace ecom::grpcoh {

using exactla::IntMatrix;

/// Z^n with a left G-action by integer matrices on column vectors.
/// Construction verifies rho(gh) = rho(g) rho(h) over the whole multiplication table.
class GroupModule {
public:
    /// `generator_action[k]` is the matrix of group.generators()[k].
    static GroupModule from_generators(std::shared_ptr<const FiniteGroup> group, std::string name,
                                       std::size_t rank, const std::vector<IntMatrix>& generator_action);
    static GroupModule from_function(std::shared_ptr<const FiniteGroup> group, std::string name, std::size_t rank,
                                     const std::function<IntMatrix(std::size_t)>& action);

    const FiniteGroup& group() const { return *group_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
    const std::string& name() const { return name_; }
    std::size_t rank() const { return rank_; }
    const IntMatrix& action(std::size_t element) const { return action_[element]; }
    /// Matrices of the designated generators, in group order.
    std::vector<IntMatrix> generator_matrices() const;

    /// Character value (trace) at each element.
    std::vector<long> character() const;

    /// The invariant sublattice {v : g v = v for all g}, as columns.
    IntMatrix invariants_brute_force() const;

private:
    GroupModule(std::shared_ptr<const FiniteGroup> g, std::string name, std::size_t rank, std::vector<IntMatrix> act);
    void verify() const;

    std::shared_ptr<const FiniteGroup> group_;
    std::string name_;
    std::size_t rank_;
    std::vector<IntMatrix> action_;
};

GroupModule tensor(const GroupModule& a, const GroupModule& b);
GroupModule direct_sum(const GroupModule& a, const GroupModule& b);

GroupModule trivial_module(std::shared_ptr<const FiniteGroup> g, std::size_t rank = 1);
GroupModule sign_module(std::shared_ptr<const FiniteGroup> g);
/// The permutation module Z^n of Σ_n (or any permutation group on n points).
GroupModule permutation_module(std::shared_ptr<const FiniteGroup> g);

/// Catalog for Σ3 = <σ = (123), τ = (12)>:
///   trivial, sign, standard (M), standard' (M', degree-4 flag cohomology basis),
///   standard⊗standard (M⊗M), standard⊗sign (M_S).
/// ASCII spellings with '*' in place of '⊗' and the short names Z, S, M, M', M⊗M, M_S are accepted.
GroupModule sigma3_module(const std::string& name);
std::vector<std::string> sigma3_module_names();
std::shared_ptr<const FiniteGroup> sigma3();

}  // namespace ecom::grpcoh
