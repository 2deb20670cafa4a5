#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ecom/grpcoh/group_module.hpp"

namespace ecom::coinv {

/// Σ_n acting on the polynomial-degree-d part of the coinvariant algebra, in the
/// staircase basis (x_i -> x_{ω(i)}). For n = 3 the group is the shared Σ3 instance.
grpcoh::GroupModule sn_degree_representation(std::size_t n, int d);

/// Character values at (identity, transposition (12), 3-cycle (123)) for a Σ3 module.
std::vector<long> sigma3_class_character(const grpcoh::GroupModule& m);

/// Name among {Z, S, M} of an irreducible-rank Σ3 module, decided by its character.
/// Throws DecompositionAmbiguous otherwise.
std::string classify_sigma3_irreducible(const grpcoh::GroupModule& m);

/// One summand R_a ⊗ R_b of H^d(Fl3 × Fl3) with its catalog name.
struct KunnethSummand {
    int left_degree;   // cohomological degree of the left factor
    int right_degree;
    std::string name;  // one of Z, S, M, M⊗M, M_S
};

/// Künneth decomposition of H^d(Fl3 × Fl3; Z) under the diagonal Σ3-action, d cohomological.
/// Factor types are read off characters, the summand type follows from the tensor rules
/// (S⊗S = Z, M⊗S = S⊗M = M_S), and the total character is checked against the catalog.
std::vector<KunnethSummand> kunneth_decompose(int d);
/// Just the names, sorted Z, S, M, M_S, M⊗M.
std::vector<std::string> kunneth_names(int d);

/// The module H^d(Fl3 × Fl3; Z) itself: direct sum of kronecker products of degree representations.
grpcoh::GroupModule flag_square_representation(int d);

/// Catalog module by short name (Z, S, M, M⊗M, M_S).
grpcoh::GroupModule catalog_module(const std::string& short_name);

}  // namespace ecom::coinv
