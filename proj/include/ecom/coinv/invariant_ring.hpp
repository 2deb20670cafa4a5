#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ecom/coinv/tensor.hpp"
#include "ecom/exactla/poincare.hpp"

namespace ecom::coinv {

/// Permutation in one-line notation on {1..n}.
using OneLine = std::vector<int>;

/// Σ_{ω(i) > ω(i+1)} i, positions 1-based.
int maj(const OneLine& w);
OneLine inverse(const OneLine& w);
/// All permutations of {1..n} in lexicographic order.
std::vector<OneLine> all_permutations(std::size_t n);

/// f_ω = Π_{ω⁻¹(i) > ω⁻¹(i+1)} (x1···xi) ⊗ Π_{ω(j) > ω(j+1)} (y_{ω(1)}···y_{ω(j)}).
TensorClass<Rational> descent_monomial(const OneLine& w);

/// Coordinates of a class in the full staircase-pair basis of H*(Fl_n)⊗H*(Fl_n).
std::vector<Rational> coordinates(const TensorClass<Rational>& t);
/// Rank over Q of a list of classes.
std::size_t rational_rank(const std::vector<TensorClass<Rational>>& classes);

struct NamedClass {
    std::string label;   // e.g. "ρ(x1⊗y2)"
    std::string source;  // polynomial fed to ρ
    int degree;
    TensorClass<Rational> value;
};

struct RelationCheck {
    std::string name;
    bool holds;
};

struct NormalMonomial {
    std::string label;  // "γ4^2", "γ6·γ̃6", ...
    int degree;
};

struct RingPresentation {
    std::vector<NamedClass> basis;           // the six averaged classes, degrees 0,4,6,6,8,12
    std::vector<OneLine> descent_permutations;  // ω with ρ(f_ω) = basis[i], same order
    std::vector<RelationCheck> relations;
    std::string presentation;                // Q[γ4,γ6,γ̃6]/(...)
    std::vector<NormalMonomial> normal_monomials;
    exactla::PoincareSeries poincare;
    /// γ4² = degree8_scalar · ρ(x1x2⊗y2y3); γ4² is the degree-8 basis element.
    Rational degree8_scalar;
    /// γ6γ̃6 = top_scalar · ρ(x1²x2⊗y3²y2).
    Rational top_scalar;
    /// γ4³ = cubic_scalar · γ6γ̃6 as actually computed (zero iff γ4³ = 0 holds).
    Rational cubic_scalar;

    bool all_relations_hold() const;
    /// First failing relation, or empty.
    std::string first_failure() const;
};

/// Builds the averaged descent basis, evaluates every product relation by exact rational
/// arithmetic and records the outcome of each check without throwing.
RingPresentation evaluate_invariant_ring();

/// Same, but throws RelationFailure naming the first relation whose two sides differ.
RingPresentation invariant_ring_presentation();

}  // namespace ecom::coinv
