#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ecom/exactla/fp_matrix.hpp"
#include "ecom/exactla/poincare.hpp"
#include "ecom/specseq/chern.hpp"

namespace ecom::specseq {

using exactla::FpMatrix;
using exactla::PoincareSeries;

/// Basis element z_S β^a of Λ[z_1, z_3, ...] ⊗ F_p[β_1..β_k]: `odd` is a bitmask
/// over the exterior generators (z_{2i+1} is bit i), `base` the exponents of the β's.
struct KoszulMonomial {
    std::uint32_t odd = 0;
    std::vector<int> base;
    auto operator<=>(const KoszulMonomial&) const = default;
};

/// Λ[z_1, z_3, ..., z_{2n-1}] ⊗ F_p[β_1..β_k] with D(z_{2i-1}) = c_i mod p, D(β_j) = 0,
/// extended as a derivation with the Koszul sign rule. Held up to a total degree bound.
class KoszulAlgebra {
public:
    using Vector = std::map<KoszulMonomial, std::uint32_t>;

    KoszulAlgebra(const ChernVector& chern, std::size_t active, std::uint32_t p, int max_degree);

    std::uint32_t prime() const { return p_; }
    std::size_t odd_count() const { return n_; }
    std::size_t base_rank() const { return k_; }
    int max_degree() const { return max_degree_; }

    static int degree(const KoszulMonomial& m);
    const std::vector<KoszulMonomial>& basis(int d) const;
    std::size_t index_of(const KoszulMonomial& m) const;

    Vector differential(const KoszulMonomial& m) const;
    /// D : A^d -> A^{d+1} as a matrix on the basis lists.
    FpMatrix differential_matrix(int d) const;
    Vector multiply(const Vector& a, const Vector& b) const;

    std::vector<std::uint32_t> coordinates(const Vector& v, int d) const;
    Vector from_coordinates(const std::vector<std::uint32_t>& c, int d) const;

    std::string to_string(const Vector& v) const;

private:
    std::uint32_t p_;
    std::size_t n_, k_, active_;
    int max_degree_;
    std::vector<Vector> transgressions_;  // D(z_{2i-1}) for active i, zero otherwise
    std::vector<std::vector<KoszulMonomial>> basis_;
    std::vector<std::map<KoszulMonomial, std::size_t>> index_;
};

/// Homology of a KoszulAlgebra with chosen cycle representatives per degree.
class KoszulHomology {
public:
    explicit KoszulHomology(const KoszulAlgebra& a);

    const KoszulAlgebra& algebra() const { return a_; }
    std::size_t dim(int d) const { return reps_.at(d).size(); }
    const std::vector<KoszulAlgebra::Vector>& representatives(int d) const { return reps_.at(d); }
    /// Coordinates of a cycle's class in the representative basis.
    std::vector<std::uint32_t> class_of(const KoszulAlgebra::Vector& cycle, int d) const;
    bool is_boundary(const KoszulAlgebra::Vector& v, int d) const;
    /// Series through degree max_degree - 1 (the top degree lacks its outgoing differential).
    PoincareSeries series() const;

private:
    const KoszulAlgebra& a_;
    std::vector<std::vector<KoszulAlgebra::Vector>> reps_;
    std::vector<FpMatrix> spans_;  // [boundaries | reps] per degree
    std::vector<std::size_t> boundary_rank_;
};

struct KoszulPageStep {
    int r = 2;                  // the page d_r acts on
    std::string generator;      // "z1"
    std::string transgression;  // c_i mod p in β's
    bool vanishes_on_page = false;
    PoincareSeries page_series;  // E_r, truncated
};

struct RingGenerator {
    std::string name;
    int degree = 0;
    std::string representative;
};

struct GradedRingPresentation {
    std::uint32_t prime = 2;
    std::vector<RingGenerator> generators;
    std::vector<std::string> relations;
    PoincareSeries poincare;
    /// "F2[z5, β]/(z5^2, β^2)".
    std::string to_string() const;
};

struct HomogeneousSpaceResult {
    ChernVector chern;
    std::vector<KoszulPageStep> pages;
    GradedRingPresentation ring;
    int truncation = 0;
};

/// U(n)/T for a torus T -> U(n) with the given weights (n rows, k columns), mod p.
/// Pages: d_{2i}(z_{2i-1}) = c_i on E_{2i}, computed as Koszul homology on the first i transgressions.
HomogeneousSpaceResult homogeneous_space_cohomology(const std::vector<std::vector<long>>& weights, std::uint32_t p,
                                                    int truncation = 16);

/// Weights [[1,0],[1,0],[0,1]]: T(2) = {diag(λ1, λ1, λ2)}.
HomogeneousSpaceResult u3t2_cohomology(std::uint32_t p, int truncation = 16);

/// U(3) modulo its center, weights [[1],[1],[1]].
HomogeneousSpaceResult pu3_cohomology(std::uint32_t p, int truncation = 16);

}  // namespace ecom::specseq
