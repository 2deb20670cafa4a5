#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "ecom/exactla/poincare.hpp"
#include "ecom/grpcoh/group_module.hpp"
#include "ecom/specseq/page.hpp"

namespace ecom::specseq {

using exactla::PoincareSeries;
using grpcoh::FiniteGroup;
using grpcoh::GroupModule;

inline constexpr int kDefaultTruncation = 16;

/// E2^{c,q} = H^c(G; R_q)_(p) for c <= truncation + 2.
///
/// The column period is the smallest P <= 8 with H^c ≅ H^{c+P} (p-locally) for every
/// row and every 1 <= c <= column_limit; it is checked on columns up to column_limit + 8.
/// Rows whose H^0 has a free part get the shadow dim H^P_(p).
BigradedPage serre_e2_over_bg(const FiniteGroup& group, const std::map<int, GroupModule>& fiber_reps, unsigned p,
                              int truncation = kDefaultTruncation);

/// Every assignment of differential ranks (one per page r, row and column residue mod
/// the period) whose E∞ vanishes in total degrees (top_dimension, truncation]. Ranks
/// are clipped to what the running page still holds. Solutions are distinct as lists
/// of arrows out of total degree < truncation and come in lexicographic order.
///
/// Only torsion takes part; a free column-0 entry contributes through its shadow.
std::vector<std::vector<DifferentialSpec>> forced_differentials(const BigradedPage& page, int top_dimension);

/// The single solution; NoSolution or Ambiguous otherwise.
std::vector<DifferentialSpec> unique_forced_differentials(const BigradedPage& page, int top_dimension);
std::vector<DifferentialSpec> unique_solution(std::vector<std::vector<DifferentialSpec>> solutions, int top_dimension);

/// Applies the specs in order. Each arrow removes `rank` Z/p summands from its source
/// (from the shadow when the source is a free column-0 entry) and from its target.
/// Entries of total degree above the truncation are dropped from the result.
BigradedPage run_to_e_infinity(const BigradedPage& page, const std::vector<DifferentialSpec>& specs);

/// H^n = ⊕_{c+q=n} E∞^{c,q} for 0 <= n <= truncation. Requires p² ∤ group_order.
std::vector<exactla::AbelianGroup> assemble_total(const BigradedPage& page, std::size_t group_order);

struct FibrationSpec {
    std::string name;
    std::string description;
    std::string group_name;
    unsigned prime = 2;
    int top_dimension = 0;
    int truncation = kDefaultTruncation;
    std::string fiber;  // "flag3", "flag3_square" or "rows"
    std::map<int, GroupModule> rows;
};

/// Reads a fibration config. Keys: name, group ("S3"), prime, top_dimension,
/// optional truncation, and either fiber ("flag3" | "flag3_square") or rows
/// (object mapping fiber degree to a list of catalog module names).
FibrationSpec load_fibration(const std::filesystem::path& path);
FibrationSpec parse_fibration(const std::string& json_text);

std::filesystem::path data_dir();
/// Names of the configs under data/fibrations, sorted.
std::vector<std::string> bundled_fibrations();
FibrationSpec bundled_fibration(const std::string& name);

struct SerreRun {
    FibrationSpec spec;
    BigradedPage e2;
    std::vector<std::vector<DifferentialSpec>> solutions;
    std::vector<DifferentialSpec> differentials;
    BigradedPage e_infinity;
    std::vector<exactla::AbelianGroup> cohomology;  // degrees 0..truncation
    PoincareSeries mod_p;                           // through top_dimension
};

/// E2, the unique forced solution, E∞, assembled groups and the mod-p series.
SerreRun run_serre(const FibrationSpec& spec);

}  // namespace ecom::specseq
