#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ecom/exactla/int_matrix.hpp"
#include "ecom/grpcoh/finite_group.hpp"

namespace ecom::grpcoh {

using exactla::IntMatrix;

inline constexpr int kResolutionAlgorithmVersion = 1;

/// Free ZG-resolution F_L -> ... -> F_0 -> Z of the trivial module.
///
/// F_k = (ZG)^{r_k} with Z-basis index j * |G| + g (generator j, group element g).
/// boundary(k) is the matrix of ∂_k : F_k -> F_{k-1}, k >= 1; augmentation is the
/// 1 x |G| row of ones.
struct FreeResolution {
    std::shared_ptr<const FiniteGroup> group;
    std::vector<std::size_t> ranks;
    IntMatrix augmentation;
    std::vector<IntMatrix> boundaries;

    std::size_t length() const { return ranks.empty() ? 0 : ranks.size() - 1; }
    const IntMatrix& boundary(std::size_t k) const { return boundaries.at(k - 1); }
};

struct ResolutionOptions {
    /// Walk kernel candidates back to front; used to check that cohomology does not depend on the choice.
    bool reverse_selection = false;
};

FreeResolution free_resolution(std::shared_ptr<const FiniteGroup> group, std::size_t length,
                               const ResolutionOptions& options = {});

/// Adds degrees until the resolution reaches `length`.
void extend_resolution(FreeResolution& res, std::size_t length, const ResolutionOptions& options = {});

/// ∂∂ = 0, ZG-equivariance on generators, and exactness at every internal degree.
/// Throws ResolutionFailure.
void verify_resolution(const FreeResolution& res);

/// Versioned text form: ranks and boundary matrices.
std::string serialize_resolution(const FreeResolution& res);
FreeResolution deserialize_resolution(const std::string& text, std::shared_ptr<const FiniteGroup> group);

/// Disk-backed store. Files are content-addressed by (group hash, algorithm version);
/// a stored resolution serves every length up to its own.
class ResolutionCache {
public:
    explicit ResolutionCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

    std::optional<FreeResolution> load(std::shared_ptr<const FiniteGroup> group, std::size_t min_length) const;
    /// Write-temp-then-rename.
    void store(const FreeResolution& res) const;
    std::optional<std::filesystem::path> path_for(const FiniteGroup& g) const;

private:
    std::optional<std::filesystem::path> dir_;
};

/// Process-wide cache directory used by resolution_for; empty disables disk caching.
void set_resolution_cache_dir(std::optional<std::filesystem::path> dir);
std::optional<std::filesystem::path> resolution_cache_dir();

/// Memoized resolution of at least `length`, consulting the disk cache first.
std::shared_ptr<const FreeResolution> resolution_for(std::shared_ptr<const FiniteGroup> group, std::size_t length);

}  // namespace ecom::grpcoh
