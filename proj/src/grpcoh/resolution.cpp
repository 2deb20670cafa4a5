#include "ecom/grpcoh/resolution.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "ecom/exactla/cohomology.hpp"
#include "ecom/exactla/lattice.hpp"
#include "ecom/exactla/smith.hpp"

namespace ecom::grpcoh {
namespace {

using exactla::Integer;

// h . v for v in (ZG)^r: the coordinate (i, g) moves to (i, hg).
std::vector<Integer> translate(const FiniteGroup& G, std::size_t h, const std::vector<Integer>& v) {
    const std::size_t n = G.order();
    std::vector<Integer> out(v.size());
    for (std::size_t i = 0; i < v.size() / n; ++i)
        for (std::size_t g = 0; g < n; ++g) out[i * n + G.mul(h, g)] = v[i * n + g];
    return out;
}

// Left multiplication by h on (ZG)^r as a permutation matrix.
IntMatrix translation_matrix(const FiniteGroup& G, std::size_t h, std::size_t r) {
    const std::size_t n = G.order();
    IntMatrix m(n * r, n * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t g = 0; g < n; ++g) m(i * n + G.mul(h, g), i * n + g) = 1;
    return m;
}

const IntMatrix& last_map(const FreeResolution& res) {
    return res.boundaries.empty() ? res.augmentation : res.boundaries.back();
}

// One more degree: ZG-generators of ker(last map) and the boundary they define.
void add_degree(FreeResolution& res, const ResolutionOptions& options) {
    const FiniteGroup& G = *res.group;
    const std::size_t n = G.order();
    const IntMatrix& d = last_map(res);
    const std::size_t ambient = d.cols();
    // Hermite-reduce the kernel basis: the raw transform columns carry large entries.
    const IntMatrix raw = exactla::kernel_basis(d);
    exactla::IntegerSpan hermite(ambient);
    for (std::size_t c = 0; c < raw.cols(); ++c) hermite.insert(raw.column(c));
    const IntMatrix kernel = IntMatrix::from_columns(hermite.basis(), ambient);

    std::vector<std::size_t> order(kernel.cols());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    if (options.reverse_selection) std::reverse(order.begin(), order.end());

    exactla::IntegerSpan span(ambient);
    std::vector<std::vector<Integer>> chosen;
    for (auto j : order) {
        std::vector<Integer> v = kernel.column(j);
        if (span.contains(v)) continue;
        for (std::size_t h = 0; h < n; ++h) span.insert(translate(G, h, v));
        chosen.push_back(std::move(v));
        if (span.rank() == kernel.cols()) {
            bool done = true;
            for (std::size_t c = 0; c < kernel.cols() && done; ++c) done = span.contains(kernel.column(c));
            if (done) break;
        }
    }

    IntMatrix boundary(ambient, n * chosen.size());
    for (std::size_t j = 0; j < chosen.size(); ++j)
        for (std::size_t h = 0; h < n; ++h) {
            const std::vector<Integer> col = translate(G, h, chosen[j]);
            for (std::size_t i = 0; i < ambient; ++i) boundary(i, j * n + h) = col[i];
        }
    res.ranks.push_back(chosen.size());
    res.boundaries.push_back(std::move(boundary));
}

}  // namespace

FreeResolution free_resolution(std::shared_ptr<const FiniteGroup> group, std::size_t length,
                               const ResolutionOptions& options) {
    FreeResolution res;
    res.group = std::move(group);
    res.ranks = {1};
    res.augmentation = IntMatrix(1, res.group->order());
    for (std::size_t g = 0; g < res.group->order(); ++g) res.augmentation(0, g) = 1;
    extend_resolution(res, length, options);
    return res;
}

void extend_resolution(FreeResolution& res, std::size_t length, const ResolutionOptions& options) {
    while (res.length() < length) add_degree(res, options);
    verify_resolution(res);
}

void verify_resolution(const FreeResolution& res) {
    const FiniteGroup& G = *res.group;
    const std::size_t n = G.order();
    if (res.ranks.empty() || res.ranks[0] != 1 || res.boundaries.size() != res.length())
        throw ResolutionFailure("malformed resolution");
    auto map_at = [&](std::size_t k) -> const IntMatrix& { return k == 0 ? res.augmentation : res.boundary(k); };
    for (std::size_t k = 1; k <= res.length(); ++k) {
        const IntMatrix& d = res.boundary(k);
        if (d.rows() != n * res.ranks[k - 1] || d.cols() != n * res.ranks[k])
            throw ResolutionFailure("boundary " + std::to_string(k) + " has the wrong shape");
        if (!(map_at(k - 1) * d).is_zero()) throw ResolutionFailure("∂∂ != 0 at degree " + std::to_string(k));
        for (auto s : G.generators())
            if (translation_matrix(G, s, res.ranks[k - 1]) * d != d * translation_matrix(G, s, res.ranks[k]))
                throw ResolutionFailure("boundary " + std::to_string(k) + " is not ZG-linear");
    }
    // Exactness at F_k for 0 <= k < L, and ε surjective.
    if (exactla::invariant_factors(res.augmentation) != std::vector<Integer>{1})
        throw ResolutionFailure("augmentation is not onto Z");
    for (std::size_t k = 0; k < res.length(); ++k)
        if (!exactla::cohomology_at(res.boundary(k + 1), map_at(k)).is_zero())
            throw ResolutionFailure("not exact at degree " + std::to_string(k));
}

std::string serialize_resolution(const FreeResolution& res) {
    std::ostringstream os;
    os << "ecom-resolution " << kResolutionAlgorithmVersion << '\n';
    os << "group " << res.group->content_hash() << '\n';
    os << "length " << res.length() << '\n';
    os << "ranks";
    for (auto r : res.ranks) os << ' ' << r;
    os << '\n';
    for (std::size_t k = 1; k <= res.length(); ++k) {
        const IntMatrix& d = res.boundary(k);
        os << "boundary " << k << ' ' << d.rows() << ' ' << d.cols() << '\n';
        // Sparse triples keep the files small.
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j)
                if (sgn(d(i, j)) != 0) os << i << ' ' << j << ' ' << d(i, j).get_str() << '\n';
        os << "end\n";
    }
    return os.str();
}

FreeResolution deserialize_resolution(const std::string& text, std::shared_ptr<const FiniteGroup> group) {
    std::istringstream is(text);
    std::string tag;
    int version = 0;
    if (!(is >> tag >> version) || tag != "ecom-resolution") throw ParseError("not a resolution file");
    if (version != kResolutionAlgorithmVersion) throw ParseError("resolution file has version " + std::to_string(version));
    std::string hash;
    if (!(is >> tag >> hash) || tag != "group") throw ParseError("missing group line");
    if (hash != group->content_hash()) throw ParseError("resolution file belongs to a different group");
    std::size_t length = 0;
    if (!(is >> tag >> length) || tag != "length") throw ParseError("missing length line");
    if (!(is >> tag) || tag != "ranks") throw ParseError("missing ranks line");

    FreeResolution res;
    res.group = std::move(group);
    res.ranks.resize(length + 1);
    for (auto& r : res.ranks)
        if (!(is >> r)) throw ParseError("truncated ranks");
    res.augmentation = IntMatrix(1, res.group->order());
    for (std::size_t g = 0; g < res.group->order(); ++g) res.augmentation(0, g) = 1;
    for (std::size_t k = 1; k <= length; ++k) {
        std::size_t kk = 0, rows = 0, cols = 0;
        if (!(is >> tag >> kk >> rows >> cols) || tag != "boundary" || kk != k) throw ParseError("bad boundary header");
        IntMatrix d(rows, cols);
        for (;;) {
            std::string first;
            if (!(is >> first)) throw ParseError("truncated boundary");
            if (first == "end") break;
            std::size_t i = std::stoul(first), j = 0;
            std::string value;
            if (!(is >> j >> value) || i >= rows || j >= cols) throw ParseError("bad boundary entry");
            d(i, j) = Integer(value);
        }
        res.boundaries.push_back(std::move(d));
    }
    return res;
}

std::optional<std::filesystem::path> ResolutionCache::path_for(const FiniteGroup& g) const {
    if (!dir_) return std::nullopt;
    return *dir_ / ("resolution-" + g.content_hash().substr(0, 24) + "-v" +
                    std::to_string(kResolutionAlgorithmVersion) + ".txt");
}

std::optional<FreeResolution> ResolutionCache::load(std::shared_ptr<const FiniteGroup> group,
                                                    std::size_t min_length) const {
    const auto path = path_for(*group);
    if (!path || !std::filesystem::exists(*path)) return std::nullopt;
    std::ifstream in(*path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        FreeResolution res = deserialize_resolution(buf.str(), group);
        if (res.length() < min_length) return std::nullopt;
        verify_resolution(res);
        return res;
    } catch (const Error&) {
        // A damaged or stale file is recomputed and overwritten.
        return std::nullopt;
    }
}

void ResolutionCache::store(const FreeResolution& res) const {
    const auto path = path_for(*res.group);
    if (!path) return;
    std::filesystem::create_directories(path->parent_path());
    const auto tmp = path->string() + ".tmp." + std::to_string(std::hash<std::string>{}(path->string()) ^
                                                               reinterpret_cast<std::uintptr_t>(&res));
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << serialize_resolution(res);
        if (!out) throw ConfigError("cannot write resolution cache file " + tmp);
    }
    std::filesystem::rename(tmp, *path);
}

namespace {

std::mutex g_mutex;
std::optional<std::filesystem::path> g_cache_dir;
std::map<std::string, std::shared_ptr<const FreeResolution>> g_memo;

}  // namespace

void set_resolution_cache_dir(std::optional<std::filesystem::path> dir) {
    std::lock_guard lock(g_mutex);
    g_cache_dir = std::move(dir);
}

std::optional<std::filesystem::path> resolution_cache_dir() {
    std::lock_guard lock(g_mutex);
    return g_cache_dir;
}

std::shared_ptr<const FreeResolution> resolution_for(std::shared_ptr<const FiniteGroup> group, std::size_t length) {
    std::lock_guard lock(g_mutex);
    const std::string key = group->content_hash();
    auto it = g_memo.find(key);
    if (it != g_memo.end() && it->second->length() >= length) return it->second;

    const ResolutionCache cache(g_cache_dir);
    std::shared_ptr<const FreeResolution> out;
    if (auto loaded = cache.load(group, length)) {
        out = std::make_shared<const FreeResolution>(std::move(*loaded));
    } else {
        FreeResolution res = it != g_memo.end() ? *it->second : free_resolution(group, 0);
        extend_resolution(res, length);
        out = std::make_shared<const FreeResolution>(std::move(res));
        cache.store(*out);
    }
    g_memo[key] = out;
    return out;
}

}  // namespace ecom::grpcoh
