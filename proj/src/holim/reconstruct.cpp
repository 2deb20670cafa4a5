#include "ecom/holim/reconstruct.hpp"

#include <functional>
#include <string>
#include <limits>

#include "ecom/error.hpp"

namespace ecom::holim {

namespace {

// Object indices in PosetSn(2).
constexpr std::size_t I0 = 0, I1 = 1, I2 = 2, I3 = 3, I4 = 4, I5 = 5, I6 = 6;

const PosetSn& s2() {
    static const PosetSn p(2);
    return p;
}

FpMatrix hcat(const FpMatrix& a, const FpMatrix& b) {
    FpMatrix out(a.rows(), a.cols() + b.cols(), a.prime());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    return out;
}

FpMatrix vcat(const FpMatrix& a, const FpMatrix& b) {
    FpMatrix out(a.rows() + b.rows(), a.cols(), a.prime());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), 0, b);
    return out;
}

FpMatrix negate(const FpMatrix& a) { return FpMatrix(a.rows(), a.cols(), a.prime()) - a; }

std::size_t arrow_index(std::size_t a, std::size_t b) { return s2().chain_index({a, b}); }

// A fixed value for a generating arrow when some constraint pins it.
std::optional<FpMatrix> pinned(const BlockShape& s, std::size_t a, std::size_t b) {
    for (const auto& c : s.constraints) {
        if (!c.applies({a, b}, s.degree)) continue;
        if (c.kind == MapConstraint::Kind::Equals) return c.matrix;
        if (c.kind == MapConstraint::Kind::Identity && s.dims[a] == s.dims[b])
            return FpMatrix::identity(s.dims[a], s.p);
    }
    return std::nullopt;
}

FpMatrix random_matrix(std::size_t r, std::size_t c, std::uint32_t p, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> u(0, p - 1);
    FpMatrix m(r, c, p);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, u(rng));
    return m;
}

// Rank at most `rank`, usually exactly; a negative rank draws one uniformly.
FpMatrix random_of_rank(std::size_t r, std::size_t c, std::uint32_t p, int rank, std::mt19937& rng) {
    const int top = static_cast<int>(std::min(r, c));
    if (rank < 0) rank = std::uniform_int_distribution<int>(0, top)(rng);
    rank = std::min(rank, top);
    const auto k = static_cast<std::size_t>(rank);
    return random_matrix(r, k, p, rng) * random_matrix(k, c, p, rng);
}

// Rows spanning {v : v N = 0}.
FpMatrix left_kernel(const FpMatrix& n) { return n.transpose().kernel().transpose(); }

bool for_each_matrix(std::size_t r, std::size_t c, std::uint32_t p, const std::optional<FpMatrix>& fixed,
                     const std::function<bool(const FpMatrix&)>& f) {
    if (fixed) return f(*fixed);
    FpMatrix m(r, c, p);
    const std::size_t n = r * c;
    while (true) {
        if (!f(m)) return false;
        std::size_t i = 0;
        for (; i < n; ++i) {
            const std::size_t row = i / c, col = i % c;
            const std::uint32_t v = m(row, col) + 1;
            m.set(row, col, v == p ? 0 : v);
            if (v != p) break;
        }
        if (i == n) return true;
    }
}

std::uint64_t saturating_pow(std::uint64_t p, std::uint64_t e) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
        out *= p;
    }
    return out;
}

void check_shape(const BlockShape& s) {
    if (s.dims.size() != 7) throw ShapeMismatch("a block on S(2) needs 7 dimensions");
    if (s.dims[I4] != s.dims[I6]) throw ShapeMismatch("H(0,2) and H(0,1,2) differ in dimension");
}

}  // namespace

RankProfile rank_profile(const PosetSn& poset, const Block& b, const std::vector<std::size_t>& dims) {
    RankProfile out;
    for (const auto& c : poset.arrows()) out.arrows.push_back(b.at({c[0], c[1]}).rank());
    const std::uint32_t p = b.empty() ? 2 : b.begin()->second.prime();
    for (std::size_t t = 0; t < poset.size(); ++t) {
        FpMatrix in(dims[t], 0, p);
        for (std::size_t a = 0; a < poset.size(); ++a)
            if (poset.less(a, t)) in = hcat(in, b.at({a, t}));
        out.joint_in.push_back(in.rank());
    }
    for (std::size_t a = 0; a < poset.size(); ++a) {
        FpMatrix o(0, dims[a], p);
        for (std::size_t t = 0; t < poset.size(); ++t)
            if (poset.less(a, t)) o = vcat(o, b.at({a, t}));
        out.joint_out.push_back(o.rank());
    }
    return out;
}

Block complete_block(const BlockShape& s, const FpMatrix& p03, const FpMatrix& p13, const FpMatrix& p15,
                     const FpMatrix& p25, const FpMatrix& p36, const FpMatrix& p56) {
    check_shape(s);
    Block b;
    b[{I0, I3}] = p03;
    b[{I1, I3}] = p13;
    b[{I1, I5}] = p15;
    b[{I2, I5}] = p25;
    b[{I3, I6}] = p36;
    b[{I5, I6}] = p56;
    b[{I4, I6}] = FpMatrix::identity(s.dims[I6], s.p);
    b[{I0, I4}] = p36 * p03;
    b[{I0, I6}] = b[{I0, I4}];
    b[{I2, I4}] = p56 * p25;
    b[{I2, I6}] = b[{I2, I4}];
    b[{I1, I6}] = p36 * p13;
    return b;
}

namespace {

std::optional<Block> sample_with(const BlockShape& s, std::mt19937& rng, const RankProfile* target) {
    check_shape(s);
    const auto& d = s.dims;
    auto pick = [&](std::size_t a, std::size_t b) {
        if (auto f = pinned(s, a, b)) return *f;
        const int r = target ? static_cast<int>(target->arrows[arrow_index(a, b)]) : -1;
        return random_of_rank(d[b], d[a], s.p, r, rng);
    };
    const FpMatrix p03 = pick(I0, I3), p13 = pick(I1, I3), p15 = pick(I1, I5), p25 = pick(I2, I5);
    const FpMatrix k = left_kernel(vcat(p13, negate(p15)));
    int r = -1;
    if (target) r = static_cast<int>(target->joint_in[I6]);
    const FpMatrix rows = random_of_rank(d[I6], k.rows(), s.p, r, rng) * k;
    const FpMatrix p36 = rows.block(0, 0, d[I6], d[I3]);
    const FpMatrix p56 = rows.block(0, d[I3], d[I6], d[I5]);
    Block b = complete_block(s, p03, p13, p15, p25, p36, p56);
    if (!block_constraint_failures(s2(), s.constraints, b, d, s.degree, s.p).empty()) return std::nullopt;
    return b;
}

}  // namespace

std::optional<Block> sample_block(const BlockShape& s, std::mt19937& rng) { return sample_with(s, rng, nullptr); }

std::uint64_t enumeration_bound(const BlockShape& s) {
    check_shape(s);
    const auto& d = s.dims;
    std::uint64_t e = 0;
    for (auto [a, b] : {std::pair{I0, I3}, {I1, I3}, {I1, I5}, {I2, I5}})
        if (!pinned(s, a, b)) e += d[a] * d[b];
    e += d[I6] * (d[I3] + d[I5]);
    return saturating_pow(s.p, e);
}

RobustnessReport robustness_check(const BlockShape& s, const Block& reference, std::uint64_t budget,
                                  std::uint64_t samples, std::uint32_t seed) {
    check_shape(s);
    const auto& d = s.dims;
    const PosetSn& P = s2();
    const RankProfile target = rank_profile(P, reference, d);
    RobustnessReport rep;
    rep.degree = s.degree;
    rep.reference = limits_of(cosimplicial_complex(P, reference, d, s.p, s.degree));

    auto record = [&](const Block& b) {
        if (!block_constraint_failures(P, s.constraints, b, d, s.degree, s.p).empty()) return;
        if (rank_profile(P, b, d) != target) return;
        const auto l = limits_of(cosimplicial_complex(P, b, d, s.p, s.degree));
        ++rep.examined;
        rep.observed.insert({l.lim0, l.lim1});
    };
    auto rank_is = [&](const FpMatrix& m, std::size_t a, std::size_t b) {
        return m.rank() == target.arrows[arrow_index(a, b)];
    };

    if (enumeration_bound(s) <= budget) {
        rep.exhaustive = true;
        for_each_matrix(d[I3], d[I0], s.p, pinned(s, I0, I3), [&](const FpMatrix& p03) {
            if (!rank_is(p03, I0, I3)) return true;
            return for_each_matrix(d[I3], d[I1], s.p, pinned(s, I1, I3), [&](const FpMatrix& p13) {
                if (!rank_is(p13, I1, I3) || hcat(p03, p13).rank() != target.joint_in[I3]) return true;
                return for_each_matrix(d[I5], d[I1], s.p, pinned(s, I1, I5), [&](const FpMatrix& p15) {
                    if (!rank_is(p15, I1, I5) || vcat(p13, p15).rank() != target.joint_out[I1]) return true;
                    const FpMatrix k = left_kernel(vcat(p13, negate(p15)));
                    return for_each_matrix(d[I5], d[I2], s.p, pinned(s, I2, I5), [&](const FpMatrix& p25) {
                        if (!rank_is(p25, I2, I5) || hcat(p15, p25).rank() != target.joint_in[I5]) return true;
                        return for_each_matrix(d[I6], k.rows(), s.p, std::nullopt, [&](const FpMatrix& c) {
                            const FpMatrix rows = c * k;
                            const FpMatrix p36 = rows.block(0, 0, d[I6], d[I3]);
                            const FpMatrix p56 = rows.block(0, d[I3], d[I6], d[I5]);
                            if (!rank_is(p36, I3, I6) || !rank_is(p56, I5, I6)) return true;
                            record(complete_block(s, p03, p13, p15, p25, p36, p56));
                            return true;
                        });
                    });
                });
            });
        });
        return rep;
    }

    // Random walk from the reference through blocks with the same profile: one entry of a
    // generating map changes per step, [p36 | p56] moves inside the left kernel of [p13; -p15].
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::uint32_t> unit(1, s.p - 1);
    FpMatrix g[4] = {reference.at({I0, I3}), reference.at({I1, I3}), reference.at({I1, I5}), reference.at({I2, I5})};
    const Arrow garrow[4] = {{I0, I3}, {I1, I3}, {I1, I5}, {I2, I5}};
    FpMatrix rows = hcat(reference.at({I3, I6}), reference.at({I5, I6}));
    std::set<std::string> seen;
    for (std::uint64_t step = 0; step < samples; ++step) {
        FpMatrix h[4] = {g[0], g[1], g[2], g[3]};
        FpMatrix r = rows;
        const auto move = std::uniform_int_distribution<int>(0, 4)(rng);
        if (move < 4) {
            FpMatrix& m = h[move];
            if (m.rows() == 0 || m.cols() == 0 || pinned(s, garrow[move].first, garrow[move].second)) continue;
            const auto i = std::uniform_int_distribution<std::size_t>(0, m.rows() - 1)(rng);
            const auto j = std::uniform_int_distribution<std::size_t>(0, m.cols() - 1)(rng);
            m.set(i, j, m(i, j) + unit(rng));
            if (move == 1 || move == 2) {
                const FpMatrix k = left_kernel(vcat(h[1], negate(h[2])));
                if (r.rows() && !(r * vcat(h[1], negate(h[2]))).is_zero())
                    r = random_of_rank(d[I6], k.rows(), s.p, static_cast<int>(target.joint_in[I6]), rng) * k;
            }
        } else {
            const FpMatrix k = left_kernel(vcat(h[1], negate(h[2])));
            if (r.rows() == 0 || k.rows() == 0) continue;
            const auto i = std::uniform_int_distribution<std::size_t>(0, r.rows() - 1)(rng);
            const FpMatrix c = random_matrix(1, k.rows(), s.p, rng) * k;
            for (std::size_t j = 0; j < r.cols(); ++j) r.set(i, j, r(i, j) + c(0, j));
        }
        const Block b = complete_block(s, h[0], h[1], h[2], h[3], r.block(0, 0, d[I6], d[I3]),
                                       r.block(0, d[I3], d[I6], d[I5]));
        if (!block_constraint_failures(P, s.constraints, b, d, s.degree, s.p).empty()) continue;
        if (rank_profile(P, b, d) != target) continue;
        for (int i = 0; i < 4; ++i) g[i] = h[i];
        rows = r;
        std::string key;
        for (const auto& [a, m] : b) key += m.to_string();
        if (seen.insert(key).second) record(b);
    }
    return rep;
}

BlockShape block_shape(const PosetDiagram& d, int k) {
    if (d.poset().n() != 2) throw ConfigError("block reconstruction is defined on S(2) only");
    return {d.dims(k), d.prime(), k, d.constraints()};
}

RobustnessReport robustness_check(const PosetDiagram& d, int k, std::uint64_t budget, std::uint64_t samples,
                                  std::uint32_t seed) {
    d.validate_degree(k);
    return robustness_check(block_shape(d, k), d.block(k), budget, samples, seed);
}

}  // namespace ecom::holim
