#include "ecom/specseq/serre.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "ecom/coinv/representation.hpp"
#include "ecom/error.hpp"
#include "ecom/grpcoh/cohomology.hpp"
#include "json.hpp"

namespace ecom::specseq {

using exactla::AbelianGroup;
using exactla::Integer;

namespace {

constexpr int kMaxPeriod = 8;

AbelianGroup localize(const AbelianGroup& g, unsigned p) { return exactla::p_primary(g, p); }

// Removes k summands Z/p; false if there are fewer.
bool remove_cyclic(AbelianGroup& g, unsigned p, std::size_t k) {
    std::vector<Integer> t = g.torsion();
    for (std::size_t i = 0; i < k; ++i) {
        auto it = std::find(t.begin(), t.end(), Integer(p));
        if (it == t.end()) return false;
        t.erase(it);
    }
    g = AbelianGroup(g.free_rank(), t);
    return true;
}

}  // namespace

BigradedPage serre_e2_over_bg(const FiniteGroup& group, const std::map<int, GroupModule>& fiber_reps, unsigned p,
                              int truncation) {
    if (fiber_reps.empty()) throw ConfigError("no fiber rows given");
    const int top = fiber_reps.rbegin()->first;
    if (fiber_reps.begin()->first < 0) throw ConfigError("negative fiber degree");
    for (const auto& [q, m] : fiber_reps)
        if (m.group().content_hash() != group.content_hash())
            throw ConfigError("row " + std::to_string(q) + " is a module over a different group");

    const int limit = truncation + 2;
    const int extra = limit + kMaxPeriod;
    std::map<int, std::vector<AbelianGroup>> h;
    for (const auto& [q, m] : fiber_reps) {
        auto groups = grpcoh::group_cohomology_range(m, static_cast<std::size_t>(extra));
        for (auto& g : groups) g = localize(g, p);
        h[q] = std::move(groups);
    }

    std::optional<int> period;
    for (int cand = 1; cand <= kMaxPeriod && !period; ++cand) {
        bool ok = true;
        for (const auto& [q, gs] : h)
            for (int c = 1; c + cand <= extra && ok; ++c)
                if (gs[c] != gs[c + cand]) ok = false;
        if (ok) period = cand;
    }
    if (!period) throw ResolutionFailure("no column period <= 8 found for the E2 page");

    BigradedPage page(p, 2, truncation, top, period);
    for (const auto& [q, gs] : h) {
        for (int c = 0; c <= limit; ++c) page.set(c, q, gs[c]);
        if (gs[0].free_rank() > 0) page.set_shadow(q, gs[*period].torsion().size());
    }
    return page;
}

std::vector<std::vector<DifferentialSpec>> forced_differentials(const BigradedPage& page, int top_dimension) {
    if (!page.period()) throw ConfigError("forced differential search needs a periodic page");
    const int P = *page.period();
    const int C = page.column_limit();
    const int T = page.truncation();
    const std::vector<int> rows = page.rows();
    const int maxq = page.fiber_top();

    // Free parts cannot be killed by the search; they must already vanish above the top dimension.
    for (const auto& [b, g] : page.entries())
        if (g.free_rank() > 0 && b.col + b.row > top_dimension && b.col + b.row <= T) return {};

    auto row_index = [&](int q) -> int {
        auto it = std::find(rows.begin(), rows.end(), q);
        return it == rows.end() ? -1 : static_cast<int>(it - rows.begin());
    };
    auto res_dim = [&](int q, int res) { return page.torsion_dim(res == 0 ? P : res, q); };

    struct Var {
        int r, q, res;
        std::size_t cap;
    };
    std::vector<Var> vars;
    for (int r = 2; r <= maxq + 1; ++r)
        for (int q : rows)
            for (int res = 0; res < P; ++res) {
                const int tq = q - r + 1;
                if (tq < 0 || row_index(tq) < 0) continue;
                const std::size_t s = res_dim(q, res), t = res_dim(tq, (res + r) % P);
                if (s && t) vars.push_back({r, q, res, std::min(s, t)});
            }

    const std::size_t nrows = rows.size();
    std::vector<std::size_t> start((C + 1) * nrows);
    for (int c = 0; c <= C; ++c)
        for (std::size_t i = 0; i < nrows; ++i)
            start[c * nrows + i] = c == 0 ? page.shadow(rows[i]) : page.torsion_dim(c, rows[i]);

    using Key = std::vector<std::tuple<int, int, int, std::size_t>>;
    std::map<Key, std::vector<DifferentialSpec>> found;
    std::vector<std::size_t> choice(vars.size(), 0);
    for (;;) {
        std::map<std::tuple<int, int, int>, std::size_t> var;
        for (std::size_t i = 0; i < vars.size(); ++i) var[{vars[i].r, vars[i].q, vars[i].res}] = choice[i];

        std::vector<std::size_t> dim = start;
        std::vector<DifferentialSpec> specs;
        Key key;
        for (int r = 2; r <= maxq + 1; ++r) {
            std::vector<std::size_t> out(dim.size(), 0);
            for (int c = 0; c <= C; ++c)
                for (std::size_t i = 0; i < nrows; ++i) {
                    auto it = var.find({r, rows[i], c % P});
                    if (it != var.end()) out[c * nrows + i] = std::min(it->second, dim[c * nrows + i]);
                }
            std::vector<std::size_t> next = dim;
            DifferentialSpec spec{r, {}};
            for (int c = 0; c + r <= C; ++c)
                for (std::size_t i = 0; i < nrows; ++i) {
                    const int tq = rows[i] - r + 1;
                    const int ti = row_index(tq);
                    if (ti < 0) continue;
                    const std::size_t s = c * nrows + i, t = (c + r) * nrows + ti;
                    const std::size_t k = std::min(out[s], dim[t] - out[t]);
                    if (k == 0) continue;
                    next[s] -= k;
                    next[t] -= k;
                    spec.arrows.push_back({{c, rows[i]}, {c + r, tq}, k});
                    if (c + rows[i] < T) key.emplace_back(r, c, rows[i], k);
                }
            dim = std::move(next);
            if (!spec.arrows.empty()) specs.push_back(std::move(spec));
        }

        bool vanishes = true;
        for (int c = 1; c <= C && vanishes; ++c)
            for (std::size_t i = 0; i < nrows; ++i) {
                const int n = c + rows[i];
                if (n > top_dimension && n <= T && dim[c * nrows + i] != 0) {
                    vanishes = false;
                    break;
                }
            }
        if (vanishes) found.emplace(std::move(key), std::move(specs));

        std::size_t pos = 0;
        while (pos < vars.size() && choice[pos] == vars[pos].cap) choice[pos++] = 0;
        if (pos == vars.size()) break;
        ++choice[pos];
    }

    std::vector<std::vector<DifferentialSpec>> result;
    for (auto& [k, s] : found) result.push_back(std::move(s));
    return result;
}

std::vector<DifferentialSpec> unique_forced_differentials(const BigradedPage& page, int top_dimension) {
    return unique_solution(forced_differentials(page, top_dimension), top_dimension);
}

std::vector<DifferentialSpec> unique_solution(std::vector<std::vector<DifferentialSpec>> sols, int top_dimension) {
    if (sols.empty())
        throw NoSolution("no differential assignment makes E∞ vanish above degree " + std::to_string(top_dimension));
    if (sols.size() > 1) {
        std::ostringstream os;
        os << sols.size() << " differential assignments make E∞ vanish above degree " << top_dimension;
        for (const auto& s : sols) {
            os << "\n  {";
            for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "; " : "") << to_string(s[i]);
            os << "}";
        }
        throw Ambiguous(os.str());
    }
    return std::move(sols.front());
}

BigradedPage run_to_e_infinity(const BigradedPage& page, const std::vector<DifferentialSpec>& specs) {
    BigradedPage cur = page;
    const unsigned p = page.prime();
    for (const DifferentialSpec& spec : specs) {
        check_bidegrees(spec);
        if (spec.r < cur.page_index())
            throw ConfigError("differential d" + std::to_string(spec.r) + " given after page " +
                              std::to_string(cur.page_index()));
        cur.set_page_index(spec.r);
        for (const Arrow& a : spec.arrows) {
            const auto where = [](Bidegree b) {
                return "(" + std::to_string(b.col) + "," + std::to_string(b.row) + ")";
            };
            AbelianGroup src = cur.at(a.source);
            AbelianGroup tgt = cur.at(a.target);
            if (!remove_cyclic(tgt, p, a.rank))
                throw RankTooLarge("d" + std::to_string(spec.r) + " rank " + std::to_string(a.rank) +
                                   " exceeds target " + where(a.target) + " = " + tgt.to_string());
            if (a.source.col == 0 && src.free_rank() > 0) {
                const std::size_t sh = cur.shadow(a.source.row);
                if (sh < a.rank)
                    throw RankTooLarge("d" + std::to_string(spec.r) + " rank " + std::to_string(a.rank) +
                                       " exceeds the free source " + where(a.source));
                cur.set_shadow(a.source.row, sh - a.rank);
            } else if (!remove_cyclic(src, p, a.rank)) {
                throw RankTooLarge("d" + std::to_string(spec.r) + " rank " + std::to_string(a.rank) +
                                   " exceeds source " + where(a.source) + " = " + src.to_string());
            }
            cur.set(a.source.col, a.source.row, src);
            cur.set(a.target.col, a.target.row, tgt);
        }
        cur.set_page_index(spec.r + 1);
    }
    BigradedPage out(p, cur.page_index(), page.truncation(), page.fiber_top(), std::nullopt);
    for (const auto& [b, g] : cur.entries())
        if (b.col + b.row <= page.truncation()) out.set(b.col, b.row, g);
    for (const auto& [q, d] : cur.shadows()) out.set_shadow(q, d);
    return out;
}

std::vector<AbelianGroup> assemble_total(const BigradedPage& page, std::size_t group_order) {
    const std::size_t p = page.prime();
    if (group_order % (p * p) == 0)
        throw ExtensionAmbiguous(std::to_string(p) + "^2 divides the group order " + std::to_string(group_order));
    std::vector<AbelianGroup> h(page.truncation() + 1);
    for (const auto& [b, g] : page.entries()) {
        const int n = b.col + b.row;
        if (n > page.truncation()) continue;
        for (const auto& t : g.torsion())
            if (t != Integer(static_cast<unsigned long>(p)))
                throw ExtensionAmbiguous("entry " + g.to_string() + " is not elementary");
        h[n] = h[n] + g;
    }
    return h;
}

FibrationSpec parse_fibration(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("fibration config: ") + e.what());
    }
    FibrationSpec s;
    try {
        s.name = j.at("name").get<std::string>();
        s.description = j.value("description", "");
        s.group_name = j.at("group").get<std::string>();
        s.prime = j.at("prime").get<unsigned>();
        s.top_dimension = j.at("top_dimension").get<int>();
        s.truncation = j.value("truncation", kDefaultTruncation);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("fibration config: ") + e.what());
    }
    if (s.group_name != "S3") throw UnknownName("group '" + s.group_name + "' (only S3 is available)");
    if (s.prime < 2) throw ConfigError("prime must be >= 2");

    if (j.contains("fiber")) {
        s.fiber = j.at("fiber").get<std::string>();
        if (s.fiber == "flag3") {
            for (int d = 0; d <= 3; ++d) s.rows.emplace(2 * d, coinv::sn_degree_representation(3, d));
        } else if (s.fiber == "flag3_square") {
            for (int q = 0; q <= 12; q += 2) s.rows.emplace(q, coinv::flag_square_representation(q));
        } else {
            throw UnknownName("fiber '" + s.fiber + "'");
        }
    } else if (j.contains("rows")) {
        s.fiber = "rows";
        for (const auto& [key, names] : j.at("rows").items()) {
            int q = 0;
            try {
                q = std::stoi(key);
            } catch (const std::exception&) {
                throw ConfigError("row key '" + key + "' is not an integer");
            }
            std::optional<GroupModule> m;
            for (const auto& n : names) {
                GroupModule piece = grpcoh::sigma3_module(n.get<std::string>());
                m = m ? grpcoh::direct_sum(*m, piece) : piece;
            }
            if (m) s.rows.emplace(q, *m);
        }
    } else {
        throw ConfigError("fibration config needs 'fiber' or 'rows'");
    }
    return s;
}

FibrationSpec load_fibration(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fibration(ss.str());
}

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("ECOM_DATA_DIR"); env && *env) return env;
    return ECOM_DATA_DIR;
}

std::vector<std::string> bundled_fibrations() {
    std::vector<std::string> names;
    const auto dir = data_dir() / "fibrations";
    if (!std::filesystem::exists(dir)) return names;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
    std::sort(names.begin(), names.end());
    return names;
}

FibrationSpec bundled_fibration(const std::string& name) {
    const auto path = data_dir() / "fibrations" / (name + ".json");
    if (!std::filesystem::exists(path)) throw UnknownName("fibration '" + name + "'");
    return load_fibration(path);
}

SerreRun run_serre(const FibrationSpec& spec) {
    SerreRun run{spec, {}, {}, {}, {}, {}, {}};
    const auto group = grpcoh::sigma3();
    run.e2 = serre_e2_over_bg(*group, spec.rows, spec.prime, spec.truncation);
    run.solutions = forced_differentials(run.e2, spec.top_dimension);
    run.differentials = unique_solution(run.solutions, spec.top_dimension);
    run.e_infinity = run_to_e_infinity(run.e2, run.differentials);
    run.cohomology = assemble_total(run.e_infinity, group->order());
    run.mod_p = exactla::mod_p_series(run.cohomology, spec.prime).truncate(spec.top_dimension);
    return run;
}

}  // namespace ecom::specseq
