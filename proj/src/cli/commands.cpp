#include "ecom/cli/commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ecom/cli/published.hpp"
#include "ecom/coinv/coinvariant.hpp"
#include "ecom/coinv/invariant_ring.hpp"
#include "ecom/exactla/cohomology.hpp"
#include "ecom/coinv/representation.hpp"
#include "ecom/error.hpp"
#include "ecom/exactla/smith.hpp"
#include "ecom/grpcoh/cohomology.hpp"
#include "ecom/grpcoh/resolution.hpp"
#include "ecom/holim/limits.hpp"
#include "ecom/holim/reconstruct.hpp"
#include "ecom/holim/u3.hpp"
#include "ecom/specseq/koszul.hpp"
#include "ecom/specseq/serre.hpp"

namespace ecom::cli {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
public:
    Stopwatch(Report& r, std::string stage) : r_(r), stage_(std::move(stage)), start_(Clock::now()) {}
    ~Stopwatch() {
        r_.set_timing(stage_, std::chrono::duration<double, std::milli>(Clock::now() - start_).count());
    }

private:
    Report& r_;
    std::string stage_;
    Clock::time_point start_;
};

json groups_json(const std::vector<exactla::AbelianGroup>& gs) {
    json out = json::array();
    for (const auto& g : gs) out.push_back(g.to_string());
    return out;
}

json page_json(const specseq::BigradedPage& page) {
    json out = json::array();
    for (const auto& [b, g] : page.entries()) out.push_back({{"col", b.col}, {"row", b.row}, {"group", g.to_string()}});
    return out;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw ConfigError("cannot read " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::shared_ptr<const grpcoh::FiniteGroup> resolve_group(const std::string& name) {
    if (name == "S3" || name == "Σ3" || name == "Sigma3") return grpcoh::sigma3();
    throw UnknownName("group '" + name + "' (known: S3)");
}

std::string limits_text(const holim::HigherLimits& l) {
    return "(" + std::to_string(l.lim0) + ", " + std::to_string(l.lim1) + ")";
}

}  // namespace

Report cmd_snf(const std::string& matrix_json) {
    Report r("snf");
    r.arguments()["matrix"] = matrix_json;
    r.add_input("matrix", matrix_json);
    std::vector<std::vector<long>> rows;
    try {
        rows = json::parse(matrix_json).get<std::vector<std::vector<long>>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("matrix: ") + e.what());
    }
    const auto a = exactla::IntMatrix::from_rows(rows);
    exactla::SNFDecomposition s;
    {
        Stopwatch w(r, "snf");
        s = exactla::smith_normal_form(a);
    }
    json factors = json::array();
    for (const auto& f : s.invariant_factors) factors.push_back(f.get_str());
    r.results()["invariant_factors"] = factors;
    r.results()["rank"] = s.rank();
    r.results()["cokernel"] = exactla::cohomology_at(a, exactla::IntMatrix(0, a.rows())).to_string();
    r.check_true("left * A * right = D", s.left * a * s.right == s.D, "derived");
    r.check_true("U * D * V = A", s.U * s.D * s.V == a, "derived");
    return r;
}

Report cmd_group_cohomology(const std::string& group, const std::string& module, std::size_t max_degree, unsigned p) {
    Report r("grpcoh");
    r.arguments() = {{"group", group}, {"module", module}, {"max_degree", max_degree}, {"prime", p}};
    const auto g = resolve_group(group);
    r.add_input("group", g->canonical_text());
    const grpcoh::GroupModule m = grpcoh::sigma3_module(module);
    std::vector<exactla::AbelianGroup> table;
    {
        Stopwatch w(r, "cohomology");
        table = grpcoh::group_cohomology_range(m, max_degree);
    }
    if (p != 0)
        for (auto& t : table) t = exactla::p_primary(t, p);
    r.results()["module"] = m.name();
    r.results()["rank"] = m.rank();
    r.results()["cohomology"] = groups_json(table);
    if (auto pub = published_sigma3_cohomology(module, p, max_degree))
        r.check("H^d for d <= " + std::to_string(max_degree), groups_json(*pub), groups_json(table), "published");
    return r;
}

Report cmd_flag(std::size_t n, bool square) {
    Report r("flag");
    r.arguments() = {{"n", n}, {"square", square}};
    json degrees = json::array();
    std::vector<PoincareSeries::Coeff> series;
    for (int d = 0; d <= coinv::top_degree(n); ++d) {
        const auto basis = coinv::staircase_basis(n, d);
        json row = {{"degree", 2 * d}, {"rank", basis.size()}};
        json mons = json::array();
        for (const auto& m : basis) mons.push_back(coinv::monomial_string(m, n));
        row["basis"] = mons;
        if (n == 3) {
            const auto rep = coinv::sn_degree_representation(3, d);
            row["character"] = coinv::sigma3_class_character(rep);
            row["module"] = coinv::classify_sigma3_irreducible(rep);
        }
        degrees.push_back(row);
        series.resize(static_cast<std::size_t>(2 * d) + 1, 0);
        series[static_cast<std::size_t>(2 * d)] = basis.size();
    }
    r.results()["degrees"] = degrees;
    r.results()["poincare"] = PoincareSeries(series).to_string();
    if (n == 3) {
        json names = json::array();
        for (const auto& row : degrees) names.push_back(row["module"]);
        r.check("Σ3-modules in degrees 0, 2, 4, 6", json{"Z", "M", "M", "S"}, names, "published");
        r.check("total rank", 6, PoincareSeries(series).total(), "published");
    }
    if (square) {
        json k = json::array();
        for (int d = 0; d <= 4 * coinv::top_degree(n); d += 2) k.push_back({{"degree", d}, {"summands", coinv::kunneth_names(d)}});
        r.results()["square"] = k;
    }
    return r;
}

Report cmd_serre(const std::string& config, std::optional<unsigned> prime, std::optional<int> top_dimension) {
    Report r("serre");
    r.arguments() = {{"config", config}};
    if (prime) r.arguments()["prime"] = *prime;
    if (top_dimension) r.arguments()["top_dimension"] = *top_dimension;

    const auto bundled = specseq::bundled_fibrations();
    auto is_bundled = [&](const std::string& n) { return std::find(bundled.begin(), bundled.end(), n) != bundled.end(); };
    std::filesystem::path path;
    if (is_bundled(config))
        path = specseq::data_dir() / "fibrations" / (config + ".json");
    else if (prime && is_bundled(config + "_p" + std::to_string(*prime)))
        path = specseq::data_dir() / "fibrations" / (config + "_p" + std::to_string(*prime) + ".json");
    else
        path = config;
    const std::string text = read_file(path);
    r.add_input("config", text);
    specseq::FibrationSpec spec = specseq::parse_fibration(text);
    if (prime) spec.prime = *prime;
    if (top_dimension) spec.top_dimension = *top_dimension;

    specseq::SerreRun run;
    {
        Stopwatch w(r, "spectral_sequence");
        run = specseq::run_serre(spec);
    }
    const std::string name = spec.name;
    r.results()["name"] = name;
    r.results()["prime"] = spec.prime;
    r.results()["top_dimension"] = spec.top_dimension;
    r.results()["truncation"] = spec.truncation;
    r.results()["period"] = run.e2.period() ? json(*run.e2.period()) : json(nullptr);
    r.results()["e2"] = page_json(run.e2);
    json shadows = json::object();
    for (auto [q, d] : run.e2.shadows()) shadows[std::to_string(q)] = d;
    r.results()["shadows"] = shadows;
    r.results()["solutions"] = run.solutions.size();
    json diffs = json::array();
    for (const auto& d : run.differentials) diffs.push_back(specseq::to_string(d));
    r.results()["differentials"] = diffs;
    r.results()["e_infinity"] = page_json(run.e_infinity);
    r.results()["cohomology"] = groups_json(run.cohomology);
    r.results()["mod_p_series"] = run.mod_p.to_string();

    const std::size_t top = run.cohomology.size() - 1;
    const bool stock = !top_dimension || *top_dimension == specseq::parse_fibration(text).top_dimension;
    if (stock) {
        if (auto pub = published_total_cohomology(name, top)) {
            r.check("p-local cohomology", groups_json(*pub), groups_json(run.cohomology), "published");
            if (auto series = published_mod_p_series(name))
                r.check("mod-p Poincaré series", series->to_string(), run.mod_p.to_string(), "published");
            else
                r.check("mod-p series from the published groups",
                        exactla::mod_p_series(*pub, spec.prime).truncate(static_cast<std::size_t>(spec.top_dimension))
                            .to_string(),
                        run.mod_p.to_string(), "derived");
        }
        if (name == "fl3xfl3_p3") {
            r.add_note(std::string("printed mod-3 series ") + kPrintedFl3SquareMod3 +
                       " repeats 4t^4; the computed series follows from the printed groups by universal coefficients");
        }
    }
    // Orientable closed manifolds only: Fl3 x_S3 Fl3, and Fl̄3 through its mod-2 series.
    if (name == "fl3xfl3_p2" || name == "fl3xfl3_p3" || name == "flbar3_p2")
        r.check_true("palindromic mod-p series", run.mod_p.is_palindromic(), "derived");
    return r;
}

Report cmd_u3t2(unsigned p) {
    Report r("u3t2");
    r.arguments() = {{"prime", p}};
    if (p != 2 && p != 3) throw ConfigError("u3t2 is defined for p = 2, 3");
    specseq::HomogeneousSpaceResult res;
    {
        Stopwatch w(r, "koszul");
        res = specseq::u3t2_cohomology(p);
    }
    r.results()["chern"] = res.chern.total_to_string();
    json pages = json::array();
    for (const auto& s : res.pages)
        pages.push_back({{"page", s.r},
                         {"generator", s.generator},
                         {"transgression", s.transgression},
                         {"vanishes_on_page", s.vanishes_on_page},
                         {"page_series", s.page_series.to_string()}});
    r.results()["pages"] = pages;
    json gens = json::array();
    for (const auto& g : res.ring.generators)
        gens.push_back({{"name", g.name}, {"degree", g.degree}, {"representative", g.representative}});
    r.results()["generators"] = gens;
    r.results()["relations"] = res.ring.relations;
    r.results()["presentation"] = res.ring.to_string();
    r.results()["poincare"] = res.ring.poincare.to_string();

    const auto pub = *published_u3t2(p);
    r.check("ring", pub.presentation, res.ring.to_string(), "published");
    r.check("Poincaré series", pub.series.to_string(), res.ring.poincare.to_string(), "published");
    for (std::size_t i = 0; i < pub.transgressions.size() && i < res.pages.size(); ++i) {
        const auto& t = pub.transgressions[i];
        const auto& s = res.pages[i];
        r.check("d" + std::to_string(s.r) + "(" + t.generator + ")",
                json{{"value", t.value}, {"vanishes", t.vanishes}},
                json{{"value", s.transgression}, {"vanishes", s.vanishes_on_page}}, "published");
    }
    return r;
}

Report cmd_holim(const std::string& diagram, std::optional<int> max_degree, const RobustnessOptions& robustness) {
    Report r("holim");
    r.arguments() = {{"diagram", diagram}, {"robustness", robustness.enabled}};
    if (max_degree) r.arguments()["max_degree"] = *max_degree;
    std::filesystem::path path = diagram;
    if (!std::filesystem::exists(path)) path = specseq::data_dir() / "diagrams" / (diagram + ".json");
    const std::string text = read_file(path);
    r.add_input("diagram", text);
    const holim::PosetDiagram d = holim::parse_diagram(text);
    const int top = max_degree ? std::min(*max_degree, d.max_degree()) : d.max_degree();
    {
        Stopwatch w(r, "validate");
        for (int k = 0; k <= top; ++k) d.validate_degree(k);
    }
    r.results()["name"] = d.name;
    r.results()["prime"] = d.prime();
    json objs = json::array();
    for (const auto& o : d.objects())
        objs.push_back({{"subset", o.subset}, {"space", o.space}, {"series", o.series.to_string()},
                        {"source", holim::to_string(o.source)}});
    r.results()["objects"] = objs;
    json degrees = json::array();
    Stopwatch w(r, "limits");
    bool all_constant = true;
    for (int k = 0; k <= top; ++k) {
        const auto c = holim::cosimplicial_complex(d, k);
        const auto l = holim::limits_of(c);
        json row = {{"degree", k},
                    {"shape", {c.c0, c.c1, c.c2}},
                    {"lim0", l.lim0},
                    {"lim1", l.lim1},
                    {"lim2", l.lim2},
                    {"euler", holim::block_euler_characteristic(d.poset(), d.dims(k))}};
        if (robustness.enabled && d.poset().n() == 2) {
            const auto rep = holim::robustness_check(d, k, robustness.budget, robustness.samples, robustness.seed);
            json seen = json::array();
            for (auto [a, b] : rep.observed) seen.push_back({a, b});
            row["robustness"] = {{"mode", rep.exhaustive ? "exhaustive" : "random-walk"},
                                 {"blocks", rep.examined},
                                 {"observed", seen}};
            all_constant = all_constant && rep.constant() && rep.examined > 0;
        }
        degrees.push_back(row);
    }
    r.results()["degrees"] = degrees;
    if (robustness.enabled) r.check_true("(lim0, lim1) constant on every rank-profile class", all_constant, "derived");
    return r;
}

Report cmd_ecom_u3(unsigned p) {
    Report r("ecom-u3");
    r.arguments() = {{"prime", p}};
    const auto path = holim::bundled_diagram_path(p);
    const std::string text = read_file(path);
    r.add_input("diagram", text);
    const holim::PosetDiagram d = holim::parse_diagram(text);
    {
        Stopwatch w(r, "validate");
        d.validate();
    }
    holim::BousfieldKan bk;
    json degrees = json::array();
    bool lim2 = true;
    {
        Stopwatch w(r, "limits");
        for (int k = 0; k <= d.max_degree(); ++k) {
            const auto c = holim::cosimplicial_complex(d, k);
            const auto l = holim::limits_of(c);
            lim2 = lim2 && c.d1.rank() == c.c2;
            degrees.push_back({{"degree", k}, {"shape", {c.c0, c.c1, c.c2}}, {"lim0", l.lim0}, {"lim1", l.lim1},
                               {"lim2", l.lim2}});
        }
        bk = holim::bk_assemble(d);
    }
    r.results()["degrees"] = degrees;
    json dims = json::array();
    for (std::size_t n = 0; n <= static_cast<std::size_t>(d.max_degree()); ++n) dims.push_back(bk.total[n]);
    r.results()["dimensions"] = dims;
    r.results()["poincare"] = bk.total.to_string();

    r.check_true("lim2 = 0 for every k <= " + std::to_string(d.max_degree()), lim2, "published");
    if (p == 2) {
        for (auto [k, shape, lim] : {std::tuple{0, json{7, 12, 6}, json{1, 0}}, std::tuple{3, json{9, 22, 12}, json{0, 1}},
                                     std::tuple{4, json{11, 22, 12}, json{1, 0}}}) {
            const auto& row = degrees[static_cast<std::size_t>(k)];
            r.check("k=" + std::to_string(k) + " complex shape", shape, row["shape"], "published");
            r.check("k=" + std::to_string(k) + " (lim0, lim1)", lim, json{row["lim0"], row["lim1"]}, "published");
        }
    }
    const auto pub = holim::published_e2(p);
    json want = json::array(), got = json::array();
    for (int k = 0; k <= d.max_degree(); ++k) {
        want.push_back({pub[static_cast<std::size_t>(k)].lim0, pub[static_cast<std::size_t>(k)].lim1});
        got.push_back({bk.e2[static_cast<std::size_t>(k)].lim0, bk.e2[static_cast<std::size_t>(k)].lim1});
    }
    r.check("E2 columns (lim0, lim1) by k", want, got, "published");
    r.check("H^*(E_com U(3); F_" + std::to_string(p) + ")", holim::published_total(p).to_string(), bk.total.to_string(),
            "published");
    const auto rational = holim::rational_betti();
    bool dominates = bk.total[0] == 1;
    for (std::size_t n = 0; n <= rational.degree(); ++n) dominates = dominates && bk.total[n] >= rational[n];
    r.check_true("dim H^0 = 1 and dim H^n >= rational Betti numbers " + rational.to_string(), dominates, "derived");

    const auto targets = holim::reconstruction_targets(p);
    for (int k = 0; k <= d.max_degree(); ++k) {
        const auto& t = targets[static_cast<std::size_t>(k)];
        if (t.source == holim::Provenance::Derived)
            r.add_note("degree " + std::to_string(k) + ": published (lim0, lim1) = " +
                       limits_text(pub[static_cast<std::size_t>(k)]) +
                       " has the wrong Euler characteristic for the object series; the maps realise " +
                       limits_text(t.limits));
    }
    return r;
}

Report cmd_rational_ring() {
    Report r("rational-ring");
    coinv::RingPresentation P;
    {
        Stopwatch w(r, "invariant_ring");
        P = coinv::evaluate_invariant_ring();
    }
    json basis = json::array();
    json degrees = json::array();
    for (std::size_t i = 0; i < P.basis.size(); ++i) {
        const auto& b = P.basis[i];
        json w = json::array();
        for (int x : P.descent_permutations.at(i)) w.push_back(x);
        basis.push_back({{"label", b.label}, {"source", b.source}, {"degree", b.degree}, {"permutation", w},
                         {"maj", coinv::maj(P.descent_permutations.at(i))}});
        degrees.push_back(b.degree);
    }
    r.results()["basis"] = basis;
    json normals = json::array();
    for (const auto& m : P.normal_monomials) normals.push_back({{"monomial", m.label}, {"degree", m.degree}});
    r.results()["normal_monomials"] = normals;
    r.results()["presentation"] = P.presentation;
    r.results()["poincare"] = P.poincare.to_string();
    r.results()["degree8_scalar"] = P.degree8_scalar.get_str();
    r.results()["top_scalar"] = P.top_scalar.get_str();
    r.results()["cubic_scalar"] = P.cubic_scalar.get_str();

    for (const auto& rel : P.relations) r.check_true(rel.name, rel.holds, "published");
    r.check("basis degrees", kRationalBasisDegrees, degrees, "published");
    r.check("Poincaré polynomial", kRationalSeries, P.poincare.to_string(), "published");
    return r;
}

}  // namespace ecom::cli
