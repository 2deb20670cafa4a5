#include "ecom/holim/diagram.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "ecom/error.hpp"
#include "ecom/specseq/serre.hpp"
#include "json.hpp"

namespace ecom::holim {

using nlohmann::json;

std::string to_string(Provenance s) { return s == Provenance::Published ? "published" : "derived"; }

Provenance parse_provenance(const std::string& s) {
    if (s == "published") return Provenance::Published;
    if (s == "derived") return Provenance::Derived;
    throw ParseError("unknown source tag '" + s + "'");
}

bool MapConstraint::applies(const Arrow& a, int k) const {
    return (!arrow || *arrow == a) && (!degree || *degree == k);
}

PosetDiagram::PosetDiagram(PosetSn poset, std::uint32_t p, int max_degree)
    : poset_(std::move(poset)), p_(p), max_degree_(max_degree), objects_(poset_.size()) {
    for (std::size_t i = 0; i < poset_.size(); ++i) objects_[i].subset = poset_.object(i);
}

void PosetDiagram::set_object(std::size_t i, DiagramObject obj) {
    if (obj.subset != poset_.object(i)) throw ShapeMismatch("object subset does not match index");
    objects_.at(i) = std::move(obj);
}

std::size_t PosetDiagram::dim(std::size_t obj, int k) const {
    if (k < 0) return 0;
    return static_cast<std::size_t>(objects_.at(obj).series[static_cast<std::size_t>(k)]);
}

std::vector<std::size_t> PosetDiagram::dims(int k) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < objects_.size(); ++i) out.push_back(dim(i, k));
    return out;
}

FpMatrix PosetDiagram::map(std::size_t a, std::size_t b, int k) const {
    if (!poset_.less(a, b)) throw ShapeMismatch("no arrow " + poset_.name(a) + " -> " + poset_.name(b));
    if (auto it = maps_.find({a, b}); it != maps_.end())
        if (auto jt = it->second.find(k); jt != it->second.end()) return jt->second;
    return FpMatrix(dim(b, k), dim(a, k), p_);
}

bool PosetDiagram::has_map(std::size_t a, std::size_t b, int k) const {
    auto it = maps_.find({a, b});
    return it != maps_.end() && it->second.count(k);
}

void PosetDiagram::set_map(std::size_t a, std::size_t b, int k, const FpMatrix& m) {
    if (!poset_.less(a, b)) throw ShapeMismatch("no arrow " + poset_.name(a) + " -> " + poset_.name(b));
    if (m.rows() != dim(b, k) || m.cols() != dim(a, k) || m.prime() != p_)
        throw ShapeMismatch("map " + poset_.name(a) + " -> " + poset_.name(b) + " in degree " + std::to_string(k) +
                            " has the wrong shape");
    if (m.rows() == 0 || m.cols() == 0) return;
    maps_[{a, b}][k] = m;
}

Provenance PosetDiagram::map_source(std::size_t a, std::size_t b) const {
    auto it = sources_.find({a, b});
    return it == sources_.end() ? Provenance::Derived : it->second;
}

void PosetDiagram::set_map_source(std::size_t a, std::size_t b, Provenance s) { sources_[{a, b}] = s; }

Block PosetDiagram::block(int k) const {
    Block out;
    for (const auto& c : poset_.arrows()) out.emplace(Arrow{c[0], c[1]}, map(c[0], c[1], k));
    return out;
}

void PosetDiagram::set_block(int k, const Block& b) {
    for (const auto& [arrow, m] : b) set_map(arrow.first, arrow.second, k, m);
}

std::vector<std::string> PosetDiagram::functoriality_failures(int k) const {
    std::vector<std::string> out;
    for (const auto& c : poset_.arrows()) {
        if (dim(c[0], k) && dim(c[1], k) && !has_map(c[0], c[1], k))
            out.push_back("degree " + std::to_string(k) + ": missing map " + poset_.name(c[0]) + " -> " +
                          poset_.name(c[1]));
    }
    for (const auto& c : poset_.chains(3)) {
        if (!dim(c[0], k) || !dim(c[2], k)) continue;
        if (map(c[1], c[2], k) * map(c[0], c[1], k) != map(c[0], c[2], k))
            out.push_back("degree " + std::to_string(k) + ": " + poset_.name(c[0]) + " -> " + poset_.name(c[1]) +
                          " -> " + poset_.name(c[2]) + " does not compose to the long arrow");
    }
    return out;
}

std::vector<std::string> block_constraint_failures(const PosetSn& poset, const std::vector<MapConstraint>& cs,
                                                   const Block& b, const std::vector<std::size_t>& dims, int k,
                                                   std::uint32_t p) {
    std::vector<std::string> out;
    for (const auto& c : poset.arrows()) {
        const Arrow arrow{c[0], c[1]};
        const FpMatrix& m = b.at(arrow);
        for (const auto& con : cs) {
            if (!con.applies(arrow, k)) continue;
            const std::string where = poset.name(c[0]) + " -> " + poset.name(c[1]) + " in degree " + std::to_string(k);
            switch (con.kind) {
                case MapConstraint::Kind::Identity:
                    if (dims[c[0]] != dims[c[1]] || m != FpMatrix::identity(dims[c[0]], p))
                        out.push_back(where + " is not the identity");
                    break;
                case MapConstraint::Kind::Injective:
                    if (!m.injective()) out.push_back(where + " is not injective");
                    break;
                case MapConstraint::Kind::Equals:
                    if (m != con.matrix) out.push_back(where + " differs from " + con.matrix.to_string());
                    break;
            }
        }
    }
    return out;
}

std::vector<std::string> PosetDiagram::constraint_failures(int k) const {
    return block_constraint_failures(poset_, constraints_, block(k), dims(k), k, p_);
}

void PosetDiagram::validate_degree(int k) const {
    if (auto f = functoriality_failures(k); !f.empty()) throw FunctorialityViolation(f.front());
    if (auto f = constraint_failures(k); !f.empty()) throw PublishedMismatch(f.front());
}

void PosetDiagram::validate() const {
    for (int k = 0; k <= max_degree_; ++k) validate_degree(k);
}

PosetDiagram constant_diagram(int n, std::uint32_t p) {
    PosetDiagram d(poset(n), p, 0);
    d.name = "constant";
    for (std::size_t i = 0; i < d.poset().size(); ++i)
        d.set_object(i, {d.poset().object(i), "point", PoincareSeries::one(), Provenance::Derived});
    for (const auto& c : d.poset().arrows()) d.set_map(c[0], c[1], 0, FpMatrix::identity(1, p));
    return d;
}

namespace {

Subset read_subset(const json& j) { return j.get<Subset>(); }

FpMatrix read_matrix(const json& j, std::size_t rows, std::size_t cols, std::uint32_t p) {
    auto r = j.get<std::vector<std::vector<long>>>();
    FpMatrix m = FpMatrix::from_rows(r, p, cols);
    if (m.rows() != rows || m.cols() != cols) throw ShapeMismatch("matrix has the wrong shape");
    return m;
}

json write_matrix(const FpMatrix& m) { return m.to_rows(); }

// Puts arrays of numbers (matrix rows, subsets) on one line.
std::string compact_numeric_arrays(const std::string& text) {
    static const std::regex row(R"(\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\])");
    static const std::regex gap(R"(,\s+)");
    std::string out;
    auto begin = std::sregex_iterator(text.begin(), text.end(), row);
    std::size_t last = 0;
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
        out.append(text, last, static_cast<std::size_t>(it->position()) - last);
        out += "[" + std::regex_replace((*it)[1].str(), gap, ", ") + "]";
        last = static_cast<std::size_t>(it->position() + it->length());
    }
    out.append(text, last, std::string::npos);
    return out;
}

}  // namespace

PosetDiagram parse_diagram(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
    try {
        const auto p = j.at("prime").get<std::uint32_t>();
        PosetDiagram d(poset(j.at("poset").get<int>()), p, j.at("max_degree").get<int>());
        d.name = j.value("name", "");
        d.description = j.value("description", "");
        const PosetSn& P = d.poset();

        for (const auto& o : j.at("objects")) {
            DiagramObject obj;
            obj.subset = read_subset(o.at("subset"));
            obj.space = o.value("space", "");
            obj.series = exactla::parse_poincare(o.at("series").get<std::string>());
            obj.source = parse_provenance(o.at("source").get<std::string>());
            const std::size_t i = P.index_of(obj.subset);
            d.set_object(i, std::move(obj));
        }
        for (const auto& c : j.value("constraints", json::array())) {
            MapConstraint con;
            const auto kind = c.at("kind").get<std::string>();
            if (kind == "identity")
                con.kind = MapConstraint::Kind::Identity;
            else if (kind == "injective")
                con.kind = MapConstraint::Kind::Injective;
            else if (kind == "equals")
                con.kind = MapConstraint::Kind::Equals;
            else
                throw ParseError("unknown constraint kind '" + kind + "'");
            if (c.contains("from"))
                con.arrow = Arrow{P.index_of(read_subset(c.at("from"))), P.index_of(read_subset(c.at("to")))};
            if (c.contains("degree")) con.degree = c.at("degree").get<int>();
            if (con.kind == MapConstraint::Kind::Equals) {
                if (!con.arrow || !con.degree) throw ParseError("an equals constraint needs an arrow and a degree");
                con.matrix = read_matrix(c.at("matrix"), d.dim(con.arrow->second, *con.degree),
                                         d.dim(con.arrow->first, *con.degree), p);
            }
            con.source = parse_provenance(c.value("source", "published"));
            d.add_constraint(std::move(con));
        }
        for (const auto& m : j.value("maps", json::array())) {
            const std::size_t a = P.index_of(read_subset(m.at("from")));
            const std::size_t b = P.index_of(read_subset(m.at("to")));
            d.set_map_source(a, b, parse_provenance(m.at("source").get<std::string>()));
            for (const auto& [deg, mat] : m.at("degrees").items()) {
                const int k = std::stoi(deg);
                d.set_map(a, b, k, read_matrix(mat, d.dim(b, k), d.dim(a, k), p));
            }
        }
        return d;
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

std::string diagram_to_json(const PosetDiagram& d) {
    const PosetSn& P = d.poset();
    json j;
    j["name"] = d.name;
    j["description"] = d.description;
    j["prime"] = d.prime();
    j["poset"] = P.n();
    j["max_degree"] = d.max_degree();
    j["objects"] = json::array();
    for (const auto& o : d.objects())
        j["objects"].push_back(
            {{"subset", o.subset}, {"space", o.space}, {"series", o.series.to_string()}, {"source", to_string(o.source)}});
    j["constraints"] = json::array();
    for (const auto& c : d.constraints()) {
        json e;
        e["kind"] = c.kind == MapConstraint::Kind::Identity    ? "identity"
                    : c.kind == MapConstraint::Kind::Injective ? "injective"
                                                               : "equals";
        if (c.arrow) {
            e["from"] = P.object(c.arrow->first);
            e["to"] = P.object(c.arrow->second);
        }
        if (c.degree) e["degree"] = *c.degree;
        if (c.kind == MapConstraint::Kind::Equals) e["matrix"] = write_matrix(c.matrix);
        e["source"] = to_string(c.source);
        j["constraints"].push_back(e);
    }
    j["maps"] = json::array();
    for (const auto& c : P.arrows()) {
        json e;
        e["from"] = P.object(c[0]);
        e["to"] = P.object(c[1]);
        e["source"] = to_string(d.map_source(c[0], c[1]));
        json degs = json::object();
        for (int k = 0; k <= d.max_degree(); ++k)
            if (d.has_map(c[0], c[1], k)) degs[std::to_string(k)] = write_matrix(d.map(c[0], c[1], k));
        e["degrees"] = degs;
        j["maps"].push_back(e);
    }
    return compact_numeric_arrays(j.dump(1)) + "\n";
}

PosetDiagram load_diagram(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_diagram(ss.str());
}

std::filesystem::path bundled_diagram_path(std::uint32_t p) {
    return specseq::data_dir() / "diagrams" / ("u3_p" + std::to_string(p) + ".json");
}

PosetDiagram bundled_diagram(std::uint32_t p) { return load_diagram(bundled_diagram_path(p)); }

}  // namespace ecom::holim
