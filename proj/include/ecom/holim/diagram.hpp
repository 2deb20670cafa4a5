#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecom/exactla/fp_matrix.hpp"
#include "ecom/exactla/poincare.hpp"
#include "ecom/holim/poset.hpp"

namespace ecom::holim {

using exactla::FpMatrix;
using exactla::PoincareSeries;

enum class Provenance { Published, Derived };

std::string to_string(Provenance s);
Provenance parse_provenance(const std::string& s);

struct DiagramObject {
    Subset subset;
    std::string space;
    PoincareSeries series;  // mod-p Betti numbers
    Provenance source = Provenance::Derived;
};

using Arrow = std::pair<std::size_t, std::size_t>;
/// Matrices p_ab : H^k(a) -> H^k(b) of one degree, keyed by arrow.
using Block = std::map<Arrow, FpMatrix>;

/// A property the maps must have. `arrow` empty means every arrow, `degree` empty every degree.
struct MapConstraint {
    enum class Kind { Identity, Injective, Equals };
    Kind kind = Kind::Identity;
    std::optional<Arrow> arrow;
    std::optional<int> degree;
    FpMatrix matrix;  // Equals only
    Provenance source = Provenance::Published;

    bool applies(const Arrow& a, int k) const;
};

/// A functor S(n) -> graded F_p vector spaces, given degreewise by matrices.
class PosetDiagram {
public:
    PosetDiagram(PosetSn poset, std::uint32_t p, int max_degree);

    const PosetSn& poset() const { return poset_; }
    std::uint32_t prime() const { return p_; }
    int max_degree() const { return max_degree_; }

    std::string name;
    std::string description;

    const std::vector<DiagramObject>& objects() const { return objects_; }
    void set_object(std::size_t i, DiagramObject obj);
    std::size_t dim(std::size_t obj, int k) const;
    std::vector<std::size_t> dims(int k) const;

    /// The stored matrix, or the zero matrix of the right shape when nothing is stored.
    FpMatrix map(std::size_t a, std::size_t b, int k) const;
    bool has_map(std::size_t a, std::size_t b, int k) const;
    void set_map(std::size_t a, std::size_t b, int k, const FpMatrix& m);
    Provenance map_source(std::size_t a, std::size_t b) const;
    void set_map_source(std::size_t a, std::size_t b, Provenance s);

    Block block(int k) const;
    void set_block(int k, const Block& b);

    const std::vector<MapConstraint>& constraints() const { return constraints_; }
    void add_constraint(MapConstraint c) { constraints_.push_back(std::move(c)); }

    /// Missing or misshapen matrices and failed composites at degree k.
    std::vector<std::string> functoriality_failures(int k) const;
    std::vector<std::string> constraint_failures(int k) const;
    /// Throws FunctorialityViolation, then PublishedMismatch for failed constraints.
    void validate_degree(int k) const;
    void validate() const;

private:
    PosetSn poset_;
    std::uint32_t p_;
    int max_degree_;
    std::vector<DiagramObject> objects_;
    std::map<Arrow, std::map<int, FpMatrix>> maps_;
    std::map<Arrow, Provenance> sources_;
    std::vector<MapConstraint> constraints_;
};

/// Failures of the constraints on one block (shapes taken from `dims`).
std::vector<std::string> block_constraint_failures(const PosetSn& poset, const std::vector<MapConstraint>& cs,
                                                   const Block& b, const std::vector<std::size_t>& dims, int k,
                                                   std::uint32_t p);

/// The constant diagram F_p in degree 0 with identity maps.
PosetDiagram constant_diagram(int n, std::uint32_t p);

PosetDiagram parse_diagram(const std::string& json_text);
std::string diagram_to_json(const PosetDiagram& d);
PosetDiagram load_diagram(const std::filesystem::path& path);
/// data/diagrams/u3_p<p>.json.
std::filesystem::path bundled_diagram_path(std::uint32_t p);
PosetDiagram bundled_diagram(std::uint32_t p);

}  // namespace ecom::holim
