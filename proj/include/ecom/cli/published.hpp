#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ecom/exactla/abelian_group.hpp"
#include "ecom/exactla/poincare.hpp"

namespace ecom::cli {

using exactla::AbelianGroup;
using exactla::PoincareSeries;

/// Stated values of H^d(Σ3; module) for d <= max_degree. p = 0 asks for the integral groups,
/// otherwise the p-primary parts (free summands kept). Module names as in sigma3_module.
std::optional<std::vector<AbelianGroup>> published_sigma3_cohomology(const std::string& module, unsigned p,
                                                                     std::size_t max_degree);

/// p-local cohomology of a bundled fibration's total space, degrees 0..max_degree.
std::optional<std::vector<AbelianGroup>> published_total_cohomology(const std::string& fibration,
                                                                    std::size_t max_degree);
/// The printed mod-p Poincaré series, when it is consistent with the printed groups.
std::optional<PoincareSeries> published_mod_p_series(const std::string& fibration);

/// The mod-3 series of Fl3 x_S3 Fl3 exactly as printed (it repeats a 4t^4 term).
inline constexpr const char* kPrintedFl3SquareMod3 = "1+t^3+4t^4+3t^5+4t^6+3t^7+4t^4+t^9+t^12";

struct PublishedTransgression {
    std::string generator;
    std::string value;  // c_i mod p
    bool vanishes = false;
};

struct PublishedHomogeneousSpace {
    std::string presentation;
    PoincareSeries series;
    std::vector<PublishedTransgression> transgressions;
};

/// U(3)/T(2) at p = 2, 3.
std::optional<PublishedHomogeneousSpace> published_u3t2(unsigned p);

inline constexpr const char* kRationalSeries = "1+t^4+2t^6+t^8+t^12";
inline const std::vector<int> kRationalBasisDegrees = {0, 4, 6, 6, 8, 12};

}  // namespace ecom::cli
