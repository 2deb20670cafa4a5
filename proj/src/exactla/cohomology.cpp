#include "ecom/exactla/cohomology.hpp"

#include <string>

#include "ecom/exactla/smith.hpp"

namespace ecom::exactla {
namespace {

std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

}  // namespace

AbelianGroup cohomology_at(const IntMatrix& d_in, const IntMatrix& d_out) {
    if (d_out.cols() != d_in.rows())
        throw ShapeMismatch("d_in is " + shape(d_in.rows(), d_in.cols()) + ", d_out is " +
                            shape(d_out.rows(), d_out.cols()));
    if (!(d_out * d_in).is_zero()) throw CompositionNonzero("d_out * d_in != 0");

    const std::size_t n = d_out.cols();
    const SNFDecomposition snf = smith_normal_form(d_out);
    const std::size_t r = snf.rank();
    const std::size_t z = n - r;
    if (z == 0) return AbelianGroup::zero();

    // Coordinates of im(d_in) in the kernel basis given by the last z columns of `right`.
    const IntMatrix coords = (snf.V * d_in).block(r, 0, z, d_in.cols());
    const std::vector<Integer> f = invariant_factors(coords);
    std::vector<Integer> tors;
    for (const auto& x : f)
        if (x != 1) tors.push_back(x);
    return AbelianGroup(z - f.size(), tors);
}

std::size_t cohomology_dim(const FpMatrix& d_in, const FpMatrix& d_out) {
    if (d_out.cols() != d_in.rows())
        throw ShapeMismatch("d_in is " + shape(d_in.rows(), d_in.cols()) + ", d_out is " +
                            shape(d_out.rows(), d_out.cols()));
    if (!(d_out * d_in).is_zero()) throw CompositionNonzero("d_out * d_in != 0 mod p");
    return d_out.cols() - d_out.rank() - d_in.rank();
}

std::size_t cohomology_dim_mod_p(const IntMatrix& d_in, const IntMatrix& d_out, std::uint32_t p) {
    return cohomology_dim(FpMatrix::reduce(d_in, p), FpMatrix::reduce(d_out, p));
}

}  // namespace ecom::exactla
