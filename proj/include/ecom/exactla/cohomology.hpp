#pragma once

#include <cstddef>
#include <cstdint>

#include "ecom/exactla/abelian_group.hpp"
#include "ecom/exactla/fp_matrix.hpp"
#include "ecom/exactla/int_matrix.hpp"

namespace ecom::exactla {

/// ker(d_out) / im(d_in) for A --d_in--> B --d_out--> C.
///
/// Shapes: d_in is |B| x |A|, d_out is |C| x |B|. A 0 x n d_out has full kernel,
/// an n x 0 d_in has zero image. The middle dimension is read from whichever map
/// carries it, so both may be degenerate.
AbelianGroup cohomology_at(const IntMatrix& d_in, const IntMatrix& d_out);

/// Same quotient over F_p; only the dimension is returned. The composite is
/// checked modulo p, so matrices that only form a complex mod p are accepted.
std::size_t cohomology_dim_mod_p(const IntMatrix& d_in, const IntMatrix& d_out, std::uint32_t p);
std::size_t cohomology_dim(const FpMatrix& d_in, const FpMatrix& d_out);

}  // namespace ecom::exactla
