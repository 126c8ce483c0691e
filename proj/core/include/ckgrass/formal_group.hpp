#pragma once

// The multiplicative-type formal group law of connective K-theory,
// u (+) v = u + v + beta*u*v, applied to truncation-nilpotent elements
// (zero constant term, so 1/(1+beta*u) is a finite geometric series).

#include "ckgrass/algebra.hpp"

namespace ckgrass {

// u (+) v. Both inputs must have zero constant term (throws std::domain_error).
AlgebraElement fgl_add(const AlgebraElement& u, const AlgebraElement& v);

// Formal inverse: -u/(1+beta*u); fgl_add(u, fgl_inverse(u)) == 0 up to truncation.
AlgebraElement fgl_inverse(const AlgebraElement& u);

}  // namespace ckgrass
