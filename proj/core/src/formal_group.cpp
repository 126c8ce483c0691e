#include "ckgrass/formal_group.hpp"

#include <stdexcept>

namespace ckgrass {

namespace {
void require_nilpotent(const AlgebraElement& u, const char* who) {
    if (!u.has_zero_constant_term())
        throw std::domain_error(std::string(who) + ": input must have zero constant term");
}
}  // namespace

AlgebraElement fgl_add(const AlgebraElement& u, const AlgebraElement& v) {
    require_nilpotent(u, "fgl_add");
    require_nilpotent(v, "fgl_add");
    return u + v + (u * v).scaled(BetaPoly::beta_power(1));
}

AlgebraElement fgl_inverse(const AlgebraElement& u) {
    require_nilpotent(u, "fgl_inverse");
    AlgebraElement denom =
        AlgebraElement::one(u.context()) + u.scaled(BetaPoly::beta_power(1));
    return (-u) * denom.inverted();
}

}  // namespace ckgrass
