#include "altkit/density.hpp"

namespace altkit {

DensityElement density_action(const MultiPoly& f, const DensityElement& d) {
    MultiPoly fu = f * d.u.derivative("z");
    MultiPoly fpu = f.derivative("z") * d.u * d.weight;
    return {fu + fpu, d.weight};
}

MultiPoly vector_field_bracket(const MultiPoly& f, const MultiPoly& g) {
    return f * g.derivative("z") - g * f.derivative("z");
}

MultiPoly circle_field(const Registry& reg, long n) {
    return -MultiPoly::variable(reg, "z", static_cast<int>(n) + 1);
}

DensityElement density_um(const Registry& reg, long m) {
    return {MultiPoly::variable(reg, "z", static_cast<int>(m) + 1), Rational(-1)};
}

}  // namespace altkit
