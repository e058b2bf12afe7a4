#pragma once

#include "altkit/multipoly.hpp"

namespace altkit {

/// u(z)(dz)^weight with u a Laurent polynomial in z.
struct DensityElement {
    MultiPoly u;
    Rational weight;

    bool operator==(const DensityElement& o) const {
        return weight == o.weight && u == o.u;
    }
};

/// Action of the vector field f(z) d/dz: (f u' + weight f' u)(dz)^weight.
DensityElement density_action(const MultiPoly& f, const DensityElement& d);

/// Bracket of vector fields: [f d/dz, g d/dz] = (f g' - g f') d/dz.
MultiPoly vector_field_bracket(const MultiPoly& f, const MultiPoly& g);

/// Coefficient of the circle field L_n = -z^{n+1} d/dz.
MultiPoly circle_field(const Registry& reg, long n);

/// z^{m+1} (dz)^{-1}, the weight -1 density the doubled algebra acts on.
DensityElement density_um(const Registry& reg, long m);

}  // namespace altkit
