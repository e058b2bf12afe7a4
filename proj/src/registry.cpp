#include "altkit/registry.hpp"

namespace altkit {

const Registry& default_registry() {
    static const Registry reg = make_registry(
        {"B1", "B2", "V1", "V2", "beta", "gamma", "x", "y1", "y2", "v1", "v2",
         "z1", "z2", "t", "r", "eps", "z", "a"},
        {"t", "z"});
    return reg;
}

}  // namespace altkit
