#include "altkit/rational.hpp"

namespace altkit {

Rational parse_rational(std::string_view s) {
    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(Integer(std::string(s)));
    Integer num{std::string(s.substr(0, slash))};
    Integer den{std::string(s.substr(slash + 1))};
    return make_rational(num, den);
}

}  // namespace altkit
