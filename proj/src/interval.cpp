#include "irg/interval.hpp"

#include <sstream>

namespace irg {

std::string half_to_string(std::int64_t x2) {
    std::ostringstream out;
    if (x2 % 2 == 0) {
        out << x2 / 2;
    } else {
        if (x2 < 0) out << '-';
        const std::int64_t mag = x2 < 0 ? -x2 : x2;
        out << mag / 2 << ".5";
    }
    return out.str();
}

}  // namespace irg
