#include "axsel/digest.hpp"

#include <cstdio>

namespace axsel {

std::string Fnv1a::hex() const {
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(state_));
    return buffer;
}

}  // namespace axsel
