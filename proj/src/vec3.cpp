#include "h2diss/vec3.hpp"

#include <stdexcept>

namespace h2diss {

Vec3 normalized(const Vec3& v) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    return v / n;
}

}  // namespace h2diss
