#include "qlimits/search_space.hpp"

#include <cfloat>
#include <cmath>
#include <string>

#include "qlimits/error.hpp"

namespace qlimits {

SearchSpace::SearchSpace(int bits) : bits_(bits) {
    if (bits < 1 || bits > kMaxBits) {
        throw Error(ErrorKind::domain, "search space needs 1 <= n <= 1024", std::to_string(bits));
    }
    overlap_ = std::exp2(-0.5 * bits);
    // 1 - g^2 = -expm1(-n ln2) keeps full precision for small n.
    complement_ = std::sqrt(-std::expm1(-bits * std::log(2.0)));
}

double SearchSpace::dimension() const noexcept { return std::exp2(static_cast<double>(bits_)); }

double SearchSpace::sqrt_dimension() const noexcept { return std::exp2(0.5 * bits_); }

bool SearchSpace::overlap_underflows() const noexcept { return overlap_squared() < DBL_MIN; }

}  // namespace qlimits
