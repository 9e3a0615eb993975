#pragma once

namespace qlimits {

/// n-bit search space: dimension N = 2^n and the overlap g = <i|s> = 2^(-n/2)
/// between the uniform superposition and any basis state.
class SearchSpace {
public:
    static constexpr int kMaxBits = 1024;

    /// Throws Error{domain} unless 1 <= bits <= 1024.
    explicit SearchSpace(int bits);

    int bits() const noexcept { return bits_; }
    double log2_dimension() const noexcept { return bits_; }
    /// 2^n; +inf once it no longer fits a double.
    double dimension() const noexcept;
    /// sqrt(2^n).
    double sqrt_dimension() const noexcept;

    double overlap() const noexcept { return overlap_; }
    double log2_overlap() const noexcept { return -0.5 * bits_; }
    /// g^2 = 2^(-n); subnormal or zero for n close to 1024.
    double overlap_squared() const noexcept { return overlap_ * overlap_; }
    /// sqrt(1 - g^2), the weight of |s_perp> in |s>.
    double complement() const noexcept { return complement_; }
    /// True when g^2 is no longer a normal double.
    bool overlap_underflows() const noexcept;

    friend bool operator==(const SearchSpace&, const SearchSpace&) = default;

private:
    int bits_;
    double overlap_;
    double complement_;
};

}  // namespace qlimits
