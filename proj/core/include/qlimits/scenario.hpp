#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qlimits/units.hpp"

namespace qlimits {

/// Adversary budget: work available, time allowed, bath temperature and the
/// success probability deemed acceptable.
struct Scenario {
    std::string name;
    double work = 0.0;  // J
    Duration duration;
    double temperature = 0.0;         // K
    double successProbability = 1.0;  // (0, 1]
    std::optional<int> classicalKeyBits;

    /// Throws Error{domain} if any invariant is violated.
    void validate() const;
};

/// Registry lookup; names are datacenter, dyson, cosmic.
Scenario scenario(std::string_view name);

std::span<const std::string_view> scenario_names();
std::vector<Scenario> all_scenarios();

}  // namespace qlimits
