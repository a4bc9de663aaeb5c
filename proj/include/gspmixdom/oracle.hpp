#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gspmixdom/model.hpp"
#include "gspmixdom/realizer.hpp"

namespace gspmixdom {

/// Elements brute_force accepts without `force`.
inline constexpr std::size_t kOracleElementLimit = 24;
/// Hard ceiling: subsets are 64-bit masks with headroom for enumeration.
inline constexpr std::size_t kOracleElementCeiling = 63;

class SizeLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// r together with every element adjacent or incident to it, sorted.
/// Throws std::out_of_range when r is not in the graph.
std::vector<Element> closed_mixed_neighborhood(const Multigraph& graph, const Element& r);

/// Throws std::out_of_range when some member of `set` is not in the graph.
bool is_mixed_dominating(const Multigraph& graph, std::span<const Element> set);

/// First element (vertices, then edges) whose closed neighbourhood misses `set`.
std::optional<Element> first_undominated(const Multigraph& graph, std::span<const Element> set);

struct OracleResult {
    std::uint64_t gamma_m = 0;
    Count count = 0;
    /// Least minimum set under the order vertices-by-name, then edges-by-index.
    std::vector<Element> witness;
};

/// Exhaustive search, one subset size at a time. Throws SizeLimitExceeded
/// above kOracleElementLimit elements unless `force`, and always above
/// kOracleElementCeiling.
OracleResult brute_force(const Multigraph& graph, bool force = false);

}  // namespace gspmixdom
