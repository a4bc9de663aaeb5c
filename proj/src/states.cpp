#include "gspmixdom/states.hpp"

#include <stdexcept>
#include <vector>

namespace gspmixdom {

TerminalState classify(const StateFlags& flags) {
    for (TerminalState s : kAllStates)
        if (flags_of(s) == flags) return s;
    throw std::invalid_argument("classify: inconsistent terminal flags");
}

namespace {

std::optional<TerminalState> combine_flags(TerminalState a, TerminalState b) {
    const StateFlags fa = flags_of(a);
    const StateFlags fb = flags_of(b);
    if (fa.in_set != fb.in_set) return std::nullopt;
    StateFlags out;
    out.in_set = fa.in_set;
    out.edge_in_set = fa.edge_in_set || fb.edge_in_set;
    out.dominated = fa.dominated || fb.dominated;
    // An edge of S (or the vertex itself) on one side dominates every edge at
    // the shared vertex on the other side.
    out.all_edges_dominated = (fa.all_edges_dominated || fb.edge_in_set || out.in_set) &&
                              (fb.all_edges_dominated || fa.edge_in_set || out.in_set);
    return classify(out);
}

struct Tables {
    std::array<std::array<std::optional<TerminalState>, kStateCount>, kStateCount> combined;
    std::array<std::vector<std::pair<TerminalState, TerminalState>>, kStateCount> pairs;

    Tables() {
        for (TerminalState a : kAllStates) {
            for (TerminalState b : kAllStates) {
                combined[index_of(a)][index_of(b)] = combine_flags(a, b);
                if (auto c = combined[index_of(a)][index_of(b)]) pairs[index_of(*c)].emplace_back(a, b);
            }
        }
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

}  // namespace

std::optional<TerminalState> combine(TerminalState a, TerminalState b) noexcept {
    return tables().combined[index_of(a)][index_of(b)];
}

std::span<const std::pair<TerminalState, TerminalState>> pairs_for(TerminalState target) noexcept {
    return tables().pairs[index_of(target)];
}

}  // namespace gspmixdom
