#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>

namespace gspmixdom {

/// How a terminal vertex x relates to a partial solution S of its p-graph.
///
/// "Incident edges" here means edges from x into the p-graph other than edges
/// joining x to the p-graph's second terminal; those are tracked structurally
/// by the owning StateTable (see StateTable::terminals_adjacent).
enum class TerminalState : std::uint8_t {
    InSetWithEdge = 0,       // x in S, some incident edge in S
    InSet = 1,               // x in S, no incident edge in S
    EdgeInSet = 2,           // x not in S, some incident edge in S
    Dominated = 3,           // dominated by a neighbour in S, incident edges dominated
    DominatedOpenEdge = 4,   // dominated by a neighbour in S, some incident edge not dominated
    Undominated = 5,         // x not dominated, incident edges dominated
    UndominatedOpenEdge = 6  // x not dominated, some incident edge not dominated
};

inline constexpr std::size_t kStateCount = 7;

inline constexpr std::array<TerminalState, kStateCount> kAllStates{
    TerminalState::InSetWithEdge, TerminalState::InSet,       TerminalState::EdgeInSet,
    TerminalState::Dominated,     TerminalState::DominatedOpenEdge, TerminalState::Undominated,
    TerminalState::UndominatedOpenEdge};

constexpr std::size_t index_of(TerminalState s) noexcept { return static_cast<std::size_t>(s); }
constexpr TerminalState state_at(std::size_t i) noexcept { return static_cast<TerminalState>(i); }

struct StateFlags {
    bool in_set = false;
    bool edge_in_set = false;
    bool dominated = false;
    bool all_edges_dominated = false;

    friend bool operator==(const StateFlags&, const StateFlags&) = default;
};

constexpr StateFlags flags_of(TerminalState s) noexcept {
    constexpr std::array<StateFlags, kStateCount> table{{
        {true, true, true, true},
        {true, false, true, true},
        {false, true, true, true},
        {false, false, true, true},
        {false, false, true, false},
        {false, false, false, true},
        {false, false, false, false},
    }};
    return table[index_of(s)];
}

/// Inverse of flags_of. Throws std::invalid_argument on the nine flag tuples
/// that no partial solution can produce.
TerminalState classify(const StateFlags& flags);

/// State of a vertex shared by two edge-disjoint p-graphs glued at it, given
/// its state on each side; nullopt when the sides disagree on membership.
std::optional<TerminalState> combine(TerminalState a, TerminalState b) noexcept;

/// Every (a, b) with combine(a, b) == target, in lexicographic order.
std::span<const std::pair<TerminalState, TerminalState>> pairs_for(TerminalState target) noexcept;

/// Vertex and all its incident edges dominated: {0,1,2,3}.
constexpr bool is_settled(TerminalState s) noexcept {
    const StateFlags f = flags_of(s);
    return f.dominated && f.all_edges_dominated;
}

/// The vertex or one of its edges is in S, so every edge at it is dominated: {0,1,2}.
constexpr bool is_covered(TerminalState s) noexcept {
    const StateFlags f = flags_of(s);
    return f.in_set || f.edge_in_set;
}

/// State after an extra, undominated incident edge is attributed to the vertex.
/// Covered states absorb it; 3 -> 4 and 5 -> 6.
constexpr TerminalState with_open_edge(TerminalState s) noexcept {
    if (is_covered(s)) return s;
    StateFlags f = flags_of(s);
    return f.dominated ? TerminalState::DominatedOpenEdge : TerminalState::UndominatedOpenEdge;
}

}  // namespace gspmixdom
