#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gspmixdom/model.hpp"
#include "gspmixdom/states.hpp"

namespace gspmixdom {

/// Absorbing top of the size order.
inline constexpr std::uint32_t kInfeasible = std::numeric_limits<std::uint32_t>::max();

/// The child cells a merged cell was built from: (left_i, left_j) in the left
/// child's table and (right_i, right_j) in the right child's.
struct ChildCells {
    TerminalState left_i, left_j, right_i, right_j;

    friend bool operator==(const ChildCells&, const ChildCells&) = default;
};

/// ChildCells packed into 12 bits; all ones means "none".
class Backpointer {
public:
    Backpointer() = default;
    explicit Backpointer(const ChildCells& c) noexcept
        : bits_(static_cast<std::uint16_t>(index_of(c.left_i) | index_of(c.left_j) << 3 |
                                           index_of(c.right_i) << 6 | index_of(c.right_j) << 9)) {}

    bool has_value() const noexcept { return bits_ != kEmpty; }
    ChildCells value() const {
        if (!has_value()) throw std::logic_error("empty backpointer");
        return {state_at(bits_ & 7u), state_at(bits_ >> 3 & 7u), state_at(bits_ >> 6 & 7u), state_at(bits_ >> 9 & 7u)};
    }

    friend bool operator==(const Backpointer&, const Backpointer&) = default;

private:
    static constexpr std::uint16_t kEmpty = 0xFFFF;
    std::uint16_t bits_ = kEmpty;
};

struct DPCell {
    std::uint32_t size = kInfeasible;
    Count count = 0;
    Backpointer choice;

    bool feasible() const noexcept { return size != kInfeasible; }
};

/// Minimum partial solutions of one p-graph, indexed by the states of its
/// first and second terminal.
struct StateTable {
    std::array<DPCell, kStateCount * kStateCount> cells;
    /// Whether some edge joins the two terminals. Such edges are excluded
    /// from the terminal states because either end may dominate them later.
    bool terminals_adjacent = false;

    DPCell& at(TerminalState i, TerminalState j) { return cells[index_of(i) * kStateCount + index_of(j)]; }
    const DPCell& at(TerminalState i, TerminalState j) const {
        return cells[index_of(i) * kStateCount + index_of(j)];
    }
};

/// The eight subsets of {u, v, uv} of a single edge u-v, one per finite cell.
StateTable leaf_table();

/// Which of {u, v, uv} the leaf cell (i, j) selects; nullopt for infeasible cells.
struct LeafChoice {
    bool u, v, edge;
};
std::optional<LeafChoice> leaf_choice(TerminalState i, TerminalState j);

/// Left child has terminals (x, z), right (z, y); z becomes internal.
StateTable merge_series(const StateTable& left, const StateTable& right);
/// Both children have terminals (x, y).
StateTable merge_parallel(const StateTable& left, const StateTable& right);
/// Left child has terminals (x, y), right (y, z); z becomes internal.
StateTable merge_gseries(const StateTable& left, const StateTable& right);

struct RootValue {
    std::uint64_t gamma_m = 0;
    Count count = 0;
    /// Lexicographically least root cell attaining gamma_m.
    TerminalState i = TerminalState::InSetWithEdge;
    TerminalState j = TerminalState::InSetWithEdge;
};

class NoSolutionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Minimum over the cells in which both terminals and their edges are
/// dominated; throws NoSolutionError when there is none.
RootValue extract_root(const StateTable& table);

/// Tables for every node, indexed like tree.nodes(). Memory grows with
/// 49 big-integer cells per node, so this is meant for inspection and tests.
std::vector<StateTable> annotate(const ParseTree& tree);

/// Walks backpointers from root cell (i, j) and returns the selected elements,
/// sorted. `tables` must come from annotate(tree).
std::vector<Element> reconstruct(const ParseTree& tree, std::span<const StateTable> tables, TerminalState i,
                                 TerminalState j);

/// Mixed domination number, number of minimum mixed dominating sets, and one
/// such set. Runs in time linear in the number of leaves (up to count arithmetic).
Solution solve(const ParseTree& tree);

}  // namespace gspmixdom
