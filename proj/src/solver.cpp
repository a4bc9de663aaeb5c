#include "gspmixdom/solver.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <utility>

namespace gspmixdom {

namespace {

using TS = TerminalState;

constexpr std::size_t cell_index(TS i, TS j) { return index_of(i) * kStateCount + index_of(j); }

constexpr std::uint32_t in_set(TS s) { return flags_of(s).in_set ? 1u : 0u; }

struct LeafCell {
    TS i, j;
    LeafChoice choice;
};

constexpr std::array<LeafCell, 8> kLeafCells{{
    {TS::InSetWithEdge, TS::InSetWithEdge, {true, true, true}},
    {TS::InSetWithEdge, TS::EdgeInSet, {true, false, true}},
    {TS::EdgeInSet, TS::InSetWithEdge, {false, true, true}},
    {TS::InSet, TS::InSet, {true, true, false}},
    {TS::EdgeInSet, TS::EdgeInSet, {false, false, true}},
    {TS::InSet, TS::Dominated, {true, false, false}},
    {TS::Dominated, TS::InSet, {false, true, false}},
    // The edge joins the two terminals, so it is left to them: both ends
    // count as undominated but with no open edge of their own.
    {TS::Undominated, TS::Undominated, {false, false, false}},
}};

/// Where a pair of child cells lands in the parent, if anywhere.
struct Target {
    std::uint8_t cell;
    std::uint8_t overlap;  // shared terminals counted by both children
};

// A merge rule maps (left cell, right cell) to an optional Target. The rules
// are tabulated once per (kind, left adjacency, right adjacency), together
// with a bitmask per left cell of the right cells that have a target.
struct RuleTable {
    std::array<std::array<Target, 49>, 49> target;
    std::array<std::uint64_t, 49> valid;
};

std::optional<Target> series_rule(TS li, TS lj, TS ri, TS rj, bool ladj, bool radj) {
    const auto z = combine(lj, ri);
    if (!z || !is_settled(*z)) return std::nullopt;
    // z leaves the boundary: edges x-z / z-y stay undominated unless z is covered,
    // and then only the surviving terminal can still take care of them.
    TS i = li, j = rj;
    if (ladj && !is_covered(*z)) i = with_open_edge(i);
    if (radj && !is_covered(*z)) j = with_open_edge(j);
    return Target{static_cast<std::uint8_t>(cell_index(i, j)), static_cast<std::uint8_t>(in_set(lj))};
}

std::optional<Target> parallel_rule(TS li, TS lj, TS ri, TS rj, bool, bool) {
    const auto x = combine(li, ri);
    const auto y = combine(lj, rj);
    if (!x || !y) return std::nullopt;
    return Target{static_cast<std::uint8_t>(cell_index(*x, *y)), static_cast<std::uint8_t>(in_set(li) + in_set(lj))};
}

std::optional<Target> gseries_rule(TS li, TS lj, TS ri, TS rj, bool, bool radj) {
    if (!is_settled(rj)) return std::nullopt;
    const auto y = combine(lj, ri);
    if (!y) return std::nullopt;
    TS j = *y;
    if (radj && !is_covered(rj)) j = with_open_edge(j);
    return Target{static_cast<std::uint8_t>(cell_index(li, j)), static_cast<std::uint8_t>(in_set(lj))};
}

template <class Rule>
RuleTable tabulate(Rule rule, bool ladj, bool radj) {
    RuleTable t{};
    for (std::size_t a = 0; a < 49; ++a)
        for (std::size_t b = 0; b < 49; ++b)
            if (const auto r = rule(state_at(a / 7), state_at(a % 7), state_at(b / 7), state_at(b % 7), ladj, radj)) {
                t.target[a][b] = *r;
                t.valid[a] |= std::uint64_t{1} << b;
            }
    return t;
}

enum class MergeKind { Series, Parallel, GSeries };

const RuleTable& rules(MergeKind kind, bool ladj, bool radj) {
    static const auto all = [] {
        std::array<RuleTable, 12> t{};
        for (int k = 0; k < 4; ++k) {
            const bool l = k & 1, r = k & 2;
            t[0 + k] = tabulate(series_rule, l, r);
            t[4 + k] = tabulate(parallel_rule, l, r);
            t[8 + k] = tabulate(gseries_rule, l, r);
        }
        return t;
    }();
    return all[static_cast<std::size_t>(kind) * 4 + (ladj ? 1 : 0) + (radj ? 2 : 0)];
}

bool merged_adjacency(MergeKind kind, bool ladj, bool radj) {
    switch (kind) {
        case MergeKind::Series: return false;  // x and y lie in different operands
        case MergeKind::Parallel: return ladj || radj;
        case MergeKind::GSeries: return ladj;
    }
    return false;
}

std::uint64_t feasible_mask(const StateTable& t) {
    std::uint64_t m = 0;
    for (std::size_t c = 0; c < 49; ++c)
        if (t.cells[c].feasible()) m |= std::uint64_t{1} << c;
    return m;
}

/// Writes the merge of left and right into `out`, which must alias neither.
/// Counts of infeasible cells in `out` are left untouched; in a fresh table
/// they are zero. Reusing `out` keeps the big-integer buffers of its counts.
void merge_into(MergeKind kind, const StateTable& left, const StateTable& right, StateTable& out) {
    const RuleTable& rule = rules(kind, left.terminals_adjacent, right.terminals_adjacent);
    const std::uint64_t lmask = feasible_mask(left);
    const std::uint64_t rmask = feasible_mask(right);

    for (DPCell& c : out.cells) {
        c.size = kInfeasible;
        c.choice = Backpointer();
    }
    out.terminals_adjacent = merged_adjacency(kind, left.terminals_adjacent, right.terminals_adjacent);

    // Sizes and argmins first; lexicographic order of (left cell, right cell)
    // with strict improvement fixes the tie-break.
    for (std::uint64_t la = lmask; la; la &= la - 1) {
        const int a = std::countr_zero(la);
        const DPCell& lc = left.cells[a];
        for (std::uint64_t rb = rule.valid[a] & rmask; rb; rb &= rb - 1) {
            const int b = std::countr_zero(rb);
            const Target t = rule.target[a][b];
            const std::uint32_t size = lc.size + right.cells[b].size - t.overlap;
            DPCell& cell = out.cells[t.cell];
            if (size < cell.size) {
                cell.size = size;
                cell.choice = Backpointer(ChildCells{state_at(a / 7), state_at(a % 7), state_at(b / 7), state_at(b % 7)});
            }
        }
    }

    // Distinct child-cell pairs describe disjoint families of solutions, so
    // counts of all minimising pairs add up.
    std::uint64_t started = 0;
    Count product;
    for (std::uint64_t la = lmask; la; la &= la - 1) {
        const int a = std::countr_zero(la);
        const DPCell& lc = left.cells[a];
        for (std::uint64_t rb = rule.valid[a] & rmask; rb; rb &= rb - 1) {
            const int b = std::countr_zero(rb);
            const Target t = rule.target[a][b];
            const DPCell& rc = right.cells[b];
            DPCell& cell = out.cells[t.cell];
            if (lc.size + rc.size - t.overlap != cell.size) continue;
            const std::uint64_t bit = std::uint64_t{1} << t.cell;
            if (started & bit) {
                boost::multiprecision::multiply(product, lc.count, rc.count);
                cell.count += product;
            } else {
                boost::multiprecision::multiply(cell.count, lc.count, rc.count);
                started |= bit;
            }
        }
    }
}

StateTable merge(MergeKind kind, const StateTable& left, const StateTable& right) {
    StateTable out;
    merge_into(kind, left, right, out);
    return out;
}

MergeKind merge_kind(const TreeNode& n) {
    switch (n.kind) {
        case NodeKind::Series: return MergeKind::Series;
        case NodeKind::Parallel: return MergeKind::Parallel;
        case NodeKind::GSeries: return MergeKind::GSeries;
        case NodeKind::Leaf: break;
    }
    throw std::logic_error("merge_kind: leaf");
}

/// Overwrites the sizes and feasible counts of `t` with the leaf table's,
/// without releasing count storage.
void assign_leaf(StateTable& t, const StateTable& leaf) {
    for (std::size_t c = 0; c < 49; ++c) {
        t.cells[c].size = leaf.cells[c].size;
        if (leaf.cells[c].feasible()) t.cells[c].count = leaf.cells[c].count;
    }
    t.terminals_adjacent = leaf.terminals_adjacent;
}

/// `choice_of(node, i, j)` yields the Backpointer stored for an internal node.
template <class ChoiceOf>
std::vector<Element> walk_backpointers(const ParseTree& tree, ChoiceOf choice_of, TS i, TS j) {
    std::vector<char> vertex_taken(tree.vertex_count(), 0);
    std::vector<Element> out;
    struct Visit {
        NodeIndex node;
        TS i, j;
    };
    std::vector<Visit> todo{{tree.root(), i, j}};
    while (!todo.empty()) {
        const Visit v = todo.back();
        todo.pop_back();
        const TreeNode& n = tree.node(v.node);
        if (n.is_leaf()) {
            const auto pick = leaf_choice(v.i, v.j);
            if (!pick) throw std::logic_error("reconstruct: infeasible leaf cell");
            auto take = [&](VertexIndex x) {
                if (!vertex_taken[x]) {
                    vertex_taken[x] = 1;
                    out.push_back(Element::vertex(x));
                }
            };
            if (pick->u) take(n.s);
            if (pick->v) take(n.t);
            if (pick->edge) out.push_back(Element::edge(n.edge));
            continue;
        }
        const Backpointer bp = choice_of(v.node, v.i, v.j);
        const ChildCells c = bp.value();
        todo.push_back({n.right, c.right_i, c.right_j});
        todo.push_back({n.left, c.left_i, c.left_j});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

StateTable leaf_table() {
    StateTable t;
    t.terminals_adjacent = true;
    for (const LeafCell& c : kLeafCells) {
        DPCell& cell = t.at(c.i, c.j);
        cell.size = (c.choice.u ? 1 : 0) + (c.choice.v ? 1 : 0) + (c.choice.edge ? 1 : 0);
        cell.count = 1;
    }
    return t;
}

std::optional<LeafChoice> leaf_choice(TerminalState i, TerminalState j) {
    for (const LeafCell& c : kLeafCells)
        if (c.i == i && c.j == j) return c.choice;
    return std::nullopt;
}

StateTable merge_series(const StateTable& left, const StateTable& right) {
    return merge(MergeKind::Series, left, right);
}

StateTable merge_parallel(const StateTable& left, const StateTable& right) {
    return merge(MergeKind::Parallel, left, right);
}

StateTable merge_gseries(const StateTable& left, const StateTable& right) {
    return merge(MergeKind::GSeries, left, right);
}

RootValue extract_root(const StateTable& table) {
    RootValue best;
    std::uint32_t min = kInfeasible;
    for (TS i : kAllStates) {
        if (!is_settled(i)) continue;
        for (TS j : kAllStates) {
            if (!is_settled(j)) continue;
            // An edge between the terminals needs one of them covered.
            if (table.terminals_adjacent && !is_covered(i) && !is_covered(j)) continue;
            const DPCell& cell = table.at(i, j);
            if (!cell.feasible()) continue;
            if (cell.size < min) {
                min = cell.size;
                best.i = i;
                best.j = j;
                best.count = cell.count;
            } else if (cell.size == min) {
                best.count += cell.count;
            }
        }
    }
    if (min == kInfeasible) throw NoSolutionError("extract_root: no settled feasible cell");
    best.gamma_m = min;
    return best;
}

std::vector<StateTable> annotate(const ParseTree& tree) {
    std::vector<StateTable> tables(tree.nodes().size());
    const StateTable leaf = leaf_table();
    for (NodeIndex k = 0; k < tree.nodes().size(); ++k) {
        const TreeNode& n = tree.node(k);
        tables[k] = n.is_leaf() ? leaf : merge(merge_kind(n), tables[n.left], tables[n.right]);
    }
    return tables;
}

std::vector<Element> reconstruct(const ParseTree& tree, std::span<const StateTable> tables, TerminalState i,
                                 TerminalState j) {
    if (tables.size() != tree.nodes().size()) throw std::invalid_argument("reconstruct: table count mismatch");
    return walk_backpointers(
        tree, [&](NodeIndex node, TS a, TS b) { return tables[node].at(a, b).choice; }, i, j);
}

Solution solve(const ParseTree& tree) {
    const auto& nodes = tree.nodes();
    const StateTable leaf = leaf_table();

    // Only backpointers outlive the traversal. Live tables number at most
    // the tree height plus one; they come from a pool and are recycled, so
    // their counts are only meaningful in feasible cells.
    std::vector<std::array<Backpointer, 49>> choices;
    choices.reserve(nodes.size() / 2);
    std::vector<std::uint32_t> slot(nodes.size(), kNone);
    std::deque<StateTable> pool;
    std::vector<StateTable*> spare, stack;
    auto fresh = [&]() -> StateTable& {
        if (spare.empty()) return pool.emplace_back();
        StateTable* t = spare.back();
        spare.pop_back();
        return *t;
    };

    for (NodeIndex k = 0; k < nodes.size(); ++k) {
        const TreeNode& n = nodes[k];
        if (n.is_leaf()) {
            StateTable& t = fresh();
            assign_leaf(t, leaf);
            stack.push_back(&t);
            continue;
        }
        StateTable& out = fresh();
        StateTable* right = stack.back();
        stack.pop_back();
        StateTable* left = stack.back();
        merge_into(merge_kind(n), *left, *right, out);
        spare.push_back(left);
        spare.push_back(right);
        stack.back() = &out;
        slot[k] = static_cast<std::uint32_t>(choices.size());
        auto& bp = choices.emplace_back();
        for (std::size_t c = 0; c < 49; ++c) bp[c] = out.cells[c].choice;
    }

    const RootValue root = extract_root(*stack.back());
    Solution sol;
    sol.gamma_m = root.gamma_m;
    sol.count = root.count;
    sol.witness = walk_backpointers(
        tree, [&](NodeIndex node, TS a, TS b) { return choices[slot[node]][cell_index(a, b)]; }, root.i, root.j);
    if (sol.witness.size() != sol.gamma_m) throw std::logic_error("solve: witness size differs from gamma_m");
    return sol;
}

}  // namespace gspmixdom
