#include "gspmixdom/model.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace gspmixdom {

bool is_valid_name(std::string_view name) noexcept {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

std::string_view to_string(DiagnosticKind kind) noexcept {
    switch (kind) {
        case DiagnosticKind::SyntaxError: return "SyntaxError";
        case DiagnosticKind::TerminalMismatch: return "TerminalMismatch";
        case DiagnosticKind::SelfLoop: return "SelfLoop";
        case DiagnosticKind::NameCollision: return "NameCollision";
    }
    return "Unknown";
}

std::string ParseDiagnostic::to_string() const {
    return std::to_string(location.line) + ":" + std::to_string(location.column) + ": " +
           std::string(gspmixdom::to_string(kind)) + ": " + message;
}

ParseError::ParseError(ParseDiagnostic diagnostic)
    : std::runtime_error(diagnostic.to_string()), diagnostic_(std::move(diagnostic)) {}

std::vector<LeafEdge> leaf_order(const ParseTree& tree) {
    std::vector<LeafEdge> out;
    out.reserve(tree.leaf_count());
    for (const TreeNode& n : tree.nodes())
        if (n.is_leaf()) out.push_back({n.edge, n.s, n.t});
    return out;
}

namespace {

[[noreturn]] void fail(DiagnosticKind kind, SourceLocation where, std::string message) {
    throw ParseError({kind, where, std::move(message)});
}

}  // namespace

VertexIndex TreeBuilder::intern(std::string_view name, SourceLocation where) {
    if (!is_valid_name(name))
        fail(DiagnosticKind::SyntaxError, where, "invalid vertex name '" + std::string(name) + "'");
    auto [it, inserted] = lookup_.try_emplace(std::string(name), static_cast<VertexIndex>(names_.size()));
    if (inserted) names_.emplace_back(name);
    return it->second;
}

TreeBuilder::Ref TreeBuilder::leaf(std::string_view u, std::string_view v, SourceLocation where) {
    const VertexIndex a = intern(u, where);
    const VertexIndex b = intern(v, where);
    if (a == b) fail(DiagnosticKind::SelfLoop, where, "edge e(" + std::string(u) + "," + std::string(v) + ") is a loop");
    TreeNode n;
    n.kind = NodeKind::Leaf;
    n.s = a;
    n.t = b;
    nodes_.push_back(n);
    locations_.push_back(where);
    expected_vertices_.push_back(2);
    return {static_cast<NodeIndex>(nodes_.size() - 1)};
}

TreeBuilder::Ref TreeBuilder::series(Ref left, Ref right, SourceLocation where) {
    return compose(NodeKind::Series, left, right, where);
}

TreeBuilder::Ref TreeBuilder::parallel(Ref left, Ref right, SourceLocation where) {
    return compose(NodeKind::Parallel, left, right, where);
}

TreeBuilder::Ref TreeBuilder::gseries(Ref left, Ref right, SourceLocation where) {
    return compose(NodeKind::GSeries, left, right, where);
}

TreeBuilder::Ref TreeBuilder::compose(NodeKind kind, Ref left, Ref right, SourceLocation where) {
    if (left.index >= nodes_.size() || right.index >= nodes_.size() || left.index == right.index)
        throw std::invalid_argument("TreeBuilder: invalid child reference");
    const TreeNode& l = nodes_[left.index];
    const TreeNode& r = nodes_[right.index];
    auto nm = [this](VertexIndex v) { return "'" + names_[v] + "'"; };

    TreeNode n;
    n.kind = kind;
    n.left = left.index;
    n.right = right.index;
    std::uint64_t shared = 0;
    switch (kind) {
        case NodeKind::Series:
            if (l.t != r.s)
                fail(DiagnosticKind::TerminalMismatch, where,
                     "series needs left sink " + nm(l.t) + " to equal right source " + nm(r.s));
            if (l.s == r.t)
                fail(DiagnosticKind::SelfLoop, where, "series would identify both terminals " + nm(l.s));
            n.s = l.s;
            n.t = r.t;
            shared = 1;
            break;
        case NodeKind::Parallel:
            if (l.s != r.s || l.t != r.t)
                fail(DiagnosticKind::TerminalMismatch, where,
                     "parallel needs equal terminals, got (" + names_[l.s] + "," + names_[l.t] + ") and (" +
                         names_[r.s] + "," + names_[r.t] + ")");
            n.s = l.s;
            n.t = l.t;
            shared = 2;
            break;
        case NodeKind::GSeries:
            if (r.s != l.t)
                fail(DiagnosticKind::TerminalMismatch, where,
                     "generalized series needs right source " + nm(r.s) + " to equal left sink " + nm(l.t));
            n.s = l.s;
            n.t = l.t;
            shared = 1;
            break;
        case NodeKind::Leaf:
            throw std::invalid_argument("TreeBuilder: compose called with Leaf");
    }
    const std::uint64_t expected = expected_vertices_[left.index] + expected_vertices_[right.index] - shared;
    nodes_.push_back(n);
    locations_.push_back(where);
    expected_vertices_.push_back(expected);
    return {static_cast<NodeIndex>(nodes_.size() - 1)};
}

ParseTree TreeBuilder::finish(Ref root) && {
    if (root.index >= nodes_.size()) throw std::invalid_argument("TreeBuilder: invalid root");

    // Renumber into post-order, detecting shared or orphaned nodes.
    std::vector<NodeIndex> order;
    order.reserve(nodes_.size());
    std::vector<char> seen(nodes_.size(), 0);
    std::vector<std::pair<NodeIndex, bool>> stack{{root.index, false}};
    while (!stack.empty()) {
        auto [i, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            order.push_back(i);
            continue;
        }
        if (seen[i]) throw std::invalid_argument("TreeBuilder: node used more than once");
        seen[i] = 1;
        stack.emplace_back(i, true);
        if (!nodes_[i].is_leaf()) {
            stack.emplace_back(nodes_[i].right, false);
            stack.emplace_back(nodes_[i].left, false);
        }
    }
    if (order.size() != nodes_.size()) throw std::invalid_argument("TreeBuilder: unreachable nodes");

    std::vector<NodeIndex> renumber(nodes_.size());
    for (NodeIndex k = 0; k < order.size(); ++k) renumber[order[k]] = k;

    ParseTree tree;
    tree.nodes_.reserve(order.size());
    std::vector<VertexIndex> rename(names_.size(), kNone);
    auto canonical = [&](VertexIndex v) {
        if (rename[v] == kNone) {
            rename[v] = static_cast<VertexIndex>(tree.names_.size());
            tree.names_.push_back(names_[v]);
        }
        return rename[v];
    };
    EdgeIndex next_edge = 0;
    std::vector<SourceLocation> locations;
    locations.reserve(order.size());
    for (NodeIndex old : order) {
        TreeNode n = nodes_[old];
        if (n.is_leaf()) {
            n.s = canonical(n.s);
            n.t = canonical(n.t);
            n.edge = next_edge++;
        } else {
            // Terminals of internal nodes are inherited, so already renamed.
            n.s = rename[n.s];
            n.t = rename[n.t];
            n.left = renumber[n.left];
            n.right = renumber[n.right];
        }
        tree.nodes_.push_back(n);
        locations.push_back(locations_[old]);
    }

    if (tree.names_.size() != expected_vertices_[root.index]) {
        locations_ = std::move(locations);
        nodes_ = tree.nodes_;
        names_ = tree.names_;
        locate_collision(static_cast<NodeIndex>(nodes_.size() - 1));
    }
    return tree;
}

// Small-to-large merge of vertex sets; only reached when the cheap vertex
// count check has already proven that some collision exists.
void TreeBuilder::locate_collision(NodeIndex root) const {
    std::vector<std::unordered_set<VertexIndex>> sets(root + 1);
    for (NodeIndex i = 0; i <= root; ++i) {
        const TreeNode& n = nodes_[i];
        if (n.is_leaf()) {
            sets[i] = {n.s, n.t};
            continue;
        }
        const TreeNode& l = nodes_[n.left];
        std::unordered_set<VertexIndex> allowed{l.t};
        if (n.kind == NodeKind::Parallel) allowed.insert(l.s);

        auto big = std::move(sets[n.left]);
        auto small = std::move(sets[n.right]);
        if (big.size() < small.size()) std::swap(big, small);
        for (VertexIndex v : small) {
            if (!big.insert(v).second && !allowed.contains(v))
                fail(DiagnosticKind::NameCollision, locations_[i],
                     "vertex '" + names_[v] + "' occurs in both operands but is not an identified terminal");
        }
        sets[i] = std::move(big);
    }
    throw std::logic_error("TreeBuilder: vertex count mismatch without a collision");
}

}  // namespace gspmixdom
