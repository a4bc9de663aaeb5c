#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace gspmixdom {

/// Minimum-set counts multiply across subtrees, so they are unbounded.
using Count = boost::multiprecision::mpz_int;

using VertexIndex = std::uint32_t;
using NodeIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

/// True when `name` is a non-empty run of [A-Za-z0-9_].
bool is_valid_name(std::string_view name) noexcept;

// ---------------------------------------------------------------------------
// Diagnostics

enum class DiagnosticKind : std::uint8_t { SyntaxError, TerminalMismatch, SelfLoop, NameCollision };

std::string_view to_string(DiagnosticKind kind) noexcept;

struct SourceLocation {
    std::uint32_t line = 1;
    std::uint32_t column = 1;

    friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

struct ParseDiagnostic {
    DiagnosticKind kind = DiagnosticKind::SyntaxError;
    SourceLocation location;
    std::string message;

    /// "line:col: Kind: message"
    std::string to_string() const;
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(ParseDiagnostic diagnostic);
    const ParseDiagnostic& diagnostic() const noexcept { return diagnostic_; }

private:
    ParseDiagnostic diagnostic_;
};

// ---------------------------------------------------------------------------
// Parse tree

enum class NodeKind : std::uint8_t { Leaf, Series, Parallel, GSeries };

/// One node of a binary parse tree. Internal nodes reference their children
/// by position in the owning tree's node array; leaves carry their edge ordinal.
struct TreeNode {
    NodeKind kind = NodeKind::Leaf;
    VertexIndex s = kNone;
    VertexIndex t = kNone;
    NodeIndex left = kNone;
    NodeIndex right = kNone;
    EdgeIndex edge = kNone;

    bool is_leaf() const noexcept { return kind == NodeKind::Leaf; }
    friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct LeafEdge {
    EdgeIndex index;
    VertexIndex u;
    VertexIndex v;
};

/// Immutable, validated parse tree of a generalized series-parallel graph.
///
/// Storage is canonical: nodes in post-order (left subtree, right subtree,
/// node), the root last, leaves numbered left to right, and vertex names
/// interned in order of first appearance along the leaves. Two trees that
/// describe the same expression therefore compare equal member-wise.
class ParseTree {
public:
    const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
    const TreeNode& node(NodeIndex i) const { return nodes_[i]; }
    NodeIndex root() const noexcept { return static_cast<NodeIndex>(nodes_.size() - 1); }

    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(VertexIndex v) const { return names_[v]; }
    std::size_t vertex_count() const noexcept { return names_.size(); }
    std::size_t leaf_count() const noexcept { return (nodes_.size() + 1) / 2; }

    VertexIndex source() const { return nodes_.back().s; }
    VertexIndex sink() const { return nodes_.back().t; }

    friend bool operator==(const ParseTree&, const ParseTree&) = default;

private:
    friend class TreeBuilder;
    std::vector<TreeNode> nodes_;
    std::vector<std::string> names_;
};

/// Leaves in left-to-right order; entry k has index k.
std::vector<LeafEdge> leaf_order(const ParseTree& tree);

/// Incremental, validating constructor for ParseTree.
///
/// Each composition checks its terminal rules immediately; name collisions
/// between sibling subtrees are checked once in finish(). Violations throw
/// ParseError carrying the location passed with the offending node.
class TreeBuilder {
public:
    struct Ref {
        NodeIndex index = kNone;
    };

    Ref leaf(std::string_view u, std::string_view v, SourceLocation where = {});
    Ref series(Ref left, Ref right, SourceLocation where = {});
    Ref parallel(Ref left, Ref right, SourceLocation where = {});
    Ref gseries(Ref left, Ref right, SourceLocation where = {});

    VertexIndex source_of(Ref r) const { return nodes_.at(r.index).s; }
    VertexIndex sink_of(Ref r) const { return nodes_.at(r.index).t; }

    /// Validates that `root` spans every node built so far exactly once and
    /// that sibling vertex sets meet only at identified terminals.
    ParseTree finish(Ref root) &&;

private:
    VertexIndex intern(std::string_view name, SourceLocation where);
    Ref compose(NodeKind kind, Ref left, Ref right, SourceLocation where);
    [[noreturn]] void locate_collision(NodeIndex root) const;

    std::vector<TreeNode> nodes_;
    std::vector<SourceLocation> locations_;
    std::vector<std::uint64_t> expected_vertices_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexIndex> lookup_;
};

// ---------------------------------------------------------------------------
// Graph elements

enum class ElementKind : std::uint8_t { Vertex, Edge };

/// A vertex (by vertex index) or an edge (by leaf ordinal).
struct Element {
    ElementKind kind = ElementKind::Vertex;
    std::uint32_t index = 0;

    static constexpr Element vertex(VertexIndex v) noexcept { return {ElementKind::Vertex, v}; }
    static constexpr Element edge(EdgeIndex e) noexcept { return {ElementKind::Edge, e}; }
    bool is_vertex() const noexcept { return kind == ElementKind::Vertex; }
    bool is_edge() const noexcept { return kind == ElementKind::Edge; }

    friend auto operator<=>(const Element&, const Element&) = default;
};

struct Solution {
    std::uint64_t gamma_m = 0;
    Count count = 0;
    std::vector<Element> witness;  // sorted: vertices by index, then edges

    friend bool operator==(const Solution&, const Solution&) = default;
};

}  // namespace gspmixdom
