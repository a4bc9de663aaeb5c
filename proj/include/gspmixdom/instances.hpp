#pragma once

#include <cstdint>
#include <stdexcept>

#include "gspmixdom/model.hpp"
#include "gspmixdom/realizer.hpp"

namespace gspmixdom {

/// Relative odds of series, parallel and generalized-series nodes.
struct GeneratorWeights {
    double series = 1.0;
    double parallel = 1.0;
    double gseries = 1.0;
};

/// Random parse tree with exactly `leaves` leaves.
///
/// Deterministic in (seed, leaves, weights): the stream is std::mt19937_64
/// seeded with `seed`, integers in [0, n) use Lemire's multiply-shift with
/// rejection, and reals use the top 53 bits. Per internal node, the left
/// leaf budget is drawn first (uniform in [1, leaves - 1]), then the kind.
/// Vertices are named v0, v1, ... in creation order with (v0, v1) the root
/// terminals.
///
/// Throws std::invalid_argument when leaves == 0 or the weights are negative,
/// non-finite or all zero.
ParseTree generate(std::uint64_t seed, std::size_t leaves, const GeneratorWeights& weights = {});

class DecomposeError : public std::runtime_error {
public:
    enum class Kind { NotReducible, Disconnected, BadTerminals };

    DecomposeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Parse tree for `graph` with terminals (source, sink), found by repeatedly
/// merging parallel edges, contracting degree-2 non-terminals and detaching
/// degree-1 non-terminals, lowest vertex name first. Best effort: a GSP graph
/// can still be rejected for an unlucky terminal pair, e.g. when something
/// hangs off the source.
ParseTree decompose(const Multigraph& graph, VertexIndex source, VertexIndex sink);

/// Tries terminal pairs in order of (source name, sink name); throws the
/// last NotReducible error when none works.
ParseTree decompose_any(const Multigraph& graph);

}  // namespace gspmixdom
