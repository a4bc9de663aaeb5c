#include "gspmixdom/instances.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gspmixdom {

// ---------------------------------------------------------------------------
// generate

namespace {

__extension__ using Wide = unsigned __int128;

class Stream {
public:
    explicit Stream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n) {
        Wide m = static_cast<Wide>(engine_()) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (low < threshold) {
                m = static_cast<Wide>(engine_()) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

class Generator {
public:
    Generator(std::uint64_t seed, const GeneratorWeights& w) : rng_(seed), w_(w), total_(w.series + w.parallel + w.gseries) {}

    TreeBuilder::Ref build(std::size_t leaves, const std::string& s, const std::string& t) {
        if (leaves == 1) return builder_.leaf(s, t);
        const std::size_t left = 1 + rng_.below(leaves - 1);
        const std::size_t right = leaves - left;
        const double draw = rng_.unit() * total_;
        if (draw < w_.series || (w_.parallel == 0 && w_.gseries == 0)) {
            const std::string z = fresh();
            auto l = build(left, s, z);
            return builder_.series(l, build(right, z, t));
        }
        if (draw < w_.series + w_.parallel || w_.gseries == 0) {
            auto l = build(left, s, t);
            return builder_.parallel(l, build(right, s, t));
        }
        const std::string z = fresh();
        auto l = build(left, s, t);
        return builder_.gseries(l, build(right, t, z));
    }

    std::string fresh() { return "v" + std::to_string(next_name_++); }

    ParseTree finish(TreeBuilder::Ref root) { return std::move(builder_).finish(root); }

private:
    Stream rng_;
    GeneratorWeights w_;
    double total_;
    std::size_t next_name_ = 0;
    TreeBuilder builder_;
};

}  // namespace

ParseTree generate(std::uint64_t seed, std::size_t leaves, const GeneratorWeights& weights) {
    if (leaves == 0) throw std::invalid_argument("generate: need at least one leaf");
    for (double w : {weights.series, weights.parallel, weights.gseries})
        if (!std::isfinite(w) || w < 0) throw std::invalid_argument("generate: weights must be finite and >= 0");
    if (weights.series + weights.parallel + weights.gseries <= 0)
        throw std::invalid_argument("generate: weights must not all be zero");

    Generator gen(seed, weights);
    const std::string s = gen.fresh();
    const std::string t = gen.fresh();
    return gen.finish(gen.build(leaves, s, t));
}

// ---------------------------------------------------------------------------
// decompose

namespace {

/// A reduced piece of the input graph between two surviving vertices.
struct Fragment {
    enum class Kind { Edge, Series, Parallel } kind = Kind::Edge;
    VertexIndex a = kNone, b = kNone;              // endpoints; Series: first connects a-mid, second mid-b
    int first = -1, second = -1;    // child fragments
    VertexIndex mid = kNone;        // Series: the contracted vertex
    std::vector<int> mid_hanging;   // Series: pendants that hung at mid
    EdgeIndex min_edge = kNone;     // for a stable parallel child order
};

/// A fragment detached at `base`, with whatever hung at its far end `tip`.
struct Pendant {
    int fragment;
    VertexIndex base, tip;
    std::vector<int> tip_hanging;
};

class Reducer {
public:
    Reducer(const Multigraph& g, VertexIndex source, VertexIndex sink)
        : g_(g), source_(source), sink_(sink), adj_(g.vertex_count()), hanging_(g.vertex_count()) {}

    ParseTree run() {
        for (EdgeIndex e = 0; e < g_.edge_count(); ++e) {
            const Edge& edge = g_.edge(e);
            Fragment f;
            f.kind = Fragment::Kind::Edge;
            f.a = edge.u;
            f.b = edge.v;
            f.min_edge = e;
            frags_.push_back(std::move(f));
            link(static_cast<int>(frags_.size() - 1));
        }
        for (VertexIndex v = 0; v < g_.vertex_count(); ++v) refresh(v);

        while (!candidates_.empty()) {
            const VertexIndex v = candidates_.begin()->second;
            candidates_.erase(candidates_.begin());
            if (adj_[v].size() == 1)
                detach(v);
            else
                contract(v);
        }

        const bool reduced = adj_[source_].size() == 1 && adj_[source_].contains(sink_) && remaining() == 2;
        if (!reduced)
            throw DecomposeError(DecomposeError::Kind::NotReducible,
                                 "graph is not reducible to a single edge between '" + g_.name(source_) + "' and '" +
                                     g_.name(sink_) + "'");
        if (!hanging_[source_].empty())
            throw DecomposeError(DecomposeError::Kind::NotReducible,
                                 "a subgraph hangs off source terminal '" + g_.name(source_) + "'");

        auto root = build(adj_[source_].at(sink_), source_, sink_);
        root = attach(root, hanging_[sink_], sink_);
        return std::move(builder_).finish(root);
    }

private:
    std::size_t remaining() const {
        return static_cast<std::size_t>(std::count_if(adj_.begin(), adj_.end(), [](const auto& m) { return !m.empty(); }));
    }

    bool is_terminal(VertexIndex v) const { return v == source_ || v == sink_; }

    void refresh(VertexIndex v) {
        const auto key = std::make_pair(g_.name(v), v);
        const std::size_t deg = adj_[v].size();
        if (!is_terminal(v) && (deg == 1 || deg == 2))
            candidates_.insert(key);
        else
            candidates_.erase(key);
    }

    /// Adds fragment f between its endpoints, merging with an existing
    /// fragment on the same pair.
    void link(int f) {
        const VertexIndex a = frags_[f].a, b = frags_[f].b;
        auto it = adj_[a].find(b);
        if (it != adj_[a].end()) {
            int first = it->second, second = f;
            if (frags_[second].min_edge < frags_[first].min_edge) std::swap(first, second);
            Fragment p;
            p.kind = Fragment::Kind::Parallel;
            p.a = a;
            p.b = b;
            p.first = first;
            p.second = second;
            p.min_edge = std::min(frags_[first].min_edge, frags_[second].min_edge);
            frags_.push_back(std::move(p));
            f = static_cast<int>(frags_.size() - 1);
        }
        adj_[a][b] = f;
        adj_[b][a] = f;
    }

    void detach(VertexIndex v) {
        const auto [w, f] = *adj_[v].begin();
        adj_[v].clear();
        adj_[w].erase(v);
        pendants_.push_back({f, w, v, std::move(hanging_[v])});
        hanging_[w].push_back(static_cast<int>(pendants_.size() - 1));
        refresh(w);
    }

    void contract(VertexIndex v) {
        auto it = adj_[v].begin();
        const auto [a, fa] = *it++;
        const auto [b, fb] = *it;
        adj_[v].clear();
        adj_[a].erase(v);
        adj_[b].erase(v);
        Fragment s;
        s.kind = Fragment::Kind::Series;
        s.a = a;
        s.b = b;
        s.first = fa;
        s.second = fb;
        s.mid = v;
        s.mid_hanging = std::move(hanging_[v]);
        s.min_edge = std::min(frags_[fa].min_edge, frags_[fb].min_edge);
        frags_.push_back(std::move(s));
        link(static_cast<int>(frags_.size() - 1));
        refresh(a);
        refresh(b);
    }

    TreeBuilder::Ref build(int f, VertexIndex from, VertexIndex to) {
        const Fragment& frag = frags_[f];
        switch (frag.kind) {
            case Fragment::Kind::Edge: return builder_.leaf(g_.name(from), g_.name(to));
            case Fragment::Kind::Parallel: {
                auto l = build(frag.first, from, to);
                return builder_.parallel(l, build(frag.second, from, to));
            }
            case Fragment::Kind::Series: {
                const bool forward = frag.a == from;
                auto l = build(forward ? frag.first : frag.second, from, frag.mid);
                l = attach(l, frag.mid_hanging, frag.mid);
                return builder_.series(l, build(forward ? frag.second : frag.first, frag.mid, to));
            }
        }
        throw std::logic_error("decompose: bad fragment");
    }

    /// Hangs every pendant in `list` off the sink `at` of `base`.
    TreeBuilder::Ref attach(TreeBuilder::Ref base, const std::vector<int>& list, VertexIndex at) {
        for (int p : list) {
            const Pendant& pend = pendants_[p];
            auto piece = build(pend.fragment, at, pend.tip);
            piece = attach(piece, pend.tip_hanging, pend.tip);
            base = builder_.gseries(base, piece);
        }
        return base;
    }

    const Multigraph& g_;
    VertexIndex source_, sink_;
    std::vector<std::map<VertexIndex, int>> adj_;
    std::vector<std::vector<int>> hanging_;
    std::vector<Fragment> frags_;
    std::vector<Pendant> pendants_;
    std::set<std::pair<std::string, VertexIndex>> candidates_;
    TreeBuilder builder_;
};

}  // namespace

ParseTree decompose(const Multigraph& graph, VertexIndex source, VertexIndex sink) {
    if (source >= graph.vertex_count() || sink >= graph.vertex_count())
        throw DecomposeError(DecomposeError::Kind::BadTerminals, "terminal is not a vertex of the graph");
    if (source == sink) throw DecomposeError(DecomposeError::Kind::BadTerminals, "terminals must differ");
    if (!graph.is_connected()) throw DecomposeError(DecomposeError::Kind::Disconnected, "graph is disconnected");
    return Reducer(graph, source, sink).run();
}

ParseTree decompose_any(const Multigraph& graph) {
    std::vector<VertexIndex> order(graph.vertex_count());
    std::iota(order.begin(), order.end(), VertexIndex{0});
    std::sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) { return graph.name(a) < graph.name(b); });
    std::optional<DecomposeError> last;
    for (VertexIndex s : order) {
        for (VertexIndex t : order) {
            if (s == t) continue;
            try {
                return decompose(graph, s, t);
            } catch (const DecomposeError& e) {
                if (e.kind() != DecomposeError::Kind::NotReducible) throw;
                last = e;
            }
        }
    }
    if (last) throw *last;
    throw DecomposeError(DecomposeError::Kind::BadTerminals, "graph needs at least two vertices");
}

}  // namespace gspmixdom
