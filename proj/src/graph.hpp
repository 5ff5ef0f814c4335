#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace knowtemp {

struct PaperNode {
    std::string id;
    int year = 0;
    bool is_pioneer = false;
    std::string title;  // metadata only
};

// Immutable directed citation graph at a fixed timestamp.
//
// A stored edge u -> v means "v cites u": knowledge flows from the cited
// paper to the citer. With that convention the out-degree of u is its
// in-topic citation count and the in-neighbours of v are the papers v
// cites (its parents).
class TopicGraph {
public:
    TopicGraph() = default;

    // Nodes may arrive in any order; dense indices are assigned by sorted id.
    // Edges are (cited, citer) id pairs, i.e. already in stored direction.
    // Duplicate edges collapse to one; self-citations are rejected.
    // timestamp < 0 means "use the maximum node year".
    static TopicGraph build(std::vector<PaperNode> nodes,
                            const std::vector<std::pair<std::string, std::string>>& edges,
                            int timestamp = -1);

    int node_count() const { return static_cast<int>(nodes_.size()); }
    int edge_count() const { return edge_count_; }
    int timestamp() const { return timestamp_; }

    // Dense index of the pioneering paper, -1 when no node carries the flag.
    int pioneer() const { return pioneer_; }

    const PaperNode& node(int idx) const { return nodes_[idx]; }
    const std::vector<PaperNode>& nodes() const { return nodes_; }

    // -1 when the id is unknown.
    int find(const std::string& id) const;
    // Throws NodeNotFoundError when the id is unknown.
    int index_of(const std::string& id) const;

    // Papers citing u (successors along stored edges), ascending.
    std::span<const int> citers(int u) const;
    // Papers u cites (u's predecessors / parents), ascending.
    std::span<const int> cited(int u) const;

    // Number of distinct citers of u. Throws NodeNotFoundError on a bad index.
    int out_degree(int u) const;

    bool has_edge(int u, int v) const;

    const std::vector<std::vector<int>>& out_adjacency() const { return citers_; }

private:
    std::vector<PaperNode> nodes_;          // sorted by id
    std::vector<std::vector<int>> citers_;  // out-neighbours, sorted
    std::vector<std::vector<int>> cited_;   // in-neighbours, sorted
    int edge_count_ = 0;
    int timestamp_ = 0;
    int pioneer_ = -1;
};

// Induced subgraph on nodes with year <= year. The pioneer is always present;
// throws EmptySnapshotError when year precedes the pioneer's publication.
TopicGraph build_snapshot(const TopicGraph& full, int year);

// Sparse directed graph with positive real edge weights. Used for shrunk
// graphs and as the von Neumann entropy input.
class WeightedDigraph {
public:
    WeightedDigraph() = default;
    explicit WeightedDigraph(int n) : out_(n) {}

    int size() const { return static_cast<int>(out_.size()); }

    // Inserts or overwrites; w must be > 0, u != v allowed only for u == v
    // self-loops (kept, they matter for the entropy edge case).
    void set_edge(int u, int v, double w);
    bool has_edge(int u, int v) const;
    double weight(int u, int v) const;  // 0 when absent

    // (target, weight) pairs sorted by target.
    const std::vector<std::pair<int, double>>& out(int u) const { return out_[u]; }

    int edge_count() const;
    double total_weight() const;

    std::vector<std::vector<int>> out_adjacency() const;

private:
    std::vector<std::vector<std::pair<int, double>>> out_;
};

WeightedDigraph to_weighted(const TopicGraph& g);

// Tarjan, iterative. Components are returned sorted by their smallest member
// and each component's node list is ascending, so the partition is
// deterministic for a fixed input.
std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& out_adj);
std::vector<std::vector<int>> strongly_connected_components(const TopicGraph& g);
std::vector<std::vector<int>> strongly_connected_components(const WeightedDigraph& g);

}  // namespace knowtemp
