#include "graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "errors.hpp"

namespace knowtemp {

TopicGraph TopicGraph::build(std::vector<PaperNode> nodes,
                             const std::vector<std::pair<std::string, std::string>>& edges,
                             int timestamp) {
    TopicGraph g;
    std::sort(nodes.begin(), nodes.end(),
              [](const PaperNode& a, const PaperNode& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (nodes[i - 1].id == nodes[i].id) {
            throw ValidationError("duplicate node id '" + nodes[i].id + "'");
        }
    }
    g.nodes_ = std::move(nodes);
    const int n = g.node_count();
    g.citers_.assign(n, {});
    g.cited_.assign(n, {});

    int max_year = 0;
    for (int i = 0; i < n; ++i) {
        if (g.nodes_[i].is_pioneer) {
            g.pioneer_ = i;
        }
        max_year = std::max(max_year, g.nodes_[i].year);
    }
    g.timestamp_ = timestamp < 0 ? max_year : timestamp;

    std::set<std::pair<int, int>> seen;
    for (const auto& [cited_id, citer_id] : edges) {
        const int u = g.find(cited_id);
        const int v = g.find(citer_id);
        if (u < 0) throw ValidationError("edge references undeclared node '" + cited_id + "'");
        if (v < 0) throw ValidationError("edge references undeclared node '" + citer_id + "'");
        if (u == v) throw ValidationError("self-citation on node '" + cited_id + "'");
        if (seen.insert({u, v}).second) {
            g.citers_[u].push_back(v);
            g.cited_[v].push_back(u);
            ++g.edge_count_;
        }
    }
    for (auto& lst : g.citers_) std::sort(lst.begin(), lst.end());
    for (auto& lst : g.cited_) std::sort(lst.begin(), lst.end());
    return g;
}

int TopicGraph::find(const std::string& id) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                               [](const PaperNode& n, const std::string& key) { return n.id < key; });
    if (it == nodes_.end() || it->id != id) return -1;
    return static_cast<int>(it - nodes_.begin());
}

int TopicGraph::index_of(const std::string& id) const {
    const int idx = find(id);
    if (idx < 0) throw NodeNotFoundError("unknown node '" + id + "'");
    return idx;
}

std::span<const int> TopicGraph::citers(int u) const { return citers_[u]; }

std::span<const int> TopicGraph::cited(int u) const { return cited_[u]; }

int TopicGraph::out_degree(int u) const {
    if (u < 0 || u >= node_count()) {
        throw NodeNotFoundError("node index " + std::to_string(u) + " out of range");
    }
    return static_cast<int>(citers_[u].size());
}

bool TopicGraph::has_edge(int u, int v) const {
    const auto& lst = citers_[u];
    return std::binary_search(lst.begin(), lst.end(), v);
}

TopicGraph build_snapshot(const TopicGraph& full, int year) {
    if (full.pioneer() >= 0 && year < full.node(full.pioneer()).year) {
        throw EmptySnapshotError("snapshot year " + std::to_string(year) +
                                 " precedes the pioneer's publication year " +
                                 std::to_string(full.node(full.pioneer()).year));
    }
    std::vector<PaperNode> nodes;
    for (const auto& n : full.nodes()) {
        if (n.year <= year) nodes.push_back(n);
    }
    if (nodes.empty()) {
        throw EmptySnapshotError("no nodes published by " + std::to_string(year));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (int u = 0; u < full.node_count(); ++u) {
        if (full.node(u).year > year) continue;
        for (int v : full.citers(u)) {
            if (full.node(v).year <= year) {
                edges.emplace_back(full.node(u).id, full.node(v).id);
            }
        }
    }
    return TopicGraph::build(std::move(nodes), edges, year);
}

void WeightedDigraph::set_edge(int u, int v, double w) {
    if (w <= 0.0) throw std::invalid_argument("edge weight must be positive");
    auto& lst = out_[u];
    auto it = std::lower_bound(lst.begin(), lst.end(), v,
                               [](const std::pair<int, double>& e, int key) { return e.first < key; });
    if (it != lst.end() && it->first == v) {
        it->second = w;
    } else {
        lst.insert(it, {v, w});
    }
}

bool WeightedDigraph::has_edge(int u, int v) const { return weight(u, v) > 0.0; }

double WeightedDigraph::weight(int u, int v) const {
    const auto& lst = out_[u];
    auto it = std::lower_bound(lst.begin(), lst.end(), v,
                               [](const std::pair<int, double>& e, int key) { return e.first < key; });
    if (it != lst.end() && it->first == v) return it->second;
    return 0.0;
}

int WeightedDigraph::edge_count() const {
    int c = 0;
    for (const auto& lst : out_) c += static_cast<int>(lst.size());
    return c;
}

double WeightedDigraph::total_weight() const {
    double s = 0.0;
    for (const auto& lst : out_) {
        for (const auto& [v, w] : lst) {
            (void)v;
            s += w;
        }
    }
    return s;
}

std::vector<std::vector<int>> WeightedDigraph::out_adjacency() const {
    std::vector<std::vector<int>> adj(out_.size());
    for (std::size_t u = 0; u < out_.size(); ++u) {
        adj[u].reserve(out_[u].size());
        for (const auto& [v, w] : out_[u]) {
            (void)w;
            adj[u].push_back(v);
        }
    }
    return adj;
}

WeightedDigraph to_weighted(const TopicGraph& g) {
    WeightedDigraph w(g.node_count());
    for (int u = 0; u < g.node_count(); ++u) {
        for (int v : g.citers(u)) w.set_edge(u, v, 1.0);
    }
    return w;
}

namespace {

struct TarjanState {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> index, lowlink, stack_pos;
    std::vector<int> stack;
    std::vector<std::vector<int>> components;
    int next_index = 0;

    explicit TarjanState(const std::vector<std::vector<int>>& a)
        : adj(a),
          index(a.size(), -1),
          lowlink(a.size(), -1),
          stack_pos(a.size(), -1) {}

    void run(int root) {
        // explicit stack of (node, next child offset)
        std::vector<std::pair<int, std::size_t>> frames;
        frames.emplace_back(root, 0);
        while (!frames.empty()) {
            auto& [v, child] = frames.back();
            if (child == 0) {
                index[v] = lowlink[v] = next_index++;
                stack_pos[v] = static_cast<int>(stack.size());
                stack.push_back(v);
            }
            bool descended = false;
            while (child < adj[v].size()) {
                const int w = adj[v][child++];
                if (index[w] < 0) {
                    frames.emplace_back(w, 0);
                    descended = true;
                    break;
                }
                if (stack_pos[w] >= 0) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
            }
            if (descended) continue;
            if (lowlink[v] == index[v]) {
                std::vector<int> comp(stack.begin() + stack_pos[v], stack.end());
                for (int w : comp) stack_pos[w] = -1;
                stack.resize(stack.size() - comp.size());
                std::sort(comp.begin(), comp.end());
                components.push_back(std::move(comp));
            }
            const int done = v;
            frames.pop_back();
            if (!frames.empty()) {
                lowlink[frames.back().first] =
                    std::min(lowlink[frames.back().first], lowlink[done]);
            }
        }
    }
};

}  // namespace

std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& out_adj) {
    TarjanState st(out_adj);
    for (int v = 0; v < static_cast<int>(out_adj.size()); ++v) {
        if (st.index[v] < 0) st.run(v);
    }
    auto comps = std::move(st.components);
    std::sort(comps.begin(), comps.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
    return comps;
}

std::vector<std::vector<int>> strongly_connected_components(const TopicGraph& g) {
    return strongly_connected_components(g.out_adjacency());
}

std::vector<std::vector<int>> strongly_connected_components(const WeightedDigraph& g) {
    return strongly_connected_components(g.out_adjacency());
}

}  // namespace knowtemp
