#include "mmfvs/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mmfvs {

bool CycleWitness::valid(const Graph& g) const {
    if (vertices.size() < 3)
        return false;
    VertexSet seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size())
        return false;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        VertexId a = vertices[i];
        VertexId b = vertices[(i + 1) % vertices.size()];
        if (!g.has_vertex(a) || !g.has_edge(a, b))
            return false;
    }
    return true;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Graph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex(i);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

VertexId Graph::add_vertex() {
    VertexId u = next_id_++;
    adj_[u];
    return u;
}

void Graph::add_vertex(VertexId u) {
    if (u < 0)
        throw std::invalid_argument("vertex id must be non-negative");
    if (adj_.count(u))
        throw std::invalid_argument("vertex already exists");
    adj_[u];
    next_id_ = std::max(next_id_, u + 1);
}

void Graph::add_edge(VertexId u, VertexId v) {
    require_vertex(u);
    require_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loop");
    adj_[u].insert(v);
    adj_[v].insert(u);
}

bool Graph::has_vertex(VertexId u) const {
    return adj_.count(u) != 0;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
}

const VertexSet& Graph::neighbors(VertexId u) const {
    require_vertex(u);
    return adj_.at(u);
}

int Graph::degree(VertexId u) const {
    return static_cast<int>(neighbors(u).size());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& [u, nbrs] : adj_)
        d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> vs;
    vs.reserve(adj_.size());
    for (const auto& [u, nbrs] : adj_)
        vs.push_back(u);
    return vs;
}

VertexSet Graph::vertex_set() const {
    VertexSet vs;
    for (const auto& [u, nbrs] : adj_)
        vs.insert(u);
    return vs;
}

std::size_t Graph::num_edges() const {
    std::size_t twice = 0;
    for (const auto& [u, nbrs] : adj_)
        twice += nbrs.size();
    return twice / 2;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> es;
    for (const auto& [u, nbrs] : adj_)
        for (VertexId v : nbrs)
            if (u < v)
                es.emplace_back(u, v);
    return es;
}

Graph Graph::delete_vertices(const VertexSet& xs) const {
    for (VertexId u : xs)
        require_vertex(u);
    Graph g = *this;
    for (VertexId u : xs) {
        for (VertexId v : g.adj_.at(u))
            g.adj_.at(v).erase(u);
        g.adj_.erase(u);
    }
    return g;
}

std::pair<Graph, VertexId> Graph::contract_edge(VertexId u, VertexId v) const {
    if (!has_edge(u, v))
        throw std::invalid_argument("not an edge");
    const VertexSet& nu = neighbors(u);
    const VertexSet& nv = neighbors(v);
    for (VertexId x : nu)
        if (x != v && nv.count(x))
            throw std::invalid_argument("neighborhoods intersect");
    VertexSet merged;
    std::set_union(nu.begin(), nu.end(), nv.begin(), nv.end(),
                   std::inserter(merged, merged.begin()));
    merged.erase(u);
    merged.erase(v);
    Graph g = delete_vertices({u, v});
    g.next_id_ = std::max(g.next_id_, next_id_);
    VertexId w = g.add_vertex();
    for (VertexId x : merged)
        g.add_edge(w, x);
    return {g, w};
}

std::optional<CycleWitness> Graph::forest_check(const VertexSet& xs) const {
    for (VertexId u : xs)
        require_vertex(u);
    // Iterative DFS; in an undirected graph every non-tree edge goes to
    // an ancestor of the current vertex, which closes a cycle.
    std::map<VertexId, VertexId> parent;
    std::map<VertexId, int> state; // 0 unseen, 1 on path, 2 done
    for (VertexId root : xs) {
        if (state.count(root))
            continue;
        parent[root] = -1;
        std::vector<std::pair<VertexId, VertexSet::const_iterator>> stack;
        state[root] = 1;
        stack.emplace_back(root, neighbors(root).begin());
        while (!stack.empty()) {
            auto& [cur, it] = stack.back();
            const VertexSet& nbrs = neighbors(cur);
            if (it == nbrs.end()) {
                state[cur] = 2;
                stack.pop_back();
                continue;
            }
            VertexId nxt = *it;
            ++it;
            if (!xs.count(nxt) || nxt == parent[cur])
                continue;
            auto st = state.find(nxt);
            if (st == state.end()) {
                parent[nxt] = cur;
                state[nxt] = 1;
                stack.emplace_back(nxt, neighbors(nxt).begin());
            } else if (st->second == 1) {
                CycleWitness w;
                for (VertexId x = cur; x != nxt; x = parent[x])
                    w.vertices.push_back(x);
                w.vertices.push_back(nxt);
                std::reverse(w.vertices.begin(), w.vertices.end());
                assert(w.valid(*this));
                return w;
            }
        }
    }
    return std::nullopt;
}

bool Graph::is_acyclic(const VertexSet& xs) const {
    return !forest_check(xs).has_value();
}

bool Graph::is_acyclic() const {
    return is_acyclic(vertex_set());
}

std::vector<std::vector<VertexId>> Graph::components(const VertexSet& xs) const {
    for (VertexId u : xs)
        require_vertex(u);
    std::vector<std::vector<VertexId>> blocks;
    VertexSet seen;
    for (VertexId root : xs) {
        if (seen.count(root))
            continue;
        VertexSet block;
        std::vector<VertexId> stack{root};
        seen.insert(root);
        while (!stack.empty()) {
            VertexId cur = stack.back();
            stack.pop_back();
            block.insert(cur);
            for (VertexId nxt : neighbors(cur))
                if (xs.count(nxt) && seen.insert(nxt).second)
                    stack.push_back(nxt);
        }
        blocks.emplace_back(block.begin(), block.end());
    }
    return blocks;
}

void Graph::check_simple() const {
    for (const auto& [u, nbrs] : adj_) {
        if (nbrs.count(u))
            throw std::logic_error("self-loop detected");
        for (VertexId v : nbrs) {
            auto it = adj_.find(v);
            if (it == adj_.end() || !it->second.count(u))
                throw std::logic_error("asymmetric adjacency");
        }
    }
}

void Graph::require_vertex(VertexId u) const {
    if (!adj_.count(u))
        throw std::invalid_argument("no such vertex");
}

} // namespace mmfvs
