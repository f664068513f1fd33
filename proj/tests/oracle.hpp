#ifndef TESTS_ORACLE_HPP
#define TESTS_ORACLE_HPP

// Test-only brute-force oracles, written independently of the library
// algorithms: plain bitmask subset enumeration with union-find
// acyclicity, so agreement with the library is meaningful evidence.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "mmfvs/graph.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct MaskGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<mmfvs::VertexId> ids; // index -> library id

    explicit MaskGraph(const mmfvs::Graph& g) {
        ids = g.vertices();
        n = static_cast<int>(ids.size());
        if (n > 20)
            throw std::invalid_argument("oracle limited to n <= 20");
        std::map<mmfvs::VertexId, int> idx;
        for (int i = 0; i < n; ++i)
            idx[ids[i]] = i;
        for (auto [u, v] : g.edges())
            edges.emplace_back(idx.at(u), idx.at(v));
    }

    MaskGraph(int vertices, const std::vector<std::pair<int, int>>& es)
        : n(vertices), edges(es) {
        for (int i = 0; i < n; ++i)
            ids.push_back(i);
    }

    bool acyclic(Mask keep) const {
        std::vector<int> parent(n);
        for (int i = 0; i < n; ++i)
            parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto [a, b] : edges) {
            if (!((keep >> a) & 1) || !((keep >> b) & 1))
                continue;
            int ra = find(a), rb = find(b);
            if (ra == rb)
                return false;
            parent[ra] = rb;
        }
        return true;
    }

    Mask full() const { return (n == 32 ? ~Mask{0} : (Mask{1} << n) - 1); }

    bool is_minimal_fvs(Mask s) const {
        Mask f = full() & ~s;
        if (!acyclic(f))
            return false;
        for (int i = 0; i < n; ++i)
            if (((s >> i) & 1) && acyclic(f | (Mask{1} << i)))
                return false;
        return true;
    }

    mmfvs::VertexSet to_ids(Mask s) const {
        mmfvs::VertexSet out;
        for (int i = 0; i < n; ++i)
            if ((s >> i) & 1)
                out.insert(ids[i]);
        return out;
    }
};

/// Maximum minimal fvs size by full subset enumeration.
inline int naive_mmfvs(const MaskGraph& mg) {
    int best = 0;
    for (Mask s = 0; s <= mg.full(); ++s) {
        int size = __builtin_popcount(s);
        if (size > best && mg.is_minimal_fvs(s))
            best = size;
        if (s == mg.full())
            break;
    }
    return best;
}

inline int naive_mmfvs(const mmfvs::Graph& g) { return naive_mmfvs(MaskGraph(g)); }

/// Same, restricted to solutions excluding f.
inline int naive_mmfvs_excluding(const mmfvs::Graph& g, mmfvs::VertexId f) {
    MaskGraph mg(g);
    int fi = -1;
    for (int i = 0; i < mg.n; ++i)
        if (mg.ids[i] == f)
            fi = i;
    int best = 0;
    for (Mask s = 0; s <= mg.full(); ++s) {
        if (!((s >> fi) & 1)) {
            int size = __builtin_popcount(s);
            if (size > best && mg.is_minimal_fvs(s))
                best = size;
        }
        if (s == mg.full())
            break;
    }
    return best;
}

/// Independence number by enumeration.
inline int brute_alpha(const mmfvs::Graph& g) {
    MaskGraph mg(g);
    int best = 0;
    for (Mask s = 0; s <= mg.full(); ++s) {
        bool ind = true;
        for (auto [a, b] : mg.edges)
            if (((s >> a) & 1) && ((s >> b) & 1))
                ind = false;
        if (ind)
            best = std::max(best, __builtin_popcount(s));
        if (s == mg.full())
            break;
    }
    return best;
}

/// Maximum minimal vertex cover size by enumeration.
inline int max_minimal_vc(const mmfvs::Graph& g) {
    MaskGraph mg(g);
    int best = -1;
    for (Mask s = 0; s <= mg.full(); ++s) {
        bool cover = true;
        for (auto [a, b] : mg.edges)
            if (!((s >> a) & 1) && !((s >> b) & 1))
                cover = false;
        bool minimal = cover;
        if (cover) {
            for (int i = 0; i < mg.n && minimal; ++i) {
                if (!((s >> i) & 1))
                    continue;
                bool needed = false;
                for (auto [a, b] : mg.edges) {
                    int other = a == i ? b : (b == i ? a : -1);
                    if (other >= 0 && !((s >> other) & 1))
                        needed = true;
                }
                if (!needed)
                    minimal = false;
            }
        }
        if (minimal)
            best = std::max(best, __builtin_popcount(s));
        if (s == mg.full())
            break;
    }
    return best;
}

/// All (n choose 2) vertex pairs in a fixed order, for edge-mask graph
/// enumeration.
inline std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    return pairs;
}

inline mmfvs::Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    auto pairs = all_pairs(n);
    std::vector<std::pair<mmfvs::VertexId, mmfvs::VertexId>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1)
            edges.push_back(pairs[i]);
    return mmfvs::Graph::from_edges(n, edges);
}

inline bool connected_edge_mask(int n, std::uint64_t mask) {
    auto pairs = all_pairs(n);
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i)
        parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = n;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!((mask >> i) & 1))
            continue;
        int ra = find(pairs[i].first), rb = find(pairs[i].second);
        if (ra != rb) {
            parent[ra] = rb;
            --comps;
        }
    }
    return comps == 1;
}

} // namespace oracle

#endif
