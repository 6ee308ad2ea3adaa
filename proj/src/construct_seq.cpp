#include "lrc/construct_seq.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <tuple>

#include "lrc/error.hpp"

namespace lrc {
namespace {

const FieldSpec& gf2() {
    static const FieldSpec F = field_make(2, 1);
    return F;
}

LinearCode finish(const Mat& H, int r, int t) {
    LinearCode c = code_from_parity(H);
    c.params.r = r;
    c.params.t = t;
    c.params.role = "S-LR";
    return c;
}

// H = [I_m | incidence(g)], parities on nodes and information on edges.
Mat systematic_incidence(const Graph& g) {
    const int m = g.node_count;
    Mat H(gf2(), m, m + g.edge_count());
    for (int i = 0; i < m; ++i) H.at(i, i) = 1;
    for (int e = 0; e < g.edge_count(); ++e) {
        H.at(g.edges[e].first, m + e) = 1;
        H.at(g.edges[e].second, m + e) = 1;
    }
    return H;
}

std::vector<int> bfs_layers(const Graph& g, int root) {
    const auto adj = g.adjacency();
    std::vector<int> dist(g.node_count, -2);
    dist[root] = -1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int y : adj[x])
            if (dist[y] == -2) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    return dist;
}

// Incidence matrix of g with the vinf row dropped, rows and columns ordered into
// staircase blocks by the node layers.
std::pair<Mat, StaircaseProfile> staircase_incidence(const Graph& g, int vinf, const std::vector<int>& layer) {
    std::vector<int> nodes;
    for (int v = 0; v < g.node_count; ++v)
        if (v != vinf) {
            if (layer[v] < 0) throw Error("ConstructionFailed", "graph is not connected");
            nodes.push_back(v);
        }
    std::stable_sort(nodes.begin(), nodes.end(), [&](int a, int b) { return layer[a] < layer[b]; });
    std::vector<int> row(g.node_count, -1);
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) row[nodes[i]] = i;
    const int s = nodes.empty() ? 0 : layer[nodes.back()];

    std::vector<std::tuple<int, int, int, int>> keyed;  // block, key1, key2, edge
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        if (u == vinf || v == vinf) {
            keyed.emplace_back(0, row[u == vinf ? v : u], 0, e);
            continue;
        }
        if (layer[u] > layer[v]) std::swap(u, v);
        if (layer[u] == layer[v]) {
            keyed.emplace_back(s + 1, std::min(row[u], row[v]), std::max(row[u], row[v]), e);
        } else {
            keyed.emplace_back(layer[v], row[v], row[u], e);
        }
    }
    std::sort(keyed.begin(), keyed.end());

    StaircaseProfile prof;
    prof.s = s;
    prof.rho.assign(s + 1, 0);
    for (int v : nodes) ++prof.rho[layer[v]];
    prof.a.assign(s + 2, 0);
    for (const auto& k : keyed) ++prof.a[std::get<0>(k)];
    if (prof.a.back() == 0) prof.a.pop_back();

    Mat H(gf2(), static_cast<int>(nodes.size()), g.edge_count());
    for (int j = 0; j < static_cast<int>(keyed.size()); ++j) {
        auto [u, v] = g.edges[std::get<3>(keyed[j])];
        if (u != vinf) H.at(row[u], j) = 1;
        if (v != vinf) H.at(row[v], j) = 1;
    }
    return {H, prof};
}

SeqBuild from_whole_graph(const Graph& g, int r, int t, const std::string& route) {
    SeqBuild b;
    b.route = route;
    b.expanded = g;
    const int vinf = g.node_count - 1;
    const auto layer = bfs_layers(g, vinf);
    b.expanded.labels = layer;
    b.expanded.labels[vinf] = Graph::kLayerInfinity;
    auto [H, prof] = staircase_incidence(g, vinf, layer);
    b.code = finish(H, r, t);
    b.profile = prof;
    return b;
}

struct Layered {
    Graph g;  // node 0 is V-infinity
    int add(int layer) {
        g.labels.push_back(layer);
        return g.node_count++;
    }
};

// G0 for odd t: V-inf, V0 of size r+1, full r-ary layers, and a last layer of size r^s
// where every node has r+1 neighbours in the previous layer.
Graph odd_t_tree_graph(int r, int s) {
    Layered L;
    L.add(Graph::kLayerInfinity);
    std::vector<int> prev;
    for (int i = 0; i <= r; ++i) {
        const int v = L.add(0);
        L.g.edges.emplace_back(0, v);
        prev.push_back(v);
    }
    for (int layer = 1; layer < s; ++layer) {
        std::vector<int> next;
        for (int p : prev)
            for (int j = 0; j < r; ++j) {
                const int v = L.add(layer);
                L.g.edges.emplace_back(p, v);
                next.push_back(v);
            }
        prev = std::move(next);
    }
    long long last = 1;
    for (int i = 0; i < s; ++i) last *= r;
    std::vector<int> tail;
    for (long long i = 0; i < last; ++i) tail.push_back(L.add(s));
    for (int i = 0; i < static_cast<int>(prev.size()); ++i)
        for (int j = 0; j < r; ++j) L.g.edges.emplace_back(prev[i], tail[(static_cast<long long>(i) * r + j) % last]);
    return L.g;
}

struct ColouredBase {
    Graph g;
    EdgeColoring col;
    std::vector<int> v0;
};

ColouredBase odd_t_base(int r, int s) {
    const Graph g0 = odd_t_tree_graph(r, s);
    const EdgeColoring c0 = edge_color_bipartite(g0);
    ColouredBase b;
    b.g.node_count = g0.node_count - 1;
    b.g.labels.assign(g0.labels.begin() + 1, g0.labels.end());
    b.col.palette = c0.palette;
    for (int e = 0; e < g0.edge_count(); ++e) {
        auto [u, v] = g0.edges[e];
        if (u == 0 || v == 0) continue;
        b.g.edges.emplace_back(u - 1, v - 1);
        b.col.color.push_back(c0.color[e]);
    }
    for (int v = 0; v < b.g.node_count; ++v)
        if (b.g.labels[v] == 0) b.v0.push_back(v);
    return b;
}

// Base graph for even t >= 6: four r-ary trees of depth s coloured so that each child
// edge avoids its parent's colour; the leaves are joined by doubled regular graphs.
ColouredBase even_t_base(int r, int s) {
    ColouredBase b;
    b.col.palette = r + 1;
    auto add = [&](int layer) {
        b.g.labels.push_back(layer);
        return b.g.node_count++;
    };
    auto connect = [&](int u, int v, int c) {
        b.g.edges.emplace_back(u, v);
        b.col.color.push_back(c);
    };
    std::vector<std::vector<int>> by_colour(r + 1);
    for (int root = 0; root < 4; ++root) {
        const int v0 = add(0);
        b.v0.push_back(v0);
        std::vector<std::pair<int, int>> frontier{{v0, r}};  // node, incoming colour
        for (int layer = 1; layer <= s; ++layer) {
            std::vector<std::pair<int, int>> next;
            for (auto [p, in] : frontier)
                for (int c = 0; c <= r; ++c) {
                    if (c == in) continue;
                    const int v = add(layer);
                    connect(p, v, c);
                    next.emplace_back(v, c);
                }
            frontier = std::move(next);
        }
        for (auto [v, in] : frontier) by_colour[in].push_back(v);
    }
    for (int c = 0; c <= r; ++c) {
        const auto& group = by_colour[c];
        const int half = static_cast<int>(group.size()) / 2;
        if (half < r + 1) throw Error("ConstructionFailed", "leaf class too small for a degree-r gadget");
        const Graph reg = havel_hakimi(std::vector<int>(half, r));
        Graph cover;
        cover.node_count = 2 * half;
        for (auto [x, y] : reg.edges) {
            cover.edges.emplace_back(x, half + y);
            cover.edges.emplace_back(y, half + x);
        }
        const EdgeColoring cc = edge_color_bipartite(cover);
        std::vector<int> palette;
        for (int k = 0; k <= r; ++k)
            if (k != c) palette.push_back(k);
        for (int e = 0; e < cover.edge_count(); ++e)
            connect(group[cover.edges[e].first], group[cover.edges[e].second], palette[cc.color[e]]);
    }
    return b;
}

Graph attach_infinity(const ColouredBase& b) {
    Graph g;
    g.node_count = b.g.node_count + 1;
    g.edges = b.g.edges;
    const int vinf = b.g.node_count;
    for (int v : b.v0) g.edges.emplace_back(vinf, v);
    return g;
}

Graph expand(const ColouredBase& b, const Graph& aux, const EdgeColoring& aux_col) {
    const int N = aux.node_count;
    std::vector<std::vector<std::pair<int, int>>> matching(aux_col.palette);
    for (int e = 0; e < aux.edge_count(); ++e) matching[aux_col.color[e]].push_back(aux.edges[e]);
    Graph g;
    g.node_count = b.g.node_count * N + 1;
    for (int e = 0; e < b.g.edge_count(); ++e) {
        auto [v, x] = b.g.edges[e];
        for (auto [u, w] : matching[b.col.color[e]]) {
            g.edges.emplace_back(v * N + u, x * N + w);
            g.edges.emplace_back(v * N + w, x * N + u);
        }
    }
    const int vinf = g.node_count - 1;
    for (int v : b.v0)
        for (int u = 0; u < N; ++u) g.edges.emplace_back(vinf, v * N + u);
    return g;
}

}  // namespace

LinearCode t2_near_regular_code(int k, int r) {
    return finish(systematic_incidence(near_regular_graph(k, r)), r, 2);
}

LinearCode t2_turan_code(int r, int beta) {
    return finish(systematic_incidence(turan_graph(r, beta)), r, 2);
}

LinearCode t2_dim_optimal_code(int m, int r) {
    if (m < 2 || r < 1) throw Error("ParamDecompositionFails", "need m >= 2 and r >= 1");
    // Largest L with sum_{i=2}^{L} C(m-1, i-1) <= r.
    long long used = 0;
    int L = 1;
    while (L + 1 <= m) {
        const long long next = static_cast<long long>(binom(m - 1, L));
        if (used + next > r) break;
        used += next;
        ++L;
    }
    const long long J = r - used;
    const int w = L + 1;
    if (J > 0) {
        if (w > m) throw Error("ParamDecompositionFails", "r exceeds the all-columns row weight");
        if (std::gcd(w, m) != 1) throw Error("ParamDecompositionFails", "gcd(L*+1, m) != 1");
        if (J % w != 0) throw Error("ParamDecompositionFails", "L*+1 does not divide J");
    }
    std::vector<std::vector<int>> cols;
    for (int i = 2; i <= L; ++i)
        for_each_subset(m, i, [&](const std::vector<int>& s) {
            cols.push_back(s);
            return true;
        });
    long long classes = J / w;
    if (classes > 0) {
        std::vector<char> taken(std::size_t(1) << m, 0);
        auto mask_of = [](const std::vector<int>& s) {
            std::uint64_t x = 0;
            for (int i : s) x |= std::uint64_t(1) << i;
            return x;
        };
        auto rotate = [m](std::uint64_t x) { return ((x << 1) | (x >> (m - 1))) & ((std::uint64_t(1) << m) - 1); };
        for_each_subset(m, w, [&](const std::vector<int>& s) {
            if (classes == 0) return false;
            std::uint64_t x = mask_of(s);
            if (taken[x]) return true;
            for (int k = 0; k < m; ++k, x = rotate(x)) {
                taken[x] = 1;
                std::vector<int> col;
                for (int i = 0; i < m; ++i)
                    if (x >> i & 1) col.push_back(i);
                cols.push_back(col);
            }
            --classes;
            return true;
        });
        if (classes > 0) throw Error("ParamDecompositionFails", "not enough cyclic classes of weight L*+1");
    }
    Mat H(gf2(), m, m + static_cast<int>(cols.size()));
    for (int i = 0; i < m; ++i) H.at(i, i) = 1;
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        for (int i : cols[j]) H.at(i, m + j) = 1;
    return finish(H, r, 2);
}

LinearCode t3_catalog(const std::string& which) {
    if (which == "ex1") {
        return finish(Mat::from_bits(gf2(), {"1000100011", "0100010010", "0010001011", "0001000101", "0000111100"}), 3, 3);
    }
    if (which == "ex2") {
        return finish(Mat::from_bits(gf2(), {"10000011110000", "01000000001111", "00100011001100", "00010000110011",
                                             "00001010101010", "00000101010101"}),
                      4, 3);
    }
    throw Error("InvalidArgument", "t3_catalog expects ex1 or ex2");
}

LinearCode moore_code(int r, int t) {
    const Graph g = moore_catalog(r, t);
    return from_whole_graph(g, r, t, "moore").code;
}

SeqBuild seq_general_build(int r, int t, AuxChoice aux_choice, std::uint64_t seed) {
    if (r < 3) throw Error("InvalidArgument", "the general construction needs r >= 3");
    if (t < 2) throw Error("InvalidArgument", "t must be at least 2");
    if (t == 2) return from_whole_graph(complete_graph(r + 2), r, t, "complete");
    if (t == 4) {
        try {
            return from_whole_graph(moore_catalog(r, 4), r, t, "moore");
        } catch (const Error& e) {
            if (e.kind() != "NotInCatalog") throw;
            throw Error("UnsupportedT", "t=4 is available only through a catalog Moore graph");
        }
    }

    const int s = (t - 1) / 2;
    ColouredBase base = (t % 2) ? odd_t_base(r, s) : even_t_base(r, s);
    Graph g0 = attach_infinity(base);

    SeqBuild b;
    b.seed = seed;
    b.base = base.g;
    b.base_coloring = base.col;
    Graph final_graph;
    if (girth(g0) >= t + 1) {
        b.route = "tree";
        final_graph = g0;
    } else {
        b.route = "tree+expansion";
        Graph aux;
        try {
            aux = aux_choice == AuxChoice::Catalog ? bipartite_regular_girth(r + 1, t + 1, seed)
                                                   : bipartite_regular_girth_search(r + 1, t + 1, seed);
        } catch (const Error& e) {
            throw Error("AuxiliaryUnavailable", e.what());
        }
        if (girth(aux) < t + 1) throw Error("AuxiliaryUnavailable", "auxiliary graph girth too small");
        const EdgeColoring aux_col = edge_color_bipartite(aux);
        final_graph = expand(base, aux, aux_col);
        b.aux = aux;
    }
    if (girth(final_graph) < t + 1) throw Error("ConstructionFailed", "expanded graph girth below t+1");

    const int vinf = final_graph.node_count - 1;
    const auto layer = bfs_layers(final_graph, vinf);
    auto [H, prof] = staircase_incidence(final_graph, vinf, layer);
    b.expanded = final_graph;
    b.expanded.labels = layer;
    b.expanded.labels[vinf] = Graph::kLayerInfinity;
    b.code = finish(H, r, t);
    b.profile = prof;
    return b;
}

LinearCode seq_general_code(int r, int t, AuxChoice aux, std::uint64_t seed) {
    return seq_general_build(r, t, aux, seed).code;
}

}  // namespace lrc
