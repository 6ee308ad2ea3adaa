#include "lrc/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace lrc {

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(node_count);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(node_count, 0);
    for (auto [u, v] : edges) {
        ++d[u];
        ++d[v];
    }
    return d;
}

void Graph::validate() const {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= node_count || v >= node_count) throw Error("InvalidGraph", "endpoint out of range");
        if (u == v) throw Error("InvalidGraph", "self-loop");
        if (!seen.insert(std::minmax(u, v)).second) throw Error("InvalidGraph", "parallel edge");
    }
}

int girth(const Graph& g) {
    const auto adj = g.adjacency();
    int best = kInfiniteGirth;
    std::vector<int> dist(g.node_count), parent(g.node_count);
    for (int s = 0; s < g.node_count; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            if (2 * dist[u] + 1 >= best) break;
            for (int v : adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

std::vector<int> bipartition(const Graph& g) {
    const auto adj = g.adjacency();
    std::vector<int> side(g.node_count, -1);
    for (int s = 0; s < g.node_count; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if (side[v] == side[u]) {
                    return {};
                }
            }
        }
    }
    return side;
}

Graph havel_hakimi(const std::vector<int>& degrees) {
    const int n = static_cast<int>(degrees.size());
    std::vector<int> rem = degrees;
    Graph g;
    g.node_count = n;
    while (true) {
        // Highest remaining degree, lowest index on ties.
        int u = -1;
        for (int i = 0; i < n; ++i)
            if (rem[i] > 0 && (u < 0 || rem[i] > rem[u])) u = i;
        if (u < 0) break;
        std::vector<int> cand;
        for (int i = 0; i < n; ++i)
            if (i != u && rem[i] > 0) cand.push_back(i);
        std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return rem[a] > rem[b]; });
        if (static_cast<int>(cand.size()) < rem[u])
            throw Error("DegreeSequenceInfeasible", "degree sequence is not graphical");
        for (int i = 0; i < rem[u]; ++i) {
            g.edges.emplace_back(std::min(u, cand[i]), std::max(u, cand[i]));
            --rem[cand[i]];
        }
        rem[u] = 0;
    }
    return g;
}

Graph near_regular_graph(int k, int r) {
    if (k < 1 || r < 1) throw Error("DegreeSequenceInfeasible", "k and r must be positive");
    const int m = (2 * k + r - 1) / r;
    const int b = 2 * k - r * (m - 1);  // equals r when r divides 2k
    const bool divisible = (2 * k) % r == 0;
    if (divisible ? (m < r + 1) : (m < r + 2))
        throw Error("DegreeSequenceInfeasible", "parameters outside the near-regular existence range");
    std::vector<int> deg(m, r);
    if (!divisible) deg[m - 1] = b;
    Graph g = havel_hakimi(deg);
    if (g.degrees() != deg) throw Error("DegreeSequenceInfeasible", "Havel-Hakimi did not realise the sequence");
    return g;
}

Graph turan_graph(int r, int beta) {
    if (beta < 1 || beta > r || r % beta != 0) throw Error("InvalidBeta", "beta must divide r with 1 <= beta <= r");
    Graph g;
    g.node_count = r + beta;
    for (int u = 0; u < g.node_count; ++u)
        for (int v = u + 1; v < g.node_count; ++v)
            if (u / beta != v / beta) g.edges.emplace_back(u, v);
    return g;
}

Graph complete_graph(int n) {
    Graph g;
    g.node_count = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g;
    g.node_count = a + b;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.edges.emplace_back(u, a + v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g;
    g.node_count = n;
    for (int i = 0; i < n; ++i) g.edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return g;
}

Graph petersen_graph() {
    Graph g;
    g.node_count = 10;
    for (int i = 0; i < 5; ++i) {
        g.edges.emplace_back(i, (i + 1) % 5);
        g.edges.emplace_back(i, i + 5);
        g.edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    for (auto& e : g.edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    return g;
}

Graph hoffman_singleton_graph() {
    // Pentagons P_h on ids 5h+j, pentagrams Q_i on ids 25+5i+j.
    std::set<std::pair<int, int>> es;
    auto add = [&](int u, int v) { es.insert(std::minmax(u, v)); };
    for (int h = 0; h < 5; ++h)
        for (int j = 0; j < 5; ++j) {
            add(5 * h + j, 5 * h + (j + 1) % 5);
            add(25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5);
        }
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) add(5 * h + j, 25 + 5 * i + (h * i + j) % 5);
    Graph g;
    g.node_count = 50;
    g.edges.assign(es.begin(), es.end());
    const auto deg = g.degrees();
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 7; }) || girth(g) != 5)
        throw Error("ConstructionFailed", "Hoffman-Singleton fixture failed validation");
    return g;
}

namespace {

// Normalised projective points of PG(d,q): first nonzero coordinate 1.
std::vector<std::vector<Fe>> projective_points(const FieldSpec& F, int dim) {
    std::vector<std::vector<Fe>> pts;
    const int len = dim + 1;
    for (int lead = 0; lead < len; ++lead) {
        std::vector<Fe> v(len, 0);
        v[lead] = 1;
        std::vector<Fe> tail(len - lead - 1, 0);
        while (true) {
            for (int i = 0; i < len - lead - 1; ++i) v[lead + 1 + i] = tail[i];
            pts.push_back(v);
            std::size_t i = 0;
            while (i < tail.size() && tail[i] == F.q() - 1) tail[i++] = 0;
            if (i == tail.size()) break;
            ++tail[i];
        }
    }
    return pts;
}

std::vector<Fe> normalise(const FieldSpec& F, std::vector<Fe> v) {
    for (Fe x : v)
        if (x) {
            const Fe s = F.inv(x);
            for (Fe& y : v) y = F.mul(y, s);
            break;
        }
    return v;
}

}  // namespace

std::vector<std::vector<int>> projective_plane_lines(const FieldSpec& F) {
    const auto pts = projective_points(F, 2);
    std::vector<std::vector<int>> lines;
    for (const auto& L : pts) {
        std::vector<int> line;
        for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
            Fe s = 0;
            for (int t = 0; t < 3; ++t) s = F.add(s, F.mul(L[t], pts[i][t]));
            if (s == 0) line.push_back(i);
        }
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::vector<int>> symplectic_quadrangle_lines(const FieldSpec& F) {
    const auto pts = projective_points(F, 3);
    std::map<std::vector<Fe>, int> index;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) index[pts[i]] = i;
    auto form = [&](const std::vector<Fe>& x, const std::vector<Fe>& y) {
        Fe s = F.sub(F.mul(x[0], y[1]), F.mul(x[1], y[0]));
        return F.add(s, F.sub(F.mul(x[2], y[3]), F.mul(x[3], y[2])));
    };
    std::set<std::vector<int>> lines;
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            if (form(pts[a], pts[b]) != 0) continue;
            std::vector<int> line{static_cast<int>(a)};
            for (Fe lam = 0; lam < F.q(); ++lam) {
                std::vector<Fe> v(4);
                for (int t = 0; t < 4; ++t) v[t] = F.add(F.mul(lam, pts[a][t]), pts[b][t]);
                line.push_back(index.at(normalise(F, v)));
            }
            std::sort(line.begin(), line.end());
            lines.insert(line);
        }
    return {lines.begin(), lines.end()};
}

Graph incidence_graph(int points, const std::vector<std::vector<int>>& lines) {
    Graph g;
    g.node_count = points + static_cast<int>(lines.size());
    for (int l = 0; l < static_cast<int>(lines.size()); ++l)
        for (int p : lines[l]) g.edges.emplace_back(p, points + l);
    return g;
}

namespace {

Graph pg_incidence_graph(std::uint32_t q) {
    const FieldSpec F = field_of_order(q);
    const auto lines = projective_plane_lines(F);
    return incidence_graph(static_cast<int>(lines.size()), lines);
}

Graph gq_incidence_graph(std::uint32_t q) {
    const FieldSpec F = field_of_order(q);
    const auto lines = symplectic_quadrangle_lines(F);
    const int points = static_cast<int>((q * q * q + q * q + q + 1));
    return incidence_graph(points, lines);
}

// Bipartite PEG-style growth: left/right of size N, each round adds a matching
// whose new edges avoid closing cycles shorter than `g`.
std::optional<Graph> grow_bipartite(int N, int degree, int g, std::mt19937_64& rng) {
    Graph G;
    G.node_count = 2 * N;
    std::vector<std::vector<int>> adj(2 * N);
    std::vector<int> dist(2 * N);
    for (int round = 0; round < degree; ++round) {
        std::vector<int> order(N);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<char> used(N, 0);
        for (int u : order) {
            std::fill(dist.begin(), dist.end(), -1);
            dist[u] = 0;
            std::deque<int> queue{u};
            while (!queue.empty()) {
                const int x = queue.front();
                queue.pop_front();
                for (int y : adj[x])
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
            }
            // New edge u-v closes a cycle of length dist+1.
            int best_d = -2;
            std::vector<int> best;
            for (int v = 0; v < N; ++v) {
                if (used[v]) continue;
                const int d = dist[N + v] < 0 ? INT_MAX : dist[N + v];
                if (d != INT_MAX && d + 1 < g) continue;
                if (d > best_d) {
                    best_d = d;
                    best.clear();
                }
                if (d == best_d) best.push_back(v);
            }
            if (best.empty()) return std::nullopt;
            const int v = best[rng() % best.size()];
            used[v] = 1;
            adj[u].push_back(N + v);
            adj[N + v].push_back(u);
            G.edges.emplace_back(u, N + v);
        }
    }
    return G;
}

}  // namespace

Graph bipartite_regular_girth(int degree, int g, std::uint64_t seed) {
    if (degree < 2 || g < 3) throw Error("InvalidArgument", "need degree >= 2 and girth >= 3");
    if (g % 2) ++g;  // bipartite graphs have even girth
    if (g <= 4) return complete_bipartite(degree, degree);
    const auto pp = prime_power(static_cast<std::uint64_t>(degree - 1));
    if (pp && g <= 6) return pg_incidence_graph(degree - 1);
    if (pp && g <= 8) return gq_incidence_graph(degree - 1);
    return bipartite_regular_girth_search(degree, g, seed);
}

Graph bipartite_regular_girth_search(int degree, int g, std::uint64_t seed) {
    if (degree < 2 || g < 3) throw Error("InvalidArgument", "need degree >= 2 and girth >= 3");
    if (g % 2) ++g;
    // Moore-type lower bound on the side size of a bipartite graph.
    long long side = 0, pw = 1;
    for (int i = 0; i < g / 2; ++i) {
        side += pw;
        pw *= (degree - 1);
    }
    std::mt19937_64 rng(seed);
    for (long long N = std::max<long long>(side, degree); N <= 64 * side + 256; N += std::max<long long>(1, N / 8)) {
        for (int attempt = 0; attempt < 8; ++attempt) {
            auto G = grow_bipartite(static_cast<int>(N), degree, g, rng);
            if (G && girth(*G) >= g) return *G;
        }
    }
    throw Error("ConstructionFailed", "no regular bipartite graph of the requested girth found within budget");
}

namespace {

// Hopcroft-Karp maximum matching on left nodes L with adjacency into right indices.
std::vector<int> hopcroft_karp(const std::vector<std::vector<int>>& adj, int nright) {
    const int nl = static_cast<int>(adj.size());
    std::vector<int> matchL(nl, -1), matchR(nright, -1), dist(nl);
    auto bfs = [&] {
        std::deque<int> queue;
        bool found = false;
        for (int u = 0; u < nl; ++u) {
            if (matchL[u] < 0) {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = -1;
            }
        }
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                const int w = matchR[v];
                if (w < 0) found = true;
                else if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return found;
    };
    std::function<bool(int)> dfs = [&](int u) {
        for (int v : adj[u]) {
            const int w = matchR[v];
            if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
                matchL[u] = v;
                matchR[v] = u;
                return true;
            }
        }
        dist[u] = -1;
        return false;
    };
    while (bfs())
        for (int u = 0; u < nl; ++u)
            if (matchL[u] < 0) dfs(u);
    return matchL;
}

}  // namespace

EdgeColoring edge_color_bipartite(const Graph& g) {
    const auto side = bipartition(g);
    if (side.empty() && g.node_count > 0) throw Error("NotBipartiteRegular", "graph is not bipartite");
    const auto deg = g.degrees();
    const int d = g.node_count ? deg[0] : 0;
    if (std::any_of(deg.begin(), deg.end(), [&](int x) { return x != d; }))
        throw Error("NotBipartiteRegular", "graph is not regular");
    std::vector<int> lid(g.node_count, -1), rid(g.node_count, -1);
    int nl = 0, nr = 0;
    for (int v = 0; v < g.node_count; ++v) (side[v] == 0 ? lid[v] = nl++ : rid[v] = nr++);
    if (nl != nr) throw Error("NotBipartiteRegular", "sides differ in size");

    EdgeColoring ec;
    ec.color.assign(g.edges.size(), -1);
    ec.palette = d;
    // Remaining edges, indexed by left node and right index.
    std::map<std::pair<int, int>, int> edge_of;
    std::vector<std::vector<int>> adj(nl);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        if (side[u] != 0) std::swap(u, v);
        adj[lid[u]].push_back(rid[v]);
        edge_of[{lid[u], rid[v]}] = e;
    }
    for (int c = 0; c < d; ++c) {
        const auto match = hopcroft_karp(adj, nr);
        for (int u = 0; u < nl; ++u) {
            if (match[u] < 0) throw Error("NotBipartiteRegular", "no perfect matching found");
            ec.color[edge_of.at({u, match[u]})] = c;
            adj[u].erase(std::find(adj[u].begin(), adj[u].end(), match[u]));
        }
    }
    return ec;
}

Graph moore_catalog(int r, int t) {
    if (r < 1 || t < 2) throw Error("NotInCatalog", "no Moore graph for these parameters");
    if (r == 1) return cycle_graph(t + 1);
    if (t == 2) return complete_graph(r + 2);
    if (t == 3) return complete_bipartite(r + 1, r + 1);
    if (t == 4 && r == 2) return petersen_graph();
    if (t == 4 && r == 6) return hoffman_singleton_graph();
    const bool pp = prime_power(static_cast<std::uint64_t>(r)).has_value();
    if (t == 5 && pp) return pg_incidence_graph(r);
    if (t == 7 && pp) return gq_incidence_graph(r);
    throw Error("NotInCatalog", "Moore graph (r=" + std::to_string(r) + ", t=" + std::to_string(t) + ") not in catalog");
}

LinearCode incidence_code(const Graph& g, const FieldSpec& F, std::optional<std::uint64_t> coeff_seed) {
    Mat H(F, g.node_count, g.edge_count());
    std::mt19937_64 rng(coeff_seed.value_or(0));
    std::uniform_int_distribution<Fe> nz(1, F.q() - 1);
    for (int e = 0; e < g.edge_count(); ++e) {
        H.at(g.edges[e].first, e) = coeff_seed ? nz(rng) : 1;
        H.at(g.edges[e].second, e) = coeff_seed ? nz(rng) : 1;
    }
    return code_from_parity(H);
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j{{"nodes", g.node_count}, {"edges", nlohmann::json::array()}};
    for (auto [u, v] : g.edges) j["edges"].push_back({u, v});
    if (!g.labels.empty()) j["labels"] = {{"layer", g.labels}};
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "nodes" && it.key() != "edges" && it.key() != "labels")
            throw Error("SchemaError", "unknown field '" + it.key() + "' in graph");
    Graph g;
    g.node_count = j.at("nodes").get<int>();
    for (const auto& e : j.at("edges")) g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("labels")) g.labels = j["labels"].at("layer").get<std::vector<int>>();
    g.validate();
    return g;
}

}  // namespace lrc
