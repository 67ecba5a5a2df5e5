#include "mirror/recursion/graphs.hpp"

#include "mirror/recursion/dvv.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace mirror {

namespace {

std::vector<int> encode(const StableGraph& g, const std::vector<int>& perm) {
    int V = g.vertex_count();
    std::vector<int> inv(static_cast<size_t>(V));
    for (int v = 0; v < V; ++v) inv[static_cast<size_t>(perm[static_cast<size_t>(v)])] = v;
    std::vector<int> out;
    for (int w = 0; w < V; ++w) {
        int v = inv[static_cast<size_t>(w)];
        out.push_back(g.genus[static_cast<size_t>(v)]);
        out.push_back(g.sigma.empty() ? -1 : g.sigma[static_cast<size_t>(v)]);
        std::vector<int> d = g.dilatons.empty() ? std::vector<int>{} : g.dilatons[static_cast<size_t>(v)];
        std::sort(d.begin(), d.end());
        out.push_back(static_cast<int>(d.size()));
        out.insert(out.end(), d.begin(), d.end());
    }
    for (size_t j = 0; j < g.leg_vertex.size(); ++j) {
        out.push_back(perm[static_cast<size_t>(g.leg_vertex[j])]);
        out.push_back(g.leg_height.empty() ? 0 : g.leg_height[j]);
    }
    std::vector<std::array<int, 4>> es;
    for (const auto& e : g.edges) {
        int a = perm[static_cast<size_t>(e.a)], b = perm[static_cast<size_t>(e.b)];
        int ka = e.ka, kb = e.kb;
        if (a > b || (a == b && ka > kb)) {
            std::swap(a, b);
            std::swap(ka, kb);
        }
        es.push_back({a, b, ka, kb});
    }
    std::sort(es.begin(), es.end());
    for (const auto& e : es) out.insert(out.end(), e.begin(), e.end());
    return out;
}

std::vector<int> identity_perm(int V) {
    std::vector<int> p(static_cast<size_t>(V));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool connected(const StableGraph& g) {
    int V = g.vertex_count();
    std::vector<int> parent(static_cast<size_t>(V));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[static_cast<size_t>(x)] == x ? x : parent[static_cast<size_t>(x)] = find(parent[static_cast<size_t>(x)]);
    };
    for (const auto& e : g.edges) parent[static_cast<size_t>(find(e.a))] = find(e.b);
    for (int v = 1; v < V; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

// All ways to write `total` as an ordered sum of `parts` nonnegative integers with given minima.
void compositions(int total, const std::vector<int>& minima, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& fn) {
    size_t i = cur.size();
    if (i == minima.size()) {
        if (total == 0) fn(cur);
        return;
    }
    int rest_min = 0;
    for (size_t j = i + 1; j < minima.size(); ++j) rest_min += minima[j];
    for (int x = minima[i]; x + rest_min <= total; ++x) {
        cur.push_back(x);
        compositions(total - x, minima, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

int StableGraph::total_genus() const {
    int s = 0;
    for (int x : genus) s += x;
    return s + static_cast<int>(edges.size()) - vertex_count() + 1;
}

int StableGraph::valence(int v) const {
    int c = 0;
    for (const auto& e : edges) c += (e.a == v) + (e.b == v);
    for (int x : leg_vertex) c += x == v;
    if (!dilatons.empty()) c += static_cast<int>(dilatons[static_cast<size_t>(v)].size());
    return c;
}

std::string StableGraph::to_string() const {
    std::string s = "V[";
    for (int v = 0; v < vertex_count(); ++v) {
        if (v) s += " ";
        s += "g" + std::to_string(genus[static_cast<size_t>(v)]);
        if (!sigma.empty()) s += "s" + std::to_string(sigma[static_cast<size_t>(v)]);
        if (!dilatons.empty() && !dilatons[static_cast<size_t>(v)].empty()) {
            s += "d{";
            for (size_t i = 0; i < dilatons[static_cast<size_t>(v)].size(); ++i)
                s += (i ? "," : "") + std::to_string(dilatons[static_cast<size_t>(v)][i]);
            s += "}";
        }
    }
    s += "] E[";
    for (size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        s += (i ? " " : "") + std::to_string(e.a) + ":" + std::to_string(e.ka) + "-" + std::to_string(e.b) + ":" +
             std::to_string(e.kb);
    }
    s += "] L[";
    for (size_t j = 0; j < leg_vertex.size(); ++j)
        s += (j ? " " : "") + std::to_string(leg_vertex[j]) + ":" + std::to_string(leg_height.empty() ? 0 : leg_height[j]);
    return s + "] aut=" + std::to_string(automorphisms);
}

std::vector<int> canonical_form(const StableGraph& g) {
    std::vector<int> perm = identity_perm(g.vertex_count());
    std::vector<int> best = encode(g, perm);
    while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, encode(g, perm));
    return best;
}

long count_automorphisms(const StableGraph& g) {
    std::vector<int> perm = identity_perm(g.vertex_count());
    const std::vector<int> self = encode(g, perm);
    long vertex_perms = 0;
    do {
        if (encode(g, perm) == self) ++vertex_perms;
    } while (std::next_permutation(perm.begin(), perm.end()));
    long kernel = 1;
    std::map<std::array<int, 4>, long> mult;
    for (const auto& e : g.edges) {
        int a = e.a, b = e.b, ka = e.ka, kb = e.kb;
        if (a > b || (a == b && ka > kb)) {
            std::swap(a, b);
            std::swap(ka, kb);
        }
        ++mult[{a, b, ka, kb}];
        if (a == b && ka == kb) kernel *= 2;
    }
    auto fact = [](long m) {
        long f = 1;
        for (long i = 2; i <= m; ++i) f *= i;
        return f;
    };
    for (const auto& [e, m] : mult) kernel *= fact(m);
    for (const auto& d : g.dilatons) {
        std::map<int, long> c;
        for (int x : d) ++c[x];
        for (const auto& [h, m] : c) kernel *= fact(m);
    }
    return vertex_perms * kernel;
}

std::vector<StableGraph> enumerate_bare_graphs(int g, int n) {
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) throw RecursionError("unstable (g, n)");
    std::vector<StableGraph> out;
    std::set<std::vector<int>> seen;
    for (int V = 1; V <= 2 * g - 2 + n; ++V) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < V; ++a)
            for (int b = a; b < V; ++b) pairs.emplace_back(a, b);
        std::vector<int> gv(static_cast<size_t>(V), 0);
        std::function<void(int)> genus_loop = [&](int v) {
            if (v < V) {
                for (int x = 0; x <= g; ++x) {
                    gv[static_cast<size_t>(v)] = x;
                    genus_loop(v + 1);
                }
                return;
            }
            int E = g - std::accumulate(gv.begin(), gv.end(), 0) + V - 1;
            if (E < V - 1) return;
            // Edge multisets as nondecreasing sequences of pair indices.
            std::vector<int> choice;
            std::function<void(int)> edge_loop = [&](int start) {
                if (static_cast<int>(choice.size()) == E) {
                    std::vector<int> legs(static_cast<size_t>(n), 0);
                    std::function<void(int)> leg_loop = [&](int j) {
                        if (j < n) {
                            for (int v2 = 0; v2 < V; ++v2) {
                                legs[static_cast<size_t>(j)] = v2;
                                leg_loop(j + 1);
                            }
                            return;
                        }
                        StableGraph G;
                        G.genus = gv;
                        for (int c : choice)
                            G.edges.push_back({pairs[static_cast<size_t>(c)].first, pairs[static_cast<size_t>(c)].second, 0, 0});
                        G.leg_vertex = legs;
                        if (!connected(G)) return;
                        for (int v2 = 0; v2 < V; ++v2)
                            if (2 * G.genus[static_cast<size_t>(v2)] - 2 + G.valence(v2) <= 0) return;
                        if (seen.insert(canonical_form(G)).second) {
                            G.automorphisms = count_automorphisms(G);
                            out.push_back(G);
                        }
                    };
                    leg_loop(0);
                    return;
                }
                for (int c = start; c < static_cast<int>(pairs.size()); ++c) {
                    choice.push_back(c);
                    edge_loop(c);
                    choice.pop_back();
                }
            };
            edge_loop(0);
        };
        genus_loop(0);
    }
    return out;
}

std::vector<StableGraph> enumerate_stable_graphs(int g, int n, int markings) {
    if (markings < 1) throw RecursionError("no markings");
    std::vector<StableGraph> out;
    std::set<std::vector<int>> seen;
    for (const StableGraph& bare : enumerate_bare_graphs(g, n)) {
        int V = bare.vertex_count();
        std::vector<int> d0(static_cast<size_t>(V));
        for (int v = 0; v < V; ++v) d0[static_cast<size_t>(v)] = 3 * bare.genus[static_cast<size_t>(v)] - 3 + bare.valence(v);
        std::vector<int> sig(static_cast<size_t>(V), 0);
        std::vector<std::vector<int>> dil(static_cast<size_t>(V));
        // Per vertex: dilaton multiset, then heights of the remaining half-edges.
        std::function<void(int)> dil_loop;
        std::function<void()> heights = [&]() {
            // Half-edge list per vertex: legs then edge ends.
            std::vector<std::vector<std::pair<int, int>>> halves(static_cast<size_t>(V));
            for (int j = 0; j < n; ++j) halves[static_cast<size_t>(bare.leg_vertex[static_cast<size_t>(j)])].push_back({0, j});
            for (size_t e = 0; e < bare.edges.size(); ++e) {
                halves[static_cast<size_t>(bare.edges[e].a)].push_back({1, static_cast<int>(2 * e)});
                halves[static_cast<size_t>(bare.edges[e].b)].push_back({1, static_cast<int>(2 * e + 1)});
            }
            StableGraph G = bare;
            G.sigma = sig;
            G.dilatons = dil;
            G.leg_height.assign(static_cast<size_t>(n), 0);
            std::function<void(int)> vloop = [&](int v) {
                if (v == V) {
                    if (seen.insert(canonical_form(G)).second) {
                        StableGraph H = G;
                        H.automorphisms = count_automorphisms(H);
                        out.push_back(H);
                    }
                    return;
                }
                int total = d0[static_cast<size_t>(v)] + static_cast<int>(dil[static_cast<size_t>(v)].size());
                for (int x : dil[static_cast<size_t>(v)]) total -= x;
                if (total < 0) return;
                const auto& hs = halves[static_cast<size_t>(v)];
                std::vector<int> minima(hs.size(), 0), cur;
                compositions(total, minima, cur, [&](const std::vector<int>& hts) {
                    for (size_t i = 0; i < hs.size(); ++i) {
                        auto [kind, id] = hs[i];
                        if (kind == 0)
                            G.leg_height[static_cast<size_t>(id)] = hts[i];
                        else if (id % 2 == 0)
                            G.edges[static_cast<size_t>(id / 2)].ka = hts[i];
                        else
                            G.edges[static_cast<size_t>(id / 2)].kb = hts[i];
                    }
                    vloop(v + 1);
                });
            };
            vloop(0);
        };
        dil_loop = [&](int v) {
            if (v == V) {
                heights();
                return;
            }
            // Each dilaton raises the dimension by one and takes at least two.
            int budget = d0[static_cast<size_t>(v)];
            std::vector<int> cur;
            std::function<void(int, int)> rec = [&](int minh, int slack) {
                dil[static_cast<size_t>(v)] = cur;
                dil_loop(v + 1);
                for (int h = minh; h - 1 <= slack; ++h) {
                    cur.push_back(h);
                    rec(h, slack - (h - 1));
                    cur.pop_back();
                }
                dil[static_cast<size_t>(v)] = cur;
            };
            rec(2, budget);
        };
        std::function<void(int)> sig_loop = [&](int v) {
            if (v == V) {
                dil_loop(0);
                return;
            }
            for (int s = 0; s < markings; ++s) {
                sig[static_cast<size_t>(v)] = s;
                sig_loop(v + 1);
            }
        };
        sig_loop(0);
    }
    return out;
}

}  // namespace mirror
