#include "mirror/recursion/graphsum.hpp"

#include "mirror/recursion/dvv.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>

namespace mirror {

namespace {

Field field_pow(const Field& x, long e) {
    Field r(1);
    Field b = e < 0 ? x.inverse() : x;
    for (long i = 0; i < std::labs(e); ++i) r *= b;
    return r;
}

// Splits [0, count) into contiguous chunks, one per worker; results merge in chunk order.
Multidifferential parallel_sum(int g, int n, size_t count, const std::function<void(size_t, Multidifferential&)>& body) {
    int workers = std::max(1, std::min<int>(recursion_threads(), static_cast<int>(count)));
    std::vector<Multidifferential> part(static_cast<size_t>(workers));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        auto run = [&, w]() {
            try {
                size_t lo = count * static_cast<size_t>(w) / static_cast<size_t>(workers);
                size_t hi = count * static_cast<size_t>(w + 1) / static_cast<size_t>(workers);
                for (size_t i = lo; i < hi; ++i) body(i, part[static_cast<size_t>(w)]);
            } catch (...) {
                errors[static_cast<size_t>(w)] = std::current_exception();
            }
        };
        if (workers == 1)
            run();
        else
            pool.emplace_back(run);
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    Multidifferential out;
    out.g = g;
    out.n = n;
    for (const auto& p : part)
        for (const auto& [idx, c] : p.terms) out.add(idx, c);
    return out;
}

}  // namespace

int recursion_threads() {
    const char* env = std::getenv("MIRROR_RECURSION_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v < 1 ? 1 : v;
}

GraphWeights graph_weights(const GenusZeroCurve& curve, int g, int n) {
    GraphWeights w;
    w.max_height = std::max(0, 3 * g - 3 + n);
    for (size_t s = 0; s < curve.size(); ++s) w.h1.push_back(curve.h1(s));
    w.r_check = r_check_matrix(curve, w.max_height + 1);
    w.b_check = b_check_from_bergman(curve, w.max_height);
    return w;
}

std::pair<Field, FormIndex> graph_weight(const GraphWeights& w, const StableGraph& G) {
    int g = G.total_genus();
    // Exponent of 1/sqrt(-2).
    long root_power = 0;
    Field c = (g - 1) % 2 ? Field(-1) : Field(1);
    for (int v = 0; v < G.vertex_count(); ++v) {
        int gv = G.genus[static_cast<size_t>(v)];
        int val = G.valence(v);
        int s = G.sigma[static_cast<size_t>(v)];
        root_power += 2 - 2 * gv - val;
        std::vector<int> k;
        for (size_t j = 0; j < G.leg_vertex.size(); ++j)
            if (G.leg_vertex[j] == v) k.push_back(G.leg_height[j]);
        for (const auto& e : G.edges) {
            if (e.a == v) k.push_back(e.ka);
            if (e.b == v) k.push_back(e.kb);
        }
        for (int x : G.dilatons[static_cast<size_t>(v)]) k.push_back(x);
        Rational tau = dvv_intersection(gv, k);
        if (tau == 0) return {Field(0), {}};
        c *= field_pow(w.h1.at(static_cast<size_t>(s)), 2 - 2 * gv - val) * Field(tau);
        for (int x : G.dilatons[static_cast<size_t>(v)]) {
            // -[z^{x-1}] sum_{s'} h1^{s'} R^{s}_{s'}(z).
            if (x >= w.r_check.order + 1) throw RecursionError("dilaton height beyond the R-check order");
            Field d(0);
            for (size_t sp = 0; sp < w.h1.size(); ++sp) d += w.h1[sp] * w.r_check.at(static_cast<size_t>(s), sp, x - 1);
            c *= -d;
            root_power += 1;
        }
    }
    for (const auto& e : G.edges) {
        c *= w.b_check.at(static_cast<size_t>(G.sigma[static_cast<size_t>(e.a)]))
                 .at(static_cast<size_t>(G.sigma[static_cast<size_t>(e.b)]))
                 .at(static_cast<size_t>(e.ka))
                 .at(static_cast<size_t>(e.kb));
    }
    FormIndex idx;
    for (size_t j = 0; j < G.leg_vertex.size(); ++j) {
        idx.emplace_back(G.sigma[static_cast<size_t>(G.leg_vertex[j])], G.leg_height[j]);
        root_power += 1;
    }
    if (root_power != 2 - 2 * g) throw RecursionError("sqrt(-2) powers do not total 2 - 2g");
    // (1/sqrt(-2))^{2-2g} = (-2)^{g-1}.
    c *= field_pow(Field(-2), g - 1);
    return {c, idx};
}

Multidifferential graph_sum_B(const GenusZeroCurve& curve, int g, int n) {
    GraphWeights w = graph_weights(curve, g, n);
    std::vector<StableGraph> graphs = enumerate_stable_graphs(g, n, static_cast<int>(curve.size()));
    return parallel_sum(g, n, graphs.size(), [&](size_t i, Multidifferential& acc) {
        auto [c, idx] = graph_weight(w, graphs[i]);
        if (is_zero(c)) return;
        acc.add(idx, c * Field(frac(1, graphs[i].automorphisms)));
    });
}

Multidifferential graph_sum_labeled(const GenusZeroCurve& curve, int g, int n) {
    GraphWeights w = graph_weights(curve, g, n);
    int markings = static_cast<int>(curve.size());
    std::vector<StableGraph> bare = enumerate_bare_graphs(g, n);
    return parallel_sum(g, n, bare.size(), [&](size_t bi, Multidifferential& acc) {
        const StableGraph& B = bare[bi];
        int V = B.vertex_count();
        // Labeled half-edges: legs, then both ends of every edge; ordered dilaton lists.
        StableGraph G = B;
        G.sigma.assign(static_cast<size_t>(V), 0);
        G.dilatons.assign(static_cast<size_t>(V), {});
        G.leg_height.assign(B.leg_vertex.size(), 0);
        std::vector<int*> slots;
        for (auto& h : G.leg_height) slots.push_back(&h);
        for (auto& e : G.edges) {
            slots.push_back(&e.ka);
            slots.push_back(&e.kb);
        }
        int top = w.max_height;
        std::function<void(int)> assign_heights = [&](int i) {
            if (i < static_cast<int>(slots.size())) {
                for (int h = 0; h <= top; ++h) {
                    *slots[static_cast<size_t>(i)] = h;
                    assign_heights(i + 1);
                }
                return;
            }
            // Dimension constraint at each vertex.
            for (int v = 0; v < V; ++v) {
                int sum = 0;
                for (size_t j = 0; j < G.leg_vertex.size(); ++j)
                    if (G.leg_vertex[j] == v) sum += G.leg_height[j];
                for (const auto& e : G.edges) sum += (e.a == v ? e.ka : 0) + (e.b == v ? e.kb : 0);
                for (int x : G.dilatons[static_cast<size_t>(v)]) sum += x;
                if (sum != 3 * G.genus[static_cast<size_t>(v)] - 3 + G.valence(v)) return;
            }
            auto [c, idx] = graph_weight(w, G);
            if (is_zero(c)) return;
            long denom = B.automorphisms;
            for (const auto& d : G.dilatons)
                for (long i2 = 2; i2 <= static_cast<long>(d.size()); ++i2) denom *= i2;
            acc.add(idx, c * Field(frac(1, denom)));
        };
        std::function<void(int)> assign_dilatons = [&](int v) {
            if (v == V) {
                assign_heights(0);
                return;
            }
            int budget = 3 * B.genus[static_cast<size_t>(v)] - 3 + B.valence(v);
            std::function<void(int)> rec = [&](int slack) {
                assign_dilatons(v + 1);
                for (int h = 2; h - 1 <= slack; ++h) {
                    G.dilatons[static_cast<size_t>(v)].push_back(h);
                    rec(slack - (h - 1));
                    G.dilatons[static_cast<size_t>(v)].pop_back();
                }
            };
            rec(budget);
        };
        std::function<void(int)> assign_sigma = [&](int v) {
            if (v == V) {
                assign_dilatons(0);
                return;
            }
            for (int s = 0; s < markings; ++s) {
                G.sigma[static_cast<size_t>(v)] = s;
                assign_sigma(v + 1);
            }
        };
        assign_sigma(0);
    });
}

}  // namespace mirror
