#include "uhg/elementary.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "uhg/unified_matrix.hpp"

namespace uhg {

namespace {

void require_simple(const Hypergraph& h, const char* who) {
    if (!h.is_simple()) throw std::invalid_argument(std::string(who) + ": H must be simple");
}

// Visits every elementary subgraph of g exactly once. Components are chosen
// in increasing order of their minimum vertex; emit fires after each
// component is added, so a subgraph with r components fires when its last
// component completes.
struct Enumerator {
    const AssociatedGraph& g;
    long long budget;
    long long steps = 0;

    std::vector<bool> used;
    std::vector<std::vector<int>> cycles;
    std::vector<std::pair<int, int>> edges;
    int covered = 0;

    std::function<void(const Enumerator&)> emit;

    explicit Enumerator(const AssociatedGraph& graph, long long b) : g(graph), budget(b) {
        used.assign(g.order(), false);
    }

    void tick() {
        if (++steps > budget) throw budget_error("elementary enumeration budget exceeded");
    }

    void run() { extend(0); }

    void extend(int from) {
        for (int v = from; v < g.order(); ++v) {
            if (used[v]) continue;
            tick();
            // edge component with minimum vertex v
            for (auto [w, m] : g.neighbors[v]) {
                if (w <= v || used[w]) continue;
                used[v] = used[w] = true;
                covered += 2;
                edges.emplace_back(v, w);
                emit(*this);
                extend(v + 1);
                edges.pop_back();
                used[v] = used[w] = false;
                covered -= 2;
            }
            // cycle component with minimum vertex v
            std::vector<int> path{v};
            used[v] = true;
            cycle_dfs(v, path);
            used[v] = false;
        }
    }

    void cycle_dfs(int start, std::vector<int>& path) {
        tick();
        int at = path.back();
        for (auto [w, m] : g.neighbors[at]) {
            if (w == start && path.size() >= 3) {
                // path vertices stay marked used for the nested extension
                if (path[1] < path.back()) {
                    cycles.push_back(path);
                    covered += static_cast<int>(path.size());
                    emit(*this);
                    extend(start + 1);
                    covered -= static_cast<int>(path.size());
                    cycles.pop_back();
                }
                continue;
            }
            if (w <= start || used[w]) continue;
            path.push_back(w);
            used[w] = true;
            cycle_dfs(start, path);
            used[w] = false;
            path.pop_back();
        }
    }
};

}  // namespace

std::vector<ElementaryConfig> enumerate_elementary(const Hypergraph& h, int q,
                                                   long long budget) {
    require_simple(h, "enumerate_elementary");
    AssociatedGraph g = associated_graph(h);
    if (q < 2 || q > g.order())
        throw std::invalid_argument("enumerate_elementary: q out of range");
    std::vector<ElementaryConfig> out;
    Enumerator en(g, budget);
    en.emit = [&](const Enumerator& e) {
        if (e.covered != q) return;
        ElementaryConfig cfg;
        cfg.q = q;
        cfg.cycles = e.cycles;
        cfg.partitions = e.edges;
        out.push_back(std::move(cfg));
    };
    en.run();
    std::sort(out.begin(), out.end(), [](const ElementaryConfig& a, const ElementaryConfig& b) {
        if (a.cycles != b.cycles) return a.cycles < b.cycles;
        return a.partitions < b.partitions;
    });
    return out;
}

ElementaryAggregate aggregate_elementary(const Hypergraph& h, long long budget) {
    require_simple(h, "aggregate_elementary");
    AssociatedGraph g = associated_graph(h);
    ElementaryAggregate agg;
    agg.k = g.order();
    agg.signed_sum.assign(agg.k + 1, BigInt(0));
    agg.config_count.assign(agg.k + 1, 0);
    agg.matchings.assign(agg.k + 1, 0);
    Enumerator en(g, budget);
    en.emit = [&](const Enumerator& e) {
        int t = e.covered;
        int c = static_cast<int>(e.cycles.size());
        int ec = static_cast<int>(e.edges.size());
        BigInt term = BigInt(1) << c;  // 2^c
        if ((c + ec) % 2) term = -term;
        agg.signed_sum[t] += term;
        agg.config_count[t] += 1;
        if (c == 0) agg.matchings[t] += 1;
    };
    en.run();
    return agg;
}

BigInt det_via_elementary(const Hypergraph& h, long long budget) {
    ElementaryAggregate agg = aggregate_elementary(h, budget);
    // (-1)^(k-c-e) 2^c summed over q = k configs equals (-1)^k c_k
    BigInt ck = agg.signed_sum[agg.k];
    return (agg.k % 2 == 0) ? ck : -ck;
}

CharPoly coeffs_via_elementary(const Hypergraph& h, long long budget) {
    ElementaryAggregate agg = aggregate_elementary(h, budget);
    std::vector<BigInt> c(static_cast<size_t>(agg.k) + 1, BigInt(0));
    c[0] = 1;
    for (int t = 2; t <= agg.k; ++t) c[static_cast<size_t>(t)] = agg.signed_sum[t];
    return Poly(std::move(c));
}

GirthCoeffReport girth_from_coeffs(const Hypergraph& h, long long budget) {
    require_simple(h, "girth_from_coeffs");
    GirthCoeffReport out;
    UnifiedMatrix u = build_unified_matrix(h);
    CharPoly p = char_poly_exact(u);
    int k = p.degree();

    for (int d = 1; d <= k; d += 2) {
        if (p.coeff_from_top(d) != 0) {
            out.odd_exact_girth = d;
            out.odd_girth_cycle_count = -p.coeff_from_top(d) / 2;
            break;
        }
    }

    ElementaryAggregate agg = aggregate_elementary(h, budget);
    for (int i = 1; i <= k; ++i) {
        BigInt gamma = p.coeff_from_top(i);
        if (i % 2 == 0) {
            BigInt omega = big(agg.matchings[i]);
            if ((i / 2) % 2) gamma += omega;  // gamma_i = c_i - (-1)^(i/2) omega_i
            else gamma -= omega;
        }
        if (gamma != 0) {
            out.exact_girth = i;
            out.girth_cycle_count = -gamma / 2;
            break;
        }
    }
    return out;
}

}  // namespace uhg
