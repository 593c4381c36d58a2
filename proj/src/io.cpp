#include "uhg/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "uhg/exact.hpp"

namespace uhg {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
    std::uint64_t state = seed;
    for (auto& s : s_) s = splitmix64(state);
}

std::uint64_t Xoshiro256::next() {
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t Xoshiro256::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Xoshiro256::below: zero bound");
    // rejection sampling keeps the distribution uniform
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do { x = next(); } while (x >= limit);
    return x % bound;
}

Hypergraph parse_hg(std::istream& in, const std::string& source) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::vector<int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank
        auto fail = [&](const std::string& msg) {
            throw std::invalid_argument(source + ":" + std::to_string(lineno) + ": " + msg);
        };
        if (n < 0) {
            if (first != "n") fail("expected header 'n <count>'");
            if (!(ls >> n) || n < 0) fail("bad vertex count");
            std::string extra;
            if (ls >> extra) fail("trailing tokens after header");
            continue;
        }
        std::vector<int> ids;
        try {
            ids.push_back(std::stoi(first));
            int v;
            while (ls >> v) ids.push_back(v);
        } catch (const std::exception&) {
            fail("bad vertex id");
        }
        if (!ls.eof()) fail("bad vertex id");
        for (int v : ids)
            if (v < 0 || v >= n) fail("vertex id " + std::to_string(v) + " out of range");
        edges.push_back(std::move(ids));
    }
    if (n < 0)
        throw std::invalid_argument(source + ": missing header 'n <count>'");
    return Hypergraph(n, edges);
}

Hypergraph parse_hg_string(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    return parse_hg(in, source);
}

Hypergraph load_hg(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return parse_hg(in, path);
}

Hypergraph parse_json_string(const std::string& text, const std::string& source) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(source + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument(source + ": expected {\"n\": ..., \"edges\": [...]}");
    int n = j.at("n").get<int>();
    std::vector<std::vector<int>> edges;
    for (const auto& e : j.at("edges")) edges.push_back(e.get<std::vector<int>>());
    return Hypergraph(n, edges);
}

Hypergraph load_any(const std::string& path) {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_json_string(buf.str(), path);
    }
    return load_hg(path);
}

std::string emit_hg(const Hypergraph& h) {
    std::string out = "n " + std::to_string(h.vertex_count()) + "\n";
    for (const auto& e : h.edges()) {
        std::string line;
        for (size_t i = 0; i < e.vertices.ids().size(); ++i) {
            if (i) line += ' ';
            line += std::to_string(e.vertices.ids()[i]);
        }
        for (int c = 0; c < e.multiplicity; ++c) out += line + "\n";
    }
    return out;
}

void save_hg(const Hypergraph& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << emit_hg(h);
}

std::string matrix_triplets(const UnifiedMatrix& u) {
    std::string out;
    for (int i = 0; i < u.order(); ++i)
        for (int j = 0; j < u.order(); ++j)
            if (u.at(i, j) != 0)
                out += u.labels.at(i).str() + "\t" + u.labels.at(j).str() + "\t" +
                       std::to_string(u.at(i, j)) + "\n";
    return out;
}

std::string matrix_csv(const UnifiedMatrix& u) {
    std::string out;
    for (int j = 0; j < u.order(); ++j) out += ",\"" + u.labels.at(j).str() + "\"";
    out += "\n";
    for (int i = 0; i < u.order(); ++i) {
        out += "\"" + u.labels.at(i).str() + "\"";
        for (int j = 0; j < u.order(); ++j) out += "," + std::to_string(u.at(i, j));
        out += "\n";
    }
    return out;
}

std::string charpoly_line(const CharPoly& p) { return p.str(); }

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    // normalize the sign of zero for byte-stable reports
    if (std::string(buf) == "-0") return "0";
    return buf;
}

Hypergraph random_hypergraph(const RandomHypergraphParams& params, Xoshiro256& rng) {
    if (params.n < 1) throw std::invalid_argument("random_hypergraph: need n >= 1");
    int max_rank = std::min(params.max_rank, params.n);
    int min_size = params.allow_loops ? 1 : 2;
    if (max_rank < min_size) max_rank = min_size;
    std::vector<std::vector<int>> edges;
    std::vector<Part> seen;
    int attempts = 0;
    while (static_cast<int>(edges.size()) < params.edge_count && attempts < 200) {
        ++attempts;
        int size = min_size + static_cast<int>(rng.below(
                       static_cast<std::uint64_t>(max_rank - min_size + 1)));
        if (size > params.n) continue;
        // partial Fisher-Yates draw of `size` distinct vertices
        std::vector<int> pool(params.n);
        for (int i = 0; i < params.n; ++i) pool[i] = i;
        std::vector<int> ids;
        for (int i = 0; i < size; ++i) {
            int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(params.n - i)));
            std::swap(pool[i], pool[j]);
            ids.push_back(pool[i]);
        }
        Part p(ids);
        if (!params.allow_multiple) {
            bool dup = false;
            for (const auto& q : seen)
                if (q == p) { dup = true; break; }
            if (dup) continue;
        }
        seen.push_back(p);
        edges.push_back(p.ids());
    }
    return Hypergraph(params.n, edges);
}

Hypergraph random_hypergraph_with_eindex_cap(const RandomHypergraphParams& params,
                                             int eindex_cap, Xoshiro256& rng) {
    RandomHypergraphParams p = params;
    for (int round = 0; round < 400; ++round) {
        Hypergraph h = random_hypergraph(p, rng);
        if (edge_index(h).size() <= eindex_cap) return h;
        if (round % 8 == 7 && p.edge_count > 1) --p.edge_count;
    }
    throw std::runtime_error("random_hypergraph_with_eindex_cap: cap unreachable");
}

long long budget_from_env() {
    const char* env = std::getenv("US_BUDGET");
    if (!env) return kDefaultBudget;
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end == env || v <= 0) return kDefaultBudget;
    return v;
}

}  // namespace uhg
