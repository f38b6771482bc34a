#include "thetalab/graphs.hpp"

#include "thetalab/theta_lp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace thetalab {

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    auto i = a.begin(), j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

namespace {

std::vector<std::vector<int>> colex_subsets(long n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    for (;;) {
        out.push_back(c);
        int j = 0;
        while (j < k && c[j] + 1 == (j + 1 < k ? c[j + 1] : n)) ++j;
        if (j == k) break;
        ++c[j];
        for (int i = 0; i < j; ++i) c[i] = i;
    }
    return out;
}

constexpr std::size_t kLocalSearchRounds = 2000;

bool allowed(std::span<const int> L, int t) { return std::binary_search(L.begin(), L.end(), t); }

// Maximum clique in a compatibility graph (vertices may share an independent
// set iff compatible). Colour classes are pairwise incompatible, so the
// number of colours bounds any clique inside the candidate set.
class CliqueSearch {
public:
    CliqueSearch(std::vector<Bitset> compat, std::uint64_t budget, std::uint64_t used)
        : budget_(budget), nodes_(used) {
        const std::size_t m = compat.size();
        std::vector<std::size_t> deg(m);
        for (std::size_t v = 0; v < m; ++v) deg[v] = compat[v].count();
        order_.resize(m);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
        std::vector<std::size_t> pos(m);
        for (std::size_t i = 0; i < m; ++i) pos[order_[i]] = i;
        compat_.assign(m, Bitset(m));
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t u = compat[v].first(); u != Bitset::npos; u = compat[v].next(u + 1))
                compat_[pos[v]].set(pos[u]);
    }

    /// Searches for a clique larger than `lower`; returns original indices.
    std::vector<std::size_t> run(std::size_t lower) {
        best_size_ = lower;
        best_.clear();
        Bitset all(compat_.size());
        all.set_all();
        std::vector<std::size_t> current;
        if (all.any()) expand(all, current);
        std::vector<std::size_t> out;
        for (std::size_t v : best_) out.push_back(order_[v]);
        return out;
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void expand(Bitset P, std::vector<std::size_t>& current) {
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        // Colour classes are built one at a time; a vertex that would land
        // in a class deep enough to force branching is first offered a
        // swap into an earlier class (re-numbering).
        const std::size_t kmin = best_size_ >= current.size() ? best_size_ - current.size() : 0;
        std::vector<Bitset> classes;
        Bitset Q = P;
        while (Q.any()) {
            Bitset cls(compat_.size());
            Bitset U = Q;
            for (std::size_t v = U.first(); v != Bitset::npos; v = U.next(v + 1)) {
                Q.reset(v);
                if (classes.size() >= kmin && renumber(classes, kmin, v)) continue;
                U.subtract(compat_[v]);
                cls.set(v);
            }
            if (cls.any()) classes.push_back(std::move(cls));
        }

        std::vector<std::size_t> verts;
        std::vector<std::size_t> colour;
        for (std::size_t c = kmin; c < classes.size(); ++c)
            for (std::size_t v = classes[c].first(); v != Bitset::npos; v = classes[c].next(v + 1)) {
                verts.push_back(v);
                colour.push_back(c + 1);
            }
        for (std::size_t idx = verts.size(); idx-- > 0;) {
            if (current.size() + colour[idx] <= best_size_) return;
            const std::size_t v = verts[idx];
            current.push_back(v);
            Bitset next = P & compat_[v];
            if (!next.any()) {
                if (current.size() > best_size_) {
                    best_size_ = current.size();
                    best_ = current;
                }
            } else {
                expand(std::move(next), current);
            }
            current.pop_back();
            if (exhausted_) return;
            P.reset(v);
        }
    }

    // Tries to place v into a class below kmin: v must conflict with a
    // single member u of some class a, and u must fit into a later class
    // b < kmin. On success both moves are applied.
    bool renumber(std::vector<Bitset>& classes, std::size_t kmin, std::size_t v) {
        for (std::size_t a = 0; a < kmin; ++a) {
            const Bitset hit = classes[a] & compat_[v];
            const std::size_t u = hit.first();
            if (u == Bitset::npos) {
                classes[a].set(v);
                return true;
            }
            if (hit.next(u + 1) != Bitset::npos) continue;
            for (std::size_t b = a + 1; b < kmin; ++b) {
                if ((classes[b] & compat_[u]).any()) continue;
                classes[a].reset(u);
                classes[b].set(u);
                classes[a].set(v);
                return true;
            }
        }
        return false;
    }

    std::vector<Bitset> compat_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> best_;
    std::size_t best_size_ = 0;
    std::uint64_t budget_;
    std::uint64_t nodes_;
    bool exhausted_ = false;
};

// Iterated local search with (1,2)-swaps: drop one solution vertex and add
// two of its exclusive neighbours. Perturbation force-inserts the outside
// vertex that has gone longest without changing state, so the walk is
// deterministic without a random source.
class SwapLocalSearch {
public:
    explicit SwapLocalSearch(const std::vector<Bitset>& adj)
        : adj_(adj), in_(adj.size(), 0), tight_(adj.size(), 0), age_(adj.size(), 0) {}

    std::vector<std::size_t> run(const std::vector<std::size_t>& start, std::size_t iterations) {
        for (std::size_t v : start) add(v);
        make_maximal();
        improve();
        std::vector<std::size_t> best = members();
        for (std::size_t it = 0; it < iterations; ++it) {
            perturb();
            make_maximal();
            improve();
            const std::size_t size = count_;
            if (size > best.size()) best = members();
            else if (size + 1 < best.size()) reset_to(best);
        }
        return best;
    }

private:
    void add(std::size_t v) {
        in_[v] = 1;
        ++count_;
        age_[v] = ++clock_;
        for (std::size_t u = adj_[v].first(); u != Bitset::npos; u = adj_[v].next(u + 1)) ++tight_[u];
    }
    void remove(std::size_t v) {
        in_[v] = 0;
        --count_;
        age_[v] = ++clock_;
        for (std::size_t u = adj_[v].first(); u != Bitset::npos; u = adj_[v].next(u + 1)) --tight_[u];
    }

    void make_maximal() {
        for (std::size_t v = 0; v < adj_.size(); ++v)
            if (!in_[v] && tight_[v] == 0) add(v);
    }

    void improve() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t x = 0; x < adj_.size() && !changed; ++x) {
                if (!in_[x]) continue;
                std::vector<std::size_t> one;
                for (std::size_t u = adj_[x].first(); u != Bitset::npos; u = adj_[x].next(u + 1))
                    if (tight_[u] == 1) one.push_back(u);
                for (std::size_t a = 0; a < one.size() && !changed; ++a)
                    for (std::size_t b = a + 1; b < one.size(); ++b)
                        if (!adj_[one[a]].test(one[b])) {
                            remove(x);
                            add(one[a]);
                            add(one[b]);
                            make_maximal();
                            changed = true;
                            break;
                        }
            }
        }
    }

    void perturb() {
        std::size_t pick = Bitset::npos;
        for (std::size_t v = 0; v < adj_.size(); ++v)
            if (!in_[v] && (pick == Bitset::npos || age_[v] < age_[pick])) pick = v;
        if (pick == Bitset::npos) return;
        for (std::size_t u = adj_[pick].first(); u != Bitset::npos; u = adj_[pick].next(u + 1))
            if (in_[u]) remove(u);
        add(pick);
    }

    void reset_to(const std::vector<std::size_t>& target) {
        for (std::size_t v = 0; v < adj_.size(); ++v)
            if (in_[v]) remove(v);
        for (std::size_t v : target) add(v);
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < adj_.size(); ++v)
            if (in_[v]) out.push_back(v);
        return out;
    }

    const std::vector<Bitset>& adj_;
    std::vector<char> in_;
    std::vector<std::size_t> tight_;
    std::vector<std::uint64_t> age_;
    std::uint64_t clock_ = 0;
    std::size_t count_ = 0;
};

}  // namespace

JohnsonGraph build_graph(const LSpec& spec, std::size_t vertex_cap) {
    const BigInt count = binom(spec.n(), spec.k());
    if (count > BigInt(static_cast<unsigned long>(vertex_cap)))
        throw ResourceCapExceeded("C(" + std::to_string(spec.n()) + "," + std::to_string(spec.k()) +
                                  ") = " + count.get_str() + " vertices exceeds the cap of " +
                                  std::to_string(vertex_cap));
    JohnsonGraph g{spec, colex_subsets(spec.n(), spec.k()), {}};
    const std::size_t N = g.vertices.size();
    g.adjacency.assign(N, Bitset(N));
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a + 1; b < N; ++b)
            if (!allowed(spec.L(), intersection_size(g.vertices[a], g.vertices[b]))) {
                g.adjacency[a].set(b);
                g.adjacency[b].set(a);
            }
    return g;
}

BigInt degree_formula(const LSpec& spec) {
    BigInt d = 0;
    for (int j : complement_set(spec.k(), spec.L())) d += binom(spec.k(), j) * binom(spec.n() - spec.k(), spec.k() - j);
    return d;
}

AlphaResult alpha_bruteforce(const JohnsonGraph& graph, std::uint64_t node_budget) {
    AlphaResult out;
    const std::size_t N = graph.size();
    if (N == 0) return out;

    // Greedy in vertex order, then local search, for the starting bound.
    std::vector<std::size_t> greedy;
    Bitset free_set(N);
    free_set.set_all();
    for (std::size_t v = free_set.first(); v != Bitset::npos; v = free_set.next(v + 1)) {
        greedy.push_back(v);
        free_set.subtract(graph.adjacency[v]);
    }
    out.witness = SwapLocalSearch(graph.adjacency).run(greedy, kLocalSearchRounds);
    out.size = out.witness.size();

    const auto& L = graph.spec.L();
    const std::size_t v0 = 0;
    for (auto jt = L.rbegin(); jt != L.rend(); ++jt) {
        const int j = *jt;
        std::size_t w = Bitset::npos;
        for (std::size_t x = 1; x < N; ++x)
            if (intersection_size(graph.vertices[v0], graph.vertices[x]) == j) {
                w = x;
                break;
            }
        if (w == Bitset::npos) continue;

        // Every pair of the optimum meets in at most j points.
        std::vector<int> Lj;
        for (int l : L)
            if (l <= j) Lj.push_back(l);
        std::vector<std::size_t> cand;
        for (std::size_t x = 1; x < N; ++x) {
            if (x == w) continue;
            if (allowed(Lj, intersection_size(graph.vertices[v0], graph.vertices[x])) &&
                allowed(Lj, intersection_size(graph.vertices[w], graph.vertices[x])))
                cand.push_back(x);
        }
        if (2 + cand.size() <= out.size) continue;

        std::vector<Bitset> compat(cand.size(), Bitset(cand.size()));
        for (std::size_t a = 0; a < cand.size(); ++a)
            for (std::size_t b = a + 1; b < cand.size(); ++b)
                if (allowed(Lj, intersection_size(graph.vertices[cand[a]], graph.vertices[cand[b]]))) {
                    compat[a].set(b);
                    compat[b].set(a);
                }
        CliqueSearch search(std::move(compat), node_budget, out.nodes);
        std::vector<std::size_t> clique = search.run(out.size >= 2 ? out.size - 2 : 0);
        out.nodes = search.nodes();
        if (2 + clique.size() > out.size && !clique.empty()) {
            out.size = 2 + clique.size();
            out.witness = {v0, w};
            for (std::size_t c : clique) out.witness.push_back(cand[c]);
        } else if (out.size < 2) {
            out.size = 2;
            out.witness = {v0, w};
        }
        if (search.exhausted()) {
            out.exact = false;
            break;
        }
    }
    std::sort(out.witness.begin(), out.witness.end());
    return out;
}

SandwichReport sandwich_check(const LSpec& spec, std::size_t vertex_cap, std::uint64_t node_budget) {
    const JohnsonGraph g = build_graph(spec, vertex_cap);
    SandwichReport r{alpha_bruteforce(g, node_budget), sigma(spec), theta(spec)};
    const Rational alpha(static_cast<unsigned long>(r.alpha.size));
    if (!(alpha <= r.sigma && r.sigma <= r.theta))
        throw IdentityViolation("sandwich alpha <= sigma <= theta violated at n=" + std::to_string(spec.n()) +
                                " k=" + std::to_string(spec.k()) + " L={" + join_list(spec.L()) +
                                "}: alpha=" + std::to_string(r.alpha.size) + " sigma=" + to_string(r.sigma) +
                                " theta=" + to_string(r.theta));
    return r;
}

std::optional<std::pair<int, int>> prime_power(int q) {
    if (q < 2) return std::nullopt;
    int p = 2;
    while (p * p <= q && q % p) ++p;
    if (q % p) p = q;
    int m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1) return std::nullopt;
    return std::pair{p, m};
}

bool gap_adjacent(int q, int intersection) { return (intersection + 1) % q == 0; }

std::vector<int> gap_L(int q) {
    const int k = q * q - 1;
    std::vector<int> L;
    for (int l = 0; l < k; ++l)
        if (!gap_adjacent(q, l)) L.push_back(l);
    if (static_cast<int>(L.size()) != q * q - q)
        throw std::logic_error("gap construction: |L| = " + std::to_string(L.size()) +
                               ", expected q^2 - q = " + std::to_string(q * q - q));
    return L;
}

GapReport gap_report(int q, long n, std::size_t vertex_cap, std::uint64_t node_budget) {
    auto pp = prime_power(q);
    if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    const int k = q * q - 1;
    if (n < 2L * k)
        throw std::invalid_argument("gap construction needs n >= 2(q^2-1) = " + std::to_string(2 * k));

    GapReport r;
    r.q = q;
    r.p = pp->first;
    r.k = k;
    r.n = n;
    r.L = gap_L(q);
    const LSpec spec = LSpec::make(n, k, r.L);
    r.vertex_count = binom(n, k);
    r.theta = theta(spec);
    r.sigma = sigma(spec);
    r.minrank_bound = binom(n, q - 1);
    if (r.vertex_count <= BigInt(static_cast<unsigned long>(vertex_cap))) {
        AlphaResult a = alpha_bruteforce(build_graph(spec, vertex_cap), node_budget);
        r.alpha = a.size;
        r.alpha_exact = a.exact;
    }
    r.def = def_bound(spec);
    r.rcw = rcw_bound(spec);
    r.exponent_estimate = log_of(r.theta / Rational(r.minrank_bound)) / log_of(Rational(r.vertex_count));
    r.target_exponent = 1 - make_rational(2, q + 1);
    return r;
}

std::string dump_adjacency(const JohnsonGraph& graph) {
    std::ostringstream out;
    for (std::size_t v = 0; v < graph.size(); ++v) {
        out << '{';
        for (std::size_t i = 0; i < graph.vertices[v].size(); ++i)
            out << (i ? "," : "") << graph.vertices[v][i] + 1;
        out << "}:";
        const Bitset& row = graph.adjacency[v];
        for (std::size_t u = row.first(); u != Bitset::npos; u = row.next(u + 1)) out << ' ' << u;
        out << '\n';
    }
    return out.str();
}

}  // namespace thetalab
