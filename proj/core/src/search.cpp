#include "vclab/search.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <mutex>
#include <random>
#include <stdexcept>
#include <vector>

#include "vclab/binom.hpp"

namespace vclab {

namespace {

constexpr std::size_t kMaxVertices = 4000;

struct BitRow {
    std::vector<std::uint64_t> w;

    explicit BitRow(std::size_t bits = 0) : w((bits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w) c += static_cast<std::size_t>(__builtin_popcountll(x));
        return c;
    }
    void and_with(const BitRow& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    }
};

// Pairwise-compatibility graph with a per-vertex payload (the member mask;
// kernel tracking needs it for the nontrivial-intersecting constraint).
struct CliqueGraph {
    std::size_t nv = 0;
    std::vector<BitRow> adj;
    std::vector<SubsetMask> member;  // family member carried by the vertex
    std::vector<int> member_id;      // distinct-member id (pair graphs)

    void init(std::size_t n) {
        nv = n;
        adj.assign(n, BitRow(n));
    }
    void add_edge(std::size_t i, std::size_t j) {
        adj[i].set(j);
        adj[j].set(i);
    }
};

struct CliqueOptions {
    std::uint64_t max_nodes = 0;
    int threads = 1;
    bool need_empty_kernel = false;  // incumbent must have empty common intersection
};

struct CliqueResult {
    std::uint64_t best = 0;
    std::vector<int> witness;
    std::uint64_t nodes = 0;
    bool complete = true;
};

class CliqueSolver {
  public:
    CliqueSolver(const CliqueGraph& g, const CliqueOptions& opt) : g_(g), opt_(opt) {}

    CliqueResult run() {
        CliqueResult res;
        if (g_.nv == 0) return res;
        best_.store(0);
        nodes_.store(0);
        aborted_.store(false);

        BitRow all(g_.nv);
        for (std::size_t i = 0; i < g_.nv; ++i) all.set(i);

        if (opt_.threads > 1) {
            run_parallel_root(all);
        } else {
            std::vector<int> cur;
            SubsetMask kern;  // meaningful once cur is nonempty
            expand(all, cur, kern);
        }
        res.best = best_.load();
        res.nodes = nodes_.load();
        res.complete = !aborted_.load();
        if (res.complete && res.best > 0) {
            // canonical witness: first clique of optimal size in vertex
            // index order, independent of thread count
            res.witness = canonical_witness(res.best);
        } else {
            std::lock_guard<std::mutex> lk(mu_);
            res.witness = incumbent_;
        }
        return res;
    }

  private:
    const CliqueGraph& g_;
    CliqueOptions opt_;
    std::atomic<std::uint64_t> best_{0}, nodes_{0};
    std::atomic<bool> aborted_{false};
    std::mutex mu_;
    std::vector<int> incumbent_;

    bool count_node() {
        std::uint64_t n = nodes_.fetch_add(1) + 1;
        if (opt_.max_nodes && n > opt_.max_nodes) {
            aborted_.store(true);
            return false;
        }
        return true;
    }

    bool kernel_ok(const std::vector<int>& clique, const SubsetMask& kern) const {
        if (!opt_.need_empty_kernel) return true;
        return !clique.empty() && kern.empty();
    }

    void offer(const std::vector<int>& clique, const SubsetMask& kern) {
        if (!kernel_ok(clique, kern)) return;
        std::uint64_t sz = clique.size();
        std::uint64_t cur = best_.load();
        while (sz > cur && !best_.compare_exchange_weak(cur, sz)) {
        }
        if (sz > cur) {
            std::lock_guard<std::mutex> lk(mu_);
            if (clique.size() >= incumbent_.size()) incumbent_ = clique;
        }
    }

    // Greedy coloring; returns candidates sorted so that color values are
    // non-decreasing (branch from the back).
    void color_sort(const BitRow& P, std::vector<int>& order, std::vector<int>& colors) const {
        order.clear();
        colors.clear();
        std::vector<std::vector<int>> classes;
        for (std::size_t wi = 0; wi < P.w.size(); ++wi) {
            std::uint64_t bits = P.w[wi];
            while (bits) {
                int v = static_cast<int>((wi << 6) + __builtin_ctzll(bits));
                bits &= bits - 1;
                bool placed = false;
                for (auto& cls : classes) {
                    bool conflict = false;
                    for (int u : cls)
                        if (g_.adj[v].test(static_cast<std::size_t>(u))) {
                            conflict = true;
                            break;
                        }
                    if (!conflict) {
                        cls.push_back(v);
                        placed = true;
                        break;
                    }
                }
                if (!placed) classes.push_back({v});
            }
        }
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) {
                order.push_back(v);
                colors.push_back(static_cast<int>(c) + 1);
            }
    }

    void expand(BitRow P, std::vector<int>& cur, SubsetMask kern) {
        if (aborted_.load()) return;
        if (!count_node()) return;
        std::vector<int> order, colors;
        color_sort(P, order, colors);
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            if (aborted_.load()) return;
            if (cur.size() + static_cast<std::size_t>(colors[idx]) <= best_.load()) return;
            int v = order[idx];
            cur.push_back(v);
            SubsetMask k2 = cur.size() == 1 ? g_.member[v] : (kern & g_.member[v]);
            offer(cur, k2);
            BitRow P2 = P;
            P2.and_with(g_.adj[v]);
            if (P2.any()) expand(std::move(P2), cur, k2);
            cur.pop_back();
            P.reset(static_cast<std::size_t>(v));
        }
    }

    void run_parallel_root(const BitRow& all) {
        std::vector<int> order, colors;
        color_sort(all, order, colors);
        // root branches in the same order the sequential loop would take
        struct Branch {
            int v;
            BitRow P;
        };
        std::vector<Branch> branches;
        BitRow P = all;
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            int v = order[idx];
            BitRow P2 = P;
            P2.and_with(g_.adj[v]);
            branches.push_back({v, std::move(P2)});
            P.reset(static_cast<std::size_t>(v));
        }
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= branches.size() || aborted_.load()) return;
                std::vector<int> cur{branches[i].v};
                SubsetMask kern = g_.member[branches[i].v];
                offer(cur, kern);
                if (branches[i].P.any()) expand(branches[i].P, cur, kern);
            }
        };
        std::vector<std::future<void>> futs;
        for (int t = 0; t < opt_.threads; ++t)
            futs.push_back(std::async(std::launch::async, worker));
        for (auto& f : futs) f.get();
    }

    // Sequential lexicographic DFS for the first optimal clique.
    std::vector<int> canonical_witness(std::uint64_t opt) {
        std::vector<int> cur, found;
        BitRow all(g_.nv);
        for (std::size_t i = 0; i < g_.nv; ++i) all.set(i);
        SubsetMask kern;
        canonical_dfs(all, cur, kern, opt, found);
        return found;
    }

    bool canonical_dfs(BitRow P, std::vector<int>& cur, SubsetMask kern, std::uint64_t opt,
                       std::vector<int>& found) {
        if (cur.size() == opt) {
            if (kernel_ok(cur, kern)) {
                found = cur;
                return true;
            }
            return false;
        }
        std::vector<int> order, colors;
        color_sort(P, order, colors);
        if (cur.size() + (order.empty() ? 0 : static_cast<std::size_t>(colors.back())) < opt)
            return false;
        // ascending vertex order for lexicographic-first witness
        std::vector<int> verts;
        for (std::size_t wi = 0; wi < P.w.size(); ++wi) {
            std::uint64_t bits = P.w[wi];
            while (bits) {
                verts.push_back(static_cast<int>((wi << 6) + __builtin_ctzll(bits)));
                bits &= bits - 1;
            }
        }
        for (int v : verts) {
            cur.push_back(v);
            SubsetMask k2 = cur.size() == 1 ? g_.member[v] : (kern & g_.member[v]);
            BitRow P2 = P;
            P2.and_with(g_.adj[v]);
            if (canonical_dfs(std::move(P2), cur, k2, opt, found)) return true;
            cur.pop_back();
            P.reset(static_cast<std::size_t>(v));
        }
        return false;
    }
};

Family family_from_clique(int n, int k, const CliqueGraph& g, const std::vector<int>& clique) {
    Family f(n, k);
    std::vector<SubsetMask> mem;
    for (int v : clique) mem.push_back(g.member[v]);
    std::sort(mem.begin(), mem.end());
    f.members = std::move(mem);
    return f;
}

}  // namespace

bool is_intersecting(const Family& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (!f.members[i].intersects(f.members[j])) return false;
    return true;
}

bool has_switness_property(const Family& f, int d, int s, bool at_most) {
    if (!f.uniform_rank || *f.uniform_rank != d + 1)
        throw std::invalid_argument("has_switness_property: family must be (d+1)-uniform");
    for (const auto& F : f.members) {
        bool ok_member = false;
        SubsetMask::u128 full = F.raw(), sub = full;
        while (!ok_member) {
            sub = (sub - 1) & full;
            SubsetMask B = SubsetMask::from_raw(f.n, sub);
            int c = B.cardinality();
            if (c == s || (at_most && c <= s)) {
                bool hit = false;
                for (const auto& G : f.members)
                    if ((G & F) == B) {
                        hit = true;
                        break;
                    }
                if (!hit) ok_member = true;
            }
            if (sub == 0) break;
        }
        if (!ok_member) return false;
    }
    return true;
}

SearchResult max_intersecting(int n, int k, bool nontrivial, const SearchBudget& budget) {
    if (n < k || k < 1) throw std::invalid_argument("max_intersecting: need n >= k >= 1");
    std::uint64_t universe = binom(n, k);
    if (universe > kMaxVertices)
        throw std::invalid_argument("max_intersecting: universe too large (feasibility guard)");

    CliqueGraph g;
    g.init(universe);
    g.member = k_subsets(n, k);
    for (std::size_t i = 0; i < g.nv; ++i) g.member_id.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < g.nv; ++i)
        for (std::size_t j = i + 1; j < g.nv; ++j)
            if (g.member[i].intersects(g.member[j])) g.add_edge(i, j);

    CliqueOptions opt;
    opt.max_nodes = budget.max_nodes;
    opt.threads = budget.threads;
    opt.need_empty_kernel = nontrivial;
    CliqueResult res = CliqueSolver(g, opt).run();

    SearchResult out;
    out.status = res.complete ? SearchStatus::complete : SearchStatus::budget_exceeded;
    out.best_size = res.best;
    out.nodes = res.nodes;
    out.best_family = family_from_clique(n, k, g, res.witness);
    return out;
}

namespace {

CliqueGraph build_switness_graph(int n, int d, int s, bool at_most) {
    std::uint64_t universe = binom(n, d + 1);
    CliqueGraph g;
    std::vector<SubsetMask> members = k_subsets(n, d + 1);
    std::vector<std::pair<int, SubsetMask>> verts;  // (member index, witness)
    for (std::size_t mi = 0; mi < members.size(); ++mi) {
        std::vector<SubsetMask> bs;
        SubsetMask::u128 full = members[mi].raw(), sub = full;
        while (true) {
            sub = (sub - 1) & full;
            SubsetMask B = SubsetMask::from_raw(n, sub);
            int c = B.cardinality();
            if (c == s || (at_most && c <= s)) bs.push_back(B);
            if (sub == 0) break;
        }
        std::sort(bs.begin(), bs.end());
        for (const auto& B : bs) verts.emplace_back(static_cast<int>(mi), B);
    }
    if (verts.size() > kMaxVertices)
        throw std::invalid_argument("max_switness_family: pair universe too large (feasibility guard)");
    (void)universe;

    g.init(verts.size());
    for (const auto& [mi, B] : verts) {
        g.member.push_back(members[static_cast<std::size_t>(mi)]);
        g.member_id.push_back(mi);
    }
    for (std::size_t i = 0; i < g.nv; ++i)
        for (std::size_t j = i + 1; j < g.nv; ++j) {
            if (g.member_id[i] == g.member_id[j]) continue;  // one witness per member
            SubsetMask inter = g.member[i] & g.member[j];
            if (inter == verts[i].second || inter == verts[j].second) continue;
            g.add_edge(i, j);
        }
    return g;
}

}  // namespace

SearchResult max_switness_family(int n, int d, int s, const SearchBudget& budget, bool at_most) {
    if (s < 0 || s > d) throw std::invalid_argument("max_switness_family: need 0 <= s <= d");
    if (n < d + 1) throw std::invalid_argument("max_switness_family: need n >= d+1");
    CliqueGraph g = build_switness_graph(n, d, s, at_most);

    CliqueOptions opt;
    opt.max_nodes = budget.max_nodes;
    opt.threads = budget.threads;
    CliqueResult res = CliqueSolver(g, opt).run();

    SearchResult out;
    out.status = res.complete ? SearchStatus::complete : SearchStatus::budget_exceeded;
    out.best_size = res.best;
    out.nodes = res.nodes;
    out.best_family = family_from_clique(n, d + 1, g, res.witness);
    out.tripwire = out.best_size > binom(n - 1, d);
    return out;
}

namespace {

// DFS state for the VC-dimension search: per (d+1)-set S a word with one bit
// per subset of S marking realized traces; a full word means S is shattered.
struct VcSearch {
    int n, d;
    std::vector<SubsetMask> universe;  // colex (d+1)-subsets, also the S list
    std::vector<std::vector<std::uint64_t>> trace_bit;  // [member][S] -> bit
    std::uint64_t full_word;
    std::vector<std::uint64_t> word;  // per S
    std::uint64_t nodes = 0, max_nodes = 0;
    bool aborted = false;
    std::uint64_t best = 0, cap;
    std::vector<int> chosen, best_set;

    bool try_add(int mi, std::vector<int>& touched) {
        touched.clear();
        const auto& bits = trace_bit[static_cast<std::size_t>(mi)];
        for (std::size_t si = 0; si < universe.size(); ++si) {
            std::uint64_t nw = word[si] | bits[si];
            if (nw != word[si]) {
                if (nw == full_word) {
                    // roll back what this call already set
                    for (int t : touched) word[static_cast<std::size_t>(t)] &= ~bits[static_cast<std::size_t>(t)];
                    return false;
                }
                touched.push_back(static_cast<int>(si));
                word[si] = nw;
            }
        }
        return true;
    }

    void undo(int mi, const std::vector<int>& touched) {
        const auto& bits = trace_bit[static_cast<std::size_t>(mi)];
        for (int si : touched) word[static_cast<std::size_t>(si)] &= ~bits[static_cast<std::size_t>(si)];
    }

    void dfs(std::size_t idx) {
        if (aborted) return;
        if (max_nodes && ++nodes > max_nodes) {
            aborted = true;
            return;
        }
        std::uint64_t remaining = universe.size() - idx;
        std::uint64_t bound = std::min(chosen.size() + remaining, cap);
        if (bound <= best) return;
        if (idx == universe.size()) return;

        std::vector<int> touched;
        if (try_add(static_cast<int>(idx), touched)) {
            chosen.push_back(static_cast<int>(idx));
            if (chosen.size() > best) {
                best = chosen.size();
                best_set = chosen;
            }
            dfs(idx + 1);
            chosen.pop_back();
            undo(static_cast<int>(idx), touched);
        }
        dfs(idx + 1);
    }
};

std::uint32_t trace_index(const SubsetMask& F, const SubsetMask& S) {
    // bit position of the trace F n S among subsets of S
    std::uint32_t bit = 0;
    int pos = 0;
    for (int e : S.elements()) {
        if (F.contains(e)) bit |= std::uint32_t{1} << pos;
        ++pos;
    }
    return bit;
}

}  // namespace

SearchResult max_vc_family(int n, int d, const SearchBudget& budget) {
    if (n < d + 1 || d < 1) throw std::invalid_argument("max_vc_family: need n >= d+1, d >= 1");
    if (d > 5) throw std::invalid_argument("max_vc_family: trace words support d <= 5");
    std::uint64_t universe_size = binom(n, d + 1);
    if (universe_size > 2000)
        throw std::invalid_argument("max_vc_family: universe too large (feasibility guard)");

    VcSearch st;
    st.n = n;
    st.d = d;
    st.universe = k_subsets(n, d + 1);
    const int subset_count = 1 << (d + 1);  // subsets of a (d+1)-set
    st.full_word = (subset_count == 64) ? ~std::uint64_t{0}
                                        : ((std::uint64_t{1} << subset_count) - 1);
    st.word.assign(st.universe.size(), 0);
    st.trace_bit.resize(st.universe.size());
    for (std::size_t mi = 0; mi < st.universe.size(); ++mi) {
        auto& row = st.trace_bit[mi];
        row.resize(st.universe.size());
        for (std::size_t si = 0; si < st.universe.size(); ++si)
            row[si] = std::uint64_t{1} << trace_index(st.universe[mi], st.universe[si]);
    }
    st.cap = binom(n, d);  // Frankl-Pach upper bound, admissible pruning
    st.max_nodes = budget.max_nodes;
    if (universe_size > 24 && st.max_nodes == 0) st.max_nodes = 200'000'000;

    st.dfs(0);

    SearchResult out;
    out.status = st.aborted ? SearchStatus::budget_exceeded : SearchStatus::complete;
    out.best_size = st.best;
    out.nodes = st.nodes;
    out.best_family = Family(n, d + 1);
    for (int i : st.best_set) out.best_family.members.push_back(st.universe[static_cast<std::size_t>(i)]);
    return out;
}

std::optional<Family> hunt_counterexample(int n, int d, int s, std::uint64_t budget_nodes,
                                          std::uint64_t seed) {
    CliqueGraph g = build_switness_graph(n, d, s, false);
    const std::uint64_t bound = binom(n - 1, d);
    std::mt19937_64 rng(seed);

    // Randomized greedy restarts.
    std::vector<int> perm(g.nv);
    for (std::size_t i = 0; i < g.nv; ++i) perm[i] = static_cast<int>(i);
    std::uint64_t restarts = g.nv ? std::min<std::uint64_t>(budget_nodes / g.nv + 1, 20000) : 0;
    for (std::uint64_t r = 0; r < restarts; ++r) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> clique;
        for (int v : perm) {
            bool ok = true;
            for (int u : clique)
                if (!g.adj[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v))) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        if (clique.size() > bound) {
            Family f = family_from_clique(n, d + 1, g, clique);
            if (has_switness_property(f, d, s) && f.size() > bound) return f;
        }
    }

    // Budgeted exact search; a tripwire hit is re-verified.
    CliqueOptions opt;
    opt.max_nodes = budget_nodes;
    opt.threads = 1;
    CliqueResult res = CliqueSolver(g, opt).run();
    if (res.best > bound) {
        Family f = family_from_clique(n, d + 1, g, res.witness);
        if (has_switness_property(f, d, s) && f.size() > bound) return f;
    }
    return std::nullopt;
}

}  // namespace vclab
