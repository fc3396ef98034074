#include "cutpoly/analysis.hpp"

#include <algorithm>
#include <bit>
#include <atomic>
#include <thread>
#include <unordered_set>

namespace cutpoly {

std::size_t Coloring::distinct_count() const {
    std::unordered_set<std::uint32_t> seen(colors.begin(), colors.end());
    return seen.size();
}

namespace {

// Largest BFS distance from `source`, or -1 if some node is unreachable.
int eccentricity(const SkeletonGraph& s, std::uint32_t source, std::vector<int>& dist,
                 std::vector<std::uint32_t>& queue) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t v = queue[head];
        for (std::uint32_t w : s.adjacency[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    if (queue.size() != s.node_count())
        return -1;
    return dist[queue.back()];
}

} // namespace

int diameter(const SkeletonGraph& s, unsigned workers) {
    const auto total = static_cast<std::uint32_t>(s.node_count());
    if (total == 0)
        return 0;
    workers = workers ? workers : std::max(1U, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, total);

    std::vector<int> best(workers, 0);
    std::atomic<bool> disconnected{false};
    auto sweep = [&](unsigned worker) {
        std::vector<int> dist(total);
        std::vector<std::uint32_t> queue;
        queue.reserve(total);
        for (std::uint32_t v = worker; v < total && !disconnected; v += workers) {
            const int ecc = eccentricity(s, v, dist, queue);
            if (ecc < 0) {
                disconnected = true;
                return;
            }
            best[worker] = std::max(best[worker], ecc);
        }
    };
    if (workers == 1) {
        sweep(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(sweep, w);
    }
    if (disconnected)
        throw Error(ErrorCode::DisconnectedSkeleton, "skeleton is not connected");
    return *std::max_element(best.begin(), best.end());
}

namespace {

class CliqueSearch {
public:
    CliqueSearch(const SkeletonGraph& s, std::uint64_t budget) : s_(s), budget_(budget) {
        n_ = s.node_count();
        words_ = (n_ + 63) / 64;
        order_vertices();
        rows_.assign(n_ * words_, 0);
        for (std::size_t p = 0; p < n_; ++p)
            for (std::uint32_t w : s.adjacency[order_[p]])
                set_bit(row(p), position_[w]);
    }

    CliqueResult run() {
        std::vector<std::uint64_t> candidates(words_, 0);
        for (std::size_t p = 0; p < n_; ++p)
            set_bit(candidates.data(), p);
        seed_greedy();
        std::vector<std::uint32_t> current;
        expand(current, candidates);

        CliqueResult out;
        out.exact = !aborted_;
        out.expansions = expansions_;
        for (std::uint32_t p : best_)
            out.witness.push_back(order_[p]);
        std::sort(out.witness.begin(), out.witness.end());
        out.size = out.witness.size();
        return out;
    }

private:
    static void set_bit(std::uint64_t* bits, std::size_t i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); }
    static void clear_bit(std::uint64_t* bits, std::size_t i) { bits[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    std::uint64_t* row(std::size_t p) { return rows_.data() + p * words_; }

    // Degeneracy order (repeatedly strip a minimum-degree node, lowest index
    // first); the core ends up at the front, where colouring starts.
    void order_vertices() {
        std::vector<std::size_t> degree(n_);
        std::size_t max_degree = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            degree[v] = s_.adjacency[v].size();
            max_degree = std::max(max_degree, degree[v]);
        }
        std::vector<std::vector<std::uint32_t>> buckets(max_degree + 1);
        for (std::size_t v = n_; v-- > 0;)
            buckets[degree[v]].push_back(static_cast<std::uint32_t>(v));
        std::vector<char> removed(n_, 0);
        std::vector<std::uint32_t> stripped;
        stripped.reserve(n_);
        std::size_t d = 0;
        while (stripped.size() < n_) {
            d = d > 0 ? d - 1 : 0;
            while (buckets[d].empty())
                ++d;
            const std::uint32_t v = buckets[d].back();
            buckets[d].pop_back();
            if (removed[v] || degree[v] != d)
                continue;
            removed[v] = 1;
            stripped.push_back(v);
            for (std::uint32_t w : s_.adjacency[v])
                if (!removed[w]) {
                    --degree[w];
                    buckets[degree[w]].push_back(w);
                }
        }
        order_.assign(stripped.rbegin(), stripped.rend());
        position_.assign(n_, 0);
        for (std::size_t p = 0; p < n_; ++p)
            position_[order_[p]] = static_cast<std::uint32_t>(p);
    }

    // Greedy maximal cliques from the first few core nodes, so an exhausted
    // budget still reports a useful lower bound.
    void seed_greedy() {
        const std::size_t starts = std::min<std::size_t>(n_, 64);
        std::vector<std::uint64_t> cand(words_);
        for (std::size_t start = 0; start < starts; ++start) {
            std::vector<std::uint32_t> clique{static_cast<std::uint32_t>(start)};
            const std::uint64_t* nb = row(start);
            std::copy(nb, nb + words_, cand.begin());
            for (std::size_t w = 0; w < words_; ++w)
                while (cand[w]) {
                    const std::size_t p = w * 64 + static_cast<std::size_t>(std::countr_zero(cand[w]));
                    clique.push_back(static_cast<std::uint32_t>(p));
                    const std::uint64_t* np = row(p);
                    for (std::size_t u = 0; u < words_; ++u)
                        cand[u] &= np[u];
                }
            if (clique.size() > best_.size())
                best_ = std::move(clique);
        }
    }

    void expand(std::vector<std::uint32_t>& current, std::vector<std::uint64_t>& candidates) {
        if (++expansions_ > budget_) {
            aborted_ = true;
            return;
        }

        // Greedy sequential colouring of the candidates in position order.
        std::vector<std::uint32_t> order;
        std::vector<std::size_t> color;
        std::vector<std::uint64_t> uncolored = candidates;
        std::vector<std::uint64_t> available(words_);
        std::size_t k = 0;
        bool any = true;
        while (any) {
            any = false;
            available = uncolored;
            ++k;
            for (std::size_t w = 0; w < words_; ++w) {
                while (available[w]) {
                    const auto bit = static_cast<std::size_t>(std::countr_zero(available[w]));
                    const std::size_t p = w * 64 + bit;
                    any = true;
                    clear_bit(available.data(), p);
                    clear_bit(uncolored.data(), p);
                    const std::uint64_t* nb = row(p);
                    for (std::size_t u = w; u < words_; ++u)
                        available[u] &= ~nb[u];
                    order.push_back(static_cast<std::uint32_t>(p));
                    color.push_back(k);
                }
            }
        }

        std::vector<std::uint64_t> next(words_);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current.size() + color[idx] <= best_.size())
                return;
            const std::uint32_t p = order[idx];
            current.push_back(p);
            bool empty = true;
            const std::uint64_t* nb = row(p);
            for (std::size_t w = 0; w < words_; ++w) {
                next[w] = candidates[w] & nb[w];
                empty = empty && next[w] == 0;
            }
            if (empty) {
                if (current.size() > best_.size())
                    best_ = current;
            } else {
                auto child = next;
                expand(current, child);
            }
            current.pop_back();
            clear_bit(candidates.data(), p);
            if (aborted_)
                return;
        }
    }

    const SkeletonGraph& s_;
    std::uint64_t budget_;
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint32_t> order_;
    std::vector<std::uint32_t> position_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::uint32_t> best_;
    std::uint64_t expansions_ = 0;
    bool aborted_ = false;
};

} // namespace

CliqueResult clique_number(const SkeletonGraph& s, std::uint64_t budget) {
    const std::size_t n = s.node_count();
    if (n == 0)
        return {};
    // Complete skeletons (complete graphs G) would otherwise recurse 2^(n-1) deep.
    if (s.edge_count() == n * (n - 1) / 2) {
        CliqueResult out;
        out.size = n;
        for (std::size_t v = 0; v < n; ++v)
            out.witness.push_back(static_cast<std::uint32_t>(v));
        return out;
    }
    return CliqueSearch(s, budget).run();
}

ColoringCheck verify_coloring(const SkeletonGraph& s, const Coloring& col) {
    if (col.colors.size() != s.node_count())
        throw Error(ErrorCode::SizeMismatch, "coloring has " + std::to_string(col.colors.size()) +
                                                 " entries for " + std::to_string(s.node_count()) + " nodes");
    ColoringCheck out;
    for (std::uint32_t i = 0; i < s.node_count(); ++i)
        for (std::uint32_t j : s.adjacency[i])
            if (j > i && col.colors[i] == col.colors[j]) {
                out.proper = false;
                out.violation = std::pair{i, j};
                return out;
            }
    return out;
}

CliqueCheck verify_clique(const SkeletonGraph& s, std::span<const std::uint32_t> members) {
    for (std::uint32_t m : members)
        if (m >= s.node_count())
            throw Error(ErrorCode::UnknownIndex, "node " + std::to_string(m) + " is not in the skeleton");
    CliqueCheck out;
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
            if (!s.has_edge(members[a], members[b])) {
                out.valid = false;
                out.missing_edge = std::pair{members[a], members[b]};
                return out;
            }
    return out;
}

Metrics compute_metrics(const SkeletonGraph& s, std::uint64_t clique_budget, unsigned workers) {
    Metrics m;
    m.node_count = s.node_count();
    m.edge_count = s.edge_count();
    m.diameter = diameter(s, workers);
    const auto clique = clique_number(s, clique_budget);
    m.clique_number = clique.size;
    m.clique_exact = clique.exact;
    m.witness_clique = clique.witness;
    return m;
}

} // namespace cutpoly
