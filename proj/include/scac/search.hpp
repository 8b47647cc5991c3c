#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "code.hpp"
#include "difference.hpp"
#include "validate.hpp"

namespace scac {

/// Lexicographically least member of {I - a : a in I} and {(-I) - b : b in -I}.
/// d, d* and d+ are invariant under translation and reflection, so codewords
/// with the same canonical form are interchangeable in any CAC or SCAC.
inline Codeword canonical_form(const Codeword& cw) {
    const int L = cw.length();
    std::vector<int> best;
    auto consider = [&](const std::vector<int>& elems) {
        for (int a : elems) {
            std::vector<int> t;
            t.reserve(elems.size());
            for (int x : elems) t.push_back(((x - a) % L + L) % L);
            std::sort(t.begin(), t.end());
            if (best.empty() || t < best) best = std::move(t);
        }
    };
    consider(cw.elements());
    consider(cw.reflected().elements());
    return {L, std::move(best)};
}

/// One translation/reflection orbit of admissible codewords.
struct CandidateClass {
    Codeword canonical;
    /// d* in CAC mode, d+ in SCAC mode.
    ResidueSet mask;
};

struct EnumerateOptions {
    /// Only equi-difference codewords {0, g, ..., (w-1)g}.
    bool equi_only = false;
};

namespace detail {

inline bool admissible(const DifferenceProfile& p, Mode mode) {
    if (mode == Mode::cac) return true;
    const int L = p.length;
    return !p.d_star.contains(1 % L) && !p.d_star.contains(L - 1);
}

inline CandidateClass make_class(const Codeword& cw, Mode mode) {
    auto p = difference_profile(cw);
    return {cw, mode == Mode::cac ? std::move(p.d_star) : std::move(p.d_plus)};
}

}  // namespace detail

/// One class per orbit of admissible w-subsets of Z_L, sorted by ascending
/// mask size, ties broken by the canonical codeword.
inline std::vector<CandidateClass> enumerate_classes(int L, int weight, Mode mode, EnumerateOptions opts = {}) {
    if (L < 3 || weight < 2 || weight > L) throw std::invalid_argument("enumerate_classes: need L >= 3, 2 <= w <= L");
    std::vector<CandidateClass> out;
    auto keep = [&](const Codeword& cw) {
        auto p = difference_profile(cw);
        if (detail::admissible(p, mode)) out.push_back(detail::make_class(cw, mode));
    };

    if (opts.equi_only) {
        std::set<std::vector<int>> seen;
        for (int g = 1; 2 * g <= L; ++g) {
            std::vector<int> e;
            for (long long j = 0; j < weight; ++j) e.push_back(static_cast<int>(j * g % L));
            auto s = e;
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
            auto canon = canonical_form(Codeword(L, e));
            if (seen.insert(canon.elements()).second) keep(canon);
        }
    } else {
        // Combinations {0} + (w-1)-subsets of {1..L-1}, kept when canonical.
        std::vector<int> idx(static_cast<std::size_t>(weight - 1));
        for (int i = 0; i < weight - 1; ++i) idx[i] = i + 1;
        while (true) {
            std::vector<int> e{0};
            e.insert(e.end(), idx.begin(), idx.end());
            Codeword cw(L, e);
            if (canonical_form(cw) == cw) keep(cw);
            int k = weight - 2;
            while (k >= 0 && idx[k] == L - 1 - (weight - 2 - k)) --k;
            if (k < 0) break;
            ++idx[k];
            for (int m = k + 1; m < weight - 1; ++m) idx[m] = idx[m - 1] + 1;
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const CandidateClass& a, const CandidateClass& b) {
        const int sa = a.mask.size(), sb = b.mask.size();
        if (sa != sb) return sa < sb;
        return a.canonical < b.canonical;
    });
    return out;
}

struct SearchOptions {
    std::uint64_t budget = 100'000'000;
    unsigned threads = 1;
    bool equi_only = false;
};

struct SearchOutcome {
    Mode mode = Mode::cac;
    int length = 0;
    int weight = 0;
    int optimum = 0;
    Code witness;
    std::uint64_t nodes_explored = 0;
    /// False when the node budget ran out; `optimum` is then only a lower bound.
    bool proven_optimal = false;
};

namespace detail {

/// Branch and bound over classes with pairwise-disjoint masks.
class MaxDisjointSearch {
public:
    MaxDisjointSearch(const std::vector<CandidateClass>& classes, int domain, std::uint64_t budget)
        : n_(classes.size()), budget_(budget), domain_(domain) {
        words_ = classes.empty() ? 1 : classes.front().mask.words().size();
        masks_.reserve(n_ * words_);
        for (const auto& c : classes) {
            masks_.insert(masks_.end(), c.mask.words().begin(), c.mask.words().end());
            sizes_.push_back(c.mask.size());
        }
    }

    struct Result {
        int best = 0;
        std::vector<std::size_t> chosen;
    };

    /// Maximum over the whole tree. With `threads > 1` the first branching
    /// level is shared out; the best value is published through a monotone
    /// atomic so that workers prune against each other.
    Result maximise(unsigned threads) {
        best_.store(0);
        Result global;
        if (n_ == 0) return global;
        if (threads <= 1) {
            Worker w(*this, /*target=*/-1);
            std::vector<std::uint64_t> used(words_, 0);
            w.dfs(0, used, 0);
            return {w.best, w.best_set};
        }
        std::atomic<std::size_t> next{0};
        std::mutex mu;
        auto run = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n_;) {
                Worker w(*this, -1);
                std::vector<std::uint64_t> used(mask(i), mask(i) + words_);
                w.stack.push_back(i);
                w.visit(i + 1, used, 1);
                std::lock_guard lock(mu);
                if (w.best > global.best) global = {w.best, w.best_set};
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run);
        for (auto& t : pool) t.join();
        return global;
    }

    /// First selection of size `target` in depth-first order, if any.
    std::vector<std::size_t> first_of_size(int target) {
        Worker w(*this, target);
        std::vector<std::uint64_t> used(words_, 0);
        w.dfs(0, used, 0);
        return w.best >= target ? w.best_set : std::vector<std::size_t>{};
    }

    std::uint64_t nodes() const { return nodes_.load(); }
    bool exhausted() const { return aborted_.load(); }

private:
    const std::uint64_t* mask(std::size_t i) const { return masks_.data() + i * words_; }

    bool disjoint(std::size_t i, const std::vector<std::uint64_t>& used) const {
        const auto* m = mask(i);
        for (std::size_t w = 0; w < words_; ++w)
            if (m[w] & used[w]) return false;
        return true;
    }

    int popcount(const std::vector<std::uint64_t>& used) const {
        int c = 0;
        for (auto w : used) c += std::popcount(w);
        return c;
    }

    void publish(int v) {
        int cur = best_.load();
        while (v > cur && !best_.compare_exchange_weak(cur, v)) {
        }
    }

    struct Worker {
        MaxDisjointSearch& s;
        int target;  // -1: maximise; otherwise stop at the first selection of this size
        int best = 0;
        std::vector<std::size_t> stack, best_set;

        Worker(MaxDisjointSearch& search, int t) : s(search), target(t) {}

        bool done() const { return target >= 0 && best >= target; }

        int bar() const {
            if (target >= 0) return target - 1;
            return std::max(best, s.best_.load(std::memory_order_relaxed));
        }

        void dfs(std::size_t start, std::vector<std::uint64_t>& used, int size) { visit(start, used, size); }

        void visit(std::size_t start, std::vector<std::uint64_t>& used, int size) {
            if (s.aborted_.load(std::memory_order_relaxed)) return;
            if (s.nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > s.budget_) {
                s.aborted_.store(true);
                return;
            }
            if (size > best) {
                best = size;
                best_set = stack;
                if (target < 0) s.publish(size);
            }
            if (done()) return;
            const int free = s.domain_ - s.popcount(used);
            for (std::size_t i = start; i < s.n_; ++i) {
                if (size + free / s.sizes_[i] <= bar()) break;
                if (!s.disjoint(i, used)) continue;
                const auto* m = s.mask(i);
                std::vector<std::uint64_t> next(used);
                for (std::size_t w = 0; w < s.words_; ++w) next[w] |= m[w];
                stack.push_back(i);
                visit(i + 1, next, size + 1);
                stack.pop_back();
                if (done() || s.aborted_.load(std::memory_order_relaxed)) return;
            }
        }
    };

    std::size_t n_;
    std::size_t words_ = 1;
    std::uint64_t budget_;
    int domain_;
    std::vector<std::uint64_t> masks_;
    std::vector<int> sizes_;
    std::atomic<int> best_{0};
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> aborted_{false};
};

inline Code code_from(const std::vector<CandidateClass>& classes, const std::vector<std::size_t>& chosen, int L,
                      int weight) {
    std::vector<Codeword> cws;
    for (auto i : chosen) cws.push_back(classes[i].canonical);
    return {L, weight, std::move(cws)};
}

}  // namespace detail

/// Exact maximum number of codewords with pairwise-disjoint masks: M(L,w) in
/// CAC mode, M_S(L,w) in SCAC mode. The witness is the first optimal
/// selection in depth-first order over the sorted classes, independent of the
/// thread count.
inline SearchOutcome max_code(int L, int weight, Mode mode, SearchOptions opts = {}) {
    const auto classes = enumerate_classes(L, weight, mode, {opts.equi_only});
    const int domain = mode == Mode::cac ? L - 1 : L - 2;
    detail::MaxDisjointSearch search(classes, domain, opts.budget);
    auto res = search.maximise(opts.threads);
    SearchOutcome out;
    out.mode = mode;
    out.length = L;
    out.weight = weight;
    out.proven_optimal = !search.exhausted();
    out.optimum = res.best;
    if (opts.threads > 1 && out.proven_optimal && res.best > 0) {
        detail::MaxDisjointSearch replay(classes, domain, ~std::uint64_t{0});
        res.chosen = replay.first_of_size(res.best);
    }
    out.nodes_explored = search.nodes();
    out.witness = detail::code_from(classes, res.chosen, L, weight);
    return out;
}

/// Calls `visit(code)` for every code of at most `max_size` classes with
/// pairwise-disjoint masks (every size >= 1), or only for the inclusion-maximal
/// ones when `maximal_only`. Stops early when `visit` returns false.
inline void for_each_code(const std::vector<CandidateClass>& classes, int L, int weight, std::size_t max_size,
                          bool maximal_only, const std::function<bool(const Code&)>& visit) {
    std::vector<std::size_t> chosen;
    std::vector<ResidueSet> used_stack{ResidueSet(L)};
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        const ResidueSet used = used_stack.back();
        bool extendable = false;
        for (std::size_t i = 0; i < classes.size() && !stop; ++i) {
            if (classes[i].mask.intersects(used)) continue;
            extendable = true;
            if (i < start || chosen.size() >= max_size) continue;
            chosen.push_back(i);
            used_stack.push_back(used | classes[i].mask);
            rec(i + 1);
            used_stack.pop_back();
            chosen.pop_back();
        }
        if (stop || chosen.empty()) return;
        if (!maximal_only || !extendable) stop = !visit(detail::code_from(classes, chosen, L, weight));
    };
    rec(0);
}

}  // namespace scac
