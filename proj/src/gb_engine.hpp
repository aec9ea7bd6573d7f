#pragma once

// Internal Buchberger kernel. Fixed-width exponent vectors, divisibility
// masks, geobucket reduction, Gebauer-Moeller pair elimination. Coefficient
// arithmetic is a template parameter (word-sized prime field or exact
// rationals).

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "rrsing/groebner.hpp"

namespace rrsing::detail {

constexpr std::size_t kMaxEngineVars = 16;

struct EMono {
    std::array<std::uint32_t, kMaxEngineVars> e;
    std::uint64_t deg;

    static EMono one() {
        EMono m;
        m.e.fill(0);
        m.deg = 0;
        return m;
    }
};

inline int emono_compare(const EMono& a, const EMono& b, std::size_t n, OrderKind k) {
    if (k == OrderKind::grevlex) {
        if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
        for (std::size_t i = n; i-- > 0;)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

inline bool emono_divides(const EMono& a, const EMono& b, std::size_t n) {
    if (a.deg > b.deg) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline bool emono_equal(const EMono& a, const EMono& b, std::size_t n) {
    if (a.deg != b.deg) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (a.e[i] != b.e[i]) return false;
    return true;
}

inline bool emono_coprime(const EMono& a, const EMono& b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

inline EMono emono_mul(const EMono& a, const EMono& b, std::size_t n) {
    EMono r = EMono::one();
    for (std::size_t i = 0; i < n; ++i) r.e[i] = a.e[i] + b.e[i];
    r.deg = a.deg + b.deg;
    return r;
}

inline EMono emono_div(const EMono& a, const EMono& b, std::size_t n) {
    EMono r = EMono::one();
    for (std::size_t i = 0; i < n; ++i) r.e[i] = a.e[i] - b.e[i];
    r.deg = a.deg - b.deg;
    return r;
}

inline EMono emono_lcm(const EMono& a, const EMono& b, std::size_t n) {
    EMono r = EMono::one();
    for (std::size_t i = 0; i < n; ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

// Divisibility filter: bits record "exponent of variable i >= threshold".
// a | b requires mask(a) & ~mask(b) == 0.
inline std::uint32_t divmask(const EMono& m, std::size_t n) {
    static constexpr std::uint32_t thresholds[3] = {1, 2, 4};
    std::uint32_t mask = 0;
    std::uint32_t bit = 1;
    const std::size_t vars = std::min<std::size_t>(n, 10);
    for (std::size_t i = 0; i < vars; ++i) {
        for (std::uint32_t t : thresholds) {
            if (m.e[i] >= t) mask |= bit;
            bit <<= 1;
        }
    }
    return mask;
}

// --- coefficient domains ----------------------------------------------------

struct FpOps {
    std::uint64_t p;
    using C = std::uint64_t;
    C zero() const { return 0; }
    C one() const { return 1 % p; }
    bool is_zero(C a) const { return a == 0; }
    C add(C a, C b) const {
        C s = a + b;
        return s >= p ? s - p : s;
    }
    C sub(C a, C b) const { return a >= b ? a - b : a + p - b; }
    C neg(C a) const { return a == 0 ? 0 : p - a; }
    C mul(C a, C b) const {
        return static_cast<C>((static_cast<unsigned __int128>(a) * b) % p);
    }
    C inv(C a) const {
        C r = 1 % p, base = a % p;
        std::uint64_t e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
};

struct QOps {
    using C = Rational;
    C zero() const { return Rational(0); }
    C one() const { return Rational(1); }
    bool is_zero(const C& a) const { return a.is_zero(); }
    C add(const C& a, const C& b) const { return a + b; }
    C sub(const C& a, const C& b) const { return a - b; }
    C neg(const C& a) const { return -a; }
    C mul(const C& a, const C& b) const { return a * b; }
    C inv(const C& a) const { return Rational(1) / a; }
};

template <class Ops>
struct ETerm {
    EMono m;
    typename Ops::C c;
};

// terms stored descending in the active order (leading term first)
template <class Ops>
using EPoly = std::vector<ETerm<Ops>>;

// --- geobucket ---------------------------------------------------------------

// Buckets hold ascending-sorted term vectors; bucket i has soft capacity
// 4^{i+1}. pop_leading() combines heads across buckets.
template <class Ops>
class GeoBucket {
public:
    GeoBucket(const Ops& ops, std::size_t nvars, OrderKind order)
        : ops_(ops), nvars_(nvars), order_(order) {}

    bool empty() {
        for (auto& b : buckets_)
            if (!b.empty()) return false;
        return true;
    }

    // v must be sorted ascending with distinct monomials
    void add_ascending(std::vector<ETerm<Ops>>&& v) {
        if (v.empty()) return;
        std::size_t idx = 0;
        std::size_t cap = 4;
        while (cap < v.size()) {
            cap *= 4;
            ++idx;
        }
        while (true) {
            if (idx >= buckets_.size()) buckets_.resize(idx + 1);
            if (buckets_[idx].empty()) {
                buckets_[idx] = std::move(v);
                return;
            }
            v = merge(std::move(buckets_[idx]), std::move(v));
            buckets_[idx].clear();
            if (v.empty()) return;
            if (v.size() <= cap) {
                buckets_[idx] = std::move(v);
                return;
            }
            cap *= 4;
            ++idx;
        }
    }

    // extract the leading (maximal) term, combining equal heads; nullopt when exhausted
    std::optional<ETerm<Ops>> pop_leading() {
        for (;;) {
            int best = -1;
            for (std::size_t i = 0; i < buckets_.size(); ++i) {
                if (buckets_[i].empty()) continue;
                if (best < 0 ||
                    emono_compare(buckets_[i].back().m,
                                  buckets_[static_cast<std::size_t>(best)].back().m, nvars_,
                                  order_) > 0)
                    best = static_cast<int>(i);
            }
            if (best < 0) return std::nullopt;
            ETerm<Ops> t = buckets_[static_cast<std::size_t>(best)].back();
            buckets_[static_cast<std::size_t>(best)].pop_back();
            for (std::size_t i = 0; i < buckets_.size(); ++i) {
                if (static_cast<int>(i) == best || buckets_[i].empty()) continue;
                if (emono_equal(buckets_[i].back().m, t.m, nvars_)) {
                    t.c = ops_.add(t.c, buckets_[i].back().c);
                    buckets_[i].pop_back();
                }
            }
            if (!ops_.is_zero(t.c)) return t;
        }
    }

private:
    std::vector<ETerm<Ops>> merge(std::vector<ETerm<Ops>>&& a, std::vector<ETerm<Ops>>&& b) {
        std::vector<ETerm<Ops>> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            int c = emono_compare(a[i].m, b[j].m, nvars_, order_);
            if (c < 0) {
                out.push_back(std::move(a[i++]));
            } else if (c > 0) {
                out.push_back(std::move(b[j++]));
            } else {
                auto s = ops_.add(a[i].c, b[j].c);
                if (!ops_.is_zero(s)) out.push_back({a[i].m, std::move(s)});
                ++i, ++j;
            }
        }
        for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
        for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
        return out;
    }

    const Ops& ops_;
    std::size_t nvars_;
    OrderKind order_;
    std::vector<std::vector<ETerm<Ops>>> buckets_;
};

// --- the engine ---------------------------------------------------------------

template <class Ops>
class Engine {
public:
    Engine(const Ops& ops, std::size_t nvars, OrderKind order, GbBudget budget)
        : ops_(ops), nvars_(nvars), order_(order), budget_(budget),
          start_(std::chrono::steady_clock::now()) {}

    // Runs Buchberger over the input and returns the unique reduced basis.
    std::vector<EPoly<Ops>> reduced_basis(std::vector<EPoly<Ops>> input) {
        std::stable_sort(input.begin(), input.end(),
                         [&](const EPoly<Ops>& a, const EPoly<Ops>& b) {
                             return emono_compare(a.front().m, b.front().m, nvars_, order_) < 0;
                         });
        for (auto& f : input) {
            check_budget(f.front().m.deg);
            EPoly<Ops> r = reduce_full(make_bucket_source(f));
            if (!r.empty()) insert_basis(make_monic(std::move(r)));
        }
        while (!pairs_.empty()) {
            Pair pr = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            ++stats_.pairs_processed;
            check_budget(pr.lcm.deg);
            EPoly<Ops> s = s_poly(basis_[pr.i], basis_[pr.j], pr.lcm);
            EPoly<Ops> r = reduce_full(make_bucket_source(s));
            if (r.empty()) {
                ++stats_.reductions_to_zero;
                continue;
            }
            insert_basis(make_monic(std::move(r)));
        }
        return finalize();
    }

    // Full normal form of f against an already-Groebner basis.
    EPoly<Ops> normal_form(const EPoly<Ops>& f, const std::vector<EPoly<Ops>>& gb) {
        for (const auto& g : gb) insert_reducer_only(g);
        return reduce_full(make_bucket_source(f));
    }

    const GbStats& stats() const { return stats_; }

private:
    struct Pair {
        EMono lcm;
        std::uint32_t i, j;
    };

    struct PairCmp {
        const Engine* eng;
        bool operator()(const Pair& a, const Pair& b) const {
            if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
            int c = emono_compare(a.lcm, b.lcm, eng->nvars_, eng->order_);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };

    void check_budget(std::uint64_t working_degree) {
        stats_.max_degree_seen = std::max(stats_.max_degree_seen, working_degree);
        if (working_degree > budget_.max_degree)
            throw_exhausted("degree cap " + std::to_string(budget_.max_degree) + " exceeded");
        if (budget_.max_pairs && stats_.pairs_processed > *budget_.max_pairs)
            throw_exhausted("pair budget exhausted");
        if (budget_.wall_seconds && ++budget_checks_ % 16 == 0) {
            double elapsed = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - start_).count();
            if (elapsed > *budget_.wall_seconds) throw_exhausted("time budget exhausted");
        }
    }

    [[noreturn]] void throw_exhausted(const std::string& why) {
        stats_.basis_size = alive_count();
        stats_.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        throw BudgetExhausted(why, stats_);
    }

    std::size_t alive_count() const {
        std::size_t n = 0;
        for (bool a : alive_)
            if (a) ++n;
        return n;
    }

    GeoBucket<Ops> make_bucket_source(const EPoly<Ops>& f) {
        GeoBucket<Ops> bucket(ops_, nvars_, order_);
        std::vector<ETerm<Ops>> asc(f.rbegin(), f.rend());
        bucket.add_ascending(std::move(asc));
        return bucket;
    }

    // scaled shifted tail of g, ascending: -(c) * (g - LT(g)) * shift
    std::vector<ETerm<Ops>> scaled_tail_ascending(const EPoly<Ops>& g, const EMono& shift,
                                                  const typename Ops::C& c) {
        std::vector<ETerm<Ops>> out;
        out.reserve(g.size() - 1);
        for (std::size_t i = g.size(); i-- > 1;)
            out.push_back({emono_mul(g[i].m, shift, nvars_), ops_.neg(ops_.mul(g[i].c, c))});
        return out;
    }

    EPoly<Ops> reduce_full(GeoBucket<Ops> work) {
        EPoly<Ops> result;
        std::uint64_t steps = 0;
        while (auto t = work.pop_leading()) {
            if ((++steps & 0x3ff) == 0) check_budget(t->m.deg);
            int g = find_reducer(t->m);
            if (g < 0) {
                result.push_back(std::move(*t));
                continue;
            }
            const EPoly<Ops>& red = basis_[static_cast<std::size_t>(g)];
            typename Ops::C c = ops_.mul(t->c, lc_inv_[static_cast<std::size_t>(g)]);
            work.add_ascending(scaled_tail_ascending(red, emono_div(t->m, red.front().m, nvars_), c));
        }
        return result;
    }

    int find_reducer(const EMono& m) const {
        const std::uint32_t mask = divmask(m, nvars_);
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (!alive_[i]) continue;
            if (masks_[i] & ~mask) continue;
            if (emono_divides(basis_[i].front().m, m, nvars_)) return static_cast<int>(i);
        }
        return -1;
    }

    EPoly<Ops> make_monic(EPoly<Ops> f) {
        typename Ops::C inv = ops_.inv(f.front().c);
        for (auto& t : f) t.c = ops_.mul(t.c, inv);
        return f;
    }

    EPoly<Ops> s_poly(const EPoly<Ops>& f, const EPoly<Ops>& g, const EMono& l) {
        // both monic: S = shift_f * f - shift_g * g
        const EMono sf = emono_div(l, f.front().m, nvars_);
        const EMono sg = emono_div(l, g.front().m, nvars_);
        EPoly<Ops> out;
        out.reserve(f.size() + g.size());
        std::size_t i = 0, j = 0;
        while (i < f.size() && j < g.size()) {
            EMono mi = emono_mul(f[i].m, sf, nvars_);
            EMono mj = emono_mul(g[j].m, sg, nvars_);
            int c = emono_compare(mi, mj, nvars_, order_);
            if (c > 0) {
                out.push_back({mi, f[i].c});
                ++i;
            } else if (c < 0) {
                out.push_back({mj, ops_.neg(g[j].c)});
                ++j;
            } else {
                auto s = ops_.sub(f[i].c, g[j].c);
                if (!ops_.is_zero(s)) out.push_back({mi, std::move(s)});
                ++i, ++j;
            }
        }
        for (; i < f.size(); ++i) out.push_back({emono_mul(f[i].m, sf, nvars_), f[i].c});
        for (; j < g.size(); ++j) out.push_back({emono_mul(g[j].m, sg, nvars_), ops_.neg(g[j].c)});
        return out;
    }

    void insert_reducer_only(const EPoly<Ops>& g) {
        basis_.push_back(g);
        alive_.push_back(true);
        masks_.push_back(divmask(g.front().m, nvars_));
        lc_inv_.push_back(ops_.inv(g.front().c));
    }

    // Gebauer-Moeller update with the new element h appended to the basis.
    void insert_basis(EPoly<Ops> h) {
        const std::uint32_t t = static_cast<std::uint32_t>(basis_.size());
        const EMono lm_h = h.front().m;
        basis_.push_back(std::move(h));
        alive_.push_back(true);
        masks_.push_back(divmask(lm_h, nvars_));
        lc_inv_.push_back(ops_.one());  // monic by construction

        // candidate pairs (i, t) for alive i < t
        struct Cand {
            EMono lcm;
            std::uint32_t i;
            bool coprime;
            bool dropped = false;
        };
        std::vector<Cand> cands;
        cands.reserve(t);
        for (std::uint32_t i = 0; i < t; ++i) {
            if (!alive_[i]) continue;
            const EMono& lm_i = basis_[i].front().m;
            cands.push_back({emono_lcm(lm_i, lm_h, nvars_), i, emono_coprime(lm_i, lm_h, nvars_)});
        }

        // criterion M/F among the new pairs: drop a candidate when another
        // candidate's lcm properly divides it, or equals it at a smaller index
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (cands[a].dropped) continue;
            for (std::size_t b = 0; b < cands.size(); ++b) {
                if (a == b || cands[b].dropped) continue;
                if (!emono_divides(cands[b].lcm, cands[a].lcm, nvars_)) continue;
                const bool equal = emono_equal(cands[b].lcm, cands[a].lcm, nvars_);
                if (!equal || b < a) {
                    cands[a].dropped = true;
                    break;
                }
            }
        }

        // criterion B on old pairs
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            const Pair& pr = *it;
            if (emono_divides(lm_h, pr.lcm, nvars_)) {
                const EMono l1 = emono_lcm(basis_[pr.i].front().m, lm_h, nvars_);
                const EMono l2 = emono_lcm(basis_[pr.j].front().m, lm_h, nvars_);
                if (!emono_equal(l1, pr.lcm, nvars_) && !emono_equal(l2, pr.lcm, nvars_)) {
                    it = pairs_.erase(it);
                    continue;
                }
            }
            ++it;
        }

        for (const auto& c : cands)
            if (!c.dropped && !c.coprime) pairs_.insert({c.lcm, c.i, t});

        // retire basis elements whose leading monomial the new one divides
        for (std::uint32_t i = 0; i < t; ++i)
            if (alive_[i] && emono_divides(lm_h, basis_[i].front().m, nvars_)) alive_[i] = false;
    }

    std::vector<EPoly<Ops>> finalize() {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (alive_[i]) keep.push_back(i);
        std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
            return emono_compare(basis_[a].front().m, basis_[b].front().m, nvars_, order_) < 0;
        });
        // tail-reduce each element against the others; leading monomials are
        // mutually irreducible so only tails change
        std::vector<EPoly<Ops>> out;
        out.reserve(keep.size());
        for (std::size_t idx : keep) {
            alive_[idx] = false;
            EPoly<Ops> tail(basis_[idx].begin() + 1, basis_[idx].end());
            EPoly<Ops> reduced_tail = reduce_full(make_bucket_source(tail));
            EPoly<Ops> g;
            g.reserve(reduced_tail.size() + 1);
            g.push_back(basis_[idx].front());
            for (auto& tt : reduced_tail) g.push_back(std::move(tt));
            alive_[idx] = true;
            out.push_back(std::move(g));
        }
        stats_.basis_size = out.size();
        stats_.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return out;
    }

    const Ops& ops_;
    std::size_t nvars_;
    OrderKind order_;
    GbBudget budget_;
    std::chrono::steady_clock::time_point start_;
    GbStats stats_;
    std::uint64_t budget_checks_ = 0;

    std::vector<EPoly<Ops>> basis_;
    std::vector<bool> alive_;
    std::vector<std::uint32_t> masks_;
    std::vector<typename Ops::C> lc_inv_;
    std::set<Pair, PairCmp> pairs_{PairCmp{this}};
};

}  // namespace rrsing::detail
