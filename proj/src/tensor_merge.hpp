#pragma once

// Shared simplification for sums of pure tensors (DiagN, RatTensor).

#include <algorithm>
#include <vector>

#include "jgwa/evseq.hpp"

namespace jgwa::detail {

inline Rat scale_key(const EvSeq& f) {
    if (!f.r().is_zero()) return f.r().num().lead();
    for (const auto& [k, v] : f.exc())
        if (v != 0) return v;
    return 0;
}

inline Rat scale_key(const RatFunc& f) { return f.is_zero() ? Rat(0) : f.num().lead(); }

template <class Term>
int compare_except(const Term& a, const Term& b, int skip) {
    for (std::size_t i = 0; i < a.f.size(); ++i) {
        if (static_cast<int>(i) == skip) continue;
        if (int c = compare(a.f[i], b.f[i])) return c;
    }
    return 0;
}

// scale factors to key 1; false if the term vanishes
template <class Term>
bool rescale(Term& t) {
    if (t.c == 0) return false;
    for (auto& f : t.f) {
        Rat key = scale_key(f);
        if (key == 0) return false;
        if (key != 1) {
            f *= Rat(1 / key);
            t.c *= key;
        }
    }
    return true;
}

template <class Term>
std::vector<Term> merge_terms(int n, std::vector<Term> in) {
    using F = std::decay_t<decltype(in[0].f[0])>;
    std::vector<Term> ts;
    ts.reserve(in.size());
    for (auto& t : in)
        if (rescale(t)) ts.push_back(std::move(t));
    if (ts.empty()) return ts;
    if (n == 1) {
        F acc{};
        for (const auto& t : ts) {
            F g = t.f[0];
            g *= t.c;
            acc += g;
        }
        Term u{Rat(1), {acc}};
        std::vector<Term> out;
        if (rescale(u)) out.push_back(std::move(u));
        return out;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int j = -1; j < n; ++j) {
            // j = -1 merges identical tuples, otherwise tuples equal outside slot j
            std::sort(ts.begin(), ts.end(), [j](const Term& a, const Term& b) {
                if (int c = compare_except(a, b, j)) return c < 0;
                return j >= 0 && compare(a.f[j], b.f[j]) < 0;
            });
            std::vector<Term> merged;
            for (std::size_t a = 0; a < ts.size();) {
                std::size_t b = a + 1;
                while (b < ts.size() && compare_except(ts[a], ts[b], j) == 0) ++b;
                if (b - a == 1) {
                    merged.push_back(std::move(ts[a]));
                } else {
                    changed = true;
                    Term u;
                    if (j < 0) {
                        u = ts[a];
                        for (std::size_t t = a + 1; t < b; ++t) u.c += ts[t].c;
                    } else {
                        u = Term{Rat(1), ts[a].f};
                        F acc{};
                        for (std::size_t t = a; t < b; ++t) {
                            F g = ts[t].f[j];
                            g *= ts[t].c;
                            acc += g;
                        }
                        u.f[j] = std::move(acc);
                    }
                    if (rescale(u)) merged.push_back(std::move(u));
                }
                a = b;
            }
            ts = std::move(merged);
        }
    }
    return ts;
}

}  // namespace jgwa::detail
