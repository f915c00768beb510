#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>
#include <algorithm>
#include <string>

#include "cube_complex.hpp"
#include "smith.hpp"
#include "homology.hpp"

namespace ktc {

// A letter is +-(g+1) for generator index g; a word is a letter sequence.
using Word = std::vector<int>;

inline Word inverse_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

inline Word free_reduce(const Word& w) {
    Word out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x) out.pop_back();
        else out.push_back(x);
    }
    return out;
}

inline Word cyclic_reduce(const Word& w) {
    Word out = free_reduce(w);
    while (out.size() >= 2 && out.front() == -out.back()) {
        out.erase(out.begin());
        out.pop_back();
    }
    return out;
}

inline bool is_cyclically_reduced(const Word& w) { return cyclic_reduce(w) == w; }

inline Word concat(const std::vector<Word>& parts) {
    Word out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// w^n for n >= 0, w^-1 repeated for n < 0
inline Word word_pow(const Word& w, int n) {
    Word base = n < 0 ? inverse_word(w) : w;
    Word out;
    for (int i = 0; i < std::abs(n); ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
}

inline Word letter(int g, int e = 1) { return word_pow({g + 1}, e); }

struct Presentation {
    int num_generators = 0;
    std::vector<Word> relators;

    void validate(bool require_cyclically_reduced = false) const {
        for (auto& r : relators)
            for (int x : r) {
                if (x == 0 || std::abs(x) > num_generators)
                    throw Error("BAD_WORD", "letter out of range");
            }
        if (require_cyclically_reduced)
            for (size_t i = 0; i < relators.size(); ++i)
                if (!is_cyclically_reduced(relators[i]))
                    throw Error("NOT_REDUCED", "relator " + std::to_string(i) + " is not cyclically reduced");
    }
};

// exponent-sum matrix, rows = generators, cols = relators
inline DenseMat exponent_matrix(const Presentation& p) {
    DenseMat m(p.num_generators, std::vector<BigInt>(p.relators.size()));
    for (size_t j = 0; j < p.relators.size(); ++j)
        for (int x : p.relators[j]) {
            int g = std::abs(x) - 1;
            m[g][j] += BigInt(x > 0 ? 1 : -1);
        }
    return m;
}

// degrees 0..2 of the presentation 2-complex: H_1 = coker of the exponent
// matrix, H_2 = its kernel (free)
inline HomologyGroups presentation_h1_h2(const Presentation& p) {
    DenseMat m = exponent_matrix(p);
    SnfResult snf = smith_normal_form(m);
    HomologyGroups out;
    out.groups.resize(3);
    out.groups[0].betti = 1;
    out.groups[1].betti = p.num_generators - static_cast<int64_t>(snf.rank());
    for (auto& f : snf.factors)
        if (!f.is_one()) out.groups[1].torsion.push_back(f);
    out.groups[2].betti = static_cast<int64_t>(p.relators.size()) - static_cast<int64_t>(snf.rank());
    return out;
}

// Sufficient certificate of a trivial fundamental group: every relator
// freely reduces to a single letter and every generator occurs as one.
inline bool trivializing_reduction_check(const Presentation& p) {
    std::set<int> covered;
    for (auto& r : p.relators) {
        Word w = free_reduce(r);
        if (w.size() != 1) return false;
        covered.insert(std::abs(w[0]) - 1);
    }
    for (int g = 0; g < p.num_generators; ++g)
        if (!covered.count(g)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// bounded coset enumeration (trivial subgroup); certifies finite index when
// the table closes within the coset bound

inline std::optional<size_t> coset_enumeration_index(const Presentation& p, size_t max_cosets = 10000) {
    int nl = 2 * p.num_generators;  // letters: 2g = g, 2g+1 = g^-1
    auto lix = [&](int x) { return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1; };
    auto linv = [&](int l) { return l ^ 1; };

    std::vector<std::vector<int64_t>> tab;  // -1 = undefined
    std::vector<int64_t> fwd;               // union-find forwarding for dead cosets
    auto alive = [&](int64_t c) { return fwd[c] == c; };
    std::function<int64_t(int64_t)> rep = [&](int64_t c) {
        while (fwd[c] != c) c = fwd[c] = fwd[fwd[c]];
        return c;
    };
    auto new_coset = [&]() -> int64_t {
        tab.push_back(std::vector<int64_t>(nl, -1));
        fwd.push_back(static_cast<int64_t>(tab.size() - 1));
        return static_cast<int64_t>(tab.size() - 1);
    };
    new_coset();  // coset 0 = the subgroup

    std::vector<std::pair<int64_t, int64_t>> coincidences;
    auto set_entry = [&](int64_t a, int l, int64_t b) {
        if (tab[a][l] == -1) tab[a][l] = b;
        else if (rep(tab[a][l]) != rep(b)) coincidences.push_back({tab[a][l], b});
        if (tab[b][linv(l)] == -1) tab[b][linv(l)] = a;
        else if (rep(tab[b][linv(l)]) != rep(a)) coincidences.push_back({tab[b][linv(l)], a});
    };
    auto process_coincidences = [&]() {
        while (!coincidences.empty()) {
            auto [x, y] = coincidences.back();
            coincidences.pop_back();
            x = rep(x);
            y = rep(y);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            fwd[y] = x;  // y dies
            for (int l = 0; l < nl; ++l) {
                int64_t t = tab[y][l];
                if (t == -1) continue;
                t = rep(t);
                if (tab[x][l] == -1) {
                    tab[x][l] = t;
                    if (tab[t][linv(l)] == -1) tab[t][linv(l)] = x;
                    else if (rep(tab[t][linv(l)]) != x) coincidences.push_back({tab[t][linv(l)], x});
                } else if (rep(tab[x][l]) != t) {
                    coincidences.push_back({tab[x][l], t});
                }
            }
        }
    };

    size_t defined = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int64_t c = 0; c < static_cast<int64_t>(tab.size()); ++c) {
            if (!alive(c)) continue;
            for (auto& r : p.relators) {
                if (r.empty()) continue;
                // scan-and-fill: walk forward and backward, deduce across a
                // single gap, define a coset only at the forward frontier
                for (;;) {
                    if (!alive(c)) break;
                    int64_t f = rep(c);
                    size_t i = 0;
                    while (i < r.size()) {
                        int64_t nxt = tab[f][lix(r[i])];
                        if (nxt == -1) break;
                        f = rep(nxt);
                        ++i;
                    }
                    if (i == r.size()) {
                        if (f != rep(c)) {
                            coincidences.push_back({f, rep(c)});
                            process_coincidences();
                            changed = true;
                        }
                        break;
                    }
                    int64_t b = rep(c);
                    size_t j = r.size();
                    while (j > i + 1) {
                        int64_t prv = tab[b][linv(lix(r[j - 1]))];
                        if (prv == -1) break;
                        b = rep(prv);
                        --j;
                    }
                    if (j == i + 1) {
                        // one gap: deduce the entry
                        set_entry(f, lix(r[i]), b);
                        process_coincidences();
                        changed = true;
                        continue;
                    }
                    if (defined >= max_cosets) return std::nullopt;
                    int64_t fresh = new_coset();
                    ++defined;
                    set_entry(f, lix(r[i]), fresh);
                    process_coincidences();
                    changed = true;
                }
                if (!alive(c)) break;
            }
        }
        // also require the table to be complete (every letter defined)
        if (!changed) {
            for (int64_t c = 0; c < static_cast<int64_t>(tab.size()) && !changed; ++c) {
                if (!alive(c)) continue;
                for (int l = 0; l < nl && !changed; ++l) {
                    if (tab[c][l] == -1) {
                        if (defined >= max_cosets) return std::nullopt;
                        int64_t fresh = new_coset();
                        ++defined;
                        set_entry(c, l, fresh);
                        process_coincidences();
                        changed = true;
                    }
                }
            }
        }
    }
    size_t live = 0;
    for (int64_t c = 0; c < static_cast<int64_t>(tab.size()); ++c) live += alive(c);
    return live;
}

} // namespace ktc
