#pragma once

// Brute-force oracles for amalgam words: breadth-first search over all words
// reachable by elementary rewriting moves within a letter budget. Used to
// cross-check britton_reduce and classify_element on small words.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lamkit/amalgam.hpp"

namespace lamkit::rewriting {

struct Bounds {
    /// letters a state may carry beyond the starting word
    std::size_t extra_letters = 2;
    std::size_t max_states = 200000;
};

using State = std::vector<Syllable>;

namespace detail {

inline std::size_t letter_count(const State& s) {
    std::size_t n = 0;
    for (const auto& syl : s) {
        n += syl.word.length();
    }
    return n;
}

inline std::string key(const State& s) {
    std::string k;
    for (const auto& syl : s) {
        k += to_char(syl.factor);
        for (int l : syl.word.letters()) {
            k += std::to_string(l);
            k += ',';
        }
        k += '|';
    }
    return k;
}

/// Number of syllables once trivial syllables are dropped and equal-factor
/// neighbours are merged.
inline std::size_t compressed_length(const State& s) {
    std::size_t n = 0;
    std::optional<Factor> last;
    for (const auto& syl : s) {
        if (syl.word.is_identity()) {
            continue;
        }
        if (!last || *last != syl.factor) {
            ++n;
        }
        last = syl.factor;
    }
    return n;
}

inline bool equals_power(const FreeWord& w, const FreeWord& z) {
    const long bound = static_cast<long>(w.length());
    for (long k = -bound; k <= bound; ++k) {
        if (k != 0 && z.pow(k) == w) {
            return true;
        }
    }
    return false;
}

/// Moves that keep the element fixed: drop a trivial syllable, merge equal
/// neighbours, or move z^(+-1) across an adjacent pair of syllables.
inline std::vector<State> linear_moves(const State& s, const EdgeGroup& edge) {
    std::vector<State> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i].word.is_identity()) {
            State t = s;
            t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
            out.push_back(std::move(t));
        }
    }
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        State t = s;
        if (s[i].factor == s[i + 1].factor) {
            t[i].word = s[i].word * s[i + 1].word;
            t.erase(t.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            out.push_back(std::move(t));
            continue;
        }
        for (long eps : {1L, -1L}) {
            State u = s;
            u[i].word = s[i].word * edge.z(s[i].factor).pow(eps);
            u[i + 1].word = edge.z(s[i + 1].factor).pow(-eps) * s[i + 1].word;
            out.push_back(std::move(u));
        }
    }
    return out;
}

/// Moves that keep the conjugacy class fixed: rotate the syllables, move
/// z^(+-1) from the last syllable to the first, and conjugate a lone
/// syllable by a generator of its factor.
inline std::vector<State> cyclic_moves(const State& s, const EdgeGroup& edge, int generators) {
    std::vector<State> out = linear_moves(s, edge);
    if (s.size() >= 2) {
        State r(s.begin() + 1, s.end());
        r.push_back(s.front());
        out.push_back(std::move(r));
        const auto& first = s.front();
        const auto& last = s.back();
        if (first.factor != last.factor) {
            for (long eps : {1L, -1L}) {
                State u = s;
                u.back().word = last.word * edge.z(last.factor).pow(eps);
                u.front().word = edge.z(first.factor).pow(-eps) * first.word;
                out.push_back(std::move(u));
            }
        }
    }
    if (s.size() == 1) {
        for (int g = 1; g <= generators; ++g) {
            for (long e : {1L, -1L}) {
                const FreeWord x = FreeWord::generator(g, e);
                out.push_back({{s.front().factor, x.inverse() * s.front().word * x}});
            }
        }
    }
    return out;
}

template <class Moves, class Visit>
void explore(const State& start, const Bounds& bounds, Moves moves, Visit visit) {
    const std::size_t budget = letter_count(start) + bounds.extra_letters;
    std::set<std::string> seen{key(start)};
    std::deque<State> queue{start};
    while (!queue.empty() && seen.size() <= bounds.max_states) {
        State s = std::move(queue.front());
        queue.pop_front();
        if (visit(s)) {
            return;
        }
        for (auto& t : moves(s)) {
            if (letter_count(t) > budget) {
                continue;
            }
            if (seen.insert(key(t)).second) {
                queue.push_back(std::move(t));
            }
        }
    }
}

}  // namespace detail

/// Fewest syllables among all words reachable from `w` by equality-preserving
/// moves within the letter budget.
inline std::size_t minimal_syllable_length(const AmalgamWord& w, const EdgeGroup& edge = {}, const Bounds& bounds = {}) {
    std::size_t best = detail::compressed_length(w.syllables);
    detail::explore(
        w.syllables, bounds, [&](const State& s) { return detail::linear_moves(s, edge); },
        [&](const State& s) {
            best = std::min(best, detail::compressed_length(s));
            return best == 0;
        });
    return best;
}

/// Classification by search: identity if the empty word is reachable,
/// conjugate_into_G0 if a single syllable equal to a nonzero power of z is
/// reachable by conjugacy-preserving moves, pA_type otherwise.
inline ElementClass classify_by_search(const AmalgamWord& w, const EdgeGroup& edge = {}, int generators = 2,
                                       const Bounds& bounds = {}) {
    if (minimal_syllable_length(w, edge, bounds) == 0) {
        return ElementClass::identity;
    }
    bool found = false;
    detail::explore(
        w.syllables, bounds, [&](const State& s) { return detail::cyclic_moves(s, edge, generators); },
        [&](const State& s) {
            State nonempty;
            for (const auto& syl : s) {
                if (!syl.word.is_identity()) {
                    nonempty.push_back(syl);
                }
            }
            found = nonempty.size() == 1 && detail::equals_power(nonempty.front().word, edge.z(nonempty.front().factor));
            return found;
        });
    return found ? ElementClass::conjugate_into_G0 : ElementClass::pA_type;
}

/// Nontrivial freely reduced words of length 1..max_length over g1..g_generators.
inline std::vector<FreeWord> short_free_words(int generators, std::size_t max_length) {
    std::vector<FreeWord> out;
    std::vector<FreeWord> frontier{FreeWord{}};
    for (std::size_t len = 1; len <= max_length; ++len) {
        std::vector<FreeWord> next;
        for (const auto& w : frontier) {
            for (int g = 1; g <= generators; ++g) {
                for (long e : {1L, -1L}) {
                    FreeWord v = w * FreeWord::generator(g, e);
                    if (v.length() == len) {
                        next.push_back(v);
                    }
                }
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

/// Every alternating word with at most `max_syllables` syllables whose
/// syllables are nontrivial words of length <= max_syllable_letters.
inline std::vector<AmalgamWord> enumerate_alternating_words(int generators, std::size_t max_syllables,
                                                            std::size_t max_syllable_letters) {
    const auto pieces = short_free_words(generators, max_syllable_letters);
    std::vector<AmalgamWord> out{AmalgamWord{}};
    for (Factor start : {Factor::L, Factor::R}) {
        std::vector<AmalgamWord> layer{AmalgamWord{}};
        for (std::size_t n = 1; n <= max_syllables; ++n) {
            const Factor f = n % 2 == 1 ? start : other(start);
            std::vector<AmalgamWord> next;
            for (const auto& w : layer) {
                for (const auto& p : pieces) {
                    AmalgamWord v = w;
                    v.syllables.push_back({f, p});
                    next.push_back(std::move(v));
                }
            }
            out.insert(out.end(), next.begin(), next.end());
            layer = std::move(next);
        }
    }
    return out;
}

}  // namespace lamkit::rewriting
