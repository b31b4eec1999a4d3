#pragma once

// Words in the amalgam F *_<z> F of two free groups of rank 2g over an
// infinite cyclic edge group: free reduction, Britton reduction, and the
// classification of elements as identity / conjugate into <z> / other.

#include <cstdlib>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lamkit/errors.hpp"

namespace lamkit {

/// Element of a free group on generators g1, g2, ...; letter +i is g_i and
/// -i its inverse. Always freely reduced.
class FreeWord {
  public:
    FreeWord() = default;

    /// Freely reduces an arbitrary letter sequence.
    static FreeWord reduce(const std::vector<int>& raw) {
        FreeWord w;
        for (int letter : raw) {
            w.push_back(letter);
        }
        return w;
    }

    static FreeWord generator(int index, long exponent = 1) {
        if (index < 1) {
            throw InvalidParameter("generator indices start at 1");
        }
        FreeWord w;
        const int letter = exponent < 0 ? -index : index;
        for (long i = 0; i < std::labs(exponent); ++i) {
            w.letters_.push_back(letter);
        }
        return w;
    }

    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    FreeWord inverse() const {
        FreeWord w;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
            w.letters_.push_back(-*it);
        }
        return w;
    }

    FreeWord pow(long k) const {
        const FreeWord base = k < 0 ? inverse() : *this;
        FreeWord w;
        for (long i = 0; i < std::labs(k); ++i) {
            w = w * base;
        }
        return w;
    }

    friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
        FreeWord w = a;
        for (int letter : b.letters_) {
            w.push_back(letter);
        }
        return w;
    }

    friend bool operator==(const FreeWord&, const FreeWord&) = default;
    friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

    /// Largest generator index used (0 for the identity).
    int max_generator() const {
        int m = 0;
        for (int l : letters_) {
            m = std::max(m, std::abs(l));
        }
        return m;
    }

  private:
    void push_back(int letter) {
        if (letter == 0) {
            throw InvalidParameter("letter 0 is not a generator");
        }
        if (!letters_.empty() && letters_.back() == -letter) {
            letters_.pop_back();
        } else {
            letters_.push_back(letter);
        }
    }

    std::vector<int> letters_;
};

/// Free reduction of a raw letter sequence; idempotent.
inline FreeWord free_reduce(const std::vector<int>& raw) { return FreeWord::reduce(raw); }

/// (generator index, exponent) runs, e.g. g1^2 g2^-1.
inline std::vector<std::pair<int, long>> syllables_of(const FreeWord& w) {
    std::vector<std::pair<int, long>> out;
    for (int l : w.letters()) {
        const int idx = std::abs(l);
        const long e = l > 0 ? 1 : -1;
        if (!out.empty() && out.back().first == idx) {
            out.back().second += e;
        } else {
            out.emplace_back(idx, e);
        }
    }
    return out;
}

inline std::string to_string(const FreeWord& w) {
    if (w.is_identity()) {
        return "1";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, e] : syllables_of(w)) {
        if (!first) {
            out << '.';
        }
        first = false;
        out << 'g' << idx;
        if (e != 1) {
            out << '^' << e;
        }
    }
    return out.str();
}

/// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicReduction {
    FreeWord conjugator;
    FreeWord core;
};

inline CyclicReduction cyclic_reduce(const FreeWord& w) {
    const auto& l = w.letters();
    std::size_t i = 0;
    std::size_t j = l.size();
    while (j - i >= 2 && l[i] == -l[j - 1]) {
        ++i;
        --j;
    }
    return {FreeWord::reduce({l.begin(), l.begin() + static_cast<std::ptrdiff_t>(i)}),
            FreeWord::reduce({l.begin() + static_cast<std::ptrdiff_t>(i), l.begin() + static_cast<std::ptrdiff_t>(j)})};
}

/// A nontrivial element is a proper power iff its cyclic core is a proper
/// power as a string.
inline bool is_proper_power(const FreeWord& w) {
    const auto core = cyclic_reduce(w).core.letters();
    const std::size_t n = core.size();
    for (std::size_t period = 1; period < n; ++period) {
        if (n % period != 0) {
            continue;
        }
        bool periodic = true;
        for (std::size_t i = period; i < n && periodic; ++i) {
            periodic = core[i] == core[i - period];
        }
        if (periodic) {
            return true;
        }
    }
    return false;
}

inline void require_edge_generator(const FreeWord& z) {
    if (z.is_identity()) {
        throw InvalidEdgeGenerator("edge generator must be nontrivial");
    }
    if (is_proper_power(z)) {
        throw InvalidEdgeGenerator("edge generator " + to_string(z) + " is a proper power");
    }
}

/// k with w = z^k, or nullopt when w is not in <z>.
inline std::optional<long> power_of_z(const FreeWord& w, const FreeWord& z) {
    require_edge_generator(z);
    if (w.is_identity()) {
        return 0L;
    }
    // z = t u t^-1 with u cyclically reduced, so z^k = t u^k t^-1 without cancellation
    const CyclicReduction cz = cyclic_reduce(z);
    const std::size_t t = cz.conjugator.length();
    const std::size_t u = cz.core.length();
    if (w.length() < 2 * t || (w.length() - 2 * t) % u != 0) {
        return std::nullopt;
    }
    const long k_abs = static_cast<long>((w.length() - 2 * t) / u);
    for (long k : {k_abs, -k_abs}) {
        if (k != 0 && z.pow(k) == w) {
            return k;
        }
    }
    return std::nullopt;
}

/// True when `u` is conjugate in its free group to a nonzero power of z.
inline bool conjugate_into_cyclic(const FreeWord& u, const FreeWord& z) {
    require_edge_generator(z);
    const auto core_u = cyclic_reduce(u).core.letters();
    if (core_u.empty()) {
        return true;
    }
    const auto core_z = cyclic_reduce(z).core;
    if (core_u.size() % core_z.length() != 0) {
        return false;
    }
    const long k = static_cast<long>(core_u.size() / core_z.length());
    for (long sign : {1L, -1L}) {
        const auto target = core_z.pow(sign * k).letters();
        const std::size_t n = target.size();
        for (std::size_t shift = 0; shift < n; ++shift) {
            bool same = true;
            for (std::size_t i = 0; i < n && same; ++i) {
                same = core_u[i] == target[(i + shift) % n];
            }
            if (same) {
                return true;
            }
        }
    }
    return false;
}

enum class Factor { L, R };

inline Factor other(Factor f) { return f == Factor::L ? Factor::R : Factor::L; }
inline char to_char(Factor f) { return f == Factor::L ? 'L' : 'R'; }

/// The edge group <z>, embedded as z_L in the left and z_R in the right factor.
class EdgeGroup {
  public:
    EdgeGroup() : EdgeGroup(FreeWord::generator(1), FreeWord::generator(1)) {}
    EdgeGroup(FreeWord z_left, FreeWord z_right) : left_(std::move(z_left)), right_(std::move(z_right)) {
        require_edge_generator(left_);
        require_edge_generator(right_);
    }

    const FreeWord& z(Factor f) const { return f == Factor::L ? left_ : right_; }

    std::optional<long> power(const FreeWord& w, Factor f) const { return power_of_z(w, z(f)); }

  private:
    FreeWord left_;
    FreeWord right_;
};

struct Syllable {
    Factor factor = Factor::L;
    FreeWord word;
    friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Sequence of syllables from the two factors. Arbitrary sequences are
/// allowed as input; britton_reduce produces the alternating reduced form.
struct AmalgamWord {
    std::vector<Syllable> syllables;

    std::size_t syllable_length() const { return syllables.size(); }
    bool is_identity() const { return syllables.empty(); }
    friend bool operator==(const AmalgamWord&, const AmalgamWord&) = default;

    AmalgamWord inverse() const {
        AmalgamWord w;
        for (auto it = syllables.rbegin(); it != syllables.rend(); ++it) {
            w.syllables.push_back({it->factor, it->word.inverse()});
        }
        return w;
    }

    friend AmalgamWord operator*(const AmalgamWord& a, const AmalgamWord& b) {
        AmalgamWord w = a;
        w.syllables.insert(w.syllables.end(), b.syllables.begin(), b.syllables.end());
        return w;
    }
};

inline std::string to_string(const AmalgamWord& w) {
    if (w.is_identity()) {
        return "1";
    }
    std::string out;
    for (const auto& s : w.syllables) {
        if (!out.empty()) {
            out += ' ';
        }
        out += to_char(s.factor);
        out += ':';
        out += to_string(s.word);
    }
    return out;
}

/// Merges adjacent syllables of one factor, drops trivial syllables and
/// pushes every syllable lying in <z> across into a neighbour, until the
/// word alternates and no syllable lies in <z> (except a lone one).
inline AmalgamWord britton_reduce(const AmalgamWord& input, const EdgeGroup& edge = {}) {
    std::vector<Syllable> s = input.syllables;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < s.size();) {
            if (s[i].word.is_identity()) {
                s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
            } else if (i + 1 < s.size() && s[i].factor == s[i + 1].factor) {
                s[i].word = s[i].word * s[i + 1].word;
                s.erase(s.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                changed = true;
            } else {
                ++i;
            }
        }
        if (changed || s.size() < 2) {
            continue;
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            const auto k = edge.power(s[i].word, s[i].factor);
            if (!k) {
                continue;
            }
            if (i + 1 < s.size()) {
                auto& next = s[i + 1];
                next.word = edge.z(next.factor).pow(*k) * next.word;
            } else {
                auto& prev = s[i - 1];
                prev.word = prev.word * edge.z(prev.factor).pow(*k);
            }
            s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            break;
        }
    }
    return {std::move(s)};
}

enum class ElementClass { identity, conjugate_into_G0, pA_type };

inline std::string to_string(ElementClass c) {
    switch (c) {
        case ElementClass::identity: return "identity";
        case ElementClass::conjugate_into_G0: return "conjugate_into_G0";
        case ElementClass::pA_type: return "pA_type";
    }
    return "?";
}

/// Cyclic Britton reduction: conjugates until the reduced word has length at
/// most 1 or starts and ends in different factors.
inline AmalgamWord cyclically_reduce(const AmalgamWord& w, const EdgeGroup& edge = {}) {
    AmalgamWord r = britton_reduce(w, edge);
    while (r.syllable_length() >= 3 && r.syllables.front().factor == r.syllables.back().factor) {
        Syllable merged{r.syllables.front().factor, r.syllables.back().word * r.syllables.front().word};
        AmalgamWord next;
        next.syllables.push_back(std::move(merged));
        next.syllables.insert(next.syllables.end(), r.syllables.begin() + 1, r.syllables.end() - 1);
        r = britton_reduce(next, edge);
    }
    return r;
}

/// identity; conjugate into the edge group <z> (the parabolic subgroup); or
/// neither, which is the symbolic stand-in for pseudo-Anosov.
inline ElementClass classify_element(const AmalgamWord& w, const EdgeGroup& edge = {}) {
    const AmalgamWord r = cyclically_reduce(w, edge);
    if (r.is_identity()) {
        return ElementClass::identity;
    }
    if (r.syllable_length() == 1) {
        const Syllable& s = r.syllables.front();
        return conjugate_into_cyclic(s.word, edge.z(s.factor)) ? ElementClass::conjugate_into_G0
                                                               : ElementClass::pA_type;
    }
    return ElementClass::pA_type;
}

// ---------------------------------------------------------------------------
// Text syntax: "L:g1^2 R:g3.g2^-1 L:z^-1"; "z" stands for the edge word of
// the syllable's factor, "1" for the identity.

inline FreeWord parse_free_word(const std::string& text, std::optional<int> rank = std::nullopt,
                                const FreeWord* z = nullptr) {
    if (text == "1" || text == "e" || text.empty()) {
        return {};
    }
    static const std::regex atom(R"(\s*[.*]?\s*(g(\d+)|z)(\^(-?\d+))?)");
    FreeWord w;
    auto begin = std::sregex_iterator(text.begin(), text.end(), atom);
    std::size_t consumed = 0;
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        if (static_cast<std::size_t>(m.position(0)) != consumed) {
            throw ParseError("cannot parse free word '" + text + "'");
        }
        consumed += static_cast<std::size_t>(m.length(0));
        const long exponent = m[4].matched ? std::stol(m[4].str()) : 1;
        if (m[1].str() == "z") {
            if (z == nullptr) {
                throw ParseError("'z' is only available inside amalgam words");
            }
            w = w * z->pow(exponent);
        } else {
            const int idx = std::stoi(m[2].str());
            if (idx < 1 || (rank && idx > *rank)) {
                throw ParseError("generator g" + std::to_string(idx) + " outside g1..g" +
                                 std::to_string(rank.value_or(idx)));
            }
            w = w * FreeWord::generator(idx, exponent);
        }
    }
    if (consumed != text.size()) {
        throw ParseError("cannot parse free word '" + text + "'");
    }
    return w;
}

inline AmalgamWord parse_amalgam_word(const std::string& text, const EdgeGroup& edge = {},
                                      std::optional<int> rank = std::nullopt) {
    AmalgamWord w;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        if (token.size() < 2 || token[1] != ':' || (token[0] != 'L' && token[0] != 'R')) {
            throw ParseError("syllable '" + token + "' must look like L:<word> or R:<word>");
        }
        const Factor f = token[0] == 'L' ? Factor::L : Factor::R;
        w.syllables.push_back({f, parse_free_word(token.substr(2), rank, &edge.z(f))});
    }
    return w;
}

}  // namespace lamkit
