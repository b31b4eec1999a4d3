#pragma once

// Weight space of the standard train track near a multicurve C and the
// linear action of the multitwist T_C on it.
//
// Near each component c_j the track has three labeled branches carrying x_j
// (the intersection i(mu, c_j)), y_j and z_j = x_j + y_j. All other branches
// form an opaque `rest` block that the twist does not touch.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lamkit/errors.hpp"
#include "lamkit/numeric.hpp"

namespace lamkit {

struct BranchTriple {
    Rational x;
    Rational y;
    Rational z;
    friend bool operator==(const BranchTriple&, const BranchTriple&) = default;
};

struct TrackWeights {
    std::vector<BranchTriple> components;
    std::vector<Rational> rest;

    int size() const { return static_cast<int>(components.size()); }

    /// Flat coordinate vector (x_1, y_1, z_1, ..., x_n, y_n, z_n, rest...).
    std::vector<Rational> flatten() const {
        std::vector<Rational> v;
        v.reserve(3 * components.size() + rest.size());
        for (const auto& c : components) {
            v.push_back(c.x);
            v.push_back(c.y);
            v.push_back(c.z);
        }
        v.insert(v.end(), rest.begin(), rest.end());
        return v;
    }

    friend bool operator==(const TrackWeights&, const TrackWeights&) = default;
};

/// Throws InvalidWeights on a negative weight or a broken switch condition.
inline void validate(const TrackWeights& w) {
    if (w.components.empty()) {
        throw InvalidWeights("track weights need at least one multicurve component");
    }
    for (std::size_t j = 0; j < w.components.size(); ++j) {
        const auto& c = w.components[j];
        if (c.x < 0 || c.y < 0 || c.z < 0) {
            throw InvalidWeights("negative weight at component " + std::to_string(j + 1));
        }
        if (c.z != c.x + c.y) {
            throw InvalidWeights("switch condition z = x + y fails at component " + std::to_string(j + 1));
        }
    }
    for (const auto& r : w.rest) {
        if (r < 0) {
            throw InvalidWeights("negative weight in the rest block");
        }
    }
}

/// Optional check of the rest block against caller-supplied switch
/// conditions: each row r demands sum_i r_i * rest_i = 0.
inline void validate_rest_switches(const TrackWeights& w, const std::vector<std::vector<Rational>>& switch_rows) {
    for (std::size_t r = 0; r < switch_rows.size(); ++r) {
        const auto& row = switch_rows[r];
        if (row.size() != w.rest.size()) {
            throw InvalidWeights("switch row " + std::to_string(r) + " has the wrong length");
        }
        Rational sum = 0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            sum += row[i] * w.rest[i];
        }
        if (sum != 0) {
            throw InvalidWeights("rest block violates switch row " + std::to_string(r));
        }
    }
}

/// Weights with z_j filled in from the switch condition.
inline TrackWeights make_weights(const std::vector<std::pair<Rational, Rational>>& xy, std::vector<Rational> rest = {}) {
    TrackWeights w;
    for (const auto& [x, y] : xy) {
        w.components.push_back({x, y, x + y});
    }
    w.rest = std::move(rest);
    validate(w);
    return w;
}

namespace detail {

inline void multitwist_in_place(TrackWeights& w) {
    for (auto& c : w.components) {
        c.y += c.x;
        c.z += c.x;
    }
}

}  // namespace detail

/// One application of T_C: y_j and z_j both gain x_j.
inline TrackWeights multitwist_step(const TrackWeights& w) {
    validate(w);
    TrackWeights out = w;
    detail::multitwist_in_place(out);
    return out;
}

/// Weights carried by the component c_j itself (1-based): x = 0, y = z = 1.
inline TrackWeights curve_class(int j, int components, std::size_t rest_size = 0) {
    if (j < 1 || j > components) {
        throw std::out_of_range("component index " + std::to_string(j) + " outside 1.." + std::to_string(components));
    }
    TrackWeights w;
    w.components.assign(components, {Rational(0), Rational(0), Rational(0)});
    w.components[j - 1] = {Rational(0), Rational(1), Rational(1)};
    w.rest.assign(rest_size, Rational(0));
    return w;
}

/// i(mu, c_j) read off the track: the x-weight of component j (1-based).
inline Rational intersection_with_component(const TrackWeights& w, int j) {
    if (j < 1 || j > w.size()) {
        throw std::out_of_range("component index " + std::to_string(j) + " outside 1.." + std::to_string(w.size()));
    }
    return w.components[j - 1].x;
}

}  // namespace lamkit
