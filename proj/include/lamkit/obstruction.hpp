#pragma once

// Vertical cylinder heights w, the set Y of classes whose b-intersection
// ratios match w, and the separation witness behind the non-existence of a
// Cannon-Thurston map.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lamkit/dynamics.hpp"
#include "lamkit/errors.hpp"
#include "lamkit/flat_surface.hpp"
#include "lamkit/numeric.hpp"
#include "lamkit/traintrack.hpp"

namespace lamkit {

inline constexpr double kObstructionTolerance = 1e-10;

/// Heights w_1..w_g of the vertical cylinders, in b-label order.
struct HeightVector {
    std::vector<Real> values;
    std::size_t size() const { return values.size(); }
};

inline HeightVector heights(const TranslationSurface& s) {
    HeightVector w;
    for (const auto& cyl : cylinder_decomposition(s, Direction::vertical)) {
        w.values.push_back(cyl.height);
    }
    return w;
}

namespace detail {

template <class Scalar>
void require_positive(const std::vector<Scalar>& v, std::size_t expected) {
    if (v.size() != expected) {
        throw InvalidParameter("b-vector has " + std::to_string(v.size()) + " entries, expected " +
                               std::to_string(expected));
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (!(v[j] > 0)) {
            throw HypothesisViolation("i(mu, b_" + std::to_string(j + 1) + ") must be positive");
        }
    }
}

}  // namespace detail

/// [mu] in Y iff v_i w_j = v_j w_i for all i, j, tested as
/// |v_i w_j - v_j w_i| <= tol * max(|v_i w_j|, |v_j w_i|).
inline bool in_Y(const std::vector<Real>& v, const HeightVector& w, double tol = kObstructionTolerance) {
    detail::require_positive(v, w.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            const Real lhs = v[i] * w.values[j];
            const Real rhs = v[j] * w.values[i];
            if (mp::abs(lhs - rhs) > tol * std::max(mp::abs(lhs), mp::abs(rhs))) {
                return false;
            }
        }
    }
    return true;
}

/// Exact proportionality test on rationals.
inline bool in_Y_exact(const std::vector<Rational>& v, const std::vector<Rational>& w) {
    detail::require_positive(v, w.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] * w[j] != v[j] * w[i]) {
                return false;
            }
        }
    }
    return true;
}

struct Witness {
    bool in_y = false;
    /// projective distance between the twist limit [sum v_j b_j] and [nu_B]
    Real separation;
    ProjectiveClass<Real> limit_class;
    ProjectiveClass<Real> nu_b_class;
};

/// Iterating T_B on a class with b-intersection vector v converges to
/// [sum v_j b_j]; the conclusion [nu_B] = [sum w_j b_j] demanded by a
/// Cannon-Thurston map fails exactly when this limit is a different point.
inline Witness contradiction_witness(const std::vector<Real>& v, const HeightVector& w,
                                     double tol = kObstructionTolerance) {
    detail::require_positive(v, w.size());
    ProjectiveClass<Real> limit(v);
    ProjectiveClass<Real> nu_b(w.values);
    const Real separation = limit.distance(nu_b);
    return {in_Y(v, w, tol), separation, std::move(limit), std::move(nu_b)};
}

/// Runs the multitwist on actual track weights with x_j = v_j and returns
/// the distance between the projectivized multicurve part of the k-th
/// iterate (the y-weights, which carry the c_j) and [sum v_j b_j].
inline double iterate_consistency_gap(const std::vector<Rational>& v, long k, const std::vector<Rational>& y_start) {
    detail::require_positive(v, v.size());
    std::vector<std::pair<Rational, Rational>> xy;
    for (std::size_t j = 0; j < v.size(); ++j) {
        xy.emplace_back(v[j], j < y_start.size() ? y_start[j] : Rational(0));
    }
    const auto trace = iterate_trace(make_weights(xy), k, TraceSchedule::log_spaced(1));
    std::vector<Rational> carried;
    for (std::size_t j = 0; j < v.size(); ++j) {
        carried.push_back(trace.back().projective.coordinates()[3 * j + 1]);
    }
    return to_double(ProjectiveClass<Rational>(carried).distance(ProjectiveClass<Rational>(v)));
}

struct GenericityResult {
    std::size_t samples = 0;
    std::size_t hits = 0;
    double fraction_in_Y = 0.0;
};

/// Draws positive rational b-vectors and counts exact members of Y against
/// the heights rationalized at denominator 10^12. `planted_index`, when
/// set, replaces that sample by the rationalized heights themselves.
inline GenericityResult genericity_sample(int genus, std::size_t n_samples, std::uint64_t seed,
                                          std::optional<std::size_t> planted_index = std::nullopt) {
    if (n_samples < 1) {
        throw InvalidParameter("n_samples must be at least 1");
    }
    const HeightVector w = heights(build_double_polygon(genus));
    std::vector<Rational> w_exact;
    for (const auto& h : w.values) {
        w_exact.push_back(rationalize(h));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> numerator(1, 1000000);
    std::uniform_int_distribution<long> denominator(1, 1000);
    GenericityResult result;
    result.samples = n_samples;
    for (std::size_t s = 0; s < n_samples; ++s) {
        std::vector<Rational> v;
        for (int j = 0; j < genus; ++j) {
            v.emplace_back(numerator(rng), denominator(rng));
        }
        if (planted_index && *planted_index == s) {
            v = w_exact;
        }
        if (in_Y_exact(v, w_exact)) {
            ++result.hits;
        }
    }
    result.fraction_in_Y = static_cast<double>(result.hits) / static_cast<double>(n_samples);
    return result;
}

}  // namespace lamkit
