#pragma once

// The acceptance suite: eight end-to-end checks with pinned tolerances and
// runtime budgets, shared by the `report` subcommand and the acceptance test.

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lamkit/affine.hpp"
#include "lamkit/amalgam.hpp"
#include "lamkit/curves.hpp"
#include "lamkit/dynamics.hpp"
#include "lamkit/flat_surface.hpp"
#include "lamkit/numeric.hpp"
#include "lamkit/obstruction.hpp"
#include "lamkit/rewriting.hpp"
#include "lamkit/traintrack.hpp"

namespace lamkit {

struct AcceptanceConfig {
    std::uint64_t seed = 7;
    unsigned precision_bits = kDefaultPrecisionBits;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

/// Random valid track weights with 1 <= x_j <= 5, 0 <= y_j <= 5 and up to
/// two rest weights in [0, 5], all with denominators below 10. Keeping the
/// total weight within a fixed multiple of sum x_j bounds the k-th error by
/// a fixed multiple of 1/k.
inline TrackWeights random_track_weights(std::mt19937_64& rng, int components) {
    std::uniform_int_distribution<int> den(1, 9);
    auto draw = [&](int lo, int hi) {
        const int d = den(rng);
        std::uniform_int_distribution<int> num(lo * d, hi * d);
        return Rational(num(rng), d);
    };
    std::vector<std::pair<Rational, Rational>> xy;
    for (int j = 0; j < components; ++j) {
        const Rational x = draw(1, 5);
        xy.emplace_back(x, draw(0, 5));
    }
    std::vector<Rational> rest;
    const int rest_size = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int r = 0; r < rest_size; ++r) {
        rest.push_back(draw(0, 5));
    }
    return make_weights(xy, rest);
}

/// Positive rational b-vector with numerators up to 10^6 and denominators up to 1000.
inline std::vector<Rational> random_bvector(std::mt19937_64& rng, int genus) {
    std::uniform_int_distribution<long> numerator(1, 1000000);
    std::uniform_int_distribution<long> denominator(1, 1000);
    std::vector<Rational> v;
    for (int j = 0; j < genus; ++j) {
        const long p = numerator(rng);
        v.emplace_back(p, denominator(rng));
    }
    return v;
}

namespace acceptance {

inline std::string fmt(double x) {
    std::ostringstream out;
    out.precision(3);
    out << x;
    return out.str();
}

inline double relative_error(const Real& a, const Real& b) { return to_double(mp::abs(a - b) / mp::abs(b)); }

inline CriterionResult cylinder_structure(const AcceptanceConfig&) {
    CriterionResult r;
    r.passed = true;
    double worst_area = 0, worst_modulus = 0;
    for (int g = 2; g <= 6; ++g) {
        const auto s = build_double_polygon(g);
        const Real total = area(s);
        for (Direction dir : {Direction::horizontal, Direction::vertical}) {
            const auto cyls = cylinder_decomposition(s, dir);
            if (static_cast<int>(cyls.size()) != g) {
                r.passed = false;
                r.detail += "g=" + std::to_string(g) + " " + to_string(dir) + ": " + std::to_string(cyls.size()) +
                            " cylinders; ";
                continue;
            }
            Real tiled = 0;
            for (const auto& c : cyls) {
                tiled += c.circumference * c.height;
                worst_modulus = std::max(worst_modulus, relative_error(c.modulus(), cyls.front().modulus()));
            }
            worst_area = std::max(worst_area, relative_error(tiled, total));
        }
    }
    r.passed = r.passed && worst_area <= 1e-12 && worst_modulus <= 1e-12;
    r.detail += "g=2..6, max rel |sum c*h - area| = " + fmt(worst_area) + ", max rel modulus spread = " + fmt(worst_modulus);
    return r;
}

inline CriterionResult parabolic_traces(const AcceptanceConfig&) {
    CriterionResult r;
    r.passed = true;
    double worst_twist = 0, worst_g0 = 0, worst_square = 0;
    for (int g = 2; g <= 6; ++g) {
        const AffineModel model(build_double_polygon(g));
        worst_twist = std::max({worst_twist, to_double(mp::abs(model.ta().trace() - 2)),
                                to_double(mp::abs(model.tb().trace() - 2))});
        const auto g0 = model.g0_generator();
        worst_g0 = std::max(worst_g0, to_double(mp::abs(g0.derivative.trace() + 2)));
        worst_square = std::max(worst_square, to_double(mp::abs((g0.derivative * g0.derivative).trace() - 2)));
        r.passed = r.passed && classify(model.ta()) == MatrixClass::parabolic &&
                   classify(model.tb()) == MatrixClass::parabolic;
    }
    // D(T_A^{2(2g+1)} sigma) = -[[1, *], [0, 1]] has trace -2 with no rounding at all
    r.passed = r.passed && worst_twist <= 1e-9 && worst_g0 == 0.0 && worst_square == 0.0;
    r.detail = "g=2..6, max |tr D(T) - 2| = " + fmt(worst_twist) + ", max |tr G0 + 2| = " + fmt(worst_g0) +
               ", max |tr G0^2 - 2| = " + fmt(worst_square);
    return r;
}

inline CriterionResult twist_limit_oracle(const AcceptanceConfig& cfg) {
    CriterionResult r;
    r.passed = true;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> size(1, 5);
    double worst_gap = 0, min_slope = 0, max_slope = -2;
    constexpr long k = 10000;
    for (int sample = 0; sample < 200; ++sample) {
        const TrackWeights w = random_track_weights(rng, size(rng));
        const auto trace = iterate_trace(w, k, TraceSchedule::log_spaced(10));
        const double gap = to_double(trace.back().projective.distance(twist_limit(w)));
        const DecayFit fit = fit_error_decay(trace, 1000);
        worst_gap = std::max(worst_gap, gap);
        min_slope = std::min(min_slope, fit.slope);
        max_slope = std::max(max_slope, fit.slope);
    }
    r.passed = worst_gap <= 1e-3 && min_slope >= -1.1 && max_slope <= -0.9;
    r.detail = "200 samples, max gap at k=10^4 = " + fmt(worst_gap) + ", slopes in [" + fmt(min_slope) + ", " +
               fmt(max_slope) + "]";
    return r;
}

inline CriterionResult area_identity(const AcceptanceConfig&) {
    CriterionResult r;
    r.passed = true;
    double worst = 0;
    for (int g = 2; g <= 6; ++g) {
        const auto s = build_double_polygon(g);
        const ChainSystem cs = chain_intersection_matrix(g);
        r.passed = r.passed && derive_intersection_matrix(s) == cs.ab_block();
        WeightedMulticurve<Real> nu_a{Side::A, {}};
        WeightedMulticurve<Real> nu_b{Side::B, {}};
        for (const auto& c : cylinder_decomposition(s, Direction::horizontal)) {
            nu_a.coefficients.push_back(c.height);
        }
        for (const auto& c : cylinder_decomposition(s, Direction::vertical)) {
            nu_b.coefficients.push_back(c.height);
        }
        worst = std::max(worst, relative_error(pair(nu_a, nu_b, cs), area(s)));
    }
    r.passed = r.passed && worst <= 1e-10;
    r.detail = "g=2..6, flat crossings match the chain, max rel |i(nu_A, nu_B) - area| = " + fmt(worst);
    return r;
}

inline CriterionResult genericity(const AcceptanceConfig& cfg) {
    CriterionResult r;
    r.passed = true;
    std::size_t hits = 0, planted = 0;
    for (int g = 2; g <= 5; ++g) {
        hits += genericity_sample(g, 1000, cfg.seed + static_cast<std::uint64_t>(g)).hits;
        planted += genericity_sample(g, 1000, cfg.seed + static_cast<std::uint64_t>(g), 0).hits;
        const HeightVector w = heights(build_double_polygon(g));
        r.passed = r.passed && in_Y(w.values, w);
    }
    r.passed = r.passed && hits == 0 && planted == 4;
    r.detail = "g=2..5, 1000 samples each: " + std::to_string(hits) + " random hits, " + std::to_string(planted) +
               "/4 planted hits";
    return r;
}

inline CriterionResult obstruction_witness(const AcceptanceConfig& cfg) {
    CriterionResult r;
    r.passed = true;
    std::mt19937_64 rng(cfg.seed);
    std::size_t mismatches = 0, negatives = 0;
    double min_separation = 1, worst_positive = 0, worst_iterate = 0;
    for (int g = 2; g <= 5; ++g) {
        const HeightVector w = heights(build_double_polygon(g));
        for (const char* scale : {"1", "2.5", "1e-3", "7e4"}) {
            std::vector<Real> v;
            for (const auto& h : w.values) {
                v.push_back(Real(scale) * h);
            }
            const Witness wit = contradiction_witness(v, w);
            worst_positive = std::max(worst_positive, to_double(wit.separation));
            mismatches += wit.in_y && wit.separation <= kObstructionTolerance ? 0 : 1;
        }
        for (int sample = 0; sample < 500; ++sample) {
            const auto v_exact = random_bvector(rng, g);
            std::vector<Real> v;
            for (const auto& q : v_exact) {
                v.push_back(to_real(q));
            }
            const Witness wit = contradiction_witness(v, w);
            ++negatives;
            mismatches += (wit.separation <= kObstructionTolerance) == wit.in_y ? 0 : 1;
            mismatches += wit.in_y ? 1 : 0;
            min_separation = std::min(min_separation, to_double(wit.separation));
            if (sample < 5) {
                std::vector<Rational> y_start;
                for (int j = 0; j < g; ++j) {
                    y_start.emplace_back(std::uniform_int_distribution<int>(0, 1000)(rng));
                }
                worst_iterate = std::max(worst_iterate, iterate_consistency_gap(v_exact, 10000, y_start));
            }
        }
    }
    r.passed = mismatches == 0 && min_separation > 1e-6 && worst_positive <= kObstructionTolerance && worst_iterate <= 1e-3;
    r.detail = "g=2..5: " + std::to_string(negatives) + " negatives, " + std::to_string(mismatches) +
               " mismatches, min separation = " + fmt(min_separation) + ", max planted separation = " +
               fmt(worst_positive) + ", max iterate gap = " + fmt(worst_iterate);
    return r;
}

inline CriterionResult circle_map(const AcceptanceConfig&) {
    CriterionResult r;
    r.passed = true;
    constexpr int samples = 720;
    const Real step = pi() / samples;
    double min_distance = 1;
    std::size_t tuples = 0, rank_failures = 0, pattern_failures = 0;
    for (int g = 2; g <= 4; ++g) {
        const auto s = build_double_polygon(g);
        const CircleMarking m = circle_marking(s);
        const auto kinks = kink_directions(m);
        std::vector<std::vector<double>> points;
        for (int k = 0; k < samples; ++k) {
            const auto cls = direction_foliation(m, step * k);
            std::vector<double> p;
            for (const auto& c : cls.coordinates()) {
                p.push_back(to_double(c));
            }
            points.push_back(std::move(p));
        }
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                double d = 0;
                for (std::size_t c = 0; c < points[i].size(); ++c) {
                    d = std::max(d, std::abs(points[i][c] - points[j][c]));
                }
                min_distance = std::min(min_distance, d);
            }
        }
        // 4-tuples spaced step/4 apart, kept when no kink comes within 1e-9
        const Real delta = step / 4;
        for (int k = 0; k < samples; ++k) {
            const Real lo = step * k;
            const Real hi = lo + 3 * delta;
            if (hi >= pi()) {
                continue;
            }
            const bool crosses = std::any_of(kinks.begin(), kinks.end(),
                                             [&](const Real& a) { return a > lo - 1e-9 && a < hi + 1e-9; });
            if (crosses) {
                continue;
            }
            std::vector<std::vector<Real>> lifts;
            for (int t = 0; t < 4; ++t) {
                lifts.push_back(transverse_measures(m, lo + t * delta));
            }
            const auto sv = singular_values(lifts);
            ++tuples;
            rank_failures += sv.size() >= 3 && sv[2] < 1e-9 * sv[0] && sv[1] >= 1e-9 * sv[0] ? 0 : 1;
        }
        // horizontal and vertical directions
        const std::size_t n = static_cast<std::size_t>(g);
        const auto horizontal = transverse_measures(m, Real(0));
        const auto vertical = transverse_measures(m, pi() / 2);
        const auto a_cyl = cylinder_decomposition(s, Direction::horizontal);
        const auto b_cyl = cylinder_decomposition(s, Direction::vertical);
        const ChainSystem cs = chain_intersection_matrix(g);
        for (std::size_t i = 0; i < n; ++i) {
            // i(a_i, nu_B) = sum_j w_j I(a_i, b_j) and i(b_j, nu_A) = sum_i h_i I(a_i, b_j)
            Real a_pair = 0, b_pair = 0;
            for (std::size_t j = 0; j < n; ++j) {
                a_pair += b_cyl[j].height * cs.ab_block()[i][j];
                b_pair += a_cyl[j].height * cs.ab_block()[j][i];
            }
            const bool ok = horizontal[i] == 0 && vertical[n + i] == 0 && horizontal[n + i] > 0 && vertical[i] > 0 &&
                            relative_error(vertical[i], a_pair) <= 1e-10 &&
                            relative_error(horizontal[n + i], b_pair) <= 1e-10;
            pattern_failures += ok ? 0 : 1;
        }
    }
    r.passed = min_distance > 1e-10 && rank_failures == 0 && pattern_failures == 0 && tuples > 0;
    r.detail = "g=2..4, 720 samples: min pairwise distance = " + fmt(min_distance) + ", rank-2 on " +
               std::to_string(tuples - rank_failures) + "/" + std::to_string(tuples) + " tuples, " +
               std::to_string(pattern_failures) + " support-pattern failures";
    return r;
}

inline CriterionResult amalgam_normal_form(const AcceptanceConfig& cfg) {
    CriterionResult r;
    r.passed = true;
    const EdgeGroup edge;
    const auto words = rewriting::enumerate_alternating_words(2, 3, 2);
    std::size_t length_mismatch = 0, class_mismatch = 0, marked = 0;
    for (const auto& w : words) {
        length_mismatch += britton_reduce(w, edge).syllable_length() == rewriting::minimal_syllable_length(w, edge) ? 0 : 1;
        const ElementClass c = classify_element(w, edge);
        marked += c == ElementClass::conjugate_into_G0 ? 1 : 0;
        class_mismatch += c == rewriting::classify_by_search(w, edge) ? 0 : 1;
    }
    // explicit conjugates u z^k u^-1 must all be marked
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::uniform_int_distribution<int> power(1, 4);
    std::size_t conjugate_misses = 0;
    for (int t = 0; t < 500; ++t) {
        const auto& u = words[pick(rng)];
        const long k = power(rng) * (t % 2 == 0 ? 1 : -1);
        const Factor f = t % 4 < 2 ? Factor::L : Factor::R;
        const AmalgamWord zk{{{f, edge.z(f).pow(k)}}};
        conjugate_misses += classify_element(u * zk * u.inverse(), edge) == ElementClass::conjugate_into_G0 ? 0 : 1;
    }
    r.passed = length_mismatch == 0 && class_mismatch == 0 && conjugate_misses == 0;
    r.detail = std::to_string(words.size()) + " words: " + std::to_string(length_mismatch) + " length and " +
               std::to_string(class_mismatch) + " class disagreements (" + std::to_string(marked) +
               " marked conjugate into <z>), " + std::to_string(conjugate_misses) + "/500 explicit conjugates missed";
    return r;
}

}  // namespace acceptance

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<CriterionResult(const AcceptanceConfig&)> check;
};

inline std::vector<Criterion> acceptance_criteria() {
    return {
        {1, "cylinder structure", 5.0, acceptance::cylinder_structure},
        {2, "parabolicity and traces", 1.0, acceptance::parabolic_traces},
        {3, "twist limit vs iteration", 30.0, acceptance::twist_limit_oracle},
        {4, "area identity", 5.0, acceptance::area_identity},
        {5, "genericity of Y", 10.0, acceptance::genericity},
        {6, "obstruction witness", 30.0, acceptance::obstruction_witness},
        {7, "circle map", 10.0, acceptance::circle_map},
        {8, "amalgam normal form", 60.0, acceptance::amalgam_normal_form},
    };
}

/// Runs one criterion under the configured precision, timing it; exceeding
/// the runtime budget fails the criterion. Exceptions count as failures.
inline CriterionResult run_criterion(const Criterion& c, const AcceptanceConfig& cfg) {
    const PrecisionGuard guard(cfg.precision_bits);
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = c.check(cfg);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.id = c.id;
    r.name = c.name;
    r.budget_seconds = c.budget_seconds;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > r.budget_seconds) {
        r.passed = false;
        r.detail += " (over the " + acceptance::fmt(r.budget_seconds) + " s budget)";
    }
    return r;
}

inline std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg = {}) {
    std::vector<CriterionResult> out;
    for (const auto& c : acceptance_criteria()) {
        out.push_back(run_criterion(c, cfg));
    }
    return out;
}

inline std::string summary_line(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail << " ("
        << acceptance::fmt(r.seconds) << " s)";
    return out.str();
}

}  // namespace lamkit
