#pragma once

// Projective classes, the closed-form multitwist limit and its iterative
// trace, and the map from directions to projective classes of directional
// foliations.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "lamkit/affine.hpp"
#include "lamkit/errors.hpp"
#include "lamkit/flat_surface.hpp"
#include "lamkit/numeric.hpp"
#include "lamkit/traintrack.hpp"

namespace lamkit {

/// A nonzero nonnegative vector up to positive scaling, stored normalized so
/// that its entries sum to 1. Distance is the sup-norm of the difference of
/// the normalized vectors.
template <class Scalar>
class ProjectiveClass {
  public:
    explicit ProjectiveClass(std::vector<Scalar> lift) : coords_(std::move(lift)) {
        Scalar sum(0);
        for (const auto& c : coords_) {
            if (c < 0) {
                throw InvalidParameter("projective class with a negative coordinate");
            }
            sum += c;
        }
        if (!(sum > 0)) {
            throw InvalidParameter("zero vector has no projective class");
        }
        for (auto& c : coords_) {
            c /= sum;
        }
    }

    const std::vector<Scalar>& coordinates() const { return coords_; }
    std::size_t dimension() const { return coords_.size(); }

    Scalar distance(const ProjectiveClass& other) const {
        if (other.dimension() != dimension()) {
            throw InvalidParameter("projective classes of different dimension");
        }
        Scalar best(0);
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            const Scalar d = coords_[i] > other.coords_[i] ? Scalar(coords_[i] - other.coords_[i])
                                                           : Scalar(other.coords_[i] - coords_[i]);
            if (d > best) {
                best = d;
            }
        }
        return best;
    }

    bool approx_equal(const ProjectiveClass& other, const Scalar& tol) const { return !(distance(other) > tol); }

    friend bool operator==(const ProjectiveClass&, const ProjectiveClass&) = default;

  private:
    std::vector<Scalar> coords_;
};

/// Coefficients of the limit multicurve sum_j x_j c_j of T_C^k(mu)/k.
inline std::vector<Rational> limit_multicurve_coefficients(const TrackWeights& w) {
    std::vector<Rational> x;
    for (const auto& c : w.components) {
        x.push_back(c.x);
    }
    return x;
}

namespace detail {

/// Projectivized limit of T_C^k(w): [sum x_j c_j] when some x_j > 0, and the
/// (fixed) class of w itself when every x_j = 0.
inline ProjectiveClass<Rational> limit_class(const TrackWeights& w) {
    bool moving = false;
    for (const auto& c : w.components) {
        moving = moving || c.x > 0;
    }
    if (!moving) {
        return ProjectiveClass<Rational>(w.flatten());
    }
    TrackWeights limit;
    for (const auto& c : w.components) {
        limit.components.push_back({Rational(0), c.x, c.x});
    }
    limit.rest.assign(w.rest.size(), Rational(0));
    return ProjectiveClass<Rational>(limit.flatten());
}

}  // namespace detail

/// lim_k T_C^k([mu]) = [i(mu,c_1) c_1 + ... + i(mu,c_n) c_n] in closed form.
/// Requires i(mu, c_j) = x_j != 0 for every component.
inline ProjectiveClass<Rational> twist_limit(const TrackWeights& w) {
    validate(w);
    for (std::size_t j = 0; j < w.components.size(); ++j) {
        if (w.components[j].x == 0) {
            throw HypothesisViolation("i(mu, c_" + std::to_string(j + 1) +
                                      ") = 0; the limit formula needs every x_j nonzero");
        }
    }
    return detail::limit_class(w);
}

struct TraceSample {
    long k = 0;
    ProjectiveClass<Rational> projective;
    /// sup-norm distance to the limit class
    double error = 0.0;
};

/// Which iterates iterate_trace records.
struct TraceSchedule {
    enum class Kind { every_step, log_spaced } kind = Kind::every_step;
    int points_per_decade = 10;

    static TraceSchedule every_step() { return {}; }
    static TraceSchedule log_spaced(int points_per_decade = 10) { return {Kind::log_spaced, points_per_decade}; }

    std::vector<long> steps(long k_max) const {
        std::vector<long> out;
        if (kind == Kind::every_step) {
            for (long k = 1; k <= k_max; ++k) {
                out.push_back(k);
            }
            return out;
        }
        const double decades = std::log10(static_cast<double>(k_max));
        const int total = static_cast<int>(std::ceil(decades * points_per_decade));
        for (int i = 0; i <= total; ++i) {
            const long k = std::lround(std::pow(10.0, i / static_cast<double>(points_per_decade)));
            if (k <= k_max && (out.empty() || k > out.back())) {
                out.push_back(k);
            }
        }
        if (out.empty() || out.back() != k_max) {
            out.push_back(k_max);
        }
        return out;
    }
};

/// Applies T_C step by step in exact arithmetic, recording the projective
/// class of selected iterates and their distance to the limit class.
inline std::vector<TraceSample> iterate_trace(const TrackWeights& w, long k_max,
                                              const TraceSchedule& schedule = TraceSchedule::every_step()) {
    if (k_max <= 0) {
        throw InvalidParameter("k_max must be positive");
    }
    validate(w);
    const ProjectiveClass<Rational> limit = detail::limit_class(w);
    const std::vector<long> record = schedule.steps(k_max);
    std::vector<TraceSample> trace;
    trace.reserve(record.size());
    TrackWeights current = w;
    std::size_t next = 0;
    for (long k = 1; k <= k_max && next < record.size(); ++k) {
        detail::multitwist_in_place(current);
        if (k == record[next]) {
            ProjectiveClass<Rational> cls(current.flatten());
            const double err = to_double(cls.distance(limit));
            trace.push_back({k, std::move(cls), err});
            ++next;
        }
    }
    return trace;
}

/// error(k) ~ constant * k^slope, fitted by least squares in log-log space.
struct DecayFit {
    double slope = 0.0;
    double constant = 0.0;
    std::size_t points = 0;
};

inline DecayFit fit_error_decay(const std::vector<TraceSample>& trace, long k_min = 1) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (const auto& s : trace) {
        if (s.k < k_min || !(s.error > 0)) {
            continue;
        }
        const double lx = std::log(static_cast<double>(s.k));
        const double ly = std::log(s.error);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) {
        throw InvalidParameter("need at least two positive-error samples to fit a decay rate");
    }
    const double dn = static_cast<double>(n);
    const double slope = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / dn;
    return {slope, std::exp(intercept), n};
}

// ---------------------------------------------------------------------------
// Directional foliations

/// Closed geodesics whose transverse measures coordinatize the circle of
/// directional foliations: the chain cores a_i and b_j, followed by the
/// twisted cores T_A(b_j). The chain cores alone are horizontal or vertical,
/// so they cannot tell the direction theta from pi - theta apart.
struct CircleMarking {
    std::vector<std::string> labels;
    std::vector<Point> holonomies;

    std::size_t size() const { return labels.size(); }
    /// Number of leading entries that belong to the chain curves (2g).
    std::size_t chain_size = 0;
};

inline CircleMarking circle_marking(const TranslationSurface& s) {
    const auto horizontal = cylinder_decomposition(s, Direction::horizontal);
    const auto vertical = cylinder_decomposition(s, Direction::vertical);
    const Mat2 ta = twist_derivative(horizontal);
    CircleMarking m;
    for (const auto& c : horizontal) {
        m.labels.push_back(c.label);
        m.holonomies.push_back({c.circumference, Real(0)});
    }
    for (const auto& c : vertical) {
        m.labels.push_back(c.label);
        m.holonomies.push_back({Real(0), c.circumference});
    }
    m.chain_size = m.labels.size();
    for (const auto& c : vertical) {
        m.labels.push_back("TA(" + c.label + ")");
        m.holonomies.push_back(ta.apply({Real(0), c.circumference}));
    }
    return m;
}

/// Unnormalized transverse measures |v_gamma x u| of the foliation by
/// straight lines parallel to the unit vector u.
inline std::vector<Real> transverse_measures(const CircleMarking& m, const Point& u) {
    std::vector<Real> out;
    out.reserve(m.size());
    for (const auto& v : m.holonomies) {
        out.push_back(mp::abs(cross(v, u)));
    }
    return out;
}

/// The same for the direction at angle theta; the distinguished directions
/// 0 and pi/2 use exact unit vectors.
inline std::vector<Real> transverse_measures(const CircleMarking& m, const Real& theta) {
    if (theta == 0) {
        return transverse_measures(m, Point{Real(1), Real(0)});
    }
    if (theta == pi() / 2) {
        return transverse_measures(m, Point{Real(0), Real(1)});
    }
    return transverse_measures(m, Point{mp::cos(theta), mp::sin(theta)});
}

inline ProjectiveClass<Real> direction_foliation(const CircleMarking& m, const Real& theta) {
    if (theta < 0 || theta >= pi()) {
        throw InvalidParameter("direction angle must lie in [0, pi)");
    }
    return ProjectiveClass<Real>(transverse_measures(m, theta));
}

inline ProjectiveClass<Real> direction_foliation(const TranslationSurface& s, const Real& theta) {
    return direction_foliation(circle_marking(s), theta);
}

/// Directions in [0, pi) parallel to some marking curve; the circle map is
/// projective on each arc between consecutive ones.
inline std::vector<Real> kink_directions(const CircleMarking& m, double tol = kGeometryTolerance) {
    std::vector<Real> out;
    for (const auto& v : m.holonomies) {
        Real angle = mp::atan2(v.y, v.x);
        if (angle < 0) {
            angle += pi();
        }
        if (angle >= pi()) {
            angle -= pi();
        }
        const bool known = std::any_of(out.begin(), out.end(), [&](const Real& a) { return mp::abs(a - angle) <= tol; });
        if (!known) {
            out.push_back(angle);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Singular values (descending) of the matrix whose rows are the given lifts.
inline std::vector<double> singular_values(const std::vector<std::vector<Real>>& rows) {
    if (rows.empty()) {
        return {};
    }
    Eigen::MatrixXd mat(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_double(rows[i][j]);
        }
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(mat);
    const auto& sv = svd.singularValues();
    return {sv.data(), sv.data() + sv.size()};
}

/// Numerical rank of the lifts: singular values above rel_tol * largest.
inline int numerical_rank(const std::vector<std::vector<Real>>& rows, double rel_tol = 1e-9) {
    const auto sv = singular_values(rows);
    if (sv.empty() || sv.front() == 0.0) {
        return 0;
    }
    return static_cast<int>(std::count_if(sv.begin(), sv.end(), [&](double s) { return s > rel_tol * sv.front(); }));
}

}  // namespace lamkit
