#pragma once

// The chain multicurve system A = a_1..a_g, B = b_1..b_g, its intersection
// form, and weighted multicurves supported on one side.

#include <string>
#include <vector>

#include "lamkit/errors.hpp"
#include "lamkit/flat_surface.hpp"
#include "lamkit/numeric.hpp"

namespace lamkit {

enum class Side { A, B };

inline std::string to_string(Side s) { return s == Side::A ? "A" : "B"; }

/// Node indexing: a_i -> i-1, b_j -> g+j-1.
struct ChainSystem {
    int genus = 0;
    std::vector<std::string> labels;
    /// node indices in the order a_1, b_g, a_2, b_{g-1}, ..., a_g, b_1
    std::vector<int> chain_order;
    std::vector<std::vector<int>> matrix;

    int a_node(int i) const { return i - 1; }
    int b_node(int j) const { return genus + j - 1; }
    int size() const { return 2 * genus; }

    /// A x B block: entry (i-1, j-1) is i(a_i, b_j).
    std::vector<std::vector<int>> ab_block() const {
        std::vector<std::vector<int>> block(genus, std::vector<int>(genus, 0));
        for (int i = 1; i <= genus; ++i) {
            for (int j = 1; j <= genus; ++j) {
                block[i - 1][j - 1] = matrix[a_node(i)][b_node(j)];
            }
        }
        return block;
    }
};

inline ChainSystem chain_intersection_matrix(int genus) {
    if (genus < 2) {
        throw InvalidParameter("genus must be at least 2, got " + std::to_string(genus));
    }
    ChainSystem cs;
    cs.genus = genus;
    for (int i = 1; i <= genus; ++i) {
        cs.labels.push_back("a" + std::to_string(i));
    }
    for (int j = 1; j <= genus; ++j) {
        cs.labels.push_back("b" + std::to_string(j));
    }
    for (int k = 1; k <= genus; ++k) {
        cs.chain_order.push_back(cs.a_node(k));
        cs.chain_order.push_back(cs.b_node(genus + 1 - k));
    }
    cs.matrix.assign(2 * genus, std::vector<int>(2 * genus, 0));
    for (std::size_t t = 0; t + 1 < cs.chain_order.size(); ++t) {
        const int u = cs.chain_order[t];
        const int v = cs.chain_order[t + 1];
        cs.matrix[u][v] = 1;
        cs.matrix[v][u] = 1;
    }
    return cs;
}

namespace detail {

struct LeafSegment {
    int polygon;
    Point from;
    Point to;
};

/// One closed leaf of the cylinder at relative height `fraction`, as a list
/// of chords in original coordinates.
inline std::vector<LeafSegment> leaf_segments(const TranslationSurface& s, const Cylinder& cyl, const Real& fraction) {
    const FramePolygons fp = frame_polygons(s, cyl.direction);
    std::vector<LeafSegment> out;
    for (const auto& band : cyl.bands) {
        const Real y = band.bottom + fraction * (band.top - band.bottom);
        const auto [left, right] = chord(fp.polygons[band.polygon], y, s.tolerance());
        out.push_back({band.polygon, from_direction_frame({left, y}, cyl.direction),
                       from_direction_frame({right, y}, cyl.direction)});
    }
    return out;
}

}  // namespace detail

/// Transverse crossings between horizontal and vertical core geodesics,
/// counted on the flat surface. Entry (i-1, j-1) counts a_i against b_j in
/// label order. Closed leaves at generic relative heights stand in for the
/// cores; a crossing landing on a chord end throws DecompositionError.
inline std::vector<std::vector<int>> derive_intersection_matrix(const TranslationSurface& s) {
    const auto horizontal = cylinder_decomposition(s, Direction::horizontal);
    const auto vertical = cylinder_decomposition(s, Direction::vertical);
    const Real tol = s.tolerance();
    const Real fraction_a("0.3719");
    const Real fraction_b("0.6127");
    std::vector<std::vector<int>> counts(horizontal.size(), std::vector<int>(vertical.size(), 0));
    for (std::size_t i = 0; i < horizontal.size(); ++i) {
        const auto leaf_a = detail::leaf_segments(s, horizontal[i], fraction_a);
        for (std::size_t j = 0; j < vertical.size(); ++j) {
            const auto leaf_b = detail::leaf_segments(s, vertical[j], fraction_b);
            for (const auto& h : leaf_a) {
                for (const auto& v : leaf_b) {
                    if (h.polygon != v.polygon) {
                        continue;
                    }
                    // h is horizontal (constant y), v is vertical (constant x)
                    const Real& y = h.from.y;
                    const Real& x = v.from.x;
                    const Real xl = std::min(h.from.x, h.to.x), xr = std::max(h.from.x, h.to.x);
                    const Real yl = std::min(v.from.y, v.to.y), yr = std::max(v.from.y, v.to.y);
                    const bool near_end = mp::abs(x - xl) <= tol || mp::abs(x - xr) <= tol ||
                                          mp::abs(y - yl) <= tol || mp::abs(y - yr) <= tol;
                    const bool inside = xl < x && x < xr && yl < y && y < yr;
                    if (inside && near_end) {
                        throw DecompositionError("degenerate crossing on a polygon edge");
                    }
                    if (inside) {
                        ++counts[i][j];
                    }
                }
            }
        }
    }
    return counts;
}

/// A multicurve Σ c_k x_k supported on the A- or B-side of the chain.
template <class Scalar>
struct WeightedMulticurve {
    Side side = Side::A;
    std::vector<Scalar> coefficients;
};

/// Bilinear intersection pairing Σ u_i v_j I(a_i, b_j) of an A-side and a
/// B-side multicurve (either argument order). Pairing two multicurves on the
/// same side is an error unless `allow_same_side`, in which case it is 0
/// (the components are disjoint).
template <class Scalar>
Scalar pair(const WeightedMulticurve<Scalar>& u, const WeightedMulticurve<Scalar>& v, const ChainSystem& cs,
            bool allow_same_side = false) {
    for (const auto* m : {&u, &v}) {
        if (static_cast<int>(m->coefficients.size()) != cs.genus) {
            throw InvalidParameter("multicurve needs one coefficient per component");
        }
        bool positive = false;
        for (const auto& c : m->coefficients) {
            if (c < 0) {
                throw InvalidParameter("multicurve coefficients must be nonnegative");
            }
            positive = positive || c > 0;
        }
        if (!positive) {
            throw InvalidParameter("multicurve with all coefficients zero is not projectivizable");
        }
    }
    if (u.side == v.side) {
        if (allow_same_side) {
            return Scalar(0);
        }
        throw InvalidParameter("pairing of two multicurves on side " + to_string(u.side));
    }
    const auto& a = u.side == Side::A ? u : v;
    const auto& b = u.side == Side::A ? v : u;
    Scalar total(0);
    for (int i = 1; i <= cs.genus; ++i) {
        for (int j = 1; j <= cs.genus; ++j) {
            const int m = cs.matrix[cs.a_node(i)][cs.b_node(j)];
            if (m != 0) {
                total += a.coefficients[i - 1] * b.coefficients[j - 1] * m;
            }
        }
    }
    return total;
}

}  // namespace lamkit
