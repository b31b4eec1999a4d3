#pragma once

// Translation surfaces glued from convex polygons, the double (2g+1)-gon
// construction, and cylinder decompositions in the two distinguished
// directions.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamkit/errors.hpp"
#include "lamkit/numeric.hpp"

namespace lamkit {

struct Point {
    Real x;
    Real y;
};

inline Point operator+(const Point& u, const Point& v) { return {u.x + v.x, u.y + v.y}; }
inline Point operator-(const Point& u, const Point& v) { return {u.x - v.x, u.y - v.y}; }
inline Point operator-(const Point& u) { return {-u.x, -u.y}; }
inline Point operator*(const Real& s, const Point& u) { return {s * u.x, s * u.y}; }
inline Real cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Real dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

struct EdgeRef {
    int polygon = 0;
    int edge = 0;
    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

struct Gluing {
    EdgeRef first;
    EdgeRef second;
};

/// Corner k of a polygon is the start point of edge k.
struct Corner {
    int polygon = 0;
    int vertex = 0;
};

struct VertexClass {
    std::vector<Corner> corners;
    Real cone_angle;
};

enum class Direction { horizontal, vertical };

inline std::string to_string(Direction d) { return d == Direction::horizontal ? "horizontal" : "vertical"; }

inline Direction parse_direction(const std::string& text) {
    if (text == "horizontal") {
        return Direction::horizontal;
    }
    if (text == "vertical") {
        return Direction::vertical;
    }
    throw ParseError("direction must be 'horizontal' or 'vertical', got '" + text + "'");
}

/// Coordinates in which `dir` is horizontal: identity for horizontal,
/// rotation by -pi/2 for vertical.
inline Point to_direction_frame(const Point& p, Direction dir) {
    return dir == Direction::horizontal ? p : Point{p.y, -p.x};
}

inline Point from_direction_frame(const Point& p, Direction dir) {
    return dir == Direction::horizontal ? p : Point{-p.y, p.x};
}

/// A finite set of convex polygons whose edges are identified in pairs by
/// translations. Instances are always valid: the constructor checks every
/// structural invariant and throws ValidationError otherwise.
class TranslationSurface {
  public:
    TranslationSurface(int genus, std::vector<std::vector<Point>> polygons, std::vector<Gluing> gluings)
        : genus_(genus), polygons_(std::move(polygons)), gluings_(std::move(gluings)) {
        validate();
    }

    int genus() const { return genus_; }
    const std::vector<std::vector<Point>>& polygons() const { return polygons_; }
    const std::vector<Gluing>& gluings() const { return gluings_; }
    const std::vector<VertexClass>& vertex_classes() const { return vertex_classes_; }

    int edge_count(int polygon) const { return static_cast<int>(polygons_.at(polygon).size()); }

    const Point& vertex(int polygon, int k) const {
        const auto& poly = polygons_.at(polygon);
        const int n = static_cast<int>(poly.size());
        return poly[((k % n) + n) % n];
    }

    Point edge_vector(EdgeRef e) const { return vertex(e.polygon, e.edge + 1) - vertex(e.polygon, e.edge); }

    EdgeRef partner(EdgeRef e) const { return partner_.at(e); }

    /// Translation carrying edge `e` onto its partner: the start of `e` is
    /// identified with the end of the partner edge.
    Point gluing_translation(EdgeRef e) const {
        const EdgeRef f = partner(e);
        return vertex(f.polygon, f.edge + 1) - vertex(e.polygon, e.edge);
    }

    /// Largest absolute coordinate (at least 1); geometric tolerances scale with it.
    const Real& scale() const { return scale_; }

    Real tolerance(double relative = kGeometryTolerance) const { return relative * scale_; }

  private:
    void validate();

    int genus_;
    std::vector<std::vector<Point>> polygons_;
    std::vector<Gluing> gluings_;
    std::map<EdgeRef, EdgeRef> partner_;
    std::vector<VertexClass> vertex_classes_;
    Real scale_;
};

inline Real polygon_area(const std::vector<Point>& poly) {
    Real twice = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        twice += cross(poly[i], poly[(i + 1) % poly.size()]);
    }
    return twice / 2;
}

/// Sum of the (shoelace) areas of the polygons.
inline Real area(const TranslationSurface& s) {
    Real total = 0;
    for (const auto& poly : s.polygons()) {
        total += polygon_area(poly);
    }
    return total;
}

namespace detail {

inline Real interior_angle(const Point& incoming, const Point& outgoing) {
    // turning angle in (-pi, pi); interior angle of a convex ccw polygon is pi - turn
    const Real turn = mp::atan2(cross(incoming, outgoing), dot(incoming, outgoing));
    return pi() - turn;
}

class UnionFind {
  public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t i) {
        while (parent_[i] != i) {
            parent_[i] = parent_[parent_[i]];
            i = parent_[i];
        }
        return i;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  private:
    std::vector<std::size_t> parent_;
};

}  // namespace detail

inline void TranslationSurface::validate() {
    if (genus_ < 1) {
        throw ValidationError("genus must be positive");
    }
    if (polygons_.empty()) {
        throw ValidationError("surface has no polygons");
    }
    scale_ = 1;
    for (const auto& poly : polygons_) {
        if (poly.size() < 3) {
            throw ValidationError("polygon with fewer than three vertices");
        }
        for (const auto& p : poly) {
            scale_ = std::max({scale_, Real(mp::abs(p.x)), Real(mp::abs(p.y))});
        }
    }
    const Real tol = tolerance();

    // strict convexity, counter-clockwise orientation
    for (std::size_t p = 0; p < polygons_.size(); ++p) {
        const auto& poly = polygons_[p];
        const std::size_t n = poly.size();
        for (std::size_t k = 0; k < n; ++k) {
            const Point in = poly[k] - poly[(k + n - 1) % n];
            const Point out = poly[(k + 1) % n] - poly[k];
            if (cross(in, out) <= tol * scale_) {
                throw ValidationError("polygon " + std::to_string(p) + " is not strictly convex and counter-clockwise");
            }
        }
    }

    // every edge in exactly one gluing pair; glued holonomies are negatives
    for (const auto& g : gluings_) {
        for (const EdgeRef& e : {g.first, g.second}) {
            if (e.polygon < 0 || e.polygon >= static_cast<int>(polygons_.size()) || e.edge < 0 ||
                e.edge >= edge_count(e.polygon)) {
                throw ValidationError("gluing refers to a non-existent edge");
            }
        }
        if (g.first == g.second) {
            throw ValidationError("edge glued to itself");
        }
        if (!partner_.emplace(g.first, g.second).second || !partner_.emplace(g.second, g.first).second) {
            throw ValidationError("edge appears in more than one gluing pair");
        }
        const Point sum = edge_vector(g.first) + edge_vector(g.second);
        if (mp::abs(sum.x) > tol || mp::abs(sum.y) > tol) {
            throw ValidationError("glued edges (" + std::to_string(g.first.polygon) + "," +
                                  std::to_string(g.first.edge) + ") and (" + std::to_string(g.second.polygon) + "," +
                                  std::to_string(g.second.edge) + ") are not related by a translation");
        }
    }
    std::size_t total_edges = 0;
    std::vector<std::size_t> offset;
    for (const auto& poly : polygons_) {
        offset.push_back(total_edges);
        total_edges += poly.size();
    }
    if (partner_.size() != total_edges) {
        throw ValidationError("some edge is not glued");
    }

    // vertex classes: start of e ~ end of partner(e)
    detail::UnionFind uf(total_edges);
    for (const auto& [e, f] : partner_) {
        const std::size_t start_e = offset[e.polygon] + e.edge;
        const std::size_t end_f = offset[f.polygon] + (f.edge + 1) % edge_count(f.polygon);
        uf.unite(start_e, end_f);
    }
    std::map<std::size_t, std::size_t> class_of_root;
    vertex_classes_.clear();
    for (std::size_t p = 0; p < polygons_.size(); ++p) {
        const int n = edge_count(static_cast<int>(p));
        for (int k = 0; k < n; ++k) {
            const std::size_t root = uf.find(offset[p] + k);
            auto [it, fresh] = class_of_root.emplace(root, vertex_classes_.size());
            if (fresh) {
                vertex_classes_.push_back({{}, Real(0)});
            }
            auto& vc = vertex_classes_[it->second];
            vc.corners.push_back({static_cast<int>(p), k});
            const Point in = vertex(static_cast<int>(p), k) - vertex(static_cast<int>(p), k - 1);
            const Point out = vertex(static_cast<int>(p), k + 1) - vertex(static_cast<int>(p), k);
            vc.cone_angle += detail::interior_angle(in, out);
        }
    }

    const Real two_pi = 2 * pi();
    Real excess = 0;
    for (const auto& vc : vertex_classes_) {
        const Real multiple = vc.cone_angle / two_pi;
        if (mp::abs(multiple - mp::round(multiple)) > 1e-9 || mp::round(multiple) < 1) {
            throw ValidationError("cone angle is not a positive multiple of 2*pi");
        }
        excess += vc.cone_angle - two_pi;
    }
    if (mp::abs(excess - two_pi * (2 * genus_ - 2)) > 1e-9 * two_pi * (2 * genus_)) {
        throw ValidationError("Gauss-Bonnet: cone-angle excess does not match genus " + std::to_string(genus_));
    }
    if (area(*this) <= tol) {
        throw ValidationError("surface area is not positive");
    }
}

/// Two regular unit-side (2g+1)-gons, each the point reflection of the other
/// through the origin, with edge k of one glued to the parallel edge k of the
/// other. Polygon 1 has a horizontal bottom edge starting at the origin;
/// polygon 0 is its reflection, with a horizontal top edge ending there.
inline TranslationSurface build_regular_double_polygon(int genus) {
    if (genus < 2) {
        throw InvalidParameter("genus must be at least 2, got " + std::to_string(genus));
    }
    const int n = 2 * genus + 1;
    std::vector<Point> upper{{Real(0), Real(0)}};
    for (int k = 0; k + 1 < n; ++k) {
        const Real angle = 2 * pi() * k / n;
        upper.push_back(upper.back() + Point{mp::cos(angle), mp::sin(angle)});
    }
    std::vector<Point> lower;
    for (const auto& p : upper) {
        lower.push_back(-p);
    }
    std::vector<Gluing> gluings;
    for (int k = 0; k < n; ++k) {
        gluings.push_back({{0, k}, {1, k}});
    }
    return TranslationSurface(genus, {std::move(lower), std::move(upper)}, std::move(gluings));
}

/// The double (2g+1)-gon in the normalization used throughout the library:
/// the regular pair followed by the horizontal shear x -> x - cot(pi/(2g+1)) y.
/// The shear fixes the horizontal direction and area, and moves the
/// cylinder direction pi/(2g+1) (whose cores form the chain with the
/// horizontal cores) to the vertical.
inline TranslationSurface build_double_polygon(int genus) {
    const TranslationSurface regular = build_regular_double_polygon(genus);
    const int n = 2 * genus + 1;
    const Real cot = 1 / mp::tan(pi() / n);
    std::vector<std::vector<Point>> sheared;
    for (const auto& poly : regular.polygons()) {
        auto& out = sheared.emplace_back();
        for (const auto& p : poly) {
            out.push_back({p.x - cot * p.y, p.y});
        }
    }
    return TranslationSurface(genus, std::move(sheared), regular.gluings());
}

/// A horizontal strip of one polygon, in the frame where the cylinder
/// direction is horizontal.
struct Band {
    int polygon = 0;
    Real bottom;
    Real top;
};

struct Cylinder {
    Direction direction = Direction::horizontal;
    std::string label;   // "a1".."ag" or "b1".."bg"
    int index = 0;       // 1-based label index
    int coordinate_rank = 0;  // 1-based rank by core coordinate
    Real circumference;
    Real height;
    /// y of the core (horizontal) or x of the core (vertical) in the
    /// lowest-index polygon the cylinder meets.
    Real core_coordinate;
    std::vector<Band> bands;

    Real modulus() const { return height / circumference; }
};

/// Chain label of the vertical cylinder with the given coordinate rank.
/// With polygon 0 the one carrying the horizontal top edge, vertical cores
/// sorted left to right already meet the horizontal cores in the chain
/// pattern a_k ~ b_{g+1-k}, b_{g+2-k}, so the relabeling is the identity.
inline int chain_b_index(int coordinate_rank, int /*genus*/) { return coordinate_rank; }

namespace detail {

struct FramePolygons {
    std::vector<std::vector<Point>> polygons;
};

inline FramePolygons frame_polygons(const TranslationSurface& s, Direction dir) {
    FramePolygons out;
    for (const auto& poly : s.polygons()) {
        auto& fp = out.polygons.emplace_back();
        for (const auto& p : poly) {
            fp.push_back(to_direction_frame(p, dir));
        }
    }
    return out;
}

/// Edge of a convex ccw polygon crossing height y on the right (ascending
/// edge) or left (descending edge) boundary.
inline int boundary_edge(const std::vector<Point>& poly, const Real& y, bool right, const Real& tol) {
    const int n = static_cast<int>(poly.size());
    for (int k = 0; k < n; ++k) {
        const Point& a = poly[k];
        const Point& b = poly[(k + 1) % n];
        if (right && b.y > a.y + tol && a.y - tol <= y && y <= b.y + tol) {
            return k;
        }
        if (!right && a.y > b.y + tol && b.y - tol <= y && y <= a.y + tol) {
            return k;
        }
    }
    throw DecompositionError("no boundary edge at requested height");
}

inline Real x_on_edge(const std::vector<Point>& poly, int k, const Real& y) {
    const Point& a = poly[k];
    const Point& b = poly[(k + 1) % poly.size()];
    return a.x + (y - a.y) / (b.y - a.y) * (b.x - a.x);
}

inline std::pair<Real, Real> chord(const std::vector<Point>& poly, const Real& y, const Real& tol) {
    const int l = boundary_edge(poly, y, false, tol);
    const int r = boundary_edge(poly, y, true, tol);
    return {x_on_edge(poly, l, y), x_on_edge(poly, r, y)};
}

/// Sorted heights with tolerance-aware insertion.
class CutSet {
  public:
    bool insert(const Real& y, const Real& tol) {
        auto it = std::lower_bound(cuts_.begin(), cuts_.end(), y - tol);
        if (it != cuts_.end() && mp::abs(*it - y) <= tol) {
            return false;
        }
        cuts_.insert(it, y);
        return true;
    }
    const std::vector<Real>& values() const { return cuts_; }

  private:
    std::vector<Real> cuts_;
};

struct BandGraph {
    std::vector<Band> bands;
    std::vector<std::size_t> right_neighbor;
};

inline std::size_t find_band(const std::vector<Band>& bands, int polygon, const Real& y) {
    for (std::size_t i = 0; i < bands.size(); ++i) {
        if (bands[i].polygon == polygon && bands[i].bottom < y && y < bands[i].top) {
            return i;
        }
    }
    throw DecompositionError("glued strip does not land inside a strip");
}

/// Cuts every polygon along the leaves through the singular points (the
/// separatrices) until the strip structure is closed under the gluings,
/// then links each strip to the strip across its right edge.
inline BandGraph build_band_graph(const TranslationSurface& s, Direction dir) {
    for (const auto& vc : s.vertex_classes()) {
        if (mp::abs(vc.cone_angle - 2 * pi()) < 1e-9) {
            throw DecompositionError("surfaces with regular marked points are not supported");
        }
    }
    const FramePolygons fp = frame_polygons(s, dir);
    const Real tol = s.tolerance();
    const std::size_t np = fp.polygons.size();
    std::vector<CutSet> cuts(np);
    std::size_t total_vertices = 0;
    for (std::size_t p = 0; p < np; ++p) {
        for (const auto& v : fp.polygons[p]) {
            cuts[p].insert(v.y, tol);
        }
        total_vertices += fp.polygons[p].size();
    }

    auto frame_translation = [&](EdgeRef e) { return to_direction_frame(s.gluing_translation(e), dir); };

    const std::size_t max_cuts = 64 * total_vertices;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t p = 0; p < np; ++p) {
            const std::vector<Real> current = cuts[p].values();
            for (std::size_t i = 0; i + 1 < current.size(); ++i) {
                const Real mid = (current[i] + current[i + 1]) / 2;
                for (bool right : {true, false}) {
                    const int k = boundary_edge(fp.polygons[p], mid, right, tol);
                    const EdgeRef e{static_cast<int>(p), k};
                    const EdgeRef f = s.partner(e);
                    const Real dy = frame_translation(e).y;
                    changed |= cuts[f.polygon].insert(current[i] + dy, tol);
                    changed |= cuts[f.polygon].insert(current[i + 1] + dy, tol);
                }
            }
        }
        std::size_t total = 0;
        for (const auto& c : cuts) {
            total += c.values().size();
        }
        if (total > max_cuts) {
            throw DecompositionError("direction is not completely periodic (separatrices do not close up)");
        }
    }

    BandGraph graph;
    for (std::size_t p = 0; p < np; ++p) {
        const auto& c = cuts[p].values();
        for (std::size_t i = 0; i + 1 < c.size(); ++i) {
            graph.bands.push_back({static_cast<int>(p), c[i], c[i + 1]});
        }
    }
    for (const auto& band : graph.bands) {
        const Real mid = (band.bottom + band.top) / 2;
        const int k = boundary_edge(fp.polygons[band.polygon], mid, true, tol);
        const EdgeRef e{band.polygon, k};
        const EdgeRef f = s.partner(e);
        const Real dy = frame_translation(e).y;
        const std::size_t next = find_band(graph.bands, f.polygon, mid + dy);
        const Band& target = graph.bands[next];
        if (mp::abs((target.top - target.bottom) - (band.top - band.bottom)) > tol) {
            throw DecompositionError("strip heights disagree across a gluing");
        }
        graph.right_neighbor.push_back(next);
    }
    return graph;
}

}  // namespace detail

/// Maximal cylinders in a distinguished direction, labeled a_1..a_g
/// (horizontal, bottom to top) or b_1..b_g (vertical, left to right, then
/// chain_b_index).
inline std::vector<Cylinder> cylinder_decomposition(const TranslationSurface& s, Direction dir) {
    const detail::BandGraph graph = detail::build_band_graph(s, dir);
    const detail::FramePolygons fp = detail::frame_polygons(s, dir);
    const Real tol = s.tolerance();

    std::vector<Cylinder> cylinders;
    std::vector<bool> seen(graph.bands.size(), false);
    for (std::size_t start = 0; start < graph.bands.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        Cylinder cyl;
        cyl.direction = dir;
        cyl.circumference = 0;
        std::optional<std::pair<int, Real>> key;
        for (std::size_t b = start; !seen[b]; b = graph.right_neighbor[b]) {
            seen[b] = true;
            const Band& band = graph.bands[b];
            cyl.bands.push_back(band);
            const Real mid = (band.bottom + band.top) / 2;
            const auto [left, right] = detail::chord(fp.polygons[band.polygon], mid, tol);
            cyl.circumference += right - left;
            // original coordinate of the core inside this strip
            const Real coordinate = dir == Direction::horizontal ? mid : Real(-mid);
            if (!key || band.polygon < key->first || (band.polygon == key->first && coordinate < key->second)) {
                key = {band.polygon, coordinate};
            }
        }
        cyl.height = cyl.bands.front().top - cyl.bands.front().bottom;
        cyl.core_coordinate = key->second;
        cylinders.push_back(std::move(cyl));
    }

    std::sort(cylinders.begin(), cylinders.end(), [](const Cylinder& a, const Cylinder& b) {
        const int pa = a.bands.empty() ? 0 : std::min_element(a.bands.begin(), a.bands.end(), [](auto& x, auto& y) {
                                               return x.polygon < y.polygon;
                                           })->polygon;
        const int pb = b.bands.empty() ? 0 : std::min_element(b.bands.begin(), b.bands.end(), [](auto& x, auto& y) {
                                               return x.polygon < y.polygon;
                                           })->polygon;
        if (pa != pb) {
            return pa < pb;
        }
        return a.core_coordinate < b.core_coordinate;
    });
    const int count = static_cast<int>(cylinders.size());
    for (int r = 0; r < count; ++r) {
        auto& cyl = cylinders[r];
        cyl.coordinate_rank = r + 1;
        cyl.index = dir == Direction::horizontal ? r + 1 : chain_b_index(r + 1, s.genus());
        cyl.label = std::string(dir == Direction::horizontal ? "a" : "b") + std::to_string(cyl.index);
    }
    std::sort(cylinders.begin(), cylinders.end(), [](const Cylinder& a, const Cylinder& b) { return a.index < b.index; });
    return cylinders;
}

/// Which cylinder of `cylinders` contains the strip of `polygon` at frame height y.
inline std::optional<std::size_t> cylinder_containing(const std::vector<Cylinder>& cylinders, int polygon, const Real& y) {
    for (std::size_t i = 0; i < cylinders.size(); ++i) {
        for (const auto& band : cylinders[i].bands) {
            if (band.polygon == polygon && band.bottom < y && y < band.top) {
                return i;
            }
        }
    }
    return std::nullopt;
}

/// Action of the point reflection through the centre of the configuration.
struct SymmetryReport {
    bool maps_surface_to_itself = false;
    /// image label index of a_i / b_j (1-based), empty if not a self-map
    std::vector<int> a_permutation;
    std::vector<int> b_permutation;
};

inline SymmetryReport point_reflection_action(const TranslationSurface& s) {
    SymmetryReport report;
    const Real tol = s.tolerance();
    Point centre{Real(0), Real(0)};
    std::size_t count = 0;
    for (const auto& poly : s.polygons()) {
        for (const auto& p : poly) {
            centre = centre + p;
            ++count;
        }
    }
    centre = (Real(1) / count) * centre;
    auto reflect = [&](const Point& p) { return Point{2 * centre.x - p.x, 2 * centre.y - p.y}; };
    auto close = [&](const Point& a, const Point& b) { return mp::abs(a.x - b.x) <= tol && mp::abs(a.y - b.y) <= tol; };

    // polygon p -> (q, shift) with reflect(vertex(p,k)) = vertex(q, k + shift)
    const int np = static_cast<int>(s.polygons().size());
    std::vector<std::pair<int, int>> image(np, {-1, 0});
    for (int p = 0; p < np; ++p) {
        const int n = s.edge_count(p);
        for (int q = 0; q < np && image[p].first < 0; ++q) {
            if (s.edge_count(q) != n) {
                continue;
            }
            for (int shift = 0; shift < n; ++shift) {
                bool all = true;
                for (int k = 0; k < n && all; ++k) {
                    all = close(reflect(s.vertex(p, k)), s.vertex(q, k + shift));
                }
                if (all) {
                    image[p] = {q, shift};
                    break;
                }
            }
        }
        if (image[p].first < 0) {
            return report;
        }
    }
    auto map_edge = [&](EdgeRef e) {
        const auto [q, shift] = image[e.polygon];
        return EdgeRef{q, (e.edge + shift) % s.edge_count(q)};
    };
    for (const auto& g : s.gluings()) {
        if (s.partner(map_edge(g.first)) != map_edge(g.second)) {
            return report;
        }
    }
    report.maps_surface_to_itself = true;

    for (Direction dir : {Direction::horizontal, Direction::vertical}) {
        const auto cylinders = cylinder_decomposition(s, dir);
        const Point frame_centre = to_direction_frame(centre, dir);
        auto& perm = dir == Direction::horizontal ? report.a_permutation : report.b_permutation;
        for (const auto& cyl : cylinders) {
            const Band& band = cyl.bands.front();
            const Real mid = (band.bottom + band.top) / 2;
            const auto target =
                cylinder_containing(cylinders, image[band.polygon].first, 2 * frame_centre.y - mid);
            if (!target) {
                report.maps_surface_to_itself = false;
                return report;
            }
            perm.push_back(cylinders[*target].index);
        }
    }
    return report;
}

/// True iff the point reflection through the configuration's centre is a
/// self-map of the glued surface fixing every horizontal and every vertical
/// cylinder.
inline bool hyperelliptic_symmetry(const TranslationSurface& s) {
    const SymmetryReport r = point_reflection_action(s);
    if (!r.maps_surface_to_itself) {
        return false;
    }
    for (std::size_t i = 0; i < r.a_permutation.size(); ++i) {
        if (r.a_permutation[i] != static_cast<int>(i) + 1) {
            return false;
        }
    }
    for (std::size_t j = 0; j < r.b_permutation.size(); ++j) {
        if (r.b_permutation[j] != static_cast<int>(j) + 1) {
            return false;
        }
    }
    return true;
}

}  // namespace lamkit
