#include <random>

#include "lamkit/curves.hpp"
#include "test_support.hpp"

namespace lamkit {
namespace {

using lamkit::testing::random_rational;
using lamkit::testing::rel_diff;

TEST(ChainIntersectionMatrix, GenusTwoIsThePathOnFourVertices) {
    const ChainSystem cs = chain_intersection_matrix(2);
    ASSERT_EQ(cs.matrix.size(), 4u);
    int edges = 0;
    for (int u = 0; u < 4; ++u) {
        for (int v = u + 1; v < 4; ++v) {
            edges += cs.matrix[u][v];
        }
    }
    EXPECT_EQ(edges, 3);
}

TEST(ChainIntersectionMatrix, GenusFourMatchesTheFigure) {
    // left to right: a1 b4 a2 b3 a3 b2 a4 b1
    const ChainSystem cs = chain_intersection_matrix(4);
    const std::vector<std::pair<std::string, std::string>> adjacent{
        {"a1", "b4"}, {"b4", "a2"}, {"a2", "b3"}, {"b3", "a3"}, {"a3", "b2"}, {"b2", "a4"}, {"a4", "b1"}};
    auto node = [&](const std::string& label) {
        return static_cast<int>(std::find(cs.labels.begin(), cs.labels.end(), label) - cs.labels.begin());
    };
    std::vector<std::vector<int>> expected(8, std::vector<int>(8, 0));
    for (const auto& [x, y] : adjacent) {
        expected[node(x)][node(y)] = 1;
        expected[node(y)][node(x)] = 1;
    }
    EXPECT_EQ(cs.matrix, expected);
    std::vector<std::string> order;
    for (int n : cs.chain_order) {
        order.push_back(cs.labels[n]);
    }
    EXPECT_EQ(order, (std::vector<std::string>{"a1", "b4", "a2", "b3", "a3", "b2", "a4", "b1"}));
}

TEST(ChainIntersectionMatrix, StructuralInvariants) {
    for (int g = 2; g <= 8; ++g) {
        const ChainSystem cs = chain_intersection_matrix(g);
        for (int u = 0; u < cs.size(); ++u) {
            int row = 0;
            for (int v = 0; v < cs.size(); ++v) {
                EXPECT_EQ(cs.matrix[u][v], cs.matrix[v][u]);
                row += cs.matrix[u][v];
            }
            EXPECT_TRUE(row == 1 || row == 2) << "g=" << g << " node " << u;
        }
        for (int i = 1; i <= g; ++i) {
            for (int j = 1; j <= g; ++j) {
                EXPECT_EQ(cs.matrix[cs.a_node(i)][cs.a_node(j)], 0);
                EXPECT_EQ(cs.matrix[cs.b_node(i)][cs.b_node(j)], 0);
            }
        }
    }
    EXPECT_THROW(chain_intersection_matrix(1), InvalidParameter);
}

TEST(DeriveIntersectionMatrix, AgreesWithTheChain) {
    for (int g = 2; g <= 6; ++g) {
        EXPECT_EQ(derive_intersection_matrix(build_double_polygon(g)), chain_intersection_matrix(g).ab_block())
            << "g=" << g;
    }
}

WeightedMulticurve<Real> heights_multicurve(const TranslationSurface& s, Direction dir) {
    WeightedMulticurve<Real> m{dir == Direction::horizontal ? Side::A : Side::B, {}};
    for (const auto& c : cylinder_decomposition(s, dir)) {
        m.coefficients.push_back(c.height);
    }
    return m;
}

TEST(Pair, HeightsPairToTheArea) {
    for (int g = 2; g <= 6; ++g) {
        const auto s = build_double_polygon(g);
        const auto nu_a = heights_multicurve(s, Direction::horizontal);
        const auto nu_b = heights_multicurve(s, Direction::vertical);
        EXPECT_LE(rel_diff(pair(nu_a, nu_b, chain_intersection_matrix(g)), area(s)), 1e-10) << "g=" << g;
    }
}

TEST(Pair, UnitCurvesAdjacentInTheChain) {
    const ChainSystem cs = chain_intersection_matrix(3);
    const WeightedMulticurve<Rational> a1{Side::A, {1, 0, 0}};
    const WeightedMulticurve<Rational> b3{Side::B, {0, 0, 1}};
    const WeightedMulticurve<Rational> b1{Side::B, {1, 0, 0}};
    EXPECT_EQ(pair(a1, b3, cs), 1);
    EXPECT_EQ(pair(b3, a1, cs), 1);
    EXPECT_EQ(pair(a1, b1, cs), 0);
}

TEST(Pair, RejectsBadArguments) {
    const ChainSystem cs = chain_intersection_matrix(2);
    const WeightedMulticurve<Rational> zero{Side::A, {0, 0}};
    const WeightedMulticurve<Rational> a{Side::A, {1, 2}};
    const WeightedMulticurve<Rational> b{Side::B, {3, 1}};
    const WeightedMulticurve<Rational> negative{Side::B, {-1, 1}};
    const WeightedMulticurve<Rational> short_b{Side::B, {1}};
    EXPECT_THROW(pair(zero, b, cs), InvalidParameter);
    EXPECT_THROW(pair(a, negative, cs), InvalidParameter);
    EXPECT_THROW(pair(a, short_b, cs), InvalidParameter);
    EXPECT_THROW(pair(a, a, cs), InvalidParameter);
    EXPECT_EQ(pair(a, a, cs, true), 0);
}

TEST(Pair, BilinearAndSymmetric) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int g = 2 + trial % 5;
        const ChainSystem cs = chain_intersection_matrix(g);
        WeightedMulticurve<Rational> u{Side::A, {}}, u2{Side::A, {}}, combo{Side::A, {}}, v{Side::B, {}};
        const Rational alpha = random_rational(rng, 50, 9, false);
        for (int i = 0; i < g; ++i) {
            u.coefficients.push_back(random_rational(rng, 40, 7, false));
            u2.coefficients.push_back(random_rational(rng, 40, 7, false));
            combo.coefficients.push_back(alpha * u.coefficients.back() + u2.coefficients.back());
            v.coefficients.push_back(random_rational(rng, 40, 7, false));
        }
        EXPECT_EQ(pair(combo, v, cs), alpha * pair(u, v, cs) + pair(u2, v, cs));
        EXPECT_EQ(pair(u, v, cs), pair(v, u, cs));
    }
}

}  // namespace
}  // namespace lamkit
