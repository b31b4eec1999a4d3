#include <functional>

#include "lamkit/affine.hpp"
#include "test_support.hpp"

namespace lamkit {
namespace {

using lamkit::testing::rel_diff;

Mat2 m(long a, long b, long c, long d) { return {Real(a), Real(b), Real(c), Real(d)}; }

bool close(const Mat2& x, const Mat2& y, double tol) {
    for (const auto& [p, q] : {std::pair{x.a, y.a}, {x.b, y.b}, {x.c, y.c}, {x.d, y.d}}) {
        if (!approx_equal(p, q, tol)) {
            return false;
        }
    }
    return true;
}

TEST(Classify, StandardExamples) {
    EXPECT_EQ(classify(m(1, 3, 0, 1)), MatrixClass::parabolic);
    EXPECT_EQ(classify(m(-1, 3, 0, -1)), MatrixClass::parabolic);
    EXPECT_EQ(classify(m(0, -1, 1, 0)), MatrixClass::elliptic);
    EXPECT_EQ(classify(m(2, 1, 1, 1)), MatrixClass::hyperbolic);
    EXPECT_EQ(classify(Mat2::identity()), MatrixClass::identity);
    EXPECT_EQ(classify(-Mat2::identity()), MatrixClass::identity);
}

TEST(Classify, RejectsDeterminantOtherThanOne) {
    EXPECT_THROW(classify(m(2, 0, 0, 1)), InvalidMatrixError);
    EXPECT_THROW(classify(m(1, 1, 1, 1)), InvalidMatrixError);
}

TEST(TwistDerivative, GenusTwoHorizontalShear) {
    const auto cyls = cylinder_decomposition(build_double_polygon(2), Direction::horizontal);
    const Mat2 d = twist_derivative(cyls);
    EXPECT_EQ(d.trace(), 2);
    EXPECT_EQ(d.a, 1);
    EXPECT_EQ(d.c, 0);
    EXPECT_EQ(d.d, 1);
    for (const auto& c : cyls) {
        EXPECT_LE(rel_diff(d.b, c.circumference / c.height), 1e-12);
    }
}

TEST(TwistDerivative, VerticalIsLowerTriangular) {
    const Mat2 d = twist_derivative(cylinder_decomposition(build_double_polygon(3), Direction::vertical));
    EXPECT_EQ(d.b, 0);
    EXPECT_LT(d.c, 0);
    EXPECT_EQ(d.trace(), 2);
}

TEST(TwistDerivative, UnequalModuliAreNotParabolic) {
    Cylinder c1;
    c1.circumference = 1;
    c1.height = 1;
    Cylinder c2 = c1;
    c2.height = 2;
    EXPECT_THROW(twist_derivative({c1, c2}), NotParabolicError);
    EXPECT_THROW(twist_derivative({}), InvalidParameter);
}

TEST(TwistDerivative, ParabolicForAllSmallGenera) {
    for (int g = 2; g <= 8; ++g) {
        const AffineModel model(build_double_polygon(g));
        EXPECT_EQ(classify(model.ta()), MatrixClass::parabolic) << "g=" << g;
        EXPECT_EQ(classify(model.tb()), MatrixClass::parabolic) << "g=" << g;
    }
}

TEST(G0Generator, TraceMinusTwo) {
    for (int g = 2; g <= 6; ++g) {
        const auto s = build_double_polygon(g);
        const AffineElement e = g0_generator(g, s);
        EXPECT_EQ(e.derivative.trace(), -2) << "g=" << g;
        EXPECT_EQ(to_string(e.label), "TA^" + std::to_string(2 * (2 * g + 1)) + " sigma");
    }
}

TEST(G0Generator, GenusThreeOffDiagonal) {
    const AffineModel model(build_double_polygon(3));
    const Mat2 d = model.g0_generator().derivative;
    EXPECT_EQ(d.a, -1);
    EXPECT_EQ(d.d, -1);
    EXPECT_EQ(d.c, 0);
    EXPECT_LE(rel_diff(d.b, -14 * model.lambda()), 1e-30);
}

TEST(G0Generator, SquareIsParabolicWithTracePlusTwo) {
    for (int g = 2; g <= 6; ++g) {
        const AffineModel model(build_double_polygon(g));
        const Mat2 d = model.g0_generator().derivative;
        const Mat2 sq = d * d;
        EXPECT_EQ(sq.trace(), 2);
        EXPECT_LE(rel_diff(sq.b, 4 * (2 * g + 1) * model.lambda()), 1e-30);
        EXPECT_EQ(classify(sq), MatrixClass::parabolic);
    }
}

TEST(G0Generator, RejectsMismatchedGenus) {
    EXPECT_THROW(g0_generator(3, build_double_polygon(2)), InvalidParameter);
}

TEST(Products, TwistProductHasFiniteOrder) {
    for (int g = 2; g <= 5; ++g) {
        const AffineModel model(build_double_polygon(g));
        const Mat2 p = model.ta() * model.tb();
        EXPECT_EQ(classify(p), MatrixClass::elliptic);
        EXPECT_TRUE(close(p.pow(2 * g + 1), -Mat2::identity(), 1e-25)) << "g=" << g;
    }
}

TEST(Products, TwistTimesInverseTwistIsHyperbolic) {
    for (int g = 2; g <= 5; ++g) {
        const AffineModel model(build_double_polygon(g));
        EXPECT_EQ(classify(model.ta() * model.tb().inverse()), MatrixClass::hyperbolic) << "g=" << g;
    }
}

TEST(Sigma, DerivativeIsMinusIdentity) {
    const AffineModel model(build_double_polygon(2));
    EXPECT_TRUE(close(model.derivative(parse_affine_word("sigma")), -Mat2::identity(), 0));
    EXPECT_TRUE(close(model.derivative(parse_affine_word("sigma^2")), Mat2::identity(), 0));
}

TEST(AffineModel, DerivativeIsMultiplicativeOnShortWords) {
    const AffineModel model(build_double_polygon(2));
    const std::vector<AffineLetter> letters{{AffineGenerator::TA, 1},
                                            {AffineGenerator::TA, -1},
                                            {AffineGenerator::TB, 1},
                                            {AffineGenerator::TB, -1},
                                            {AffineGenerator::sigma, 1}};
    std::vector<AffineWord> words{{}};
    std::vector<AffineWord> layer{{}};
    for (int len = 1; len <= 4; ++len) {
        std::vector<AffineWord> next;
        for (const auto& w : layer) {
            for (const auto& l : letters) {
                AffineWord v = w;
                v.push_back(l);
                next.push_back(v);
            }
        }
        words.insert(words.end(), next.begin(), next.end());
        layer = next;
    }
    // every word of length <= 4, split at every position
    for (const auto& w : words) {
        for (std::size_t cut = 0; cut <= w.size(); ++cut) {
            const AffineWord u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
            const AffineWord v(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
            EXPECT_TRUE(close(model.derivative(w), model.derivative(u) * model.derivative(v), 1e-30))
                << to_string(u) << " | " << to_string(v);
        }
    }
}

TEST(AffineModel, PowersMatchRepeatedProducts) {
    const AffineModel model(build_double_polygon(3));
    Mat2 acc = Mat2::identity();
    for (int k = 1; k <= 12; ++k) {
        acc = acc * model.tb();
        EXPECT_TRUE(close(model.tb().pow(k), acc, 1e-28));
        EXPECT_TRUE(close(model.tb().pow(-k) * acc, Mat2::identity(), 1e-28));
    }
}

TEST(ParseAffineWord, RoundTripAndErrors) {
    const AffineWord w = parse_affine_word("TA^14 sigma TB^-2");
    ASSERT_EQ(w.size(), 3u);
    EXPECT_EQ(w[0], (AffineLetter{AffineGenerator::TA, 14}));
    EXPECT_EQ(w[1], (AffineLetter{AffineGenerator::sigma, 1}));
    EXPECT_EQ(w[2], (AffineLetter{AffineGenerator::TB, -2}));
    EXPECT_EQ(to_string(w), "TA^14 sigma TB^-2");
    EXPECT_EQ(parse_affine_word("s TA^0"), (AffineWord{{AffineGenerator::sigma, 1}}));
    EXPECT_TRUE(parse_affine_word("").empty());
    EXPECT_THROW(parse_affine_word("TC"), ParseError);
    EXPECT_THROW(parse_affine_word("TA^x"), ParseError);
    EXPECT_THROW(parse_affine_word("TA^2x"), ParseError);
}

}  // namespace
}  // namespace lamkit
