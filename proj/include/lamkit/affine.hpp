#pragma once

// Derivatives of the affine multitwists T_A, T_B and the hyperelliptic
// involution, symbolic words over them, and SL(2,R) classification.

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "lamkit/errors.hpp"
#include "lamkit/flat_surface.hpp"
#include "lamkit/numeric.hpp"

namespace lamkit {

inline constexpr double kDeterminantTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-9;

/// 2x2 real matrix [[a, b], [c, d]].
struct Mat2 {
    Real a{1}, b{0}, c{0}, d{1};

    static Mat2 identity() { return {Real(1), Real(0), Real(0), Real(1)}; }

    Real trace() const { return a + d; }
    Real determinant() const { return a * d - b * c; }

    /// Inverse of a determinant-one matrix.
    Mat2 inverse() const { return {d, Real(-b), Real(-c), a}; }

    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend Mat2 operator-(const Mat2& m) { return {Real(-m.a), Real(-m.b), Real(-m.c), Real(-m.d)}; }

    Point apply(const Point& p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }

    Mat2 pow(long k) const {
        Mat2 base = k < 0 ? inverse() : *this;
        unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
        Mat2 result = identity();
        while (e > 0) {
            if (e & 1UL) {
                result = result * base;
            }
            base = base * base;
            e >>= 1UL;
        }
        return result;
    }
};

enum class MatrixClass { identity, parabolic, elliptic, hyperbolic };

inline std::string to_string(MatrixClass c) {
    switch (c) {
        case MatrixClass::identity: return "identity";
        case MatrixClass::parabolic: return "parabolic";
        case MatrixClass::elliptic: return "elliptic";
        case MatrixClass::hyperbolic: return "hyperbolic";
    }
    return "?";
}

/// Classifies by |trace| against 2; +-Id are reported as identity (central).
inline MatrixClass classify(const Mat2& m, double trace_tol = kTraceTolerance) {
    if (mp::abs(m.determinant() - 1) > kDeterminantTolerance) {
        throw InvalidMatrixError("determinant " + to_decimal(m.determinant()) + " is not 1");
    }
    const Real scale = std::max({Real(1), Real(mp::abs(m.a)), Real(mp::abs(m.b)), Real(mp::abs(m.c)),
                                 Real(mp::abs(m.d))});
    const Real tol = trace_tol * scale;
    if (mp::abs(m.b) <= tol && mp::abs(m.c) <= tol && mp::abs(m.a - m.d) <= tol && mp::abs(mp::abs(m.a) - 1) <= tol) {
        return MatrixClass::identity;
    }
    const Real excess = mp::abs(m.trace()) - 2;
    if (excess < -trace_tol) {
        return MatrixClass::elliptic;
    }
    if (excess > trace_tol) {
        return MatrixClass::hyperbolic;
    }
    return MatrixClass::parabolic;
}

/// Derivative of the affine multitwist in a decomposition with common
/// inverse modulus lambda = c/h: [[1, lambda], [0, 1]] for horizontal
/// cylinders and its rotation by pi/2, [[1, 0], [-lambda, 1]], for vertical
/// ones (same handedness, so the two twists are conjugate in SL(2,R)).
inline Mat2 twist_derivative(const std::vector<Cylinder>& cylinders, double tol = kGeometryTolerance) {
    if (cylinders.empty()) {
        throw InvalidParameter("no cylinders");
    }
    const Direction dir = cylinders.front().direction;
    const Real reference = cylinders.front().modulus();
    for (const auto& cyl : cylinders) {
        if (cyl.direction != dir) {
            throw InvalidParameter("cylinders from different directions");
        }
        if (!relative_close(cyl.modulus(), reference, tol)) {
            throw NotParabolicError("cylinder moduli differ (" + to_decimal(reference) + " vs " +
                                    to_decimal(cyl.modulus()) + "); the multitwist is not affine");
        }
    }
    const Real lambda = 1 / reference;
    if (dir == Direction::horizontal) {
        return {Real(1), lambda, Real(0), Real(1)};
    }
    return {Real(1), Real(0), Real(-lambda), Real(1)};
}

enum class AffineGenerator { TA, TB, sigma };

struct AffineLetter {
    AffineGenerator generator = AffineGenerator::TA;
    long exponent = 1;
    friend bool operator==(const AffineLetter&, const AffineLetter&) = default;
};

/// Word over {T_A, T_B, sigma}; composition order, so "TA TB" is T_A o T_B.
using AffineWord = std::vector<AffineLetter>;

inline std::string to_string(const AffineWord& word) {
    if (word.empty()) {
        return "1";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) {
            out << ' ';
        }
        const auto& l = word[i];
        out << (l.generator == AffineGenerator::TA ? "TA" : l.generator == AffineGenerator::TB ? "TB" : "sigma");
        if (l.exponent != 1) {
            out << '^' << l.exponent;
        }
    }
    return out.str();
}

/// Parses e.g. "TA^14 sigma TB^-2". Zero exponents are dropped.
inline AffineWord parse_affine_word(const std::string& text) {
    AffineWord word;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        const auto caret = token.find('^');
        const std::string name = token.substr(0, caret);
        long exponent = 1;
        if (caret != std::string::npos) {
            try {
                std::size_t used = 0;
                exponent = std::stol(token.substr(caret + 1), &used);
                if (used != token.size() - caret - 1) {
                    throw ParseError("");
                }
            } catch (const std::exception&) {
                throw ParseError("bad exponent in '" + token + "'");
            }
        }
        AffineGenerator gen;
        if (name == "TA") {
            gen = AffineGenerator::TA;
        } else if (name == "TB") {
            gen = AffineGenerator::TB;
        } else if (name == "sigma" || name == "s") {
            gen = AffineGenerator::sigma;
        } else {
            throw ParseError("unknown affine generator '" + name + "' (expected TA, TB or sigma)");
        }
        if (exponent != 0) {
            word.push_back({gen, exponent});
        }
    }
    return word;
}

struct AffineElement {
    Mat2 derivative;
    AffineWord label;
};

/// Derivatives of the generators of the affine group model of a surface.
class AffineModel {
  public:
    explicit AffineModel(const TranslationSurface& s)
        : genus_(s.genus()),
          ta_(twist_derivative(cylinder_decomposition(s, Direction::horizontal))),
          tb_(twist_derivative(cylinder_decomposition(s, Direction::vertical))) {}

    int genus() const { return genus_; }
    const Mat2& ta() const { return ta_; }
    const Mat2& tb() const { return tb_; }
    /// The hyperelliptic involution is central with derivative -Id.
    static Mat2 sigma() { return -Mat2::identity(); }

    /// Horizontal shear lambda of D(T_A).
    const Real& lambda() const { return ta_.b; }

    Mat2 derivative(const AffineWord& word) const {
        Mat2 m = Mat2::identity();
        for (const auto& letter : word) {
            m = m * generator(letter.generator).pow(letter.exponent);
        }
        return m;
    }

    AffineElement element(const AffineWord& word) const { return {derivative(word), word}; }

    /// T_A^{2(2g+1)} sigma, the generator of the maximal parabolic subgroup.
    AffineElement g0_generator() const {
        return element({{AffineGenerator::TA, 2L * (2 * genus_ + 1)}, {AffineGenerator::sigma, 1}});
    }

  private:
    Mat2 generator(AffineGenerator g) const {
        switch (g) {
            case AffineGenerator::TA: return ta_;
            case AffineGenerator::TB: return tb_;
            case AffineGenerator::sigma: return sigma();
        }
        return Mat2::identity();
    }

    int genus_;
    Mat2 ta_;
    Mat2 tb_;
};

inline AffineElement g0_generator(int genus, const TranslationSurface& s) {
    if (s.genus() != genus) {
        throw InvalidParameter("surface genus does not match");
    }
    return AffineModel(s).g0_generator();
}

}  // namespace lamkit
