#include <random>

#include "lamkit/amalgam.hpp"
#include "lamkit/rewriting.hpp"
#include "test_support.hpp"

namespace lamkit {
namespace {

FreeWord g(int i, long e = 1) { return FreeWord::generator(i, e); }

FreeWord random_free_word(std::mt19937_64& rng, int generators, int max_length) {
    std::uniform_int_distribution<int> len(0, max_length);
    std::uniform_int_distribution<int> gen(1, generators);
    std::vector<int> raw;
    for (int i = len(rng); i > 0; --i) {
        raw.push_back(gen(rng) * (rng() % 2 == 0 ? 1 : -1));
    }
    return free_reduce(raw);
}

AmalgamWord random_amalgam_word(std::mt19937_64& rng, int syllables) {
    AmalgamWord w;
    Factor f = rng() % 2 == 0 ? Factor::L : Factor::R;
    for (int i = 0; i < syllables; ++i) {
        w.syllables.push_back({f, random_free_word(rng, 3, 3)});
        if (rng() % 4 != 0) {
            f = other(f);
        }
    }
    return w;
}

TEST(FreeReduce, Examples) {
    EXPECT_TRUE(free_reduce({1, -1}).is_identity());
    EXPECT_EQ(free_reduce({1, 2, -2, 1}), g(1, 2));
    EXPECT_EQ(to_string(free_reduce({1, 2, -2, 1})), "g1^2");
    EXPECT_THROW(free_reduce({1, 0}), InvalidParameter);
}

TEST(FreeReduce, WordTimesInverseIsTrivialAndReductionIsIdempotent) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        std::vector<int> raw;
        for (int i = 0; i < 12; ++i) {
            raw.push_back(static_cast<int>(rng() % 4 + 1) * (rng() % 2 == 0 ? 1 : -1));
        }
        const FreeWord w = free_reduce(raw);
        EXPECT_EQ(free_reduce(w.letters()), w);
        for (std::size_t i = 0; i + 1 < w.letters().size(); ++i) {
            EXPECT_NE(w.letters()[i], -w.letters()[i + 1]);
        }
        std::vector<int> doubled = raw;
        for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
            doubled.push_back(-*it);
        }
        EXPECT_TRUE(free_reduce(doubled).is_identity());
    }
}

TEST(CyclicReduce, SplitsOffTheConjugator) {
    const FreeWord w = g(2) * g(1, 3) * g(3) * g(2, -1);
    const auto c = cyclic_reduce(w);
    EXPECT_EQ(c.conjugator, g(2));
    EXPECT_EQ(c.core, g(1, 3) * g(3));
    EXPECT_EQ(c.conjugator * c.core * c.conjugator.inverse(), w);
}

TEST(IsProperPower, Examples) {
    EXPECT_TRUE(is_proper_power(g(1, 2)));
    EXPECT_TRUE(is_proper_power(g(2) * g(1, 2) * g(2, -1)));
    EXPECT_TRUE(is_proper_power((g(1) * g(2)).pow(3)));
    EXPECT_FALSE(is_proper_power(g(1)));
    EXPECT_FALSE(is_proper_power(g(1) * g(2)));
    EXPECT_FALSE(is_proper_power(g(1, 2) * g(2)));
}

TEST(PowerOfZ, Examples) {
    const FreeWord z = g(1);
    EXPECT_EQ(power_of_z(z.pow(3), z), 3);
    EXPECT_EQ(power_of_z(z * g(2), z), std::nullopt);
    EXPECT_EQ(power_of_z(FreeWord{}, z), 0);
    EXPECT_THROW(power_of_z(g(1), g(1, 2)), InvalidEdgeGenerator);
    EXPECT_THROW(power_of_z(g(1), FreeWord{}), InvalidEdgeGenerator);
}

TEST(PowerOfZ, RecoversExponentsForShortRoots) {
    std::mt19937_64 rng(2);
    int tested = 0;
    while (tested < 60) {
        const FreeWord z = random_free_word(rng, 3, 4);
        if (z.is_identity() || is_proper_power(z)) {
            continue;
        }
        ++tested;
        for (long k = -20; k <= 20; ++k) {
            EXPECT_EQ(power_of_z(z.pow(k), z), k) << to_string(z) << " ^ " << k;
        }
        EXPECT_EQ(power_of_z(z * g(4), z), std::nullopt);
    }
}

TEST(BrittonReduce, EdgeLetterCrossesTheAmalgam) {
    const EdgeGroup edge;
    const AmalgamWord w{{{Factor::L, g(1, 2)}, {Factor::R, g(2)}}};
    EXPECT_EQ(britton_reduce(w, edge), (AmalgamWord{{{Factor::R, g(1, 2) * g(2)}}}));
}

TEST(BrittonReduce, TrivialSyllableDisappears) {
    const AmalgamWord w = parse_amalgam_word("L:g2 R:1 L:g3");
    EXPECT_EQ(britton_reduce(w), (AmalgamWord{{{Factor::L, g(2) * g(3)}}}));
}

TEST(BrittonReduce, CustomEdgeWords) {
    const EdgeGroup edge(g(1) * g(2), g(3));
    const AmalgamWord w = parse_amalgam_word("R:g4 L:g1.g2 R:g4", edge);
    EXPECT_EQ(britton_reduce(w, edge), (AmalgamWord{{{Factor::R, g(4) * g(3) * g(4)}}}));
    EXPECT_THROW(EdgeGroup(g(1, 2), g(1)), InvalidEdgeGenerator);
}

TEST(BrittonReduce, IdempotentAndShortening) {
    std::mt19937_64 rng(3);
    const EdgeGroup edge;
    for (int t = 0; t < 300; ++t) {
        const AmalgamWord w = random_amalgam_word(rng, 1 + t % 6);
        const AmalgamWord r = britton_reduce(w, edge);
        EXPECT_EQ(britton_reduce(r, edge), r);
        EXPECT_LE(r.syllable_length(), w.syllable_length());
        for (std::size_t i = 0; i + 1 < r.syllables.size(); ++i) {
            EXPECT_NE(r.syllables[i].factor, r.syllables[i + 1].factor);
        }
        if (r.syllable_length() >= 2) {
            for (const auto& s : r.syllables) {
                EXPECT_FALSE(edge.power(s.word, s.factor).has_value());
            }
        }
        // w * r^-1 represents the identity
        EXPECT_TRUE(britton_reduce(w * r.inverse(), edge).is_identity());
    }
}

TEST(BrittonReduce, AgreesWithRewritingSearchOnShortWords) {
    const EdgeGroup edge;
    for (const auto& w : rewriting::enumerate_alternating_words(2, 2, 2)) {
        EXPECT_EQ(britton_reduce(w, edge).syllable_length(), rewriting::minimal_syllable_length(w, edge))
            << to_string(w);
    }
}

TEST(BrittonReduce, AgreesWithRewritingSearchOnSampledLongerWords) {
    const EdgeGroup edge;
    const auto words = rewriting::enumerate_alternating_words(2, 3, 2);
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int t = 0; t < 300; ++t) {
        const auto& w = words[pick(rng)];
        EXPECT_EQ(britton_reduce(w, edge).syllable_length(), rewriting::minimal_syllable_length(w, edge))
            << to_string(w);
    }
}

TEST(ClassifyElement, Examples) {
    const EdgeGroup edge;
    EXPECT_EQ(classify_element(AmalgamWord{}, edge), ElementClass::identity);
    EXPECT_EQ(classify_element(parse_amalgam_word("L:z^5"), edge), ElementClass::conjugate_into_G0);
    EXPECT_EQ(classify_element(parse_amalgam_word("L:g2.z^5.g2^-1"), edge), ElementClass::conjugate_into_G0);
    const AmalgamWord pa = parse_amalgam_word("L:g2 R:g3");
    EXPECT_EQ(classify_element(pa, edge), ElementClass::pA_type);
    EXPECT_EQ(rewriting::classify_by_search(pa, edge, 3), ElementClass::pA_type);
    EXPECT_EQ(classify_element(parse_amalgam_word("L:g2 R:g2^-1 L:g2^-1 R:g2"), edge), ElementClass::pA_type);
    EXPECT_EQ(classify_element(parse_amalgam_word("L:g1 R:g1^-1"), edge), ElementClass::identity);
    EXPECT_EQ(classify_element(parse_amalgam_word("L:g2"), edge), ElementClass::pA_type);
}

TEST(ClassifyElement, AgreesWithSearchOnShortWords) {
    const EdgeGroup edge;
    for (const auto& w : rewriting::enumerate_alternating_words(2, 2, 2)) {
        EXPECT_EQ(classify_element(w, edge), rewriting::classify_by_search(w, edge)) << to_string(w);
    }
}

TEST(ClassifyElement, ConjugacyInvariant) {
    std::mt19937_64 rng(5);
    const EdgeGroup edge;
    for (int t = 0; t < 300; ++t) {
        const AmalgamWord w = britton_reduce(random_amalgam_word(rng, 1 + t % 5), edge);
        const ElementClass c = classify_element(w, edge);
        for (std::size_t shift = 1; shift < w.syllables.size(); ++shift) {
            AmalgamWord rotated;
            rotated.syllables.assign(w.syllables.begin() + static_cast<std::ptrdiff_t>(shift), w.syllables.end());
            rotated.syllables.insert(rotated.syllables.end(), w.syllables.begin(),
                                     w.syllables.begin() + static_cast<std::ptrdiff_t>(shift));
            EXPECT_EQ(classify_element(rotated, edge), c) << to_string(w);
        }
        for (Factor f : {Factor::L, Factor::R}) {
            for (int i = 1; i <= 3; ++i) {
                for (long e : {1L, -1L}) {
                    const AmalgamWord x{{{f, g(i, e)}}};
                    EXPECT_EQ(classify_element(x * w * x.inverse(), edge), c) << to_string(w);
                }
            }
        }
    }
}

TEST(ClassifyElement, ExplicitConjugatesOfEdgePowers) {
    std::mt19937_64 rng(6);
    for (const EdgeGroup& edge : {EdgeGroup(), EdgeGroup(g(1) * g(2, -1), g(3) * g(1))}) {
        for (int t = 0; t < 200; ++t) {
            const AmalgamWord u = random_amalgam_word(rng, t % 5);
            const long k = 1 + static_cast<long>(rng() % 5);
            const Factor f = t % 2 == 0 ? Factor::L : Factor::R;
            const AmalgamWord zk{{{f, edge.z(f).pow(t % 3 == 0 ? -k : k)}}};
            EXPECT_EQ(classify_element(u * zk * u.inverse(), edge), ElementClass::conjugate_into_G0);
        }
    }
}

TEST(Parse, WordsAndErrors) {
    const EdgeGroup edge;
    const AmalgamWord w = parse_amalgam_word("L:g1^2 R:g3 L:z^-1", edge, 4);
    ASSERT_EQ(w.syllable_length(), 3u);
    EXPECT_EQ(w.syllables[0], (Syllable{Factor::L, g(1, 2)}));
    EXPECT_EQ(w.syllables[2], (Syllable{Factor::L, g(1, -1)}));
    EXPECT_EQ(to_string(w), "L:g1^2 R:g3 L:g1^-1");
    EXPECT_EQ(parse_amalgam_word(to_string(w), edge, 4), w);
    EXPECT_EQ(parse_free_word("g1.g2^-2*g3"), g(1) * g(2, -2) * g(3));
    EXPECT_THROW(parse_amalgam_word("X:g1"), ParseError);
    EXPECT_THROW(parse_amalgam_word("L:g5", edge, 4), ParseError);
    EXPECT_THROW(parse_amalgam_word("L:q"), ParseError);
    EXPECT_THROW(parse_amalgam_word("Lg1"), ParseError);
    EXPECT_THROW(parse_free_word("z"), ParseError);
    EXPECT_THROW(parse_free_word("g0"), ParseError);
}

}  // namespace
}  // namespace lamkit
