#include <gtest/gtest.h>

#include "support.hpp"

using namespace braille;
using testing_support::oracle_compare;
using testing_support::small_lexicon;
using testing_support::table;
using testing_support::w;

TEST(Compare, IdentityIsZero)
{
    EXPECT_EQ(compare(U"casa", U"casa", table()), 0u);
}

TEST(Compare, AAndBDifferInOneDot)
{
    EXPECT_EQ(compare(U"a", U"b", table()), 1u);
}

TEST(Compare, MatchesBitOracle)
{
    EXPECT_EQ(compare(U"casa", U"vaca", table()), oracle_compare(U"casa", U"vaca"));
    EXPECT_EQ(compare(w("ação"), w("açúcar").substr(0, 4), table()),
              oracle_compare(w("ação"), w("açúcar").substr(0, 4)));
}

TEST(Compare, LengthMismatchThrows)
{
    EXPECT_THROW(compare(U"casa", U"casas", table()), LengthMismatch);
}

TEST(Compare, UnmappedCharacterThrows)
{
    EXPECT_THROW(compare(U"ca5a", U"casa", table()), UnmappedCharacter);
}

TEST(ReviseWord, LexiconWordIsKept)
{
    const auto lex = small_lexicon({{"casa", 10}, {"vaca", 20}});
    const auto r = revise_word(U"casa", lex, table());
    EXPECT_EQ(r.corrected, U"casa");
    EXPECT_FALSE(r.changed);
    EXPECT_EQ(r.braille_distance, std::optional<std::size_t>(0));
}

TEST(ReviseWord, EmptyBucketLeavesWordUnchanged)
{
    const auto lex = small_lexicon({{"casa", 10}});
    const auto r = revise_word(U"sol", lex, table());
    EXPECT_EQ(r.corrected, U"sol");
    EXPECT_FALSE(r.changed);
    EXPECT_FALSE(r.braille_distance.has_value());
}

// One text word, two dictionary words: the nearer one in dot space wins even
// though the other is far more frequent.
TEST(ReviseWord, OneWordTwoCandidates)
{
    const auto lex = small_lexicon({{"cama", 100}, {"casa", 1}});
    const auto d_casa = oracle_compare(U"cata", U"casa");
    const auto d_cama = oracle_compare(U"cata", U"cama");
    ASSERT_LT(d_casa, d_cama);
    const auto r = revise_word(U"cata", lex, table());
    EXPECT_EQ(r.corrected, U"casa");
    EXPECT_TRUE(r.changed);
    EXPECT_EQ(r.braille_distance, d_casa);
    EXPECT_EQ(r.candidate_count, 2u);
}

TEST(ReviseWord, TiesGoToTheMoreFrequentWord)
{
    // "b" (dots 1,2) is one dot away from both "a" (1) and "l" (1,2,3).
    const auto lex = small_lexicon({{"a", 1}, {"l", 9}});
    ASSERT_EQ(oracle_compare(U"b", U"a"), oracle_compare(U"b", U"l"));
    EXPECT_EQ(revise_word(U"b", lex, table()).corrected, U"l");
    const auto swapped = small_lexicon({{"a", 9}, {"l", 1}});
    EXPECT_EQ(revise_word(U"b", swapped, table()).corrected, U"a");
}

TEST(ReviseWord, UnmappedCharacterThrows)
{
    const auto lex = small_lexicon({{"casa", 10}});
    EXPECT_THROW(revise_word(U"ca#a", lex, table()), UnmappedCharacter);
}

TEST(BrailleCorrector, AgreesWithReferenceOnSmallLexicon)
{
    const auto lex = small_lexicon({{"casa", 10}, {"vaca", 20}, {"cama", 5}, {"mesa", 7}, {"sol", 3}});
    const BrailleCorrector fast(lex, table());
    for (const char* q : {"cata", "vasa", "meta", "sal", "zzzz", "casa"}) {
        const auto a = revise_word(w(q), lex, table());
        const auto b = fast.revise(w(q));
        EXPECT_EQ(a.corrected, b.corrected) << q;
        EXPECT_EQ(a.braille_distance, b.braille_distance) << q;
    }
}

TEST(BrailleCorrector, LongWordsSpanSeveralPackedChunks)
{
    const auto lex = small_lexicon({{"inconstitucionalmente", 4}, {"inconstitucionalidade", 6}});
    const BrailleCorrector fast(lex, table());
    const Word q = w("inconstitucionalmentz");
    const auto a = revise_word(q, lex, table());
    const auto b = fast.revise(q);
    EXPECT_EQ(b.corrected, w("inconstitucionalmente"));
    EXPECT_EQ(a.corrected, b.corrected);
    EXPECT_EQ(a.braille_distance, b.braille_distance);
}

TEST(BrailleCorrector, ObservedCellsMayBeUnmapped)
{
    const auto lex = small_lexicon({{"casa", 10}, {"vaca", 20}});
    const BrailleCorrector fast(lex, table());
    auto cells = table().cells(U"casa");
    cells[2] = BrailleCell::from_dots({2}); // not in the table
    ASSERT_FALSE(table().maps(cells[2]));
    Word observed = U"ca";
    observed += cells[2].unicode_pattern();
    observed += U"a";
    const auto r = fast.revise_cells(observed, cells);
    EXPECT_EQ(r.corrected, U"casa");
    EXPECT_EQ(fast.revise(observed).corrected, U"casa");
}

TEST(ReviseText, EmptyInput)
{
    const auto lex = small_lexicon({{"casa", 10}});
    const auto out = revise_text(std::vector<Word>{}, lex, table());
    EXPECT_TRUE(out.tokens.empty());
    EXPECT_TRUE(out.results.empty());
}

TEST(ReviseText, LexiconTextIsUnchanged)
{
    const auto lex = small_lexicon({{"o", 10}, {"rato", 5}, {"roeu", 3}});
    const std::vector<Word> text{U"o", U"rato", U"roeu"};
    const auto out = revise_text(text, lex, table());
    EXPECT_EQ(out.tokens, text);
    EXPECT_EQ(out.changed_count(), 0u);
}

TEST(ReviseText, SingleFlippedBitRestoresOriginal)
{
    const auto& lex = testing_support::full_lexicon();
    const Word truth = w("computação");
    auto v = beta(truth, table());
    // Find a single-bit corruption that stays mapped and whose nearest
    // same-length word by brute force is the original.
    std::optional<Word> corrupted;
    for (std::size_t bit = 0; bit < v.size() && !corrupted; ++bit) {
        auto c = v;
        c.flip(bit);
        bool mapped = true;
        for (std::size_t i = 0; i < c.cell_count(); ++i) {
            mapped = mapped && table().maps(c.cell(i));
        }
        if (!mapped) {
            continue;
        }
        const Word candidate = psi(c, table());
        if (lex.contains(candidate)) {
            continue;
        }
        std::size_t best = SIZE_MAX;
        for (const auto& d : lex.words_of_length(truth.size())) {
            if (d != truth) {
                best = std::min(best, oracle_compare(candidate, d));
            }
        }
        if (best > 1) {
            corrupted = candidate;
        }
    }
    ASSERT_TRUE(corrupted.has_value());
    const std::vector<Word> text{U"a", *corrupted, U"de"};
    const auto out = revise_text(text, lex, table());
    EXPECT_EQ(out.tokens, (std::vector<Word>{U"a", truth, U"de"}));
    EXPECT_EQ(out.changed_count(), 1u);
}

TEST(ReviseText, UnencodableTokensPassThrough)
{
    const auto lex = small_lexicon({{"casa", 10}});
    const std::vector<Word> text{U"c4sa", U""};
    const auto out = revise_text(text, lex, table());
    EXPECT_EQ(out.tokens, text);
}

TEST(Baseline, KnownWordIsReturned)
{
    const auto lex = small_lexicon({{"casa", 10}, {"cama", 50}});
    EXPECT_EQ(baseline_correct(U"casa", lex), U"casa");
}

TEST(Baseline, SingleNeighbourAtDistanceOne)
{
    const auto lex = small_lexicon({{"casa", 10}, {"mesa", 5}, {"lago", 3}});
    EXPECT_EQ(baseline_correct(U"casz", lex), U"casa");
}

TEST(Baseline, NoCandidateReturnsInput)
{
    const auto lex = small_lexicon({{"casa", 10}});
    EXPECT_EQ(baseline_correct(U"xyzwv", lex), U"xyzwv");
}

TEST(Baseline, DistanceOneBeatsMoreFrequentDistanceTwo)
{
    const auto lex = small_lexicon({{"gato", 1}, {"mato", 1000}});
    EXPECT_EQ(baseline_correct(U"gatu", lex), U"gato");
}

TEST(Baseline, FrequencyBreaksDistanceTies)
{
    const auto lex = small_lexicon({{"gato", 5}, {"pato", 50}});
    EXPECT_EQ(baseline_correct(U"xato", lex), U"pato");
}

TEST(Baseline, AdjacentTranspositionIsOneEdit)
{
    const auto lex = small_lexicon({{"gato", 1}, {"gaita", 1000}});
    EXPECT_EQ(osa_distance(U"gaot", U"gato", 2), 1u);
    EXPECT_EQ(baseline_correct(U"gaot", lex), U"gato");
}

TEST(Baseline, InsertionsAndDeletionsChangeLength)
{
    const auto lex = small_lexicon({{"casas", 3}, {"asa", 1}});
    EXPECT_EQ(baseline_correct(U"cass", lex), U"casas");
    const auto lex2 = small_lexicon({{"asa", 1}});
    EXPECT_EQ(baseline_correct(U"asas", lex2), U"asa");
}

TEST(BaselineCorrector, AgreesWithReference)
{
    const auto lex = small_lexicon({{"casa", 10}, {"casas", 4}, {"asa", 7}, {"mesa", 5}, {"gato", 3}, {"pato", 3},
                                    {"a", 100}, {"de", 90}, {"da", 80}});
    const BaselineCorrector fast(lex);
    for (const char* q : {"cas", "cssa", "gatos", "xato", "d", "aa", "zzzzzz", "ca", "mes", "pa"}) {
        EXPECT_EQ(fast.correct(w(q)), baseline_correct(w(q), lex)) << q;
    }
}

TEST(OsaDistance, BoundedResult)
{
    EXPECT_EQ(osa_distance(U"abcdef", U"uvwxyz", 2), 3u);
    EXPECT_EQ(osa_distance(U"ab", U"ba", 2), 1u);
    EXPECT_EQ(osa_distance(U"ca", U"abc", 5), 3u); // no substring edited twice
    EXPECT_EQ(osa_distance(U"", U"abc", 5), 3u);
}
