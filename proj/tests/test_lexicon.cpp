#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace braille;
using testing_support::small_lexicon;
using testing_support::w;

namespace {

std::vector<RawEntry> parse(const std::string& text)
{
    std::istringstream in(text);
    return load_frequency_list(in);
}

} // namespace

TEST(LoadFrequencyList, TwoEntries)
{
    const auto entries = parse("de 5389006\nque 4520490");
    ASSERT_EQ(entries.size(), 2u);
    EXPECT_EQ(entries[0], (RawEntry{U"de", 5389006}));
    EXPECT_EQ(entries[1], (RawEntry{U"que", 4520490}));
}

TEST(LoadFrequencyList, EmptyStream)
{
    EXPECT_TRUE(parse("").empty());
}

TEST(LoadFrequencyList, MissingFrequencyIsMalformed)
{
    try {
        parse("de 10\ncasa\n");
        FAIL() << "expected MalformedLine";
    } catch (const MalformedLine& e) {
        EXPECT_EQ(e.line, 2u);
    }
}

TEST(LoadFrequencyList, NonNumericFrequency)
{
    EXPECT_THROW(parse("casa muitas\n"), NonNumericFrequency);
}

TEST(LoadFrequencyList, RepeatedWordKeepsFirstFrequency)
{
    const auto entries = parse("de 10\nde 3\n");
    ASSERT_EQ(entries.size(), 1u);
    EXPECT_EQ(entries[0].frequency, 10u);
}

TEST(BuildLexicon, DropsWordsWithDisallowedCharacters)
{
    const auto lex = small_lexicon({{"pé", 10}, {"x@y", 5}});
    EXPECT_EQ(lex.size(), 1u);
    EXPECT_TRUE(lex.contains(U"pé"));
    EXPECT_EQ(lex.stats().rejected, 1u);
}

TEST(BuildLexicon, KeepsHyphenatedWords)
{
    const auto lex = small_lexicon({{"pé-de-meia", 3}});
    EXPECT_TRUE(lex.contains(w("pé-de-meia")));
}

TEST(BuildLexicon, EmptyInput)
{
    const auto lex = build_lexicon({});
    EXPECT_EQ(lex.size(), 0u);
    EXPECT_TRUE(lex.words_of_length(3).empty());
}

TEST(BuildLexicon, LowercasesAndMergesCaseVariants)
{
    const auto lex = small_lexicon({{"Casa", 7}, {"casa", 3}});
    EXPECT_EQ(lex.size(), 1u);
    EXPECT_EQ(lex.frequency(U"casa"), 7u);
    EXPECT_EQ(lex.stats().duplicates, 1u);
}

TEST(BuildLexicon, BacktickApostropheNormalized)
{
    const auto lex = small_lexicon({{"d`água", 4}});
    EXPECT_TRUE(lex.contains(w("d'água")));
    EXPECT_EQ(lex.words_of_length(6).front(), w("d'água"));
}

TEST(WordsOfLength, MissingLengthIsEmpty)
{
    const auto lex = small_lexicon({{"de", 1}});
    EXPECT_TRUE(words_of_length(lex, 9).empty());
}

TEST(WordsOfLength, DeduplicatesWithinBucket)
{
    const auto lex = small_lexicon({{"de", 5}, {"eu", 4}, {"de", 1}});
    EXPECT_EQ(words_of_length(lex, 2), (std::vector<Word>{U"de", U"eu"}));
}

TEST(WordsOfLength, HigherFrequencyFirst)
{
    const auto lex = small_lexicon({{"ema", 2}, {"zoo", 9}});
    EXPECT_EQ(words_of_length(lex, 3), (std::vector<Word>{U"zoo", U"ema"}));
}

TEST(WordsOfLength, EqualFrequencyLexicographic)
{
    const auto lex = small_lexicon({{"bom", 5}, {"ama", 5}, {"céu", 5}});
    EXPECT_EQ(words_of_length(lex, 3), (std::vector<Word>{U"ama", U"bom", w("céu")}));
}

TEST(Contains, InsertedWord)
{
    const auto lex = small_lexicon({{"casa", 12}});
    EXPECT_EQ(lex.contains(U"casa"), std::optional<std::uint64_t>(12));
}

TEST(Contains, EmptyLexicon)
{
    const auto lex = build_lexicon({});
    EXPECT_FALSE(lex.contains(U"casa"));
}

TEST(Contains, CaseNormalized)
{
    const auto lex = small_lexicon({{"casa", 12}});
    EXPECT_TRUE(lex.contains(U"Casa"));
    EXPECT_TRUE(lex.contains(U"CASA"));
}

TEST(DefaultDictionaryPath, ReadsEnvironment)
{
    ::setenv("BRAILLE_DICT", "/tmp/some-list.txt", 1);
    EXPECT_EQ(default_dictionary_path(), std::optional<std::string>("/tmp/some-list.txt"));
    ::unsetenv("BRAILLE_DICT");
    EXPECT_FALSE(default_dictionary_path().has_value());
}

TEST(BundledDictionary, LoadsAndIsFiltered)
{
    const auto& lex = testing_support::full_lexicon();
    EXPECT_GT(lex.size(), 400000u);
    const auto allowed = portuguese_allowed_chars();
    for (std::size_t n = 1; n <= lex.max_length(); ++n) {
        for (const auto& word : lex.words_of_length(n)) {
            for (char32_t c : word) {
                ASSERT_TRUE(allowed.count(c)) << utf8::encode(word);
            }
        }
    }
}
