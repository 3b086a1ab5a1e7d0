#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "support.hpp"

using namespace braille;
using testing_support::table;
using testing_support::w;

namespace {

GrayImage page_of(const std::vector<std::string>& lines, const RenderConfig& cfg = {})
{
    std::vector<Word> words;
    for (const auto& l : lines) {
        words.push_back(w(l.c_str()));
    }
    return render(words, table(), cfg);
}

// First page of the first corpus document, wrapped to the page width.
std::vector<Word> corpus_page(std::size_t lines = 24)
{
    const auto docs = load_corpus(testing_support::kCorpusDir);
    std::vector<Word> tokens;
    for (const auto& t : docs.front().tokens) {
        if (table().can_encode(t)) {
            tokens.push_back(t);
        }
    }
    auto wrapped = wrap(tokens, RenderConfig{}.page_cells);
    wrapped.resize(std::min(wrapped.size(), lines));
    return wrapped;
}

double char_accuracy(const std::vector<Word>& truth, const RecognitionOutput& rec)
{
    std::size_t right = 0;
    std::size_t total = 0;
    for (std::size_t j = 0; j < truth.size(); ++j) {
        for (std::size_t k = 0; k < truth[j].size(); ++k) {
            ++total;
            if (j < rec.text.size() && k < rec.text[j].size() && rec.text[j][k] == truth[j][k]) {
                ++right;
            }
        }
    }
    return 100.0 * static_cast<double>(right) / static_cast<double>(total);
}

std::size_t components(const Mask& m)
{
    Mask seen(m.width, m.height);
    std::size_t n = 0;
    for (int y = 0; y < m.height; ++y) {
        for (int x = 0; x < m.width; ++x) {
            if (!m.at(x, y) || seen.at(x, y)) {
                continue;
            }
            ++n;
            std::vector<std::pair<int, int>> stack{{x, y}};
            seen.at(x, y) = 1;
            while (!stack.empty()) {
                auto [cx, cy] = stack.back();
                stack.pop_back();
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int nx = cx + dx;
                        const int ny = cy + dy;
                        if (nx >= 0 && ny >= 0 && nx < m.width && ny < m.height && m.at(nx, ny) && !seen.at(nx, ny)) {
                            seen.at(nx, ny) = 1;
                            stack.push_back({nx, ny});
                        }
                    }
                }
            }
        }
    }
    return n;
}

GrayImage checkerboard(int w, int h)
{
    GrayImage img(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            img.at(x, y) = static_cast<std::uint8_t>((x * 37 + y * 91) % 256);
        }
    }
    return img;
}

} // namespace

TEST(Render, EmptyTextIsBlankMarginPage)
{
    const RenderConfig cfg;
    const auto img = render(std::vector<Word>{}, table(), cfg);
    EXPECT_EQ(img.height(), 2 * cfg.margin);
    EXPECT_EQ(img.width(), cfg.page_width());
    EXPECT_EQ(to_mask(img).count(), 0u);
}

TEST(Render, LetterAIsOneDiscAtTopLeftDot)
{
    const RenderConfig cfg;
    const auto ink = to_mask(page_of({"a"}, cfg));
    EXPECT_EQ(components(ink), 1u);
    double sx = 0;
    double sy = 0;
    for (int y = 0; y < ink.height; ++y) {
        for (int x = 0; x < ink.width; ++x) {
            if (ink.at(x, y)) {
                sx += x;
                sy += y;
            }
        }
    }
    const double n = static_cast<double>(ink.count());
    EXPECT_NEAR(sx / n, cfg.margin + cfg.dot_radius, 0.5);
    EXPECT_NEAR(sy / n, cfg.margin + cfg.dot_radius, 0.5);
    EXPECT_NEAR(n, M_PI * cfg.dot_radius * cfg.dot_radius, 0.1 * n);
}

TEST(Render, LineWiderThanPageThrows)
{
    RenderConfig cfg;
    cfg.page_cells = 3;
    EXPECT_THROW(page_of({"casas"}, cfg), LineTooLong);
}

TEST(Render, UnmappedCharacterThrows)
{
    EXPECT_THROW(page_of({"ano 2022"}), UnmappedCharacter);
}

TEST(Render, InvalidGeometryThrows)
{
    RenderConfig cfg;
    cfg.dot_radius = cfg.dot_pitch;
    EXPECT_THROW(cfg.validate(), InvalidParameter);
}

TEST(Pgm, RoundTrip)
{
    const auto img = checkerboard(17, 9);
    std::stringstream ss;
    pgm::write(ss, img);
    EXPECT_EQ(pgm::read(ss), img);
}

TEST(Pgm, ReadsCommentsAndRejectsGarbage)
{
    std::stringstream ok("P5\n# made by hand\n2 1\n255\n\x10\x20");
    const auto img = pgm::read(ok);
    EXPECT_EQ(img.width(), 2);
    EXPECT_EQ(img.at(1, 0), 0x20);
    std::stringstream bad("P2\n2 1\n255\n1 2\n");
    EXPECT_THROW(pgm::read(bad), ImageIoError);
    std::stringstream truncated("P5\n4 4\n255\nab");
    EXPECT_THROW(pgm::read(truncated), ImageIoError);
}

TEST(GaussianBlur, TinySigmaIsIdentity)
{
    const auto img = checkerboard(40, 30);
    const auto out = gaussian_blur(img, 0.01);
    int worst = 0;
    for (std::size_t i = 0; i < img.pixels().size(); ++i) {
        worst = std::max(worst, std::abs(int(img.pixels()[i]) - int(out.pixels()[i])));
    }
    EXPECT_LE(worst, 1);
}

TEST(GaussianBlur, UniformImageUnchanged)
{
    const GrayImage img(31, 23, 137);
    EXPECT_EQ(gaussian_blur(img, 3.0), img);
}

TEST(GaussianBlur, InteriorBrightnessPreserved)
{
    const auto img = page_of({"abc def", "ghi"});
    const auto out = gaussian_blur(img, 3.0);
    // Interior window far enough from the border that clamping does not matter.
    const int pad = 20;
    double before = 0;
    double after = 0;
    for (int y = pad; y < img.height() - pad; ++y) {
        for (int x = pad; x < img.width() - pad; ++x) {
            before += img.at(x, y);
            after += out.at(x, y);
        }
    }
    EXPECT_NEAR(after / before, 1.0, 0.005);
}

TEST(GaussianBlur, NonPositiveSigmaThrows)
{
    const GrayImage img(4, 4);
    EXPECT_THROW(gaussian_blur(img, 0.0), InvalidParameter);
    EXPECT_THROW(gaussian_blur(img, -1.0), InvalidParameter);
}

TEST(SpreadNoise, ZeroAmountIsIdentity)
{
    const auto img = checkerboard(20, 20);
    EXPECT_EQ(spread_noise(img, 0, 1), img);
}

TEST(SpreadNoise, SameSeedSameOutput)
{
    const auto img = checkerboard(50, 40);
    EXPECT_EQ(spread_noise(img, 5, 42), spread_noise(img, 5, 42));
    EXPECT_NE(spread_noise(img, 5, 42), spread_noise(img, 5, 43));
}

TEST(SpreadNoise, HistogramRoughlyPreserved)
{
    // Bands of four grey levels, wide enough that most samples stay inside.
    GrayImage img(400, 400);
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            img.at(x, y) = static_cast<std::uint8_t>(60 * ((x / 25 + y / 25) % 4));
        }
    }
    const auto out = spread_noise(img, 10, 7);
    std::array<double, 256> h0{};
    std::array<double, 256> h1{};
    for (auto v : img.pixels()) {
        ++h0[v];
    }
    for (auto v : out.pixels()) {
        ++h1[v];
    }
    double chi2 = 0;
    for (int v = 0; v < 256; ++v) {
        if (h0[v] > 0) {
            chi2 += (h1[v] - h0[v]) * (h1[v] - h0[v]) / h0[v];
        } else {
            EXPECT_EQ(h1[v], 0.0);
        }
    }
    // Four bins, so three degrees of freedom; samples are correlated, so
    // the bound is loose.
    EXPECT_LT(chi2 / static_cast<double>(img.pixels().size()), 0.01);
}

TEST(Preprocess, WhitePageHasNoForeground)
{
    EXPECT_EQ(preprocess_mask(GrayImage(60, 40)).count(), 0u);
}

TEST(Preprocess, SmallBlobRemoved)
{
    GrayImage img(40, 40);
    for (int y = 20; y < 22; ++y) {
        for (int x = 20; x < 22; ++x) {
            img.at(x, y) = 0;
        }
    }
    EXPECT_EQ(remove_small_blobs(to_mask(img), 10).count(), 0u);
    EXPECT_EQ(preprocess_mask(img).count(), 0u);
}

TEST(Preprocess, BlobAtThresholdAreaSurvivesRemoval)
{
    Mask m(20, 20);
    for (int x = 2; x < 12; ++x) {
        m.at(x, 5) = 1;
    }
    EXPECT_EQ(remove_small_blobs(m, 10).count(), 10u);
}

TEST(Preprocess, RenderedDotSurvives)
{
    RenderConfig cfg;
    cfg.dot_radius = 3;
    cfg.dot_pitch = 12;
    cfg.cell_pitch_x = 30;
    cfg.cell_pitch_y = 45;
    cfg.margin = 40;
    EXPECT_GT(preprocess_mask(page_of({"a"}, cfg)).count(), 0u);
}

TEST(Preprocess, IdempotentOnBinaryImages)
{
    const auto once = preprocess(gaussian_blur(page_of({"o rato roeu", "a roupa"}), 3.0));
    EXPECT_EQ(preprocess(once), once);
}

TEST(Preprocess, MedianRemovesSaltNoise)
{
    auto img = page_of({"a"});
    img.at(img.width() - 30, img.height() - 30) = 0;
    const auto m = median_filter(to_mask(img), 5);
    EXPECT_EQ(m.at(img.width() - 30, img.height() - 30), 0);
}

TEST(SegmentRows, BlankPageThrows)
{
    EXPECT_THROW(segment_rows(Mask(100, 100)), NoLinesFound);
}

TEST(SegmentRows, ThreeLinesThreeBands)
{
    const RenderConfig cfg;
    const auto ink = preprocess_mask(page_of({"ak", "c m", "xyz"}, cfg));
    const auto bands = segment_rows(ink);
    ASSERT_EQ(bands.size(), 3u);
    for (const auto& b : bands) {
        EXPECT_GE(b.length(), cfg.cell_height());
    }
}

TEST(SegmentRows, LinesWithOnlyLowDotsStillFound)
{
    // "-" is dots 3,6 only: the band must still cover the cell height.
    const RenderConfig cfg;
    const auto bands = segment_rows(preprocess_mask(page_of({"a", "-"}, cfg)));
    EXPECT_EQ(bands.size(), 2u);
}

TEST(SegmentCells, TwoLetters)
{
    const auto ink = preprocess_mask(page_of({"ab"}));
    const auto bands = segment_rows(ink);
    ASSERT_EQ(bands.size(), 1u);
    EXPECT_EQ(segment_cells(ink, bands[0]).size(), 2u);
}

TEST(SegmentCells, BlankCellRecovered)
{
    const auto ink = preprocess_mask(page_of({"a b"}));
    const auto bands = segment_rows(ink);
    ASSERT_EQ(bands.size(), 1u);
    const auto cells = segment_cells(ink, bands[0]);
    ASSERT_EQ(cells.size(), 3u);
    EXPECT_EQ(cells[1].begin - cells[0].begin, RenderConfig{}.cell_pitch_x);
}

TEST(SegmentCells, EmptyBandHasNoCells)
{
    const auto ink = preprocess_mask(page_of({"a"}));
    EXPECT_TRUE(segment_cells(ink, Interval{ink.height - 20, ink.height - 5}).empty());
    EXPECT_TRUE(segment_cells(ink, Interval{5, 5}).empty());
}

TEST(DecodeCellImage, BlankRegionIsSpace)
{
    const Mask ink(200, 200);
    const auto d = decode_cell_image(ink, Rect{10, 10, 100, 150}, table());
    EXPECT_EQ(d.character, U' ');
    EXPECT_TRUE(d.mapped);
}

TEST(DecodeCellImage, RenderedLetters)
{
    const RenderConfig cfg;
    const auto ink = preprocess_mask(page_of({"a", "é"}, cfg));
    const auto a = decode_cell_image(ink, dot_region(cfg.margin, cfg.margin, cfg), table());
    EXPECT_EQ(a.character, U'a');
    const auto full = decode_cell_image(ink, dot_region(cfg.margin, cfg.margin + cfg.cell_pitch_y, cfg), table());
    EXPECT_EQ(full.cell, BrailleCell::from_dots({1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(full.character, table().decode(BrailleCell::from_dots({1, 2, 3, 4, 5, 6})));
}

TEST(Recognize, CleanRoundTrip)
{
    const auto lines = std::vector<Word>{w("o rato roeu a roupa"), w("do rei de roma"), w("pé-de-meia d'água ç ã õ")};
    const auto rec = recognize(render(lines, table()), table());
    EXPECT_EQ(rec.text, lines);
    EXPECT_EQ(rec.cells_failed, 0u);
}

TEST(Recognize, CleanCorpusPage)
{
    const auto lines = corpus_page();
    const auto rec = recognize(render(lines, table()), table());
    EXPECT_EQ(rec.text, lines);
}

TEST(Recognize, BlurThreeKeepsNinetyPercent)
{
    const auto lines = corpus_page(8);
    const auto rec = recognize(gaussian_blur(render(lines, table()), 3.0), table());
    EXPECT_GE(char_accuracy(lines, rec), 90.0);
}

TEST(Recognize, BlankImageGivesEmptyText)
{
    const auto rec = recognize(GrayImage(300, 300), table());
    EXPECT_TRUE(rec.text.empty());
    EXPECT_EQ(rec.cells_total, 0u);
}

TEST(Recognize, UnmappedCellBecomesPatternCharacter)
{
    const auto odd = BrailleCell::from_dots({2});
    ASSERT_FALSE(table().maps(odd));
    const std::vector<std::vector<BrailleCell>> cells{{table().encode(U'a'), odd, table().encode(U'b')}};
    const auto rec = recognize(render_cells(cells, RenderConfig{}), table());
    ASSERT_EQ(rec.text.size(), 1u);
    Word expected = U"a";
    expected += odd.unicode_pattern();
    expected += U"b";
    EXPECT_EQ(rec.text[0], expected);
    EXPECT_EQ(rec.cells_failed, 1u);
    EXPECT_EQ(rec.cells_total, 3u);
}

TEST(Recognize, LeadingBlankCellsKeepTheirColumns)
{
    const auto lines = std::vector<Word>{w("abc"), w("  d")};
    const auto rec = recognize(render(lines, table()), table());
    EXPECT_EQ(rec.text, lines);
}
