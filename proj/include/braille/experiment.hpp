#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "braille/baseline.hpp"
#include "braille/corrector.hpp"
#include "braille/corruption.hpp"
#include "braille/metrics.hpp"
#include "braille/noise.hpp"
#include "braille/parallel.hpp"
#include "braille/recognize.hpp"
#include "braille/render.hpp"
#include "braille/report.hpp"
#include "braille/rng.hpp"
#include "braille/text.hpp"

namespace braille {

inline constexpr std::uint64_t kDefaultSeed = 20220401;

struct Document {
    std::string name;
    std::vector<Word> tokens;
};

/// Tokenized UTF-8 `.txt` files of a directory, in file-name order.
inline std::vector<Document> load_corpus(const std::filesystem::path& dir)
{
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) {
        throw BrailleError("corpus directory '" + dir.string() + "' not found");
    }
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == ".txt") {
            files.push_back(e.path());
        }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        throw BrailleError("corpus directory '" + dir.string() + "' has no .txt files");
    }
    std::vector<Document> docs;
    for (const auto& f : files) {
        std::ifstream in(f, std::ios::binary);
        if (!in) {
            throw BrailleError("cannot read '" + f.string() + "'");
        }
        std::stringstream ss;
        ss << in.rdbuf();
        docs.push_back({f.filename().string(), tokenize_utf8(ss.str())});
    }
    return docs;
}

// Shortest decimal form of a parameter: 2.5 -> "2.5", 10 -> "10".
inline std::string format_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

namespace detail {

// Splits off tokens the table cannot encode; returns how many were dropped.
inline std::size_t keep_encodable(std::vector<Document>& docs, const CodeTable& table)
{
    std::size_t dropped = 0;
    for (auto& d : docs) {
        auto it = std::remove_if(d.tokens.begin(), d.tokens.end(), [&](const Word& w) { return !table.can_encode(w); });
        dropped += static_cast<std::size_t>(d.tokens.end() - it);
        d.tokens.erase(it, d.tokens.end());
    }
    return dropped;
}

// Corrects every distinct input once with both methods.
struct Corrections {
    std::vector<Word> ours;
    std::vector<Word> baseline;
};

struct Observed {
    Word text;
    std::vector<BrailleCell> cells;
    friend bool operator==(const Observed&, const Observed&) = default;
};

struct ObservedHash {
    std::size_t operator()(const Observed& o) const noexcept
    {
        std::size_t h = std::hash<Word>{}(o.text);
        for (auto c : o.cells) {
            h = h * 131 + c.mask();
        }
        return h;
    }
};

inline Corrections correct_all(const std::vector<Observed>& inputs, const BrailleCorrector& ours,
                               const BaselineCorrector& baseline, unsigned threads)
{
    std::unordered_map<Observed, std::size_t, ObservedHash> index;
    std::vector<const Observed*> unique;
    std::vector<std::size_t> slot(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        auto [it, fresh] = index.try_emplace(inputs[i], unique.size());
        if (fresh) {
            unique.push_back(&inputs[i]);
        }
        slot[i] = it->second;
    }
    std::vector<Word> ours_u(unique.size());
    std::vector<Word> base_u(unique.size());
    parallel_for(
        unique.size(),
        [&](std::size_t i) {
            const auto& o = *unique[i];
            ours_u[i] = o.text.empty() ? o.text : ours.revise_cells(o.text, o.cells).corrected;
            base_u[i] = baseline.correct(o.text);
        },
        threads);
    Corrections out;
    out.ours.reserve(inputs.size());
    out.baseline.reserve(inputs.size());
    for (auto s : slot) {
        out.ours.push_back(ours_u[s]);
        out.baseline.push_back(base_u[s]);
    }
    return out;
}

inline void add_rows(Report& report, const std::string& condition, std::uint64_t seed,
                     const std::vector<Word>& truth, const std::vector<Word>& observed, const Corrections& fixed,
                     const Lexicon& lex)
{
    Metrics base;
    base.tokens = truth.size();
    base.char_error = char_error(observed, truth);
    base.word_error = word_error(observed, truth);
    base.dict_coverage = dict_coverage(truth, lex);

    Metrics ours = base;
    ours.avg_levenshtein = avg_levenshtein(fixed.ours, truth);
    ours.hit_rate = hit_rate(fixed.ours, truth);
    Metrics other = base;
    other.avg_levenshtein = avg_levenshtein(fixed.baseline, truth);
    other.hit_rate = hit_rate(fixed.baseline, truth);
    report.rows.push_back({condition, "ours", seed, ours});
    report.rows.push_back({condition, "baseline", seed, other});
}

} // namespace detail

struct ExperimentAConfig {
    std::vector<double> error_percents = {2.5, 5.0, 7.5, 10.0, 12.5, 15.0, 17.5, 20.0, 22.5, 25.0, 27.5, 30.0};
    std::uint64_t seed = kDefaultSeed;
    std::size_t max_redraws = 1000;
    std::size_t baseline_max_distance = 2;
    unsigned threads = default_threads();

    void validate() const
    {
        for (double p : error_percents) {
            if (!(p > 0.0 && p <= 100.0)) {
                throw InvalidParameter("error percent " + format_number(p) + " outside (0, 100]");
            }
        }
    }
};

/// Random bit-flip corruption of every corpus token at each error level,
/// revised by both correctors.
inline Report run_experiment_a(const ExperimentAConfig& cfg, std::vector<Document> docs, const Lexicon& lex,
                               const CodeTable& table)
{
    cfg.validate();
    Report report;
    report.experiment = "a";
    report.metadata["seed"] = std::to_string(cfg.seed);
    report.metadata["dictionary_words"] = std::to_string(lex.size());
    report.metadata["unencodable_tokens"] = std::to_string(detail::keep_encodable(docs, table));
    if (cfg.error_percents.empty()) {
        return report;
    }

    const BrailleCorrector ours(lex, table);
    const BaselineCorrector baseline(lex, cfg.baseline_max_distance);
    std::size_t infeasible = 0;
    for (double percent : cfg.error_percents) {
        const auto key = static_cast<std::uint64_t>(std::llround(percent * 1000.0));
        std::vector<Word> truth;
        std::vector<detail::Observed> observed;
        for (std::size_t d = 0; d < docs.size(); ++d) {
            for (std::size_t t = 0; t < docs[d].tokens.size(); ++t) {
                const auto& w = docs[d].tokens[t];
                Rng rng(derive_seed(cfg.seed, {key, d, t}));
                try {
                    auto c = inject_bit_errors(w, percent, rng, table, cfg.max_redraws);
                    truth.push_back(w);
                    observed.push_back({std::move(c.word), std::move(c.cells)});
                } catch (const CorruptionInfeasible&) {
                    ++infeasible;
                }
            }
        }
        auto fixed = detail::correct_all(observed, ours, baseline, cfg.threads);
        std::vector<Word> observed_text;
        observed_text.reserve(observed.size());
        for (auto& o : observed) {
            observed_text.push_back(o.text);
        }
        detail::add_rows(report, format_number(percent) + "%", cfg.seed, truth, observed_text, fixed, lex);
    }
    report.metadata["infeasible_corruptions"] = std::to_string(infeasible);
    return report;
}

enum class NoiseKind { Blur, Spread };

struct NoiseSpec {
    NoiseKind kind = NoiseKind::Blur;
    double parameter = 0.0;
    std::uint64_t seed = kDefaultSeed;

    std::string label() const { return (kind == NoiseKind::Blur ? "blur " : "spread ") + format_number(parameter); }

    void validate() const
    {
        if (kind == NoiseKind::Blur && !(parameter > 0.0)) {
            throw InvalidParameter("blur sigma must be positive");
        }
        if (kind == NoiseKind::Spread && !(parameter >= 0.0)) {
            throw InvalidParameter("spread amount must be non-negative");
        }
    }
};

/// Parses `blur:3`, `spread:10` or `spread:10:1234` (explicit seed).
inline NoiseSpec parse_noise_spec(const std::string& text, std::uint64_t default_seed = kDefaultSeed)
{
    NoiseSpec spec;
    spec.seed = default_seed;
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) {
        parts.push_back(p);
    }
    if (parts.size() < 2 || parts.size() > 3) {
        throw InvalidParameter("noise spec '" + text + "' is not kind:parameter[:seed]");
    }
    if (parts[0] == "blur") {
        spec.kind = NoiseKind::Blur;
    } else if (parts[0] == "spread") {
        spec.kind = NoiseKind::Spread;
    } else {
        throw InvalidParameter("unknown noise kind '" + parts[0] + "'");
    }
    try {
        std::size_t used = 0;
        spec.parameter = std::stod(parts[1], &used);
        if (used != parts[1].size()) {
            throw std::invalid_argument(parts[1]);
        }
        if (parts.size() == 3) {
            spec.seed = std::stoull(parts[2], &used);
            if (used != parts[2].size()) {
                throw std::invalid_argument(parts[2]);
            }
        }
    } catch (const std::logic_error&) {
        throw InvalidParameter("malformed number in noise spec '" + text + "'");
    }
    spec.validate();
    return spec;
}

inline GrayImage apply_noise(const GrayImage& img, const NoiseSpec& spec, std::uint64_t seed)
{
    spec.validate();
    if (spec.kind == NoiseKind::Blur) {
        return gaussian_blur(img, spec.parameter);
    }
    return spread_noise(img, static_cast<int>(std::lround(spec.parameter)), seed);
}

/// Noise seed used for one page of one document.
inline std::uint64_t page_seed(const NoiseSpec& spec, std::size_t doc, std::size_t page)
{
    return derive_seed(spec.seed, {doc, page});
}

inline std::vector<NoiseSpec> default_noise_specs(std::uint64_t seed = kDefaultSeed)
{
    return {{NoiseKind::Blur, 3.0, seed}, {NoiseKind::Blur, 5.0, seed}, {NoiseKind::Spread, 10.0, seed},
            {NoiseKind::Spread, 20.0, seed}};
}

/// Position of a token on the rendered page.
struct TokenSlot {
    std::size_t line = 0;
    std::size_t column = 0;
    std::size_t length = 0;
};

struct PageLayout {
    std::vector<std::vector<Word>> pages; // lines of each page
    std::vector<std::vector<TokenSlot>> slots; // token slots of each page
};

/// Wraps tokens into lines of at most `width` cells and groups the lines
/// into pages, remembering where every token lands.
inline PageLayout layout_pages(const std::vector<Word>& tokens, std::size_t width, std::size_t lines_per_page)
{
    PageLayout out;
    std::vector<Word> lines;
    std::vector<TokenSlot> slots;
    Word line;
    for (const auto& t : tokens) {
        if (t.size() > width) {
            throw LineTooLong(lines.size(), t.size(), width);
        }
        if (!line.empty() && line.size() + 1 + t.size() > width) {
            lines.push_back(std::move(line));
            line.clear();
        }
        if (!line.empty()) {
            line.push_back(U' ');
        }
        slots.push_back({lines.size(), line.size(), t.size()});
        line += t;
    }
    if (!line.empty()) {
        lines.push_back(std::move(line));
    }
    for (std::size_t first = 0; first < lines.size(); first += lines_per_page) {
        const std::size_t last = std::min(lines.size(), first + lines_per_page);
        out.pages.emplace_back(lines.begin() + static_cast<std::ptrdiff_t>(first),
                               lines.begin() + static_cast<std::ptrdiff_t>(last));
        std::vector<TokenSlot> page_slots;
        for (const auto& s : slots) {
            if (s.line >= first && s.line < last) {
                page_slots.push_back({s.line - first, s.column, s.length});
            }
        }
        out.slots.push_back(std::move(page_slots));
    }
    return out;
}

/// Places recognized cells on the page grid by their pixel position, so a
/// missed line or cell cannot shift everything after it. Unread positions
/// stay blank.
struct PageGrid {
    std::vector<Word> text;
    std::vector<std::vector<BrailleCell>> cells;
};

inline PageGrid grid_from_recognition(const RecognitionOutput& rec, const RenderConfig& g, std::size_t lines,
                                      std::size_t width)
{
    PageGrid grid;
    grid.text.assign(lines, Word(width, U' '));
    grid.cells.assign(lines, std::vector<BrailleCell>(width));
    for (std::size_t i = 0; i < rec.grid.row_bands.size(); ++i) {
        const double y = rec.grid.row_bands[i].begin - g.margin;
        const long j = std::lround(y / g.cell_pitch_y);
        if (j < 0 || static_cast<std::size_t>(j) >= lines) {
            continue;
        }
        for (std::size_t c = 0; c < rec.grid.cell_bands[i].size(); ++c) {
            const double x = rec.grid.cell_bands[i][c].begin - g.margin;
            const long k = std::lround(x / g.cell_pitch_x);
            if (k < 0 || static_cast<std::size_t>(k) >= width) {
                continue;
            }
            grid.text[j][k] = rec.text[i][c];
            grid.cells[j][k] = rec.cells[i][c];
        }
    }
    return grid;
}

struct ExperimentBConfig {
    std::vector<NoiseSpec> noise_specs = default_noise_specs();
    RenderConfig render;
    RecognitionConfig recognition;
    std::size_t lines_per_page = 24;
    std::size_t baseline_max_distance = 2;
    unsigned threads = default_threads();

    void validate() const
    {
        render.validate();
        for (const auto& s : noise_specs) {
            s.validate();
        }
        if (lines_per_page == 0) {
            throw InvalidParameter("lines_per_page must be positive");
        }
    }
};

/// Renders every document, applies each noise condition, recognizes the
/// pages and revises the recognized tokens with both correctors. The first
/// condition is always the noiseless page.
inline Report run_experiment_b(const ExperimentBConfig& cfg, std::vector<Document> docs, const Lexicon& lex,
                               const CodeTable& table)
{
    cfg.validate();
    Report report;
    report.experiment = "b";
    report.metadata["dictionary_words"] = std::to_string(lex.size());
    report.metadata["unencodable_tokens"] = std::to_string(detail::keep_encodable(docs, table));

    const auto& g = cfg.render;
    RecognitionConfig rc = cfg.recognition;
    rc.geometry = g;
    const auto width = static_cast<std::size_t>(g.page_cells);

    struct Page {
        std::size_t doc;
        std::size_t index;
        std::vector<Word> lines;
        std::vector<TokenSlot> slots;
    };
    std::vector<Page> pages;
    std::vector<Word> truth;
    for (std::size_t d = 0; d < docs.size(); ++d) {
        auto layout = layout_pages(docs[d].tokens, width, cfg.lines_per_page);
        for (std::size_t p = 0; p < layout.pages.size(); ++p) {
            for (const auto& s : layout.slots[p]) {
                truth.push_back(layout.pages[p][s.line].substr(s.column, s.length));
            }
            pages.push_back({d, p, std::move(layout.pages[p]), std::move(layout.slots[p])});
        }
    }
    report.metadata["pages"] = std::to_string(pages.size());

    const BrailleCorrector ours(lex, table);
    const BaselineCorrector baseline(lex, cfg.baseline_max_distance);

    std::vector<std::pair<std::string, const NoiseSpec*>> conditions{{"plain", nullptr}};
    for (const auto& s : cfg.noise_specs) {
        conditions.emplace_back(s.label(), &s);
    }
    std::size_t failed_cells = 0;
    for (const auto& [label, spec] : conditions) {
        std::vector<std::vector<detail::Observed>> per_page(pages.size());
        std::vector<std::size_t> failed(pages.size(), 0);
        parallel_for(
            pages.size(),
            [&](std::size_t i) {
                const auto& page = pages[i];
                GrayImage img = render(page.lines, table, g);
                if (spec) {
                    img = apply_noise(img, *spec, page_seed(*spec, page.doc, page.index));
                }
                const auto rec = recognize(img, table, rc);
                failed[i] = rec.cells_failed;
                const auto grid = grid_from_recognition(rec, g, page.lines.size(), width);
                for (const auto& s : page.slots) {
                    detail::Observed o;
                    o.text = grid.text[s.line].substr(s.column, s.length);
                    o.cells.assign(grid.cells[s.line].begin() + static_cast<std::ptrdiff_t>(s.column),
                                   grid.cells[s.line].begin() + static_cast<std::ptrdiff_t>(s.column + s.length));
                    per_page[i].push_back(std::move(o));
                }
            },
            cfg.threads);
        std::vector<detail::Observed> observed;
        for (auto& p : per_page) {
            observed.insert(observed.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
        }
        for (auto f : failed) {
            failed_cells += f;
        }
        auto fixed = detail::correct_all(observed, ours, baseline, cfg.threads);
        std::vector<Word> observed_text;
        observed_text.reserve(observed.size());
        for (auto& o : observed) {
            observed_text.push_back(o.text);
        }
        detail::add_rows(report, label, spec ? spec->seed : 0, truth, observed_text, fixed, lex);
    }
    report.metadata["unmapped_cells"] = std::to_string(failed_cells);
    return report;
}

} // namespace braille
