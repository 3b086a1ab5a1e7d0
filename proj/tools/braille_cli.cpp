// Command-line driver: transcribe, revise, render, corrupt, experiment.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "braille/braille.hpp"

namespace {

using namespace braille;

constexpr int kExitIo = 1;
constexpr int kExitNoLines = 2;
constexpr int kExitInvalid = 3;

struct Options {
    std::string dict;
    std::string table = BRAILLE_DEFAULT_TABLE;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = default_threads();
    RenderConfig render;
    double dot_presence = RecognitionConfig{}.dot_presence;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw BrailleError("cannot read '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw BrailleError("cannot write '" + path + "'");
    }
}

std::string dictionary_path(const Options& o)
{
    if (!o.dict.empty()) {
        return o.dict;
    }
    if (auto env = default_dictionary_path()) {
        return *env;
    }
    return BRAILLE_DEFAULT_DICT;
}

Lexicon load_dictionary(const Options& o)
{
    return build_lexicon(load_frequency_list(dictionary_path(o)));
}

RecognitionConfig recognition_config(const Options& o)
{
    RecognitionConfig rc;
    rc.geometry = o.render;
    rc.dot_presence = o.dot_presence;
    return rc;
}

std::string rstrip(std::string s)
{
    while (!s.empty() && s.back() == ' ') {
        s.pop_back();
    }
    return s;
}

std::vector<std::string> split_lines(const std::string& text)
{
    std::vector<std::string> lines;
    std::stringstream ss(text);
    for (std::string line; std::getline(ss, line);) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        lines.push_back(line);
    }
    return lines;
}

int cmd_transcribe(const Options& o, const std::string& image, const std::string& out)
{
    const auto table = CodeTable::load(o.table);
    const auto img = pgm::read(image);
    const auto rec = recognize(img, table, recognition_config(o));
    if (rec.text.empty()) {
        std::cerr << "error: no braille lines found in '" << image << "'\n";
        return kExitNoLines;
    }
    std::string text;
    for (const auto& line : rec.text) {
        text += rstrip(utf8::encode(line)) + "\n";
    }
    write_text(out, text);
    std::cerr << "cells_total=" << rec.cells_total << " cells_failed=" << rec.cells_failed << "\n";
    return 0;
}

int cmd_revise(const Options& o, const std::string& input, const std::string& out, const std::string& method)
{
    const auto table = CodeTable::load(o.table);
    const auto lex = load_dictionary(o);
    std::optional<BrailleCorrector> ours;
    std::optional<BaselineCorrector> baseline;
    if (method == "ours") {
        ours.emplace(lex, table);
    } else {
        baseline.emplace(lex);
    }
    std::size_t changed = 0;
    std::size_t total = 0;
    std::string result;
    for (const auto& line : split_lines(read_file(input))) {
        std::vector<Word> words;
        std::stringstream ss(line);
        for (std::string w; ss >> w;) {
            words.push_back(to_lower(utf8::decode(w)));
        }
        std::vector<Word> fixed;
        if (ours) {
            auto rev = revise_text(words, *ours, o.threads);
            fixed = std::move(rev.tokens);
        } else {
            for (const auto& w : words) {
                fixed.push_back(baseline->correct(w));
            }
        }
        for (std::size_t i = 0; i < words.size(); ++i) {
            changed += fixed[i] != words[i] ? 1 : 0;
        }
        total += words.size();
        result += utf8::encode(join(fixed)) + "\n";
    }
    write_text(out, result);
    std::cerr << "words=" << total << " changed=" << changed << "\n";
    return 0;
}

int cmd_render(const Options& o, const std::string& input, const std::string& out, bool verbatim)
{
    o.render.validate();
    const auto table = CodeTable::load(o.table);
    const auto text = read_file(input);
    std::vector<Word> lines;
    if (verbatim) {
        for (const auto& line : split_lines(text)) {
            lines.push_back(to_lower(utf8::decode(line)));
        }
    } else {
        std::vector<Word> tokens;
        for (auto& t : tokenize_utf8(text)) {
            if (table.can_encode(t)) {
                tokens.push_back(std::move(t));
            }
        }
        lines = layout_pages(tokens, static_cast<std::size_t>(o.render.page_cells), SIZE_MAX).pages.front();
    }
    pgm::write(out, render(lines, table, o.render));
    return 0;
}

int cmd_corrupt(const Options& o, const std::string& input, const std::string& out, const std::string& noise,
                std::optional<double> percent)
{
    if (percent) {
        const auto table = CodeTable::load(o.table);
        std::string result;
        std::size_t t = 0;
        for (const auto& line : split_lines(read_file(input))) {
            std::vector<Word> words;
            for (auto& w : tokenize_utf8(line)) {
                Rng rng(derive_seed(o.seed, {0, t++}));
                words.push_back(inject_bit_errors(w, *percent, rng, table).word);
            }
            result += utf8::encode(join(words)) + "\n";
        }
        write_text(out, result);
        return 0;
    }
    if (noise.empty()) {
        throw InvalidParameter("corrupt needs --noise for images or --percent for text");
    }
    const auto spec = parse_noise_spec(noise, o.seed);
    pgm::write(out, apply_noise(pgm::read(input), spec, spec.seed));
    return 0;
}

std::string timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

int cmd_experiment(const Options& o, const std::string& which, const std::string& corpus, const std::string& out,
                   const std::vector<double>& percents, bool percents_given, const std::vector<std::string>& noise,
                   bool noise_given, std::size_t lines_per_page)
{
    const auto docs = load_corpus(corpus);
    const auto table = CodeTable::load(o.table);
    const auto lex = load_dictionary(o);
    Report report;
    if (which == "a") {
        ExperimentAConfig cfg;
        cfg.seed = o.seed;
        cfg.threads = o.threads;
        if (percents_given) {
            cfg.error_percents = percents;
        }
        report = run_experiment_a(cfg, docs, lex, table);
    } else {
        ExperimentBConfig cfg;
        cfg.render = o.render;
        cfg.recognition = recognition_config(o);
        cfg.threads = o.threads;
        cfg.lines_per_page = lines_per_page;
        cfg.noise_specs = default_noise_specs(o.seed);
        if (noise_given) {
            cfg.noise_specs.clear();
            for (const auto& n : noise) {
                cfg.noise_specs.push_back(parse_noise_spec(n, o.seed));
            }
        }
        report = run_experiment_b(cfg, docs, lex, table);
    }
    report.metadata["dictionary"] = dictionary_path(o);
    report.metadata["table"] = o.table;
    report.metadata["corpus"] = corpus;
    if (!out.empty()) {
        write_csv(out, report);
        nlohmann::json meta(report.metadata);
        meta["seed"] = o.seed;
        meta["timestamp"] = timestamp();
        write_text(out + ".meta.json", meta.dump(2) + "\n");
    }
    print_table(std::cout, report);
    std::cout << "timestamp: " << timestamp() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Braille transcription and braille-aware spelling correction"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Read options from a key = value file");

    Options o;
    app.add_option("--dict", o.dict, "Word frequency list (default: $BRAILLE_DICT, then the bundled list)");
    app.add_option("--table", o.table, "Braille code table")->capture_default_str();
    app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
    app.add_option("--threads", o.threads, "Worker threads")->capture_default_str();
    app.add_option("--dot-radius", o.render.dot_radius)->capture_default_str();
    app.add_option("--dot-pitch", o.render.dot_pitch)->capture_default_str();
    app.add_option("--cell-pitch-x", o.render.cell_pitch_x)->capture_default_str();
    app.add_option("--cell-pitch-y", o.render.cell_pitch_y)->capture_default_str();
    app.add_option("--margin", o.render.margin)->capture_default_str();
    app.add_option("--page-cells", o.render.page_cells, "Cells per line")->capture_default_str();
    app.add_option("--dot-presence", o.dot_presence, "Ink ratio that marks a raised dot")->capture_default_str();

    std::string input;
    std::string out;

    auto* transcribe = app.add_subcommand("transcribe", "Recognize a braille page image (PGM) into text");
    transcribe->add_option("image", input, "Input PGM image")->required();
    transcribe->add_option("--out,-o", out, "Output text file (default: stdout)");

    std::string method = "ours";
    auto* revise = app.add_subcommand("revise", "Correct every word of a text file");
    revise->add_option("text", input, "Input text")->required();
    revise->add_option("--out,-o", out, "Output text file (default: stdout)");
    revise->add_option("--method", method, "ours or baseline")
        ->check(CLI::IsMember({"ours", "baseline"}))
        ->capture_default_str();

    bool verbatim = false;
    auto* render_cmd = app.add_subcommand("render", "Render text as a braille page image (PGM)");
    render_cmd->add_option("text", input, "Input text")->required();
    render_cmd->add_option("--out,-o", out, "Output PGM")->required();
    render_cmd->add_flag("--verbatim", verbatim, "Render input lines as they are instead of re-wrapping tokens");

    std::string noise;
    std::optional<double> percent;
    auto* corrupt = app.add_subcommand("corrupt", "Add image noise to a PGM or bit errors to a text");
    corrupt->add_option("input", input, "Input PGM (with --noise) or text (with --percent)")->required();
    corrupt->add_option("--out,-o", out, "Output file")->required();
    corrupt->add_option("--noise", noise, "blur:<sigma> or spread:<pixels>[:seed]");
    corrupt->add_option("--percent", percent, "Percentage of dot bits to flip per word");

    std::string which;
    std::string corpus = BRAILLE_DEFAULT_CORPUS;
    std::vector<double> percents;
    std::vector<std::string> noise_list;
    std::size_t lines_per_page = ExperimentBConfig{}.lines_per_page;
    auto* experiment = app.add_subcommand("experiment", "Run experiment a (bit flips) or b (noisy images)");
    experiment->add_option("which", which, "a or b")->required()->check(CLI::IsMember({"a", "b"}));
    experiment->add_option("--corpus", corpus, "Directory of .txt files")->capture_default_str();
    experiment->add_option("--out,-o", out, "CSV report path");
    auto* percents_opt = experiment->add_option("--percents", percents, "Error percentages for experiment a")
                             ->delimiter(',');
    auto* noise_opt = experiment->add_option("--noise", noise_list, "Noise conditions for experiment b")
                          ->delimiter(',');
    experiment->add_option("--lines-per-page", lines_per_page)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (*transcribe) {
            return cmd_transcribe(o, input, out);
        }
        if (*revise) {
            return cmd_revise(o, input, out, method);
        }
        if (*render_cmd) {
            return cmd_render(o, input, out, verbatim);
        }
        if (*corrupt) {
            return cmd_corrupt(o, input, out, noise, percent);
        }
        return cmd_experiment(o, which, corpus, out, percents, percents_opt->count() > 0, noise_list,
                              noise_opt->count() > 0, lines_per_page);
    } catch (const NoLinesFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoLines;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const LineTooLong& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const CorruptionInfeasible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
