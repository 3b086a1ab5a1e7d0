#pragma once

#include <array>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "braille/cell.hpp"
#include "braille/errors.hpp"
#include "braille/utf8.hpp"

namespace braille {

class TableFormatError : public FormatError {
public:
    using FormatError::FormatError;
};

// Both apostrophe forms collapse to the ASCII apostrophe before lookup.
constexpr char32_t normalize_char(char32_t c) noexcept
{
    return c == U'`' ? U'\'' : c;
}

/// Bidirectional character <-> cell mapping.
///
/// Loaded from a text file with one `<char>\t<dots>` entry per line, dots
/// written as six 0/1 digits in order 1..6. `SPACE` names the blank cell,
/// which every table must map. Lines starting with `#` are comments.
/// Characters and cells must both be unique, so the mapping is a bijection
/// over its domain.
///
/// Unicode braille pattern characters (U+2800..U+283F) always encode to
/// their own cell. The recognizer emits them for cells the table does not
/// map, so those cells survive a round trip through plain text.
class CodeTable {
public:
    CodeTable() = default;

    static CodeTable parse(std::istream& in)
    {
        CodeTable t;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (line.empty() || line.front() == '#') {
                continue;
            }
            auto tab = line.find('\t');
            if (tab == std::string::npos) {
                throw TableFormatError("expected <char><TAB><dots>", lineno);
            }
            auto key = line.substr(0, tab);
            auto dots = line.substr(tab + 1);
            char32_t c = 0;
            if (key == "SPACE") {
                c = U' ';
            } else {
                auto cps = utf8::decode(key);
                if (cps.size() != 1) {
                    throw TableFormatError("table key must be a single character", lineno);
                }
                c = cps.front();
            }
            if (dots.size() != 6 || dots.find_first_not_of("01") != std::string::npos) {
                throw TableFormatError("dots must be six 0/1 digits", lineno);
            }
            std::uint8_t mask = 0;
            for (int d = 0; d < 6; ++d) {
                if (dots[d] == '1') {
                    mask |= static_cast<std::uint8_t>(1u << d);
                }
            }
            t.add(c, BrailleCell(mask), lineno);
        }
        if (!t.cell_to_char_[0] || *t.cell_to_char_[0] != U' ') {
            throw TableFormatError("table must map the blank cell to SPACE", lineno);
        }
        return t;
    }

    static CodeTable from_string(const std::string& text)
    {
        std::istringstream in(text);
        return parse(in);
    }

    static CodeTable load(const std::string& path)
    {
        std::ifstream in(path);
        if (!in) {
            throw BrailleError("cannot open code table '" + path + "'");
        }
        return parse(in);
    }

    std::optional<BrailleCell> try_encode(char32_t c) const
    {
        c = normalize_char(c);
        if (is_braille_pattern(c)) {
            return BrailleCell(static_cast<std::uint8_t>(c - 0x2800));
        }
        auto it = char_to_cell_.find(c);
        if (it == char_to_cell_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    BrailleCell encode(char32_t c, std::size_t index = 0) const
    {
        auto cell = try_encode(c);
        if (!cell) {
            throw UnmappedCharacter(c, index);
        }
        return *cell;
    }

    std::optional<char32_t> try_decode(BrailleCell cell) const { return cell_to_char_[cell.mask()]; }

    char32_t decode(BrailleCell cell, std::size_t index = 0) const
    {
        auto c = try_decode(cell);
        if (!c) {
            throw UnmappedCell(cell.mask(), index);
        }
        return *c;
    }

    bool maps(BrailleCell cell) const { return cell_to_char_[cell.mask()].has_value(); }

    bool can_encode(WordView w) const
    {
        for (auto c : w) {
            if (!try_encode(c)) {
                return false;
            }
        }
        return true;
    }

    void require_encodable(WordView w) const
    {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!try_encode(w[i])) {
                throw UnmappedCharacter(w[i], i);
            }
        }
    }

    std::vector<BrailleCell> cells(WordView w) const
    {
        std::vector<BrailleCell> out;
        out.reserve(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            out.push_back(encode(w[i], i));
        }
        return out;
    }

    Word decode_cells(std::span<const BrailleCell> cells) const
    {
        Word out;
        out.reserve(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out.push_back(decode(cells[i], i));
        }
        return out;
    }

    // Entries in character order.
    const std::map<char32_t, BrailleCell>& entries() const noexcept { return char_to_cell_; }
    std::size_t size() const noexcept { return char_to_cell_.size(); }

private:
    void add(char32_t c, BrailleCell cell, std::size_t lineno)
    {
        if (is_braille_pattern(c)) {
            throw TableFormatError("braille pattern characters are implicit", lineno);
        }
        if (char_to_cell_.count(c)) {
            throw TableFormatError("duplicate character", lineno);
        }
        if (cell_to_char_[cell.mask()]) {
            throw TableFormatError("duplicate cell " + cell.to_string(), lineno);
        }
        char_to_cell_.emplace(c, cell);
        cell_to_char_[cell.mask()] = c;
    }

    std::map<char32_t, BrailleCell> char_to_cell_;
    std::array<std::optional<char32_t>, BrailleCell::kPatterns> cell_to_char_{};
};

inline BrailleCell encode_char(char32_t c, const CodeTable& table)
{
    return table.encode(c);
}

inline char32_t decode_cell(BrailleCell cell, const CodeTable& table)
{
    return table.decode(cell);
}

/// Word -> flat dot vector, 6 bits per character in dot order 1..6.
inline BitVector beta(WordView word, const CodeTable& table)
{
    auto cells = table.cells(word);
    return BitVector::from_cells(cells);
}

/// Flat dot vector -> word. Every cell must be mapped by the table.
inline Word psi(const BitVector& vec, const CodeTable& table)
{
    Word out;
    out.reserve(vec.cell_count());
    for (std::size_t i = 0; i < vec.cell_count(); ++i) {
        out.push_back(table.decode(vec.cell(i), i));
    }
    return out;
}

} // namespace braille
