#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "braille/utf8.hpp"

namespace braille {

class BrailleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnmappedCharacter : public BrailleError {
public:
    UnmappedCharacter(char32_t c, std::size_t index)
        : BrailleError("character '" + utf8::encode(c) + "' at index " + std::to_string(index)
                       + " has no braille cell"),
          character(c), index(index)
    {
    }

    char32_t character;
    std::size_t index;
};

class UnmappedCell : public BrailleError {
public:
    UnmappedCell(unsigned mask, std::size_t index)
        : BrailleError("braille cell " + std::to_string(index) + " (mask " + std::to_string(mask)
                       + ") has no character"),
          mask(mask), index(index)
    {
    }

    unsigned mask;
    std::size_t index;
};

class LengthNotMultipleOfSix : public BrailleError {
public:
    explicit LengthNotMultipleOfSix(std::size_t n)
        : BrailleError("bit vector length " + std::to_string(n) + " is not a multiple of 6")
    {
    }
};

class LengthMismatch : public BrailleError {
public:
    LengthMismatch(std::size_t a, std::size_t b)
        : BrailleError("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b))
    {
    }
};

class FormatError : public BrailleError {
public:
    FormatError(const std::string& what, std::size_t line)
        : BrailleError(what + " (line " + std::to_string(line) + ")"), line(line)
    {
    }

    std::size_t line;
};

class MalformedLine : public FormatError {
public:
    explicit MalformedLine(std::size_t line) : FormatError("malformed frequency-list line", line) {}
};

class NonNumericFrequency : public FormatError {
public:
    explicit NonNumericFrequency(std::size_t line) : FormatError("non-numeric frequency", line) {}
};

class CorruptionInfeasible : public BrailleError {
public:
    using BrailleError::BrailleError;
};

class NoLinesFound : public BrailleError {
public:
    NoLinesFound() : BrailleError("no braille lines found in image") {}
};

class LineTooLong : public BrailleError {
public:
    LineTooLong(std::size_t line, std::size_t cells, std::size_t max_cells)
        : BrailleError("line " + std::to_string(line) + " has " + std::to_string(cells)
                       + " cells, page fits " + std::to_string(max_cells))
    {
    }
};

class InvalidParameter : public BrailleError {
public:
    using BrailleError::BrailleError;
};

} // namespace braille
