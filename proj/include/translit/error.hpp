#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace translit {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file. Carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
public:
    ParseError(std::string source, std::size_t line, const std::string& what)
        : Error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
          source_(std::move(source)), line_(line) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string source_;
    std::size_t line_;
};

/// A precondition on caller-supplied data was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Raised by align_word. `position` is the index of the source character
/// at which the search gave up (see aligner.hpp).
class AlignmentError : public Error {
public:
    enum class Kind { NoAlignment, UnknownSourceChar };

    AlignmentError(Kind kind, std::size_t position, const std::string& what)
        : Error(what), kind_(kind), position_(position) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

class TrainingError : public Error {
public:
    enum class Kind { EmptyTrainingSet, InconsistentFeatureWidth, AllPairsUnalignable };

    TrainingError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class WidthMismatch : public Error {
public:
    using Error::Error;
};

class ModelFormatError : public Error {
public:
    enum class Kind { VersionMismatch, Corrupt };

    ModelFormatError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class DirectionMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace translit
