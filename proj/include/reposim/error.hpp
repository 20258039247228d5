#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reposim {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ingest
class UnreadableRoot : public Error {
public:
    explicit UnreadableRoot(const std::string& path)
        : Error("repository root is not a readable directory: " + path) {}
};

class NoReadmeFound : public Error {
public:
    explicit NoReadmeFound(const std::string& root)
        : Error("no README file at repository root: " + root) {}
};

class EmptySourceSet : public Error {
public:
    explicit EmptySourceSet(const std::string& root)
        : Error("no source files selected under: " + root) {}
};

class MalformedCommitLog : public Error {
public:
    MalformedCommitLog(std::size_t line_no, const std::string& why)
        : Error("malformed commit log at line " + std::to_string(line_no) + ": " + why),
          line_no_(line_no) {}
    std::size_t line_no() const noexcept { return line_no_; }

private:
    std::size_t line_no_;
};

class EmptyCommitLog : public Error {
public:
    explicit EmptyCommitLog(const std::string& path)
        : Error("commit log contains no records: " + path) {}
};

class CorpusFormatError : public Error {
public:
    explicit CorpusFormatError(const std::string& reason)
        : Error("corpus format error: " + reason) {}
};

// vsm / similarity
class EmptyVocabulary : public Error {
public:
    EmptyVocabulary() : Error("no document contributes any token") {}
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t a, std::size_t b)
        : Error("vector dimensions differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class EmptyMatrix : public Error {
public:
    EmptyMatrix() : Error("cannot aggregate a similarity matrix with zero cells") {}
};

class MissingArtifact : public Error {
public:
    MissingArtifact(const std::string& kind, const std::string& repo)
        : Error("artifact '" + kind + "' missing for repository '" + repo + "'"),
          kind_(kind), repo_(repo) {}
    const std::string& kind() const noexcept { return kind_; }
    const std::string& repo() const noexcept { return repo_; }

private:
    std::string kind_;
    std::string repo_;
};

class PairingMismatch : public Error {
public:
    explicit PairingMismatch(const std::string& why) : Error("report rows do not pair: " + why) {}
};

class ReportFormatError : public Error {
public:
    explicit ReportFormatError(const std::string& reason) : Error("report format error: " + reason) {}
};

// fixtures
class FixtureError : public Error {
public:
    FixtureError(const std::string& path, const std::string& why)
        : Error(why + ": " + path), path_(path) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace reposim
