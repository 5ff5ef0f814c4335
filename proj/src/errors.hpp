#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace knowtemp {

// Coarse failure classes; the C API and the CLI exit codes map onto these
// (validation -> 1, numeric -> 2).
enum class ErrorKind {
    validation,
    numeric,
    io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct ValidationError : Error {
    explicit ValidationError(std::string m) : Error(ErrorKind::validation, std::move(m)) {}
};

struct NumericalError : Error {
    explicit NumericalError(std::string m) : Error(ErrorKind::numeric, std::move(m)) {}
};

struct IoError : Error {
    explicit IoError(std::string m) : Error(ErrorKind::io, std::move(m)) {}
};

struct EmptySnapshotError : ValidationError {
    explicit EmptySnapshotError(std::string m) : ValidationError(std::move(m)) {}
};

struct NodeNotFoundError : ValidationError {
    explicit NodeNotFoundError(std::string m) : ValidationError(std::move(m)) {}
};

struct SnapshotOrderError : ValidationError {
    explicit SnapshotOrderError(std::string m) : ValidationError(std::move(m)) {}
};

struct DegenerateTopicError : ValidationError {
    explicit DegenerateTopicError(std::string m) : ValidationError(std::move(m)) {}
};

// |dS| below tolerance in the structural temperature; callers record 0.
struct EntropyStagnantError : ValidationError {
    explicit EntropyStagnantError(std::string m) : ValidationError(std::move(m)) {}
};

struct AllColdTopicError : ValidationError {
    explicit AllColdTopicError(std::string m) : ValidationError(std::move(m)) {}
};

struct NoHistoryError : ValidationError {
    explicit NoHistoryError(std::string m) : ValidationError(std::move(m)) {}
};

}  // namespace knowtemp
