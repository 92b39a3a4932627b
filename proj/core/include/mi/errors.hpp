#ifndef MI_ERRORS_HPP
#define MI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mi {

// Machine-readable error codes; the CLI maps these onto exit codes.
enum class ErrorCode {
    AmbientMismatch,
    IndexOutOfRange,
    ZeroDivisor,
    ResourceLimit,
    Precondition,
    UnsupportedShape,
    Parse,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class AmbientMismatchError : public Error {
public:
    explicit AmbientMismatchError(const std::string& what = "ambient variable counts differ")
        : Error(ErrorCode::AmbientMismatch, what) {}
};

class IndexError : public Error {
public:
    explicit IndexError(const std::string& what = "variable index out of range")
        : Error(ErrorCode::IndexOutOfRange, what) {}
};

class ZeroDivisorError : public Error {
public:
    explicit ZeroDivisorError(const std::string& what = "colon by the zero ideal")
        : Error(ErrorCode::ZeroDivisor, what) {}
};

class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& what = "intermediate term cap exceeded")
        : Error(ErrorCode::ResourceLimit, what) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what)
        : Error(ErrorCode::Precondition, what) {}
};

class UnsupportedShapeError : public Error {
public:
    explicit UnsupportedShapeError(const std::string& what)
        : Error(ErrorCode::UnsupportedShape, what) {}
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error(ErrorCode::Parse, what), line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace mi

#endif
