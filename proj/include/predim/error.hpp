#ifndef PREDIM_ERROR_HPP
#define PREDIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace predim {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input file rejected; carries file name and 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::string file, long line, const std::string& reason)
        : Error(file + ":" + std::to_string(line) + ": " + reason),
          file_(std::move(file)), line_(line), reason_(reason) {}

    const std::string& file() const { return file_; }
    long line() const { return line_; }
    const std::string& reason() const { return reason_; }

private:
    std::string file_;
    long line_;
    std::string reason_;
};

/// An operation's contract was violated by its arguments.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A configured search cap or node budget was exceeded.
class BudgetError : public Error {
public:
    using Error::Error;
};

} // namespace predim

#endif
