#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypercover
{
    /// Base class for every error raised by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// An argument violates an operation's precondition.
    class InvalidArgument : public Error
    {
    public:
        using Error::Error;
    };

    /// A generator's parameters are infeasible. The message names the violated constraint.
    class PreconditionViolation : public InvalidArgument
    {
    public:
        using InvalidArgument::InvalidArgument;
    };

    /// An exact computation was asked to run beyond its configured vertex cap.
    class LimitExceeded : public Error
    {
    public:
        using Error::Error;
    };

    class ParseError : public Error
    {
    public:
        ParseError(const std::string & message, std::size_t line) :
            Error("line " + std::to_string(line) + ": " + message),
            _line(line)
        {
        }

        auto line() const -> std::size_t { return _line; }

    private:
        std::size_t _line;
    };
}
