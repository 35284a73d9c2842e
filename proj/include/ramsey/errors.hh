/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_ERRORS_HH
#define RAMSEY_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace ramsey
{
    /// Precondition or domain violation in an argument.
    class InvalidArgument : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// A size guard was exceeded (order bounds, vertex caps, pattern sizes).
    class SizeExceeded : public std::length_error
    {
        public:
            using std::length_error::length_error;
    };

    /// A search ran out of its node budget before reaching a decision.
    class BudgetExhausted : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Malformed graph or certificate file; what() carries the line number.
    class FormatError : public std::runtime_error
    {
        public:
            FormatError(const std::string & source, unsigned line, const std::string & message) :
                std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
                _line(line)
            {
            }

            auto line() const -> unsigned
            {
                return _line;
            }

        private:
            unsigned _line;
    };
}

#endif
