#pragma once

#include <stdexcept>
#include <string>

namespace tba {

/// Caller supplied an argument outside an operation's contract.
class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input: equations, model files, presentation files.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string & what, std::size_t where) :
        std::runtime_error(what),
        _where(where)
    {
    }

    /// Column (equations) or line (files), 1-based; 0 means end of input.
    auto where() const -> std::size_t { return _where; }

private:
    std::size_t _where;
};

/// A search ran out of its node or wall-clock allowance.
class BudgetExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace tba
