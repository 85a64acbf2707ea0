#ifndef SINCOV_ERRORS_HPP
#define SINCOV_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "sincov/ids.hpp"

namespace sincov
{

// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class UnknownIndex : public Error
{
public:
    explicit UnknownIndex(IndexId index)
        : Error("unknown index '" + index.str() + "'"), index_(std::move(index))
    {
    }

    IndexId const& index() const noexcept { return index_; }

private:
    IndexId index_;
};

// Malformed external input (JSON documents, rational literals, descriptors).
class ParseError : public Error
{
public:
    using Error::Error;
};

} // namespace sincov

#endif // SINCOV_ERRORS_HPP
