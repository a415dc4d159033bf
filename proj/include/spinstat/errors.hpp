#pragma once

#include <stdexcept>
#include <string>

namespace spinstat {

/// Two radicals whose ratio is not a rational square were added in the
/// single-radical representation.
class IncommensurableRadicals : public std::domain_error {
public:
    explicit IncommensurableRadicals(const std::string& what)
        : std::domain_error(what) {}
};

class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what)
        : std::invalid_argument(what) {}
};

class IndexOutOfRange : public std::out_of_range {
public:
    explicit IndexOutOfRange(const std::string& what)
        : std::out_of_range(what) {}
};

}  // namespace spinstat
