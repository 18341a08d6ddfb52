#ifndef CDFDR_ERRORS_HPP_
#define CDFDR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cdfdr {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// An argument lies outside the mathematical domain of a function.
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

// A fitting routine received degenerate data or failed to converge.
class estimation_error : public error {
public:
    explicit estimation_error(const std::string& what) : error(what) {}
};

// File ingestion or serialization failure.
class io_error : public error {
public:
    explicit io_error(const std::string& what) : error(what) {}
};

} // namespace cdfdr

#endif // CDFDR_ERRORS_HPP_
