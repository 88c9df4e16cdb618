#pragma once

#include <stdexcept>
#include <string>

namespace graphbench {

// Bad arguments, malformed configs, out-of-range endpoints.
class invalid_input_error : public std::invalid_argument {
public:
    explicit invalid_input_error(const std::string& what) : std::invalid_argument(what) {}
};

// File-level failures; message carries the offending path.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed file contents; message carries path and line number.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, size_t line) : std::runtime_error(what), line_(line) {}
    size_t line() const { return line_; }

private:
    size_t line_;
};

} // namespace graphbench
