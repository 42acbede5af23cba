#ifndef SPECRIG_ERRORS_HPP
#define SPECRIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specrig {

// Invalid parameters or malformed input. CLI maps this to exit code 2.
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// Input file could not be parsed. Carries a 1-based line number when known.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, long line = -1)
        : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// A configured budget (size cap, rejection cap, iteration cap) was exceeded.
// CLI maps this to exit code 3.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solver failed to reach the requested residual.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace specrig

#endif
