#ifndef GOLDENSUM_ERRORS_HPP
#define GOLDENSUM_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace goldensum {

// Thrown when a kernel argument falls inside the pole exclusion radius.
// Carries the offending position (mod 1, signed) and, when raised inside a
// summation loop, the 1-based term index.
class pole_error : public std::domain_error {
public:
    pole_error(double x, std::int64_t index = -1)
        : std::domain_error(index >= 0
              ? "pole proximity at x=" + std::to_string(x) + " (term k=" + std::to_string(index) + ")"
              : "pole proximity at x=" + std::to_string(x)),
          x_(x), index_(index) {}

    double x() const noexcept { return x_; }
    std::int64_t index() const noexcept { return index_; }

private:
    double x_;
    std::int64_t index_;
};

// Requested computation cannot be carried out at the given precision.
class precision_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace goldensum

#endif
