#ifndef SCL_ERROR_HPP
#define SCL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace scl {

// Library-wide exception. `what()` carries the offending quantity where the
// caller needs it (ordinate of a bad integrand sample, missing prime, ...).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace scl

#endif
