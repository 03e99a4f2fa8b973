#ifndef MAXMOD_ERRORS_HPP
#define MAXMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxmod {

/// A computation exceeded its sample or subdivision budget before reaching
/// the requested tolerance.  achievable_err reports the certified error the
/// budget would have allowed.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, double achievable_err)
        : std::runtime_error(what), achievable_err_(achievable_err) {}
    double achievable_err() const { return achievable_err_; }

private:
    double achievable_err_;
};

/// A polynomial failed the hypothesis check of the bound it was submitted to.
class ClassError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace maxmod

#endif // MAXMOD_ERRORS_HPP
