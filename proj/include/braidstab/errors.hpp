#ifndef BRAIDSTAB_ERRORS_HPP
#define BRAIDSTAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braidstab {

struct NumericDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integrator inner-solve failure; carries the time and residual at failure.
struct IntegratorError : std::runtime_error {
    double t = 0.0;
    double residual = 0.0;
    IntegratorError(const std::string& msg, double t_, double res)
        : std::runtime_error(msg), t(t_), residual(res) {}
};

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedClassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ClassMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SamplingResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two strands closer than the collision radius at a common time.
struct CollisionError : std::runtime_error {
    int strand_a = -1;
    int strand_b = -1;
    double t = 0.0;
    CollisionError(const std::string& msg, int a, int b, double t_)
        : std::runtime_error(msg), strand_a(a), strand_b(b), t(t_) {}
};

// Non-generic projection (tangency or simultaneous coincidence).
struct GenericityError : std::runtime_error {
    double t = 0.0;
    GenericityError(const std::string& msg, double t_) : std::runtime_error(msg), t(t_) {}
};

struct TransversalityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace braidstab

#endif
