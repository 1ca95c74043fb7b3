#pragma once

#include <stdexcept>
#include <string>

namespace ontoscope {

// Exit-code contract shared with the CLI:
//   0  success / verdict holds
//   2  analytic finding (mismatch, violated bound) -- not an exception
//   3  solver failure
//   64 usage, schema or precondition error
class Error : public std::runtime_error {
public:
    Error(const std::string& what, int exit_code = 64)
        : std::runtime_error(what), exit_code_(exit_code) {}

    int exit_code() const { return exit_code_; }

private:
    int exit_code_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error("domain error: " + what) {}
};

struct OverflowError : Error {
    explicit OverflowError(const std::string& what) : Error("overflow: " + what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct LabelMismatch : Error {
    explicit LabelMismatch(const std::string& what) : Error("label mismatch: " + what) {}
};

struct UnsupportedPair : Error {
    explicit UnsupportedPair(const std::string& what) : Error("unsupported pair: " + what) {}
};

struct SpaceMismatch : Error {
    explicit SpaceMismatch(const std::string& what) : Error("ontic space mismatch: " + what) {}
};

struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& what) : Error("arity mismatch: " + what) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error("shape mismatch: " + what) {}
};

// Carries the two conditioning contexts whose single-site marginals disagree.
class IllDefinedMarginal : public Error {
public:
    IllDefinedMarginal(const std::string& what, std::string context_a, std::string context_b)
        : Error("ill-defined marginal: " + what + " (contexts " + context_a + " vs " + context_b + ")"),
          context_a_(std::move(context_a)),
          context_b_(std::move(context_b)) {}

    const std::string& context_a() const { return context_a_; }
    const std::string& context_b() const { return context_b_; }

private:
    std::string context_a_, context_b_;
};

struct InvalidModel : Error {
    explicit InvalidModel(const std::string& what) : Error("invalid model: " + what) {}
};

struct NotProductForm : Error {
    explicit NotProductForm(const std::string& what) : Error("not product form: " + what) {}
};

struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& what) : Error("not symmetric: " + what) {}
};

struct SearchSpaceTooLarge : Error {
    explicit SearchSpaceTooLarge(const std::string& what) : Error("search space too large: " + what) {}
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& what) : Error("precondition failed: " + what) {}
};

class ParameterDependence : public Error {
public:
    ParameterDependence(const std::string& what, std::string context_a, std::string context_b)
        : Error("parameter dependence: " + what + " (contexts " + context_a + " vs " + context_b + ")"),
          context_a_(std::move(context_a)),
          context_b_(std::move(context_b)) {}

    const std::string& context_a() const { return context_a_; }
    const std::string& context_b() const { return context_b_; }

private:
    std::string context_a_, context_b_;
};

struct UndefinedPosterior : Error {
    explicit UndefinedPosterior(const std::string& what) : Error("undefined posterior: " + what) {}
};

struct NumericalBreakdown : Error {
    explicit NumericalBreakdown(const std::string& what)
        : Error("numerical breakdown: " + what, 3) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& what) : Error("schema error: " + what) {}
};

}  // namespace ontoscope
