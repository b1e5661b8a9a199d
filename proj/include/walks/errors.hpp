#pragma once

#include <stdexcept>
#include <string>

namespace walks {

// Root of every error raised by the library. Each subclass names one
// contract violation so callers (and the CLI) can map them to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    // Throws an error of the same type with `context` prepended.
    [[noreturn]] virtual void rethrow_with(const std::string& context) const = 0;
};

#define WALKS_DECLARE_ERROR(Name)                                             \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what)                                \
            : Error(std::string(#Name ": ") + what) {}                        \
        [[noreturn]] void rethrow_with(const std::string& context) const override { \
            throw Name(context + ": " + std::string(what()).substr(sizeof(#Name) + 1)); \
        }                                                                     \
    }

WALKS_DECLARE_ERROR(SyntaxError);
WALKS_DECLARE_ERROR(NonCanonical);
WALKS_DECLARE_ERROR(NotLimit);
WALKS_DECLARE_ERROR(InvalidCode);
WALKS_DECLARE_ERROR(Overflow);
WALKS_DECLARE_ERROR(FuelExhausted);
WALKS_DECLARE_ERROR(OutOfRange);
WALKS_DECLARE_ERROR(AxiomViolation);
WALKS_DECLARE_ERROR(IterationCap);
WALKS_DECLARE_ERROR(BudgetExhausted);
WALKS_DECLARE_ERROR(RestrictionMissing);
WALKS_DECLARE_ERROR(ClubNotLimit);
WALKS_DECLARE_ERROR(NotPrimeValued);
WALKS_DECLARE_ERROR(HeightAboveBranch);
WALKS_DECLARE_ERROR(TreeFormatError);
WALKS_DECLARE_ERROR(EmptyAfterFilter);
WALKS_DECLARE_ERROR(UnknownSuite);
WALKS_DECLARE_ERROR(ConfigError);

#undef WALKS_DECLARE_ERROR

} // namespace walks
