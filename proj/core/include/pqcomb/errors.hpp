#pragma once

#include <stdexcept>
#include <string>

namespace pqcomb {

// Base for every domain error raised by the library. The CLI maps these
// to exit status 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PQCOMB_ERROR(Name)                                                   \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

PQCOMB_ERROR(ParameterOrdering);
PQCOMB_ERROR(DegenerateDeformation);
PQCOMB_ERROR(NegativeArgument);
PQCOMB_ERROR(DivisionByZeroFactor);
PQCOMB_ERROR(NonInvertibleSeries);
PQCOMB_ERROR(DomainViolation);
PQCOMB_ERROR(NonTerminatingSeries);
PQCOMB_ERROR(InconsistentMoments);
PQCOMB_ERROR(ParseError);

#undef PQCOMB_ERROR

}  // namespace pqcomb
