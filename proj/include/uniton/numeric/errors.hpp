#pragma once

#include <stdexcept>
#include <string>

namespace uniton {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define UNITON_ERROR(Name)                                                   \
    struct Name : Error {                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}      \
    }

UNITON_ERROR(DivisionByZeroFunction);
UNITON_ERROR(PoleAtPoint);
UNITON_ERROR(PatternViolation);
UNITON_ERROR(RankDropAtPoint);
UNITON_ERROR(SplitFailure);
UNITON_ERROR(BadArguments);
UNITON_ERROR(OutOfRange);
UNITON_ERROR(InfeasiblePair);
UNITON_ERROR(StepTooLarge);
UNITON_ERROR(ParseError);

#undef UNITON_ERROR

}  // namespace uniton
