#pragma once

#include <stdexcept>
#include <string>

namespace surfcomp {

// Every failure the library reports carries a stable kind name so the CLI
// can map it to an exit code and tests can match on it.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define SURFCOMP_ERROR(Name)                                        \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& msg = "") : Error(#Name, msg) {} \
  };

SURFCOMP_ERROR(WitnessTooCoarse)
SURFCOMP_ERROR(BasisMismatch)
SURFCOMP_ERROR(NotNegativeDefinite)
SURFCOMP_ERROR(WeightBelowTwo)
SURFCOMP_ERROR(NotAChain)
SURFCOMP_ERROR(NotATree)
SURFCOMP_ERROR(DegenerateMQ)
SURFCOMP_ERROR(NotSNC)
SURFCOMP_ERROR(IrrationalCoefficient)
SURFCOMP_ERROR(NotLC)
SURFCOMP_ERROR(InvalidProximity)
SURFCOMP_ERROR(EmptyGamma)
SURFCOMP_ERROR(SearchBudgetExceeded)
SURFCOMP_ERROR(Infeasible)
SURFCOMP_ERROR(NotRComplementary)
SURFCOMP_ERROR(UnrealizablePattern)
SURFCOMP_ERROR(LinearityFailsAtDelta)
SURFCOMP_ERROR(NotEpsLC)
SURFCOMP_ERROR(NoCertificateFound)
SURFCOMP_ERROR(ValidationError)

#undef SURFCOMP_ERROR

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : Error("ParseError", std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace surfcomp
