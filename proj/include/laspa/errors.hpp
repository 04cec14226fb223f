#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace laspa {

/// Base class for all numeric and usage errors thrown by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class EmptyRootList : public Error {
  public:
    EmptyRootList() : Error("root list must not be empty") {}
};

class ZeroLeadingCoefficient : public Error {
  public:
    ZeroLeadingCoefficient() : Error("leading coefficient must be nonzero") {}
};

class DegreeTooLow : public Error {
  public:
    DegreeTooLow(int degree, int required)
        : Error("degree " + std::to_string(degree) + " below required " +
                std::to_string(required)) {}
};

class RootAtShiftPoint : public Error {
  public:
    RootAtShiftPoint() : Error("shift point is a root; reciprocal sums undefined") {}
};

class NotASimpleRoot : public Error {
  public:
    NotASimpleRoot() : Error("derivative vanishes to working accuracy; root is not simple") {}
};

class SingularStep : public Error {
  public:
    SingularStep() : Error("both Laguerre denominators vanish") {}
};

class PoleAtRoot : public Error {
  public:
    PoleAtRoot() : Error("evaluation point coincides with a root") {}
};

class DegenerateSums : public Error {
  public:
    DegenerateSums() : Error("power sums carry no direction (equidistant roots); perturb the shift") {}
};

/// Thrown when the shift iteration exhausts its budget without entering a
/// certified disk. Carries the last shift value reached.
class SeedingFailed : public Error {
  public:
    explicit SeedingFailed(std::complex<double> last)
        : Error("seeding exhausted its shift budget"), last_estimate(last) {}

    std::complex<double> last_estimate;
};

/// Text parsing failure; `entry` is the 1-based index of the offending
/// list entry and `token` the text that failed to parse.
class ParseError : public Error {
  public:
    ParseError(std::size_t entry_index, std::string offending, const std::string& why)
        : Error("entry " + std::to_string(entry_index) + ": " + why + " ('" + offending + "')"),
          entry(entry_index),
          token(std::move(offending)) {}

    std::size_t entry;
    std::string token;
};

} // namespace laspa
