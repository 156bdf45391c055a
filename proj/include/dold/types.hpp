#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dold {

// Values (Dold coefficients, multiplicities, polynomial and matrix entries)
// are arbitrary precision. Positions in a sequence (n, k, degrees) are
// machine integers.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Index = std::uint64_t;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Raised when an internal postcondition of an exact construction fails.
// Never caused by bad input: it signals an arithmetic bug.
class ConstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class HorizonError : public std::range_error {
public:
    using std::range_error::range_error;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
    if (boost::multiprecision::denominator(v) == 1)
        return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
}

inline bool is_integral(const Rational& v) { return boost::multiprecision::denominator(v) == 1; }

}  // namespace dold
