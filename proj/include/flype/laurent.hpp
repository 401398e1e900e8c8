#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace flype {

// Integer-coefficient Laurent polynomial in one variable.  Zero coefficients
// are never stored.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(std::int64_t constant);
    static LaurentPolynomial monomial(std::int64_t coeff, int exponent);

    std::int64_t coeff(int exponent) const;
    const std::map<int, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_exponent() const;  // 0 for the zero polynomial
    int max_exponent() const;

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }

    LaurentPolynomial shifted(int by) const;  // multiply by t^by
    std::int64_t evaluate(std::int64_t t) const;  // exponents must be >= min; t^neg allowed only for t = +-1
    bool palindromic() const;  // coeff(s) == coeff(-s) for all s

    // sorted "exponent:coefficient" pairs, e.g. "-1:1 0:-1 1:1"
    std::string to_string() const;
    static LaurentPolynomial parse(const std::string& text);

private:
    void set(int exponent, std::int64_t value);
    std::map<int, std::int64_t> terms_;
};

}  // namespace flype
