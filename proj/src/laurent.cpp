#include "flype/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace flype {

LaurentPolynomial::LaurentPolynomial(std::int64_t constant) {
    set(0, constant);
}

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t coeff, int exponent) {
    LaurentPolynomial p;
    p.set(exponent, coeff);
    return p;
}

void LaurentPolynomial::set(int exponent, std::int64_t value) {
    if (value == 0)
        terms_.erase(exponent);
    else
        terms_[exponent] = value;
}

std::int64_t LaurentPolynomial::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

int LaurentPolynomial::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPolynomial::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (auto [e, c] : o.terms_) r.set(e, r.coeff(e) + c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (auto [e, c] : o.terms_) r.set(e, r.coeff(e) - c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r;
    for (auto [e1, c1] : terms_)
        for (auto [e2, c2] : o.terms_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r;
    for (auto [e, c] : terms_) r.set(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int by) const {
    LaurentPolynomial r;
    for (auto [e, c] : terms_) r.set(e + by, c);
    return r;
}

std::int64_t LaurentPolynomial::evaluate(std::int64_t t) const {
    std::int64_t acc = 0;
    for (auto [e, c] : terms_) {
        std::int64_t p = 1;
        if (e >= 0) {
            for (int i = 0; i < e; ++i) p *= t;
        } else {
            if (t != 1 && t != -1)
                throw std::domain_error("negative exponents need t = +-1");
            p = (t == -1 && (e & 1)) ? -1 : 1;
        }
        acc += c * p;
    }
    return acc;
}

bool LaurentPolynomial::palindromic() const {
    for (auto [e, c] : terms_)
        if (coeff(-e) != c) return false;
    return true;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0:0";
    std::ostringstream out;
    bool first = true;
    for (auto [e, c] : terms_) {
        if (!first) out << ' ';
        out << e << ':' << c;
        first = false;
    }
    return out.str();
}

LaurentPolynomial LaurentPolynomial::parse(const std::string& text) {
    LaurentPolynomial p;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("expected exponent:coefficient");
        int e = std::stoi(tok.substr(0, colon));
        std::int64_t c = std::stoll(tok.substr(colon + 1));
        p.set(e, p.coeff(e) + c);
    }
    return p;
}

}  // namespace flype
