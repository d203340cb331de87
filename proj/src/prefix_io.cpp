#include <cctype>
#include <sstream>
#include <string>

#include "polyapprox/errors.hpp"
#include "polyapprox/prefix.hpp"

namespace polyapprox {

PolynomialPrefix make_integer_prefix(std::size_t degree, const std::vector<BigInt>& coeffs) {
    PolynomialPrefix p;
    p.degree = degree;
    p.known.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        p.known.push_back(ExactComplex{Rational(c), Rational(0)});
    }
    return p;
}

PolynomialPrefix make_rational_prefix(std::size_t degree, const std::vector<Rational>& coeffs) {
    PolynomialPrefix p;
    p.degree = degree;
    p.known.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        p.known.push_back(ExactComplex{c, Rational(0)});
    }
    return p;
}

PolynomialPrefix derivative_prefix(const PolynomialPrefix& p) {
    if (p.degree == 0) {
        throw ConstantPolynomial();
    }
    PolynomialPrefix d;
    d.degree = p.degree - 1;
    for (std::size_t k = 1; k < p.known.size(); ++k) {
        const Rational factor(k);
        d.known.push_back(ExactComplex{p.known[k].re * factor, p.known[k].im * factor});
    }
    return d;
}

// Exact decimal with optional sign, fraction and exponent: -12.375e-2 etc.
Rational parse_decimal(const std::string& token, std::size_t line) {
    std::size_t i = 0;
    bool negative = false;
    if (i < token.size() && (token[i] == '+' || token[i] == '-')) {
        negative = token[i] == '-';
        ++i;
    }
    BigInt mantissa = 0;
    long frac_digits = 0;
    bool any_digit = false;
    bool in_fraction = false;
    for (; i < token.size(); ++i) {
        const char c = token[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa = mantissa * 10 + (c - '0');
            any_digit = true;
            if (in_fraction) {
                ++frac_digits;
            }
        } else if (c == '.' && !in_fraction) {
            in_fraction = true;
        } else if (c == 'e' || c == 'E') {
            break;
        } else {
            throw ParseError("bad coefficient `" + token + "`", line);
        }
    }
    long exponent = 0;
    if (i < token.size()) {
        try {
            exponent = std::stol(token.substr(i + 1));
        } catch (const std::exception&) {
            throw ParseError("bad exponent in `" + token + "`", line);
        }
    }
    if (!any_digit) {
        throw ParseError("bad coefficient `" + token + "`", line);
    }
    Rational value(mantissa);
    const long net = exponent - frac_digits;
    const BigInt scale = pow(BigInt(10), static_cast<unsigned>(net < 0 ? -net : net));
    if (net < 0) {
        value /= Rational(scale);
    } else {
        value *= Rational(scale);
    }
    return negative ? -value : value;
}

PolynomialPrefix parse_coefficients(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    long n = -1, K = -1;
    PolynomialPrefix p;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n >> K) || n < 0 || K < 0 || K > n) {
                throw ParseError("expected header `n K` with K <= n", lineno);
            }
            p.degree = static_cast<std::size_t>(n);
            continue;
        }
        std::string a, b;
        ss >> a;
        if (a.empty()) {
            throw ParseError("expected a coefficient", lineno);
        }
        ExactComplex c;
        c.re = parse_decimal(a, lineno);
        if (ss >> b) {
            c.im = parse_decimal(b, lineno);
        }
        p.known.push_back(c);
        if (p.known.size() > static_cast<std::size_t>(K) + 1) {
            throw ParseError("more coefficients than the declared K+1", lineno);
        }
    }
    if (n < 0) {
        throw ParseError("empty coefficient file", lineno);
    }
    if (p.known.size() != static_cast<std::size_t>(K) + 1) {
        throw ParseError("fewer coefficients than the declared K+1", lineno);
    }
    return p;
}

}  // namespace polyapprox
