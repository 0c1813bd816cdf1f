#include "pqcomb/scalar.hpp"

#include "pqcomb/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <cstring>

namespace pqcomb {

Scalar pow(const Scalar& base, long exponent)
{
    if (exponent == 0) return Scalar(1);
    if (exponent < 0) {
        if (base == 0) throw DivisionByZeroFactor("zero raised to a negative power");
        Scalar inverse = 1 / base;
        return pow(inverse, -exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    // Powers of a reduced fraction stay reduced with a positive denominator.
    Scalar result;
    mpq_set_num(result.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(result.get_mpq_t(), den.get_mpz_t());
    return result;
}

Scalar classical_binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) return Scalar(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Scalar(r);
}

Scalar classical_factorial(long n)
{
    if (n < 0) throw NegativeArgument("factorial of " + std::to_string(n));
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Scalar(r);
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Scalar parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("not a rational literal: '" + std::string(text) + "'");
    mpz_class n{std::string(num), 10};
    mpz_class d{std::string(den), 10};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Scalar r(n, d);
    r.canonicalize();
    return negative ? Scalar(-r) : r;
}

std::string to_string(const Scalar& value)
{
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Scalar relative_error(const Scalar& a, const Scalar& b)
{
    Scalar diff = abs(a - b);
    if (a == 0) return diff;
    return diff / abs(a);
}

bool within_relative(const Scalar& a, const Scalar& b, const Scalar& tol)
{
    return relative_error(a, b) <= tol;
}

Scalar parse_decimal(std::string_view text)
{
    std::string s(text);
    if (s.empty()) throw ParseError("empty decimal");
    long exponent = 0;
    auto e = s.find_first_of("eE");
    if (e != std::string::npos) {
        std::string ex = s.substr(e + 1);
        char* end = nullptr;
        exponent = std::strtol(ex.c_str(), &end, 10);
        if (ex.empty() || *end != '\0') throw ParseError("bad exponent in '" + s + "'");
        s = s.substr(0, e);
    }
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    auto dot = s.find('.');
    std::string digits = s;
    if (dot != std::string::npos) {
        digits = s.substr(0, dot) + s.substr(dot + 1);
        exponent -= static_cast<long>(s.size() - dot - 1);
    }
    if (!all_digits(digits)) throw ParseError("not a decimal: '" + std::string(text) + "'");
    Scalar r{mpz_class(digits, 10)};
    r *= pow(Scalar(10), exponent);
    return negative ? Scalar(-r) : r;
}

std::string to_decimal(const Scalar& value, int digits)
{
    if (digits < 1) digits = 1;
    // 64 bits beyond the requested digits keeps the last printed digit exact.
    mpf_class f(value, static_cast<mp_bitcnt_t>(digits * 4 + 64));
    char* out = nullptr;
    int len = gmp_asprintf(&out, "%.*Fe", digits - 1, f.get_mpf_t());
    std::string s = len >= 0 ? std::string(out, static_cast<std::size_t>(len)) : std::string();
    void (*free_fn)(void*, std::size_t);
    mp_get_memory_functions(nullptr, nullptr, &free_fn);
    if (out) free_fn(out, std::strlen(out) + 1);
    return s;
}

}  // namespace pqcomb
