#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace dgram {

// Dense univariate polynomial over Q in the indeterminate x. Coefficients are
// ascending and trimmed, so the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(long c);  // NOLINT: constants convert implicitly
    Poly(const mpz_class& c);
    Poly(const mpq_class& c);
    explicit Poly(std::vector<mpq_class> ascending);

    static Poly x() { return monomial(1); }
    static Poly monomial(std::size_t degree, const mpq_class& coeff = 1);
    // x - c
    static Poly linear_root(const mpq_class& c);

    const std::vector<mpq_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    mpq_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
    mpq_class leading_coeff() const { return c_.empty() ? mpq_class(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_integral() const;

    mpq_class eval(const mpq_class& q) const;
    // Exact evaluation at an integer point when every coefficient is integral.
    mpz_class eval_integral(const mpz_class& z) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const mpq_class& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const mpq_class& s) { return a *= s; }
    friend Poly operator*(const mpq_class& s, Poly a) { return a *= s; }
    Poly operator-() const;
    Poly pow(std::size_t e) const;

    // Quotient and remainder by a nonzero divisor.
    void divmod(const Poly& divisor, Poly& quot, Poly& rem) const;

    // Descending human form: "x^4-2*x^3-4*x^2+5*x+8", rationals as "3/2*x".
    std::string str() const;
    // Ascending decimal strings, rationals as "p/q".
    std::vector<std::string> to_strings() const;
    static Poly from_strings(const std::vector<std::string>& ascending);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<mpq_class> c_;
};

// prod_{j<r1} (x^2 - x - 2(s1+j)) * prod_{l<r2} (x - (s2+l)); zero if r1 or r2 < 0.
Poly phi_z2(long s1, long s2, long r1, long r2);
// prod_{l<r} (x - (s+l)); zero if r < 0.
Poly phi_partition(long s, long r);

}  // namespace dgram
