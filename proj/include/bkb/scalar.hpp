#pragma once

// Exact arithmetic in the real cyclotomic field Q(cos(pi/N)).
//
// Elements are stored as rational coefficient vectors in the power basis of
// z = 2cos(pi/N), reduced modulo the minimal polynomial of z.  One Field object
// exists per N (interned), so Scalars compare by pointer + coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace bkb {

using Rational = mpq_class;

class Field {
public:
    // Interned; N <= 2 all map to the rational field.
    static const Field& get(int N);
    static const Field& rationals() { return get(2); }

    int order() const { return N_; }
    int degree() const { return d_; }
    bool is_rational() const { return d_ == 1; }

    // Monic minimal polynomial of z, lowest degree first (size degree()+1).
    const std::vector<mpz_class>& minimal_polynomial() const { return minpoly_; }

    // True iff Q(cos(pi/M)) embeds in this field, i.e. M divides N (or M <= 2).
    bool contains_order(int M) const;

    double z_approx(int k) const { return zpow_d_[static_cast<std::size_t>(k)]; }

    // Reduce a coefficient vector of arbitrary length modulo the minimal polynomial.
    std::vector<Rational> reduce(std::vector<Rational> c) const;

    int sign_of(const std::vector<Rational>& c) const;

private:
    explicit Field(int N);
    int sign_mpfr(const std::vector<Rational>& c) const;

    int N_;
    int d_;
    std::vector<mpz_class> minpoly_;
    std::vector<double> zpow_d_;
};

class Scalar {
public:
    Scalar();  // zero of Q
    Scalar(long v);  // NOLINT: rational constants convert implicitly
    Scalar(const Rational& q);  // NOLINT
    Scalar(const Field& f, const Rational& q);
    Scalar(const Field& f, std::vector<Rational> coeffs);

    // z = 2cos(pi/N) of the field.
    static Scalar generator(const Field& f);

    const Field& field() const { return *f_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    int sign() const { return f_->sign_of(c_); }
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()
    double approx() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    bool operator<(const Scalar& o) const { return (*this - o).sign() < 0; }
    bool operator>(const Scalar& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const Scalar& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const Scalar& o) const { return (*this - o).sign() >= 0; }

    std::size_t hash() const;

    // Exact text form: a rational "p/q", or a polynomial in z such as "1/2+z-3*z^2".
    std::string str() const;

private:
    // Returns o expressed in this->field(); may first move *this into o's larger field.
    Scalar bring(const Scalar& o);
    const Field* f_;
    std::vector<Rational> c_;
};

// The same algebraic number viewed in a larger field (its order must divide target's).
Scalar embed(const Scalar& s, const Field& target);

// cos(pi/m) in the smallest field that holds it.
Scalar cos_pi_over(int m);
// cos(pi/m) inside f; requires f.contains_order(m).
Scalar cos_pi_over(int m, const Field& f);
// cos(j*pi/N) for the field's own N and any integer j.
Scalar cos_pi_multiple(const Field& f, long j);
// sin(k*pi/m)/sin(pi/m) inside f, any integer k.
Scalar sine_ratio(int m, long k, const Field& f);

// sqrt(q) for rational q >= 0 if it lies in f.
bool sqrt_rational(const Rational& q, const Field& f, Scalar& out);
// Smallest N such that sqrt(q) lies in Q(cos(pi/N)).
int sqrt_rational_order(const Rational& q);

Scalar parse_scalar(const std::string& text, const Field& f);

std::string rational_str(const Rational& q);

struct ScalarHash {
    std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

}  // namespace bkb
