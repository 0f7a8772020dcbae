#include "bkb/scalar.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace bkb {

namespace {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; divisor is monic.
ZPoly divide_exact(const ZPoly& num, const ZPoly& den) {
    ZPoly rem = num;
    std::size_t dn = den.size() - 1;
    if (rem.size() < den.size()) throw std::logic_error("divide_exact: degree");
    ZPoly q(rem.size() - dn, 0);
    for (std::size_t k = rem.size(); k-- > dn;) {
        mpz_class t = rem[k];
        if (t == 0) continue;
        q[k - dn] = t;
        for (std::size_t j = 0; j <= dn; ++j) rem[k - dn + j] -= t * den[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::logic_error("divide_exact: nonzero remainder");
    trim(q);
    return q;
}

const ZPoly& cyclotomic(int M) {
    static std::map<int, ZPoly> memo;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(M);
        if (it != memo.end()) return it->second;
    }
    ZPoly p(static_cast<std::size_t>(M) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(M)] = 1;
    for (int d = 1; d < M; ++d)
        if (M % d == 0) p = divide_exact(p, cyclotomic(d));
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(M, std::move(p)).first->second;
}

// Minimal polynomial of 2cos(pi/N) for N >= 3, from Phi_{2N}(z) = z^d P(z + 1/z).
ZPoly minpoly_2cos(int N) {
    const ZPoly& phi = cyclotomic(2 * N);
    std::size_t d = (phi.size() - 1) / 2;
    // C_k with C_k(z + 1/z) = z^k + z^-k.
    std::vector<ZPoly> C(d + 1);
    C[0] = ZPoly{2};
    if (d >= 1) C[1] = ZPoly{0, 1};
    for (std::size_t k = 2; k <= d; ++k) {
        ZPoly next(k + 1, 0);
        for (std::size_t j = 0; j < C[k - 1].size(); ++j) next[j + 1] += C[k - 1][j];
        for (std::size_t j = 0; j < C[k - 2].size(); ++j) next[j] -= C[k - 2][j];
        C[k] = next;
    }
    ZPoly P(d + 1, 0);
    P[0] = phi[d];
    for (std::size_t k = 1; k <= d; ++k)
        for (std::size_t j = 0; j < C[k].size(); ++j) P[j] += phi[d + k] * C[k][j];
    return P;
}

mpz_class rational_hash_part(const Rational& q) {
    return q.get_num() * 1000003 + q.get_den();
}

}  // namespace

std::string rational_str(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Field

const Field& Field::get(int N) {
    if (N <= 2) N = 2;
    static std::map<int, std::unique_ptr<Field>> registry;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(N);
    if (it != registry.end()) return *it->second;
    auto* f = new Field(N);
    registry.emplace(N, std::unique_ptr<Field>(f));
    return *f;
}

Field::Field(int N) : N_(N) {
    if (N == 2) {
        minpoly_ = ZPoly{0, 1};
    } else {
        minpoly_ = minpoly_2cos(N);
    }
    d_ = static_cast<int>(minpoly_.size()) - 1;

    mpfr_t pi, z, p;
    mpfr_inits2(160, pi, z, p, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_div_si(z, pi, N, MPFR_RNDN);
    mpfr_cos(z, z, MPFR_RNDN);
    mpfr_mul_ui(z, z, 2, MPFR_RNDN);
    mpfr_set_ui(p, 1, MPFR_RNDN);
    for (int k = 0; k < d_; ++k) {
        zpow_d_.push_back(mpfr_get_d(p, MPFR_RNDN));
        mpfr_mul(p, p, z, MPFR_RNDN);
    }
    mpfr_clears(pi, z, p, static_cast<mpfr_ptr>(nullptr));
}

bool Field::contains_order(int M) const {
    if (M <= 2) return true;
    return N_ % M == 0;
}

std::vector<Rational> Field::reduce(std::vector<Rational> c) const {
    std::size_t d = static_cast<std::size_t>(d_);
    for (std::size_t k = c.size(); k-- > d;) {
        if (c[k] == 0) continue;
        Rational t = c[k];
        for (std::size_t j = 0; j < d; ++j)
            if (minpoly_[j] != 0) c[k - d + j] -= t * minpoly_[j];
        c[k] = 0;
    }
    c.resize(d);
    return c;
}

int Field::sign_of(const std::vector<Rational>& c) const {
    bool zero = true;
    for (const auto& q : c)
        if (q != 0) {
            zero = false;
            break;
        }
    if (zero) return 0;
    if (d_ == 1) return sgn(c[0]);

    // Floating estimate with a rigorous-enough forward error bound.
    double s = 0.0, mag = 0.0;
    bool ok = true;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        double ck = c[k].get_d();
        if (!std::isfinite(ck) || ck == 0.0) {
            ok = false;
            break;
        }
        double t = ck * zpow_d_[k];
        s += t;
        mag += std::fabs(t);
    }
    if (ok) {
        double bound = mag * (2.0 * d_ + 8.0) * std::ldexp(1.0, -52);
        if (std::fabs(s) > bound && std::isfinite(s)) return s > 0 ? 1 : -1;
    }
    return sign_mpfr(c);
}

int Field::sign_mpfr(const std::vector<Rational>& c) const {
    for (mpfr_prec_t prec = 256; prec <= (1 << 18); prec *= 2) {
        mpfr_t pi, z, p, t, s, mag, bound;
        mpfr_inits2(prec + 32, pi, z, p, t, s, mag, bound, static_cast<mpfr_ptr>(nullptr));
        mpfr_const_pi(pi, MPFR_RNDN);
        mpfr_div_si(z, pi, N_, MPFR_RNDN);
        mpfr_cos(z, z, MPFR_RNDN);
        mpfr_mul_ui(z, z, 2, MPFR_RNDN);
        mpfr_set_ui(p, 1, MPFR_RNDN);
        mpfr_set_ui(s, 0, MPFR_RNDN);
        mpfr_set_ui(mag, 0, MPFR_RNDN);
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] != 0) {
                mpfr_mul_q(t, p, c[k].get_mpq_t(), MPFR_RNDN);
                mpfr_add(s, s, t, MPFR_RNDN);
                mpfr_abs(t, t, MPFR_RNDN);
                mpfr_add(mag, mag, t, MPFR_RNDN);
            }
            mpfr_mul(p, p, z, MPFR_RNDN);
        }
        // Each term carries O(k + d) roundings at precision prec + 32.
        mpfr_mul_ui(bound, mag, static_cast<unsigned long>(4 * d_ + 16), MPFR_RNDU);
        mpfr_mul_2si(bound, bound, -static_cast<long>(prec), MPFR_RNDU);
        int result = 0;
        mpfr_abs(t, s, MPFR_RNDN);
        if (mpfr_cmp(t, bound) > 0) result = mpfr_sgn(s);
        mpfr_clears(pi, z, p, t, s, mag, bound, static_cast<mpfr_ptr>(nullptr));
        if (result != 0) return result;
    }
    throw std::runtime_error("sign: precision limit reached");
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() : f_(&Field::rationals()), c_(1, Rational(0)) {}
Scalar::Scalar(long v) : f_(&Field::rationals()), c_(1, Rational(v)) {}
Scalar::Scalar(const Rational& q) : f_(&Field::rationals()), c_(1, q) {}

Scalar::Scalar(const Field& f, const Rational& q)
    : f_(&f), c_(static_cast<std::size_t>(f.degree()), Rational(0)) {
    c_[0] = q;
}

Scalar::Scalar(const Field& f, std::vector<Rational> coeffs) : f_(&f) {
    if (coeffs.size() > static_cast<std::size_t>(f.degree()))
        c_ = f.reduce(std::move(coeffs));
    else {
        c_ = std::move(coeffs);
        c_.resize(static_cast<std::size_t>(f.degree()), Rational(0));
    }
}

Scalar Scalar::generator(const Field& f) {
    std::vector<Rational> c(2, Rational(0));
    c[1] = 1;
    return Scalar(f, std::move(c));
}

bool Scalar::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

Rational Scalar::rational_value() const {
    if (!is_rational()) throw std::domain_error("Scalar is not rational");
    return c_[0];
}

double Scalar::approx() const {
    double s = 0.0;
    for (std::size_t k = 0; k < c_.size(); ++k) s += c_[k].get_d() * f_->z_approx(static_cast<int>(k));
    return s;
}

Scalar Scalar::bring(const Scalar& o) {
    if (f_ == o.f_) return o;
    if (o.is_rational()) return Scalar(*f_, o.c_[0]);
    if (f_->contains_order(o.f_->order())) return embed(o, *f_);
    if (o.f_->contains_order(f_->order())) {
        *this = embed(*this, *o.f_);
        return o;
    }
    throw std::invalid_argument("Scalar: incompatible fields Q(cos(pi/" + std::to_string(f_->order()) +
                                ")) and Q(cos(pi/" + std::to_string(o.f_->order()) + "))");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.f_ != f_ && o.is_rational()) {
        c_[0] += o.c_[0];
        return *this;
    }
    Scalar e = bring(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += e.c_[k];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (o.f_ != f_ && o.is_rational()) {
        const Rational& q = o.c_[0];
        for (auto& x : c_) x *= q;
        return *this;
    }
    Scalar e = bring(o);
    std::size_t d = c_.size();
    if (d == 1) {
        c_[0] *= e.c_[0];
        return *this;
    }
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (e.c_[j] != 0) prod[i + j] += c_[i] * e.c_[j];
    }
    c_ = f_->reduce(std::move(prod));
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    std::size_t d = c_.size();
    if (d == 1) return Scalar(*f_, Rational(1) / c_[0]);
    // Solve (multiplication-by-this matrix) * y = e_0 over Q.
    std::vector<std::vector<Rational>> A(d, std::vector<Rational>(d + 1, Rational(0)));
    Scalar basis = Scalar(*f_, Rational(1));
    Scalar z = generator(*f_);
    for (std::size_t j = 0; j < d; ++j) {
        Scalar col = *this * basis;
        for (std::size_t i = 0; i < d; ++i) A[i][j] = col.c_[i];
        basis *= z;
    }
    A[0][d] = 1;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && A[piv][col] == 0) ++piv;
        if (piv == d) throw std::logic_error("Scalar::inverse: singular");
        std::swap(A[piv], A[col]);
        Rational inv = Rational(1) / A[col][col];
        for (std::size_t k = col; k <= d; ++k) A[col][k] *= inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rational f = A[r][col];
            for (std::size_t k = col; k <= d; ++k) A[r][k] -= f * A[col][k];
        }
    }
    std::vector<Rational> y(d);
    for (std::size_t i = 0; i < d; ++i) y[i] = A[i][d];
    return Scalar(*f_, std::move(y));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_rational()) {
        if (o.c_[0] == 0) throw std::domain_error("Scalar: division by zero");
        Rational inv = Rational(1) / o.c_[0];
        for (auto& x : c_) x *= inv;
        return *this;
    }
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.f_ == b.f_) return a.c_ == b.c_;
    return (a - b).is_zero();
}

std::size_t Scalar::hash() const {
    // Hash the value, not the field: rationals must hash alike in every field.
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    std::size_t top = c_.size();
    while (top > 1 && c_[top - 1] == 0) --top;
    if (top > 1) h ^= static_cast<std::size_t>(f_->order()) * 0x100000001b3ULL;
    for (std::size_t k = 0; k < top; ++k) {
        mpz_class v = rational_hash_part(c_[k]);
        std::size_t limb = mpz_size(v.get_mpz_t()) ? mpz_getlimbn(v.get_mpz_t(), 0) : 0;
        h ^= (limb + static_cast<std::size_t>(mpz_sgn(v.get_mpz_t()) + 2) + (h << 6) + (h >> 2));
    }
    return h;
}

std::string Scalar::str() const {
    if (is_rational()) return rational_str(c_[0]);
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& q = c_[k];
        if (q == 0) continue;
        std::string mono = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
        std::string term;
        if (k == 0)
            term = rational_str(q);
        else if (q == 1)
            term = mono;
        else if (q == -1)
            term = "-" + mono;
        else
            term = rational_str(q) + "*" + mono;
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

// ---------------------------------------------------------------- free functions

Scalar cos_pi_multiple(const Field& f, long j) {
    long twoN = 2L * f.order();
    j %= twoN;
    if (j < 0) j += twoN;
    if (j > f.order()) j = twoN - j;  // cos is even about 0 and about N
    Scalar z = Scalar::generator(f);
    if (f.order() == 2 && f.degree() == 1) z = Scalar(f, Rational(0));
    // C_j(z) = 2cos(j*pi/N).
    Scalar prev(f, Rational(2)), cur = z;
    if (j == 0) return Scalar(f, Rational(1));
    for (long k = 1; k < j; ++k) {
        Scalar next = z * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur * Scalar(Rational(1, 2));
}

Scalar cos_pi_over(int m, const Field& f) {
    if (m < 1) throw std::invalid_argument("cos_pi_over: m must be >= 2");
    if (m == 1) return Scalar(f, Rational(-1));
    if (m == 2) return Scalar(f, Rational(0));
    if (!f.contains_order(m))
        throw std::invalid_argument("cos_pi_over: cos(pi/" + std::to_string(m) + ") is not in Q(cos(pi/" +
                                    std::to_string(f.order()) + "))");
    return cos_pi_multiple(f, f.order() / m);
}

Scalar cos_pi_over(int m) {
    if (m < 2) throw std::invalid_argument("cos_pi_over: m must be >= 2");
    return cos_pi_over(m, Field::get(m));
}

Scalar sine_ratio(int m, long k, const Field& f) {
    if (m < 2) throw std::invalid_argument("sine_ratio: m must be >= 2");
    long period = 2L * m;
    k %= period;
    if (k < 0) k += period;
    Scalar y = cos_pi_over(m, f) * Scalar(2);
    // S_{k-1}(y) with S_{-1} = 0, S_0 = 1, S_{j+1} = y S_j - S_{j-1}.
    Scalar prev(f, Rational(0)), cur(f, Rational(1));
    if (k == 0) return prev;
    for (long j = 1; j < k; ++j) {
        Scalar next = y * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Scalar embed(const Scalar& s, const Field& target) {
    const Field& src = s.field();
    if (&src == &target) return s;
    if (s.is_rational()) return Scalar(target, s.coeffs()[0]);
    if (!target.contains_order(src.order()))
        throw std::invalid_argument("embed: Q(cos(pi/" + std::to_string(src.order()) + ")) not in Q(cos(pi/" +
                                    std::to_string(target.order()) + "))");
    long k = target.order() / src.order();
    Scalar z1 = cos_pi_multiple(target, k) * Scalar(2);
    Scalar acc(target, Rational(0));
    const auto& c = s.coeffs();
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * z1 + Scalar(target, c[j]);
    return acc;
}

namespace {

long legendre(long a, long p) {
    long r = 1, base = ((a % p) + p) % p, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : (r == 0 ? 0 : -1);
}

// squarefree part and square root of the square part
void split_square(unsigned long n, unsigned long& sq, std::vector<unsigned long>& primes) {
    sq = 1;
    primes.clear();
    for (unsigned long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) sq *= p;
        if (e % 2) primes.push_back(p);
    }
    if (n > 1) primes.push_back(n);
}

int prime_sqrt_order(unsigned long p) {
    if (p == 2) return 4;
    if (p % 4 == 1) return static_cast<int>(p);
    return static_cast<int>(2 * p);
}

}  // namespace

int sqrt_rational_order(const Rational& q) {
    if (q < 0) throw std::domain_error("sqrt of negative rational");
    mpz_class n = q.get_num() * q.get_den();
    if (!n.fits_ulong_p()) throw std::domain_error("sqrt_rational: operand too large");
    unsigned long sq;
    std::vector<unsigned long> primes;
    split_square(n.get_ui(), sq, primes);
    int N = 2;
    for (auto p : primes) N = std::lcm(N, prime_sqrt_order(p));
    return N;
}

bool sqrt_rational(const Rational& q, const Field& f, Scalar& out) {
    if (q < 0) return false;
    if (q == 0) {
        out = Scalar(f, Rational(0));
        return true;
    }
    mpz_class n = q.get_num() * q.get_den();
    if (!n.fits_ulong_p()) return false;
    unsigned long sq;
    std::vector<unsigned long> primes;
    split_square(n.get_ui(), sq, primes);
    Rational base(mpz_class(sq), q.get_den());
    base.canonicalize();
    Scalar r(f, base);
    for (auto p : primes) {
        int need = prime_sqrt_order(p);
        if (f.order() % need != 0) return false;
        long N = f.order();
        Scalar root(f, Rational(0));
        if (p == 2) {
            root = cos_pi_over(4, f) * Scalar(2);
        } else if (p % 4 == 1) {
            for (long a = 1; a < static_cast<long>(p); ++a)
                root += Scalar(legendre(a, static_cast<long>(p))) *
                        cos_pi_multiple(f, 2 * a * N / static_cast<long>(p));
        } else {
            long P = static_cast<long>(p);
            for (long a = 1; a < P; ++a) root += Scalar(legendre(a, P)) * cos_pi_multiple(f, (P - 4 * a) * N / (2 * P));
        }
        r *= root;
    }
    if (r * r != Scalar(f, q) || r.sign() < 0) throw std::logic_error("sqrt_rational: self-check failed");
    out = r;
    return true;
}

Scalar parse_scalar(const std::string& text, const Field& f) {
    std::string s;
    for (char ch : text)
        if (ch != ' ') s += ch;
    if (s.empty()) throw std::invalid_argument("parse_scalar: empty");
    std::vector<Rational> coeffs(static_cast<std::size_t>(f.degree()), Rational(0));
    std::vector<Rational> extra;
    std::size_t i = 0;
    auto fail = [&]() { throw std::invalid_argument("parse_scalar: cannot parse '" + text + "'"); };
    while (i < s.size()) {
        int sgn_ = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sgn_ = -1;
            ++i;
        }
        std::size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        Rational c(1);
        if (i > start) {
            c = Rational(s.substr(start, i - start));
            c.canonicalize();
        }
        std::size_t power = 0;
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && s[i] == 'z') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t ps = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == ps) fail();
                power = std::stoul(s.substr(ps, i - ps));
            }
        } else if (i == start) {
            fail();
        }
        if (i < s.size() && s[i] != '+' && s[i] != '-') fail();
        if (power >= extra.size()) extra.resize(power + 1, Rational(0));
        extra[power] += sgn_ * c;
    }
    if (extra.size() > 1 && f.degree() == 1 && f.order() == 2) {
        // z = 0 in the rational field
        extra.resize(1);
    }
    return Scalar(f, std::move(extra));
}

}  // namespace bkb
