#pragma once

// Exact scalar arithmetic with decidable sign: rationals, quadratic-field
// elements a + b*sqrt(D), and a certified-float fallback whose sign queries
// may return "uncertain" but are never silently wrong.

#include <gmpxx.h>
#include <mpfr.h>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace helly {

enum class Sign : int { negative = -1, zero = 0, positive = 1, uncertain = 2 };

inline Sign sign_of_int(int c) {
    return c > 0 ? Sign::positive : (c < 0 ? Sign::negative : Sign::zero);
}

inline Sign sign_mul(Sign a, Sign b) {
    if (a == Sign::uncertain || b == Sign::uncertain) {
        if (a == Sign::zero || b == Sign::zero) return Sign::zero;
        return Sign::uncertain;
    }
    return sign_of_int(static_cast<int>(a) * static_cast<int>(b));
}

inline Sign sign_negate(Sign a) {
    if (a == Sign::uncertain) return Sign::uncertain;
    return sign_of_int(-static_cast<int>(a));
}

inline bool sign_definite(Sign a) { return a != Sign::uncertain; }
inline const char* sign_name(Sign a) {
    switch (a) {
        case Sign::negative: return "-";
        case Sign::zero: return "0";
        case Sign::positive: return "+";
        default: return "uncertain";
    }
}

enum class Errc {
    backend_mismatch,
    division_by_zero,
    uncertain_divisor,
    dimension_mismatch,
    uncertain_predicate,
    facet_index_out_of_range,
    unbounded_region,
    rank_deficient,
    unknown_preset,
    arc_exhausted,
    not_convex_position,
    vertex_not_in_set,
    uncertain_verdict,
    patch_too_large,
    not_convex,
    degenerate_quad,
    segments_not_equal_parallel,
    family_too_large,
    invalid_config,
    parse_error,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// ---------------------------------------------------------------------------
// Rational: arbitrary-precision p/q, always canonical (q > 0, gcd = 1).

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) fail(Errc::division_by_zero, "Rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) fail(Errc::division_by_zero, "Rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    static Rational parse(std::string_view s);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Sign sign() const { return sign_of_int(sgn(v_)); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_), no_canon{}); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_), no_canon{}); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_), no_canon{}); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_), no_canon{}); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) fail(Errc::division_by_zero, "Rational division by zero");
        return Rational(mpq_class(v_ / o.v_), no_canon{});
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational abs() const { return sign() == Sign::negative ? -*this : *this; }
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }
    mpz_class ceil() const {
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    double to_double() const { return v_.get_d(); }
    std::string to_string() const;

private:
    struct no_canon {};
    Rational(mpq_class q, no_canon) : v_(std::move(q)) {}
    mpq_class v_;
};

// Largest rational r with small denominator such that r <= sqrt(x); exact via
// integer square roots. x must be >= 0.
Rational rational_sqrt_lower(const Rational& x, unsigned digits = 12);

// ---------------------------------------------------------------------------
// QuadScalar: a + b*sqrt(D) over Q, D square-free >= 2. D == 0 marks a value
// with no radical part (b must be 0 then); such values combine with any D.

class QuadScalar {
public:
    QuadScalar() : a_(0), b_(0), d_(0) {}
    QuadScalar(long n) : a_(n), b_(0), d_(0) {}
    QuadScalar(int n) : a_(n), b_(0), d_(0) {}
    QuadScalar(Rational a) : a_(std::move(a)), b_(0), d_(0) {}
    QuadScalar(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        check_d(d_);
        if (b_.is_zero()) d_ = 0;
        if (d_ == 0 && !b_.is_zero())
            fail(Errc::backend_mismatch, "QuadScalar radical part without a radicand");
    }

    static QuadScalar sqrt_d(long d) { return QuadScalar(Rational(0), Rational(1), d); }
    static QuadScalar parse(std::string_view s);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coeff() const { return b_; }
    long radicand() const { return d_; }
    bool is_rational() const { return d_ == 0; }

    Sign sign() const;
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadScalar operator-() const { return QuadScalar(-a_, -b_, d_, raw{}); }
    QuadScalar operator+(const QuadScalar& o) const {
        long d = joined_d(o);
        return QuadScalar(a_ + o.a_, b_ + o.b_, d, raw{});
    }
    QuadScalar operator-(const QuadScalar& o) const {
        long d = joined_d(o);
        return QuadScalar(a_ - o.a_, b_ - o.b_, d, raw{});
    }
    QuadScalar operator*(const QuadScalar& o) const {
        long d = joined_d(o);
        return QuadScalar(a_ * o.a_ + b_ * o.b_ * Rational(d == 0 ? 0 : d),
                          a_ * o.b_ + b_ * o.a_, d, raw{});
    }
    QuadScalar operator/(const QuadScalar& o) const;

    bool operator==(const QuadScalar& o) const { return (*this - o).is_zero(); }
    bool operator!=(const QuadScalar& o) const { return !(*this == o); }
    bool operator<(const QuadScalar& o) const { return (*this - o).sign() == Sign::negative; }
    bool operator<=(const QuadScalar& o) const { return (o - *this).sign() != Sign::negative; }
    bool operator>(const QuadScalar& o) const { return o < *this; }
    bool operator>=(const QuadScalar& o) const { return o <= *this; }

    QuadScalar abs() const { return sign() == Sign::negative ? -*this : *this; }
    mpz_class floor() const;
    mpz_class ceil() const { return -QuadScalar(-a_, -b_, d_, raw{}).floor(); }

    double to_double() const {
        return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_ == 0 ? 1 : d_));
    }
    std::string to_string() const;

    static void check_d(long d);

private:
    struct raw {};
    QuadScalar(Rational a, Rational b, long d, raw) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (b_.is_zero()) d_ = 0;
    }
    long joined_d(const QuadScalar& o) const {
        if (d_ != 0 && o.d_ != 0 && d_ != o.d_)
            fail(Errc::backend_mismatch, "QuadScalar radicand mismatch: sqrt(" +
                                             std::to_string(d_) + ") vs sqrt(" + std::to_string(o.d_) + ")");
        return d_ != 0 ? d_ : o.d_;
    }
    Rational a_, b_;
    long d_;
};

// ---------------------------------------------------------------------------
// CertFloat: MPFR ball arithmetic. The true value always lies within
// [value - radius, value + radius]; sign queries straddling zero report
// Sign::uncertain. radius == 0 together with value == 0 is the exact-zero
// marker.

class CertFloat {
public:
    CertFloat();
    CertFloat(long n);
    CertFloat(int n);
    CertFloat(const CertFloat& o);
    CertFloat(CertFloat&& o) noexcept;
    CertFloat& operator=(const CertFloat& o);
    CertFloat& operator=(CertFloat&& o) noexcept;
    ~CertFloat();

    static unsigned default_precision() { return default_prec_.load(); }
    static void set_default_precision(unsigned bits);

    static CertFloat from_rational(const Rational& q);
    static CertFloat from_decimal(std::string_view s, double radius = -1.0);
    // cos(pi * t) / sin(pi * t) with a certified error radius.
    static CertFloat cos_pi(const Rational& t);
    static CertFloat sin_pi(const Rational& t);

    Sign sign() const;
    bool is_zero() const { return sign() == Sign::zero; }
    double radius() const { return radius_; }
    bool is_exact() const { return radius_ == 0.0; }

    CertFloat operator-() const;
    CertFloat operator+(const CertFloat& o) const;
    CertFloat operator-(const CertFloat& o) const;
    CertFloat operator*(const CertFloat& o) const;
    CertFloat operator/(const CertFloat& o) const;
    CertFloat abs() const;

    bool operator==(const CertFloat& o) const { return (*this - o).sign() == Sign::zero; }
    bool operator<(const CertFloat& o) const { return (*this - o).sign() == Sign::negative; }

    // Conservative integer bounds: floor_lower() <= floor(true value),
    // ceil_upper() >= ceil(true value). Used for saturated enumeration boxes.
    long floor_lower() const;
    long ceil_upper() const;

    double to_double() const;
    std::string to_string() const;         // decimal value only
    std::string radius_to_string() const;  // decimal radius

private:
    static std::atomic<unsigned> default_prec_;
    void bump_radius_ulp(int ternary);
    mpfr_t v_;
    double radius_ = 0.0;
};

// ---------------------------------------------------------------------------
// Scalar: the runtime one-of used at I/O and CLI boundaries. Geometric code
// is templated on a concrete backend and never mixes them.

using ScalarVariant = std::variant<Rational, QuadScalar, CertFloat>;

class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(Rational r) : v_(std::move(r)) {}
    Scalar(QuadScalar q) : v_(std::move(q)) {}
    Scalar(CertFloat c) : v_(std::move(c)) {}

    const ScalarVariant& value() const { return v_; }
    const char* backend_name() const;

    template <typename T>
    const T* get_if() const { return std::get_if<T>(&v_); }

private:
    ScalarVariant v_;
};

enum class ArithOp { add, sub, mul, div };

Sign scalar_sign(const Scalar& x);
Scalar scalar_arith(const Scalar& x, const Scalar& y, ArithOp op);

// Generic helpers so templated geometry can treat all backends uniformly.
inline Sign sgn_of(const Rational& x) { return x.sign(); }
inline Sign sgn_of(const QuadScalar& x) { return x.sign(); }
inline Sign sgn_of(const CertFloat& x) { return x.sign(); }

template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* name = "rational";
};
template <>
struct scalar_traits<QuadScalar> {
    static constexpr bool exact = true;
    static constexpr const char* name = "quadratic";
};
template <>
struct scalar_traits<CertFloat> {
    static constexpr bool exact = false;
    static constexpr const char* name = "certfloat";
};

std::string scalar_to_string(const Scalar& s);
Scalar scalar_parse(std::string_view s);  // "p/q" or "a+b*sqrt(D)"

}  // namespace helly
