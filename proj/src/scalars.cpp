#include "helly/scalars.hpp"

#include <algorithm>
#include <cfloat>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <sstream>

namespace helly {

// ---------------------------------------------------------------------------
// Rational

Rational Rational::parse(std::string_view s) {
    std::string t(s);
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty()) fail(Errc::parse_error, "empty rational literal");
    mpq_class q;
    if (q.set_str(t, 10) != 0) fail(Errc::parse_error, "bad rational literal: " + std::string(s));
    if (q.get_den() == 0) fail(Errc::division_by_zero, "zero denominator: " + std::string(s));
    q.canonicalize();
    return Rational(q);
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational rational_sqrt_lower(const Rational& x, unsigned digits) {
    if (x.sign() == Sign::negative) fail(Errc::internal, "sqrt of negative rational");
    if (x.is_zero()) return Rational(0);
    // sqrt(p/q) = sqrt(p*q)/q; lower-bound sqrt(p*q) by isqrt of a scaled value.
    mpz_class p = x.numerator(), q = x.denominator();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 2 * digits);
    mpz_class n = p * q * scale;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());  // floor(sqrt(n))
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, digits);
    return Rational(r, q * den);
}

// ---------------------------------------------------------------------------
// QuadScalar

void QuadScalar::check_d(long d) {
    if (d == 0) return;
    if (d < 2) fail(Errc::backend_mismatch, "radicand must be >= 2, got " + std::to_string(d));
    for (long f = 2; f * f <= d; ++f) {
        if (d % (f * f) == 0)
            fail(Errc::backend_mismatch, "radicand must be square-free, got " + std::to_string(d));
    }
}

Sign QuadScalar::sign() const {
    Sign sa = a_.sign(), sb = b_.sign();
    if (sb == Sign::zero) return sa;
    if (sa == Sign::zero) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 * D. Equality is impossible for
    // square-free D >= 2 with a, b nonzero.
    Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
    Sign c = (lhs - rhs).sign();
    if (c == Sign::zero) fail(Errc::internal, "sqrt(D) rational; D not square-free?");
    return c == Sign::positive ? sa : sb;
}

QuadScalar QuadScalar::operator/(const QuadScalar& o) const {
    if (o.is_zero()) fail(Errc::division_by_zero, "QuadScalar division by zero");
    long d = joined_d(o);
    Rational dr(d == 0 ? 0 : d);
    Rational denom = o.a_ * o.a_ - o.b_ * o.b_ * dr;
    // (a + b r) / (c + e r) = (a + b r)(c - e r) / (c^2 - e^2 D)
    QuadScalar conj(o.a_, -o.b_, d, raw{});
    QuadScalar num = *this * conj;
    return QuadScalar(num.a_ / denom, num.b_ / denom, d, raw{});
}

mpz_class QuadScalar::floor() const {
    if (d_ == 0 || b_.is_zero()) return a_.floor();
    // Start from a double estimate, then fix up with exact comparisons.
    double est = to_double();
    mpz_class n(std::floor(est));
    auto value_minus = [&](const mpz_class& m) {
        return QuadScalar(a_ - Rational(m, mpz_class(1)), b_, d_, raw{});
    };
    while (value_minus(n).sign() == Sign::negative) n -= 1;
    while (value_minus(n + 1).sign() != Sign::negative) n += 1;
    return n;
}

std::string QuadScalar::to_string() const {
    if (d_ == 0) return a_.to_string();
    std::string bs = b_.to_string();
    std::string out = a_.to_string();
    if (!bs.empty() && bs[0] == '-') {
        out += "-";
        bs = bs.substr(1);
    } else {
        out += "+";
    }
    return out + bs + "*sqrt(" + std::to_string(d_) + ")";
}

QuadScalar QuadScalar::parse(std::string_view sv) {
    std::string t(sv);
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
    auto pos = t.find("sqrt(");
    if (pos == std::string::npos) return QuadScalar(Rational::parse(t));
    auto close = t.find(')', pos);
    if (close == std::string::npos) fail(Errc::parse_error, "unbalanced sqrt(): " + std::string(sv));
    long d = 0;
    {
        std::string ds = t.substr(pos + 5, close - pos - 5);
        auto [p, ec] = std::from_chars(ds.data(), ds.data() + ds.size(), d);
        if (ec != std::errc() || p != ds.data() + ds.size())
            fail(Errc::parse_error, "bad radicand: " + ds);
    }
    // forms: "a+b*sqrt(D)", "a-b*sqrt(D)", "b*sqrt(D)", "sqrt(D)", "-sqrt(D)"
    std::string head = t.substr(0, pos);  // ends with "b*" or "-", "+", ""
    if (!head.empty() && head.back() == '*') head.pop_back();
    // Split head into a-part and b-part at the last top-level '+'/'-' that is
    // not a leading sign and not inside the b literal's own sign.
    std::string a_str = "0", b_str = head;
    for (size_t i = head.size(); i-- > 1;) {
        if (head[i] == '+' || head[i] == '-') {
            if (head[i - 1] == '/' || head[i - 1] == '+' || head[i - 1] == '-') continue;
            a_str = head.substr(0, i);
            b_str = head.substr(i);  // keeps the sign
            break;
        }
    }
    if (b_str.empty() || b_str == "+") b_str = "1";
    else if (b_str == "-") b_str = "-1";
    return QuadScalar(Rational::parse(a_str), Rational::parse(b_str), d);
}

// ---------------------------------------------------------------------------
// CertFloat

std::atomic<unsigned> CertFloat::default_prec_{100};

void CertFloat::set_default_precision(unsigned bits) {
    if (bits < 24 || bits > 10000) fail(Errc::invalid_config, "precision out of range");
    default_prec_.store(bits);
}

CertFloat::CertFloat() {
    mpfr_init2(v_, default_prec_.load());
    mpfr_set_zero(v_, 1);
}

CertFloat::CertFloat(long n) {
    mpfr_init2(v_, default_prec_.load());
    int t = mpfr_set_si(v_, n, MPFR_RNDN);
    bump_radius_ulp(t);
}

CertFloat::CertFloat(int n) : CertFloat(static_cast<long>(n)) {}

CertFloat::CertFloat(const CertFloat& o) : radius_(o.radius_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

CertFloat::CertFloat(CertFloat&& o) noexcept : radius_(o.radius_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

CertFloat& CertFloat::operator=(const CertFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        radius_ = o.radius_;
    }
    return *this;
}

CertFloat& CertFloat::operator=(CertFloat&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        radius_ = o.radius_;
    }
    return *this;
}

CertFloat::~CertFloat() { mpfr_clear(v_); }

namespace {
// 1 ulp of x at its own precision, as an upward-rounded double; 0 for exact 0.
double ulp_of(const mpfr_t x) {
    if (mpfr_zero_p(x)) return DBL_MIN;
    long e = mpfr_get_exp(x);
    long p = mpfr_get_prec(x);
    double u = std::ldexp(1.0, static_cast<int>(std::max(e - p, -1000L)));
    return u;
}
// |x| as an upward-rounded double.
double abs_upper(const mpfr_t x, double radius) {
    double a = std::fabs(mpfr_get_d(x, MPFR_RNDA));
    return a * (1.0 + 4 * DBL_EPSILON) + radius;
}
double inflate(double r) { return r == 0.0 ? 0.0 : r * (1.0 + 8 * DBL_EPSILON) + DBL_MIN; }
}  // namespace

void CertFloat::bump_radius_ulp(int ternary) {
    if (ternary != 0) radius_ = inflate(radius_ + ulp_of(v_));
}

CertFloat CertFloat::from_rational(const Rational& q) {
    CertFloat r;
    int t = mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
    r.bump_radius_ulp(t);
    return r;
}

CertFloat CertFloat::from_decimal(std::string_view s, double radius) {
    CertFloat r;
    std::string t(s);
    int rc = mpfr_set_str(r.v_, t.c_str(), 10, MPFR_RNDN);
    if (rc != 0) fail(Errc::parse_error, "bad decimal literal: " + t);
    r.radius_ = ulp_of(r.v_);
    if (radius >= 0.0) r.radius_ = inflate(r.radius_ + radius);
    return r;
}

CertFloat CertFloat::cos_pi(const Rational& t) {
    CertFloat r;
    mpfr_prec_t work = default_prec_.load() + 48;
    mpfr_t pi, arg, res;
    mpfr_inits2(work, pi, arg, res, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_mul_q(arg, pi, t.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_cos(res, arg, MPFR_RNDN);
    int tern = mpfr_set(r.v_, res, MPFR_RNDN);
    (void)tern;
    // Internal steps carry a few ulps at working precision plus the argument
    // error scaled by |sin| <= 1; both are dominated by 4 ulps at the output
    // precision as long as |t| stays modest, with a generous absolute floor.
    double argmag = std::max(1.0, std::fabs(mpfr_get_d(arg, MPFR_RNDA)));
    r.radius_ = inflate(4 * ulp_of(r.v_) + argmag * std::ldexp(1.0, -static_cast<int>(work) + 8));
    mpfr_clears(pi, arg, res, static_cast<mpfr_ptr>(nullptr));
    return r;
}

CertFloat CertFloat::sin_pi(const Rational& t) {
    CertFloat r;
    mpfr_prec_t work = default_prec_.load() + 48;
    mpfr_t pi, arg, res;
    mpfr_inits2(work, pi, arg, res, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_mul_q(arg, pi, t.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_sin(res, arg, MPFR_RNDN);
    mpfr_set(r.v_, res, MPFR_RNDN);
    double argmag = std::max(1.0, std::fabs(mpfr_get_d(arg, MPFR_RNDA)));
    r.radius_ = inflate(4 * ulp_of(r.v_) + argmag * std::ldexp(1.0, -static_cast<int>(work) + 8));
    mpfr_clears(pi, arg, res, static_cast<mpfr_ptr>(nullptr));
    return r;
}

Sign CertFloat::sign() const {
    int s = mpfr_sgn(v_);
    if (radius_ == 0.0) return sign_of_int(s);
    // |v| > radius decides the sign; compare via a downward-rounded double.
    double lo = std::fabs(mpfr_get_d(v_, MPFR_RNDZ)) * (1.0 - 4 * DBL_EPSILON);
    if (lo > radius_) return sign_of_int(s);
    return Sign::uncertain;
}

CertFloat CertFloat::operator-() const {
    CertFloat r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

CertFloat CertFloat::operator+(const CertFloat& o) const {
    CertFloat r;
    mpfr_set_prec(r.v_, std::max(mpfr_get_prec(v_), mpfr_get_prec(o.v_)));
    int t = mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    r.radius_ = inflate(radius_ + o.radius_);
    r.bump_radius_ulp(t);
    return r;
}

CertFloat CertFloat::operator-(const CertFloat& o) const {
    CertFloat r;
    mpfr_set_prec(r.v_, std::max(mpfr_get_prec(v_), mpfr_get_prec(o.v_)));
    int t = mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    r.radius_ = inflate(radius_ + o.radius_);
    r.bump_radius_ulp(t);
    return r;
}

CertFloat CertFloat::operator*(const CertFloat& o) const {
    CertFloat r;
    mpfr_set_prec(r.v_, std::max(mpfr_get_prec(v_), mpfr_get_prec(o.v_)));
    int t = mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    double ax = abs_upper(v_, 0.0), ay = abs_upper(o.v_, 0.0);
    r.radius_ = inflate(ax * o.radius_ + ay * radius_ + radius_ * o.radius_);
    r.bump_radius_ulp(t);
    return r;
}

CertFloat CertFloat::operator/(const CertFloat& o) const {
    Sign so = o.sign();
    if (so == Sign::zero) fail(Errc::division_by_zero, "CertFloat division by zero");
    if (so == Sign::uncertain) fail(Errc::uncertain_divisor, "CertFloat divisor straddles zero");
    CertFloat r;
    mpfr_set_prec(r.v_, std::max(mpfr_get_prec(v_), mpfr_get_prec(o.v_)));
    int t = mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    double ay_lo = std::fabs(mpfr_get_d(o.v_, MPFR_RNDZ)) * (1.0 - 4 * DBL_EPSILON) - o.radius_;
    double ax = abs_upper(v_, radius_);
    // |x/y - v1/v2| <= (r1*|v2| + |v1|*r2) / (|v2| * (|v2| - r2))
    double num = radius_ * abs_upper(o.v_, 0.0) + ax * o.radius_;
    r.radius_ = inflate(num / (std::max(ay_lo, DBL_MIN) * std::max(ay_lo, DBL_MIN) / (1.0 + 4 * DBL_EPSILON)));
    r.bump_radius_ulp(t);
    return r;
}

CertFloat CertFloat::abs() const {
    CertFloat r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

long CertFloat::floor_lower() const {
    double d = mpfr_get_d(v_, MPFR_RNDD) - radius_;
    return static_cast<long>(std::floor(d)) - 1;
}

long CertFloat::ceil_upper() const {
    double d = mpfr_get_d(v_, MPFR_RNDU) + radius_;
    return static_cast<long>(std::ceil(d)) + 1;
}

double CertFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string CertFloat::to_string() const {
    if (mpfr_zero_p(v_)) return "0";
    long digits = static_cast<long>(mpfr_get_prec(v_) * 0.30103) + 2;
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string dig = neg ? mant.substr(1) : mant;
    std::string out = (neg ? "-" : "");
    out += dig.substr(0, 1) + "." + dig.substr(1) + "e" + std::to_string(e - 1);
    return out;
}

std::string CertFloat::radius_to_string() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6e", radius_);
    return buf;
}

// ---------------------------------------------------------------------------
// Scalar variant surface

const char* Scalar::backend_name() const {
    return std::visit([](const auto& x) {
        return scalar_traits<std::decay_t<decltype(x)>>::name;
    }, v_);
}

Sign scalar_sign(const Scalar& x) {
    return std::visit([](const auto& v) { return sgn_of(v); }, x.value());
}

Scalar scalar_arith(const Scalar& x, const Scalar& y, ArithOp op) {
    if (x.value().index() != y.value().index())
        fail(Errc::backend_mismatch, std::string("scalar backends differ: ") + x.backend_name() +
                                         " vs " + y.backend_name());
    return std::visit(
        [&](const auto& a) -> Scalar {
            using T = std::decay_t<decltype(a)>;
            const T& b = std::get<T>(y.value());
            switch (op) {
                case ArithOp::add: return Scalar(a + b);
                case ArithOp::sub: return Scalar(a - b);
                case ArithOp::mul: return Scalar(a * b);
                case ArithOp::div: {
                    Sign sb = sgn_of(b);
                    if (sb == Sign::zero) fail(Errc::division_by_zero, "division by zero");
                    if (sb == Sign::uncertain) fail(Errc::uncertain_divisor, "divisor sign uncertain");
                    return Scalar(a / b);
                }
            }
            fail(Errc::internal, "bad op");
        },
        x.value());
}

std::string scalar_to_string(const Scalar& s) {
    return std::visit([](const auto& v) { return v.to_string(); }, s.value());
}

Scalar scalar_parse(std::string_view s) {
    if (s.find("sqrt") != std::string_view::npos) return Scalar(QuadScalar::parse(s));
    if (s.find('.') != std::string_view::npos || s.find('e') != std::string_view::npos ||
        s.find('E') != std::string_view::npos)
        return Scalar(CertFloat::from_decimal(s));
    return Scalar(Rational::parse(s));
}

}  // namespace helly
