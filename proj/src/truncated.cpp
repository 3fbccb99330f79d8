#include "padic_henon/truncated.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "padic_henon/errors.hpp"

namespace padic_henon {
namespace {

mpz_class pow_p(Prime p, std::int64_t k) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), p.as_mpz().get_mpz_t(), static_cast<unsigned long>(std::max<std::int64_t>(k, 0)));
    return r;
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class invert(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw ArithmeticError("element is not invertible modulo p^k");
    return r;
}

void require_same_prime(const TruncatedPadic& x, const TruncatedPadic& y) {
    if (!(x.prime() == y.prime())) throw std::invalid_argument("prime mismatch");
}

}  // namespace

TruncatedPadic TruncatedPadic::zero(Prime p, std::int64_t absolute_precision) {
    TruncatedPadic z(p);
    z.zero_ = true;
    z.valuation_ = absolute_precision;
    return z;
}

TruncatedPadic TruncatedPadic::from_unit(Prime p, std::int64_t valuation, const mpz_class& unit,
                                         std::int64_t precision) {
    if (precision < 1) throw std::invalid_argument("precision must be at least 1");
    TruncatedPadic t(p);
    t.zero_ = false;
    t.valuation_ = valuation;
    t.precision_ = precision;
    t.unit_ = mod_pos(unit, pow_p(p, precision));
    if (mpz_divisible_ui_p(t.unit_.get_mpz_t(), static_cast<unsigned long>(p.value())))
        throw std::invalid_argument("unit part divisible by p");
    return t;
}

TruncatedPadic TruncatedPadic::from_rational(const PadicRational& x, std::int64_t precision) {
    if (precision < 1) throw std::invalid_argument("precision must be at least 1");
    if (x.is_zero()) return zero(x.prime(), precision);
    const mpq_class u = x.unit_part();
    const mpz_class mod = pow_p(x.prime(), precision);
    const mpz_class unit = mod_pos(u.get_num() * invert(u.get_den(), mod), mod);
    return from_unit(x.prime(), *x.valuation(), unit, precision);
}

std::vector<std::uint64_t> TruncatedPadic::digits() const {
    std::vector<std::uint64_t> out;
    if (zero_) return out;
    out.reserve(static_cast<std::size_t>(precision_));
    mpz_class rest = unit_;
    mpz_class digit;
    const mpz_class p = p_.as_mpz();
    for (std::int64_t i = 0; i < precision_; ++i) {
        mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        out.push_back(digit.get_ui());
    }
    return out;
}

bool TruncatedPadic::agrees_with(const PadicRational& x) const {
    if (!(x.prime() == p_)) return false;
    if (zero_) return x.is_zero() || *x.valuation() >= valuation_;
    return *this == from_rational(x, precision_);
}

TruncatedPadic TruncatedPadic::operator-() const {
    if (zero_) return *this;
    return from_unit(p_, valuation_, -unit_, precision_);
}

TruncatedPadic operator+(const TruncatedPadic& x, const TruncatedPadic& y) {
    require_same_prime(x, y);
    const std::int64_t abs_prec = std::min(x.absolute_precision(), y.absolute_precision());
    std::int64_t m = abs_prec;
    if (!x.zero_) m = std::min(m, x.valuation_);
    if (!y.zero_) m = std::min(m, y.valuation_);
    const mpz_class mod = pow_p(x.p_, abs_prec - m);
    mpz_class s = 0;
    if (!x.zero_ && x.valuation_ < abs_prec) s += x.unit_ * pow_p(x.p_, x.valuation_ - m);
    if (!y.zero_ && y.valuation_ < abs_prec) s += y.unit_ * pow_p(y.p_, y.valuation_ - m);
    s = mod_pos(s, mod);
    if (s == 0) return TruncatedPadic::zero(x.p_, abs_prec);
    const auto k = static_cast<std::int64_t>(
        mpz_remove(s.get_mpz_t(), s.get_mpz_t(), x.p_.as_mpz().get_mpz_t()));
    const std::int64_t v = m + k;
    return TruncatedPadic::from_unit(x.p_, v, s, abs_prec - v);
}

TruncatedPadic operator-(const TruncatedPadic& x, const TruncatedPadic& y) { return x + (-y); }

TruncatedPadic operator*(const TruncatedPadic& x, const TruncatedPadic& y) {
    require_same_prime(x, y);
    if (x.zero_ && y.zero_) return TruncatedPadic::zero(x.p_, x.valuation_ + y.valuation_);
    if (x.zero_) return TruncatedPadic::zero(x.p_, x.valuation_ + y.valuation_);
    if (y.zero_) return TruncatedPadic::zero(x.p_, y.valuation_ + x.valuation_);
    const std::int64_t n = std::min(x.precision_, y.precision_);
    return TruncatedPadic::from_unit(x.p_, x.valuation_ + y.valuation_, x.unit_ * y.unit_, n);
}

TruncatedPadic operator/(const TruncatedPadic& x, const TruncatedPadic& y) {
    require_same_prime(x, y);
    if (y.zero_) throw ArithmeticError("division by a value indistinguishable from zero");
    if (x.zero_) return TruncatedPadic::zero(x.p_, x.valuation_ - y.valuation_);
    const std::int64_t n = std::min(x.precision_, y.precision_);
    const mpz_class mod = pow_p(x.p_, n);
    return TruncatedPadic::from_unit(x.p_, x.valuation_ - y.valuation_,
                                     x.unit_ * invert(y.unit_, mod), n);
}

bool operator==(const TruncatedPadic& x, const TruncatedPadic& y) {
    if (!(x.p_ == y.p_)) return false;
    if (x.zero_ || y.zero_) return x.zero_ && y.zero_;
    if (x.valuation_ != y.valuation_) return false;
    const mpz_class mod = pow_p(x.p_, std::min(x.precision_, y.precision_));
    return mod_pos(x.unit_, mod) == mod_pos(y.unit_, mod);
}

mpz_class sqrt_mod_prime(const mpz_class& u_in, const mpz_class& p) {
    const mpz_class u = mod_pos(u_in, p);
    if (u == 0) return 0;
    if (mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) != 1)
        throw std::domain_error("not a quadratic residue modulo p");
    auto powm = [&](const mpz_class& b, const mpz_class& e) {
        mpz_class r;
        mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    };
    if (p % 4 == 3) return powm(u, (p + 1) / 4);

    // Tonelli-Shanks: p - 1 = q 2^s with q odd.
    mpz_class q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    mpz_class z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    mpz_class c = powm(z, q);
    mpz_class r = powm(u, (q + 1) / 2);
    mpz_class t = powm(u, q);
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        mpz_class t2 = t;
        while (t2 != 1) {
            t2 = mod_pos(t2 * t2, p);
            ++i;
        }
        mpz_class b = c;
        for (unsigned long j = 0; j + 1 < m - i; ++j) b = mod_pos(b * b, p);
        r = mod_pos(r * b, p);
        c = mod_pos(b * b, p);
        t = mod_pos(t * c, p);
        m = i;
    }
    return r;
}

TruncatedPadic sqrt(const PadicRational& x, std::int64_t precision) {
    if (precision < 1) throw std::invalid_argument("precision must be at least 1");
    const SquareClass cls = square_class(x);
    if (cls == SquareClass::Zero) return TruncatedPadic::zero(x.prime(), precision);
    if (cls != SquareClass::Square)
        throw std::domain_error(std::string("not a square in Q_p: ") + to_string(cls));

    const Prime p = x.prime();
    const mpz_class pz = p.as_mpz();
    const mpz_class mod = pow_p(p, precision);
    const mpq_class uq = x.unit_part();
    const mpz_class u = mod_pos(uq.get_num() * invert(uq.get_den(), mod), mod);

    // Newton iteration r <- r - (r^2 - u)/(2r) doubles the number of correct digits.
    mpz_class r = sqrt_mod_prime(u, pz);
    std::int64_t known = 1;
    while (known < precision) {
        known = std::min(2 * known, precision);
        const mpz_class m = pow_p(p, known);
        r = mod_pos(r - (r * r - u) * invert(2 * r, m), m);
    }
    if (mod_pos(r, pz) > (pz - 1) / 2) r = mod - r;
    return TruncatedPadic::from_unit(p, *x.valuation() / 2, r, precision);
}

}  // namespace padic_henon
