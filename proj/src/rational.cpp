#include "padic_henon/rational.hpp"

#include <stdexcept>
#include <string>

#include "padic_henon/errors.hpp"

namespace padic_henon {
namespace {

void require_same_prime(const PadicRational& x, const PadicRational& y) {
    if (!(x.prime() == y.prime()))
        throw std::invalid_argument("operands live in different Q_p (prime mismatch)");
}

std::int64_t remove_factor(mpz_class& z, const mpz_class& p) {
    return static_cast<std::int64_t>(mpz_remove(z.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

std::int64_t count_factor(const mpz_class& z, const mpz_class& p) {
    mpz_class tmp;
    return static_cast<std::int64_t>(mpz_remove(tmp.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

// Leading p-adic digit of a nonzero rational, i.e. unit_part mod p.
mpz_class leading_digit(const PadicRational& x) {
    const mpq_class u = x.unit_part();
    const mpz_class p = x.prime().as_mpz();
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), u.get_den().get_mpz_t(), p.get_mpz_t());
    mpz_class r = (u.get_num() * inv) % p;
    if (r < 0) r += p;
    return r;
}

}  // namespace

PadicRational::PadicRational(Prime p) : p_(p), q_(0), valuation_(std::nullopt) {}

PadicRational::PadicRational(long value, Prime p)
    : p_(p), q_(value), valuation_(compute_valuation(q_, p)) {}

PadicRational::PadicRational(const mpz_class& num, const mpz_class& den, Prime p) : p_(p) {
    if (den == 0) throw ArithmeticError("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
    valuation_ = compute_valuation(q_, p);
}

PadicRational::PadicRational(const mpq_class& value, Prime p)
    : p_(p), q_(value), valuation_() {
    q_.canonicalize();
    valuation_ = compute_valuation(q_, p);
}

PadicRational::PadicRational(mpq_class value, Prime p, std::optional<std::int64_t> valuation,
                             Trusted)
    : p_(p), q_(std::move(value)), valuation_(valuation) {}

std::optional<std::int64_t> PadicRational::compute_valuation(const mpq_class& q, Prime p) {
    if (q == 0) return std::nullopt;
    const mpz_class pz = p.as_mpz();
    return count_factor(q.get_num(), pz) - count_factor(q.get_den(), pz);
}

mpq_class PadicRational::unit_part() const {
    if (is_zero()) throw ArithmeticError("unit part of zero");
    const mpz_class pz = p_.as_mpz();
    mpz_class num = q_.get_num();
    mpz_class den = q_.get_den();
    remove_factor(num, pz);
    remove_factor(den, pz);
    return mpq_class(num, den);
}

std::size_t PadicRational::bit_size() const {
    return mpz_sizeinbase(q_.get_num_mpz_t(), 2) + mpz_sizeinbase(q_.get_den_mpz_t(), 2);
}

std::string PadicRational::to_string() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

PadicRational PadicRational::operator-() const {
    return PadicRational(mpq_class(-q_), p_, valuation_, Trusted{});
}

PadicRational operator+(const PadicRational& x, const PadicRational& y) {
    require_same_prime(x, y);
    mpq_class s = x.q_ + y.q_;
    // Ultrametric equality case: the valuation is known without factoring.
    if (x.valuation_ != y.valuation_) {
        auto v = (!x.valuation_) ? y.valuation_
                 : (!y.valuation_) ? x.valuation_
                                   : std::optional<std::int64_t>(std::min(*x.valuation_, *y.valuation_));
        return PadicRational(std::move(s), x.p_, v, PadicRational::Trusted{});
    }
    auto v = PadicRational::compute_valuation(s, x.p_);
    return PadicRational(std::move(s), x.p_, v, PadicRational::Trusted{});
}

PadicRational operator-(const PadicRational& x, const PadicRational& y) { return x + (-y); }

PadicRational operator*(const PadicRational& x, const PadicRational& y) {
    require_same_prime(x, y);
    if (x.is_zero() || y.is_zero()) return PadicRational(x.p_);
    return PadicRational(mpq_class(x.q_ * y.q_), x.p_, *x.valuation_ + *y.valuation_,
                         PadicRational::Trusted{});
}

PadicRational operator/(const PadicRational& x, const PadicRational& y) {
    require_same_prime(x, y);
    if (y.is_zero()) throw ArithmeticError("division by zero");
    if (x.is_zero()) return PadicRational(x.p_);
    return PadicRational(mpq_class(x.q_ / y.q_), x.p_, *x.valuation_ - *y.valuation_,
                         PadicRational::Trusted{});
}

PadicRational make_rational(const mpz_class& num, const mpz_class& den, std::uint64_t p) {
    return PadicRational(num, den, Prime(p));
}

PadicRational parse_rational(std::string_view text, Prime p) {
    auto parse_int = [&](std::string_view s) {
        mpz_class z;
        std::string str(s);
        if (str.empty() || z.set_str(str, 10) != 0)
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        return z;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return PadicRational(parse_int(text), 1, p);
    const mpz_class den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ArithmeticError("zero denominator in '" + std::string(text) + "'");
    return PadicRational(parse_int(text.substr(0, slash)), den, p);
}

PadicRational prime_power(Prime p, std::int64_t k) {
    mpz_class pk;
    const auto e = static_cast<unsigned long>(k < 0 ? -k : k);
    mpz_pow_ui(pk.get_mpz_t(), p.as_mpz().get_mpz_t(), e);
    return k >= 0 ? PadicRational(pk, 1, p) : PadicRational(1, pk, p);
}

SquareClass square_class(const PadicRational& x) {
    if (x.is_zero()) return SquareClass::Zero;
    if (*x.valuation() % 2 != 0) return SquareClass::OddValuation;
    const mpq_class u = x.unit_part();
    const mpz_class p = x.prime().as_mpz();
    // u = n/d with both prime to p; legendre(n/d) = legendre(n d).
    const mpz_class nd = u.get_num() * u.get_den();
    return mpz_legendre(nd.get_mpz_t(), p.get_mpz_t()) == 1 ? SquareClass::Square
                                                            : SquareClass::NonResidue;
}

const char* to_string(SquareClass c) {
    switch (c) {
        case SquareClass::Zero: return "zero";
        case SquareClass::Square: return "square";
        case SquareClass::OddValuation: return "odd valuation";
        case SquareClass::NonResidue: return "unit part is a quadratic non-residue";
    }
    return "?";
}

bool is_square(const PadicRational& x) {
    const auto c = square_class(x);
    return c == SquareClass::Square || c == SquareClass::Zero;
}

std::optional<PadicRational> rational_sqrt(const PadicRational& x) {
    if (x.is_zero()) return x;
    if (x.value() < 0) return std::nullopt;
    const mpz_class& n = x.numerator();
    const mpz_class& d = x.denominator();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    PadicRational r(rn, rd, x.prime());
    const mpz_class half = (x.prime().as_mpz() - 1) / 2;
    if (leading_digit(r) > half) r = -r;
    return r;
}

}  // namespace padic_henon
