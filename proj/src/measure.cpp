#include "padic_henon/measure.hpp"

#include <map>
#include <stdexcept>

#include "padic_henon/fibonacci.hpp"
#include "padic_henon/region_sampler.hpp"

namespace padic_henon {

MeasureValue::MeasureValue(mpq_class v) : v_(std::move(v)) {
    v_->canonicalize();
    if (*v_ < 0) throw std::invalid_argument("measure must be nonnegative");
}

const mpq_class& MeasureValue::value() const {
    if (!v_) throw std::domain_error("infinite measure has no finite value");
    return *v_;
}

std::string MeasureValue::exact_string() const {
    if (!v_) return "inf";
    return v_->get_num().get_str() + "/" + v_->get_den().get_str();
}

std::string MeasureValue::decimal_hint() const {
    if (!v_) return "inf";
    const mpf_class f(*v_, 256);
    char buf[64];
    gmp_snprintf(buf, sizeof buf, "%.5Fe", f.get_mpf_t());
    return buf;
}

MeasureValue operator+(const MeasureValue& x, const MeasureValue& y) {
    if (!x.v_ || !y.v_) return MeasureValue::infinity();
    return MeasureValue(mpq_class(*x.v_ + *y.v_));
}

MeasureValue operator*(const MeasureValue& x, const MeasureValue& y) {
    if (x.v_ && *x.v_ == 0) return x;
    if (y.v_ && *y.v_ == 0) return y;
    if (!x.v_ || !y.v_) return MeasureValue::infinity();
    return MeasureValue(mpq_class(*x.v_ * *y.v_));
}

bool operator==(const MeasureValue& x, const MeasureValue& y) { return x.v_ == y.v_; }

bool operator<(const MeasureValue& x, const MeasureValue& y) {
    if (!x.v_) return false;
    if (!y.v_) return true;
    return *x.v_ < *y.v_;
}

namespace {

mpq_class p_power(Prime p, const mpz_class& e) {
    if (!e.fits_slong_p()) throw std::overflow_error("measure exponent too large");
    const long k = e.get_si();
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), p.as_mpz().get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
    return k >= 0 ? mpq_class(pk) : mpq_class(mpz_class(1), pk);
}

mpq_class unit_sphere_factor(Prime p) { return mpq_class(p.as_mpz() - 1, p.as_mpz()); }

mpz_class tn_exponent(std::int64_t n, std::int64_t k) {
    if (k < 2) throw std::invalid_argument("T_n requires k >= 2");
    if (n < 0) throw std::invalid_argument("T_n requires n >= 0");
    return mpz_class(static_cast<long>(k - 1)) * fib(n + 2);
}

}  // namespace

MeasureValue ball_measure(std::int64_t a, Prime p) { return MeasureValue(p_power(p, mpz_class(static_cast<long>(a)))); }

MeasureValue sphere_measure(std::int64_t a, Prime p) {
    return MeasureValue(mpq_class(p_power(p, mpz_class(static_cast<long>(a))) * unit_sphere_factor(p)));
}

MeasureValue tn_measure(std::int64_t n, std::int64_t k, Prime p) {
    const mpq_class f = unit_sphere_factor(p);
    return MeasureValue(mpq_class(p_power(p, tn_exponent(n, k)) * f * f));
}

MeasureValue tn_ball_product(std::int64_t n, std::int64_t k, Prime p) {
    return MeasureValue(p_power(p, tn_exponent(n, k)));
}

std::vector<TnRow> tn_table(std::int64_t n_max, std::int64_t k, Prime p) {
    std::vector<TnRow> rows;
    MeasureValue sum(mpq_class(0));
    for (std::int64_t n = 0; n <= n_max; ++n) {
        MeasureValue m = tn_measure(n, k, p);
        sum = sum + m;
        rows.push_back({n, m, tn_ball_product(n, k, p), sum});
    }
    return rows;
}

MeasureValue region_window_measure(const RegionLabel& label, std::int64_t d, Prime p, std::int64_t window) {
    // sphere(a) sphere(b) = p^{a+b} (1 - 1/p)^2, so group profiles by a + b.
    std::map<std::int64_t, long> by_sum;
    for (const auto& [a, b] : admissible_profiles(label, d, window)) ++by_sum[a + b];
    mpq_class total = 0;
    for (const auto& [s, count] : by_sum) total += p_power(p, mpz_class(static_cast<long>(s))) * count;
    const mpq_class f = unit_sphere_factor(p);
    return MeasureValue(mpq_class(total * f * f));
}

}  // namespace padic_henon
