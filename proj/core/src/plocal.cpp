#include "bpucoh/plocal.hpp"

namespace bpucoh::plocal {

PrimeContext::PrimeContext(long p) : p_(p), p_int_(p) {
    if (p <= 2)
        throw UsageError("p must be an odd prime (p > 2); got " + std::to_string(p));
    if (mpz_probab_prime_p(p_int_.get_mpz_t(), 40) == 0)
        throw UsageError("p must be an odd prime (p > 2); got composite " + std::to_string(p));
}

PLocalScalar::PLocalScalar(const Int& num, const Int& den) {
    if (den == 0) throw UsageError("scalar with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

PLocalScalar PLocalScalar::checked(const Int& num, const Int& den, const PrimeContext& ctx) {
    PLocalScalar x(num, den);
    Int d = x.den();
    if (mpz_divisible_p(d.get_mpz_t(), ctx.p_int().get_mpz_t()))
        throw UsageError("denominator " + d.get_str() + " is divisible by p = " +
                         std::to_string(ctx.p()));
    return x;
}

PLocalScalar PLocalScalar::operator-() const {
    PLocalScalar r;
    r.q_ = -q_;
    return r;
}

PLocalScalar& PLocalScalar::operator+=(const PLocalScalar& o) {
    q_ += o.q_;
    return *this;
}

PLocalScalar& PLocalScalar::operator-=(const PLocalScalar& o) {
    q_ -= o.q_;
    return *this;
}

PLocalScalar& PLocalScalar::operator*=(const PLocalScalar& o) {
    q_ *= o.q_;
    return *this;
}

PLocalScalar& PLocalScalar::operator/=(const PLocalScalar& o) {
    if (o.q_ == 0) throw UsageError("division by zero scalar");
    q_ /= o.q_;
    return *this;
}

std::string PLocalScalar::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

long Valuation::value() const {
    if (infinite_) throw InvariantViolation("value() of an infinite valuation");
    return value_;
}

std::string Valuation::str() const { return infinite_ ? "inf" : std::to_string(value_); }

long vp_int(const Int& x, const PrimeContext& ctx) {
    if (x == 0) throw InvariantViolation("vp_int of zero");
    Int reduced;
    return static_cast<long>(
        mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), ctx.p_int().get_mpz_t()));
}

Valuation vp(const PLocalScalar& x, const PrimeContext& ctx) {
    Int d = x.den();
    if (mpz_divisible_p(d.get_mpz_t(), ctx.p_int().get_mpz_t()))
        throw std::invalid_argument("vp: denominator " + d.get_str() +
                                    " divisible by p = " + std::to_string(ctx.p()));
    if (x.is_zero()) return Valuation::infinity();
    return Valuation::finite(vp_int(x.num(), ctx));
}

bool is_unit(const PLocalScalar& x, const PrimeContext& ctx) {
    Valuation v = vp(x, ctx);
    return !v.is_infinite() && v.value() == 0;
}

long binom_mod_p(long n, long k, const PrimeContext& ctx) {
    if (n < 0 || k < 0) throw std::invalid_argument("binom_mod_p: negative argument");
    if (k > n) return 0;
    const long p = ctx.p();
    Int acc = 1;
    while (n > 0 || k > 0) {
        long nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        Int digit;
        mpz_bin_uiui(digit.get_mpz_t(), static_cast<unsigned long>(nd),
                     static_cast<unsigned long>(kd));
        acc = (acc * digit) % p;
        n /= p;
        k /= p;
    }
    return mod_p(acc, ctx);
}

Int binom_exact(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

long mod_p(const Int& x, const PrimeContext& ctx) {
    Int r = x % ctx.p_int();
    if (r < 0) r += ctx.p_int();
    return static_cast<long>(r.get_si());
}

}  // namespace bpucoh::plocal
