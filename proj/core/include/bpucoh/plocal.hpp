#pragma once

/* Exact arithmetic in the ring of rationals with denominator coprime to an
 * odd prime p: reduced fractions, p-adic valuations, units, and binomial
 * coefficients modulo p via base-p digit products. */

#include <gmpxx.h>

#include <string>

#include "bpucoh/errors.hpp"

namespace bpucoh::plocal {

using Int = mpz_class;

/* The odd prime a computation is localized at. Threaded explicitly through
 * every operation that depends on p; never global state. Construction
 * rejects p = 2 (the engine requires p > 2) and non-primes. */
class PrimeContext {
  public:
    explicit PrimeContext(long p);

    long p() const { return p_; }
    const Int& p_int() const { return p_int_; }

  private:
    long p_;
    Int p_int_;
};

/* A reduced fraction num/den with den > 0. Zero is stored as 0/1. Whether
 * the denominator is coprime to p is checked wherever a PrimeContext is in
 * hand (vp, is_unit, the checked factory); plain arithmetic is prime-free. */
class PLocalScalar {
  public:
    PLocalScalar() : q_(0) {}
    PLocalScalar(long v) : q_(v) {}
    PLocalScalar(const Int& v) : q_(v) {}
    PLocalScalar(const Int& num, const Int& den);

    /* Validates that the reduced denominator is a unit in the p-local ring. */
    static PLocalScalar checked(const Int& num, const Int& den, const PrimeContext& ctx);

    Int num() const { return Int(q_.get_num()); }
    Int den() const { return Int(q_.get_den()); }
    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    PLocalScalar operator-() const;
    PLocalScalar& operator+=(const PLocalScalar& o);
    PLocalScalar& operator-=(const PLocalScalar& o);
    PLocalScalar& operator*=(const PLocalScalar& o);
    PLocalScalar& operator/=(const PLocalScalar& o);

    friend PLocalScalar operator+(PLocalScalar a, const PLocalScalar& b) { return a += b; }
    friend PLocalScalar operator-(PLocalScalar a, const PLocalScalar& b) { return a -= b; }
    friend PLocalScalar operator*(PLocalScalar a, const PLocalScalar& b) { return a *= b; }
    friend PLocalScalar operator/(PLocalScalar a, const PLocalScalar& b) { return a /= b; }
    friend bool operator==(const PLocalScalar& a, const PLocalScalar& b) { return a.q_ == b.q_; }
    friend bool operator!=(const PLocalScalar& a, const PLocalScalar& b) { return a.q_ != b.q_; }

    std::string str() const;

  private:
    mpq_class q_;  // canonical: gcd(num, den) = 1, den > 0
};

/* p-adic valuation of a scalar; the valuation of zero is infinite. */
class Valuation {
  public:
    static Valuation finite(long v) { return Valuation(false, v); }
    static Valuation infinity() { return Valuation(true, 0); }

    bool is_infinite() const { return infinite_; }
    long value() const;

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }

    std::string str() const;

  private:
    Valuation(bool inf, long v) : infinite_(inf), value_(v) {}
    bool infinite_;
    long value_;
};

/* Exponent of p in x. Rejects scalars whose denominator p divides (such a
 * value is outside the p-local ring). */
Valuation vp(const PLocalScalar& x, const PrimeContext& ctx);

/* Exponent of p in a nonzero integer. */
long vp_int(const Int& x, const PrimeContext& ctx);

/* True iff x is invertible in the p-local ring, i.e. vp(x) = 0. */
bool is_unit(const PLocalScalar& x, const PrimeContext& ctx);

/* C(n, k) mod p by digit products in base p. Returns 0 when k > n. */
long binom_mod_p(long n, long k, const PrimeContext& ctx);

/* Exact C(n, k); the independent reference the digit-product route is
 * tested against. */
Int binom_exact(unsigned long n, unsigned long k);

/* Least nonnegative residue of x mod p. */
long mod_p(const Int& x, const PrimeContext& ctx);

}  // namespace bpucoh::plocal
