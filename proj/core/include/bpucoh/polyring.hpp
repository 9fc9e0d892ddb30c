#pragma once

/* Graded multivariate polynomials over the p-local rationals.
 *
 * Three variable alphabets are supported:
 *   chern(n)          c_1..c_n with deg c_i = 2i
 *   torus(n)          v_1..v_n with deg v_i = 2
 *   shifted_torus(n)  v'_1..v'_{n-1} (each deg 2) plus v_n
 * together with the operations the engine is built from: graded monomial
 * bases, the lexicographic monomial ordering, elementary symmetric
 * polynomials, the substitution c_i -> sigma_i(v), the change of variables
 * v_i = v'_i + v_n with optional truncation by v'-degree, formal
 * divergences, and the degree-raising index bump on Chern monomials. */

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bpucoh/plocal.hpp"

namespace bpucoh::polyring {

using plocal::Int;
using plocal::PLocalScalar;
using plocal::PrimeContext;

enum class AlphabetKind { chern, torus, shifted_torus };

class Alphabet {
  public:
    static constexpr int kDefaultVarCap = 64;

    static Alphabet chern(int n, int cap = kDefaultVarCap);
    static Alphabet torus(int n, int cap = kDefaultVarCap);
    static Alphabet shifted_torus(int n, int cap = kDefaultVarCap);

    AlphabetKind kind() const { return kind_; }
    int rank() const { return n_; }

    /* Number of variables: n for chern/torus; n for shifted_torus as well
     * (v'_1..v'_{n-1} followed by v_n). */
    int var_count() const { return n_; }

    int var_degree(int idx) const;
    std::string var_name(int idx) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_;
    }
    friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

  private:
    Alphabet(AlphabetKind k, int n) : kind_(k), n_(n) {}
    AlphabetKind kind_;
    int n_;
};

/* Dense exponent vector, one entry per alphabet variable. */
using Exponents = std::vector<int>;

/* Total (cohomological) degree of a monomial. */
int monomial_degree(const Alphabet& a, const Exponents& e);

/* The total ordering on monomials of a common alphabet: a > b iff at the
 * smallest index where the exponents differ, a's exponent is larger. */
bool order_gt(const Exponents& a, const Exponents& b);

/* v'-degree of a shifted-torus monomial: the total exponent of the
 * v'-variables (all but the last). */
int vprime_degree(const Alphabet& a, const Exponents& e);

class GradedPolynomial {
  public:
    /* Iteration runs in descending monomial order. */
    using TermMap = std::map<Exponents, PLocalScalar, std::greater<Exponents>>;

    explicit GradedPolynomial(const Alphabet& a) : alpha_(a) {}

    static GradedPolynomial zero(const Alphabet& a) { return GradedPolynomial(a); }
    static GradedPolynomial constant(const Alphabet& a, const PLocalScalar& c);
    static GradedPolynomial monomial(const Alphabet& a, const Exponents& e,
                                     const PLocalScalar& c = PLocalScalar(1));
    static GradedPolynomial variable(const Alphabet& a, int idx);

    const Alphabet& alphabet() const { return alpha_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    PLocalScalar coeff(const Exponents& e) const;

    /* Degree of a nonzero homogeneous polynomial; nullopt for zero or
     * inhomogeneous input. */
    std::optional<int> homogeneous_degree() const;

    void add_term(const Exponents& e, const PLocalScalar& c);

    GradedPolynomial operator-() const;
    GradedPolynomial& operator+=(const GradedPolynomial& o);
    GradedPolynomial& operator-=(const GradedPolynomial& o);
    GradedPolynomial& operator*=(const PLocalScalar& c);

    friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) {
        return a += b;
    }
    friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) {
        return a -= b;
    }
    friend GradedPolynomial operator*(GradedPolynomial a, const PLocalScalar& c) {
        return a *= c;
    }
    friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);
    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
        return a.alpha_ == b.alpha_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GradedPolynomial& a, const GradedPolynomial& b) {
        return !(a == b);
    }

  private:
    Alphabet alpha_;
    TermMap terms_;
};

/* Product of shifted-torus polynomials discarding every result term of
 * v'-degree greater than max_vprime_degree. */
GradedPolynomial mul_truncated(const GradedPolynomial& a, const GradedPolynomial& b,
                               int max_vprime_degree);

/* All Chern monomials of degree t over c_1..c_n, sorted descending.
 * Empty for odd or negative t; [1] for t = 0. */
std::vector<Exponents> chern_basis(int n, int t, int cap = Alphabet::kDefaultVarCap);

/* j-th elementary symmetric polynomial of the given variable indices
 * (0-based); 0 when j exceeds the variable count, 1 when j = 0. */
GradedPolynomial elementary_symmetric(const Alphabet& a, int j, const std::vector<int>& vars);

/* sigma_j of all variables of the alphabet. */
GradedPolynomial elementary_symmetric(const Alphabet& a, int j);

/* Substitution c_i -> sigma_i(v_1..v_n), mapping chern(n) to torus(n). */
GradedPolynomial chern_to_torus(const GradedPolynomial& f);

/* Change of variables v_i = v'_i + v_n (i < n), v_n kept, mapping torus(n)
 * to shifted_torus(n). If a truncation bound is given, terms of v'-degree
 * above it are discarded during expansion and never materialized. */
GradedPolynomial shift_expand(const GradedPolynomial& f,
                              std::optional<int> vprime_truncation = std::nullopt);

/* Coefficient of v_n^k in a shifted-torus polynomial, as a polynomial in
 * the v'-variables (v_n exponent zeroed). */
GradedPolynomial coeff_of_vn_power(const GradedPolynomial& f, int k);

/* The image of sigma_k(v_1..v_n) under the shift, truncated to v'-degree
 * <= d: sum over j <= min(d, k) of C(n-j, k-j) sigma_j(v') v_n^{k-j}.
 * For d >= k this is the exact shifted expansion. */
GradedPolynomial shifted_sigma_truncated(int k, int n, int d);

/* The derivation on chern(n) with grad(c_k) = (n-k+1) c_{k-1}, c_0 = 1. */
GradedPolynomial divergence_chern(const GradedPolynomial& f, int n);

/* Sum of formal partial derivatives over all torus variables. */
GradedPolynomial divergence_torus(const GradedPolynomial& f);

/* Signature of a divergence implementation; verification harnesses can
 * substitute a deliberately broken one. */
using DivergenceFn = std::function<GradedPolynomial(const GradedPolynomial&, int)>;

/* For a Chern monomial of degree 2p whose largest occurring index k is
 * below p: decrement the exponent of c_k and append one factor c_{k+1},
 * producing a monomial of degree 2p + 2. Rejects monomials of different
 * degree and the pure c_p monomial (top index p). */
Exponents raise_top_variable(const Exponents& e, int p);

struct Sigma1SubsetSum {
    Int lambda;     // common coefficient, expected C(n-1, p-1)
    bool verified;  // all variables received the same coefficient
};

/* Expands sum over all descending p-element index tuples of
 * sigma_1(t_{i_1},..,t_{i_p}) by brute force and checks it is a single
 * multiple of t_1 + ... + t_n. */
Sigma1SubsetSum sigma1_subset_sum(int n, int p);

/* Canonical text forms: "c1^2*c2", "v3", "v'1"; "1" for the empty monomial. */
std::string monomial_str(const Alphabet& a, const Exponents& e);
std::string polynomial_str(const GradedPolynomial& f);

/* Parses the Chern monomial grammar (variables c<k>, powers '^', products
 * '*', whitespace-insensitive) into an exponent vector over c_1..c_n.
 * Errors carry the offending position. */
Exponents parse_chern_monomial(const std::string& text, int n);

}  // namespace bpucoh::polyring
