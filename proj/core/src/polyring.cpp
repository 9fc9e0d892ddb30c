#include "bpucoh/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bpucoh::polyring {

namespace {

/* Hard ceiling on term counts during products; degree caps at the call
 * sites keep real computations far below this. */
constexpr std::size_t kMaxTerms = 4'000'000;

void check_same_alphabet(const Alphabet& a, const Alphabet& b, const char* where) {
    if (a != b) throw InvariantViolation(std::string(where) + ": alphabet mismatch");
}

void check_exponents(const Alphabet& a, const Exponents& e) {
    if (static_cast<int>(e.size()) != a.var_count())
        throw InvariantViolation("exponent vector length does not match alphabet");
    for (int x : e)
        if (x < 0) throw InvariantViolation("negative exponent");
}

}  // namespace

Alphabet Alphabet::chern(int n, int cap) {
    if (n < 1) throw UsageError("alphabet needs at least one variable");
    if (n > cap)
        throw UsageError("alphabet with " + std::to_string(n) +
                         " variables exceeds the configured cap " + std::to_string(cap));
    return Alphabet(AlphabetKind::chern, n);
}

Alphabet Alphabet::torus(int n, int cap) {
    if (n < 1) throw UsageError("alphabet needs at least one variable");
    if (n > cap)
        throw UsageError("alphabet with " + std::to_string(n) +
                         " variables exceeds the configured cap " + std::to_string(cap));
    return Alphabet(AlphabetKind::torus, n);
}

Alphabet Alphabet::shifted_torus(int n, int cap) {
    if (n < 1) throw UsageError("alphabet needs at least one variable");
    if (n > cap)
        throw UsageError("alphabet with " + std::to_string(n) +
                         " variables exceeds the configured cap " + std::to_string(cap));
    return Alphabet(AlphabetKind::shifted_torus, n);
}

int Alphabet::var_degree(int idx) const {
    if (idx < 0 || idx >= n_) throw InvariantViolation("variable index out of range");
    return kind_ == AlphabetKind::chern ? 2 * (idx + 1) : 2;
}

std::string Alphabet::var_name(int idx) const {
    if (idx < 0 || idx >= n_) throw InvariantViolation("variable index out of range");
    switch (kind_) {
        case AlphabetKind::chern:
            return "c" + std::to_string(idx + 1);
        case AlphabetKind::torus:
            return "v" + std::to_string(idx + 1);
        case AlphabetKind::shifted_torus:
            return idx == n_ - 1 ? "v" + std::to_string(n_) : "v'" + std::to_string(idx + 1);
    }
    throw InvariantViolation("unreachable");
}

int monomial_degree(const Alphabet& a, const Exponents& e) {
    check_exponents(a, e);
    int d = 0;
    for (int i = 0; i < a.var_count(); ++i) d += e[i] * a.var_degree(i);
    return d;
}

bool order_gt(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size()) throw InvariantViolation("order_gt: length mismatch");
    return a > b;  // lexicographic: smallest differing index decides
}

int vprime_degree(const Alphabet& a, const Exponents& e) {
    if (a.kind() != AlphabetKind::shifted_torus)
        throw InvariantViolation("vprime_degree requires a shifted-torus alphabet");
    check_exponents(a, e);
    int d = 0;
    for (int i = 0; i + 1 < a.var_count(); ++i) d += e[i];
    return d;
}

GradedPolynomial GradedPolynomial::constant(const Alphabet& a, const PLocalScalar& c) {
    return monomial(a, Exponents(a.var_count(), 0), c);
}

GradedPolynomial GradedPolynomial::monomial(const Alphabet& a, const Exponents& e,
                                            const PLocalScalar& c) {
    check_exponents(a, e);
    GradedPolynomial f(a);
    f.add_term(e, c);
    return f;
}

GradedPolynomial GradedPolynomial::variable(const Alphabet& a, int idx) {
    Exponents e(a.var_count(), 0);
    if (idx < 0 || idx >= a.var_count()) throw InvariantViolation("variable index out of range");
    e[idx] = 1;
    return monomial(a, e);
}

PLocalScalar GradedPolynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? PLocalScalar(0) : it->second;
}

std::optional<int> GradedPolynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = monomial_degree(alpha_, terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (monomial_degree(alpha_, e) != d) return std::nullopt;
    return d;
}

void GradedPolynomial::add_term(const Exponents& e, const PLocalScalar& c) {
    if (c.is_zero()) return;
    check_exponents(alpha_, e);
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedPolynomial GradedPolynomial::operator-() const {
    GradedPolynomial r(alpha_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o) {
    check_same_alphabet(alpha_, o.alpha_, "operator+=");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o) {
    check_same_alphabet(alpha_, o.alpha_, "operator-=");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const PLocalScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
    check_same_alphabet(a.alpha_, b.alpha_, "operator*");
    GradedPolynomial r(a.alpha_);
    const int nv = a.alpha_.var_count();
    Exponents e(nv);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
            if (r.terms_.size() > kMaxTerms)
                throw InvariantViolation("polynomial term budget exceeded");
        }
    }
    return r;
}

GradedPolynomial mul_truncated(const GradedPolynomial& a, const GradedPolynomial& b,
                               int max_vprime_degree) {
    check_same_alphabet(a.alphabet(), b.alphabet(), "mul_truncated");
    if (a.alphabet().kind() != AlphabetKind::shifted_torus)
        throw InvariantViolation("mul_truncated requires a shifted-torus alphabet");
    GradedPolynomial r(a.alphabet());
    const int nv = a.alphabet().var_count();
    Exponents e(nv);
    for (const auto& [ea, ca] : a.terms()) {
        int da = 0;
        for (int i = 0; i + 1 < nv; ++i) da += ea[i];
        for (const auto& [eb, cb] : b.terms()) {
            int d = da;
            for (int i = 0; i + 1 < nv; ++i) d += eb[i];
            if (d > max_vprime_degree) continue;
            for (int i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
            if (r.term_count() > kMaxTerms)
                throw InvariantViolation("polynomial term budget exceeded");
        }
    }
    return r;
}

std::vector<Exponents> chern_basis(int n, int t, int cap) {
    (void)make_checked(AlphabetKind::chern, n, cap);
    std::vector<Exponents> out;
    if (t < 0 || t % 2 != 0) return out;
    const int target = t / 2;
    Exponents cur(n, 0);
    // enumerate exponent vectors with sum of (i+1)*cur[i] equal to target
    std::function<void(int, int)> rec = [&](int idx, int remaining) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (idx >= n) return;
        const int w = idx + 1;
        for (int q = remaining / w; q >= 0; --q) {
            cur[idx] = q;
            rec(idx + 1, remaining - q * w);
        }
        cur[idx] = 0;
    };
    rec(0, target);
    std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) { return a > b; });
    return out;
}

GradedPolynomial elementary_symmetric(const Alphabet& a, int j, const std::vector<int>& vars) {
    if (j < 0) throw UsageError("elementary symmetric index must be nonnegative");
    const int m = static_cast<int>(vars.size());
    GradedPolynomial zero = GradedPolynomial::zero(a);
    if (j > m) return zero;
    // DP over prod (1 + x_i z): acc[d] is the z^d coefficient
    std::vector<GradedPolynomial> acc(static_cast<std::size_t>(j) + 1, zero);
    acc[0] = GradedPolynomial::constant(a, 1);
    for (int i = 0; i < m; ++i) {
        GradedPolynomial x = GradedPolynomial::variable(a, vars[i]);
        for (int d = std::min(j, i + 1); d >= 1; --d) acc[d] += acc[d - 1] * x;
    }
    return acc[j];
}

GradedPolynomial elementary_symmetric(const Alphabet& a, int j) {
    std::vector<int> vars(a.var_count());
    for (int i = 0; i < a.var_count(); ++i) vars[i] = i;
    return elementary_symmetric(a, j, vars);
}

GradedPolynomial chern_to_torus(const GradedPolynomial& f) {
    if (f.alphabet().kind() != AlphabetKind::chern)
        throw InvariantViolation("chern_to_torus requires a Chern-alphabet input");
    const int n = f.alphabet().rank();
    Alphabet tor = Alphabet::torus(n, std::max(Alphabet::kDefaultVarCap, n));
    std::vector<GradedPolynomial> sigma;
    sigma.reserve(n + 1);
    for (int k = 0; k <= n; ++k) sigma.push_back(elementary_symmetric(tor, k));
    GradedPolynomial out(tor);
    for (const auto& [e, c] : f.terms()) {
        GradedPolynomial term = GradedPolynomial::constant(tor, c);
        for (int i = 0; i < n; ++i)
            for (int rep = 0; rep < e[i]; ++rep) term = term * sigma[i + 1];
        out += term;
    }
    return out;
}

GradedPolynomial shift_expand(const GradedPolynomial& f, std::optional<int> vprime_truncation) {
    if (f.alphabet().kind() != AlphabetKind::torus)
        throw InvariantViolation("shift_expand requires a torus-alphabet input");
    const int n = f.alphabet().rank();
    Alphabet sh = Alphabet::shifted_torus(n, std::max(Alphabet::kDefaultVarCap, n));
    const int cutoff = vprime_truncation.value_or(-1);
    GradedPolynomial out(sh);
    for (const auto& [e, c] : f.terms()) {
        Exponents base(n, 0);
        base[n - 1] = e[n - 1];  // v_n passes through
        GradedPolynomial term = GradedPolynomial::monomial(sh, base, c);
        for (int i = 0; i + 1 < n; ++i) {
            if (e[i] == 0) continue;
            GradedPolynomial binom(sh);
            Exponents ep(n, 0);
            ep[i] = 1;
            binom.add_term(ep, 1);
            Exponents en(n, 0);
            en[n - 1] = 1;
            binom.add_term(en, 1);
            for (int rep = 0; rep < e[i]; ++rep)
                term = vprime_truncation ? mul_truncated(term, binom, cutoff) : term * binom;
        }
        out += term;
    }
    return out;
}

GradedPolynomial coeff_of_vn_power(const GradedPolynomial& f, int k) {
    if (f.alphabet().kind() != AlphabetKind::shifted_torus)
        throw InvariantViolation("coeff_of_vn_power requires a shifted-torus input");
    const int n = f.alphabet().var_count();
    GradedPolynomial out(f.alphabet());
    for (const auto& [e, c] : f.terms()) {
        if (e[n - 1] != k) continue;
        Exponents stripped = e;
        stripped[n - 1] = 0;
        out.add_term(stripped, c);
    }
    return out;
}

GradedPolynomial shifted_sigma_truncated(int k, int n, int d) {
    if (k < 0 || d < 0) throw UsageError("shifted_sigma_truncated: negative argument");
    Alphabet sh = Alphabet::shifted_torus(n, std::max(Alphabet::kDefaultVarCap, n));
    GradedPolynomial out(sh);
    if (k > n) return out;  // sigma_k of n variables vanishes
    std::vector<int> vprimes;
    for (int i = 0; i + 1 < n; ++i) vprimes.push_back(i);
    for (int j = 0; j <= std::min(d, k); ++j) {
        if (j > static_cast<int>(vprimes.size())) break;
        Int count = plocal::binom_exact(static_cast<unsigned long>(n - j),
                                        static_cast<unsigned long>(k - j));
        if (count == 0) continue;
        GradedPolynomial part = elementary_symmetric(sh, j, vprimes);
        Exponents vn(n, 0);
        vn[n - 1] = k - j;
        part = part * GradedPolynomial::monomial(sh, vn, PLocalScalar(count));
        out += part;
    }
    return out;
}

GradedPolynomial divergence_chern(const GradedPolynomial& f, int n) {
    if (f.alphabet().kind() != AlphabetKind::chern)
        throw InvariantViolation("divergence_chern requires a Chern-alphabet input");
    if (f.alphabet().rank() != n)
        throw InvariantViolation("divergence_chern: rank does not match alphabet");
    GradedPolynomial out(f.alphabet());
    for (const auto& [e, c] : f.terms()) {
        for (int k = 1; k <= n; ++k) {
            if (e[k - 1] == 0) continue;
            PLocalScalar coeff = c * PLocalScalar(e[k - 1]) * PLocalScalar(n - k + 1);
            Exponents img = e;
            img[k - 1] -= 1;
            if (k >= 2) img[k - 2] += 1;  // c_0 = 1
            out.add_term(img, coeff);
        }
    }
    return out;
}

GradedPolynomial divergence_torus(const GradedPolynomial& f) {
    if (f.alphabet().kind() != AlphabetKind::torus)
        throw InvariantViolation("divergence_torus requires a torus-alphabet input");
    const int n = f.alphabet().var_count();
    GradedPolynomial out(f.alphabet());
    for (const auto& [e, c] : f.terms()) {
        for (int i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            Exponents img = e;
            img[i] -= 1;
            out.add_term(img, c * PLocalScalar(e[i]));
        }
    }
    return out;
}

Exponents raise_top_variable(const Exponents& e, int p) {
    if (p < 3) throw UsageError("raise_top_variable: p must be an odd prime");
    int top = 0;  // 1-based index of the largest occurring variable
    int halfdeg = 0;
    for (int i = 0; i < static_cast<int>(e.size()); ++i) {
        if (e[i] < 0) throw UsageError("raise_top_variable: negative exponent");
        if (e[i] > 0) top = i + 1;
        halfdeg += (i + 1) * e[i];
    }
    if (halfdeg != p)
        throw UsageError("raise_top_variable: monomial degree " + std::to_string(2 * halfdeg) +
                         ", expected " + std::to_string(2 * p));
    if (top >= p)
        throw UsageError("raise_top_variable: top variable index " + std::to_string(top) +
                         " must be below p");
    if (top + 1 > static_cast<int>(e.size()))
        throw UsageError("raise_top_variable: alphabet too small for the raised index");
    Exponents out = e;
    out[top - 1] -= 1;
    out[top] += 1;
    return out;
}

Sigma1SubsetSum sigma1_subset_sum(int n, int p) {
    if (p < 1 || n < 1) throw UsageError("sigma1_subset_sum: positive arguments required");
    if (p > n) throw UsageError("sigma1_subset_sum: p exceeds n");
    if (n > 24) throw UsageError("sigma1_subset_sum: brute force capped at n <= 24");
    std::vector<Int> count(n, 0);
    std::vector<int> idx(p);
    for (int i = 0; i < p; ++i) idx[i] = i;
    while (true) {
        for (int i : idx) count[i] += 1;
        int pos = p - 1;
        while (pos >= 0 && idx[pos] == n - p + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < p; ++i) idx[i] = idx[i - 1] + 1;
    }
    Sigma1SubsetSum r{count[0], true};
    for (const Int& c : count)
        if (c != r.lambda) r.verified = false;
    if (r.lambda != plocal::binom_exact(static_cast<unsigned long>(n - 1),
                                        static_cast<unsigned long>(p - 1)))
        r.verified = false;
    return r;
}

std::string monomial_str(const Alphabet& a, const Exponents& e) {
    check_exponents(a, e);
    std::string out;
    for (int i = 0; i < a.var_count(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += a.var_name(i);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string polynomial_str(const GradedPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : f.terms()) {
        std::string mono = monomial_str(f.alphabet(), e);
        PLocalScalar abs = c;
        bool negative = c.num() < 0;
        if (negative) abs = -abs;
        std::string coeff = abs.str();
        std::string piece;
        if (mono == "1")
            piece = coeff;
        else if (coeff == "1")
            piece = mono;
        else
            piece = coeff + "*" + mono;
        if (out.empty())
            out = negative ? "-" + piece : piece;
        else
            out += (negative ? " - " : " + ") + piece;
    }
    return out;
}

Exponents parse_chern_monomial(const std::string& text, int n) {
    Exponents e(n, 0);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_int = [&](const char* what) -> long {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start)
            throw UsageError(std::string("expected ") + what + " at position " +
                             std::to_string(start) + " in '" + text + "'");
        return std::stol(text.substr(start, i - start));
    };
    bool first = true;
    bool saw_any = false;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        if (!first) {
            if (text[i] != '*')
                throw UsageError("expected '*' at position " + std::to_string(i) + " in '" +
                                 text + "'");
            ++i;
            skip_ws();
        }
        if (i >= text.size() || text[i] != 'c')
            throw UsageError("expected variable 'c<k>' at position " + std::to_string(i) +
                             " in '" + text + "'");
        ++i;
        long k = parse_int("variable index");
        if (k < 1 || k > n)
            throw UsageError("variable c" + std::to_string(k) + " out of range 1.." +
                             std::to_string(n));
        long power = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            power = parse_int("exponent");
            if (power < 0) throw UsageError("negative exponent");
        }
        e[k - 1] += static_cast<int>(power);
        first = false;
        saw_any = true;
    }
    if (!saw_any) throw UsageError("empty monomial expression");
    return e;
}

}  // namespace bpucoh::polyring
