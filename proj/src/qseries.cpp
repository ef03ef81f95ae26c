#include "rrg/qseries.hpp"

#include "rrg/errors.hpp"

#include <sstream>
#include <utility>

namespace rrg {

TruncatedSeries::TruncatedSeries(int truncation) {
    if (truncation < 0) throw ParameterError("truncation must be nonnegative");
    c_.assign(static_cast<std::size_t>(truncation) + 1, 0);
}

TruncatedSeries TruncatedSeries::one(int truncation) {
    TruncatedSeries s(truncation);
    s.c_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::from_coefficients(std::vector<std::int64_t> coefficients) {
    if (coefficients.empty()) throw ParameterError("series needs at least one coefficient");
    TruncatedSeries s(0);
    s.c_ = std::move(coefficients);
    return s;
}

void TruncatedSeries::add_term(int exponent, std::int64_t delta) {
    if (exponent < 0) throw ParameterError("negative exponent");
    if (exponent > truncation()) return;
    auto &c = c_[static_cast<std::size_t>(exponent)];
    c = checked_add(c, delta);
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("series coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("series coefficient overflow");
    return r;
}

static void require_same_truncation(const TruncatedSeries &s, const TruncatedSeries &t) {
    if (s.truncation() != t.truncation())
        throw ParameterError("mismatched truncations " + std::to_string(s.truncation()) + " and " +
                             std::to_string(t.truncation()));
}

TruncatedSeries add(const TruncatedSeries &s, const TruncatedSeries &t) {
    require_same_truncation(s, t);
    TruncatedSeries r = s;
    for (int i = 0; i <= t.truncation(); ++i) r.add_term(i, t[i]);
    return r;
}

TruncatedSeries mul(const TruncatedSeries &s, const TruncatedSeries &t) {
    require_same_truncation(s, t);
    const int N = s.truncation();
    std::vector<std::int64_t> out(static_cast<std::size_t>(N) + 1, 0);
    for (int i = 0; i <= N; ++i) {
        if (s[i] == 0) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (t[j] == 0) continue;
            auto &c = out[static_cast<std::size_t>(i + j)];
            c = checked_add(c, checked_mul(s[i], t[j]));
        }
    }
    return TruncatedSeries::from_coefficients(std::move(out));
}

TruncatedSeries invert_unit(const TruncatedSeries &s) {
    const std::int64_t c0 = s[0];
    if (c0 != 1 && c0 != -1) throw ParameterError("invert_unit needs constant term +1 or -1");
    const int N = s.truncation();
    std::vector<std::int64_t> t(static_cast<std::size_t>(N) + 1, 0);
    t[0] = c0;
    for (int n = 1; n <= N; ++n) {
        std::int64_t acc = 0;
        for (int j = 1; j <= n; ++j)
            if (s[j] != 0) acc = checked_add(acc, checked_mul(s[j], t[static_cast<std::size_t>(n - j)]));
        // c0 * t_n = -acc and c0 is its own inverse.
        t[static_cast<std::size_t>(n)] = checked_mul(-acc, c0);
    }
    return TruncatedSeries::from_coefficients(std::move(t));
}

// Multiplies s in place by (1 + sgn * q^e).
static void mul_binomial(std::vector<std::int64_t> &s, int e, int sgn) {
    const int N = static_cast<int>(s.size()) - 1;
    for (int i = N; i >= e; --i)
        s[static_cast<std::size_t>(i)] =
            checked_add(s[static_cast<std::size_t>(i)], sgn * s[static_cast<std::size_t>(i - e)]);
}

TruncatedSeries poch_inf(PochSign sign, int a, int m, int N) {
    if (a < 1 || m < 1) throw ParameterError("poch_inf needs a >= 1 and m >= 1");
    TruncatedSeries one = TruncatedSeries::one(N);
    std::vector<std::int64_t> c = one.coefficients();
    const int sgn = sign == PochSign::plus ? -1 : 1;
    for (int e = a; e <= N; e += m) mul_binomial(c, e, sgn);
    return TruncatedSeries::from_coefficients(std::move(c));
}

TruncatedSeries theta_sum(ThetaSpec spec, int N) {
    if (spec.alpha <= 0) throw ParameterError("theta_sum needs a positive quadratic coefficient");
    if ((spec.alpha + spec.beta) % 2 != 0)
        throw ParameterError("theta_sum exponents are not integral (alpha + beta odd)");
    TruncatedSeries s(N);
    auto exponent = [&](long long n) { return (spec.alpha * n * n + spec.beta * n) / 2; };
    s.add_term(0, 1);
    for (long long n = 1;; ++n) {
        const long long ep = exponent(n), em = exponent(-n);
        const bool done_p = ep > N && ep > exponent(n - 1);
        const bool done_m = em > N && em > exponent(-(n - 1));
        const std::int64_t sg = n % 2 == 0 ? 1 : -1;
        if (ep < 0 || em < 0) throw ParameterError("theta_sum exponent is negative");
        if (ep <= N) s.add_term(static_cast<int>(ep), sg);
        if (em <= N) s.add_term(static_cast<int>(em), sg);
        if (done_p && done_m) break;
    }
    return s;
}

TruncatedSeries restricted_gf(const std::set<int> &forbidden_residues, int modulus, int N) {
    if (modulus < 1) throw ParameterError("modulus must be positive");
    std::vector<std::int64_t> c(static_cast<std::size_t>(N) + 1, 0);
    c[0] = 1;
    for (int part = 1; part <= N; ++part) {
        if (forbidden_residues.count(part % modulus)) continue;
        for (int i = part; i <= N; ++i)
            c[static_cast<std::size_t>(i)] =
                checked_add(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i - part)]);
    }
    return TruncatedSeries::from_coefficients(std::move(c));
}

TruncatedSeries multisum_rrg(int k, int a, int N) {
    check_gordon_params(k, a);
    // parts_at_most[n] = 1/(q;q)_n truncated at N.
    std::vector<TruncatedSeries> parts_at_most;
    parts_at_most.push_back(TruncatedSeries::one(N));
    for (int n = 1; n <= N; ++n) {
        std::vector<std::int64_t> c = parts_at_most.back().coefficients();
        for (int i = n; i <= N; ++i)
            c[static_cast<std::size_t>(i)] =
                checked_add(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i - n)]);
        parts_at_most.push_back(TruncatedSeries::from_coefficients(std::move(c)));
    }
    TruncatedSeries total(N);
    // Choose N_{k-1} <= N_{k-2} <= ... <= N_1, innermost index first.
    // j runs from k-1 down to 1; `upper` is N_{j+1}; exponent accumulates
    // N_j^2 plus N_j when j >= a.
    auto rec = [&](auto &&self, int j, int prev, int exponent, const TruncatedSeries &acc) -> void {
        if (j == 0) {
            for (int e = 0; e + exponent <= N; ++e) total.add_term(e + exponent, acc[e]);
            return;
        }
        for (int Nj = prev;; ++Nj) {
            const int e = exponent + Nj * Nj + (j >= a ? Nj : 0);
            if (e > N) break;
            const int nj = Nj - prev;
            self(self, j - 1, Nj, e, nj == 0 ? acc : mul(acc, parts_at_most[static_cast<std::size_t>(nj)]));
        }
    };
    rec(rec, k - 1, 0, 0, TruncatedSeries::one(N));
    return total;
}

TruncatedSeries family_gf(Family family, int k, int a, int N) {
    check_gordon_params(k, a);
    if (N < 0) throw ParameterError("truncation must be nonnegative");
    if (family == Family::A) {
        const int m = 2 * k + 1;
        return restricted_gf({0, a % m, (m - a) % m}, m, N);
    }
    std::vector<std::int64_t> c;
    for (int n = 0; n <= N; ++n) c.push_back(count_family(family, k, a, n));
    return TruncatedSeries::from_coefficients(std::move(c));
}

int first_difference(const TruncatedSeries &s, const TruncatedSeries &t) {
    require_same_truncation(s, t);
    for (int i = 0; i <= s.truncation(); ++i)
        if (s[i] != t[i]) return i;
    return -1;
}

std::string to_string(const TruncatedSeries &s) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= s.truncation(); ++i) {
        const std::int64_t c = s[i];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        const std::int64_t m = c < 0 ? -c : c;
        if (i == 0 || m != 1) os << m;
        if (i >= 1) os << "q";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    os << " + O(q^" << s.truncation() + 1 << ")";
    return os.str();
}

} // namespace rrg
