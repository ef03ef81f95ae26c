#ifndef RRG_QSERIES_HPP
#define RRG_QSERIES_HPP

#include "rrg/partition.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace rrg {

// Exact power series c_0 + c_1 q + ... + c_N q^N. Arithmetic is checked;
// overflow throws OverflowError.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int truncation);
    static TruncatedSeries one(int truncation);
    static TruncatedSeries from_coefficients(std::vector<std::int64_t> coefficients);

    int truncation() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<std::int64_t> &coefficients() const { return c_; }
    std::int64_t operator[](int exponent) const { return c_.at(static_cast<std::size_t>(exponent)); }
    // Adds delta to the coefficient of q^exponent; exponents beyond N are ignored.
    void add_term(int exponent, std::int64_t delta);

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

  private:
    std::vector<std::int64_t> c_;
};

std::int64_t checked_add(std::int64_t x, std::int64_t y);
std::int64_t checked_mul(std::int64_t x, std::int64_t y);

TruncatedSeries add(const TruncatedSeries &s, const TruncatedSeries &t);
TruncatedSeries mul(const TruncatedSeries &s, const TruncatedSeries &t);
TruncatedSeries invert_unit(const TruncatedSeries &s);

enum class PochSign { plus, minus };

// plus: (q^a; q^m)_inf = prod (1 - q^{a+jm}); minus: (-q^a; q^m)_inf.
TruncatedSeries poch_inf(PochSign sign, int a, int m, int N);

// Bilateral sum over n of (-1)^n q^{(alpha n^2 + beta n)/2}.
struct ThetaSpec {
    int alpha;
    int beta;
};
TruncatedSeries theta_sum(ThetaSpec spec, int N);

// Partitions whose parts avoid the given residue classes modulo `modulus`.
TruncatedSeries restricted_gf(const std::set<int> &forbidden_residues, int modulus, int N);

// Andrews' multisum for the Rogers-Ramanujan-Gordon identities.
TruncatedSeries multisum_rrg(int k, int a, int N);

TruncatedSeries family_gf(Family family, int k, int a, int N);

// First exponent where the series differ, or -1 when equal.
int first_difference(const TruncatedSeries &s, const TruncatedSeries &t);

std::string to_string(const TruncatedSeries &s);

} // namespace rrg

#endif
