#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace comin {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned j = 1; j <= k; ++j) {
        r *= (n - k + j);
        r /= j;
    }
    return r;
}

/// d! / (b_1! ... b_m!), defined only when the parts sum to d.
inline Int multinomial(unsigned d, const std::vector<unsigned>& parts) {
    unsigned s = 0;
    for (unsigned b : parts) s += b;
    if (s != d)
        throw std::invalid_argument("multinomial: parts sum to " + std::to_string(s) +
                                    ", expected " + std::to_string(d));
    Int r = 1;
    unsigned placed = 0;
    for (unsigned b : parts) {
        // multiply by binom(placed + b, b)
        for (unsigned j = 1; j <= b; ++j) {
            r *= (placed + j);
            r /= j;
        }
        placed += b;
    }
    return r;
}

/// Pascal triangle of exact binomials, grown on demand.
class BinomialTable {
  public:
    const Int& at(unsigned n, unsigned k) {
        if (k > n) return zero_;
        while (rows_.size() <= n) {
            size_t m = rows_.size();
            std::vector<Int> row(m + 1);
            row[0] = 1;
            row[m] = 1;
            for (size_t j = 1; j < m; ++j) row[j] = rows_[m - 1][j - 1] + rows_[m - 1][j];
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

  private:
    std::vector<std::vector<Int>> rows_{{Int(1)}};
    Int zero_ = 0;
};

/// Polynomial in divided-power form: coeffs[b] stands for coeffs[b] * t^b / b!.
/// Products then stay integral: (t^a/a!)(t^b/b!) = binom(a+b,a) t^(a+b)/(a+b)!.
struct EgfPoly {
    std::vector<Int> c;

    bool is_zero() const {
        for (const Int& x : c)
            if (x != 0) return false;
        return true;
    }

    void add_scaled_shift(const EgfPoly& p, unsigned shift, const Int& scale, unsigned truncate_deg,
                          BinomialTable& binom) {
        if (scale == 0) return;
        size_t need = std::min<size_t>(truncate_deg + 1, p.c.size() + shift);
        if (c.size() < need) c.resize(need);
        for (size_t b = 0; b < p.c.size(); ++b) {
            if (p.c[b] == 0) continue;
            size_t d = b + shift;
            if (d > truncate_deg) break;
            c[d] += p.c[b] * scale * binom.at(static_cast<unsigned>(d), shift);
        }
    }

    Int coeff(unsigned b) const { return b < c.size() ? c[b] : Int(0); }
};

inline std::string to_decimal(const Int& v) { return v.str(); }

}  // namespace comin
