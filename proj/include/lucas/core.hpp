#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lucas/bigint.hpp"

namespace lucas {

/// Recurrence parameter for the sequence U_0 = 0, U_1 = 1,
/// U_{k+2} = r*U_{k+1} + U_k. r = 1 is Fibonacci, r = 2 is Pell.
struct LucasParams {
    std::int64_t r = 1;

    explicit LucasParams(std::int64_t r_) : r(r_) {
        if (r < 1) throw std::invalid_argument("LucasParams: r must be >= 1");
    }
};

/// Immutable prefix table U_0 .. U_{n_max} for one value of r.
/// Safe to share across threads once constructed.
class TermTable {
public:
    TermTable(LucasParams params, std::int64_t n_max) : r_(params.r) {
        if (n_max < 1) throw std::invalid_argument("TermTable: n_max must be >= 1");
        terms_.reserve(static_cast<std::size_t>(n_max) + 1);
        terms_.emplace_back(0);
        terms_.emplace_back(1);
        for (std::int64_t k = 2; k <= n_max; ++k)
            terms_.push_back(r_ * terms_[k - 1] + terms_[k - 2]);
    }

    std::int64_t r() const { return r_; }
    std::int64_t max_index() const { return static_cast<std::int64_t>(terms_.size()) - 1; }

    const BigInt& at(std::int64_t n) const {
        if (n < 0 || n > max_index()) throw std::out_of_range("TermTable::at: index out of range");
        return terms_[static_cast<std::size_t>(n)];
    }

    const std::vector<BigInt>& terms() const { return terms_; }

private:
    std::int64_t r_;
    std::vector<BigInt> terms_;
};

/// U_n by exact iteration. Extended to n = -1 with U_{-1} = 1, which is what
/// the backward recurrence U_{-1} = U_1 - r*U_0 gives.
inline BigInt lucas_term(LucasParams params, std::int64_t n) {
    if (n < -1) throw std::invalid_argument("lucas_term: n must be >= -1");
    if (n == -1) return 1;
    if (n == 0) return 0;
    BigInt prev = 0, cur = 1;
    for (std::int64_t k = 1; k < n; ++k) {
        BigInt next = params.r * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline TermTable lucas_prefix(LucasParams params, std::int64_t n_max) {
    return TermTable(params, n_max);
}

/// gcd(U_n, U_m); by the classical divisibility property this equals U_{gcd(n,m)}.
inline BigInt lucas_gcd(LucasParams params, std::int64_t n, std::int64_t m) {
    if (n < 1 || m < 1) throw std::invalid_argument("lucas_gcd: indices must be >= 1");
    return gcd(lucas_term(params, n), lucas_term(params, m));
}

}  // namespace lucas
