#pragma once

// Factorization of x^n - 1 over F2 and over Z4 (as a subring of R) for odd n.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "binpoly.hpp"
#include "errors.hpp"
#include "poly.hpp"

namespace ringdna {

inline constexpr int kMaxLength = 63;

inline bool is_supported_length(int n) { return n >= 1 && n <= kMaxLength && (n & 1) == 1; }

inline void require_supported_length(int n) {
    if (!is_supported_length(n)) throw UnsupportedLength(n);
}

/// Sizes of the 2-cyclotomic cosets mod n; each is the degree of one irreducible factor of x^n - 1.
inline std::map<int, int> cyclotomic_coset_degrees(int n) {
    std::map<int, int> counts;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int size = 0;
        for (int j = i; !seen[j]; j = (2 * j) % n) {
            seen[j] = true;
            ++size;
        }
        ++counts[size];
    }
    return counts;
}

/// Distinct monic irreducible factors of x^n - 1 over F2, sorted by (degree, coefficients).
///
/// Trial division in increasing degree: once every factor of degree < d has been
/// divided out, any degree-d divisor of the cofactor is irreducible. Only degrees
/// that occur as coset sizes are searched, and the last factor of the largest
/// degree is read off as the remaining cofactor, so prime n with a single large
/// factor costs nothing.
inline std::vector<BinPoly> factor_xn_minus_1_f2(int n) {
    require_supported_length(n);
    auto expected = cyclotomic_coset_degrees(n);
    int remaining = 0;
    for (auto [d, k] : expected) remaining += k;

    std::vector<BinPoly> out;
    BinPoly rest = BinPoly::xn_plus_1(n);
    for (auto [d, count] : expected) {
        int found = 0;
        const std::uint64_t mids = std::uint64_t{1} << (d - 1);
        for (std::uint64_t mid = 0; found < count && mid < mids; ++mid) {
            if (remaining == 1) {
                out.push_back(rest);
                rest = BinPoly(1);
                ++found;
                --remaining;
                break;
            }
            const BinPoly cand(d == 1 ? 0b11u : (std::uint64_t{1} << d) | (mid << 1) | 1u);
            auto [q, r] = divmod(rest, cand);
            if (!r.is_zero()) continue;
            out.push_back(cand);
            rest = q;
            ++found;
            --remaining;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Monic Z4 lift of a monic divisor f of x^n - 1 over F2 that divides x^n - 1 over Z4.
///
/// One Graeffe step: split f = e + o into even and odd parts with 0/1 coefficients
/// read over Z4; then e(x)^2 - o(x)^2 is a polynomial in x^2, say h(x^2), whose
/// roots are the squares of the roots of f. The sign is fixed so h is monic.
inline Poly hensel_lift(BinPoly f, int n) {
    require_supported_length(n);
    if (f.is_zero() || !divmod(BinPoly::xn_plus_1(n), f).second.is_zero()) throw NotAFactor();
    std::vector<RingElem> even, odd;
    const int d = f.degree();
    even.resize(static_cast<std::size_t>(d + 1));
    odd.resize(static_cast<std::size_t>(d + 1));
    for (int k = 0; k <= d; ++k) (k % 2 == 0 ? even : odd)[k] = RingElem(f[k]);
    const Poly e(std::move(even)), o(std::move(odd));
    const Poly sq = e * e - o * o;
    std::vector<RingElem> h(static_cast<std::size_t>(d + 1));
    for (int k = 0; k <= d; ++k) h[k] = sq[2 * k];
    Poly lifted(std::move(h));
    if (!lifted.is_monic()) lifted = -lifted;
    return lifted;
}

/// Hensel lifts of all F2 factors, in the same order; they multiply to x^n - 1.
inline std::vector<Poly> factor_xn_minus_1_z4(int n) {
    std::vector<Poly> out;
    for (BinPoly f : factor_xn_minus_1_f2(n)) out.push_back(hensel_lift(f, n));
    return out;
}

/// Monic divisors of x^n - 1 over Z4, addressed by subsets of the lifted factors.
class DivisorLattice {
public:
    explicit DivisorLattice(int n) : n_(n), factors_(factor_xn_minus_1_z4(n)) {}

    int n() const { return n_; }
    const std::vector<Poly>& factors() const { return factors_; }
    std::size_t factor_count() const { return factors_.size(); }
    std::uint64_t subset_count() const { return std::uint64_t{1} << factors_.size(); }

    Poly product(std::uint64_t subset) const {
        Poly p({1});
        for (std::size_t k = 0; k < factors_.size(); ++k)
            if ((subset >> k) & 1u) p *= factors_[k];
        return p;
    }

private:
    int n_;
    std::vector<Poly> factors_;
};

}  // namespace ringdna
