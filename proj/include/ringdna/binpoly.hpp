#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ringdna {

/// Polynomial over F2 of degree at most 63, bit k holding the coefficient of x^k.
class BinPoly {
public:
    constexpr BinPoly() = default;
    constexpr explicit BinPoly(std::uint64_t bits) : bits_(bits) {}

    static BinPoly from_coeffs(const std::vector<int>& coeffs) {
        if (coeffs.size() > 64) throw std::length_error("BinPoly degree above 63");
        std::uint64_t bits = 0;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (coeffs[k] & 1) bits |= std::uint64_t{1} << k;
        return BinPoly(bits);
    }
    // x^n + 1, which equals x^n - 1 over F2.
    static BinPoly xn_plus_1(int n) { return BinPoly((std::uint64_t{1} << n) | 1u); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool is_zero() const { return bits_ == 0; }
    constexpr int degree() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }
    constexpr int operator[](int k) const { return static_cast<int>((bits_ >> k) & 1u); }

    std::vector<int> coeffs() const {
        std::vector<int> v(static_cast<std::size_t>(degree() + 1));
        for (int k = 0; k <= degree(); ++k) v[k] = (*this)[k];
        return v;
    }

    constexpr BinPoly operator+(BinPoly o) const { return BinPoly(bits_ ^ o.bits_); }

    BinPoly operator*(BinPoly o) const {
        if (is_zero() || o.is_zero()) return {};
        if (degree() + o.degree() > 63) throw std::overflow_error("BinPoly product degree above 63");
        std::uint64_t acc = 0;
        for (std::uint64_t b = o.bits_, k = 0; b; b >>= 1, ++k)
            if (b & 1u) acc ^= bits_ << k;
        return BinPoly(acc);
    }

    friend std::pair<BinPoly, BinPoly> divmod(BinPoly f, BinPoly g) {
        if (g.is_zero()) throw std::domain_error("division by zero polynomial");
        std::uint64_t q = 0, r = f.bits_;
        const int dg = g.degree();
        for (int dr = BinPoly(r).degree(); dr >= dg; dr = BinPoly(r).degree()) {
            q |= std::uint64_t{1} << (dr - dg);
            r ^= g.bits_ << (dr - dg);
        }
        return {BinPoly(q), BinPoly(r)};
    }

    constexpr bool operator==(const BinPoly&) const = default;
    // Ordered by degree, then by the coefficient bit pattern.
    constexpr std::strong_ordering operator<=>(const BinPoly& o) const {
        if (auto c = degree() <=> o.degree(); c != 0) return c;
        return bits_ <=> o.bits_;
    }

private:
    std::uint64_t bits_ = 0;
};

inline std::string to_string(BinPoly f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= f.degree(); ++k) {
        if (k) out += ',';
        out += static_cast<char>('0' + f[k]);
    }
    return out;
}

}  // namespace ringdna
