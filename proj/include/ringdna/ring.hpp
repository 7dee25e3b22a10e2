#pragma once

// Arithmetic on R = Z4 + uZ4 (u^2 = 0), the codon map, and the Gray map.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"

namespace ringdna {

/// An element a + u*b of R, always stored with a, b in {0,1,2,3}.
class RingElem {
public:
    constexpr RingElem() = default;
    constexpr RingElem(int a, int b = 0) : a_(reduce(a)), b_(reduce(b)) {}  // NOLINT: implicit from Z4

    static constexpr RingElem from_index(int idx) { return RingElem(idx >> 2, idx & 3); }

    constexpr int a() const { return a_; }
    constexpr int b() const { return b_; }
    // 4a + b, a dense index in [0, 16).
    constexpr int index() const { return a_ * 4 + b_; }

    constexpr bool is_zero() const { return a_ == 0 && b_ == 0; }
    // The maximal ideal is <2, u>, so units are exactly the elements with odd a.
    constexpr bool is_unit() const { return (a_ & 1) != 0; }

    constexpr RingElem operator+(RingElem o) const { return {a_ + o.a_, b_ + o.b_}; }
    constexpr RingElem operator-(RingElem o) const { return {a_ - o.a_, b_ - o.b_}; }
    constexpr RingElem operator-() const { return {-a_, -b_}; }
    constexpr RingElem operator*(RingElem o) const { return {a_ * o.a_, a_ * o.b_ + b_ * o.a_}; }
    constexpr RingElem& operator+=(RingElem o) { return *this = *this + o; }
    constexpr RingElem& operator-=(RingElem o) { return *this = *this - o; }
    constexpr RingElem& operator*=(RingElem o) { return *this = *this * o; }

    constexpr bool operator==(const RingElem&) const = default;
    constexpr auto operator<=>(const RingElem&) const = default;

private:
    static constexpr std::uint8_t reduce(int v) { return static_cast<std::uint8_t>(((v % 4) + 4) % 4); }

    std::uint8_t a_ = 0;
    std::uint8_t b_ = 0;
};

inline constexpr RingElem kU{0, 1};
inline constexpr RingElem kOnePlusU{1, 1};

/// All 16 elements in index order.
constexpr std::array<RingElem, 16> all_elements() {
    std::array<RingElem, 16> out{};
    for (int i = 0; i < 16; ++i) out[i] = RingElem::from_index(i);
    return out;
}

constexpr RingElem add(RingElem x, RingElem y) { return x + y; }
constexpr RingElem mul(RingElem x, RingElem y) { return x * y; }
constexpr bool is_unit(RingElem x) { return x.is_unit(); }

/// Watson-Crick complement lifted to R: x + complement(x) = 1 + u.
constexpr RingElem complement(RingElem x) { return kOnePlusU - x; }

// ---------------------------------------------------------------------------
// Codons

enum class Nucleotide : std::uint8_t { A, C, G, T };

constexpr char to_char(Nucleotide n) {
    constexpr char letters[] = {'A', 'C', 'G', 'T'};
    return letters[static_cast<int>(n)];
}

constexpr Nucleotide nucleotide_from_char(char c) {
    switch (c) {
        case 'A': return Nucleotide::A;
        case 'C': return Nucleotide::C;
        case 'G': return Nucleotide::G;
        case 'T': return Nucleotide::T;
        default: throw BadAlphabet(std::string("not a nucleotide: '") + c + "'");
    }
}

constexpr Nucleotide watson_crick(Nucleotide n) {
    switch (n) {
        case Nucleotide::A: return Nucleotide::T;
        case Nucleotide::T: return Nucleotide::A;
        case Nucleotide::C: return Nucleotide::G;
        case Nucleotide::G: return Nucleotide::C;
    }
    return n;
}

struct Codon {
    Nucleotide first = Nucleotide::A;
    Nucleotide second = Nucleotide::A;

    constexpr bool operator==(const Codon&) const = default;

    std::string str() const { return {to_char(first), to_char(second)}; }
};

namespace detail {

// Codon table indexed by RingElem::index() = 4a + b.
inline constexpr std::array<std::string_view, 16> kCodonTable = {
    "AA", "CC", "GT", "AC",  // 0,     u,     2u,    3u
    "GG", "TT", "TG", "CA",  // 1,     1+u,   1+2u,  1+3u
    "AT", "CG", "AG", "CT",  // 2,     2+u,   2+2u,  2+3u
    "GC", "TA", "GA", "TC",  // 3,     3+u,   3+2u,  3+3u
};

}  // namespace detail

constexpr Codon theta(RingElem x) {
    auto s = detail::kCodonTable[x.index()];
    return {nucleotide_from_char(s[0]), nucleotide_from_char(s[1])};
}

constexpr RingElem theta_inv(Codon c) {
    for (int i = 0; i < 16; ++i) {
        if (theta(RingElem::from_index(i)) == c) return RingElem::from_index(i);
    }
    return {};  // unreachable, theta is onto
}

// ---------------------------------------------------------------------------
// Gray map and Lee weight

/// Z4 Gray map: psi(c) = (beta(c), gamma(c)) with c = alpha + 2 beta and alpha + beta + gamma = 0 (mod 2).
constexpr std::pair<int, int> psi(int c) {
    c = ((c % 4) + 4) % 4;
    const int alpha = c & 1;
    const int beta = (c >> 1) & 1;
    return {beta, alpha ^ beta};
}

using GrayImage = std::array<std::uint8_t, 4>;

/// Phi(a + ub) = psi(b) || psi(a + b).
constexpr GrayImage gray(RingElem x) {
    auto [b0, b1] = psi(x.b());
    auto [s0, s1] = psi(x.a() + x.b());
    return {static_cast<std::uint8_t>(b0), static_cast<std::uint8_t>(b1),
            static_cast<std::uint8_t>(s0), static_cast<std::uint8_t>(s1)};
}

constexpr int lee_weight_z4(int c) {
    c = ((c % 4) + 4) % 4;
    return c < 4 - c ? c : 4 - c;
}

constexpr int lee_weight(RingElem x) { return lee_weight_z4(x.b()) + lee_weight_z4(x.a() + x.b()); }

// ---------------------------------------------------------------------------
// Text form: "a", "bu" (just "u" for b = 1), or "a+bu".

inline std::string to_string(RingElem x) {
    auto upart = [](int b) { return b == 1 ? std::string("u") : std::to_string(b) + "u"; };
    if (x.b() == 0) return std::to_string(x.a());
    if (x.a() == 0) return upart(x.b());
    return std::to_string(x.a()) + "+" + upart(x.b());
}

inline RingElem parse_ring_elem(std::string_view s) {
    auto digit = [&](char c) {
        if (c < '0' || c > '3') throw ParseError("bad ring element: '" + std::string(s) + "'");
        return c - '0';
    };
    // "bu" or "u" with b in 1..3
    auto parse_upart = [&](std::string_view t) {
        if (t == "u") return 1;
        if (t.size() == 2 && t[1] == 'u') {
            int b = digit(t[0]);
            if (b >= 2) return b;
        }
        throw ParseError("bad ring element: '" + std::string(s) + "'");
    };
    if (s.empty()) throw ParseError("empty ring element");
    if (s.size() == 1 && s[0] != 'u') return {digit(s[0]), 0};
    auto plus = s.find('+');
    if (plus == std::string_view::npos) return {0, parse_upart(s)};
    if (plus != 1) throw ParseError("bad ring element: '" + std::string(s) + "'");
    int a = digit(s[0]);
    if (a == 0) throw ParseError("bad ring element: '" + std::string(s) + "'");
    return {a, parse_upart(s.substr(2))};
}

}  // namespace ringdna
