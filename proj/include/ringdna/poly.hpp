#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ring.hpp"

namespace ringdna {

/// Polynomial over R in ascending-degree order, trailing zeros stripped.
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    Poly(std::initializer_list<RingElem> coeffs) : c_(coeffs) { normalize(); }
    explicit Poly(std::vector<RingElem> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly constant(RingElem c) { return Poly({c}); }
    static Poly monomial(RingElem c, std::size_t k) {
        std::vector<RingElem> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }
    // x^n - 1
    static Poly xn_minus_1(std::size_t n) { return monomial(1, n) - Poly({1}); }
    // 1 + x + ... + x^(n-1)
    static Poly all_ones(std::size_t n) { return Poly(std::vector<RingElem>(n, RingElem(1))); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const std::vector<RingElem>& coeffs() const { return c_; }

    RingElem operator[](std::size_t k) const { return k < c_.size() ? c_[k] : RingElem{}; }
    RingElem leading() const { return c_.empty() ? RingElem{} : c_.back(); }
    RingElem constant_term() const { return (*this)[0]; }
    bool is_monic() const { return !c_.empty() && c_.back() == RingElem(1); }

    Poly operator+(const Poly& o) const {
        std::vector<RingElem> v(std::max(c_.size(), o.c_.size()));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = (*this)[k] + o[k];
        return Poly(std::move(v));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator-() const { return scaled(RingElem(3)); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<RingElem> v(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
        }
        return Poly(std::move(v));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(RingElem s) const {
        std::vector<RingElem> v(c_);
        for (auto& x : v) x *= s;
        return Poly(std::move(v));
    }
    // Multiplication by x^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<RingElem> v(k, RingElem{});
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

    bool operator==(const Poly&) const = default;

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<RingElem> c_;
};

inline Poly operator*(RingElem s, const Poly& f) { return f.scaled(s); }

inline Poly poly_add(const Poly& f, const Poly& g) { return f + g; }
inline Poly poly_mul(const Poly& f, const Poly& g) { return f * g; }

/// Canonical representative of f in R[x]/(x^n - 1): fold x^k onto x^(k mod n).
inline Poly poly_mod_xn(const Poly& f, std::size_t n) {
    if (f.degree() < static_cast<int>(n)) return f;
    std::vector<RingElem> v(n);
    for (std::size_t k = 0; k < f.size(); ++k) v[k % n] += f[k];
    return Poly(std::move(v));
}

/// Long division by a divisor with unit leading coefficient.
inline std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    if (g.is_zero() || !g.leading().is_unit()) throw NonUnitLeadingCoefficient();
    // (a+ub)^-1 = a - ub, since a^2 = 1 for odd a.
    const RingElem lc = g.leading();
    const RingElem inv(lc.a(), -lc.b());
    const int dg = g.degree();
    std::vector<RingElem> r(f.coeffs());
    if (f.degree() < dg) return {Poly{}, f};
    std::vector<RingElem> q(static_cast<std::size_t>(f.degree() - dg + 1));
    for (int k = f.degree(); k >= dg; --k) {
        RingElem t = r[k] * inv;
        if (t.is_zero()) continue;
        q[k - dg] = t;
        for (int j = 0; j <= dg; ++j) r[k - dg + j] -= t * g[j];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

/// g | f in R[x]/(x^n - 1). Both sides are reduced to degree < n first; a divisor
/// that reduces to zero divides only the zero class.
inline bool divides(const Poly& g, const Poly& f, std::size_t n) {
    const Poly fr = poly_mod_xn(f, n);
    const Poly gr = poly_mod_xn(g, n);
    if (gr.is_zero()) {
        if (!g.is_zero() && !g.leading().is_unit()) throw NonUnitLeadingCoefficient();
        return fr.is_zero();
    }
    return divmod(fr, gr).second.is_zero();
}

/// f*(x) = x^deg(f) f(1/x); trailing zeros are stripped when f(0) = 0.
inline Poly reciprocal(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    std::vector<RingElem> v(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly(std::move(v));
}

/// Some constant m with f* = m f, searched over all 16 elements in index order
/// with units tried first.
inline std::optional<RingElem> self_reciprocal_constant(const Poly& f) {
    const Poly fs = reciprocal(f);
    std::optional<RingElem> nonunit;
    for (RingElem m : all_elements()) {
        if (f.scaled(m) != fs) continue;
        if (m.is_unit()) return m;
        if (!nonunit) nonunit = m;
    }
    return nonunit;
}

inline bool is_self_reciprocal(const Poly& f) { return self_reciprocal_constant(f).has_value(); }

// ---------------------------------------------------------------------------
// Text form: comma-separated ascending coefficients, "0" for the zero polynomial.

inline std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k) out += ',';
        out += to_string(f[k]);
    }
    return out;
}

inline Poly parse_poly(std::string_view s) {
    std::vector<RingElem> v;
    std::size_t pos = 0;
    while (true) {
        auto comma = s.find(',', pos);
        auto tok = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        v.push_back(parse_ring_elem(tok));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (v.size() > 1 && v.back().is_zero())
        throw ParseError("polynomial has trailing zero coefficients: '" + std::string(s) + "'");
    return Poly(std::move(v));
}

/// Human-readable algebraic form, highest degree first, e.g. "x^3+2x^2+x+3".
inline std::string pretty(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        RingElem c = f[k];
        if (c.is_zero()) continue;
        if (!first) os << '+';
        first = false;
        const bool compound = c.a() != 0 && c.b() != 0;
        if (k == 0) {
            os << to_string(c);
            continue;
        }
        if (c != RingElem(1)) os << (compound ? "(" + to_string(c) + ")" : to_string(c));
        os << 'x';
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

}  // namespace ringdna
