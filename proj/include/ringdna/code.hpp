#pragma once

// Cyclic codes over R: generator forms, span-closure enumeration, distances and
// closure properties.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "factor.hpp"
#include "poly.hpp"
#include "ring.hpp"

namespace ringdna {

using CodeWord = std::vector<RingElem>;

// ---------------------------------------------------------------------------
// Word maps

inline CodeWord cyclic_shift(const CodeWord& w) {
    if (w.empty()) return w;
    CodeWord out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[(i + 1) % w.size()] = w[i];
    return out;
}

inline CodeWord reverse(const CodeWord& w) { return {w.rbegin(), w.rend()}; }

inline CodeWord complement_word(const CodeWord& w) {
    CodeWord out(w.size());
    std::transform(w.begin(), w.end(), out.begin(), [](RingElem x) { return complement(x); });
    return out;
}

inline CodeWord reverse_complement(const CodeWord& w) { return reverse(complement_word(w)); }

inline int hamming_weight(const CodeWord& w) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](RingElem x) { return !x.is_zero(); }));
}

inline int lee_weight(const CodeWord& w) {
    int s = 0;
    for (RingElem x : w) s += lee_weight(x);
    return s;
}

inline CodeWord word_from_poly(const Poly& f, std::size_t n) {
    const Poly r = poly_mod_xn(f, n);
    CodeWord w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = r[k];
    return w;
}

inline Poly poly_from_word(const CodeWord& w) { return Poly(w); }

inline std::string to_string(const CodeWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += to_string(w[i]);
    }
    return out;
}

/// Binary image of a word: Phi applied symbol by symbol, as a '0'/'1' string of length 4n.
inline std::string gray_word(const CodeWord& w) {
    std::string out;
    out.reserve(4 * w.size());
    for (RingElem x : w)
        for (auto bit : gray(x)) out += static_cast<char>('0' + bit);
    return out;
}

// ---------------------------------------------------------------------------
// Generators

/// Generator data of C = <f1 + 2 f2 + 2u f14, u f3 + 2u f4>; f3 and f4 are both present or both absent.
struct GeneratorSet {
    int n = 1;
    Poly f1, f2, f14;
    std::optional<Poly> f3, f4;

    bool is_double() const { return f3.has_value() || f4.has_value(); }
};

namespace detail {

inline bool literally_divides(const Poly& g, const Poly& f) {
    if (g.is_zero() || !g.leading().is_unit()) return false;
    return divmod(f, g).second.is_zero();
}

}  // namespace detail

/// All violated shape and divisibility conditions; empty means the set is usable.
///
/// The chains f2 | f1 | x^n - 1 and f4 | f3 | x^n - 1 are checked by division in R[x]:
/// in the quotient ring every polynomial divides the zero class x^n - 1, so the
/// chain would be vacuous there.
inline std::vector<std::string> validate(const GeneratorSet& g) {
    std::vector<std::string> out;
    if (g.n < 1 || g.n % 2 == 0) {
        out.emplace_back("n must be odd");
        return out;
    }
    if (g.n > kMaxLength) {
        out.emplace_back("n must be at most " + std::to_string(kMaxLength));
        return out;
    }
    const Poly mod = Poly::xn_minus_1(static_cast<std::size_t>(g.n));
    auto check_chain = [&](const Poly& top, const Poly& bottom, const std::string& tn, const std::string& bn) {
        if (!top.is_monic()) out.push_back(tn + " must be monic");
        if (!bottom.is_monic()) out.push_back(bn + " must be monic");
        if (top.is_monic() && !detail::literally_divides(top, mod)) out.push_back(tn + " does not divide x^n-1");
        if (bottom.is_monic() && top.is_monic() && !detail::literally_divides(bottom, top))
            out.push_back(bn + " does not divide " + tn);
    };
    check_chain(g.f1, g.f2, "f1", "f2");
    if (g.f14.degree() >= g.n) out.emplace_back("f14 must have degree < n");
    if (g.f3.has_value() != g.f4.has_value()) {
        out.emplace_back("f3 and f4 must be given together");
    } else if (g.f3) {
        check_chain(*g.f3, *g.f4, "f3", "f4");
    }
    return out;
}

inline void require_valid(const GeneratorSet& g) {
    auto v = validate(g);
    if (v.empty()) return;
    std::string msg = "invalid generators:";
    for (const auto& s : v) msg += " [" + s + "]";
    throw InvalidGenerators(msg);
}

struct GeneratorPolys {
    Poly g_a;
    std::optional<Poly> g_b;
};

/// g_a = f1 + 2 f2 + 2u f14 and g_b = u f3 + 2u f4, reduced mod x^n - 1.
inline GeneratorPolys generator_polys(const GeneratorSet& g) {
    require_valid(g);
    const auto n = static_cast<std::size_t>(g.n);
    GeneratorPolys out;
    out.g_a = poly_mod_xn(g.f1 + g.f2.scaled(2) + g.f14.scaled(RingElem(0, 2)), n);
    if (g.f3) out.g_b = poly_mod_xn(g.f3->scaled(kU) + g.f4->scaled(RingElem(0, 2)), n);
    return out;
}

// ---------------------------------------------------------------------------
// Packed words: 4 bits per symbol (4a + b), 16 symbols per limb, symbol 0 in the
// top nibble of limb 0, so array ordering is the symbolwise (a, b) lexicographic order.

namespace detail {

inline constexpr std::size_t kLimbs = 4;
inline constexpr std::size_t kMaxPacked = 16 * kLimbs;

using Packed = std::array<std::uint64_t, kLimbs>;

inline constexpr std::uint64_t kLaneLo = 0x5555555555555555ull;
inline constexpr std::uint64_t kLaneHi = 0xAAAAAAAAAAAAAAAAull;
inline constexpr std::uint64_t kAPart = 0xCCCCCCCCCCCCCCCCull;

// Lanewise sum of 2-bit Z4 digits.
constexpr std::uint64_t lane_add(std::uint64_t x, std::uint64_t y) {
    const std::uint64_t s = x ^ y;
    return (s & kLaneLo) | ((s & kLaneHi) ^ ((x & y & kLaneLo) << 1));
}

constexpr std::uint64_t lane_scale(int k, std::uint64_t x) {
    switch (k & 3) {
        case 0: return 0;
        case 1: return x;
        case 2: return (x & kLaneLo) << 1;
        default: return x ^ ((x & kLaneLo) << 1);
    }
}

// (ra + u rb)(a + u b) = ra a + u (ra b + rb a)
constexpr std::uint64_t limb_scale(RingElem r, std::uint64_t x) {
    return lane_add(lane_scale(r.a(), x), lane_scale(r.b(), (x & kAPart) >> 2));
}

inline Packed packed_add(const Packed& x, const Packed& y) {
    Packed out;
    for (std::size_t i = 0; i < kLimbs; ++i) out[i] = lane_add(x[i], y[i]);
    return out;
}

inline Packed packed_scale(RingElem r, const Packed& x) {
    Packed out;
    for (std::size_t i = 0; i < kLimbs; ++i) out[i] = limb_scale(r, x[i]);
    return out;
}

inline Packed pack(const CodeWord& w) {
    Packed p{};
    for (std::size_t i = 0; i < w.size(); ++i)
        p[i / 16] |= static_cast<std::uint64_t>(w[i].index()) << ((15 - i % 16) * 4);
    return p;
}

inline CodeWord unpack(const Packed& p, std::size_t n) {
    CodeWord w(n);
    for (std::size_t i = 0; i < n; ++i)
        w[i] = RingElem::from_index(static_cast<int>((p[i / 16] >> ((15 - i % 16) * 4)) & 0xFu));
    return w;
}

struct PackedHash {
    std::size_t operator()(const Packed& p) const noexcept {
        std::uint64_t h = 0x9E3779B97F4A7C15ull;
        for (std::uint64_t limb : p) {
            h ^= limb + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            h ^= h >> 31;
            h *= 0xBF58476D1CE4E5B9ull;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

}  // namespace detail

inline constexpr std::size_t kDefaultCap = std::size_t{1} << 20;

/// A deduplicated set of length-n words over R held in canonical order.
class Code {
public:
    Code() = default;

    /// Builds a code from an arbitrary word list (duplicates removed). No closure is implied.
    static Code from_words(std::size_t n, const std::vector<CodeWord>& words,
                           std::optional<GeneratorSet> source = std::nullopt) {
        std::vector<detail::Packed> packed;
        packed.reserve(words.size());
        for (const auto& w : words) {
            if (w.size() != n) throw LengthMismatch("codeword length differs from n");
            packed.push_back(detail::pack(w));
        }
        return Code(n, std::move(packed), std::move(source));
    }

    std::size_t n() const { return n_; }
    std::size_t size() const { return words_.size(); }
    const std::optional<GeneratorSet>& source() const { return source_; }

    CodeWord word(std::size_t i) const { return detail::unpack(words_[i], n_); }
    std::vector<CodeWord> words() const {
        std::vector<CodeWord> out;
        out.reserve(words_.size());
        for (const auto& p : words_) out.push_back(detail::unpack(p, n_));
        return out;
    }

    bool contains(const CodeWord& w) const {
        return w.size() == n_ && std::binary_search(words_.begin(), words_.end(), detail::pack(w));
    }

    bool operator==(const Code& o) const { return n_ == o.n_ && words_ == o.words_; }

    // Internal representation, exposed for the enumeration routines.
    const std::vector<detail::Packed>& packed() const { return words_; }

    Code(std::size_t n, std::vector<detail::Packed> packed, std::optional<GeneratorSet> source)
        : n_(n), words_(std::move(packed)), source_(std::move(source)) {
        if (n_ > detail::kMaxPacked) throw LengthMismatch("code length above packed word capacity");
        std::sort(words_.begin(), words_.end());
        words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    }

private:
    std::size_t n_ = 0;
    std::vector<detail::Packed> words_;
    std::optional<GeneratorSet> source_;
};

/// Smallest R-submodule of R^n containing the given vectors, processed in the given order.
///
/// Each step replaces S by S + R v. Since S is a group and R v a subgroup, S + R v is
/// the disjoint union of the cosets t + S over t in R v not already covered, so each
/// new coset is appended without per-element deduplication.
inline Code span_closure(std::size_t n, std::span<const CodeWord> vectors, std::size_t cap = kDefaultCap,
                         std::optional<GeneratorSet> source = std::nullopt) {
    using detail::Packed;
    if (n > detail::kMaxPacked) throw LengthMismatch("code length above packed word capacity");
    if (cap < 1) throw CapExceeded(cap);
    std::vector<Packed> words{Packed{}};
    std::unordered_set<Packed, detail::PackedHash> members{Packed{}};
    for (const auto& v : vectors) {
        if (v.size() != n) throw LengthMismatch("generator vector length differs from n");
        const Packed pv = detail::pack(v);
        std::array<Packed, 16> multiples;
        std::size_t distinct = 0;
        for (RingElem r : all_elements()) {
            Packed t = detail::packed_scale(r, pv);
            if (std::find(multiples.begin(), multiples.begin() + distinct, t) == multiples.begin() + distinct)
                multiples[distinct++] = t;
        }
        const std::size_t base = words.size();
        for (std::size_t k = 0; k < distinct; ++k) {
            const Packed& t = multiples[k];
            if (members.count(t)) continue;
            if (words.size() + base > cap) throw CapExceeded(cap);
            words.reserve(words.size() + base);
            members.reserve(words.size() + base);
            for (std::size_t i = 0; i < base; ++i) {
                Packed w = detail::packed_add(words[i], t);
                words.push_back(w);
                members.insert(w);
            }
        }
    }
    return Code(n, std::move(words), std::move(source));
}

/// The 2n shift vectors x^i g_a, x^i g_b (i = 0..n-1) in processing order.
inline std::vector<CodeWord> shift_vectors(const GeneratorSet& gens) {
    const auto polys = generator_polys(gens);
    const auto n = static_cast<std::size_t>(gens.n);
    std::vector<CodeWord> out;
    for (const Poly* g : {&polys.g_a, polys.g_b ? &*polys.g_b : nullptr}) {
        if (!g) continue;
        CodeWord w = word_from_poly(*g, n);
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(w);
            w = cyclic_shift(w);
        }
    }
    return out;
}

/// The ideal of R[x]/(x^n - 1) generated by g_a (and g_b), as an explicit word set.
inline Code enumerate(const GeneratorSet& gens, std::size_t cap = kDefaultCap) {
    const auto vecs = shift_vectors(gens);
    return span_closure(static_cast<std::size_t>(gens.n), vecs, cap, gens);
}

// ---------------------------------------------------------------------------
// Ideal membership of constant words without enumeration.
//
// For odd n, x - 1 is coprime to (x^n - 1)/(x - 1), so R[x]/(x^n - 1) splits as
// R x R[x]/((x^n - 1)/(x - 1)) and the constant word c(1,...,1) maps to (n c, 0).
// It lies in the ideal iff n c lies in the ideal of R generated by g_a(1), g_b(1).

inline RingElem evaluate_at_one(const Poly& f) {
    RingElem s;
    for (RingElem c : f.coeffs()) s += c;
    return s;
}

inline bool ideal_contains_constant_word(const GeneratorSet& gens, RingElem c) {
    const auto polys = generator_polys(gens);
    const RingElem ea = evaluate_at_one(polys.g_a);
    const RingElem eb = polys.g_b ? evaluate_at_one(*polys.g_b) : RingElem{};
    const RingElem target = c * RingElem(gens.n);
    for (RingElem r : all_elements())
        for (RingElem s : all_elements())
            if (r * ea + s * eb == target) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Distances. Enumerated codes are additive groups, so the minimum distance is the
// minimum weight of a nonzero word.

inline int min_hamming_distance(const Code& c) {
    if (c.size() < 2) throw TrivialCode();
    int best = static_cast<int>(c.n()) + 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int w = hamming_weight(c.word(i));
        if (w > 0) best = std::min(best, w);
    }
    return best;
}

inline int min_lee_distance(const Code& c) {
    if (c.size() < 2) throw TrivialCode();
    int best = 4 * static_cast<int>(c.n()) + 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int w = lee_weight(c.word(i));
        if (w > 0) best = std::min(best, w);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Closure properties, checked word by word.

inline bool closed_under(const Code& c, const std::function<CodeWord(const CodeWord&)>& map) {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c.contains(map(c.word(i)))) return false;
    return true;
}

inline bool is_cyclic(const Code& c) { return closed_under(c, cyclic_shift); }
inline bool is_reversible(const Code& c) { return closed_under(c, reverse); }
inline bool is_complement_closed(const Code& c) { return closed_under(c, complement_word); }
inline bool is_rc_closed(const Code& c) { return closed_under(c, reverse_complement); }

inline bool is_closed_under_scaling(const Code& c) {
    for (const auto& p : c.packed())
        for (RingElem r : all_elements())
            if (!std::binary_search(c.packed().begin(), c.packed().end(), detail::packed_scale(r, p)))
                return false;
    return true;
}

// Quadratic in |C|; meant for verification of moderate codes.
inline bool is_closed_under_addition(const Code& c) {
    const auto& ws = c.packed();
    for (const auto& x : ws)
        for (const auto& y : ws)
            if (!std::binary_search(ws.begin(), ws.end(), detail::packed_add(x, y))) return false;
    return !ws.empty();
}

/// Cyclic, closed under reverse-complement, and no word equal to its own reverse-complement.
inline bool is_dna_code(const Code& c) {
    if (!is_cyclic(c)) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const CodeWord w = c.word(i);
        const CodeWord rc = reverse_complement(w);
        if (rc == w || !c.contains(rc)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Binary images

/// Gray images of all codewords, in the code's canonical order.
inline std::vector<std::string> gray_image(const Code& c) {
    std::vector<std::string> out;
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back(gray_word(c.word(i)));
    return out;
}

/// True iff the word set is invariant under rotation by 4 bit positions.
inline bool is_quasi_cyclic_index4(const std::vector<std::string>& words) {
    if (words.empty()) return true;
    const std::size_t len = words.front().size();
    for (const auto& w : words)
        if (w.size() != len) throw LengthMismatch("binary words of differing length");
    if (len % 4 != 0) throw LengthMismatch("binary word length is not a multiple of 4");
    std::unordered_set<std::string> set(words.begin(), words.end());
    for (const auto& w : words) {
        if (len == 0) return true;
        const std::string rot = w.substr(len - 4) + w.substr(0, len - 4);
        if (!set.count(rot)) return false;
    }
    return true;
}

}  // namespace ringdna
