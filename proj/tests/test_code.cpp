#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ringdna/code.hpp"
#include "ringdna/dna.hpp"

using namespace ringdna;

namespace {

Poly P(const char* s) { return parse_poly(s); }

GeneratorSet single(int n, const Poly& f1, const Poly& f2, const Poly& f14 = {}) {
    GeneratorSet g;
    g.n = n;
    g.f1 = f1;
    g.f2 = f2;
    g.f14 = f14;
    return g;
}

GeneratorSet with_double(GeneratorSet g, const Poly& f3, const Poly& f4) {
    g.f3 = f3;
    g.f4 = f4;
    return g;
}

CodeWord constant_word(std::size_t n, RingElem c) { return CodeWord(n, c); }

std::vector<CodeWord> all_words(std::size_t n) {
    std::vector<CodeWord> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 16;
    for (std::size_t k = 0; k < total; ++k) {
        CodeWord w(n);
        std::size_t r = k;
        for (std::size_t i = 0; i < n; ++i, r /= 16) w[i] = RingElem::from_index(static_cast<int>(r % 16));
        out.push_back(w);
    }
    return out;
}

// {a g_a + b g_b mod x^n - 1 : a, b in R[x]} from all multipliers of degree < n.
std::set<CodeWord> ideal_by_multiples(const GeneratorSet& g) {
    const auto n = static_cast<std::size_t>(g.n);
    const auto polys = generator_polys(g);
    auto multiples = [&](const Poly& gen) {
        std::set<CodeWord> out;
        for (const auto& m : all_words(n)) out.insert(word_from_poly(poly_from_word(m) * gen, n));
        return out;
    };
    const auto a = multiples(polys.g_a);
    if (!polys.g_b) return a;
    const auto b = multiples(*polys.g_b);
    std::set<CodeWord> out;
    for (const auto& x : a)
        for (const auto& y : b) {
            CodeWord s(n);
            for (std::size_t i = 0; i < n; ++i) s[i] = x[i] + y[i];
            out.insert(s);
        }
    return out;
}

// All generator sets for n = 3 built from the divisors 1, x-1, x^2+x+1, x^3-1.
std::vector<std::pair<Poly, Poly>> chains_n3() {
    const std::vector<Poly> divs = {P("1"), P("3,1"), P("1,1,1"), Poly::xn_minus_1(3)};
    std::vector<std::pair<Poly, Poly>> out;
    for (const auto& top : divs)
        for (const auto& bottom : divs)
            if (bottom.degree() <= top.degree() && divmod(top, bottom).second.is_zero()) out.emplace_back(top, bottom);
    return out;
}

GeneratorSet random_n3(std::mt19937_64& rng) {
    const auto chains = chains_n3();
    const auto& [f1, f2] = chains[rng() % chains.size()];
    std::vector<RingElem> c(3);
    for (auto& x : c) x = RingElem::from_index(static_cast<int>(rng() % 16));
    GeneratorSet g = single(3, f1, f2, Poly(c));
    if (rng() % 2) {
        const auto& [f3, f4] = chains[rng() % chains.size()];
        g = with_double(g, f3, f4);
    }
    return g;
}

std::size_t hamming(const CodeWord& x, const CodeWord& y) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
    return d;
}

}  // namespace

// =============================================================================
// Word maps

TEST(Words, Maps) {
    const CodeWord w = {RingElem(1), RingElem(2), RingElem(0, 1)};
    EXPECT_EQ(cyclic_shift(w), (CodeWord{RingElem(0, 1), RingElem(1), RingElem(2)}));
    EXPECT_EQ(reverse(w), (CodeWord{RingElem(0, 1), RingElem(2), RingElem(1)}));
    EXPECT_EQ(complement_word(w), (CodeWord{RingElem(0, 1), RingElem(3, 1), RingElem(1)}));
    EXPECT_EQ(reverse_complement(w), (CodeWord{RingElem(1), RingElem(3, 1), RingElem(0, 1)}));
    EXPECT_EQ(hamming_weight(w), 3);
    EXPECT_EQ(lee_weight(w), 1 + 2 + 2);
    EXPECT_EQ(word_from_poly(P("1,0,0,2"), 3), (CodeWord{RingElem(3), RingElem(0), RingElem(0)}));
    EXPECT_EQ(gray_word(w), "0001" "0011" "0101");
}

TEST(Words, GrayIsometryOnWords) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 2000; ++t) {
        CodeWord x(5), y(5), diff(5);
        for (std::size_t i = 0; i < 5; ++i) {
            x[i] = RingElem::from_index(static_cast<int>(rng() % 16));
            y[i] = RingElem::from_index(static_cast<int>(rng() % 16));
            diff[i] = x[i] - y[i];
        }
        const std::string gx = gray_word(x), gy = gray_word(y);
        int d = 0;
        for (std::size_t k = 0; k < gx.size(); ++k) d += gx[k] != gy[k];
        ASSERT_EQ(lee_weight(diff), d);
    }
}

// =============================================================================
// Validation

TEST(Generators, ValidSets) {
    EXPECT_TRUE(validate(single(3, P("1,1,1"), P("1,1,1"))).empty());
    EXPECT_TRUE(validate(with_double(single(3, P("1,1,1"), P("1,1,1")), P("3,1"), P("1"))).empty());
    EXPECT_TRUE(validate(single(7, Poly::all_ones(7), P("3,1,2,1"), P("u,0,3"))).empty());
    EXPECT_TRUE(validate(single(3, Poly::xn_minus_1(3), P("3,1"))).empty());
}

TEST(Generators, Violations) {
    auto has = [](const GeneratorSet& g, const std::string& msg) {
        const auto v = validate(g);
        return std::find(v.begin(), v.end(), msg) != v.end();
    };
    EXPECT_TRUE(has(single(4, P("1"), P("1")), "n must be odd"));
    EXPECT_TRUE(has(single(65, P("1"), P("1")), "n must be at most 63"));
    EXPECT_TRUE(has(single(3, P("1,1"), P("1")), "f1 does not divide x^n-1"));
    EXPECT_TRUE(has(single(3, P("3,1"), P("1,1,1")), "f2 does not divide f1"));
    EXPECT_TRUE(has(single(3, P("1,2"), P("1")), "f1 must be monic"));
    EXPECT_TRUE(has(single(3, P("1"), P("1"), P("0,0,0,1")), "f14 must have degree < n"));
    GeneratorSet half = single(3, P("1"), P("1"));
    half.f3 = P("1");
    EXPECT_TRUE(has(half, "f3 and f4 must be given together"));
    EXPECT_THROW(require_valid(half), InvalidGenerators);
    EXPECT_THROW(enumerate(half), InvalidGenerators);
}

TEST(Generators, Polys) {
    const auto p = generator_polys(with_double(single(3, P("1,1,1"), P("1,1,1")), P("3,1"), P("1")));
    EXPECT_EQ(p.g_a, P("3,3,3"));
    ASSERT_TRUE(p.g_b.has_value());
    EXPECT_EQ(*p.g_b, P("u,u"));
    EXPECT_EQ(generator_polys(single(3, Poly::xn_minus_1(3), Poly::xn_minus_1(3))).g_a, Poly{});
}

// =============================================================================
// Packing

TEST(Packing, RoundTripAndOrder) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng() % 64;
        CodeWord w(n), v(n);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = RingElem::from_index(static_cast<int>(rng() % 16));
            v[i] = RingElem::from_index(static_cast<int>(rng() % 16));
        }
        ASSERT_EQ(detail::unpack(detail::pack(w), n), w);
        const auto lex = std::lexicographical_compare(w.begin(), w.end(), v.begin(), v.end(),
                                                      [](RingElem a, RingElem b) { return a.index() < b.index(); });
        ASSERT_EQ(detail::pack(w) < detail::pack(v), lex);
    }
}

TEST(Packing, LaneArithmeticExhaustive) {
    for (RingElem x : all_elements())
        for (RingElem y : all_elements()) {
            const auto px = detail::pack({x, y, x}), py = detail::pack({y, y, x});
            EXPECT_EQ(detail::unpack(detail::packed_add(px, py), 3), (CodeWord{x + y, y + y, x + x}));
            EXPECT_EQ(detail::unpack(detail::packed_scale(x, py), 3), (CodeWord{x * y, x * y, x * x}));
        }
}

// =============================================================================
// Enumeration

TEST(Enumerate, ConstantCodeLength3) {
    const Code c = enumerate(single(3, P("1,1,1"), P("1,1,1")));
    ASSERT_EQ(c.size(), 16u);
    for (RingElem x : all_elements()) EXPECT_TRUE(c.contains(constant_word(3, x)));
    EXPECT_EQ(min_hamming_distance(c), 3);
    EXPECT_EQ(min_lee_distance(c), 3);
    EXPECT_TRUE(is_dna_code(c));
}

TEST(Enumerate, AllOnesLength7) {
    const Code c = enumerate(single(7, Poly::all_ones(7), Poly::all_ones(7)));
    ASSERT_EQ(c.size(), 16u);
    EXPECT_EQ(min_hamming_distance(c), 7);
    EXPECT_TRUE(is_dna_code(c));
}

TEST(Enumerate, TwoGeneratorLength3) {
    const GeneratorSet g = with_double(single(3, P("1,1,1"), P("1,1,1")), P("3,1"), P("1"));
    const Code c = enumerate(g);
    EXPECT_EQ(c.size(), ideal_by_multiples(g).size());
    EXPECT_EQ(c.size(), 256u);
    // u(x^2+x+1) - u(1+x) = u x^2 is in the code
    EXPECT_TRUE(c.contains({RingElem(0), RingElem(0), RingElem(0, 1)}));
    EXPECT_EQ(min_hamming_distance(c), 1);
    const auto ws = c.words();
    int dna = 99;
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j) dna = std::min(dna, letter_distance(encode(ws[i]), encode(ws[j])));
    EXPECT_EQ(min_dna_distance(c), dna);
}

TEST(Enumerate, WholeSpaceAndZero) {
    EXPECT_EQ(enumerate(single(3, P("1"), P("1"))).size(), 4096u);
    const Code zero = enumerate(single(3, Poly::xn_minus_1(3), Poly::xn_minus_1(3)));
    EXPECT_EQ(zero.size(), 1u);
    EXPECT_THROW(min_hamming_distance(zero), TrivialCode);
    EXPECT_THROW(min_lee_distance(zero), TrivialCode);
}

TEST(Enumerate, MatchesMembershipOracle) {
    std::mt19937_64 rng(2024);
    const auto space = all_words(3);
    for (int t = 0; t < 30; ++t) {
        const GeneratorSet g = random_n3(rng);
        const auto ideal = ideal_by_multiples(g);
        std::vector<CodeWord> filtered;
        for (const auto& w : space)
            if (ideal.count(w)) filtered.push_back(w);
        ASSERT_EQ(enumerate(g), Code::from_words(3, filtered)) << t;
    }
}

TEST(Enumerate, OrderIndependent) {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 20; ++t) {
        const GeneratorSet g = random_n3(rng);
        auto vecs = shift_vectors(g);
        const Code ref = span_closure(3, vecs);
        std::shuffle(vecs.begin(), vecs.end(), rng);
        EXPECT_EQ(span_closure(3, vecs), ref);
    }
}

TEST(Enumerate, ClosureInvariants) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 15; ++t) {
        const Code c = enumerate(random_n3(rng));
        EXPECT_TRUE(is_cyclic(c));
        EXPECT_TRUE(is_closed_under_scaling(c));
        EXPECT_TRUE(is_closed_under_addition(c));
        EXPECT_TRUE(c.contains(constant_word(3, RingElem(0))));
        // additive group over a ring of order 16 = 2^4: size is a power of 2
        EXPECT_EQ(c.size() & (c.size() - 1), 0u);
    }
}

TEST(Enumerate, CapAndLengthErrors) {
    EXPECT_THROW(enumerate(single(3, P("1"), P("1")), 4095), CapExceeded);
    EXPECT_NO_THROW(enumerate(single(3, P("1"), P("1")), 4096));
    const std::vector<CodeWord> bad = {CodeWord(2)};
    EXPECT_THROW(span_closure(3, bad), LengthMismatch);
    EXPECT_THROW(Code::from_words(3, bad), LengthMismatch);
}

TEST(Enumerate, MinDistanceMatchesPairwise) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 15; ++t) {
        const Code c = enumerate(random_n3(rng));
        if (c.size() < 2 || c.size() > 1024) continue;
        const auto ws = c.words();
        std::size_t best = 99;
        for (std::size_t i = 0; i < ws.size(); ++i)
            for (std::size_t j = i + 1; j < ws.size(); ++j) best = std::min(best, hamming(ws[i], ws[j]));
        EXPECT_EQ(static_cast<std::size_t>(min_hamming_distance(c)), best);
    }
}

// =============================================================================
// Constant-word membership by evaluation at 1

TEST(ConstantMembership, AgreesWithEnumeration) {
    std::mt19937_64 rng(55);
    for (int t = 0; t < 40; ++t) {
        const GeneratorSet g = random_n3(rng);
        const Code c = enumerate(g);
        for (RingElem x : all_elements())
            ASSERT_EQ(ideal_contains_constant_word(g, x), c.contains(constant_word(3, x))) << t;
    }
}

TEST(ConstantMembership, AgreesAtLength7) {
    const std::vector<Poly> tops = {P("1"), P("3,1"), P("3,1,2,1"), Poly::all_ones(7), Poly::xn_minus_1(7)};
    for (const auto& f1 : tops)
        for (const auto& f2 : tops) {
            if (f2.degree() > f1.degree() || !divmod(f1, f2).second.is_zero()) continue;
            const GeneratorSet g = single(7, f1, f2, P("0,u"));
            Code c;
            try {
                c = enumerate(g, 1 << 16);
            } catch (const CapExceeded&) {
                continue;
            }
            for (RingElem x : all_elements()) EXPECT_EQ(ideal_contains_constant_word(g, x), c.contains(constant_word(7, x)));
        }
}

// =============================================================================
// Closure properties and binary images

TEST(Closure, HandBuiltSets) {
    const CodeWord a = {RingElem(1), RingElem(0), RingElem(0)};
    const Code only_a = Code::from_words(3, {CodeWord(3), a});
    EXPECT_FALSE(is_cyclic(only_a));
    EXPECT_TRUE(is_reversible(Code::from_words(3, {CodeWord(3), {RingElem(1), RingElem(2), RingElem(1)}})));
    EXPECT_FALSE(is_reversible(Code::from_words(3, {CodeWord(3), {RingElem(1), RingElem(2), RingElem(0)}})));
    const CodeWord z(3), zc = complement_word(z);
    EXPECT_TRUE(is_complement_closed(Code::from_words(3, {z, zc})));
    EXPECT_TRUE(is_rc_closed(Code::from_words(3, {z, zc})));
    EXPECT_FALSE(is_closed_under_addition(only_a));
}

TEST(Closure, DnaCodeRejectsSelfComplementaryWord) {
    // a word equal to its own reverse-complement cannot exist for odd n (the middle
    // symbol would be its own complement), so the DNA condition reduces to closure
    const Code whole = enumerate(single(3, P("1"), P("1")));
    EXPECT_TRUE(is_rc_closed(whole));
    EXPECT_TRUE(is_dna_code(whole));
    const Code sub = enumerate(single(3, P("3,1"), P("3,1")));
    EXPECT_EQ(is_dna_code(sub), is_rc_closed(sub));
}

TEST(GrayImage, QuasiCyclic) {
    const Code c = enumerate(single(3, P("1,1,1"), P("1,1,1")));
    const auto img = gray_image(c);
    ASSERT_EQ(img.size(), 16u);
    EXPECT_TRUE(is_quasi_cyclic_index4(img));
    EXPECT_FALSE(is_quasi_cyclic_index4({"00000000", "00010000"}));
    EXPECT_THROW(is_quasi_cyclic_index4({"0000", "00000000"}), LengthMismatch);
    EXPECT_THROW(is_quasi_cyclic_index4({"000"}), LengthMismatch);
    EXPECT_TRUE(is_quasi_cyclic_index4({}));
}

TEST(GrayImage, AnyCyclicCodeIsQuasiCyclic) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 10; ++t) EXPECT_TRUE(is_quasi_cyclic_index4(gray_image(enumerate(random_n3(rng)))));
}
