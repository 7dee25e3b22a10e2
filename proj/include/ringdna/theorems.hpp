#pragma once

// Symbolic reversibility / reverse-complement conditions for the two generator
// forms, and a harness comparing them against brute-force closure of the
// enumerated code.

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "code.hpp"
#include "errors.hpp"
#include "factor.hpp"
#include "poly.hpp"

namespace ringdna {

enum class Theorem { T31, T32, T41, T42 };
enum class Property { reversible, rc_closed };

inline const char* to_string(Theorem t) {
    switch (t) {
        case Theorem::T31: return "T31";
        case Theorem::T32: return "T32";
        case Theorem::T41: return "T41";
        case Theorem::T42: return "T42";
    }
    return "?";
}

inline const char* to_string(Property p) { return p == Property::reversible ? "reversible" : "rc_closed"; }

struct ConditionReport {
    Theorem theorem = Theorem::T31;
    bool satisfied = false;
    int i_shift = 0;                    // deg f1 - deg f2
    std::optional<int> j_shift;         // deg f1 - deg f14, absent when f14 = 0
    std::string branch;                 // which disjunct of (b)(ii) held
    std::vector<std::string> failures;  // named unmet conditions
    std::vector<std::string> notes;     // informational, never affects `satisfied`
    std::optional<RingElem> f1_constant, f3_constant;
};

inline std::ostream& operator<<(std::ostream& os, const ConditionReport& r) {
    os << "theorem=" << to_string(r.theorem) << " satisfied=" << (r.satisfied ? "true" : "false")
       << " i=" << r.i_shift << " j=" << (r.j_shift ? std::to_string(*r.j_shift) : std::string("undefined"));
    if (!r.branch.empty()) os << " branch=\"" << r.branch << '"';
    if (r.f1_constant) os << " m1=" << to_string(*r.f1_constant);
    if (r.f3_constant) os << " m3=" << to_string(*r.f3_constant);
    for (const auto& f : r.failures) os << "\n  failed: " << f;
    for (const auto& s : r.notes) os << "\n  note: " << s;
    return os;
}

namespace detail {

// x^k for possibly negative k, using x^n = 1.
inline Poly x_power_times(const Poly& f, int k, int n) {
    const int e = ((k % n) + n) % n;
    return poly_mod_xn(f.shifted(static_cast<std::size_t>(e)), static_cast<std::size_t>(n));
}

inline void require_form(const GeneratorSet& g, bool dbl) {
    require_valid(g);
    if (g.is_double() != dbl)
        throw WrongForm(dbl ? "condition needs the two-generator form (f3, f4)" : "condition needs the one-generator form");
}

// Conditions (a) and (b)(i), shared by every checker.
inline void check_common(const GeneratorSet& g, ConditionReport& r) {
    const auto n = static_cast<std::size_t>(g.n);
    r.i_shift = g.f1.degree() - g.f2.degree();
    r.f1_constant = self_reciprocal_constant(g.f1);
    if (!r.f1_constant) r.failures.emplace_back("(a) f1 is not self-reciprocal");
    if (g.f3) {
        r.f3_constant = self_reciprocal_constant(*g.f3);
        if (!r.f3_constant) r.failures.emplace_back("(a) f3 is not self-reciprocal");
    }
    const Poly lhs = x_power_times(reciprocal(g.f2), r.i_shift, g.n);
    const Poly rhs = poly_mod_xn(g.f2, n);
    if (lhs != rhs) {
        r.failures.emplace_back("(b)(i) x^i f2* != f2");
        for (RingElem m : all_elements())
            if (m.is_unit() && lhs == rhs.scaled(m)) {
                r.notes.push_back("x^i f2* = " + to_string(m) + " f2 (equal up to a unit only)");
                break;
            }
    }
    if (!g.f14.is_zero()) {
        r.j_shift = g.f1.degree() - g.f14.degree();
        if (*r.j_shift < 0) r.notes.emplace_back("j < 0 (deg f14 > deg f1); x^j taken as x^(j mod n)");
    }
}

inline void finish(ConditionReport& r) { r.satisfied = r.failures.empty(); }

}  // namespace detail

/// C = <f1 + 2 f2 + 2u f14> is reversible iff (a) f1 is self-reciprocal, (b)(i) x^i f2* = f2,
/// (b)(ii) x^j f14* = f14 or f2 | 2 x^j f14* + 2 f14. All identities are taken mod x^n - 1.
inline ConditionReport check_reversible_single(const GeneratorSet& g) {
    detail::require_form(g, false);
    ConditionReport r;
    r.theorem = Theorem::T31;
    detail::check_common(g, r);
    if (g.f14.is_zero()) {
        r.branch = "f14 = 0";
    } else {
        const auto n = static_cast<std::size_t>(g.n);
        const Poly xjf = detail::x_power_times(reciprocal(g.f14), *r.j_shift, g.n);
        const Poly f14 = poly_mod_xn(g.f14, n);
        if (xjf == f14) {
            r.branch = "x^j f14* = f14";
        } else if (divides(g.f2, xjf.scaled(2) + f14.scaled(2), n)) {
            r.branch = "f2 | 2x^j f14* + 2f14";
        } else {
            r.failures.emplace_back("(b)(ii) neither x^j f14* = f14 nor f2 | 2x^j f14* + 2f14");
        }
    }
    detail::finish(r);
    return r;
}

/// C = <f1 + 2 f2 + 2u f14, u f3 + 2u f4> is reversible iff (a) f1 and f3 are self-reciprocal,
/// (b)(i) x^i f2* = f2, (b)(ii) f4 | 2 x^j f14* + 2 f14 or f4 | 2 x^j f14* + 2 f14 + 2 f2.
inline ConditionReport check_reversible_double(const GeneratorSet& g) {
    detail::require_form(g, true);
    ConditionReport r;
    r.theorem = Theorem::T32;
    detail::check_common(g, r);
    const auto n = static_cast<std::size_t>(g.n);
    Poly h;
    if (!g.f14.is_zero())
        h = detail::x_power_times(reciprocal(g.f14), *r.j_shift, g.n).scaled(2) + poly_mod_xn(g.f14, n).scaled(2);
    if (divides(*g.f4, h, n)) {
        r.branch = "f4 | 2x^j f14* + 2f14";
    } else if (divides(*g.f4, h + g.f2.scaled(2), n)) {
        r.branch = "f4 | 2x^j f14* + 2f14 + 2f2";
    } else {
        r.failures.emplace_back("(b)(ii) f4 divides neither 2x^j f14* + 2f14 nor 2x^j f14* + 2f14 + 2f2");
    }
    detail::finish(r);
    return r;
}

/// The word with every symbol 3 + 3u, i.e. 3(1+u)(1 - x^n)/(1 - x).
inline CodeWord rc_anchor_word(int n) { return CodeWord(static_cast<std::size_t>(n), RingElem(3, 3)); }

namespace detail {

inline void add_membership(const GeneratorSet& g, const Code* code, std::size_t cap, ConditionReport& r) {
    bool member = false;
    if (code) {
        member = code->contains(rc_anchor_word(g.n));
    } else {
        try {
            member = enumerate(g, cap).contains(rc_anchor_word(g.n));
        } catch (const CapExceeded&) {
            member = ideal_contains_constant_word(g, RingElem(3, 3));
            r.notes.emplace_back("membership decided by evaluation at x = 1 (enumeration capped)");
        }
    }
    if (!member) r.failures.emplace_back("membership: 3(1+u)(1-x^n)/(1-x) not in C");
}

}  // namespace detail

/// Reverse-complement condition for the one-generator form: the reversibility
/// conditions plus membership of the all-(3+3u) word. `code`, when given, must be enumerate(g).
inline ConditionReport check_rc_single(const GeneratorSet& g, const Code* code = nullptr,
                                       std::size_t cap = kDefaultCap) {
    ConditionReport r = check_reversible_single(g);
    r.theorem = Theorem::T41;
    detail::add_membership(g, code, cap, r);
    detail::finish(r);
    return r;
}

inline ConditionReport check_rc_double(const GeneratorSet& g, const Code* code = nullptr,
                                       std::size_t cap = kDefaultCap) {
    ConditionReport r = check_reversible_double(g);
    r.theorem = Theorem::T42;
    detail::add_membership(g, code, cap, r);
    detail::finish(r);
    return r;
}

inline Theorem theorem_for(const GeneratorSet& g, Property p) {
    if (p == Property::reversible) return g.is_double() ? Theorem::T32 : Theorem::T31;
    return g.is_double() ? Theorem::T42 : Theorem::T41;
}

inline ConditionReport check(const GeneratorSet& g, Theorem t, const Code* code = nullptr,
                             std::size_t cap = kDefaultCap) {
    switch (t) {
        case Theorem::T31: return check_reversible_single(g);
        case Theorem::T32: return check_reversible_double(g);
        case Theorem::T41: return check_rc_single(g, code, cap);
        case Theorem::T42: return check_rc_double(g, code, cap);
    }
    throw WrongForm("unknown theorem");
}

// ---------------------------------------------------------------------------
// Cross-validation

struct CrossValReport {
    GeneratorSet gens;
    Property property = Property::reversible;
    Theorem theorem = Theorem::T31;
    bool predicted = false;
    bool observed = false;
    bool agree = false;
    ConditionReport conditions;
};

/// Compares a symbolic prediction against closure of an already enumerated code.
inline CrossValReport cross_validate(const GeneratorSet& g, Property p, const Code& code) {
    CrossValReport out;
    out.gens = g;
    out.property = p;
    out.theorem = theorem_for(g, p);
    out.conditions = check(g, out.theorem, &code);
    out.predicted = out.conditions.satisfied;
    out.observed = p == Property::reversible ? is_reversible(code) : is_rc_closed(code);
    out.agree = out.predicted == out.observed;
    return out;
}

inline CrossValReport cross_validate(const GeneratorSet& g, Property p, std::size_t cap = kDefaultCap) {
    return cross_validate(g, p, enumerate(g, cap));
}

inline std::string describe(const GeneratorSet& g) {
    std::string s = "f1=" + to_string(g.f1) + " f2=" + to_string(g.f2) + " f14=" + to_string(g.f14);
    if (g.f3) s += " f3=" + to_string(*g.f3) + " f4=" + to_string(*g.f4);
    return s;
}

struct SweepOptions {
    int n = 3;
    int max_f14_degree = -1;  // < 0 means n - 1
    std::uint64_t seed = 0;
    std::size_t samples = 0;  // 0 = exhaustive
    std::size_t cap = kDefaultCap;
    // f14 coefficient alphabet for two-generator instances in exhaustive mode;
    // one-generator instances always range over all 16 elements.
    std::vector<RingElem> double_f14_alphabet = {RingElem(0), RingElem(1), RingElem(2), RingElem(3),
                                                 RingElem(0, 1), RingElem(0, 2), RingElem(1, 1), RingElem(3, 3)};
    bool include_double = true;
};

/// A disagreement between a theorem's prediction and brute force.
struct Erratum {
    std::string id;
    std::size_t instance = 0;
    CrossValReport report;
};

struct SweepResult {
    std::vector<CrossValReport> reports;  // two per instance: reversible, then rc_closed
    std::vector<Erratum> errata;
    std::size_t instances = 0;
    std::size_t skipped = 0;  // instances rejected because enumeration hit the cap

    std::size_t agreements() const {
        std::size_t k = 0;
        for (const auto& r : reports) k += r.agree;
        return k;
    }
};

namespace detail {

// All polynomials of degree <= d with coefficients from `alphabet`, in odometer order.
inline std::vector<Poly> bounded_polys(int d, const std::vector<RingElem>& alphabet) {
    std::vector<Poly> out;
    std::vector<std::size_t> digit(static_cast<std::size_t>(d + 1), 0);
    while (true) {
        std::vector<RingElem> c(digit.size());
        for (std::size_t k = 0; k < digit.size(); ++k) c[k] = alphabet[digit[k]];
        out.emplace_back(std::move(c));
        std::size_t k = 0;
        while (k < digit.size() && ++digit[k] == alphabet.size()) digit[k++] = 0;
        if (k == digit.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.coeffs() < b.coeffs(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct Chain {
    Poly top, bottom;
};

inline std::vector<Chain> divisor_chains(const DivisorLattice& lat) {
    std::vector<Chain> out;
    for (std::uint64_t s1 = 0; s1 < lat.subset_count(); ++s1) {
        // every submask of s1, including 0
        for (std::uint64_t s2 = s1;; s2 = (s2 - 1) & s1) {
            out.push_back({lat.product(s1), lat.product(s2)});
            if (s2 == 0) break;
        }
    }
    return out;
}

inline void record(SweepResult& res, const GeneratorSet& g, const Code& code) {
    const std::size_t instance = res.instances;
    for (Property p : {Property::reversible, Property::rc_closed}) {
        CrossValReport rep = cross_validate(g, p, code);
        if (!rep.agree)
            res.errata.push_back({"E" + std::to_string(res.errata.size() + 1), instance, rep});
        res.reports.push_back(std::move(rep));
    }
    ++res.instances;
}

}  // namespace detail

/// Number of instances an exhaustive sweep would visit.
inline std::uint64_t exhaustive_instance_count(const SweepOptions& opt) {
    const DivisorLattice lat(opt.n);
    const int d = opt.max_f14_degree < 0 ? opt.n - 1 : opt.max_f14_degree;
    std::uint64_t chains = 1;
    for (std::size_t k = 0; k < lat.factor_count(); ++k) chains *= 3;  // each factor: in neither, in top only, in both
    auto power = [](std::uint64_t b, int e) {
        std::uint64_t r = 1;
        for (int i = 0; i < e; ++i) r = r > (UINT64_MAX / b) ? UINT64_MAX : r * b;
        return r;
    };
    std::uint64_t total = chains * power(16, d + 1);
    if (opt.include_double) total += chains * chains * power(opt.double_f14_alphabet.size(), d + 1);
    return total;
}

/// Cross-validates every theorem over generator sets built from the divisor lattice of x^n - 1.
///
/// Exhaustive mode (samples == 0) visits every chain f2 | f1 with every f14 of degree
/// <= max_f14_degree, then every pair of chains (f1, f2), (f3, f4) with f14 over the
/// reduced alphabet. Sampled mode draws `samples` instances from a seeded Mersenne
/// twister, redrawing any instance whose enumeration exceeds the cap.
inline SweepResult sweep(const SweepOptions& opt) {
    require_supported_length(opt.n);
    const DivisorLattice lat(opt.n);
    const int d = opt.max_f14_degree < 0 ? opt.n - 1 : std::min(opt.max_f14_degree, opt.n - 1);
    const auto chains = detail::divisor_chains(lat);
    SweepResult res;

    auto run = [&](const GeneratorSet& g) {
        try {
            detail::record(res, g, enumerate(g, opt.cap));
        } catch (const CapExceeded&) {
            ++res.skipped;
        }
    };

    if (opt.samples == 0) {
        const auto elems = all_elements();
        const auto all_f14 = detail::bounded_polys(d, std::vector<RingElem>(elems.begin(), elems.end()));
        for (const auto& c : chains)
            for (const auto& f14 : all_f14) run({opt.n, c.top, c.bottom, f14, std::nullopt, std::nullopt});
        if (opt.include_double) {
            const auto some_f14 = detail::bounded_polys(d, opt.double_f14_alphabet);
            for (const auto& c12 : chains)
                for (const auto& c34 : chains)
                    for (const auto& f14 : some_f14) run({opt.n, c12.top, c12.bottom, f14, c34.top, c34.bottom});
        }
        return res;
    }

    std::mt19937_64 rng(opt.seed);
    auto pick = [&](std::uint64_t k) { return rng() % k; };
    const std::size_t max_attempts = opt.samples * 100;
    for (std::size_t attempt = 0; res.instances < opt.samples && attempt < max_attempts; ++attempt) {
        GeneratorSet g;
        g.n = opt.n;
        const auto& c12 = chains[pick(chains.size())];
        g.f1 = c12.top;
        g.f2 = c12.bottom;
        const int deg = static_cast<int>(pick(static_cast<std::uint64_t>(d + 2))) - 1;  // -1 is the zero polynomial
        std::vector<RingElem> coeffs(static_cast<std::size_t>(deg + 1));
        for (auto& c : coeffs) c = RingElem::from_index(static_cast<int>(pick(16)));
        if (deg >= 0 && coeffs.back().is_zero()) coeffs.back() = RingElem::from_index(1 + static_cast<int>(pick(15)));
        g.f14 = Poly(std::move(coeffs));
        if (opt.include_double && pick(2) == 1) {
            const auto& c34 = chains[pick(chains.size())];
            g.f3 = c34.top;
            g.f4 = c34.bottom;
        }
        run(g);
    }
    return res;
}

/// One line per instance and property, then erratum records and the summary line.
inline void write_sweep_report(std::ostream& os, const SweepResult& res) {
    for (std::size_t k = 0; k < res.reports.size(); ++k) {
        const auto& r = res.reports[k];
        os << "instance=" << k / 2 << ' ' << (r.gens.is_double() ? "form=double " : "form=single ") << describe(r.gens)
           << " property=" << to_string(r.property) << " theorem=" << to_string(r.theorem)
           << " predicted=" << (r.predicted ? "true" : "false") << " observed=" << (r.observed ? "true" : "false")
           << " agree=" << (r.agree ? "true" : "false") << '\n';
    }
    for (const auto& e : res.errata) {
        const auto& r = e.report;
        os << "erratum id=" << e.id << " instance=" << e.instance << " theorem=" << to_string(r.theorem) << " property=" << to_string(r.property)
           << ' ' << describe(r.gens) << " predicted=" << (r.predicted ? "true" : "false")
           << " observed=" << (r.observed ? "true" : "false");
        for (const auto& f : r.conditions.failures) os << " failed=\"" << f << '"';
        if (!r.conditions.branch.empty()) os << " branch=\"" << r.conditions.branch << '"';
        os << '\n';
    }
    os << "instances=" << res.instances << " skipped=" << res.skipped << " errata=" << res.errata.size() << '\n';
    os << "agreements=" << res.agreements() << '/' << res.reports.size() << '\n';
}

}  // namespace ringdna
