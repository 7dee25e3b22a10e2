#pragma once

// DNA views of codes and the classical codebook design constraints.

#include <algorithm>
#include <array>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "code.hpp"
#include "errors.hpp"
#include "ring.hpp"

namespace ringdna {

using DnaWord = std::string;

inline void require_dna_alphabet(std::string_view d) {
    for (char c : d)
        if (c != 'A' && c != 'C' && c != 'G' && c != 'T')
            throw BadAlphabet(std::string("not a nucleotide: '") + c + "'");
}

/// Concatenation of theta over the symbols.
inline DnaWord encode(const CodeWord& w) {
    DnaWord out;
    out.reserve(2 * w.size());
    for (RingElem x : w) out += theta(x).str();
    return out;
}

inline CodeWord decode(std::string_view d) {
    require_dna_alphabet(d);
    if (d.size() % 2 != 0) throw OddLength();
    CodeWord w;
    w.reserve(d.size() / 2);
    for (std::size_t i = 0; i < d.size(); i += 2)
        w.push_back(theta_inv({nucleotide_from_char(d[i]), nucleotide_from_char(d[i + 1])}));
    return w;
}

inline DnaWord letterwise_complement(std::string_view d) {
    require_dna_alphabet(d);
    DnaWord out(d);
    for (char& c : out) c = to_char(watson_crick(nucleotide_from_char(c)));
    return out;
}

inline int gc_content(std::string_view d) {
    return static_cast<int>(std::count_if(d.begin(), d.end(), [](char c) { return c == 'G' || c == 'C'; }));
}

inline int letter_distance(std::string_view x, std::string_view y) {
    if (x.size() != y.size()) throw LengthMismatch("DNA words of differing length");
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
    return d;
}

/// Reverse and reverse-complement of a DNA view, taken at the codon level: the
/// codon order is reversed (and each codon complemented), letters inside a codon
/// keep their order.
inline DnaWord dna_reverse(std::string_view d) { return encode(reverse(decode(d))); }
inline DnaWord dna_reverse_complement(std::string_view d) { return encode(reverse_complement(decode(d))); }

inline std::vector<DnaWord> dna_image(const Code& c) {
    std::vector<DnaWord> out;
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back(encode(c.word(i)));
    return out;
}

/// Minimum letterwise Hamming distance between distinct DNA images of codewords.
/// The symbol Hamming distance is a lower bound, so the scan stops once it is met.
inline int min_dna_distance(const Code& c) {
    if (c.size() < 2) throw TrivialCode();
    // letters[i][j]: differing letters between theta(i) and theta(j)
    std::array<std::array<int, 16>, 16> letters{};
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            letters[i][j] = letter_distance(theta(RingElem::from_index(i)).str(), theta(RingElem::from_index(j)).str());
    const int floor = min_hamming_distance(c);
    const auto words = c.words();
    int best = 2 * static_cast<int>(c.n()) + 1;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            int d = 0;
            for (std::size_t k = 0; k < c.n() && d < best; ++k) d += letters[words[i][k].index()][words[j][k].index()];
            best = std::min(best, d);
            if (best == floor) return best;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Codebook constraints

namespace detail {

inline void require_equal_lengths(const std::vector<DnaWord>& book) {
    for (const auto& w : book) {
        require_dna_alphabet(w);
        if (w.size() != book.front().size()) throw LengthMismatch("codebook words of differing length");
    }
}

// H(map(x), y) >= d over ordered pairs, skipping pairs with map(x) == y.
template <class Map>
bool mapped_distance_at_least(const std::vector<DnaWord>& book, int d, Map map) {
    require_equal_lengths(book);
    for (const auto& x : book) {
        const DnaWord mx = map(x);
        for (const auto& y : book)
            if (mx != y && letter_distance(mx, y) < d) return false;
    }
    return true;
}

}  // namespace detail

/// (i) every pair of distinct words at distance >= d.
inline bool check_hamming_constraint(const std::vector<DnaWord>& book, int d) {
    return detail::mapped_distance_at_least(book, d, [](const DnaWord& x) { return x; });
}

/// (ii) H(reverse(x), y) >= d whenever reverse(x) != y.
inline bool check_reverse_constraint(const std::vector<DnaWord>& book, int d) {
    return detail::mapped_distance_at_least(book, d, [](const DnaWord& x) { return dna_reverse(x); });
}

/// (iii) H(rc(x), y) >= d whenever rc(x) != y.
inline bool check_rc_constraint(const std::vector<DnaWord>& book, int d) {
    return detail::mapped_distance_at_least(book, d, [](const DnaWord& x) { return dna_reverse_complement(x); });
}

/// (iv) all words share one GC-content.
inline bool check_gc_constraint(const std::vector<DnaWord>& book) {
    detail::require_equal_lengths(book);
    return std::all_of(book.begin(), book.end(),
                       [&](const DnaWord& w) { return gc_content(w) == gc_content(book.front()); });
}

/// Reads a codebook: one word per line, '#' comments and blank lines skipped.
/// "key=value" header lines of a code export are skipped too, so DNA exports load directly.
inline std::vector<DnaWord> read_codebook(std::istream& in) {
    std::vector<DnaWord> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#' || line.find('=') != std::string::npos) continue;
        require_dna_alphabet(line);
        out.push_back(line);
    }
    return out;
}

}  // namespace ringdna
