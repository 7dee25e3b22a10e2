// Prints the codon map, the binary images of the codons, and the DNA codes of
// the two constant cyclic codes of length 3 and 7.

#include <iomanip>
#include <iostream>

#include "ringdna/ringdna.hpp"

using namespace ringdna;

namespace {

void print_code(const char* title, const GeneratorSet& g) {
    const Code c = enumerate(g);
    std::cout << title << "  (size " << c.size() << ", d_H " << min_hamming_distance(c) << ", d_DNA "
              << min_dna_distance(c) << ", DNA code: " << (is_dna_code(c) ? "yes" : "no") << ")\n";
    const auto words = dna_image(c);
    for (std::size_t i = 0; i < words.size(); ++i)
        std::cout << "  " << words[i] << ((i % 4 == 3 || i + 1 == words.size()) ? "\n" : "");
    std::cout << '\n';
}

}  // namespace

int main() {
    std::cout << "codon  element  gray\n";
    for (RingElem x : all_elements())
        std::cout << "  " << theta(x).str() << "   " << std::left << std::setw(7) << to_string(x) << "  "
                  << gray_word({x}) << '\n';
    std::cout << '\n';

    for (int n : {3, 7}) {
        std::cout << "x^" << n << "-1 over Z4:";
        for (const auto& f : factor_xn_minus_1_z4(n)) std::cout << "  (" << pretty(f) << ')';
        std::cout << "\n";
    }
    std::cout << '\n';

    GeneratorSet g3;
    g3.n = 3;
    g3.f1 = g3.f2 = Poly({1, 1, 1});
    print_code("n=3, f1=f2=x^2+x+1", g3);

    GeneratorSet g7;
    g7.n = 7;
    g7.f1 = g7.f2 = Poly::all_ones(7);
    print_code("n=7, f1=f2=x^6+...+x+1", g7);

    GeneratorSet two = g3;
    two.f3 = Poly({3, 1});
    two.f4 = Poly({1});
    const Code c = enumerate(two);
    std::cout << "n=3, f1=f2=x^2+x+1, f3=x-1, f4=1: size " << c.size() << ", d_H " << min_hamming_distance(c)
              << ", d_DNA " << min_dna_distance(c) << '\n';
    return 0;
}
