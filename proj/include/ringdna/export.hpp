#pragma once

// Text export of enumerated codes.
//
//   n=<int>
//   size=<int>
//   generators=<g_a>;<g_b>      (g_b empty for the one-generator form)
//   <one codeword per line, canonical order>

#include <ostream>
#include <string>
#include <string_view>

#include "code.hpp"
#include "dna.hpp"
#include "errors.hpp"

namespace ringdna {

enum class ExportFormat { ring, dna, gray };

inline ExportFormat parse_export_format(std::string_view s) {
    if (s == "ring") return ExportFormat::ring;
    if (s == "dna") return ExportFormat::dna;
    if (s == "gray") return ExportFormat::gray;
    throw ParseError("unknown format '" + std::string(s) + "' (expected ring, dna or gray)");
}

inline void write_code_export(std::ostream& os, const Code& c, ExportFormat fmt) {
    os << "n=" << c.n() << '\n' << "size=" << c.size() << '\n' << "generators=";
    if (c.source()) {
        const auto polys = generator_polys(*c.source());
        os << to_string(polys.g_a) << ';';
        if (polys.g_b) os << to_string(*polys.g_b);
    } else {
        os << ';';
    }
    os << '\n';
    for (std::size_t i = 0; i < c.size(); ++i) {
        const CodeWord w = c.word(i);
        switch (fmt) {
            case ExportFormat::ring: os << to_string(w); break;
            case ExportFormat::dna: os << encode(w); break;
            case ExportFormat::gray: os << gray_word(w); break;
        }
        os << '\n';
    }
}

}  // namespace ringdna
