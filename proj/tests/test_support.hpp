#pragma once

// Test-only helpers: small universes built directly from coefficient
// vectors, and a coefficient-vector sum used as an oracle for `add`.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "walks/ordinal.hpp"

namespace walks::testing {

// Coefficients indexed by exponent: digits[e] is the coefficient of w^e.
using Digits = std::vector<std::uint64_t>;

inline Ordinal from_digits(const Digits& digits) {
    std::vector<Ordinal::Term> terms;
    for (std::size_t e = digits.size(); e-- > 0;) {
        if (digits[e] == 0) continue;
        terms.push_back({std::make_shared<const Ordinal>(Ordinal::natural(e)), digits[e]});
    }
    return Ordinal::from_terms(std::move(terms));
}

inline Digits to_digits(const Ordinal& a, std::size_t width) {
    Digits d(width, 0);
    for (const auto& t : a.terms()) d.at(*t.exp().as_natural()) = t.coeff;
    return d;
}

// Every ordinal sum_{e < max_exp} w^e * c_e with c_e <= cap, increasing.
inline std::vector<Ordinal> small_universe(std::size_t max_exp, std::uint64_t cap) {
    std::vector<Ordinal> out;
    Digits d(max_exp, 0);
    while (true) {
        out.push_back(from_digits(d));
        std::size_t i = 0;
        while (i < max_exp && d[i] == cap) d[i++] = 0;
        if (i == max_exp) break;
        ++d[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// a + b on digit vectors: b's leading digit absorbs everything of a below it.
inline Digits digits_sum(const Digits& a, const Digits& b) {
    std::size_t width = std::max(a.size(), b.size());
    Digits out(width, 0);
    std::size_t lead = width;
    for (std::size_t e = b.size(); e-- > 0;) {
        if (b[e] != 0) {
            lead = e;
            break;
        }
    }
    if (lead == width) return a;
    for (std::size_t e = 0; e < width; ++e) {
        std::uint64_t ae = e < a.size() ? a[e] : 0;
        std::uint64_t be = e < b.size() ? b[e] : 0;
        if (e > lead) out[e] = ae;
        else if (e == lead) out[e] = ae + be;
        else out[e] = be;
    }
    return out;
}

inline Ordinal ord(const char* text) { return parse(text); }

} // namespace walks::testing
