#pragma once

// Ordinals below epsilon_0 in Cantor normal form.
//
// An Ordinal is an immutable list of (exponent, coefficient) terms with
// strictly decreasing exponents and positive coefficients; the empty list
// is 0. Exponents are themselves Ordinals and are shared, so copies are
// cheap and values may be used freely from several threads.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace walks {

using Natural = boost::multiprecision::cpp_int;

enum class OrdinalClass { Zero, Successor, Limit };

class Ordinal {
public:
    struct Term {
        std::shared_ptr<const Ordinal> exponent;
        std::uint64_t coeff = 0;

        const Ordinal& exp() const { return *exponent; }
    };

    Ordinal() = default;

    // Validates the CNF invariants; throws NonCanonical on violation.
    static Ordinal from_terms(std::vector<Term> terms);
    static Ordinal natural(std::uint64_t n);
    static Ordinal omega_power(const Ordinal& exponent, std::uint64_t coeff = 1);
    static const Ordinal& zero();
    static const Ordinal& one();
    static const Ordinal& omega();

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const;
    std::optional<std::uint64_t> as_natural() const;
    OrdinalClass classify() const;
    bool is_limit() const { return classify() == OrdinalClass::Limit; }
    bool is_successor() const { return classify() == OrdinalClass::Successor; }

    // Exponent of the leading (largest) term; 0 for the zero ordinal.
    const Ordinal& leading_exponent() const;

    friend bool operator==(const Ordinal& a, const Ordinal& b);
    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

private:
    explicit Ordinal(std::vector<Term> terms) : terms_(std::move(terms)) {}

    std::vector<Term> terms_;

    friend Ordinal add(const Ordinal& a, const Ordinal& b);
    friend Ordinal predecessor(const Ordinal& a);
    friend Ordinal fund_seq(const Ordinal& a, std::uint64_t n);
};

enum class Comparison { Less, Equal, Greater };

Ordinal parse(std::string_view text);
std::string format(const Ordinal& a);
Comparison compare(const Ordinal& a, const Ordinal& b);

// Ordinal sum; terms of `a` below the leading exponent of `b` are absorbed.
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal successor(const Ordinal& a);
// Inverse of successor; throws OutOfRange unless `a` is a successor.
Ordinal predecessor(const Ordinal& a);
inline OrdinalClass classify(const Ordinal& a) { return a.classify(); }
bool is_indecomposable(const Ordinal& a);

// n-th element of the canonical fundamental sequence of a limit ordinal:
//   a = g + w^(b'+1)  ->  a[n] = g + w^b' * n
//   a = g + w^b, b limit  ->  a[n] = g + w^(b[n])
Ordinal fund_seq(const Ordinal& a, std::uint64_t n);

// Goedel coding: code(0)=0, L(nil)=0,
// L((h,c)::t) = pair(pair(code(h), c-1), L(t)) + 1 with Cantor pairing.
Natural cantor_pair(const Natural& x, const Natural& y);
std::pair<Natural, Natural> cantor_unpair(const Natural& z);
Natural code(const Ordinal& a);
Ordinal decode(const Natural& n);
// decode without the exception: empty when n is not a canonical code.
std::optional<Ordinal> try_decode(const Natural& n);

std::string_view to_string(OrdinalClass c);
std::string_view to_string(Comparison c);

} // namespace walks

template <>
struct std::hash<walks::Ordinal> {
    std::size_t operator()(const walks::Ordinal& a) const noexcept;
};
