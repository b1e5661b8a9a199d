#include "walks/ordinal.hpp"

#include <cctype>
#include <limits>

#include "walks/errors.hpp"

namespace walks {

namespace {

std::shared_ptr<const Ordinal> share(const Ordinal& a) {
    if (a.is_zero()) {
        static const auto zero = std::make_shared<const Ordinal>();
        return zero;
    }
    if (a == Ordinal::one()) {
        static const auto one = std::make_shared<const Ordinal>(Ordinal::one());
        return one;
    }
    return std::make_shared<const Ordinal>(a);
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
        throw Overflow("coefficient exceeds 64 bits");
    }
    return a + b;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Ordinal parse_all() {
        Ordinal result = parse_ordinal();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return result;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(msg + " at position " + std::to_string(pos_) + " in \"" +
                          std::string(text_) + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    std::uint64_t parse_nat() {
        if (!at_digit()) fail("expected a natural number");
        if (text_[pos_] == '0' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            fail("leading zero");
        }
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
                fail("number too large");
            }
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    Ordinal parse_ordinal() {
        std::vector<Ordinal::Term> terms;
        do {
            terms.push_back(parse_term());
        } while (accept('+'));
        if (terms.size() == 1 && terms[0].coeff == 0 && terms[0].exp().is_zero()) {
            return Ordinal::zero();
        }
        return Ordinal::from_terms(std::move(terms));
    }

    Ordinal::Term parse_term() {
        if (at_digit()) {
            return {share(Ordinal::zero()), parse_nat()};
        }
        if (!accept('w')) fail("expected a natural number or 'w'");
        Ordinal exponent = Ordinal::one();
        if (accept('^')) {
            if (at_digit()) {
                exponent = Ordinal::natural(parse_nat());
            } else if (accept('w')) {
                exponent = Ordinal::omega();
            } else if (accept('(')) {
                exponent = parse_ordinal();
                if (!accept(')')) fail("expected ')'");
            } else {
                fail("expected exponent after '^'");
            }
        }
        std::uint64_t coeff = 1;
        if (accept('*')) coeff = parse_nat();
        return {share(exponent), coeff};
    }
};

void format_into(const Ordinal& a, std::string& out) {
    if (a.is_zero()) {
        out += '0';
        return;
    }
    bool first = true;
    for (const auto& term : a.terms()) {
        if (!first) out += '+';
        first = false;
        const Ordinal& e = term.exp();
        if (e.is_zero()) {
            out += std::to_string(term.coeff);
            continue;
        }
        out += 'w';
        if (auto n = e.as_natural()) {
            if (*n != 1) out += '^' + std::to_string(*n);
        } else if (e == Ordinal::omega()) {
            out += "^w";
        } else {
            out += "^(";
            format_into(e, out);
            out += ')';
        }
        if (term.coeff != 1) out += '*' + std::to_string(term.coeff);
    }
}

// Decodes L(list); `n` is the list code. Empty on malformed lists.
std::optional<std::vector<Ordinal::Term>> decode_list(Natural n) {
    std::vector<Ordinal::Term> terms;
    while (n != 0) {
        auto [head, rest] = cantor_unpair(n - 1);
        auto [exp_code, coeff_minus_one] = cantor_unpair(head);
        if (coeff_minus_one >= std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
        auto exponent = try_decode(exp_code);
        if (!exponent) return std::nullopt;
        if (!terms.empty() && !(*exponent < terms.back().exp())) return std::nullopt;
        terms.push_back({share(*exponent), coeff_minus_one.convert_to<std::uint64_t>() + 1});
        n = std::move(rest);
    }
    return terms;
}

} // namespace

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (!terms[i].exponent) throw NonCanonical("missing exponent");
        if (terms[i].coeff == 0) throw NonCanonical("zero coefficient");
        if (i > 0 && !(terms[i].exp() < terms[i - 1].exp())) {
            throw NonCanonical("exponents not strictly decreasing");
        }
    }
    return Ordinal(std::move(terms));
}

Ordinal Ordinal::natural(std::uint64_t n) {
    if (n == 0) return {};
    return Ordinal({Term{share(zero()), n}});
}

Ordinal Ordinal::omega_power(const Ordinal& exponent, std::uint64_t coeff) {
    if (coeff == 0) return {};
    return Ordinal({Term{share(exponent), coeff}});
}

const Ordinal& Ordinal::zero() {
    static const Ordinal z;
    return z;
}

const Ordinal& Ordinal::one() {
    static const Ordinal o({Term{std::make_shared<const Ordinal>(), 1}});
    return o;
}

const Ordinal& Ordinal::omega() {
    static const Ordinal w({Term{share(one()), 1}});
    return w;
}

bool Ordinal::is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp().is_zero());
}

std::optional<std::uint64_t> Ordinal::as_natural() const {
    if (terms_.empty()) return 0;
    if (is_finite()) return terms_[0].coeff;
    return std::nullopt;
}

OrdinalClass Ordinal::classify() const {
    if (terms_.empty()) return OrdinalClass::Zero;
    return terms_.back().exp().is_zero() ? OrdinalClass::Successor : OrdinalClass::Limit;
}

const Ordinal& Ordinal::leading_exponent() const {
    return terms_.empty() ? zero() : terms_.front().exp();
}

bool operator==(const Ordinal& a, const Ordinal& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (x.coeff != y.coeff) return false;
        if (x.exponent != y.exponent && !(x.exp() == y.exp())) return false;
    }
    return true;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (x.exponent != y.exponent) {
            if (auto c = x.exp() <=> y.exp(); c != 0) return c;
        }
        if (auto c = x.coeff <=> y.coeff; c != 0) return c;
    }
    return a.terms_.size() <=> b.terms_.size();
}

Ordinal parse(std::string_view text) { return Parser(text).parse_all(); }

std::string format(const Ordinal& a) {
    std::string out;
    format_into(a, out);
    return out;
}

Comparison compare(const Ordinal& a, const Ordinal& b) {
    auto c = a <=> b;
    if (c < 0) return Comparison::Less;
    if (c > 0) return Comparison::Greater;
    return Comparison::Equal;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const Ordinal& lead = b.leading_exponent();
    std::vector<Ordinal::Term> terms;
    terms.reserve(a.terms_.size() + b.terms_.size());
    for (const auto& t : a.terms_) {
        auto c = t.exp() <=> lead;
        if (c > 0) {
            terms.push_back(t);
        } else {
            if (c == 0) {
                Ordinal::Term merged = b.terms_.front();
                merged.coeff = checked_add(t.coeff, merged.coeff);
                terms.push_back(merged);
                terms.insert(terms.end(), b.terms_.begin() + 1, b.terms_.end());
                return Ordinal(std::move(terms));
            }
            break;
        }
    }
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return Ordinal(std::move(terms));
}

Ordinal successor(const Ordinal& a) { return add(a, Ordinal::one()); }

Ordinal predecessor(const Ordinal& a) {
    if (!a.is_successor()) throw OutOfRange(format(a) + " is not a successor");
    auto terms = a.terms_;
    if (--terms.back().coeff == 0) terms.pop_back();
    return Ordinal(std::move(terms));
}

bool is_indecomposable(const Ordinal& a) {
    return a.terms().size() == 1 && a.terms()[0].coeff == 1;
}

Ordinal fund_seq(const Ordinal& a, std::uint64_t n) {
    if (!a.is_limit()) throw NotLimit(format(a) + " is not a limit ordinal");
    auto prefix_terms = a.terms_;
    Ordinal::Term last = prefix_terms.back();
    if (--prefix_terms.back().coeff == 0) prefix_terms.pop_back();
    Ordinal prefix(std::move(prefix_terms));
    const Ordinal& e = last.exp();
    if (e.is_successor()) {
        return add(prefix, Ordinal::omega_power(predecessor(e), n));
    }
    return add(prefix, Ordinal::omega_power(fund_seq(e, n)));
}

Natural cantor_pair(const Natural& x, const Natural& y) {
    Natural s = x + y;
    return s * (s + 1) / 2 + x;
}

std::pair<Natural, Natural> cantor_unpair(const Natural& z) {
    Natural disc = 8 * z + 1;
    Natural w = (boost::multiprecision::sqrt(disc) - 1) / 2;
    Natural t = w * (w + 1) / 2;
    Natural x = z - t;
    return {x, w - x};
}

Natural code(const Ordinal& a) {
    Natural list = 0;
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        list = cantor_pair(cantor_pair(code(it->exp()), Natural(it->coeff - 1)), list) + 1;
    }
    return list;
}

std::optional<Ordinal> try_decode(const Natural& n) {
    if (n < 0) return std::nullopt;
    auto terms = decode_list(n);
    if (!terms) return std::nullopt;
    return Ordinal::from_terms(std::move(*terms));
}

Ordinal decode(const Natural& n) {
    auto a = try_decode(n);
    if (!a) throw InvalidCode(n.str() + " does not encode a canonical CNF");
    return *std::move(a);
}

std::string_view to_string(OrdinalClass c) {
    switch (c) {
    case OrdinalClass::Zero: return "Zero";
    case OrdinalClass::Successor: return "Successor";
    case OrdinalClass::Limit: return "Limit";
    }
    return "?";
}

std::string_view to_string(Comparison c) {
    switch (c) {
    case Comparison::Less: return "less";
    case Comparison::Equal: return "equal";
    case Comparison::Greater: return "greater";
    }
    return "?";
}

} // namespace walks

std::size_t std::hash<walks::Ordinal>::operator()(const walks::Ordinal& a) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& t : a.terms()) {
        h ^= (*this)(t.exp()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<std::uint64_t>{}(t.coeff) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}
