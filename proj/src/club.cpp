#include "walks/club.hpp"

#include "walks/errors.hpp"

namespace walks {

namespace {

// Splits a into the part made of terms with exponent >= k and the rest.
std::pair<Ordinal, bool> head_at_least(const Ordinal& a, const Ordinal& k) {
    std::vector<Ordinal::Term> head;
    bool has_tail = false;
    for (const auto& t : a.terms()) {
        if (t.exp() >= k) {
            head.push_back(t);
        } else {
            has_tail = true;
            break;
        }
    }
    return {Ordinal::from_terms(std::move(head)), has_tail};
}

class MultiplesClub final : public Club {
public:
    MultiplesClub(std::uint64_t k, std::string name)
        : k_(k), power_(Ordinal::natural(k)), name_(std::move(name)) {}

    bool contains(const Ordinal& a) const override {
        return !a.is_zero() && a.terms().back().exp() >= power_;
    }

    Ordinal next(const Ordinal& xi) const override {
        if (contains(xi)) return xi;
        auto [head, has_tail] = head_at_least(xi, power_);
        return add(head, Ordinal::omega_power(power_));
    }

    Ordinal pred_sup(const Ordinal& gamma) const override {
        if (gamma.is_zero()) return gamma;
        auto [head, has_tail] = head_at_least(gamma, power_);
        if (has_tail) return head;
        // gamma = w^k * eta; the last exponent decides whether eta is a successor.
        if (gamma.terms().back().exp() == power_) {
            auto terms = gamma.terms();
            if (--terms.back().coeff == 0) terms.pop_back();
            return Ordinal::from_terms(std::move(terms));
        }
        return gamma;
    }

    std::string descriptor() const override { return name_; }

private:
    std::uint64_t k_;
    Ordinal power_;
    std::string name_;
};

class IndecomposableClub final : public Club {
public:
    bool contains(const Ordinal& a) const override {
        return is_indecomposable(a) && !a.is_finite();
    }

    Ordinal next(const Ordinal& xi) const override {
        if (contains(xi)) return xi;
        if (xi.is_finite()) return Ordinal::omega();
        return Ordinal::omega_power(successor(xi.leading_exponent()));
    }

    Ordinal pred_sup(const Ordinal& gamma) const override {
        if (gamma.is_finite()) return Ordinal::zero();
        const Ordinal& e = gamma.leading_exponent();
        if (!is_indecomposable(gamma)) return Ordinal::omega_power(e);
        if (e.is_limit()) return gamma;
        Ordinal below = predecessor(e);
        if (below.is_zero()) return Ordinal::zero();
        return Ordinal::omega_power(below);
    }

    std::string descriptor() const override { return "ind"; }
};

class IntersectionClub final : public Club {
public:
    IntersectionClub(ClubPtr c, ClubPtr d, std::uint64_t fuel)
        : c_(std::move(c)), d_(std::move(d)), fuel_(fuel) {
        if (fuel_ == 0) throw ConfigError("intersection fuel must be >= 1");
    }

    bool contains(const Ordinal& a) const override {
        return c_->contains(a) && d_->contains(a);
    }

    Ordinal next(const Ordinal& xi) const override {
        Ordinal x = xi;
        for (std::uint64_t round = 0; round < fuel_; ++round) {
            Ordinal y = c_->next(x);
            Ordinal z = d_->next(y);
            if (z == y) return y;
            x = std::move(z);
        }
        throw FuelExhausted("next(" + format(xi) + ") on " + descriptor() +
                            " did not stabilize within " + std::to_string(fuel_) + " rounds");
    }

    Ordinal pred_sup(const Ordinal& gamma) const override {
        Ordinal x = std::min(c_->pred_sup(gamma), d_->pred_sup(gamma));
        if (x == gamma && !gamma.is_zero()) {
            // gamma is a limit point of both factors; look for a gap in the
            // common part along the fundamental sequence.
            for (std::uint64_t n = 0; n < fuel_; ++n) {
                Ordinal probe = fund_seq(gamma, n);
                Ordinal hit;
                try {
                    hit = next(successor(probe));
                } catch (const FuelExhausted&) {
                    continue;
                }
                if (hit >= gamma) return descend(successor(probe), gamma);
            }
            throw FuelExhausted("cannot decide whether " + format(gamma) +
                                " is a limit point of " + descriptor());
        }
        return descend(x, gamma);
    }

    std::string descriptor() const override {
        return "intersect(" + c_->descriptor() + "," + d_->descriptor() + ")";
    }

private:
    // Largest common member <= x (or 0), by alternating floors.
    Ordinal descend(Ordinal x, const Ordinal& gamma) const {
        for (std::uint64_t round = 0; round < fuel_; ++round) {
            Ordinal y = c_->contains(x) ? x : c_->pred_sup(x);
            Ordinal z = d_->contains(y) ? y : d_->pred_sup(y);
            if (z == y && (z.is_zero() || c_->contains(z))) return z;
            x = std::move(z);
        }
        throw FuelExhausted("pred_sup(" + format(gamma) + ") on " + descriptor() +
                            " did not stabilize within " + std::to_string(fuel_) + " rounds");
    }

    ClubPtr c_;
    ClubPtr d_;
    std::uint64_t fuel_;
};

} // namespace

ClubPtr make_lim() { return std::make_shared<MultiplesClub>(1, "lim"); }

ClubPtr make_ind() { return std::make_shared<IndecomposableClub>(); }

ClubPtr make_multiples(std::uint64_t k) {
    if (k == 0) throw ConfigError("multiples club needs k >= 1");
    std::string name = k == 1 ? "mult:w" : "mult:w^" + std::to_string(k);
    return std::make_shared<MultiplesClub>(k, std::move(name));
}

ClubPtr intersect(ClubPtr c, ClubPtr d, std::uint64_t fuel) {
    return std::make_shared<IntersectionClub>(std::move(c), std::move(d), fuel);
}

ClubPtr parse_club(std::string_view text) {
    if (text == "lim") return make_lim();
    if (text == "ind") return make_ind();
    if (text.starts_with("mult:")) {
        Ordinal power;
        try {
            power = parse(text.substr(5));
        } catch (const Error&) {
            throw ConfigError("bad club descriptor '" + std::string(text) + "'");
        }
        if (!is_indecomposable(power) || !power.leading_exponent().as_natural() ||
            power.is_finite()) {
            throw ConfigError("mult: expects w or w^k, got '" + std::string(text) + "'");
        }
        return make_multiples(*power.leading_exponent().as_natural());
    }
    if (text.starts_with("intersect(") && text.ends_with(")")) {
        std::string_view inner = text.substr(10, text.size() - 11);
        int depth = 0;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(') ++depth;
            if (inner[i] == ')') --depth;
            if (inner[i] == ',' && depth == 0) {
                return intersect(parse_club(inner.substr(0, i)), parse_club(inner.substr(i + 1)));
            }
        }
    }
    throw ConfigError("unknown club descriptor '" + std::string(text) + "'");
}

} // namespace walks
