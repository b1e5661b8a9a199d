#pragma once

// Closed unbounded classes of ordinals, represented intensionally as query
// objects. Nothing here materializes a set.

#include <cstdint>
#include <memory>
#include <string>

#include "walks/ordinal.hpp"

namespace walks {

class Club {
public:
    virtual ~Club() = default;

    virtual bool contains(const Ordinal& a) const = 0;
    // Least member >= xi.
    virtual Ordinal next(const Ordinal& xi) const = 0;
    // Supremum of the members below gamma; 0 when there are none.
    virtual Ordinal pred_sup(const Ordinal& gamma) const = 0;
    virtual std::string descriptor() const = 0;

    // gamma is a limit of members. 0 is never a limit point.
    virtual bool is_limit_point(const Ordinal& gamma) const {
        return !gamma.is_zero() && pred_sup(gamma) == gamma;
    }

    Ordinal next_strict(const Ordinal& xi) const { return next(successor(xi)); }
};

using ClubPtr = std::shared_ptr<const Club>;

// All limit ordinals.
ClubPtr make_lim();
// {w^b : b >= 1}.
ClubPtr make_ind();
// {w^k * xi : xi >= 1}.
ClubPtr make_multiples(std::uint64_t k);
// Members of both; next/pred_sup alternate between the factors and give up
// with FuelExhausted after `fuel` rounds.
ClubPtr intersect(ClubPtr c, ClubPtr d, std::uint64_t fuel = 64);

// "lim", "ind", "mult:w", "mult:w^k", "intersect(a,b)".
ClubPtr parse_club(std::string_view descriptor);

} // namespace walks
