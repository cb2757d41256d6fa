#pragma once

#include <map>
#include <string>

#include "tropjac/numeric.hpp"

namespace tropjac {

// Non-archimedean valuation: either p-adic on Q, or an explicit table keyed
// by term identifiers (used for curves over fields like C{{t}}).
class Valuation {
public:
    enum class Kind { PAdic, Explicit };

    static Valuation p_adic(const Int& p);
    static Valuation explicit_table(std::map<std::string, ExtRat> table);

    Kind kind() const { return kind_; }
    const Int& prime() const { return p_; }

    // p-adic valuation: ord_p(num) - ord_p(den); +inf at 0.
    ExtRat of_rational(const Rat& x) const;
    // Explicit table lookup; MissingValuation for unknown identifiers.
    ExtRat of_identifier(const std::string& id) const;

private:
    Valuation() = default;
    Kind kind_ = Kind::PAdic;
    Int p_ = Int(2);
    std::map<std::string, ExtRat> table_;
};

inline ExtRat valuate(const Rat& x, const Valuation& v) { return v.of_rational(x); }
inline ExtRat valuate(const std::string& id, const Valuation& v) { return v.of_identifier(id); }

} // namespace tropjac
