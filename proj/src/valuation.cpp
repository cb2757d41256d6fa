#include "tropjac/valuation.hpp"

namespace tropjac {

Valuation Valuation::p_adic(const Int& p) {
    require(is_probable_prime(p), "InvalidValuation", "p-adic valuation requires a prime, got " + p.str());
    Valuation v;
    v.kind_ = Kind::PAdic;
    v.p_ = p;
    return v;
}

Valuation Valuation::explicit_table(std::map<std::string, ExtRat> table) {
    Valuation v;
    v.kind_ = Kind::Explicit;
    v.table_ = std::move(table);
    return v;
}

ExtRat Valuation::of_rational(const Rat& x) const {
    require(kind_ == Kind::PAdic, "MissingValuation",
            "explicit valuation queried on a rational; use a term identifier");
    if (x.is_zero()) return ExtRat::inf();
    Int num = x.num();
    Int den = x.den();
    long vn = static_cast<long>(remove_factor(num, p_));
    long vd = static_cast<long>(remove_factor(den, p_));
    return ExtRat(Rat(Int(vn - vd)));
}

ExtRat Valuation::of_identifier(const std::string& id) const {
    require(kind_ == Kind::Explicit, "MissingValuation",
            "p-adic valuation queried with a term identifier");
    auto it = table_.find(id);
    require(it != table_.end(), "MissingValuation", "no valuation for term '" + id + "'");
    return it->second;
}

} // namespace tropjac
