#pragma once

#include "adq/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace adq {

/// A product of differential symbols: "dx" has grade 1, "ddy" grade 2,
/// grades add under multiplication. The empty product has grade 0.
/// Distinct tags of equal grade (say ddy versus dx*dy) stay distinct;
/// no identification between them is assumed.
class DiffTag {
public:
    DiffTag() = default;
    static DiffTag basic(const std::string& name);  // "dx" or "ddx" forms

    unsigned grade() const;
    bool is_unit() const { return parts_.empty(); }
    DiffTag operator*(const DiffTag& o) const;
    bool operator==(const DiffTag&) const = default;
    bool operator<(const DiffTag& o) const;

    std::string str() const;  // "du*dv", "1" for the unit

private:
    std::vector<std::string> parts_;  // sorted differential names
};

/// Finite sum of coeff * differential-product terms, the shape
/// Leibniz's law of homogeneity reduces.
class GradedSum {
public:
    GradedSum() = default;
    GradedSum(Poly coeff) { add(std::move(coeff), DiffTag()); }

    static GradedSum symbol(VarId v);                       // u
    static GradedSum differential(const std::string& name); // du, ddy

    void add(Poly coeff, DiffTag tag);

    bool is_zero() const { return terms_.empty(); }
    unsigned min_grade() const;  // error on the empty sum
    const std::map<DiffTag, Poly>& terms() const { return terms_; }

    GradedSum operator+(const GradedSum& o) const;
    GradedSum operator-(const GradedSum& o) const;
    GradedSum operator*(const GradedSum& o) const;

    bool operator==(const GradedSum&) const = default;

    /// The grade-0 part, itself a GradedSum.
    GradedSum finite_part() const;

    std::string str() const;

private:
    std::map<DiffTag, Poly> terms_;
};

/// Keep only the terms of the lowest infinitesimal order present:
/// a + dx gives a; dx + ddy gives dx. Errors on the empty sum.
GradedSum tlh_reduce(const GradedSum& s);

/// d(uv) as (u+du)(v+dv) - uv followed by tlh_reduce: u*dv + v*du.
GradedSum product_rule_tlh(const GradedSum& u, const GradedSum& v);

/// Convenience: a symbol together with its grade-1 differential, u + du.
GradedSum with_differential(VarId v);

/// Parse the tlh mini-language: terms are products of rational
/// literals, single-letter symbols, and differential names (d or dd
/// followed by one letter), joined by '*', combined with '+'/'-'.
GradedSum parse_graded(const std::string& text);

}  // namespace adq
