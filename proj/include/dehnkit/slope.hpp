#pragma once

// Slope arithmetic on a torus boundary component: distance, primitivity and
// the oriented double curve sum used for sutured decomposition bookkeeping.
//
// All slopes live in one fixed ordered basis of H_1 of the torus; changing the
// basis is never implicit.

#include <string>
#include <utility>
#include <vector>

#include "dehnkit/error.hpp"

namespace dehnkit {

// A primitive integer pair (p, q) != (0, 0). Normal form: q > 0, or p > 0
// when q == 0. Orientation is carried separately, never by the slope.
class Slope {
public:
    Slope(long long p, long long q);

    long long p() const { return p_; }
    long long q() const { return q_; }

    bool operator==(const Slope&) const = default;
    bool operator<(const Slope& o) const {
        return p_ != o.p_ ? p_ < o.p_ : q_ < o.q_;
    }

    std::string to_string() const; // "p/q"

    // Parses "p/q". Throws ParseError on malformed text, InvalidSlopeError on
    // a non-primitive or zero pair.
    static Slope parse(const std::string& text);

private:
    long long p_, q_;
};

// Minimal geometric intersection number |p*s - q*r|. Symmetric; zero iff the
// slopes agree up to sign.
long long delta(const Slope& a, const Slope& b);

// Explicit basis change by an integer matrix [[a, b], [c, d]] of determinant
// +-1; delta is invariant under applying the same matrix to both slopes.
Slope change_basis(const Slope& s, long long a, long long b, long long c, long long d);

struct MulticurveTerm {
    Slope slope;
    long long multiplicity; // > 0
    int orientation;        // +1 or -1

    bool operator==(const MulticurveTerm&) const = default;
};

// Weighted oriented collection of parallel slope classes. Normal form keeps
// at most one term per (slope, orientation) pair, sorted.
class OrientedMulticurve {
public:
    OrientedMulticurve() = default;
    explicit OrientedMulticurve(std::vector<MulticurveTerm> terms);

    const std::vector<MulticurveTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Total homology class (x, y) = sum of orientation * multiplicity * slope.
    std::pair<long long, long long> homology_class() const;

    long long total_components() const;

    bool operator==(const OrientedMulticurve&) const = default;

private:
    std::vector<MulticurveTerm> terms_;
};

// Oriented resolution of all transverse crossings of c1 and c2.
//
// If every term of both inputs lies on one slope there are no crossings and
// the result is the disjoint union, multiplicities and orientations kept
// (mixed orientations are not cancelled). Otherwise the total class (x, y)
// must be nonzero and the result is gcd(|x|, |y|) coherently oriented copies
// of the primitive slope of (x, y); a vanishing total class of intersecting
// inputs has no representation as a multicurve of slopes and is rejected.
OrientedMulticurve double_curve_sum_torus(const OrientedMulticurve& c1,
                                          const OrientedMulticurve& c2);

} // namespace dehnkit
