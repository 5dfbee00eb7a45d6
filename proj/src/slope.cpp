#include "dehnkit/slope.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace dehnkit {

Slope::Slope(long long p, long long q) : p_(p), q_(q) {
    if (p == 0 && q == 0)
        throw InvalidSlopeError("slope (0,0) does not represent a curve");
    if (std::gcd(std::llabs(p), std::llabs(q)) != 1)
        throw InvalidSlopeError("slope coordinates must be coprime: (" + std::to_string(p) +
                                "," + std::to_string(q) + ")");
    if (q_ < 0 || (q_ == 0 && p_ < 0)) {
        p_ = -p_;
        q_ = -q_;
    }
}

std::string Slope::to_string() const {
    return std::to_string(p_) + "/" + std::to_string(q_);
}

Slope Slope::parse(const std::string& text) {
    auto pos = text.find('/');
    if (pos == std::string::npos)
        throw ParseError("slope must be written p/q, got \"" + text + "\"");
    try {
        size_t used = 0;
        long long p = std::stoll(text.substr(0, pos), &used);
        if (used != pos) throw ParseError("");
        std::string qs = text.substr(pos + 1);
        long long q = std::stoll(qs, &used);
        if (used != qs.size()) throw ParseError("");
        return Slope(p, q);
    } catch (const InvalidSlopeError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("slope must be written p/q with integer entries, got \"" + text + "\"");
    }
}

long long delta(const Slope& a, const Slope& b) {
    return std::llabs(a.p() * b.q() - a.q() * b.p());
}

Slope change_basis(const Slope& s, long long a, long long b, long long c, long long d) {
    if (std::llabs(a * d - b * c) != 1)
        throw PreconditionError("basis change requires a determinant +-1 integer matrix");
    return Slope(a * s.p() + b * s.q(), c * s.p() + d * s.q());
}

OrientedMulticurve::OrientedMulticurve(std::vector<MulticurveTerm> terms) {
    for (const auto& t : terms) {
        if (t.multiplicity <= 0)
            throw StructureError("multicurve multiplicities must be positive");
        if (t.orientation != 1 && t.orientation != -1)
            throw StructureError("multicurve orientation must be +1 or -1");
    }
    std::sort(terms.begin(), terms.end(), [](const MulticurveTerm& a, const MulticurveTerm& b) {
        if (!(a.slope == b.slope)) return a.slope < b.slope;
        return a.orientation < b.orientation;
    });
    for (const auto& t : terms) {
        if (!terms_.empty() && terms_.back().slope == t.slope &&
            terms_.back().orientation == t.orientation) {
            terms_.back().multiplicity += t.multiplicity;
        } else {
            terms_.push_back(t);
        }
    }
}

std::pair<long long, long long> OrientedMulticurve::homology_class() const {
    long long x = 0, y = 0;
    for (const auto& t : terms_) {
        x += t.orientation * t.multiplicity * t.slope.p();
        y += t.orientation * t.multiplicity * t.slope.q();
    }
    return {x, y};
}

long long OrientedMulticurve::total_components() const {
    long long n = 0;
    for (const auto& t : terms_) n += t.multiplicity;
    return n;
}

OrientedMulticurve double_curve_sum_torus(const OrientedMulticurve& c1,
                                          const OrientedMulticurve& c2) {
    std::vector<MulticurveTerm> all = c1.terms();
    all.insert(all.end(), c2.terms().begin(), c2.terms().end());
    if (all.empty()) return OrientedMulticurve{};

    bool single_slope = true;
    for (const auto& t : all)
        if (!(t.slope == all.front().slope)) single_slope = false;

    if (single_slope) {
        // Parallel representatives, nothing to resolve.
        return OrientedMulticurve(std::move(all));
    }

    auto [x1, y1] = c1.homology_class();
    auto [x2, y2] = c2.homology_class();
    long long x = x1 + x2, y = y1 + y2;
    if (x == 0 && y == 0)
        throw PreconditionError(
            "double curve sum: intersecting inputs with zero total class resolve to "
            "null-homotopic curves, which have no slope representation");

    long long g = std::gcd(std::llabs(x), std::llabs(y));
    Slope prim(x / g, y / g);
    // Normalization may flip the sign of the primitive vector; recover it.
    int orient = (prim.p() * g == x && prim.q() * g == y) ? 1 : -1;
    return OrientedMulticurve({MulticurveTerm{prim, g, orient}});
}

} // namespace dehnkit
