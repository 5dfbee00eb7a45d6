#include "dehnkit/surface.hpp"

#include <algorithm>

namespace dehnkit {

void validate(const SurfaceComponent& c) {
    if (c.genus < 0 || c.boundary_count < 0 || c.puncture_count < 0)
        throw StructureError("surface component counts must be nonnegative");
    if (c.puncture_signs) {
        if (static_cast<int>(c.puncture_signs->size()) != c.puncture_count)
            throw StructureError("puncture sign list length must equal puncture_count");
        for (int s : *c.puncture_signs)
            if (s != 1 && s != -1) throw StructureError("puncture signs must be +1 or -1");
    }
}

void validate(const SurfaceSpec& s) {
    for (const auto& c : s) validate(c);
}

int euler(const SurfaceComponent& c) { return 2 - 2 * c.genus - c.boundary_count; }

int euler(const SurfaceSpec& s) {
    int chi = 0;
    for (const auto& c : s) chi += euler(c);
    return chi;
}

long long beta_norm(const SurfaceComponent& c) {
    return std::max(0LL, static_cast<long long>(-euler(c)) + c.puncture_count);
}

long long beta_norm(const SurfaceSpec& s) {
    long long x = 0;
    for (const auto& c : s) x += beta_norm(c);
    return x;
}

long long thurston_norm(const SurfaceComponent& c) {
    return std::max(0LL, static_cast<long long>(-euler(c)));
}

long long thurston_norm(const SurfaceSpec& s) {
    long long x = 0;
    for (const auto& c : s) x += thurston_norm(c);
    return x;
}

std::optional<bool> coherent_puncture_signs(const SurfaceComponent& c) {
    if (!c.puncture_signs || c.puncture_signs->empty()) return std::nullopt;
    const auto& signs = *c.puncture_signs;
    return std::all_of(signs.begin(), signs.end(), [&](int s) { return s == signs.front(); });
}

bool is_exceptional_class(long long wrapping, long long winding) {
    if (wrapping < 0 || winding < 0)
        throw PreconditionError("wrapping and winding numbers are nonnegative counts");
    if (winding > wrapping)
        throw PreconditionError("inconsistent intersection data: winding number " +
                                std::to_string(winding) + " exceeds wrapping number " +
                                std::to_string(wrapping));
    if ((wrapping - winding) % 2 != 0)
        throw PreconditionError("inconsistent intersection data: wrapping and winding "
                                "numbers must have equal parity");
    return wrapping != winding;
}

} // namespace dehnkit
