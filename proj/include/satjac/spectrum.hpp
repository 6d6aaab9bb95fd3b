#pragma once

#include <map>
#include <optional>
#include <string>

#include "satjac/combinatorics.hpp"
#include "satjac/defect.hpp"

namespace satjac {

/// Upper bounds for the spectrum multiplicities n_alpha with alpha in (1, n]
/// and d*alpha integral: n_alpha <= defect(alpha*d - n - 1). Entries with
/// alpha <= 1 are not bounded by this method.
struct SpectrumBoundTable {
    int n = 0, d = 0;
    std::map<Rational, long long> entries;
    std::optional<long long> alexander_degree_bound;
    std::string note;

    friend bool operator==(const SpectrumBoundTable& a, const SpectrumBoundTable& b) {
        return a.n == b.n && a.d == b.d && a.entries == b.entries &&
               a.alexander_degree_bound == b.alexander_degree_bound && a.note == b.note;
    }
};

inline SpectrumBoundTable spectrum_bounds(const DefectProfile& defects, int n, int d) {
    if (n < 2 || d < 1) throw InvalidArgumentError("spectrum_bounds: need n >= 2, d >= 1");
    long long needed = static_cast<long long>(n) * d - n - 1;
    if (defects.max_degree < needed && defects.max_degree < defects.stabilization_degree)
        throw InvalidArgumentError("spectrum_bounds: defect profile range insufficient");

    SpectrumBoundTable table;
    table.n = n;
    table.d = d;
    for (long long j = d + 1; j <= static_cast<long long>(n) * d; ++j) {
        Rational a = make_rational(j, d);
        table.entries[a] = defects.defect_at(j - n - 1);
    }
    if (n >= 3) {
        // alpha' in [0, 1] mirrors to n - alpha' in [n-1, n], which the table
        // covers, so the spectrum total (= deg of the Alexander polynomial)
        // is bounded by the (1, n] sum plus the mirrored [n-1, n] sum
        long long total = 0;
        for (const auto& [a, bound] : table.entries) total += bound;
        for (long long j = static_cast<long long>(n - 1) * d; j <= static_cast<long long>(n) * d; ++j)
            total += defects.defect_at(j - n - 1);
        table.alexander_degree_bound = total;
        table.note = "n_alpha <= defect(alpha*d-n-1) for alpha > 1; degree bound doubles the [n-1, n] range by spectrum symmetry";
    } else {
        table.alexander_degree_bound = std::nullopt;
        table.note = "n_alpha <= defect(alpha*d-n-1) for alpha > 1; n = 2 leaves n_1 unbounded, so no total degree bound";
    }
    return table;
}

}  // namespace satjac
