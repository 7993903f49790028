#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "arrbound/bounds_c3.hpp"
#include "arrbound/cyclopoly.hpp"
#include "arrbound/lattice.hpp"

namespace arrbound {

// One positive multiplicity per hyperplane; the defining equation becomes the
// product of the forms raised to their multiplicities.
struct MultiSpec {
    std::vector<Int> multiplicities;

    void validate(int d) const {
        if (static_cast<int>(multiplicities.size()) != d)
            throw std::invalid_argument("multiplicity list length does not match the arrangement");
        for (Int m : multiplicities)
            if (m < 1) throw std::invalid_argument("multiplicities must be positive");
    }
};

// First characteristic polynomial of the Milnor fiber of a multi-pencil of r
// concurrent lines in C^2: gcd{t^{m_i}-1} * (t^{m_1+...+m_r}-1)^{r-2}.
inline CycloPoly local_multi_charpoly(const std::vector<Int>& ms) {
    if (ms.size() < 2) throw std::invalid_argument("local_multi_charpoly: need at least 2 lines");
    Int g = 0, sum = 0;
    for (Int m : ms) {
        if (m < 1) throw std::invalid_argument("local_multi_charpoly: multiplicities must be positive");
        g = std::gcd(g, m);
        sum += m;
    }
    return torsion(g) * torsion(sum).pow(static_cast<Int>(ms.size()) - 2);
}

// Divisor bound for the first characteristic polynomial of the Milnor fiber
// with multiplicities: gcd over hyperplanes of
//   (t^{m_i}-1)^{2 p_i + 1} * prod_{L in H_i} gcd{t^{m_j}-1}_{j in L} * (t^{sum m_j}-1)^{d_L-2}.
inline CycloPoly multi_divisor_bound(const FlatLattice& lat, const MultiSpec& ms) {
    if (lat.ambient != 3) throw std::invalid_argument("multi_divisor_bound: arrangement is not in C^3");
    ms.validate(lat.d);
    const auto& m = ms.multiplicities;
    std::vector<CycloPoly> per_hyperplane;
    per_hyperplane.reserve(static_cast<size_t>(lat.d));
    for (int h = 0; h < lat.d; ++h) {
        auto flats = lat.flats_in_hyperplane(h);
        Int p_i = static_cast<Int>(flats.size());
        CycloPoly p = torsion(m[static_cast<size_t>(h)]).pow(2 * p_i + 1);
        for (const auto& [flat_id, d_L] : flats) {
            const Flat& f = lat.flat(flat_id);
            Int g = 0, sum = 0;
            for (int j : f.hyperplanes) {
                g = std::gcd(g, m[static_cast<size_t>(j)]);
                sum += m[static_cast<size_t>(j)];
            }
            p *= torsion(g) * torsion(sum).pow(d_L - 2);
        }
        per_hyperplane.push_back(std::move(p));
    }
    return gcd_all(std::span<const CycloPoly>(per_hyperplane));
}

}  // namespace arrbound
