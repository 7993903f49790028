#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrbound/arrangement.hpp"
#include "arrbound/rational.hpp"

namespace arrbound {

// Canonical key of a flat: reduced row echelon basis of its annihilator,
// each row a primitive integer vector with positive leading entry.
using FlatKey = std::vector<std::vector<Int>>;

namespace detail {

inline FlatKey rref_key(const std::vector<std::vector<Int>>& rows, size_t cols) {
    std::vector<std::vector<Rational>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rational> q(cols);
        for (size_t i = 0; i < cols; ++i) q[i] = Rational(r[i]);
        m.push_back(std::move(q));
    }
    rref(m);
    FlatKey key;
    key.reserve(m.size());
    for (const auto& r : m) key.push_back(primitive_vector(r));
    return key;
}

}  // namespace detail

// A proper flat: a positive-dimensional intersection subspace of codim >= 2.
struct Flat {
    int id = -1;
    int dim = 0;                      // dimension of the subspace
    std::vector<int> hyperplanes;     // sorted indices of all hyperplanes containing it
    FlatKey key;                      // canonical annihilator basis
    std::vector<Int> direction;       // primitive spanning vector, dim-1 flats only

    int d_L() const { return static_cast<int>(hyperplanes.size()); }
};

// The localization of an arrangement at a flat: the sub-arrangement of
// hyperplanes through the flat, viewed as a central arrangement of rank equal
// to the flat's codimension.  Hyperplane indices stay global; for rank 3 the
// local codim-2 flats are listed with their global containing-hyperplane sets.
struct LocalArrangement {
    int rank = 0;
    std::vector<int> hyperplanes;
    struct LocalFlat {
        std::vector<int> hyperplanes;
        int d_L() const { return static_cast<int>(hyperplanes.size()); }
    };
    std::vector<LocalFlat> flats;
};

class FlatLattice {
public:
    Arrangement arrangement;
    int ambient = 0;
    int d = 0;
    std::vector<Flat> flats;        // sorted by (dim desc, key lex); ids match positions
    bool has_center = false;        // the origin, present iff the arrangement is essential
    std::vector<Int> mobius;        // mu(whole space, flat), parallel to flats
    Int center_mobius = 0;

    const Flat& flat(int id) const {
        if (id < 0 || id >= static_cast<int>(flats.size())) throw std::out_of_range("flat id out of range");
        return flats[static_cast<size_t>(id)];
    }

    bool hyperplane_contains(int h, const Flat& f) const {
        return std::binary_search(f.hyperplanes.begin(), f.hyperplanes.end(), h);
    }

    // Subspace containment inner <= outer, via the closed hyperplane sets.
    bool flat_contains(const Flat& outer, const Flat& inner) const {
        return std::includes(inner.hyperplanes.begin(), inner.hyperplanes.end(),
                             outer.hyperplanes.begin(), outer.hyperplanes.end());
    }

    std::vector<int> flat_ids_of_dim(int dim) const {
        std::vector<int> out;
        for (const auto& f : flats)
            if (f.dim == dim) out.push_back(f.id);
        return out;
    }

    // Codim-2 flats inside hyperplane h, as (flat id, d_L), multiplicity descending.
    std::vector<std::pair<int, int>> flats_in_hyperplane(int h) const {
        if (h < 0 || h >= d) throw std::out_of_range("hyperplane index out of range");
        std::vector<std::pair<int, int>> out;
        for (const auto& f : flats)
            if (f.dim == ambient - 2 && hyperplane_contains(h, f)) out.emplace_back(f.id, f.d_L());
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.second != b.second ? a.second > b.second : a.first < b.first; });
        return out;
    }

    std::vector<int> multiplicities_in_hyperplane(int h) const {
        std::vector<int> out;
        for (const auto& [id, dl] : flats_in_hyperplane(h)) out.push_back(dl);
        return out;
    }

    // Number of dim-1 flats strictly contained in a dim-2 flat (ambient 4).
    int lines_in_plane(const Flat& plane) const {
        if (plane.dim != 2) throw std::invalid_argument("lines_in_plane: flat is not two-dimensional");
        int n = 0;
        for (const auto& f : flats)
            if (f.dim == 1 && flat_contains(plane, f)) ++n;
        return n;
    }

    LocalArrangement localize(int flat_id) const {
        const Flat& f = flat(flat_id);
        LocalArrangement loc;
        loc.rank = ambient - f.dim;
        loc.hyperplanes = f.hyperplanes;
        if (loc.rank == 3) {
            for (const auto& p : flats) {
                if (p.dim != f.dim + 1 || !flat_contains(p, f)) continue;
                loc.flats.push_back({p.hyperplanes});
            }
        }
        return loc;
    }

    // Betti numbers of the affine complement M(A), by Whitney sums of |mu|
    // over flats of each codimension.  Trailing zeros trimmed.
    std::vector<Int> complement_betti() const {
        std::vector<Int> b(static_cast<size_t>(ambient) + 1, 0);
        b[0] = 1;
        b[1] = d;
        for (const auto& f : flats) {
            Int m = mobius[static_cast<size_t>(f.id)];
            b[static_cast<size_t>(ambient - f.dim)] += m < 0 ? -m : m;
        }
        if (has_center) b[static_cast<size_t>(ambient)] += center_mobius < 0 ? -center_mobius : center_mobius;
        while (b.size() > 1 && b.back() == 0) b.pop_back();
        return b;
    }

    // Euler characteristic of P^{ambient-1} minus the projectivized arrangement,
    // by additive counting over the open strata of [A].
    Int proj_complement_euler() const {
        // open strata chi, flats first in increasing dimension, then hyperplanes
        std::vector<Int> open_flat(flats.size(), 0);
        std::vector<int> order(flats.size());
        for (size_t i = 0; i < flats.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return flats[static_cast<size_t>(a)].dim < flats[static_cast<size_t>(b)].dim; });
        Int total = 0;
        for (int id : order) {
            const Flat& f = flats[static_cast<size_t>(id)];
            Int chi = f.dim;  // chi(P^{dim-1}) = dim
            for (const auto& g : flats)
                if (g.dim < f.dim && flat_contains(f, g)) chi -= open_flat[static_cast<size_t>(g.id)];
            open_flat[static_cast<size_t>(id)] = chi;
            total += chi;
        }
        for (int h = 0; h < d; ++h) {
            Int chi = ambient - 1;  // chi(P^{ambient-2})
            for (const auto& g : flats)
                if (hyperplane_contains(h, g)) chi -= open_flat[static_cast<size_t>(g.id)];
            total += chi;
        }
        return ambient - total;
    }

    Int sum_codim2_excess() const {
        Int s = 0;
        for (const auto& f : flats)
            if (f.dim == ambient - 2) s += f.d_L() - 1;
        return s;
    }
};

// Build the full intersection data of a central arrangement: all proper flats
// of codim >= 2 with canonical keys, containments, and the Mobius function of
// the lattice ordered by reverse inclusion.
inline FlatLattice compute_lattice(const Arrangement& a) {
    FlatLattice lat;
    lat.arrangement = a;
    lat.ambient = a.ambient_dim;
    lat.d = a.d();
    const size_t cols = static_cast<size_t>(a.ambient_dim);

    auto hyperplanes_of_subspace = [&](const FlatKey& key) {
        auto basis = detail::null_space(key, cols);
        std::vector<int> hyps;
        for (int h = 0; h < lat.d; ++h) {
            bool contains = true;
            for (const auto& b : basis)
                if (detail::dot(a.forms[static_cast<size_t>(h)].coeffs, b) != 0) {
                    contains = false;
                    break;
                }
            if (contains) hyps.push_back(h);
        }
        return hyps;
    };

    std::map<FlatKey, Flat> seen;
    auto add_flat = [&](const FlatKey& key, int dim) {
        if (seen.count(key)) return;
        Flat f;
        f.dim = dim;
        f.key = key;
        f.hyperplanes = hyperplanes_of_subspace(key);
        if (dim == 1) {
            auto basis = detail::null_space(key, cols);
            f.direction = basis.at(0);
        }
        seen.emplace(key, std::move(f));
    };

    // codim-2 flats from hyperplane pairs
    std::vector<FlatKey> codim2_keys;
    for (int i = 0; i < lat.d; ++i)
        for (int j = i + 1; j < lat.d; ++j) {
            FlatKey key = detail::rref_key(
                {a.forms[static_cast<size_t>(i)].coeffs, a.forms[static_cast<size_t>(j)].coeffs}, cols);
            if (!seen.count(key)) codim2_keys.push_back(key);
            add_flat(key, a.ambient_dim - 2);
        }

    // ambient 4: codim-3 flats from codim-2 flats extended by one more hyperplane
    if (a.ambient_dim == 4) {
        for (const auto& pk : codim2_keys) {
            const Flat& plane = seen.at(pk);
            for (int h = 0; h < lat.d; ++h) {
                if (std::binary_search(plane.hyperplanes.begin(), plane.hyperplanes.end(), h)) continue;
                std::vector<std::vector<Int>> rows = pk;
                rows.push_back(a.forms[static_cast<size_t>(h)].coeffs);
                add_flat(detail::rref_key(rows, cols), 1);
            }
        }
    }

    // the origin, when the normals span the whole space
    {
        std::vector<std::vector<Int>> rows;
        for (const auto& f : a.forms) rows.push_back(f.coeffs);
        lat.has_center = static_cast<int>(detail::rref_key(rows, cols).size()) == a.ambient_dim;
    }

    for (auto& [key, f] : seen) lat.flats.push_back(std::move(f));
    std::sort(lat.flats.begin(), lat.flats.end(), [](const Flat& x, const Flat& y) {
        if (x.dim != y.dim) return x.dim > y.dim;
        return x.key < y.key;
    });
    for (size_t i = 0; i < lat.flats.size(); ++i) lat.flats[i].id = static_cast<int>(i);

    // Mobius by the recursive definition, top down: mu(whole space) = 1,
    // mu(hyperplane) = -1, then each flat kills the sum over everything above it.
    lat.mobius.assign(lat.flats.size(), 0);
    for (const auto& f : lat.flats) {
        Int sum_above = 1;  // whole space
        sum_above -= f.d_L();
        for (const auto& g : lat.flats)
            if (g.dim > f.dim && lat.flat_contains(g, f)) sum_above += lat.mobius[static_cast<size_t>(g.id)];
        lat.mobius[static_cast<size_t>(f.id)] = -sum_above;
    }
    if (lat.has_center) {
        Int sum_above = 1 - lat.d;
        for (const auto& g : lat.flats) sum_above += lat.mobius[static_cast<size_t>(g.id)];
        lat.center_mobius = -sum_above;
    }
    return lat;
}

}  // namespace arrbound
