#pragma once

#include "quadbraid/error.hpp"
#include "quadbraid/ints.hpp"

#include <string>
#include <vector>

namespace quadbraid {

/// Finitely generated abelian group presented as a direct sum of cyclic
/// factors. moduli[j] == 0 denotes a free factor Z; moduli[j] == n >= 1
/// denotes Z/n. Elements are coordinate vectors; the canonical form keeps
/// coordinate j in [0, n_j) for finite factors and unconstrained for free
/// ones.
struct Group {
    std::vector<Int> moduli;

    std::size_t rank() const { return moduli.size(); }
    bool finite() const;

    /// Number of elements. Throws InfiniteGroup when a free factor is present.
    Int order() const;

    friend bool operator==(const Group& a, const Group& b) { return a.moduli == b.moduli; }
    friend bool operator!=(const Group& a, const Group& b) { return !(a == b); }
};

struct GroupElement {
    std::vector<Int> coords;

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.coords == b.coords; }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
};

/// Validates the moduli sequence (every entry >= 0) and builds the group.
Group make_group(std::vector<Int> moduli);

/// Canonical representative of an arbitrary coordinate vector.
GroupElement reduce(const Group& g, IntVec raw);

GroupElement zero(const Group& g);
GroupElement add(const Group& g, const GroupElement& x, const GroupElement& y);
GroupElement neg(const Group& g, const GroupElement& x);
GroupElement scalar_mul(const Group& g, const Int& k, const GroupElement& x);

bool is_zero(const GroupElement& x);

/// All elements of a finite group in lexicographic coordinate order (first
/// coordinate most significant). Throws InfiniteGroup otherwise.
std::vector<GroupElement> enumerate_elements(const Group& g);

/// Position of a canonical element in the enumerate_elements order.
std::size_t element_index(const Group& g, const GroupElement& x);

/// Elements whose free coordinates lie in [-box, box]; finite coordinates
/// range over the full residue set. Used wherever an identity over an
/// infinite group is spot-checked on a bounded region.
std::vector<GroupElement> box_elements(const Group& g, const Int& box);

std::string to_string(const GroupElement& x);
std::string to_string(const Group& g);

}  // namespace quadbraid
