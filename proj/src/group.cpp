#include "quadbraid/group.hpp"

namespace quadbraid {

bool Group::finite() const {
    for (const Int& n : moduli)
        if (n == 0) return false;
    return true;
}

Int Group::order() const {
    Int total = 1;
    for (const Int& n : moduli) {
        if (n == 0) throw Error(ErrorKind::InfiniteGroup, "group " + to_string(*this) + " has a free factor");
        total *= n;
    }
    return total;
}

Group make_group(std::vector<Int> moduli) {
    for (const Int& n : moduli)
        if (n < 0) throw Error(ErrorKind::NegativeModulus, "modulus " + n.str());
    return Group{std::move(moduli)};
}

GroupElement reduce(const Group& g, IntVec raw) {
    if (raw.size() != g.rank())
        throw Error(ErrorKind::LengthMismatch,
                    "expected " + std::to_string(g.rank()) + " coordinates, got " + std::to_string(raw.size()));
    for (std::size_t j = 0; j < raw.size(); ++j)
        if (g.moduli[j] != 0) raw[j] = pos_mod(raw[j], g.moduli[j]);
    return GroupElement{std::move(raw)};
}

GroupElement zero(const Group& g) { return GroupElement{IntVec(g.rank(), 0)}; }

GroupElement add(const Group& g, const GroupElement& x, const GroupElement& y) {
    if (x.coords.size() != g.rank() || y.coords.size() != g.rank())
        throw Error(ErrorKind::LengthMismatch, "element size does not match group rank");
    IntVec out(g.rank());
    for (std::size_t j = 0; j < g.rank(); ++j) {
        out[j] = x.coords[j] + y.coords[j];
        if (g.moduli[j] != 0 && out[j] >= g.moduli[j]) out[j] -= g.moduli[j];
    }
    return GroupElement{std::move(out)};
}

GroupElement neg(const Group& g, const GroupElement& x) {
    IntVec out(g.rank());
    for (std::size_t j = 0; j < g.rank(); ++j) {
        out[j] = -x.coords[j];
        if (g.moduli[j] != 0 && out[j] < 0) out[j] += g.moduli[j];
    }
    return GroupElement{std::move(out)};
}

GroupElement scalar_mul(const Group& g, const Int& k, const GroupElement& x) {
    IntVec out(g.rank());
    for (std::size_t j = 0; j < g.rank(); ++j) {
        out[j] = k * x.coords[j];
        if (g.moduli[j] != 0) out[j] = pos_mod(out[j], g.moduli[j]);
    }
    return GroupElement{std::move(out)};
}

bool is_zero(const GroupElement& x) {
    for (const Int& v : x.coords)
        if (v != 0) return false;
    return true;
}

std::vector<GroupElement> enumerate_elements(const Group& g) {
    std::size_t count = to_size(g.order());
    std::vector<GroupElement> out;
    out.reserve(count);
    GroupElement cur = zero(g);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(cur);
        // odometer step, last coordinate fastest
        for (std::size_t j = g.rank(); j-- > 0;) {
            if (++cur.coords[j] < g.moduli[j]) break;
            cur.coords[j] = 0;
        }
    }
    return out;
}

std::size_t element_index(const Group& g, const GroupElement& x) {
    Int idx = 0;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        if (g.moduli[j] == 0) throw Error(ErrorKind::InfiniteGroup, "no dense index over a free factor");
        idx = idx * g.moduli[j] + x.coords[j];
    }
    return to_size(idx);
}

std::vector<GroupElement> box_elements(const Group& g, const Int& box) {
    if (box < 0) throw std::invalid_argument("box bound must be >= 0");
    std::vector<IntVec> ranges(g.rank());
    for (std::size_t j = 0; j < g.rank(); ++j) {
        if (g.moduli[j] == 0)
            for (Int v = -box; v <= box; ++v) ranges[j].push_back(v);
        else
            for (Int v = 0; v < g.moduli[j]; ++v) ranges[j].push_back(v);
    }
    std::vector<GroupElement> out;
    std::vector<std::size_t> pos(g.rank(), 0);
    while (true) {
        IntVec coords(g.rank());
        for (std::size_t j = 0; j < g.rank(); ++j) coords[j] = ranges[j][pos[j]];
        out.push_back(GroupElement{std::move(coords)});
        std::size_t j = g.rank();
        while (j-- > 0) {
            if (++pos[j] < ranges[j].size()) break;
            pos[j] = 0;
            if (j == 0) return out;
        }
        if (g.rank() == 0) return out;
    }
}

std::string to_string(const GroupElement& x) {
    std::string s = "(";
    for (std::size_t j = 0; j < x.coords.size(); ++j) {
        if (j) s += ",";
        s += x.coords[j].str();
    }
    return s + ")";
}

std::string to_string(const Group& g) {
    std::string s = "[";
    for (std::size_t j = 0; j < g.moduli.size(); ++j) {
        if (j) s += ",";
        s += g.moduli[j].str();
    }
    return s + "]";
}

}  // namespace quadbraid
