#pragma once

#include "quadbraid/error.hpp"
#include "quadbraid/ints.hpp"

#include <string>

namespace quadbraid {

/// Coefficient group M that quadratic forms, bilinear forms and cocycles take
/// values in. Three kinds are supported: the divisible group Q/Z, the cyclic
/// group Z/n, and the integers Z.
enum class TargetKind { QmodZ, ZmodN, Integers };

struct TargetGroup {
    TargetKind kind = TargetKind::QmodZ;
    Int modulus = 0;  // used only when kind == ZmodN, always >= 1 there

    static TargetGroup qmodz() { return TargetGroup{TargetKind::QmodZ, 0}; }
    static TargetGroup integers() { return TargetGroup{TargetKind::Integers, 0}; }
    static TargetGroup zmod(const Int& n) {
        if (n < 1) throw Error(ErrorKind::NegativeModulus, "Z/n requires n >= 1, got " + n.str());
        return TargetGroup{TargetKind::ZmodN, n};
    }

    /// Division by arbitrary nonzero integers is possible exactly in Q/Z.
    bool divisible() const { return kind == TargetKind::QmodZ; }

    std::string name() const {
        switch (kind) {
            case TargetKind::QmodZ: return "Q/Z";
            case TargetKind::ZmodN: return "Z/" + modulus.str();
            case TargetKind::Integers: return "Z";
        }
        return "?";
    }

    friend bool operator==(const TargetGroup& a, const TargetGroup& b) {
        return a.kind == b.kind && (a.kind != TargetKind::ZmodN || a.modulus == b.modulus);
    }
    friend bool operator!=(const TargetGroup& a, const TargetGroup& b) { return !(a == b); }
};

/// One element of a target group, kept in canonical form:
///  - Q/Z: reduced fraction num/den with 0 <= num < den (zero is 0/1),
///  - Z/n: integer residue num in [0, n), den == 1,
///  - Z:   plain integer num, den == 1.
/// Each value remembers its target so cross-target arithmetic can be rejected.
class Coeff {
  public:
    Coeff() : target_(TargetGroup::qmodz()), num_(0), den_(1) {}

    static Coeff zero(const TargetGroup& t) { return Coeff(t, 0, 1); }

    /// Canonicalizing constructor. den must be nonzero; for Z/n and Z the
    /// reduced value must be an integer.
    static Coeff make(const TargetGroup& t, Int num, Int den = 1) { return Coeff(t, std::move(num), std::move(den)); }

    const TargetGroup& target() const { return target_; }
    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    std::string str() const { return num_.str() + "/" + den_.str(); }

  private:
    Coeff(const TargetGroup& t, Int num, Int den) : target_(t), num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    void canonicalize() {
        if (den_ == 0) throw std::invalid_argument("zero denominator");
        if (den_ < 0) { den_ = -den_; num_ = -num_; }
        Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        switch (target_.kind) {
            case TargetKind::QmodZ:
                num_ = pos_mod(num_, den_);
                if (num_ == 0) den_ = 1;
                break;
            case TargetKind::ZmodN:
                if (den_ != 1)
                    throw std::invalid_argument("value " + num_.str() + "/" + den_.str() +
                                                " is not an element of " + target_.name());
                num_ = pos_mod(num_, target_.modulus);
                break;
            case TargetKind::Integers:
                if (den_ != 1)
                    throw std::invalid_argument("value " + num_.str() + "/" + den_.str() +
                                                " is not an element of Z");
                break;
        }
    }

    TargetGroup target_;
    Int num_;
    Int den_;
};

inline void require_same_target(const Coeff& a, const Coeff& b) {
    if (a.target() != b.target())
        throw Error(ErrorKind::MixedTargets, a.target().name() + " vs " + b.target().name());
}

inline Coeff add(const Coeff& a, const Coeff& b) {
    require_same_target(a, b);
    return Coeff::make(a.target(), a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

inline Coeff neg(const Coeff& a) { return Coeff::make(a.target(), -a.num(), a.den()); }

inline Coeff sub(const Coeff& a, const Coeff& b) { return add(a, neg(b)); }

inline Coeff scale(const Int& k, const Coeff& a) { return Coeff::make(a.target(), k * a.num(), a.den()); }

inline bool is_zero(const Coeff& a) { return a.is_zero(); }

inline bool eq(const Coeff& a, const Coeff& b) {
    require_same_target(a, b);
    return a.num() == b.num() && a.den() == b.den();
}

inline bool operator==(const Coeff& a, const Coeff& b) { return eq(a, b); }
inline bool operator!=(const Coeff& a, const Coeff& b) { return !eq(a, b); }

/// Solve d*x = v in Q/Z for d >= 1. Among the d solutions, returns the one
/// whose canonical representative has the smallest numerator (then smallest
/// denominator), which makes downstream constructions deterministic.
inline Coeff divide_by(const Coeff& v, const Int& d) {
    if (!v.target().divisible())
        throw Error(ErrorKind::TargetNotDivisible, "cannot divide in " + v.target().name());
    if (d < 1) throw std::invalid_argument("divisor must be >= 1, got " + d.str());
    Coeff best = Coeff::make(v.target(), v.num(), v.den() * d);
    for (Int t = 1; t < d; ++t) {
        Coeff cand = Coeff::make(v.target(), v.num() + t * v.den(), v.den() * d);
        if (cand.num() < best.num() || (cand.num() == best.num() && cand.den() < best.den()))
            best = cand;
    }
    return best;
}

}  // namespace quadbraid
