#pragma once

#include "quadbraid/cocycle.hpp"

namespace quadbraid {

/// Skeletal braided categorical group attached to a cocycle: objects are the
/// group elements, every object has automorphism group `target`, and the
/// associator and braiding automorphisms are the cocycle values h and c.
struct SkeletalModel {
    Group group;
    TargetGroup target;
    Cocycle cocycle;
};

SkeletalModel make_model(const Cocycle& w);

Coeff associator(const SkeletalModel& m, const GroupElement& x, const GroupElement& y,
                 const GroupElement& z);
Coeff braiding(const SkeletalModel& m, const GroupElement& x, const GroupElement& y);

/// Result of checking the normal-form identities
///     h(x,y,z) = c(x,y) + c(x,z) - c(x,y+z)
///     h(z,x,y) = c(x+y,z) - c(x,z) - c(y,z)
/// together with their consequence h(x,y,z) = h(x,z,y).
///
/// `applicable` is true when the target is divisible. Over a non-divisible
/// target a model satisfying these identities is not known to exist in
/// general, so a failing check there reads as "this model is not in normal
/// form", never as an inconsistency.
struct NormalFormReport {
    bool applicable = false;
    CheckReport checks;

    bool passed() const { return checks.passed(); }
};

NormalFormReport normal_form_report(const SkeletalModel& m, long box = 3);

/// Decision record for: does the form admit a model that is simultaneously
/// skeletal and strictly associative? Equivalently, is there a bilinear S
/// with S(x,x) = q(x)? A yes carries the witness and the resulting cocycle
/// (h identically zero, c = S); a no carries the exhausted-search certificate.
struct StrictifyDecision {
    bool yes = false;
    std::optional<BilinearForm> witness;
    std::optional<Cocycle> strict_cocycle;
    Int grid_size = 0;
    bool exhausted = false;
    bool symmetric_fast_path = false;
};

StrictifyDecision strictifiable(const QuadraticForm& q, const Int& ceiling = Int(1) << 20);

}  // namespace quadbraid
