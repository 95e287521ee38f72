#pragma once

#include "recenters/baxterize.hpp"
#include "recenters/birank.hpp"
#include "recenters/nc.hpp"
#include "recenters/param.hpp"
#include "recenters/symmetry.hpp"

#include <array>
#include <functional>
#include <optional>

namespace recenters {

/// Generalized reflection-equation algebra
///   (R + g1 I) L1(u) (R + g2 I) L1(v) = L1(v) (R + g3 I) L1(u) (R + g4 I).
/// RS-type mode derives g1..g4 from the Baxterization function and a charge c:
///   trigonometric: g1 = f(u/v), g2 = f(vc/u), g3 = f(uc/v), g4 = f(v/u);
///   rational:      g1 = f(u-v), g2 = f(v-u+c), g3 = f(u-v+c), g4 = f(v-u).
class AlgebraSpec {
public:
    using GFunc = std::function<std::optional<Scalar>(const Scalar&, const Scalar&)>;
    struct GFuncs {
        GFunc g1, g2, g3, g4;
        std::string label;
    };

    static AlgebraSpec rs_type(Braiding b, Flavor flavor, Scalar charge);
    static AlgebraSpec general(Braiding b, Flavor flavor, GFuncs g);

    const Braiding& braiding() const { return braiding_; }
    Flavor flavor() const { return flavor_; }
    bool is_rs() const { return gfuncs_ == nullptr; }
    const Scalar& charge() const;

    /// alpha = Tr_R I = q^{n-m}(m-n)_q (m - n for involutive bases).
    Scalar alpha() const { return braiding_alpha(braiding_); }
    /// q - q^{-1}; zero for involutive bases.
    Scalar lambda() const;

    /// The four shift functions at (u, v). Throws PoleError at a pole.
    std::array<Scalar, 4> g_values(const Scalar& u, const Scalar& v) const;

    /// Charge-shifted parameter: c^j u (trigonometric) or u + j c (rational).
    Scalar shift(const Scalar& u, int j) const;
    /// True when shifted points coincide (c = 1 trig, c = 0 rational); then
    /// quantum powers are plain powers.
    bool neutral_charge() const;

    /// R + f(x) I for RS-type specs. Throws PoleError at a pole.
    TensorOp current_at_arg(const Scalar& x) const;

private:
    AlgebraSpec(Braiding b, Flavor flavor) : braiding_(std::move(b)), flavor_(flavor) {}

    Braiding braiding_;
    Flavor flavor_;
    Scalar charge_;
    std::shared_ptr<const GFuncs> gfuncs_;  // null for rs-type
};

/// The value of c making Tr_R L(u) central: q^{2(m-n)} (trigonometric) or
/// n - m (rational).
Scalar critical_charge(const Braiding& b, Flavor flavor);

/// The two scalar combinations (q-q^{-1}) + g1 + g2 + alpha g1 g2 and
/// (q-q^{-1}) + g3 + g4 + alpha g3 g4; both vanish iff Tr_R L(u) is central.
std::pair<Scalar, Scalar> centrality_condition(const AlgebraSpec& spec, const Scalar& u, const Scalar& v);

/// RS-type g-functions with optional interchanges (g1 <-> g2 and/or g3 <-> g4)
/// for general-mode specs; the centrality condition is symmetric under them.
AlgebraSpec::GFuncs make_rs_gfuncs(Flavor flavor, const Scalar& q, const Scalar& charge,
                                   bool swap12 = false, bool swap34 = false);

/// Owns the parameter points and the rewrite-rule cache of one algebra. Rules
/// are built on demand from the relation instance (u slot = lower id).
class AlgebraContext {
public:
    explicit AlgebraContext(AlgebraSpec spec) : spec_(std::move(spec)) {}

    const AlgebraSpec& spec() const { return spec_; }
    int dim() const { return spec_.braiding().dim(); }

    ParamPoint point(const Scalar& value) { return points_.add(value); }
    const PointRegistry& points() const { return points_; }

    /// Exchange rule for an id-ordered pair; cached. Throws PoleError on a
    /// g-pole and SpecialParamsError on a singular exchange system.
    const RewriteRule& rule(const ParamPoint& lo, const ParamPoint& hi);
    const RuleSet& rules() const { return rules_; }

    /// Populates the rules needed to normal-order words over the given points
    /// (each id-ordered pair of distinct values).
    void ensure_rules(const std::vector<ParamPoint>& pts);

    NCMatrix l_matrix(const ParamPoint& p) const { return NCMatrix::generators(dim(), p.id); }
    NCPoly normal_form(const NCPoly& p) const { return normal_order(p, rules_); }
    NCMatrix normal_form(const NCMatrix& m) const { return normal_order(m, rules_); }

private:
    AlgebraSpec spec_;
    PointRegistry points_;
    RuleSet rules_;
};

/// Quantum matrix power L^{[k]}(u) = L1(c^{k-1}u) ... L1(cu) L1(u); additive
/// shifts for the rational flavor. The point list is in product (descending-shift)
/// order; at neutral charge all entries coincide and the power is the plain
/// matrix power.
struct QuantumPower {
    int k = 1;
    ParamPoint base;
    std::vector<ParamPoint> points;  // [c^{k-1}u, ..., cu, u]
    NCMatrix matrix;                 // N x N
};

/// Builds L^{[k]}(u), registering the shifted points in descending-shift
/// order (so that words of the power block are already normal-ordered). The
/// base point must not have been registered ahead of its shifted points:
/// exchange rules for pairs (y, cy) do not exist (the relation instance is
/// singular there), so the block order must match the id order.
QuantumPower quantum_power(AlgebraContext& ctx, const Scalar& u, int k);
QuantumPower quantum_power(AlgebraContext& ctx, const ParamPoint& u, int k);

/// Quantum power sum Tr_R L^{[k]}(u).
NCPoly power_sum(AlgebraContext& ctx, const Scalar& u, int k);
NCPoly power_sum(AlgebraContext& ctx, const ParamPoint& u, int k);

/// LHS and RHS of the defining relation instance at (u, v), as N^2 x N^2
/// matrices over the free algebra.
std::pair<NCMatrix, NCMatrix> rs_relation(AlgebraContext& ctx, const ParamPoint& u, const ParamPoint& v);

struct CheckResult {
    bool zero = false;
    int residual_terms = 0;
};

/// Normal form of Tr_R L(u) . L(v) - L(v) . Tr_R L(u); zero iff the charge
/// satisfies the centrality condition at these points.
CheckResult check_first_central(AlgebraContext& ctx, const ParamPoint& u, const ParamPoint& v);

/// Normal form of
///   L^{[k]}_1(v) R(uc/v) L_1(u) R(v/u) - R(u/c^{k-1}v) L_1(u) R(c^k v/u) L^{[k]}_1(v)
/// (additive analogue for the rational flavor); zero modulo the relations.
/// v is taken by value so the power block registers its own points.
CheckResult check_push_through(AlgebraContext& ctx, int k, const ParamPoint& u, const Scalar& v);

struct CommutatorIdentityResult {
    CheckResult identity;        // residual of the two-sided identity
    bool commutator_zero = false;  // [Tr_R L^k(v), L(u)] itself
    int commutator_terms = 0;
};

/// The c = 1 commutator identity (trigonometric RS-type):
///   [Tr_R L^k(v), L1(u)] = -(L1(u)L^k(v) - L^k(v)L1(u)) alpha (q-q^{-1})^2 uv/(u-v)^2.
CommutatorIdentityResult check_commutator_identity(AlgebraContext& ctx, int k, const ParamPoint& u,
                                                   const Scalar& v);

/// Normal form of [Tr_R L^{[k]}(v), L(u)]; zero for bi-rank (m|m) at the
/// critical (neutral) charge, reported otherwise.
CheckResult check_higher_central(AlgebraContext& ctx, int k, const ParamPoint& u, const Scalar& v);

// Convenience wrappers: fresh context, probe point registered first so the
// power block keeps its natural order.
CheckResult check_first_central(const AlgebraSpec& spec, const Scalar& u, const Scalar& v);
CheckResult check_push_through(const AlgebraSpec& spec, int k, const Scalar& u, const Scalar& v);
CommutatorIdentityResult check_commutator_identity(const AlgebraSpec& spec, int k, const Scalar& u,
                                                   const Scalar& v);
CheckResult check_higher_central(const AlgebraSpec& spec, int k, const Scalar& u, const Scalar& v);

}  // namespace recenters
