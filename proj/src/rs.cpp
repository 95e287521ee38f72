#include "recenters/rs.hpp"

namespace recenters {

AlgebraSpec AlgebraSpec::rs_type(Braiding b, Flavor flavor, Scalar charge) {
    if (flavor == Flavor::Rational && b.kind() != BraidKind::Involutive)
        throw std::invalid_argument("AlgebraSpec: rational flavor requires an involutive symmetry");
    if (flavor == Flavor::Trigonometric && b.kind() != BraidKind::Hecke)
        throw std::invalid_argument("AlgebraSpec: trigonometric flavor requires a Hecke symmetry");
    if (flavor == Flavor::Trigonometric && charge.is_zero())
        throw std::invalid_argument("AlgebraSpec: trigonometric charge must be nonzero");
    AlgebraSpec s(std::move(b), flavor);
    s.charge_ = std::move(charge);
    return s;
}

AlgebraSpec AlgebraSpec::general(Braiding b, Flavor flavor, GFuncs g) {
    AlgebraSpec s(std::move(b), flavor);
    s.gfuncs_ = std::make_shared<const GFuncs>(std::move(g));
    return s;
}

const Scalar& AlgebraSpec::charge() const {
    if (!is_rs()) throw std::logic_error("AlgebraSpec: general-mode spec has no charge");
    return charge_;
}

Scalar AlgebraSpec::lambda() const {
    if (braiding_.kind() == BraidKind::Involutive) return Scalar(0);
    return braiding_.q() - braiding_.q().inverse();
}

namespace {

Scalar require(const std::optional<Scalar>& v, const char* which) {
    if (!v) throw PoleError(std::string("g-function pole in ") + which);
    return *v;
}

}  // namespace

std::array<Scalar, 4> AlgebraSpec::g_values(const Scalar& u, const Scalar& v) const {
    if (!is_rs()) {
        const GFuncs& g = *gfuncs_;
        return {require(g.g1(u, v), "g1"), require(g.g2(u, v), "g2"), require(g.g3(u, v), "g3"),
                require(g.g4(u, v), "g4")};
    }
    const Scalar& q = braiding_.q();
    const Scalar& c = charge_;
    if (flavor_ == Flavor::Trigonometric) {
        if (u.is_zero() || v.is_zero()) throw PoleError("g-function pole: zero spectral parameter");
        return {require(baxter_f(flavor_, u / v, q), "g1"), require(baxter_f(flavor_, v * c / u, q), "g2"),
                require(baxter_f(flavor_, u * c / v, q), "g3"), require(baxter_f(flavor_, v / u, q), "g4")};
    }
    return {require(baxter_f(flavor_, u - v, q), "g1"), require(baxter_f(flavor_, v - u + c, q), "g2"),
            require(baxter_f(flavor_, u - v + c, q), "g3"), require(baxter_f(flavor_, v - u, q), "g4")};
}

Scalar AlgebraSpec::shift(const Scalar& u, int j) const {
    if (!is_rs()) throw std::logic_error("AlgebraSpec: shifts need an RS-type charge");
    if (flavor_ == Flavor::Trigonometric) return u * charge_.pow(j);
    return u + charge_ * Scalar(j);
}

bool AlgebraSpec::neutral_charge() const {
    if (!is_rs()) return false;
    return flavor_ == Flavor::Trigonometric ? charge_.is_one() : charge_.is_zero();
}

TensorOp AlgebraSpec::current_at_arg(const Scalar& x) const {
    const auto f = baxter_f(flavor_, x, braiding_.q());
    if (!f) throw PoleError("current R-matrix pole");
    return braiding_.r().plus_scalar_identity(*f);
}

Scalar critical_charge(const Braiding& b, Flavor flavor) {
    if (flavor == Flavor::Trigonometric && b.kind() != BraidKind::Hecke)
        throw std::invalid_argument("critical_charge: trigonometric flavor requires a Hecke symmetry");
    if (flavor == Flavor::Rational && b.kind() != BraidKind::Involutive)
        throw std::invalid_argument("critical_charge: rational flavor requires an involutive symmetry");
    const BiRank& br = birank_of(b);
    if (flavor == Flavor::Trigonometric) return b.q().pow(2L * (br.m - br.n));
    return Scalar(br.n - br.m);
}

std::pair<Scalar, Scalar> centrality_condition(const AlgebraSpec& spec, const Scalar& u, const Scalar& v) {
    const auto g = spec.g_values(u, v);
    const Scalar lam = spec.lambda();
    const Scalar a = spec.alpha();
    return {lam + g[0] + g[1] + a * g[0] * g[1], lam + g[2] + g[3] + a * g[2] * g[3]};
}

AlgebraSpec::GFuncs make_rs_gfuncs(Flavor flavor, const Scalar& q, const Scalar& charge, bool swap12,
                                   bool swap34) {
    auto f = [flavor, q](const Scalar& x) { return baxter_f(flavor, x, q); };
    AlgebraSpec::GFunc g1, g2, g3, g4;
    if (flavor == Flavor::Trigonometric) {
        auto ratio = [f](const Scalar& a, const Scalar& b) -> std::optional<Scalar> {
            if (b.is_zero()) return std::nullopt;
            return f(a / b);
        };
        g1 = [ratio](const Scalar& u, const Scalar& v) { return ratio(u, v); };
        g2 = [ratio, charge](const Scalar& u, const Scalar& v) { return ratio(v * charge, u); };
        g3 = [ratio, charge](const Scalar& u, const Scalar& v) { return ratio(u * charge, v); };
        g4 = [ratio](const Scalar& u, const Scalar& v) { return ratio(v, u); };
    } else {
        g1 = [f](const Scalar& u, const Scalar& v) { return f(u - v); };
        g2 = [f, charge](const Scalar& u, const Scalar& v) { return f(v - u + charge); };
        g3 = [f, charge](const Scalar& u, const Scalar& v) { return f(u - v + charge); };
        g4 = [f](const Scalar& u, const Scalar& v) { return f(v - u); };
    }
    AlgebraSpec::GFuncs out;
    out.g1 = swap12 ? g2 : g1;
    out.g2 = swap12 ? g1 : g2;
    out.g3 = swap34 ? g4 : g3;
    out.g4 = swap34 ? g3 : g4;
    out.label = std::string("rs") + (swap12 ? "+swap12" : "") + (swap34 ? "+swap34" : "");
    return out;
}

const RewriteRule& AlgebraContext::rule(const ParamPoint& lo, const ParamPoint& hi) {
    if (lo.id >= hi.id) throw std::invalid_argument("AlgebraContext::rule: need lo.id < hi.id");
    const auto key = std::make_pair(lo.id, hi.id);
    auto it = rules_.find(key);
    if (it != rules_.end()) return it->second;
    const auto g = spec_.g_values(lo.value, hi.value);
    const TensorOp& r = spec_.braiding().r();
    ExchangeFactors f{r.plus_scalar_identity(g[0]), r.plus_scalar_identity(g[1]),
                      r.plus_scalar_identity(g[2]), r.plus_scalar_identity(g[3])};
    return rules_.emplace(key, build_exchange_rule(f, lo, hi)).first->second;
}

void AlgebraContext::ensure_rules(const std::vector<ParamPoint>& pts) {
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < pts.size(); ++j) {
            if (pts[i].id < pts[j].id && pts[i].value != pts[j].value) rule(pts[i], pts[j]);
        }
}

QuantumPower quantum_power(AlgebraContext& ctx, const Scalar& u, int k) {
    if (k < 1) throw std::invalid_argument("quantum_power: k must be >= 1");
    QuantumPower p;
    p.k = k;
    for (int j = k - 1; j >= 0; --j) p.points.push_back(ctx.point(ctx.spec().shift(u, j)));
    p.base = p.points.back();
    if (!ctx.spec().neutral_charge()) {
        // Shifted points must be pairwise distinct (a collision means the
        // charge is a root of unity on this orbit), and the block must be
        // id-ascending: exchange rules for pairs (y, cy) do not exist.
        for (size_t i = 0; i + 1 < p.points.size(); ++i)
            for (size_t j = i + 1; j < p.points.size(); ++j)
                if (p.points[i].value == p.points[j].value)
                    throw PoleError("quantum_power: charge-shifted points collide");
        for (size_t i = 0; i + 1 < p.points.size(); ++i)
            if (p.points[i].id > p.points[i + 1].id)
                throw std::logic_error(
                    "quantum_power: base point registered ahead of its shifted points; "
                    "register the probe point first and let quantum_power create the block");
    }
    p.matrix = ctx.l_matrix(p.points.front());
    for (size_t i = 1; i < p.points.size(); ++i) p.matrix = p.matrix * ctx.l_matrix(p.points[i]);
    return p;
}

QuantumPower quantum_power(AlgebraContext& ctx, const ParamPoint& u, int k) {
    return quantum_power(ctx, u.value, k);
}

NCPoly power_sum(AlgebraContext& ctx, const Scalar& u, int k) {
    return r_trace(ctx.spec().braiding(), quantum_power(ctx, u, k).matrix);
}

NCPoly power_sum(AlgebraContext& ctx, const ParamPoint& u, int k) { return power_sum(ctx, u.value, k); }

std::pair<NCMatrix, NCMatrix> rs_relation(AlgebraContext& ctx, const ParamPoint& u, const ParamPoint& v) {
    const auto g = ctx.spec().g_values(u.value, v.value);
    const TensorOp& r = ctx.spec().braiding().r();
    const int n = ctx.dim();
    const NCMatrix lu = ctx.l_matrix(u).leg1(n);
    const NCMatrix lv = ctx.l_matrix(v).leg1(n);
    NCMatrix lhs = NCMatrix::from_scalar(r.plus_scalar_identity(g[0])) * lu *
                   NCMatrix::from_scalar(r.plus_scalar_identity(g[1])) * lv;
    NCMatrix rhs = lv * NCMatrix::from_scalar(r.plus_scalar_identity(g[2])) * lu *
                   NCMatrix::from_scalar(r.plus_scalar_identity(g[3]));
    return {std::move(lhs), std::move(rhs)};
}

namespace {

CheckResult result_of(const NCMatrix& residual) {
    return CheckResult{residual.is_zero(), residual.term_count()};
}

CheckResult result_of(const NCPoly& residual) {
    return CheckResult{residual.is_zero(), residual.term_count()};
}

}  // namespace

CheckResult check_first_central(AlgebraContext& ctx, const ParamPoint& u, const ParamPoint& v) {
    if (u.value == v.value) throw PoleError("check_first_central: u = v");
    ctx.ensure_rules({u, v});
    const NCPoly t = r_trace(ctx.spec().braiding(), ctx.l_matrix(u));
    const NCMatrix lv = ctx.l_matrix(v);
    const NCMatrix residual = ctx.normal_form(lv.left_mul(t) - lv.right_mul(t));
    return result_of(residual);
}

CheckResult check_push_through(AlgebraContext& ctx, int k, const ParamPoint& u, const Scalar& v) {
    const AlgebraSpec& spec = ctx.spec();
    if (!spec.is_rs()) throw std::logic_error("check_push_through: RS-type spec required");
    if (k < 1) throw std::invalid_argument("check_push_through: k must be >= 1");
    const QuantumPower pw = quantum_power(ctx, v, k);
    for (const auto& p : pw.points) {
        if (p.value == u.value) throw PoleError("check_push_through: shifted point collides with u");
        if (p.id > u.id)
            ctx.rule(u, p);
        else
            ctx.rule(p, u);
    }
    const Scalar& c = spec.charge();
    const Scalar& uu = u.value;
    const Scalar& vv = v;
    Scalar arg_l1, arg_l2, arg_r1, arg_r2;
    if (spec.flavor() == Flavor::Trigonometric) {
        arg_l1 = uu * c / vv;
        arg_l2 = vv / uu;
        arg_r1 = uu / (c.pow(k - 1) * vv);
        arg_r2 = c.pow(k) * vv / uu;
    } else {
        arg_l1 = uu + c - vv;
        arg_l2 = vv - uu;
        arg_r1 = uu - vv - c * Scalar(k - 1);
        arg_r2 = vv + c * Scalar(k) - uu;
    }
    const int n = ctx.dim();
    const NCMatrix lk1 = pw.matrix.leg1(n);
    const NCMatrix lu1 = ctx.l_matrix(u).leg1(n);
    const NCMatrix lhs = lk1 * NCMatrix::from_scalar(spec.current_at_arg(arg_l1)) * lu1 *
                         NCMatrix::from_scalar(spec.current_at_arg(arg_l2));
    const NCMatrix rhs = NCMatrix::from_scalar(spec.current_at_arg(arg_r1)) * lu1 *
                         NCMatrix::from_scalar(spec.current_at_arg(arg_r2)) * lk1;
    return result_of(ctx.normal_form(lhs - rhs));
}

CommutatorIdentityResult check_commutator_identity(AlgebraContext& ctx, int k, const ParamPoint& u,
                                                   const Scalar& v) {
    const AlgebraSpec& spec = ctx.spec();
    if (!spec.is_rs() || spec.flavor() != Flavor::Trigonometric || !spec.neutral_charge())
        throw std::logic_error("check_commutator_identity: trigonometric RS-type at charge 1 required");
    if (k < 1) throw std::invalid_argument("check_commutator_identity: k must be >= 1");
    if (u.value == v) throw PoleError("check_commutator_identity: u = v");
    const QuantumPower pw = quantum_power(ctx, v, k);  // c = 1: plain power
    ctx.ensure_rules({u, pw.base});
    const NCPoly s = r_trace(spec.braiding(), pw.matrix);
    const NCMatrix lu = ctx.l_matrix(u);
    const NCMatrix lhs = lu.left_mul(s) - lu.right_mul(s);  // [Tr_R L^k(v), L(u)]
    const NCMatrix comm = lu * pw.matrix - pw.matrix * lu;  // [L(u), L^k(v)]
    const Scalar lam = spec.lambda();
    const Scalar& uu = u.value;
    const Scalar& vv = v;
    const Scalar gamma = -(spec.alpha() * lam * lam * uu * vv) / ((uu - vv) * (uu - vv));
    CommutatorIdentityResult out;
    NCMatrix rhs(comm.rows(), comm.cols());
    for (int i = 0; i < comm.rows(); ++i)
        for (int j = 0; j < comm.cols(); ++j) rhs.at(i, j) = comm.at(i, j).scaled(gamma);
    out.identity = result_of(ctx.normal_form(lhs - rhs));
    const NCMatrix comm_nf = ctx.normal_form(lhs);
    out.commutator_zero = comm_nf.is_zero();
    out.commutator_terms = comm_nf.term_count();
    return out;
}

CheckResult check_higher_central(AlgebraContext& ctx, int k, const ParamPoint& u, const Scalar& v) {
    if (k < 1) throw std::invalid_argument("check_higher_central: k must be >= 1");
    if (u.value == v) throw PoleError("check_higher_central: u = v");
    const QuantumPower pw = quantum_power(ctx, v, k);
    for (const auto& p : pw.points) {
        if (p.value == u.value) throw PoleError("check_higher_central: shifted point collides with u");
        if (p.id > u.id)
            ctx.rule(u, p);
        else
            ctx.rule(p, u);
    }
    const NCPoly s = r_trace(ctx.spec().braiding(), pw.matrix);
    const NCMatrix lu = ctx.l_matrix(u);
    return result_of(ctx.normal_form(lu.left_mul(s) - lu.right_mul(s)));
}

CheckResult check_first_central(const AlgebraSpec& spec, const Scalar& u, const Scalar& v) {
    AlgebraContext ctx(spec);
    const ParamPoint pu = ctx.point(u);
    const ParamPoint pv = ctx.point(v);
    return check_first_central(ctx, pu, pv);
}

CheckResult check_push_through(const AlgebraSpec& spec, int k, const Scalar& u, const Scalar& v) {
    AlgebraContext ctx(spec);
    const ParamPoint pu = ctx.point(u);
    return check_push_through(ctx, k, pu, v);
}

CommutatorIdentityResult check_commutator_identity(const AlgebraSpec& spec, int k, const Scalar& u,
                                                   const Scalar& v) {
    AlgebraContext ctx(spec);
    const ParamPoint pu = ctx.point(u);
    return check_commutator_identity(ctx, k, pu, v);
}

CheckResult check_higher_central(const AlgebraSpec& spec, int k, const Scalar& u, const Scalar& v) {
    AlgebraContext ctx(spec);
    const ParamPoint pu = ctx.point(u);
    return check_higher_central(ctx, k, pu, v);
}

}  // namespace recenters
