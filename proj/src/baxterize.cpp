#include "recenters/baxterize.hpp"

#include <array>

namespace recenters {

std::string flavor_name(Flavor f) { return f == Flavor::Rational ? "rational" : "trigonometric"; }

std::optional<Scalar> baxter_f(Flavor flavor, const Scalar& x, const Scalar& q) {
    if (flavor == Flavor::Rational) {
        if (x.is_zero()) return std::nullopt;
        return x.inverse();
    }
    if (x.is_one()) return std::nullopt;
    const Scalar lam = q - q.inverse();
    return -(lam * x) / (x - Scalar(1));
}

CurrentR::CurrentR(Braiding base, Flavor flavor, Scalar a)
    : base_(std::move(base)), flavor_(flavor), a_(std::move(a)) {
    if (flavor_ == Flavor::Rational && base_.kind() != BraidKind::Involutive)
        throw std::invalid_argument("CurrentR: rational flavor requires an involutive base");
    if (flavor_ == Flavor::Trigonometric && base_.kind() != BraidKind::Hecke)
        throw std::invalid_argument("CurrentR: trigonometric flavor requires a Hecke base");
    if (a_.is_zero()) throw std::invalid_argument("CurrentR: shift a must be nonzero");
}

TensorOp CurrentR::eval_at_arg(const Scalar& x) const {
    std::optional<Scalar> f;
    if (flavor_ == Flavor::Rational) {
        if (x.is_zero()) throw PoleError("current R-matrix: pole at argument 0");
        f = a_ / x;
    } else {
        f = baxter_f(flavor_, x, base_.q());
        if (!f) throw PoleError("current R-matrix: pole at argument 1");
    }
    return base_.r().plus_scalar_identity(*f);
}

Scalar CurrentR::arg_of(const Scalar& u, const Scalar& v) const {
    if (flavor_ == Flavor::Rational) return u - v;
    if (v.is_zero()) throw PoleError("current R-matrix: zero spectral parameter in u/v");
    return u / v;
}

TensorOp CurrentR::eval(const Scalar& u, const Scalar& v) const {
    if (u == v) throw PoleError("current R-matrix: singular point u = v");
    return eval_at_arg(arg_of(u, v));
}

QybeResult check_qybe(const CurrentR& cr, const std::vector<std::array<Scalar, 3>>& triples) {
    QybeResult out;
    for (const auto& t : triples) {
        const Scalar &u = t[0], &v = t[1], &w = t[2];
        const TensorOp r12_uv = embed_leg(cr.eval(u, v), 1, 3);
        const TensorOp r23_uw = embed_leg(cr.eval(u, w), 2, 3);
        const TensorOp r12_vw = embed_leg(cr.eval(v, w), 1, 3);
        const TensorOp r23_vw = embed_leg(cr.eval(v, w), 2, 3);
        const TensorOp r12_uw = embed_leg(cr.eval(u, w), 1, 3);
        const TensorOp r23_uv = embed_leg(cr.eval(u, v), 2, 3);
        const TensorOp residual = r12_uv * r23_uw * r12_vw - r23_vw * r12_uw * r23_uv;
        const int nz = residual.nonzero_count();
        out.zero = out.zero && nz == 0;
        out.max_nonzero_entries = std::max(out.max_nonzero_entries, nz);
        ++out.triples_checked;
    }
    return out;
}

TensorOp current_inverse(const Braiding& b, const Scalar& g) {
    const Scalar lam = b.kind() == BraidKind::Hecke ? b.q() - b.q().inverse() : Scalar(0);
    const Scalar den = Scalar(1) - g * (g + lam);
    if (den.is_zero()) throw PoleError("current_inverse: 1 - g(g + q - q^{-1}) vanishes");
    return (b.r_inverse().plus_scalar_identity(-g)).scaled(den.inverse());
}

std::pair<Scalar, Scalar> equal_denominator_check(const Braiding& b, const Scalar& u, const Scalar& v) {
    if (b.kind() != BraidKind::Hecke)
        throw std::invalid_argument("equal_denominator_check: Hecke base required");
    if (u == v || u.is_zero() || v.is_zero())
        throw PoleError("equal_denominator_check: need u != v, both nonzero");
    const Scalar lam = b.q() - b.q().inverse();
    const auto fx = *baxter_f(Flavor::Trigonometric, u / v, b.q());
    const auto fy = *baxter_f(Flavor::Trigonometric, v / u, b.q());
    const Scalar target = lam * lam * u * v / ((u - v) * (u - v));
    return {fx * (fx + lam) - target, fy * (fy + lam) - target};
}

}  // namespace recenters
