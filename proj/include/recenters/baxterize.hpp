#pragma once

#include "recenters/symmetry.hpp"

#include <optional>
#include <vector>

namespace recenters {

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Flavor { Rational, Trigonometric };

std::string flavor_name(Flavor f);

/// Baxterization function. Trigonometric: f(x) = -(q - q^{-1}) x / (x - 1),
/// pole at x = 1. Rational: f(x) = 1/x, pole at x = 0. Returns nullopt at a
/// pole.
std::optional<Scalar> baxter_f(Flavor flavor, const Scalar& x, const Scalar& q);

/// A Baxterized family R(.) = R + f(.) I over a symmetry. Rational flavor
/// requires an involutive base and shifts arguments additively (arg = u - v);
/// trigonometric requires a Hecke base (arg = u / v). The rational shift
/// scale is a (default 1).
class CurrentR {
public:
    CurrentR(Braiding base, Flavor flavor, Scalar a = Scalar(1));

    const Braiding& base() const { return base_; }
    Flavor flavor() const { return flavor_; }
    const Scalar& shift_a() const { return a_; }

    /// R + f(x) I at an explicit argument; throws PoleError at a pole.
    TensorOp eval_at_arg(const Scalar& x) const;
    /// Argument from spectral parameters: u - v (rational) or u / v (trig).
    Scalar arg_of(const Scalar& u, const Scalar& v) const;
    TensorOp eval(const Scalar& u, const Scalar& v) const;

private:
    Braiding base_;
    Flavor flavor_;
    Scalar a_;
};

struct QybeResult {
    bool zero = true;
    int max_nonzero_entries = 0;
    int triples_checked = 0;
};

/// Parameterized Yang-Baxter residual
/// R_12(u,v) R_23(u,w) R_12(v,w) - R_23(v,w) R_12(u,w) R_23(u,v)
/// over the given triples. Triples hitting a pole are rejected with PoleError.
QybeResult check_qybe(const CurrentR& cr, const std::vector<std::array<Scalar, 3>>& triples);

/// Closed-form inverse (R + gI)^{-1} = (R^{-1} - gI)/(1 - g(g + q - q^{-1})).
/// Throws PoleError when the denominator vanishes.
TensorOp current_inverse(const Braiding& b, const Scalar& g);

/// Both differences of the equal-denominator identity
/// f(u/v)(f(u/v)+q-q^{-1}) = f(v/u)(f(v/u)+q-q^{-1}) = (q-q^{-1})^2 uv/(u-v)^2
/// for a Hecke base; exact zeros.
std::pair<Scalar, Scalar> equal_denominator_check(const Braiding& b, const Scalar& u, const Scalar& v);

}  // namespace recenters
