#include "recenters/scalar.hpp"

#include <ostream>

namespace recenters {

Scalar::Scalar(long num, long den) {
    if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Scalar Scalar::parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("Scalar: cannot parse '" + text + "'");
    if (v.get_den() == 0) throw std::invalid_argument("Scalar: zero denominator in '" + text + "'");
    v.canonicalize();
    return Scalar(std::move(v));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    v_ /= o.v_;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    return Scalar(mpq_class(1) / v_);
}

Scalar Scalar::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    mpq_class base = v_;
    mpq_class acc = 1;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return Scalar(std::move(acc));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar q_int(long k, const Scalar& q) {
    if (q.is_zero()) throw std::invalid_argument("q_int: q must be nonzero");
    if (q == Scalar(1) || q == Scalar(-1)) return Scalar(k);
    return (q.pow(k) - q.pow(-k)) / (q - q.inverse());
}

}  // namespace recenters
