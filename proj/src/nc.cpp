#include "recenters/nc.hpp"

#include <algorithm>
#include <sstream>

namespace recenters {

NCPoly NCPoly::constant(const Scalar& c) {
    NCPoly p;
    if (!c.is_zero()) p.t_.emplace(Word(), c);
    return p;
}

NCPoly NCPoly::generator(int pid, int row, int col) {
    NCPoly p;
    p.t_.emplace(Word(1, make_letter(pid, row, col)), Scalar(1));
    return p;
}

NCPoly NCPoly::monomial(Word w, const Scalar& c) {
    NCPoly p;
    if (!c.is_zero()) p.t_.emplace(std::move(w), c);
    return p;
}

int NCPoly::degree() const {
    size_t d = 0;
    for (const auto& [w, c] : t_) d = std::max(d, w.size());
    return static_cast<int>(d);
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly out = *this;
    for (const auto& [w, c] : o.t_) out.add_term(w, c);
    return out;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    NCPoly out = *this;
    for (const auto& [w, c] : o.t_) out.add_term(w, -c);
    return out;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly out;
    for (const auto& [wa, ca] : t_)
        for (const auto& [wb, cb] : o.t_) out.add_term(wa + wb, ca * cb);
    return out;
}

NCPoly NCPoly::scaled(const Scalar& s) const {
    NCPoly out;
    if (s.is_zero()) return out;
    for (const auto& [w, c] : t_) out.t_.emplace(w, c * s);
    return out;
}

std::string NCPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (Letter l : w)
            os << "*l[" << letter_row(l) + 1 << "," << letter_col(l) + 1 << "](p" << letter_point(l) << ")";
    }
    return os.str();
}

NCMatrix NCMatrix::generators(int n, int pid) {
    NCMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = NCPoly::generator(pid, i, j);
    return m;
}

NCMatrix NCMatrix::from_scalar(const DenseMat& s) {
    NCMatrix m(s.rows(), s.cols());
    for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < s.cols(); ++j) m.at(i, j) = NCPoly::constant(s.at(i, j));
    return m;
}

NCMatrix NCMatrix::from_scalar(const TensorOp& s) { return from_scalar(s.mat()); }

NCMatrix NCMatrix::identity(int n) { return from_scalar(DenseMat::identity(n)); }

NCMatrix NCMatrix::operator*(const NCMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("NCMatrix: dimension mismatch in product");
    NCMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int t = 0; t < cols_; ++t) {
            const NCPoly& x = at(i, t);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const NCPoly& y = o.at(t, j);
                if (!y.is_zero()) out.at(i, j) = out.at(i, j) + x * y;
            }
        }
    return out;
}

NCMatrix NCMatrix::operator+(const NCMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("NCMatrix: shape mismatch");
    NCMatrix out(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + o.e_[k];
    return out;
}

NCMatrix NCMatrix::operator-(const NCMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("NCMatrix: shape mismatch");
    NCMatrix out(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] - o.e_[k];
    return out;
}

NCMatrix NCMatrix::left_mul(const NCPoly& p) const {
    NCMatrix out(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = p * e_[k];
    return out;
}

NCMatrix NCMatrix::right_mul(const NCPoly& p) const {
    NCMatrix out(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * p;
    return out;
}

bool NCMatrix::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

int NCMatrix::term_count() const {
    int n = 0;
    for (const auto& p : e_) n += p.term_count();
    return n;
}

bool NCMatrix::operator==(const NCMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

NCMatrix NCMatrix::leg1(int n) const {
    NCMatrix out(rows_ * n, cols_ * n);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const NCPoly& p = at(i, j);
            if (p.is_zero()) continue;
            for (int s = 0; s < n; ++s) out.at(i * n + s, j * n + s) = p;
        }
    return out;
}

namespace {

int monomial_index(int a, int b, int c, int d, int n) { return ((a * n + b) * n + c) * n + d; }

/// Coefficient matrix E[(entry idx), (monomial idx)] of a matrix whose
/// entries are degree-2 words with points (first, second).
DenseMat extract_relation_coeffs(const NCMatrix& m, int first_pid, int second_pid, int n) {
    const int n4 = n * n * n * n;
    DenseMat e(n4, n4);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            for (const auto& [w, cf] : m.at(r, c).terms()) {
                if (w.size() != 2 || letter_point(w[0]) != first_pid || letter_point(w[1]) != second_pid)
                    throw std::logic_error("exchange rule: unexpected word structure in relation instance");
                const int mi = monomial_index(letter_row(w[0]), letter_col(w[0]),
                                              letter_row(w[1]), letter_col(w[1]), n);
                e.at(r * m.cols() + c, mi) += cf;
            }
        }
    return e;
}

}  // namespace

RewriteRule build_exchange_rule(const ExchangeFactors& f, const ParamPoint& lo, const ParamPoint& hi) {
    const int n = f.a1.dim();
    if (lo.id == hi.id || lo.value == hi.value)
        throw std::invalid_argument("build_exchange_rule: points must be distinct");
    const NCMatrix l_lo = NCMatrix::generators(n, lo.id).leg1(n);
    const NCMatrix l_hi = NCMatrix::generators(n, hi.id).leg1(n);
    const NCMatrix lhs =
        NCMatrix::from_scalar(f.a1) * l_lo * NCMatrix::from_scalar(f.a2) * l_hi;
    const NCMatrix rhs =
        l_hi * NCMatrix::from_scalar(f.a3) * l_lo * NCMatrix::from_scalar(f.a4);
    const DenseMat e_lohi = extract_relation_coeffs(lhs, lo.id, hi.id, n);
    const DenseMat e_hilo = extract_relation_coeffs(rhs, hi.id, lo.id, n);
    RewriteRule rule;
    rule.lo_pid = lo.id;
    rule.hi_pid = hi.id;
    rule.dim = n;
    try {
        rule.x = e_hilo.solve(e_lohi);
        rule.reverse = rule.x.inverse();
    } catch (const SingularMatrixError&) {
        throw SpecialParamsError("exchange system singular at these parameters - resample");
    }
    // Definitional round-trip: substituting the rule back into the relation
    // instance must reproduce it exactly.
    if (!(e_hilo * rule.x == e_lohi))
        throw std::logic_error("exchange rule failed definitional round-trip");
    return rule;
}

namespace {

NCPoly normal_order_impl(const NCPoly& p, const RuleSet& rules, ReductionStrategy strategy) {
    std::map<Word, Scalar> done;
    std::map<Word, Scalar> pending(p.terms().begin(), p.terms().end());
    const bool leftmost = strategy == ReductionStrategy::LeftmostFirst;
    while (!pending.empty()) {
        auto it = pending.begin();
        const Word w = it->first;
        const Scalar cf = it->second;
        pending.erase(it);
        if (cf.is_zero()) continue;
        int pos = -1;
        const int last = static_cast<int>(w.size()) - 1;
        if (leftmost) {
            for (int i = 0; i < last; ++i)
                if (letter_point(w[i]) > letter_point(w[i + 1])) { pos = i; break; }
        } else {
            for (int i = last - 1; i >= 0; --i)
                if (letter_point(w[i]) > letter_point(w[i + 1])) { pos = i; break; }
        }
        if (pos < 0) {
            auto [dit, inserted] = done.emplace(w, cf);
            if (!inserted) {
                dit->second += cf;
                if (dit->second.is_zero()) done.erase(dit);
            }
            continue;
        }
        const Letter hi_l = w[pos];
        const Letter lo_l = w[pos + 1];
        auto rit = rules.find({letter_point(lo_l), letter_point(hi_l)});
        if (rit == rules.end())
            throw MissingRuleError("normal_order: no exchange rule for point pair (" +
                                   std::to_string(letter_point(lo_l)) + "," +
                                   std::to_string(letter_point(hi_l)) + ")");
        const RewriteRule& rule = rit->second;
        const int n = rule.dim;
        const int row = monomial_index(letter_row(hi_l), letter_col(hi_l),
                                       letter_row(lo_l), letter_col(lo_l), n);
        for (int e = 0; e < n; ++e)
            for (int fq = 0; fq < n; ++fq)
                for (int g = 0; g < n; ++g)
                    for (int h = 0; h < n; ++h) {
                        const Scalar& x = rule.x.at(row, monomial_index(e, fq, g, h, n));
                        if (x.is_zero()) continue;
                        Word w2 = w;
                        w2[pos] = make_letter(rule.lo_pid, e, fq);
                        w2[pos + 1] = make_letter(rule.hi_pid, g, h);
                        auto [pit, inserted] = pending.emplace(w2, cf * x);
                        if (!inserted) {
                            pit->second += cf * x;
                            if (pit->second.is_zero()) pending.erase(pit);
                        }
                    }
    }
    NCPoly out;
    for (const auto& [w, c] : done) out.add_term(w, c);
    return out;
}

}  // namespace

NCPoly normal_order(const NCPoly& p, const RuleSet& rules, ReductionStrategy strategy) {
    return normal_order_impl(p, rules, strategy);
}

NCMatrix normal_order(const NCMatrix& m, const RuleSet& rules, ReductionStrategy strategy) {
    NCMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = normal_order_impl(m.at(i, j), rules, strategy);
    return out;
}

NCMatrix nc_sandwich(const TensorOp& a, const NCMatrix& m, const TensorOp& b, const NCMatrix& m2) {
    const int n = a.dim();
    if (a.legs() != 2 || b.legs() != 2) throw std::invalid_argument("nc_sandwich: scalar factors must be 2-leg");
    if (m.rows() != n || m2.rows() != n) throw std::invalid_argument("nc_sandwich: NC matrices must be N x N");
    return NCMatrix::from_scalar(a) * m.leg1(n) * NCMatrix::from_scalar(b) * m2.leg1(n);
}

NCPoly nc_r_trace(const TensorOp& c_op, const NCMatrix& a) {
    const int n = c_op.size();
    if (c_op.legs() != 1 || a.rows() != n || a.cols() != n)
        throw std::invalid_argument("nc_r_trace: dimension mismatch");
    NCPoly out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Scalar& w = c_op.at(i, j);
            if (!w.is_zero()) out = out + a.at(j, i).scaled(w);
        }
    return out;
}

TensorOp rule_as_tensor(const RewriteRule& rule) {
    return TensorOp(2, rule.dim * rule.dim, rule.x);
}

NCMatrix nc_partial_trace2_weighted(const TensorOp& w, const NCMatrix& m) {
    const int n = w.size();
    if (w.legs() != 1 || m.rows() != n * n || m.cols() != n * n)
        throw std::invalid_argument("nc_partial_trace2_weighted: dimension mismatch");
    NCMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            NCPoly acc;
            for (int s = 0; s < n; ++s)
                for (int d = 0; d < n; ++d) {
                    const Scalar& ws = w.at(s, d);
                    if (!ws.is_zero()) acc = acc + m.at(i * n + d, j * n + s).scaled(ws);
                }
            out.at(i, j) = acc;
        }
    return out;
}

}  // namespace recenters
