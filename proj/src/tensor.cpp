#include "recenters/tensor.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace recenters {

namespace {

long ipow(int b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

TensorOp::TensorOp(int legs, int dim) : legs_(legs), dim_(dim) {
    if (legs < 1 || dim < 1) throw std::invalid_argument("TensorOp: bad shape");
    const int n = static_cast<int>(ipow(dim, legs));
    m_ = DenseMat(n, n);
}

TensorOp::TensorOp(int legs, int dim, DenseMat m) : legs_(legs), dim_(dim), m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() != static_cast<int>(ipow(dim, legs)))
        throw std::invalid_argument("TensorOp: matrix size does not match legs/dim");
}

TensorOp TensorOp::identity(int legs, int dim) {
    return TensorOp(legs, dim, DenseMat::identity(static_cast<int>(ipow(dim, legs))));
}

TensorOp TensorOp::flip(int dim) {
    TensorOp p(2, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) p.at(j * dim + i, i * dim + j) = Scalar(1);
    return p;
}

TensorOp TensorOp::operator*(const TensorOp& o) const {
    if (legs_ != o.legs_ || dim_ != o.dim_) throw std::invalid_argument("TensorOp: shape mismatch in product");
    return TensorOp(legs_, dim_, m_ * o.m_);
}

TensorOp TensorOp::operator+(const TensorOp& o) const {
    if (legs_ != o.legs_ || dim_ != o.dim_) throw std::invalid_argument("TensorOp: shape mismatch");
    return TensorOp(legs_, dim_, m_ + o.m_);
}

TensorOp TensorOp::operator-(const TensorOp& o) const {
    if (legs_ != o.legs_ || dim_ != o.dim_) throw std::invalid_argument("TensorOp: shape mismatch");
    return TensorOp(legs_, dim_, m_ - o.m_);
}

TensorOp TensorOp::scaled(const Scalar& s) const { return TensorOp(legs_, dim_, m_.scaled(s)); }

TensorOp TensorOp::plus_scalar_identity(const Scalar& s) const {
    return TensorOp(legs_, dim_, m_.plus_scalar_identity(s));
}

TensorOp TensorOp::inverse() const { return TensorOp(legs_, dim_, m_.inverse()); }

bool TensorOp::operator==(const TensorOp& o) const {
    return legs_ == o.legs_ && dim_ == o.dim_ && m_ == o.m_;
}

Scalar TensorOp::trace() const {
    Scalar t;
    for (int i = 0; i < size(); ++i) t += at(i, i);
    return t;
}

TensorOp embed_leg(const TensorOp& m, int pos, int total) {
    if (m.legs() != 2) throw std::invalid_argument("embed_leg: operator must have 2 legs");
    if (pos < 1 || pos > total - 1) throw std::invalid_argument("embed_leg: position out of range");
    const int N = m.dim();
    const long left = ipow(N, pos - 1);
    const long right = ipow(N, total - pos - 1);
    const long n2 = static_cast<long>(m.size());
    TensorOp out(total, N);
    // Kronecker I_left (x) m (x) I_right, big-endian composite indices.
    for (long a = 0; a < left; ++a)
        for (long i = 0; i < n2; ++i)
            for (long j = 0; j < n2; ++j) {
                const Scalar& x = m.at(static_cast<int>(i), static_cast<int>(j));
                if (x.is_zero()) continue;
                for (long b = 0; b < right; ++b) {
                    const long r = (a * n2 + i) * right + b;
                    const long c = (a * n2 + j) * right + b;
                    out.at(static_cast<int>(r), static_cast<int>(c)) = x;
                }
            }
    return out;
}

TensorOp partial_trace_weighted(const TensorOp& m, int leg, const TensorOp& w) {
    const int K = m.legs();
    const int N = m.dim();
    if (leg < 1 || leg > K) throw std::invalid_argument("partial_trace_weighted: leg out of range");
    if (K < 2) throw std::invalid_argument("partial_trace_weighted: need at least 2 legs");
    if (w.legs() != 1 || w.dim() != N) throw std::invalid_argument("partial_trace_weighted: weight must be 1-leg of same dim");
    const long hi = ipow(N, leg - 1);          // legs before `leg`
    const long lo = ipow(N, K - leg);          // legs after `leg`
    TensorOp out(K - 1, N);
    // out[(i',j')] = sum_{s,t} W[s][t] M[(i' with t at leg)][(j' with s at leg)]
    for (long ih = 0; ih < hi; ++ih)
        for (long il = 0; il < lo; ++il)
            for (long jh = 0; jh < hi; ++jh)
                for (long jl = 0; jl < lo; ++jl) {
                    Scalar acc;
                    for (int s = 0; s < N; ++s)
                        for (int t = 0; t < N; ++t) {
                            const Scalar& ws = w.at(s, t);
                            if (ws.is_zero()) continue;
                            const long r = (ih * N + t) * lo + il;
                            const long c = (jh * N + s) * lo + jl;
                            const Scalar& x = m.at(static_cast<int>(r), static_cast<int>(c));
                            if (!x.is_zero()) acc += ws * x;
                        }
                    if (!acc.is_zero())
                        out.at(static_cast<int>(ih * lo + il), static_cast<int>(jh * lo + jl)) = acc;
                }
    return out;
}

TensorOp partial_trace(const TensorOp& m, int leg) {
    return partial_trace_weighted(m, leg, TensorOp::identity(1, m.dim()));
}

TensorOp partial_transpose(const TensorOp& m, int leg) {
    if (m.legs() != 2) throw std::invalid_argument("partial_transpose: operator must have 2 legs");
    if (leg < 1 || leg > 2) throw std::invalid_argument("partial_transpose: leg out of range");
    const int N = m.dim();
    TensorOp out(2, N);
    for (int i1 = 0; i1 < N; ++i1)
        for (int i2 = 0; i2 < N; ++i2)
            for (int j1 = 0; j1 < N; ++j1)
                for (int j2 = 0; j2 < N; ++j2) {
                    const Scalar& x = (leg == 1) ? m.at(j1 * N + i2, i1 * N + j2)
                                                 : m.at(i1 * N + j2, j1 * N + i2);
                    out.at(i1 * N + i2, j1 * N + j2) = x;
                }
    return out;
}

TensorOp read_tensor_text(std::istream& in) {
    std::string kw1, kw2;
    int dim = 0, legs = 0;
    if (!(in >> kw1 >> dim >> kw2 >> legs) || kw1 != "N" || kw2 != "LEGS")
        throw std::invalid_argument("tensor text: expected header 'N <dim> LEGS <k>'");
    if (dim < 1 || legs < 1) throw std::invalid_argument("tensor text: bad dimensions");
    TensorOp out(legs, dim);
    const long n = out.size();
    for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c) {
            std::string tok;
            if (!(in >> tok)) throw std::invalid_argument("tensor text: not enough entries");
            out.at(static_cast<int>(r), static_cast<int>(c)) = Scalar::parse(tok);
        }
    return out;
}

TensorOp read_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    return read_tensor_text(in);
}

void write_tensor_text(std::ostream& out, const TensorOp& m) {
    out << "N " << m.dim() << " LEGS " << m.legs() << "\n";
    const int n = m.size();
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) out << (c ? " " : "") << m.at(r, c).str();
        out << "\n";
    }
}

}  // namespace recenters
