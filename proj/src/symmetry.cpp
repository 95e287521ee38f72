#include "recenters/symmetry.hpp"

#include <sstream>

namespace recenters {

std::string kind_name(BraidKind k) { return k == BraidKind::Involutive ? "involutive" : "hecke"; }

TensorOp check_braid(const TensorOp& r) {
    if (r.legs() != 2) throw std::invalid_argument("check_braid: need a 2-leg operator");
    const TensorOp r12 = embed_leg(r, 1, 3);
    const TensorOp r23 = embed_leg(r, 2, 3);
    return r12 * r23 * r12 - r23 * r12 * r23;
}

TensorOp check_kind(const TensorOp& r, BraidKind kind, const Scalar& q) {
    if (r.legs() != 2) throw std::invalid_argument("check_kind: need a 2-leg operator");
    if (kind == BraidKind::Involutive)
        return r * r - TensorOp::identity(2, r.dim());
    return r.plus_scalar_identity(-q) * r.plus_scalar_identity(q.inverse());
}

SkewData skew_inverse(const TensorOp& r) {
    if (r.legs() != 2) throw std::invalid_argument("skew_inverse: need a 2-leg operator");
    const int n = r.dim();
    const int n2 = n * n;
    // For each (k,l) the system has the same coefficient matrix
    // T[(i,j)][(x,b)] = R^{(i,b)}_{(j,x)}; the unknown column for (k,l) is
    // Psi^{(x,k)}_{(b,l)} over (x,b) and the right side is d^i_l d^k_j.
    DenseMat t(n2, n2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int x = 0; x < n; ++x)
                for (int b = 0; b < n; ++b) t.at(i * n + j, x * n + b) = r.at(i * n + b, j * n + x);
    DenseMat e(n2, n2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (i == l && k == j) e.at(i * n + j, k * n + l) = Scalar(1);
    DenseMat z;
    try {
        z = t.solve(e);
    } catch (const SingularMatrixError&) {
        throw NotSkewInvertibleError("not skew-invertible");
    }
    SkewData s{TensorOp(2, n), TensorOp(1, n), TensorOp(1, n)};
    for (int x = 0; x < n; ++x)
        for (int k = 0; k < n; ++k)
            for (int b = 0; b < n; ++b)
                for (int l = 0; l < n; ++l) s.psi.at(x * n + k, b * n + l) = z.at(x * n + b, k * n + l);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            Scalar acc;
            for (int x = 0; x < n; ++x) acc += s.psi.at(x * n + k, x * n + l);
            s.b.at(k, l) = acc;
        }
    for (int x = 0; x < n; ++x)
        for (int b = 0; b < n; ++b) {
            Scalar acc;
            for (int k = 0; k < n; ++k) acc += s.psi.at(x * n + k, b * n + k);
            s.c.at(x, b) = acc;
        }
    return s;
}

Braiding Braiding::create(TensorOp r, BraidKind kind, Scalar q, std::string name) {
    if (r.legs() != 2) throw std::invalid_argument("Braiding: R must be a 2-leg operator");
    if (kind == BraidKind::Involutive) {
        if (!(q == Scalar(1))) throw std::invalid_argument("Braiding: involutive symmetry has q = 1");
    } else {
        if (q.is_zero()) throw std::invalid_argument("Braiding: q must be nonzero");
        // Genericity: q^k != 1 for k <= 2N + 4.
        Scalar p(1);
        for (int k = 1; k <= 2 * r.dim() + 4; ++k) {
            p *= q;
            if (p.is_one())
                throw std::invalid_argument("Braiding: q is a root of unity (q^" + std::to_string(k) +
                                            " = 1); non-generic q rejected");
        }
    }
    if (!check_braid(r).is_zero())
        throw std::invalid_argument("Braiding '" + name + "': braid relation fails");
    if (!check_kind(r, kind, q).is_zero())
        throw std::invalid_argument("Braiding '" + name + "': " + kind_name(kind) + " condition fails");
    SkewData skew = skew_inverse(r);
    // Definition check: Tr_(2) R_12 Psi_23 = P_13.
    const TensorOp lhs = partial_trace(embed_leg(r, 1, 3) * embed_leg(skew.psi, 2, 3), 2);
    if (!(lhs == TensorOp::flip(r.dim())))
        throw std::logic_error("Braiding '" + name + "': skew-inverse definition check failed");
    // B and C invertible, product proportional to the identity.
    const TensorOp bc = skew.b * skew.c;
    skew.b.inverse();
    skew.c.inverse();
    const Scalar ratio = bc.at(0, 0);
    if (!(bc == TensorOp::identity(1, r.dim()).scaled(ratio)))
        throw std::logic_error("Braiding '" + name + "': B.C is not proportional to the identity");

    Braiding b;
    b.r_inv_ = r.inverse();
    b.r_ = std::move(r);
    b.kind_ = kind;
    b.q_ = std::move(q);
    b.skew_ = std::make_shared<const SkewData>(std::move(skew));
    b.name_ = std::move(name);
    return b;
}

Scalar r_trace(const Braiding& b, const DenseMat& a) {
    const int n = b.dim();
    if (a.rows() != n || a.cols() != n) throw std::invalid_argument("r_trace: dimension mismatch");
    Scalar out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Scalar& c = b.skew().c.at(i, j);
            if (!c.is_zero()) out += c * a.at(j, i);
        }
    return out;
}

NCPoly r_trace(const Braiding& b, const NCMatrix& a) { return nc_r_trace(b.skew().c, a); }

OgievetskyResult verify_ogievetsky(const Braiding& b) {
    const int n = b.dim();
    const NCMatrix a = NCMatrix::generators(n, /*pid=*/0);
    const NCMatrix a1 = a.leg1(n);
    const NCMatrix m_a = NCMatrix::from_scalar(b.r()) * a1 * NCMatrix::from_scalar(b.r_inverse());
    const NCMatrix m_b = NCMatrix::from_scalar(b.r_inverse()) * a1 * NCMatrix::from_scalar(b.r());
    const NCPoly tr = r_trace(b, a);
    NCMatrix expect(n, n);
    for (int i = 0; i < n; ++i) expect.at(i, i) = tr;
    return OgievetskyResult{nc_partial_trace2_weighted(b.skew().c, m_a) - expect,
                            nc_partial_trace2_weighted(b.skew().c, m_b) - expect};
}

Braiding make_flip(int n) {
    if (n < 1) throw std::invalid_argument("make_flip: N must be >= 1");
    return Braiding::create(TensorOp::flip(n), BraidKind::Involutive, Scalar(1),
                            "flip:" + std::to_string(n));
}

Braiding make_super_flip(int m, int n) {
    const int nn = m + n;
    if (nn < 1 || m < 0 || n < 0) throw std::invalid_argument("make_super_flip: need m + n >= 1");
    TensorOp r(2, nn);
    auto odd = [&](int i) { return i >= m; };
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j)
            r.at(j * nn + i, i * nn + j) = (odd(i) && odd(j)) ? Scalar(-1) : Scalar(1);
    return Braiding::create(std::move(r), BraidKind::Involutive, Scalar(1),
                            "superflip:" + std::to_string(m) + "|" + std::to_string(n));
}

Braiding make_dj(int n, const Scalar& q) {
    if (n < 1) throw std::invalid_argument("make_dj: N must be >= 1");
    if (q.is_zero()) throw std::invalid_argument("make_dj: q must be nonzero");
    const Scalar lam = q - q.inverse();
    TensorOp r(2, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                r.at(i * n + i, i * n + i) = q;
            } else {
                r.at(j * n + i, i * n + j) = Scalar(1);
                if (i < j) r.at(i * n + j, i * n + j) = lam;
            }
        }
    return Braiding::create(std::move(r), BraidKind::Hecke, q, "dj:" + std::to_string(n) + ":" + q.str());
}

Braiding make_q_super(int m, int n, const Scalar& q) {
    const int nn = m + n;
    if (nn < 1 || m < 0 || n < 0) throw std::invalid_argument("make_q_super: need m + n >= 1");
    if (q.is_zero()) throw std::invalid_argument("make_q_super: q must be nonzero");
    const Scalar lam = q - q.inverse();
    TensorOp r(2, nn);
    auto odd = [&](int i) { return i >= m; };
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j) {
            if (i == j) {
                r.at(i * nn + i, i * nn + i) = odd(i) ? -q.inverse() : q;
            } else {
                r.at(j * nn + i, i * nn + j) = (odd(i) && odd(j)) ? Scalar(-1) : Scalar(1);
                if (i < j) r.at(i * nn + j, i * nn + j) = lam;
            }
        }
    return Braiding::create(std::move(r), BraidKind::Hecke, q,
                            "qsuper:" + std::to_string(m) + "|" + std::to_string(n) + ":" + q.str());
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::pair<int, int> parse_mn(const std::string& s) {
    const auto parts = split(s, '|');
    if (parts.size() != 2) throw std::invalid_argument("expected m|n in symmetry name");
    return {std::stoi(parts[0]), std::stoi(parts[1])};
}

}  // namespace

Braiding make_by_name(const std::string& name) {
    const auto parts = split(name, ':');
    const std::string& head = parts[0];
    try {
        if (head == "flip" && parts.size() == 2) return make_flip(std::stoi(parts[1]));
        if (head == "superflip" && parts.size() == 2) {
            const auto [m, n] = parse_mn(parts[1]);
            return make_super_flip(m, n);
        }
        if (head == "dj" && parts.size() == 3) return make_dj(std::stoi(parts[1]), Scalar::parse(parts[2]));
        if (head == "qsuper" && parts.size() == 3) {
            const auto [m, n] = parse_mn(parts[1]);
            return make_q_super(m, n, Scalar::parse(parts[2]));
        }
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("symmetry '" + name + "': " + e.what());
    }
    throw std::invalid_argument("unknown symmetry name '" + name +
                                "' (expected flip:N, superflip:m|n, dj:N:q or qsuper:m|n:q)");
}

Braiding braiding_from_file(const std::string& path, BraidKind kind, const Scalar& q) {
    TensorOp r = read_tensor_file(path);
    if (r.legs() != 2) throw std::invalid_argument("braiding_from_file: matrix must have 2 legs");
    return Braiding::create(std::move(r), kind, q, "file:" + path);
}

}  // namespace recenters
