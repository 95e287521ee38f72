#include "recenters/birank.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace recenters {

namespace {

long ipow(int b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

using SparseVec = std::vector<std::pair<long, Scalar>>;  // sorted by index

/// Rank of a set of columns each having at most two nonzero entries, by
/// union-find over coordinates with exact edge ratios. For y in the
/// orthogonal complement, an edge column c_a e_a + c_b e_b forces
/// c_a y_a + c_b y_b = 0; a component contributes size-1 to the rank unless a
/// single-entry column or an inconsistent cycle pins it to zero (then size).
class TwoNnzRank {
public:
    explicit TwoNnzRank(long n) : parent_(n, -1), ratio_(n), size_(n, 1), marked_(n, 0) {}

    void mark(long a) {
        activate(a);
        marked_[find(a).first] = 1;
    }

    void edge(long a, long b, const Scalar& ca, const Scalar& cb) {
        activate(a);
        activate(b);
        attach(a, b, ca, cb);
    }

    long rank() {
        long r = 0;
        std::map<long, std::pair<long, bool>> comps;  // root -> (size, marked)
        for (long v : active_) {
            long root = find(v).first;
            auto it = comps.find(root);
            if (it == comps.end()) comps.emplace(root, std::make_pair(size_[root], marked_[root] != 0));
        }
        for (const auto& [root, sm] : comps) r += sm.first - 1 + (sm.second ? 1 : 0);
        return r;
    }

private:
    void activate(long v) {
        if (parent_[v] == -1) {
            parent_[v] = v;
            ratio_[v] = Scalar(1);
            active_.push_back(v);
        }
    }

    // find with path compression; returns (root, y_v / y_root).
    std::pair<long, Scalar> find(long v) {
        if (parent_[v] == v) return {v, Scalar(1)};
        auto [root, f] = find(parent_[v]);
        parent_[v] = root;
        ratio_[v] *= f;
        return {root, ratio_[v]};
    }

    void attach(long a, long b, const Scalar& ca, const Scalar& cb) {
        auto [ra, fa] = find(a);
        auto [rb, fb] = find(b);
        if (ra == rb) {
            if (!(ca * fa + cb * fb).is_zero()) marked_[ra] = 1;
            return;
        }
        if (size_[ra] <= size_[rb]) {
            // y_a = -(cb/ca) y_b  =>  y_ra = fa^{-1} y_a = -(cb fb)/(ca fa) y_rb
            parent_[ra] = rb;
            ratio_[ra] = -(cb * fb) / (ca * fa);
            size_[rb] += size_[ra];
            marked_[rb] = marked_[rb] || marked_[ra];
        } else {
            parent_[rb] = ra;
            ratio_[rb] = -(ca * fa) / (cb * fb);
            size_[ra] += size_[rb];
            marked_[ra] = marked_[ra] || marked_[rb];
        }
    }

    std::vector<long> parent_;
    std::vector<Scalar> ratio_;
    std::vector<long> size_;
    std::vector<char> marked_;
    std::vector<long> active_;
};

/// Incremental exact echelon basis with unit leading coefficients.
class Echelon {
public:
    long size() const { return static_cast<long>(rows_.size()); }

    void insert(SparseVec v) {
        while (!v.empty()) {
            const long lead = v.front().first;
            auto it = rows_.find(lead);
            if (it == rows_.end()) {
                const Scalar inv = v.front().second.inverse();
                for (auto& [i, x] : v) x *= inv;
                rows_.emplace(lead, std::move(v));
                return;
            }
            v = axpy(v, it->second, -v.front().second);
        }
    }

    /// All rows tensored with e_j, j = 0..n-1 (index x -> x*n + j).
    Echelon tensor_identity(int n) const {
        Echelon out;
        for (const auto& [piv, row] : rows_)
            for (int j = 0; j < n; ++j) {
                SparseVec r;
                r.reserve(row.size());
                for (const auto& [i, x] : row) r.emplace_back(i * n + j, x);
                out.rows_.emplace(piv * n + j, std::move(r));
            }
        return out;
    }

private:
    static SparseVec axpy(const SparseVec& v, const SparseVec& w, const Scalar& s) {
        SparseVec out;
        out.reserve(v.size() + w.size());
        size_t i = 0, j = 0;
        while (i < v.size() || j < w.size()) {
            if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
                out.push_back(v[i++]);
            } else if (i == v.size() || w[j].first < v[i].first) {
                out.emplace_back(w[j].first, w[j].second * s);
                ++j;
            } else {
                Scalar x = v[i].second + w[j].second * s;
                if (!x.is_zero()) out.emplace_back(v[i].first, std::move(x));
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::map<long, SparseVec> rows_;
};

}  // namespace

std::vector<long> lambda_dims(const Braiding& b, int kmax, bool force_general_rank) {
    if (kmax < 2) throw std::invalid_argument("lambda_dims: kmax must be >= 2");
    const int n = b.dim();
    const TensorOp s_op = b.r().plus_scalar_identity(b.q().inverse());
    // Sparse columns of S = q^{-1} I + R, indexed by the input pair.
    std::vector<SparseVec> s_cols(static_cast<size_t>(n) * n);
    bool two_nnz = true;
    for (int c = 0; c < n * n; ++c) {
        for (int r = 0; r < n * n; ++r)
            if (!s_op.at(r, c).is_zero()) s_cols[c].emplace_back(r, s_op.at(r, c));
        two_nnz = two_nnz && s_cols[c].size() <= 2;
    }
    two_nnz = two_nnz && !force_general_rank;

    std::vector<long> dims{1, static_cast<long>(n)};
    dims.reserve(static_cast<size_t>(kmax) + 1);

    auto fill_zeros = [&] {
        while (static_cast<int>(dims.size()) <= kmax) dims.push_back(0);
    };

    if (two_nnz) {
        // Every generator column is an edge or a mark; rank by union-find.
        for (int k = 2; k <= kmax; ++k) {
            const long total = ipow(n, k);
            TwoNnzRank uf(total);
            for (int pos = 1; pos <= k - 1; ++pos) {
                const long left = ipow(n, pos - 1);
                const long right = ipow(n, k - pos - 1);
                for (long a = 0; a < left; ++a)
                    for (int pair = 0; pair < n * n; ++pair)
                        for (long z = 0; z < right; ++z) {
                            const SparseVec& col = s_cols[static_cast<size_t>(pair)];
                            if (col.empty()) continue;
                            auto coord = [&](long rowpair) { return (a * n * n + rowpair) * right + z; };
                            if (col.size() == 1) {
                                uf.mark(coord(col[0].first));
                            } else {
                                uf.edge(coord(col[0].first), coord(col[1].first), col[0].second, col[1].second);
                            }
                        }
            }
            const long d = total - uf.rank();
            dims.push_back(d);
            if (d == 0) {
                fill_zeros();
                break;
            }
        }
        fill_zeros();
        return dims;
    }

    // General path: incremental echelon with J_k = J_{k-1} (x) V + I (x) S.
    Echelon basis;
    for (int c = 0; c < n * n; ++c)
        if (!s_cols[c].empty()) basis.insert(s_cols[c]);
    dims.push_back(static_cast<long>(n) * n - basis.size());
    for (int k = 3; k <= kmax && dims.back() != 0; ++k) {
        basis = basis.tensor_identity(n);
        const long left = ipow(n, k - 2);
        for (long a = 0; a < left; ++a)
            for (int pair = 0; pair < n * n; ++pair) {
                const SparseVec& col = s_cols[static_cast<size_t>(pair)];
                if (col.empty()) continue;
                SparseVec v;
                v.reserve(col.size());
                for (const auto& [r, x] : col) v.emplace_back(a * n * n + r, x);
                basis.insert(std::move(v));
            }
        dims.push_back(ipow(n, k) - basis.size());
    }
    fill_zeros();
    return dims;
}

namespace {

/// Solves the linear system for the denominator coefficients b_1..b_n of a
/// candidate (m, n) fit, requiring consistency with every coefficient. Returns
/// false if no unique solution exists.
bool try_fit(const std::vector<long>& d, int m, int n, std::vector<Scalar>& bcoef,
             std::vector<Scalar>& acoef) {
    const int kmaxi = static_cast<int>(d.size()) - 1;
    if (m + n > kmaxi) return false;
    // Equations sum_{j=0..min(k,n)} b_j d_{k-j} = 0 for k = m+1..kmax, b_0 = 1.
    const int neq = kmaxi - m;
    if (neq < n) return false;
    DenseMat sys(neq, n), rhs(neq, 1);
    for (int e = 0; e < neq; ++e) {
        const int k = m + 1 + e;
        rhs.at(e, 0) = Scalar(-d[static_cast<size_t>(k)]);
        for (int j = 1; j <= n; ++j)
            if (k - j >= 0) sys.at(e, j - 1) = Scalar(d[static_cast<size_t>(k - j)]);
    }
    // Echelon solve of an overdetermined system: reduce, check consistency and
    // full column rank.
    std::vector<std::vector<Scalar>> rows(static_cast<size_t>(neq), std::vector<Scalar>(static_cast<size_t>(n) + 1));
    for (int e = 0; e < neq; ++e) {
        for (int j = 0; j < n; ++j) rows[static_cast<size_t>(e)][static_cast<size_t>(j)] = sys.at(e, j);
        rows[static_cast<size_t>(e)][static_cast<size_t>(n)] = rhs.at(e, 0);
    }
    int row = 0;
    std::vector<int> pivot_of_col(static_cast<size_t>(n), -1);
    for (int c = 0; c < n && row < neq; ++c) {
        int p = -1;
        for (int r = row; r < neq; ++r)
            if (!rows[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) { p = r; break; }
        if (p < 0) continue;
        std::swap(rows[static_cast<size_t>(p)], rows[static_cast<size_t>(row)]);
        const Scalar inv = rows[static_cast<size_t>(row)][static_cast<size_t>(c)].inverse();
        for (int j = c; j <= n; ++j) rows[static_cast<size_t>(row)][static_cast<size_t>(j)] *= inv;
        for (int r = 0; r < neq; ++r) {
            if (r == row) continue;
            const Scalar f = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (f.is_zero()) continue;
            for (int j = c; j <= n; ++j)
                rows[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * rows[static_cast<size_t>(row)][static_cast<size_t>(j)];
        }
        pivot_of_col[static_cast<size_t>(c)] = row;
        ++row;
    }
    for (int r = row; r < neq; ++r)
        if (!rows[static_cast<size_t>(r)][static_cast<size_t>(n)].is_zero()) return false;  // inconsistent
    for (int c = 0; c < n; ++c)
        if (pivot_of_col[static_cast<size_t>(c)] < 0) return false;  // underdetermined
    bcoef.assign(static_cast<size_t>(n) + 1, Scalar(0));
    bcoef[0] = Scalar(1);
    for (int c = 0; c < n; ++c)
        bcoef[static_cast<size_t>(c) + 1] = rows[static_cast<size_t>(pivot_of_col[static_cast<size_t>(c)])][static_cast<size_t>(n)];
    acoef.assign(static_cast<size_t>(m) + 1, Scalar(0));
    for (int k = 0; k <= m; ++k) {
        Scalar a;
        for (int j = 0; j <= std::min(k, n); ++j) a += bcoef[static_cast<size_t>(j)] * Scalar(d[static_cast<size_t>(k - j)]);
        acoef[static_cast<size_t>(k)] = a;
    }
    // Exact degrees.
    if (acoef[static_cast<size_t>(m)].is_zero()) return false;
    if (n > 0 && bcoef[static_cast<size_t>(n)].is_zero()) return false;
    return true;
}

std::vector<Scalar> poly_mod(std::vector<Scalar> a, const std::vector<Scalar>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        if (a.back().is_zero()) {
            a.pop_back();
            continue;
        }
        const Scalar f = a.back() / b.back();
        const size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    return a;
}

bool coprime(std::vector<Scalar> a, std::vector<Scalar> b) {
    while (!b.empty()) {
        auto r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1;  // constant gcd
}

}  // namespace

SeriesFit birank_from_series(const std::vector<long>& dims) {
    if (dims.empty() || dims[0] != 1)
        throw std::invalid_argument("birank_from_series: dims[0] must be 1");
    const int kmaxi = static_cast<int>(dims.size()) - 1;
    SeriesFit first_unconfirmed;
    bool have_unconfirmed = false;
    // total degree capped at kmax-1: a candidate must predict at least one
    // coefficient, otherwise the degree-kmax truncation always "fits".
    for (int total = 0; total <= kmaxi - 1; ++total)
        for (int n = 0; n <= total; ++n) {
            const int m = total - n;
            std::vector<Scalar> bcoef, acoef;
            if (!try_fit(dims, m, n, bcoef, acoef)) continue;
            if (!coprime(acoef, bcoef)) continue;
            SeriesFit fit;
            fit.m = m;
            fit.n = n;
            fit.surplus = kmaxi - m - n;
            fit.status = fit.surplus >= 2 ? FitStatus::Confirmed : FitStatus::Inconclusive;
            if (fit.status == FitStatus::Confirmed) return fit;
            if (!have_unconfirmed) {
                first_unconfirmed = fit;
                have_unconfirmed = true;
            }
        }
    if (have_unconfirmed) return first_unconfirmed;
    return SeriesFit{};  // Inconsistent
}

const BiRank& birank_of(const Braiding& b) {
    if (b.birank_cache_) return *b.birank_cache_;
    for (int kmax = 4; kmax <= 8; ++kmax) {
        auto dims = lambda_dims(b, kmax);
        const SeriesFit fit = birank_from_series(dims);
        if (fit.status == FitStatus::Confirmed) {
            auto br = std::make_shared<BiRank>();
            br->m = fit.m;
            br->n = fit.n;
            br->dims = std::move(dims);
            br->kmax = kmax;
            b.birank_cache_ = std::move(br);
            return *b.birank_cache_;
        }
    }
    throw std::runtime_error("birank_of: series fit not confirmed at kmax = 8 for '" + b.name() + "'");
}

Scalar braiding_alpha(const Braiding& b) {
    const BiRank& br = birank_of(b);
    return b.q().pow(br.n - br.m) * q_int(br.m - br.n, b.q());
}

}  // namespace recenters
