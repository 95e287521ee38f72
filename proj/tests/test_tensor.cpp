#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recenters/tensor.hpp"

#include <random>
#include <sstream>

using namespace recenters;

namespace {

TensorOp random_op(int legs, int dim, std::mt19937_64& rng) {
    TensorOp m(legs, dim);
    for (int r = 0; r < m.size(); ++r)
        for (int c = 0; c < m.size(); ++c)
            m.at(r, c) = Scalar(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
    return m;
}

/// Independent oracle for embeddings: act on each basis vector directly.
TensorOp embed_by_basis_action(const TensorOp& m, int pos, int total) {
    const int n = m.dim();
    const long size = [&] { long s = 1; for (int i = 0; i < total; ++i) s *= n; return s; }();
    TensorOp out(total, n);
    std::vector<int> digits(static_cast<size_t>(total));
    for (long col = 0; col < size; ++col) {
        long x = col;
        for (int i = total - 1; i >= 0; --i) { digits[static_cast<size_t>(i)] = static_cast<int>(x % n); x /= n; }
        const int pair_in = digits[static_cast<size_t>(pos - 1)] * n + digits[static_cast<size_t>(pos)];
        for (int pair_out = 0; pair_out < n * n; ++pair_out) {
            const Scalar& v = m.at(pair_out, pair_in);
            if (v.is_zero()) continue;
            auto d2 = digits;
            d2[static_cast<size_t>(pos - 1)] = pair_out / n;
            d2[static_cast<size_t>(pos)] = pair_out % n;
            long row = 0;
            for (int i = 0; i < total; ++i) row = row * n + d2[static_cast<size_t>(i)];
            out.at(static_cast<int>(row), static_cast<int>(col)) += v;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("embed_leg basics") {
    const TensorOp i2 = TensorOp::identity(2, 2);
    CHECK(embed_leg(i2, 1, 3) == TensorOp::identity(3, 2));

    // embed(M,1,3) is M (x) I as a matrix
    std::mt19937_64 rng(1);
    const TensorOp m = random_op(2, 2, rng);
    const TensorOp e = embed_leg(m, 1, 3);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int s = 0; s < 2; ++s)
                for (int t = 0; t < 2; ++t)
                    CHECK(e.at(i * 2 + s, j * 2 + t) == (s == t ? m.at(i, j) : Scalar(0)));

    // P at legs (2,3) of three: oracle by basis-vector images
    const TensorOp p = TensorOp::flip(2);
    CHECK(embed_leg(p, 2, 3) == embed_by_basis_action(p, 2, 3));
    CHECK_THROWS_AS(embed_leg(p, 3, 3), std::invalid_argument);
}

TEST_CASE("embed_leg respects composition and matches the basis-action oracle") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 5; ++rep) {
        const TensorOp a = random_op(2, 2, rng);
        const TensorOp b = random_op(2, 2, rng);
        for (int pos = 1; pos <= 2; ++pos) {
            CHECK(embed_leg(a * b, pos, 3) == embed_leg(a, pos, 3) * embed_leg(b, pos, 3));
            CHECK(embed_leg(a, pos, 3) == embed_by_basis_action(a, pos, 3));
        }
    }
}

TEST_CASE("partial traces") {
    const int n = 2;
    const TensorOp i1 = TensorOp::identity(1, n);
    const TensorOp i22 = TensorOp::identity(2, n);
    CHECK(partial_trace_weighted(i22, 2, i1) == i1.scaled(Scalar(n)));

    // Tr_(1) Tr_(2) M = full trace
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 5; ++rep) {
        const TensorOp m = random_op(2, n, rng);
        const TensorOp t2 = partial_trace(m, 2);
        REQUIRE(t2.legs() == 1);
        Scalar full;
        for (int i = 0; i < m.size(); ++i) full += m.at(i, i);
        CHECK(t2.trace() == full);
        CHECK(partial_trace(m, 1).trace() == full);
    }

    // weighted trace equals Tr((I x W) M) on the traced leg
    const TensorOp m = random_op(2, n, rng);
    TensorOp w(1, n);
    w.at(0, 0) = Scalar(1, 2);
    w.at(0, 1) = Scalar(3);
    w.at(1, 1) = Scalar(-2, 5);
    const TensorOp got = partial_trace_weighted(m, 2, w);
    TensorOp ref(1, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar acc;
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) acc += w.at(s, t) * m.at(i * n + t, j * n + s);
            ref.at(i, j) = acc;
        }
    CHECK(got == ref);
}

TEST_CASE("partial transpose") {
    const TensorOp p = TensorOp::flip(2);
    CHECK(partial_transpose(partial_transpose(p, 1), 1) == p);
    CHECK(partial_transpose(TensorOp::identity(2, 2), 1) == TensorOp::identity(2, 2));
    // (P^{t1})[(i,k),(j,l)] = delta_{ik} delta_{jl}
    const TensorOp pt = partial_transpose(p, 1);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int j = 0; j < 2; ++j)
                for (int l = 0; l < 2; ++l)
                    CHECK(pt.at(i * 2 + k, j * 2 + l) == ((i == k && j == l) ? Scalar(1) : Scalar(0)));

    std::mt19937_64 rng(3);
    const TensorOp m = random_op(2, 3, rng);
    CHECK(partial_transpose(partial_transpose(m, 2), 2) == m);
}

TEST_CASE("text format round-trips") {
    std::mt19937_64 rng(17);
    const TensorOp m = random_op(2, 2, rng);
    std::ostringstream os;
    write_tensor_text(os, m);
    std::istringstream is(os.str());
    CHECK(read_tensor_text(is) == m);

    std::istringstream bad("M 2 LEGS 2 1 0");
    CHECK_THROWS_AS(read_tensor_text(bad), std::invalid_argument);
    std::istringstream short_input("N 2 LEGS 1 1 0 0");
    CHECK_THROWS_AS(read_tensor_text(short_input), std::invalid_argument);
}
