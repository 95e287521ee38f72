#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recenters/birank.hpp"

using namespace recenters;

namespace {

/// Oracle: coefficients of (1+t)^m / (1-t)^n.
std::vector<long> super_series(int m, int n, int kmax) {
    std::vector<long> num(static_cast<size_t>(kmax) + 1, 0);
    num[0] = 1;
    for (int i = 0; i < m; ++i)
        for (int k = kmax; k >= 1; --k) num[static_cast<size_t>(k)] += num[static_cast<size_t>(k) - 1];
    // divide by (1-t)^n == multiply by sum of binomials
    for (int i = 0; i < n; ++i) {
        long acc = 0;
        for (int k = 0; k <= kmax; ++k) {
            acc += num[static_cast<size_t>(k)];
            num[static_cast<size_t>(k)] = acc;
        }
    }
    return num;
}

}  // namespace

TEST_CASE("lambda dims for the catalog") {
    CHECK(lambda_dims(make_flip(2), 4) == std::vector<long>{1, 2, 1, 0, 0});
    CHECK(lambda_dims(make_super_flip(1, 1), 4) == std::vector<long>{1, 2, 2, 2, 2});
    CHECK(lambda_dims(make_dj(2, Scalar(3, 2)), 4) == std::vector<long>{1, 2, 1, 0, 0});
    CHECK(lambda_dims(make_dj(3, Scalar(3, 2)), 5) == std::vector<long>{1, 3, 3, 1, 0, 0});
    CHECK(lambda_dims(make_super_flip(2, 1), 5) == std::vector<long>{1, 3, 4, 4, 4, 4});
    CHECK(lambda_dims(make_q_super(1, 1, Scalar(2)), 4) == std::vector<long>{1, 2, 2, 2, 2});
}

TEST_CASE("series fits") {
    SUBCASE("(1+t)^2") {
        const auto fit = birank_from_series({1, 2, 1, 0, 0});
        CHECK(fit.status == FitStatus::Confirmed);
        CHECK(fit.m == 2);
        CHECK(fit.n == 0);
    }
    SUBCASE("1 + Nt + t^2 for N = 5") {
        const auto fit = birank_from_series({1, 5, 1, 0, 0});
        CHECK(fit.status == FitStatus::Confirmed);
        CHECK(fit.m == 2);
        CHECK(fit.n == 0);
    }
    SUBCASE("(1+t)/(1-t)") {
        const auto fit = birank_from_series({1, 2, 2, 2, 2});
        CHECK(fit.status == FitStatus::Confirmed);
        CHECK(fit.m == 1);
        CHECK(fit.n == 1);
    }
    SUBCASE("inconclusive without surplus") {
        // (1+t)^3 truncated too early: fits but with < 2 confirming terms
        const auto fit = birank_from_series({1, 3, 3, 1, 0});
        CHECK(fit.status == FitStatus::Inconclusive);
        CHECK(fit.m == 3);
        CHECK(fit.n == 0);
    }
    SUBCASE("junk data is inconsistent") {
        // a nonzero entry after trailing zeros defeats every candidate that
        // predicts at least one coefficient
        const auto fit = birank_from_series({1, 2, 4, 9, 0, 0, 3});
        CHECK(fit.status == FitStatus::Inconsistent);
    }
}

TEST_CASE("bi-rank recovered for the catalog") {
    auto mn = [](const Braiding& b) {
        const BiRank& br = birank_of(b);
        return std::pair<int, int>{br.m, br.n};
    };
    CHECK(mn(make_flip(2)) == std::pair<int, int>{2, 0});
    CHECK(mn(make_flip(3)) == std::pair<int, int>{3, 0});
    CHECK(mn(make_dj(2, Scalar(2))) == std::pair<int, int>{2, 0});
    CHECK(mn(make_dj(3, Scalar(3, 2))) == std::pair<int, int>{3, 0});
    CHECK(mn(make_super_flip(1, 1)) == std::pair<int, int>{1, 1});
    CHECK(mn(make_super_flip(2, 1)) == std::pair<int, int>{2, 1});
    CHECK(mn(make_q_super(1, 1, Scalar(2))) == std::pair<int, int>{1, 1});
    CHECK(mn(make_q_super(2, 1, Scalar(2))) == std::pair<int, int>{2, 1});
}

TEST_CASE("super-flip bi-rank recovered for all m + n <= 4") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4 - m; ++n) {
            if (m + n < 1) continue;
            CAPTURE(m);
            CAPTURE(n);
            const Braiding b = make_super_flip(m, n);
            const BiRank& br = birank_of(b);
            CHECK(br.m == m);
            CHECK(br.n == n);
            // dims against the closed-form oracle
            const auto oracle = super_series(m, n, br.kmax);
            CHECK(br.dims == oracle);
        }
}

TEST_CASE("dims are non-negative and vanish above m for bi-rank (m|0)") {
    for (const auto& b : {make_flip(2), make_flip(3), make_dj(2, Scalar(2)), make_dj(3, Scalar(3, 2))}) {
        const BiRank& br = birank_of(b);
        REQUIRE(br.n == 0);
        for (size_t k = 0; k < br.dims.size(); ++k) {
            CHECK(br.dims[k] >= 0);
            if (static_cast<int>(k) > br.m) CHECK(br.dims[k] == 0);
        }
    }
}

TEST_CASE("alpha accessor matches Tr C") {
    for (const auto& b : {make_flip(3), make_dj(2, Scalar(2)), make_super_flip(2, 1),
                          make_q_super(1, 1, Scalar(3, 2))}) {
        CAPTURE(b.name());
        CHECK(braiding_alpha(b) == b.skew().c.trace());
    }
}

TEST_CASE("dense generator columns take the echelon path and agree") {
    // Conjugating the flip by G (x) G preserves the braid relation,
    // involutivity and the Poincare-Hilbert series but makes the ideal
    // generators dense, so the rank computation cannot use the two-nonzero
    // fast path.
    const int n = 2;
    DenseMat g(n, n), ginv(n, n);
    g.at(0, 0) = Scalar(1); g.at(0, 1) = Scalar(1); g.at(1, 1) = Scalar(1);
    ginv.at(0, 0) = Scalar(1); ginv.at(0, 1) = Scalar(-1); ginv.at(1, 1) = Scalar(1);
    DenseMat gg(n * n, n * n), gginv(n * n, n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    gg.at(a * n + b, c * n + d) = g.at(a, c) * g.at(b, d);
                    gginv.at(a * n + b, c * n + d) = ginv.at(a, c) * ginv.at(b, d);
                }
    const TensorOp r(2, n, gg * TensorOp::flip(n).mat() * gginv);
    const Braiding b = Braiding::create(r, BraidKind::Involutive, Scalar(1), "conj-flip:2");
    CHECK(lambda_dims(b, 4) == std::vector<long>{1, 2, 1, 0, 0});
    const BiRank& br = birank_of(b);
    CHECK(br.m == 2);
    CHECK(br.n == 0);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(lambda_dims(make_flip(2), 1), std::invalid_argument);
    CHECK_THROWS_AS(birank_from_series({2, 1}), std::invalid_argument);
}

TEST_CASE("union-find and echelon rank routes agree on the same input") {
    for (const auto& b : {make_flip(2), make_super_flip(1, 1), make_super_flip(2, 1),
                          make_dj(2, Scalar(2)), make_dj(3, Scalar(3, 2)),
                          make_q_super(1, 1, Scalar(2))}) {
        CAPTURE(b.name());
        const int kmax = b.dim() == 2 ? 5 : 4;
        CHECK(lambda_dims(b, kmax, false) == lambda_dims(b, kmax, true));
    }
}
