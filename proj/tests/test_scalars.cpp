#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recenters/param.hpp"
#include "recenters/scalar.hpp"

#include <random>
#include <set>

using namespace recenters;

namespace {

Scalar random_scalar(std::mt19937_64& rng) {
    const long num = static_cast<long>(rng() % 2001) - 1000;
    const long den = 1 + static_cast<long>(rng() % 1000);
    return Scalar(num, den);
}

}  // namespace

TEST_CASE("scalar arithmetic is exact and canonical") {
    CHECK(Scalar(2, 4).str() == "1/2");
    CHECK(Scalar(-2, -4).str() == "1/2");
    CHECK(Scalar(2, -4).str() == "-1/2");
    CHECK(Scalar(0, 7).str() == "0");
    CHECK(Scalar::parse("15/9").str() == "5/3");
    CHECK(Scalar::parse("-7") == Scalar(-7));
    CHECK_THROWS_AS(Scalar(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
    CHECK(Scalar(3, 7).inverse() == Scalar(7, 3));
    CHECK(Scalar(2, 3).pow(-2) == Scalar(9, 4));
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    }
}

TEST_CASE("q_int values and identity") {
    const Scalar q(3, 2);
    CHECK(q_int(1, q) == Scalar(1));
    CHECK(q_int(0, q) == Scalar(0));
    CHECK(q_int(2, Scalar(2)) == Scalar(5, 2));  // 2_q = q + q^{-1}
    CHECK(q_int(3, Scalar(1)) == Scalar(3));
    CHECK(q_int(-2, Scalar(2)) == -q_int(2, Scalar(2)));
    CHECK_THROWS_AS(q_int(2, Scalar(0)), std::invalid_argument);

    // k_q (q - q^{-1}) = q^k - q^{-k}
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Scalar qq = random_scalar(rng);
        if (qq.is_zero() || qq == Scalar(1) || qq == Scalar(-1)) continue;
        const long k = static_cast<long>(rng() % 11);
        CHECK(q_int(k, qq) * (qq - qq.inverse()) == qq.pow(k) - qq.pow(-k));
    }
}

TEST_CASE("sample_params determinism, forbidden set, seed divergence") {
    PointRegistry r1, r2;
    const auto a = sample_params(r1, 2, 99);
    const auto b = sample_params(r2, 2, 99);
    REQUIRE(a.size() == 2);
    CHECK(a[0].value == b[0].value);
    CHECK(a[1].value == b[1].value);
    CHECK(a[0].value != a[1].value);
    CHECK(a[0].id == 0);
    CHECK(a[1].id == 1);

    const auto c = sample_values(3, 123, {Scalar(0)});
    for (const auto& v : c) CHECK(!v.is_zero());

    // 100 seeds, no repeated point sets.
    std::set<std::string> seen;
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto vals = sample_values(2, s);
        seen.insert(vals[0].str() + "," + vals[1].str());
    }
    CHECK(seen.size() == 100);
}

TEST_CASE("registry keeps values distinct and ids stable") {
    PointRegistry reg;
    const auto p = reg.add(Scalar(5));
    const auto q = reg.add(Scalar(7, 2));
    const auto p2 = reg.add(Scalar(5));
    CHECK(p.id == 0);
    CHECK(q.id == 1);
    CHECK(p2.id == 0);
    CHECK(reg.size() == 2);
}
