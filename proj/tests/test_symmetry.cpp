#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recenters/birank.hpp"
#include "recenters/symmetry.hpp"

#include <fstream>
#include <sstream>

using namespace recenters;

namespace {

std::vector<Braiding> catalog() {
    return {make_flip(2),
            make_flip(3),
            make_super_flip(1, 1),
            make_super_flip(2, 1),
            make_dj(2, Scalar(3, 2)),
            make_dj(2, Scalar(2)),
            make_dj(3, Scalar(3, 2)),
            make_q_super(1, 1, Scalar(2)),
            make_q_super(1, 1, Scalar(3, 2)),
            make_q_super(2, 1, Scalar(2))};
}

}  // namespace

TEST_CASE("braid residuals") {
    CHECK(check_braid(TensorOp::flip(2)).is_zero());
    CHECK(check_braid(TensorOp::flip(4)).is_zero());
    CHECK(check_braid(make_dj(2, Scalar(3, 2)).r()).is_zero());

    // negative control: perturb one entry of the flip
    TensorOp p = TensorOp::flip(2);
    p.at(0, 1) += Scalar(1);
    CHECK(!check_braid(p).is_zero());
}

TEST_CASE("kind residuals") {
    CHECK(check_kind(make_super_flip(1, 1).r(), BraidKind::Involutive, Scalar(1)).is_zero());
    CHECK(check_kind(make_dj(2, Scalar(3, 2)).r(), BraidKind::Hecke, Scalar(3, 2)).is_zero());
    CHECK(!check_kind(make_dj(2, Scalar(3, 2)).r(), BraidKind::Involutive, Scalar(1)).is_zero());
}

TEST_CASE("non-generic q rejected") {
    CHECK_THROWS_AS(make_dj(2, Scalar(1)), std::invalid_argument);
    CHECK_THROWS_AS(make_dj(2, Scalar(-1)), std::invalid_argument);
    CHECK_THROWS_AS(make_dj(2, Scalar(0)), std::invalid_argument);
    CHECK_NOTHROW(make_dj(2, Scalar(-2)));
}

TEST_CASE("skew inverse of the flip is the flip") {
    const SkewData s = skew_inverse(TensorOp::flip(2));
    CHECK(s.psi == TensorOp::flip(2));
    CHECK(s.b == TensorOp::identity(1, 2));
    CHECK(s.c == TensorOp::identity(1, 2));
}

TEST_CASE("DJ gl(2) at q = 2: B.C = q^{-4} I and Tr_R I = 5/8") {
    const Braiding b = make_dj(2, Scalar(2));
    const TensorOp bc = b.skew().b * b.skew().c;
    CHECK(bc == TensorOp::identity(1, 2).scaled(Scalar(1, 16)));
    CHECK(r_trace(b, DenseMat::identity(2)) == Scalar(5, 8));
}

TEST_CASE("super-flip (1|1): B.C = I, Tr_R I = 0, Psi = R") {
    const Braiding b = make_super_flip(1, 1);
    CHECK(b.skew().b * b.skew().c == TensorOp::identity(1, 2));
    CHECK(b.skew().psi == b.r());
    CHECK(r_trace(b, DenseMat::identity(2)).is_zero());
}

TEST_CASE("r_trace of the zero matrix vanishes") {
    const Braiding b = make_dj(2, Scalar(2));
    CHECK(r_trace(b, DenseMat(2, 2)).is_zero());
    CHECK(r_trace(b, NCMatrix(2, 2)).is_zero());
}

TEST_CASE("catalog symmetry suite") {
    for (const auto& b : catalog()) {
        CAPTURE(b.name());
        CHECK(check_braid(b.r()).is_zero());
        CHECK(check_kind(b.r(), b.kind(), b.q()).is_zero());

        // Tr_{R(2)} R_12 = I_1
        CHECK(partial_trace_weighted(b.r(), 2, b.skew().c) == TensorOp::identity(1, b.dim()));

        // Tr_{R(2)} (I x I) = q^{n-m}(m-n)_q I_1
        CHECK(partial_trace_weighted(TensorOp::identity(2, b.dim()), 2, b.skew().c) ==
              TensorOp::identity(1, b.dim()).scaled(b.skew().c.trace()));

        // Tr_R I = q^{n-m}(m-n)_q and B.C = q^{2(n-m)} I
        const BiRank& br = birank_of(b);
        const Scalar alpha = b.q().pow(br.n - br.m) * q_int(br.m - br.n, b.q());
        CHECK(r_trace(b, DenseMat::identity(b.dim())) == alpha);
        CHECK(b.skew().b * b.skew().c ==
              TensorOp::identity(1, b.dim()).scaled(b.q().pow(2L * (br.n - br.m))));

        // Hecke inverse closed form R^{-1} = R - (q - q^{-1}) I
        if (b.kind() == BraidKind::Hecke)
            CHECK(b.r_inverse() == b.r().plus_scalar_identity(-(b.q() - b.q().inverse())));
        else
            CHECK(b.r_inverse() == b.r());
    }
}

TEST_CASE("Ogievetsky free-entry residuals vanish") {
    for (const auto& b : {make_flip(2), make_dj(2, Scalar(2)), make_dj(3, Scalar(3, 2)),
                          make_q_super(1, 1, Scalar(2))}) {
        CAPTURE(b.name());
        const auto res = verify_ogievetsky(b);
        CHECK(res.zero());
    }
}

TEST_CASE("catalog names parse") {
    CHECK(make_by_name("flip:3").dim() == 3);
    CHECK(make_by_name("superflip:2|1").dim() == 3);
    CHECK(make_by_name("dj:2:3/2").q() == Scalar(3, 2));
    CHECK(make_by_name("qsuper:1|1:2").kind() == BraidKind::Hecke);
    CHECK_THROWS_AS(make_by_name("nope:1"), std::invalid_argument);
    CHECK_THROWS_AS(make_by_name("dj:2"), std::invalid_argument);
}

TEST_CASE("custom braiding file loads and validates") {
    const Braiding dj = make_dj(2, Scalar(3, 2));
    const std::string path = "test_custom_braiding.txt";
    {
        std::ofstream out(path);
        write_tensor_text(out, dj.r());
    }
    const Braiding loaded = braiding_from_file(path, BraidKind::Hecke, Scalar(3, 2));
    CHECK(loaded.r() == dj.r());
    CHECK_THROWS(braiding_from_file(path, BraidKind::Involutive, Scalar(1)));
    std::remove(path.c_str());
}

TEST_CASE("not skew-invertible reported") {
    // A braid solution that is not skew-invertible: rank-deficient diagonal
    // ("R = E_11 (x) E_11" satisfies the braid equation trivially).
    TensorOp r(2, 2);
    r.at(0, 0) = Scalar(1);
    CHECK(check_braid(r).is_zero());
    CHECK_THROWS_AS(skew_inverse(r), NotSkewInvertibleError);
}
