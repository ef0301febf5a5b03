#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "anyonwalk/bracket.hpp"

using namespace anyonwalk;

TEST_CASE("writhe") {
    CHECK(writhe(BraidWord{{1, false}, {2, false}, {1, false}}) == 3);
    CHECK(writhe(BraidWord{{1, false}, {1, true}}) == 0);
    CHECK(writhe(BraidWord{{1, false}, {2, true}, {1, false}}) == 1);
}

TEST_CASE("bracket normalization") {
    cplx A = AnyonModel::su2k(3).tl_param();
    double d = AnyonModel::su2k(3).quantum_dimension();
    CHECK(std::abs(kauffman_bracket({}, 1, A) - 1.0) < 1e-14);  // unknot
    for (int n = 2; n <= 5; ++n)
        CHECK(std::abs(kauffman_bracket({}, n, A) - std::pow(d, n - 1)) < 1e-12);
}

TEST_CASE("hopf link bracket") {
    for (int k : {2, 3, 4}) {
        cplx A = AnyonModel::su2k(k).tl_param();
        cplx got = kauffman_bracket(BraidWord{{1, false}, {1, false}}, 2, A);
        cplx want = -std::pow(A, 4) - std::pow(A, -4);
        CHECK(std::abs(got - want) < 1e-12);
    }
}

TEST_CASE("reidemeister II invariance") {
    cplx A = AnyonModel::su2k(4).tl_param();
    BraidWord base{{1, false}, {2, true}, {1, false}};
    BraidWord padded{{1, false}, {2, false}, {2, true}, {2, true}, {1, false}};
    CHECK(std::abs(kauffman_bracket(base, 3, A) - kauffman_bracket(padded, 3, A)) < 1e-12);
}

TEST_CASE("jones consistency identity") {
    cplx A = AnyonModel::su2k(3).tl_param();
    BraidWord w{{1, false}, {2, false}, {1, false}};
    auto e = evaluate_link(w, 3, A);
    cplx recon = e.jones * std::pow(-A * A * A, e.writhe);
    CHECK(std::abs(recon - e.bracket) < 1e-12);
}

TEST_CASE("trace identity on structured words") {
    auto rep = verify_trace_identity({}, 3, AnyonModel::su2k(2));
    CHECK(std::abs(rep.fusion_side - 1.0) < 1e-12);
    CHECK(std::abs(rep.bracket_side - 1.0) < 1e-12);

    SUBCASE("hopf word at k=2") {
        auto r = verify_trace_identity(BraidWord{{1, false}, {1, false}}, 2,
                                       AnyonModel::su2k(2));
        CHECK(r.difference < 1e-12);
    }
    SUBCASE("ising model") {
        auto r = verify_trace_identity(BraidWord{{1, false}, {1, false}}, 2,
                                       AnyonModel::ising());
        CHECK(r.difference < 1e-12);
    }
}

TEST_CASE("trace identity on random words") {
    std::mt19937_64 rng(2024);
    for (int k : {2, 3, 4}) {
        AnyonModel model = AnyonModel::su2k(k);
        for (int trial = 0; trial < 15; ++trial) {
            int strands = 2 + static_cast<int>(rng() % 5);
            int len = static_cast<int>(rng() % 9);
            BraidWord w;
            for (int i = 0; i < len; ++i)
                w.push(1 + static_cast<int>(rng() % (strands - 1)), rng() % 2 == 0);
            auto r = verify_trace_identity(w, strands, model);
            CAPTURE(k);
            CAPTURE(strands);
            CAPTURE(len);
            CHECK(r.difference < 1e-9);
        }
    }
}

TEST_CASE("crossing cap") {
    BraidWord w;
    for (int i = 0; i < 30; ++i) w.push(1);
    CHECK_THROWS_AS(kauffman_bracket(w, 2, cplx{0, 1}), std::length_error);
}
