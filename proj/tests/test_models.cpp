#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "anyonwalk/models.hpp"

using namespace anyonwalk;

namespace {
constexpr double kPi = 3.14159265358979323846;
cplx expi(double t) { return {std::cos(t), std::sin(t)}; }

double mat_err2(const Mat2& a, const Mat2& b) {
    double e = 0;
    for (int i = 0; i < 4; ++i) e = std::max(e, std::abs(a[i] - b[i]));
    return e;
}
}  // namespace

TEST_CASE("ising matrices match the printed values") {
    auto m = ising_matrices();
    CHECK(std::abs(m.R[0] - expi(-kPi / 8)) < 1e-15);
    CHECK(std::abs(m.R[3] - cplx{0, 1} * expi(-kPi / 8)) < 1e-15);
    CHECK(std::abs(m.R[1]) == 0.0);
    // P = e^{-i pi/8} diag(1, i, i, 1): index 1 of the two-qubit basis
    CHECK(std::abs(m.P[5] - cplx{0, 1} * expi(-kPi / 8)) < 1e-15);
    CHECK(std::abs(m.P[0] - expi(-kPi / 8)) < 1e-15);
    // B unitary
    cplx bb00 = m.B[0] * std::conj(m.B[0]) + m.B[1] * std::conj(m.B[1]);
    cplx bb01 = m.B[0] * std::conj(m.B[2]) + m.B[1] * std::conj(m.B[3]);
    CHECK(std::abs(bb00 - 1.0) < 1e-12);
    CHECK(std::abs(bb01) < 1e-12);
}

TEST_CASE("su2_2 matrices are i times the conjugate of the ising ones") {
    auto ising = ising_matrices();
    auto su22 = su2_2_matrices();
    CHECK(std::abs(su22.R[0] - cplx{0, 1} * expi(kPi / 8)) < 1e-15);
    CHECK(std::abs(su22.R[3] - expi(kPi / 8)) < 1e-15);
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(su22.R[i] - cplx{0, 1} * std::conj(ising.R[i])) < 1e-15);
        CHECK(std::abs(su22.B[i] - cplx{0, 1} * std::conj(ising.B[i])) < 1e-15);
    }
    for (int i = 0; i < 16; ++i)
        CHECK(std::abs(su22.P[i] - cplx{0, 1} * std::conj(ising.P[i])) < 1e-15);
    CHECK(mat_err2(su22.F, ising.F) == 0.0);
}

TEST_CASE("quantum scalars") {
    auto s2 = quantum_scalars(2);
    CHECK(std::abs(s2.q - cplx{0, 1}) < 1e-15);
    CHECK(s2.d == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    // branch of the fourth root that satisfies the d identity
    CHECK(std::abs(s2.A - cplx{0, 1} * expi(-kPi / 8)) < 1e-15);
    CHECK(std::abs(std::pow(s2.A, -4) - s2.q) < 1e-14);

    SUBCASE("d identity for k in 1..64") {
        for (int k = 1; k <= 64; ++k) {
            auto s = quantum_scalars(k);
            cplx lhs = -s.A * s.A - 1.0 / (s.A * s.A);
            CHECK(std::abs(lhs - s.d) < 1e-12);
        }
    }
    SUBCASE("large k limit") {
        CHECK(std::abs(quantum_scalars(1000).d - 2.0) < 1e-5);
    }
}

TEST_CASE("su2_k_data") {
    CHECK(su2_k_data(2).scalars.d == doctest::Approx(std::sqrt(2.0)));
    CHECK(su2_k_data(1).scalars.d == doctest::Approx(1.0));
    CHECK_THROWS(su2_k_data(0));

    SUBCASE("F self-inverse for every k") {
        for (int k = 1; k <= 32; ++k) {
            auto d = su2_k_data(k);
            // F*F = 1
            cplx f00 = d.F[0] * d.F[0] + d.F[1] * d.F[2];
            cplx f01 = d.F[0] * d.F[1] + d.F[1] * d.F[3];
            CHECK(std::abs(f00 - 1.0) < 1e-12);
            CHECK(std::abs(f01) < 1e-12);
        }
    }
    SUBCASE("exchange eigenvalues at k=2 reproduce su2_2 up to one global phase") {
        auto d = su2_k_data(2);
        auto su22 = su2_2_matrices();
        cplx phase = su22.R[0] / d.r_vacuum;
        CHECK(std::abs(std::abs(phase) - 1.0) < 1e-12);
        CHECK(std::abs(su22.R[3] / d.r_spin1 - phase) < 1e-12);
    }
}

TEST_CASE("model parsing") {
    CHECK(parse_model("ising").kind == ModelKind::Ising);
    CHECK(parse_model("su2k:5").level == 5);
    CHECK(parse_model("abelian:1.5").phase == doctest::Approx(1.5));
    CHECK(parse_model("trivial").is_abelian());
    CHECK_THROWS(parse_model("su2k:0"));
    CHECK_THROWS(parse_model("nope"));
    CHECK_THROWS(parse_model("su2k"));
}
