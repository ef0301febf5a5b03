#include "anyonwalk/models.hpp"

#include <cmath>
#include <stdexcept>

namespace anyonwalk {

namespace {
constexpr double kPi = 3.14159265358979323846;
const cplx kI{0.0, 1.0};

cplx polar1(double theta) { return {std::cos(theta), std::sin(theta)}; }
}  // namespace

AnyonModel AnyonModel::ising() { return AnyonModel{ModelKind::Ising, 2, 0.0}; }

AnyonModel AnyonModel::su2k(int k) {
    if (k < 1) throw std::invalid_argument("su2k level must be >= 1");
    return AnyonModel{ModelKind::SU2k, k, 0.0};
}

AnyonModel AnyonModel::abelian(double phi) {
    return AnyonModel{ModelKind::AbelianPhase, 1, phi};
}

cplx AnyonModel::tl_param() const {
    if (kind == ModelKind::Ising) {
        // -i e^{i pi/8}: reproduces the printed R, B, P matrices exactly.
        return -kI * polar1(kPi / 8.0);
    }
    return kI * polar1(-kPi / (2.0 * (level + 2)));
}

double AnyonModel::quantum_dimension() const {
    if (is_abelian()) return 1.0;
    return 2.0 * std::cos(kPi / (k() + 2));
}

std::string AnyonModel::name() const {
    switch (kind) {
        case ModelKind::Ising: return "ising";
        case ModelKind::SU2k: return "su2k:" + std::to_string(level);
        case ModelKind::AbelianPhase: return "abelian:" + std::to_string(phase);
    }
    return "?";
}

AnyonModel parse_model(const std::string& spec) {
    if (spec == "ising") return AnyonModel::ising();
    if (spec == "trivial") return AnyonModel::abelian(0.0);
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    if (head == "su2k") {
        if (colon == std::string::npos)
            throw std::invalid_argument("su2k needs a level, e.g. su2k:3");
        int k = std::stoi(spec.substr(colon + 1));
        return AnyonModel::su2k(k);
    }
    if (head == "abelian") {
        if (colon == std::string::npos)
            throw std::invalid_argument("abelian needs a phase, e.g. abelian:0.785");
        double phi = std::stod(spec.substr(colon + 1));
        return AnyonModel::abelian(phi);
    }
    throw std::invalid_argument("unknown model '" + spec + "'");
}

double quantum_integer(int k, int n) {
    if (n < 0) return 0.0;
    return std::sin(n * kPi / (k + 2)) / std::sin(kPi / (k + 2));
}

ModelScalars quantum_scalars(int k) {
    if (k < 1) throw std::invalid_argument("level must be >= 1");
    ModelScalars s;
    s.d = 2.0 * std::cos(kPi / (k + 2));
    s.q = polar1(2.0 * kPi / (k + 2));
    s.A = kI * polar1(-kPi / (2.0 * (k + 2)));
    return s;
}

LocalBraidMatrices ising_matrices() {
    LocalBraidMatrices m;
    const cplx e8 = polar1(-kPi / 8.0);
    m.R = {e8, 0.0, 0.0, e8 * kI};
    const double r2 = 1.0 / std::sqrt(2.0);
    const cplx p4 = polar1(kPi / 4.0);
    m.B = {e8 * r2 * p4, e8 * r2 * std::conj(p4),
           e8 * r2 * std::conj(p4), e8 * r2 * p4};
    m.P = {};
    m.P[0] = e8;
    m.P[5] = e8 * kI;
    m.P[10] = e8 * kI;
    m.P[15] = e8;
    m.F = {r2, r2, r2, -r2};
    return m;
}

LocalBraidMatrices su2_2_matrices() {
    // R -> i R*, B -> i B*, P -> i P*; F unchanged.
    LocalBraidMatrices m = ising_matrices();
    for (auto& x : m.R) x = kI * std::conj(x);
    for (auto& x : m.B) x = kI * std::conj(x);
    for (auto& x : m.P) x = kI * std::conj(x);
    return m;
}

Su2kData su2_k_data(int k) {
    if (k < 1) throw std::invalid_argument("level must be >= 1");
    Su2kData d;
    d.scalars = quantum_scalars(k);
    const double dim = d.scalars.d;
    const double beta = std::sqrt(dim * dim - 1.0) / dim;
    d.F = {cplx{1.0 / dim}, cplx{beta}, cplx{beta}, cplx{-1.0 / dim}};
    const cplx A = AnyonModel::su2k(k).tl_param();
    d.tl_A = A;
    d.r_vacuum = -A * A * A;
    d.r_spin1 = 1.0 / A;
    return d;
}

}  // namespace anyonwalk
