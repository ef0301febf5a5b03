#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace anyonwalk {

using cplx = std::complex<double>;

enum class ModelKind { Ising, SU2k, AbelianPhase };

/// Scalar data of an SU(2)_k theory: quantum dimension d, Jones parameter q,
/// and the Kauffman bracket parameter A.  A is the fourth root of 1/q chosen
/// so that d = -A^2 - A^{-2} = 2 cos(pi/(k+2)) holds exactly.
struct ModelScalars {
    double d;
    cplx q;
    cplx A;
};

/// 2x2 / 4x4 complex matrices in row-major order.
using Mat2 = std::array<cplx, 4>;
using Mat4 = std::array<cplx, 16>;

/// The local braid matrices of the Ising / SU(2)_2 qubit representation.
struct LocalBraidMatrices {
    Mat2 R;  // edge generator, diagonal in the pair channel
    Mat2 B;  // middle generator acting on one fusion qubit
    Mat4 P;  // odd generator acting on two neighbouring qubits (diagonal)
    Mat2 F;  // recoupling matrix, real orthogonal and self-inverse
};

/// Recoupling and exchange data of the spin-1/2 SU(2)_k theory in the
/// sequential fusion basis.
struct Su2kData {
    ModelScalars scalars;
    Mat2 F;          // [[1/d, b],[b, -1/d]], b = sqrt(d^2-1)/d
    cplx r_vacuum;   // exchange eigenvalue, pair channel 0   (= -A^3)
    cplx r_spin1;    // exchange eigenvalue, pair channel 1   (= A^{-1})
    cplx tl_A;       // Temperley-Lieb parameter of the representation
};

/// An anyon model selection.  kind=SU2k carries the level; AbelianPhase the
/// exchange phase phi (one counterclockwise braid multiplies by e^{i phi/2}).
struct AnyonModel {
    ModelKind kind = ModelKind::Ising;
    int level = 2;
    double phase = 0.0;

    static AnyonModel ising();
    static AnyonModel su2k(int k);
    static AnyonModel abelian(double phi);

    bool is_abelian() const { return kind == ModelKind::AbelianPhase; }
    /// Effective level (2 for Ising).
    int k() const { return kind == ModelKind::Ising ? 2 : level; }
    /// Temperley-Lieb parameter of the braid representation.
    cplx tl_param() const;
    double quantum_dimension() const;
    std::string name() const;
};

/// Parse "ising", "su2k:<k>", "abelian:<phi>" (phi in radians) or "trivial"
/// (alias for abelian:0).  Throws std::invalid_argument on bad input.
AnyonModel parse_model(const std::string& spec);

ModelScalars quantum_scalars(int k);
LocalBraidMatrices ising_matrices();
LocalBraidMatrices su2_2_matrices();
Su2kData su2_k_data(int k);

/// Quantum integer [n] = sin(n pi / (k+2)) / sin(pi / (k+2)).
double quantum_integer(int k, int n);

}  // namespace anyonwalk
