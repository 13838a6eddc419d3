#pragma once

#include <optional>

#include "equitel/oeb.hpp"

namespace equitel {

// n^2 unitaries pairwise orthogonal in the trace inner product:
// Tr(U_i^dag U_j) = n delta_ij.
struct UEB {
    std::size_t dim = 0;
    std::vector<ComplexMatrix> elements;
};

UEB verify_ueb(const std::vector<ComplexMatrix>& matrices);

// UEB whose elements are permuted up to phases by right conjugation:
// xi(i,g) rho(g)^dag U_i rho(g) = U_{tau(i,g)}. The representation's group
// must outlive this object.
struct EquivariantUEB {
    UEB ueb;
    Representation rep;
    GSet tau;                           // right action on {0..n^2-1}
    std::vector<std::vector<cxd>> xi;   // xi[i][g]
};

// Discovers tau and xi: for each (i,g) the conjugate must overlap exactly one
// basis element with |Tr| = n (everything else is forced to ~0 by
// orthogonality). Throws VerificationError when equivariance fails.
EquivariantUEB verify_equivariant(const UEB& ueb, const Representation& rho);

// Phase-1 lift of an equivariant rotation basis along a representation of the
// same group whose Bloch image matches element-wise. The lifted basis's index
// action equals the rotation basis's.
EquivariantUEB lift_oeb(const EquivariantOEB& oeb, const Representation& rho);

// True iff every conjugation orbit is a fixed point, i.e. the classical leg
// could run over a channel with trivial action.
bool speakable_only_possible(const EquivariantUEB& eueb);

// Circulant matrix with first column (a, b, ..., b), |a| as given, alpha = 1,
// beta solved from Re(alpha* beta) = (2-n)/2 |b|/|a| with the chosen sign of
// Im(beta). Returns nullopt iff |a| lies outside [(n-2)/n, 1].
std::optional<ComplexMatrix> circulant_unitary(std::size_t n, double abs_a, int sign = +1);

// Unimodular-entry matrix with H H^dag = n that commutes with every n x n
// permutation matrix. Exists exactly for n <= 4; throws RefusalError above.
ComplexMatrix commuting_hadamard(std::size_t n);

// Equivariant UEB for a permutation representation from a commuting Hadamard:
// U_{ij} = (1/n) H diag(H,j)^dag H^dag diag(H^T,i), where diag(M,k) is the
// diagonal matrix holding row k of M.
EquivariantUEB hadamard_ueb(const Representation& perm_rep, const ComplexMatrix& h);

}  // namespace equitel
