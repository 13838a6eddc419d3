#pragma once

#include <memory>

#include "equitel/ueb.hpp"

namespace equitel {

// The worked spin-1/2 example: a cyclic frame group of order 3 acting by
// diag(1, e^{2pi i/3}), a tetrahedrally-shaped equivariant basis, the shared
// state (1 (x) X)|eta| and the arrows message set permuted as (0)(1 2 3).
struct CyclicArrowsExample {
    std::shared_ptr<const FiniteGroup> group;  // order 3, generator "a"
    Representation rho;                        // diag(1, w)
    std::vector<ComplexMatrix> ueb_matrices;   // 4 elements
    EquivariantUEB eueb;
    ComplexMatrix twist;                       // Pauli X
    std::vector<Vec3> arrows;                  // tetrahedron vertices v0..v3
    GSet arrow_action;                         // left action of the group on indices
};

CyclicArrowsExample cyclic_arrows_example();

// One verified equivariant UEB fixture per classification row that admits
// solutions. Rows whose rotation image does not lift to a genuine 2-dim
// representation of the image group itself (D2, D4, tetrahedral, octahedral)
// are realized through a finite matrix group covering the image.
struct CatalogUebEntry {
    std::string image_class;  // trivial, Z2, Z3, Z4, D2, D3, D4, tetrahedral, octahedral
    std::string label;
    std::shared_ptr<const FiniteGroup> group;
    Representation rep;
    EquivariantUEB eueb;
};

std::vector<CatalogUebEntry> catalog_uebs();

// Matrix groups covering the exceptional rotation images.
MatrixGroup quaternion_unit_group();   // order 8,  Bloch image D2
MatrixGroup binary_dihedral_16();      // order 16, Bloch image D4
MatrixGroup binary_tetrahedral();      // order 24, Bloch image A4
MatrixGroup binary_octahedral();       // order 48, Bloch image S4
MatrixGroup dihedral_spin_rep(int n);  // order 2n (n in {1,2,3}), genuine D_n image

}  // namespace equitel
