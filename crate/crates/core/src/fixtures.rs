//! Built-in algebras and lattices used by the CLI fixtures and the tests.

use crate::exactlin::{int, rat, RatMatrix, ZLattice};
use crate::nilpotent::{Bracket, DualElement, LieAlgebra};

/// Three-dimensional Heisenberg algebra, `[X1, X2] = X3`.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::with_default_names(3, [Bracket::new(0, 1, vec![(2, int(1))])])
        .expect("Heisenberg relations are valid")
}

/// Lattice `Z X1 ⊕ Z X2 ⊕ Z (X3 / 2)`.
pub fn heisenberg_lattice() -> ZLattice {
    let mut b = RatMatrix::identity(3);
    b.set(2, 2, rat(1, 2));
    ZLattice::new(b).expect("diagonal basis")
}

/// Generic four-dimensional filiform algebra, `[X4, X2] = X1`, `[X4, X3] = X2`.
pub fn filiform4() -> LieAlgebra {
    LieAlgebra::with_default_names(
        4,
        [Bracket::new(3, 1, vec![(0, int(1))]), Bracket::new(3, 2, vec![(1, int(1))])],
    )
    .expect("filiform relations are valid")
}

/// Lattice `Z X1 ⊕ Z X2 ⊕ Z X3 ⊕ 6Z X4`.
pub fn filiform4_lattice() -> ZLattice {
    let mut b = RatMatrix::identity(4);
    b.set(3, 3, int(6));
    ZLattice::new(b).expect("diagonal basis")
}

/// The functional `X1*` on the filiform algebra.
pub fn filiform4_functional() -> DualElement {
    DualElement::basis(4, 0)
}

pub fn abelian2() -> LieAlgebra {
    LieAlgebra::abelian(2)
}
