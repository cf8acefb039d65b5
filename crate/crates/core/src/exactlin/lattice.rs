use std::fmt;

use num_traits::One;

use super::{
    annihilator, clear_denominators, hermite_form, smith_form, Int, IntMatrix,
    LinAlgError, Rat, RatMatrix,
};

/// A discrete subgroup of `Q^d` given by a rational basis (the columns of
/// `basis`). Equality is lattice equality, decided on the canonical basis.
#[derive(Clone)]
pub struct ZLattice {
    basis: RatMatrix,
    canonical: RatMatrix,
}

impl ZLattice {
    /// Lattice spanned by the columns of `basis`, which must be independent.
    pub fn new(basis: RatMatrix) -> Result<Self, LinAlgError> {
        if basis.rank() != basis.cols() {
            return Err(LinAlgError::DependentColumns);
        }
        let canonical = canonical_columns(&basis);
        Ok(ZLattice { basis, canonical })
    }

    pub fn from_columns(columns: &[Vec<Rat>], ambient: usize) -> Result<Self, LinAlgError> {
        Self::new(RatMatrix::from_columns(columns, ambient))
    }

    /// Lattice generated by the columns of `generators`, which may be
    /// dependent. The stored basis is the canonical one.
    pub fn from_generators(generators: &RatMatrix) -> Self {
        let canonical = canonical_columns(generators);
        ZLattice { basis: canonical.clone(), canonical }
    }

    /// `Z^n` with the standard basis.
    pub fn standard(n: usize) -> Self {
        Self::new(RatMatrix::identity(n)).expect("identity has independent columns")
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows()
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ambient()
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        self.basis.columns()
    }

    /// Column Hermite form of the basis: the canonical witness of the lattice.
    pub fn canonical_basis(&self) -> &RatMatrix {
        &self.canonical
    }

    /// Coordinates of `v` in the stored basis, if `v` is in the rational span.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let rhs = RatMatrix::from_columns(&[v.to_vec()], self.ambient());
        self.basis.solve(&rhs).map(|x| x.column(0))
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.coordinates(v).is_some_and(|c| c.iter().all(|q| q.is_integer()))
    }

    /// Point with the given integer coordinates.
    pub fn point(&self, coords: &[Int]) -> Vec<Rat> {
        let c: Vec<Rat> = coords.iter().map(|x| Rat::from_integer(x.clone())).collect();
        self.basis.mul_vec(&c)
    }
}

impl PartialEq for ZLattice {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for ZLattice {}

impl fmt::Debug for ZLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZLattice(basis columns of {})", self.basis)
    }
}

/// The canonical basis is the transpose of the row Hermite form of the
/// (scaled) transposed generator matrix. The Hermite conditions are invariant
/// under positive scaling, so the result does not depend on the scale.
fn canonical_columns(generators: &RatMatrix) -> RatMatrix {
    let (scale, ints) = generators.scaled_to_int();
    let hf = hermite_form(&ints.transpose());
    let keep: Vec<usize> = (0..hf.rank()).collect();
    let all: Vec<usize> = (0..ints.rows()).collect();
    let rows = hf.h.select(&keep, &all);
    let inv = Rat::new(Int::one(), scale);
    rows.transpose().to_rat().scale(&inv)
}

/// Index `[big : small]`, the product of the elementary divisors of the
/// change-of-basis matrix from `big` to `small`.
pub fn sublattice_index(big: &ZLattice, small: &ZLattice) -> Result<Int, LinAlgError> {
    let change = change_of_basis(big, small)?;
    let ints = change.to_int().ok_or(LinAlgError::NotASublattice)?;
    let product = smith_form(&ints)
        .diagonal()
        .into_iter()
        .fold(Int::one(), |acc, d| acc * d);
    Ok(product)
}

/// Matrix `C` with `big.basis * C = small.basis`.
fn change_of_basis(big: &ZLattice, small: &ZLattice) -> Result<RatMatrix, LinAlgError> {
    if big.ambient() != small.ambient() {
        return Err(LinAlgError::ShapeMismatch {
            expected: format!("ambient dimension {}", big.ambient()),
            found: format!("ambient dimension {}", small.ambient()),
        });
    }
    if big.rank() != small.rank() {
        return Err(LinAlgError::RankMismatch);
    }
    big.basis.solve(&small.basis).ok_or(LinAlgError::RankMismatch)
}

/// `{f : <f, v> in Z for all v in L}`; its basis is the inverse transpose of
/// the basis of `L`.
pub fn dual_lattice(lattice: &ZLattice) -> Result<ZLattice, LinAlgError> {
    if !lattice.is_full_rank() {
        return Err(LinAlgError::NotFullRank { rank: lattice.rank(), ambient: lattice.ambient() });
    }
    let inv = lattice.basis.inverse().expect("full-rank square basis is invertible");
    ZLattice::new(inv.transpose())
}

/// ℤ-basis (columns) of `{x in Z^k : K x = 0}`.
pub fn integer_kernel(k: &IntMatrix) -> IntMatrix {
    let hf = hermite_form(&k.transpose());
    let n = k.cols();
    let kernel_rows: Vec<usize> = (hf.rank()..n).collect();
    let all: Vec<usize> = (0..n).collect();
    hf.u.select(&kernel_rows, &all).transpose()
}

/// ℤ-basis of `Z^k ∩ W`, where `W` is the rational span of `vectors`. The
/// result is saturated: it extends to a basis of `Z^k`.
pub fn saturated_basis(vectors: &[Vec<Rat>], k: usize) -> IntMatrix {
    let perp = annihilator(vectors, k);
    let rows: Vec<Vec<Int>> = perp.iter().map(|v| clear_denominators(v)).collect();
    let constraints = IntMatrix::from_rows(rows, k);
    integer_kernel(&constraints)
}

/// A ℤ-basis of `lattice` adapted to a flag of rational subspaces.
///
/// `flag[i]` spans `W_i` (ambient coordinates) with `W_0 ⊆ W_1 ⊆ ...`. Returns
/// the basis as columns together with `dims[i]`: the first `dims[i]` columns
/// are a ℤ-basis of `lattice ∩ W_i`. The whole space is appended to the flag
/// when the last entry is smaller.
pub fn adapted_basis(
    lattice: &ZLattice,
    flag: &[Vec<Vec<Rat>>],
) -> Result<(RatMatrix, Vec<usize>), LinAlgError> {
    let k = lattice.rank();
    // work in lattice coordinates
    let mut coordinate_flag = Vec::with_capacity(flag.len() + 1);
    for w in flag {
        let mut coords = Vec::with_capacity(w.len());
        for v in w {
            coords.push(lattice.coordinates(v).ok_or(LinAlgError::OutsideSpan)?);
        }
        coordinate_flag.push(coords);
    }
    coordinate_flag.push((0..k).map(|i| super::unit(k, i)).collect());

    let mut chosen = IntMatrix::zeros(k, 0);
    let mut dims = Vec::with_capacity(flag.len());
    for (idx, w) in coordinate_flag.iter().enumerate() {
        let sat = saturated_basis(w, k);
        let ratsat = sat.to_rat();
        let r = chosen.cols();
        if sat.cols() < r {
            return Err(LinAlgError::BadFlag);
        }
        let next = if r == 0 {
            sat
        } else {
            // coordinates of the chosen vectors in the saturated basis
            let q = ratsat.solve(&chosen.to_rat()).ok_or(LinAlgError::BadFlag)?;
            let q = q.to_int().ok_or(LinAlgError::BadFlag)?;
            let hf = hermite_form(&q);
            let top: Vec<usize> = (0..r).collect();
            let cols_r: Vec<usize> = (0..r).collect();
            if hf.rank() != r || hf.h.select(&top, &cols_r) != IntMatrix::identity(r) {
                return Err(LinAlgError::BadFlag);
            }
            let completion = hf.u.unimodular_inverse().expect("hermite transform is unimodular");
            sat.mul(&completion)
        };
        chosen = next;
        if idx < flag.len() {
            dims.push(chosen.cols());
        }
    }
    let basis = lattice.basis().mul(&chosen.to_rat());
    Ok((basis, dims))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, rat};

    fn lat(rows: &[&[i64]]) -> ZLattice {
        ZLattice::new(RatMatrix::from_i64_rows(rows)).unwrap()
    }

    #[test]
    fn index_examples() {
        let z2 = ZLattice::standard(2);
        assert_eq!(sublattice_index(&z2, &z2).unwrap(), Int::from(1));
        assert_eq!(sublattice_index(&z2, &lat(&[&[0, 2], &[-2, 0]])).unwrap(), Int::from(4));
        assert_eq!(sublattice_index(&z2, &lat(&[&[6, 0], &[0, 3]])).unwrap(), Int::from(18));
    }

    #[test]
    fn index_errors() {
        let small = lat(&[&[2, 0], &[0, 1]]);
        let z2 = ZLattice::standard(2);
        assert_eq!(sublattice_index(&small, &z2), Err(LinAlgError::NotASublattice));

        let line = ZLattice::from_columns(&[vec![int(1), int(0)]], 2).unwrap();
        assert_eq!(sublattice_index(&z2, &line), Err(LinAlgError::RankMismatch));
        let other_line = ZLattice::from_columns(&[vec![int(0), int(1)]], 2).unwrap();
        assert_eq!(sublattice_index(&line, &other_line), Err(LinAlgError::RankMismatch));
    }

    #[test]
    fn dual_examples() {
        let id = ZLattice::standard(3);
        assert_eq!(dual_lattice(&id).unwrap(), id);

        let fil = ZLattice::new(RatMatrix::from_i64_rows(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 6],
        ]))
        .unwrap();
        let dual = dual_lattice(&fil).unwrap();
        let mut want = RatMatrix::identity(4);
        want.set(3, 3, rat(1, 6));
        assert_eq!(dual.basis(), &want);

        let mut heis = RatMatrix::identity(3);
        heis.set(2, 2, rat(1, 2));
        let dual = dual_lattice(&ZLattice::new(heis).unwrap()).unwrap();
        let mut want = RatMatrix::identity(3);
        want.set(2, 2, int(2));
        assert_eq!(dual.basis(), &want);
    }

    #[test]
    fn dual_requires_full_rank() {
        let line = ZLattice::from_columns(&[vec![int(1), int(1)]], 2).unwrap();
        assert!(matches!(dual_lattice(&line), Err(LinAlgError::NotFullRank { rank: 1, ambient: 2 })));
    }

    #[test]
    fn equality_is_basis_independent() {
        let a = lat(&[&[1, 0], &[0, 2]]);
        let b = lat(&[&[1, 1], &[0, 2]]);
        let c = lat(&[&[1, 1], &[2, 4]]);
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_ne!(a, lat(&[&[1, 0], &[0, 3]]));
    }

    #[test]
    fn generators_may_be_dependent() {
        let g = RatMatrix::from_i64_rows(&[&[2, 3, 5], &[0, 0, 0]]);
        let l = ZLattice::from_generators(&g);
        assert_eq!(l.rank(), 1);
        assert!(l.contains(&[int(1), int(0)]));
    }

    #[test]
    fn membership() {
        let mut heis = RatMatrix::identity(3);
        heis.set(2, 2, rat(1, 2));
        let l = ZLattice::new(heis).unwrap();
        assert!(l.contains(&[int(1), int(1), rat(1, 2)]));
        assert!(!l.contains(&[int(1), int(1), rat(1, 4)]));
    }

    #[test]
    fn saturation_and_kernel() {
        // x + y + z = 0 inside Z^3
        let k = IntMatrix::from_i64_rows(&[&[1, 1, 1]]);
        let ker = integer_kernel(&k);
        assert_eq!(ker.cols(), 2);
        assert!(k.mul(&ker).is_zero());

        // span{(2, 4)} ∩ Z^2 = Z (1, 2)
        let sat = saturated_basis(&[vec![int(2), int(4)]], 2);
        assert_eq!(sat.cols(), 1);
        let c = sat.column(0);
        assert!(c == vec![Int::from(1), Int::from(2)] || c == vec![Int::from(-1), Int::from(-2)]);
    }

    #[test]
    fn adapted_basis_respects_flag() {
        let mut heis = RatMatrix::identity(3);
        heis.set(2, 2, rat(1, 2));
        let l = ZLattice::new(heis).unwrap();
        let flag = vec![vec![vec![int(0), int(0), int(1)]]];
        let (basis, dims) = adapted_basis(&l, &flag).unwrap();
        assert_eq!(dims, vec![1]);
        let first = basis.column(0);
        assert!(first == vec![int(0), int(0), rat(1, 2)] || first == vec![int(0), int(0), rat(-1, 2)]);
        assert_eq!(ZLattice::new(basis).unwrap(), l);
    }
}
