//! Exact rational and integer linear algebra.
//!
//! Everything in here works over arbitrary-precision integers and rationals;
//! there is no floating point anywhere in this module tree. Normal forms are
//! integer-matrix algorithms, so rational inputs are scaled by the LCM of
//! their denominators first and the scale is carried explicitly.

mod lattice;
mod matrix;
mod normal_form;

pub use lattice::{
    adapted_basis, dual_lattice, integer_kernel, saturated_basis, sublattice_index, ZLattice,
};
pub use matrix::{IntMatrix, RatMatrix};
pub use normal_form::{hermite_form, smith_form, HermiteForm, SmithDecomposition};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub type Int = BigInt;
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("shape mismatch: expected {expected}, got {found}")]
    ShapeMismatch { expected: String, found: String },
    #[error("columns are linearly dependent")]
    DependentColumns,
    #[error("lattice is not full rank in its ambient space ({rank} < {ambient})")]
    NotFullRank { rank: usize, ambient: usize },
    #[error("lattices span different subspaces")]
    RankMismatch,
    #[error("change of basis is not integral: not a sublattice")]
    NotASublattice,
    #[error("vector is not in the span of the lattice")]
    OutsideSpan,
    #[error("flag of subspaces is not increasing")]
    BadFlag,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRatError(pub String);

/// Rational `num/den` from machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Parses `p`, `-p`, `p/q` (surrounding whitespace allowed). The result is in
/// lowest terms with a positive denominator.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let err = || ParseRatError(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: Int = num.parse().map_err(|_| err())?;
    let den: Int = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rat::new(num, den))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rat(q: &Rat) -> String {
    q.to_string()
}

pub fn lcm_of_denominators<'a>(entries: impl IntoIterator<Item = &'a Rat>) -> Int {
    entries
        .into_iter()
        .fold(Int::one(), |acc, q| acc.lcm(q.denom()))
}

pub fn is_integral(q: &Rat) -> bool {
    q.is_integer()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot product of vectors of different length");
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

/// Row space basis in reduced echelon form of the given vectors.
pub fn span_basis(vectors: &[Vec<Rat>], dim: usize) -> Vec<Vec<Rat>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = RatMatrix::from_rows(vectors.to_vec(), dim);
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i)).collect()
}

pub fn rank_of(vectors: &[Vec<Rat>], dim: usize) -> usize {
    span_basis(vectors, dim).len()
}

/// Whether `v` lies in the rational span of `vectors`.
pub fn in_span(vectors: &[Vec<Rat>], v: &[Rat]) -> bool {
    let dim = v.len();
    let base = rank_of(vectors, dim);
    let mut with = vectors.to_vec();
    with.push(v.to_vec());
    rank_of(&with, dim) == base
}

/// Basis of `{x : <x, v> = 0 for all v in vectors}`.
pub fn annihilator(vectors: &[Vec<Rat>], dim: usize) -> Vec<Vec<Rat>> {
    if vectors.is_empty() {
        return (0..dim).map(|i| unit(dim, i)).collect();
    }
    RatMatrix::from_rows(vectors.to_vec(), dim).kernel_basis()
}

/// Basis of the intersection of two subspaces given by spanning sets.
pub fn intersect(a: &[Vec<Rat>], b: &[Vec<Rat>], dim: usize) -> Vec<Vec<Rat>> {
    let a = span_basis(a, dim);
    if a.is_empty() {
        return Vec::new();
    }
    let perp = annihilator(b, dim);
    if perp.is_empty() {
        return a;
    }
    // x = sum c_i a_i with <p, x> = 0 for every p in perp.
    let amat = RatMatrix::from_columns(&a, dim);
    let pmat = RatMatrix::from_rows(perp, dim);
    let coeffs = pmat.mul(&amat).kernel_basis();
    let out: Vec<Vec<Rat>> = coeffs.iter().map(|c| amat.mul_vec(c)).collect();
    span_basis(&out, dim)
}

pub fn unit(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = Rat::one();
    v
}

/// Scales a rational vector by the LCM of its denominators and returns the
/// integer vector.
pub fn clear_denominators(v: &[Rat]) -> Vec<Int> {
    let l = Rat::from_integer(lcm_of_denominators(v));
    v.iter().map(|q| (q * &l).to_integer()).collect()
}
