//! Nilpotent Lie algebras given by rational structure constants.
//!
//! Group elements of the simply connected group are stored in exponential
//! coordinates only; products go through the Baker-Campbell-Hausdorff series,
//! which is finite on a nilpotent algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::{dot, span_basis, Rat, RatMatrix};

/// Largest nilpotency step handled by [`LieAlgebra::bch`]: Dynkin terms are
/// hardcoded through total bracket degree 5.
pub const MAX_BCH_STEP: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebra must have positive dimension")]
    Empty,
    #[error("expected {expected} coordinate names, got {found}")]
    NameCount { expected: usize, found: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket [X{}, X{}] must vanish", .0 + 1, .0 + 1)]
    DiagonalBracket(usize),
    #[error("bracket [X{}, X{}] given more than once", .0 + 1, .1 + 1)]
    DuplicateBracket(usize, usize),
    #[error("Jacobi identity fails on (X{}, X{}, X{})", .i + 1, .j + 1, .k + 1)]
    JacobiViolation { i: usize, j: usize, k: usize },
    #[error("not nilpotent: lower central series stabilizes at a term of dimension {}", .stable_term.len())]
    NotNilpotent { stable_term: Vec<AlgebraElement> },
    #[error("nilpotency step {step} exceeds the supported maximum {max}")]
    StepTooLarge { step: usize, max: usize },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

macro_rules! coordinate_vector {
    ($name:ident) => {
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(Vec<Rat>);

        impl $name {
            pub fn new(coords: Vec<Rat>) -> Self {
                $name(coords)
            }

            pub fn zero(n: usize) -> Self {
                $name(vec![Rat::zero(); n])
            }

            /// `i`-th coordinate vector.
            pub fn basis(n: usize, i: usize) -> Self {
                $name(crate::exactlin::unit(n, i))
            }

            pub fn from_i64(coords: &[i64]) -> Self {
                $name(coords.iter().map(|&c| crate::exactlin::int(c)).collect())
            }

            pub fn coords(&self) -> &[Rat] {
                &self.0
            }

            pub fn into_coords(self) -> Vec<Rat> {
                self.0
            }

            pub fn dim(&self) -> usize {
                self.0.len()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(Zero::is_zero)
            }

            pub fn scale(&self, c: &Rat) -> Self {
                $name(self.0.iter().map(|x| x * c).collect())
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, other: &$name) -> $name {
                assert_eq!(self.dim(), other.dim(), "dimension mismatch");
                $name(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, other: &$name) -> $name {
                assert_eq!(self.dim(), other.dim(), "dimension mismatch");
                $name(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|a| -a).collect())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{}", stringify!($name), self)
            }
        }
    };
}

coordinate_vector!(AlgebraElement);
coordinate_vector!(DualElement);

impl DualElement {
    /// The pairing `<l, X>`: dot product of coordinates.
    pub fn pair(&self, x: &AlgebraElement) -> Rat {
        dot(&self.0, &x.0)
    }
}

/// `exp(log)` in exponential coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement {
    log: AlgebraElement,
}

impl GroupElement {
    pub fn exp(log: AlgebraElement) -> Self {
        GroupElement { log }
    }

    pub fn identity(n: usize) -> Self {
        GroupElement { log: AlgebraElement::zero(n) }
    }

    pub fn log(&self) -> &AlgebraElement {
        &self.log
    }

    pub fn inverse(&self) -> Self {
        GroupElement { log: -&self.log }
    }

    pub fn mul(&self, other: &GroupElement, g: &LieAlgebra) -> Result<GroupElement, AlgebraError> {
        Ok(GroupElement { log: g.bch(&self.log, &other.log)? })
    }

    /// `exp(x_1) exp(x_2) ... exp(x_k)` folded left to right.
    pub fn product(g: &LieAlgebra, factors: &[AlgebraElement]) -> Result<GroupElement, AlgebraError> {
        factors.iter().try_fold(GroupElement::identity(g.dim()), |acc, x| {
            acc.mul(&GroupElement::exp(x.clone()), g)
        })
    }
}

/// One sparse bracket relation: `[X_i, X_j] = sum_k c_k X_k` (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(usize, Rat)>,
}

impl Bracket {
    pub fn new(i: usize, j: usize, terms: Vec<(usize, Rat)>) -> Self {
        Bracket { i, j, terms }
    }
}

/// A validated nilpotent Lie algebra over `Q`.
///
/// Only brackets `[X_i, X_j]` with `i < j` are stored; the rest follow by
/// antisymmetry. Jacobi and nilpotency are checked on construction.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    table: BTreeMap<(usize, usize), AlgebraElement>,
    lower_central_series: Vec<Vec<AlgebraElement>>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LieAlgebra")
            .field("names", &self.names)
            .field("brackets", &self.table)
            .finish()
    }
}

impl LieAlgebra {
    pub fn new(names: Vec<String>, brackets: impl IntoIterator<Item = Bracket>) -> Result<Self, AlgebraError> {
        let n = names.len();
        if n == 0 {
            return Err(AlgebraError::Empty);
        }
        let mut table: BTreeMap<(usize, usize), AlgebraElement> = BTreeMap::new();
        for b in brackets {
            for idx in [b.i, b.j].into_iter().chain(b.terms.iter().map(|t| t.0)) {
                if idx >= n {
                    return Err(AlgebraError::IndexOutOfRange { index: idx, dim: n });
                }
            }
            if b.i == b.j {
                if b.terms.iter().all(|t| t.1.is_zero()) {
                    continue;
                }
                return Err(AlgebraError::DiagonalBracket(b.i));
            }
            let (key, sign) = if b.i < b.j { ((b.i, b.j), Rat::one()) } else { ((b.j, b.i), -Rat::one()) };
            if table.contains_key(&key) {
                return Err(AlgebraError::DuplicateBracket(key.0, key.1));
            }
            let mut v = vec![Rat::zero(); n];
            for (k, c) in b.terms {
                v[k] += c * &sign;
            }
            let v = AlgebraElement(v);
            if !v.is_zero() {
                table.insert(key, v);
            }
        }
        let mut g = LieAlgebra { names, table, lower_central_series: Vec::new() };
        g.check_jacobi()?;
        g.lower_central_series = g.compute_lower_central_series()?;
        Ok(g)
    }

    /// Names default to `X1, ..., Xn`.
    pub fn with_default_names(n: usize, brackets: impl IntoIterator<Item = Bracket>) -> Result<Self, AlgebraError> {
        Self::new((1..=n).map(|i| format!("X{i}")).collect(), brackets)
    }

    /// Convenience constructor from 0-based triples `(i, j, k, c)` meaning
    /// `[X_i, X_j]` has coefficient `c` on `X_k`.
    pub fn from_triples(n: usize, triples: &[(usize, usize, usize, Rat)]) -> Result<Self, AlgebraError> {
        let mut grouped: BTreeMap<(usize, usize), Vec<(usize, Rat)>> = BTreeMap::new();
        for (i, j, k, c) in triples {
            grouped.entry((*i, *j)).or_default().push((*k, c.clone()));
        }
        Self::with_default_names(n, grouped.into_iter().map(|((i, j), terms)| Bracket::new(i, j, terms)))
    }

    pub fn abelian(n: usize) -> Self {
        Self::with_default_names(n, []).expect("abelian algebra is valid")
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Nonzero brackets `[X_i, X_j]`, `i < j`.
    pub fn brackets(&self) -> impl Iterator<Item = (usize, usize, &AlgebraElement)> {
        self.table.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// Structure constant: coefficient of `X_k` in `[X_i, X_j]`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rat {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.table.get(&(i, j)).map_or(Rat::zero(), |v| v.0[k].clone()),
            std::cmp::Ordering::Greater => self.table.get(&(j, i)).map_or(Rat::zero(), |v| -&v.0[k]),
            std::cmp::Ordering::Equal => Rat::zero(),
        }
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> AlgebraElement {
        let n = self.dim();
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.table.get(&(i, j)).cloned().unwrap_or_else(|| AlgebraElement::zero(n)),
            std::cmp::Ordering::Greater => self.table.get(&(j, i)).map_or_else(|| AlgebraElement::zero(n), |v| -v),
            std::cmp::Ordering::Equal => AlgebraElement::zero(n),
        }
    }

    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let n = self.dim();
        assert_eq!((x.dim(), y.dim()), (n, n), "bracket of elements of the wrong dimension");
        let mut out = vec![Rat::zero(); n];
        for (&(i, j), v) in &self.table {
            let c = &x.0[i] * &y.0[j] - &x.0[j] * &y.0[i];
            if c.is_zero() {
                continue;
            }
            for (o, vk) in out.iter_mut().zip(&v.0) {
                if !vk.is_zero() {
                    *o += &c * vk;
                }
            }
        }
        AlgebraElement(out)
    }

    fn check_jacobi(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        let e = |i| AlgebraElement::basis(n, i);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.bracket(&e(i), &self.bracket_basis(j, k));
                    let b = self.bracket(&e(j), &self.bracket_basis(k, i));
                    let c = self.bracket(&e(k), &self.bracket_basis(i, j));
                    if !(&(&a + &b) + &c).is_zero() {
                        return Err(AlgebraError::JacobiViolation { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    fn compute_lower_central_series(&self) -> Result<Vec<Vec<AlgebraElement>>, AlgebraError> {
        let n = self.dim();
        let mut series = vec![(0..n).map(|i| AlgebraElement::basis(n, i)).collect::<Vec<_>>()];
        loop {
            let current = series.last().expect("series is nonempty");
            let mut spanning = Vec::new();
            for i in 0..n {
                for v in current {
                    let b = self.bracket(&AlgebraElement::basis(n, i), v);
                    if !b.is_zero() {
                        spanning.push(b.0);
                    }
                }
            }
            let next: Vec<AlgebraElement> = span_basis(&spanning, n).into_iter().map(AlgebraElement).collect();
            if next.is_empty() {
                series.push(next);
                return Ok(series);
            }
            if next.len() == current.len() {
                return Err(AlgebraError::NotNilpotent { stable_term: next });
            }
            series.push(next);
        }
    }

    /// Bases of `g = g^1 ⊇ g^2 = [g, g] ⊇ ... ⊇ 0`; the last entry is empty.
    pub fn lower_central_series(&self) -> &[Vec<AlgebraElement>] {
        &self.lower_central_series
    }

    /// Nilpotency step: the number of nonzero terms of the lower central
    /// series (1 for abelian algebras).
    pub fn step(&self) -> usize {
        self.lower_central_series.len() - 1
    }

    /// Basis of `[g, g]`.
    pub fn derived_algebra(&self) -> &[AlgebraElement] {
        self.lower_central_series.get(1).map_or(&[], |v| v.as_slice())
    }

    /// Basis of the center.
    pub fn center(&self) -> Vec<AlgebraElement> {
        let n = self.dim();
        // rows: coefficient of X_k in [X_i, v] as linear forms in v
        let mut rows = Vec::new();
        for i in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|j| self.constant(i, j, k)).collect());
            }
        }
        RatMatrix::from_rows(rows, n).kernel_basis().into_iter().map(AlgebraElement).collect()
    }

    /// Matrix of `ad(x)`: column `j` is `[x, X_j]`.
    pub fn ad_matrix(&self, x: &AlgebraElement) -> RatMatrix {
        let n = self.dim();
        let cols: Vec<Vec<Rat>> = (0..n).map(|j| self.bracket(x, &AlgebraElement::basis(n, j)).0).collect();
        RatMatrix::from_columns(&cols, n)
    }

    /// `Ad(exp x) = sum_k ad(x)^k / k!`, a finite sum.
    pub fn ad_exp(&self, x: &AlgebraElement) -> RatMatrix {
        let n = self.dim();
        let ad = self.ad_matrix(x);
        let mut term = RatMatrix::identity(n);
        let mut sum = RatMatrix::identity(n);
        let mut k = 1i64;
        loop {
            term = term.mul(&ad).scale(&crate::exactlin::rat(1, k));
            if term.is_zero() {
                return sum;
            }
            sum = sum.add(&term);
            k += 1;
        }
    }

    /// Coadjoint action of `exp x` on dual coordinates: `Ad(exp(-x))^T`.
    pub fn coad_exp(&self, x: &AlgebraElement) -> RatMatrix {
        self.ad_exp(&-x).transpose()
    }

    pub fn coad_apply(&self, x: &AlgebraElement, f: &DualElement) -> DualElement {
        DualElement(self.coad_exp(x).mul_vec(&f.0))
    }

    /// `log(exp x * exp y)`.
    pub fn bch(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        let step = self.step();
        if step > MAX_BCH_STEP {
            return Err(AlgebraError::StepTooLarge { step, max: MAX_BCH_STEP });
        }
        let n = self.dim();
        if x.dim() != n || y.dim() != n {
            return Err(AlgebraError::DimensionMismatch { expected: n, found: x.dim().max(y.dim()) });
        }
        let mut z = x + y;
        for (num, den, word) in BCH_TERMS {
            // words of length > step are brackets in g^{step+1} = 0
            if word.len() > step {
                continue;
            }
            let t = self.nested_bracket(word, x, y);
            if !t.is_zero() {
                z = &z + &t.scale(&crate::exactlin::rat(*num, *den));
            }
        }
        Ok(z)
    }

    /// Right-nested bracket `[w_1, [w_2, ... [w_{k-1}, w_k]]]`.
    fn nested_bracket(&self, word: &[u8], x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let pick = |c: u8| if c == b'X' { x } else { y };
        let (&last, rest) = word.split_last().expect("nonempty word");
        let mut acc = pick(last).clone();
        for &c in rest.iter().rev() {
            acc = self.bracket(pick(c), &acc);
        }
        acc
    }

    /// Whether the span of `vectors` is closed under the bracket.
    pub fn is_subalgebra(&self, vectors: &[AlgebraElement]) -> bool {
        let raw: Vec<Vec<Rat>> = vectors.iter().map(|v| v.0.clone()).collect();
        vectors.iter().all(|a| {
            vectors.iter().all(|b| crate::exactlin::in_span(&raw, &self.bracket(a, b).0))
        })
    }

    /// Whether the span of `vectors` is an ideal.
    pub fn is_ideal(&self, vectors: &[AlgebraElement]) -> bool {
        let n = self.dim();
        let raw: Vec<Vec<Rat>> = vectors.iter().map(|v| v.0.clone()).collect();
        vectors.iter().all(|a| {
            (0..n).all(|i| crate::exactlin::in_span(&raw, &self.bracket(&AlgebraElement::basis(n, i), a).0))
        })
    }
}

/// Terms of degree 2 through 5 of `log(exp X exp Y)` as right-nested words.
const BCH_TERMS: &[(i64, i64, &[u8])] = &[
    (1, 2, b"XY"),
    (1, 12, b"XXY"),
    (1, 12, b"YYX"),
    (-1, 24, b"YXXY"),
    (-1, 720, b"YYYYX"),
    (-1, 720, b"XXXXY"),
    (1, 360, b"XYYYX"),
    (1, 360, b"YXXXY"),
    (1, 120, b"YXYXY"),
    (1, 120, b"XYXYX"),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, rat};
    use crate::fixtures;

    fn e(n: usize, i: usize) -> AlgebraElement {
        AlgebraElement::basis(n, i)
    }

    #[test]
    fn abelian_is_step_one() {
        let g = LieAlgebra::abelian(4);
        assert_eq!(g.step(), 1);
        assert_eq!(g.lower_central_series().len(), 2);
        assert!(g.lower_central_series()[1].is_empty());
    }

    #[test]
    fn filiform_series() {
        let g = fixtures::filiform4();
        assert_eq!(g.step(), 3);
        let lcs = g.lower_central_series();
        assert_eq!(lcs.iter().map(Vec::len).collect::<Vec<_>>(), vec![4, 2, 1, 0]);
        assert_eq!(lcs[1], vec![e(4, 0), e(4, 1)]);
        assert_eq!(lcs[2], vec![e(4, 0)]);
    }

    #[test]
    fn heisenberg_series() {
        let g = fixtures::heisenberg();
        assert_eq!(g.step(), 2);
        assert_eq!(g.lower_central_series()[1], vec![e(3, 2)]);
        assert_eq!(g.center(), vec![e(3, 2)]);
    }

    #[test]
    fn inconsistent_filiform_is_not_nilpotent() {
        // [X4, X3] = X2 together with [X4, X2] = X3
        let err = LieAlgebra::from_triples(4, &[(3, 2, 1, int(1)), (3, 1, 2, int(1))]).unwrap_err();
        match err {
            AlgebraError::NotNilpotent { stable_term } => {
                assert_eq!(stable_term, vec![e(4, 1), e(4, 2)]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn jacobi_violation_names_the_triple() {
        // [X1,X2] = X3, [X2,X3] = X4, [X1,X4] = X5 breaks Jacobi on (X1, X2, X3)
        let err = LieAlgebra::from_triples(5, &[(0, 1, 2, int(1)), (1, 2, 3, int(1)), (0, 3, 4, int(1))]).unwrap_err();
        assert_eq!(err, AlgebraError::JacobiViolation { i: 0, j: 1, k: 2 });
        assert_eq!(err.to_string(), "Jacobi identity fails on (X1, X2, X3)");
    }

    #[test]
    fn malformed_brackets() {
        assert_eq!(
            LieAlgebra::from_triples(2, &[(0, 0, 1, int(1))]).unwrap_err(),
            AlgebraError::DiagonalBracket(0)
        );
        assert!(matches!(
            LieAlgebra::from_triples(2, &[(0, 5, 1, int(1))]),
            Err(AlgebraError::IndexOutOfRange { index: 5, dim: 2 })
        ));
        let dup = LieAlgebra::with_default_names(
            3,
            [Bracket::new(0, 1, vec![(2, int(1))]), Bracket::new(1, 0, vec![(2, int(1))])],
        );
        assert_eq!(dup.unwrap_err(), AlgebraError::DuplicateBracket(0, 1));
    }

    #[test]
    fn reversed_bracket_is_negated() {
        let g = LieAlgebra::from_triples(3, &[(1, 0, 2, int(1))]).unwrap();
        assert_eq!(g.constant(0, 1, 2), int(-1));
        assert_eq!(g.bracket(&e(3, 0), &e(3, 1)), -&e(3, 2));
    }

    #[test]
    fn ad_exp_basics() {
        let g = fixtures::heisenberg();
        assert_eq!(g.ad_exp(&AlgebraElement::zero(3)), RatMatrix::identity(3));
        let x = AlgebraElement::from_i64(&[2, -1, 5]);
        let y = AlgebraElement::from_i64(&[1, 3, 0]);
        let lhs = AlgebraElement::new(g.ad_exp(&x).mul_vec(y.coords()));
        assert_eq!(lhs, &y + &g.bracket(&x, &y));
        let prod = g.ad_exp(&x).mul(&g.ad_exp(&-&x));
        assert_eq!(prod, RatMatrix::identity(3));
    }

    #[test]
    fn filiform_coadjoint_closed_form() {
        // Ad*(exp rX2 exp sX3 exp 6tX4) f_{t0,s0}
        let g = fixtures::filiform4();
        let (r, s, t, t0, s0) = (3i64, -2i64, 1i64, 4i64, 5i64);
        let gamma = GroupElement::product(
            &g,
            &[e(4, 1).scale(&int(r)), e(4, 2).scale(&int(s)), e(4, 3).scale(&int(6 * t))],
        )
        .unwrap();
        let f = DualElement::new(vec![int(1), int(t0), rat(t0 * t0, 2), rat(s0, 6)]);
        let got = g.coad_apply(gamma.log(), &f);
        let u = t0 - 6 * t;
        let want = DualElement::new(vec![int(1), int(u), rat(u * u, 2), rat(s0, 6) + int(s * t0 + r - 6 * s * t)]);
        assert_eq!(got, want);
    }

    #[test]
    fn bch_examples() {
        let g = fixtures::filiform4();
        let x = AlgebraElement::from_i64(&[1, -2, 3, 4]);
        assert!(g.bch(&x, &-&x).unwrap().is_zero());
        let z = g.bch(&e(4, 3), &e(4, 2)).unwrap();
        assert_eq!(z, AlgebraElement::new(vec![rat(1, 12), rat(1, 2), int(1), int(1)]));

        let h = fixtures::heisenberg();
        let x = AlgebraElement::from_i64(&[1, 2, 0]);
        let y = AlgebraElement::from_i64(&[-3, 1, 7]);
        let want = &(&x + &y) + &h.bracket(&x, &y).scale(&rat(1, 2));
        assert_eq!(h.bch(&x, &y).unwrap(), want);
    }

    #[test]
    fn bch_rejects_step_six() {
        // filiform of dimension 7: [X7, X_i] = X_{i-1}, step 6
        let triples: Vec<_> = (1..6).map(|i| (6, i, i - 1, int(1))).collect();
        let g = LieAlgebra::from_triples(7, &triples).unwrap();
        assert_eq!(g.step(), 6);
        let x = e(7, 0);
        assert_eq!(g.bch(&x, &x).unwrap_err(), AlgebraError::StepTooLarge { step: 6, max: 5 });
    }

    #[test]
    fn subalgebra_and_ideal_tests() {
        let g = fixtures::filiform4();
        assert!(g.is_subalgebra(&[e(4, 0), e(4, 2)]));
        assert!(!g.is_ideal(&[e(4, 0), e(4, 2)]));
        assert!(g.is_ideal(&[e(4, 0), e(4, 1), e(4, 2)]));
        assert!(!g.is_subalgebra(&[e(4, 2), e(4, 3)]));
    }
}
