//! Multiplicities of `π_l` in the quasi-regular representation on `L^2(G/Γ)`.
//!
//! For `l` in the integral dual with `g(l) ≠ g`, pick a Malcev basis
//! `v_1..v_n` of log Γ passing through `g(l) = span{v_1..v_s}` and form the
//! skew integer matrix `A_l = (<l, [v_i, v_j]>)_{s < i, j <= n}`. Each Γ-orbit
//! `Ω` in `O_l ∩ g*_Γ` contributes `c(Ω) = det(A_f)^{-1/2}` (any `f ∈ Ω`),
//! and the multiplicity is the sum of these contributions (or 1 when the
//! orbit is a point). On two-step groups every `c(Ω)` agrees, the number of
//! Γ-orbits is `det(A_l)`, and therefore `mult = |Pf(A_l)|` and
//! `mult^2 = #orbits`.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactlin::{smith_form, Int, IntMatrix, Rat, RatMatrix};
use crate::lattice_subgroup::{weak_malcev_through, LatticeSubgroup, MalcevBasis, SubgroupError};
use crate::nilpotent::{AlgebraElement, DualElement, LieAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultiplicityError {
    #[error("functional does not take integer values on log Γ")]
    NotInDualLattice,
    #[error("stabilizer is all of g: the orbit is a point and the multiplicity is 1")]
    FullStabilizer,
    #[error("closed form needs step <= 2, algebra has step {step}")]
    StepTooLarge { step: usize },
    #[error("no Γ-orbit classes supplied: the multiplicity is 0")]
    EmptySpectrum,
    #[error("entry ({i}, {j}) of A_l is not an integer")]
    NonIntegralForm { i: usize, j: usize },
    #[error("step {step} needs explicit Γ-orbit classes")]
    UnsupportedStep { step: usize },
    #[error("functional has dimension {found}, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
}

/// The form `B_l(X, Y) = <l, [X, Y]>` and its kernel `g(l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewFormReport {
    pub functional: DualElement,
    pub form: RatMatrix,
    pub stabilizer: Vec<AlgebraElement>,
    pub full_stabilizer: bool,
}

impl SkewFormReport {
    pub fn rank(&self) -> usize {
        self.form.rows() - self.stabilizer.len()
    }
}

pub fn skew_form(g: &LieAlgebra, l: &DualElement) -> SkewFormReport {
    let n = g.dim();
    assert_eq!(l.dim(), n, "functional of the wrong dimension");
    let mut form = RatMatrix::zeros(n, n);
    for (i, j, v) in g.brackets() {
        let value = l.pair(v);
        form.set(j, i, -&value);
        form.set(i, j, value);
    }
    let stabilizer: Vec<AlgebraElement> = form.kernel_basis().into_iter().map(AlgebraElement::new).collect();
    let full_stabilizer = stabilizer.len() == n;
    SkewFormReport { functional: l.clone(), form, stabilizer, full_stabilizer }
}

/// Whether `<l, v> ∈ Z` for every basis vector `v` of log Γ.
pub fn in_dual_lattice(gamma: &LatticeSubgroup, l: &DualElement) -> bool {
    gamma.generators().iter().all(|v| l.pair(v).is_integer())
}

/// `A_l` on a Malcev basis through `g(l)` with its invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AMatrix {
    pub malcev: MalcevBasis,
    pub matrix: IntMatrix,
    pub det: Int,
    pub pfaffian: Int,
    /// `det^{-1/2} = 1 / |Pf|`
    pub c_omega: Rat,
    pub elementary_divisors: Vec<Int>,
}

/// Builds `A_l` on a Malcev basis through `g(l)` chosen by
/// [`weak_malcev_through`].
pub fn a_matrix(gamma: &LatticeSubgroup, l: &DualElement) -> Result<AMatrix, MultiplicityError> {
    let skew = checked_skew_form(gamma, l)?;
    if skew.full_stabilizer {
        return Err(MultiplicityError::FullStabilizer);
    }
    let malcev = weak_malcev_through(gamma, &skew.stabilizer)?;
    a_matrix_with_basis(gamma, l, &malcev)
}

/// Builds `A_l` on a caller-supplied Malcev basis, which must pass through
/// `g(l)`.
pub fn a_matrix_with_basis(
    gamma: &LatticeSubgroup,
    l: &DualElement,
    malcev: &MalcevBasis,
) -> Result<AMatrix, MultiplicityError> {
    let skew = checked_skew_form(gamma, l)?;
    if skew.full_stabilizer {
        return Err(MultiplicityError::FullStabilizer);
    }
    // re-validate the pass-through condition against this l
    let checked = MalcevBasis::from_vectors(gamma, malcev.vectors().to_vec(), malcev.pass_through(), Some(&skew.stabilizer))?;
    let g = gamma.algebra();
    let trailing = checked.trailing();
    let m = trailing.len();
    let mut matrix = IntMatrix::zeros(m, m);
    for (a, va) in trailing.iter().enumerate() {
        for (b, vb) in trailing.iter().enumerate() {
            let value = l.pair(&g.bracket(va, vb));
            if !value.is_integer() {
                return Err(MultiplicityError::NonIntegralForm { i: a, j: b });
            }
            matrix.set(a, b, value.to_integer());
        }
    }
    let det = matrix.det();
    let pf = pfaffian(&matrix);
    assert_eq!(&pf * &pf, det, "Pfaffian identity violated for skew matrix {matrix}");
    assert!(!pf.is_zero(), "A_l must be nondegenerate off the stabilizer");
    let c_omega = Rat::new(Int::one(), pf.abs());
    let elementary_divisors = smith_form(&matrix).elementary_divisors();
    Ok(AMatrix { malcev: checked, matrix, det, pfaffian: pf, c_omega, elementary_divisors })
}

fn checked_skew_form(gamma: &LatticeSubgroup, l: &DualElement) -> Result<SkewFormReport, MultiplicityError> {
    let n = gamma.algebra().dim();
    if l.dim() != n {
        return Err(MultiplicityError::DimensionMismatch { expected: n, found: l.dim() });
    }
    if !in_dual_lattice(gamma, l) {
        return Err(MultiplicityError::NotInDualLattice);
    }
    Ok(skew_form(gamma.algebra(), l))
}

/// Pfaffian of an even skew-symmetric integer matrix by expansion along the
/// first row. Odd sizes give 0.
pub fn pfaffian(a: &IntMatrix) -> Int {
    assert!(a.is_antisymmetric(), "Pfaffian of a non-skew matrix");
    let idx: Vec<usize> = (0..a.rows()).collect();
    pfaffian_rec(a, &idx)
}

fn pfaffian_rec(a: &IntMatrix, idx: &[usize]) -> Int {
    match idx.len() {
        0 => return Int::one(),
        n if n % 2 == 1 => return Int::zero(),
        _ => {}
    }
    let first = idx[0];
    let mut total = Int::zero();
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let entry = a.get(first, j);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&k| k != j).collect();
        let term = entry * pfaffian_rec(a, &rest);
        // sign (-1)^(pos + 1) with pos counted from 0
        if pos % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `mult^2 = #orbits` and `mult <= #orbits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MooreVerdict {
    pub mult: Rat,
    pub count: Int,
    pub mult_squared: Rat,
    pub holds: bool,
    pub inequality_holds: bool,
}

impl MooreVerdict {
    pub fn new(mult: Rat, count: Int) -> Self {
        let count_q = Rat::from_integer(count.clone());
        let mult_squared = &mult * &mult;
        MooreVerdict {
            holds: mult_squared == count_q,
            inequality_holds: mult <= count_q,
            mult,
            count,
            mult_squared,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub functional: DualElement,
    pub step: usize,
    pub skew: SkewFormReport,
    /// `None` when `g(l) = g`.
    pub a: Option<AMatrix>,
    pub count: Int,
    pub mult: Rat,
    pub moore: MooreVerdict,
}

/// Closed-form multiplicity on a group of step at most two:
/// `mult = |Pf(A_l)|`, `count = det(A_l)` (product of the elementary
/// divisors of `A_l`), or 1 and 1 when the orbit is a point.
pub fn multiplicity_two_step(gamma: &LatticeSubgroup, l: &DualElement) -> Result<OrbitReport, MultiplicityError> {
    let step = gamma.algebra().step();
    if step > 2 {
        return Err(MultiplicityError::StepTooLarge { step });
    }
    let skew = checked_skew_form(gamma, l)?;
    if skew.full_stabilizer {
        let moore = MooreVerdict::new(Rat::one(), Int::one());
        return Ok(OrbitReport {
            functional: l.clone(),
            step,
            skew,
            a: None,
            count: Int::one(),
            mult: Rat::one(),
            moore,
        });
    }
    let a = a_matrix(gamma, l)?;
    let count = a.elementary_divisors.iter().fold(Int::one(), |acc, d| acc * d);
    assert_eq!(count, a.det, "product of elementary divisors must equal det(A_l)");
    let mult = Rat::from_integer(a.pfaffian.abs());
    let moore = MooreVerdict::new(mult.clone(), count.clone());
    assert!(moore.holds, "two-step multiplicity must satisfy mult^2 = count");
    Ok(OrbitReport { functional: l.clone(), step, skew, a: Some(a), count, mult, moore })
}

/// `c(Ω)` of the Γ-orbit through `f`: `1 / |Pf(A_f)|`, or 1 for a point orbit.
pub fn c_omega(gamma: &LatticeSubgroup, f: &DualElement) -> Result<Rat, MultiplicityError> {
    match a_matrix(gamma, f) {
        Ok(a) => Ok(a.c_omega),
        Err(MultiplicityError::FullStabilizer) => Ok(Rat::one()),
        Err(e) => Err(e),
    }
}

/// `sum_Ω c(Ω)` over the given Γ-orbit representatives of `O_l ∩ g*_Γ`.
pub fn multiplicity_corwin_greenleaf(
    gamma: &LatticeSubgroup,
    classes: &[DualElement],
) -> Result<Rat, MultiplicityError> {
    if classes.is_empty() {
        return Err(MultiplicityError::EmptySpectrum);
    }
    classes.iter().try_fold(Rat::zero(), |acc, f| Ok(acc + c_omega(gamma, f)?))
}

/// Moore verdict for `π_l`. Step <= 2 uses the closed form; higher steps
/// need the Γ-orbit representatives of `O_l ∩ g*_Γ`.
pub fn moore_check(
    gamma: &LatticeSubgroup,
    l: &DualElement,
    classes: Option<&[DualElement]>,
) -> Result<MooreVerdict, MultiplicityError> {
    let step = gamma.algebra().step();
    if step <= 2 {
        return Ok(multiplicity_two_step(gamma, l)?.moore);
    }
    checked_skew_form(gamma, l)?;
    let classes = classes.ok_or(MultiplicityError::UnsupportedStep { step })?;
    let mult = multiplicity_corwin_greenleaf(gamma, classes)?;
    let verdict = MooreVerdict::new(mult, Int::from(classes.len()));
    assert!(verdict.inequality_holds, "mult <= count must hold in every case");
    Ok(verdict)
}
