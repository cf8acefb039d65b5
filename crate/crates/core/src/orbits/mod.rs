//! Coadjoint orbits and Γ-orbits of integral points on them.
//!
//! Two independent routes count `#[O_l ∩ g*_Γ / Γ]` on two-step groups:
//! [`count_orbits_two_step`] builds the lattice `L = ⊕ Z v_i*` (`i > s`) and
//! the sublattice `L0 = Σ Z e_j` in Malcev dual coordinates and reads the
//! index off a Smith form, while [`two_step_window`] +
//! [`enumerate_gamma_orbits`] run union-find over an explicit fundamental
//! window built from the original lattice basis and the coadjoint action.

mod filiform;
mod union_find;

pub use filiform::{
    filiform_counterexample, filiform_point, on_filiform_orbit, verify_filiform_action, ActionMismatch, CounterexampleReport,
    FiliformChecks, FiliformWindow,
};
pub use union_find::DisjointSets;

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactlin::{
    adapted_basis, saturated_basis, smith_form, sublattice_index, Int, LinAlgError, Rat, RatMatrix, ZLattice,
};
use crate::lattice_subgroup::{weak_malcev_through, LatticeSubgroup, SubgroupError};
use crate::multiplicity::{a_matrix, in_dual_lattice, skew_form, MultiplicityError};
use crate::nilpotent::{AlgebraElement, DualElement, LieAlgebra};

/// Upper bound on enumerated representatives / window points.
pub const ENUMERATION_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("affine orbit description needs step <= 2, algebra has step {step}")]
    StepTooLarge { step: usize },
    #[error("functional does not take integer values on log Γ")]
    NotInDualLattice,
    #[error("image of window point {point} under generator {generator} leaves the window")]
    WindowNotInvariant { point: usize, generator: usize },
    #[error("enumeration of {size} points exceeds the limit {limit}")]
    TooLarge { size: String, limit: usize },
    #[error(transparent)]
    Multiplicity(#[from] MultiplicityError),
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// `l + g(l)^⊥`: the coadjoint orbit of `l` on a group of step at most two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineOrbit {
    pub base: DualElement,
    pub stabilizer: Vec<AlgebraElement>,
    /// Basis of the annihilator of the stabilizer.
    pub direction: Vec<DualElement>,
}

impl AffineOrbit {
    pub fn contains(&self, f: &DualElement) -> bool {
        let diff = f - &self.base;
        self.stabilizer.iter().all(|v| diff.pair(v).is_zero())
    }

    pub fn is_point(&self) -> bool {
        self.direction.is_empty()
    }
}

pub fn two_step_orbit(g: &LieAlgebra, l: &DualElement) -> Result<AffineOrbit, OrbitError> {
    if g.step() > 2 {
        return Err(OrbitError::StepTooLarge { step: g.step() });
    }
    let n = g.dim();
    let skew = skew_form(g, l);
    let rows: Vec<Vec<Rat>> = skew.stabilizer.iter().map(|v| v.coords().to_vec()).collect();
    let direction = crate::exactlin::annihilator(&rows, n).into_iter().map(DualElement::new).collect();
    Ok(AffineOrbit { base: l.clone(), stabilizer: skew.stabilizer, direction })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    ClosedForm,
    Enumerated,
}

/// Pairwise Γ-inequivalent representatives of `O_l ∩ g*_Γ`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaOrbitClasses {
    pub representatives: Vec<DualElement>,
    pub method: CountMethod,
    /// Elementary divisors of `L0 ⊂ L` (closed form only).
    pub divisors: Vec<Int>,
}

impl GammaOrbitClasses {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

/// Closed-form Γ-orbit classes on a step ≤ 2 group.
///
/// In Malcev dual coordinates the integral points of the orbit are
/// `l + L`, `L = ⊕_{i>s} Z v_i*`, and Γ acts by translations through
/// `L0 = Σ Z e_j`, `e_j = Σ_i <l, [v_j, v_i]> v_i*`. Representatives are the
/// Smith residues `x ∈ Π [0, d_i)` in lexicographic order.
pub fn count_orbits_two_step(gamma: &LatticeSubgroup, l: &DualElement) -> Result<GammaOrbitClasses, OrbitError> {
    let g = gamma.algebra();
    if g.step() > 2 {
        return Err(OrbitError::StepTooLarge { step: g.step() });
    }
    if !in_dual_lattice(gamma, l) {
        return Err(OrbitError::NotInDualLattice);
    }
    let skew = skew_form(g, l);
    if skew.full_stabilizer {
        return Ok(GammaOrbitClasses { representatives: vec![l.clone()], method: CountMethod::ClosedForm, divisors: vec![] });
    }
    let malcev = weak_malcev_through(gamma, &skew.stabilizer)?;
    let s = malcev.pass_through();
    let trailing = malcev.trailing();
    let m = trailing.len();

    // e_j in coordinates of (v_{s+1}*, ..., v_n*): E[i][j] = <l, [v_j, v_i]>
    let mut e = RatMatrix::zeros(m, m);
    for (j, vj) in trailing.iter().enumerate() {
        for (i, vi) in trailing.iter().enumerate() {
            e.set(i, j, l.pair(&g.bracket(vj, vi)));
        }
    }
    let big = ZLattice::standard(m);
    let small = ZLattice::new(e.clone()).map_err(|_| LinAlgError::DependentColumns)?;
    let index = sublattice_index(&big, &small)?;

    let ints = e.to_int().ok_or(LinAlgError::NotASublattice)?;
    let snf = smith_form(&ints);
    let divisors = snf.diagonal();
    let product = divisors.iter().fold(Int::one(), |acc, d| acc * d);
    assert_eq!(product, index, "Smith diagonal and sublattice index disagree");
    check_size(&index)?;

    // U E V = D, so L / L0 ≅ ⊕ Z/d_i via x ↦ U x; residues map back by U^{-1}.
    let u_inv = snf.u.unimodular_inverse().expect("Smith transform is unimodular").to_rat();
    let dual = malcev.dual_basis();
    let mut representatives = Vec::new();
    for residue in residue_box(&divisors) {
        let x: Vec<Rat> = residue.iter().map(|r| Rat::from_integer(r.clone())).collect();
        let coords = u_inv.mul_vec(&x);
        let mut f = l.clone();
        for (c, w) in coords.iter().zip(&dual[s..]) {
            if !c.is_zero() {
                f = &f + &w.scale(c);
            }
        }
        representatives.push(f);
    }
    assert_eq!(Int::from(representatives.len()), index);
    Ok(GammaOrbitClasses { representatives, method: CountMethod::ClosedForm, divisors: snf.elementary_divisors() })
}

fn check_size(size: &Int) -> Result<(), OrbitError> {
    match size.to_usize() {
        Some(s) if s <= ENUMERATION_LIMIT => Ok(()),
        _ => Err(OrbitError::TooLarge { size: size.to_string(), limit: ENUMERATION_LIMIT }),
    }
}

/// All integer vectors `x` with `0 <= x_i < bounds_i`, lexicographic.
fn residue_box(bounds: &[Int]) -> Vec<Vec<Int>> {
    let mut out = vec![Vec::new()];
    for b in bounds {
        let mut next = Vec::new();
        for prefix in &out {
            let mut k = Int::zero();
            while &k < b {
                let mut p = prefix.clone();
                p.push(k.clone());
                next.push(p);
                k += 1;
            }
        }
        out = next;
    }
    out
}

/// Union-find over a finite window of integral points.
///
/// Joins `p` and `M p` (after the optional wraparound) for every generator
/// matrix `M`. Every image must land back in the window.
pub fn enumerate_gamma_orbits(
    points: &[DualElement],
    generators: &[RatMatrix],
    wrap: Option<&dyn Fn(&DualElement) -> DualElement>,
) -> Result<GammaOrbitClasses, OrbitError> {
    let index: HashMap<&DualElement, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut sets = DisjointSets::new(points.len());
    for (pi, p) in points.iter().enumerate() {
        for (gi, m) in generators.iter().enumerate() {
            let mut image = DualElement::new(m.mul_vec(p.coords()));
            if let Some(w) = wrap {
                image = w(&image);
            }
            match index.get(&image) {
                Some(&qi) => {
                    sets.union(pi, qi);
                }
                None => return Err(OrbitError::WindowNotInvariant { point: pi, generator: gi }),
            }
        }
    }
    let mut best: HashMap<usize, &DualElement> = HashMap::new();
    for (i, p) in points.iter().enumerate() {
        let root = sets.find(i);
        best.entry(root).and_modify(|b| if p < *b { *b = p }).or_insert(p);
    }
    let mut representatives: Vec<DualElement> = best.into_values().cloned().collect();
    representatives.sort();
    Ok(GammaOrbitClasses { representatives, method: CountMethod::Enumerated, divisors: vec![] })
}

/// Fundamental window for `O_l ∩ g*_Γ` on a two-step group, built without
/// Malcev bases or Smith forms.
///
/// `Λ = g*_Γ ∩ g(l)^⊥` is computed as a saturated lattice in the coordinates
/// of the dual basis of log Γ. Γ acts on `l + Λ` by the translations
/// `τ_j = coAd(exp b_j) l - l`. Each basis vector `w_k` of `Λ` has finite
/// order `N_k` modulo `Λ0 = Σ Z τ_j`, so reducing the `k`-th coordinate mod
/// `N_k` is a Γ-equivalence and `l + {Σ a_k w_k : 0 <= a_k < N_k}` covers the
/// quotient.
#[derive(Debug, Clone)]
pub struct TwoStepWindow {
    pub base: DualElement,
    pub lambda: Vec<DualElement>,
    pub moduli: Vec<Int>,
    pub generators: Vec<RatMatrix>,
    left_inverse: RatMatrix,
}

impl TwoStepWindow {
    pub fn size(&self) -> Int {
        self.moduli.iter().fold(Int::one(), |acc, m| acc * m)
    }

    pub fn points(&self) -> Vec<DualElement> {
        residue_box(&self.moduli).into_iter().map(|a| self.point(&a)).collect()
    }

    fn point(&self, coords: &[Int]) -> DualElement {
        let mut f = self.base.clone();
        for (a, w) in coords.iter().zip(&self.lambda) {
            if !a.is_zero() {
                f = &f + &w.scale(&Rat::from_integer(a.clone()));
            }
        }
        f
    }

    /// Reduces each `Λ`-coordinate of `f - base` modulo its `N_k`.
    pub fn wrap(&self, f: &DualElement) -> DualElement {
        let diff = f - &self.base;
        let coords = self.left_inverse.mul_vec(diff.coords());
        if coords.iter().any(|c| !c.is_integer()) {
            return f.clone();
        }
        let coords: Vec<Int> = coords.iter().map(|c| c.to_integer()).collect();
        // only reduce when f really is base + Σ a_k w_k
        if self.point(&coords) != *f {
            return f.clone();
        }
        let reduced: Vec<Int> = coords.iter().zip(&self.moduli).map(|(c, m)| c.mod_floor(m)).collect();
        self.point(&reduced)
    }

    /// Integer `Λ`-coordinates of `v`, when `v` lies in the span of `Λ` with
    /// integral coefficients.
    fn lambda_coords(&self, v: &[Rat]) -> Option<Vec<i64>> {
        let c = self.left_inverse.mul_vec(v);
        if c.iter().any(|x| !x.is_integer()) {
            return None;
        }
        let mut back = vec![Rat::zero(); v.len()];
        for (x, w) in c.iter().zip(&self.lambda) {
            for (b, wi) in back.iter_mut().zip(w.coords()) {
                *b += x * wi;
            }
        }
        if back != v {
            return None;
        }
        c.iter().map(|x| x.to_integer().to_i64()).collect()
    }

    /// Union-find over the window. Each generator matrix `M` is linear, so
    /// on `base + Σ a_k w_k` it acts by `a ↦ c + A a` with `c` the coordinates
    /// of `M base - base` and the columns of `A` those of `M w_k`. Both are
    /// computed exactly and must be integral, otherwise the window is not
    /// invariant. The sweep itself then runs on machine integers.
    pub fn enumerate(&self) -> Result<GammaOrbitClasses, OrbitError> {
        check_size(&self.size())?;
        let moduli: Vec<i64> = self.moduli.iter().map(|m| m.to_i64().expect("checked size")).collect();
        let r = moduli.len();
        let mut maps = Vec::with_capacity(self.generators.len());
        for (gi, m) in self.generators.iter().enumerate() {
            let not_invariant = || OrbitError::WindowNotInvariant { point: 0, generator: gi };
            let moved = DualElement::new(m.mul_vec(self.base.coords()));
            let offset = self.lambda_coords((&moved - &self.base).coords()).ok_or_else(not_invariant)?;
            let columns = self
                .lambda
                .iter()
                .map(|w| self.lambda_coords(&m.mul_vec(w.coords())))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(not_invariant)?;
            maps.push((offset, columns));
        }

        let size: usize = moduli.iter().product::<i64>() as usize;
        let index = |a: &[i64]| a.iter().zip(&moduli).fold(0usize, |acc, (x, m)| acc * *m as usize + *x as usize);
        let mut sets = DisjointSets::new(size);
        let mut a = vec![0i64; r];
        let mut image = vec![0i64; r];
        for pi in 0..size {
            for (offset, columns) in &maps {
                image.copy_from_slice(offset);
                for (ak, col) in a.iter().zip(columns) {
                    for (im, c) in image.iter_mut().zip(col) {
                        *im += ak * c;
                    }
                }
                for (im, m) in image.iter_mut().zip(&moduli) {
                    *im = im.rem_euclid(*m);
                }
                sets.union(pi, index(&image));
            }
            // next point in mixed radix, last coordinate fastest
            for k in (0..r).rev() {
                a[k] += 1;
                if a[k] < moduli[k] {
                    break;
                }
                a[k] = 0;
            }
        }

        let points = self.points();
        let mut best: HashMap<usize, &DualElement> = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            let root = sets.find(i);
            best.entry(root).and_modify(|b| if p < *b { *b = p }).or_insert(p);
        }
        let mut representatives: Vec<DualElement> = best.into_values().cloned().collect();
        representatives.sort();
        Ok(GammaOrbitClasses { representatives, method: CountMethod::Enumerated, divisors: vec![] })
    }
}

/// Builds the [`TwoStepWindow`] for `l`. `max_order` caps the search for each
/// modulus `N_k`.
pub fn two_step_window(gamma: &LatticeSubgroup, l: &DualElement, max_order: u64) -> Result<TwoStepWindow, OrbitError> {
    let g = gamma.algebra();
    if g.step() > 2 {
        return Err(OrbitError::StepTooLarge { step: g.step() });
    }
    if !in_dual_lattice(gamma, l) {
        return Err(OrbitError::NotInDualLattice);
    }
    let n = g.dim();
    let basis = gamma.generators();
    let skew = skew_form(g, l);

    // y_i = <f, b_i>; f ⊥ g(l) iff Σ y_i c_i = 0 for the L-coordinates c of
    // every stabilizer vector
    let lattice = gamma.lattice();
    let constraint_rows: Vec<Vec<Rat>> = skew
        .stabilizer
        .iter()
        .map(|v| lattice.coordinates(v.coords()).expect("lattice is full rank"))
        .collect();
    let solution_space = crate::exactlin::annihilator(&constraint_rows, n);
    let sat = saturated_basis(&solution_space, n);
    // back from y-coordinates to dual coordinates: f = B^{-T} y
    let to_dual = lattice.basis().inverse().expect("full rank").transpose();
    let lambda: Vec<DualElement> = sat
        .columns()
        .into_iter()
        .map(|y| DualElement::new(to_dual.mul_vec(&y.into_iter().map(Rat::from_integer).collect::<Vec<_>>())))
        .collect();

    // the wrapped action permutes a finite set, so inverses add no joins
    let generators: Vec<RatMatrix> = basis.iter().map(|b| g.coad_exp(b)).collect();
    let translations: Vec<Vec<Rat>> = basis
        .iter()
        .map(|b| (&g.coad_apply(b, l) - l).into_coords())
        .filter(|t| t.iter().any(|x| !x.is_zero()))
        .collect();

    let r = lambda.len();
    let lambda_matrix = RatMatrix::from_columns(&lambda.iter().map(|w| w.coords().to_vec()).collect::<Vec<_>>(), n);
    let left_inverse = left_inverse(&lambda_matrix);

    let moduli = if r == 0 {
        Vec::new()
    } else {
        // Λ0 in Λ-coordinates
        let tau_coords: Vec<Vec<Rat>> = translations.iter().map(|t| left_inverse.mul_vec(t)).collect();
        let sublattice = ZLattice::from_generators(&RatMatrix::from_columns(&tau_coords, r));
        (0..r)
            .map(|k| {
                let unit = crate::exactlin::unit(r, k);
                (1..=max_order)
                    .find(|&m| sublattice.contains(&unit.iter().map(|x| x * Rat::from_integer(Int::from(m))).collect::<Vec<_>>()))
                    .map(Int::from)
                    .ok_or(OrbitError::TooLarge { size: format!("order > {max_order}"), limit: ENUMERATION_LIMIT })
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    Ok(TwoStepWindow { base: l.clone(), lambda, moduli, generators, left_inverse })
}

/// `P` with `P M = I` for a full-column-rank `M`.
fn left_inverse(m: &RatMatrix) -> RatMatrix {
    let r = m.cols();
    if r == 0 {
        return RatMatrix::zeros(0, m.rows());
    }
    // P = (M^T M)^{-1} M^T
    let mt = m.transpose();
    mt.mul(m).inverse().expect("full column rank").mul(&mt)
}

/// Whether `l + g(l)^⊥` meets `g*_Γ`, with a witness point when it does.
///
/// The orbit fixes `f` on `g(l)`. Integral functionals restrict to
/// `log Γ ∩ g(l)` as arbitrary integer-valued maps on a saturated basis, so
/// the orbit meets `g*_Γ` iff `l` is integral on that saturated basis.
pub fn spectrum_witness(gamma: &LatticeSubgroup, l: &DualElement) -> Result<Option<DualElement>, OrbitError> {
    let g = gamma.algebra();
    if g.step() > 2 {
        return Err(OrbitError::StepTooLarge { step: g.step() });
    }
    let n = g.dim();
    let skew = skew_form(g, l);
    let flag = vec![skew.stabilizer.iter().map(|v| v.coords().to_vec()).collect::<Vec<_>>()];
    let (basis, dims) = adapted_basis(gamma.lattice(), &flag)?;
    let s = dims[0];
    let mut values = Vec::with_capacity(n);
    for j in 0..n {
        if j < s {
            let v = l.pair(&AlgebraElement::new(basis.column(j)));
            if !v.is_integer() {
                return Ok(None);
            }
            values.push(v);
        } else {
            values.push(Rat::zero());
        }
    }
    // f with <f, u_j> = values_j
    let f = basis.transpose().solve(&RatMatrix::from_columns(&[values], n)).expect("basis is invertible");
    Ok(Some(DualElement::new(f.column(0))))
}

pub fn spectrum_condition(gamma: &LatticeSubgroup, l: &DualElement) -> Result<bool, OrbitError> {
    Ok(spectrum_witness(gamma, l)?.is_some())
}

/// `c(Ω)` summed over enumerated classes must agree with the closed form;
/// exposed for callers that want the per-class values.
pub fn class_weights(gamma: &LatticeSubgroup, classes: &GammaOrbitClasses) -> Result<Vec<Rat>, OrbitError> {
    classes
        .representatives
        .iter()
        .map(|f| match a_matrix(gamma, f) {
            Ok(a) => Ok(a.c_omega),
            Err(MultiplicityError::FullStabilizer) => Ok(Rat::one()),
            Err(e) => Err(e.into()),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, rat};
    use crate::fixtures;
    use crate::lattice_subgroup::{verify_lattice_subgroup, ClosureCheck};

    fn heisenberg_gamma() -> LatticeSubgroup {
        verify_lattice_subgroup(&fixtures::heisenberg(), fixtures::heisenberg_lattice(), &ClosureCheck::default())
            .unwrap()
    }

    #[test]
    fn affine_orbit_examples() {
        let h = fixtures::heisenberg();
        let o = two_step_orbit(&h, &DualElement::zero(3)).unwrap();
        assert!(o.is_point());

        let l = DualElement::from_i64(&[0, 0, 2]);
        let o = two_step_orbit(&h, &l).unwrap();
        assert_eq!(o.direction.len(), 2);
        assert!(o.contains(&DualElement::new(vec![rat(7, 3), int(-5), int(2)])));
        assert!(!o.contains(&DualElement::from_i64(&[0, 0, 3])));
        // every coadjoint image stays on the orbit
        let x = AlgebraElement::new(vec![rat(1, 2), int(3), int(-1)]);
        assert!(o.contains(&h.coad_apply(&x, &l)));

        let a = LieAlgebra::abelian(3);
        assert!(two_step_orbit(&a, &DualElement::from_i64(&[1, 2, 3])).unwrap().is_point());

        assert_eq!(
            two_step_orbit(&fixtures::filiform4(), &DualElement::zero(4)).unwrap_err(),
            OrbitError::StepTooLarge { step: 3 }
        );
    }

    #[test]
    fn heisenberg_counts_both_routes() {
        let gamma = heisenberg_gamma();
        for k in 1..=5i64 {
            let l = DualElement::from_i64(&[0, 0, 2 * k]);
            let closed = count_orbits_two_step(&gamma, &l).unwrap();
            assert_eq!(closed.count() as i64, 4 * k * k);
            let window = two_step_window(&gamma, &l, 1000).unwrap();
            assert_eq!(window.moduli, vec![Int::from(2 * k), Int::from(2 * k)]);
            let enumerated = window.enumerate().unwrap();
            assert_eq!(enumerated.count() as i64, 4 * k * k);
        }
    }

    #[test]
    fn closed_form_representatives_are_on_the_orbit() {
        let gamma = heisenberg_gamma();
        let l = DualElement::from_i64(&[0, 0, 4]);
        let classes = count_orbits_two_step(&gamma, &l).unwrap();
        let orbit = two_step_orbit(gamma.algebra(), &l).unwrap();
        for f in &classes.representatives {
            assert!(orbit.contains(f));
            assert!(in_dual_lattice(&gamma, f));
        }
        // and pairwise inequivalent: they land in distinct window classes
        let window = two_step_window(&gamma, &l, 1000).unwrap();
        let wrapped: std::collections::HashSet<_> = classes.representatives.iter().map(|f| window.wrap(f)).collect();
        assert_eq!(wrapped.len(), classes.count());
    }

    #[test]
    fn abelian_count_is_one() {
        let a = LieAlgebra::abelian(2);
        let gamma = verify_lattice_subgroup(&a, ZLattice::standard(2), &ClosureCheck::default()).unwrap();
        let classes = count_orbits_two_step(&gamma, &DualElement::from_i64(&[3, -1])).unwrap();
        assert_eq!(classes.count(), 1);
        let w = two_step_window(&gamma, &DualElement::from_i64(&[3, -1]), 10).unwrap();
        assert_eq!(w.enumerate().unwrap().count(), 1);
    }

    #[test]
    fn window_enumeration_trivial_action() {
        let pts: Vec<DualElement> = (0..5).map(|i| DualElement::from_i64(&[i, 0])).collect();
        let classes = enumerate_gamma_orbits(&pts, &[RatMatrix::identity(2)], None).unwrap();
        assert_eq!(classes.count(), 5);
    }

    #[test]
    fn window_leak_is_reported() {
        let pts = vec![DualElement::from_i64(&[0]), DualElement::from_i64(&[1])];
        let shift = RatMatrix::from_i64_rows(&[&[2]]);
        assert_eq!(
            enumerate_gamma_orbits(&pts, &[shift], None).unwrap_err(),
            OrbitError::WindowNotInvariant { point: 1, generator: 0 }
        );
    }

    #[test]
    fn spectrum_condition_examples() {
        let gamma = heisenberg_gamma();
        assert!(spectrum_condition(&gamma, &DualElement::from_i64(&[0, 0, 2])).unwrap());
        assert!(!spectrum_condition(&gamma, &DualElement::from_i64(&[0, 0, 1])).unwrap());
        // not integral itself, but the orbit contains 2X3*
        let l = DualElement::new(vec![rat(1, 2), rat(1, 3), int(2)]);
        let w = spectrum_witness(&gamma, &l).unwrap().unwrap();
        assert!(in_dual_lattice(&gamma, &w));
        assert!(two_step_orbit(gamma.algebra(), &l).unwrap().contains(&w));

        let a = LieAlgebra::abelian(2);
        let gamma = verify_lattice_subgroup(&a, ZLattice::standard(2), &ClosureCheck::default()).unwrap();
        assert!(!spectrum_condition(&gamma, &DualElement::new(vec![rat(1, 2), int(0)])).unwrap());
    }

    #[test]
    fn coadjoint_generators_preserve_integral_dual() {
        let gamma = heisenberg_gamma();
        let g = gamma.algebra();
        let dual = crate::lattice_subgroup::integral_dual(&gamma);
        for b in gamma.generators() {
            for f in dual.basis_vectors() {
                let image = g.coad_apply(&b, &DualElement::new(f));
                assert!(dual.contains(image.coords()));
            }
        }
    }
}
