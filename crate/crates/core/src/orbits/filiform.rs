//! The generic 4-dimensional filiform group `[X4, X2] = X1`, `[X4, X3] = X2`
//! with `Γ = exp(Z X1 ⊕ Z X2 ⊕ Z X3 ⊕ 6Z X4)` and `l = X1*`.
//!
//! Its integral orbit points are `f_{t,s} = X1* + t X2* + (t²/2) X3* + (s/6) X4*`
//! with `t` even and `s` integral, and Γ moves `(t, s)` by `(6Z, 6Z)`. The
//! window `t ∈ {0, 2, 4}`, `s ∈ {0..5}` therefore has 18 classes, each with
//! `c(Ω) = 1/6`, so `mult = 3` while `mult² = 9 ≠ 18`.

use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{enumerate_gamma_orbits, GammaOrbitClasses};
use crate::exactlin::{int, Int, Rat, RatMatrix};
use crate::fixtures;
use crate::lattice_subgroup::{verify_lattice_subgroup, ClosureCheck, LatticeSubgroup};
use crate::multiplicity::{a_matrix, in_dual_lattice, multiplicity_corwin_greenleaf, AMatrix, MooreVerdict};
use crate::nilpotent::{AlgebraElement, DualElement, GroupElement, LieAlgebra};

/// `f_{t,s}`.
pub fn filiform_point(t: &Rat, s: &Rat) -> DualElement {
    DualElement::new(vec![Rat::one(), t.clone(), t * t / int(2), s / int(6)])
}

/// Recovers `(t, s)` from a point of the form `f_{t,s}`.
fn parameters(f: &DualElement) -> Option<(Rat, Rat)> {
    let c = f.coords();
    let t = c[1].clone();
    let s = &c[3] * int(6);
    (filiform_point(&t, &s) == *f).then_some((t, s))
}

/// Whether `f` lies on the coadjoint orbit of `X1*`.
pub fn on_filiform_orbit(f: &DualElement) -> bool {
    f.dim() == 4 && parameters(f).is_some()
}

/// The hardcoded window and its wraparound `(t, s) ↦ (t mod 6, s mod 6)`.
#[derive(Debug, Clone)]
pub struct FiliformWindow {
    pub t_values: Vec<i64>,
    pub s_values: Vec<i64>,
}

impl Default for FiliformWindow {
    fn default() -> Self {
        FiliformWindow { t_values: vec![0, 2, 4], s_values: (0..6).collect() }
    }
}

impl FiliformWindow {
    pub fn points(&self) -> Vec<DualElement> {
        let mut out = Vec::new();
        for &t in &self.t_values {
            for &s in &self.s_values {
                out.push(filiform_point(&int(t), &int(s)));
            }
        }
        out
    }

    pub fn wrap(f: &DualElement) -> DualElement {
        match parameters(f) {
            Some((t, s)) if t.is_integer() && s.is_integer() => {
                let six = Int::from(6);
                let t = Rat::from_integer(t.to_integer().mod_floor(&six));
                let s = Rat::from_integer(s.to_integer().mod_floor(&six));
                filiform_point(&t, &s)
            }
            _ => f.clone(),
        }
    }
}

/// `coAd(γ)` for `γ = exp(r X2) exp(s X3) exp(6t X4)` as a product of
/// one-parameter actions.
fn gamma_action(g: &LieAlgebra, r: &Rat, s: &Rat, t: &Rat) -> RatMatrix {
    let x2 = AlgebraElement::basis(4, 1).scale(r);
    let x3 = AlgebraElement::basis(4, 2).scale(s);
    let x4 = AlgebraElement::basis(4, 3).scale(&(t * int(6)));
    g.coad_exp(&x2).mul(&g.coad_exp(&x3)).mul(&g.coad_exp(&x4))
}

/// Right-hand side of the closed-form action on `f_{t0,s0}`.
fn closed_form_action(r: &Rat, s: &Rat, t: &Rat, t0: &Rat, s0: &Rat) -> DualElement {
    let shifted = t0 - t * int(6);
    DualElement::new(vec![
        Rat::one(),
        shifted.clone(),
        &shifted * &shifted / int(2),
        s0 / int(6) + s * t0 + r - int(6) * s * t,
    ])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionMismatch {
    pub params: [Rat; 5],
    pub expected: DualElement,
    pub found: DualElement,
}

/// Samples random integer tuples `(r, s, t, t0, s0)` and compares
/// `coAd(γ) f_{t0,s0}` against the closed form, both via the product of
/// one-parameter actions and via the BCH logarithm of `γ`. Returns the
/// checked tuples or the first mismatch.
pub fn verify_filiform_action(samples: usize, seed: u64) -> Result<Vec<[Rat; 5]>, Box<ActionMismatch>> {
    let g = fixtures::filiform4();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = Vec::with_capacity(samples);
    for _ in 0..samples {
        let mut draw = || int(rng.random_range(-20..=20));
        let (r, s, t, t0, s0) = (draw(), draw(), draw(), draw(), draw());
        let f = filiform_point(&t0, &s0);
        let expected = closed_form_action(&r, &s, &t, &t0, &s0);
        let via_factors = DualElement::new(gamma_action(&g, &r, &s, &t).mul_vec(f.coords()));
        let log = GroupElement::product(
            &g,
            &[
                AlgebraElement::basis(4, 1).scale(&r),
                AlgebraElement::basis(4, 2).scale(&s),
                AlgebraElement::basis(4, 3).scale(&(&t * int(6))),
            ],
        )
        .expect("step 3 is within the BCH range");
        let via_log = g.coad_apply(log.log(), &f);
        let params = [r, s, t, t0, s0];
        for found in [via_factors, via_log] {
            if found != expected {
                return Err(Box::new(ActionMismatch { params, expected, found }));
            }
        }
        checked.push(params);
    }
    Ok(checked)
}

/// Outcome of the internal consistency checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiliformChecks {
    pub action_samples: usize,
    /// Sampled `(t, s)` reached from `l` by `coAd(exp(s' X2) exp(-t X4))`.
    pub parametrization_samples: usize,
    /// Γ-images of window points that stay on the parametrized set with
    /// `(t mod 6, s mod 6)` unchanged.
    pub invariance_samples: usize,
    /// Each wraparound step is realized by an explicit element of Γ.
    pub wrap_witnesses: usize,
    pub polarization_isotropic: bool,
    pub polarization_integral: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub algebra: LieAlgebra,
    pub gamma: LatticeSubgroup,
    pub functional: DualElement,
    pub window: Vec<DualElement>,
    pub classes: GammaOrbitClasses,
    pub c_omegas: Vec<Rat>,
    pub a: AMatrix,
    pub count: Int,
    pub mult: Rat,
    pub moore: MooreVerdict,
    /// `det(A_l)`, which would be the count if the two-step formula applied.
    pub two_step_prediction: Int,
    pub checks: FiliformChecks,
}

const ACTION_SAMPLES: usize = 50;
const ACTION_SEED: u64 = 4;

pub fn filiform_counterexample() -> CounterexampleReport {
    let g = fixtures::filiform4();
    let gamma = verify_lattice_subgroup(&g, fixtures::filiform4_lattice(), &ClosureCheck::default())
        .expect("the fixture lattice is a lattice subgroup");
    let l = fixtures::filiform4_functional();

    let window = FiliformWindow::default();
    let points = window.points();
    for f in &points {
        assert!(in_dual_lattice(&gamma, f), "window point {f} is not integral");
    }
    let generators: Vec<RatMatrix> =
        gamma.generators().iter().flat_map(|b| [g.coad_exp(b), g.coad_exp(&-b)]).collect();
    let wrap = |f: &DualElement| FiliformWindow::wrap(f);
    let classes = enumerate_gamma_orbits(&points, &generators, Some(&wrap))
        .expect("the filiform window is closed under wraparound");

    let a = a_matrix(&gamma, &l).expect("X1* is integral with a proper stabilizer");
    let c_omegas: Vec<Rat> = classes
        .representatives
        .iter()
        .map(|f| a_matrix(&gamma, f).expect("window points are integral").c_omega)
        .collect();
    let mult = multiplicity_corwin_greenleaf(&gamma, &classes.representatives).expect("classes are nonempty");
    let count = Int::from(classes.count());
    let moore = MooreVerdict::new(mult.clone(), count.clone());

    let checks = FiliformChecks {
        action_samples: verify_filiform_action(ACTION_SAMPLES, ACTION_SEED)
            .expect("closed-form action agrees with coAd")
            .len(),
        parametrization_samples: check_parametrization(&g, &l, 40, 11),
        invariance_samples: check_invariance(&gamma, &points, 200, 12),
        wrap_witnesses: check_wrap_witnesses(&g, &points),
        polarization_isotropic: polarization_isotropic(&g, &l),
        polarization_integral: polarization_integral(&gamma, &l),
    };

    CounterexampleReport {
        two_step_prediction: a.det.clone(),
        algebra: g,
        gamma,
        functional: l,
        window: points,
        classes,
        c_omegas,
        a,
        count,
        mult,
        moore,
        checks,
    }
}

/// `coAd(exp(σ X2) exp(-τ X4)) l = f_{τ, 6σ}` on sampled rational `(τ, σ)`.
fn check_parametrization(g: &LieAlgebra, l: &DualElement, samples: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let tau = Rat::new(Int::from(rng.random_range(-30..=30)), Int::from(rng.random_range(1..=5)));
        let sigma = Rat::new(Int::from(rng.random_range(-30..=30)), Int::from(rng.random_range(1..=5)));
        let m = g
            .coad_exp(&AlgebraElement::basis(4, 1).scale(&sigma))
            .mul(&g.coad_exp(&AlgebraElement::basis(4, 3).scale(&-&tau)));
        let image = DualElement::new(m.mul_vec(l.coords()));
        assert_eq!(image, filiform_point(&tau, &(&sigma * int(6))), "orbit point not reached");
    }
    samples
}

/// Random words in the generators keep window points on the parametrized
/// set with integral `(t, s)`, `t` even, and `(t mod 6, s mod 6)` fixed.
fn check_invariance(gamma: &LatticeSubgroup, points: &[DualElement], samples: usize, seed: u64) -> usize {
    let g = gamma.algebra();
    let generators = gamma.generators();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let start = &points[rng.random_range(0..points.len())];
        let mut f = start.clone();
        for _ in 0..rng.random_range(1..=6) {
            let b = &generators[rng.random_range(0..generators.len())];
            let power = int(rng.random_range(-3..=3));
            f = g.coad_apply(&b.scale(&power), &f);
        }
        let (t, s) = parameters(&f).expect("Γ-image left the orbit parametrization");
        assert!(t.is_integer() && s.is_integer() && t.to_integer().is_even());
        assert!(in_dual_lattice(gamma, &f));
        assert_eq!(FiliformWindow::wrap(&f), *start);
    }
    samples
}

/// For every window point `f_{t,s}` and shift `(a, b) ∈ {-1, 0, 1}²`, the
/// element `exp(-6b X2) exp(6a X4) ∈ Γ` maps `f_{t+6a, s+6b}` to `f_{t,s}`,
/// so the wraparound only identifies Γ-equivalent points.
fn check_wrap_witnesses(g: &LieAlgebra, points: &[DualElement]) -> usize {
    let mut count = 0;
    for f in points {
        let (t, s) = parameters(f).expect("window point");
        for a in -1..=1i64 {
            for b in -1..=1i64 {
                let moved = filiform_point(&(&t + int(6 * a)), &(&s + int(6 * b)));
                // exp(r X2) exp(6m X4) sends f_{t0,s0} to f_{t0-6m, s0+6r}
                let action = gamma_action(g, &int(-b), &Rat::zero(), &int(a));
                let back = DualElement::new(action.mul_vec(moved.coords()));
                assert_eq!(&back, f, "wraparound witness failed");
                count += 1;
            }
        }
    }
    count
}

fn polarization() -> Vec<AlgebraElement> {
    (0..3).map(|i| AlgebraElement::basis(4, i)).collect()
}

fn polarization_isotropic(g: &LieAlgebra, l: &DualElement) -> bool {
    let m = polarization();
    g.is_subalgebra(&m) && m.iter().all(|x| m.iter().all(|y| l.pair(&g.bracket(x, y)).is_zero()))
}

fn polarization_integral(gamma: &LatticeSubgroup, l: &DualElement) -> bool {
    // m ∩ log Γ = Z X1 ⊕ Z X2 ⊕ Z X3 for the fixture lattice
    polarization().iter().all(|x| gamma.contains_log(x) && l.pair(x).is_integer())
}
