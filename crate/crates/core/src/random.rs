//! Seeded random two-step problems for property tests.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::exactlin::{in_span, int, rat, Int, IntMatrix, Rat, RatMatrix, ZLattice};
use crate::lattice_subgroup::{
    malcev_flag, verify_lattice_subgroup, ClosureCheck, LatticeSubgroup, MalcevBasis, SubgroupError,
};
use crate::nilpotent::{AlgebraElement, Bracket, DualElement, LieAlgebra};

/// Shape limits for [`random_two_step`].
#[derive(Clone, Copy, Debug)]
pub struct TwoStepShape {
    pub max_dim: usize,
    pub max_generators: usize,
    /// Functional coordinates in the dual lattice basis are drawn from
    /// `[-coefficient_bound, coefficient_bound]`.
    pub coefficient_bound: i64,
}

impl Default for TwoStepShape {
    fn default() -> Self {
        TwoStepShape { max_dim: 8, max_generators: 6, coefficient_bound: 1 }
    }
}

#[derive(Clone, Debug)]
pub struct RandomProblem {
    pub gamma: LatticeSubgroup,
    pub functional: DualElement,
}

/// A two-step algebra `span{X_1..X_a, Z_1..Z_b}` with `[X_i, X_j] = Σ c Z_k`,
/// `c ∈ {-1, 0, 1}`, a verified lattice subgroup and an integral functional.
///
/// The lattice is `⊕ Z p_i X_i ⊕ Z q_k Z_k` (`p_i ∈ {1, 2}`,
/// `q_k ∈ {1/2, 1, 2}`), resampled until closed under the group law, then
/// presented in a basis scrambled by a random unimodular matrix.
pub fn random_two_step<R: Rng>(rng: &mut R, shape: &TwoStepShape) -> RandomProblem {
    loop {
        let a = rng.random_range(2..=shape.max_generators.min(shape.max_dim - 1));
        let b = rng.random_range(1..=(shape.max_dim - a).min(3));
        let n = a + b;
        let mut brackets = Vec::new();
        for i in 0..a {
            for j in (i + 1)..a {
                let mut terms: Vec<(usize, Rat)> = Vec::new();
                for k in 0..b {
                    let c = rng.random_range(-1..=1i64);
                    if c != 0 && rng.random_bool(0.6) {
                        terms.push((a + k, int(c)));
                    }
                }
                if !terms.is_empty() {
                    brackets.push(Bracket::new(i, j, terms));
                }
            }
        }
        if brackets.is_empty() {
            continue;
        }
        let g = LieAlgebra::with_default_names(n, brackets).expect("central brackets satisfy Jacobi");
        if g.step() != 2 {
            continue;
        }

        let mut diag = Vec::with_capacity(n);
        for _ in 0..a {
            diag.push(int(rng.random_range(1..=2)));
        }
        for _ in 0..b {
            diag.push([rat(1, 2), int(1), int(2)][rng.random_range(0..3)].clone());
        }
        let mut base = RatMatrix::zeros(n, n);
        for (i, d) in diag.into_iter().enumerate() {
            base.set(i, i, d);
        }
        let scrambled = base.mul(&random_unimodular(rng, n, 2).to_rat());
        let lattice = ZLattice::new(scrambled).expect("unimodular change of basis");
        let gamma = match verify_lattice_subgroup(&g, lattice, &ClosureCheck::default()) {
            Ok(gamma) => gamma,
            Err(SubgroupError::NotClosed { .. }) => continue,
            Err(e) => panic!("unexpected lattice failure: {e}"),
        };

        // l = B^{-T} y takes the integer values y on the lattice basis
        let y: Vec<Rat> =
            (0..n).map(|_| int(rng.random_range(-shape.coefficient_bound..=shape.coefficient_bound))).collect();
        let to_dual = gamma.lattice().basis().inverse().expect("full rank").transpose();
        let functional = DualElement::new(to_dual.mul_vec(&y));
        return RandomProblem { gamma, functional };
    }
}

/// Product of `rounds` random elementary integer matrices, with a random
/// signed permutation.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, rounds: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut p = IntMatrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        p.set(i, j, if rng.random_bool(0.5) { Int::one() } else { -Int::one() });
    }
    m = m.mul(&p);
    if n < 2 {
        return m;
    }
    for _ in 0..rounds * n {
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = Int::from(rng.random_range(-1..=1i64));
        if !c.is_zero() {
            m.add_col_multiple(i, j, &c);
        }
    }
    m
}

/// A second weak Malcev basis through the same subalgebra: `basis` is
/// reordered inside each layer of the defining flag, signs are flipped and
/// integer multiples of earlier vectors are added. Every prefix of the new
/// basis still lies between consecutive flag members, so prefix closure is
/// preserved. Returns `None` when the draw reproduces `basis`.
pub fn perturbed_malcev<R: Rng>(
    rng: &mut R,
    gamma: &LatticeSubgroup,
    basis: &MalcevBasis,
) -> Option<MalcevBasis> {
    let g = gamma.algebra();
    let n = g.dim();
    let s = basis.pass_through();
    let lead = &basis.vectors()[..s];
    let flag = malcev_flag(g, lead).expect("lead spans a subalgebra");
    let level = |v: &AlgebraElement| flag.iter().position(|w| in_span(w, v.coords())).unwrap_or(flag.len());

    let mut order: Vec<usize> = (0..n).collect();
    let levels: Vec<usize> = basis.vectors().iter().map(level).collect();
    let mut start = 0;
    while start < n {
        let end = (start..n).find(|&i| levels[i] != levels[start]).unwrap_or(n);
        order[start..end].shuffle(rng);
        start = end;
    }

    let mut vectors: Vec<AlgebraElement> = Vec::with_capacity(n);
    for &idx in &order {
        let sign = if rng.random_bool(0.5) { Rat::one() } else { -Rat::one() };
        let mut v = basis.vectors()[idx].scale(&sign);
        for earlier in &vectors {
            let c = rng.random_range(-1..=1i64);
            if c != 0 {
                v = &v + &earlier.scale(&int(c));
            }
        }
        vectors.push(v);
    }
    if vectors == basis.vectors() {
        return None;
    }
    let through: Vec<AlgebraElement> = lead.to_vec();
    Some(MalcevBasis::from_vectors(gamma, vectors, s, Some(&through)).expect("layer-preserving changes keep a Malcev basis"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice_subgroup::weak_malcev_through;
    use crate::multiplicity::{in_dual_lattice, skew_form};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_problems_are_well_formed() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let p = random_two_step(&mut rng, &TwoStepShape::default());
            assert_eq!(p.gamma.algebra().step(), 2);
            assert!(p.gamma.algebra().dim() <= 8);
            assert!(in_dual_lattice(&p.gamma, &p.functional));
        }
    }

    #[test]
    fn unimodular_has_unit_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in 1..6 {
            assert!(random_unimodular(&mut rng, n, 3).is_unimodular());
        }
    }

    #[test]
    fn perturbed_basis_is_valid_and_distinct() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut produced = 0;
        for _ in 0..10 {
            let p = random_two_step(&mut rng, &TwoStepShape::default());
            let skew = skew_form(p.gamma.algebra(), &p.functional);
            let basis = weak_malcev_through(&p.gamma, &skew.stabilizer).unwrap();
            if let Some(other) = perturbed_malcev(&mut rng, &p.gamma, &basis) {
                assert_ne!(other.vectors(), basis.vectors());
                produced += 1;
            }
        }
        assert!(produced > 5);
    }
}
