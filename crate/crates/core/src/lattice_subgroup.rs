//! Lattice subgroups Γ ⊂ G (log Γ an additive lattice), the integral dual
//! `g*_Γ`, and Malcev bases strongly based on Γ.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exactlin::{self, adapted_basis, dual_lattice, intersect, span_basis, LinAlgError, Rat, RatMatrix, ZLattice};
use crate::nilpotent::{AlgebraElement, AlgebraError, DualElement, GroupElement, LieAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubgroupError {
    #[error("lattice basis has dimension {found}, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("lattice is not full rank ({rank} < {dim}): Γ would not be cocompact")]
    NotFullRank { rank: usize, dim: usize },
    #[error("exp(L) is not closed: log of {word} is {log}, which is not in L")]
    NotClosed { word: Word, log: AlgebraElement },
    #[error("subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("no Malcev chain through the subalgebra was found")]
    ChainNotFound,
    #[error("vectors are not a Z-basis of log Γ")]
    NotZBasis,
    #[error("prefix of length {0} does not span a subalgebra")]
    PrefixNotClosed(usize),
    #[error("leading vectors do not span the requested subalgebra")]
    WrongPassThrough,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// A letter `exp(±b_k)` of a word in the lattice generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word(pub Vec<Letter>);

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| format!("exp({}b{})", if l.inverse { "-" } else { "" }, l.generator + 1))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Parameters of the randomized closure check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureCheck {
    pub word_length: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for ClosureCheck {
    fn default() -> Self {
        ClosureCheck { word_length: 4, samples: 200, seed: 0x5eed }
    }
}

/// Γ given by a ℤ-basis of log Γ. Closure of `exp(log Γ)` under the group
/// law is certified up to the word length recorded in `certificate`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSubgroup {
    algebra: LieAlgebra,
    lattice: ZLattice,
    certificate: ClosureCheck,
}

impl LatticeSubgroup {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn lattice(&self) -> &ZLattice {
        &self.lattice
    }

    pub fn certificate(&self) -> ClosureCheck {
        self.certificate
    }

    /// Basis vectors of log Γ as algebra elements.
    pub fn generators(&self) -> Vec<AlgebraElement> {
        self.lattice.basis_vectors().into_iter().map(AlgebraElement::new).collect()
    }

    pub fn contains_log(&self, x: &AlgebraElement) -> bool {
        self.lattice.contains(x.coords())
    }

    /// Group element for a word in the generators.
    pub fn word_element(&self, word: &Word) -> Result<GroupElement, AlgebraError> {
        let gens = self.generators();
        let factors: Vec<AlgebraElement> =
            word.0.iter().map(|l| if l.inverse { -&gens[l.generator] } else { gens[l.generator].clone() }).collect();
        GroupElement::product(&self.algebra, &factors)
    }
}

/// Certifies that `exp(lattice)` is a subgroup: every pairwise product of
/// `exp(±b_i)` and `check.samples` random words of length at most
/// `check.word_length` have their logarithm in the lattice.
pub fn verify_lattice_subgroup(
    g: &LieAlgebra,
    lattice: ZLattice,
    check: &ClosureCheck,
) -> Result<LatticeSubgroup, SubgroupError> {
    let n = g.dim();
    if lattice.ambient() != n {
        return Err(SubgroupError::DimensionMismatch { expected: n, found: lattice.ambient() });
    }
    if !lattice.is_full_rank() {
        return Err(SubgroupError::NotFullRank { rank: lattice.rank(), dim: n });
    }
    let gamma = LatticeSubgroup { algebra: g.clone(), lattice, certificate: *check };
    let test = |word: Word| -> Result<(), SubgroupError> {
        let elt = gamma.word_element(&word)?;
        if gamma.contains_log(elt.log()) {
            Ok(())
        } else {
            Err(SubgroupError::NotClosed { word, log: elt.log().clone() })
        }
    };
    for a in 0..n {
        for b in 0..n {
            for (ia, ib) in [(false, false), (false, true), (true, false), (true, true)] {
                test(Word(vec![Letter { generator: a, inverse: ia }, Letter { generator: b, inverse: ib }]))?;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(check.seed);
    for _ in 0..check.samples {
        let len = rng.random_range(1..=check.word_length.max(1));
        let word = (0..len)
            .map(|_| Letter { generator: rng.random_range(0..n), inverse: rng.random_bool(0.5) })
            .collect();
        test(Word(word))?;
    }
    Ok(gamma)
}

/// `g*_Γ = {l : <l, log Γ> ⊂ Z}`.
pub fn integral_dual(gamma: &LatticeSubgroup) -> ZLattice {
    dual_lattice(gamma.lattice()).expect("lattice subgroups are full rank")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MalcevKind {
    /// every prefix spans a subalgebra
    Weak,
    /// every prefix spans an ideal
    Strong,
}

/// An ordered ℤ-basis `v_1, ..., v_n` of log Γ whose prefixes span
/// subalgebras, with `span{v_1..v_s}` the distinguished subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MalcevBasis {
    vectors: Vec<AlgebraElement>,
    pass_through: usize,
    kind: MalcevKind,
}

impl MalcevBasis {
    /// Validates a candidate: prefix closure, ℤ-basis of log Γ, and (when
    /// `through` is given) that the first `s` vectors span it.
    pub fn from_vectors(
        gamma: &LatticeSubgroup,
        vectors: Vec<AlgebraElement>,
        pass_through: usize,
        through: Option<&[AlgebraElement]>,
    ) -> Result<Self, SubgroupError> {
        let g = gamma.algebra();
        let n = g.dim();
        if vectors.len() != n || vectors.iter().any(|v| v.dim() != n) {
            return Err(SubgroupError::NotZBasis);
        }
        let matrix = RatMatrix::from_columns(&vectors.iter().map(|v| v.coords().to_vec()).collect::<Vec<_>>(), n);
        let candidate = ZLattice::new(matrix).map_err(|_| SubgroupError::NotZBasis)?;
        if &candidate != gamma.lattice() {
            return Err(SubgroupError::NotZBasis);
        }
        if let Some(first) = (1..=n).find(|&i| !g.is_subalgebra(&vectors[..i])) {
            return Err(SubgroupError::PrefixNotClosed(first));
        }
        if let Some(h) = through {
            let lead: Vec<Vec<Rat>> = vectors[..pass_through].iter().map(|v| v.coords().to_vec()).collect();
            let target: Vec<Vec<Rat>> = h.iter().map(|v| v.coords().to_vec()).collect();
            if span_basis(&lead, n) != span_basis(&target, n) {
                return Err(SubgroupError::WrongPassThrough);
            }
        }
        let kind = if (1..=n).all(|i| g.is_ideal(&vectors[..i])) { MalcevKind::Strong } else { MalcevKind::Weak };
        Ok(MalcevBasis { vectors, pass_through, kind })
    }

    pub fn vectors(&self) -> &[AlgebraElement] {
        &self.vectors
    }

    pub fn pass_through(&self) -> usize {
        self.pass_through
    }

    pub fn kind(&self) -> MalcevKind {
        self.kind
    }

    /// Vectors beyond the distinguished subalgebra.
    pub fn trailing(&self) -> &[AlgebraElement] {
        &self.vectors[self.pass_through..]
    }

    /// Columns are the basis vectors.
    pub fn matrix(&self) -> RatMatrix {
        let n = self.vectors.len();
        RatMatrix::from_columns(&self.vectors.iter().map(|v| v.coords().to_vec()).collect::<Vec<_>>(), n)
    }

    /// Dual basis `v_1*, ..., v_n*` with `<v_i*, v_j> = δ_ij`.
    pub fn dual_basis(&self) -> Vec<DualElement> {
        let inv = self.matrix().inverse().expect("Malcev basis is a basis");
        (0..inv.rows()).map(|i| DualElement::new(inv.row(i))).collect()
    }
}

/// A weak Malcev basis strongly based on Γ passing through the rational
/// subalgebra spanned by `h`.
///
/// The basis is adapted to the flag
/// `h ∩ g^c ⊆ ... ⊆ h ∩ g^1 = h ⊆ h + g^c ⊆ ... ⊆ h + g^1 = g`
/// (`g^k` the lower central series, `c` the step). Every subspace squeezed
/// between consecutive members of this flag is a subalgebra, so any
/// ℤ-basis of log Γ adapted to it is prefix-closed. In particular vectors of
/// `h` that lie deeper in the lower central series come first.
pub fn weak_malcev_through(gamma: &LatticeSubgroup, h: &[AlgebraElement]) -> Result<MalcevBasis, SubgroupError> {
    let g = gamma.algebra();
    let n = g.dim();
    let flag = malcev_flag(g, h)?;
    let h_basis = span_basis(&h.iter().map(|v| v.coords().to_vec()).collect::<Vec<_>>(), n);
    let h_elems: Vec<AlgebraElement> = h_basis.iter().cloned().map(AlgebraElement::new).collect();
    let (basis, dims) = adapted_basis(gamma.lattice(), &flag).map_err(|_| SubgroupError::ChainNotFound)?;
    let s = h_basis.len();
    debug_assert!(dims.contains(&s) || s == 0);
    let vectors: Vec<AlgebraElement> = basis.columns().into_iter().map(AlgebraElement::new).collect();
    MalcevBasis::from_vectors(gamma, vectors, s, Some(&h_elems)).map_err(|e| match e {
        SubgroupError::PrefixNotClosed(_) => SubgroupError::ChainNotFound,
        other => other,
    })
}

/// The strictly increasing flag used by [`weak_malcev_through`], each member
/// given by a rational basis.
pub fn malcev_flag(g: &LieAlgebra, h: &[AlgebraElement]) -> Result<Vec<Vec<Vec<Rat>>>, SubgroupError> {
    let n = g.dim();
    let h_raw: Vec<Vec<Rat>> = h.iter().map(|v| v.coords().to_vec()).collect();
    let h_basis = span_basis(&h_raw, n);
    let h_elems: Vec<AlgebraElement> = h_basis.iter().cloned().map(AlgebraElement::new).collect();
    if !g.is_subalgebra(&h_elems) {
        return Err(SubgroupError::NotSubalgebra);
    }
    let lcs: Vec<Vec<Vec<Rat>>> = g
        .lower_central_series()
        .iter()
        .map(|term| term.iter().map(|v| v.coords().to_vec()).collect())
        .collect();
    let step = g.step();

    let mut flag: Vec<Vec<Vec<Rat>>> = Vec::new();
    let mut push = |w: Vec<Vec<Rat>>| {
        let dim = exactlin::rank_of(&w, n);
        if flag.last().is_none_or(|last| exactlin::rank_of(last, n) < dim) {
            flag.push(w);
        }
    };
    for k in (1..=step).rev() {
        push(intersect(&h_basis, &lcs[k - 1], n));
    }
    push(h_basis.clone());
    for k in (1..=step).rev() {
        let mut sum = h_basis.clone();
        sum.extend(lcs[k - 1].iter().cloned());
        push(span_basis(&sum, n));
    }
    Ok(flag)
}
