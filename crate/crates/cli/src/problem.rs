//! Problem files: a TOML document describing a nilpotent Lie algebra by
//! structure constants, a candidate lattice and a list of functionals.
//!
//! ```toml
//! name = "heisenberg"
//! dimension = 3
//! names = ["X1", "X2", "X3"]
//! brackets = [{ i = 1, j = 2, k = 3, c = "1" }]   # [X1, X2] = 1 X3
//! lattice = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1/2"]]
//!
//! [[functional]]
//! name = "2X3*"
//! coords = ["0", "0", "2"]
//! ```
//!
//! Indices are 1-based. Rationals are strings `"p"` or `"p/q"`, or bare TOML
//! integers. Each `lattice` entry is one basis vector of log Γ.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;

use nilorbit::exactlin::{parse_rat, LinAlgError, Rat, ZLattice};
use nilorbit::lattice_subgroup::{verify_lattice_subgroup, ClosureCheck, LatticeSubgroup, SubgroupError};
use nilorbit::nilpotent::{AlgebraError, Bracket, DualElement, LieAlgebra};
use num_traits::Zero;
use serde::Deserialize;
use toml::Spanned;

use crate::error::CliError;

/// A message pinned to a line and column of the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub source: String,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}: {}", self.source, self.line, self.column, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedFunctional {
    pub name: String,
    pub coords: DualElement,
    /// Γ-orbit representatives of `O ∩ g*_Γ`, when the file supplies them.
    pub orbit_classes: Option<Vec<DualElement>>,
}

#[derive(Debug, Clone)]
pub struct Problem {
    pub name: String,
    pub source: String,
    pub algebra: LieAlgebra,
    pub lattice: ZLattice,
    pub functionals: Vec<NamedFunctional>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawRat {
    Text(String),
    Integer(i64),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBracket {
    i: Spanned<usize>,
    j: Spanned<usize>,
    k: Spanned<usize>,
    c: Spanned<RawRat>,
}

type RawVector = Spanned<Vec<Spanned<RawRat>>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFunctional {
    name: Option<String>,
    coords: RawVector,
    orbit_classes: Option<Vec<RawVector>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    name: Option<String>,
    dimension: Spanned<usize>,
    names: Option<Spanned<Vec<String>>>,
    #[serde(default)]
    brackets: Vec<Spanned<RawBracket>>,
    lattice: Spanned<Vec<RawVector>>,
    #[serde(default, rename = "functional")]
    functionals: Vec<Spanned<RawFunctional>>,
}

struct Locator<'a> {
    source: &'a str,
    text: &'a str,
}

impl Locator<'_> {
    fn at(&self, span: Range<usize>, message: impl Into<String>) -> Diagnostic {
        let offset = span.start.min(self.text.len());
        let before = &self.text[..offset];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(offset, |p| offset - p - 1) + 1;
        Diagnostic { source: self.source.to_string(), line, column, message: message.into() }
    }

    fn parse_error(&self, span: Range<usize>, message: impl Into<String>) -> CliError {
        CliError::Parse(self.at(span, message))
    }

    fn invalid(&self, span: Range<usize>, message: impl Into<String>) -> CliError {
        CliError::Invalid(self.at(span, message).to_string())
    }

    fn rational(&self, value: &Spanned<RawRat>) -> Result<Rat, CliError> {
        match value.get_ref() {
            RawRat::Integer(n) => Ok(Rat::from_integer((*n).into())),
            RawRat::Text(s) => parse_rat(s).map_err(|e| self.parse_error(value.span(), e.to_string())),
        }
    }

    fn vector(&self, raw: &RawVector, dim: usize, what: &str) -> Result<Vec<Rat>, CliError> {
        if raw.get_ref().len() != dim {
            return Err(self.parse_error(
                raw.span(),
                format!("{what} has {} entries, expected {dim}", raw.get_ref().len()),
            ));
        }
        raw.get_ref().iter().map(|x| self.rational(x)).collect()
    }
}

impl Problem {
    /// Parses a problem file. `source` labels diagnostics.
    pub fn parse(text: &str, source: &str) -> Result<Problem, CliError> {
        let loc = Locator { source, text };
        let raw: RawProblem = toml::from_str(text).map_err(|e| {
            let span = e.span().unwrap_or(0..0);
            loc.parse_error(span, e.message().to_string())
        })?;

        let n = *raw.dimension.get_ref();
        if n == 0 {
            return Err(loc.parse_error(raw.dimension.span(), "dimension must be positive"));
        }
        let names = match &raw.names {
            Some(names) => {
                if names.get_ref().len() != n {
                    return Err(loc.parse_error(
                        names.span(),
                        format!("{} names given for dimension {n}", names.get_ref().len()),
                    ));
                }
                names.get_ref().clone()
            }
            None => (1..=n).map(|i| format!("X{i}")).collect(),
        };

        // [X_i, X_j] collected per ordered pair i < j
        let mut table: BTreeMap<(usize, usize), BTreeMap<usize, Rat>> = BTreeMap::new();
        for entry in &raw.brackets {
            let b = entry.get_ref();
            let index = |s: &Spanned<usize>| {
                let v = *s.get_ref();
                if v == 0 || v > n {
                    Err(loc.parse_error(s.span(), format!("index {v} out of range 1..={n}")))
                } else {
                    Ok(v - 1)
                }
            };
            let (i, j, k) = (index(&b.i)?, index(&b.j)?, index(&b.k)?);
            let mut c = loc.rational(&b.c)?;
            if i == j {
                return Err(loc.parse_error(entry.span(), format!("[{0}, {0}] is always zero", names[i])));
            }
            let key = if i < j {
                (i, j)
            } else {
                c = -c;
                (j, i)
            };
            let terms = table.entry(key).or_default();
            if terms.insert(k, c).is_some() {
                return Err(loc.parse_error(
                    entry.span(),
                    format!("coefficient of {} in [{}, {}] given twice", names[k], names[key.0], names[key.1]),
                ));
            }
        }
        let brackets: Vec<Bracket> = table
            .into_iter()
            .map(|((i, j), terms)| (i, j, terms.into_iter().filter(|(_, c)| !c.is_zero()).collect::<Vec<_>>()))
            .filter(|(_, _, terms)| !terms.is_empty())
            .map(|(i, j, terms)| Bracket::new(i, j, terms))
            .collect();
        let brackets_span = raw.brackets.first().map_or(0..0, |b| b.span());
        let algebra = LieAlgebra::new(names.clone(), brackets).map_err(|e| match e {
            AlgebraError::JacobiViolation { i, j, k } => loc.invalid(
                brackets_span.clone(),
                format!("Jacobi identity fails on ({}, {}, {})", names[i], names[j], names[k]),
            ),
            AlgebraError::NotNilpotent { stable_term } => loc.invalid(
                brackets_span.clone(),
                format!("algebra is not nilpotent: the lower central series stops at dimension {}", stable_term.len()),
            ),
            AlgebraError::StepTooLarge { step, max } => {
                CliError::Unsupported(format!("nilpotency step {step} exceeds the supported maximum {max}"))
            }
            other => loc.parse_error(brackets_span.clone(), other.to_string()),
        })?;

        let columns: Vec<Vec<Rat>> = raw
            .lattice
            .get_ref()
            .iter()
            .enumerate()
            .map(|(idx, v)| loc.vector(v, n, &format!("lattice vector {}", idx + 1)))
            .collect::<Result<_, _>>()?;
        if columns.len() != n {
            return Err(loc.invalid(
                raw.lattice.span(),
                format!("lattice has {} basis vectors, a lattice in dimension {n} needs {n}", columns.len()),
            ));
        }
        let lattice = ZLattice::from_columns(&columns, n).map_err(|e| match e {
            LinAlgError::DependentColumns => loc.invalid(raw.lattice.span(), "lattice vectors are linearly dependent"),
            other => loc.invalid(raw.lattice.span(), other.to_string()),
        })?;

        let mut functionals = Vec::new();
        for (idx, entry) in raw.functionals.iter().enumerate() {
            let f = entry.get_ref();
            let name = f.name.clone().unwrap_or_else(|| format!("l{}", idx + 1));
            let coords = DualElement::new(loc.vector(&f.coords, n, &format!("functional {name}"))?);
            let orbit_classes = match &f.orbit_classes {
                Some(list) => Some(
                    list.iter()
                        .map(|v| loc.vector(v, n, &format!("orbit class of {name}")).map(DualElement::new))
                        .collect::<Result<Vec<_>, _>>()?,
                ),
                None => None,
            };
            functionals.push(NamedFunctional { name, coords, orbit_classes });
        }

        Ok(Problem {
            name: raw.name.unwrap_or_else(|| source.to_string()),
            source: source.to_string(),
            algebra,
            lattice,
            functionals,
        })
    }

    /// Runs the lattice-subgroup verification with the given check.
    pub fn subgroup(&self, check: &ClosureCheck) -> Result<LatticeSubgroup, CliError> {
        verify_lattice_subgroup(&self.algebra, self.lattice.clone(), check).map_err(|e| match e {
            SubgroupError::NotClosed { word, log } => CliError::Invalid(format!(
                "{}: exp(L) is not a group: log of {word} is {log}, which is not in L",
                self.source
            )),
            SubgroupError::NotFullRank { rank, dim } => CliError::Invalid(format!(
                "{}: lattice has rank {rank} < {dim}, so Γ would not be cocompact",
                self.source
            )),
            e @ (SubgroupError::Algebra(AlgebraError::StepTooLarge { .. }) | SubgroupError::ChainNotFound) => {
                CliError::Unsupported(format!("{}: {e}", self.source))
            }
            other => CliError::Invalid(format!("{}: {other}", self.source)),
        })
    }

    /// The functional called `name`, or all of them when `name` is `None`.
    pub fn select(&self, name: Option<&str>) -> Result<Vec<&NamedFunctional>, CliError> {
        match name {
            None => Ok(self.functionals.iter().collect()),
            Some(n) => self
                .functionals
                .iter()
                .find(|f| f.name == n)
                .map(|f| vec![f])
                .ok_or_else(|| CliError::Usage(format!("{}: no functional named {n:?}", self.source))),
        }
    }
}
