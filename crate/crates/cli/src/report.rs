//! Serializable command reports. Every number is an exact rational or
//! integer written as a string (`"p"` or `"p/q"`), so documents round-trip.

use std::fmt::{self, Write as _};

use nilorbit::exactlin::{format_rat, parse_rat, Int, Rat};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

pub const FORMAT_VERSION: u32 = 1;

/// Exact rational serialized as a string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Q(pub Rat);

/// Exact integer serialized as a string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Z(pub Int);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(&self.0))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_rat(&text).map(Q).map_err(de::Error::custom)
    }
}

impl Serialize for Z {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Z {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.trim().parse::<Int>().map(Z).map_err(de::Error::custom)
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rat(&self.0))
    }
}

impl fmt::Display for Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn qs(v: &[Rat]) -> Vec<Q> {
    v.iter().cloned().map(Q).collect()
}

pub fn zs(v: &[Int]) -> Vec<Z> {
    v.iter().cloned().map(Z).collect()
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub format_version: u32,
    #[serde(flatten)]
    pub body: Body,
}

impl Report {
    pub fn new(body: Body) -> Self {
        Report { format_version: FORMAT_VERSION, body }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Body {
    Validate(ValidateReport),
    Mult(FunctionalReports),
    MooreCheck(FunctionalReports),
    Spectrum(SpectrumReport),
    Counterexample(Box<CounterexampleSummary>),
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct ClosureSummary {
    pub word_length: usize,
    pub samples: usize,
    pub seed: u64,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct ValidateReport {
    pub problem: String,
    pub dimension: usize,
    pub names: Vec<String>,
    pub step: usize,
    /// dimensions of g, [g, g], ... down to 0
    pub lower_central_series: Vec<usize>,
    pub center_dimension: usize,
    pub lattice: Vec<Vec<Q>>,
    pub closure: ClosureSummary,
    /// whether the given lattice basis, in order, is a strong Malcev basis
    pub strong_malcev_basis: bool,
    pub integral_dual: Vec<Vec<Q>>,
    pub functionals: Vec<FunctionalCheck>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct FunctionalCheck {
    pub name: String,
    pub coords: Vec<Q>,
    pub integral: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// `mult = |Pf(A_l)|`, `count = det(A_l)` on a step <= 2 group
    ClosedForm,
    /// Γ-orbit classes of the built-in filiform fixture
    FixtureClasses,
    /// Γ-orbit classes listed in the problem file
    SuppliedClasses,
    /// the coadjoint orbit misses the integral dual
    OrbitMissesIntegralDual,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ClosedForm => "closed form",
            Method::FixtureClasses => "fixture classes",
            Method::SuppliedClasses => "supplied classes",
            Method::OrbitMissesIntegralDual => "orbit misses the integral dual",
        })
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct AMatrixSummary {
    pub malcev_basis: Vec<Vec<Q>>,
    pub pass_through: usize,
    pub matrix: Vec<Vec<Z>>,
    pub det: Z,
    pub pfaffian: Z,
    pub elementary_divisors: Vec<Z>,
    pub c_omega: Q,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct FunctionalReport {
    pub name: String,
    pub functional: Vec<Q>,
    pub step: usize,
    pub method: Method,
    /// integral point of the orbit used in place of a non-integral functional
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit_point: Option<Vec<Q>>,
    pub stabilizer: Vec<Vec<Q>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_matrix: Option<AMatrixSummary>,
    pub count: Z,
    pub mult: Q,
    pub mult_squared: Q,
    pub moore_holds: bool,
    pub inequality_holds: bool,
    /// Γ-orbit representatives, listed when there are few of them
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<Vec<Q>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c_omegas: Option<Vec<Q>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct FunctionalReports {
    pub problem: String,
    pub functionals: Vec<FunctionalReport>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct SpectrumRow {
    pub representative: Vec<Q>,
    pub orbit_dimension: usize,
    /// dual-lattice points of the scanned box on this orbit
    pub points: usize,
    pub mult: Q,
    pub count: Z,
    pub moore_holds: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct SpectrumReport {
    pub problem: String,
    pub bound: u32,
    pub points_scanned: usize,
    pub orbits: Vec<SpectrumRow>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct FiliformChecksSummary {
    pub action_samples: usize,
    pub parametrization_samples: usize,
    pub invariance_samples: usize,
    pub wrap_witnesses: usize,
    pub polarization_isotropic: bool,
    pub polarization_integral: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct ActionSample {
    pub r: Q,
    pub s: Q,
    pub t: Q,
    pub t0: Q,
    pub s0: Q,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct CounterexampleSummary {
    pub functional: Vec<Q>,
    pub orbit: String,
    pub integral_points: String,
    pub window: String,
    pub representatives: Vec<Vec<Q>>,
    pub c_omegas: Vec<Q>,
    pub a_matrix: AMatrixSummary,
    pub count: Z,
    pub mult: Q,
    pub mult_squared: Q,
    pub moore_holds: bool,
    pub inequality_holds: bool,
    /// `det(A_l)`, the count the two-step formula would predict
    pub two_step_prediction: Z,
    pub checks: FiliformChecksSummary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action_check: Option<Vec<ActionSample>>,
}

fn vector(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn matrix(m: &[Vec<Z>]) -> String {
    let rows: Vec<String> =
        m.iter().map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

fn verdict(holds: bool) -> &'static str {
    if holds {
        "holds"
    } else {
        "fails"
    }
}

impl Report {
    /// Human-readable rendering.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        match &self.body {
            Body::Validate(v) => {
                let _ = writeln!(out, "problem           {}", v.problem);
                let _ = writeln!(out, "dimension         {}", v.dimension);
                let _ = writeln!(out, "basis             {}", v.names.join(", "));
                let series: Vec<String> = v.lower_central_series.iter().map(|d| d.to_string()).collect();
                let _ = writeln!(out, "step              {} (series dims {})", v.step, series.join(" > "));
                let _ = writeln!(out, "center dimension  {}", v.center_dimension);
                let _ = writeln!(
                    out,
                    "lattice closure   ok (all generator pairs, {} words of length <= {}, seed {})",
                    v.closure.samples, v.closure.word_length, v.closure.seed
                );
                let _ = writeln!(out, "strong Malcev     {}", if v.strong_malcev_basis { "yes" } else { "no" });
                let dual: Vec<String> = v.integral_dual.iter().map(|b| vector(b)).collect();
                let _ = writeln!(out, "integral dual     Z-span of {}", dual.join(", "));
                for f in &v.functionals {
                    let _ = writeln!(
                        out,
                        "functional        {} = {} {}",
                        f.name,
                        vector(&f.coords),
                        if f.integral { "integral" } else { "not integral" }
                    );
                }
            }
            Body::Mult(r) | Body::MooreCheck(r) => {
                let _ = writeln!(out, "problem {}", r.problem);
                for f in &r.functionals {
                    let _ = writeln!(out);
                    let _ = writeln!(out, "functional  {} = {}", f.name, vector(&f.functional));
                    let _ = writeln!(out, "  step      {}", f.step);
                    let _ = writeln!(out, "  method    {}", f.method);
                    if let Some(p) = &f.orbit_point {
                        let _ = writeln!(out, "  orbit pt  {}", vector(p));
                    }
                    if matches!(self.body, Body::Mult(_)) {
                        let stab: Vec<String> = f.stabilizer.iter().map(|v| vector(v)).collect();
                        let _ = writeln!(out, "  g(l)      span{{{}}}", stab.join(", "));
                        if let Some(a) = &f.a_matrix {
                            let _ = writeln!(out, "  A_l       {}", matrix(&a.matrix));
                            let _ = writeln!(
                                out,
                                "  det A_l   {}   Pf {}   c(Ω) {}   divisors {}",
                                a.det,
                                a.pfaffian,
                                a.c_omega,
                                a.elementary_divisors.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
                            );
                        }
                    }
                    let _ = writeln!(out, "  mult      {}", f.mult);
                    let _ = writeln!(out, "  count     {}", f.count);
                    let _ = writeln!(
                        out,
                        "  moore     {} (mult^2 = {}, count = {}; mult <= count {})",
                        verdict(f.moore_holds),
                        f.mult_squared,
                        f.count,
                        verdict(f.inequality_holds)
                    );
                }
            }
            Body::Spectrum(s) => {
                let _ = writeln!(
                    out,
                    "problem {}: {} dual-lattice points with coordinates in [-{b}, {b}], {} orbits",
                    s.problem,
                    s.points_scanned,
                    s.orbits.len(),
                    b = s.bound
                );
                let width = s.orbits.iter().map(|r| vector(&r.representative).len()).max().unwrap_or(0).max(14);
                let _ = writeln!(out, "{:<width$}  {:>3}  {:>6}  {:>6}  {:>8}  moore", "representative", "dim", "points", "mult", "count");
                for r in &s.orbits {
                    let _ = writeln!(
                        out,
                        "{:<width$}  {:>3}  {:>6}  {:>6}  {:>8}  {}",
                        vector(&r.representative),
                        r.orbit_dimension,
                        r.points,
                        r.mult.to_string(),
                        r.count.to_string(),
                        verdict(r.moore_holds)
                    );
                }
            }
            Body::Counterexample(c) => {
                let _ = writeln!(out, "four-dimensional filiform group, [X4, X2] = X1, [X4, X3] = X2");
                let _ = writeln!(out, "Γ = exp(Z X1 + Z X2 + Z X3 + 6Z X4), l = {}", vector(&c.functional));
                let _ = writeln!(out, "orbit             {}", c.orbit);
                let _ = writeln!(out, "integral points   {}", c.integral_points);
                let _ = writeln!(out, "window            {}", c.window);
                let _ = writeln!(out, "representatives   {}", c.representatives.len());
                for (f, w) in c.representatives.iter().zip(&c.c_omegas) {
                    let _ = writeln!(out, "  {}  c(Ω) = {}", vector(f), w);
                }
                let _ = writeln!(out, "A_l               {}", matrix(&c.a_matrix.matrix));
                let _ = writeln!(out, "det A_l           {}", c.a_matrix.det);
                let _ = writeln!(out, "|Pf A_l|          {}", c.a_matrix.pfaffian.0.magnitude());
                let _ = writeln!(out, "count             {}", c.count);
                let _ = writeln!(out, "mult              {} (sum of c(Ω))", c.mult);
                let _ = writeln!(out, "mult^2            {}", c.mult_squared);
                let _ = writeln!(
                    out,
                    "moore formula     {} ({} != {})",
                    verdict(c.moore_holds),
                    c.mult_squared,
                    c.count
                );
                let _ = writeln!(out, "moore inequality  {} ({} <= {})", verdict(c.inequality_holds), c.mult, c.count);
                let _ = writeln!(
                    out,
                    "det A_l vs count  {} vs {} (the two-step count formula does not apply)",
                    c.two_step_prediction, c.count
                );
                let k = &c.checks;
                let _ = writeln!(
                    out,
                    "checks            action {} samples, parametrization {}, invariance {}, wrap witnesses {}, polarization {}",
                    k.action_samples,
                    k.parametrization_samples,
                    k.invariance_samples,
                    k.wrap_witnesses,
                    if k.polarization_isotropic && k.polarization_integral { "ok" } else { "FAILED" }
                );
                if let Some(samples) = &c.action_check {
                    let _ = writeln!(out, "action spot checks ({} passed):", samples.len());
                    for a in samples {
                        let _ = writeln!(out, "  r={} s={} t={} t0={} s0={}  ok", a.r, a.s, a.t, a.t0, a.s0);
                    }
                }
            }
        }
        out
    }
}
