use std::collections::HashMap;

use nilorbit::exactlin::{span_basis, Int, Rat};
use nilorbit::fixtures;
use nilorbit::lattice_subgroup::{integral_dual, ClosureCheck, LatticeSubgroup, MalcevBasis, MalcevKind};
use nilorbit::multiplicity::{
    a_matrix, in_dual_lattice, multiplicity_corwin_greenleaf, multiplicity_two_step, skew_form, AMatrix,
    MooreVerdict, MultiplicityError,
};
use nilorbit::nilpotent::{AlgebraElement, DualElement, LieAlgebra};
use nilorbit::orbits::{
    count_orbits_two_step, filiform_counterexample, on_filiform_orbit, spectrum_witness, verify_filiform_action,
    OrbitError,
};
use num_traits::{Signed, Zero};

use crate::error::CliError;
use crate::problem::{NamedFunctional, Problem};
use crate::report::{
    qs, zs, AMatrixSummary, ActionSample, Body, ClosureSummary, CounterexampleSummary, FiliformChecksSummary,
    FunctionalCheck, FunctionalReport, FunctionalReports, Method, Report, SpectrumReport, SpectrumRow,
    ValidateReport, Q, Z,
};

/// Representatives are listed in reports up to this many classes.
const LISTED_CLASSES: usize = 64;
/// Largest box scanned by `spectrum`.
const MAX_SPECTRUM_POINTS: usize = 200_000;
const ACTION_CHECK_SAMPLES: usize = 50;

fn closure_summary(check: &ClosureCheck) -> ClosureSummary {
    ClosureSummary { word_length: check.word_length, samples: check.samples, seed: check.seed }
}

fn vectors(v: &[AlgebraElement]) -> Vec<Vec<Q>> {
    v.iter().map(|x| qs(x.coords())).collect()
}

fn a_summary(a: &AMatrix) -> AMatrixSummary {
    AMatrixSummary {
        malcev_basis: vectors(a.malcev.vectors()),
        pass_through: a.malcev.pass_through(),
        matrix: a.matrix.to_rows().iter().map(|r| zs(r)).collect(),
        det: Z(a.det.clone()),
        pfaffian: Z(a.pfaffian.clone()),
        elementary_divisors: zs(&a.elementary_divisors),
        c_omega: Q(a.c_omega.clone()),
    }
}

pub fn validate(problem: &Problem, check: &ClosureCheck) -> Result<Report, CliError> {
    let gamma = problem.subgroup(check)?;
    let g = gamma.algebra();
    let mut series: Vec<usize> = g.lower_central_series().iter().map(|t| t.len()).collect();
    if series.last() != Some(&0) {
        series.push(0);
    }
    let strong = MalcevBasis::from_vectors(&gamma, gamma.generators(), 0, None)
        .map(|b| b.kind() == MalcevKind::Strong)
        .unwrap_or(false);
    let functionals = problem
        .functionals
        .iter()
        .map(|f| FunctionalCheck { name: f.name.clone(), coords: qs(f.coords.coords()), integral: in_dual_lattice(&gamma, &f.coords) })
        .collect();
    Ok(Report::new(Body::Validate(ValidateReport {
        problem: problem.name.clone(),
        dimension: g.dim(),
        names: g.names().to_vec(),
        step: g.step(),
        lower_central_series: series,
        center_dimension: g.center().len(),
        lattice: gamma.lattice().basis_vectors().iter().map(|v| qs(v)).collect(),
        closure: closure_summary(check),
        strong_malcev_basis: strong,
        integral_dual: integral_dual(&gamma).basis_vectors().iter().map(|v| qs(v)).collect(),
        functionals,
    })))
}

/// Whether the problem is the built-in four-dimensional filiform example.
fn is_filiform_fixture(g: &LieAlgebra, gamma: &LatticeSubgroup) -> bool {
    let reference = fixtures::filiform4();
    let brackets = |a: &LieAlgebra| a.brackets().map(|(i, j, v)| (i, j, v.clone())).collect::<Vec<_>>();
    g.dim() == 4 && brackets(g) == brackets(&reference) && *gamma.lattice() == fixtures::filiform4_lattice()
}

fn map_multiplicity(e: MultiplicityError) -> CliError {
    match e {
        MultiplicityError::StepTooLarge { .. } | MultiplicityError::UnsupportedStep { .. } => {
            CliError::Unsupported(e.to_string())
        }
        MultiplicityError::Subgroup(nilorbit::lattice_subgroup::SubgroupError::ChainNotFound) => {
            CliError::Unsupported(e.to_string())
        }
        other => CliError::Invalid(other.to_string()),
    }
}

fn map_orbit(e: OrbitError) -> CliError {
    match e {
        OrbitError::StepTooLarge { .. } | OrbitError::TooLarge { .. } => CliError::Unsupported(e.to_string()),
        OrbitError::Multiplicity(m) => map_multiplicity(m),
        other => CliError::Invalid(other.to_string()),
    }
}

fn zero_report(f: &NamedFunctional, g: &LieAlgebra) -> FunctionalReport {
    let moore = MooreVerdict::new(Rat::zero(), Int::zero());
    FunctionalReport {
        name: f.name.clone(),
        functional: qs(f.coords.coords()),
        step: g.step(),
        method: Method::OrbitMissesIntegralDual,
        orbit_point: None,
        stabilizer: vectors(&skew_form(g, &f.coords).stabilizer),
        a_matrix: None,
        count: Z(moore.count),
        mult: Q(moore.mult),
        mult_squared: Q(moore.mult_squared),
        moore_holds: moore.holds,
        inequality_holds: moore.inequality_holds,
        representatives: None,
        c_omegas: None,
    }
}

/// Multiplicity report for one functional, dispatched by step.
pub fn functional_report(
    problem: &Problem,
    gamma: &LatticeSubgroup,
    f: &NamedFunctional,
) -> Result<FunctionalReport, CliError> {
    let g = gamma.algebra();
    let n = g.dim();
    if f.coords.dim() != n {
        return Err(CliError::Invalid(format!("functional {} has the wrong dimension", f.name)));
    }
    let step = g.step();
    let stabilizer = vectors(&skew_form(g, &f.coords).stabilizer);
    if step <= 2 {
        // the multiplicity depends only on the orbit: move to an integral point
        let point = if in_dual_lattice(gamma, &f.coords) {
            f.coords.clone()
        } else {
            match spectrum_witness(gamma, &f.coords).map_err(map_orbit)? {
                Some(w) => w,
                None => return Ok(zero_report(f, g)),
            }
        };
        let report = multiplicity_two_step(gamma, &point).map_err(map_multiplicity)?;
        let representatives = if report.count <= Int::from(LISTED_CLASSES) {
            let classes = count_orbits_two_step(gamma, &point).map_err(map_orbit)?;
            Some(classes.representatives.iter().map(|r| qs(r.coords())).collect())
        } else {
            None
        };
        return Ok(FunctionalReport {
            name: f.name.clone(),
            functional: qs(f.coords.coords()),
            step,
            method: Method::ClosedForm,
            orbit_point: (point != f.coords).then(|| qs(point.coords())),
            stabilizer,
            a_matrix: report.a.as_ref().map(a_summary),
            count: Z(report.count),
            mult: Q(report.mult),
            mult_squared: Q(report.moore.mult_squared),
            moore_holds: report.moore.holds,
            inequality_holds: report.moore.inequality_holds,
            representatives,
            c_omegas: None,
        });
    }

    let (classes, method) = match &f.orbit_classes {
        Some(classes) => {
            let orbit_dim = n - skew_form(g, &f.coords).stabilizer.len();
            for c in classes {
                if !in_dual_lattice(gamma, c) {
                    return Err(CliError::Invalid(format!(
                        "orbit class {c} of functional {} is not in the integral dual",
                        f.name
                    )));
                }
                // necessary for lying on the same orbit, cheap to test
                if n - skew_form(g, c).stabilizer.len() != orbit_dim {
                    return Err(CliError::Invalid(format!(
                        "orbit class {c} of functional {} has orbit dimension {}, not {orbit_dim}",
                        f.name,
                        n - skew_form(g, c).stabilizer.len()
                    )));
                }
            }
            (classes.clone(), Method::SuppliedClasses)
        }
        None if is_filiform_fixture(g, gamma) && on_filiform_orbit(&f.coords) => {
            (filiform_counterexample().classes.representatives, Method::FixtureClasses)
        }
        None => {
            return Err(CliError::Unsupported(format!(
                "{}: functional {} lives on a step-{step} group; the closed form needs step <= 2. \
                 List its Γ-orbit classes under orbit_classes to use the class sum",
                problem.source, f.name
            )))
        }
    };
    let c_omegas: Vec<Rat> = classes
        .iter()
        .map(|c| match a_matrix(gamma, c) {
            Ok(a) => Ok(a.c_omega),
            Err(MultiplicityError::FullStabilizer) => Ok(Rat::from_integer(1.into())),
            Err(e) => Err(map_multiplicity(e)),
        })
        .collect::<Result<_, _>>()?;
    let mult = multiplicity_corwin_greenleaf(gamma, &classes).map_err(map_multiplicity)?;
    let moore = MooreVerdict::new(mult, Int::from(classes.len()));
    let a = if in_dual_lattice(gamma, &f.coords) { a_matrix(gamma, &f.coords).ok() } else { None };
    Ok(FunctionalReport {
        name: f.name.clone(),
        functional: qs(f.coords.coords()),
        step,
        method,
        orbit_point: None,
        stabilizer,
        a_matrix: a.as_ref().map(a_summary),
        count: Z(moore.count),
        mult: Q(moore.mult),
        mult_squared: Q(moore.mult_squared),
        moore_holds: moore.holds,
        inequality_holds: moore.inequality_holds,
        representatives: (classes.len() <= LISTED_CLASSES).then(|| classes.iter().map(|c| qs(c.coords())).collect()),
        c_omegas: (classes.len() <= LISTED_CLASSES).then(|| qs(&c_omegas)),
    })
}

fn functional_reports(problem: &Problem, check: &ClosureCheck, name: Option<&str>) -> Result<FunctionalReports, CliError> {
    let gamma = problem.subgroup(check)?;
    let selected = problem.select(name)?;
    if selected.is_empty() {
        return Err(CliError::Usage(format!("{}: the problem lists no functionals", problem.source)));
    }
    let functionals = selected.into_iter().map(|f| functional_report(problem, &gamma, f)).collect::<Result<_, _>>()?;
    Ok(FunctionalReports { problem: problem.name.clone(), functionals })
}

pub fn mult(problem: &Problem, check: &ClosureCheck, name: Option<&str>) -> Result<Report, CliError> {
    Ok(Report::new(Body::Mult(functional_reports(problem, check, name)?)))
}

pub fn moore_check(problem: &Problem, check: &ClosureCheck, name: Option<&str>) -> Result<Report, CliError> {
    let mut reports = functional_reports(problem, check, name)?;
    for r in &mut reports.functionals {
        r.a_matrix = None;
        r.representatives = None;
        r.c_omegas = None;
    }
    Ok(Report::new(Body::MooreCheck(reports)))
}

fn l1(f: &DualElement) -> Rat {
    f.coords().iter().fold(Rat::zero(), |acc, x| acc + x.abs())
}

type OrbitKey = (Vec<Vec<Rat>>, Vec<Rat>);

/// Orbit key on a two-step group: `g(f)` in reduced echelon form and the
/// values of `f` on it. Two functionals share an orbit iff their keys agree.
fn orbit_key(g: &LieAlgebra, f: &DualElement) -> OrbitKey {
    let n = g.dim();
    let stab: Vec<Vec<Rat>> = skew_form(g, f).stabilizer.iter().map(|v| v.coords().to_vec()).collect();
    let basis = span_basis(&stab, n);
    let values = basis.iter().map(|v| f.pair(&AlgebraElement::new(v.clone()))).collect();
    (basis, values)
}

pub fn spectrum(problem: &Problem, check: &ClosureCheck, bound: u32) -> Result<Report, CliError> {
    let gamma = problem.subgroup(check)?;
    let g = gamma.algebra();
    let n = g.dim();
    if g.step() > 2 {
        let hint = if is_filiform_fixture(g, &gamma) {
            format!(" For this fixture run `nilorbit mult {}` or `nilorbit counterexample`.", problem.source)
        } else {
            String::new()
        };
        return Err(CliError::Unsupported(format!(
            "spectrum needs step <= 2, {} has step {}.{hint}",
            problem.source,
            g.step()
        )));
    }
    let side = 2 * bound as usize + 1;
    let total = side.checked_pow(n as u32).filter(|&t| t <= MAX_SPECTRUM_POINTS).ok_or_else(|| {
        CliError::Unsupported(format!("bound {bound} in dimension {n} scans more than {MAX_SPECTRUM_POINTS} points"))
    })?;
    let dual = integral_dual(&gamma).basis_vectors();
    let b = bound as i64;

    // orbit key -> (representative, points on the orbit)
    let mut groups: HashMap<OrbitKey, (DualElement, usize)> = HashMap::new();
    let mut y = vec![-b; n];
    for _ in 0..total {
        let mut coords = vec![Rat::zero(); n];
        for (c, w) in y.iter().zip(&dual) {
            for (acc, x) in coords.iter_mut().zip(w) {
                *acc += x * Rat::from_integer((*c).into());
            }
        }
        let f = DualElement::new(coords);
        let key = orbit_key(g, &f);
        let entry = groups.entry(key).or_insert_with(|| (f.clone(), 0));
        entry.1 += 1;
        if (l1(&f), &f) < (l1(&entry.0), &entry.0) {
            entry.0 = f;
        }
        for c in y.iter_mut() {
            *c += 1;
            if *c <= b {
                break;
            }
            *c = -b;
        }
    }

    let mut reps: Vec<(DualElement, usize)> = groups.into_values().collect();
    reps.sort_by(|a, b| (l1(&a.0), &a.0).cmp(&(l1(&b.0), &b.0)));
    let mut orbits = Vec::with_capacity(reps.len());
    for (f, points) in reps {
        let report = multiplicity_two_step(&gamma, &f).map_err(map_multiplicity)?;
        orbits.push(SpectrumRow {
            representative: qs(f.coords()),
            orbit_dimension: report.skew.rank(),
            points,
            mult: Q(report.mult),
            count: Z(report.count),
            moore_holds: report.moore.holds,
        });
    }
    Ok(Report::new(Body::Spectrum(SpectrumReport {
        problem: problem.name.clone(),
        bound,
        points_scanned: total,
        orbits,
    })))
}

pub fn counterexample(verify_action: bool, seed: u64) -> Result<Report, CliError> {
    let r = filiform_counterexample();
    let action_check = if verify_action {
        let tuples = verify_filiform_action(ACTION_CHECK_SAMPLES, seed).map_err(|m| {
            CliError::Invalid(format!(
                "coadjoint action disagrees with the closed form at (r, s, t, t0, s0) = {:?}: expected {}, found {}",
                m.params.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                m.expected,
                m.found
            ))
        })?;
        Some(
            tuples
                .into_iter()
                .map(|[r, s, t, t0, s0]| ActionSample { r: Q(r), s: Q(s), t: Q(t), t0: Q(t0), s0: Q(s0) })
                .collect(),
        )
    } else {
        None
    };
    let k = &r.checks;
    Ok(Report::new(Body::Counterexample(Box::new(CounterexampleSummary {
        functional: qs(r.functional.coords()),
        orbit: "X1* + t X2* + (t^2/2) X3* + s X4*, t and s real".into(),
        integral_points: "f(t, s) = X1* + t X2* + (t^2/2) X3* + (s/6) X4*, t even, s integral".into(),
        window: "t in {0, 2, 4}, s in {0, ..., 5}; Γ moves (t, s) by (6Z, 6Z)".into(),
        representatives: r.classes.representatives.iter().map(|f| qs(f.coords())).collect(),
        c_omegas: qs(&r.c_omegas),
        a_matrix: a_summary(&r.a),
        count: Z(r.count.clone()),
        mult: Q(r.mult.clone()),
        mult_squared: Q(r.moore.mult_squared.clone()),
        moore_holds: r.moore.holds,
        inequality_holds: r.moore.inequality_holds,
        two_step_prediction: Z(r.two_step_prediction.clone()),
        checks: FiliformChecksSummary {
            action_samples: k.action_samples,
            parametrization_samples: k.parametrization_samples,
            invariance_samples: k.invariance_samples,
            wrap_witnesses: k.wrap_witnesses,
            polarization_isotropic: k.polarization_isotropic,
            polarization_integral: k.polarization_integral,
        },
        action_check,
    }))))
}
