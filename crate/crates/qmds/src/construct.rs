//! Build one code from request parameters and run the full check suite on it.

use std::collections::BTreeMap;
use std::time::Instant;

use qmds_core::codes::{self, GrsSpec};
use qmds_core::family_complement::{self, FamilyBParams};
use qmds_core::family_subgroup::{self, FamilyAParams};
use qmds_core::quantum::{self, Family, QuantumParams};
use qmds_core::verify::{Budgets, Checker, CodeChecks};
use qmds_core::{Elem, Error, Field, Result};

use crate::report::{
    self, CheckResults, CodeSummary, FieldInfo, MatrixDump, MdsResult, QuantumJson, RequestEcho,
    VerificationReport,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Request {
    pub family: Family,
    pub p: u64,
    pub e: u32,
    pub s: u64,
    /// Family A only; defaults to 1.
    pub lambda: Option<u64>,
    pub k: u64,
    /// Coset representative exponents (A) or removed coset indices (B).
    pub reps: Option<Vec<u64>>,
    pub unsafe_extended: bool,
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub budgets: Budgets,
    pub timings: bool,
    pub dump_matrix: bool,
    /// Multiplies `v_i` by `g` after construction, for exercising the failure path.
    pub inject_fault: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Params {
    A(FamilyAParams),
    B(FamilyBParams),
}

impl Params {
    pub fn new(
        family: Family,
        q: u64,
        s: u64,
        lambda: Option<u64>,
        k: u64,
        reps: Option<Vec<u64>>,
        extended: bool,
    ) -> Result<Self> {
        match family {
            Family::A => {
                if extended {
                    return Err(Error::InvalidParams(
                        "--unsafe-extended applies to family B only".into(),
                    ));
                }
                FamilyAParams::new(q, s, lambda.unwrap_or(1), k, reps).map(Params::A)
            }
            Family::B => {
                if lambda.is_some() {
                    return Err(Error::InvalidParams(
                        "lambda applies to family A only".into(),
                    ));
                }
                FamilyBParams::new(q, s, k, reps, extended).map(Params::B)
            }
        }
    }

    pub fn q(&self) -> u64 {
        match self {
            Params::A(p) => p.q,
            Params::B(p) => p.q,
        }
    }

    pub fn n(&self) -> u64 {
        match self {
            Params::A(p) => p.n,
            Params::B(p) => p.n,
        }
    }

    pub fn k(&self) -> u64 {
        match self {
            Params::A(p) => p.k,
            Params::B(p) => p.k,
        }
    }

    pub fn quantum(&self) -> QuantumParams {
        match self {
            Params::A(p) => p.quantum(),
            Params::B(p) => p.quantum(),
        }
    }

    /// Extended family-B removals are checked but not backed by the theory.
    pub fn certified(&self) -> bool {
        match self {
            Params::A(_) => true,
            Params::B(p) => !p.extended || p.rep_exponents.iter().all(|a| a % (p.q + 1) == 0),
        }
    }
}

/// Everything the check suite found for one code.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub checks: CodeChecks,
    /// `lemma3` for family A, `lagrange_oracle` for family B.
    pub family_check: bool,
    pub quantum: Option<QuantumParams>,
    pub twist: Option<Elem>,
    pub elapsed_ms: BTreeMap<&'static str, f64>,
    pub matrix: Option<MatrixDump>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.checks.passed()
            && self.family_check
            && self.quantum.is_some_and(|q| quantum::singleton_check(&q))
    }

    /// Passed with an MDS oracle actually run.
    pub fn fully_verified(&self) -> bool {
        self.passed() && self.checks.fully_verified()
    }
}

struct Clock(BTreeMap<&'static str, f64>);

impl Clock {
    fn time<T>(&mut self, name: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.0.insert(name, start.elapsed().as_secs_f64() * 1e3);
        out
    }
}

pub fn field_for_q(q: u64) -> Result<Field> {
    let (p, e) = qmds_core::arith::prime_power(q)
        .ok_or_else(|| Error::InvalidParams(format!("q = {q} must be a prime power")))?;
    Field::new(p, e)
}

/// Builds the code described by `params` over `field` and runs every check.
pub fn build_and_check(field: &Field, params: &Params, opts: &Options) -> Result<Outcome> {
    let mut clock = Clock(BTreeMap::new());
    let (spec, weights, twist): (GrsSpec<'_>, Vec<Elem>, Option<Elem>) =
        clock.time("build", || match params {
            Params::A(p) => family_subgroup::build_family_a(field, p)
                .map(|c| (c.spec, c.weights, Some(c.twist))),
            Params::B(p) => {
                family_complement::build_family_b(field, p).map(|c| (c.spec, c.weights, None))
            }
        })?;
    let spec = match opts.inject_fault {
        Some(i) => spec.rescale_scalar(i, field.g())?,
        None => spec,
    };

    let mut checker = Checker::new(&spec, opts.budgets);
    clock.time("rank", || checker.rank());
    clock.time("self_orthogonality", || checker.self_orthogonality())?;
    clock.time("scalars", || checker.scalars(Some(&weights)));
    clock.time("mds", || checker.mds())?;
    let checks = checker.finish();

    let family_check = match params {
        Params::A(p) => clock.time("lemma3", || {
            family_subgroup::lemma3_scan(p.q, p.s, p.m, p.mu - 1)
        })?,
        Params::B(_) => clock.time("lagrange_oracle", || {
            family_complement::lagrange_oracle(field, spec.alpha())
        })?,
    };

    let quantum = if checks.structural_passed() && family_check {
        let n = spec.n() as u64;
        let k = spec.k() as u64;
        Some(quantum::hermitian_css(
            n,
            k,
            field.q(),
            checks.evidence().as_ref(),
        )?)
    } else {
        None
    };
    if let Some(qp) = quantum {
        if qp != params.quantum() {
            return Err(Error::RouteDisagreement(format!(
                "constructed code gives {qp:?}, parameter formula gives {:?}",
                params.quantum()
            )));
        }
    }

    let matrix = opts.dump_matrix.then(|| MatrixDump {
        alpha: report::elems(spec.alpha()),
        v: report::elems(spec.v()),
        generator: report::matrix(&codes::grs_generator(&spec)),
    });
    Ok(Outcome {
        checks,
        family_check,
        quantum,
        twist,
        elapsed_ms: clock.0,
        matrix,
    })
}

/// `construct`: validate, build, check and assemble the report.
pub fn run(req: &Request, opts: &Options) -> Result<VerificationReport> {
    let field = Field::new(req.p, req.e)?;
    let params = Params::new(
        req.family,
        field.q(),
        req.s,
        req.lambda,
        req.k,
        req.reps.clone(),
        req.unsafe_extended,
    )?;
    let out = build_and_check(&field, &params, opts)?;
    Ok(assemble(req, &field, &params, out, opts.timings))
}

fn assemble(
    req: &Request,
    field: &Field,
    params: &Params,
    out: Outcome,
    timings: bool,
) -> VerificationReport {
    let passed = out.passed();
    let so = out
        .checks
        .self_orthogonality()
        .expect("self-orthogonality ran");
    let mds = out.checks.mds().expect("mds ran");
    let mds_result = match (mds.distance, mds.column_minors) {
        (Some(d), _) => Some(MdsResult::Distance(d)),
        (None, Some(ok)) => Some(MdsResult::AllMinorsNonsingular(ok)),
        (None, None) => None,
    };
    let (lemma3, lagrange_oracle) = match params {
        Params::A(_) => (Some(out.family_check), None),
        Params::B(_) => (None, Some(out.family_check)),
    };
    VerificationReport {
        request: RequestEcho {
            family: report::family_name(req.family),
            p: req.p,
            e: req.e,
            s: req.s,
            lambda: match params {
                Params::A(p) => Some(p.lambda),
                Params::B(_) => None,
            },
            k: req.k,
            reps: req.reps.clone(),
            unsafe_extended: req.unsafe_extended,
        },
        field: FieldInfo::of(field),
        code: CodeSummary {
            n: params.n(),
            k: params.k(),
            claimed_distance: params.n() - params.k() + 1,
            twist: out.twist.map(report::elem_str),
        },
        checks: CheckResults {
            full_rank: out.checks.full_rank() == Some(true),
            criterion_grid_zero: so.criterion_grid_zero,
            rows_orthogonal: so.rows_orthogonal,
            scalars_in_subfield: out.checks.scalars() == Some(true),
            mds_method: mds.method().into(),
            mds_result,
            mds_distance: mds.distance,
            mds_column_minors: mds.column_minors,
            lemma3,
            lagrange_oracle,
        },
        certified: params.certified(),
        quantum: out.quantum.map(QuantumJson::from),
        passed,
        elapsed_ms: timings.then_some(out.elapsed_ms),
        matrix: out.matrix,
    }
}
