//! Invariant suite over a fixed roster of fields, reported as a pass/fail matrix.

use std::fmt;

use qmds_core::codes::{self, GrsSpec};
use qmds_core::family_complement::{self, FamilyBParams};
use qmds_core::family_subgroup::{self, FamilyAParams};
use qmds_core::quantum::{self, Family};
use qmds_core::verify::Budgets;
use qmds_core::{Elem, Field, Result};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::construct::{self, Options, Params};

pub const ROSTER: [u64; 8] = [3, 4, 5, 7, 8, 9, 11, 13];

pub const COLUMNS: [&str; 5] = ["gf", "codes", "family_a", "family_b", "quantum"];

const RANDOM_SPECS: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Pass,
    Fail(String),
    NotApplicable,
}

impl Cell {
    fn from_result(r: Result<Option<String>>) -> Cell {
        match r {
            Ok(None) => Cell::Pass,
            Ok(Some(why)) => Cell::Fail(why),
            Err(e) => Cell::Fail(e.to_string()),
        }
    }

    pub fn failed(&self) -> bool {
        matches!(self, Cell::Fail(_))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Cell::Pass => "pass",
            Cell::Fail(_) => "FAIL",
            Cell::NotApplicable => "-",
        })
    }
}

#[derive(Debug, Clone)]
pub struct RosterRow {
    pub q: u64,
    pub cells: [Cell; 5],
}

#[derive(Debug, Clone)]
pub struct Summary {
    pub rows: Vec<RosterRow>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.cells.iter().all(|c| !c.failed()))
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>4}", "q")?;
        for c in COLUMNS {
            write!(f, "  {c:<9}")?;
        }
        writeln!(f)?;
        for row in &self.rows {
            write!(f, "{:>4}", row.q)?;
            for c in &row.cells {
                write!(f, "  {c:<9}")?;
            }
            writeln!(f)?;
        }
        for row in &self.rows {
            for (name, c) in COLUMNS.iter().zip(&row.cells) {
                if let Cell::Fail(why) = c {
                    writeln!(f, "q = {}, {name}: {why}", row.q)?;
                }
            }
        }
        write!(
            f,
            "{}",
            if self.passed() {
                "all checks passed"
            } else {
                "FAILED"
            }
        )
    }
}

/// Budgets small enough that the whole roster runs in seconds.
fn budgets() -> Budgets {
    Budgets {
        codewords: 100_000,
        minors: 100_000,
    }
}

fn fail(cond: bool, why: impl FnOnce() -> String) -> Option<String> {
    (!cond).then(why)
}

fn gf_laws(f: &Field) -> Result<Option<String>> {
    let all: Vec<Elem> = f.elements().collect();
    let probe = &all[..all.len().min(16)];
    if f.subfield_elements().count() as u64 != f.q() {
        return Ok(Some("subfield size".into()));
    }
    for &a in &all {
        if !f.add(a, f.neg(a)).is_zero() || f.frobenius(f.frobenius(a)) != a {
            return Ok(Some(format!("negation or Frobenius order at {a}")));
        }
        if !a.is_zero() && f.mul(a, f.inv(a)?) != Elem::ONE {
            return Ok(Some(format!("inverse at {a}")));
        }
        if !f.in_subfield(f.trace(a)) || !f.in_subfield(f.norm(a)) {
            return Ok(Some(format!("trace or norm outside GF(q) at {a}")));
        }
        for &b in &all {
            let ok = f.add(a, b) == f.add(b, a)
                && f.mul(a, b) == f.mul(b, a)
                && f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b))
                && f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b))
                && f.norm(f.mul(a, b)) == f.mul(f.norm(a), f.norm(b));
            if !ok {
                return Ok(Some(format!("field law at ({a}, {b})")));
            }
            for &c in probe {
                if f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))
                    || f.add(f.add(a, b), c) != f.add(a, f.add(b, c))
                {
                    return Ok(Some(format!("distributivity at ({a}, {b}, {c})")));
                }
            }
        }
    }
    Ok(None)
}

fn random_spec<'f>(f: &'f Field, rng: &mut ChaCha8Rng) -> Result<GrsSpec<'f>> {
    let mut pts: Vec<Elem> = f.elements().collect();
    pts.shuffle(rng);
    let n = rng.gen_range(2..=pts.len().min(8));
    let k = rng.gen_range(1..=n.min(3));
    let units = f.units() as u32;
    let v = (0..n).map(|_| Elem::Pow(rng.gen_range(0..units))).collect();
    pts.truncate(n);
    GrsSpec::new(f, pts, v, k)
}

/// Both self-orthogonality routes agree, and small codes have full rank and distance `n − k + 1`.
fn codes_random(f: &Field) -> Result<Option<String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(f.q());
    for _ in 0..RANDOM_SPECS {
        let spec = random_spec(f, &mut rng)?;
        codes::self_orthogonality(&spec)?;
        let g = codes::grs_generator(&spec);
        let (n, k) = (spec.n(), spec.k());
        if g.rank() != k {
            return Ok(Some(format!("rank deficient [{n}, {k}]")));
        }
        match codes::min_distance_exhaustive(&g, budgets().codewords) {
            Ok(d) if d != n - k + 1 => return Ok(Some(format!("[{n}, {k}] has distance {d}"))),
            _ => {}
        }
    }
    Ok(None)
}

fn check_all(
    f: &Field,
    params: impl Iterator<Item = Result<Params>>,
    opts: &Options,
) -> Result<Option<String>> {
    for p in params {
        let p = p?;
        let out = construct::build_and_check(f, &p, opts)?;
        if !out.passed() {
            return Ok(Some(format!("checks failed for {p:?}")));
        }
    }
    Ok(None)
}

fn family_a(f: &Field, opts: &Options) -> Cell {
    let q = f.q();
    if q % 2 == 0 {
        return Cell::NotApplicable;
    }
    let mut params = Vec::new();
    for s in (1..q).step_by(2).filter(|s| (q - 1) % s == 0) {
        let m = (q - 1) / s;
        let mu = (s + 1) * m / 2;
        let extra = (|| {
            let h = f.subgroup_elements(m * (s * m + 2))?;
            let t = family_subgroup::choose_twist(f, &h, mu)?;
            let twist_ok = h.iter().all(|&a| {
                !f.trace(f.mul(t, f.pow(a, -(mu as i64)).expect("nonzero")))
                    .is_zero()
            });
            Ok(fail(
                family_subgroup::trace_pair_holds(f, &h, mu) && twist_ok,
                || format!("trace pair fails for s = {s}"),
            ))
        })();
        match extra {
            Ok(None) => {}
            other => return Cell::from_result(other),
        }
        for lambda in 1..=s {
            params
                .extend((1..=mu).map(|k| FamilyAParams::new(q, s, lambda, k, None).map(Params::A)));
        }
    }
    Cell::from_result(check_all(f, params.into_iter(), opts))
}

fn family_b(f: &Field, opts: &Options) -> Cell {
    let q = f.q();
    let reps = family_complement::coset_rep_exponents(q, false);
    for &a in &reps {
        let c = f.pow_g(a as i64);
        let nc = f.norm(c);
        if let Some(x) = f
            .elements()
            .find(|&x| family_complement::coset_product(f, x, c) != f.sub(f.norm(x), nc))
        {
            return Cell::Fail(format!("coset product identity at x = {x}, c = g^{a}"));
        }
    }
    let params = (1..=family_complement::max_cosets(q, false))
        .flat_map(|s| (1..q.saturating_sub(s)).map(move |k| (s, k)))
        .map(|(s, k)| FamilyBParams::new(q, s, k, None, false).map(Params::B));
    let fams = check_all(f, params, opts);
    if let Ok(None) = fams {
        for s in 1..=family_complement::max_cosets(q, false) {
            let alpha = match family_complement::evaluation_set(f, &reps[..s as usize]) {
                Ok(a) => a,
                Err(e) => return Cell::Fail(e.to_string()),
            };
            match family_complement::lagrange_oracle(f, &alpha) {
                Ok(true) => {}
                Ok(false) => return Cell::Fail(format!("Lagrange sums fail for s = {s}")),
                Err(e) => return Cell::Fail(e.to_string()),
            }
        }
    }
    Cell::from_result(fams)
}

fn quantum_rows(q: u64) -> Cell {
    let rows = match quantum::table3_rows(q) {
        Ok(rows) => rows,
        Err(e) => return Cell::Fail(e.to_string()),
    };
    let bad = rows.iter().filter(|r| r.q == q).find(|r| {
        !quantum::singleton_check(&r.quantum)
            || r.d_exceeds_half_q != (2 * r.quantum.d > q)
            || (r.family == Family::A && q % 2 == 0)
    });
    match bad {
        Some(r) => Cell::Fail(format!("row {r:?}")),
        None => Cell::Pass,
    }
}

fn run_q(q: u64, inject_fault: bool) -> RosterRow {
    let field = match construct::field_for_q(q) {
        Ok(f) => f,
        Err(e) => {
            let c = Cell::Fail(e.to_string());
            return RosterRow {
                q,
                cells: [c.clone(), c.clone(), c.clone(), c.clone(), c],
            };
        }
    };
    let opts = Options {
        budgets: budgets(),
        inject_fault: inject_fault.then_some(0),
        ..Options::default()
    };
    RosterRow {
        q,
        cells: [
            Cell::from_result(gf_laws(&field)),
            Cell::from_result(codes_random(&field)),
            family_a(&field, &opts),
            family_b(&field, &opts),
            quantum_rows(q),
        ],
    }
}

/// Runs the suite on [`ROSTER`]; `inject_fault` corrupts one scalar of every constructed code.
pub fn run(inject_fault: bool) -> Summary {
    Summary {
        rows: ROSTER.par_iter().map(|&q| run_q(q, inject_fault)).collect(),
    }
}
