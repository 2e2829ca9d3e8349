//! Acceptance criteria, one line each. Arithmetic is exact, so every
//! comparison is equality. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qmds::construct::Options;
use qmds::report::RowStatus;
use qmds::table;
use qmds_core::arith::{binomial, prime_power};
use qmds_core::codes::{self, GrsSpec};
use qmds_core::family_complement::{self, build_family_b, FamilyBParams};
use qmds_core::family_subgroup::{self, build_family_a, FamilyAParams};
use qmds_core::linalg::{self, DEFAULT_MINOR_BUDGET};
use qmds_core::quantum::{self, QuantumParams};
use qmds_core::verify::{Budgets, Checker, MdsMethod};
use qmds_core::{Elem, Field};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

const ROSTER: [u64; 8] = [3, 4, 5, 7, 8, 9, 11, 13];

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn field(q: u64) -> Field {
    let (p, e) = prime_power(q).expect("prime power");
    Field::new(p, e).expect("field")
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Runs the checker and returns the quantum parameters its evidence supports.
fn certify(
    spec: &GrsSpec<'_>,
    weights: &[Elem],
    budgets: Budgets,
) -> Result<(QuantumParams, MdsMethod), String> {
    let checks = Checker::new(spec, budgets)
        .run_all(Some(weights))
        .map_err(err)?;
    ensure!(
        checks.fully_verified(),
        "checks did not all pass: {checks:?}"
    );
    let q = spec.field().q();
    let qp = quantum::hermitian_css(
        spec.n() as u64,
        spec.k() as u64,
        q,
        checks.evidence().as_ref(),
    )
    .map_err(err)?;
    Ok((qp, checks.mds().expect("mds ran").method()))
}

fn family_a_instance(
    q: u64,
    s: u64,
    lambda: u64,
    k: u64,
    expect_n: u64,
    expect_q: (u64, u64, u64),
) -> Outcome {
    let f = field(q);
    let params = FamilyAParams::new(q, s, lambda, k, None).map_err(err)?;
    let code = build_family_a(&f, &params).map_err(err)?;
    let spec = &code.spec;
    ensure!(
        spec.n() as u64 == expect_n && spec.k() as u64 == k,
        "got [{}, {}]",
        spec.n(),
        spec.k()
    );
    let grid = codes::criterion_sums(spec);
    ensure!(
        grid.rows() as u64 == k && grid.cols() as u64 == k && grid.is_zero(),
        "criterion grid nonzero"
    );
    ensure!(
        codes::is_hermitian_self_orthogonal_rows(&codes::grs_generator(spec)),
        "row products nonzero"
    );
    let g = codes::grs_generator(spec);
    let minors = binomial(expect_n, k);
    ensure!(
        linalg::mds_column_check(&g, DEFAULT_MINOR_BUDGET).map_err(err)?,
        "a k-column minor vanishes"
    );
    let (qp, _) = certify(spec, &code.weights, Budgets::default())?;
    ensure!(
        (qp.n, qp.k, qp.d) == expect_q && qp.q == q,
        "quantum {qp:?}"
    );
    // (λq² − 4q + 4 − λ)/3 for s = 3, k = 2m
    if s == 3 && k == 2 * params.m {
        ensure!(
            3 * qp.k == lambda * q * q - 4 * q + 4 - lambda,
            "Example 1 formula disagrees"
        );
    }
    Ok(format!(
        "[{expect_n},{k},{}]_{}, {k}x{k} grid zero, {minors} minors nonsingular, [[{},{},{}]]_{q}",
        expect_n - k + 1,
        q * q,
        qp.n,
        qp.k,
        qp.d
    ))
}

fn c1() -> Outcome {
    ensure!(binomial(16, 4) == 1820, "C(16,4)");
    family_a_instance(7, 3, 1, 4, 16, (16, 8, 5))
}

fn c2() -> Outcome {
    family_a_instance(7, 3, 3, 4, 48, (48, 40, 5))
}

fn c3() -> Outcome {
    let f = field(3);
    let code =
        build_family_a(&f, &FamilyAParams::new(3, 1, 1, 2, None).map_err(err)?).map_err(err)?;
    ensure!(code.spec.n() == 8, "n = {}", code.spec.n());
    let d = codes::min_distance_exhaustive(&codes::grs_generator(&code.spec), 81).map_err(err)?;
    ensure!(d == 7, "distance {d}");
    let (qp, method) = certify(&code.spec, &code.weights, Budgets::default())?;
    ensure!(method == MdsMethod::Exhaustive, "method {method:?}");
    ensure!((qp.n, qp.k, qp.d) == (8, 4, 3), "quantum {qp:?}");
    Ok("[8,2,7]_9, exhaustive distance 7 over 81 codewords, [[8,4,3]]_3".into())
}

fn family_b_instance(
    q: u64,
    s: u64,
    k: u64,
    n: u64,
    codewords: u128,
    expect_q: (u64, u64, u64),
) -> Result<(), String> {
    let f = field(q);
    let code =
        build_family_b(&f, &FamilyBParams::new(q, s, k, None, false).map_err(err)?).map_err(err)?;
    ensure!(code.spec.n() as u64 == n, "n = {}", code.spec.n());
    let d = codes::min_distance_exhaustive(&codes::grs_generator(&code.spec), codewords)
        .map_err(err)?;
    ensure!(d as u64 == n - k + 1, "distance {d}");
    let (qp, method) = certify(&code.spec, &code.weights, Budgets::default())?;
    ensure!(method == MdsMethod::Exhaustive, "method {method:?}");
    ensure!((qp.n, qp.k, qp.d) == expect_q, "quantum {qp:?}");
    Ok(())
}

fn c4() -> Outcome {
    family_b_instance(5, 1, 3, 19, 15_625, (19, 13, 4))?;
    let qp = FamilyBParams::new(5, 1, 3, None, false)
        .map_err(err)?
        .quantum();
    ensure!(qp.d == 5 - 1 && qp.k == 25 - 3 * 4, "Example 3 identity");
    Ok(
        "[19,3,17]_25, exhaustive distance 17 over 15625 codewords, [[19,13,4]]_5, d = q - s"
            .into(),
    )
}

fn c5() -> Outcome {
    family_b_instance(4, 1, 2, 11, 256, (11, 7, 3))?;
    Ok("[11,2,10]_16, [[11,7,3]]_4".into())
}

fn c6() -> Outcome {
    let mut count = 0;
    for q in (3..=50u64).step_by(2).filter(|&q| prime_power(q).is_some()) {
        for s in (1..q).step_by(2).filter(|s| (q - 1) % s == 0) {
            let m = (q - 1) / s;
            let mu = (s + 1) * m / 2;
            let hit = family_subgroup::lemma3_violation(q, s, m, mu - 1).map_err(err)?;
            ensure!(hit.is_none(), "q = {q}, s = {s}: solution {hit:?}");
            count += 1;
        }
    }
    Ok(format!("{count} (q, s) pairs, no solutions"))
}

fn c7() -> Outcome {
    let mut points = 0;
    for q in ROSTER.into_iter().filter(|q| q % 2 == 1) {
        let f = field(q);
        for s in (1..q).step_by(2).filter(|s| (q - 1) % s == 0) {
            let m = (q - 1) / s;
            let mu = (s + 1) * m / 2;
            let h = f.subgroup_elements(m * (s * m + 2)).map_err(err)?;
            let t = family_subgroup::choose_twist(&f, &h, mu).map_err(err)?;
            for &a in &h {
                let x = f.pow(a, -(mu as i64)).map_err(err)?;
                ensure!(
                    !(f.trace(x).is_zero() && f.trace(f.mul(f.g(), x)).is_zero()),
                    "q = {q}, s = {s}: both traces vanish at {a}"
                );
                ensure!(
                    !f.trace(f.mul(t, x)).is_zero(),
                    "q = {q}, s = {s}: twist {t} fails at {a}"
                );
                points += 1;
            }
        }
    }
    Ok(format!("{points} subgroup points, zero failures"))
}

fn c8() -> Outcome {
    let mut checks = 0u64;
    for q in [3u64, 4, 5, 7] {
        let f = field(q);
        let all: Vec<Elem> = f.elements().collect();
        let minus_one = f.neg(Elem::ONE);
        for &a in &all {
            let prod = f.product(all.iter().filter(|&&b| b != a).map(|&b| f.sub(a, b)));
            ensure!(prod == minus_one, "GF({}): product at {a} is {prod}", q * q);
            checks += 1;
        }
        for c in all.iter().copied().filter(|c| !c.is_zero()) {
            let nc = f.norm(c);
            for &x in &all {
                ensure!(
                    family_complement::coset_product(&f, x, c) == f.sub(f.norm(x), nc),
                    "GF({}): coset product at x = {x}, c = {c}",
                    q * q
                );
                checks += 1;
            }
        }
    }
    let f = field(5);
    let p = FamilyBParams::new(5, 1, 1, None, false).map_err(err)?;
    let alpha = family_complement::evaluation_set(&f, &p.rep_exponents).map_err(err)?;
    for (i, &a) in alpha.iter().enumerate() {
        let lhs = f.product(
            alpha
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &b)| f.sub(a, b)),
        );
        let rhs = f.neg(f.inv(f.sub(f.norm(a), Elem::ONE)).map_err(err)?);
        ensure!(lhs == rhs, "q = 5, s = 1: product at {a}");
        checks += 1;
    }
    Ok(format!("{checks} identities"))
}

/// Every evaluation-point set the construction uses on the roster.
fn evaluation_sets(f: &Field) -> Result<Vec<Vec<Elem>>, String> {
    let q = f.q();
    let mut sets = Vec::new();
    let reps = family_complement::coset_rep_exponents(q, false);
    for s in 1..=reps.len() {
        sets.push(family_complement::evaluation_set(f, &reps[..s]).map_err(err)?);
    }
    if q % 2 == 1 {
        for s in (1..q).step_by(2).filter(|s| (q - 1) % s == 0) {
            for lambda in 1..=s {
                let p = FamilyAParams::new(q, s, lambda, 1, None).map_err(err)?;
                sets.push(build_family_a(f, &p).map_err(err)?.spec.alpha().to_vec());
            }
        }
    }
    Ok(sets)
}

fn c9() -> Outcome {
    let mut sets = 0;
    for q in ROSTER {
        let f = field(q);
        for alpha in evaluation_sets(&f)? {
            let n = alpha.len() as u64;
            let sums = family_complement::lagrange_power_sums(&f, &alpha, n - 1).map_err(err)?;
            ensure!(
                sums[..sums.len() - 1].iter().all(|x| x.is_zero()),
                "q = {q}, n = {n}: a low sum is nonzero"
            );
            ensure!(
                sums[sums.len() - 1] == Elem::ONE,
                "q = {q}, n = {n}: top sum is not 1"
            );
            ensure!(
                family_complement::lagrange_oracle(&f, &alpha).map_err(err)?,
                "oracle disagrees"
            );
            sets += 1;
        }
    }
    Ok(format!("{sets} evaluation sets"))
}

fn routes_agree(spec: &GrsSpec<'_>) -> Result<(), String> {
    let grid = codes::criterion_sums(spec);
    let gram = codes::hermitian_gram(&codes::grs_generator(spec));
    ensure!(
        grid == gram,
        "grid and row products differ for n = {}, k = {}",
        spec.n(),
        spec.k()
    );
    Ok(())
}

fn c10() -> Outcome {
    let f = field(3);
    let mut rng = ChaCha8Rng::seed_from_u64(0x9);
    let all: Vec<Elem> = f.elements().collect();
    for _ in 0..500 {
        let mut pts = all.clone();
        pts.shuffle(&mut rng);
        let n = rng.gen_range(1..=8);
        let k = rng.gen_range(1..=n.min(3));
        pts.truncate(n);
        let v = (0..n).map(|_| Elem::Pow(rng.gen_range(0..8))).collect();
        routes_agree(&GrsSpec::new(&f, pts, v, k).map_err(err)?)?;
    }
    let mut family = 0;
    for q in ROSTER {
        let f = field(q);
        if q % 2 == 1 {
            for s in (1..q).step_by(2).filter(|s| (q - 1) % s == 0) {
                let mu = (s + 1) * ((q - 1) / s) / 2;
                for lambda in 1..=s {
                    for k in 1..=mu {
                        let p = FamilyAParams::new(q, s, lambda, k, None).map_err(err)?;
                        routes_agree(&build_family_a(&f, &p).map_err(err)?.spec)?;
                        family += 1;
                    }
                }
            }
        }
        for s in 1..=family_complement::max_cosets(q, false) {
            for k in 1..q.saturating_sub(s) {
                let p = FamilyBParams::new(q, s, k, None, false).map_err(err)?;
                routes_agree(&build_family_b(&f, &p).map_err(err)?.spec)?;
                family += 1;
            }
        }
    }
    Ok(format!(
        "500 random GF(9) specs and {family} family specs, zero exceptions"
    ))
}

fn c11() -> Outcome {
    let rows = quantum::table3_rows(13).map_err(err)?;
    for r in &rows {
        ensure!(
            quantum::singleton_check(&r.quantum),
            "not Singleton-saturating: {r:?}"
        );
        ensure!(
            r.d_exceeds_half_q == (2 * r.quantum.d > r.q),
            "flag wrong: {r:?}"
        );
    }
    let flagged = rows.iter().filter(|r| r.q == 7 && r.quantum.d == 5).count();
    ensure!(
        flagged > 0
            && rows
                .iter()
                .filter(|r| r.q == 7 && r.quantum.d == 5)
                .all(|r| r.d_exceeds_half_q),
        "q = 7, d = 5 rows"
    );

    let records = table::records(13, 8, &Options::default()).map_err(err)?;
    ensure!(records.len() == rows.len(), "row count");
    ensure!(
        records.iter().all(|r| r.status != RowStatus::Failed),
        "a verified row failed"
    );
    ensure!(
        records
            .iter()
            .all(|r| (r.q <= 8) == (r.status != RowStatus::NotRequested)),
        "verify-below ignored"
    );
    for want in [[16, 8, 5], [48, 40, 5], [19, 13, 4]] {
        ensure!(
            records.iter().any(|r| r.quantum == want && r.verified),
            "{want:?} not verified"
        );
    }

    // with the minor budget raised, every small row is checked by an MDS oracle
    let wide = Options {
        budgets: Budgets {
            minors: 30_000_000,
            ..Budgets::default()
        },
        ..Options::default()
    };
    let records = table::records(8, 8, &wide).map_err(err)?;
    ensure!(
        records.iter().all(|r| r.verified),
        "unverified row at raised budget"
    );
    let verified = records.len();
    Ok(format!("{} rows to q = 13, all {verified} rows with q <= 8 verified, {flagged} q = 7 d = 5 rows flagged", rows.len()))
}

type Criterion = (u8, &'static str, Option<Duration>, fn() -> Outcome);

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria: [Criterion; 11] = [
        (1, "family A q=7 s=3 lambda=1 k=4", secs(5), c1),
        (2, "family A q=7 s=3 lambda=3 k=4", secs(30), c2),
        (3, "family A q=3 s=1 k=2", None, c3),
        (4, "family B q=5 s=1 k=3", secs(5), c4),
        (5, "family B q=4 s=1 k=2", secs(2), c5),
        (6, "subgroup exponent scan, q <= 50", secs(10), c6),
        (7, "trace pair and twist", None, c7),
        (8, "product identities, q in {3,4,5,7}", None, c8),
        (9, "Lagrange power sums", None, c9),
        (10, "dual-route agreement", None, c10),
        (11, "quantum Singleton and table", None, c11),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(l)) if elapsed > l => Err(format!("took {elapsed:?}, limit {l:?}")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!(
                "PASS {id:>2}  {name}: {detail} ({:.3} s)",
                elapsed.as_secs_f64()
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "FAIL {id:>2}  {name}: {why} ({:.3} s)",
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
