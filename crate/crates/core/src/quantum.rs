//! Quantum code parameters from verified Hermitian self-orthogonal codes.
//!
//! A Hermitian self-orthogonal `[n, k, n−k+1]` MDS code over GF(q²) has an MDS
//! Hermitian dual `[n, n−k, k+1]` that contains it, and the Hermitian
//! construction turns that dual into an `[[n, n−2k, k+1]]_q` code.

use alloc::vec::Vec;

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::family_complement::{self, FamilyBParams};
use crate::family_subgroup::FamilyAParams;
use crate::verify::Evidence;

/// Largest `q` accepted by [`table3_rows`].
pub const TABLE_CAP: u64 = 256;

/// `[[n, k, d]]_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuantumParams {
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub q: u64,
    /// Whether `k = n − 2(d − 1)`.
    pub mds: bool,
}

impl QuantumParams {
    pub fn new(n: u64, k: u64, d: u64, q: u64) -> Self {
        let mds = 2 * (d.max(1) - 1) <= n && k == n - 2 * (d.max(1) - 1);
        QuantumParams { n, k, d, q, mds }
    }
}

/// True iff the parameters meet the quantum Singleton bound with equality.
pub fn singleton_check(params: &QuantumParams) -> bool {
    params.d >= 1 && 2 * (params.d - 1) <= params.n && params.k == params.n - 2 * (params.d - 1)
}

/// `[[n, n−2k, k+1]]_q` for a code whose self-orthogonality was verified.
///
/// Evidence only exists for codes that passed; it must describe this code.
pub fn hermitian_css(
    n: u64,
    k_classical: u64,
    q: u64,
    evidence: Option<&Evidence>,
) -> Result<QuantumParams> {
    let ev = evidence.ok_or_else(|| Error::MissingEvidence("no checks were run".into()))?;
    if (ev.n(), ev.k(), ev.q()) != (n, k_classical, q) {
        return Err(Error::MissingEvidence(
            "evidence describes a different code".into(),
        ));
    }
    if 2 * k_classical > n {
        return Err(Error::params("a self-orthogonal code has 2k <= n"));
    }
    Ok(QuantumParams::new(
        n,
        n - 2 * k_classical,
        k_classical + 1,
        q,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    /// Cosets of a multiplicative subgroup, length λ(q²−1)/s.
    A,
    /// Complement of cosets of the (q+1)-st roots of unity, length q² − s(q+1).
    B,
}

/// One parameter row of the results table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub family: Family,
    pub q: u64,
    pub s: u64,
    pub m: Option<u64>,
    pub lambda: Option<u64>,
    pub n: u64,
    pub k_classical: u64,
    pub quantum: QuantumParams,
    /// Set by callers once the code was built and every check passed.
    pub verified: bool,
    pub d_exceeds_half_q: bool,
}

impl TableRow {
    fn new(
        family: Family,
        q: u64,
        s: u64,
        m: Option<u64>,
        lambda: Option<u64>,
        quantum: QuantumParams,
    ) -> Self {
        TableRow {
            family,
            q,
            s,
            m,
            lambda,
            n: quantum.n,
            k_classical: quantum.d - 1,
            d_exceeds_half_q: 2 * quantum.d > q,
            quantum,
            verified: false,
        }
    }
}

/// Every row of both families for prime powers `q <= q_max`, ordered by `q`,
/// then family A before B, then `s`, `λ`, `k`. All rows start unverified.
pub fn table3_rows(q_max: u64) -> Result<Vec<TableRow>> {
    if q_max > TABLE_CAP {
        return Err(Error::params(alloc::format!(
            "q_max = {q_max} exceeds the table cap {TABLE_CAP}"
        )));
    }
    let mut rows = Vec::new();
    for q in (2..=q_max).filter(|&q| prime_power(q).is_some()) {
        if q % 2 == 1 {
            for s in (1..q).step_by(2).filter(|s| (q - 1) % s == 0) {
                for lambda in 1..=s {
                    let mu = (s + 1) * ((q - 1) / s) / 2;
                    for k in 1..=mu {
                        let p = FamilyAParams::new(q, s, lambda, k, None)?;
                        rows.push(TableRow::new(
                            Family::A,
                            q,
                            s,
                            Some(p.m),
                            Some(lambda),
                            p.quantum(),
                        ));
                    }
                }
            }
        }
        for s in 1..=family_complement::max_cosets(q, false) {
            for k in 1..q.saturating_sub(s) {
                let p = FamilyBParams::new(q, s, k, None, false)?;
                rows.push(TableRow::new(Family::B, q, s, None, None, p.quantum()));
            }
        }
    }
    Ok(rows)
}
