//! Codes of length λ(q²−1)/s on cosets of the subgroup `H = ⟨g^s⟩`.
//!
//! Requires `q = sm + 1` with `q` and `s` odd. With `μ = (s+1)m/2` and the
//! points `α_r = g^(sr)` of `H`, the column scalars solve
//! `v_r^(q+1) = Tr(t·α_r^(−μ))` for a twist `t ∈ {1, g}` that keeps every trace
//! nonzero. The criterion sums then split into two power sums over `H`, at
//! exponents `qi+j−μ` and `qi+j−qμ`, and neither exponent is a multiple of
//! `|H|` while `i, j < μ`. Up to `s` distinct cosets `g_c·H` can be
//! concatenated, each block scaled by its representative.

use alloc::format;
use alloc::vec::Vec;

use crate::arith::prime_power;
use crate::codes::{self, GrsSpec};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::quantum::QuantumParams;

/// Validated parameters of a subgroup-family code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyAParams {
    pub q: u64,
    pub s: u64,
    pub m: u64,
    pub lambda: u64,
    /// |H| = (q²−1)/s = m(sm+2).
    pub n_base: u64,
    pub n: u64,
    /// (s+1)m/2, the largest admissible dimension.
    pub mu: u64,
    pub k: u64,
    /// Exponents `c` of the coset representatives `g^c`.
    pub coset_reps: Vec<u64>,
}

impl FamilyAParams {
    /// Default coset representatives are `g^0, ..., g^(λ−1)`.
    pub fn new(q: u64, s: u64, lambda: u64, k: u64, coset_reps: Option<Vec<u64>>) -> Result<Self> {
        if prime_power(q).is_none() {
            return Err(Error::params(format!("q = {q} must be a prime power")));
        }
        if q % 2 == 0 {
            return Err(Error::params("q must be odd"));
        }
        if s == 0 || s % 2 == 0 {
            return Err(Error::params("s must be odd"));
        }
        if (q - 1) % s != 0 {
            return Err(Error::params(format!(
                "s = {s} must divide q - 1 = {}",
                q - 1
            )));
        }
        let m = (q - 1) / s;
        if !(1..=s).contains(&lambda) {
            return Err(Error::params("lambda must satisfy 1 <= lambda <= s"));
        }
        let mu = (s + 1) * m / 2;
        if k == 0 {
            return Err(Error::params("k must be at least 1"));
        }
        if k > mu {
            return Err(Error::params(format!("k exceeds (s+1)m/2 = {mu}")));
        }
        let coset_reps = coset_reps.unwrap_or_else(|| (0..lambda).collect());
        if coset_reps.len() as u64 != lambda {
            return Err(Error::params("need exactly lambda coset representatives"));
        }
        let mut classes: Vec<u64> = coset_reps.iter().map(|c| c % s).collect();
        classes.sort_unstable();
        if classes.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::params(
                "coset representatives must lie in distinct cosets of H",
            ));
        }
        let n_base = m * (s * m + 2);
        debug_assert_eq!(s * n_base, q * q - 1);
        Ok(FamilyAParams {
            q,
            s,
            m,
            lambda,
            n_base,
            n: lambda * n_base,
            mu,
            k,
            coset_reps,
        })
    }

    /// `[[λ·n_base, λ·n_base − 2k, k+1]]_q`.
    pub fn quantum(&self) -> QuantumParams {
        QuantumParams::new(self.n, self.n - 2 * self.k, self.k + 1, self.q)
    }
}

/// Scans `0 <= i, j <= bound` and returns true iff no pair satisfies
/// `qi + j ≡ μ` or `qi + j ≡ qμ (mod n_base)`.
pub fn lemma3_scan(q: u64, s: u64, m: u64, bound: u64) -> Result<bool> {
    Ok(lemma3_violation(q, s, m, bound)?.is_none())
}

/// The first pair `(i, j)` (row-major) violating the scan, if any.
pub fn lemma3_violation(q: u64, s: u64, m: u64, bound: u64) -> Result<Option<(u64, u64)>> {
    if s % 2 == 0 || q % 2 == 0 || q != s * m + 1 {
        return Err(Error::params(
            "lemma scan needs q = sm + 1 with q and s odd",
        ));
    }
    let n = m * (s * m + 2);
    let mu = (s + 1) * m / 2;
    let targets = [mu % n, (q * mu) % n];
    for i in 0..=bound {
        for j in 0..=bound {
            if targets.contains(&((q * i + j) % n)) {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// True iff for every `α ∈ H`, `Tr(α^(−μ))` and `Tr(g·α^(−μ))` are not both zero.
pub fn trace_pair_holds(field: &Field, h: &[Elem], mu: u64) -> bool {
    let g = field.g();
    h.iter().all(|&a| {
        let x = field
            .pow(a, -(mu as i64))
            .expect("subgroup elements are nonzero");
        !(field.trace(x).is_zero() && field.trace(field.mul(g, x)).is_zero())
    })
}

/// Picks `t = 1` if `Tr(α^(−μ)) ≠ 0` on all of `H`, otherwise `t = g`, and
/// checks the choice exhaustively.
pub fn choose_twist(field: &Field, h: &[Elem], mu: u64) -> Result<Elem> {
    let nonvanishing = |t: Elem| {
        h.iter().all(|&a| {
            let x = field
                .pow(a, -(mu as i64))
                .expect("subgroup elements are nonzero");
            !field.trace(field.mul(t, x)).is_zero()
        })
    };
    [Elem::ONE, field.g()]
        .into_iter()
        .find(|&t| nonvanishing(t))
        .ok_or_else(|| {
            Error::falsified(format!(
                "neither t = 1 nor t = g keeps Tr(t·α^-{mu}) nonzero on H"
            ))
        })
}

/// A constructed subgroup-family code.
#[derive(Debug, Clone)]
pub struct FamilyACode<'f> {
    pub params: FamilyAParams,
    pub twist: Elem,
    /// `v^(q+1)` for each coordinate: `g_c^(q+1)·Tr(t·α_r^(−μ))`.
    pub weights: Vec<Elem>,
    pub spec: GrsSpec<'f>,
}

/// Builds `GRS_k(α, v)` over the λ chosen cosets of `H` and confirms the
/// criterion grid vanishes before returning it.
pub fn build_family_a<'f>(field: &'f Field, params: &FamilyAParams) -> Result<FamilyACode<'f>> {
    if field.q() != params.q {
        return Err(Error::params(format!(
            "field has q = {}, parameters need q = {}",
            field.q(),
            params.q
        )));
    }
    let h = field.subgroup_elements(params.n_base)?;
    let twist = choose_twist(field, &h, params.mu)?;
    let traces = h
        .iter()
        .map(|&a| Ok(field.trace(field.mul(twist, field.pow(a, -(params.mu as i64))?))))
        .collect::<Result<Vec<_>>>()?;
    let base_v = traces
        .iter()
        .map(|&tr| {
            field
                .norm_preimage(tr)
                .map_err(|_| Error::falsified("trace value outside GF(q)*"))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut alpha = Vec::with_capacity(params.n as usize);
    let mut v = Vec::with_capacity(params.n as usize);
    let mut weights = Vec::with_capacity(params.n as usize);
    for &c in &params.coset_reps {
        let rep = field.pow_g(c as i64);
        let rep_norm = field.norm(rep);
        alpha.extend(h.iter().map(|&a| field.mul(rep, a)));
        v.extend(base_v.iter().map(|&b| field.mul(rep, b)));
        weights.extend(traces.iter().map(|&tr| field.mul(rep_norm, tr)));
    }
    let spec = GrsSpec::new(field, alpha, v, params.k as usize)?;
    if !codes::criterion_sums(&spec).is_zero() {
        return Err(Error::falsified(format!(
            "criterion grid nonzero for q = {}, s = {}, lambda = {}, k = {}",
            params.q, params.s, params.lambda, params.k
        )));
    }
    Ok(FamilyACode {
        params: params.clone(),
        twist,
        weights,
        spec,
    })
}

/// Formula-level quantum parameters (no construction).
pub fn family_a_quantum(params: &FamilyAParams) -> QuantumParams {
    params.quantum()
}
