//! Codes of length q² − s(q+1) on the complement of s cosets of `S = ⟨g^(q−1)⟩`.
//!
//! `S` is the group of (q+1)-st roots of unity, the kernel of the norm, so a
//! coset `cS` is exactly the fibre `{x : x^(q+1) = c^(q+1)}` and
//! `∏_{u∈S} (x − cu) = x^(q+1) − c^(q+1)`. Removing s cosets from the full
//! field, where `∏_{β≠α} (α − β) = −1`, leaves the Lagrange weights
//! `∏_{j≠i} (α_i − α_j)^(−1) = −∏_c (α_i^(q+1) − c^(q+1))`, which lie in
//! GF(q)*. Taking them as `v_i^(q+1)` turns every criterion sum into a
//! Lagrange power sum of exponent at most `(q+1)(k−1) <= n − 2`, which vanishes.
//!
//! Coset representatives are indexed into an ordered list. The first entries
//! are `g^(t(q+1))` (representatives inside GF(q)): `(q−1)/2` of them for odd
//! q, `q−1` for even q. With `extended` set and q odd, the remaining cosets
//! follow as `g^(u(q+1)+1)`.

use alloc::format;
use alloc::vec::Vec;

use crate::arith::prime_power;
use crate::codes::{self, GrsSpec};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::quantum::QuantumParams;

/// Largest number of removable cosets.
pub fn max_cosets(q: u64, extended: bool) -> u64 {
    if q % 2 == 0 || extended {
        q - 1
    } else {
        (q - 1) / 2
    }
}

/// Exponents of the coset representatives, in index order.
pub fn coset_rep_exponents(q: u64, extended: bool) -> Vec<u64> {
    let inside = if q % 2 == 0 { q - 1 } else { (q - 1) / 2 };
    let mut reps: Vec<u64> = (0..inside).map(|t| t * (q + 1)).collect();
    if extended && q % 2 == 1 {
        reps.extend((0..(q - 1) / 2).map(|u| u * (q + 1) + 1));
    }
    reps
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyBParams {
    pub q: u64,
    pub s: u64,
    /// Indices into [`coset_rep_exponents`].
    pub removed: Vec<u64>,
    /// Exponents `a` of the removed representatives `g^a`.
    pub rep_exponents: Vec<u64>,
    pub n: u64,
    pub k: u64,
    pub k_max: u64,
    /// Whether odd q may remove cosets without a representative in GF(q).
    pub extended: bool,
}

impl FamilyBParams {
    /// Default removed cosets are indices `0..s`.
    pub fn new(q: u64, s: u64, k: u64, removed: Option<Vec<u64>>, extended: bool) -> Result<Self> {
        if prime_power(q).is_none() {
            return Err(Error::params(format!("q = {q} must be a prime power")));
        }
        let limit = max_cosets(q, extended);
        if s == 0 || s > limit {
            let bound = if q % 2 == 1 && !extended {
                "(q - 1)/2"
            } else {
                "q - 1"
            };
            return Err(Error::params(format!(
                "s must satisfy 1 <= s <= {bound} = {limit}"
            )));
        }
        let removed = removed.unwrap_or_else(|| (0..s).collect());
        if removed.len() as u64 != s {
            return Err(Error::params("need exactly s removed coset indices"));
        }
        let mut sorted = removed.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::params("removed cosets must be distinct"));
        }
        if let Some(&bad) = sorted.iter().find(|&&t| t >= limit) {
            return Err(Error::params(format!(
                "removed coset index {bad} out of range 0..{limit}"
            )));
        }
        let all = coset_rep_exponents(q, extended);
        let rep_exponents = removed.iter().map(|&t| all[t as usize]).collect();

        let n = q * q - s * (q + 1);
        let k_max = ((n as i64 - 2).div_euclid(q as i64 + 1) + 1) as u64;
        assert_eq!(k_max, q - 1 - s, "k_max simplification");
        if k == 0 {
            return Err(Error::params("k must be at least 1"));
        }
        if k > k_max {
            return Err(Error::params(format!("k exceeds q - 1 - s = {k_max}")));
        }
        Ok(FamilyBParams {
            q,
            s,
            removed,
            rep_exponents,
            n,
            k,
            k_max,
            extended,
        })
    }

    /// `[[n, n − 2k, k + 1]]_q`.
    pub fn quantum(&self) -> QuantumParams {
        QuantumParams::new(self.n, self.n - 2 * self.k, self.k + 1, self.q)
    }
}

/// Formula-level quantum parameters (no construction).
pub fn family_b_quantum(params: &FamilyBParams) -> QuantumParams {
    params.quantum()
}

fn coset_class(field: &Field, x: Elem) -> Option<u64> {
    x.exponent().map(|k| k as u64 % (field.q() - 1))
}

/// GF(q²) minus the cosets `g^a·S`, ordered by norm (0 first), then exponent.
pub fn evaluation_set(field: &Field, rep_exponents: &[u64]) -> Result<Vec<Elem>> {
    let q1 = field.q() - 1;
    let mut classes: Vec<u64> = rep_exponents.iter().map(|a| a % q1).collect();
    classes.sort_unstable();
    if classes.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::params("removed cosets overlap"));
    }
    let mut points: Vec<Elem> = field
        .elements()
        .filter(|&x| coset_class(field, x).is_none_or(|c| classes.binary_search(&c).is_err()))
        .collect();
    points.sort_by_key(|&x| (x.exponent().map(|k| k as u64 % q1), x));
    Ok(points)
}

/// `∏_{u ∈ S} (x − c·u)` by direct multiplication.
pub fn coset_product(field: &Field, x: Elem, c: Elem) -> Elem {
    let roots = field
        .subgroup_elements(field.q() + 1)
        .expect("q + 1 divides q² − 1");
    field.product(roots.iter().map(|&u| field.sub(x, field.mul(c, u))))
}

/// The weights `w_i = −∏_c (α_i^(q+1) − c^(q+1))`, checked to lie in GF(q)*
/// and cross-checked against `∏_{j≠i} (α_i − α_j)^(−1)`: at every point when
/// `n <= 30`, at an evenly spaced sample of 16 points otherwise.
pub fn scalar_weights(field: &Field, alpha: &[Elem], rep_exponents: &[u64]) -> Result<Vec<Elem>> {
    let norms: Vec<Elem> = rep_exponents
        .iter()
        .map(|&a| field.norm(field.pow_g(a as i64)))
        .collect();
    let weights = alpha
        .iter()
        .map(|&a| {
            let na = field.norm(a);
            let w = field.neg(field.product(norms.iter().map(|&c| field.sub(na, c))));
            if w.is_zero() || !field.in_subfield(w) {
                return Err(Error::falsified(format!("weight at {a} is not in GF(q)*")));
            }
            Ok(w)
        })
        .collect::<Result<Vec<_>>>()?;

    let n = alpha.len();
    let stride = if n <= 30 { 1 } else { n.div_ceil(16) };
    for i in (0..n).step_by(stride) {
        let direct = field.product(
            alpha
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &b)| field.sub(alpha[i], b)),
        );
        if field.mul(direct, weights[i]) != Elem::ONE {
            return Err(Error::RouteDisagreement(format!(
                "closed-form weight at {} differs from the direct product",
                alpha[i]
            )));
        }
    }
    Ok(weights)
}

/// Column scalars `v_i` with `v_i^(q+1) = w_i` (smallest-exponent preimages).
pub fn scalar_vector(field: &Field, alpha: &[Elem], rep_exponents: &[u64]) -> Result<Vec<Elem>> {
    scalar_weights(field, alpha, rep_exponents)?
        .into_iter()
        .map(|w| field.norm_preimage(w))
        .collect()
}

fn lagrange_denominators(field: &Field, alpha: &[Elem]) -> Result<Vec<Elem>> {
    alpha
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let d = field.product(
                alpha
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &b)| field.sub(a, b)),
            );
            field.inv(d).map_err(|_| Error::RepeatedPoint)
        })
        .collect()
}

/// `Σ_s α_s^exp / ∏_{k≠s} (α_s − α_k)`.
pub fn lagrange_power_sum(field: &Field, alpha: &[Elem], exp: u64) -> Result<Elem> {
    Ok(lagrange_power_sums(field, alpha, exp)?[exp as usize])
}

/// The Lagrange power sums for every exponent `0..=max_exp`.
pub fn lagrange_power_sums(field: &Field, alpha: &[Elem], max_exp: u64) -> Result<Vec<Elem>> {
    let inv = lagrange_denominators(field, alpha)?;
    let mut terms = inv;
    let mut sums = Vec::with_capacity(max_exp as usize + 1);
    for _ in 0..=max_exp {
        sums.push(field.sum(terms.iter().copied()));
        for (t, &a) in terms.iter_mut().zip(alpha) {
            *t = field.mul(*t, a);
        }
    }
    Ok(sums)
}

/// True iff the Lagrange sums vanish for exponents `<= n − 2` and equal 1 at `n − 1`.
pub fn lagrange_oracle(field: &Field, alpha: &[Elem]) -> Result<bool> {
    let n = alpha.len() as u64;
    if n == 0 {
        return Ok(true);
    }
    let sums = lagrange_power_sums(field, alpha, n - 1)?;
    let (last, rest) = sums.split_last().expect("n >= 1");
    Ok(*last == Elem::ONE && rest.iter().all(|x| x.is_zero()))
}

#[derive(Debug, Clone)]
pub struct FamilyBCode<'f> {
    pub params: FamilyBParams,
    /// `v_i^(q+1)` for each point.
    pub weights: Vec<Elem>,
    pub spec: GrsSpec<'f>,
}

/// Builds `GRS_k(α, v)` on the evaluation set and confirms the criterion grid
/// vanishes before returning it.
pub fn build_family_b<'f>(field: &'f Field, params: &FamilyBParams) -> Result<FamilyBCode<'f>> {
    if field.q() != params.q {
        return Err(Error::params(format!(
            "field has q = {}, parameters need q = {}",
            field.q(),
            params.q
        )));
    }
    let alpha = evaluation_set(field, &params.rep_exponents)?;
    if alpha.len() as u64 != params.n {
        return Err(Error::falsified(format!(
            "evaluation set has {} points, expected {}",
            alpha.len(),
            params.n
        )));
    }
    let weights = scalar_weights(field, &alpha, &params.rep_exponents)?;
    let v = weights
        .iter()
        .map(|&w| field.norm_preimage(w))
        .collect::<Result<Vec<_>>>()?;
    let spec = GrsSpec::new(field, alpha, v, params.k as usize)?;
    if !codes::criterion_sums(&spec).is_zero() {
        return Err(Error::falsified(format!(
            "criterion grid nonzero for q = {}, s = {}, k = {}",
            params.q, params.s, params.k
        )));
    }
    Ok(FamilyBCode {
        params: params.clone(),
        weights,
        spec,
    })
}
