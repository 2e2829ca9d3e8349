//! GRS codes, Hermitian inner products and the two self-orthogonality routes.
//!
//! `GRS_k(α, v)` has generator rows `(v_r α_r^i)_r` for `i < k`. Expanding the
//! Hermitian product of rows `i` and `j` gives
//! `Σ_r (v_r α_r^i)^q v_r α_r^j = Σ_r α_r^(qi+j) v_r^(q+1)`, so the code is
//! Hermitian self-orthogonal iff that k×k grid of sums vanishes. Both sides
//! are computed independently here and must agree entry by entry.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::CodeMatrix;

/// Default cap on the number of messages `(q²)^k` enumerated by [`min_distance_exhaustive`].
pub const DEFAULT_CODEWORD_BUDGET: u128 = 10_000_000;

/// `⟨u, w⟩_h = Σ u_i^q w_i`.
pub fn hermitian_inner(field: &Field, u: &[Elem], w: &[Elem]) -> Result<Elem> {
    if u.len() != w.len() {
        return Err(Error::LengthMismatch {
            expected: u.len(),
            found: w.len(),
        });
    }
    let mut acc = Elem::Zero;
    for (&a, &b) in u.iter().zip(w) {
        let term = field.mul(field.frobenius(field.check(a)?), field.check(b)?);
        acc = field.add(acc, term);
    }
    Ok(acc)
}

/// Evaluation points, column scalars and dimension of a GRS code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrsSpec<'f> {
    field: &'f Field,
    alpha: Vec<Elem>,
    v: Vec<Elem>,
    k: usize,
}

impl<'f> GrsSpec<'f> {
    pub fn new(field: &'f Field, alpha: Vec<Elem>, v: Vec<Elem>, k: usize) -> Result<Self> {
        if alpha.len() != v.len() {
            return Err(Error::LengthMismatch {
                expected: alpha.len(),
                found: v.len(),
            });
        }
        for &x in alpha.iter().chain(&v) {
            field.check(x)?;
        }
        let mut sorted = alpha.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::RepeatedPoint);
        }
        if v.iter().any(|x| x.is_zero()) {
            return Err(Error::params("column scalars must be nonzero"));
        }
        if k == 0 || k > alpha.len() {
            return Err(Error::params("dimension k must satisfy 1 <= k <= n"));
        }
        Ok(GrsSpec { field, alpha, v, k })
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn alpha(&self) -> &[Elem] {
        &self.alpha
    }

    pub fn v(&self) -> &[Elem] {
        &self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    /// Same code with `v[index]` multiplied by `factor` (nonzero). Used to
    /// exercise the failure paths of the checks.
    pub fn rescale_scalar(mut self, index: usize, factor: Elem) -> Result<Self> {
        if factor.is_zero() {
            return Err(Error::params("scalar factor must be nonzero"));
        }
        let slot = self
            .v
            .get_mut(index)
            .ok_or_else(|| Error::params("scalar index out of range"))?;
        *slot = self.field.mul(*slot, self.field.check(factor)?);
        Ok(self)
    }

    /// Simultaneously permutes points and scalars: position `r` takes entry `perm[r]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let alpha = perm
            .iter()
            .map(|&i| self.alpha.get(i).copied())
            .collect::<Option<Vec<_>>>();
        let v = perm
            .iter()
            .map(|&i| self.v.get(i).copied())
            .collect::<Option<Vec<_>>>();
        match (alpha, v) {
            (Some(a), Some(v)) if a.len() == self.n() => GrsSpec::new(self.field, a, v, self.k),
            _ => Err(Error::params("not a permutation of the coordinates")),
        }
    }
}

/// k×n generator matrix with entry `(i, r) = v_r α_r^i`.
pub fn grs_generator<'f>(spec: &GrsSpec<'f>) -> CodeMatrix<'f> {
    let f = spec.field;
    let mut g = CodeMatrix::zeros(f, spec.k, spec.n());
    for (r, (&a, &v)) in spec.alpha.iter().zip(&spec.v).enumerate() {
        let mut power = v;
        for i in 0..spec.k {
            g.set(i, r, power);
            power = f.mul(power, a);
        }
    }
    g
}

/// The k×k grid `Σ_r α_r^(qi+j) v_r^(q+1)`, with `0^0 = 1`.
pub fn criterion_sums<'f>(spec: &GrsSpec<'f>) -> CodeMatrix<'f> {
    let f = spec.field;
    let q = f.q();
    let weights: Vec<Elem> = spec.v.iter().map(|&v| f.norm(v)).collect();
    let mut grid = CodeMatrix::zeros(f, spec.k, spec.k);
    for i in 0..spec.k {
        for j in 0..spec.k {
            let exp = q * i as u64 + j as u64;
            let sum = f.sum(
                spec.alpha
                    .iter()
                    .zip(&weights)
                    .map(|(&a, &w)| f.mul(f.pow_u(a, exp), w)),
            );
            grid.set(i, j, sum);
        }
    }
    grid
}

/// Gram matrix of Hermitian products of the rows of `g`.
pub fn hermitian_gram<'f>(g: &CodeMatrix<'f>) -> CodeMatrix<'f> {
    let f = g.field();
    let mut gram = CodeMatrix::zeros(f, g.rows(), g.rows());
    for i in 0..g.rows() {
        for j in 0..g.rows() {
            let h = hermitian_inner(f, g.row(i), g.row(j)).expect("rows share a length and field");
            gram.set(i, j, h);
        }
    }
    gram
}

/// True iff every ordered pair of rows (including a row with itself) is Hermitian-orthogonal.
pub fn is_hermitian_self_orthogonal_rows(g: &CodeMatrix<'_>) -> bool {
    hermitian_gram(g).is_zero()
}

/// Outcome of the two self-orthogonality routes on one spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelfOrthogonality {
    pub criterion_grid_zero: bool,
    pub rows_orthogonal: bool,
}

impl SelfOrthogonality {
    pub fn holds(&self) -> bool {
        self.criterion_grid_zero && self.rows_orthogonal
    }
}

/// Runs the criterion grid and the pairwise row products and compares them
/// entrywise. Any disagreement is an internal error, never a result.
pub fn self_orthogonality(spec: &GrsSpec<'_>) -> Result<SelfOrthogonality> {
    let grid = criterion_sums(spec);
    let gram = hermitian_gram(&grs_generator(spec));
    if grid != gram {
        return Err(Error::RouteDisagreement(alloc::format!(
            "criterion grid and row Gram matrix differ for n = {}, k = {}",
            spec.n(),
            spec.k
        )));
    }
    Ok(SelfOrthogonality {
        criterion_grid_zero: grid.is_zero(),
        rows_orthogonal: gram.is_zero(),
    })
}

/// Minimum Hamming weight over all nonzero codewords of the row space of `g`.
///
/// Only messages whose first nonzero coordinate is 1 are enumerated: scalar
/// multiples share a weight, so this visits `((q²)^k − 1)/(q² − 1)` messages.
/// `budget` bounds the full message count `(q²)^k`.
pub fn min_distance_exhaustive(g: &CodeMatrix<'_>, budget: u128) -> Result<usize> {
    let f = g.field();
    let k = g.rows() as u32;
    let needed = (f.order() as u128).checked_pow(k).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let symbols: Vec<Elem> = f.elements().collect();
    let mut partial = alloc::vec![Elem::Zero; g.cols() * (g.rows() + 1)];
    let mut best = usize::MAX;
    enumerate(g, &symbols, 0, false, &mut partial, &mut best);
    Ok(best)
}

// DFS over message coordinates; `partial[level]` holds the codeword of the
// message prefix of that length.
fn enumerate(
    g: &CodeMatrix<'_>,
    symbols: &[Elem],
    level: usize,
    started: bool,
    partial: &mut [Elem],
    best: &mut usize,
) {
    let n = g.cols();
    if level == g.rows() {
        if started {
            let w = partial[level * n..(level + 1) * n]
                .iter()
                .filter(|x| !x.is_zero())
                .count();
            *best = (*best).min(w);
        }
        return;
    }
    let f = g.field();
    // before the leading coordinate is fixed, it is either 0 or exactly 1
    let choices: &[Elem] = if started { symbols } else { &symbols[..2] };
    for &c in choices {
        let (done, rest) = partial.split_at_mut((level + 1) * n);
        let prev = &done[level * n..];
        let next = &mut rest[..n];
        for ((out, &p), &x) in next.iter_mut().zip(prev).zip(g.row(level)) {
            *out = f.add(p, f.mul(c, x));
        }
        enumerate(
            g,
            symbols,
            level + 1,
            started || !c.is_zero(),
            partial,
            best,
        );
    }
}
