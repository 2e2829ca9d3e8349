//! The check suite run on a constructed code, and the evidence it yields.
//!
//! Each step is a separate call on [`Checker`] so callers can time them.
//! [`Evidence`] can only come out of a checker on which every step ran; it is
//! what [`crate::quantum::hermitian_css`] requires before emitting parameters.

use crate::codes::{self, GrsSpec, SelfOrthogonality};
use crate::error::{Error, Result};
use crate::gf::Elem;
use crate::linalg;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Cap on `(q²)^k` for the exhaustive distance oracle.
    pub codewords: u128,
    /// Cap on `C(n, k)` for the column-minor check.
    pub minors: u128,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            codewords: codes::DEFAULT_CODEWORD_BUDGET,
            minors: linalg::DEFAULT_MINOR_BUDGET,
        }
    }
}

/// Results of the MDS oracles that fit their budgets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MdsOutcome {
    /// Minimum distance by exhaustive enumeration.
    pub distance: Option<usize>,
    /// Whether every k-subset of columns is nonsingular.
    pub column_minors: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdsMethod {
    Exhaustive,
    ColumnMinors,
    SkippedBudget,
}

impl MdsOutcome {
    pub fn method(&self) -> MdsMethod {
        match (self.distance, self.column_minors) {
            (Some(_), _) => MdsMethod::Exhaustive,
            (None, Some(_)) => MdsMethod::ColumnMinors,
            (None, None) => MdsMethod::SkippedBudget,
        }
    }

    /// `None` when no oracle ran.
    pub fn confirmed(&self, n: usize, k: usize) -> Option<bool> {
        match (self.distance, self.column_minors) {
            (Some(d), _) => Some(d == n - k + 1),
            (None, Some(ok)) => Some(ok),
            (None, None) => None,
        }
    }
}

/// Runs the checks one at a time against a single spec.
#[derive(Debug)]
pub struct Checker<'s, 'f> {
    spec: &'s GrsSpec<'f>,
    budgets: Budgets,
    full_rank: Option<bool>,
    self_orthogonality: Option<SelfOrthogonality>,
    scalars: Option<bool>,
    mds: Option<MdsOutcome>,
}

impl<'s, 'f> Checker<'s, 'f> {
    pub fn new(spec: &'s GrsSpec<'f>, budgets: Budgets) -> Self {
        Checker {
            spec,
            budgets,
            full_rank: None,
            self_orthogonality: None,
            scalars: None,
            mds: None,
        }
    }

    pub fn rank(&mut self) -> bool {
        let ok = codes::grs_generator(self.spec).rank() == self.spec.k();
        self.full_rank = Some(ok);
        ok
    }

    /// Criterion grid and pairwise row products; errors if they disagree.
    pub fn self_orthogonality(&mut self) -> Result<SelfOrthogonality> {
        let so = codes::self_orthogonality(self.spec)?;
        self.self_orthogonality = Some(so);
        Ok(so)
    }

    /// Every `v^(q+1)` is a nonzero element of GF(q) and, when given, equals
    /// the weight the construction intended for that coordinate.
    pub fn scalars(&mut self, expected: Option<&[Elem]>) -> bool {
        let f = self.spec.field();
        let norms = self.spec.v().iter().map(|&v| f.norm(v));
        let in_units = norms.clone().all(|w| !w.is_zero() && f.in_subfield(w));
        let matches =
            expected.is_none_or(|e| e.len() == self.spec.n() && norms.eq(e.iter().copied()));
        let ok = in_units && matches;
        self.scalars = Some(ok);
        ok
    }

    /// Runs each MDS oracle that fits its budget; when both run they must agree.
    pub fn mds(&mut self) -> Result<MdsOutcome> {
        let g = codes::grs_generator(self.spec);
        let distance = match codes::min_distance_exhaustive(&g, self.budgets.codewords) {
            Ok(d) => Some(d),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        let column_minors = match linalg::mds_column_check(&g, self.budgets.minors) {
            Ok(ok) => Some(ok),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        let (n, k) = (self.spec.n(), self.spec.k());
        if let (Some(d), Some(ok)) = (distance, column_minors) {
            if (d == n - k + 1) != ok {
                return Err(Error::RouteDisagreement(alloc::format!(
                    "distance {d} vs column minors {ok} for [{n}, {k}]"
                )));
            }
        }
        let outcome = MdsOutcome {
            distance,
            column_minors,
        };
        self.mds = Some(outcome);
        Ok(outcome)
    }

    pub fn finish(self) -> CodeChecks {
        CodeChecks {
            n: self.spec.n() as u64,
            k: self.spec.k() as u64,
            q: self.spec.field().q(),
            full_rank: self.full_rank,
            self_orthogonality: self.self_orthogonality,
            scalars: self.scalars,
            mds: self.mds,
        }
    }

    /// Every step in sequence.
    pub fn run_all(mut self, expected_weights: Option<&[Elem]>) -> Result<CodeChecks> {
        self.rank();
        self.self_orthogonality()?;
        self.scalars(expected_weights);
        self.mds()?;
        Ok(self.finish())
    }
}

/// Recorded outcome of a [`Checker`]; steps that did not run are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeChecks {
    n: u64,
    k: u64,
    q: u64,
    full_rank: Option<bool>,
    self_orthogonality: Option<SelfOrthogonality>,
    scalars: Option<bool>,
    mds: Option<MdsOutcome>,
}

impl CodeChecks {
    pub fn full_rank(&self) -> Option<bool> {
        self.full_rank
    }

    pub fn self_orthogonality(&self) -> Option<SelfOrthogonality> {
        self.self_orthogonality
    }

    pub fn scalars(&self) -> Option<bool> {
        self.scalars
    }

    pub fn mds(&self) -> Option<MdsOutcome> {
        self.mds
    }

    /// Rank, both self-orthogonality routes and the scalars passed.
    pub fn structural_passed(&self) -> bool {
        self.full_rank == Some(true)
            && self.self_orthogonality.is_some_and(|so| so.holds())
            && self.scalars == Some(true)
    }

    /// Structural checks passed and no MDS oracle failed.
    pub fn passed(&self) -> bool {
        self.structural_passed()
            && self
                .mds
                .is_some_and(|m| m.confirmed(self.n as usize, self.k as usize) != Some(false))
    }

    /// Passed, with at least one MDS oracle actually run.
    pub fn fully_verified(&self) -> bool {
        self.passed()
            && self
                .mds
                .is_some_and(|m| m.method() != MdsMethod::SkippedBudget)
    }

    pub fn evidence(&self) -> Option<Evidence> {
        self.passed().then_some(Evidence {
            n: self.n,
            k: self.k,
            q: self.q,
            mds_oracle_ran: self.fully_verified(),
        })
    }
}

/// Proof that a Hermitian self-orthogonal `[n, k]` code over GF(q²) passed its checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Evidence {
    n: u64,
    k: u64,
    q: u64,
    mds_oracle_ran: bool,
}

impl Evidence {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// False when the MDS property rests on the GRS structure alone because
    /// both oracles were over budget.
    pub fn mds_oracle_ran(&self) -> bool {
        self.mds_oracle_ran
    }
}
