//! Arithmetic in GF(q²) = GF(p^(2e)) with the distinguished subfield GF(q), q = p^e.
//!
//! Nonzero elements are stored as discrete logarithms to a fixed primitive
//! element `g`. Multiplication is exponent addition; addition goes through a
//! Zech logarithm table, `g^a + g^b = g^(a + Z(b - a))` with `1 + g^k = g^Z(k)`.
//!
//! The defining polynomial is the smallest monic degree-2e polynomial over
//! GF(p) whose root generates the whole multiplicative group. Candidates are
//! ordered by their coefficient vectors read from x^(2e−1) down to the
//! constant term, so two fields built from the same `(p, e)` are identical.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::is_prime;
use crate::error::{Error, Result};

/// Largest supported field order q².
pub const DEFAULT_CAP: u64 = 1 << 20;

/// A field element: zero, or `g^k` with `0 <= k < q² − 1` in canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Zero,
    Pow(u32),
}

impl Elem {
    pub const ONE: Elem = Elem::Pow(0);

    pub fn is_zero(self) -> bool {
        self == Elem::Zero
    }

    /// Discrete logarithm to `g`, `None` for zero.
    pub fn exponent(self) -> Option<u32> {
        match self {
            Elem::Zero => None,
            Elem::Pow(k) => Some(k),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Zero => f.write_str("0"),
            Elem::Pow(k) => write!(f, "g^{k}"),
        }
    }
}

const NO_ZECH: u32 = u32::MAX;

/// Immutable arithmetic context for GF(q²).
#[derive(Clone)]
pub struct Field {
    p: u32,
    e: u32,
    q: u32,
    /// Multiplicative group order q² − 1.
    units: u32,
    /// Monic, low-to-high, length 2e + 1.
    modulus: Vec<u32>,
    /// exponent -> polynomial encoded base p (coefficient of x^i is digit i).
    exp: Vec<u32>,
    /// encoded polynomial -> exponent; index 0 is unused.
    log: Vec<u32>,
    /// k -> log(1 + g^k), or NO_ZECH when 1 + g^k = 0.
    zech: Vec<u32>,
}

// The tables are a function of (p, e, modulus).
impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish_non_exhaustive()
    }
}

impl Field {
    /// GF(p^(2e)) with the default size cap.
    pub fn new(p: u64, e: u32) -> Result<Self> {
        Self::with_cap(p, e, DEFAULT_CAP)
    }

    pub fn with_cap(p: u64, e: u32, cap: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::params("extension degree e must be positive"));
        }
        let too_large = Error::FieldTooLarge { p, e, cap };
        let order = p
            .checked_pow(2 * e)
            .filter(|&o| o <= cap && o <= u32::MAX as u64)
            .ok_or(too_large)?;
        let p = p as u32;
        let q = p.pow(e);
        let degree = 2 * e as usize;
        let units = (order - 1) as u32;

        let mut exp = vec![0u32; units as usize];
        let mut low = vec![0u32; degree];
        let modulus = loop {
            if low[0] != 0 && walk_powers(p, &low, &mut exp) {
                let mut m = low.clone();
                m.push(1);
                break m;
            }
            assert!(
                next_candidate(p, &mut low),
                "no primitive polynomial of degree {degree} over GF({p})"
            );
        };

        let mut log = vec![0u32; order as usize];
        for (k, &r) in exp.iter().enumerate() {
            log[r as usize] = k as u32;
        }
        let zech = exp
            .iter()
            .map(|&r| {
                // adding 1 touches only the constant digit
                let c = r % p;
                let s = r - c + (c + 1) % p;
                if s == 0 {
                    NO_ZECH
                } else {
                    log[s as usize]
                }
            })
            .collect();

        Ok(Field {
            p,
            e,
            q,
            units,
            modulus,
            exp,
            log,
            zech,
        })
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// Subfield order q.
    pub fn q(&self) -> u64 {
        self.q as u64
    }

    /// Field order q².
    pub fn order(&self) -> u64 {
        self.units as u64 + 1
    }

    /// q² − 1.
    pub fn units(&self) -> u64 {
        self.units as u64
    }

    /// Defining polynomial, coefficients low-to-high, monic of degree 2e.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The primitive element `g` (the class of the indeterminate).
    pub fn g(&self) -> Elem {
        self.canon(1)
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// Checks that `x` is in canonical form for this field.
    pub fn check(&self, x: Elem) -> Result<Elem> {
        match x {
            Elem::Pow(k) if k >= self.units => Err(Error::ContextMismatch),
            _ => Ok(x),
        }
    }

    /// The element `g^k` for any integer `k`.
    pub fn pow_g(&self, k: i64) -> Elem {
        Elem::Pow(k.rem_euclid(self.units as i64) as u32)
    }

    fn canon(&self, k: u64) -> Elem {
        Elem::Pow((k % self.units as u64) as u32)
    }

    /// The image of the integer `n` under Z → GF(p) ⊂ GF(q²).
    pub fn int(&self, n: i64) -> Elem {
        let c = n.rem_euclid(self.p as i64) as u32;
        if c == 0 {
            Elem::Zero
        } else {
            Elem::Pow(self.log[c as usize])
        }
    }

    /// Polynomial-basis encoding of `x` (coefficient of x^i is base-p digit i).
    pub fn to_poly(&self, x: Elem) -> u32 {
        match x {
            Elem::Zero => 0,
            Elem::Pow(k) => self.exp[k as usize],
        }
    }

    pub fn from_poly(&self, r: u32) -> Result<Elem> {
        match r {
            0 => Ok(Elem::Zero),
            r if (r as u64) < self.order() => Ok(Elem::Pow(self.log[r as usize])),
            _ => Err(Error::ContextMismatch),
        }
    }

    /// Every field element: zero first, then `g^0, g^1, ...`.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        core::iter::once(Elem::Zero).chain((0..self.units).map(Elem::Pow))
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match (a, b) {
            (Elem::Zero, x) | (x, Elem::Zero) => x,
            (Elem::Pow(i), Elem::Pow(j)) => {
                let d = if j >= i { j - i } else { j + self.units - i };
                match self.zech[d as usize] {
                    NO_ZECH => Elem::Zero,
                    z => self.canon(i as u64 + z as u64),
                }
            }
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        match a {
            Elem::Zero => Elem::Zero,
            // -1 = g^((q²−1)/2) in odd characteristic, 1 in characteristic 2
            Elem::Pow(k) if self.p == 2 => Elem::Pow(k),
            Elem::Pow(k) => self.canon(k as u64 + self.units as u64 / 2),
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match (a, b) {
            (Elem::Pow(i), Elem::Pow(j)) => self.canon(i as u64 + j as u64),
            _ => Elem::Zero,
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        match a {
            Elem::Zero => Err(Error::DivisionByZero),
            Elem::Pow(0) => Ok(Elem::ONE),
            Elem::Pow(k) => Ok(Elem::Pow(self.units - k)),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^n` for any integer `n`; `0^0 = 1`, negative powers of zero fail.
    pub fn pow(&self, a: Elem, n: i64) -> Result<Elem> {
        match a {
            Elem::Zero if n == 0 => Ok(Elem::ONE),
            Elem::Zero if n < 0 => Err(Error::DivisionByZero),
            Elem::Zero => Ok(Elem::Zero),
            Elem::Pow(k) => {
                let m = self.units as i128;
                Ok(Elem::Pow((k as i128 * n as i128).rem_euclid(m) as u32))
            }
        }
    }

    /// `a^n` for a nonnegative exponent; never fails.
    pub fn pow_u(&self, a: Elem, n: u64) -> Elem {
        match a {
            Elem::Zero if n == 0 => Elem::ONE,
            Elem::Zero => Elem::Zero,
            Elem::Pow(k) => self.canon(((k as u128 * n as u128) % self.units as u128) as u64),
        }
    }

    /// Conjugation `x ↦ x^q`.
    pub fn frobenius(&self, x: Elem) -> Elem {
        self.pow_u(x, self.q as u64)
    }

    /// `Tr(x) = x + x^q`, an element of GF(q).
    pub fn trace(&self, x: Elem) -> Elem {
        self.add(x, self.frobenius(x))
    }

    /// `N(x) = x^(q+1)`, an element of GF(q).
    pub fn norm(&self, x: Elem) -> Elem {
        self.pow_u(x, self.q as u64 + 1)
    }

    /// Membership in GF(q): zero, or an exponent divisible by q + 1.
    pub fn in_subfield(&self, x: Elem) -> bool {
        match x {
            Elem::Zero => true,
            Elem::Pow(k) => k % (self.q + 1) == 0,
        }
    }

    /// The elements of GF(q) inside GF(q²).
    pub fn subfield_elements(&self) -> impl Iterator<Item = Elem> + '_ {
        let step = self.q + 1;
        core::iter::once(Elem::Zero).chain((0..self.q - 1).map(move |i| Elem::Pow(i * step)))
    }

    /// The norm preimage of `a ∈ GF(q)*` with the smallest exponent.
    ///
    /// `(g^u)^(q+1) = g^c` iff `u ≡ c/(q+1) (mod q−1)`, and `c/(q+1) < q−1`.
    pub fn norm_preimage(&self, a: Elem) -> Result<Elem> {
        match a {
            Elem::Pow(c) if c < self.units && c % (self.q + 1) == 0 => {
                Ok(Elem::Pow(c / (self.q + 1)))
            }
            _ => Err(Error::NotInSubfieldUnits),
        }
    }

    /// The subgroup of GF(q²)* of the given order, listed as `g^(s·r)` for
    /// `r = 1..=order` where `s = (q²−1)/order` (so `1` comes last).
    pub fn subgroup_elements(&self, order: u64) -> Result<Vec<Elem>> {
        let group = self.units();
        if order == 0 || group % order != 0 {
            return Err(Error::InvalidSubgroupOrder { order, group });
        }
        let s = group / order;
        Ok((1..=order).map(|r| self.canon(s * r)).collect())
    }

    /// `Σ_{h ∈ H} h^exp`.
    pub fn power_sum(&self, subgroup: &[Elem], exp: i64) -> Result<Elem> {
        subgroup
            .iter()
            .try_fold(Elem::Zero, |acc, &h| Ok(self.add(acc, self.pow(h, exp)?)))
    }

    pub fn sum<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(Elem::Zero, |acc, x| self.add(acc, x))
    }

    pub fn product<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(Elem::ONE, |acc, x| self.mul(acc, x))
    }
}

/// Fills `exp` with the powers of x modulo `x^d + low(x)` and reports whether x
/// has multiplicative order exactly p^d − 1. Such an order forces the
/// polynomial to be irreducible: in a reducible quotient ring the unit group
/// is smaller than p^d − 1.
fn walk_powers(p: u32, low: &[u32], exp: &mut [u32]) -> bool {
    let d = low.len();
    let mut cur = vec![0u32; d];
    cur[0] = 1;
    for (i, slot) in exp.iter_mut().enumerate() {
        let code = encode(p, &cur);
        if code == 1 && i > 0 {
            return false;
        }
        *slot = code;
        // multiply by x: shift up, then reduce the overflow with x^d = −low(x)
        let top = cur[d - 1];
        for i in (1..d).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for (c, &l) in cur.iter_mut().zip(low) {
                *c = (*c + (p - l) * top % p) % p;
            }
        }
    }
    encode(p, &cur) == 1
}

fn encode(p: u32, digits: &[u32]) -> u32 {
    digits.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Advances the low coefficients to the next candidate in lexicographic order
/// (x^(d−1) coefficient most significant). Returns false after the last one.
fn next_candidate(p: u32, low: &mut [u32]) -> bool {
    for c in low.iter_mut() {
        *c += 1;
        if *c < p {
            return true;
        }
        *c = 0;
    }
    false
}
