//! Canonical monomials of the free graded-commutative algebra.
//!
//! A monomial is a product of even generator powers (Laurent exponents for
//! invertible generators), formal exponential atoms e^{c*g} on even
//! generators, and a strictly increasing sequence of distinct odd
//! generators. The strictly-increasing odd part is the canonical form;
//! Koszul signs produced while sorting are returned to the caller and
//! absorbed into coefficients.

use super::context::{GenId, Parity};
use crate::rational::GaussianRational;

/// A formal exponential e^{multiplier * base} on an even generator.
/// Two atoms on the same base merge by adding multipliers; a zero
/// multiplier is the scalar 1 and is never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpAtom {
    pub base: GenId,
    pub multiplier: GaussianRational,
}

/// Canonical monomial. Field order matters: the derived `Ord` gives the
/// deterministic term order used for printing and term maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    /// Even generator powers, sorted by generator id, no zero exponents.
    pub even: Vec<(GenId, i32)>,
    /// Exponential atoms, sorted by base id, no zero multipliers.
    pub exp: Vec<ExpAtom>,
    /// Odd generators, strictly increasing.
    pub odd: Vec<GenId>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn is_one(&self) -> bool {
        self.even.is_empty() && self.exp.is_empty() && self.odd.is_empty()
    }

    pub fn even_gen(id: GenId, power: i32) -> Self {
        let mut m = Monomial::one();
        if power != 0 {
            m.even.push((id, power));
        }
        m
    }

    pub fn odd_gen(id: GenId) -> Self {
        Monomial {
            even: Vec::new(),
            exp: Vec::new(),
            odd: vec![id],
        }
    }

    pub fn exp_atom(base: GenId, multiplier: GaussianRational) -> Self {
        let mut m = Monomial::one();
        if !multiplier.is_zero() {
            m.exp.push(ExpAtom { base, multiplier });
        }
        m
    }

    pub fn parity(&self) -> Parity {
        if self.odd.len().is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn exponent_of(&self, id: GenId) -> i32 {
        self.even
            .iter()
            .find(|(g, _)| *g == id)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn exp_multiplier_of(&self, id: GenId) -> Option<&GaussianRational> {
        self.exp.iter().find(|a| a.base == id).map(|a| &a.multiplier)
    }

    pub fn contains_odd(&self, id: GenId) -> bool {
        self.odd.binary_search(&id).is_ok()
    }

    /// True when every odd generator is absent: the monomial survives
    /// setting all odd generators to zero.
    pub fn is_body(&self) -> bool {
        self.odd.is_empty()
    }

    /// Multiply two canonical monomials. Returns `None` when an odd
    /// generator repeats (nilpotency), otherwise the canonical product and
    /// the Koszul sign from interleaving the two odd sequences.
    pub fn mul(&self, rhs: &Monomial) -> Option<(Monomial, i32)> {
        let (odd, sign) = merge_odd(&self.odd, &rhs.odd)?;
        let even = merge_even(&self.even, &rhs.even);
        let exp = merge_exp(&self.exp, &rhs.exp);
        Some((Monomial { even, exp, odd }, sign))
    }
}

fn merge_even(a: &[(GenId, i32)], b: &[(GenId, i32)]) -> Vec<(GenId, i32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let e = a[i].1 + b[j].1;
                if e != 0 {
                    out.push((a[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn merge_exp(a: &[ExpAtom], b: &[ExpAtom]) -> Vec<ExpAtom> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].base.cmp(&b[j].base) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let m = &a[i].multiplier + &b[j].multiplier;
                if !m.is_zero() {
                    out.push(ExpAtom {
                        base: a[i].base,
                        multiplier: m,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Merge two strictly increasing odd sequences, counting one sign flip per
/// transposition of distinct odd generators. `None` on a repeat.
fn merge_odd(a: &[GenId], b: &[GenId]) -> Option<(Vec<GenId>, i32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut sign = 1i32;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                // b[j] moves left past the remaining a[i..] odd factors.
                if (a.len() - i) % 2 == 1 {
                    sign = -sign;
                }
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => return None,
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((out, sign))
}
