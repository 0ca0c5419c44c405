//! Elements of the supercommutative polynomial ring over Q(i).
//!
//! A `SuperPoly` is a canonical term map: monomial -> nonzero coefficient.
//! Values are immutable after construction and safe to share across
//! threads; every operation is a pure function.

use super::context::{GenId, GeneratorContext, Parity};
use super::monomial::{ExpAtom, Monomial};
use crate::error::AlgebraError;
use crate::rational::GaussianRational;
use num::Signed;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

#[derive(Clone)]
pub struct SuperPoly {
    ctx: Arc<GeneratorContext>,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl PartialEq for SuperPoly {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_context(&other.ctx) && self.terms == other.terms
    }
}

impl Eq for SuperPoly {}

impl SuperPoly {
    pub fn zero(ctx: &Arc<GeneratorContext>) -> Self {
        SuperPoly {
            ctx: Arc::clone(ctx),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Arc<GeneratorContext>) -> Self {
        SuperPoly::scalar(ctx, GaussianRational::one())
    }

    pub fn scalar(ctx: &Arc<GeneratorContext>, c: GaussianRational) -> Self {
        let mut p = SuperPoly::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn generator(ctx: &Arc<GeneratorContext>, id: GenId) -> Self {
        let mono = match ctx.parity(id) {
            Parity::Even => Monomial::even_gen(id, 1),
            Parity::Odd => Monomial::odd_gen(id),
        };
        SuperPoly::from_term(ctx, mono, GaussianRational::one())
    }

    /// The formal exponential e^{multiplier * base}.
    pub fn exp(
        ctx: &Arc<GeneratorContext>,
        base: GenId,
        multiplier: GaussianRational,
    ) -> Result<Self, AlgebraError> {
        if ctx.parity(base).is_odd() {
            return Err(AlgebraError::OddExponentialBase(ctx.name(base).to_string()));
        }
        Ok(SuperPoly::from_term(
            ctx,
            Monomial::exp_atom(base, multiplier),
            GaussianRational::one(),
        ))
    }

    pub fn from_term(ctx: &Arc<GeneratorContext>, mono: Monomial, coeff: GaussianRational) -> Self {
        let mut p = SuperPoly::zero(ctx);
        p.push_term(mono, coeff);
        p
    }

    pub fn from_terms(
        ctx: &Arc<GeneratorContext>,
        terms: impl IntoIterator<Item = (Monomial, GaussianRational)>,
    ) -> Self {
        let mut p = SuperPoly::zero(ctx);
        for (m, c) in terms {
            p.push_term(m, c);
        }
        p
    }

    pub fn context(&self) -> &Arc<GeneratorContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coefficient_of(&self, mono: &Monomial) -> GaussianRational {
        self.terms.get(mono).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// The scalar part (coefficient of the empty monomial).
    pub fn constant_term(&self) -> GaussianRational {
        self.coefficient_of(&Monomial::one())
    }

    /// Common parity of all terms; `None` when inhomogeneous. The zero
    /// polynomial reports even.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|m| m.parity());
        match it.next() {
            None => Some(Parity::Even),
            Some(p) => {
                if it.all(|q| q == p) {
                    Some(p)
                } else {
                    None
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.parity().is_some()
    }

    /// Split into (even-parity part, odd-parity part).
    pub fn parity_parts(&self) -> (SuperPoly, SuperPoly) {
        let mut even = SuperPoly::zero(&self.ctx);
        let mut odd = SuperPoly::zero(&self.ctx);
        for (m, c) in &self.terms {
            match m.parity() {
                Parity::Even => even.terms.insert(m.clone(), c.clone()),
                Parity::Odd => odd.terms.insert(m.clone(), c.clone()),
            };
        }
        (even, odd)
    }

    /// Image under setting every odd generator to zero.
    pub fn body(&self) -> SuperPoly {
        let mut p = SuperPoly::zero(&self.ctx);
        for (m, c) in &self.terms {
            if m.is_body() {
                p.terms.insert(m.clone(), c.clone());
            }
        }
        p
    }

    /// True when every monomial contains at least one odd generator, so
    /// some finite power of the value vanishes.
    pub fn is_nilpotent(&self) -> bool {
        self.terms.keys().all(|m| !m.is_body())
    }

    fn push_term(&mut self, mono: Monomial, coeff: GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn assert_same_context(&self, other: &SuperPoly) {
        assert!(
            self.ctx.same_context(&other.ctx),
            "SuperPoly operands from different generator contexts"
        );
    }

    pub fn scale(&self, c: &GaussianRational) -> SuperPoly {
        if c.is_zero() {
            return SuperPoly::zero(&self.ctx);
        }
        let mut p = SuperPoly::zero(&self.ctx);
        for (m, k) in &self.terms {
            p.terms.insert(m.clone(), k * c);
        }
        p
    }

    /// Checked supercommutative product; errors on mixed contexts.
    pub fn try_mul(&self, rhs: &SuperPoly) -> Result<SuperPoly, AlgebraError> {
        if !self.ctx.same_context(&rhs.ctx) {
            return Err(AlgebraError::ContextMismatch);
        }
        let mut out = SuperPoly::zero(&self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                if let Some((m, sign)) = ma.mul(mb) {
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    out.push_term(m, c);
                }
            }
        }
        Ok(out)
    }

    /// Integer power. Negative powers require a unit: a single term whose
    /// even generators are all invertible and whose odd part is empty.
    pub fn pow(&self, n: i32) -> Result<SuperPoly, AlgebraError> {
        if n < 0 {
            return self.unit_inverse()?.pow(-n);
        }
        let mut acc = SuperPoly::one(&self.ctx);
        for _ in 0..n {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    fn unit_inverse(&self) -> Result<SuperPoly, AlgebraError> {
        if self.terms.len() != 1 {
            return Err(AlgebraError::NegativePowerOfNonUnit { power: -1 });
        }
        let (mono, coeff) = self.terms.iter().next().unwrap();
        if !mono.odd.is_empty() {
            return Err(AlgebraError::NegativePowerOfNonUnit { power: -1 });
        }
        for (g, _) in &mono.even {
            if !self.ctx.is_invertible(*g) {
                return Err(AlgebraError::NotInvertible(self.ctx.name(*g).to_string()));
            }
        }
        let inv_mono = Monomial {
            even: mono.even.iter().map(|(g, e)| (*g, -e)).collect(),
            exp: mono
                .exp
                .iter()
                .map(|a| ExpAtom {
                    base: a.base,
                    multiplier: -&a.multiplier,
                })
                .collect(),
            odd: Vec::new(),
        };
        Ok(SuperPoly::from_term(&self.ctx, inv_mono, coeff.inv()))
    }

    /// Left derivative with respect to a generator of the context.
    ///
    /// For an odd generator the factor is moved to the front of the odd
    /// part, one sign flip per odd factor passed, then removed. For an even
    /// generator the usual power rule applies and a formal exponential
    /// contributes its multiplier.
    pub fn left_derivative(&self, g: GenId) -> Result<SuperPoly, AlgebraError> {
        if g.index() >= self.ctx.len() {
            return Err(AlgebraError::UnknownGenerator(format!("#{}", g.0)));
        }
        let mut out = SuperPoly::zero(&self.ctx);
        for (m, c) in &self.terms {
            if self.ctx.parity(g).is_odd() {
                if let Ok(pos) = m.odd.binary_search(&g) {
                    let mut stripped = m.clone();
                    stripped.odd.remove(pos);
                    let coeff = if pos % 2 == 1 { -c } else { c.clone() };
                    out.push_term(stripped, coeff);
                }
            } else {
                let e = m.exponent_of(g);
                if e != 0 {
                    let mut lowered = m.clone();
                    lowered.even.retain(|(id, _)| *id != g);
                    if e != 1 {
                        let mut even = lowered.even.clone();
                        even.push((g, e - 1));
                        even.sort_by_key(|(id, _)| *id);
                        lowered.even = even;
                    }
                    out.push_term(lowered, c * &GaussianRational::from_int(e as i64));
                }
                if let Some(mult) = m.exp_multiplier_of(g) {
                    out.push_term(m.clone(), c * mult);
                }
            }
        }
        Ok(out)
    }

    /// Simultaneous substitution within one context. Generators absent from
    /// the assignment map to themselves. Each assigned value must be parity
    /// homogeneous with the parity of the generator it replaces (or zero).
    pub fn substitute(
        &self,
        assignment: &BTreeMap<GenId, SuperPoly>,
    ) -> Result<SuperPoly, AlgebraError> {
        for v in assignment.values() {
            if !self.ctx.same_context(v.context()) {
                return Err(AlgebraError::ContextMismatch);
            }
        }
        let ctx = Arc::clone(&self.ctx);
        self.eval_with(&ctx, |g| {
            Ok(assignment
                .get(&g)
                .cloned()
                .unwrap_or_else(|| SuperPoly::generator(&ctx, g)))
        })
    }

    /// Rebuild the value over `out_ctx`, replacing every generator by
    /// `value_of(g)`. This is the engine behind substitution and pullback;
    /// odd factors are substituted in monomial order so Koszul signs are
    /// preserved.
    pub fn eval_with<F>(
        &self,
        out_ctx: &Arc<GeneratorContext>,
        mut value_of: F,
    ) -> Result<SuperPoly, AlgebraError>
    where
        F: FnMut(GenId) -> Result<SuperPoly, AlgebraError>,
    {
        let mut out = SuperPoly::zero(out_ctx);
        for (m, c) in &self.terms {
            let mut acc = SuperPoly::scalar(out_ctx, c.clone());
            for (g, e) in &m.even {
                let v = self.checked_value(*g, &mut value_of)?;
                let p = if *e >= 0 {
                    v.pow(*e)?
                } else {
                    v.pow(*e).map_err(|_| {
                        AlgebraError::NotInvertible(self.ctx.name(*g).to_string())
                    })?
                };
                acc = acc.try_mul(&p)?;
            }
            for atom in &m.exp {
                let v = self.checked_value(atom.base, &mut value_of)?;
                let rebuilt = substitute_exp_atom(&self.ctx, atom, &v)?;
                acc = acc.try_mul(&rebuilt)?;
            }
            for g in &m.odd {
                let v = self.checked_value(*g, &mut value_of)?;
                acc = acc.try_mul(&v)?;
            }
            for (m2, c2) in acc.terms {
                out.push_term(m2, c2);
            }
        }
        Ok(out)
    }

    fn checked_value<F>(&self, g: GenId, value_of: &mut F) -> Result<SuperPoly, AlgebraError>
    where
        F: FnMut(GenId) -> Result<SuperPoly, AlgebraError>,
    {
        let v = value_of(g)?;
        let expected = self.ctx.parity(g);
        if !v.is_zero() && v.parity() != Some(expected) {
            return Err(AlgebraError::ParityMismatch {
                gen: self.ctx.name(g).to_string(),
            });
        }
        Ok(v)
    }
}

/// Substitute into an exponential base. Supported shapes of the assigned
/// value: 0 (the exponential collapses to 1), c*g' (nonzero scalar times a
/// single even generator), and c*g' + nu with nu even nilpotent; the
/// nilpotent shift expands as a terminating exponential series. Anything
/// else errors: a plain constant shift would need the transcendental
/// scalar e^{c}, which Q(i) cannot hold.
fn substitute_exp_atom(
    in_ctx: &Arc<GeneratorContext>,
    atom: &ExpAtom,
    value: &SuperPoly,
) -> Result<SuperPoly, AlgebraError> {
    let out_ctx = value.context();
    if value.is_zero() {
        return Ok(SuperPoly::one(out_ctx));
    }
    let err = || AlgebraError::UnsupportedExpSubstitution {
        gen: in_ctx.name(atom.base).to_string(),
    };

    let mut linear: Option<(GenId, GaussianRational)> = None;
    let mut nilpotent = SuperPoly::zero(out_ctx);
    for (m, c) in value.terms() {
        if !m.is_body() {
            nilpotent = &nilpotent + &SuperPoly::from_term(out_ctx, m.clone(), c.clone());
        } else if m.exp.is_empty() && m.even.len() == 1 && m.even[0].1 == 1 {
            if linear.is_some() {
                return Err(err());
            }
            linear = Some((m.even[0].0, c.clone()));
        } else {
            return Err(err());
        }
    }
    let (new_base, scale) = linear.ok_or_else(err)?;

    let mut result = SuperPoly::from_term(
        out_ctx,
        Monomial::exp_atom(new_base, &atom.multiplier * &scale),
        GaussianRational::one(),
    );
    if !nilpotent.is_zero() {
        // e^{m*nu} with nu nilpotent: the series stops on its own.
        let shift = nilpotent.scale(&atom.multiplier);
        let mut series = SuperPoly::one(out_ctx);
        let mut term = SuperPoly::one(out_ctx);
        let mut k: i64 = 1;
        loop {
            term = term.try_mul(&shift)?;
            if term.is_zero() {
                break;
            }
            term = term.scale(&GaussianRational::ratio(1, k));
            series = &series + &term;
            k += 1;
        }
        result = result.try_mul(&series)?;
    }
    Ok(result)
}

impl Add for &SuperPoly {
    type Output = SuperPoly;
    fn add(self, rhs: &SuperPoly) -> SuperPoly {
        self.assert_same_context(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.push_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SuperPoly {
    type Output = SuperPoly;
    fn sub(self, rhs: &SuperPoly) -> SuperPoly {
        self.assert_same_context(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.push_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &SuperPoly {
    type Output = SuperPoly;
    fn mul(self, rhs: &SuperPoly) -> SuperPoly {
        self.try_mul(rhs)
            .expect("SuperPoly product across generator contexts")
    }
}

impl Neg for &SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        self.scale(&GaussianRational::from_int(-1))
    }
}

impl fmt::Debug for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for SuperPoly {
    /// Canonical plain form, parseable by the expression grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let (negative, body) = render_term(&self.ctx, m, c);
            if first {
                if negative {
                    write!(f, "-{}", body)?;
                } else {
                    write!(f, "{}", body)?;
                }
                first = false;
            } else if negative {
                write!(f, " - {}", body)?;
            } else {
                write!(f, " + {}", body)?;
            }
        }
        Ok(())
    }
}

fn render_scalar_factor(c: &GaussianRational) -> (bool, Option<String>) {
    if c.is_real() {
        let mag = c.re.abs();
        let neg = c.re.is_negative();
        if num::One::is_one(&mag) {
            (neg, None)
        } else {
            (neg, Some(GaussianRational::new(mag, num::Zero::zero()).to_string()))
        }
    } else if c.is_imaginary() {
        let mag = c.im.abs();
        let neg = c.im.is_negative();
        if num::One::is_one(&mag) {
            (neg, Some("I".to_string()))
        } else {
            (neg, Some(format!("{}*I", {
                let g = GaussianRational::new(mag, num::Zero::zero());
                g.to_string()
            })))
        }
    } else {
        (false, Some(format!("({})", c)))
    }
}

fn render_term(ctx: &GeneratorContext, m: &Monomial, c: &GaussianRational) -> (bool, String) {
    let (neg, coeff_str) = render_scalar_factor(c);
    let mut factors: Vec<String> = Vec::new();
    if let Some(s) = coeff_str {
        factors.push(s);
    }
    for (g, e) in &m.even {
        let name = ctx.name(*g);
        if *e == 1 {
            factors.push(name.to_string());
        } else {
            factors.push(format!("{}^{}", name, e));
        }
    }
    for atom in &m.exp {
        let base = ctx.name(atom.base);
        let arg = if atom.multiplier.is_one() {
            base.to_string()
        } else if (-&atom.multiplier).is_one() {
            format!("-{}", base)
        } else {
            let (mneg, ms) = render_scalar_factor(&atom.multiplier);
            let ms = ms.unwrap_or_else(|| "1".to_string());
            if mneg {
                format!("-{}*{}", ms, base)
            } else {
                format!("{}*{}", ms, base)
            }
        };
        factors.push(format!("exp({})", arg));
    }
    for g in &m.odd {
        factors.push(ctx.name(*g).to_string());
    }
    if factors.is_empty() {
        factors.push("1".to_string());
    }
    (neg, factors.join("*"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::context::{Generator, GeneratorKind};

    fn ctx_with(names: &[(&str, Parity)]) -> Arc<GeneratorContext> {
        GeneratorContext::new(
            names
                .iter()
                .map(|(n, p)| Generator {
                    name: n.to_string(),
                    parity: *p,
                    kind: GeneratorKind::Base,
                    invertible: false,
                })
                .collect(),
        )
        .unwrap()
    }

    fn susyish() -> Arc<GeneratorContext> {
        ctx_with(&[
            ("x0", Parity::Even),
            ("th1", Parity::Odd),
            ("th2", Parity::Odd),
            ("l", Parity::Even),
        ])
    }

    #[test]
    fn odd_generator_squares_to_zero() {
        let ctx = susyish();
        let th1 = SuperPoly::generator(&ctx, GenId(1));
        assert!((&th1 * &th1).is_zero());
    }

    #[test]
    fn reordering_picks_up_koszul_sign() {
        let ctx = susyish();
        let th1 = SuperPoly::generator(&ctx, GenId(1));
        let th2 = SuperPoly::generator(&ctx, GenId(2));
        assert_eq!(&th2 * &th1, -&(&th1 * &th2));
    }

    #[test]
    fn mixed_fiber_reordering_sign() {
        // On a context whose canonical order places dx1 before th1:
        // (x0 th1) * (dx1 th2) = -x0 dx1 th1 th2, the sign from moving the
        // odd dx1 past the odd th1.
        let ctx = ctx_with(&[
            ("x0", Parity::Even),
            ("dx1", Parity::Odd),
            ("th1", Parity::Odd),
            ("th2", Parity::Odd),
        ]);
        let x0 = SuperPoly::generator(&ctx, GenId(0));
        let dx1 = SuperPoly::generator(&ctx, GenId(1));
        let th1 = SuperPoly::generator(&ctx, GenId(2));
        let th2 = SuperPoly::generator(&ctx, GenId(3));
        let lhs = &(&x0 * &th1) * &(&dx1 * &th2);
        let rhs = -&(&(&(&x0 * &dx1) * &th1) * &th2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exponentials_merge() {
        let ctx = susyish();
        let e = SuperPoly::exp(&ctx, GenId(3), GaussianRational::one()).unwrap();
        let e2 = SuperPoly::exp(&ctx, GenId(3), GaussianRational::from_int(2)).unwrap();
        assert_eq!(&e * &e, e2);
    }

    #[test]
    fn exp_on_odd_base_rejected() {
        let ctx = susyish();
        assert!(matches!(
            SuperPoly::exp(&ctx, GenId(1), GaussianRational::one()),
            Err(AlgebraError::OddExponentialBase(_))
        ));
    }

    #[test]
    fn context_mixing_is_an_error() {
        let a = susyish();
        let b = susyish();
        let pa = SuperPoly::generator(&a, GenId(0));
        let pb = SuperPoly::generator(&b, GenId(0));
        assert!(matches!(
            pa.try_mul(&pb),
            Err(AlgebraError::ContextMismatch)
        ));
    }

    #[test]
    fn parity_queries() {
        let ctx = susyish();
        let x0 = SuperPoly::generator(&ctx, GenId(0));
        let th1 = SuperPoly::generator(&ctx, GenId(1));
        let th2 = SuperPoly::generator(&ctx, GenId(2));
        assert_eq!((&th1 * &th2).parity(), Some(Parity::Even));
        assert_eq!(th1.parity(), Some(Parity::Odd));
        assert_eq!((&x0 + &th1).parity(), None);
        assert_eq!(SuperPoly::zero(&ctx).parity(), Some(Parity::Even));
    }

    #[test]
    fn left_derivative_examples() {
        let ctx = susyish();
        let th1 = SuperPoly::generator(&ctx, GenId(1));
        let th2 = SuperPoly::generator(&ctx, GenId(2));
        let x0 = SuperPoly::generator(&ctx, GenId(0));

        // d/dth1 (th1 th2) = th2: the factor is already leftmost.
        let p = &th1 * &th2;
        assert_eq!(p.left_derivative(GenId(1)).unwrap(), th2);

        // d/dth1 (th2 th1) = -th2: one transposition.
        let q = &th2 * &th1;
        assert_eq!(q.left_derivative(GenId(1)).unwrap(), -&th2);

        // d/dl (e^{2l} x0) = 2 e^{2l} x0.
        let e2 = SuperPoly::exp(&ctx, GenId(3), GaussianRational::from_int(2)).unwrap();
        let p = &e2 * &x0;
        assert_eq!(p.left_derivative(GenId(3)).unwrap(), p.scale(&GaussianRational::from_int(2)));

        // Power rule: d/dx0 x0^2 = 2 x0.
        let sq = &x0 * &x0;
        assert_eq!(
            sq.left_derivative(GenId(0)).unwrap(),
            x0.scale(&GaussianRational::from_int(2))
        );
    }

    #[test]
    fn substitution_shift_in_odd_coordinate() {
        // th1 -> th1 + th2 stand-in for the SUSY shift th -> th + eps.
        let ctx = ctx_with(&[
            ("th1", Parity::Odd),
            ("th2", Parity::Odd),
            ("eps", Parity::Odd),
        ]);
        let th1 = SuperPoly::generator(&ctx, GenId(0));
        let th2 = SuperPoly::generator(&ctx, GenId(1));
        let eps = SuperPoly::generator(&ctx, GenId(2));
        let mut assign = BTreeMap::new();
        assign.insert(GenId(0), &th1 + &eps);
        let p = &th1 * &th2;
        let shifted = p.substitute(&assign).unwrap();
        assert_eq!(shifted, &(&th1 * &th2) + &(&eps * &th2));
    }

    #[test]
    fn substitution_is_simultaneous() {
        // Swapping th1 <-> th2 in th1 th2 gives th2 th1 = -th1 th2; a
        // sequential substitution would collapse both onto one generator.
        let ctx = susyish();
        let th1 = SuperPoly::generator(&ctx, GenId(1));
        let th2 = SuperPoly::generator(&ctx, GenId(2));
        let mut swap = BTreeMap::new();
        swap.insert(GenId(1), th2.clone());
        swap.insert(GenId(2), th1.clone());
        let p = &th1 * &th2;
        assert_eq!(p.substitute(&swap).unwrap(), -&p);
    }

    #[test]
    fn substitution_parity_mismatch_rejected() {
        let ctx = susyish();
        let x0 = SuperPoly::generator(&ctx, GenId(0));
        let th1 = SuperPoly::generator(&ctx, GenId(1));
        let mut assign = BTreeMap::new();
        assign.insert(GenId(1), x0.clone());
        assert!(matches!(
            th1.substitute(&assign),
            Err(AlgebraError::ParityMismatch { .. })
        ));
    }

    #[test]
    fn exp_substitution_policies() {
        let ctx = susyish();
        let l = GenId(3);
        let e = SuperPoly::exp(&ctx, l, GaussianRational::from_int(1)).unwrap();

        // Scalar multiple: l -> 2l gives e^{2l}.
        let mut assign = BTreeMap::new();
        assign.insert(l, SuperPoly::generator(&ctx, l).scale(&GaussianRational::from_int(2)));
        let scaled = e.substitute(&assign).unwrap();
        assert_eq!(
            scaled,
            SuperPoly::exp(&ctx, l, GaussianRational::from_int(2)).unwrap()
        );

        // Nilpotent shift: l -> l + th1*th2 gives e^{l}(1 + th1 th2).
        let th1th2 = &SuperPoly::generator(&ctx, GenId(1)) * &SuperPoly::generator(&ctx, GenId(2));
        let mut assign = BTreeMap::new();
        assign.insert(l, &SuperPoly::generator(&ctx, l) + &th1th2);
        let shifted = e.substitute(&assign).unwrap();
        assert_eq!(shifted, &e + &(&e * &th1th2));

        // Constant shift is not representable and must error.
        let mut assign = BTreeMap::new();
        assign.insert(l, &SuperPoly::generator(&ctx, l) + &SuperPoly::one(&ctx));
        assert!(matches!(
            e.substitute(&assign),
            Err(AlgebraError::UnsupportedExpSubstitution { .. })
        ));
    }

    #[test]
    fn negative_powers_need_units() {
        let inv_ctx = GeneratorContext::new(vec![
            Generator {
                name: "t".into(),
                parity: Parity::Even,
                kind: GeneratorKind::Parameter,
                invertible: true,
            },
            Generator {
                name: "x".into(),
                parity: Parity::Even,
                kind: GeneratorKind::Base,
                invertible: false,
            },
        ])
        .unwrap();
        let t = SuperPoly::generator(&inv_ctx, GenId(0));
        let x = SuperPoly::generator(&inv_ctx, GenId(1));
        let tinv = t.pow(-1).unwrap();
        assert_eq!(&t * &tinv, SuperPoly::one(&inv_ctx));
        assert!(x.pow(-1).is_err());
        assert!((&x + &t).pow(-1).is_err());
    }

    #[test]
    fn display_canonical_forms() {
        let ctx = susyish();
        let th1 = SuperPoly::generator(&ctx, GenId(1));
        let x0 = SuperPoly::generator(&ctx, GenId(0));
        let p = &x0 - &th1.scale(&GaussianRational::imag_int(2));
        // x0 term sorts before the odd term.
        assert_eq!(p.to_string(), "-2*I*th1 + x0");
        assert_eq!(SuperPoly::zero(&ctx).to_string(), "0");
        let e = SuperPoly::exp(&ctx, GenId(3), GaussianRational::from_int(2)).unwrap();
        assert_eq!(e.to_string(), "exp(2*l)");
    }
}
