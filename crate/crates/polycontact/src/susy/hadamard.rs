//! The Maurer-Cartan form by the terminating adjoint series.
//!
//! The computation runs in the space of algebra-valued pseudoforms: sums of
//! (scalar coefficient) x (generator field), where generators bracket
//! through their structure constants and coefficients multiply as graded
//! scalars. For a coset parametrization A the series
//!
//!   sum_{n >= 0} (-1)^n/(n+1)! ad_A^n(dA)
//!
//! terminates because the double adjoint ad_A^2(dA) already vanishes on the
//! translation algebra; a parametrization that mixes in the compact R
//! generator never terminates and trips the depth cap instead.

use super::model::SusyFrame;
use crate::algebra::{GenId, Parity, SuperPoly};
use crate::calculus::{graded_commutator, VectorField, VectorValuedForm};
use crate::error::{AlgebraError, CalculusError};
use crate::rational::GaussianRational;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Depth cap for the adjoint series; the translation-algebra computation
/// needs only n <= 1.
pub const SERIES_DEPTH_CAP: usize = 8;

/// A finite-dimensional bracket-closed span of vector fields with scalar
/// structure constants.
pub struct TranslationAlgebra {
    frame_x: [GenId; 4],
    th: [GenId; 2],
    thb: [GenId; 2],
    basis: Vec<VectorField>,
    names: Vec<String>,
    parities: Vec<Parity>,
    /// table[i][j] = constants of [G_i, G_j] in the basis.
    table: Vec<Vec<Vec<(usize, GaussianRational)>>>,
}

impl TranslationAlgebra {
    /// The algebra spanned by {P_mu, Q_a, Qb^a}.
    pub fn new(frame: &SusyFrame) -> Arc<Self> {
        let mut basis = Vec::new();
        let mut names = Vec::new();
        for mu in 0..4 {
            basis.push(frame.translation(mu).clone());
            names.push(format!("P{mu}"));
        }
        for a in 0..2 {
            basis.push(frame.supercharge(a).clone());
            names.push(format!("Q{}", a + 1));
        }
        for a in 0..2 {
            basis.push(frame.supercharge_bar(a).clone());
            names.push(format!("Qb{}", a + 1));
        }
        Self::from_basis(frame, basis, names)
    }

    /// The same algebra extended by the R generator; brackets still close,
    /// but [R, Q] = iQ keeps regenerating supercharge terms, so adjoint
    /// series over it need not terminate.
    pub fn with_r(frame: &SusyFrame) -> Arc<Self> {
        let mut basis = Vec::new();
        let mut names = Vec::new();
        for mu in 0..4 {
            basis.push(frame.translation(mu).clone());
            names.push(format!("P{mu}"));
        }
        for a in 0..2 {
            basis.push(frame.supercharge(a).clone());
            names.push(format!("Q{}", a + 1));
        }
        for a in 0..2 {
            basis.push(frame.supercharge_bar(a).clone());
            names.push(format!("Qb{}", a + 1));
        }
        basis.push(frame.r_symmetry().clone());
        names.push("R".to_string());
        Self::from_basis(frame, basis, names)
    }

    fn from_basis(frame: &SusyFrame, basis: Vec<VectorField>, names: Vec<String>) -> Arc<Self> {
        let parities = basis
            .iter()
            .map(|b| b.parity().expect("basis fields are homogeneous"))
            .collect::<Vec<_>>();
        let mut alg = TranslationAlgebra {
            frame_x: *frame.x_ids(),
            th: *frame.th_ids(),
            thb: *frame.thb_ids(),
            basis,
            names,
            parities,
            table: Vec::new(),
        };
        let n = alg.basis.len();
        let mut table = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let bracket = graded_commutator(&alg.basis[i], &alg.basis[j])
                    .expect("basis fields live on one chart");
                table[i][j] = alg
                    .expand_constant(&bracket)
                    .expect("basis brackets close with constant coefficients");
            }
        }
        alg.table = table;
        Arc::new(alg)
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn name(&self, k: usize) -> &str {
        &self.names[k]
    }

    pub fn generator(&self, k: usize) -> &VectorField {
        &self.basis[k]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn chart(&self) -> &crate::calculus::Chart {
        self.basis[0].chart()
    }

    /// Expand a field as a constant-coefficient combination of the basis by
    /// reading the d/dth and d/dthb slots first and matching the remainder
    /// against the translation frame.
    fn expand_constant(
        &self,
        field: &VectorField,
    ) -> Result<Vec<(usize, GaussianRational)>, CalculusError> {
        let chart = self.chart();
        let mut out = Vec::new();
        let mut rest = field.clone();
        let scalar_of = |p: &SuperPoly, slot: GenId| -> Result<GaussianRational, CalculusError> {
            let c = p.constant_term();
            if &SuperPoly::scalar(chart.context(), c.clone()) != p {
                return Err(CalculusError::BracketNotClosed(
                    chart.context().name(slot).to_string(),
                ));
            }
            Ok(c)
        };
        for a in 0..2 {
            let c = scalar_of(&rest.component(self.th[a]), self.th[a])?;
            if !c.is_zero() {
                let k = self.index_of(&format!("Q{}", a + 1)).unwrap();
                rest = rest.sub(&self.basis[k].scale_form(&chart.scalar(c.clone())))?;
                out.push((k, c));
            }
            let cb = scalar_of(&rest.component(self.thb[a]), self.thb[a])?;
            if !cb.is_zero() {
                let k = self.index_of(&format!("Qb{}", a + 1)).unwrap();
                rest = rest.sub(&self.basis[k].scale_form(&chart.scalar(cb.clone())))?;
                out.push((k, cb));
            }
        }
        for (slot, comp) in rest.components().clone() {
            if !self.frame_x.contains(&slot) {
                return Err(CalculusError::BracketNotClosed(
                    chart.context().name(slot).to_string(),
                ));
            }
            let c = scalar_of(&comp, slot)?;
            let mu = self.frame_x.iter().position(|x| *x == slot).unwrap();
            out.push((mu, c));
        }
        Ok(out)
    }
}

/// An algebra-valued pseudoform: one scalar coefficient per basis generator.
#[derive(Clone)]
pub struct AlgebraForm {
    algebra: Arc<TranslationAlgebra>,
    coeffs: Vec<SuperPoly>,
}

impl AlgebraForm {
    pub fn zero(algebra: &Arc<TranslationAlgebra>) -> Self {
        let chart = algebra.chart().clone();
        AlgebraForm {
            algebra: Arc::clone(algebra),
            coeffs: vec![chart.zero(); algebra.len()],
        }
    }

    pub fn from_coeffs(
        algebra: &Arc<TranslationAlgebra>,
        entries: impl IntoIterator<Item = (usize, SuperPoly)>,
    ) -> Self {
        let mut f = AlgebraForm::zero(algebra);
        for (k, c) in entries {
            f.coeffs[k] = &f.coeffs[k] + &c;
        }
        f
    }

    pub fn coefficient(&self, k: usize) -> &SuperPoly {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &GaussianRational) -> AlgebraForm {
        AlgebraForm {
            algebra: Arc::clone(&self.algebra),
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn add(&self, rhs: &AlgebraForm) -> AlgebraForm {
        AlgebraForm {
            algebra: Arc::clone(&self.algebra),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Differential applied to the coefficients only; the generators are
    /// constants of the algebra.
    pub fn differential(&self) -> AlgebraForm {
        let chart = self.algebra.chart().clone();
        AlgebraForm {
            algebra: Arc::clone(&self.algebra),
            coeffs: self.coeffs.iter().map(|c| chart.d_scalar(c)).collect(),
        }
    }

    /// Graded bracket: [c1 G1, c2 G2] = (-1)^{G1~ c2~} (c1 c2) [G1, G2],
    /// with [G1, G2] expanded through the structure constants.
    pub fn bracket(&self, rhs: &AlgebraForm) -> Result<AlgebraForm, CalculusError> {
        let mut out = AlgebraForm::zero(&self.algebra);
        for (i, ci) in self.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in rhs.coeffs.iter().enumerate() {
                if cj.is_zero() || self.algebra.table[i][j].is_empty() {
                    continue;
                }
                let cj_parity = cj.parity().ok_or(AlgebraError::Inhomogeneous)?;
                let sign = self.algebra.parities[i].koszul_sign(cj_parity);
                let mut prod = ci.try_mul(cj)?;
                if sign < 0 {
                    prod = -&prod;
                }
                for (k, c) in &self.algebra.table[i][j] {
                    out.coeffs[*k] = &out.coeffs[*k] + &prod.scale(c);
                }
            }
        }
        Ok(out)
    }

    /// Collapse into coordinate components: sum_k c_k (G_k as a derivation).
    pub fn collapse(&self) -> VectorValuedForm {
        let chart = self.algebra.chart().clone();
        let mut total = VectorValuedForm::zero(&chart);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let scaled = self.algebra.generator(k).scale_form(c);
            total = total
                .add(&VectorValuedForm::from_field(&scaled))
                .expect("one chart throughout");
        }
        total
    }

    /// The translation block: coefficients of the P_mu generators, as a
    /// vector-valued form with x legs.
    pub fn translation_part(&self) -> VectorValuedForm {
        let chart = self.algebra.chart().clone();
        let mut comps = BTreeMap::new();
        for mu in 0..4 {
            let k = self
                .algebra
                .index_of(&format!("P{mu}"))
                .expect("translations are in every basis");
            if !self.coeffs[k].is_zero() {
                comps.insert(self.algebra.frame_x[mu], self.coeffs[k].clone());
            }
        }
        VectorValuedForm::from_components(&chart, comps).expect("x legs only")
    }
}

/// The coset parametrization whose Maurer-Cartan form carries the
/// polycontact form in its translation block:
/// A = x^mu P_mu + i th^a Q_a + i thb_a Qb^a.
pub fn coset_parametrization(algebra: &Arc<TranslationAlgebra>) -> AlgebraForm {
    let chart = algebra.chart().clone();
    let i = GaussianRational::i();
    let mut entries = Vec::new();
    for mu in 0..4 {
        let k = algebra.index_of(&format!("P{mu}")).unwrap();
        entries.push((k, chart.gen(algebra.frame_x[mu])));
    }
    for a in 0..2 {
        let k = algebra.index_of(&format!("Q{}", a + 1)).unwrap();
        entries.push((k, chart.gen(algebra.th[a]).scale(&i)));
        let kb = algebra.index_of(&format!("Qb{}", a + 1)).unwrap();
        entries.push((kb, chart.gen(algebra.thb[a]).scale(&i)));
    }
    AlgebraForm::from_coeffs(algebra, entries)
}

/// Left-invariant Maurer-Cartan form of e^A by the adjoint series
/// sum (-1)^n/(n+1)! ad_A^n(dA), with the configured depth cap.
pub fn maurer_cartan(a: &AlgebraForm, depth_cap: usize) -> Result<AlgebraForm, CalculusError> {
    let mut term = a.differential();
    let mut result = AlgebraForm::zero(&a.algebra);
    let mut factorial: i64 = 1;
    let mut n: usize = 0;
    loop {
        factorial *= (n + 1) as i64;
        let mut coeff = GaussianRational::ratio(1, factorial);
        if n % 2 == 1 {
            coeff = -coeff;
        }
        result = result.add(&term.scale(&coeff));
        term = a.bracket(&term)?;
        if term.is_zero() {
            return Ok(result);
        }
        n += 1;
        if n > depth_cap {
            return Err(CalculusError::NonTerminatingSeries { depth: depth_cap });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::Chart;

    #[test]
    fn structure_constants_of_the_supertranslation_algebra() {
        let frame = SusyFrame::new();
        let alg = TranslationAlgebra::new(&frame);
        // [Q_1, Qb^1] = 2i sigma^mu_1^1 P_mu = 2i(P0 + P3).
        let i1 = alg.index_of("Q1").unwrap();
        let j1 = alg.index_of("Qb1").unwrap();
        let expect = vec![
            (0, GaussianRational::imag_int(2)),
            (3, GaussianRational::imag_int(2)),
        ];
        let mut got = alg.table[i1][j1].clone();
        got.sort_by_key(|(k, _)| *k);
        assert_eq!(got, expect);
        // Translations are central.
        for mu in 0..4 {
            for k in 0..alg.len() {
                assert!(alg.table[mu][k].is_empty());
            }
        }
    }

    #[test]
    fn adjoint_series_terminates_at_depth_one() {
        let frame = SusyFrame::new();
        let alg = TranslationAlgebra::new(&frame);
        let a = coset_parametrization(&alg);
        let da = a.differential();
        let ad1 = a.bracket(&da).unwrap();
        assert!(!ad1.is_zero());
        let ad2 = a.bracket(&ad1).unwrap();
        assert!(ad2.is_zero(), "double adjoint of dA must vanish");
    }

    #[test]
    fn maurer_cartan_translation_block_is_alpha() {
        let frame = SusyFrame::new();
        let alg = TranslationAlgebra::new(&frame);
        let a = coset_parametrization(&alg);
        let mc = maurer_cartan(&a, SERIES_DEPTH_CAP).unwrap();
        assert_eq!(&mc.translation_part(), frame.alpha());
        // The supercharge blocks carry i dth^a and i dthb_a.
        let ch: &Chart = frame.chart();
        for a_idx in 0..2 {
            let k = alg.index_of(&format!("Q{}", a_idx + 1)).unwrap();
            let dth = ch.gen(ch.fiber_of(frame.th_ids()[a_idx]).unwrap());
            assert_eq!(mc.coefficient(k), &dth.scale(&GaussianRational::i()));
            let kb = alg.index_of(&format!("Qb{}", a_idx + 1)).unwrap();
            let dthb = ch.gen(ch.fiber_of(frame.thb_ids()[a_idx]).unwrap());
            assert_eq!(mc.coefficient(kb), &dthb.scale(&GaussianRational::i()));
        }
    }

    #[test]
    fn scaling_the_central_block_rescales_only_the_linear_term() {
        // With x^mu P_mu replaced by i x^mu P_mu the series still
        // terminates, but the translation block becomes i dx^mu plus the
        // unchanged quadratic block: the quadratic term is fixed by the
        // supercharge coefficients alone, so only the shipped
        // parametrization lands on alpha exactly.
        let frame = SusyFrame::new();
        let alg = TranslationAlgebra::new(&frame);
        let ch = frame.chart();
        let i = GaussianRational::i();
        let mut entries = Vec::new();
        for mu in 0..4 {
            let k = alg.index_of(&format!("P{mu}")).unwrap();
            entries.push((k, ch.gen(frame.x_ids()[mu]).scale(&i)));
        }
        for a in 0..2 {
            let k = alg.index_of(&format!("Q{}", a + 1)).unwrap();
            entries.push((k, ch.gen(frame.th_ids()[a]).scale(&i)));
            let kb = alg.index_of(&format!("Qb{}", a + 1)).unwrap();
            entries.push((kb, ch.gen(frame.thb_ids()[a]).scale(&i)));
        }
        let a = AlgebraForm::from_coeffs(&alg, entries);
        let mc = maurer_cartan(&a, SERIES_DEPTH_CAP).unwrap();
        let translation = mc.translation_part();
        assert_ne!(&translation, frame.alpha());

        for (mu, xid) in frame.x_ids().iter().enumerate() {
            let dx = ch.gen(ch.fiber_of(*xid).unwrap());
            let alpha_quadratic = &frame.alpha().component(*xid) - &dx;
            let expect = &dx.scale(&i) + &alpha_quadratic;
            assert_eq!(translation.component(*xid), expect, "mu = {mu}");
        }
    }

    #[test]
    fn r_contaminated_parametrization_does_not_terminate() {
        let frame = SusyFrame::new();
        let alg = TranslationAlgebra::with_r(&frame);
        let mut a = coset_parametrization(&alg);
        let r = alg.index_of("R").unwrap();
        a = a.add(&AlgebraForm::from_coeffs(
            &alg,
            [(r, frame.chart().gen(frame.x_ids()[0]))],
        ));
        let err = maurer_cartan(&a, SERIES_DEPTH_CAP);
        assert!(matches!(
            err,
            Err(CalculusError::NonTerminatingSeries { .. })
        ));
    }
}
