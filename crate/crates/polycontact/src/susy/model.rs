//! The concrete superspace model: chart, distinguished vector fields, the
//! polycontact form, and the vector-field decomposition over it.

use super::sigma::SigmaTable;
use crate::algebra::{GenId, Parity, SuperPoly};
use crate::calculus::{Chart, VectorField, VectorValuedForm};
use crate::error::CalculusError;
use crate::rational::GaussianRational;
use std::collections::BTreeMap;

/// Builds the default chart: four even coordinates x0..x3, the odd
/// coordinates th1, th2 and thb1, thb2, their fiber partners, and the
/// formal parameters used by the symmetry maps (odd shifts eps/epsb, even
/// shifts a0..a3, and the invertible phase u).
pub fn susy_chart() -> Chart {
    Chart::builder()
        .base("x0", Parity::Even)
        .base("x1", Parity::Even)
        .base("x2", Parity::Even)
        .base("x3", Parity::Even)
        .base("th1", Parity::Odd)
        .base("th2", Parity::Odd)
        .base("thb1", Parity::Odd)
        .base("thb2", Parity::Odd)
        .parameter("eps1", Parity::Odd)
        .parameter("eps2", Parity::Odd)
        .parameter("epsb1", Parity::Odd)
        .parameter("epsb2", Parity::Odd)
        .parameter("a0", Parity::Even)
        .parameter("a1", Parity::Even)
        .parameter("a2", Parity::Even)
        .parameter("a3", Parity::Even)
        .unit_parameter("u")
        .build()
        .expect("chart declaration is well formed")
}

/// The superspace structure over a chart containing the coordinates
/// x0..x3, th1, th2, thb1, thb2 (extra coordinates are allowed, so the
/// same construction serves the extended spaces).
pub struct SusyFrame {
    chart: Chart,
    sigma: SigmaTable,
    x: [GenId; 4],
    th: [GenId; 2],
    thb: [GenId; 2],
    q: [VectorField; 2],
    qb: [VectorField; 2],
    d: [VectorField; 2],
    db: [VectorField; 2],
    p: [VectorField; 4],
    r: VectorField,
    alpha: VectorValuedForm,
}

impl SusyFrame {
    pub fn on_chart(chart: &Chart) -> SusyFrame {
        let sigma = SigmaTable::new();
        let find = |n: &str| chart.lookup(n).expect("superspace coordinate present");
        let x = [find("x0"), find("x1"), find("x2"), find("x3")];
        let th = [find("th1"), find("th2")];
        let thb = [find("thb1"), find("thb2")];

        let i = GaussianRational::i();
        let minus_i = GaussianRational::imag_int(-1);

        // sum_b c * (sigma^mu)_a^b * gen_b (row index contracted from the
        // left, as typeset).
        let sigma_row = |mu: usize, a: usize, gens: &[GenId; 2], c: &GaussianRational| {
            let mut acc = chart.zero();
            for b in 0..2 {
                let coeff = c * sigma.entry(mu, a, b);
                acc = &acc + &chart.gen(gens[b]).scale(&coeff);
            }
            acc
        };
        // sum_b c * gen_b * (sigma^mu)_b^a (column index fixed).
        let sigma_col = |mu: usize, a: usize, gens: &[GenId; 2], c: &GaussianRational| {
            let mut acc = chart.zero();
            for b in 0..2 {
                let coeff = c * sigma.entry(mu, b, a);
                acc = &acc + &chart.gen(gens[b]).scale(&coeff);
            }
            acc
        };

        // Q_a = d/dth^a + i (sigma^mu)_a^b thb_b d/dx^mu and the covariant
        // derivative D_a with the opposite sign; dotted variants contract
        // the column index against th^b.
        let build = |slot: GenId, xcomps: [SuperPoly; 4]| {
            let mut comps = BTreeMap::new();
            comps.insert(slot, chart.one());
            for (mu, xid) in x.iter().enumerate() {
                comps.insert(*xid, xcomps[mu].clone());
            }
            VectorField::new(chart, comps, Parity::Odd).expect("homogeneous odd field")
        };
        let q = [0, 1].map(|a| build(th[a], [0, 1, 2, 3].map(|mu| sigma_row(mu, a, &thb, &i))));
        let d =
            [0, 1].map(|a| build(th[a], [0, 1, 2, 3].map(|mu| sigma_row(mu, a, &thb, &minus_i))));
        let qb = [0, 1].map(|a| build(thb[a], [0, 1, 2, 3].map(|mu| sigma_col(mu, a, &th, &i))));
        let db =
            [0, 1].map(|a| build(thb[a], [0, 1, 2, 3].map(|mu| sigma_col(mu, a, &th, &minus_i))));

        let p = x.map(|xid| VectorField::frame(chart, xid).expect("x is a base coordinate"));

        // R = i (thb_a d/dthb_a - th^a d/dth^a).
        let mut r_comps = BTreeMap::new();
        for a in 0..2 {
            r_comps.insert(th[a], chart.gen(th[a]).scale(&minus_i));
            r_comps.insert(thb[a], chart.gen(thb[a]).scale(&i));
        }
        let r = VectorField::new(chart, r_comps, Parity::Even).expect("R is even");

        // alpha = (dx^mu + i(th sigma^mu dthb + dth sigma^mu thb)) d/dx^mu.
        let mut alpha_comps = BTreeMap::new();
        for (mu, xid) in x.iter().enumerate() {
            let dx = chart.gen(chart.fiber_of(*xid).expect("x has a fiber partner"));
            let mut comp = dx;
            for a in 0..2 {
                let th_a = chart.gen(th[a]);
                let dth_a = chart.gen(chart.fiber_of(th[a]).unwrap());
                let dthb_row = sigma_row(mu, a, &[
                    chart.fiber_of(thb[0]).unwrap(),
                    chart.fiber_of(thb[1]).unwrap(),
                ], &i);
                let thb_row = sigma_row(mu, a, &thb, &i);
                comp = &comp + &(&th_a * &dthb_row);
                comp = &comp + &(&dth_a * &thb_row);
            }
            alpha_comps.insert(*xid, comp);
        }
        let alpha =
            VectorValuedForm::from_components(chart, alpha_comps).expect("alpha is well formed");

        SusyFrame {
            chart: chart.clone(),
            sigma,
            x,
            th,
            thb,
            q,
            qb,
            d,
            db,
            p,
            r,
            alpha,
        }
    }

    pub fn new() -> SusyFrame {
        SusyFrame::on_chart(&susy_chart())
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn sigma(&self) -> &SigmaTable {
        &self.sigma
    }

    pub fn x_ids(&self) -> &[GenId; 4] {
        &self.x
    }

    pub fn th_ids(&self) -> &[GenId; 2] {
        &self.th
    }

    pub fn thb_ids(&self) -> &[GenId; 2] {
        &self.thb
    }

    /// All eight base coordinates of the superspace block, x first.
    pub fn susy_base_ids(&self) -> Vec<GenId> {
        let mut v = Vec::with_capacity(8);
        v.extend_from_slice(&self.x);
        v.extend_from_slice(&self.th);
        v.extend_from_slice(&self.thb);
        v
    }

    pub fn supercharge(&self, a: usize) -> &VectorField {
        &self.q[a]
    }

    pub fn supercharge_bar(&self, a: usize) -> &VectorField {
        &self.qb[a]
    }

    pub fn covariant(&self, a: usize) -> &VectorField {
        &self.d[a]
    }

    pub fn covariant_bar(&self, a: usize) -> &VectorField {
        &self.db[a]
    }

    pub fn translation(&self, mu: usize) -> &VectorField {
        &self.p[mu]
    }

    pub fn r_symmetry(&self) -> &VectorField {
        &self.r
    }

    pub fn alpha(&self) -> &VectorValuedForm {
        &self.alpha
    }

    /// The kernel basis {D_1, D_2, Db^1, Db^2}.
    pub fn covariant_basis(&self) -> Vec<VectorField> {
        vec![
            self.d[0].clone(),
            self.d[1].clone(),
            self.db[0].clone(),
            self.db[1].clone(),
        ]
    }

    /// Set th = thb = 0 in a scalar, keeping the differentials.
    pub fn restrict_odd_to_zero(&self, f: &SuperPoly) -> SuperPoly {
        let mut assign = BTreeMap::new();
        for id in self.th.iter().chain(self.thb.iter()) {
            assign.insert(*id, self.chart.zero());
        }
        f.substitute(&assign).expect("restriction is parity safe")
    }

    /// Split X into (X_D, X_P): the covariant-derivative part read off the
    /// d/dth and d/dthb slots, and a remainder proportional to the
    /// translation frame. Linear, and the identity on each summand.
    pub fn decompose(&self, field: &VectorField) -> Result<(VectorField, VectorField), CalculusError> {
        if !field.chart().same_chart(&self.chart) {
            return Err(CalculusError::ChartMismatch);
        }
        let mut x_d = VectorField::zero(&self.chart);
        for a in 0..2 {
            let coeff = field.component(self.th[a]);
            x_d = x_d.add(&self.d[a].scale_form(&coeff))?;
            let coeff_b = field.component(self.thb[a]);
            x_d = x_d.add(&self.db[a].scale_form(&coeff_b))?;
        }
        let x_p = field.sub(&x_d)?;
        Ok((x_d, x_p))
    }
}

impl Default for SusyFrame {
    fn default() -> Self {
        SusyFrame::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{
        exterior_derivative, graded_commutator, interior_product, VectorValuedForm,
    };

    #[test]
    fn chart_has_the_right_parities() {
        let ch = susy_chart();
        assert_eq!(ch.base_ids().len(), 8);
        assert_eq!(ch.context().parity(ch.lookup("dx0").unwrap()), Parity::Odd);
        assert_eq!(ch.context().parity(ch.lookup("dth1").unwrap()), Parity::Even);
        assert_eq!(ch.context().parity(ch.lookup("dthb2").unwrap()), Parity::Even);
        let even_base = ch
            .base_ids()
            .iter()
            .filter(|g| ch.context().parity(**g) == Parity::Even)
            .count();
        assert_eq!((even_base, ch.base_ids().len() - even_base), (4, 4));
    }

    #[test]
    fn supercharge_leading_terms() {
        let f = SusyFrame::new();
        for a in 0..2 {
            for b in 0..2 {
                let expect = if a == b { f.chart().one() } else { f.chart().zero() };
                assert_eq!(
                    f.supercharge(a).apply(&f.chart().gen(f.th[b])),
                    expect
                );
            }
        }
    }

    #[test]
    fn covariant_derivative_on_x() {
        // D_a x^mu = -i (sigma^mu)_a^b thb_b.
        let f = SusyFrame::new();
        for a in 0..2 {
            for mu in 0..4 {
                let got = f.covariant(a).apply(&f.chart().gen(f.x[mu]));
                let mut expect = f.chart().zero();
                for b in 0..2 {
                    let c = &GaussianRational::imag_int(-1) * f.sigma().entry(mu, a, b);
                    expect = &expect + &f.chart().gen(f.thb[b]).scale(&c);
                }
                assert_eq!(got, expect);
            }
        }
    }

    #[test]
    fn r_acts_as_phase_rotation() {
        let f = SusyFrame::new();
        for a in 0..2 {
            let th = f.chart().gen(f.th[a]);
            assert_eq!(
                f.r_symmetry().apply(&th),
                th.scale(&GaussianRational::imag_int(-1))
            );
            let thb = f.chart().gen(f.thb[a]);
            assert_eq!(f.r_symmetry().apply(&thb), thb.scale(&GaussianRational::i()));
        }
    }

    #[test]
    fn alpha_is_odd_and_nowhere_vanishing() {
        let f = SusyFrame::new();
        assert_eq!(f.alpha().parity(), Some(Parity::Odd));
        // Restricting th = thb = 0 leaves dx^mu in every slot: the body of
        // the coefficient matrix is the identity block.
        for (mu, xid) in f.x.iter().enumerate() {
            let restricted = f.restrict_odd_to_zero(&f.alpha().component(*xid));
            let dx = f.chart().gen(f.chart().fiber_of(f.x[mu]).unwrap());
            assert_eq!(restricted, dx);
        }
    }

    #[test]
    fn alpha_equals_d_minus_dth_covariants() {
        // alpha = d - dth^a D_a - dthb_a Db^a, as tangent-valued forms.
        let f = SusyFrame::new();
        let ch = f.chart();
        let mut d_comps = BTreeMap::new();
        for b in ch.base_ids() {
            d_comps.insert(*b, ch.gen(ch.fiber_of(*b).unwrap()));
        }
        let d_form = VectorValuedForm::from_components(ch, d_comps).unwrap();
        let mut rhs = d_form;
        for a in 0..2 {
            let dth = ch.gen(ch.fiber_of(f.th[a]).unwrap());
            let dthb = ch.gen(ch.fiber_of(f.thb[a]).unwrap());
            rhs = rhs
                .sub(&VectorValuedForm::from_field(&f.covariant(a).scale_form(&dth)))
                .unwrap();
            rhs = rhs
                .sub(&VectorValuedForm::from_field(&f.covariant_bar(a).scale_form(&dthb)))
                .unwrap();
        }
        assert_eq!(&rhs, f.alpha());
    }

    #[test]
    fn d_alpha_display() {
        // d(alpha) = 2i (dth^a (sigma^mu)_a^b dthb_b) d/dx^mu.
        let f = SusyFrame::new();
        let got = exterior_derivative(f.alpha());
        for (mu, xid) in f.x.iter().enumerate() {
            let mut expect = f.chart().zero();
            for a in 0..2 {
                for b in 0..2 {
                    let dth = f.chart().gen(f.chart().fiber_of(f.th[a]).unwrap());
                    let dthb = f.chart().gen(f.chart().fiber_of(f.thb[b]).unwrap());
                    let c = &GaussianRational::imag_int(2) * f.sigma().entry(mu, a, b);
                    expect = &expect + &(&dth * &dthb).scale(&c);
                }
            }
            assert_eq!(got.component(*xid), expect, "mu = {mu}");
        }
        assert!(exterior_derivative(&got).is_zero());
    }

    #[test]
    fn alpha_annihilates_covariant_derivatives() {
        let f = SusyFrame::new();
        for field in f.covariant_basis() {
            assert!(interior_product(&field, f.alpha()).unwrap().is_zero());
        }
        // Negative control: d/dx^0 is not in the kernel.
        let contracted = interior_product(f.translation(0), f.alpha()).unwrap();
        assert_eq!(contracted.component(f.x[0]), f.chart().one());
    }

    #[test]
    fn decompose_examples() {
        let f = SusyFrame::new();
        // Q_a = D_a + 2i (sigma^mu)_a^b thb_b P_mu.
        for a in 0..2 {
            let (x_d, x_p) = f.decompose(f.supercharge(a)).unwrap();
            assert_eq!(&x_d, f.covariant(a));
            for mu in 0..4 {
                let mut expect = f.chart().zero();
                for b in 0..2 {
                    let c = &GaussianRational::imag_int(2) * f.sigma().entry(mu, a, b);
                    expect = &expect + &f.chart().gen(f.thb[b]).scale(&c);
                }
                assert_eq!(x_p.component(f.x[mu]), expect);
            }
            assert!(x_p.component(f.th[0]).is_zero());
        }
        // P_mu is already in ker(d alpha): decomposes as (0, P_mu).
        let (x_d, x_p) = f.decompose(f.translation(2)).unwrap();
        assert!(x_d.is_zero());
        assert_eq!(&x_p, f.translation(2));
    }

    #[test]
    fn qbar_decomposition_display() {
        // Qb^a = Db^a + 2i th^b (sigma^mu)_b^a P_mu.
        let f = SusyFrame::new();
        for a in 0..2 {
            let (x_d, x_p) = f.decompose(f.supercharge_bar(a)).unwrap();
            assert_eq!(&x_d, f.covariant_bar(a));
            for mu in 0..4 {
                let mut expect = f.chart().zero();
                for b in 0..2 {
                    let c = &GaussianRational::imag_int(2) * f.sigma().entry(mu, b, a);
                    expect = &expect + &f.chart().gen(f.th[b]).scale(&c);
                }
                assert_eq!(x_p.component(f.x[mu]), expect);
            }
        }
    }

    #[test]
    fn sigma_covariance_sanity() {
        // [Q_a, Qb^b] + [D_a, Db^b] = 0 componentwise.
        let f = SusyFrame::new();
        for a in 0..2 {
            for b in 0..2 {
                let qq = graded_commutator(f.supercharge(a), f.supercharge_bar(b)).unwrap();
                let dd = graded_commutator(f.covariant(a), f.covariant_bar(b)).unwrap();
                assert!(qq.add(&dd).unwrap().is_zero());
            }
        }
    }
}
