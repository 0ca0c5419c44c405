//! Tangent-valued pseudoforms and the three derivatives.
//!
//! A vector-valued form Omega = Omega^A(x, dx) d/dx^A has one scalar
//! pseudoform component per base coordinate. The exterior, interior and
//! Lie derivatives act componentwise with the sign conventions fixed once
//! here; the two equivalent Lie-derivative expressions are both implemented
//! so they can be checked against each other.

use super::chart::Chart;
use super::field::{fmt_components, infer_parity, normalize_components, VectorField};
use crate::algebra::{GenId, Parity, SuperPoly};
use crate::error::CalculusError;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone)]
pub struct VectorValuedForm {
    chart: Chart,
    components: BTreeMap<GenId, SuperPoly>,
    parity: Option<Parity>,
}

impl PartialEq for VectorValuedForm {
    fn eq(&self, other: &Self) -> bool {
        self.chart.same_chart(&other.chart) && self.components == other.components
    }
}

impl Eq for VectorValuedForm {}

impl VectorValuedForm {
    pub fn from_components(
        chart: &Chart,
        components: BTreeMap<GenId, SuperPoly>,
    ) -> Result<Self, CalculusError> {
        let components = normalize_components(components);
        for slot in components.keys() {
            if !chart.is_base(*slot) {
                return Err(CalculusError::NotABaseGenerator(
                    chart.context().name(*slot).to_string(),
                ));
            }
        }
        let parity = infer_parity(chart, &components);
        Ok(VectorValuedForm {
            chart: chart.clone(),
            components,
            parity,
        })
    }

    pub fn zero(chart: &Chart) -> Self {
        VectorValuedForm {
            chart: chart.clone(),
            components: BTreeMap::new(),
            parity: Some(Parity::Even),
        }
    }

    /// Reinterpret a vector field as a vector-valued 0-form (same data).
    pub fn from_field(x: &VectorField) -> Self {
        VectorValuedForm {
            chart: x.chart().clone(),
            components: x.components().clone(),
            parity: x.parity(),
        }
    }

    /// Reinterpret as a vector field (components may depend on fiber
    /// generators; the derivation still differentiates base only).
    pub fn as_field(&self) -> VectorField {
        VectorField::from_components(&self.chart, self.components.clone())
            .expect("components are keyed by base generators")
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn parity(&self) -> Option<Parity> {
        self.parity
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &BTreeMap<GenId, SuperPoly> {
        &self.components
    }

    pub fn component(&self, slot: GenId) -> SuperPoly {
        self.components
            .get(&slot)
            .cloned()
            .unwrap_or_else(|| self.chart.zero())
    }

    /// Act on a scalar through the vector legs: `Omega[f] = Omega^A (df/dx^A)`.
    pub fn apply_to(&self, f: &SuperPoly) -> SuperPoly {
        let mut out = self.chart.zero();
        for (slot, comp) in &self.components {
            let df = f.left_derivative(*slot).expect("slot belongs to the chart");
            if !df.is_zero() {
                out = &out + &(comp * &df);
            }
        }
        out
    }

    /// Left-multiply every component by a scalar prefactor.
    pub fn scale_form(&self, c: &SuperPoly) -> VectorValuedForm {
        let components = self
            .components
            .iter()
            .map(|(slot, comp)| (*slot, c * comp))
            .collect();
        let components = normalize_components(components);
        let parity = infer_parity(&self.chart, &components);
        VectorValuedForm {
            chart: self.chart.clone(),
            components,
            parity,
        }
    }

    pub fn add(&self, rhs: &VectorValuedForm) -> Result<VectorValuedForm, CalculusError> {
        if !self.chart.same_chart(&rhs.chart) {
            return Err(CalculusError::ChartMismatch);
        }
        let mut components = self.components.clone();
        for (slot, comp) in &rhs.components {
            let entry = components.entry(*slot).or_insert_with(|| self.chart.zero());
            *entry = &*entry + comp;
        }
        let components = normalize_components(components);
        let parity = infer_parity(&self.chart, &components);
        Ok(VectorValuedForm {
            chart: self.chart.clone(),
            components,
            parity,
        })
    }

    pub fn sub(&self, rhs: &VectorValuedForm) -> Result<VectorValuedForm, CalculusError> {
        self.add(&rhs.scale_form(&self.chart.scalar(
            crate::rational::GaussianRational::from_int(-1),
        )))
    }

    /// Split into (even, odd) homogeneous parts.
    pub fn parity_parts(&self) -> (VectorValuedForm, VectorValuedForm) {
        let (e, o) = self.as_field().parity_parts();
        (
            VectorValuedForm::from_field(&e),
            VectorValuedForm::from_field(&o),
        )
    }
}

/// Exterior derivative: d Omega = (dx^B dOmega^A/dx^B) d/dx^A.
pub fn exterior_derivative(omega: &VectorValuedForm) -> VectorValuedForm {
    let chart = omega.chart();
    let components = omega
        .components
        .iter()
        .map(|(slot, comp)| (*slot, chart.d_scalar(comp)))
        .collect();
    let components = normalize_components(components);
    let parity = infer_parity(chart, &components);
    VectorValuedForm {
        chart: chart.clone(),
        components,
        parity,
    }
}

/// Interior derivative on a scalar pseudoform:
/// i_X f = (-1)^{X~} X^B (df/d dx^B). Inhomogeneous X splits by parity.
pub fn interior_scalar(x: &VectorField, f: &SuperPoly) -> Result<SuperPoly, CalculusError> {
    if !x
        .chart()
        .context()
        .same_context(f.context())
    {
        return Err(CalculusError::ChartMismatch);
    }
    let mut out = x.chart().zero();
    let parts = match x.parity() {
        Some(_) => vec![x.clone()],
        None => {
            let (e, o) = x.parity_parts();
            vec![e, o]
        }
    };
    for part in parts {
        if part.is_zero() {
            continue;
        }
        let sign = part.parity().expect("split parts are homogeneous");
        for (slot, comp) in part.components() {
            let fiber = x.chart().fiber_of(*slot)?;
            let df = f.left_derivative(fiber).expect("fiber generator");
            if df.is_zero() {
                continue;
            }
            let piece = comp * &df;
            out = if sign.is_odd() { &out - &piece } else { &out + &piece };
        }
    }
    Ok(out)
}

/// Interior derivative: i_X Omega = ((-1)^{X~} X^B dOmega^A/d dx^B) d/dx^A.
pub fn interior_product(
    x: &VectorField,
    omega: &VectorValuedForm,
) -> Result<VectorValuedForm, CalculusError> {
    if !x.chart().same_chart(omega.chart()) {
        return Err(CalculusError::ChartMismatch);
    }
    let mut components = BTreeMap::new();
    for (slot, comp) in &omega.components {
        let c = interior_scalar(x, comp)?;
        if !c.is_zero() {
            components.insert(*slot, c);
        }
    }
    VectorValuedForm::from_components(omega.chart(), components)
}

/// Exterior derivative of a scalar through the chart, re-exported next to
/// the form operations for symmetry.
pub fn exterior_scalar(chart: &Chart, f: &SuperPoly) -> SuperPoly {
    chart.d_scalar(f)
}

/// Lie derivative of a scalar pseudoform along a homogeneous field:
/// L_X f = d(i_X f) - (-1)^{X~+1} i_X(df).
pub fn lie_scalar(x: &VectorField, f: &SuperPoly) -> Result<SuperPoly, CalculusError> {
    let xp = x.parity().ok_or(CalculusError::InhomogeneousField)?;
    let chart = x.chart();
    let a = chart.d_scalar(&interior_scalar(x, f)?);
    let b = interior_scalar(x, &chart.d_scalar(f))?;
    Ok(if xp.is_odd() { &a - &b } else { &a + &b })
}

/// Lie derivative along a homogeneous field, fully explicit expression:
///
/// L_X Omega = ( (-1)^{X~} dx^B (dX^C/dx^B)(dOmega^A/d dx^C)
///             + X^B (dOmega^A/dx^B)
///             - (-1)^{X~ Omega~} Omega^B (dX^A/dx^B) ) d/dx^A.
pub fn lie_derivative(
    x: &VectorField,
    omega: &VectorValuedForm,
) -> Result<VectorValuedForm, CalculusError> {
    if !x.chart().same_chart(omega.chart()) {
        return Err(CalculusError::ChartMismatch);
    }
    let xp = x.parity().ok_or(CalculusError::InhomogeneousField)?;
    let chart = omega.chart().clone();

    let mut total = VectorValuedForm::zero(&chart);
    let (e, o) = omega.parity_parts();
    for part in [e, o] {
        if part.is_zero() {
            continue;
        }
        let op = part.parity().expect("split parts are homogeneous");
        let mut components = BTreeMap::new();
        for slot in chart.base_ids() {
            let comp_a = part.component(*slot);
            let mut acc = chart.zero();

            // (-1)^{X~} dx^B (dX^C/dx^B)(dOmega^A/d dx^C)
            for b in chart.base_ids() {
                let dxb = chart.gen(chart.fiber_of(*b)?);
                for c in chart.base_ids() {
                    let dxc_of_b = x.component(*c).left_derivative(*b).expect("base gen");
                    if dxc_of_b.is_zero() {
                        continue;
                    }
                    let domega = comp_a.left_derivative(chart.fiber_of(*c)?).expect("fiber gen");
                    if domega.is_zero() {
                        continue;
                    }
                    let term = &(&dxb * &dxc_of_b) * &domega;
                    acc = if xp.is_odd() { &acc - &term } else { &acc + &term };
                }
            }

            // X^B (dOmega^A/dx^B)
            for (b, xb) in x.components() {
                let d = comp_a.left_derivative(*b).expect("base gen");
                if !d.is_zero() {
                    acc = &acc + &(xb * &d);
                }
            }

            // -(-1)^{X~ Omega~} Omega^B (dX^A/dx^B)
            let xa = x.component(*slot);
            for (b, omega_b) in part.components() {
                let d = xa.left_derivative(*b).expect("base gen");
                if d.is_zero() {
                    continue;
                }
                let term = omega_b * &d;
                acc = if xp.koszul_sign(op) < 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }

            if !acc.is_zero() {
                components.insert(*slot, acc);
            }
        }
        total = total.add(&VectorValuedForm::from_components(&chart, components)?)?;
    }
    Ok(total)
}

/// Lie derivative assembled from d and i_X on the scalar components plus
/// the vector-leg correction:
///
/// L_X Omega = ( d(i_X Omega^A) - (-1)^{X~+1} i_X(d Omega^A)
///             - (-1)^{X~ Omega~} Omega^B (dX^A/dx^B) ) d/dx^A.
pub fn lie_derivative_via_cartan(
    x: &VectorField,
    omega: &VectorValuedForm,
) -> Result<VectorValuedForm, CalculusError> {
    if !x.chart().same_chart(omega.chart()) {
        return Err(CalculusError::ChartMismatch);
    }
    let xp = x.parity().ok_or(CalculusError::InhomogeneousField)?;
    let chart = omega.chart().clone();

    let mut total = VectorValuedForm::zero(&chart);
    let (e, o) = omega.parity_parts();
    for part in [e, o] {
        if part.is_zero() {
            continue;
        }
        let op = part.parity().expect("split parts are homogeneous");
        let mut components = BTreeMap::new();
        for slot in chart.base_ids() {
            let comp_a = part.component(*slot);
            let mut acc = chart.d_scalar(&interior_scalar(x, &comp_a)?);

            let i_d = interior_scalar(x, &chart.d_scalar(&comp_a))?;
            // -(-1)^{X~+1} i_X(d Omega^A): the sign is + for even X.
            acc = if xp.is_odd() { &acc - &i_d } else { &acc + &i_d };

            let xa = x.component(*slot);
            for (b, omega_b) in part.components() {
                let d = xa.left_derivative(*b).expect("base gen");
                if d.is_zero() {
                    continue;
                }
                let term = omega_b * &d;
                acc = if xp.koszul_sign(op) < 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }

            if !acc.is_zero() {
                components.insert(*slot, acc);
            }
        }
        total = total.add(&VectorValuedForm::from_components(&chart, components)?)?;
    }
    Ok(total)
}

impl fmt::Display for VectorValuedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_components(f, &self.chart, &self.components)
    }
}

impl fmt::Debug for VectorValuedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn even3() -> Chart {
        Chart::builder()
            .base("x", Parity::Even)
            .base("y", Parity::Even)
            .base("z", Parity::Even)
            .build()
            .unwrap()
    }

    /// The classical contact example dz + x dy as a one-legged form.
    fn contact_form(ch: &Chart) -> VectorValuedForm {
        let alpha = &ch.gen_named("dz").unwrap()
            + &(&ch.gen_named("x").unwrap() * &ch.gen_named("dy").unwrap());
        let mut comps = BTreeMap::new();
        comps.insert(ch.lookup("z").unwrap(), alpha);
        VectorValuedForm::from_components(ch, comps).unwrap()
    }

    #[test]
    fn classical_interior_and_exterior() {
        let ch = even3();
        let alpha = contact_form(&ch);
        let d_alpha = exterior_derivative(&alpha);
        // d(dz + x dy) = dx dy.
        let expect = &ch.gen_named("dx").unwrap() * &ch.gen_named("dy").unwrap();
        assert_eq!(d_alpha.component(ch.lookup("z").unwrap()), expect);
        // d^2 = 0.
        assert!(exterior_derivative(&d_alpha).is_zero());

        // i_{d/dz} alpha = 1 in the z slot.
        let dz_field = VectorField::frame(&ch, ch.lookup("z").unwrap()).unwrap();
        let contracted = interior_product(&dz_field, &alpha).unwrap();
        assert_eq!(contracted.component(ch.lookup("z").unwrap()), ch.one());

        // Functions without fiber dependence contract to zero.
        let f = ch.gen_named("x").unwrap();
        assert!(interior_scalar(&dz_field, &f).unwrap().is_zero());
    }

    #[test]
    fn lie_derivative_of_zero_form_is_directional_derivative() {
        let ch = even3();
        let x_field = VectorField::frame(&ch, ch.lookup("x").unwrap()).unwrap();
        let mut comps = BTreeMap::new();
        comps.insert(ch.lookup("z").unwrap(), ch.gen_named("x").unwrap());
        let omega = VectorValuedForm::from_components(&ch, comps).unwrap();
        let l = lie_derivative(&x_field, &omega).unwrap();
        assert_eq!(l.component(ch.lookup("z").unwrap()), ch.one());
        // The two expressions for L_X agree.
        let l2 = lie_derivative_via_cartan(&x_field, &omega).unwrap();
        assert_eq!(l, l2);
    }

    #[test]
    fn chart_mismatch_rejected() {
        let a = even3();
        let b = even3();
        let alpha = contact_form(&a);
        let v = VectorField::frame(&b, b.lookup("z").unwrap()).unwrap();
        assert!(matches!(
            interior_product(&v, &alpha),
            Err(CalculusError::ChartMismatch)
        ));
    }
}
