//! Vector fields: derivations with one component per base coordinate.
//!
//! Components may depend on fiber generators (composite derivations such as
//! dth^a D_a arise inside the adjoint series), but a derivation only ever
//! differentiates base generators.

use super::chart::Chart;
use crate::algebra::{GenId, Parity, SuperPoly};
use crate::error::CalculusError;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone)]
pub struct VectorField {
    chart: Chart,
    components: BTreeMap<GenId, SuperPoly>,
    /// Total parity; `None` for an inhomogeneous field.
    parity: Option<Parity>,
}

impl PartialEq for VectorField {
    fn eq(&self, other: &Self) -> bool {
        self.chart.same_chart(&other.chart) && self.components == other.components
    }
}

impl Eq for VectorField {}

pub(crate) fn infer_parity(
    chart: &Chart,
    components: &BTreeMap<GenId, SuperPoly>,
) -> Option<Parity> {
    let mut total: Option<Parity> = None;
    for (slot, comp) in components {
        let cp = comp.parity()?;
        let tp = cp + chart.context().parity(*slot);
        match total {
            None => total = Some(tp),
            Some(t) if t == tp => {}
            _ => return None,
        }
    }
    total.or(Some(Parity::Even))
}

pub(crate) fn normalize_components(
    components: BTreeMap<GenId, SuperPoly>,
) -> BTreeMap<GenId, SuperPoly> {
    components.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl VectorField {
    /// Build a field with a declared parity; every nonzero component must
    /// satisfy parity(component) = parity(field) + parity(slot).
    pub fn new(
        chart: &Chart,
        components: BTreeMap<GenId, SuperPoly>,
        parity: Parity,
    ) -> Result<Self, CalculusError> {
        let components = normalize_components(components);
        for (slot, comp) in &components {
            if !chart.is_base(*slot) {
                return Err(CalculusError::NotABaseGenerator(
                    chart.context().name(*slot).to_string(),
                ));
            }
            let expected = parity + chart.context().parity(*slot);
            if comp.parity() != Some(expected) {
                return Err(CalculusError::ComponentParity {
                    gen: chart.context().name(*slot).to_string(),
                });
            }
        }
        Ok(VectorField {
            chart: chart.clone(),
            components,
            parity: Some(parity),
        })
    }

    /// Build a field inferring the parity; inhomogeneous combinations are
    /// allowed and report `parity() == None`.
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
        Ok(VectorField {
            chart: chart.clone(),
            components,
            parity,
        })
    }

    pub fn zero(chart: &Chart) -> Self {
        VectorField {
            chart: chart.clone(),
            components: BTreeMap::new(),
            parity: Some(Parity::Even),
        }
    }

    /// The coordinate frame field for one base generator.
    pub fn frame(chart: &Chart, slot: GenId) -> Result<Self, CalculusError> {
        if !chart.is_base(slot) {
            return Err(CalculusError::NotABaseGenerator(
                chart.context().name(slot).to_string(),
            ));
        }
        let mut comps = BTreeMap::new();
        comps.insert(slot, chart.one());
        Ok(VectorField {
            chart: chart.clone(),
            components: comps,
            parity: Some(chart.context().parity(slot)),
        })
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

    /// Act on a scalar: X(f) = sum_B X^B (df/dx^B).
    pub fn apply(&self, f: &SuperPoly) -> SuperPoly {
        let mut out = self.chart.zero();
        for (slot, comp) in &self.components {
            let df = f.left_derivative(*slot).expect("slot belongs to the chart");
            if !df.is_zero() {
                out = &out + &(comp * &df);
            }
        }
        out
    }

    /// Left-multiply by a scalar (possibly fiber-dependent) prefactor.
    pub fn scale_form(&self, c: &SuperPoly) -> VectorField {
        let components = self
            .components
            .iter()
            .map(|(slot, comp)| (*slot, c * comp))
            .collect();
        let components = normalize_components(components);
        let parity = infer_parity(&self.chart, &components);
        VectorField {
            chart: self.chart.clone(),
            components,
            parity,
        }
    }

    pub fn add(&self, rhs: &VectorField) -> Result<VectorField, CalculusError> {
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
        Ok(VectorField {
            chart: self.chart.clone(),
            components,
            parity,
        })
    }

    pub fn sub(&self, rhs: &VectorField) -> Result<VectorField, CalculusError> {
        self.add(&rhs.scale_form(&self.chart.scalar(crate::rational::GaussianRational::from_int(
            -1,
        ))))
    }

    /// Split into (even, odd) homogeneous parts.
    pub fn parity_parts(&self) -> (VectorField, VectorField) {
        let mut even = BTreeMap::new();
        let mut odd = BTreeMap::new();
        for (slot, comp) in &self.components {
            let slot_parity = self.chart.context().parity(*slot);
            let (ce, co) = comp.parity_parts();
            // A component piece of parity p in slot s contributes total
            // parity p + s.
            let (even_piece, odd_piece) = match slot_parity {
                Parity::Even => (ce, co),
                Parity::Odd => (co, ce),
            };
            if !even_piece.is_zero() {
                even.insert(*slot, even_piece);
            }
            if !odd_piece.is_zero() {
                odd.insert(*slot, odd_piece);
            }
        }
        (
            VectorField {
                chart: self.chart.clone(),
                components: even,
                parity: Some(Parity::Even),
            },
            VectorField {
                chart: self.chart.clone(),
                components: odd,
                parity: Some(Parity::Odd),
            },
        )
    }
}

/// Graded commutator of two homogeneous derivations:
/// `[X,Y] = X Y - (-1)^{X~ Y~} Y X`, with components `[X,Y](x^A)`.
pub fn graded_commutator(x: &VectorField, y: &VectorField) -> Result<VectorField, CalculusError> {
    if !x.chart.same_chart(&y.chart) {
        return Err(CalculusError::ChartMismatch);
    }
    let (xp, yp) = match (x.parity, y.parity) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(CalculusError::InhomogeneousField),
    };
    let sign = xp.koszul_sign(yp);
    let mut components = BTreeMap::new();
    for slot in x.chart.base_ids() {
        let xy = x.apply(&y.component(*slot));
        let yx = y.apply(&x.component(*slot));
        let comp = if sign < 0 { &xy + &yx } else { &xy - &yx };
        if !comp.is_zero() {
            components.insert(*slot, comp);
        }
    }
    VectorField::new(&x.chart, components, xp + yp)
}

pub(crate) fn fmt_components(
    f: &mut fmt::Formatter<'_>,
    chart: &Chart,
    components: &BTreeMap<GenId, SuperPoly>,
) -> fmt::Result {
    if components.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (slot, comp) in components {
        let name = chart.context().name(*slot);
        let (neg, body) = if comp.num_terms() == 1 {
            let s = comp.to_string();
            if s == "1" {
                (false, format!("@{}", name))
            } else if s == "-1" {
                (true, format!("@{}", name))
            } else if let Some(stripped) = s.strip_prefix('-') {
                (true, format!("{}*@{}", stripped, name))
            } else {
                (false, format!("{}*@{}", s, name))
            }
        } else {
            (false, format!("({})*@{}", comp, name))
        };
        if first {
            if neg {
                write!(f, "-{}", body)?;
            } else {
                write!(f, "{}", body)?;
            }
            first = false;
        } else if neg {
            write!(f, " - {}", body)?;
        } else {
            write!(f, " + {}", body)?;
        }
    }
    Ok(())
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_components(f, &self.chart, &self.components)
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
