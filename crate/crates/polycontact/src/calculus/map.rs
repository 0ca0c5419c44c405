//! Parity-respecting coordinate transformations with explicit inverses.
//!
//! A `SuperMap` stores both directions in closed form; construction checks
//! that the two compositions are the identity. Fiber coordinates transform
//! by the induced law d(x-bar)^A = dx^B (d x-bar^A / dx^B), realized as the
//! source-side exterior derivative of the forward images.

use super::chart::Chart;
use super::form::VectorValuedForm;
use crate::algebra::{GenId, SuperPoly};
use crate::error::{AlgebraError, CalculusError};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Clone)]
pub struct SuperMap {
    source: Chart,
    target: Chart,
    /// Target base coordinate -> its expression over the source chart.
    forward: BTreeMap<GenId, SuperPoly>,
    /// Source base coordinate -> its expression over the target chart.
    inverse: BTreeMap<GenId, SuperPoly>,
}

impl SuperMap {
    pub fn new(
        source: &Chart,
        target: &Chart,
        forward: BTreeMap<GenId, SuperPoly>,
        inverse: BTreeMap<GenId, SuperPoly>,
    ) -> Result<Self, CalculusError> {
        for t in target.base_ids() {
            let img = forward
                .get(t)
                .ok_or_else(|| AlgebraError::UnmappedGenerator(target.context().name(*t).into()))?;
            if !img.context().same_context(source.context()) {
                return Err(AlgebraError::ContextMismatch.into());
            }
            if !img.is_zero() && img.parity() != Some(target.context().parity(*t)) {
                return Err(AlgebraError::ParityMismatch {
                    gen: target.context().name(*t).to_string(),
                }
                .into());
            }
        }
        for s in source.base_ids() {
            let img = inverse
                .get(s)
                .ok_or_else(|| AlgebraError::UnmappedGenerator(source.context().name(*s).into()))?;
            if !img.context().same_context(target.context()) {
                return Err(AlgebraError::ContextMismatch.into());
            }
        }
        let map = SuperMap {
            source: source.clone(),
            target: target.clone(),
            forward,
            inverse,
        };
        map.check_inverse()?;
        Ok(map)
    }

    /// A self-map of one chart; generators not named transform identically.
    pub fn endomorphism(
        chart: &Chart,
        forward: impl IntoIterator<Item = (GenId, SuperPoly)>,
        inverse: impl IntoIterator<Item = (GenId, SuperPoly)>,
    ) -> Result<Self, CalculusError> {
        let mut fwd: BTreeMap<GenId, SuperPoly> = forward.into_iter().collect();
        let mut inv: BTreeMap<GenId, SuperPoly> = inverse.into_iter().collect();
        for b in chart.base_ids() {
            fwd.entry(*b).or_insert_with(|| chart.gen(*b));
            inv.entry(*b).or_insert_with(|| chart.gen(*b));
        }
        SuperMap::new(chart, chart, fwd, inv)
    }

    pub fn identity(chart: &Chart) -> Self {
        SuperMap::endomorphism(chart, [], []).expect("identity map is well formed")
    }

    pub fn source(&self) -> &Chart {
        &self.source
    }

    pub fn target(&self) -> &Chart {
        &self.target
    }

    pub fn forward_image(&self, target_base: GenId) -> &SuperPoly {
        &self.forward[&target_base]
    }

    pub fn inverse_image(&self, source_base: GenId) -> &SuperPoly {
        &self.inverse[&source_base]
    }

    /// The same map with source and target swapped.
    pub fn inverse_map(&self) -> SuperMap {
        SuperMap {
            source: self.target.clone(),
            target: self.source.clone(),
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
        }
    }

    fn check_inverse(&self) -> Result<(), CalculusError> {
        for s in self.source.base_ids() {
            let roundtrip = self.pullback_scalar(&self.inverse[s])?;
            if roundtrip != self.source.gen(*s) {
                return Err(CalculusError::NotInverse {
                    side: "forward-after-inverse",
                    gen: self.source.context().name(*s).to_string(),
                });
            }
        }
        let inv = self.inverse_map();
        for t in self.target.base_ids() {
            let roundtrip = inv.pullback_scalar(&self.forward[t])?;
            if roundtrip != self.target.gen(*t) {
                return Err(CalculusError::NotInverse {
                    side: "inverse-after-forward",
                    gen: self.target.context().name(*t).to_string(),
                });
            }
        }
        Ok(())
    }

    /// Pull a scalar pseudoform on the target back to the source. Base
    /// generators substitute by the forward images, fiber generators by the
    /// induced law, parameters by name.
    pub fn pullback_scalar(&self, omega: &SuperPoly) -> Result<SuperPoly, CalculusError> {
        if !omega.context().same_context(self.target.context()) {
            return Err(CalculusError::ChartMismatch);
        }
        let src_ctx = Arc::clone(self.source.context());
        let tgt = self.target.clone();
        let out = omega.eval_with(&src_ctx, |g| {
            if tgt.is_base(g) {
                Ok(self.forward[&g].clone())
            } else if let Some(b) = tgt.base_of(g) {
                Ok(self.source.d_scalar(&self.forward[&b]))
            } else {
                let name = tgt.context().name(g);
                let id = src_ctx
                    .lookup(name)
                    .ok_or_else(|| AlgebraError::UnmappedGenerator(name.to_string()))?;
                Ok(SuperPoly::generator(&src_ctx, id))
            }
        })?;
        Ok(out)
    }

    /// Express a tangent-valued form given over the target in source
    /// coordinates: scalar parts pull back, the vector legs transform with
    /// the Jacobian of the inverse, d/dx-bar^A = (dx^B/dx-bar^A) d/dx^B.
    pub fn transform_vector_valued(
        &self,
        omega: &VectorValuedForm,
    ) -> Result<VectorValuedForm, CalculusError> {
        if !omega.chart().same_chart(&self.target) {
            return Err(CalculusError::ChartMismatch);
        }
        let mut components: BTreeMap<GenId, SuperPoly> = BTreeMap::new();
        for (a, comp) in omega.components() {
            for b in self.source.base_ids() {
                let jac = self.inverse[b]
                    .left_derivative(*a)
                    .expect("target base generator");
                if jac.is_zero() {
                    continue;
                }
                let piece = self.pullback_scalar(&comp.try_mul(&jac).map_err(CalculusError::from)?)?;
                if piece.is_zero() {
                    continue;
                }
                let entry = components.entry(*b).or_insert_with(|| self.source.zero());
                *entry = &*entry + &piece;
            }
        }
        VectorValuedForm::from_components(&self.source, components)
    }
}

/// after o before, with `before: S -> M` and `after: M -> T`.
pub fn compose(after: &SuperMap, before: &SuperMap) -> Result<SuperMap, CalculusError> {
    if !before.target.same_chart(&after.source) {
        return Err(CalculusError::ChartMismatch);
    }
    let mut forward = BTreeMap::new();
    for t in after.target.base_ids() {
        forward.insert(*t, before.pullback_scalar(&after.forward[t])?);
    }
    let mut inverse = BTreeMap::new();
    let after_inv = after.inverse_map();
    for s in before.source.base_ids() {
        inverse.insert(*s, after_inv.pullback_scalar(&before.inverse[s])?);
    }
    SuperMap::new(&before.source, &after.target, forward, inverse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Parity;
    use crate::calculus::form::exterior_derivative;

    fn chart() -> Chart {
        Chart::builder()
            .base("x", Parity::Even)
            .base("th", Parity::Odd)
            .parameter("c", Parity::Even)
            .parameter("eps", Parity::Odd)
            .build()
            .unwrap()
    }

    fn shift_map(ch: &Chart) -> SuperMap {
        // x -> x + c, th -> th + eps.
        let x = ch.lookup("x").unwrap();
        let th = ch.lookup("th").unwrap();
        let c = ch.gen_named("c").unwrap();
        let eps = ch.gen_named("eps").unwrap();
        SuperMap::endomorphism(
            ch,
            [(x, &ch.gen(x) + &c), (th, &ch.gen(th) + &eps)],
            [(x, &ch.gen(x) - &c), (th, &ch.gen(th) - &eps)],
        )
        .unwrap()
    }

    #[test]
    fn identity_pullback_is_identity() {
        let ch = chart();
        let id = SuperMap::identity(&ch);
        let f = &ch.gen_named("x").unwrap() * &ch.gen_named("dth").unwrap();
        assert_eq!(id.pullback_scalar(&f).unwrap(), f);
    }

    #[test]
    fn constant_shift_fixes_differentials() {
        let ch = chart();
        let m = shift_map(&ch);
        let dx = ch.gen_named("dx").unwrap();
        assert_eq!(m.pullback_scalar(&dx).unwrap(), dx);
    }

    #[test]
    fn wrong_inverse_is_rejected() {
        let ch = chart();
        let x = ch.lookup("x").unwrap();
        let c = ch.gen_named("c").unwrap();
        let bad = SuperMap::endomorphism(&ch, [(x, &ch.gen(x) + &c)], []);
        assert!(matches!(bad, Err(CalculusError::NotInverse { .. })));
    }

    #[test]
    fn pullback_commutes_with_d() {
        let ch = chart();
        let m = shift_map(&ch);
        let f = &ch.gen_named("x").unwrap() * &ch.gen_named("th").unwrap();
        let lhs = m.pullback_scalar(&ch.d_scalar(&f)).unwrap();
        let rhs = ch.d_scalar(&m.pullback_scalar(&f).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_matches_sequential_pullback() {
        let ch = chart();
        let m = shift_map(&ch);
        let mm = compose(&m, &m).unwrap();
        let f = &ch.gen_named("x").unwrap() * &ch.gen_named("dth").unwrap();
        let seq = m.pullback_scalar(&m.pullback_scalar(&f).unwrap()).unwrap();
        assert_eq!(mm.pullback_scalar(&f).unwrap(), seq);
    }

    #[test]
    fn transform_identity_fixes_forms() {
        let ch = chart();
        let id = SuperMap::identity(&ch);
        let mut comps = BTreeMap::new();
        comps.insert(
            ch.lookup("x").unwrap(),
            &ch.gen_named("dx").unwrap() + &(&ch.gen_named("th").unwrap() * &ch.gen_named("dth").unwrap()),
        );
        let omega = VectorValuedForm::from_components(&ch, comps).unwrap();
        assert_eq!(id.transform_vector_valued(&omega).unwrap(), omega);
        // Exterior derivative then transform equals transform then d for the
        // identity, trivially.
        let d = exterior_derivative(&omega);
        assert_eq!(id.transform_vector_valued(&d).unwrap(), d);
    }
}
