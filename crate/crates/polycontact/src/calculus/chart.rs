//! Single-coordinate-system charts over the antitangent bundle.
//!
//! A chart declares base coordinates, one fiber partner per base coordinate
//! (parity flipped, named "d" + base name), and formal parameters. The
//! exterior derivative of scalar pseudoforms lives here since it needs the
//! base/fiber pairing.

use crate::algebra::{GenId, Generator, GeneratorContext, GeneratorKind, Parity, SuperPoly};
use crate::error::{AlgebraError, CalculusError};
use crate::rational::GaussianRational;
use std::sync::Arc;

#[derive(Debug)]
struct ChartInner {
    ctx: Arc<GeneratorContext>,
    base: Vec<GenId>,
    fiber: Vec<GenId>,
    params: Vec<GenId>,
}

/// A chart on a single global coordinate system. Cheap to clone.
#[derive(Debug, Clone)]
pub struct Chart(Arc<ChartInner>);

/// Declares the generators of a chart in canonical order: all base
/// coordinates first, then their fiber partners, then parameters.
#[derive(Default)]
pub struct ChartBuilder {
    base: Vec<(String, Parity, bool)>,
    params: Vec<(String, Parity, bool)>,
}

impl ChartBuilder {
    pub fn new() -> Self {
        ChartBuilder::default()
    }

    pub fn base(mut self, name: &str, parity: Parity) -> Self {
        self.base.push((name.to_string(), parity, false));
        self
    }

    pub fn parameter(mut self, name: &str, parity: Parity) -> Self {
        self.params.push((name.to_string(), parity, false));
        self
    }

    pub fn unit_parameter(mut self, name: &str) -> Self {
        self.params.push((name.to_string(), Parity::Even, true));
        self
    }

    /// An even base coordinate admitting negative powers, for coordinates
    /// restricted to a range where they never vanish.
    pub fn invertible_base(mut self, name: &str) -> Self {
        self.base.push((name.to_string(), Parity::Even, true));
        self
    }

    pub fn build(self) -> Result<Chart, AlgebraError> {
        let mut gens = Vec::new();
        let mut base_ids = Vec::new();
        let mut fiber_ids = Vec::new();
        let mut param_ids = Vec::new();

        for (name, parity, invertible) in &self.base {
            base_ids.push(GenId(gens.len() as u32));
            gens.push(Generator {
                name: name.clone(),
                parity: *parity,
                kind: GeneratorKind::Base,
                invertible: *invertible,
            });
        }
        for (name, parity, _) in &self.base {
            fiber_ids.push(GenId(gens.len() as u32));
            gens.push(Generator {
                name: format!("d{}", name),
                parity: parity.flip(),
                kind: GeneratorKind::Fiber,
                invertible: false,
            });
        }
        for (name, parity, invertible) in &self.params {
            param_ids.push(GenId(gens.len() as u32));
            gens.push(Generator {
                name: name.clone(),
                parity: *parity,
                kind: GeneratorKind::Parameter,
                invertible: *invertible,
            });
        }
        let ctx = GeneratorContext::new(gens)?;
        Ok(Chart(Arc::new(ChartInner {
            ctx,
            base: base_ids,
            fiber: fiber_ids,
            params: param_ids,
        })))
    }
}

impl Chart {
    pub fn builder() -> ChartBuilder {
        ChartBuilder::new()
    }

    pub fn context(&self) -> &Arc<GeneratorContext> {
        &self.0.ctx
    }

    pub fn same_chart(&self, other: &Chart) -> bool {
        self.0.ctx.same_context(&other.0.ctx)
    }

    pub fn base_ids(&self) -> &[GenId] {
        &self.0.base
    }

    pub fn fiber_ids(&self) -> &[GenId] {
        &self.0.fiber
    }

    pub fn param_ids(&self) -> &[GenId] {
        &self.0.params
    }

    pub fn is_base(&self, id: GenId) -> bool {
        self.0.base.contains(&id)
    }

    pub fn is_fiber(&self, id: GenId) -> bool {
        self.0.fiber.contains(&id)
    }

    /// The fiber partner of a base coordinate.
    pub fn fiber_of(&self, base: GenId) -> Result<GenId, CalculusError> {
        self.0
            .base
            .iter()
            .position(|b| *b == base)
            .map(|i| self.0.fiber[i])
            .ok_or_else(|| {
                CalculusError::NotABaseGenerator(self.0.ctx.name(base).to_string())
            })
    }

    pub fn base_of(&self, fiber: GenId) -> Option<GenId> {
        self.0
            .fiber
            .iter()
            .position(|f| *f == fiber)
            .map(|i| self.0.base[i])
    }

    pub fn zero(&self) -> SuperPoly {
        SuperPoly::zero(&self.0.ctx)
    }

    pub fn one(&self) -> SuperPoly {
        SuperPoly::one(&self.0.ctx)
    }

    pub fn scalar(&self, c: GaussianRational) -> SuperPoly {
        SuperPoly::scalar(&self.0.ctx, c)
    }

    pub fn gen(&self, id: GenId) -> SuperPoly {
        SuperPoly::generator(&self.0.ctx, id)
    }

    pub fn gen_named(&self, name: &str) -> Result<SuperPoly, AlgebraError> {
        let id = self
            .0
            .ctx
            .lookup(name)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))?;
        Ok(self.gen(id))
    }

    pub fn lookup(&self, name: &str) -> Option<GenId> {
        self.0.ctx.lookup(name)
    }

    /// Exterior derivative of a scalar pseudoform:
    /// d f = sum_B dx^B (df/dx^B), base coordinates only.
    pub fn d_scalar(&self, f: &SuperPoly) -> SuperPoly {
        let mut out = self.zero();
        for (i, b) in self.0.base.iter().enumerate() {
            let df = f
                .left_derivative(*b)
                .expect("base generator belongs to the chart");
            if !df.is_zero() {
                out = &out + &(&self.gen(self.0.fiber[i]) * &df);
            }
        }
        out
    }

    /// Transport a scalar from another chart by matching generator names,
    /// for projections and inclusions between charts sharing coordinates.
    pub fn lift_from(&self, f: &SuperPoly) -> Result<SuperPoly, AlgebraError> {
        let src = Arc::clone(f.context());
        let dst = Arc::clone(self.context());
        f.eval_with(&dst, |g| {
            let name = src.name(g);
            let id = dst
                .lookup(name)
                .ok_or_else(|| AlgebraError::UnmappedGenerator(name.to_string()))?;
            Ok(SuperPoly::generator(&dst, id))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy_chart() -> Chart {
        // Purely even 3-space (x, y, z); fiber coordinates are odd.
        Chart::builder()
            .base("x", Parity::Even)
            .base("y", Parity::Even)
            .base("z", Parity::Even)
            .build()
            .unwrap()
    }

    #[test]
    fn fiber_parity_is_flipped() {
        let ch = toy_chart();
        assert_eq!(ch.context().parity(ch.fiber_ids()[0]), Parity::Odd);

        let sc = Chart::builder()
            .base("x0", Parity::Even)
            .base("th1", Parity::Odd)
            .build()
            .unwrap();
        let dth1 = sc.fiber_of(sc.lookup("th1").unwrap()).unwrap();
        assert_eq!(sc.context().parity(dth1), Parity::Even);
        assert_eq!(sc.context().name(dth1), "dth1");
    }

    #[test]
    fn d_squared_vanishes_on_scalars() {
        let ch = toy_chart();
        let x = ch.gen_named("x").unwrap();
        let y = ch.gen_named("y").unwrap();
        let f = &(&x * &x) * &y;
        let df = ch.d_scalar(&f);
        assert!(ch.d_scalar(&df).is_zero());
    }

    #[test]
    fn classical_contact_form_derivative() {
        // d(dz + x dy) = dx dy on the even 3-chart.
        let ch = toy_chart();
        let x = ch.gen_named("x").unwrap();
        let dy = ch.gen_named("dy").unwrap();
        let dz = ch.gen_named("dz").unwrap();
        let dx = ch.gen_named("dx").unwrap();
        let alpha = &dz + &(&x * &dy);
        assert_eq!(ch.d_scalar(&alpha), &dx * &dy);
    }

    #[test]
    fn lift_by_name_between_charts() {
        let small = Chart::builder().base("x", Parity::Even).build().unwrap();
        let big = Chart::builder()
            .base("x", Parity::Even)
            .base("l", Parity::Even)
            .build()
            .unwrap();
        let f = small.gen_named("x").unwrap();
        let lifted = big.lift_from(&f).unwrap();
        assert_eq!(lifted, big.gen_named("x").unwrap());
        // The reverse direction fails on the missing generator.
        let g = big.gen_named("l").unwrap();
        assert!(small.lift_from(&g).is_err());
    }
}
