//! Degree-bounded ansatz solves over the superspace.
//!
//! Unknown vector fields are expanded over (odd monomial) x (x-monomial of
//! bounded degree) x (coordinate slot); contraction conditions against a
//! fixed form become exact sparse linear systems over Q(i). The interior
//! product of a one-fiber-degree form against a frame direction is a pure
//! base function, so each unknown touches only a handful of equations.

use super::model::SusyFrame;
use crate::algebra::linear::{reduce, Reduction, SparseRow};
use crate::algebra::{GenId, Monomial, Parity, SuperPoly};
use crate::calculus::VectorValuedForm;
use crate::rational::GaussianRational;
use std::collections::BTreeMap;

/// The ansatz basis: every (slot, monomial) pair with the monomial drawn
/// from the full 16-element odd basis times x-monomials of degree <= x_deg.
pub struct BoundedAnsatz {
    slots: Vec<GenId>,
    monos: Vec<Monomial>,
}

impl BoundedAnsatz {
    pub fn new(frame: &SusyFrame, x_deg: u32) -> Self {
        let odd_ids: Vec<GenId> = frame
            .th_ids()
            .iter()
            .chain(frame.thb_ids().iter())
            .copied()
            .collect();
        let mut odd_monos = vec![Monomial::one()];
        for id in odd_ids {
            let mut next = Vec::with_capacity(odd_monos.len() * 2);
            for m in &odd_monos {
                next.push(m.clone());
                let mut with = m.clone();
                with.odd.push(id);
                next.push(with);
            }
            odd_monos = next;
        }

        let x_monos = x_monomials(frame.x_ids(), x_deg);
        let mut monos = Vec::with_capacity(odd_monos.len() * x_monos.len());
        for om in &odd_monos {
            for xm in &x_monos {
                let (m, sign) = om.mul(xm).expect("even-odd merge cannot collide");
                debug_assert_eq!(sign, 1);
                monos.push(m);
            }
        }
        BoundedAnsatz {
            slots: frame.susy_base_ids(),
            monos,
        }
    }

    pub fn unknowns(&self) -> usize {
        self.slots.len() * self.monos.len()
    }

    pub fn slot_count(&self) -> usize {
        self.slots.len()
    }

    pub fn mono_count(&self) -> usize {
        self.monos.len()
    }

    fn unknown_index(&self, slot_idx: usize, mono_idx: usize) -> usize {
        slot_idx * self.monos.len() + mono_idx
    }

    /// Parity of one ansatz element (monomial) d/d(slot).
    fn element_parity(&self, frame: &SusyFrame, slot_idx: usize, mono_idx: usize) -> Parity {
        self.monos[mono_idx].parity() + frame.chart().context().parity(self.slots[slot_idx])
    }

    /// Equation rows for `i_X form = rhs`, keyed by (condition id, leg,
    /// monomial). The caller may stack several conditions; `slack` adds one
    /// extra unknown column multiplying `-rhs` instead of fixing it.
    #[allow(clippy::too_many_arguments)]
    fn accumulate_rows(
        &self,
        frame: &SusyFrame,
        form: &VectorValuedForm,
        rhs: Option<&VectorValuedForm>,
        cond: usize,
        slack_col: Option<usize>,
        rows: &mut BTreeMap<(usize, GenId, Monomial), SparseRow>,
    ) {
        let chart = frame.chart();
        // d(form^A)/d(d slot): pure base functions for fiber-degree-one
        // forms; fiber monomials may survive for higher degree.
        for (slot_idx, slot) in self.slots.iter().enumerate() {
            let fiber = chart.fiber_of(*slot).expect("ansatz slots are base coordinates");
            for (leg, comp) in form.components() {
                let contracted = comp.left_derivative(fiber).expect("fiber generator");
                if contracted.is_zero() {
                    continue;
                }
                for (mono_idx, mono) in self.monos.iter().enumerate() {
                    let parity = self.element_parity(frame, slot_idx, mono_idx);
                    let unknown = self.unknown_index(slot_idx, mono_idx);
                    for (m, c) in contracted.terms() {
                        let Some((full, sign)) = mono.mul(m) else {
                            continue;
                        };
                        let mut coeff = c.clone();
                        if sign < 0 {
                            coeff = -coeff;
                        }
                        if parity.is_odd() {
                            coeff = -coeff;
                        }
                        rows.entry((cond, *leg, full))
                            .or_default()
                            .add(unknown, &coeff);
                    }
                }
            }
        }
        if let Some(rhs) = rhs {
            for (leg, comp) in rhs.components() {
                for (m, c) in comp.terms() {
                    let row = rows
                        .entry((cond, *leg, m.clone()))
                        .or_default();
                    match slack_col {
                        Some(col) => row.add(col, &-c),
                        None => row.rhs = &row.rhs + c,
                    }
                }
            }
        }
    }

    /// Rebuild the vector field encoded by a sparse solution vector.
    pub fn field_from_solution(
        &self,
        frame: &SusyFrame,
        solution: &BTreeMap<usize, GaussianRational>,
    ) -> crate::calculus::VectorField {
        let chart = frame.chart();
        let mut comps: BTreeMap<GenId, SuperPoly> = BTreeMap::new();
        for (unknown, value) in solution {
            if *unknown >= self.unknowns() {
                continue; // slack column
            }
            let slot_idx = unknown / self.monos.len();
            let mono_idx = unknown % self.monos.len();
            let piece = SuperPoly::from_term(
                chart.context(),
                self.monos[mono_idx].clone(),
                value.clone(),
            );
            let entry = comps
                .entry(self.slots[slot_idx])
                .or_insert_with(|| chart.zero());
            *entry = &*entry + &piece;
        }
        crate::calculus::VectorField::from_components(chart, comps)
            .expect("ansatz slots are base coordinates")
    }
}

fn x_monomials(x_ids: &[GenId; 4], max_deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    // Multisets of total degree <= max_deg over four variables.
    fn rec(x_ids: &[GenId; 4], var: usize, remaining: u32, current: &mut Vec<(GenId, i32)>, out: &mut Vec<Monomial>) {
        if var == 4 {
            let mut m = Monomial::one();
            m.even = current.clone();
            out.push(m);
            return;
        }
        for e in 0..=remaining {
            if e > 0 {
                current.push((x_ids[var], e as i32));
            }
            rec(x_ids, var + 1, remaining - e, current, out);
            if e > 0 {
                current.pop();
            }
        }
    }
    rec(x_ids, 0, max_deg, &mut Vec::new(), &mut out);
    out
}

/// Outcome of the bounded kernel solve for `i_X alpha = 0`.
pub struct KernelSolve {
    pub unknowns: usize,
    pub expected_nullity: usize,
    pub nullity: usize,
    /// First nonzero residual `X - (X^a D_a + Xb_a Db^a)` over the solution
    /// basis, rendered; `None` when every solution lies in the span.
    pub residual_witness: Option<String>,
}

impl KernelSolve {
    pub fn passed(&self) -> bool {
        self.nullity == self.expected_nullity && self.residual_witness.is_none()
    }
}

/// Solve `i_X alpha = 0` over the bounded ansatz and test that the solution
/// module is exactly the span of the covariant derivatives.
pub fn kernel_completeness(frame: &SusyFrame, x_deg: u32) -> KernelSolve {
    let ansatz = BoundedAnsatz::new(frame, x_deg);
    let mut rows = BTreeMap::new();
    ansatz.accumulate_rows(frame, frame.alpha(), None, 0, None, &mut rows);
    let reduction = reduce(ansatz.unknowns(), rows.into_values());

    // Free coefficient functions: one per theta-type slot and monomial.
    let expected_nullity = 4 * ansatz.mono_count();
    let nullity = reduction.nullity();

    let mut residual_witness = None;
    for vector in reduction.nullspace_basis() {
        let field = ansatz.field_from_solution(frame, &vector);
        let (_, x_p) = frame.decompose(&field).expect("field lives on the frame chart");
        if !x_p.is_zero() {
            residual_witness = Some(x_p.to_string());
            break;
        }
    }
    KernelSolve {
        unknowns: ansatz.unknowns(),
        expected_nullity,
        nullity,
        residual_witness,
    }
}

/// Outcome of the bounded Reeb solve for one space-time direction.
pub struct ReebSolve {
    pub solution_dimension: usize,
    pub field: Option<crate::calculus::VectorField>,
}

/// Solve `i_P alpha = c * (d/dx^mu picker)`, `i_P(d alpha) = 0` over the
/// x-degree <= 1 ansatz with a slack scalar c. The homogeneous solution
/// space should be exactly one-dimensional, spanned by (P = d/dx^mu, c = 1).
pub fn reeb_solve(frame: &SusyFrame, mu: usize) -> ReebSolve {
    let ansatz = BoundedAnsatz::new(frame, 1);
    let slack = ansatz.unknowns();

    let chart = frame.chart();
    let mut picker_comps = BTreeMap::new();
    picker_comps.insert(frame.x_ids()[mu], chart.one());
    let picker = VectorValuedForm::from_components(chart, picker_comps).expect("x leg");

    let d_alpha = crate::calculus::exterior_derivative(frame.alpha());

    let mut rows = BTreeMap::new();
    ansatz.accumulate_rows(frame, frame.alpha(), Some(&picker), 0, Some(slack), &mut rows);
    ansatz.accumulate_rows(frame, &d_alpha, None, 1, None, &mut rows);
    let reduction: Reduction = reduce(slack + 1, rows.into_values());

    let basis = reduction.nullspace_basis();
    let field = basis.iter().find_map(|v| {
        let c = v.get(&slack)?;
        if c.is_zero() {
            return None;
        }
        let cinv = c.inv();
        let scaled: BTreeMap<usize, GaussianRational> = v
            .iter()
            .map(|(k, val)| (*k, val * &cinv))
            .collect();
        Some(ansatz.field_from_solution(frame, &scaled))
    });
    ReebSolve {
        solution_dimension: basis.len(),
        field,
    }
}
