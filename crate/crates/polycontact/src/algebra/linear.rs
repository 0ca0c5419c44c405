//! Exact sparse linear algebra over Q(i).
//!
//! Incremental reduced row echelon form with sparse rows. Systems produced
//! by the degree-bounded ansatz solves are close to triangular, so rows are
//! inserted one at a time and reduced against the pivots seen so far.

use crate::rational::GaussianRational;
use std::collections::BTreeMap;

/// A sparse row: column index -> nonzero coefficient, plus a right-hand side.
#[derive(Debug, Clone)]
pub struct SparseRow {
    pub coeffs: BTreeMap<usize, GaussianRational>,
    pub rhs: GaussianRational,
}

impl Default for SparseRow {
    fn default() -> Self {
        Self::new()
    }
}

impl SparseRow {
    pub fn new() -> Self {
        SparseRow {
            coeffs: BTreeMap::new(),
            rhs: GaussianRational::zero(),
        }
    }

    pub fn add(&mut self, col: usize, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(col) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn axpy(&mut self, factor: &GaussianRational, other: &SparseRow) {
        // self -= factor * other
        for (col, c) in &other.coeffs {
            self.add(*col, &-&(factor * c));
        }
        self.rhs -= &(factor * &other.rhs);
    }
}

/// Outcome of reducing a system to RREF.
pub struct Reduction {
    n_cols: usize,
    /// pivot column -> fully reduced, normalized row.
    pivots: BTreeMap<usize, SparseRow>,
    /// True when some row reduced to 0 = nonzero.
    pub inconsistent: bool,
}

impl Reduction {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.n_cols - self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.n_cols)
            .filter(|c| !self.pivots.contains_key(c))
            .collect()
    }

    /// Particular solution of the inhomogeneous system (free columns 0).
    pub fn particular_solution(&self) -> Option<BTreeMap<usize, GaussianRational>> {
        if self.inconsistent {
            return None;
        }
        let mut sol = BTreeMap::new();
        for (col, row) in &self.pivots {
            if !row.rhs.is_zero() {
                sol.insert(*col, row.rhs.clone());
            }
        }
        Some(sol)
    }

    /// Basis of the homogeneous solution space, one sparse vector per free
    /// column, in column order.
    pub fn nullspace_basis(&self) -> Vec<BTreeMap<usize, GaussianRational>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = BTreeMap::new();
                v.insert(f, GaussianRational::one());
                for (col, row) in &self.pivots {
                    if let Some(c) = row.coeffs.get(&f) {
                        v.insert(*col, -c);
                    }
                }
                v
            })
            .collect()
    }
}

/// Reduce the given rows over `n_cols` unknowns.
pub fn reduce(n_cols: usize, rows: impl IntoIterator<Item = SparseRow>) -> Reduction {
    let mut red = Reduction {
        n_cols,
        pivots: BTreeMap::new(),
        inconsistent: false,
    };
    for row in rows {
        insert_row(&mut red, row);
    }
    red
}

fn insert_row(red: &mut Reduction, mut row: SparseRow) {
    // Eliminate known pivots in increasing column order. Pivot rows are in
    // RREF, so one pass suffices.
    let pivot_cols: Vec<usize> = red.pivots.keys().copied().collect();
    for pc in pivot_cols {
        if let Some(c) = row.coeffs.get(&pc).cloned() {
            let prow = red.pivots[&pc].clone();
            row.axpy(&c, &prow);
        }
    }
    match row.coeffs.iter().next() {
        None => {
            if !row.rhs.is_zero() {
                red.inconsistent = true;
            }
        }
        Some((&col, c)) => {
            // Normalize so the pivot coefficient is 1.
            let inv = c.inv();
            let mut norm = SparseRow::new();
            for (k, v) in &row.coeffs {
                norm.coeffs.insert(*k, v * &inv);
            }
            norm.rhs = &row.rhs * &inv;
            // Back-substitute into existing pivot rows.
            let cols: Vec<usize> = red.pivots.keys().copied().collect();
            for pc in cols {
                let factor = red.pivots[&pc].coeffs.get(&col).cloned();
                if let Some(f) = factor {
                    let prow = red.pivots.get_mut(&pc).unwrap();
                    let snapshot = norm.clone();
                    prow.axpy(&f, &snapshot);
                }
            }
            red.pivots.insert(col, norm);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(entries: &[(usize, i64)], rhs: i64) -> SparseRow {
        let mut r = SparseRow::new();
        for (c, v) in entries {
            r.add(*c, &GaussianRational::from_int(*v));
        }
        r.rhs = GaussianRational::from_int(rhs);
        r
    }

    #[test]
    fn unique_solution() {
        // x + y = 3, x - y = 1 -> x = 2, y = 1.
        let red = reduce(2, vec![row(&[(0, 1), (1, 1)], 3), row(&[(0, 1), (1, -1)], 1)]);
        assert_eq!(red.rank(), 2);
        assert!(!red.inconsistent);
        let sol = red.particular_solution().unwrap();
        assert_eq!(sol[&0], GaussianRational::from_int(2));
        assert_eq!(sol[&1], GaussianRational::from_int(1));
        assert!(red.nullspace_basis().is_empty());
    }

    #[test]
    fn detects_inconsistency() {
        let red = reduce(1, vec![row(&[(0, 1)], 1), row(&[(0, 1)], 2)]);
        assert!(red.inconsistent);
    }

    #[test]
    fn nullspace_of_rank_deficient_system() {
        // x + y + z = 0 twice: rank 1, nullity 2.
        let rows = vec![row(&[(0, 1), (1, 1), (2, 1)], 0), row(&[(0, 2), (1, 2), (2, 2)], 0)];
        let red = reduce(3, rows);
        assert_eq!(red.rank(), 1);
        assert_eq!(red.nullity(), 2);
        let basis = red.nullspace_basis();
        assert_eq!(basis.len(), 2);
        // Each basis vector satisfies the equation.
        for v in &basis {
            let mut sum = GaussianRational::zero();
            for c in v.values() {
                sum += c;
            }
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn gaussian_coefficients() {
        // i*x = 1 -> x = -i.
        let mut r = SparseRow::new();
        r.add(0, &GaussianRational::i());
        r.rhs = GaussianRational::one();
        let red = reduce(1, vec![r]);
        let sol = red.particular_solution().unwrap();
        assert_eq!(sol[&0], GaussianRational::imag_int(-1));
    }
}
