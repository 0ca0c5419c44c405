//! Non-degeneracy of vector-valued forms by the body-rank criterion.
//!
//! A matrix over the Grassmann ring is invertible exactly when its body
//! (all odd generators set to zero) is. Contracting a form against a basis
//! of fields gives a matrix over the base function ring, indexed by
//! (fiber monomial, vector leg) columns; full body row rank over the
//! function field decides non-degeneracy. Elimination is fraction-free, so
//! strictly positive factors such as e^{k l} or powers of an invertible
//! coordinate never need to be divided out.

use super::chart::Chart;
use super::field::VectorField;
use super::form::{interior_product, VectorValuedForm};
use crate::algebra::{GenId, Monomial, SuperPoly};
use crate::error::CalculusError;
use std::collections::BTreeMap;

/// Write `m = sign * rest * fiber`, separating fiber generators out to the
/// right. The sign is the Koszul sign of the unshuffle.
pub fn split_fiber(m: &Monomial, is_fiber: impl Fn(GenId) -> bool) -> (Monomial, Monomial, i32) {
    let mut fiber = Monomial::one();
    let mut rest = Monomial::one();
    for (g, e) in &m.even {
        if is_fiber(*g) {
            fiber.even.push((*g, *e));
        } else {
            rest.even.push((*g, *e));
        }
    }
    for atom in &m.exp {
        if is_fiber(atom.base) {
            fiber.exp.push(atom.clone());
        } else {
            rest.exp.push(atom.clone());
        }
    }
    let mut swaps = 0usize;
    let mut fibers_seen = 0usize;
    for g in &m.odd {
        if is_fiber(*g) {
            fiber.odd.push(*g);
            fibers_seen += 1;
        } else {
            rest.odd.push(*g);
            swaps += fibers_seen;
        }
    }
    let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
    (fiber, rest, sign)
}

/// The contraction matrix of a form against a basis of fields: one row per
/// basis field, one column per (fiber monomial, vector leg) pair that
/// occurs, entries in the base function ring.
pub struct ContractionMatrix {
    pub columns: Vec<(Monomial, GenId)>,
    pub rows: Vec<Vec<SuperPoly>>,
}

pub fn contraction_matrix(
    omega: &VectorValuedForm,
    basis: &[VectorField],
) -> Result<ContractionMatrix, CalculusError> {
    let chart = omega.chart().clone();
    let mut col_index: BTreeMap<(Monomial, GenId), usize> = BTreeMap::new();
    let mut raw_rows: Vec<BTreeMap<usize, SuperPoly>> = Vec::with_capacity(basis.len());

    for field in basis {
        let contracted = interior_product(field, omega)?;
        let mut row: BTreeMap<usize, SuperPoly> = BTreeMap::new();
        for (leg, comp) in contracted.components() {
            for (mono, coeff) in comp.terms() {
                let (fiber, rest, sign) = split_fiber(mono, |g| chart.is_fiber(g));
                let next = col_index.len();
                let col = *col_index.entry((fiber, *leg)).or_insert(next);
                let mut c = coeff.clone();
                if sign < 0 {
                    c = -c;
                }
                let piece = SuperPoly::from_term(chart.context(), rest, c);
                let entry = row.entry(col).or_insert_with(|| chart.zero());
                *entry = &*entry + &piece;
            }
        }
        raw_rows.push(row);
    }

    let mut columns: Vec<(Monomial, GenId)> = col_index.keys().cloned().collect();
    // col_index values give positions; re-emit columns in insertion order.
    columns.sort_by_key(|k| col_index[k]);
    let width = columns.len();
    let rows = raw_rows
        .into_iter()
        .map(|sparse| {
            let mut dense = vec![chart.zero(); width];
            for (c, p) in sparse {
                dense[c] = p;
            }
            dense
        })
        .collect();
    Ok(ContractionMatrix { columns, rows })
}

/// Row rank over the function field by fraction-free elimination, with a
/// left-kernel witness when the rows are dependent. The witness is the
/// first kernel combination found in column order, expressed in the given
/// row order.
pub struct RankOutcome {
    pub rank: usize,
    pub witness: Option<Vec<SuperPoly>>,
}

pub fn body_row_rank(chart: &Chart, matrix: &ContractionMatrix) -> RankOutcome {
    let n = matrix.rows.len();
    let width = matrix.columns.len();
    let mut rows: Vec<Vec<SuperPoly>> = matrix
        .rows
        .iter()
        .map(|r| r.iter().map(|e| e.body()).collect())
        .collect();
    let mut aug: Vec<Vec<SuperPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { chart.one() } else { chart.zero() })
                .collect()
        })
        .collect();

    let mut r = 0usize;
    for col in 0..width {
        let Some(p) = (r..n).find(|&p| !rows[p][col].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        aug.swap(p, r);
        for q in r + 1..n {
            if rows[q][col].is_zero() {
                continue;
            }
            let f_pivot = rows[r][col].clone();
            let f_row = rows[q][col].clone();
            for c in 0..width {
                rows[q][c] = &(&f_pivot * &rows[q][c]) - &(&f_row * &rows[r][c]);
            }
            for c in 0..n {
                aug[q][c] = &(&f_pivot * &aug[q][c]) - &(&f_row * &aug[r][c]);
            }
        }
        r += 1;
        if r == n {
            break;
        }
    }

    let witness = if r < n { Some(aug[r].clone()) } else { None };
    RankOutcome { rank: r, witness }
}

/// Decide `i_X Omega = 0 => X = 0` on the span of `basis` by the body-rank
/// criterion. On failure the witness lists coefficients of a nonzero
/// combination of the basis fields annihilating the form.
pub fn nondegeneracy_check(
    omega: &VectorValuedForm,
    basis: &[VectorField],
) -> Result<(bool, Option<Vec<SuperPoly>>), CalculusError> {
    let matrix = contraction_matrix(omega, basis)?;
    let outcome = body_row_rank(omega.chart(), &matrix);
    Ok((outcome.rank == basis.len(), outcome.witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Parity;
    use crate::calculus::form::exterior_derivative;
    use crate::rational::GaussianRational;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn contact3() -> (Chart, VectorValuedForm) {
        let ch = Chart::builder()
            .base("x", Parity::Even)
            .base("y", Parity::Even)
            .base("z", Parity::Even)
            .build()
            .unwrap();
        let alpha = &ch.gen_named("dz").unwrap()
            + &(&ch.gen_named("x").unwrap() * &ch.gen_named("dy").unwrap());
        let mut comps = BTreeMap::new();
        comps.insert(ch.lookup("z").unwrap(), alpha);
        let form = VectorValuedForm::from_components(&ch, comps).unwrap();
        (ch, form)
    }

    #[test]
    fn classical_contact_nondegeneracy() {
        let (ch, alpha) = contact3();
        let d_alpha = exterior_derivative(&alpha);
        let dx = VectorField::frame(&ch, ch.lookup("x").unwrap()).unwrap();
        let dy = VectorField::frame(&ch, ch.lookup("y").unwrap()).unwrap();
        let (ok, _) = nondegeneracy_check(&d_alpha, &[dx.clone(), dy]).unwrap();
        assert!(ok);
        // alpha itself annihilates d/dx: rank deficient with witness e_1.
        let (ok, witness) = nondegeneracy_check(&alpha, &[dx]).unwrap();
        assert!(!ok);
        let w = witness.unwrap();
        assert!(!w[0].is_zero());
    }

    #[test]
    fn zero_form_is_degenerate() {
        let (ch, _) = contact3();
        let zero = VectorValuedForm::zero(&ch);
        let dx = VectorField::frame(&ch, ch.lookup("x").unwrap()).unwrap();
        let (ok, witness) = nondegeneracy_check(&zero, &[dx]).unwrap();
        assert!(!ok);
        assert!(witness.is_some());
    }

    #[test]
    fn split_fiber_signs() {
        // On a chart with one odd base th (fiber dth even) and one even base
        // x (fiber dx odd): th * dx = -(dx) * (th) when unshuffled.
        let ch = Chart::builder()
            .base("x", Parity::Even)
            .base("th", Parity::Odd)
            .build()
            .unwrap();
        let th = ch.gen_named("th").unwrap();
        let dx = ch.gen_named("dx").unwrap();
        let prod = &th * &dx;
        let (mono, coeff) = prod.terms().next().unwrap();
        let (fiber, rest, sign) = split_fiber(mono, |g| ch.is_fiber(g));
        // m = sign * rest * fiber: th dx = sign * th * dx with sign +1 here
        // because rest (th) already precedes fiber (dx) in canonical order.
        assert_eq!(sign, 1);
        assert_eq!(rest.odd.len(), 1);
        assert_eq!(fiber.odd.len(), 1);
        assert_eq!(coeff, &GaussianRational::one());
    }

    // Body-rank soundness: a square Grassmann matrix is invertible iff its
    // body is. The independent oracle inverts explicitly through the
    // terminating nilpotent series M^{-1} = (sum_k (-B^{-1} N)^k) B^{-1}.
    #[test]
    fn body_rank_matches_series_inversion_oracle() {
        let ch = Chart::builder()
            .base("a", Parity::Odd)
            .base("b", Parity::Odd)
            .base("c", Parity::Odd)
            .base("e", Parity::Odd)
            .build()
            .unwrap();
        let odd: Vec<SuperPoly> = ["a", "b", "c", "e"]
            .iter()
            .map(|n| ch.gen_named(n).unwrap())
            .collect();
        let mut rng = StdRng::seed_from_u64(0x5eed);

        for _ in 0..40 {
            // Random 3x3: constant body + soul built from products of two
            // odd generators (even parity, nilpotent).
            let mut m = vec![vec![ch.zero(); 3]; 3];
            let mut body = vec![vec![GaussianRational::zero(); 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    let b = GaussianRational::from_int(rng.random_range(-2..3));
                    body[i][j] = b.clone();
                    let mut entry = ch.scalar(b);
                    if rng.random_bool(0.7) {
                        let p = rng.random_range(0..4);
                        let q = rng.random_range(0..4);
                        let soul = (&odd[p] * &odd[q])
                            .scale(&GaussianRational::from_int(rng.random_range(-2..3)));
                        entry = &entry + &soul;
                    }
                    m[i][j] = entry;
                }
            }

            let det = det3(&body);
            let full_rank = poly_matrix_row_rank(&ch, &m) == 3;
            assert_eq!(
                full_rank,
                !det.is_zero(),
                "body rank disagrees with body determinant"
            );
            if !det.is_zero() {
                let inv = series_inverse(&ch, &m, &body, &det);
                let prod = matmul(&ch, &m, &inv);
                for (i, row) in prod.iter().enumerate() {
                    for (j, e) in row.iter().enumerate() {
                        let expect = if i == j { ch.one() } else { ch.zero() };
                        assert_eq!(*e, expect, "series inverse fails at ({i},{j})");
                    }
                }
            }
        }
    }

    fn poly_matrix_row_rank(ch: &Chart, m: &[Vec<SuperPoly>]) -> usize {
        let matrix = ContractionMatrix {
            columns: (0..m[0].len())
                .map(|j| (crate::algebra::Monomial::even_gen(GenId(j as u32), 1), GenId(0)))
                .collect(),
            rows: m.to_vec(),
        };
        body_row_rank(ch, &matrix).rank
    }

    fn det3(b: &[Vec<GaussianRational>]) -> GaussianRational {
        let t1 = &b[0][0] * &(&(&b[1][1] * &b[2][2]) - &(&b[1][2] * &b[2][1]));
        let t2 = &b[0][1] * &(&(&b[1][0] * &b[2][2]) - &(&b[1][2] * &b[2][0]));
        let t3 = &b[0][2] * &(&(&b[1][0] * &b[2][1]) - &(&b[1][1] * &b[2][0]));
        &(&t1 - &t2) + &t3
    }

    fn inv3(b: &[Vec<GaussianRational>], det: &GaussianRational) -> Vec<Vec<GaussianRational>> {
        let minor = |r0: usize, c0: usize, r1: usize, c1: usize| {
            &(&b[r0][c0] * &b[r1][c1]) - &(&b[r0][c1] * &b[r1][c0])
        };
        let cof = vec![
            vec![minor(1, 1, 2, 2), -&minor(0, 1, 2, 2), minor(0, 1, 1, 2)],
            vec![-&minor(1, 0, 2, 2), minor(0, 0, 2, 2), -&minor(0, 0, 1, 2)],
            vec![minor(1, 0, 2, 1), -&minor(0, 0, 2, 1), minor(0, 0, 1, 1)],
        ];
        let dinv = det.inv();
        cof.into_iter()
            .map(|row| row.into_iter().map(|c| &c * &dinv).collect())
            .collect()
    }

    fn matmul(ch: &Chart, a: &[Vec<SuperPoly>], b: &[Vec<SuperPoly>]) -> Vec<Vec<SuperPoly>> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = ch.zero();
                        for (k, bk) in b.iter().enumerate() {
                            acc = &acc + &(&a[i][k] * &bk[j]);
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    fn series_inverse(
        ch: &Chart,
        m: &[Vec<SuperPoly>],
        body: &[Vec<GaussianRational>],
        det: &GaussianRational,
    ) -> Vec<Vec<SuperPoly>> {
        let n = m.len();
        let binv_scalar = inv3(body, det);
        let binv: Vec<Vec<SuperPoly>> = binv_scalar
            .iter()
            .map(|row| row.iter().map(|c| ch.scalar(c.clone())).collect())
            .collect();
        // N = M - B.
        let nmat: Vec<Vec<SuperPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| &m[i][j] - &ch.scalar(body[i][j].clone()))
                    .collect()
            })
            .collect();
        // X = -B^{-1} N; inverse = (I + X + X^2 + ...) B^{-1}.
        let x: Vec<Vec<SuperPoly>> = matmul(ch, &binv, &nmat)
            .into_iter()
            .map(|row| row.into_iter().map(|e| -&e).collect())
            .collect();
        let mut series: Vec<Vec<SuperPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { ch.one() } else { ch.zero() })
                    .collect()
            })
            .collect();
        let mut power = x.clone();
        loop {
            if power.iter().all(|row| row.iter().all(|e| e.is_zero())) {
                break;
            }
            for i in 0..n {
                for j in 0..n {
                    series[i][j] = &series[i][j] + &power[i][j];
                }
            }
            power = matmul(ch, &power, &x);
        }
        matmul(ch, &series, &binv)
    }
}
