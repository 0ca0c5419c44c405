//! Randomized calculus-law suite with a fixed seed, runnable as a named
//! check. The same laws are exercised property-style in the test suite;
//! here the cases are deterministic so that repeated CLI invocations emit
//! byte-identical reports.

use crate::algebra::{GenId, Monomial, Parity, SuperPoly};
use crate::calculus::{
    compose, exterior_derivative, graded_commutator, interior_scalar, lie_derivative,
    lie_derivative_via_cartan, Chart, SuperMap, VectorField, VectorValuedForm,
};
use crate::rational::GaussianRational;
use crate::report::{CheckReport, ClaimSet};
use crate::susy::{boost_z_17_8, lorentz_map, r_phase_map, susy_map, translation_map, SusyFrame};
use num::{BigInt, BigRational};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

pub const CASES_PER_LAW: usize = 200;
const SEED: u64 = 0x9e3779b97f4a7c15;

fn random_scalar(rng: &mut ChaCha8Rng) -> GaussianRational {
    GaussianRational::new(
        BigRational::from_integer(BigInt::from(rng.random_range(-3i64..4))),
        BigRational::from_integer(BigInt::from(rng.random_range(-3i64..4))),
    )
}

/// A random polynomial over the chart's generators: a few terms, odd and
/// even factors, optionally fiber coordinates and x-powers.
fn random_poly(chart: &Chart, rng: &mut ChaCha8Rng, with_fiber: bool) -> SuperPoly {
    let mut pool: Vec<GenId> = chart.base_ids().to_vec();
    if with_fiber {
        pool.extend_from_slice(chart.fiber_ids());
    }
    let mut out = chart.zero();
    for _ in 0..rng.random_range(1..4) {
        let mut term = chart.scalar(random_scalar(rng));
        for _ in 0..rng.random_range(0..4) {
            let g = pool[rng.random_range(0..pool.len())];
            term = &term * &chart.gen(g);
            if term.is_zero() {
                break;
            }
        }
        out = &out + &term;
    }
    out
}

fn random_homogeneous(chart: &Chart, rng: &mut ChaCha8Rng, with_fiber: bool) -> SuperPoly {
    let p = random_poly(chart, rng, with_fiber);
    let (e, o) = p.parity_parts();
    let pick_odd = rng.random_bool(0.5);
    let chosen = if pick_odd { o } else { e };
    if chosen.is_zero() {
        // Fall back to a single generator to keep cases non-trivial.
        let g = chart.base_ids()[rng.random_range(0..chart.base_ids().len())];
        chart.gen(g)
    } else {
        chosen
    }
}

fn random_form(chart: &Chart, rng: &mut ChaCha8Rng) -> VectorValuedForm {
    let mut comps = BTreeMap::new();
    for slot in chart.base_ids() {
        if rng.random_bool(0.5) {
            let p = random_poly(chart, rng, true);
            if !p.is_zero() {
                comps.insert(*slot, p);
            }
        }
    }
    VectorValuedForm::from_components(chart, comps).expect("base slots")
}

/// A random homogeneous field. `with_fiber` admits composite derivations
/// with differential-form coefficients.
fn random_homogeneous_field(
    chart: &Chart,
    rng: &mut ChaCha8Rng,
    with_fiber: bool,
) -> VectorField {
    let target = if rng.random_bool(0.5) {
        Parity::Even
    } else {
        Parity::Odd
    };
    let mut comps = BTreeMap::new();
    for slot in chart.base_ids() {
        if rng.random_bool(0.4) {
            continue;
        }
        let p = random_poly(chart, rng, with_fiber);
        let (e, o) = p.parity_parts();
        let want = target + chart.context().parity(*slot);
        let chosen = if want == Parity::Even { e } else { o };
        if !chosen.is_zero() {
            comps.insert(*slot, chosen);
        }
    }
    VectorField::new(chart, comps, target).expect("components filtered to the target parity")
}

/// The independent product oracle: normalize an arbitrary odd-generator
/// word by adjacent transpositions, one sign flip per swap, `None` on a
/// repeated generator.
pub fn naive_odd_normalize(word: &[GenId]) -> Option<(i32, Vec<GenId>)> {
    let mut w = word.to_vec();
    let mut sign = 1i32;
    loop {
        let mut swapped = false;
        for k in 0..w.len().saturating_sub(1) {
            match w[k].cmp(&w[k + 1]) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Greater => {
                    w.swap(k, k + 1);
                    sign = -sign;
                    swapped = true;
                }
                std::cmp::Ordering::Less => {}
            }
        }
        if !swapped {
            return Some((sign, w));
        }
    }
}

/// Run every law with `cases` randomized instances (exhaustive where the
/// law is an enumeration) and fold the outcomes into one report.
pub fn run_calculus_laws(cases: usize) -> CheckReport {
    let mut claims = ClaimSet::new(
        "calculus-laws",
        "ring, derivative, pullback and bracket laws hold on randomized instances",
    );
    let frame = SusyFrame::new();
    let chart = frame.chart().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);

    // d^2 = 0 on scalars and on vector-valued forms.
    let mut failures = 0usize;
    for _ in 0..cases {
        let f = random_poly(&chart, &mut rng, true);
        if !chart.d_scalar(&chart.d_scalar(&f)).is_zero() {
            failures += 1;
        }
        let omega = random_form(&chart, &mut rng);
        if !exterior_derivative(&exterior_derivative(&omega)).is_zero() {
            failures += 1;
        }
    }
    claims.claim_eq("d . d = 0", &failures, &0);

    // Supercommutativity and associativity.
    let mut failures = 0usize;
    for _ in 0..cases {
        let a = random_homogeneous(&chart, &mut rng, true);
        let b = random_homogeneous(&chart, &mut rng, true);
        let ab = &a * &b;
        let ba = &b * &a;
        let sign = a
            .parity()
            .unwrap()
            .koszul_sign(b.parity().unwrap());
        let expected = if sign < 0 { -&ba } else { ba.clone() };
        if ab != expected {
            failures += 1;
        }
        let c = random_poly(&chart, &mut rng, true);
        if &ab * &c != &a * &(&b * &c) {
            failures += 1;
        }
    }
    claims.claim_eq("supercommutativity and associativity", &failures, &0);

    // Nilpotency of every odd generator.
    let mut failures = 0usize;
    for id in chart.context().ids() {
        if chart.context().parity(id).is_odd() {
            let g = chart.gen(id);
            if !(&g * &g).is_zero() {
                failures += 1;
            }
        }
    }
    claims.claim_eq("odd generators square to zero", &failures, &0);

    // Graded Leibniz for left derivatives along odd generators, and
    // anticommutation of distinct odd derivatives.
    let mut failures = 0usize;
    let odd_gens: Vec<GenId> = chart
        .context()
        .ids()
        .filter(|g| chart.context().parity(*g).is_odd())
        .collect();
    for _ in 0..cases {
        let xi = odd_gens[rng.random_range(0..odd_gens.len())];
        let a = random_homogeneous(&chart, &mut rng, true);
        let b = random_poly(&chart, &mut rng, true);
        let lhs = (&a * &b).left_derivative(xi).unwrap();
        let da_b = &a.left_derivative(xi).unwrap() * &b;
        let a_db = &a * &b.left_derivative(xi).unwrap();
        let rhs = if a.parity().unwrap().is_odd() {
            &da_b - &a_db
        } else {
            &da_b + &a_db
        };
        if lhs != rhs {
            failures += 1;
        }

        let eta = odd_gens[rng.random_range(0..odd_gens.len())];
        let d1 = a.left_derivative(xi).unwrap().left_derivative(eta).unwrap();
        let d2 = a.left_derivative(eta).unwrap().left_derivative(xi).unwrap();
        let expect = if xi == eta { d2.clone() } else { -&d2 };
        if xi == eta {
            if !d1.is_zero() {
                failures += 1;
            }
        } else if d1 != expect {
            failures += 1;
        }
    }
    claims.claim_eq("graded Leibniz and odd-derivative anticommutation", &failures, &0);

    // The two Lie-derivative expressions agree.
    let mut failures = 0usize;
    for _ in 0..cases {
        let x = random_homogeneous_field(&chart, &mut rng, false);
        let omega = random_form(&chart, &mut rng);
        let a = lie_derivative(&x, &omega).unwrap();
        let b = lie_derivative_via_cartan(&x, &omega).unwrap();
        if a != b {
            failures += 1;
        }
    }
    claims.claim_eq("the two Lie-derivative expressions agree", &failures, &0);

    // Pullback commutes with d for every constructed map.
    let (lambda, spinor) = boost_z_17_8();
    let maps: Vec<(&str, SuperMap)> = vec![
        ("susy", susy_map(&frame)),
        ("translation", translation_map(&frame)),
        ("r-phase", r_phase_map(&frame)),
        ("lorentz", lorentz_map(&frame, &lambda, &spinor).expect("shipped boost intertwines")),
    ];
    let mut failures = 0usize;
    for case in 0..cases {
        let (_, map) = &maps[case % maps.len()];
        let f = random_poly(&chart, &mut rng, true);
        let lhs = map.pullback_scalar(&chart.d_scalar(&f)).unwrap();
        let rhs = chart.d_scalar(&map.pullback_scalar(&f).unwrap());
        if lhs != rhs {
            failures += 1;
        }
    }
    claims.claim_eq("pullback commutes with d", &failures, &0);

    // Functoriality of pullback under composition.
    let mut composed = Vec::new();
    for (na, a) in &maps {
        for (nb, b) in &maps {
            composed.push((format!("{na} . {nb}"), compose(a, b).unwrap(), a, b));
        }
    }
    let mut failures = 0usize;
    for case in 0..cases {
        let (_, ab, a, b) = &composed[case % composed.len()];
        let f = random_poly(&chart, &mut rng, true);
        let lhs = ab.pullback_scalar(&f).unwrap();
        let rhs = b.pullback_scalar(&a.pullback_scalar(&f).unwrap()).unwrap();
        if lhs != rhs {
            failures += 1;
        }
    }
    claims.claim_eq("pullback is functorial under composition", &failures, &0);

    // Graded antisymmetry and the graded Jacobi identity.
    let mut failures = 0usize;
    for _ in 0..cases {
        let x = random_homogeneous_field(&chart, &mut rng, true);
        let y = random_homogeneous_field(&chart, &mut rng, true);
        let z = random_homogeneous_field(&chart, &mut rng, true);
        let xy = graded_commutator(&x, &y).unwrap();
        let yx = graded_commutator(&y, &x).unwrap();
        let sign = x.parity().unwrap().koszul_sign(y.parity().unwrap());
        let expect = if sign < 0 {
            yx.clone()
        } else {
            yx.scale_form(&chart.scalar(GaussianRational::from_int(-1)))
        };
        if xy != expect {
            failures += 1;
        }
        // [X,[Y,Z]] = [[X,Y],Z] + (-1)^{X~Y~} [Y,[X,Z]].
        let lhs = graded_commutator(&x, &graded_commutator(&y, &z).unwrap()).unwrap();
        let t1 = graded_commutator(&xy, &z).unwrap();
        let t2 = graded_commutator(&y, &graded_commutator(&x, &z).unwrap()).unwrap();
        let t2 = if sign < 0 {
            t2.scale_form(&chart.scalar(GaussianRational::from_int(-1)))
        } else {
            t2
        };
        if lhs != t1.add(&t2).unwrap() {
            failures += 1;
        }
    }
    claims.claim_eq("graded antisymmetry and Jacobi for brackets", &failures, &0);

    // Interior products of fiber-free scalars vanish.
    let mut failures = 0usize;
    for _ in 0..cases / 4 {
        let x = random_homogeneous_field(&chart, &mut rng, false);
        let f = random_poly(&chart, &mut rng, false);
        if !interior_scalar(&x, &f).unwrap().is_zero() {
            failures += 1;
        }
    }
    claims.claim_eq("interior product of fiber-free scalars vanishes", &failures, &0);

    // Exhaustive product-oracle equivalence: all pairs of canonical odd
    // words of degree <= 4 over eight odd generators, checked against the
    // adjacent-transposition normalizer.
    let oracle_chart = {
        let mut b = Chart::builder();
        for k in 0..8 {
            b = b.base(&format!("g{k}"), Parity::Odd);
        }
        b.build().unwrap()
    };
    let ids: Vec<GenId> = oracle_chart.base_ids().to_vec();
    let words = subsets_up_to(&ids, 4);
    let mut failures = 0usize;
    let mut compared = 0usize;
    for w1 in &words {
        for w2 in &words {
            let p1 = word_poly(&oracle_chart, w1);
            let p2 = word_poly(&oracle_chart, w2);
            let prod = &p1 * &p2;
            let mut concat = w1.clone();
            concat.extend_from_slice(w2);
            match naive_odd_normalize(&concat) {
                None => {
                    if !prod.is_zero() {
                        failures += 1;
                    }
                }
                Some((sign, sorted)) => {
                    let mono = Monomial {
                        odd: sorted,
                        ..Monomial::one()
                    };
                    let expect = SuperPoly::from_term(
                        oracle_chart.context(),
                        mono,
                        GaussianRational::from_int(sign as i64),
                    );
                    if prod != expect {
                        failures += 1;
                    }
                }
            }
            compared += 1;
        }
    }
    claims.claim_eq("canonical product agrees with the transposition oracle", &failures, &0);
    claims.claim("oracle enumeration is non-trivial", compared > 20_000);

    claims.into_report()
}

fn word_poly(chart: &Chart, word: &[GenId]) -> SuperPoly {
    let mono = Monomial {
        odd: word.to_vec(),
        ..Monomial::one()
    };
    SuperPoly::from_term(chart.context(), mono, GaussianRational::one())
}

fn subsets_up_to(ids: &[GenId], max_len: usize) -> Vec<Vec<GenId>> {
    let mut out = vec![Vec::new()];
    for id in ids {
        let mut next = Vec::new();
        for w in &out {
            if w.len() < max_len {
                let mut with = w.clone();
                with.push(*id);
                next.push(with);
            }
        }
        out.extend(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laws_pass_with_a_small_budget() {
        let report = run_calculus_laws(25);
        assert!(report.passed(), "witness: {:?}", report.witness);
    }

    #[test]
    fn oracle_normalizer_basics() {
        let g = |n| GenId(n);
        assert_eq!(
            naive_odd_normalize(&[g(1), g(0)]),
            Some((-1, vec![g(0), g(1)]))
        );
        assert_eq!(naive_odd_normalize(&[g(0), g(0)]), None);
        assert_eq!(
            naive_odd_normalize(&[g(2), g(1), g(0)]),
            Some((-1, vec![g(0), g(1), g(2)]))
        );
    }
}
