//! The symmetry maps: SUSY shifts, translations, R-phases and rational
//! Lorentz/spinor pairs, all with closed-form inverses.

use super::model::SusyFrame;
use super::sigma::{mat_dagger, mat_mul};
use crate::algebra::SuperPoly;
use crate::calculus::SuperMap;
use crate::error::CalculusError;
use crate::rational::GaussianRational;

/// The SUSY transformation with formal odd parameters eps, epsb:
///
///   x^mu  -> x^mu + i(eps^a (sigma^mu)_a^b thb_b - th^a (sigma^mu)_a^b epsb_b)
///   th^a  -> th^a + eps^a
///   thb_a -> thb_a + epsb_a
///
/// The inverse is the same map with (-eps, -epsb).
pub fn susy_map(frame: &SusyFrame) -> SuperMap {
    let dir = |sign: i64| susy_shift(frame, sign);
    SuperMap::new(
        frame.chart(),
        frame.chart(),
        dir(1),
        dir(-1),
    )
    .expect("SUSY shift inverts by negating the parameters")
}

fn susy_shift(frame: &SusyFrame, sign: i64) -> std::collections::BTreeMap<crate::algebra::GenId, SuperPoly> {
    let ch = frame.chart();
    let s = GaussianRational::from_int(sign);
    let eps = [ch.gen_named("eps1").unwrap(), ch.gen_named("eps2").unwrap()];
    let epsb = [ch.gen_named("epsb1").unwrap(), ch.gen_named("epsb2").unwrap()];
    let mut fwd = std::collections::BTreeMap::new();
    for (mu, xid) in frame.x_ids().iter().enumerate() {
        let mut shift = ch.zero();
        for a in 0..2 {
            for b in 0..2 {
                let c = &GaussianRational::i() * frame.sigma().entry(mu, a, b);
                let thb_b = ch.gen(frame.thb_ids()[b]);
                let th_a = ch.gen(frame.th_ids()[a]);
                shift = &shift + &(&eps[a] * &thb_b).scale(&c);
                shift = &shift - &(&th_a * &epsb[b]).scale(&c);
            }
        }
        fwd.insert(*xid, &ch.gen(*xid) + &shift.scale(&s));
    }
    for a in 0..2 {
        fwd.insert(
            frame.th_ids()[a],
            &ch.gen(frame.th_ids()[a]) + &eps[a].scale(&s),
        );
        fwd.insert(
            frame.thb_ids()[a],
            &ch.gen(frame.thb_ids()[a]) + &epsb[a].scale(&s),
        );
    }
    fwd
}

/// Pure translation x^mu -> x^mu + a^mu with formal even parameters.
pub fn translation_map(frame: &SusyFrame) -> SuperMap {
    let ch = frame.chart();
    let a = ["a0", "a1", "a2", "a3"].map(|n| ch.gen_named(n).unwrap());
    let fwd = frame
        .x_ids()
        .iter()
        .zip(&a)
        .map(|(xid, sh)| (*xid, &ch.gen(*xid) + sh));
    let inv = frame
        .x_ids()
        .iter()
        .zip(&a)
        .map(|(xid, sh)| (*xid, &ch.gen(*xid) - sh));
    SuperMap::endomorphism(ch, fwd, inv).expect("translations invert by negating the shift")
}

/// R-transformation th -> u th, thb -> u^{-1} thb with the formal unit u
/// standing for the phase e^{i beta}.
pub fn r_phase_map(frame: &SusyFrame) -> SuperMap {
    let ch = frame.chart();
    let u = ch.gen_named("u").unwrap();
    let u_inv = u.pow(-1).expect("u is declared invertible");
    let mut fwd = Vec::new();
    let mut inv = Vec::new();
    for a in 0..2 {
        let th = ch.gen(frame.th_ids()[a]);
        let thb = ch.gen(frame.thb_ids()[a]);
        fwd.push((frame.th_ids()[a], &u * &th));
        fwd.push((frame.thb_ids()[a], &u_inv * &thb));
        inv.push((frame.th_ids()[a], &u_inv * &th));
        inv.push((frame.thb_ids()[a], &u * &thb));
    }
    SuperMap::endomorphism(ch, fwd, inv).expect("phases invert by swapping u and u^{-1}")
}

/// A Lorentz transformation paired with its spinor representative:
///
///   x'^mu  = x^nu Lambda_nu^mu,
///   th'^a  = th^b S_b^a,
///   thb'_a = (S^dagger)_a^b thb_b,
///
/// accepted only when S sigma^mu S^dagger = (sigma^nu) Lambda_nu^mu, the
/// relation that makes the th-sigma-dthb block of the polycontact form
/// transform like the x block. The dagger transposes and sends i -> -i on
/// the matrix entries.
pub fn lorentz_map(
    frame: &SusyFrame,
    lambda: &[[GaussianRational; 4]; 4],
    spinor: &[[GaussianRational; 2]; 2],
) -> Result<SuperMap, CalculusError> {
    check_intertwining(frame, lambda, spinor)?;
    let lambda_inv = invert4(lambda).ok_or_else(|| CalculusError::Intertwining {
        residual: "Lambda is singular".to_string(),
    })?;
    let spinor_inv = invert2(spinor).ok_or_else(|| CalculusError::Intertwining {
        residual: "spinor matrix is singular".to_string(),
    })?;

    let ch = frame.chart();
    let sdag = mat_dagger(spinor);
    let sdag_inv = mat_dagger(&spinor_inv);

    let linear4 = |m: &[[GaussianRational; 4]; 4]| -> Vec<_> {
        frame
            .x_ids()
            .iter()
            .enumerate()
            .map(|(mu, xid)| {
                let mut img = ch.zero();
                for nu in 0..4 {
                    img = &img + &ch.gen(frame.x_ids()[nu]).scale(&m[nu][mu]);
                }
                (*xid, img)
            })
            .collect()
    };
    // th'^a = th^b S_b^a.
    let spin_th = |m: &[[GaussianRational; 2]; 2]| -> Vec<_> {
        frame
            .th_ids()
            .iter()
            .enumerate()
            .map(|(a, id)| {
                let mut img = ch.zero();
                for b in 0..2 {
                    img = &img + &ch.gen(frame.th_ids()[b]).scale(&m[b][a]);
                }
                (*id, img)
            })
            .collect()
    };
    // thb'_a = T_a^b thb_b.
    let spin_thb = |m: &[[GaussianRational; 2]; 2]| -> Vec<_> {
        frame
            .thb_ids()
            .iter()
            .enumerate()
            .map(|(a, id)| {
                let mut img = ch.zero();
                for b in 0..2 {
                    img = &img + &ch.gen(frame.thb_ids()[b]).scale(&m[a][b]);
                }
                (*id, img)
            })
            .collect()
    };

    let mut fwd = linear4(lambda);
    fwd.extend(spin_th(spinor));
    fwd.extend(spin_thb(&sdag));
    let mut inv = linear4(&lambda_inv);
    inv.extend(spin_th(&spinor_inv));
    inv.extend(spin_thb(&sdag_inv));
    SuperMap::endomorphism(ch, fwd, inv)
}

/// S sigma^mu S^dagger = sigma^nu Lambda_nu^mu, entrywise.
fn check_intertwining(
    frame: &SusyFrame,
    lambda: &[[GaussianRational; 4]; 4],
    spinor: &[[GaussianRational; 2]; 2],
) -> Result<(), CalculusError> {
    let sdag = mat_dagger(spinor);
    let mut residuals = Vec::new();
    for mu in 0..4 {
        let lhs = mat_mul(&mat_mul(spinor, frame.sigma().matrix(mu)), &sdag);
        for r in 0..2 {
            for c in 0..2 {
                let mut rhs = GaussianRational::zero();
                for nu in 0..4 {
                    rhs += &(&lambda[nu][mu] * frame.sigma().entry(nu, r, c));
                }
                let diff = &lhs[r][c] - &rhs;
                if !diff.is_zero() {
                    residuals.push(format!("mu={mu} entry({r},{c}): {diff}"));
                }
            }
        }
    }
    if residuals.is_empty() {
        Ok(())
    } else {
        Err(CalculusError::Intertwining {
            residual: residuals.join("; "),
        })
    }
}

/// The shipped rational z-boost: cosh = 17/8, sinh = 15/8 in the (x0, x3)
/// plane, with spinor representative diag(2, 1/2).
pub fn boost_z_17_8() -> ([[GaussianRational; 4]; 4], [[GaussianRational; 2]; 2]) {
    let zero = GaussianRational::zero;
    let one = GaussianRational::one;
    let ch = || GaussianRational::ratio(17, 8);
    let sh = || GaussianRational::ratio(15, 8);
    let lambda = [
        [ch(), zero(), zero(), sh()],
        [zero(), one(), zero(), zero()],
        [zero(), zero(), one(), zero()],
        [sh(), zero(), zero(), ch()],
    ];
    let spinor = [
        [GaussianRational::from_int(2), zero()],
        [zero(), GaussianRational::ratio(1, 2)],
    ];
    (lambda, spinor)
}

fn invert2(m: &[[GaussianRational; 2]; 2]) -> Option<[[GaussianRational; 2]; 2]> {
    let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
    if det.is_zero() {
        return None;
    }
    let d = det.inv();
    Some([
        [&m[1][1] * &d, &(-&m[0][1]) * &d],
        [&(-&m[1][0]) * &d, &m[0][0] * &d],
    ])
}

fn invert4(m: &[[GaussianRational; 4]; 4]) -> Option<[[GaussianRational; 4]; 4]> {
    // Gauss-Jordan over Q(i).
    let mut a: Vec<Vec<GaussianRational>> = m.iter().map(|r| r.to_vec()).collect();
    let mut inv: Vec<Vec<GaussianRational>> = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    if i == j {
                        GaussianRational::one()
                    } else {
                        GaussianRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..4 {
        let pivot = (col..4).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].inv();
        for j in 0..4 {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..4 {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..4 {
                a[r][j] = &a[r][j] - &(&f * &a[col][j]);
                inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
            }
        }
    }
    let mut out = std::array::from_fn(|_| std::array::from_fn(|_| GaussianRational::zero()));
    for (i, row) in inv.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            out[i][j] = v;
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GenId;
    use crate::calculus::VectorValuedForm;
    use std::collections::BTreeMap;

    #[test]
    fn susy_map_moves_th_by_eps() {
        let f = SusyFrame::new();
        let m = susy_map(&f);
        let th1 = f.th_ids()[0];
        let expect = &f.chart().gen(th1) + &f.chart().gen_named("eps1").unwrap();
        assert_eq!(m.forward_image(th1), &expect);
    }

    #[test]
    fn susy_induced_fiber_law() {
        // dx'^mu = dx^mu - i(dth^a sigma^mu epsb + eps sigma^mu dthb).
        let f = SusyFrame::new();
        let ch = f.chart();
        let m = susy_map(&f);
        for (mu, xid) in f.x_ids().iter().enumerate() {
            let dx = ch.gen(ch.fiber_of(*xid).unwrap());
            let got = m.pullback_scalar(&dx).unwrap();
            let mut expect = dx;
            for a in 0..2 {
                for b in 0..2 {
                    let c = &GaussianRational::imag_int(-1) * f.sigma().entry(mu, a, b);
                    let dth = ch.gen(ch.fiber_of(f.th_ids()[a]).unwrap());
                    let epsb = ch.gen_named(&format!("epsb{}", b + 1)).unwrap();
                    let eps = ch.gen_named(&format!("eps{}", a + 1)).unwrap();
                    let dthb = ch.gen(ch.fiber_of(f.thb_ids()[b]).unwrap());
                    expect = &expect + &(&dth * &epsb).scale(&c);
                    expect = &expect + &(&eps * &dthb).scale(&c);
                }
            }
            assert_eq!(got, expect, "mu = {mu}");
        }
        // The odd differentials are inert: d(th + eps) = dth.
        for a in 0..2 {
            let dth = ch.gen(ch.fiber_of(f.th_ids()[a]).unwrap());
            assert_eq!(m.pullback_scalar(&dth).unwrap(), dth);
            let dthb = ch.gen(ch.fiber_of(f.thb_ids()[a]).unwrap());
            assert_eq!(m.pullback_scalar(&dthb).unwrap(), dthb);
        }
    }

    #[test]
    fn susy_transforms_frame_fields_as_expected() {
        // d/dth'^a = d/dth^a + i (sigma^mu)_a^b epsb_b d/dx^mu and
        // d/dthb'_a = d/dthb_a + i eps^b (sigma^mu)_b^a d/dx^mu, expressed
        // in unprimed coordinates; d/dx'^mu = d/dx^mu.
        let f = SusyFrame::new();
        let ch = f.chart();
        let m = susy_map(&f);
        for a in 0..2 {
            let mut comps = BTreeMap::new();
            comps.insert(f.th_ids()[a], ch.one());
            let frame_th = VectorValuedForm::from_components(ch, comps).unwrap();
            let got = m.transform_vector_valued(&frame_th).unwrap();
            assert_eq!(got.component(f.th_ids()[a]), ch.one());
            for mu in 0..4 {
                let mut expect = ch.zero();
                for b in 0..2 {
                    let c = &GaussianRational::i() * f.sigma().entry(mu, a, b);
                    expect = &expect + &ch.gen_named(&format!("epsb{}", b + 1)).unwrap().scale(&c);
                }
                assert_eq!(got.component(f.x_ids()[mu]), expect);
            }

            let mut comps = BTreeMap::new();
            comps.insert(f.thb_ids()[a], ch.one());
            let frame_thb = VectorValuedForm::from_components(ch, comps).unwrap();
            let got = m.transform_vector_valued(&frame_thb).unwrap();
            assert_eq!(got.component(f.thb_ids()[a]), ch.one());
            for mu in 0..4 {
                let mut expect = ch.zero();
                for b in 0..2 {
                    let c = &GaussianRational::i() * f.sigma().entry(mu, b, a);
                    expect = &expect + &ch.gen_named(&format!("eps{}", b + 1)).unwrap().scale(&c);
                }
                assert_eq!(got.component(f.x_ids()[mu]), expect);
            }
        }
        for mu in 0..4 {
            let mut comps = BTreeMap::new();
            comps.insert(f.x_ids()[mu], ch.one());
            let frame_x = VectorValuedForm::from_components(ch, comps).unwrap();
            let got = m.transform_vector_valued(&frame_x).unwrap();
            assert_eq!(got, frame_x);
        }
    }

    #[test]
    fn boost_satisfies_intertwining_and_bad_pairs_fail() {
        let f = SusyFrame::new();
        let (lambda, spinor) = boost_z_17_8();
        assert!(lorentz_map(&f, &lambda, &spinor).is_ok());

        // Identity Lambda with the boost spinor violates the relation.
        let mut id4: [[GaussianRational; 4]; 4] =
            std::array::from_fn(|_| std::array::from_fn(|_| GaussianRational::zero()));
        for (mu, row) in id4.iter_mut().enumerate() {
            row[mu] = GaussianRational::one();
        }
        let err = lorentz_map(&f, &id4, &spinor);
        assert!(matches!(err, Err(CalculusError::Intertwining { .. })));
    }

    #[test]
    fn x_only_boost_does_not_preserve_alpha() {
        // A boost acting on x alone (spinors untouched) is a legitimate
        // invertible map, but it moves the th-sigma-dthb block of alpha:
        // invariance genuinely needs the paired spinor action.
        let f = SusyFrame::new();
        let ch = f.chart();
        let (lambda, _) = boost_z_17_8();
        let inv_lambda = {
            let mut m = lambda.clone();
            m[0][3] = -&m[0][3];
            m[3][0] = -&m[3][0];
            m
        };
        let image = |m: &[[GaussianRational; 4]; 4]| {
            f.x_ids()
                .iter()
                .enumerate()
                .map(|(mu, xid)| {
                    let mut img = ch.zero();
                    for nu in 0..4 {
                        img = &img + &ch.gen(f.x_ids()[nu]).scale(&m[nu][mu]);
                    }
                    (*xid, img)
                })
                .collect::<Vec<_>>()
        };
        let map = SuperMap::endomorphism(ch, image(&lambda), image(&inv_lambda)).unwrap();
        let transformed = map.transform_vector_valued(f.alpha()).unwrap();
        assert_ne!(&transformed, f.alpha());
    }

    #[test]
    fn translation_fixes_differentials() {
        let f = SusyFrame::new();
        let m = translation_map(&f);
        let ch = f.chart();
        let dx0 = ch.gen_named("dx0").unwrap();
        assert_eq!(m.pullback_scalar(&dx0).unwrap(), dx0);
    }

    #[test]
    fn r_phase_cancels_in_pairings() {
        let f = SusyFrame::new();
        let ch = f.chart();
        let m = r_phase_map(&f);
        // th^1 dthb_1 is preserved: u u^{-1} = 1.
        let pair = &ch.gen(f.th_ids()[0]) * &ch.gen(ch.fiber_of(f.thb_ids()[0]).unwrap());
        assert_eq!(m.pullback_scalar(&pair).unwrap(), pair);
        // th^1 alone is not.
        let th = ch.gen(f.th_ids()[0]);
        assert_ne!(m.pullback_scalar(&th).unwrap(), th);
    }

    #[test]
    fn lorentz_map_has_exact_inverse() {
        let f = SusyFrame::new();
        let (lambda, spinor) = boost_z_17_8();
        let m = lorentz_map(&f, &lambda, &spinor).unwrap();
        // SuperMap::new has already verified both compositions; spot-check
        // the x0 image anyway.
        let ch = f.chart();
        let x0: GenId = f.x_ids()[0];
        let fwd = m.forward_image(x0).clone();
        let expect = &ch.gen(x0).scale(&GaussianRational::ratio(17, 8))
            + &ch.gen(f.x_ids()[3]).scale(&GaussianRational::ratio(15, 8));
        assert_eq!(fwd, expect);
    }
}
