//! The polynomial-side answers (chains, roots, membership) against exact
//! enumeration inside E^n.

mod common;

use common::*;
use frobkit::epsilon::{TruncationWindow, WindowedModule};
use frobkit::splitcompat::{is_compatible, is_compatible_direct, is_compatible_windowed, splitting_injectivity};
use frobkit::thetamod::DEFAULT_CHAIN_CAP;
use frobkit::PolyMatrix;

fn windowed_ann(c: &PolyMatrix, s: u32) -> WindowedModule {
    let zero = PolyMatrix::zeros(c.ring(), c.rows(), c.rows());
    WindowedModule::new(c, &zero, TruncationWindow::new(s).unwrap()).unwrap()
}

#[test]
fn presentations_agree_with_oracle() {
    let mut rng = rng(31);
    let mut nilpotent = 0;
    let mut reduced = 0;
    for case in 0..30 {
        let p = [2, 3][case % 2];
        let pres = if case % 4 == 3 {
            random_reduced_presentation(&mut rng, p)
        } else {
            random_presentation(&mut rng, p)
        };
        let order = pres.nilpotency_order(DEFAULT_CHAIN_CAP).unwrap();
        let no_nil = pres.has_no_nilpotents().unwrap();
        let nil = pres.nil_part(DEFAULT_CHAIN_CAP).unwrap();
        let stable = pres.stable_part(DEFAULT_CHAIN_CAP).unwrap();
        nilpotent += order.is_some() as usize;
        reduced += no_nil as usize;
        for s in [3, 4] {
            let m = WindowedModule::new(pres.a(), pres.b(), TruncationWindow::new(s).unwrap()).unwrap();
            assert!(m.window_is_exhaustive().unwrap());
            assert_eq!(m.nilpotency(DEFAULT_CHAIN_CAP + 2).unwrap(), order, "case {case} s={s}");
            assert_eq!(m.theta_is_injective().unwrap(), no_nil, "case {case} s={s}");
            assert_eq!(windowed_ann(&nil, s).subspace(), m.nil_space().unwrap(), "case {case} s={s}");
            assert_eq!(windowed_ann(&stable, s).subspace(), m.stable_space().unwrap(), "case {case} s={s}");
            assert_eq!(
                m.reduced_then_stable_dim().unwrap(),
                m.stable_then_reduced_dim().unwrap(),
                "case {case} s={s}"
            );
        }
    }
    assert!(nilpotent > 0 && nilpotent < 30, "nilpotent: {nilpotent}");
    assert!(reduced > 0 && reduced < 30, "reduced: {reduced}");
}

#[test]
fn compatibility_routes_agree() {
    let mut rng = rng(32);
    let window = TruncationWindow::new(3).unwrap();
    let mut compatible = 0;
    for case in 0..100 {
        let (s, v) = random_compatibility_instance(&mut rng, case);
        let a = is_compatible(&s, &v).unwrap();
        assert_eq!(a, is_compatible_direct(&s, &v).unwrap(), "case {case}");
        assert_eq!(a, is_compatible_windowed(&s, &v, window).unwrap(), "case {case}");
        compatible += a as usize;
    }
    assert!((20..=80).contains(&compatible), "compatible: {compatible}");
}

#[test]
fn injectivity_agrees_with_window_kernel() {
    let mut rng = rng(33);
    for case in 0..40 {
        let (s, _) = random_compatibility_instance(&mut rng, case);
        let oracle = frobkit::epsilon::oracle_theta_injective(s.matrix(), TruncationWindow::new(2).unwrap()).unwrap();
        assert_eq!(splitting_injectivity(&s).unwrap(), oracle, "case {case}");
    }
}
