//! Benchmark fixtures: fixed, deterministic inputs at a few sizes.

use std::sync::Arc;

use frobkit::{MonomialOrder, PolyMatrix, Polynomial, Ring, Submodule, ThetaPresentation};

fn var(r: &Arc<Ring>, i: usize) -> Polynomial {
    Polynomial::var(r, i)
}

/// Cyclic n-roots style ideal in n variables: elementary symmetric sums, last one shifted.
pub fn cyclic_ideal(p: u32, n: usize, order: MonomialOrder) -> Submodule {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let r = Ring::new(p, names, order).unwrap();
    let mut gens = Vec::new();
    for k in 1..n {
        let mut f = Polynomial::zero(&r);
        for i in 0..n {
            let mut t = Polynomial::one(&r);
            for j in 0..k {
                t = &t * &var(&r, (i + j) % n);
            }
            f = &f + &t;
        }
        gens.push(f);
    }
    let mut last = Polynomial::one(&r);
    for i in 0..n {
        last = &last * &var(&r, i);
    }
    gens.push(&last - &Polynomial::one(&r));
    Submodule::ideal(&r, gens).unwrap()
}

/// Diagonal presentation over F_p[x] with components Ann(x^k), k = 1..=alpha,
/// and Theta = x^(k(p-1)) T on the k-th. Theta fixes each x^-k, so it is not
/// nilpotent, but it kills x^-1 on the components with k >= 2.
pub fn diagonal_presentation(p: u32, alpha: usize) -> ThetaPresentation {
    let r = Ring::standard(p, 1).unwrap();
    let x = var(&r, 0);
    let mut a = PolyMatrix::zeros(&r, alpha, alpha);
    let mut b = PolyMatrix::zeros(&r, alpha, alpha);
    for k in 0..alpha {
        a.set(k, k, x.pow(k as u64 + 1));
        b.set(k, k, x.pow((k as u64 + 1) * (p as u64 - 1)));
    }
    ThetaPresentation::new(a, b).unwrap()
}

/// Presentation over F_p[x, y] with M = Ann(x^s, y^s) and
/// Theta = (x y)^t T, t = s(p-1) + 1, which is nilpotent.
pub fn box_presentation(p: u32, s: u32) -> ThetaPresentation {
    let r = Ring::standard(p, 2).unwrap();
    let (x, y) = (var(&r, 0), var(&r, 1));
    let a = PolyMatrix::from_rows(&r, vec![vec![x.pow(s as u64), y.pow(s as u64)]]).unwrap();
    let t = (s as u64) * (p as u64 - 1) + 1;
    let b = PolyMatrix::scalar(&(&x.pow(t) * &y.pow(t)));
    ThetaPresentation::new(a, b).unwrap()
}
