//! Groebner bases for ideals and submodules of free modules, with the
//! membership, intersection, colon, syzygy and preimage computations built on them.

mod buchberger;
mod cache;
mod ideal;
mod modpoly;
mod submodule;

pub use cache::{install_basis_store, BasisStore, RawBasis};
pub use ideal::{colon_ideal, ideal_intersection};
pub use submodule::{preimage, syzygies, GroebnerBasis, Submodule};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MonomialOrder, PolyMatrix, Polynomial, Ring};
    use std::sync::Arc;

    fn ring(p: u32, d: usize) -> (Arc<Ring>, Vec<Polynomial>) {
        let r = Ring::standard(p, d).unwrap();
        let vars = (0..d).map(|i| Polynomial::var(&r, i)).collect();
        (r, vars)
    }

    fn ideal(r: &Arc<Ring>, gens: &[Polynomial]) -> Submodule {
        Submodule::ideal(r, gens.to_vec()).unwrap()
    }

    #[test]
    fn absorption_and_linear_elimination() {
        let (r, v) = ring(2, 1);
        let x = &v[0];
        let gb = ideal(&r, &[x.pow(2), x.pow(3)]).groebner_basis();
        assert_eq!(gb.ideal_generators(), vec![x.pow(2)]);

        let (r, v) = ring(3, 2);
        let (x, y) = (&v[0], &v[1]);
        let gb = ideal(&r, &[x + y, x.clone()]).groebner_basis();
        assert_eq!(gb.ideal_generators(), vec![x.clone(), y.clone()]);
    }

    #[test]
    fn membership_examples() {
        let (r, v) = ring(2, 2);
        let (x, y) = (&v[0], &v[1]);
        let i = ideal(&r, &[x.pow(2)]);
        assert!(i.contains_poly(&x.pow(3)).unwrap());
        assert!(!i.contains_poly(x).unwrap());

        let z = Polynomial::zero(&r);
        let w = Submodule::new(&r, 2, vec![vec![x.pow(2), z.clone()], vec![z.clone(), y.clone()]]).unwrap();
        let target = vec![&x.pow(3) + &(&x.pow(2) * y), z.clone()];
        assert!(w.contains(&target).unwrap());
        let c = w.lift(&target).unwrap().unwrap();
        // x^3 + x^2 y = (x + y) * x^2
        assert_eq!(c[0], x + y);
        assert!(c[1].is_zero());
        assert!(matches!(w.contains(std::slice::from_ref(x)), Err(crate::Error::Shape(_))));
    }

    #[test]
    fn equality_examples() {
        let (r, v) = ring(2, 1);
        let x = &v[0];
        assert!(ideal(&r, &[x.pow(2), x.pow(3)]).equals(&ideal(&r, &[x.pow(2)])).unwrap());
        assert!(!ideal(&r, std::slice::from_ref(x)).equals(&ideal(&r, &[x.pow(2)])).unwrap());
    }

    #[test]
    fn intersection_examples() {
        let (r, v) = ring(3, 2);
        let (x, y) = (&v[0], &v[1]);
        let meet = ideal_intersection(&ideal(&r, std::slice::from_ref(x)), &ideal(&r, std::slice::from_ref(y))).unwrap();
        assert!(meet.equals(&ideal(&r, &[x * y])).unwrap());
        let meet = ideal_intersection(&ideal(&r, &[x.pow(2)]), &ideal(&r, &[x.pow(3)])).unwrap();
        assert!(meet.equals(&ideal(&r, &[x.pow(3)])).unwrap());
        let meet = ideal_intersection(&ideal(&r, &[x.pow(2), x * y]), &ideal(&r, std::slice::from_ref(y))).unwrap();
        assert!(meet.equals(&ideal(&r, &[x * y])).unwrap());
        // module route agrees
        let alt = ideal(&r, &[x.pow(2), x * y]).intersect(&ideal(&r, std::slice::from_ref(y))).unwrap();
        assert!(alt.equals(&meet).unwrap());
    }

    #[test]
    fn colon_examples() {
        let (r, v) = ring(2, 1);
        let x = &v[0];
        let c = colon_ideal(&ideal(&r, &[x.pow(2)]), &ideal(&r, std::slice::from_ref(x))).unwrap();
        assert!(c.equals(&ideal(&r, std::slice::from_ref(x))).unwrap());
        let i = ideal(&r, std::slice::from_ref(x));
        let c = colon_ideal(&i.bracket_power(1).unwrap(), &i).unwrap();
        assert!(c.equals(&ideal(&r, std::slice::from_ref(x))).unwrap());
        let (r2, v2) = ring(3, 2);
        let i = ideal(&r2, &[&v2[0] * &v2[1], v2[1].pow(3) + v2[0].clone()]);
        assert!(colon_ideal(&i, &i).unwrap().is_full());
        assert!(matches!(
            colon_ideal(&i, &Submodule::zero(&r2, 1)),
            Err(crate::Error::Degenerate(_))
        ));
    }

    #[test]
    fn preimage_examples() {
        let (r, v) = ring(2, 1);
        let x = &v[0];
        let pre = preimage(&PolyMatrix::scalar(x), &ideal(&r, &[x.pow(2)])).unwrap();
        assert!(pre.equals(&ideal(&r, std::slice::from_ref(x))).unwrap());
        let pre = preimage(&PolyMatrix::scalar(&x.pow(3)), &ideal(&r, &[x.pow(4)])).unwrap();
        assert!(pre.equals(&ideal(&r, std::slice::from_ref(x))).unwrap());
        let w = Submodule::new(&r, 2, vec![vec![x.clone(), x.pow(2)], vec![Polynomial::zero(&r), x.pow(3) + Polynomial::one(&r)]]).unwrap();
        let pre = preimage(&PolyMatrix::identity(&r, 2), &w).unwrap();
        assert!(pre.equals(&w).unwrap());
    }

    #[test]
    fn lex_basis_is_sound() {
        let r = Ring::new(2, ["y", "x"], MonomialOrder::Lex).unwrap();
        let y = Polynomial::var(&r, 0);
        let x = Polynomial::var(&r, 1);
        let i = ideal(&r, &[&y.pow(2) - &x, x.pow(2)]);
        let gb = i.basis();
        assert!(gb.satisfies_buchberger_criterion());
        assert!(i.contains_poly(&y.pow(4)).unwrap());
        assert!(!i.contains_poly(&y.pow(3)).unwrap());
    }

    #[test]
    fn reduced_basis_ignores_generator_order() {
        let (r, v) = ring(3, 2);
        let (x, y) = (&v[0], &v[1]);
        let a = vec![&x.pow(2) + &(y * x), &y.pow(3) - x, &(x * y) + &Polynomial::one(&r)];
        let mut b = a.clone();
        b.reverse();
        let ga = ideal(&r, &a).groebner_basis();
        let gb = ideal(&r, &b).groebner_basis();
        assert_eq!(ga.generators(), gb.generators());
    }
}
