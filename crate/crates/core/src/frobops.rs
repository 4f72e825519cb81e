//! Frobenius-specific operators: Frobenius roots of submodules, the trace map,
//! and the F_p-linear solver for v w^p - u w ∈ I^[p].

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{colon_ideal, Submodule};
use crate::linalg::{EchelonSpace, FpMatrix};
use crate::poly::{Monomial, Polynomial, Ring};

/// The smallest submodule W' with W ⊆ (W')^[p^e].
///
/// Each generator v is written as v = Σ_a x^a (v_a)^[p] coordinatewise and all
/// the v_a are emitted; this is repeated `e` times. `e = 0` returns W.
pub fn frobenius_root(w: &Submodule, e: u32) -> Result<Submodule> {
    let mut cur = w.clone();
    for _ in 0..e {
        let mut gens: Vec<Vec<Polynomial>> = Vec::new();
        for g in cur.generators() {
            let parts: Vec<BTreeMap<Monomial, Polynomial>> =
                g.iter().map(Polynomial::p_basis_decompose).collect();
            let keys: BTreeSet<&Monomial> = parts.iter().flat_map(|m| m.keys()).collect();
            for a in keys {
                gens.push(
                    parts
                        .iter()
                        .map(|m| m.get(a).cloned().unwrap_or_else(|| Polynomial::zero(w.ring())))
                        .collect(),
                );
            }
        }
        cur = Submodule::new(w.ring(), w.rank(), gens)?.groebner_basis();
    }
    Ok(cur)
}

/// The trace map: the p-basis component of f at a = (p-1, ..., p-1).
/// It satisfies trace(g^p f) = g trace(f) and generates Hom_R(R^{1/p}, R).
pub fn trace(f: &Polynomial) -> Polynomial {
    let ring = f.ring();
    let p = ring.p();
    let quotients: Vec<(Monomial, u32)> = f
        .terms()
        .iter()
        .filter(|(m, _)| m.exps().iter().all(|&e| e % p == p - 1))
        .map(|(m, c)| (m.divmod(p).0, *c))
        .collect();
    Polynomial::from_terms(ring, quotients.iter().map(|(m, c)| (m.exps(), *c as i64)))
}

/// Upper bound on the total degree of the unknown w.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeBound {
    Automatic,
    Explicit(u64),
}

/// The data of the equation v w^p - u w ∈ I^[p], with u ∈ (I^[p] : I) and
/// v ∈ (J^[p] : J) so that Θa = uTa and Θb = vTb are Frobenius structures on
/// Ann_E I and Ann_E J.
#[derive(Debug, Clone)]
pub struct SemilinearProblem {
    u: Polynomial,
    v: Polynomial,
    source: Submodule,
    target: Submodule,
    degree_bound: DegreeBound,
}

fn check_structure_element(r: &Polynomial, ideal: &Submodule, name: &str) -> Result<()> {
    let bracket = ideal.bracket_power(1)?;
    for g in ideal.ideal_generators() {
        if !bracket.contains_poly(&(r * &g))? {
            return Err(Error::InvalidStructure(format!(
                "{name} = {r} does not lie in (I^[p] : I) for I = ({})",
                ideal
                    .ideal_generators()
                    .iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )));
        }
    }
    Ok(())
}

impl SemilinearProblem {
    pub fn new(
        u: Polynomial,
        v: Polynomial,
        source: Submodule,
        target: Submodule,
        degree_bound: DegreeBound,
    ) -> Result<Self> {
        let ring = u.ring().clone();
        for (what, r) in [("v", v.ring()), ("I", source.ring()), ("J", target.ring())] {
            ring.check_same(r)
                .map_err(|e| Error::Config(format!("{what}: {e}")))?;
        }
        if source.rank() != 1 || target.rank() != 1 {
            return Err(Error::Shape("I and J must be ideals".into()));
        }
        check_structure_element(&u, &source, "u")?;
        check_structure_element(&v, &target, "v")?;
        Ok(SemilinearProblem {
            u,
            v,
            source,
            target,
            degree_bound,
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.u.ring()
    }

    pub fn u(&self) -> &Polynomial {
        &self.u
    }

    pub fn v(&self) -> &Polynomial {
        &self.v
    }

    pub fn source(&self) -> &Submodule {
        &self.source
    }

    pub fn target(&self) -> &Submodule {
        &self.target
    }

    /// Resolve the degree bound. The automatic bound comes from comparing top
    /// degrees in v w^p = u w, which needs I = 0 (an exact equation) and is only
    /// offered for J = 0.
    pub fn resolved_degree_bound(&self) -> Result<u64> {
        match self.degree_bound {
            DegreeBound::Explicit(d) => Ok(d),
            DegreeBound::Automatic => {
                if !self.target.is_zero() {
                    return Err(Error::Unsupported(
                        "automatic degree bound requires J = 0; supply a degree bound".into(),
                    ));
                }
                if !self.source.is_zero() {
                    return Err(Error::Unsupported(
                        "automatic degree bound requires I = 0; supply a degree bound".into(),
                    ));
                }
                if self.u.is_zero() && self.v.is_zero() {
                    return Err(Error::Unsupported(
                        "u = v = 0: every w is a solution, no finite degree bound".into(),
                    ));
                }
                let du = self.u.total_degree().unwrap_or(0);
                let dv = self.v.total_degree().unwrap_or(0);
                let p1 = self.ring().p() as u64 - 1;
                Ok(du.saturating_sub(dv).div_ceil(p1))
            }
        }
    }
}

/// All monomials of total degree <= d, in increasing graded order.
pub fn monomials_up_to(nvars: usize, d: u64) -> Vec<Monomial> {
    fn rec(nvars: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() == nvars {
            out.push(Monomial::new(cur));
            return;
        }
        for e in 0..=left {
            cur.push(e as u32);
            rec(nvars, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, d, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.cmp(b)));
    out
}

/// An F_p-subspace of polynomials given by a basis.
#[derive(Debug, Clone)]
pub struct SolutionSpace {
    ring: Arc<Ring>,
    basis: Vec<Polynomial>,
    degree_bound: u64,
}

impl SolutionSpace {
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The number of elements, p^dim.
    pub fn cardinality(&self) -> u128 {
        (self.ring.p() as u128).pow(self.basis.len() as u32)
    }

    /// Solutions are complete up to this total degree.
    pub fn degree_bound(&self) -> u64 {
        self.degree_bound
    }

    /// Every element of the space. The caller should check `cardinality` first.
    pub fn elements(&self) -> Vec<Polynomial> {
        span_elements(&self.ring, &self.basis)
    }
}

fn span_elements(ring: &Arc<Ring>, basis: &[Polynomial]) -> Vec<Polynomial> {
    let p = ring.p() as i64;
    let mut out = vec![Polynomial::zero(ring)];
    for b in basis {
        let mut next = Vec::with_capacity(out.len() * p as usize);
        for w in &out {
            for c in 0..p {
                next.push(w + &b.scale(c));
            }
        }
        out = next;
    }
    out.sort_by_key(poly_key);
    out
}

fn poly_key(f: &Polynomial) -> (usize, Vec<(Vec<u32>, u32)>) {
    (
        f.num_terms(),
        f.terms().iter().map(|(m, c)| (m.exps().to_vec(), *c)).collect(),
    )
}

/// Linear system builder: each unknown is the coefficient of a monomial of w,
/// each constraint is a polynomial-valued F_p-linear function of w.
struct LinearSystem {
    unknowns: Vec<Monomial>,
    rows: BTreeMap<(usize, Monomial), Vec<(usize, u32)>>,
}

impl LinearSystem {
    fn new(unknowns: Vec<Monomial>) -> Self {
        LinearSystem {
            unknowns,
            rows: BTreeMap::new(),
        }
    }

    /// Add the constraint "image == 0" where column k of the constraint is `images[k]`.
    fn add_constraint(&mut self, tag: usize, images: &[Polynomial]) {
        for (k, img) in images.iter().enumerate() {
            for (m, c) in img.terms() {
                self.rows.entry((tag, m.clone())).or_default().push((k, *c));
            }
        }
    }

    fn kernel(&self, ring: &Arc<Ring>) -> Vec<Polynomial> {
        let n = self.unknowns.len();
        let mut mat = FpMatrix::zeros(self.rows.len(), n);
        for (r, entries) in self.rows.values().enumerate() {
            for &(k, c) in entries {
                mat.set(r, k, c);
            }
        }
        mat.kernel(ring.field())
            .into_iter()
            .map(|v| {
                Polynomial::from_terms(
                    ring,
                    v.iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(k, &c)| (self.unknowns[k].exps(), c as i64)),
                )
            })
            .collect()
    }
}

/// The map w -> v w^p - u w reduced modulo I^[p], evaluated on each unknown.
fn semilinear_images(problem: &SemilinearProblem, unknowns: &[Monomial]) -> Result<Vec<Polynomial>> {
    let ring = problem.ring();
    let bracket = problem.source.bracket_power(1)?;
    let gb = bracket.basis();
    unknowns
        .iter()
        .map(|m| {
            let w = Polynomial::term(ring, 1, m.clone());
            let val = &(problem.v() * &w.frobenius_power(1)?) - &(problem.u() * &w);
            Ok(gb.reduce_poly(&val))
        })
        .collect()
}

/// The F_p-space { w : deg w <= D, v w^p - u w ∈ I^[p] }. The map is additive
/// because w -> w^p is, and F_p-linear because λ^p = λ on the prime field.
pub fn solve_semilinear(problem: &SemilinearProblem) -> Result<SolutionSpace> {
    let d = problem.resolved_degree_bound()?;
    let ring = problem.ring();
    let unknowns = monomials_up_to(ring.nvars(), d);
    let images = semilinear_images(problem, &unknowns)?;
    let mut sys = LinearSystem::new(unknowns);
    sys.add_constraint(0, &images);
    Ok(SolutionSpace {
        ring: ring.clone(),
        basis: sys.kernel(ring),
        degree_bound: d,
    })
}

/// Morphisms Ann_E I -> Ann_E J of Frobenius modules (structures uT and vT),
/// each given by multiplication by some w ∈ (I : J) with v w^p - u w ∈ I^[p].
#[derive(Debug, Clone)]
pub struct HomSet {
    /// Solutions w before passing to R/I.
    pub solutions: SolutionSpace,
    /// Basis of the image of the solutions in R/I (normal forms).
    pub coset_basis: Vec<Polynomial>,
    /// All cosets, as normal forms modulo I.
    pub cosets: Vec<Polynomial>,
    /// The colon ideal (I : J) the solutions were restricted to.
    pub colon: Submodule,
}

impl HomSet {
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }
}

/// Hom_{R[Θ;f]}(Ann_E I, Ann_E J) restricted to representatives w of total
/// degree <= D, returned modulo I.
pub fn hom_set(
    source: &Submodule,
    u: &Polynomial,
    target: &Submodule,
    v: &Polynomial,
    degree_bound: DegreeBound,
) -> Result<HomSet> {
    let problem = SemilinearProblem::new(
        u.clone(),
        v.clone(),
        source.clone(),
        target.clone(),
        degree_bound,
    )?;
    let d = problem.resolved_degree_bound()?;
    let ring = problem.ring().clone();
    let colon = if target.is_zero() {
        Submodule::full(&ring, 1)
    } else {
        colon_ideal(source, target)?
    };
    let unknowns = monomials_up_to(ring.nvars(), d);
    let images = semilinear_images(&problem, &unknowns)?;
    let colon_gb = colon.basis();
    let colon_images: Vec<Polynomial> = unknowns
        .iter()
        .map(|m| colon_gb.reduce_poly(&Polynomial::term(&ring, 1, m.clone())))
        .collect();
    let mut sys = LinearSystem::new(unknowns);
    sys.add_constraint(0, &images);
    sys.add_constraint(1, &colon_images);
    let basis = sys.kernel(&ring);

    let source_gb = source.basis();
    let mut span: EchelonSpace<Vec<u32>> = EchelonSpace::new();
    let f = ring.field();
    let mut coset_basis = Vec::new();
    for w in &basis {
        let nf = source_gb.reduce_poly(w);
        let key: BTreeMap<Vec<u32>, u32> = nf.terms().iter().map(|(m, c)| (m.exps().to_vec(), *c)).collect();
        if span.insert(f, &key) {
            coset_basis.push(nf);
        }
    }
    let cosets = span_elements(&ring, &coset_basis);
    Ok(HomSet {
        solutions: SolutionSpace {
            ring: ring.clone(),
            basis,
            degree_bound: d,
        },
        coset_basis,
        cosets,
        colon,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(p: u32, d: usize) -> (Arc<Ring>, Vec<Polynomial>) {
        let r = Ring::standard(p, d).unwrap();
        let v = (0..d).map(|i| Polynomial::var(&r, i)).collect();
        (r, v)
    }

    fn ideal(r: &Arc<Ring>, g: &[Polynomial]) -> Submodule {
        Submodule::ideal(r, g.to_vec()).unwrap()
    }

    #[test]
    fn root_examples() {
        let (r, v) = setup(2, 2);
        let (x, y) = (&v[0], &v[1]);
        let root = frobenius_root(&ideal(&r, &[&x.pow(3) * y]), 1).unwrap();
        assert!(root.equals(&ideal(&r, std::slice::from_ref(x))).unwrap());
        let f = &x.pow(2) + &(x * y);
        let root = frobenius_root(&ideal(&r, &[f.frobenius_power(1).unwrap()]), 1).unwrap();
        assert!(root.equals(&ideal(&r, &[f])).unwrap());
        assert!(frobenius_root(&Submodule::zero(&r, 1), 1).unwrap().is_zero());
    }

    #[test]
    fn root_minimality_brute_force() {
        // (x^3 y)^[1/2] = (x): the only monomial ideals (x^a y^b) whose bracket
        // square contains x^3 y are those with 2a <= 3 and 2b <= 1.
        let (r, v) = setup(2, 2);
        let (x, y) = (&v[0], &v[1]);
        let f = &x.pow(3) * y;
        for a in 0..4u32 {
            for b in 0..4u32 {
                let m = Polynomial::term(&r, 1, Monomial::new(&[a, b]));
                let contains = ideal(&r, &[m.frobenius_power(1).unwrap()]).contains_poly(&f).unwrap();
                let root_inside = ideal(&r, std::slice::from_ref(&m)).contains_poly(x).unwrap();
                assert_eq!(contains, root_inside, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn trace_examples() {
        for p in [2u32, 3, 5] {
            let (r, v) = setup(p, 2);
            let m = &v[0].pow(p as u64 - 1) * &v[1].pow(p as u64 - 1);
            assert!(trace(&m).is_one());
            let _ = r;
        }
        let (_, v) = setup(2, 1);
        let x = &v[0];
        assert_eq!(trace(&x.pow(3)), x.clone());
        assert!(trace(&x.pow(2)).is_zero());
    }

    #[test]
    fn semilinear_x_equation() {
        let (r, v) = setup(2, 1);
        let x = &v[0];
        let prob = SemilinearProblem::new(
            x.clone(),
            Polynomial::one(&r),
            Submodule::zero(&r, 1),
            Submodule::zero(&r, 1),
            DegreeBound::Automatic,
        )
        .unwrap();
        assert_eq!(prob.resolved_degree_bound().unwrap(), 1);
        let sol = solve_semilinear(&prob).unwrap();
        assert_eq!(sol.elements(), vec![Polynomial::zero(&r), x.clone()]);
        // exhaustive check over degree <= 1
        for a in 0..2 {
            for b in 0..2 {
                let w = &Polynomial::constant(&r, a) + &x.scale(b);
                let val = &w.pow(2) - &(x * &w);
                assert_eq!(val.is_zero(), sol.elements().contains(&w));
            }
        }
    }

    #[test]
    fn semilinear_fermat_constants() {
        for p in [2u32, 3, 5] {
            let (r, _) = setup(p, 1);
            let one = Polynomial::one(&r);
            let prob = SemilinearProblem::new(one.clone(), one, Submodule::zero(&r, 1), Submodule::zero(&r, 1), DegreeBound::Automatic).unwrap();
            let sol = solve_semilinear(&prob).unwrap();
            assert_eq!(sol.cardinality(), p as u128);
            assert!(sol.elements().iter().all(|w| w.is_constant()));
        }
    }

    #[test]
    fn semilinear_full_dimension() {
        let (r, v) = setup(2, 1);
        let x = &v[0];
        let i = ideal(&r, std::slice::from_ref(x));
        let u = x.pow(2);
        let prob = SemilinearProblem::new(u.clone(), u, i.clone(), i, DegreeBound::Explicit(1)).unwrap();
        let sol = solve_semilinear(&prob).unwrap();
        assert_eq!(sol.dim(), 2);
    }

    #[test]
    fn structure_elements_are_validated() {
        let (r, v) = setup(2, 1);
        let x = &v[0];
        let i = ideal(&r, std::slice::from_ref(x));
        // 1 is not in ((x^2) : (x)) = (x)
        let err = SemilinearProblem::new(Polynomial::one(&r), x.clone(), i.clone(), i, DegreeBound::Explicit(1));
        assert!(matches!(err, Err(Error::InvalidStructure(_))));
    }

    #[test]
    fn automatic_bound_needs_zero_ideals() {
        let (r, v) = setup(2, 1);
        let x = &v[0];
        let j = ideal(&r, std::slice::from_ref(x));
        let prob = SemilinearProblem::new(x.clone(), x.pow(2), Submodule::zero(&r, 1), j, DegreeBound::Automatic).unwrap();
        assert!(matches!(solve_semilinear(&prob), Err(Error::Unsupported(_))));
        // v = 0, u != 0: only w = 0
        let prob = SemilinearProblem::new(x.clone(), Polynomial::zero(&r), Submodule::zero(&r, 1), Submodule::zero(&r, 1), DegreeBound::Automatic).unwrap();
        assert_eq!(solve_semilinear(&prob).unwrap().dim(), 0);
    }

    #[test]
    fn hom_set_examples() {
        for p in [2u32, 3] {
            let (r, v) = setup(p, 1);
            let x = &v[0];
            let i = ideal(&r, std::slice::from_ref(x));
            let u = x.pow(p as u64);
            let h = hom_set(&i, &u, &i, &u, DegreeBound::Explicit(1)).unwrap();
            assert_eq!(h.len(), p as usize);
            assert!(h.cosets.iter().all(|c| c.is_constant()));
        }
        let (r, v) = setup(2, 1);
        let x = &v[0];
        let z = Submodule::zero(&r, 1);
        let h = hom_set(&z, x, &z, &Polynomial::one(&r), DegreeBound::Automatic).unwrap();
        assert_eq!(h.cosets, vec![Polynomial::zero(&r), x.clone()]);
        let unit = Submodule::full(&r, 1);
        let h = hom_set(&ideal(&r, std::slice::from_ref(x)), &x.pow(2), &unit, &Polynomial::one(&r), DegreeBound::Explicit(2)).unwrap();
        assert_eq!(h.cosets, vec![Polynomial::zero(&r)]);
    }
}
