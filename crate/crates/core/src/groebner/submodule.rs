use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use super::buchberger::{normal_form, reduced_basis, satisfies_buchberger_criterion};
use super::cache::{current_store, RawBasis};
use super::modpoly::ModPoly;
use crate::error::{Error, Result};
use crate::poly::{Monomial, PolyMatrix, Polynomial, Ring};

/// A reduced Groebner basis of a submodule of R^n under the position-over-term
/// extension of the ring's monomial order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    rank: usize,
    elements: Vec<ModPoly>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The basis elements as column vectors.
    pub fn vectors(&self) -> Vec<Vec<Polynomial>> {
        self.elements
            .iter()
            .map(|e| e.to_vector(&self.ring, self.rank))
            .collect()
    }

    /// Normal form of `v` with respect to the basis.
    pub fn reduce(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.rank {
            return Err(Error::Shape(format!(
                "vector of length {} in a module of rank {}",
                v.len(),
                self.rank
            )));
        }
        for f in v {
            self.ring.check_same(f.ring())?;
        }
        let nf = normal_form(&self.ring, &ModPoly::from_vector(v), &self.elements);
        Ok(nf.to_vector(&self.ring, self.rank))
    }

    pub(crate) fn reduce_poly(&self, f: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.rank, 1);
        let nf = normal_form(&self.ring, &ModPoly::from_vector(std::slice::from_ref(f)), &self.elements);
        nf.to_vector(&self.ring, 1).pop().unwrap()
    }

    /// Every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        satisfies_buchberger_criterion(&self.ring, &self.elements)
    }

    /// Leading (component, monomial) of each element.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.elements
            .iter()
            .map(|e| {
                let (c, m, _) = e.lead().unwrap();
                (*c, m.clone())
            })
            .collect()
    }

    fn to_raw(&self) -> RawBasis {
        self.vectors()
            .iter()
            .map(|v| {
                v.iter()
                    .map(|f| f.terms().iter().map(|(m, c)| (m.exps().to_vec(), *c)).collect())
                    .collect()
            })
            .collect()
    }

    fn from_raw(ring: &Arc<Ring>, rank: usize, raw: &RawBasis) -> Option<GroebnerBasis> {
        let mut elements = Vec::with_capacity(raw.len());
        for v in raw {
            if v.len() != rank {
                return None;
            }
            let mut comps = Vec::with_capacity(rank);
            for terms in v {
                if terms.iter().any(|(e, c)| e.len() != ring.nvars() || *c == 0 || *c >= ring.p()) {
                    return None;
                }
                comps.push(Polynomial::from_terms(
                    ring,
                    terms.iter().map(|(e, c)| (e.as_slice(), *c as i64)),
                ));
            }
            let mp = ModPoly::from_vector(&comps);
            if mp.is_zero() {
                return None;
            }
            elements.push(mp);
        }
        Some(GroebnerBasis {
            ring: ring.clone(),
            rank,
            elements,
        })
    }
}

/// A finitely generated submodule of R^n, given by generating column vectors.
/// Rank one is the ideal case. The zero submodule has no generators.
#[derive(Clone)]
pub struct Submodule {
    ring: Arc<Ring>,
    rank: usize,
    generators: Vec<Vec<Polynomial>>,
    basis: OnceLock<Arc<GroebnerBasis>>,
}

impl std::fmt::Debug for Submodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Submodule(rank {}, {:?})", self.rank, self.generators)
    }
}

impl Submodule {
    pub fn new(ring: &Arc<Ring>, rank: usize, generators: Vec<Vec<Polynomial>>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Shape("ambient rank must be positive".into()));
        }
        for (j, g) in generators.iter().enumerate() {
            if g.len() != rank {
                return Err(Error::Shape(format!(
                    "generator {j} has length {}, expected {rank}",
                    g.len()
                )));
            }
            for f in g {
                ring.check_same(f.ring())?;
            }
        }
        let generators = generators
            .into_iter()
            .filter(|g| g.iter().any(|f| !f.is_zero()))
            .collect();
        Ok(Submodule {
            ring: ring.clone(),
            rank,
            generators,
            basis: OnceLock::new(),
        })
    }

    pub fn ideal(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Self> {
        Self::new(ring, 1, generators.into_iter().map(|g| vec![g]).collect())
    }

    pub fn zero(ring: &Arc<Ring>, rank: usize) -> Self {
        Self::new(ring, rank, Vec::new()).expect("positive rank")
    }

    /// The whole free module R^n.
    pub fn full(ring: &Arc<Ring>, rank: usize) -> Self {
        let gens = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|k| {
                        if k == i {
                            Polynomial::one(ring)
                        } else {
                            Polynomial::zero(ring)
                        }
                    })
                    .collect()
            })
            .collect();
        Self::new(ring, rank, gens).expect("positive rank")
    }

    /// The column space of a matrix.
    pub fn image(m: &PolyMatrix) -> Self {
        Self::new(m.ring(), m.rows().max(1), m.columns()).expect("matrix columns are well formed")
    }

    #[inline]
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[Vec<Polynomial>] {
        &self.generators
    }

    /// Generators of an ideal as polynomials. Panics if rank != 1.
    pub fn ideal_generators(&self) -> Vec<Polynomial> {
        assert_eq!(self.rank, 1, "not an ideal");
        self.generators.iter().map(|g| g[0].clone()).collect()
    }

    /// Matrix whose columns are the generators (rank x #generators).
    pub fn generator_matrix(&self) -> PolyMatrix {
        PolyMatrix::from_columns(&self.ring, self.rank, &self.generators).expect("shape checked")
    }

    fn fingerprint(&self) -> String {
        let mut s = String::new();
        let _ = write!(
            s,
            "p={};vars={};order={};rank={};gens=",
            self.ring.p(),
            self.ring.nvars(),
            self.ring.order().name(),
            self.rank
        );
        for g in &self.generators {
            s.push('[');
            for f in g {
                s.push('(');
                for (m, c) in f.terms() {
                    let _ = write!(s, "{:?}:{};", m.exps(), c);
                }
                s.push(')');
            }
            s.push(']');
        }
        s
    }

    /// The reduced Groebner basis, computed once and cached on this value.
    pub fn basis(&self) -> &Arc<GroebnerBasis> {
        self.basis.get_or_init(|| Arc::new(self.compute_basis()))
    }

    fn compute_basis(&self) -> GroebnerBasis {
        let gens: Vec<ModPoly> = self.generators.iter().map(|g| ModPoly::from_vector(g)).collect();
        let store = current_store();
        let key = store.as_ref().map(|_| self.fingerprint());
        if let (Some(store), Some(key)) = (&store, &key) {
            if let Some(raw) = store.load(key) {
                if let Some(gb) = GroebnerBasis::from_raw(&self.ring, self.rank, &raw) {
                    let sound = gens
                        .iter()
                        .all(|g| normal_form(&self.ring, g, &gb.elements).is_zero());
                    if sound {
                        return gb;
                    }
                }
            }
        }
        let elements = reduced_basis(&self.ring, &gens, self.rank == 1);
        let gb = GroebnerBasis {
            ring: self.ring.clone(),
            rank: self.rank,
            elements,
        };
        if let (Some(store), Some(key)) = (&store, &key) {
            store.store(key, &gb.to_raw());
        }
        gb
    }

    /// The same submodule generated by its reduced Groebner basis.
    pub fn groebner_basis(&self) -> Submodule {
        let gb = self.basis().clone();
        let out = Submodule {
            ring: self.ring.clone(),
            rank: self.rank,
            generators: gb.vectors(),
            basis: OnceLock::new(),
        };
        let _ = out.basis.set(gb);
        out
    }

    /// The submodule viewed over a ring with another monomial order.
    pub fn with_order(&self, ring: &Arc<Ring>) -> Submodule {
        let gens = self
            .generators
            .iter()
            .map(|g| g.iter().map(|f| f.to_ring(ring)).collect())
            .collect();
        Submodule::new(ring, self.rank, gens).expect("same shape")
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Whether this is all of R^n.
    pub fn is_full(&self) -> bool {
        let lts = self.basis().leading_terms();
        (0..self.rank).all(|i| lts.iter().any(|(c, m)| *c == i && m.is_one()))
    }

    fn check_compatible(&self, other: &Submodule) -> Result<()> {
        self.ring.check_same(&other.ring)?;
        if self.rank != other.rank {
            return Err(Error::Shape(format!(
                "ambient ranks differ: {} vs {}",
                self.rank, other.rank
            )));
        }
        Ok(())
    }

    /// Membership of a column vector.
    pub fn contains(&self, v: &[Polynomial]) -> Result<bool> {
        Ok(self.basis().reduce(v)?.iter().all(Polynomial::is_zero))
    }

    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        self.contains(std::slice::from_ref(f))
    }

    /// Whether `other` is contained in `self`.
    pub fn contains_submodule(&self, other: &Submodule) -> Result<bool> {
        self.check_compatible(other)?;
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as submodules, decided by mutual containment.
    pub fn equals(&self, other: &Submodule) -> Result<bool> {
        Ok(self.contains_submodule(other)? && other.contains_submodule(self)?)
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.check_compatible(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Submodule::new(&self.ring, self.rank, gens)
    }

    /// Generated by the p^e-th powers of the generators' entries.
    pub fn bracket_power(&self, e: u32) -> Result<Submodule> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.iter().map(|f| f.frobenius_power(e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Submodule::new(&self.ring, self.rank, gens)
    }

    /// The image B * W of this submodule under a matrix B.
    pub fn mapped_by(&self, b: &PolyMatrix) -> Result<Submodule> {
        if b.cols() != self.rank {
            return Err(Error::Shape(format!(
                "matrix with {} columns applied to rank {}",
                b.cols(),
                self.rank
            )));
        }
        let gens = self
            .generators
            .iter()
            .map(|g| b.mul_vector(g))
            .collect::<Result<Vec<_>>>()?;
        Submodule::new(&self.ring, b.rows(), gens)
    }

    /// Coefficients c with v = sum_j c_j g_j over the generators, if v is a member.
    pub fn lift(&self, v: &[Polynomial]) -> Result<Option<Vec<Polynomial>>> {
        if v.len() != self.rank {
            return Err(Error::Shape("vector length does not match rank".into()));
        }
        let k = self.generators.len();
        let n = self.rank;
        let aug = augmented(&self.ring, &self.generators);
        let gb = reduced_basis(&self.ring, &aug, false);
        let mut target = v.to_vec();
        target.extend(std::iter::repeat_with(|| Polynomial::zero(&self.ring)).take(k));
        let nf = normal_form(&self.ring, &ModPoly::from_vector(&target), &gb).to_vector(&self.ring, n + k);
        if nf[..n].iter().any(|f| !f.is_zero()) {
            return Ok(None);
        }
        Ok(Some(nf[n..].iter().map(|f| -f).collect()))
    }

    /// Intersection of submodules via syzygies of the joint generator list.
    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        self.check_compatible(other)?;
        let mut joint = self.generators.clone();
        joint.extend(other.generators.iter().cloned());
        let k = self.generators.len();
        let syz = syzygies(&self.ring, self.rank, &joint)?;
        let gens = syz
            .iter()
            .map(|s| {
                let mut acc = vec![Polynomial::zero(&self.ring); self.rank];
                for (j, c) in s[..k].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (i, a) in acc.iter_mut().enumerate() {
                        *a = &*a + &(c * &self.generators[j][i]);
                    }
                }
                acc
            })
            .collect();
        Submodule::new(&self.ring, self.rank, gens)
    }
}

/// Vectors (g_j, e_j) in R^(n+k); under position-over-term the first n
/// components dominate, which makes the basis carry syzygy information.
fn augmented(ring: &Arc<Ring>, gens: &[Vec<Polynomial>]) -> Vec<ModPoly> {
    let k = gens.len();
    gens.iter()
        .enumerate()
        .map(|(j, g)| {
            let mut v = g.clone();
            for l in 0..k {
                v.push(if l == j {
                    Polynomial::one(ring)
                } else {
                    Polynomial::zero(ring)
                });
            }
            ModPoly::from_vector(&v)
        })
        .collect()
}

/// Generators of the syzygy module { c in R^k : sum_j c_j g_j = 0 }.
pub fn syzygies(ring: &Arc<Ring>, rank: usize, gens: &[Vec<Polynomial>]) -> Result<Vec<Vec<Polynomial>>> {
    for g in gens {
        if g.len() != rank {
            return Err(Error::Shape("generator length does not match rank".into()));
        }
    }
    let k = gens.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    let gb = reduced_basis(ring, &augmented(ring, gens), false);
    Ok(gb
        .iter()
        .filter(|e| e.lead().is_some_and(|(c, _, _)| *c >= rank))
        .map(|e| e.to_vector(ring, rank + k)[rank..].to_vec())
        .collect())
}

/// { v in R^a : B v in W } for a square (or any a-column) matrix B.
pub fn preimage(b: &PolyMatrix, w: &Submodule) -> Result<Submodule> {
    b.ring().check_same(w.ring())?;
    if b.rows() != w.rank() {
        return Err(Error::Shape(format!(
            "matrix with {} rows against a submodule of rank {}",
            b.rows(),
            w.rank()
        )));
    }
    let ring = b.ring();
    let a = b.cols();
    let mut cols = b.columns();
    cols.extend(w.generators().iter().cloned());
    let syz = syzygies(ring, b.rows(), &cols)?;
    let gens = syz.into_iter().map(|s| s[..a].to_vec()).collect();
    Submodule::new(ring, a, gens)
}
