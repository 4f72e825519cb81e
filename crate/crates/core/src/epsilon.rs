//! Exact finite-support model of E^n, E = F_p[x1^-1, .., xd^-1], with the
//! R-action, the natural Frobenius T and twisted actions Theta = B^t T, plus
//! brute-force oracles that decide questions about Theta by enumeration inside
//! a truncation window.
//!
//! Theta-images are always computed exactly in E. A window only restricts which
//! elements get enumerated.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groebner::Submodule;
use crate::linalg::{axpy, EchelonSpace, FpMatrix};
use crate::poly::{Monomial, PolyMatrix, Polynomial, Ring};

/// Coordinate of E^n: component index and exponent vector a (meaning x^-a).
pub type InverseKey = (usize, Monomial);

/// Sparse F_p-vector over inverse monomials.
pub type InverseCoords = BTreeMap<InverseKey, u32>;

/// Default window size s.
pub const DEFAULT_WINDOW: u32 = 4;

/// Default cap on the window dimension for submodule enumeration.
pub const DEFAULT_DIMENSION_CAP: usize = 12;

/// Largest window dimension any oracle will set up a linear system for.
const MAX_WINDOW_DIMENSION: u128 = 50_000;

/// Largest number of stable submodules collected before giving up.
const MAX_SUBMODULES: usize = 20_000;

/// An element of E^n with finite support.
#[derive(Clone, PartialEq, Eq)]
pub struct InversePolyVector {
    ring: Arc<Ring>,
    rank: usize,
    terms: InverseCoords,
}

impl InversePolyVector {
    pub fn zero(ring: &Arc<Ring>, rank: usize) -> Self {
        InversePolyVector {
            ring: ring.clone(),
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// c * x^-alpha in component `comp`.
    pub fn monomial(ring: &Arc<Ring>, rank: usize, comp: usize, alpha: &[u32], c: i64) -> Result<Self> {
        Self::from_terms(ring, rank, [(comp, alpha, c)])
    }

    pub fn from_terms<'a>(
        ring: &Arc<Ring>,
        rank: usize,
        terms: impl IntoIterator<Item = (usize, &'a [u32], i64)>,
    ) -> Result<Self> {
        let f = ring.field();
        let mut out = BTreeMap::new();
        for (comp, alpha, c) in terms {
            if comp >= rank {
                return Err(Error::Shape(format!("component {comp} out of range for rank {rank}")));
            }
            if alpha.len() != ring.nvars() {
                return Err(Error::Shape(format!(
                    "exponent vector of length {} in a ring with {} variables",
                    alpha.len(),
                    ring.nvars()
                )));
            }
            if alpha.contains(&0) {
                return Err(Error::InvalidInput(
                    "inverse exponents must all be at least 1".into(),
                ));
            }
            let c = f.from_i64(c);
            let mut single = BTreeMap::new();
            if c != 0 {
                single.insert((comp, Monomial::new(alpha)), c);
            }
            axpy(f, &mut out, 1, &single);
        }
        Ok(InversePolyVector {
            ring: ring.clone(),
            rank,
            terms: out,
        })
    }

    pub(crate) fn from_coords(ring: &Arc<Ring>, rank: usize, terms: InverseCoords) -> Self {
        debug_assert!(terms.values().all(|&c| c != 0));
        InversePolyVector {
            ring: ring.clone(),
            rank,
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coords(&self) -> &InverseCoords {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of x^-alpha in component `comp`.
    pub fn coeff(&self, comp: usize, alpha: &[u32]) -> u32 {
        self.terms
            .get(&(comp, Monomial::new(alpha)))
            .copied()
            .unwrap_or(0)
    }

    /// Terms of one component.
    pub fn component(&self, comp: usize) -> impl Iterator<Item = (&Monomial, u32)> {
        self.terms
            .range((comp, Monomial::one(0))..)
            .take_while(move |((c, _), _)| *c == comp)
            .map(|((_, m), c)| (m, *c))
    }

    /// Largest exponent occurring anywhere, 0 for the zero vector.
    pub fn max_exponent(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|(_, m)| m.exps().iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &InversePolyVector) -> InversePolyVector {
        let mut terms = self.terms.clone();
        axpy(self.ring.field(), &mut terms, 1, &other.terms);
        InversePolyVector::from_coords(&self.ring, self.rank, terms)
    }

    pub fn scale(&self, c: i64) -> InversePolyVector {
        let f = self.ring.field();
        let mut terms = BTreeMap::new();
        axpy(f, &mut terms, f.from_i64(c), &self.terms);
        InversePolyVector::from_coords(&self.ring, self.rank, terms)
    }
}

impl fmt::Display for InversePolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = (0..self.rank)
            .map(|i| format_component(&self.ring, self.component(i)))
            .collect();
        if self.rank == 1 {
            write!(f, "{}", comps[0])
        } else {
            write!(f, "({})", comps.join(", "))
        }
    }
}

impl fmt::Debug for InversePolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn format_component<'a>(ring: &Ring, terms: impl Iterator<Item = (&'a Monomial, u32)>) -> String {
    let mut terms: Vec<(&Monomial, u32)> = terms.collect();
    if terms.is_empty() {
        return "0".into();
    }
    // x^-1 is the largest element of E under the R-action, so list small exponents first
    terms.sort_by(|a, b| ring.order().compare(a.0.exps(), b.0.exps()));
    let parts: Vec<String> = terms
        .iter()
        .map(|(m, c)| {
            let mono: Vec<String> = m
                .exps()
                .iter()
                .zip(ring.var_names())
                .map(|(e, v)| format!("{v}^-{e}"))
                .collect();
            let mono = mono.join("*");
            if *c == 1 {
                mono
            } else {
                format!("{c}*{mono}")
            }
        })
        .collect();
    parts.join(" + ")
}

/// x^b acting on the coordinates of one inverse monomial.
fn act_monomial(b: &Monomial, alpha: &Monomial) -> Option<Monomial> {
    if b.exps().iter().zip(alpha.exps()).all(|(bi, ai)| bi < ai) {
        let exps: Vec<u32> = b.exps().iter().zip(alpha.exps()).map(|(bi, ai)| ai - bi).collect();
        Some(Monomial::new(&exps))
    } else {
        None
    }
}

fn act_coords(f: &Polynomial, coords: &InverseCoords, into: &mut InverseCoords, comp: Option<usize>) {
    let field = f.ring().field();
    for ((c, alpha), w) in coords {
        for (b, k) in f.terms() {
            if let Some(m) = act_monomial(b, alpha) {
                let key = (comp.unwrap_or(*c), m);
                let slot = into.entry(key.clone()).or_insert(0);
                *slot = field.add(*slot, field.mul(*k, *w));
                if *slot == 0 {
                    into.remove(&key);
                }
            }
        }
    }
}

/// f * w, with x^b x^-a = x^(b-a) when every coordinate stays negative and 0 otherwise.
pub fn act_poly(f: &Polynomial, w: &InversePolyVector) -> InversePolyVector {
    assert_eq!(f.ring().nvars(), w.ring.nvars(), "ring mismatch");
    let mut out = BTreeMap::new();
    act_coords(f, &w.terms, &mut out, None);
    InversePolyVector::from_coords(&w.ring, w.rank, out)
}

/// T^e: c x^-a maps to c x^-(p^e a). Coefficients in F_p are fixed by Frobenius.
pub fn natural_frobenius(w: &InversePolyVector, e: u32) -> Result<InversePolyVector> {
    let q = (w.ring.p() as u64).pow(e);
    let mut out = BTreeMap::new();
    for ((c, alpha), k) in &w.terms {
        out.insert((*c, alpha.scaled(q)?), *k);
    }
    Ok(InversePolyVector::from_coords(&w.ring, w.rank, out))
}

/// A^t w for an a x b matrix A and w in E^a; the result lies in E^b.
pub fn transpose_apply(a: &PolyMatrix, w: &InversePolyVector) -> Result<InversePolyVector> {
    if a.rows() != w.rank {
        return Err(Error::Shape(format!(
            "matrix has {} rows but the vector has rank {}",
            a.rows(),
            w.rank
        )));
    }
    let mut out = BTreeMap::new();
    for i in 0..a.rows() {
        let comp: InverseCoords = w
            .terms
            .iter()
            .filter(|((c, _), _)| *c == i)
            .map(|(k, v)| (k.clone(), *v))
            .collect();
        if comp.is_empty() {
            continue;
        }
        for k in 0..a.cols() {
            act_coords(a.get(i, k), &comp, &mut out, Some(k));
        }
    }
    Ok(InversePolyVector::from_coords(&w.ring, a.cols(), out))
}

/// Theta^e w for Theta = B^t T.
pub fn theta_apply(b: &PolyMatrix, w: &InversePolyVector, e: u32) -> Result<InversePolyVector> {
    if !b.is_square() {
        return Err(Error::Shape(format!(
            "Frobenius matrix must be square, got {}x{}",
            b.rows(),
            b.cols()
        )));
    }
    let mut cur = w.clone();
    for _ in 0..e {
        cur = transpose_apply(b, &natural_frobenius(&cur, 1)?)?;
    }
    Ok(cur)
}

/// The box of exponent vectors with every coordinate at most s.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruncationWindow {
    s: u32,
}

impl Default for TruncationWindow {
    fn default() -> Self {
        TruncationWindow { s: DEFAULT_WINDOW }
    }
}

impl TruncationWindow {
    pub fn new(s: u32) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidInput("window size must be at least 1".into()));
        }
        Ok(TruncationWindow { s })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// F_p-dimension n * s^d of the window in E^n.
    pub fn dim(&self, nvars: usize, rank: usize) -> u128 {
        (self.s as u128)
            .checked_pow(nvars as u32)
            .and_then(|x| x.checked_mul(rank as u128))
            .unwrap_or(u128::MAX)
    }

    pub fn contains_key(&self, key: &InverseKey) -> bool {
        key.1.exps().iter().all(|&a| a <= self.s)
    }

    pub fn contains(&self, w: &InversePolyVector) -> bool {
        w.terms.keys().all(|k| self.contains_key(k))
    }

    /// All coordinates of the window in E^n.
    pub fn keys(&self, nvars: usize, rank: usize) -> Result<Vec<InverseKey>> {
        let dim = self.dim(nvars, rank);
        if dim > MAX_WINDOW_DIMENSION {
            return Err(Error::CapExceeded {
                what: "window dimension".into(),
                cap: MAX_WINDOW_DIMENSION as usize,
            });
        }
        let mut boxes: Vec<Vec<u32>> = vec![vec![]];
        for _ in 0..nvars {
            boxes = boxes
                .into_iter()
                .flat_map(|b| {
                    (1..=self.s).map(move |a| {
                        let mut b = b.clone();
                        b.push(a);
                        b
                    })
                })
                .collect();
        }
        Ok((0..rank)
            .flat_map(|c| boxes.iter().map(move |b| (c, Monomial::new(b))))
            .collect())
    }
}

/// Kernel of a linear map given by the images of a list of domain vectors,
/// returned as combinations of the domain vectors.
fn kernel_of_images(
    field: &crate::field::PrimeField,
    domain: &[InverseCoords],
    images: &[InverseCoords],
) -> Vec<InverseCoords> {
    let keys: BTreeSet<&InverseKey> = images.iter().flat_map(|m| m.keys()).collect();
    let index: BTreeMap<&InverseKey, usize> = keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut mat = FpMatrix::zeros(index.len(), domain.len());
    for (j, img) in images.iter().enumerate() {
        for (k, c) in img {
            mat.set(index[k], j, *c);
        }
    }
    mat.kernel(field)
        .into_iter()
        .map(|coeffs| {
            let mut v = BTreeMap::new();
            for (j, c) in coeffs.into_iter().enumerate() {
                axpy(field, &mut v, c, &domain[j]);
            }
            v
        })
        .collect()
}

/// Basis of { w in the window : A^t w = 0 }, in reduced echelon form.
pub fn ann_matrix(a: &PolyMatrix, window: TruncationWindow) -> Result<Vec<InversePolyVector>> {
    let ring = a.ring();
    let space = ann_space(a, window)?;
    Ok(space
        .basis()
        .map(|v| InversePolyVector::from_coords(ring, a.rows(), v.clone()))
        .collect())
}

fn ann_space(a: &PolyMatrix, window: TruncationWindow) -> Result<EchelonSpace<InverseKey>> {
    let ring = a.ring();
    let keys = window.keys(ring.nvars(), a.rows())?;
    let domain: Vec<InverseCoords> = keys.into_iter().map(|k| BTreeMap::from([(k, 1)])).collect();
    let images = domain
        .iter()
        .map(|v| Ok(transpose_apply(a, &InversePolyVector::from_coords(ring, a.rows(), v.clone()))?.terms))
        .collect::<Result<Vec<_>>>()?;
    let mut space = EchelonSpace::new();
    for v in kernel_of_images(ring.field(), &domain, &images) {
        space.insert(ring.field(), &v);
    }
    Ok(space)
}

/// An F_p-subspace of E^n inside a window, as a reduced echelon basis.
#[derive(Debug, Clone)]
pub struct WindowSubspace {
    ring: Arc<Ring>,
    rank: usize,
    space: EchelonSpace<InverseKey>,
}

impl PartialEq for WindowSubspace {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.space.canonical() == other.space.canonical()
    }
}

impl Eq for WindowSubspace {}

impl WindowSubspace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> Vec<InversePolyVector> {
        self.space
            .basis()
            .map(|v| InversePolyVector::from_coords(&self.ring, self.rank, v.clone()))
            .collect()
    }

    pub fn contains(&self, w: &InversePolyVector) -> bool {
        self.space.contains(self.ring.field(), &w.terms)
    }

    /// The submodule V of R^n with Ann_{E^n} V equal to this subspace, which
    /// must be an R-submodule (checked). Computed by Macaulay inverse-system
    /// duality: v kills the subspace iff the x^-1 coefficient of v.w vanishes
    /// for every basis vector w.
    pub fn annihilator_presentation(&self) -> Result<Submodule> {
        let ring = &self.ring;
        let d = ring.nvars();
        for w in self.basis() {
            for i in 0..d {
                if !self.contains(&act_poly(&Polynomial::var(ring, i), &w)) {
                    return Err(Error::InvalidInput("subspace is not an R-submodule".into()));
                }
            }
        }
        let s = self
            .space
            .basis()
            .flat_map(|v| v.keys().flat_map(|(_, m)| m.exps().iter().copied()))
            .max()
            .unwrap_or(0)
            .max(1);
        let window = TruncationWindow::new(s)?;
        // unknown: coefficient of x^(a-1) e_c for each window key (c, a)
        let keys = window.keys(d, self.rank)?;
        let mut mat = FpMatrix::zeros(self.dim(), keys.len());
        for (r, v) in self.space.basis().enumerate() {
            for (j, k) in keys.iter().enumerate() {
                if let Some(&c) = v.get(k) {
                    mat.set(r, j, c);
                }
            }
        }
        let mut gens: Vec<Vec<Polynomial>> = Vec::new();
        for coeffs in mat.kernel(ring.field()) {
            let mut col = vec![Polynomial::zero(ring); self.rank];
            for (j, c) in coeffs.iter().enumerate() {
                if *c != 0 {
                    let (comp, a) = &keys[j];
                    let b: Vec<u32> = a.exps().iter().map(|x| x - 1).collect();
                    col[*comp] = &col[*comp] + &Polynomial::term(ring, *c as i64, Monomial::new(&b));
                }
            }
            gens.push(col);
        }
        for comp in 0..self.rank {
            for i in 0..d {
                let mut col = vec![Polynomial::zero(ring); self.rank];
                col[comp] = Polynomial::term(ring, 1, Monomial::var(d, i, s));
                gens.push(col);
            }
        }
        Ok(Submodule::new(ring, self.rank, gens)?.groebner_basis())
    }
}

/// The windowed part M ∩ W of M = ker A^t together with Theta = B^t T.
#[derive(Debug, Clone)]
pub struct WindowedModule {
    a: PolyMatrix,
    b: PolyMatrix,
    window: TruncationWindow,
    space: EchelonSpace<InverseKey>,
}

impl WindowedModule {
    pub fn new(a: &PolyMatrix, b: &PolyMatrix, window: TruncationWindow) -> Result<Self> {
        a.ring().check_same(b.ring())?;
        if !b.is_square() || b.rows() != a.rows() {
            return Err(Error::Shape(format!(
                "B must be {0}x{0} for A with {0} rows, got {1}x{2}",
                a.rows(),
                b.rows(),
                b.cols()
            )));
        }
        Ok(WindowedModule {
            space: ann_space(a, window)?,
            a: a.clone(),
            b: b.clone(),
            window,
        })
    }

    fn ring(&self) -> &Arc<Ring> {
        self.a.ring()
    }

    fn field(&self) -> &crate::field::PrimeField {
        self.a.ring().field()
    }

    pub fn rank(&self) -> usize {
        self.a.rows()
    }

    pub fn window(&self) -> TruncationWindow {
        self.window
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> Vec<InversePolyVector> {
        self.space
            .basis()
            .map(|v| self.vector(v.clone()))
            .collect()
    }

    pub fn subspace(&self) -> WindowSubspace {
        self.wrap(self.space.clone())
    }

    fn wrap(&self, space: EchelonSpace<InverseKey>) -> WindowSubspace {
        WindowSubspace {
            ring: self.ring().clone(),
            rank: self.rank(),
            space,
        }
    }

    fn vector(&self, coords: InverseCoords) -> InversePolyVector {
        InversePolyVector::from_coords(self.ring(), self.rank(), coords)
    }

    fn theta(&self, v: &InverseCoords, e: u32) -> Result<InverseCoords> {
        Ok(theta_apply(&self.b, &self.vector(v.clone()), e)?.terms)
    }

    /// True when every element of M lies in the window, i.e. Im A contains
    /// x_i^s e_j for all i, j. Then the windowed answers are exact for M.
    pub fn window_is_exhaustive(&self) -> Result<bool> {
        let ring = self.ring();
        let im = Submodule::image(&self.a);
        for j in 0..self.rank() {
            for i in 0..ring.nvars() {
                let mut v = vec![Polynomial::zero(ring); self.rank()];
                v[j] = Polynomial::term(ring, 1, Monomial::var(ring.nvars(), i, self.window.s));
                if !im.contains(&v)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Smallest e <= e_max with Theta^e = 0 on M ∩ W, evaluated exactly.
    pub fn nilpotency(&self, e_max: u32) -> Result<Option<u32>> {
        let mut cur: Vec<InverseCoords> = self.space.basis().cloned().collect();
        for e in 0..=e_max {
            cur.retain(|v| !v.is_empty());
            if cur.is_empty() {
                return Ok(Some(e));
            }
            if e < e_max {
                cur = cur.iter().map(|v| self.theta(v, 1)).collect::<Result<_>>()?;
            }
        }
        Ok(None)
    }

    /// { w in M ∩ W : Theta^e w = 0 }.
    pub fn killed_by(&self, e: u32) -> Result<WindowSubspace> {
        let domain: Vec<InverseCoords> = self.space.basis().cloned().collect();
        let images = domain.iter().map(|v| self.theta(v, e)).collect::<Result<Vec<_>>>()?;
        let mut space = EchelonSpace::new();
        for v in kernel_of_images(self.field(), &domain, &images) {
            space.insert(self.field(), &v);
        }
        Ok(self.wrap(space))
    }

    /// Theta is injective on M ∩ W.
    pub fn theta_is_injective(&self) -> Result<bool> {
        Ok(self.killed_by(1)?.dim() == 0)
    }

    /// Every Theta-image of M ∩ W lies in M (checked exactly as A^t Theta w = 0).
    pub fn is_theta_stable(&self) -> Result<bool> {
        for v in self.space.basis() {
            let img = theta_apply(&self.b, &self.vector(v.clone()), 1)?;
            if !transpose_apply(&self.a, &img)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn r_closure(&self, space: &mut EchelonSpace<InverseKey>, seeds: Vec<InverseCoords>) {
        let ring = self.ring().clone();
        let vars: Vec<Polynomial> = (0..ring.nvars()).map(|i| Polynomial::var(&ring, i)).collect();
        let mut queue: VecDeque<InverseCoords> = seeds.into();
        while let Some(v) = queue.pop_front() {
            if space.insert(ring.field(), &v) {
                for x in &vars {
                    let mut out = BTreeMap::new();
                    act_coords(x, &v, &mut out, None);
                    if !out.is_empty() {
                        queue.push_back(out);
                    }
                }
            }
        }
    }

    /// R-span of Theta^e(M ∩ W).
    pub fn stable_span(&self, e: u32) -> Result<WindowSubspace> {
        let seeds = self
            .space
            .basis()
            .map(|v| self.theta(v, e))
            .collect::<Result<Vec<_>>>()?;
        let mut space = EchelonSpace::new();
        self.r_closure(&mut space, seeds);
        Ok(self.wrap(space))
    }

    /// Iterate S -> R Theta(S) + extra from S = M ∩ W until the dimension stops
    /// dropping. With the window exhaustive this is the stable part (extra = 0)
    /// or its image modulo extra.
    fn descend(&self, extra: &EchelonSpace<InverseKey>) -> Result<EchelonSpace<InverseKey>> {
        let mut cur = self.space.clone();
        loop {
            let seeds = cur.basis().map(|v| self.theta(v, 1)).collect::<Result<Vec<_>>>()?;
            let mut next = extra.clone();
            self.r_closure(&mut next, seeds);
            if next.dim() >= cur.dim() {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Nil(M) ∩ W, taking e = dim(M ∩ W), which suffices when the window is exhaustive.
    pub fn nil_space(&self) -> Result<WindowSubspace> {
        self.killed_by(self.dim() as u32)
    }

    /// M* = ∩ R Theta^e M, by iterating R Theta on M ∩ W.
    pub fn stable_space(&self) -> Result<WindowSubspace> {
        Ok(self.wrap(self.descend(&EchelonSpace::new())?))
    }

    /// dim (M_red)*, computed inside M / Nil(M).
    pub fn reduced_then_stable_dim(&self) -> Result<usize> {
        let nil = self.nil_space()?.space;
        let stable = self.descend(&nil)?;
        Ok(stable.dim() - nil.dim())
    }

    /// dim (M*)_red = dim M* - dim Nil(M*), computed inside M*.
    pub fn stable_then_reduced_dim(&self) -> Result<usize> {
        let stable = self.descend(&EchelonSpace::new())?;
        let domain: Vec<InverseCoords> = stable.basis().cloned().collect();
        let e = domain.len() as u32;
        let images = domain.iter().map(|v| self.theta(v, e)).collect::<Result<Vec<_>>>()?;
        let nil = kernel_of_images(self.field(), &domain, &images);
        let mut nil_space = EchelonSpace::new();
        for v in nil {
            nil_space.insert(self.field(), &v);
        }
        Ok(stable.dim() - nil_space.dim())
    }

    /// Smallest R-submodule containing w that is closed under Theta, or None
    /// when it leaves M ∩ W.
    fn theta_closure(&self, w: &InverseCoords) -> Result<Option<EchelonSpace<InverseKey>>> {
        let ring = self.ring().clone();
        let f = ring.field();
        let vars: Vec<Polynomial> = (0..ring.nvars()).map(|i| Polynomial::var(&ring, i)).collect();
        let mut space = EchelonSpace::new();
        let mut queue: VecDeque<InverseCoords> = VecDeque::from([w.clone()]);
        while let Some(v) = queue.pop_front() {
            if !self.space.contains(f, &v) {
                return Ok(None);
            }
            if space.insert(f, &v) {
                for x in &vars {
                    let mut out = BTreeMap::new();
                    act_coords(x, &v, &mut out, None);
                    if !out.is_empty() {
                        queue.push_back(out);
                    }
                }
                let t = self.theta(&v, 1)?;
                if !t.is_empty() {
                    queue.push_back(t);
                }
            }
        }
        Ok(Some(space))
    }

    /// All Theta-stable R-submodules of M contained in the window.
    pub fn stable_submodules(&self, cap: usize) -> Result<StableSubmodules> {
        let dim = self.dim();
        if dim > cap {
            return Err(Error::CapExceeded {
                what: "window dimension for submodule enumeration".into(),
                cap,
            });
        }
        let f = self.field().clone();
        let p = f.p() as u64;
        let basis: Vec<InverseCoords> = self.space.basis().cloned().collect();
        // one seed per line: coefficient vectors whose first nonzero entry is 1
        let count = p.pow(dim as u32);
        let seeds: Vec<u64> = (1..count)
            .filter(|&n| {
                let mut n = n;
                loop {
                    if n % p != 0 {
                        return n % p == 1;
                    }
                    n /= p;
                }
            })
            .collect();
        let closures: Vec<Option<EchelonSpace<InverseKey>>> = seeds
            .par_iter()
            .map(|&n| {
                let mut v = BTreeMap::new();
                let mut n = n;
                for b in &basis {
                    axpy(&f, &mut v, (n % p) as u32, b);
                    n /= p;
                }
                self.theta_closure(&v)
            })
            .collect::<Result<Vec<_>>>()?;

        let mut found: BTreeMap<Vec<Vec<(InverseKey, u32)>>, EchelonSpace<InverseKey>> = BTreeMap::new();
        found.insert(Vec::new(), EchelonSpace::new());
        for c in closures.into_iter().flatten() {
            found.entry(c.canonical()).or_insert(c);
        }
        // close under sums
        let mut frontier: Vec<EchelonSpace<InverseKey>> = found.values().cloned().collect();
        while !frontier.is_empty() {
            let current: Vec<EchelonSpace<InverseKey>> = found.values().cloned().collect();
            let mut next = Vec::new();
            for a in &frontier {
                for b in &current {
                    let mut s = a.clone();
                    for row in b.basis() {
                        s.insert(&f, row);
                    }
                    let key = s.canonical();
                    if let std::collections::btree_map::Entry::Vacant(e) = found.entry(key) {
                        e.insert(s.clone());
                        next.push(s);
                        if found.len() > MAX_SUBMODULES {
                            return Err(Error::CapExceeded {
                                what: "number of stable submodules".into(),
                                cap: MAX_SUBMODULES,
                            });
                        }
                    }
                }
            }
            frontier = next;
        }
        let mut submodules: Vec<WindowSubspace> = found.into_values().map(|s| self.wrap(s)).collect();
        submodules.sort_by(|a, b| {
            a.dim()
                .cmp(&b.dim())
                .then_with(|| a.space.canonical().cmp(&b.space.canonical()))
        });
        Ok(StableSubmodules {
            window: self.window,
            submodules,
            whole_module_outside_window: !self.window_is_exhaustive()?,
        })
    }
}

/// Result of the stable-submodule oracle. Complete only among submodules
/// contained in the window; the whole module M is always stable and is
/// flagged separately when it does not fit in the window.
#[derive(Debug, Clone)]
pub struct StableSubmodules {
    pub window: TruncationWindow,
    pub submodules: Vec<WindowSubspace>,
    pub whole_module_outside_window: bool,
}

/// Smallest e <= e_max with Theta^e vanishing on ker A^t ∩ W.
pub fn oracle_nilpotency(
    a: &PolyMatrix,
    b: &PolyMatrix,
    window: TruncationWindow,
    e_max: u32,
) -> Result<Option<u32>> {
    WindowedModule::new(a, b, window)?.nilpotency(e_max)
}

/// Theta-stable R-submodules of ker A^t contained in the window.
pub fn oracle_stable_submodules(
    b: &PolyMatrix,
    a: &PolyMatrix,
    window: TruncationWindow,
    cap: usize,
) -> Result<StableSubmodules> {
    WindowedModule::new(a, b, window)?.stable_submodules(cap)
}

/// Theta = B^t T is injective on E^n. Checking the window suffices: a nonzero
/// kernel is an R-submodule and so contains a socle element x^-(1,..,1) e_j.
pub fn oracle_theta_injective(b: &PolyMatrix, window: TruncationWindow) -> Result<bool> {
    let a = PolyMatrix::zeros(b.ring(), b.rows(), 1);
    WindowedModule::new(&a, b, window)?.theta_is_injective()
}
