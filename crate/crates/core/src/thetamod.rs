//! Matrix-pair presentations (A, B) of Artinian modules with a Frobenius action:
//! M = ker A^t inside E^a, with Theta = B^t T.
//!
//! Questions about Theta are answered on the polynomial side. The chain
//! K_e = { v : B_e v ∈ Im A^[p^e] } satisfies Ann_M(K_e) = R Theta^e M, and the
//! chain L_e = Im A + (B L_{e-1})^[1/p] satisfies Ann_M(L_e) = ker Theta^e.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::frobops::frobenius_root;
use crate::groebner::{preimage, Submodule};
use crate::linalg::FpMatrix;
use crate::poly::{Monomial, PolyMatrix, Polynomial, Ring};

/// Default number of chain steps before giving up.
pub const DEFAULT_CHAIN_CAP: u32 = 10;

/// A valid presentation: Im(B A) ⊆ Im(A^[p]).
#[derive(Debug, Clone)]
pub struct ThetaPresentation {
    a: PolyMatrix,
    b: PolyMatrix,
}

/// The ascending chain K_0 = Im A ⊆ K_1 ⊆ ... up to its stabilization index.
#[derive(Debug, Clone)]
pub struct KChain {
    pub entries: Vec<Submodule>,
    pub stabilization_index: u32,
}

impl KChain {
    pub fn stable_value(&self) -> &Submodule {
        &self.entries[self.stabilization_index as usize]
    }
}

/// N_m = R^n_m, i.e. N + m R^n = R^n: the constant terms of the generators span F_p^n.
pub fn is_locally_full(n: &Submodule) -> bool {
    let ring = n.ring();
    let origin = Monomial::one(ring.nvars());
    let gens = n.generators();
    let mut m = FpMatrix::zeros(n.rank(), gens.len());
    for (j, g) in gens.iter().enumerate() {
        for (i, f) in g.iter().enumerate() {
            m.set(i, j, f.coeff(&origin));
        }
    }
    m.rank(ring.field()) == n.rank()
}

/// Columns generating `n`, or a single zero column when n = 0.
pub fn presentation_matrix(n: &Submodule) -> PolyMatrix {
    if n.generators().is_empty() {
        PolyMatrix::zeros(n.ring(), n.rank(), 1)
    } else {
        n.generator_matrix()
    }
}

impl ThetaPresentation {
    /// Check shapes and Prop-2.1 validity, naming the first offending column of B*A.
    pub fn new(a: PolyMatrix, b: PolyMatrix) -> Result<Self> {
        a.ring().check_same(b.ring())?;
        if !b.is_square() || b.rows() != a.rows() {
            return Err(Error::Shape(format!(
                "B must be {0}x{0} to match A with {0} rows, got {1}x{2}",
                a.rows(),
                b.rows(),
                b.cols()
            )));
        }
        let ba = b.checked_mul(&a)?;
        let target = Submodule::image(&a.bracket_power(1)?);
        for j in 0..ba.cols() {
            let col = ba.column(j);
            if !target.contains(&col)? {
                let shown: Vec<String> = col.iter().map(|f| f.to_string()).collect();
                return Err(Error::InvalidStructure(format!(
                    "column {j} of B*A, [{}], is not in the image of A^[p]",
                    shown.join(", ")
                )));
            }
        }
        Ok(ThetaPresentation { a, b })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.a.ring()
    }

    pub fn alpha(&self) -> usize {
        self.a.rows()
    }

    pub fn beta(&self) -> usize {
        self.a.cols()
    }

    pub fn a(&self) -> &PolyMatrix {
        &self.a
    }

    pub fn b(&self) -> &PolyMatrix {
        &self.b
    }

    pub fn image_a(&self) -> Submodule {
        Submodule::image(&self.a)
    }

    /// B_e = B^[p^(e-1)] ... B^[p] B, with B_0 the identity.
    pub fn theta_power_matrix(&self, e: u32) -> Result<PolyMatrix> {
        let mut acc = PolyMatrix::identity(self.ring(), self.alpha());
        for k in 0..e {
            acc = self.b.bracket_power(k)?.checked_mul(&acc)?;
        }
        Ok(acc)
    }

    /// K_e up to stabilization, using K_(e+1) = preimage(B, K_e^[p]).
    pub fn k_chain(&self, cap: u32) -> Result<KChain> {
        let mut entries = vec![self.image_a().groebner_basis()];
        for e in 0..cap {
            let last = &entries[e as usize];
            let next = preimage(&self.b, &last.bracket_power(1)?)?.groebner_basis();
            if !next.contains_submodule(last)? {
                return Err(Error::InvalidStructure(format!(
                    "K_{} is not contained in K_{}",
                    e,
                    e + 1
                )));
            }
            if next.equals(last)? {
                return Ok(KChain {
                    entries,
                    stabilization_index: e,
                });
            }
            entries.push(next);
        }
        Err(Error::CapExceeded {
            what: "K-chain length".into(),
            cap: cap as usize,
        })
    }

    /// Smallest e with Theta^e M = 0, i.e. K_e locally equal to R^a; None if
    /// the chain stabilizes short of that.
    pub fn nilpotency_order(&self, cap: u32) -> Result<Option<u32>> {
        let chain = self.k_chain(cap)?;
        Ok(chain
            .entries
            .iter()
            .position(is_locally_full)
            .map(|e| e as u32))
    }

    /// Nil(M) = 0. The kernel of Theta on M is Ann(Im A + (Im B)^[1/p]).
    pub fn has_no_nilpotents(&self) -> Result<bool> {
        let root = frobenius_root(&Submodule::image(&self.b), 1)?;
        Ok(is_locally_full(&self.image_a().sum(&root)?))
    }

    /// The descending chain L_0 = R^a, L_(e+1) = Im A + (B L_e)^[1/p], until it
    /// stabilizes; Ann_M(L_e) = ker Theta^e.
    pub fn nil_chain(&self, cap: u32) -> Result<Vec<Submodule>> {
        let ring = self.ring().clone();
        let im_a = self.image_a();
        let mut chain = vec![Submodule::full(&ring, self.alpha())];
        for _ in 0..cap {
            let last = chain.last().expect("nonempty");
            let next = im_a
                .sum(&frobenius_root(&last.mapped_by(&self.b)?, 1)?)?
                .groebner_basis();
            if next.equals(last)? {
                return Ok(chain);
            }
            chain.push(next);
        }
        Err(Error::CapExceeded {
            what: "nil chain length".into(),
            cap: cap as usize,
        })
    }

    /// Matrix C with Nil(M) = ker C^t inside E^a.
    pub fn nil_part(&self, cap: u32) -> Result<PolyMatrix> {
        let chain = self.nil_chain(cap)?;
        Ok(presentation_matrix(chain.last().expect("nonempty")))
    }

    /// Matrix G with M* = ker G^t, the columns of G generating K_eta.
    pub fn stable_part(&self, cap: u32) -> Result<PolyMatrix> {
        let chain = self.k_chain(cap)?;
        Ok(presentation_matrix(chain.stable_value()))
    }
}

/// A 1x1 presentation from two polynomials.
pub fn cyclic(a: &Polynomial, b: &Polynomial) -> Result<ThetaPresentation> {
    ThetaPresentation::new(PolyMatrix::scalar(a), PolyMatrix::scalar(b))
}
