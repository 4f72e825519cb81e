//! Near-splittings R^n -> R^n given by a matrix B, acting as v -> trace(B v),
//! and the submodules V compatible with them (phi(V) ⊆ V).
//!
//! V is compatible iff B V ⊆ V^[p] iff (B V)^[1/p] ⊆ V iff Ann_{E^n} V is
//! stable under Theta = B^t T. All three routes are offered.

use std::sync::Arc;

use rayon::prelude::*;

use crate::epsilon::{oracle_stable_submodules, TruncationWindow, WindowedModule};
use crate::error::{Error, Result};
use crate::frobops::{frobenius_root, monomials_up_to, trace};
use crate::groebner::Submodule;
use crate::poly::{Monomial, PolyMatrix, Polynomial, Ring};
use crate::thetamod::{presentation_matrix, ThetaPresentation};

/// Default number of closure steps.
pub const DEFAULT_CLOSURE_CAP: u32 = 50;

/// Largest number of monomial candidates the brute-force route will test.
const MAX_CANDIDATES: usize = 200_000;

#[derive(Debug, Clone)]
pub struct NearSplitting {
    b: PolyMatrix,
}

impl NearSplitting {
    pub fn new(b: PolyMatrix) -> Result<Self> {
        if !b.is_square() {
            return Err(Error::Shape(format!(
                "near-splitting matrix must be square, got {}x{}",
                b.rows(),
                b.cols()
            )));
        }
        Ok(NearSplitting { b })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.b.ring()
    }

    pub fn n(&self) -> usize {
        self.b.rows()
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.b
    }

    fn check_rank(&self, v: &Submodule) -> Result<()> {
        self.ring().check_same(v.ring())?;
        if v.rank() != self.n() {
            return Err(Error::Shape(format!(
                "submodule of rank {} for a splitting of size {}",
                v.rank(),
                self.n()
            )));
        }
        Ok(())
    }
}

/// phi_B(v), coordinatewise trace of B v. Satisfies phi(f^p v) = f phi(v).
pub fn apply_splitting(s: &NearSplitting, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
    Ok(s.b.mul_vector(v)?.iter().map(trace).collect())
}

/// Gröbner route: every generator g of V has B g ∈ V^[p].
pub fn is_compatible(s: &NearSplitting, v: &Submodule) -> Result<bool> {
    s.check_rank(v)?;
    let bracket = v.bracket_power(1)?;
    for g in v.generators() {
        if !bracket.contains(&s.b.mul_vector(g)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Root route: (B V)^[1/p] ⊆ V.
pub fn is_compatible_direct(s: &NearSplitting, v: &Submodule) -> Result<bool> {
    s.check_rank(v)?;
    v.contains_submodule(&frobenius_root(&v.mapped_by(&s.b)?, 1)?)
}

/// Dual route: Theta = B^t T maps Ann_{E^n} V ∩ W back into Ann_{E^n} V.
/// Exact when V contains x_i^s e_j for all i, j, so that the annihilator fits
/// in the window.
pub fn is_compatible_windowed(s: &NearSplitting, v: &Submodule, window: TruncationWindow) -> Result<bool> {
    s.check_rank(v)?;
    WindowedModule::new(&presentation_matrix(v), &s.b, window)?.is_theta_stable()
}

/// Theta = B^t T is injective on E^n, i.e. (Im B)^[1/p] is locally all of R^n.
pub fn splitting_injectivity(s: &NearSplitting) -> Result<bool> {
    let zero = PolyMatrix::zeros(s.ring(), s.n(), 1);
    ThetaPresentation::new(zero, s.b.clone())?.has_no_nilpotents()
}

/// Smallest compatible submodule containing V: C_(k+1) = C_k + (B C_k)^[1/p].
pub fn compatible_closure(s: &NearSplitting, v: &Submodule, cap: u32) -> Result<Submodule> {
    s.check_rank(v)?;
    let mut cur = v.groebner_basis();
    for _ in 0..cap {
        let next = cur
            .sum(&frobenius_root(&cur.mapped_by(&s.b)?, 1)?)?
            .groebner_basis();
        if next.equals(&cur)? {
            return Ok(cur);
        }
        cur = next;
    }
    Err(Error::CapExceeded {
        what: "compatible closure steps".into(),
        cap: cap as usize,
    })
}

/// What `enumerate_compatible` searches through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationConstraint {
    /// Monomial ideals (n = 1) with minimal generators of degree <= max_degree.
    Monomial { max_degree: u32 },
    /// Annihilators of Theta-stable submodules of E^n inside a window.
    Window { window: TruncationWindow, cap: usize },
}

/// Compatible submodules found under a constraint. Complete within the
/// constraint only, never globally.
#[derive(Debug, Clone)]
pub struct CompatibleReport {
    pub constraint: EnumerationConstraint,
    pub submodules: Vec<Submodule>,
    /// Window route: the zero submodule was included because E^n itself,
    /// which never fits in a window, is always stable.
    pub zero_from_whole_module: bool,
}

pub fn enumerate_compatible(s: &NearSplitting, constraint: EnumerationConstraint) -> Result<CompatibleReport> {
    match constraint {
        EnumerationConstraint::Monomial { max_degree } => {
            if s.n() != 1 {
                return Err(Error::Unsupported(
                    "monomial enumeration is only offered for n = 1".into(),
                ));
            }
            let ring = s.ring();
            let candidates = monomial_ideals(ring, max_degree)?;
            let keep = candidates
                .par_iter()
                .map(|v| is_compatible(s, v))
                .collect::<Result<Vec<bool>>>()?;
            let submodules = candidates
                .into_iter()
                .zip(keep)
                .filter_map(|(v, k)| k.then_some(v))
                .collect();
            Ok(CompatibleReport {
                constraint,
                submodules,
                zero_from_whole_module: false,
            })
        }
        EnumerationConstraint::Window { window, cap } => {
            let zero = PolyMatrix::zeros(s.ring(), s.n(), 1);
            let stable = oracle_stable_submodules(&s.b, &zero, window, cap)?;
            let mut submodules = Vec::new();
            if stable.whole_module_outside_window {
                submodules.push(Submodule::zero(s.ring(), s.n()));
            }
            // larger annihilators give smaller submodules
            for m in stable.submodules.iter().rev() {
                submodules.push(m.annihilator_presentation()?);
            }
            Ok(CompatibleReport {
                constraint,
                submodules,
                zero_from_whole_module: stable.whole_module_outside_window,
            })
        }
    }
}

/// All monomial ideals whose minimal generators have degree <= k, smallest
/// first (by the number of monomials of degree <= k they miss).
fn monomial_ideals(ring: &Arc<Ring>, k: u32) -> Result<Vec<Submodule>> {
    let monos = monomials_up_to(ring.nvars(), k as u64);
    let mut antichains: Vec<Vec<usize>> = Vec::new();
    fn rec(monos: &[Monomial], start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) -> bool {
        out.push(cur.clone());
        if out.len() > MAX_CANDIDATES {
            return false;
        }
        for j in start..monos.len() {
            let m = &monos[j];
            if cur.iter().all(|&i| !monos[i].divides(m) && !m.divides(&monos[i])) {
                cur.push(j);
                if !rec(monos, j + 1, cur, out) {
                    return false;
                }
                cur.pop();
            }
        }
        true
    }
    if !rec(&monos, 0, &mut Vec::new(), &mut antichains) {
        return Err(Error::CapExceeded {
            what: "monomial ideal candidates".into(),
            cap: MAX_CANDIDATES,
        });
    }
    let missed = |a: &Vec<usize>| {
        monos
            .iter()
            .filter(|m| !a.iter().any(|&i| monos[i].divides(m)))
            .count()
    };
    antichains.sort_by_cached_key(|a| {
        let mut exps: Vec<Vec<u32>> = a.iter().map(|&i| monos[i].exps().to_vec()).collect();
        exps.sort();
        (std::cmp::Reverse(missed(a)), exps)
    });
    antichains
        .iter()
        .map(|a| {
            let gens = a
                .iter()
                .map(|&i| Polynomial::term(ring, 1, monos[i].clone()))
                .collect();
            Submodule::ideal(ring, gens)
        })
        .collect()
}
