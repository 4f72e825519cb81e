//! Ideal-specific constructions: intersection by elimination and colon ideals.

use super::buchberger::reduced_basis;
use super::modpoly::ModPoly;
use super::submodule::Submodule;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

fn expect_ideal(i: &Submodule, what: &str) -> Result<()> {
    if i.rank() != 1 {
        return Err(Error::Shape(format!("{what} must be an ideal (rank 1), got rank {}", i.rank())));
    }
    Ok(())
}

/// I ∩ J, eliminating t from the ideal t*I + (1 - t)*J.
pub fn ideal_intersection(i: &Submodule, j: &Submodule) -> Result<Submodule> {
    expect_ideal(i, "left operand")?;
    expect_ideal(j, "right operand")?;
    i.ring().check_same(j.ring())?;
    let ring = i.ring();
    if i.is_zero() || j.is_zero() {
        return Ok(Submodule::zero(ring, 1));
    }
    let ext = ring.with_elimination_var();
    let one = Polynomial::one(&ext);
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = &one - &t;
    let mut gens = Vec::new();
    for f in i.ideal_generators() {
        gens.push(ModPoly::from_vector(&[&t * &f.lift_with_var(&ext, 0)]));
    }
    for g in j.ideal_generators() {
        gens.push(ModPoly::from_vector(&[&one_minus_t * &g.lift_with_var(&ext, 0)]));
    }
    let basis = reduced_basis(&ext, &gens, true);
    let kept: Vec<Polynomial> = basis
        .iter()
        .filter_map(|e| e.to_vector(&ext, 1).pop().unwrap().drop_first_var(ring))
        .collect();
    Submodule::ideal(ring, kept)
}

/// (I : J) = { r : r J ⊆ I }, as the intersection over generators g of J of
/// (I ∩ (g)) / g.
pub fn colon_ideal(i: &Submodule, j: &Submodule) -> Result<Submodule> {
    expect_ideal(i, "left operand")?;
    expect_ideal(j, "right operand")?;
    i.ring().check_same(j.ring())?;
    if j.is_zero() {
        return Err(Error::Degenerate(
            "colon by the zero ideal is the unit ideal; request it explicitly".into(),
        ));
    }
    let ring = i.ring();
    let mut acc: Option<Submodule> = None;
    for g in j.ideal_generators() {
        let gi = Submodule::ideal(ring, vec![g.clone()])?;
        let meet = ideal_intersection(i, &gi)?;
        let quotients = meet
            .groebner_basis()
            .ideal_generators()
            .iter()
            .map(|h| h.exact_div(&g))
            .collect::<Result<Vec<_>>>()?;
        let part = Submodule::ideal(ring, quotients)?;
        acc = Some(match acc {
            None => part,
            Some(prev) => ideal_intersection(&prev, &part)?,
        });
    }
    Ok(acc.expect("J has at least one generator").groebner_basis())
}
