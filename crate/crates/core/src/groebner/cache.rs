//! Optional process-wide store for reduced Groebner bases.
//!
//! The store is advisory: a loaded basis is only used after every original
//! generator reduces to zero against it, otherwise it is recomputed.

use std::sync::{Arc, RwLock};

/// A basis in raw form: elements -> components -> (exponents, coefficient) terms.
pub type RawBasis = Vec<Vec<Vec<(Vec<u32>, u32)>>>;

pub trait BasisStore: Send + Sync {
    fn load(&self, key: &str) -> Option<RawBasis>;
    fn store(&self, key: &str, basis: &RawBasis);
}

static STORE: RwLock<Option<Arc<dyn BasisStore>>> = RwLock::new(None);

/// Install (or with `None`, remove) the process-wide basis store.
pub fn install_basis_store(store: Option<Arc<dyn BasisStore>>) {
    *STORE.write().expect("basis store lock poisoned") = store;
}

pub(crate) fn current_store() -> Option<Arc<dyn BasisStore>> {
    STORE.read().ok().and_then(|s| s.clone())
}
