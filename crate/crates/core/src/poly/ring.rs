use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Monomial orders on exponent vectors. Variables are ranked x1 > x2 > ... > xd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Elimination order: the first `k` variables are compared by grevlex first,
    /// ties broken by grevlex on the remaining variables.
    Block(usize),
}

impl MonomialOrder {
    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Block(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Block(k) => format!("block{k}"),
        }
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// A polynomial ring F_p[x1..xd] together with its default monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    field: PrimeField,
    var_names: Vec<String>,
    order: MonomialOrder,
}

impl Ring {
    pub fn new<S: Into<String>>(
        p: u32,
        var_names: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<Arc<Ring>> {
        let field = PrimeField::new(p)?;
        let var_names: Vec<String> = var_names.into_iter().map(Into::into).collect();
        if var_names.is_empty() {
            return Err(Error::Config("a ring needs at least one variable".into()));
        }
        for (i, v) in var_names.iter().enumerate() {
            if var_names[..i].contains(v) {
                return Err(Error::Config(format!("duplicate variable name `{v}`")));
            }
        }
        Ok(Arc::new(Ring {
            field,
            var_names,
            order,
        }))
    }

    /// Ring with variables x, y, z (d <= 3) or x1..xd, grevlex order.
    pub fn standard(p: u32, d: usize) -> Result<Arc<Ring>> {
        let names: Vec<String> = if d <= 3 {
            ["x", "y", "z"][..d].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=d).map(|i| format!("x{i}")).collect()
        };
        Ring::new(p, names, MonomialOrder::GrevLex)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.field.p()
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.var_names.iter().position(|v| v == name)
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<Ring> {
        Arc::new(Ring {
            field: self.field.clone(),
            var_names: self.var_names.clone(),
            order,
        })
    }

    /// The ring with one extra variable placed first, ordered by an elimination
    /// order for that variable.
    pub(crate) fn with_elimination_var(&self) -> Arc<Ring> {
        let mut name = String::from("_t");
        while self.var_names.contains(&name) {
            name.push('_');
        }
        let mut names = vec![name];
        names.extend(self.var_names.iter().cloned());
        Arc::new(Ring {
            field: self.field.clone(),
            var_names: names,
            order: MonomialOrder::Block(1),
        })
    }

    pub fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::Config(format!("ring mismatch: {self} vs {other}")))
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}[{}] ({})",
            self.p(),
            self.var_names.join(","),
            self.order.name()
        )
    }
}
