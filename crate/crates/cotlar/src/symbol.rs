//! Multiplier symbols: total maps from group elements to exact complex
//! scalars, closed over their defining data and evaluated lazily.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::coxeter::{CanonicalElement, CoxeterSystem};
use crate::error::Result;
use crate::geometry::{halfspace_side, HalfSpaceSide};
use crate::scalar::{exact_minus_one, exact_one, ExactComplex};

type EvalFn<E> = Arc<dyn Fn(&E) -> Result<ExactComplex> + Send + Sync>;

/// A multiplier symbol over elements of type `E`.
#[derive(Clone)]
pub struct Symbol<E> {
    descriptor: String,
    eval: EvalFn<E>,
}

impl<E> Symbol<E> {
    pub fn from_fn(
        descriptor: impl Into<String>,
        eval: impl Fn(&E) -> Result<ExactComplex> + Send + Sync + 'static,
    ) -> Self {
        Symbol {
            descriptor: descriptor.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn constant(value: ExactComplex) -> Self {
        let shown = crate::scalar::fmt_exact(&value);
        Symbol::from_fn(format!("constant {shown}"), move |_| Ok(value.clone()))
    }

    pub fn evaluate(&self, e: &E) -> Result<ExactComplex> {
        (self.eval)(e)
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }
}

impl<E: Ord + Clone + 'static> Symbol<E> {
    /// Explicit table with a default value off-support.
    pub fn table(
        descriptor: impl Into<String>,
        map: BTreeMap<E, ExactComplex>,
        default: ExactComplex,
    ) -> Self
    where
        E: Send + Sync,
    {
        Symbol::from_fn(descriptor, move |e: &E| {
            Ok(map.get(e).cloned().unwrap_or_else(|| default.clone()))
        })
    }
}

impl<E> std::fmt::Debug for Symbol<E> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Symbol({})", self.descriptor)
    }
}

/// The two-valued wall symbol of generator `s`: +1 on the positive side
/// of H_s (no reduced expression starts with s), -1 on the negative side.
pub fn mw_symbol(system: &CoxeterSystem, s: usize) -> Symbol<CanonicalElement> {
    let sys = system.clone();
    let name = system.name(s).to_owned();
    Symbol::from_fn(format!("mw[{name}]"), move |g: &CanonicalElement| {
        Ok(side_sign(halfspace_side(&sys, s, g)))
    })
}

pub(crate) fn side_sign(side: HalfSpaceSide) -> ExactComplex {
    match side {
        HalfSpaceSide::Positive => exact_one(),
        HalfSpaceSide::Negative => exact_minus_one(),
    }
}
