//! A minimal group abstraction: everything the Cotlar scans need is
//! canonical elements, multiplication, inversion and deterministic ball
//! enumeration.

use std::collections::BTreeSet;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use crate::coxeter::{CanonicalElement, CoxeterSystem};
use crate::error::Result;

pub trait Group {
    type Elem: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    fn identity(&self) -> Self::Elem;
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn invert(&self, a: &Self::Elem) -> Self::Elem;
    /// Deterministically ordered enumeration of a ball around the identity.
    fn ball(&self, radius: usize) -> Result<Vec<Self::Elem>>;
    fn render(&self, e: &Self::Elem) -> String;
}

impl Group for CoxeterSystem {
    type Elem = CanonicalElement;

    fn identity(&self) -> CanonicalElement {
        CoxeterSystem::identity(self)
    }
    fn multiply(&self, a: &CanonicalElement, b: &CanonicalElement) -> Result<CanonicalElement> {
        CoxeterSystem::multiply(self, a, b)
    }
    fn invert(&self, a: &CanonicalElement) -> CanonicalElement {
        CoxeterSystem::invert(self, a)
    }
    fn ball(&self, radius: usize) -> Result<Vec<CanonicalElement>> {
        CoxeterSystem::ball(self, radius)
    }
    fn render(&self, e: &CanonicalElement) -> String {
        self.format_element(e)
    }
}

/// The free abelian group on two generators. `ball(r)` enumerates the
/// max-norm grid |a|,|b| <= r in lexicographic order; multiplication is
/// componentwise addition and never hits a cap.
#[derive(Debug, Clone, Default)]
pub struct Z2Lattice;

impl Group for Z2Lattice {
    type Elem = (i64, i64);

    fn identity(&self) -> (i64, i64) {
        (0, 0)
    }
    fn multiply(&self, a: &(i64, i64), b: &(i64, i64)) -> Result<(i64, i64)> {
        Ok((a.0 + b.0, a.1 + b.1))
    }
    fn invert(&self, a: &(i64, i64)) -> (i64, i64) {
        (-a.0, -a.1)
    }
    fn ball(&self, radius: usize) -> Result<Vec<(i64, i64)>> {
        let r = radius as i64;
        let mut out = Vec::with_capacity(((2 * r + 1) * (2 * r + 1)) as usize);
        for a in -r..=r {
            for b in -r..=r {
                out.push((a, b));
            }
        }
        Ok(out)
    }
    fn render(&self, e: &(i64, i64)) -> String {
        format!("({},{})", e.0, e.1)
    }
}

/// A named membership predicate describing a subgroup (or any subset used
/// as the multiplier's invariance subgroup G0).
#[derive(Clone)]
pub struct SubgroupPredicate<E> {
    descriptor: String,
    contains: Arc<dyn Fn(&E) -> bool + Send + Sync>,
}

impl<E> SubgroupPredicate<E> {
    pub fn new(
        descriptor: impl Into<String>,
        contains: impl Fn(&E) -> bool + Send + Sync + 'static,
    ) -> Self {
        SubgroupPredicate {
            descriptor: descriptor.into(),
            contains: Arc::new(contains),
        }
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn contains(&self, e: &E) -> bool {
        (self.contains)(e)
    }
}

impl<E> std::fmt::Debug for SubgroupPredicate<E> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubgroupPredicate({})", self.descriptor)
    }
}

/// G0 = the trivial subgroup.
pub fn trivial_subgroup<E: Eq + Clone + Send + Sync + 'static>(identity: E) -> SubgroupPredicate<E> {
    SubgroupPredicate::new("trivial", move |e: &E| *e == identity)
}

/// G0 = the standard parabolic W_T of a Coxeter system.
pub fn parabolic_subgroup(
    system: &CoxeterSystem,
    t: BTreeSet<usize>,
) -> SubgroupPredicate<CanonicalElement> {
    let names: Vec<&str> = t.iter().map(|&i| system.name(i)).collect();
    let descriptor = format!("parabolic W_{{{}}}", names.join(","));
    let sys = system.clone();
    SubgroupPredicate::new(descriptor, move |e: &CanonicalElement| {
        sys.in_parabolic(&t, e)
    })
}

/// T_s = the commuting generators {t : m_st = 2}; under the nested
/// condition W_{T_s} is exactly the stabilizer of the positive root.
pub fn commuting_generators(system: &CoxeterSystem, s: usize) -> BTreeSet<usize> {
    (0..system.rank())
        .filter(|&t| t != s && system.order(s, t) == crate::coxeter::CoxeterOrder::Finite(2))
        .collect()
}
