//! The torsion-free free-abelian subgroup of the affine triangle group
//! on generators s, t, u (all braid orders 3), generated by the two
//! commuting translations alpha = usts and beta = sust, together with
//! the coset decomposition and the extension of the wall symbol from the
//! subgroup to the whole group.
//!
//! Generator roles are fixed by declaration order: s = 0, t = 1, u = 2.
//! The wall is the one attached to s.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::coxeter::{CanonicalElement, CoxeterOrder, CoxeterSystem};
use crate::error::{Error, Result};
use crate::geometry::halfspace_side;
use crate::group::{SubgroupPredicate, Z2Lattice};
use crate::scalar::ExactComplex;
use crate::symbol::{side_sign, Symbol};

const GEN_S: usize = 0;
const GEN_T: usize = 1;
const GEN_U: usize = 2;

#[derive(Debug, Default)]
struct LatticeCache {
    /// (a, b) -> canonical form of alpha^a beta^b; None when the element
    /// cannot be materialized under the system's word cap
    known: HashMap<(i64, i64), Option<CanonicalElement>>,
    reverse: HashMap<CanonicalElement, (i64, i64)>,
    covered: i64,
}

#[derive(Debug)]
struct Inner {
    system: CoxeterSystem,
    alpha: CanonicalElement,
    beta: CanonicalElement,
    coset_reps: Vec<CanonicalElement>,
    cache: RwLock<LatticeCache>,
}

/// Handle to the rank-2 translation subgroup of the affine triangle
/// group, its six coset representatives and the induced symbols.
#[derive(Debug, Clone)]
pub struct A2TildeSubgroup {
    inner: Arc<Inner>,
}

impl A2TildeSubgroup {
    /// Builds the subgroup data: checks the system shape, verifies that
    /// the two translations commute, and discovers the coset
    /// representatives by scanning ball(5). Each representative is the
    /// ShortLex-least member of its coset within that ball, so the result
    /// does not depend on scan order.
    pub fn new(system: CoxeterSystem) -> Result<Self> {
        if system.rank() != 3 {
            return Err(Error::WrongSystem);
        }
        for i in 0..3 {
            for j in 0..3 {
                if i != j && system.order(i, j) != CoxeterOrder::Finite(3) {
                    return Err(Error::WrongSystem);
                }
            }
        }
        let alpha = system.reduce(&[GEN_U, GEN_S, GEN_T, GEN_S])?;
        let beta = system.reduce(&[GEN_S, GEN_U, GEN_S, GEN_T])?;
        let ab = system.multiply(&alpha, &beta)?;
        let ba = system.multiply(&beta, &alpha)?;
        if ab != ba {
            return Err(Error::RepDiscoveryFailed(
                "generators of the translation subgroup do not commute".into(),
            ));
        }
        let mut cache = LatticeCache::default();
        cache.known.insert((0, 0), Some(CanonicalElement::identity()));
        cache.reverse.insert(CanonicalElement::identity(), (0, 0));
        let sub = A2TildeSubgroup {
            inner: Arc::new(Inner {
                system,
                alpha,
                beta,
                coset_reps: Vec::new(),
                cache: RwLock::new(cache),
            }),
        };
        let reps = sub.discover_reps()?;
        if reps.len() != 6 {
            return Err(Error::RepDiscoveryFailed(format!(
                "expected 6 coset representatives, found {}",
                reps.len()
            )));
        }
        let inner = Inner {
            system: sub.inner.system.clone(),
            alpha: sub.inner.alpha.clone(),
            beta: sub.inner.beta.clone(),
            coset_reps: reps,
            cache: RwLock::new(std::mem::take(&mut *sub.inner.cache.write().unwrap())),
        };
        Ok(A2TildeSubgroup {
            inner: Arc::new(inner),
        })
    }

    fn discover_reps(&self) -> Result<Vec<CanonicalElement>> {
        let candidates = self.inner.system.ball(5)?;
        self.discover_reps_from(&candidates)
    }

    /// Groups the candidates into cosets of the translation subgroup and
    /// takes the ShortLex-least member of each group, so the result does
    /// not depend on the candidate order.
    fn discover_reps_from(&self, candidates: &[CanonicalElement]) -> Result<Vec<CanonicalElement>> {
        let system = &self.inner.system;
        let mut groups: Vec<CanonicalElement> = Vec::new();
        for g in candidates {
            let mut found = None;
            for (i, rep) in groups.iter().enumerate() {
                let shifted = system.multiply(&system.invert(rep), g)?;
                if self.membership(&shifted)?.is_some() {
                    found = Some(i);
                    break;
                }
            }
            match found {
                Some(i) => {
                    if *g < groups[i] {
                        groups[i] = g.clone();
                    }
                }
                None => groups.push(g.clone()),
            }
        }
        groups.sort();
        Ok(groups)
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.inner.system
    }

    pub fn alpha(&self) -> &CanonicalElement {
        &self.inner.alpha
    }

    pub fn beta(&self) -> &CanonicalElement {
        &self.inner.beta
    }

    /// The six coset representatives, ShortLex sorted.
    pub fn coset_reps(&self) -> &[CanonicalElement] {
        &self.inner.coset_reps
    }

    /// The canonical form of alpha^a beta^b, or None when it cannot be
    /// built under the system's word cap.
    pub fn lattice_element(&self, a: i64, b: i64) -> Result<Option<CanonicalElement>> {
        let bound = a.unsigned_abs().max(b.unsigned_abs()) as i64;
        self.ensure_box(bound)?;
        Ok(self
            .inner
            .cache
            .read()
            .unwrap()
            .known
            .get(&(a, b))
            .cloned()
            .flatten())
    }

    /// Decides g = alpha^a beta^b by bounded search: exponents are
    /// searched within |a|,|b| <= l(g), which is safe because each extra
    /// translation factor moves the chamber at least one wall further.
    pub fn membership(&self, g: &CanonicalElement) -> Result<Option<(i64, i64)>> {
        let bound = g.length() as i64;
        self.ensure_box(bound)?;
        let cache = self.inner.cache.read().unwrap();
        match cache.reverse.get(g) {
            Some(&(a, b)) if a.unsigned_abs().max(b.unsigned_abs()) as i64 <= bound => {
                Ok(Some((a, b)))
            }
            _ => Ok(None),
        }
    }

    /// Grow the lattice table ring by ring. Each new point is reached by
    /// one alpha/beta step from an already-computed neighbor; points whose
    /// canonical form would exceed the word cap are recorded as absent.
    fn ensure_box(&self, bound: i64) -> Result<()> {
        {
            let cache = self.inner.cache.read().unwrap();
            if cache.covered >= bound {
                return Ok(());
            }
        }
        let mut cache = self.inner.cache.write().unwrap();
        let system = &self.inner.system;
        let steps = [
            ((1i64, 0i64), self.inner.alpha.clone()),
            ((-1, 0), system.invert(&self.inner.alpha)),
            ((0, 1), self.inner.beta.clone()),
            ((0, -1), system.invert(&self.inner.beta)),
        ];
        for r in (cache.covered + 1)..=bound {
            let ring: Vec<(i64, i64)> = ring_points(r);
            let mut pending = ring;
            // edge points resolve from the inner ring; corners may need a
            // same-ring neighbor, hence the fixpoint loop
            loop {
                let mut progressed = false;
                let mut still_pending = Vec::new();
                'point: for p in pending {
                    for ((da, db), step) in &steps {
                        let q = (p.0 - da, p.1 - db);
                        if let Some(Some(base)) = cache.known.get(&q) {
                            let value = match system.multiply(base, step) {
                                Ok(v) => Some(v),
                                Err(Error::WordTooLong { .. }) => None,
                                Err(e) => return Err(e),
                            };
                            if let Some(v) = &value {
                                debug_assert!(
                                    !cache.reverse.contains_key(v) || cache.reverse[v] == p,
                                    "lattice embedding collision at {p:?}"
                                );
                                cache.reverse.insert(v.clone(), p);
                            }
                            cache.known.insert(p, value);
                            progressed = true;
                            continue 'point;
                        }
                    }
                    still_pending.push(p);
                }
                if still_pending.is_empty() {
                    break;
                }
                if !progressed {
                    // every neighbor is absent: the whole remainder of the
                    // ring is out of cap range
                    for p in still_pending {
                        cache.known.insert(p, None);
                    }
                    break;
                }
                pending = still_pending;
            }
            cache.covered = r;
        }
        Ok(())
    }

    /// The extension of the wall symbol from the translation subgroup to
    /// the whole group: factor g = w_i * h with h in the subgroup and take
    /// the wall side of h.
    pub fn extension_symbol(&self) -> Symbol<CanonicalElement> {
        let sub = self.clone();
        Symbol::from_fn("mw[s] extended over cosets", move |g: &CanonicalElement| {
            let h = sub.factor(g)?.1;
            Ok(side_sign(halfspace_side(sub.system(), GEN_S, &h)))
        })
    }

    /// Factors g as (rep index, h) with h = rep⁻¹ g in the subgroup.
    pub fn factor(&self, g: &CanonicalElement) -> Result<(usize, CanonicalElement)> {
        let system = &self.inner.system;
        for (i, rep) in self.inner.coset_reps.iter().enumerate() {
            let h = system.multiply(&system.invert(rep), g)?;
            if self.membership(&h)?.is_some() {
                return Ok((i, h));
            }
        }
        Err(Error::DecompositionFailed)
    }

    /// The subgroup symbol read on exponent coordinates: the value at
    /// (a, b) is the wall side of alpha^a beta^b.
    pub fn lattice_symbol(&self) -> Symbol<(i64, i64)> {
        let sub = self.clone();
        Symbol::from_fn("mw[s] on the translation lattice", move |&(a, b)| {
            match sub.lattice_element(a, b)? {
                Some(w) => Ok(side_sign(halfspace_side(sub.system(), GEN_S, &w))),
                None => Err(Error::DecompositionFailed),
            }
        })
    }

    /// The diagonal subgroup generated by alpha*beta, in exponent
    /// coordinates; it is the part of the translation lattice fixing the
    /// positive root.
    pub fn diagonal_predicate(&self) -> SubgroupPredicate<(i64, i64)> {
        SubgroupPredicate::new("<alpha*beta> (diagonal a = b)", |&(a, b): &(i64, i64)| {
            a == b
        })
    }

    /// The derived orientation of the lattice symbol: the value taken on
    /// the alpha side of the diagonal (the side containing (1, 0)).
    pub fn derived_orientation(&self) -> Result<ExactComplex> {
        self.lattice_symbol().evaluate(&(1, 0))
    }

    pub fn lattice_group(&self) -> Z2Lattice {
        Z2Lattice
    }
}

fn ring_points(r: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            if a.abs().max(b.abs()) == r {
                out.push((a, b));
            }
        }
    }
    out
}
