//! Walls, roots and half-space combinatorics, all at the chamber level.
//!
//! A chamber is a group element; which side of the wall of generator `s`
//! the chamber `gK` lies on is decided purely by the length comparison
//! l(g) vs l(sg). Infinite half-space claims get finite certificates:
//! either an outright counterexample or a "verified to radius R" stamp.


use serde::Serialize;

use crate::coxeter::{CanonicalElement, CoxeterOrder, CoxeterSystem};
use crate::error::{Error, Result};
use crate::group::commuting_generators;

/// Which half-space of the wall H_s a chamber lies in. Positive is the
/// side of the fundamental chamber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum HalfSpaceSide {
    Positive,
    Negative,
}

/// The six possible relations between the translated roots g·H_s^± and
/// the base roots H_s^± when the nested condition holds; each variant
/// also names the algebraic class of g it characterizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RootRelation {
    /// g·H+ = H+  (g in the commuting parabolic W_{T_s})
    FixesPositive,
    /// g·H+ = H-  (g in W_{T_s}·s)
    SwapsRoots,
    /// g·H+ ⊊ H+  (g in (N_s \ W_{T_s})·s)
    PosIntoPos,
    /// g·H+ ⊊ H-  (g in s·(N_s \ W_{T_s})·s)
    PosIntoNeg,
    /// g·H- ⊊ H+  (g in N_s \ W_{T_s})
    NegIntoPos,
    /// g·H- ⊊ H-  (g in s·(N_s \ W_{T_s}))
    NegIntoNeg,
}

// Keep the variant list in one place for scans.
pub const ALL_RELATIONS: [RootRelation; 6] = [
    RootRelation::FixesPositive,
    RootRelation::SwapsRoots,
    RootRelation::PosIntoPos,
    RootRelation::PosIntoNeg,
    RootRelation::NegIntoPos,
    RootRelation::NegIntoNeg,
];

impl RootRelation {
    /// The relation satisfied by g⁻¹ when g satisfies `self`.
    pub fn inverse(self) -> Self {
        match self {
            RootRelation::FixesPositive => RootRelation::FixesPositive,
            RootRelation::SwapsRoots => RootRelation::SwapsRoots,
            RootRelation::PosIntoPos => RootRelation::NegIntoNeg,
            RootRelation::NegIntoNeg => RootRelation::PosIntoPos,
            RootRelation::PosIntoNeg => RootRelation::PosIntoNeg,
            RootRelation::NegIntoPos => RootRelation::NegIntoPos,
        }
    }

    /// Whether gK lies on the positive side when g satisfies `self`.
    pub fn chamber_side(self) -> HalfSpaceSide {
        match self {
            RootRelation::FixesPositive | RootRelation::PosIntoPos | RootRelation::NegIntoPos => {
                HalfSpaceSide::Positive
            }
            _ => HalfSpaceSide::Negative,
        }
    }
}

impl std::fmt::Display for RootRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = match self {
            RootRelation::FixesPositive => "g.H+ = H+",
            RootRelation::SwapsRoots => "g.H+ = H-",
            RootRelation::PosIntoPos => "g.H+ < H+",
            RootRelation::PosIntoNeg => "g.H+ < H-",
            RootRelation::NegIntoPos => "g.H- < H+",
            RootRelation::NegIntoNeg => "g.H- < H-",
        };
        f.write_str(text)
    }
}

/// Side of the wall H_s for the chamber gK: Positive iff l(g) < l(sg),
/// i.e. s is not a left descent of g.
pub fn halfspace_side(system: &CoxeterSystem, s: usize, g: &CanonicalElement) -> HalfSpaceSide {
    if system.is_left_descent(s, g) {
        HalfSpaceSide::Negative
    } else {
        HalfSpaceSide::Positive
    }
}

/// Whole-group nested condition relative to `s`: every other order in
/// row s is 2 or infinity.
pub fn nested_condition(system: &CoxeterSystem, s: usize) -> bool {
    nested_offenders(system, s).is_empty()
}

/// The (generator, order) pairs in row `s` that break the nested
/// condition.
pub fn nested_offenders(system: &CoxeterSystem, s: usize) -> Vec<(usize, CoxeterOrder)> {
    (0..system.rank())
        .filter(|&t| t != s)
        .filter_map(|t| match system.order(s, t) {
            CoxeterOrder::Finite(2) | CoxeterOrder::Infinite => None,
            other => Some((t, other)),
        })
        .collect()
}

/// Exact six-class classification of the action of `g` on the roots of
/// H_s. Requires the nested condition relative to `s`.
pub fn classify(system: &CoxeterSystem, s: usize, g: &CanonicalElement) -> Result<RootRelation> {
    if !nested_condition(system, s) {
        return Err(Error::NestedConditionViolated(s));
    }
    let t_s = commuting_generators(system, s);
    if system.in_parabolic(&t_s, g) {
        return Ok(RootRelation::FixesPositive);
    }
    let gs = system.multiply(g, &system.generator(s)?)?;
    if system.in_parabolic(&t_s, &gs) {
        return Ok(RootRelation::SwapsRoots);
    }
    let left = system.is_left_descent(s, g);
    let right = system.is_right_descent(s, g);
    Ok(match (left, right) {
        (true, true) => RootRelation::PosIntoNeg,
        (false, true) => RootRelation::PosIntoPos,
        (true, false) => RootRelation::NegIntoNeg,
        (false, false) => RootRelation::NegIntoPos,
    })
}

/// A chamber witnessing each of the four intersections g·H^± ∩ H^±; their
/// joint existence refutes all six nested relations outright.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerWitnesses {
    /// chamber in g·H+ ∩ H+
    pub pos_pos: CanonicalElement,
    /// chamber in g·H+ ∩ H-
    pub pos_neg: CanonicalElement,
    /// chamber in g·H- ∩ H+
    pub neg_pos: CanonicalElement,
    /// chamber in g·H- ∩ H-
    pub neg_neg: CanonicalElement,
}

/// Result of the brute-force scan. A small ball may be consistent with
/// more than one relation (its chambers may simply never enter the
/// half-spaces that would separate them), so the report keeps every
/// relation the scan failed to refute. A refutation, in contrast, is
/// outright: the four corner witnesses disprove all six relations at
/// every radius from here on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootRelationReport {
    pub verified_radius: usize,
    /// relations whose defining inclusions/equalities hold on every
    /// scanned chamber, in the fixed enumeration order
    pub consistent: Vec<RootRelation>,
    /// present exactly when `consistent` is empty
    pub refutation: Option<CornerWitnesses>,
}

impl RootRelationReport {
    /// The relation certified by this scan, when the evidence pins down
    /// exactly one.
    pub fn uniquely_certified(&self) -> Option<RootRelation> {
        match self.consistent.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    /// True when no scanned chamber contradicts `relation`.
    pub fn admits(&self, relation: RootRelation) -> bool {
        self.consistent.contains(&relation)
    }

    pub fn is_refuted(&self) -> bool {
        self.refutation.is_some()
    }
}

/// Brute-force check of the six root relations for `g` over every chamber
/// hK with h in ball(radius): membership of hK in g·H_s^± is decided by
/// the half-space side of g⁻¹h.
pub fn root_relation_check(
    system: &CoxeterSystem,
    s: usize,
    g: &CanonicalElement,
    radius: usize,
) -> Result<RootRelationReport> {
    if radius + g.length() + 1 > system.max_word_len() {
        return Err(Error::WordTooLong {
            len: radius + g.length() + 1,
            cap: system.max_word_len(),
        });
    }
    let ginv = system.invert(g);
    // buckets indexed by (image side of h, base side of h); each keeps its
    // ShortLex-first witness
    let mut corners: [[Option<CanonicalElement>; 2]; 2] = Default::default();
    for h in system.ball(radius)? {
        let base = halfspace_side(system, s, &h);
        let image = halfspace_side(system, s, &system.multiply(&ginv, &h)?);
        let slot = &mut corners[bucket(image)][bucket(base)];
        if slot.is_none() {
            *slot = Some(h);
        }
    }
    let inhabited = |img: HalfSpaceSide, base: HalfSpaceSide| -> bool {
        corners[bucket(img)][bucket(base)].is_some()
    };
    use HalfSpaceSide::{Negative as N, Positive as P};
    let consistent: Vec<RootRelation> = ALL_RELATIONS
        .into_iter()
        .filter(|relation| match relation {
            // g·H+ = H+: no chamber crosses sides
            RootRelation::FixesPositive => !inhabited(P, N) && !inhabited(N, P),
            // g·H+ = H-: no chamber agrees
            RootRelation::SwapsRoots => !inhabited(P, P) && !inhabited(N, N),
            // g·H+ ⊊ H+: image-positive stays base-positive, strictly
            RootRelation::PosIntoPos => !inhabited(P, N) && inhabited(N, P),
            // g·H+ ⊊ H-
            RootRelation::PosIntoNeg => !inhabited(P, P) && inhabited(N, N),
            // g·H- ⊊ H+
            RootRelation::NegIntoPos => !inhabited(N, N) && inhabited(P, P),
            // g·H- ⊊ H-
            RootRelation::NegIntoNeg => !inhabited(N, P) && inhabited(P, N),
        })
        .collect();
    let refutation = if consistent.is_empty() {
        // Every relation failed, which forces all four corners inhabited.
        let take = |img: HalfSpaceSide, base: HalfSpaceSide| -> CanonicalElement {
            corners[bucket(img)][bucket(base)]
                .clone()
                .expect("all four corners are inhabited when all relations fail")
        };
        Some(CornerWitnesses {
            pos_pos: take(P, P),
            pos_neg: take(P, N),
            neg_pos: take(N, P),
            neg_neg: take(N, N),
        })
    } else {
        None
    };
    Ok(RootRelationReport {
        verified_radius: radius,
        consistent,
        refutation,
    })
}

fn bucket(side: HalfSpaceSide) -> usize {
    match side {
        HalfSpaceSide::Positive => 0,
        HalfSpaceSide::Negative => 1,
    }
}

/// Answer to "does g stabilize the positive root H_s+?", with honesty
/// about how it was established.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizerCertificate {
    pub stabilizes: bool,
    /// true when the answer is a theorem (nested condition, or an outright
    /// counterexample); false when only ball-certified
    pub exact: bool,
    pub verified_radius: Option<usize>,
}

/// Stabilizer membership test: exact under the nested condition, a
/// radius-bounded certificate otherwise.
pub fn stabilizer_test(
    system: &CoxeterSystem,
    s: usize,
    g: &CanonicalElement,
    fallback_radius: usize,
) -> Result<StabilizerCertificate> {
    if nested_condition(system, s) {
        let stabilizes = classify(system, s, g)? == RootRelation::FixesPositive;
        return Ok(StabilizerCertificate {
            stabilizes,
            exact: true,
            verified_radius: None,
        });
    }
    let report = root_relation_check(system, s, g, fallback_radius)?;
    Ok(if report.admits(RootRelation::FixesPositive) {
        // no scanned chamber crosses the wall: certified up to the radius
        StabilizerCertificate {
            stabilizes: true,
            exact: false,
            verified_radius: Some(report.verified_radius),
        }
    } else {
        // some chamber crosses sides, which refutes equality outright
        StabilizerCertificate {
            stabilizes: false,
            exact: true,
            verified_radius: Some(report.verified_radius),
        }
    })
}
