//! Buildings as W-metric chamber systems. Two concrete models are
//! provided, both with the acting group's elements as chambers and the
//! action by left multiplication:
//!
//! - the thin building of a Coxeter system, with distance g⁻¹h;
//! - the right-angled building of a graph product, whose distance is the
//!   vertex word of the syllable normal form.
//!
//! Apartments are never materialized: every check runs on the algebraic
//! form of the distance. Axioms are checked over materialized distance
//! tables so that deliberately corrupted tables can serve as negative
//! controls.

use serde::Serialize;

use crate::coxeter::{CanonicalElement, CoxeterSystem};
use crate::error::{Error, Result};
use crate::geometry::{classify, halfspace_side, nested_condition, RootRelation};
use crate::gp::{GPElement, GraphProduct, VertexOrder};
use crate::group::{commuting_generators, Group, SubgroupPredicate};
use crate::scalar::ExactComplex;
use crate::symbol::{side_sign, Symbol};
use crate::verify::{verify_cotlar, CotlarReport};

/// A chamber system with a Weyl distance valued in the type system.
/// Chambers are the acting group's elements; the base chamber is the
/// identity and the action is left multiplication.
pub trait Building: Group {
    fn type_system(&self) -> &CoxeterSystem;
    fn weyl_distance(&self, c: &Self::Elem, d: &Self::Elem) -> Result<CanonicalElement>;

    fn base_chamber(&self) -> Self::Elem {
        self.identity()
    }
}

impl Building for CoxeterSystem {
    fn type_system(&self) -> &CoxeterSystem {
        self
    }
    /// The thin building: distance g⁻¹h.
    fn weyl_distance(
        &self,
        c: &CanonicalElement,
        d: &CanonicalElement,
    ) -> Result<CanonicalElement> {
        self.multiply(&self.invert(c), d)
    }
}

impl Building for GraphProduct {
    fn type_system(&self) -> &CoxeterSystem {
        GraphProduct::type_system(self)
    }
    /// The vertex word of the syllable normal form of c⁻¹d, canonicalized
    /// in the right-angled type system.
    fn weyl_distance(&self, c: &GPElement, d: &GPElement) -> Result<CanonicalElement> {
        let diff = self.gp_multiply(&self.gp_invert(c), d)?;
        let word: Vec<usize> = diff.syllables().iter().map(|&(v, _)| v).collect();
        GraphProduct::type_system(self).reduce(&word)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct B2Failure {
    pub e: String,
    pub c: String,
    pub d: String,
    pub s: String,
    pub w: String,
    pub got: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct B3Failure {
    pub c: String,
    pub d: String,
    pub s: String,
    pub expected: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub radius: usize,
    pub chambers: usize,
    /// pairs violating "distance is the identity iff the chambers are equal"
    pub b1_failures: Vec<(String, String)>,
    /// pairs violating delta(C,D) = delta(D,C)^{-1}
    pub inverse_failures: Vec<(String, String)>,
    pub b2_failures: Vec<B2Failure>,
    pub b3_failures: Vec<B3Failure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.b1_failures.is_empty()
            && self.inverse_failures.is_empty()
            && self.b2_failures.is_empty()
            && self.b3_failures.is_empty()
    }
}

/// A materialized Weyl-distance table: chambers of ball(radius + 1) with
/// all pairwise distances. B1, B2 and the inverse law are checked on
/// ball(radius) pairs and triples; B3 existence searches the full table.
#[derive(Debug, Clone)]
pub struct DeltaTable {
    labels: Vec<String>,
    delta: Vec<Vec<CanonicalElement>>,
    type_system: CoxeterSystem,
    radius: usize,
    /// chambers of ball(radius) form a prefix of `labels`
    core: usize,
}

impl DeltaTable {
    pub fn materialize<B: Building>(building: &B, radius: usize) -> Result<Self> {
        let core_chambers = building.ball(radius)?;
        let all_chambers = building.ball(radius + 1)?;
        // keep the core ball as a prefix, then append the outer shell
        let mut chambers = core_chambers.clone();
        for c in &all_chambers {
            if !core_chambers.contains(c) {
                chambers.push(c.clone());
            }
        }
        let labels = chambers.iter().map(|c| building.render(c)).collect();
        let mut delta = Vec::with_capacity(chambers.len());
        for c in &chambers {
            let mut row = Vec::with_capacity(chambers.len());
            for d in &chambers {
                row.push(building.weyl_distance(c, d)?);
            }
            delta.push(row);
        }
        Ok(DeltaTable {
            labels,
            delta,
            type_system: building.type_system().clone(),
            radius,
            core: core_chambers.len(),
        })
    }

    /// Overwrites one table entry; the negative control for the axiom
    /// checker.
    pub fn corrupt_entry(&mut self, i: usize, j: usize, value: CanonicalElement) {
        self.delta[i][j] = value;
    }

    pub fn chamber_count(&self) -> usize {
        self.labels.len()
    }

    pub fn check(&self) -> Result<AxiomReport> {
        let ts = &self.type_system;
        let mut report = AxiomReport {
            radius: self.radius,
            chambers: self.core,
            b1_failures: Vec::new(),
            inverse_failures: Vec::new(),
            b2_failures: Vec::new(),
            b3_failures: Vec::new(),
        };
        for i in 0..self.core {
            for j in 0..self.core {
                let w = &self.delta[i][j];
                if w.is_identity() != (i == j) {
                    report
                        .b1_failures
                        .push((self.labels[i].clone(), self.labels[j].clone()));
                }
                if ts.invert(w) != self.delta[j][i] {
                    report
                        .inverse_failures
                        .push((self.labels[i].clone(), self.labels[j].clone()));
                }
            }
        }
        // B2: delta(E,C) = s and delta(C,D) = w imply delta(E,D) in
        // {sw, w}, and exactly sw when sw is longer.
        for e in 0..self.core {
            for c in 0..self.core {
                let s_dist = &self.delta[e][c];
                if s_dist.length() != 1 {
                    continue;
                }
                let s = s_dist.word()[0] as usize;
                for d in 0..self.core {
                    let w = &self.delta[c][d];
                    let sw = ts.multiply(s_dist, w)?;
                    let got = &self.delta[e][d];
                    let ok = if sw.length() > w.length() {
                        got == &sw
                    } else {
                        got == &sw || got == w
                    };
                    if !ok {
                        report.b2_failures.push(B2Failure {
                            e: self.labels[e].clone(),
                            c: self.labels[c].clone(),
                            d: self.labels[d].clone(),
                            s: ts.name(s).to_owned(),
                            w: ts.format_element(w),
                            got: ts.format_element(got),
                        });
                    }
                }
            }
        }
        // B3: for each pair and each generator, some chamber E of the
        // extended table has delta(E,C) = s and delta(E,D) = sw.
        for c in 0..self.core {
            for d in 0..self.core {
                let w = &self.delta[c][d];
                for s in 0..ts.rank() {
                    let sw = ts.multiply(&ts.generator(s)?, w)?;
                    let found = (0..self.chamber_count())
                        .any(|e| self.delta[e][c].word() == [s as u8] && self.delta[e][d] == sw);
                    if !found {
                        report.b3_failures.push(B3Failure {
                            c: self.labels[c].clone(),
                            d: self.labels[d].clone(),
                            s: ts.name(s).to_owned(),
                            expected: ts.format_element(&sw),
                        });
                    }
                }
            }
        }
        Ok(report)
    }
}

/// Materializes the distance table and checks B1-B3 plus the inverse law.
pub fn check_axioms<B: Building>(building: &B, radius: usize) -> Result<AxiomReport> {
    DeltaTable::materialize(building, radius)?.check()
}

/// The two-valued wall symbol of a building: the sign of the chamber
/// delta(C0, gC0) relative to the wall of `u` in the type system.
/// Requires the type system to satisfy the nested condition at `u`
/// (automatic for graph products).
pub fn building_symbol<B>(building: &B, u: usize) -> Result<Symbol<B::Elem>>
where
    B: Building + Clone + Send + Sync + 'static,
{
    let ts = building.type_system();
    if !nested_condition(ts, u) {
        return Err(Error::NestedConditionViolated(u));
    }
    let name = ts.name(u).to_owned();
    let b = building.clone();
    Ok(Symbol::from_fn(
        format!("building mw[{name}]"),
        move |g: &B::Elem| {
            let w = b.weyl_distance(&b.base_chamber(), g)?;
            Ok(side_sign(halfspace_side(b.type_system(), u, &w)))
        },
    ))
}

/// The distance-to-base subgroup of a building: chambers whose distance
/// from the base lies in the parabolic generated by the generators
/// commuting with `u`.
pub fn distance_parabolic_subgroup<B>(building: &B, u: usize) -> SubgroupPredicate<B::Elem>
where
    B: Building + Clone + Send + Sync + 'static,
{
    let t_u = commuting_generators(building.type_system(), u);
    let names: Vec<&str> = t_u
        .iter()
        .map(|&i| building.type_system().name(i))
        .collect();
    let descriptor = format!("delta(C0, gC0) in W_{{{}}}", names.join(","));
    let b = building.clone();
    SubgroupPredicate::new(descriptor, move |g: &B::Elem| {
        match b.weyl_distance(&b.base_chamber(), g) {
            Ok(w) => b.type_system().in_parabolic(&t_u, &w),
            Err(_) => false,
        }
    })
}

/// Brute-force Cotlar scan for the building symbol relative to the
/// distance parabolic subgroup.
pub fn verify_building_cotlar<B>(
    building: &B,
    u: usize,
    radius: usize,
) -> Result<CotlarReport<B::Elem>>
where
    B: Building + Clone + Send + Sync + 'static,
{
    let symbol = building_symbol(building, u)?;
    let g0 = distance_parabolic_subgroup(building, u);
    verify_cotlar(building, &symbol, &g0, radius)
}

#[derive(Debug, Clone, Serialize)]
pub struct TransitivityFailure {
    pub rule: &'static str,
    pub c: String,
    pub d: String,
    pub e: String,
    pub w_class: RootRelation,
    pub w1_class: RootRelation,
    pub w2_class: RootRelation,
}

#[derive(Debug, Clone, Serialize)]
pub struct TransitivityReport {
    pub radius: usize,
    pub triples_checked: u64,
    pub hypothesis_hits: u64,
    pub failures: Vec<TransitivityFailure>,
}

impl TransitivityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the root-inclusion composition rules on all chamber triples
/// (C, D, E) of ball(radius): with w = delta(D,C), w1 = delta(D,E) and
/// w2 = delta(C,E), strict inclusions compose through the middle chamber.
/// Every inclusion statement is encoded as the six-class value of the
/// corresponding distance.
pub fn transitivity_table_check<B>(
    building: &B,
    u: usize,
    radius: usize,
) -> Result<TransitivityReport>
where
    B: Building,
{
    use HalfSign::{Minus, Plus};
    let ts = building.type_system();
    if !nested_condition(ts, u) {
        return Err(Error::NestedConditionViolated(u));
    }
    let ball = building.ball(radius)?;
    let mut report = TransitivityReport {
        radius,
        triples_checked: 0,
        hypothesis_hits: 0,
        failures: Vec::new(),
    };
    // cache the class of every pairwise distance
    let n = ball.len();
    let mut class = vec![vec![RootRelation::FixesPositive; n]; n];
    for i in 0..n {
        for j in 0..n {
            let w = building.weyl_distance(&ball[i], &ball[j])?;
            class[i][j] = classify(ts, u, &w)?;
        }
    }
    for ci in 0..n {
        for di in 0..n {
            let w = class[di][ci]; // delta(D, C)
            for ei in 0..n {
                report.triples_checked += 1;
                let w1 = class[di][ei]; // delta(D, E)
                let w2 = class[ci][ei]; // delta(C, E)
                let mut expectations: Vec<(&'static str, RootRelation)> = Vec::new();
                // (i): w·H† < H+ and H+ < w1·H†' imply H† < w2·H†'
                if let (Some(dag), Some(dag1)) =
                    (maps_strictly_into(w, Plus), contains_strictly(w1, Plus))
                {
                    expectations.push(("i", strict_containment_class(dag, dag1)));
                }
                // (ii): w·H† < H- and H- < w1·H†' imply H† < w2·H†'
                if let (Some(dag), Some(dag1)) =
                    (maps_strictly_into(w, Minus), contains_strictly(w1, Minus))
                {
                    expectations.push(("ii", strict_containment_class(dag, dag1)));
                }
                // (iii): w·H+ = H- and H- < w1·H± imply H+ < w2·H±
                if w == RootRelation::SwapsRoots {
                    if let Some(pm) = contains_strictly(w1, Minus) {
                        expectations.push(("iii", strict_containment_class(Plus, pm)));
                    }
                }
                // (iv): w·H± < H+ and H+ = w1·H- imply H± < w2·H-
                if w1 == RootRelation::SwapsRoots {
                    if let Some(pm) = maps_strictly_into(w, Plus) {
                        expectations.push(("iv", strict_containment_class(pm, Minus)));
                    }
                }
                for (rule, expected) in expectations {
                    report.hypothesis_hits += 1;
                    if w2 != expected {
                        report.failures.push(TransitivityFailure {
                            rule,
                            c: building.render(&ball[ci]),
                            d: building.render(&ball[di]),
                            e: building.render(&ball[ei]),
                            w_class: w,
                            w1_class: w1,
                            w2_class: w2,
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum HalfSign {
    Plus,
    Minus,
}

/// If `class` asserts x·H^dag ⊊ H^target, returns dag.
fn maps_strictly_into(class: RootRelation, target: HalfSign) -> Option<HalfSign> {
    match (class, target) {
        (RootRelation::PosIntoPos, HalfSign::Plus) => Some(HalfSign::Plus),
        (RootRelation::NegIntoPos, HalfSign::Plus) => Some(HalfSign::Minus),
        (RootRelation::PosIntoNeg, HalfSign::Minus) => Some(HalfSign::Plus),
        (RootRelation::NegIntoNeg, HalfSign::Minus) => Some(HalfSign::Minus),
        _ => None,
    }
}

/// If `class` asserts H^source ⊊ x·H^dag, returns dag. These are the
/// complements of the strict-mapping statements.
fn contains_strictly(class: RootRelation, source: HalfSign) -> Option<HalfSign> {
    match (class, source) {
        (RootRelation::NegIntoNeg, HalfSign::Plus) => Some(HalfSign::Plus),
        (RootRelation::PosIntoNeg, HalfSign::Plus) => Some(HalfSign::Minus),
        (RootRelation::NegIntoPos, HalfSign::Minus) => Some(HalfSign::Plus),
        (RootRelation::PosIntoPos, HalfSign::Minus) => Some(HalfSign::Minus),
        _ => None,
    }
}

/// The class equivalent to the statement H^a ⊊ x·H^b.
fn strict_containment_class(a: HalfSign, b: HalfSign) -> RootRelation {
    match (a, b) {
        (HalfSign::Plus, HalfSign::Plus) => RootRelation::NegIntoNeg,
        (HalfSign::Plus, HalfSign::Minus) => RootRelation::PosIntoNeg,
        (HalfSign::Minus, HalfSign::Plus) => RootRelation::NegIntoPos,
        (HalfSign::Minus, HalfSign::Minus) => RootRelation::PosIntoPos,
    }
}

// ---------------------------------------------------------------------
// Finer multi-valued model
// ---------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct OrbitViolation {
    pub g: String,
    pub component_from: usize,
    pub component_to: usize,
    pub value_from: String,
    pub value_to: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstraintAudit {
    pub subgroup_descriptor: String,
    pub audit_radius: usize,
    pub elements_checked: u64,
    pub violations: Vec<OrbitViolation>,
}

/// The multi-valued model on a graph-product building: removing the wall
/// of the distinguished vertex `u` splits the chambers into one component
/// per vertex-group value (component 0 holds the base chamber), and the
/// symbol assigns one complex value per component.
#[derive(Debug, Clone)]
pub struct FinerModel {
    pub vertex: usize,
    pub component_count: usize,
    pub values: Vec<ExactComplex>,
    pub audit: ConstraintAudit,
    symbol: Symbol<GPElement>,
    g0: SubgroupPredicate<GPElement>,
}

impl FinerModel {
    pub fn symbol(&self) -> &Symbol<GPElement> {
        &self.symbol
    }

    pub fn subgroup(&self) -> &SubgroupPredicate<GPElement> {
        &self.g0
    }

    pub fn constraint_satisfied(&self) -> bool {
        self.audit.violations.is_empty()
    }

    /// Errors unless the orbit constraint audit came back clean.
    pub fn ensure_constraint(&self) -> Result<()> {
        if self.constraint_satisfied() {
            Ok(())
        } else {
            Err(Error::ConstraintViolated {
                violations: self.audit.violations.len(),
            })
        }
    }
}

/// Component of the chamber gC0 in the complement of the distinguished
/// wall: the value of the frontable leading u-syllable of g, 0 if none.
pub fn component_index(gp: &GraphProduct, u: usize, g: &GPElement) -> usize {
    for &(v, e) in g.syllables() {
        if v == u {
            return e as usize;
        }
        if !gp.commutes(v, u) {
            return 0;
        }
    }
    0
}

/// Builds the finer model: one value per component, with the subgroup
/// orbit constraint audited over ball(audit_radius). The audit moves each
/// component representative by every subgroup element of the ball and
/// demands value constancy along the induced maps.
pub fn finer_model(
    gp: &GraphProduct,
    u: usize,
    values: Vec<ExactComplex>,
    audit_radius: usize,
) -> Result<FinerModel> {
    let n = match gp.order(u) {
        VertexOrder::Finite(n) => n as usize,
        VertexOrder::Z => return Err(Error::InfiniteDistinguishedVertex),
    };
    if values.len() != n {
        return Err(Error::ValueCountMismatch {
            expected: n,
            got: values.len(),
        });
    }
    let ts = GraphProduct::type_system(gp);
    if !nested_condition(ts, u) {
        return Err(Error::NestedConditionViolated(u));
    }
    let g0 = distance_parabolic_subgroup(gp, u);
    // representatives u_(i) C0 of the components: the identity and the
    // single-syllable u-elements
    let mut reps = vec![gp.gp_identity()];
    for e in 1..n as i64 {
        reps.push(gp.syllable_element(u, e)?);
    }
    let mut audit = ConstraintAudit {
        subgroup_descriptor: g0.descriptor().to_owned(),
        audit_radius,
        elements_checked: 0,
        violations: Vec::new(),
    };
    for g in gp.gp_ball(audit_radius)? {
        if !g0.contains(&g) {
            continue;
        }
        audit.elements_checked += 1;
        for (i, rep) in reps.iter().enumerate() {
            let moved = gp.gp_multiply(&g, rep)?;
            let j = component_index(gp, u, &moved);
            if values[i] != values[j] {
                audit.violations.push(OrbitViolation {
                    g: gp.format_element(&g),
                    component_from: i,
                    component_to: j,
                    value_from: crate::scalar::fmt_exact(&values[i]),
                    value_to: crate::scalar::fmt_exact(&values[j]),
                });
            }
        }
    }
    let gp_clone = gp.clone();
    let values_clone = values.clone();
    let symbol = Symbol::from_fn(
        format!("component values at {}", gp.name(u)),
        move |g: &GPElement| Ok(values_clone[component_index(&gp_clone, u, g)].clone()),
    );
    Ok(FinerModel {
        vertex: u,
        component_count: n,
        values,
        audit,
        symbol,
        g0,
    })
}

/// Spec-facing wrapper: fails with `ConstraintViolated` when the orbit
/// audit finds a value mismatch.
pub fn finer_symbol(
    gp: &GraphProduct,
    u: usize,
    values: Vec<ExactComplex>,
    audit_radius: usize,
) -> Result<(Symbol<GPElement>, ConstraintAudit)> {
    let model = finer_model(gp, u, values, audit_radius)?;
    model.ensure_constraint()?;
    let FinerModel { audit, symbol, .. } = model;
    Ok((symbol, audit))
}
