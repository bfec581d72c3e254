//! Exact arithmetic in the group algebra: finitely supported coefficient
//! maps with convolution, the adjoint, the Plancherel trace (coefficient
//! at the identity), Fourier multipliers as diagonal scalings,
//! conditional expectations as coefficient restrictions, the operator
//! Cotlar defect, and even-exponent noncommutative norms via trace
//! powers.
//!
//! Verification paths run on exact rational complex coefficients; the
//! float coefficient type exists for norm-ratio sampling only.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::group::{Group, SubgroupPredicate};
use crate::scalar::{exact_pair, rat, ExactComplex, FloatComplex, Scalar};
use crate::symbol::Symbol;

/// A finitely supported element of the group algebra. Zero coefficients
/// are never stored, so emptiness means the zero element exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupAlgebraElement<E: Ord, S> {
    coeffs: BTreeMap<E, S>,
}

pub type ExactElement<E> = GroupAlgebraElement<E, ExactComplex>;
pub type FloatElement<E> = GroupAlgebraElement<E, FloatComplex>;

impl<E: Ord + Clone, S: Scalar> Default for GroupAlgebraElement<E, S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<E: Ord + Clone, S: Scalar> GroupAlgebraElement<E, S> {
    pub fn zero() -> Self {
        GroupAlgebraElement {
            coeffs: BTreeMap::new(),
        }
    }

    /// The delta function at one element.
    pub fn delta(e: E) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(e, S::one());
        GroupAlgebraElement { coeffs }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (E, S)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_assign_term(e, c);
        }
        out
    }

    fn add_assign_term(&mut self, e: E, c: S) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&e) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.coeffs.remove(&e);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.coeffs.insert(e, c);
            }
        }
    }

    pub fn coefficient(&self, e: &E) -> S {
        self.coeffs.get(e).cloned().unwrap_or_else(S::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &E> {
        self.coeffs.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&E, &S)> {
        self.coeffs.iter()
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_assign_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_assign_term(e.clone(), S::zero().sub(c));
        }
        out
    }

    pub fn scale(&self, factor: &S) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .map(|(e, c)| (e.clone(), c.mul(factor))),
        )
    }

    /// Convolution product: (a*b)(k) = sum over gh = k of a(g) b(h).
    pub fn mul<G: Group<Elem = E>>(&self, group: &G, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (g, cg) in &self.coeffs {
            for (h, ch) in &other.coeffs {
                let k = group.multiply(g, h)?;
                out.add_assign_term(k, cg.mul(ch));
            }
        }
        Ok(out)
    }

    /// Adjoint: conjugate coefficients at inverted elements.
    pub fn adjoint<G: Group<Elem = E>>(&self, group: &G) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .map(|(e, c)| (group.invert(e), c.conj())),
        )
    }

    /// The Plancherel trace: the coefficient at the identity.
    pub fn trace<G: Group<Elem = E>>(&self, group: &G) -> S {
        self.coefficient(&group.identity())
    }

    /// Diagonal action of a multiplier symbol.
    pub fn apply_symbol(&self, symbol: &Symbol<E>) -> Result<Self> {
        let mut out = Self::zero();
        for (e, c) in &self.coeffs {
            let m = S::from_exact(&symbol.evaluate(e)?);
            out.add_assign_term(e.clone(), c.mul(&m));
        }
        Ok(out)
    }

    /// Conditional expectation onto the subgroup: restrict coefficients.
    pub fn expectation(&self, g0: &SubgroupPredicate<E>) -> Self {
        GroupAlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| g0.contains(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// The complementary expectation: coefficients outside the subgroup.
    pub fn expectation_perp(&self, g0: &SubgroupPredicate<E>) -> Self {
        GroupAlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| !g0.contains(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// tau((f* f)^k), the 2k-th power of the even noncommutative norm.
    pub fn trace_power<G: Group<Elem = E>>(&self, group: &G, k: u32) -> Result<S> {
        let base = self.adjoint(group).mul(group, self)?;
        let mut acc = base.clone();
        for _ in 1..k {
            acc = acc.mul(group, &base)?;
        }
        Ok(acc.trace(group))
    }

    /// The even noncommutative norm ||f||_{2k} = tau((f* f)^k)^{1/2k},
    /// reported as a float.
    pub fn lp_norm_even<G: Group<Elem = E>>(&self, group: &G, k: u32) -> Result<f64> {
        let power = self.trace_power(group, k)?;
        // the trace of a positive element is real and nonnegative
        Ok(power.abs_sq_f64().sqrt().powf(1.0 / (2.0 * k as f64)))
    }
}

/// The operator-level Cotlar defect
///   Eperp[ T(f)T(f)* - T(fT(f)*) - T(fT(f)*)* + T(T(ff*)*) ],
/// which vanishes exactly when the symbol satisfies the pairwise identity
/// relative to the subgroup.
pub fn cotlar_defect<G: Group, S: Scalar>(
    group: &G,
    symbol: &Symbol<G::Elem>,
    g0: &SubgroupPredicate<G::Elem>,
    f: &GroupAlgebraElement<G::Elem, S>,
) -> Result<GroupAlgebraElement<G::Elem, S>> {
    let tf = f.apply_symbol(symbol)?;
    let tf_star = tf.adjoint(group);
    let term1 = tf.mul(group, &tf_star)?;
    let term2 = f.mul(group, &tf_star)?.apply_symbol(symbol)?;
    let term3 = term2.adjoint(group);
    let ff_star = f.mul(group, &f.adjoint(group))?;
    let term4 = ff_star
        .apply_symbol(symbol)?
        .adjoint(group)
        .apply_symbol(symbol)?;
    Ok(term1
        .sub(&term2)
        .sub(&term3)
        .add(&term4)
        .expectation_perp(g0))
}

#[derive(Debug, Clone, Serialize)]
pub struct ResidualReport {
    pub numeric_mode: &'static str,
    /// true iff the defect element is identically zero (exact in exact
    /// mode: zero coefficients are never stored)
    pub exact_zero: bool,
    pub defect_support_size: usize,
    /// the largest coefficient modulus, as a float for display
    pub residual_sup: f64,
    /// rendering of a coefficient attaining the supremum, when nonzero
    pub max_coefficient: Option<String>,
}

/// Computes the Cotlar defect of `f` and summarizes it.
pub fn cotlar_residual<G: Group, S: Scalar>(
    group: &G,
    symbol: &Symbol<G::Elem>,
    g0: &SubgroupPredicate<G::Elem>,
    f: &GroupAlgebraElement<G::Elem, S>,
    numeric_mode: &'static str,
) -> Result<ResidualReport> {
    let defect = cotlar_defect(group, symbol, g0, f)?;
    let mut residual_sup = 0.0f64;
    let mut max_coefficient = None;
    for (_, c) in defect.terms() {
        let a = c.abs_sq_f64().sqrt();
        if a > residual_sup {
            residual_sup = a;
            max_coefficient = Some(c.render());
        }
    }
    Ok(ResidualReport {
        numeric_mode,
        exact_zero: defect.is_zero(),
        defect_support_size: defect.support_size(),
        residual_sup,
        max_coefficient,
    })
}

/// Runs `samples` seeded residual computations over random exact test
/// functions supported on ball(radius). The sample stream is a pure
/// function of the seed.
pub fn residual_campaign<G: Group>(
    group: &G,
    symbol: &Symbol<G::Elem>,
    g0: &SubgroupPredicate<G::Elem>,
    radius: usize,
    samples: u32,
    seed: u64,
) -> Result<Vec<(usize, ResidualReport)>> {
    let ball = group.ball(radius)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(samples as usize);
    for _ in 0..samples {
        let f: ExactElement<G::Elem> = sample_exact_element(&mut rng, &ball);
        let report = cotlar_residual(group, symbol, g0, &f, "exact")?;
        out.push((f.support_size(), report));
    }
    Ok(out)
}

/// Deterministic sampler for exact elements: coefficients are small
/// Gaussian-free integers re + im*i with re, im in -3..=3.
pub fn sample_exact_element<E: Ord + Clone>(
    rng: &mut ChaCha8Rng,
    ball: &[E],
) -> ExactElement<E> {
    let mut terms = Vec::new();
    for e in ball {
        // keep the support sparse
        if rng.gen_bool(0.5) {
            continue;
        }
        let re = rng.gen_range(-3i64..=3);
        let im = rng.gen_range(-3i64..=3);
        terms.push((e.clone(), exact_pair(rat(re), rat(im))));
    }
    ExactElement::from_terms(terms)
}

fn sample_float_element<E: Ord + Clone>(rng: &mut ChaCha8Rng, ball: &[E]) -> FloatElement<E> {
    let mut terms = Vec::new();
    for e in ball {
        if rng.gen_bool(0.5) {
            continue;
        }
        let re: f64 = rng.gen_range(-1.0..=1.0);
        let im: f64 = rng.gen_range(-1.0..=1.0);
        terms.push((e.clone(), FloatComplex::new(re, im)));
    }
    FloatElement::from_terms(terms)
}

/// The exponent in the reference bound shape (p^2/(p-1))^alpha.
pub fn reference_alpha() -> f64 {
    (1.0 + 2f64.sqrt()).log2()
}

#[derive(Debug, Clone, Serialize)]
pub struct RatioReport {
    pub k: u32,
    pub p: u32,
    pub samples_requested: u32,
    pub samples_used: u32,
    pub support_radius: usize,
    pub seed: u64,
    pub max_ratio: f64,
    pub mean_ratio: f64,
    /// the shape (p^2/(p-1))^alpha of the boundedness estimate; the
    /// absolute constant in front of it is not known, so no pass/fail
    /// judgment is attached
    pub reference_shape: f64,
    pub alpha: f64,
}

/// Samples ||T_m f||_{2k} / ||f||_{2k} over seeded random finitely
/// supported f and reports the max and mean alongside the reference
/// bound shape. Reporting only; nothing is asserted.
pub fn ratio_report<G: Group>(
    group: &G,
    symbol: &Symbol<G::Elem>,
    k: u32,
    support_radius: usize,
    samples: u32,
    seed: u64,
) -> Result<RatioReport> {
    let ball = group.ball(support_radius)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_ratio = 0.0f64;
    let mut sum = 0.0f64;
    let mut used = 0u32;
    for _ in 0..samples {
        let f = sample_float_element(&mut rng, &ball);
        if f.is_zero() {
            continue;
        }
        let denom = f.lp_norm_even(group, k)?;
        if denom == 0.0 {
            continue;
        }
        let numer = f.apply_symbol(symbol)?.lp_norm_even(group, k)?;
        let ratio = numer / denom;
        max_ratio = max_ratio.max(ratio);
        sum += ratio;
        used += 1;
    }
    let p = 2 * k;
    let alpha = reference_alpha();
    let reference_shape = ((p as f64).powi(2) / (p as f64 - 1.0)).powf(alpha);
    Ok(RatioReport {
        k,
        p,
        samples_requested: samples,
        samples_used: used,
        support_radius,
        seed,
        max_ratio,
        mean_ratio: if used > 0 { sum / used as f64 } else { 0.0 },
        reference_shape,
        alpha,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::systems::*;
    use crate::coxeter::CanonicalElement;
    use crate::group::{parabolic_subgroup, trivial_subgroup};
    use crate::scalar::{exact, exact_i, ratio};
    use crate::symbol::mw_symbol;
    use crate::Symbol;
    use std::collections::BTreeSet;

    type Elem = ExactElement<CanonicalElement>;

    #[test]
    fn convolution_of_deltas_multiplies() {
        let a2 = a2();
        let s = a2.generator(0).unwrap();
        let t = a2.generator(1).unwrap();
        let st = a2.reduce(&[0, 1]).unwrap();
        let prod = Elem::delta(s.clone())
            .mul(&a2, &Elem::delta(t.clone()))
            .unwrap();
        assert_eq!(prod, Elem::delta(st));
    }

    #[test]
    fn square_of_one_plus_involution() {
        // the rank-1 system is the two-element group
        let z2 = crate::coxeter::CoxeterSystem::new(
            vec!["s".into()],
            vec![vec![crate::coxeter::CoxeterOrder::Finite(1)]],
        )
        .unwrap();
        let f = Elem::from_terms([
            (z2.identity(), exact(1)),
            (z2.generator(0).unwrap(), exact(1)),
        ]);
        let sq = f.mul(&z2, &f).unwrap();
        assert_eq!(sq.coefficient(&z2.identity()), exact(2));
        assert_eq!(sq.coefficient(&z2.generator(0).unwrap()), exact(2));

        // ||delta_e + delta_s||_4 = 8^(1/4): tau((f* f)^2) = 8 exactly
        assert_eq!(f.trace_power(&z2, 2).unwrap(), exact(8));
        let norm = f.lp_norm_even(&z2, 2).unwrap();
        assert!((norm - 8f64.powf(0.25)).abs() < 1e-12);
    }

    #[test]
    fn bilinearity_on_random_supports() {
        let d = d_infinity();
        let ball = d.ball(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let a = sample_exact_element(&mut rng, &ball);
            let b = sample_exact_element(&mut rng, &ball);
            let c = sample_exact_element(&mut rng, &ball);
            let lhs = a.mul(&d, &b.add(&c)).unwrap();
            let rhs = a.mul(&d, &b).unwrap().add(&a.mul(&d, &c).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn adjoint_is_an_involution_and_antihomomorphism() {
        let d = d_infinity();
        let ball = d.ball(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let a = sample_exact_element(&mut rng, &ball);
            let b = sample_exact_element(&mut rng, &ball);
            assert_eq!(a.adjoint(&d).adjoint(&d), a);
            let lhs = a.mul(&d, &b).unwrap().adjoint(&d);
            let rhs = b.adjoint(&d).mul(&d, &a.adjoint(&d)).unwrap();
            assert_eq!(lhs, rhs);
        }
        // ((2+i) delta_g)* = (2-i) delta_{g^-1}
        let g = d.reduce(&[0, 1]).unwrap();
        let a = Elem::delta(g.clone()).scale(&exact_pair(rat(2), rat(1)));
        let expected =
            Elem::delta(d.invert(&g)).scale(&exact_pair(rat(2), rat(-1)));
        assert_eq!(a.adjoint(&d), expected);
    }

    #[test]
    fn trace_properties() {
        let d = d_infinity();
        assert_eq!(Elem::delta(d.identity()).trace(&d), exact(1));
        assert_eq!(Elem::delta(d.generator(0).unwrap()).trace(&d), exact(0));

        let ball = d.ball(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..10 {
            let a = sample_exact_element(&mut rng, &ball);
            let b = sample_exact_element(&mut rng, &ball);
            // traciality
            assert_eq!(
                a.mul(&d, &b).unwrap().trace(&d),
                b.mul(&d, &a).unwrap().trace(&d)
            );
            // Plancherel: tau(a* a) = sum of |coefficients|^2
            let norm_sq = a.adjoint(&d).mul(&d, &a).unwrap().trace(&d);
            let expected = a.terms().fold(exact(0), |acc, (_, c)| {
                acc + exact_pair(crate::scalar::abs_sq(c), rat(0))
            });
            assert_eq!(norm_sq, expected);
        }
    }

    #[test]
    fn multiplier_is_diagonal_linear_and_commuting() {
        let d = d_infinity();
        let m = mw_symbol(&d, 0);
        let m2 = mw_symbol(&d, 1);
        let g = d.reduce(&[1, 0]).unwrap();
        assert_eq!(
            Elem::delta(g.clone()).apply_symbol(&m).unwrap(),
            Elem::delta(g.clone()).scale(&m.evaluate(&g).unwrap())
        );
        let one = Symbol::constant(exact(1));
        let ball = d.ball(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..10 {
            let a = sample_exact_element(&mut rng, &ball);
            assert_eq!(a.apply_symbol(&one).unwrap(), a);
            let ab = a.apply_symbol(&m).unwrap().apply_symbol(&m2).unwrap();
            let ba = a.apply_symbol(&m2).unwrap().apply_symbol(&m).unwrap();
            assert_eq!(ab, ba);
        }
    }

    #[test]
    fn expectation_restricts_and_preserves_trace() {
        let p = pgl2z();
        let g0 = parabolic_subgroup(&p, BTreeSet::from([2]));
        let ball = p.ball(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..10 {
            let a = sample_exact_element(&mut rng, &ball);
            let ea = a.expectation(&g0);
            // idempotent, trace preserving, complement decomposition
            assert_eq!(ea.expectation(&g0), ea);
            assert_eq!(ea.trace(&p), a.trace(&p));
            assert_eq!(ea.add(&a.expectation_perp(&g0)), a);
            // bimodularity over the subgroup algebra
            let y1 = Elem::delta(p.generator(2).unwrap()).scale(&exact_i());
            let y2 = Elem::delta(p.generator(2).unwrap()).scale(&exact(2));
            let lhs = y1
                .mul(&p, &a)
                .unwrap()
                .mul(&p, &y2)
                .unwrap()
                .expectation(&g0);
            let rhs = y1
                .mul(&p, &ea)
                .unwrap()
                .mul(&p, &y2)
                .unwrap();
            assert_eq!(lhs, rhs);
        }
        // support fully inside/outside
        let inside = Elem::delta(p.generator(2).unwrap());
        assert_eq!(inside.expectation(&g0), inside);
        let outside = Elem::delta(p.generator(0).unwrap());
        assert!(outside.expectation(&g0).is_zero());
    }

    #[test]
    fn residual_vanishes_exactly_when_symbol_cotlar_holds() {
        let d = d_infinity();
        let m = mw_symbol(&d, 0);
        let g0 = trivial_subgroup(d.identity());
        // the worked example: f = delta_e + 2 delta_s + i delta_st
        let f = Elem::from_terms([
            (d.identity(), exact(1)),
            (d.generator(0).unwrap(), exact(2)),
            (d.reduce(&[0, 1]).unwrap(), exact_i()),
        ]);
        let report = cotlar_residual(&d, &m, &g0, &f, "exact").unwrap();
        assert!(report.exact_zero, "{report:?}");
        assert_eq!(report.residual_sup, 0.0);

        // f = delta_e alone cancels for any plus/minus-one symbol
        let f = Elem::delta(d.identity());
        let report = cotlar_residual(&d, &m, &g0, &f, "exact").unwrap();
        assert!(report.exact_zero);
    }

    #[test]
    fn residual_detects_the_affine_counterexample() {
        // for a violating pair (g, h), the defect coefficient at g is
        //   f(h) conj(f(g^-1 h)) (m(h) - m(g)) (m(g^-1 h) - m(g^-1)),
        // so the witnessing function is supported on {h, g^-1 h}
        let a2t = a2_tilde().with_max_word_len(24);
        let m = mw_symbol(&a2t, 0);
        let g0 = trivial_subgroup(a2t.identity());
        let scan = crate::verify::verify_cotlar(&a2t, &m, &g0, 4).unwrap();
        let violation = scan.violations.first().expect("the scan finds a violating pair");
        let shifted = a2t
            .multiply(&a2t.invert(&violation.g), &violation.h)
            .unwrap();
        let f = Elem::from_terms([(violation.h.clone(), exact(1)), (shifted, exact(1))]);
        let report = cotlar_residual(&a2t, &m, &g0, &f, "exact").unwrap();
        assert!(!report.exact_zero);
        assert!(report.residual_sup > 0.0);
        let defect = cotlar_defect(&a2t, &m, &g0, &f).unwrap();
        assert!(!defect.coefficient(&violation.g).is_zero());
    }

    #[test]
    fn residual_vanishes_with_a_nontrivial_subgroup() {
        // the pentagon system relative to the commuting parabolic: the
        // symbol-level scan is clean, so every defect must vanish exactly
        let pent = cycle_right_angled(5);
        let m = mw_symbol(&pent, 0);
        let g0 = crate::group::parabolic_subgroup(
            &pent,
            crate::group::commuting_generators(&pent, 0),
        );
        let ball = pent.ball(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for _ in 0..15 {
            let f = sample_exact_element(&mut rng, &ball);
            let report = cotlar_residual(&pent, &m, &g0, &f, "exact").unwrap();
            assert!(report.exact_zero, "{report:?}");
        }
    }

    #[test]
    fn norms_are_translation_invariant_and_scale() {
        let d = d_infinity();
        let ball = d.ball(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let g = d.reduce(&[1, 0]).unwrap();
        for _ in 0..10 {
            let f = sample_exact_element(&mut rng, &ball);
            let shifted = Elem::delta(g.clone()).mul(&d, &f).unwrap();
            for k in 1..=2 {
                assert_eq!(
                    f.trace_power(&d, k).unwrap(),
                    shifted.trace_power(&d, k).unwrap()
                );
            }
        }
        // unitaries have norm one; k = 1 is the Euclidean norm
        let u = Elem::delta(g);
        for k in 1..=3 {
            assert!((u.lp_norm_even(&d, k).unwrap() - 1.0).abs() < 1e-12);
        }
        let f = Elem::from_terms([
            (d.identity(), exact_pair(ratio(1, 2), rat(0))),
            (d.generator(0).unwrap(), exact(2)),
        ]);
        let l2 = f.lp_norm_even(&d, 1).unwrap();
        assert!((l2 - (0.25f64 + 4.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn ratio_report_is_deterministic_and_trivial_for_constant_symbols() {
        let d = d_infinity();
        let one = Symbol::constant(exact(1));
        let r1 = ratio_report(&d, &one, 2, 2, 50, 7).unwrap();
        let r2 = ratio_report(&d, &one, 2, 2, 50, 7).unwrap();
        assert_eq!(r1.max_ratio, r2.max_ratio);
        assert!((r1.max_ratio - 1.0).abs() < 1e-9);
        assert!((r1.mean_ratio - 1.0).abs() < 1e-9);

        let m = mw_symbol(&d, 0);
        let r = ratio_report(&d, &m, 2, 2, 50, 7).unwrap();
        assert!(r.max_ratio.is_finite() && r.max_ratio > 0.0);
        assert!(r.reference_shape > 0.0);
        assert!((r.alpha - 1.2715533).abs() < 1e-6);
    }
}
