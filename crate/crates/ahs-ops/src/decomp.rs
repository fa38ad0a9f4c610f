//! Tensor-product decompositions. The signed formal-sum algorithm reduces a
//! product `V_mu (x) V_lambda` to dominant components by running the shifted
//! weights `lambda + rho + nu` through the Weyl group; weight systems with
//! multiplicities come from a recursive multiplicity formula so that the
//! decomposition applies to any pair of modules within a dimension cap.
//!
//! On top of that sit the degree-one decomposition of a structure (verified
//! multiplicity-free), iterated straight-line chains, and an empirical
//! extremal-component witness.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::catalog::{AhsStructure, MultiplicityFreeCriterion};
use crate::error::{Error, Result};
use crate::rootsystem::{RootSystem, Weight};
use crate::{rat, Rat};

/// Default bound on the dimension of any module run through the weight
/// system oracle.
pub const DEFAULT_DIMENSION_CAP: u64 = 20_000;

/// A multiplicity-weighted set of dominant highest weights.
#[derive(Debug, Clone)]
pub struct FormalDecomposition {
    components: BTreeMap<Weight, i64>,
}

impl FormalDecomposition {
    pub fn components(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.components.iter().map(|(w, &m)| (w, m))
    }

    pub fn multiplicity(&self, w: &Weight) -> i64 {
        self.components.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.components.values().all(|&m| m == 1)
    }

    /// Total dimension: the multiplicity-weighted sum of component
    /// dimensions.
    pub fn total_dimension(&self, sys: &RootSystem) -> BigInt {
        let mut acc = BigInt::zero();
        for (w, &m) in &self.components {
            acc += sys.weyl_dimension(w).expect("components are dominant") * BigInt::from(m);
        }
        acc
    }
}

/// All weights of the irreducible module with highest weight `mu`, with
/// exact multiplicities. Fails when `mu` is not dominant integral or the
/// module dimension exceeds `cap`.
pub fn weight_system(mu: &Weight, cap: u64) -> Result<Vec<(Weight, u64)>> {
    let sys = mu.system().clone();
    if !mu.is_dominant_integral() {
        return Err(Error::NotDominant(mu.to_string()));
    }
    let dim = sys.weyl_dimension(mu)?;
    if dim > BigInt::from(cap) {
        return Err(Error::DimensionCap { dim: dim.to_string(), cap });
    }

    let mut ctx = MultiplicityContext::new(mu);
    let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
    let mut seen: std::collections::BTreeSet<Vec<Rat>> = Default::default();
    let mut frontier = vec![mu.clone()];
    out.insert(mu.clone(), 1);
    seen.insert(mu.canonical());
    // Every weight below the highest one can be raised back toward it by
    // some simple root, so walking simple-root steps downward and keeping
    // the points of nonzero multiplicity visits the whole weight system.
    while let Some(x) = frontier.pop() {
        for i in 0..sys.rank() {
            let y = &x - &sys.simple_root(i);
            if !seen.insert(y.canonical()) {
                continue;
            }
            let m = ctx.multiplicity(&y);
            if m > 0 {
                out.insert(y.clone(), m);
                frontier.push(y);
            }
        }
    }

    let total: u64 = out.values().sum();
    assert_eq!(BigInt::from(total), dim, "weight system must fill the module");
    Ok(out.into_iter().collect())
}

/// Recursive multiplicity bookkeeping for a fixed highest weight.
struct MultiplicityContext {
    sys: RootSystem,
    mu: Weight,
    rho: Weight,
    mu_shift_norm: Rat,
    positive_roots: Vec<Weight>,
    memo: BTreeMap<Vec<Rat>, u64>,
}

impl MultiplicityContext {
    fn new(mu: &Weight) -> Self {
        let sys = mu.system().clone();
        let rho = sys.rho();
        let shifted = mu + &rho;
        MultiplicityContext {
            mu_shift_norm: shifted.kd_inner(&shifted),
            positive_roots: sys.positive_roots(),
            sys,
            mu: mu.clone(),
            rho,
            memo: BTreeMap::new(),
        }
    }

    /// Is `mu - x` a non-negative integer combination of simple roots?
    fn is_below_mu(&self, x: &Weight) -> bool {
        match self.sys.simple_root_coords(&(&self.mu - x)) {
            Some(c) => c.iter().all(|v| v.is_integer() && !v.is_negative()),
            None => false,
        }
    }

    fn multiplicity(&mut self, x: &Weight) -> u64 {
        let dom = self.sys.dominantize(x).representative;
        let key = dom.canonical();
        if let Some(&m) = self.memo.get(&key) {
            return m;
        }
        let m = self.multiplicity_dominant(&dom);
        self.memo.insert(key, m);
        m
    }

    fn multiplicity_dominant(&mut self, d: &Weight) -> u64 {
        if !self.is_below_mu(d) {
            return 0;
        }
        if *d == self.mu {
            return 1;
        }
        // Sum over the root strings above d; every term lies strictly closer
        // to the highest weight, so the recursion bottoms out at mu.
        let mut num = Rat::zero();
        for beta in self.positive_roots.clone() {
            let mut j = 1u64;
            loop {
                let x = d + &beta.scaled(&rat(j as i64));
                if !self.is_below_mu(&x) {
                    break;
                }
                let m = self.multiplicity(&x);
                if m > 0 {
                    num += x.kd_inner(&beta) * rat(m as i64);
                }
                j += 1;
            }
        }
        num *= rat(2);
        let shifted = d + &self.rho;
        let den = &self.mu_shift_norm - shifted.kd_inner(&shifted);
        assert!(den.is_positive(), "multiplicity denominator is positive below mu");
        let m = num / den;
        assert!(m.is_integer() && !m.is_negative());
        use num_traits::ToPrimitive;
        m.to_integer().to_u64().expect("multiplicity fits in u64")
    }
}

/// The signed decomposition of `V_lambda (x) V_mu` given the weights of
/// `V_mu`: each shifted weight is reduced to its dominant representative,
/// wall terms drop, and signed multiplicities accumulate. The surviving
/// coefficients are the true multiplicities and are never negative.
pub fn klimyk(lambda: &Weight, mu_weights: &[(Weight, u64)]) -> Result<FormalDecomposition> {
    let sys = lambda.system().clone();
    if !lambda.is_dominant_integral() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let rho = sys.rho();
    let shifted = lambda + &rho;
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (nu, m) in mu_weights {
        let d = sys.dominantize(&(&shifted + nu));
        if d.sign == 0 {
            continue;
        }
        let target = &d.representative - &rho;
        *acc.entry(target).or_insert(0) += d.sign as i64 * *m as i64;
    }
    acc.retain(|_, m| *m != 0);
    for (w, m) in &acc {
        assert!(*m > 0, "signed sum left a negative multiplicity at {w}");
    }
    Ok(FormalDecomposition { components: acc })
}

/// Decomposition of (degree-one part) tensor `V_lambda` over the semisimple
/// algebra of `s`: always verified multiplicity-free; for the families whose
/// degree-one coefficients stay above -1 the component set is additionally
/// checked to be exactly the dominant translates `lambda + nu`.
pub fn decompose_g1_tensor(s: &AhsStructure, lambda: &Weight) -> Result<FormalDecomposition> {
    let dec = klimyk(lambda, s.g1_weights())?;
    for (w, m) in dec.components() {
        if m != 1 {
            return Err(Error::UnexpectedMultiplicity { weight: w.to_string(), mult: m });
        }
    }
    if s.smallness_check().criterion == MultiplicityFreeCriterion::AllCoefficientsGeqMinusOne {
        let expected: std::collections::BTreeSet<Weight> = s
            .g1_weights()
            .iter()
            .map(|(nu, _)| lambda + nu)
            .filter(|w| w.is_dominant())
            .collect();
        let actual: std::collections::BTreeSet<Weight> =
            dec.components().map(|(w, _)| w.clone()).collect();
        assert_eq!(actual, expected, "component set must be the dominant translates");
    }
    Ok(dec)
}

/// The chain `(lambda + k theta, ..., lambda + theta, lambda)` recording the
/// unique straight-line component of the k-fold iterated product; every link
/// is verified to appear in the decomposition of the previous stage.
#[derive(Debug, Clone)]
pub struct Chain {
    weights: Vec<Weight>,
}

impl Chain {
    /// Highest weight first: `weights()[0] = lambda + k theta`.
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn order(&self) -> u32 {
        (self.weights.len() - 1) as u32
    }

    pub fn target(&self) -> &Weight {
        &self.weights[0]
    }

    pub fn source(&self) -> &Weight {
        self.weights.last().unwrap()
    }
}

/// Validate the straight-line data `(lambda, theta, k)` and produce the
/// chain. `theta` must be extremal and every `lambda + j theta` dominant.
pub fn unique_directed_component(
    s: &AhsStructure,
    lambda: &Weight,
    theta: &Weight,
    k: u32,
) -> Result<Chain> {
    if k == 0 {
        return Err(Error::BadOrder("0".to_string()));
    }
    check_direction(s, theta)?;
    if !lambda.is_dominant_integral() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let mut chain = Vec::with_capacity(k as usize + 1);
    for j in 0..=k {
        let w = lambda + &theta.scaled(&rat(j as i64));
        if !w.is_dominant_integral() {
            return Err(Error::ChainNotDominant { j, k });
        }
        chain.push(w);
    }
    for j in 0..k as usize {
        let dec = decompose_g1_tensor(s, &chain[j])?;
        assert_eq!(
            dec.multiplicity(&chain[j + 1]),
            1,
            "straight-line link must appear exactly once"
        );
    }
    chain.reverse();
    Ok(Chain { weights: chain })
}

/// Reject non-extremal directions, with the zero weight of the odd conformal
/// family singled out.
pub fn check_direction(s: &AhsStructure, theta: &Weight) -> Result<()> {
    if theta.is_zero() {
        return Err(Error::ExceptionalOperator);
    }
    if !s.is_extremal(theta) {
        return Err(Error::NotExtremal(theta.to_string()));
    }
    Ok(())
}

/// Empirical check that the component with extremal weight `lambda + w mu`
/// appears in `V_lambda (x) V_mu` with multiplicity at least one. The Weyl
/// element is given as a word in simple reflections, applied right to left.
pub fn prv_witness(lambda: &Weight, mu: &Weight, word: &[usize], cap: u64) -> Result<bool> {
    let sys = lambda.system().clone();
    let mut image = mu.clone();
    for &i in word.iter().rev() {
        image = image.reflect(i);
    }
    let extremal = lambda + &image;
    let target = sys.dominantize(&extremal).representative;
    let dec = klimyk(lambda, &weight_system(mu, cap)?)?;
    Ok(dec.multiplicity(&target) >= 1)
}
