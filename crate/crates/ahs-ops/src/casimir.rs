//! Casimir eigenvalues on the semisimple side, the component constants
//! governing the bracket homomorphism, the arithmetic of the constant ladder
//! along a straight-line chain, the invariance conformal weight, and the
//! extraction of `(lambda, theta, k)` data from an ambient positive root.

use num_traits::{One, Signed, Zero};

use crate::catalog::AhsStructure;
use crate::decomp::{check_direction, decompose_g1_tensor};
use crate::error::{Error, Result};
use crate::rootsystem::Weight;
use crate::{fmt_rat, rat, ratio, Rat};

/// Casimir eigenvalue `(lambda, lambda + 2 rho)` of the irreducible module
/// with highest weight `lambda`, under the owner's finalized form.
pub fn casimir_eigenvalue(lambda: &Weight) -> Rat {
    let two_rho = lambda.system().rho().scaled(&rat(2));
    lambda.inner(&(lambda + &two_rho))
}

/// The constant attached to a component `mu` of the product of the
/// degree-one module with `V_lambda`: half the Casimir defect
/// `-[C(mu) - C(lambda) - C(alpha)] / 2`. The bracket homomorphism acts on
/// that component as `w - c`.
pub fn c_constant(s: &AhsStructure, lambda: &Weight, mu: &Weight) -> Rat {
    let c = casimir_eigenvalue(mu) - casimir_eigenvalue(lambda) - casimir_eigenvalue(s.alpha());
    ratio(-1, 2) * c
}

/// The double-commutator constants: one per component of the tensor square
/// of the degree-one module, `A_i = -(c_{alpha, alpha_i} - 1) / 2`. The
/// Cartan-square component always carries `(|alpha|^2 + 1) / 2`.
pub fn a_constants(s: &AhsStructure) -> Result<Vec<(Weight, Rat)>> {
    let dec = decompose_g1_tensor(s, s.alpha())?;
    let out: Vec<(Weight, Rat)> = dec
        .components()
        .map(|(mu, _)| {
            let a = ratio(-1, 2) * (c_constant(s, s.alpha(), mu) - rat(1));
            (mu.clone(), a)
        })
        .collect();
    let cartan_square = s.alpha().scaled(&rat(2));
    let a1 = &out
        .iter()
        .find(|(mu, _)| *mu == cartan_square)
        .expect("Cartan square component is always present")
        .1;
    assert_eq!(a1, s.a1(), "Cartan-square constant must match the closed form");
    Ok(out)
}

/// The ladder `c_0, ..., c_{k-1}` of component constants along a
/// straight-line chain, with the exact arithmetic it satisfies:
/// `c_0 = (alpha, rho) - (theta, lambda + rho)` and constant decrements
/// `|alpha|^2`.
#[derive(Debug, Clone)]
pub struct CLadder {
    pub lambda: Weight,
    pub theta: Weight,
    pub values: Vec<Rat>,
    pub alpha_norm_sq: Rat,
}

/// `c_0 = (alpha, rho) - (theta, lambda + rho)`, valid for extremal theta.
pub fn c_zero(s: &AhsStructure, lambda: &Weight, theta: &Weight) -> Rat {
    let rho = s.g0s().rho();
    s.alpha().inner(&rho) - theta.inner(&(lambda + &rho))
}

/// Build the ladder for `(lambda, theta, k)`; every rung is cross-checked
/// against the Casimir-defect route.
pub fn c_ladder(s: &AhsStructure, lambda: &Weight, theta: &Weight, k: u32) -> Result<CLadder> {
    if k == 0 {
        return Err(Error::BadOrder("0".to_string()));
    }
    check_direction(s, theta)?;
    if !lambda.is_dominant_integral() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    for j in 0..=k {
        if !(lambda + &theta.scaled(&rat(j as i64))).is_dominant_integral() {
            return Err(Error::ChainNotDominant { j, k });
        }
    }
    let alpha_norm_sq = s.alpha().norm_sq();
    let c0 = c_zero(s, lambda, theta);
    let mut values = Vec::with_capacity(k as usize);
    for j in 0..k {
        let cj = &c0 - rat(j as i64) * &alpha_norm_sq;
        // Independent route through the Casimir defect of consecutive rungs.
        let lj = lambda + &theta.scaled(&rat(j as i64));
        let lj1 = lambda + &theta.scaled(&rat(j as i64 + 1));
        assert_eq!(cj, c_constant(s, &lj, &lj1), "ladder rung mismatch");
        values.push(cj);
    }
    Ok(CLadder { lambda: lambda.clone(), theta: theta.clone(), values, alpha_norm_sq })
}

/// The unique conformal weight making the straight-line projection of the
/// k-th iterated invariant differential equivariant:
/// `w = (alpha - theta, rho) - (k-1)/2 (|alpha|^2 + 1) - (theta, lambda)`.
/// Evaluated twice, through the closed form and through the balance
/// equation `k w + k(k-1)/2 - sum c_j = 0`.
pub fn conformal_weight(
    s: &AhsStructure,
    lambda: &Weight,
    theta: &Weight,
    k: u32,
) -> Result<Rat> {
    let ladder = c_ladder(s, lambda, theta, k)?;
    let rho = s.g0s().rho();
    let kk = rat(k as i64);
    let closed = (s.alpha() - theta).inner(&rho)
        - ratio(k as i64 - 1, 2) * (&ladder.alpha_norm_sq + rat(1))
        - theta.inner(lambda);
    let sum: Rat = ladder.values.iter().fold(Rat::zero(), |acc, c| acc + c);
    let balanced = (sum - ratio((k as i64) * (k as i64 - 1), 2)) / kk;
    assert_eq!(closed, balanced, "the two conformal-weight routes must agree");
    Ok(closed)
}

/// A validated standard-operator datum: the module data, the extremal
/// direction, the order, and the invariance conformal weight.
#[derive(Debug, Clone)]
pub struct OperatorData {
    pub lambda: Weight,
    pub theta: Weight,
    pub k: u32,
    pub w: Rat,
    pub mu: Weight,
}

/// Build the datum directly from `(lambda, theta, k)`.
pub fn operator_data(
    s: &AhsStructure,
    lambda: &Weight,
    theta: &Weight,
    k: u32,
) -> Result<OperatorData> {
    let w = conformal_weight(s, lambda, theta, k)?;
    let mu = lambda + &theta.scaled(&rat(k as i64));
    Ok(OperatorData { lambda: lambda.clone(), theta: theta.clone(), k, w, mu })
}

/// Extract the datum from highest-weight data of the ambient algebra: a
/// weight `Lambda` (given as its semisimple restriction plus the grading
/// eigenvalue) and a positive root `Theta` of the ambient system with
/// `Theta(E) = 1`. The order is `k = 2 (Lambda + Delta, Theta) / (Theta,
/// Theta)`, required to be a positive integer; the restriction of the data
/// to the semisimple side is dualized, since the ambient weights label the
/// induced modules while the operator acts on their duals.
pub fn standard_operator_data(
    s: &AhsStructure,
    lambda_restricted: &Weight,
    conformal: &Rat,
    theta_ambient: &Weight,
) -> Result<OperatorData> {
    let ambient = s.ambient();
    if !ambient.is_positive_root(theta_ambient) {
        return Err(Error::NotAPositiveRoot(theta_ambient.to_string()));
    }
    let grading = theta_ambient.inner(s.e_star());
    if !grading.is_one() {
        return Err(Error::NotAGradingOneRoot(fmt_rat(&grading)));
    }
    if !lambda_restricted.is_dominant_integral() {
        return Err(Error::NotDominant(lambda_restricted.to_string()));
    }

    let big_lambda = s.embed(lambda_restricted, conformal);
    let shifted = &big_lambda + &s.delta();
    let m = rat(2) * shifted.inner(theta_ambient) / theta_ambient.norm_sq();
    if !m.is_integer() || !m.is_positive() {
        return Err(Error::BadOrder(fmt_rat(&m)));
    }
    use num_traits::ToPrimitive;
    let k = m.to_integer().to_u32().ok_or_else(|| Error::BadOrder(fmt_rat(&m)))?;

    // Reflected end of the arrow, restricted to the semisimple side.
    let nu = s.restrict(theta_ambient);
    let target_restricted = lambda_restricted - &nu.scaled(&m);
    if !target_restricted.is_dominant_integral() {
        return Err(Error::NotDominant(target_restricted.to_string()));
    }

    // Dualize both ends: the dominant representative of the negative.
    let g0s = s.g0s();
    let lambda = g0s.dominantize(&-lambda_restricted).representative;
    let mu = g0s.dominantize(&-&target_restricted).representative;
    let theta = (&mu - &lambda).scaled(&m.recip());
    check_direction(s, &theta)?;

    let data = operator_data(s, &lambda, &theta, k)?;
    assert_eq!(data.mu, mu);
    // The grading eigenvalue of the dual of the source module and the
    // invariance weight are pinned to each other by the reflection
    // relation; this cannot fail once the order came out integral.
    assert_eq!(*conformal, -&data.w, "grading eigenvalue inconsistent with invariance");
    Ok(data)
}
