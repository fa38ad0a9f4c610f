//! Assembly of the complete order-k operator formula: enumeration of the
//! admissible term shapes, exact coefficients at the invariance weight, the
//! renormalization absorbing the Cartan-square constant into the deformation
//! tensor, the audit that every obstruction coefficient vanishes, and
//! plain-text / LaTeX / JSON rendering.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::casimir::{c_zero, OperatorData};
use crate::catalog::AhsStructure;
use crate::coeffs::{CoeffParams, Evaluator, MultiIndex};
use crate::error::{Error, Result};
use crate::{fmt_rat, parse_rat, rat, Rat};

/// Whether coefficients refer to the bare deformation tensor or to the
/// rescaled one that absorbs the Cartan-square constant. The rescaled
/// convention is the universal one: its coefficients depend only on the
/// order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaConvention {
    Gamma,
    GammaTilde,
}

impl GammaConvention {
    pub fn name(&self) -> &'static str {
        match self {
            GammaConvention::Gamma => "gamma",
            GammaConvention::GammaTilde => "gamma-tilde",
        }
    }
}

/// One summand `coeff * Gamma-factors (x) nabla^i t`. The multi-index entry
/// `s_m` is the power of the m-th derivative of the deformation tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorTerm {
    pub s: MultiIndex,
    pub i: u32,
    pub coeff: Rat,
}

/// The complete formula of one operator, with terms sorted by derivative
/// order of the section (descending), then by multi-index.
#[derive(Debug, Clone)]
pub struct OperatorFormula {
    pub structure: String,
    pub data: OperatorData,
    pub convention: GammaConvention,
    pub terms: Vec<OperatorTerm>,
    /// Shapes whose coefficient evaluated to zero and were left out.
    pub dropped_zero_terms: usize,
}

/// All multi-indices with `ord(s) <= bound`, in a deterministic order.
pub fn indices_with_ord_at_most(bound: u32) -> Vec<MultiIndex> {
    let mut out = vec![MultiIndex::zero()];
    let mut frontier = vec![MultiIndex::zero()];
    while let Some(m) = frontier.pop() {
        for i in 0..=m.len() {
            if let Some(next) = m.plus_sigma(i) {
                if next.ord() <= bound && !out.contains(&next) {
                    out.push(next.clone());
                    frontier.push(next);
                }
            }
        }
    }
    out.sort();
    out
}

/// The admissible shapes `(s, i)` of an order-k formula: `ord(s) + i = k`,
/// sorted by `i` descending then `s`.
pub fn enumerate_terms(k: u32) -> Vec<(MultiIndex, u32)> {
    assert!(k >= 1, "order must be positive");
    let mut shapes: Vec<(MultiIndex, u32)> = indices_with_ord_at_most(k)
        .into_iter()
        .map(|s| {
            let i = k - s.ord();
            (s, i)
        })
        .collect();
    shapes.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    shapes
}

/// The order-k coefficient list in the rescaled convention, computed from
/// bare placeholder parameters. Every structure must reproduce it; the
/// sweep checks that it does.
pub fn universal_coefficients(k: u32) -> Vec<OperatorTerm> {
    let params = CoeffParams::at_invariant_weight(Rat::zero(), rat(1), k);
    let mut ev = Evaluator::new(params);
    enumerate_terms(k)
        .into_iter()
        .map(|(s, i)| {
            let coeff = ev.a_coefficient(k, 0, &s).expect("shape satisfies the constraint");
            OperatorTerm { s, i, coeff }
        })
        .filter(|t| !t.coeff.is_zero())
        .collect()
}

/// Build the complete formula for a validated operator datum. Coefficients
/// are evaluated from the structure's own constants at the invariance
/// weight; under the rescaled convention each one is divided by the
/// `|s|`-th power of the Cartan-square constant, which the homogeneity of
/// the `B` constants makes legitimate.
pub fn build_formula(
    s: &AhsStructure,
    data: &OperatorData,
    convention: GammaConvention,
) -> Result<OperatorFormula> {
    let c0 = c_zero(s, &data.lambda, &data.theta);
    let a1 = s.a1().clone();
    let params = CoeffParams::at_invariant_weight(c0, a1.clone(), data.k);
    assert_eq!(params.w, data.w, "invariance weight must be the shifted constant");
    let mut ev = Evaluator::new(params);

    let mut terms = Vec::new();
    let mut dropped = 0usize;
    for (shape, i) in enumerate_terms(data.k) {
        let mut coeff = ev.a_coefficient(data.k, 0, &shape)?;
        if let GammaConvention::GammaTilde = convention {
            for _ in 0..shape.size() {
                coeff /= &a1;
            }
        }
        if coeff.is_zero() {
            dropped += 1;
        } else {
            terms.push(OperatorTerm { s: shape, i, coeff });
        }
    }
    let leading = &terms[0];
    assert!(
        leading.s.is_zero() && leading.i == data.k && leading.coeff.is_one(),
        "leading term must be the bare k-th derivative"
    );
    Ok(OperatorFormula {
        structure: s.family().to_string(),
        data: data.clone(),
        convention,
        terms,
        dropped_zero_terms: dropped,
    })
}

/// Grid of obstruction coefficients: every admissible `(j >= 1, s)` pair
/// evaluated at the invariance weight.
#[derive(Debug, Clone)]
pub struct ObstructionReport {
    pub k: u32,
    pub entries: Vec<(u32, MultiIndex, Rat)>,
}

/// Evaluate the full obstruction grid; any nonzero value is an error, since
/// the invariance weight annihilates the product factor in each one.
pub fn obstruction_audit(s: &AhsStructure, data: &OperatorData) -> Result<ObstructionReport> {
    let c0 = c_zero(s, &data.lambda, &data.theta);
    let params = CoeffParams::at_invariant_weight(c0, s.a1().clone(), data.k);
    let mut ev = Evaluator::new(params);
    let mut entries = Vec::new();
    for j in 1..=data.k {
        for shape in indices_with_ord_at_most(data.k - j) {
            let value = ev.a_coefficient(data.k, j, &shape)?;
            entries.push((j, shape, value));
        }
    }
    if let Some((j, shape, value)) = entries.iter().find(|(_, _, v)| !v.is_zero()) {
        return Err(Error::NonzeroObstruction {
            j: *j,
            s: shape.to_string(),
            value: fmt_rat(value),
        });
    }
    Ok(ObstructionReport { k: data.k, entries })
}

impl OperatorFormula {
    pub fn term(&self, s: &MultiIndex, i: u32) -> Option<&OperatorTerm> {
        self.terms.iter().find(|t| t.s == *s && t.i == i)
    }

    pub fn coefficient_list(&self) -> Vec<Rat> {
        self.terms.iter().map(|t| t.coeff.clone()).collect()
    }

    /// Plain-text rendering in the concatenation convention, e.g.
    /// `nabla^2 t + 1*Gt t` with the unicode symbols.
    pub fn render_plain(&self) -> String {
        let gamma = match self.convention {
            GammaConvention::Gamma => "Γ",
            GammaConvention::GammaTilde => "Γ̃",
        };
        let mut parts = Vec::new();
        for (idx, t) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            for (m, &p) in t.s.entries().iter().enumerate() {
                if p == 0 {
                    continue;
                }
                let base = match m {
                    0 => gamma.to_string(),
                    1 => format!("(∇{gamma})"),
                    _ => format!("(∇^{m} {gamma})"),
                };
                factors.push(if p > 1 { format!("{base}^{p}") } else { base });
            }
            let tail = match t.i {
                0 => "t".to_string(),
                1 => "∇t".to_string(),
                i => format!("∇^{i} t"),
            };
            let body = if factors.is_empty() {
                tail
            } else {
                format!("{} {}", factors.join(" "), tail)
            };
            if idx == 0 && t.coeff.is_one() {
                parts.push(body);
            } else {
                parts.push(format!("{}·{}", fmt_rat(&t.coeff), body));
            }
        }
        parts.join(" + ")
    }

    /// LaTeX rendering with symmetric-product and tensor markup.
    pub fn render_latex(&self) -> String {
        let gamma = match self.convention {
            GammaConvention::Gamma => r"\Gamma",
            GammaConvention::GammaTilde => r"\tilde\Gamma",
        };
        let mut parts = Vec::new();
        for (idx, t) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            for (m, &p) in t.s.entries().iter().enumerate() {
                let base = match m {
                    0 => gamma.to_string(),
                    1 => format!(r"(\nabla {gamma})"),
                    _ => format!(r"(\nabla^{{{m}}} {gamma})"),
                };
                for _ in 0..p {
                    factors.push(base.clone());
                }
            }
            let tail = match t.i {
                0 => "t".to_string(),
                1 => r"\nabla t".to_string(),
                i => format!(r"\nabla^{{{i}}} t"),
            };
            let body = if factors.is_empty() {
                tail
            } else {
                format!(r"{} \otimes {}", factors.join(r" \odot "), tail)
            };
            if idx == 0 && t.coeff.is_one() {
                parts.push(body);
            } else {
                parts.push(format!(r"{}\,{}", fmt_rat(&t.coeff), body));
            }
        }
        format!(r"\pi\left[{}\right]", parts.join(" + "))
    }

    pub fn to_json(&self) -> FormulaJson {
        FormulaJson {
            structure: self.structure.clone(),
            lambda: self.data.lambda.canonical().iter().map(fmt_rat).collect(),
            theta: self.data.theta.canonical().iter().map(fmt_rat).collect(),
            k: self.data.k,
            w: fmt_rat(&self.data.w),
            convention: self.convention.name().to_string(),
            terms: self
                .terms
                .iter()
                .map(|t| TermJson {
                    s: t.s.entries().to_vec(),
                    i: t.i,
                    coeff: fmt_rat(&t.coeff),
                })
                .collect(),
        }
    }

    /// Render in the requested format: `plain`, `latex` or `json`.
    pub fn render(&self, format: &str) -> Result<String> {
        match format {
            "plain" => Ok(self.render_plain()),
            "latex" => Ok(self.render_latex()),
            "json" => Ok(serde_json::to_string_pretty(&self.to_json())
                .expect("formula serializes")),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Wire format of a formula; field order is part of the contract.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaJson {
    pub structure: String,
    pub lambda: Vec<String>,
    pub theta: Vec<String>,
    pub k: u32,
    pub w: String,
    pub convention: String,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub s: Vec<u32>,
    pub i: u32,
    pub coeff: String,
}

impl FormulaJson {
    pub fn parse(text: &str) -> Result<FormulaJson> {
        serde_json::from_str(text).map_err(|e| Error::ParseWeight(e.to_string()))
    }

    /// The exact coefficient map `(s, i) -> coeff` encoded in the record.
    pub fn coefficient_map(&self) -> Result<Vec<(MultiIndex, u32, Rat)>> {
        self.terms
            .iter()
            .map(|t| Ok((MultiIndex::new(t.s.clone()), t.i, parse_rat(&t.coeff)?)))
            .collect()
    }
}

impl fmt::Display for OperatorFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_plain())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::casimir::operator_data;
    use crate::catalog::AhsFamily;

    fn formula_for(f: AhsFamily, k: u32) -> OperatorFormula {
        let s = AhsStructure::new(f).unwrap();
        let lambda = s.g0s().zero_weight();
        let theta = s.alpha().clone();
        let data = operator_data(&s, &lambda, &theta, k).unwrap();
        build_formula(&s, &data, GammaConvention::GammaTilde).unwrap()
    }

    #[test]
    fn term_shapes_for_small_orders() {
        let shapes = enumerate_terms(2);
        assert_eq!(shapes.len(), 2);
        assert_eq!(shapes[0], (MultiIndex::zero(), 2));
        assert_eq!(shapes[1], (MultiIndex::new(vec![1]), 0));
        assert_eq!(enumerate_terms(5).len(), 7);
        assert_eq!(enumerate_terms(7).len(), 15);
    }

    #[test]
    fn term_shape_count_matches_brute_force() {
        for k in 1..=12u32 {
            let fast = enumerate_terms(k).len();
            // Generate-and-filter oracle over a bounding box.
            let max_len = (k as usize).saturating_sub(1);
            let mut count = 0usize;
            let mut stack: Vec<Vec<u32>> = vec![vec![]];
            while let Some(prefix) = stack.pop() {
                if prefix.len() == max_len {
                    let ord: u32 = prefix
                        .iter()
                        .enumerate()
                        .map(|(i, &c)| c * (i as u32 + 2))
                        .sum();
                    if ord <= k {
                        count += 1;
                    }
                    continue;
                }
                for c in 0..=k / (prefix.len() as u32 + 2) {
                    let mut next = prefix.clone();
                    next.push(c);
                    stack.push(next);
                }
            }
            assert_eq!(fast, count, "k={k}");
        }
    }

    #[test]
    fn universal_low_order_tables() {
        let coeffs = |k: u32| -> Vec<i64> {
            universal_coefficients(k)
                .iter()
                .map(|t| {
                    assert!(t.coeff.is_integer());
                    use num_traits::ToPrimitive;
                    t.coeff.to_integer().to_i64().unwrap()
                })
                .collect()
        };
        // Sorted by derivative order of t (descending), then multi-index.
        assert_eq!(coeffs(2), vec![1, 1]);
        assert_eq!(coeffs(3), vec![1, 4, 2]);
        assert_eq!(coeffs(4), vec![1, 10, 10, 3, 9]);
        assert_eq!(coeffs(5), vec![1, 20, 30, 18, 64, 4, 64]);
    }

    #[test]
    fn structure_formulas_reproduce_the_universal_table() {
        for f in [
            AhsFamily::ConformalEven { n: 4 },
            AhsFamily::ConformalOdd { n: 2 },
            AhsFamily::Spinorial { n: 4 },
            AhsFamily::Grassmannian { p: 0, q: 2 },
            AhsFamily::Symplectic { n: 3 },
            AhsFamily::E6,
            AhsFamily::E7,
        ] {
            for k in 1..=4u32 {
                let built = formula_for(f, k);
                let expected = universal_coefficients(k);
                assert_eq!(built.terms.len(), expected.len());
                for (a, b) in built.terms.iter().zip(&expected) {
                    assert_eq!((a.s.clone(), a.i, a.coeff.clone()), (b.s.clone(), b.i, b.coeff.clone()));
                }
            }
        }
    }

    #[test]
    fn bare_convention_scales_by_powers_of_the_constant() {
        let s = AhsStructure::new(AhsFamily::Symplectic { n: 3 }).unwrap();
        let data =
            operator_data(&s, &s.g0s().zero_weight(), &s.alpha().clone(), 4).unwrap();
        let tilde = build_formula(&s, &data, GammaConvention::GammaTilde).unwrap();
        let bare = build_formula(&s, &data, GammaConvention::Gamma).unwrap();
        for (t, b) in tilde.terms.iter().zip(&bare.terms) {
            let mut expected = t.coeff.clone();
            for _ in 0..t.s.size() {
                expected *= s.a1();
            }
            assert_eq!(b.coeff, expected);
        }
    }

    #[test]
    fn obstruction_grid_is_zero() {
        let s = AhsStructure::new(AhsFamily::Spinorial { n: 4 }).unwrap();
        let data =
            operator_data(&s, &s.g0s().zero_weight(), &s.alpha().clone(), 5).unwrap();
        let report = obstruction_audit(&s, &data).unwrap();
        assert!(report.entries.iter().all(|(_, _, v)| v.is_zero()));
        assert!(!report.entries.is_empty());
    }

    #[test]
    fn plain_rendering_of_low_orders() {
        let f2 = formula_for(AhsFamily::ConformalEven { n: 3 }, 2);
        assert_eq!(f2.render_plain(), "∇^2 t + 1·Γ̃ t");
        let f3 = formula_for(AhsFamily::ConformalEven { n: 3 }, 3);
        assert_eq!(f3.render_plain(), "∇^3 t + 4·Γ̃ ∇t + 2·(∇Γ̃) t");
    }

    #[test]
    fn latex_rendering_marks_products() {
        let f4 = formula_for(AhsFamily::ConformalEven { n: 4 }, 4);
        let tex = f4.render_latex();
        assert!(tex.starts_with(r"\pi\left["));
        assert!(tex.contains(r"9\,\tilde\Gamma \odot \tilde\Gamma \otimes t"));
    }

    #[test]
    fn json_round_trips() {
        let f5 = formula_for(AhsFamily::Symplectic { n: 3 }, 5);
        let text = f5.render("json").unwrap();
        let parsed = FormulaJson::parse(&text).unwrap();
        assert_eq!(parsed, f5.to_json());
        // Field order is pinned.
        let first = text.find("\"structure\"").unwrap();
        let last = text.find("\"terms\"").unwrap();
        assert!(first < text.find("\"lambda\"").unwrap());
        assert!(text.find("\"lambda\"").unwrap() < text.find("\"k\"").unwrap());
        assert!(text.find("\"k\"").unwrap() < last);
    }

    #[test]
    fn unknown_format_is_rejected() {
        let f2 = formula_for(AhsFamily::ConformalEven { n: 3 }, 2);
        assert!(matches!(f2.render("yaml"), Err(Error::UnknownFormat(_))));
    }
}
