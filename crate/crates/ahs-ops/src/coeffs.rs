//! The universal coefficient calculus behind the higher-order correction
//! terms: multi-indices with their three weight functions, the brace factors
//! `{n}`, the doubly indexed `B` constants (defined by recursion and,
//! independently, by a sum over lattice paths), and the expansion
//! coefficients `a^{k,j}_s`.
//!
//! Everything here is parametric in the three scalars `(c0, A1, w)` and
//! generic over the scalar type; the library instantiates it with exact big
//! rationals, and any other commutative ring with 1 works the same way
//! (`Ratio<i64>`, or floats for quick numeric experiments).

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Scalars the coefficient calculus can run over.
pub trait CoeffScalar:
    Clone
    + PartialEq
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Sub<Output = Self>
{
    fn from_int(n: i64) -> Self;
}

impl CoeffScalar for num_rational::BigRational {
    fn from_int(n: i64) -> Self {
        num_rational::BigRational::from_integer(n.into())
    }
}

impl CoeffScalar for num_rational::Ratio<i64> {
    fn from_int(n: i64) -> Self {
        num_rational::Ratio::from_integer(n)
    }
}

impl CoeffScalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }
}

/// A finite sequence of non-negative integers with trailing zeros trimmed.
/// `s_m` counts the formal factors carrying `m` extra derivatives.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: impl Into<Vec<u32>>) -> MultiIndex {
        let mut v: Vec<u32> = entries.into();
        while v.last() == Some(&0) {
            v.pop();
        }
        MultiIndex(v)
    }

    pub fn zero() -> MultiIndex {
        MultiIndex(Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|s| = sum s_i`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `[s] = sum s_i (i + 1)`, the measure driving the recursion.
    pub fn bracket(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &c)| c * (i as u32 + 1))
            .sum()
    }

    /// `ord(s) = sum s_i (i + 2) = |s| + [s]`, the derivative order the
    /// factors consume in an expansion term.
    pub fn ord(&self) -> u32 {
        self.size() + self.bracket()
    }

    /// `s - sigma_i`: undo one elementary move. `None` when the entry to
    /// decrement is absent.
    pub fn minus_sigma(&self, i: usize) -> Option<MultiIndex> {
        if self.get(i) == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[i] -= 1;
        if i >= 1 {
            if v.len() < i {
                v.resize(i, 0);
            }
            v[i - 1] += 1;
        }
        Some(MultiIndex::new(v))
    }

    /// `s + sigma_i`: one elementary move. For `i >= 1` this shifts a unit
    /// from slot `i - 1` to slot `i` and needs `s_{i-1} >= 1`.
    pub fn plus_sigma(&self, i: usize) -> Option<MultiIndex> {
        let mut v = self.0.clone();
        if v.len() <= i {
            v.resize(i + 1, 0);
        }
        if i >= 1 {
            if v[i - 1] == 0 {
                return None;
            }
            v[i - 1] -= 1;
        }
        v[i] += 1;
        Some(MultiIndex::new(v))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "(0)");
        }
        if self.0.iter().all(|&c| c <= 9) {
            let digits: String = self.0.iter().map(|c| char::from(b'0' + *c as u8)).collect();
            write!(f, "({digits})")
        } else {
            let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

/// The three scalars the whole calculus depends on.
#[derive(Debug, Clone)]
pub struct CoeffParams<T> {
    pub c0: T,
    pub a1: T,
    pub w: T,
}

impl<T: CoeffScalar> CoeffParams<T> {
    pub fn new(c0: T, a1: T, w: T) -> Self {
        CoeffParams { c0, a1, w }
    }

    /// Parameters evaluated at the invariance weight of order `k`, namely
    /// `w = c~_{k-1}`.
    pub fn at_invariant_weight(c0: T, a1: T, k: u32) -> Self {
        let w = shifted_constant(&c0, &a1, k as i64 - 1);
        CoeffParams { c0, a1, w }
    }

    /// `c~_j = c0 - j A1`.
    pub fn c_tilde(&self, j: i64) -> T {
        shifted_constant(&self.c0, &self.a1, j)
    }

    /// `{n} = n (c~_{n-1} - w)`.
    pub fn brace(&self, n: u32) -> T {
        mul(
            T::from_int(n as i64),
            self.c_tilde(n as i64 - 1) - self.w.clone(),
        )
    }
}

fn shifted_constant<T: CoeffScalar>(c0: &T, a1: &T, j: i64) -> T {
    c0.clone() - mul(T::from_int(j), a1.clone())
}

fn mul<T: CoeffScalar>(a: T, b: T) -> T {
    // Zero + One only give us Add/Mul by value.
    a * b
}

/// Memoizing evaluation session for one parameter triple.
pub struct Evaluator<T> {
    params: CoeffParams<T>,
    memo: HashMap<(u32, MultiIndex), T>,
}

impl<T: CoeffScalar> Evaluator<T> {
    pub fn new(params: CoeffParams<T>) -> Self {
        Evaluator { params, memo: HashMap::new() }
    }

    pub fn params(&self) -> &CoeffParams<T> {
        &self.params
    }

    /// The `B` constants by their defining recursion on `n + [s]`:
    /// `B^0_(0) = 1`, and
    /// `B^n_s = (n+|s|-1)(c~_{n+|s|-2} - w) sum_{l<n} B^l_{s-sigma_0}
    ///        + sum_{i>=1} (s_{i-1}+1) sum_{l<n} B^l_{s-sigma_i}`,
    /// each branch applying only when the decremented entry exists.
    pub fn b_recursive(&mut self, n: u32, s: &MultiIndex) -> T {
        if let Some(v) = self.memo.get(&(n, s.clone())) {
            return v.clone();
        }
        let v = self.b_recursive_uncached(n, s);
        self.memo.insert((n, s.clone()), v.clone());
        v
    }

    fn b_recursive_uncached(&mut self, n: u32, s: &MultiIndex) -> T {
        if s.is_zero() {
            return if n == 0 { T::one() } else { T::zero() };
        }
        if n == 0 {
            return T::zero();
        }
        let mut acc = T::zero();
        if let Some(prev) = s.minus_sigma(0) {
            let mut sum = T::zero();
            for l in 0..n {
                sum = sum + self.b_recursive(l, &prev);
            }
            let depth = (n + s.size()) as i64;
            let factor = mul(
                T::from_int(depth - 1),
                self.params.c_tilde(depth - 2) - self.params.w.clone(),
            );
            acc = acc + mul(factor, sum);
        }
        for i in 1..=s.len() {
            if let Some(prev) = s.minus_sigma(i) {
                let mut sum = T::zero();
                for l in 0..n {
                    sum = sum + self.b_recursive(l, &prev);
                }
                acc = acc + mul(T::from_int(s.get(i - 1) as i64 + 1), sum);
            }
        }
        acc
    }

    /// The same constants by the closed path-sum formula: one contribution
    /// per admissible ordering of the elementary moves reaching `s` with
    /// componentwise non-negative partial sums, evaluated as a tower of
    /// truncated sums of brace factors.
    pub fn b_closed_form(&self, n: u32, s: &MultiIndex) -> T {
        if s.is_zero() {
            return if n == 0 { T::one() } else { T::zero() };
        }
        let mut total = T::zero();
        let mut path = Vec::with_capacity(s.bracket() as usize);
        self.path_sum(n, s, &MultiIndex::zero(), &mut path, &mut total);
        total
    }

    /// Depth-first enumeration of the admissible move orderings. The first
    /// move is always sigma_0, moves only shift weight rightward, and the
    /// partial sums stay componentwise non-negative by construction.
    fn path_sum(
        &self,
        n: u32,
        target: &MultiIndex,
        partial: &MultiIndex,
        path: &mut Vec<PathStep>,
        total: &mut T,
    ) {
        if path.len() == target.bracket() as usize {
            if partial == target {
                *total = total.clone() + self.evaluate_path(n, path);
            }
            return;
        }
        // Slots beyond the support of the target are dead ends.
        let moves = if path.is_empty() { 0..1 } else { 0..target.len() };
        for j in moves {
            if let Some(moved) = partial.plus_sigma(j) {
                path.push(PathStep {
                    mv: j,
                    size_before: partial.size(),
                    entry_before: if j >= 1 { partial.get(j - 1) } else { 0 },
                });
                self.path_sum(n, target, &moved, path, total);
                path.pop();
            }
        }
    }

    /// Nested-sum value of one move ordering: the innermost level sums the
    /// brace factors, every further level multiplies by the step factor and
    /// sums the previous level over a shifted truncated range.
    fn evaluate_path(&self, n: u32, path: &[PathStep]) -> T {
        // Level 1: g_1(l) = {l}.
        let mut g: Vec<T> = (0..=n).map(|l| self.params.brace(l)).collect();
        for (idx, step) in path.iter().enumerate().skip(1) {
            let level = idx + 1;
            // g_level(l) = factor(l) * sum_{l' = level-1}^{l-1} g_prev(l').
            let mut running = T::zero();
            let mut next: Vec<T> = Vec::with_capacity(n as usize + 1);
            #[allow(clippy::needless_range_loop)]
            for l in 0..=n as usize {
                let factor = if step.mv == 0 {
                    self.params.brace(l as u32 + step.size_before)
                } else {
                    T::from_int(step.entry_before as i64)
                };
                next.push(mul(factor, running.clone()));
                if l + 1 >= level {
                    running = running + g[l].clone();
                }
            }
            g = next;
        }
        g[n as usize].clone()
    }

    /// Expansion coefficient of order `k`: for `j >= 1`
    /// `a^{k,j}_s = C(k,j) prod_{i=k-j}^{k-1} (c~_i - w) sum_{l=0}^{k-j-|s|} B^l_s`,
    /// and for `j = 0` the plain truncated sum up to `k - |s|`. The data
    /// must satisfy `j + ord(s) <= k`.
    pub fn a_coefficient(&mut self, k: u32, j: u32, s: &MultiIndex) -> Result<T> {
        if j + s.ord() > k {
            return Err(Error::CoefficientConstraint(j + s.ord(), k));
        }
        let sum_to = k as i64 - j as i64 - s.size() as i64;
        let mut sum = T::zero();
        if sum_to >= 0 {
            for l in 0..=sum_to as u32 {
                sum = sum + self.b_recursive(l, s);
            }
        }
        if j == 0 {
            return Ok(sum);
        }
        let mut out = T::from_int(binomial(k, j));
        for i in (k - j)..k {
            out = mul(out, self.params.c_tilde(i as i64) - self.params.w.clone());
        }
        Ok(mul(out, sum))
    }
}

struct PathStep {
    mv: usize,
    size_before: u32,
    entry_before: u32,
}

fn binomial(n: u32, k: u32) -> i64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i as u128 + 1);
    }
    i64::try_from(acc).expect("binomial coefficient fits in an i64; the order is far too large")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio, Rat};

    fn generic_params() -> CoeffParams<Rat> {
        CoeffParams::new(ratio(7, 3), ratio(5, 2), ratio(-11, 6))
    }

    fn s(entries: &[u32]) -> MultiIndex {
        MultiIndex::new(entries.to_vec())
    }

    #[test]
    fn multi_index_weights() {
        let m = s(&[1, 0, 2]);
        assert_eq!(m.size(), 3);
        assert_eq!(m.bracket(), 7);
        assert_eq!(m.ord(), 10);
        assert_eq!(MultiIndex::zero().ord(), 0);
        assert_eq!(s(&[0, 1]).to_string(), "(01)");
        assert_eq!(MultiIndex::new(vec![1, 0, 0]).to_string(), "(1)");
    }

    #[test]
    fn sigma_moves() {
        assert_eq!(s(&[1]).minus_sigma(0), Some(MultiIndex::zero()));
        assert_eq!(s(&[0, 1]).minus_sigma(1), Some(s(&[1])));
        assert_eq!(s(&[0, 1]).minus_sigma(0), None);
        assert_eq!(MultiIndex::zero().plus_sigma(0), Some(s(&[1])));
        assert_eq!(s(&[1]).plus_sigma(1), Some(s(&[0, 1])));
        assert_eq!(MultiIndex::zero().plus_sigma(1), None);
    }

    #[test]
    fn brace_at_invariant_weight_is_symmetric() {
        // {n}(k) = n (k - n) A1.
        for k in 1..=8u32 {
            let p = CoeffParams::at_invariant_weight(ratio(9, 7), ratio(3, 4), k);
            for n in 1..=k {
                let expected = rat(n as i64) * rat(k as i64 - n as i64) * ratio(3, 4);
                assert_eq!(p.brace(n), expected);
            }
            assert!(p.brace(k).is_zero());
        }
    }

    #[test]
    fn b_base_values_and_vanishing() {
        let mut ev = Evaluator::new(generic_params());
        assert!(ev.b_recursive(0, &MultiIndex::zero()).is_one());
        for n in 1..=6 {
            assert!(ev.b_recursive(n, &MultiIndex::zero()).is_zero());
        }
        for m in [s(&[1]), s(&[0, 1]), s(&[2, 1])] {
            assert!(ev.b_recursive(0, &m).is_zero());
        }
        // B^n_s = 0 whenever n < [s].
        for m in [s(&[2]), s(&[0, 1]), s(&[1, 1]), s(&[0, 0, 2])] {
            for n in 0..m.bracket() {
                assert!(ev.b_recursive(n, &m).is_zero(), "n={n} s={m}");
                assert!(ev.b_closed_form(n, &m).is_zero(), "n={n} s={m}");
            }
        }
    }

    #[test]
    fn b_single_factor_values() {
        let p = generic_params();
        let mut ev = Evaluator::new(p.clone());
        // B^n_(1) = {n}.
        for n in 1..=8 {
            assert_eq!(ev.b_recursive(n, &s(&[1])), p.brace(n));
        }
        // B^1_(2) = 0 and B^n_(2) = {n+1} sum_{l=1}^{n-1} {l}.
        assert!(ev.b_recursive(1, &s(&[2])).is_zero());
        for n in 2..=8u32 {
            let mut sum = Rat::zero();
            for l in 1..n {
                sum += p.brace(l);
            }
            assert_eq!(ev.b_recursive(n, &s(&[2])), p.brace(n + 1) * sum);
        }
    }

    #[test]
    fn b_path_sum_examples() {
        let p = generic_params();
        let mut ev = Evaluator::new(p.clone());
        // B^n_(01) = sum_{l=1}^{n-1} {l}: a single admissible ordering.
        for n in 2..=8u32 {
            let mut sum = Rat::zero();
            for l in 1..n {
                sum += p.brace(l);
            }
            assert_eq!(ev.b_closed_form(n, &s(&[0, 1])), sum);
            assert_eq!(ev.b_recursive(n, &s(&[0, 1])), sum);
        }
        // B^n_(11): two orderings.
        for n in 3..=8u32 {
            let mut double = Rat::zero();
            let mut inner_total = Rat::zero();
            for lp in 2..n {
                let mut inner = Rat::zero();
                for l in 1..lp {
                    inner += p.brace(l);
                }
                double += p.brace(lp + 1) * &inner;
                inner_total += inner;
            }
            let expected = rat(2) * double + p.brace(n + 1) * inner_total;
            assert_eq!(ev.b_closed_form(n, &s(&[1, 1])), expected);
            assert_eq!(ev.b_recursive(n, &s(&[1, 1])), expected);
        }
        // B^4_(0001) = {1}.
        assert_eq!(ev.b_closed_form(4, &s(&[0, 0, 0, 1])), p.brace(1));
        assert_eq!(ev.b_recursive(4, &s(&[0, 0, 0, 1])), p.brace(1));
    }

    #[test]
    fn recursion_and_path_sum_agree_on_a_grid() {
        let triples = [
            generic_params(),
            CoeffParams::new(rat(1), rat(1), rat(0)),
            CoeffParams::new(ratio(-2, 5), ratio(1, 3), ratio(4, 9)),
        ];
        for p in triples {
            let mut ev = Evaluator::new(p);
            for n in 0..=7u32 {
                for m in [
                    MultiIndex::zero(),
                    s(&[1]),
                    s(&[2]),
                    s(&[3]),
                    s(&[0, 1]),
                    s(&[1, 1]),
                    s(&[0, 0, 1]),
                    s(&[2, 1]),
                    s(&[0, 2]),
                    s(&[1, 0, 1]),
                ] {
                    assert_eq!(
                        ev.b_recursive(n, &m),
                        ev.b_closed_form(n, &m),
                        "n={n} s={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn factorial_identity_on_the_diagonal() {
        // B^n_(n)(2n) = [(2n-1)!!]^2 at A1 = 1.
        for n in 1..=6u32 {
            let p = CoeffParams::at_invariant_weight(rat(17), rat(1), 2 * n);
            let mut ev = Evaluator::new(p);
            let idx = s(&[n]);
            let mut dfact: i64 = 1;
            for odd in (1..=(2 * n as i64 - 1)).step_by(2) {
                dfact *= odd;
            }
            assert_eq!(ev.b_recursive(n, &idx), rat(dfact * dfact));
            assert_eq!(ev.b_closed_form(n, &idx), rat(dfact * dfact));
        }
    }

    #[test]
    fn homogeneity_in_the_cartan_square_constant() {
        // At w = c~_{k-1}, scaling A1 scales B^n_s by the |s|-th power.
        let k = 6;
        let lam = ratio(7, 5);
        let base = CoeffParams::at_invariant_weight(ratio(3, 2), rat(2), k);
        let scaled = CoeffParams::at_invariant_weight(ratio(3, 2), rat(2) * &lam, k);
        let mut ev0 = Evaluator::new(base);
        let mut ev1 = Evaluator::new(scaled);
        for (n, m) in [(3u32, s(&[1])), (4, s(&[2])), (5, s(&[1, 1])), (6, s(&[0, 2]))] {
            let factor = num_traits::pow::pow(lam.clone(), m.size() as usize);
            assert_eq!(ev1.b_recursive(n, &m), factor * ev0.b_recursive(n, &m));
        }
    }

    #[test]
    fn a_coefficient_pinned_values() {
        let p = generic_params();
        let mut ev = Evaluator::new(p.clone());
        // a^{1,1}_(0) = c~_0 - w.
        assert_eq!(
            ev.a_coefficient(1, 1, &MultiIndex::zero()).unwrap(),
            p.c_tilde(0) - p.w.clone()
        );
        // a^{k,0}_(0) = 1 for all k.
        for k in 1..=9 {
            assert!(ev.a_coefficient(k, 0, &MultiIndex::zero()).unwrap().is_one());
        }
        // a^{4,0}_(2) at the invariant weight is 9 A1^2.
        let a1 = ratio(4, 7);
        let inv = CoeffParams::at_invariant_weight(ratio(-3, 11), a1.clone(), 4);
        let mut ev4 = Evaluator::new(inv);
        assert_eq!(
            ev4.a_coefficient(4, 0, &s(&[2])).unwrap(),
            rat(9) * &a1 * &a1
        );
        // The constraint j + ord(s) <= k is enforced.
        assert!(matches!(
            ev.a_coefficient(3, 2, &s(&[1])),
            Err(Error::CoefficientConstraint(4, 3))
        ));
    }

    #[test]
    fn obstructions_vanish_at_the_invariant_weight() {
        for k in 1..=6u32 {
            let p = CoeffParams::at_invariant_weight(ratio(13, 4), ratio(5, 3), k);
            let mut ev = Evaluator::new(p);
            for j in 1..=k {
                for m in all_indices_with_ord_up_to(k - j) {
                    assert!(
                        ev.a_coefficient(k, j, &m).unwrap().is_zero(),
                        "k={k} j={j} s={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn expansion_recursion_is_reproduced() {
        // The order-(k+1) coefficients satisfy the one-step recursion in
        // terms of the order-k table; treat out-of-range entries as zero.
        let p = generic_params();
        let mut ev = Evaluator::new(p.clone());
        let mut a = |k: u32, j: i64, m: &MultiIndex| -> Rat {
            if j < 0 || j as u32 + m.ord() > k {
                Rat::zero()
            } else {
                ev.a_coefficient(k, j as u32, m).unwrap()
            }
        };
        for k in 1..=7u32 {
            for j in 0..=(k + 1) as i64 {
                for m in all_indices_with_ord_up_to(k + 1) {
                    if j as u32 + m.ord() > k + 1 {
                        continue;
                    }
                    let mut rhs = Rat::zero();
                    if j > 0 {
                        let factor = p.c_tilde(k as i64)
                            - rat(k as i64 - j + 1) * &p.a1
                            - p.w.clone();
                        rhs += a(k, j - 1, &m) * factor;
                    }
                    rhs += a(k, j, &m);
                    if let Some(prev) = m.minus_sigma(0) {
                        rhs += rat(j + 1) * a(k, j + 1, &prev);
                    }
                    for i in 1..=m.len() {
                        if let Some(prev) = m.minus_sigma(i) {
                            rhs += rat(m.get(i - 1) as i64 + 1) * a(k, j, &prev);
                        }
                    }
                    assert_eq!(a(k + 1, j, &m), rhs, "k={k} j={j} s={m}");
                }
            }
        }
    }

    #[test]
    fn other_scalar_types_agree_with_big_rationals() {
        let big = CoeffParams::new(ratio(3, 2), ratio(1, 2), ratio(-5, 4));
        let small = CoeffParams::new(
            num_rational::Ratio::new(3i64, 2),
            num_rational::Ratio::new(1i64, 2),
            num_rational::Ratio::new(-5i64, 4),
        );
        let float = CoeffParams::new(1.5f64, 0.5, -1.25);
        let mut eb = Evaluator::new(big);
        let mut es = Evaluator::new(small);
        let mut ef = Evaluator::new(float);
        for (n, m) in [(4u32, s(&[1])), (5, s(&[0, 1])), (5, s(&[2]))] {
            let b = eb.b_recursive(n, &m);
            let r = es.b_recursive(n, &m);
            let f = ef.b_recursive(n, &m);
            assert_eq!(b, Rat::new((*r.numer()).into(), (*r.denom()).into()));
            use num_traits::ToPrimitive;
            assert!((f - b.to_f64().unwrap()).abs() < 1e-9);
        }
    }

    fn all_indices_with_ord_up_to(bound: u32) -> Vec<MultiIndex> {
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
        out
    }

    proptest::proptest! {
        #[test]
        fn recursion_equals_path_sum_on_random_parameters(
            c0n in -20i64..20, a1n in -20i64..20, wn in -20i64..20,
            n in 0u32..6,
        ) {
            let p = CoeffParams::new(
                Rat::new(c0n.into(), 7.into()),
                Rat::new(a1n.into(), 5.into()),
                Rat::new(wn.into(), 3.into()),
            );
            let mut ev = Evaluator::new(p);
            for m in [s(&[1]), s(&[2]), s(&[0, 1]), s(&[1, 1]), s(&[0, 0, 1])] {
                proptest::prop_assert_eq!(
                    ev.b_recursive(n, &m),
                    ev.b_closed_form(n, &m)
                );
            }
        }
    }
}
