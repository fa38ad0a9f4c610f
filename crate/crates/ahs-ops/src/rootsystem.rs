//! Exact-rational root systems of types A, B, C, D, E6, E7 and finite
//! products, realized on orthogonal coordinates, together with the Weyl-group
//! machinery used downstream: dominant representatives with sign, orbit
//! enumeration, and the Weyl dimension formula.
//!
//! Weights of an A-type factor live on `rank + 1` coordinates and are read
//! modulo the all-ones direction; a canonical representative (mean
//! subtracted) is chosen before any comparison. The invariant bilinear form
//! on weights is the dual of the Killing form per factor, times a positive
//! `form_scale` that the catalog fixes later.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::{rat, Rat};

/// The simple families admitting the structures built in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::C => write!(f, "C"),
            Family::D => write!(f, "D"),
            Family::E6 => write!(f, "E6"),
            Family::E7 => write!(f, "E7"),
        }
    }
}

/// A simple type with a validated rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimpleType {
    family: Family,
    rank: u32,
}

impl SimpleType {
    pub fn new(family: Family, rank: u32) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 1,
            Family::D => rank >= 2,
            Family::E6 => rank == 6,
            Family::E7 => rank == 7,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            let family = match family {
                Family::A => 'A',
                Family::B => 'B',
                Family::C => 'C',
                Family::D => 'D',
                Family::E6 => 'E',
                Family::E7 => 'E',
            };
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn a(rank: u32) -> Self {
        Self::new(Family::A, rank).unwrap()
    }
    pub fn b(rank: u32) -> Self {
        Self::new(Family::B, rank).unwrap()
    }
    pub fn c(rank: u32) -> Self {
        Self::new(Family::C, rank).unwrap()
    }
    pub fn d(rank: u32) -> Self {
        Self::new(Family::D, rank).unwrap()
    }
    pub fn e6() -> Self {
        Self::new(Family::E6, 6).unwrap()
    }
    pub fn e7() -> Self {
        Self::new(Family::E7, 7).unwrap()
    }

    pub fn family(&self) -> Family {
        self.family
    }
    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Coordinate dimension of the standard realization.
    fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank as usize + 1,
            Family::B | Family::C | Family::D => self.rank as usize,
            Family::E6 | Family::E7 => 8,
        }
    }

    /// Simple roots of the standard realization, in its own coordinates.
    fn simple_root_vectors(&self) -> Vec<Vec<Rat>> {
        let n = self.rank as usize;
        let dim = self.ambient_dim();
        let unit = |i: usize| {
            let mut v = vec![Rat::zero(); dim];
            v[i] = Rat::one();
            v
        };
        let diff = |i: usize, j: usize| {
            let mut v = vec![Rat::zero(); dim];
            v[i] = Rat::one();
            v[j] = -Rat::one();
            v
        };
        let sum2 = |i: usize, j: usize| {
            let mut v = vec![Rat::zero(); dim];
            v[i] = Rat::one();
            v[j] = Rat::one();
            v
        };
        match self.family {
            Family::A => (0..n).map(|i| diff(i, i + 1)).collect(),
            Family::B => {
                let mut roots: Vec<_> = (0..n - 1).map(|i| diff(i, i + 1)).collect();
                roots.push(unit(n - 1));
                roots
            }
            Family::C => {
                let mut roots: Vec<_> = (0..n - 1).map(|i| diff(i, i + 1)).collect();
                let mut long = vec![Rat::zero(); dim];
                long[n - 1] = rat(2);
                roots.push(long);
                roots
            }
            Family::D => {
                let mut roots: Vec<_> = (0..n - 1).map(|i| diff(i, i + 1)).collect();
                roots.push(sum2(n - 2, n - 1));
                roots
            }
            Family::E6 | Family::E7 => {
                let half = Rat::new(1.into(), 2.into());
                let mut a1 = vec![-half.clone(); 8];
                a1[0] = half.clone();
                a1[7] = half;
                let mut roots = vec![a1, sum2(0, 1)];
                // alpha_3 .. : e_{i} - e_{i-1} climbing the chain
                for i in 1..=(if self.family == Family::E6 { 4 } else { 5 }) {
                    roots.push(diff(i, i - 1));
                }
                roots
            }
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::E6 | Family::E7 => write!(f, "{}", self.family),
            _ => write!(f, "{}{}", self.family, self.rank),
        }
    }
}

/// One simple factor embedded at an offset into the concatenated coordinates.
#[derive(Debug)]
struct Factor {
    stype: SimpleType,
    offset: usize,
    dim: usize,
    /// Basis of the orthogonal complement of the root span in this factor's
    /// coordinates (the all-ones line for A-type; empty for B, C, D).
    complement: Vec<Vec<Rat>>,
    /// Gram inverse of the complement basis, for projecting it away.
    complement_gram_inv: Vec<Vec<Rat>>,
    /// The Killing-dual form on canonical representatives is
    /// `dot / kd_scale`.
    kd_scale: Rat,
    /// Finalized multiplier applied on top of the Killing-dual form.
    form_scale: Rat,
}

#[derive(Debug)]
struct SystemData {
    factors: Vec<Factor>,
    dim: usize,
    rank: usize,
    simple_roots: Vec<Vec<Rat>>,
    factor_of_simple_root: Vec<usize>,
    cartan: Vec<Vec<i64>>,
    /// `(cartan^T)^{-1}`, for expressing weights in the simple-root basis.
    inv_cartan_t: Vec<Vec<Rat>>,
    fundamental_weights: Vec<Vec<Rat>>,
    rho: Vec<Rat>,
    positive_roots: Vec<Vec<Rat>>,
}

/// A root system (possibly a product of simple factors), cheaply clonable.
#[derive(Clone)]
pub struct RootSystem(Arc<SystemData>);

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({})", self.type_name())
    }
}

impl RootSystem {
    /// Build the standard realization of a product of simple types.
    /// All `form_scale`s start at 1; the catalog rescales them later.
    pub fn build(factors: &[SimpleType]) -> Result<RootSystem> {
        assert!(!factors.is_empty(), "a root system needs at least one factor");
        let mut fs = Vec::new();
        let mut simple_roots: Vec<Vec<Rat>> = Vec::new();
        let mut factor_of = Vec::new();
        let mut offset = 0usize;

        for (fi, st) in factors.iter().enumerate() {
            let st = SimpleType::new(st.family(), st.rank())?;
            let dim = st.ambient_dim();
            let local_roots = st.simple_root_vectors();
            // Orthogonal complement of the root span, in local coordinates.
            let pairing: Vec<Vec<Rat>> = local_roots.clone();
            let complement = linalg::null_space(&pairing, dim);
            let cg: Vec<Vec<Rat>> = complement
                .iter()
                .map(|u| complement.iter().map(|v| dot(u, v)).collect())
                .collect();
            let complement_gram_inv = if complement.is_empty() {
                Vec::new()
            } else {
                linalg::invert(&cg).expect("complement Gram is invertible")
            };

            for r in &local_roots {
                let mut full = vec![Rat::zero(); offset];
                full.extend(r.iter().cloned());
                simple_roots.push(full);
                factor_of.push(fi);
            }
            fs.push(Factor {
                stype: st,
                offset,
                dim,
                complement,
                complement_gram_inv,
                kd_scale: Rat::one(), // fixed below from the root set
                form_scale: Rat::one(),
            });
            offset += dim;
        }
        let dim = offset;
        for root in simple_roots.iter_mut() {
            root.resize(dim, Rat::zero());
        }
        let rank = simple_roots.len();

        // Cartan matrix from the realization; validated to be integral with
        // the usual sign pattern.
        let mut cartan = vec![vec![0i64; rank]; rank];
        for (k, ak) in simple_roots.iter().enumerate() {
            for (i, ai) in simple_roots.iter().enumerate() {
                let v = rat(2) * dot(ak, ai) / dot(ai, ai);
                assert!(v.is_integer(), "Cartan entry must be an integer");
                let v: i64 = int_to_i64(&v.to_integer());
                if k == i {
                    assert_eq!(v, 2);
                } else {
                    assert!(v <= 0);
                }
                cartan[k][i] = v;
            }
        }
        #[allow(clippy::needless_range_loop)]
        for k in 0..rank {
            for i in 0..rank {
                assert_eq!(cartan[k][i] == 0, cartan[i][k] == 0);
            }
        }

        let cartan_rat: Vec<Vec<Rat>> =
            cartan.iter().map(|row| row.iter().map(|&x| rat(x)).collect()).collect();
        let cartan_t: Vec<Vec<Rat>> = (0..rank)
            .map(|i| (0..rank).map(|j| cartan_rat[j][i].clone()).collect())
            .collect();
        let inv_cartan = linalg::invert(&cartan_rat).ok_or(Error::SingularNormalization)?;
        let inv_cartan_t = linalg::invert(&cartan_t).ok_or(Error::SingularNormalization)?;

        // pi_j = sum_k (A^{-1})_{jk} alpha_k
        let fundamental_weights: Vec<Vec<Rat>> = (0..rank)
            .map(|j| {
                let mut w = vec![Rat::zero(); dim];
                for (k, root) in simple_roots.iter().enumerate() {
                    for (c, x) in w.iter_mut().zip(root) {
                        *c = &*c + &inv_cartan[j][k] * x;
                    }
                }
                w
            })
            .collect();
        let mut rho = vec![Rat::zero(); dim];
        for w in &fundamental_weights {
            for (c, x) in rho.iter_mut().zip(w) {
                *c = &*c + x;
            }
        }

        let mut data = SystemData {
            factors: fs,
            dim,
            rank,
            simple_roots,
            factor_of_simple_root: factor_of,
            cartan,
            inv_cartan_t,
            fundamental_weights,
            rho,
            positive_roots: Vec::new(),
        };

        // All roots: orbits of the simple roots under the factor's own
        // reflections. Positivity read off the simple-root coordinates.
        let sys = RootSystem(Arc::new(data));
        let mut all_roots: std::collections::BTreeSet<Vec<Rat>> = Default::default();
        for i in 0..rank {
            for w in sys.weyl_orbit(&sys.simple_root(i)) {
                all_roots.insert(w.canonical());
            }
        }
        let mut positives: Vec<(Rat, Vec<Rat>)> = Vec::new();
        for coords in &all_roots {
            let w = sys.weight(coords.clone());
            let c = sys.simple_root_coords(&w).expect("roots lie in the root lattice");
            if c.iter().all(|x| !x.is_negative()) {
                let height: Rat = c.iter().fold(Rat::zero(), |acc, x| acc + x);
                positives.push((height, coords.clone()));
            }
        }
        positives.sort();
        let positive_roots: Vec<Vec<Rat>> = positives.into_iter().map(|(_, v)| v).collect();
        assert_eq!(positive_roots.len() * 2, all_roots.len());

        // Killing-dual scale per factor: the Killing form restricted to a
        // Cartan subalgebra is sum_{roots} beta (x) beta, so on weights the
        // dual form divides the coordinate dot product by
        // sum_{roots} |beta|^2 / rank.
        data = Arc::try_unwrap(sys.0).expect("sole owner during build");
        for (fi, f) in data.factors.iter_mut().enumerate() {
            let mut total = Rat::zero();
            for root in &positive_roots {
                let local = &root[f.offset..f.offset + f.dim];
                if local.iter().any(|x| !x.is_zero()) {
                    total += rat(2) * dot(local, local);
                }
            }
            let frank = data
                .factor_of_simple_root
                .iter()
                .filter(|&&g| g == fi)
                .count();
            f.kd_scale = total / rat(frank as i64);
        }
        data.positive_roots = positive_roots;
        Ok(RootSystem(Arc::new(data)))
    }

    /// A copy of this system with the given per-factor form multipliers.
    pub fn rescaled(&self, scales: &[Rat]) -> RootSystem {
        assert_eq!(scales.len(), self.0.factors.len());
        assert!(scales.iter().all(|s| s.is_positive()), "form scale must be positive");
        let d = &self.0;
        RootSystem(Arc::new(SystemData {
            factors: d
                .factors
                .iter()
                .zip(scales)
                .map(|(f, s)| Factor {
                    stype: f.stype,
                    offset: f.offset,
                    dim: f.dim,
                    complement: f.complement.clone(),
                    complement_gram_inv: f.complement_gram_inv.clone(),
                    kd_scale: f.kd_scale.clone(),
                    form_scale: s.clone(),
                })
                .collect(),
            dim: d.dim,
            rank: d.rank,
            simple_roots: d.simple_roots.clone(),
            factor_of_simple_root: d.factor_of_simple_root.clone(),
            cartan: d.cartan.clone(),
            inv_cartan_t: d.inv_cartan_t.clone(),
            fundamental_weights: d.fundamental_weights.clone(),
            rho: d.rho.clone(),
            positive_roots: d.positive_roots.clone(),
        }))
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }
    pub fn rank(&self) -> usize {
        self.0.rank
    }
    pub fn factor_types(&self) -> Vec<SimpleType> {
        self.0.factors.iter().map(|f| f.stype).collect()
    }
    pub fn form_scales(&self) -> Vec<Rat> {
        self.0.factors.iter().map(|f| f.form_scale.clone()).collect()
    }
    pub fn cartan_matrix(&self) -> &Vec<Vec<i64>> {
        &self.0.cartan
    }
    pub fn type_name(&self) -> String {
        self.0
            .factors
            .iter()
            .map(|f| f.stype.to_string())
            .collect::<Vec<_>>()
            .join(" x ")
    }

    pub fn same_system(&self, other: &RootSystem) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn weight(&self, coords: Vec<Rat>) -> Weight {
        assert_eq!(coords.len(), self.0.dim, "coordinate length mismatch");
        Weight { sys: self.clone(), coords }
    }

    pub fn weight_from_ints(&self, coords: &[i64]) -> Weight {
        self.weight(coords.iter().map(|&x| rat(x)).collect())
    }

    pub fn zero_weight(&self) -> Weight {
        self.weight(vec![Rat::zero(); self.0.dim])
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        self.weight(self.0.simple_roots[i].clone())
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        self.weight(self.0.fundamental_weights[i].clone())
    }

    pub fn rho(&self) -> Weight {
        self.weight(self.0.rho.clone())
    }

    /// The weight with the given fundamental-weight coefficients.
    pub fn from_fundamental(&self, coeffs: &[Rat]) -> Weight {
        assert_eq!(coeffs.len(), self.0.rank, "one coefficient per simple root");
        let mut v = vec![Rat::zero(); self.0.dim];
        for (c, w) in coeffs.iter().zip(&self.0.fundamental_weights) {
            for (x, y) in v.iter_mut().zip(w) {
                *x = &*x + c * y;
            }
        }
        self.weight(v)
    }

    pub fn positive_roots(&self) -> Vec<Weight> {
        self.0
            .positive_roots
            .iter()
            .map(|c| self.weight(c.clone()))
            .collect()
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        assert!(self.same_system(&w.sys));
        let c = w.canonical();
        self.0.positive_roots.contains(&c)
    }

    /// The unique dominant root of a simple system (its highest root).
    pub fn highest_root(&self) -> Weight {
        assert_eq!(self.0.factors.len(), 1, "highest root of a simple system");
        for r in self.0.positive_roots.iter().rev() {
            let w = self.weight(r.clone());
            if w.is_dominant() {
                return w;
            }
        }
        unreachable!("every simple system has a dominant root")
    }

    /// Coordinates of `w` in the simple-root basis, when `w` lies in the
    /// root span, else `None`.
    pub fn simple_root_coords(&self, w: &Weight) -> Option<Vec<Rat>> {
        assert!(self.same_system(&w.sys));
        let v: Vec<Rat> = (0..self.0.rank).map(|i| w.coroot_coeff(i)).collect();
        let c: Vec<Rat> = self
            .0
            .inv_cartan_t
            .iter()
            .map(|row| row.iter().zip(&v).fold(Rat::zero(), |acc, (a, b)| acc + a * b))
            .collect();
        // Validate by reconstruction; fails exactly when w has a component
        // outside the root span.
        let mut rec = vec![Rat::zero(); self.0.dim];
        for (ci, root) in c.iter().zip(&self.0.simple_roots) {
            for (x, y) in rec.iter_mut().zip(root) {
                *x = &*x + ci * y;
            }
        }
        if self.weight(rec).canonical() == w.canonical() {
            Some(c)
        } else {
            None
        }
    }

    /// Dominant representative of the Weyl orbit, with the sign and word
    /// length of the reducing element. Reflects at the first negative
    /// coefficient until dominant; the sign is 0 when the representative
    /// lies on a wall.
    pub fn dominantize(&self, w: &Weight) -> Dominantization {
        assert!(self.same_system(&w.sys));
        let mut cur = w.clone();
        let mut word_length = 0usize;
        'outer: loop {
            for i in 0..self.0.rank {
                if cur.coroot_coeff(i).is_negative() {
                    cur = cur.reflect(i);
                    word_length += 1;
                    continue 'outer;
                }
            }
            break;
        }
        let on_wall = (0..self.0.rank).any(|i| cur.coroot_coeff(i).is_zero());
        let sign = if on_wall {
            0
        } else if word_length.is_multiple_of(2) {
            1
        } else {
            -1
        };
        Dominantization { representative: cur, sign, word_length }
    }

    /// Full Weyl orbit of `w`, deduplicated, in a deterministic order.
    pub fn weyl_orbit(&self, w: &Weight) -> Vec<Weight> {
        assert!(self.same_system(&w.sys));
        let mut seen: std::collections::BTreeSet<Vec<Rat>> = Default::default();
        let mut queue = vec![w.clone()];
        seen.insert(w.canonical());
        while let Some(x) = queue.pop() {
            for i in 0..self.0.rank {
                let y = x.reflect(i);
                if seen.insert(y.canonical()) {
                    queue.push(y);
                }
            }
        }
        seen.into_iter().map(|c| self.weight(c)).collect()
    }

    /// Weyl dimension formula: the product over positive roots of
    /// `(lambda + rho, beta) / (rho, beta)`, blockwise over the factors.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<BigInt> {
        assert!(self.same_system(&lambda.sys));
        if !lambda.is_dominant_integral() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let rho = self.rho();
        let shifted = lambda + &rho;
        let mut dim = Rat::one();
        for beta in &self.0.positive_roots {
            let b = self.weight(beta.clone());
            dim = dim * shifted.kd_inner(&b) / rho.kd_inner(&b);
        }
        assert!(dim.is_integer() && dim.is_positive());
        Ok(dim.to_integer())
    }

    fn canonicalize(&self, coords: &[Rat]) -> Vec<Rat> {
        let mut out = coords.to_vec();
        for f in &self.0.factors {
            if f.complement.is_empty() {
                continue;
            }
            let local = &coords[f.offset..f.offset + f.dim];
            // Subtract the dot-orthogonal projection onto the complement.
            let rhs: Vec<Rat> = f.complement.iter().map(|u| dot(u, local)).collect();
            let coef: Vec<Rat> = f
                .complement_gram_inv
                .iter()
                .map(|row| row.iter().zip(&rhs).fold(Rat::zero(), |a, (x, y)| a + x * y))
                .collect();
            for (ci, u) in coef.iter().zip(&f.complement) {
                for (k, uk) in u.iter().enumerate() {
                    out[f.offset + k] = &out[f.offset + k] - ci * uk;
                }
            }
        }
        out
    }
}

/// Result of reducing a weight to its dominant Weyl representative.
#[derive(Debug, Clone)]
pub struct Dominantization {
    pub representative: Weight,
    /// `0` when the orbit meets a wall, otherwise `(-1)^word_length`.
    pub sign: i8,
    pub word_length: usize,
}

/// A weight vector owned by a [`RootSystem`].
#[derive(Clone)]
pub struct Weight {
    sys: RootSystem,
    coords: Vec<Rat>,
}

impl Weight {
    pub fn system(&self) -> &RootSystem {
        &self.sys
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Canonical coordinates: A-type blocks are projected to mean zero,
    /// E-type blocks onto their root span.
    pub fn canonical(&self) -> Vec<Rat> {
        self.sys.canonicalize(&self.coords)
    }

    /// Coefficient against the `i`-th simple coroot,
    /// `2 (w, alpha_i) / (alpha_i, alpha_i)`.
    pub fn coroot_coeff(&self, i: usize) -> Rat {
        let alpha = &self.sys.0.simple_roots[i];
        rat(2) * dot(&self.coords, alpha) / dot(alpha, alpha)
    }

    pub fn fundamental_coeffs(&self) -> Vec<Rat> {
        (0..self.sys.0.rank).map(|i| self.coroot_coeff(i)).collect()
    }

    pub fn is_dominant(&self) -> bool {
        (0..self.sys.0.rank).all(|i| !self.coroot_coeff(i).is_negative())
    }

    pub fn is_dominant_integral(&self) -> bool {
        (0..self.sys.0.rank).all(|i| {
            let c = self.coroot_coeff(i);
            c.is_integer() && !c.is_negative()
        })
    }

    pub fn is_zero(&self) -> bool {
        self.canonical().iter().all(|x| x.is_zero())
    }

    /// Simple reflection `sigma_i`.
    pub fn reflect(&self, i: usize) -> Weight {
        let c = self.coroot_coeff(i);
        let alpha = &self.sys.0.simple_roots[i];
        let coords = self
            .coords
            .iter()
            .zip(alpha)
            .map(|(x, a)| x - &c * a)
            .collect();
        Weight { sys: self.sys.clone(), coords }
    }

    /// The finalized invariant form: per factor,
    /// `form_scale * dot(canonical, canonical) / kd_scale`.
    pub fn inner(&self, other: &Weight) -> Rat {
        assert!(
            self.sys.same_system(&other.sys),
            "inner product of weights from different root systems"
        );
        let a = self.canonical();
        let b = other.canonical();
        let mut acc = Rat::zero();
        for f in &self.sys.0.factors {
            let d = dot(&a[f.offset..f.offset + f.dim], &b[f.offset..f.offset + f.dim]);
            acc += &f.form_scale * d / &f.kd_scale;
        }
        acc
    }

    /// The Killing-dual form, ignoring the finalized scale. Ratios of values
    /// (coroot coefficients, Weyl dimensions) are scale independent.
    pub fn kd_inner(&self, other: &Weight) -> Rat {
        assert!(self.sys.same_system(&other.sys));
        let a = self.canonical();
        let b = other.canonical();
        let mut acc = Rat::zero();
        for f in &self.sys.0.factors {
            let d = dot(&a[f.offset..f.offset + f.dim], &b[f.offset..f.offset + f.dim]);
            acc += d / &f.kd_scale;
        }
        acc
    }

    pub fn norm_sq(&self) -> Rat {
        self.inner(self)
    }

    pub fn scaled(&self, c: &Rat) -> Weight {
        Weight {
            sys: self.sys.clone(),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

fn int_to_i64(x: &BigInt) -> i64 {
    use num_traits::ToPrimitive;
    x.to_i64().expect("value fits in i64")
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert!(self.sys.same_system(&rhs.sys));
        Weight {
            sys: self.sys.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert!(self.sys.same_system(&rhs.sys));
        Weight {
            sys: self.sys.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            sys: self.sys.clone(),
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl PartialEq for Weight {
    fn eq(&self, other: &Self) -> bool {
        self.sys.same_system(&other.sys) && self.canonical() == other.canonical()
    }
}
impl Eq for Weight {}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert!(self.sys.same_system(&other.sys));
        self.canonical().cmp(&other.canonical())
    }
}

impl Hash for Weight {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.canonical().iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
