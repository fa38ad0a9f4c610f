//! The six |1|-graded families. Each structure couples the ambient graded
//! algebra with the semisimple part of its degree-zero block, carries the
//! complete list of degree-one weights with the highest weight singled out,
//! and finalizes the invariant bilinear form so that the grading element has
//! norm one.
//!
//! The degree-one weight list is generated from the ambient root data (the
//! positive roots whose crossed-node coefficient is one) rather than typed in
//! per family; the per-family closed forms and the Weyl-orbit description
//! are enforced as tests.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsystem::{RootSystem, SimpleType, Weight};
use crate::{rat, ratio, Rat};

/// One of the six families, with its integer parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AhsFamily {
    /// `A_{p+q+1}` graded by the node separating `A_p x A_q`; the projective
    /// case is `p = 0`.
    Grassmannian { p: u32, q: u32 },
    /// Even conformal structures: `D_{n+1}` over `D_n`.
    ConformalEven { n: u32 },
    /// Odd conformal structures: `B_{n+1}` over `B_n`.
    ConformalOdd { n: u32 },
    /// Almost Lagrangian: `C_n` over `A_{n-1}`, degree-one part `Sym^2`.
    Symplectic { n: u32 },
    /// Almost spinorial: `D_n` over `A_{n-1}`, degree-one part `Lambda^2`.
    Spinorial { n: u32 },
    /// `E6` over `D_5`, degree-one part a 16-dimensional half-spinor module.
    E6,
    /// `E7` over `E6`, degree-one part the 27-dimensional fundamental module.
    E7,
}

impl fmt::Display for AhsFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AhsFamily::Grassmannian { p, q } => write!(f, "grassmannian:{p},{q}"),
            AhsFamily::ConformalEven { n } => write!(f, "conf-even:{n}"),
            AhsFamily::ConformalOdd { n } => write!(f, "conf-odd:{n}"),
            AhsFamily::Symplectic { n } => write!(f, "symplectic:{n}"),
            AhsFamily::Spinorial { n } => write!(f, "spinorial:{n}"),
            AhsFamily::E6 => write!(f, "e6"),
            AhsFamily::E7 => write!(f, "e7"),
        }
    }
}

impl AhsFamily {
    /// Parse the plain-text form used on the command line:
    /// `grassmannian:p,q | conf-even:n | conf-odd:n | symplectic:n |
    /// spinorial:n | e6 | e7`.
    pub fn parse(s: &str) -> Result<AhsFamily> {
        let bad = || Error::ParseStructure(s.to_string());
        let s = s.trim();
        match s {
            "e6" => return Ok(AhsFamily::E6),
            "e7" => return Ok(AhsFamily::E7),
            _ => {}
        }
        let (name, args) = s.split_once(':').ok_or_else(bad)?;
        let ints: Vec<u32> = args
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (name, ints.as_slice()) {
            ("grassmannian", [p, q]) => Ok(AhsFamily::Grassmannian { p: *p, q: *q }),
            ("conf-even", [n]) => Ok(AhsFamily::ConformalEven { n: *n }),
            ("conf-odd", [n]) => Ok(AhsFamily::ConformalOdd { n: *n }),
            ("symplectic", [n]) => Ok(AhsFamily::Symplectic { n: *n }),
            ("spinorial", [n]) => Ok(AhsFamily::Spinorial { n: *n }),
            _ => Err(bad()),
        }
    }
}

/// Which multiplicity-free criterion the degree-one module satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiplicityFreeCriterion {
    /// Every fundamental coefficient of every degree-one weight is `>= -1`.
    AllCoefficientsGeqMinusOne,
    /// Coefficients may reach `-2` at one index per weight, under the
    /// companion conditions on the other coefficients and the Cartan row.
    SingleMinusTwo,
    Neither,
}

/// Report of the coefficient smallness test on the degree-one weight list.
#[derive(Debug, Clone)]
pub struct SmallnessReport {
    pub all_multiplicity_one: bool,
    pub min_fundamental_coefficient: Rat,
    pub criterion: MultiplicityFreeCriterion,
    /// `(weight index, coroot index)` pairs where a coefficient is `<= -2`.
    pub offending_indices: Vec<(usize, usize)>,
}

/// A fully normalized |1|-graded structure.
pub struct AhsStructure {
    family: AhsFamily,
    g0s: RootSystem,
    ambient: RootSystem,
    crossed: usize,
    /// Ambient simple-root index realizing each semisimple simple root.
    g0s_to_ambient: Vec<usize>,
    /// Fundamental weights of the embedded semisimple system, as ambient
    /// weights.
    embedded_fundamental: Vec<Weight>,
    /// Ambient weight dual to the grading element; `(e*, e*) = 1` under the
    /// finalized form.
    e_star: Weight,
    g1_weights: Vec<(Weight, u64)>,
    g1_ambient_roots: Vec<Weight>,
    alpha: Weight,
    dim_g1: u64,
    a1: Rat,
    extremal: std::sync::OnceLock<Vec<Weight>>,
}

impl AhsStructure {
    /// Build and normalize a structure of the given family.
    pub fn new(family: AhsFamily) -> Result<AhsStructure> {
        let invalid = |reason: &str| Error::InvalidParameters {
            family: family.to_string(),
            reason: reason.to_string(),
        };

        // Ambient type, crossed node, semisimple factors, and the ambient
        // index realizing each semisimple simple root (in factor order).
        let (ambient_types, crossed, g0s_types, g0s_to_ambient): (
            Vec<SimpleType>,
            usize,
            Vec<SimpleType>,
            Vec<usize>,
        ) = match family {
            AhsFamily::Grassmannian { p, q } => {
                if p + q < 1 {
                    return Err(invalid("needs p + q >= 1"));
                }
                let (p, q) = (p as usize, q as usize);
                let mut factors = Vec::new();
                let mut map = Vec::new();
                if p >= 1 {
                    factors.push(SimpleType::a(p as u32));
                    map.extend(0..p);
                }
                if q >= 1 {
                    factors.push(SimpleType::a(q as u32));
                    map.extend(p + 1..=p + q);
                }
                (vec![SimpleType::a((p + q + 1) as u32)], p, factors, map)
            }
            AhsFamily::ConformalEven { n } => {
                if n < 3 {
                    return Err(invalid("needs n >= 3"));
                }
                (
                    vec![SimpleType::d(n + 1)],
                    0,
                    vec![SimpleType::d(n)],
                    (1..=n as usize).collect(),
                )
            }
            AhsFamily::ConformalOdd { n } => {
                if n < 1 {
                    return Err(invalid("needs n >= 1"));
                }
                (
                    vec![SimpleType::b(n + 1)],
                    0,
                    vec![SimpleType::b(n)],
                    (1..=n as usize).collect(),
                )
            }
            AhsFamily::Symplectic { n } => {
                if n < 2 {
                    return Err(invalid("needs n >= 2"));
                }
                (
                    vec![SimpleType::c(n)],
                    n as usize - 1,
                    vec![SimpleType::a(n - 1)],
                    (0..n as usize - 1).collect(),
                )
            }
            AhsFamily::Spinorial { n } => {
                if n < 3 {
                    return Err(invalid("needs n >= 3"));
                }
                (
                    vec![SimpleType::d(n)],
                    n as usize - 1,
                    vec![SimpleType::a(n - 1)],
                    (0..n as usize - 1).collect(),
                )
            }
            AhsFamily::E6 => (
                vec![SimpleType::e6()],
                5,
                vec![SimpleType::d(5)],
                vec![0, 2, 3, 4, 1],
            ),
            AhsFamily::E7 => (
                vec![SimpleType::e7()],
                6,
                vec![SimpleType::e6()],
                vec![0, 1, 2, 3, 4, 5],
            ),
        };

        let ambient = RootSystem::build(&ambient_types)?;
        let g0s = RootSystem::build(&g0s_types)?;
        assert_eq!(ambient.rank(), g0s.rank() + 1);
        assert_eq!(g0s_to_ambient.len(), g0s.rank());

        // The embedded copies of the semisimple simple roots must reproduce
        // the semisimple Cartan matrix entry by entry.
        let embedded_roots: Vec<Weight> =
            g0s_to_ambient.iter().map(|&a| ambient.simple_root(a)).collect();
        for (i, ri) in embedded_roots.iter().enumerate() {
            for (j, rj) in embedded_roots.iter().enumerate() {
                let pairing = rat(2) * ri.kd_inner(rj) / rj.kd_inner(rj);
                assert_eq!(pairing, rat(g0s.cartan_matrix()[i][j]), "node map mismatch");
            }
        }

        // Degree-one part: the positive roots with crossed coefficient 1.
        let mut g1_ambient_roots = Vec::new();
        for beta in ambient.positive_roots() {
            let coords = ambient
                .simple_root_coords(&beta)
                .expect("roots lie in the root span");
            let c = &coords[crossed];
            if c.is_one() {
                g1_ambient_roots.push(beta.clone());
            } else {
                assert!(c.is_zero(), "grading deeper than |1| found");
            }
        }
        let dim_g1 = g1_ambient_roots.len() as u64;

        // Grading dual: the member of the root span orthogonal to the
        // semisimple roots that pairs to 1 with the crossed root, solved
        // against the Killing-dual form.
        let basis: Vec<Weight> = (0..ambient.rank()).map(|a| ambient.simple_root(a)).collect();
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        let mut rhs: Vec<Rat> = Vec::new();
        for r in &embedded_roots {
            rows.push(basis.iter().map(|b| r.kd_inner(b)).collect());
            rhs.push(Rat::zero());
        }
        let crossed_root = ambient.simple_root(crossed);
        rows.push(basis.iter().map(|b| crossed_root.kd_inner(b)).collect());
        rhs.push(Rat::one());
        let coef = linalg::solve(&rows, &rhs).ok_or(Error::SingularNormalization)?;
        let mut e_raw = ambient.zero_weight();
        for (c, b) in coef.iter().zip(&basis) {
            e_raw = &e_raw + &b.scaled(c);
        }

        // The squared Killing-dual norm of the dual is the Killing norm of
        // the grading element itself, which must be twice dim g1.
        let scale = e_raw.kd_inner(&e_raw);
        if scale != rat(2) * rat(dim_g1 as i64) {
            return Err(Error::SingularNormalization);
        }
        for beta in &g1_ambient_roots {
            assert!(beta.kd_inner(&e_raw).is_one(), "degree-one root must pair to 1");
        }

        let ambient = ambient.rescaled(std::slice::from_ref(&scale));
        let to_final = |w: &Weight| ambient.weight(w.coords().to_vec());
        let e_star = to_final(&e_raw).scaled(&scale.recip());
        assert!(e_star.norm_sq().is_one());
        let g1_ambient_roots: Vec<Weight> = g1_ambient_roots.iter().map(&to_final).collect();
        let embedded_roots: Vec<Weight> = embedded_roots.iter().map(&to_final).collect();

        // Scale each semisimple factor so its form agrees with the finalized
        // ambient form on the embedded roots.
        let factor_of: Vec<usize> = {
            let mut v = Vec::new();
            for (fi, st) in g0s.factor_types().iter().enumerate() {
                v.extend(std::iter::repeat_n(fi, st.rank() as usize));
            }
            v
        };
        let mut scales = vec![Rat::zero(); g0s.factor_types().len()];
        for (i, r) in embedded_roots.iter().enumerate() {
            let s = g0s.simple_root(i);
            let f = r.inner(r) / s.kd_inner(&s);
            let slot = &mut scales[factor_of[i]];
            if slot.is_zero() {
                *slot = f;
            } else {
                assert_eq!(*slot, f, "factor scale must be consistent");
            }
        }
        let g0s = g0s.rescaled(&scales);
        for (i, ri) in embedded_roots.iter().enumerate() {
            for (j, rj) in embedded_roots.iter().enumerate() {
                let si = g0s.simple_root(i);
                let sj = g0s.simple_root(j);
                assert_eq!(si.inner(&sj), ri.inner(rj), "embedded form mismatch");
            }
        }

        // Embedded fundamental weights, for transporting semisimple weights
        // into the ambient space.
        let cartan_rat: Vec<Vec<Rat>> = g0s
            .cartan_matrix()
            .iter()
            .map(|row| row.iter().map(|&x| rat(x)).collect())
            .collect();
        let inv_cartan = linalg::invert(&cartan_rat).ok_or(Error::SingularNormalization)?;
        let embedded_fundamental: Vec<Weight> = (0..g0s.rank())
            .map(|j| {
                let mut w = ambient.zero_weight();
                for (k, r) in embedded_roots.iter().enumerate() {
                    w = &w + &r.scaled(&inv_cartan[j][k]);
                }
                w
            })
            .collect();

        let mut partial = AhsStructure {
            family,
            g0s: g0s.clone(),
            ambient: ambient.clone(),
            crossed,
            g0s_to_ambient,
            embedded_fundamental,
            e_star,
            g1_weights: Vec::new(),
            g1_ambient_roots,
            alpha: g0s.zero_weight(),
            dim_g1,
            a1: Rat::zero(),
            extremal: std::sync::OnceLock::new(),
        };

        // Restrict the degree-one roots to the semisimple side.
        let mut mults: BTreeMap<Weight, u64> = BTreeMap::new();
        for beta in &partial.g1_ambient_roots {
            *mults.entry(partial.restrict(beta)).or_insert(0) += 1;
        }
        partial.g1_weights = mults.into_iter().collect();

        partial.alpha = partial.restrict(&ambient.highest_root());
        assert!(partial.alpha.is_dominant_integral(), "highest degree-one weight");
        let dim_alpha = g0s.weyl_dimension(&partial.alpha).expect("alpha is dominant");
        assert_eq!(dim_alpha, dim_g1.into(), "degree-one module dimension");

        partial.a1 = ratio(1, 2) * (partial.alpha.norm_sq() + rat(1));
        match family {
            AhsFamily::ConformalEven { .. } | AhsFamily::ConformalOdd { .. } => {
                assert!(partial.a1.is_one(), "conformal normalization");
            }
            _ => {}
        }
        Ok(partial)
    }

    pub fn family(&self) -> AhsFamily {
        self.family
    }

    /// The semisimple degree-zero root system, with the finalized form.
    pub fn g0s(&self) -> &RootSystem {
        &self.g0s
    }

    /// The ambient graded root system, with the finalized form.
    pub fn ambient(&self) -> &RootSystem {
        &self.ambient
    }

    /// Index of the crossed simple root of the ambient system.
    pub fn crossed(&self) -> usize {
        self.crossed
    }

    /// Degree-one weights on the semisimple side, with multiplicities,
    /// sorted canonically.
    pub fn g1_weights(&self) -> &[(Weight, u64)] {
        &self.g1_weights
    }

    /// The ambient roots spanning the degree-one part.
    pub fn g1_ambient_roots(&self) -> &[Weight] {
        &self.g1_ambient_roots
    }

    /// Highest weight of the degree-one module.
    pub fn alpha(&self) -> &Weight {
        &self.alpha
    }

    pub fn dim_g1(&self) -> u64 {
        self.dim_g1
    }

    /// The Casimir constant of the Cartan-square component,
    /// `(|alpha|^2 + 1) / 2`.
    pub fn a1(&self) -> &Rat {
        &self.a1
    }

    /// Ambient weight dual to the grading element under the finalized form.
    pub fn e_star(&self) -> &Weight {
        &self.e_star
    }

    /// Half-sum of the ambient positive roots.
    pub fn delta(&self) -> Weight {
        self.ambient.rho()
    }

    /// Restriction of an ambient weight to the semisimple side: keep the
    /// coefficients against the embedded simple coroots.
    pub fn restrict(&self, w: &Weight) -> Weight {
        assert!(w.system().same_system(&self.ambient));
        let coeffs: Vec<Rat> = self
            .g0s_to_ambient
            .iter()
            .map(|&a| {
                let r = self.ambient.simple_root(a);
                rat(2) * w.kd_inner(&r) / r.kd_inner(&r)
            })
            .collect();
        self.g0s.from_fundamental(&coeffs)
    }

    /// Ambient weight with semisimple part `lambda` and grading eigenvalue
    /// `conformal`.
    pub fn embed(&self, lambda: &Weight, conformal: &Rat) -> Weight {
        assert!(lambda.system().same_system(&self.g0s));
        let mut w = self.e_star.scaled(conformal);
        for (i, pi) in self.embedded_fundamental.iter().enumerate() {
            let c = lambda.coroot_coeff(i);
            if !c.is_zero() {
                w = &w + &pi.scaled(&c);
            }
        }
        w
    }

    /// The Weyl orbit of the highest degree-one weight. For the odd
    /// conformal family this excludes the zero weight; for the almost
    /// Lagrangian family it is the short orbit only.
    pub fn extremal_weights(&self) -> &[Weight] {
        self.extremal.get_or_init(|| self.g0s.weyl_orbit(&self.alpha))
    }

    pub fn is_extremal(&self, theta: &Weight) -> bool {
        assert!(theta.system().same_system(&self.g0s));
        self.extremal_weights().contains(theta)
    }

    /// Classify the degree-one weight list under the two multiplicity-free
    /// criteria.
    pub fn smallness_check(&self) -> SmallnessReport {
        let all_multiplicity_one = self.g1_weights.iter().all(|(_, m)| *m == 1);
        let mut min = None::<Rat>;
        let mut offending = Vec::new();
        let mut all_geq_m1 = true;
        let mut prime_ok = true;
        let cartan = self.g0s.cartan_matrix();
        for (wi, (w, _)) in self.g1_weights.iter().enumerate() {
            let coeffs = w.fundamental_coeffs();
            let mut minus_two_at = Vec::new();
            for (i, c) in coeffs.iter().enumerate() {
                if min.as_ref().is_none_or(|m| c < m) {
                    min = Some(c.clone());
                }
                if *c < rat(-1) {
                    all_geq_m1 = false;
                    offending.push((wi, i));
                    if *c < rat(-2) {
                        prime_ok = false;
                    } else {
                        minus_two_at.push(i);
                    }
                }
            }
            if minus_two_at.len() > 1 {
                prime_ok = false;
            }
            if let [i] = minus_two_at[..] {
                for (j, c) in coeffs.iter().enumerate() {
                    if j != i && c.is_negative() {
                        prime_ok = false;
                    }
                }
                if cartan[i].iter().enumerate().any(|(j, &a)| j != i && a < -1) {
                    prime_ok = false;
                }
            }
        }
        let criterion = if all_geq_m1 {
            MultiplicityFreeCriterion::AllCoefficientsGeqMinusOne
        } else if prime_ok {
            MultiplicityFreeCriterion::SingleMinusTwo
        } else {
            MultiplicityFreeCriterion::Neither
        };
        SmallnessReport {
            all_multiplicity_one,
            min_fundamental_coefficient: min.unwrap_or_else(Rat::zero),
            criterion,
            offending_indices: offending,
        }
    }
}

impl fmt::Debug for AhsStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AhsStructure({})", self.family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_test_families() -> Vec<AhsFamily> {
        vec![
            AhsFamily::Grassmannian { p: 1, q: 2 },
            AhsFamily::Grassmannian { p: 0, q: 3 },
            AhsFamily::ConformalEven { n: 3 },
            AhsFamily::ConformalEven { n: 4 },
            AhsFamily::ConformalOdd { n: 1 },
            AhsFamily::ConformalOdd { n: 3 },
            AhsFamily::Symplectic { n: 3 },
            AhsFamily::Spinorial { n: 4 },
            AhsFamily::E6,
            AhsFamily::E7,
        ]
    }

    #[test]
    fn dimensions_match_the_closed_forms() {
        let expect = |f: AhsFamily| -> u64 {
            match f {
                AhsFamily::Grassmannian { p, q } => ((p + 1) * (q + 1)) as u64,
                AhsFamily::ConformalEven { n } => 2 * n as u64,
                AhsFamily::ConformalOdd { n } => 2 * n as u64 + 1,
                AhsFamily::Symplectic { n } => (n * (n + 1) / 2) as u64,
                AhsFamily::Spinorial { n } => (n * (n - 1) / 2) as u64,
                AhsFamily::E6 => 16,
                AhsFamily::E7 => 27,
            }
        };
        for f in all_test_families() {
            let s = AhsStructure::new(f).unwrap();
            assert_eq!(s.dim_g1(), expect(f), "{f}");
            let total: u64 = s.g1_weights().iter().map(|(_, m)| m).sum();
            assert_eq!(total, s.dim_g1());
        }
    }

    #[test]
    fn conformal_even_weights_are_plus_minus_coordinates() {
        let s = AhsStructure::new(AhsFamily::ConformalEven { n: 4 }).unwrap();
        assert_eq!(s.g1_weights().len(), 8);
        for (w, m) in s.g1_weights() {
            assert_eq!(*m, 1);
            let c = w.canonical();
            assert_eq!(c.iter().filter(|x| !x.is_zero()).count(), 1);
            assert!(c.iter().all(|x| x.is_zero() || x.abs().is_one()));
        }
        // The finalized conformal form is the plain coordinate dot product.
        let l1 = s.g0s().weight_from_ints(&[1, 0, 0, 0]);
        let l2 = s.g0s().weight_from_ints(&[0, 1, 0, 0]);
        assert!(l1.inner(&l1).is_one());
        assert!(l1.inner(&l2).is_zero());
        assert_eq!(s.alpha(), &l1);
    }

    #[test]
    fn conformal_odd_retains_the_zero_weight() {
        let s = AhsStructure::new(AhsFamily::ConformalOdd { n: 3 }).unwrap();
        assert_eq!(s.g1_weights().len(), 7);
        let zeros: Vec<_> = s.g1_weights().iter().filter(|(w, _)| w.is_zero()).collect();
        assert_eq!(zeros.len(), 1);
        assert_eq!(zeros[0].1, 1);
        // Extremal weights exclude the zero weight.
        assert_eq!(s.extremal_weights().len(), 6);
        assert!(s.a1().is_one());
    }

    #[test]
    fn symplectic_weights_and_alpha() {
        let s = AhsStructure::new(AhsFamily::Symplectic { n: 3 }).unwrap();
        assert_eq!(s.dim_g1(), 6);
        // alpha = 2 pi_1 of A_{n-1}.
        let expected = s.g0s().fundamental_weight(0).scaled(&rat(2));
        assert_eq!(s.alpha(), &expected);
        // Two Weyl orbits: the diagonal orbit is extremal, of size n.
        assert_eq!(s.extremal_weights().len(), 3);
        // |alpha|^2 = n - 1 under the finalized form.
        assert_eq!(s.alpha().norm_sq(), rat(2));
        assert_eq!(*s.a1(), ratio(3, 2));
    }

    #[test]
    fn spinorial_weights_form_one_orbit() {
        let s = AhsStructure::new(AhsFamily::Spinorial { n: 4 }).unwrap();
        assert_eq!(s.dim_g1(), 6);
        assert_eq!(s.alpha(), &s.g0s().fundamental_weight(1));
        assert_eq!(s.extremal_weights().len(), 6);
        let report = s.smallness_check();
        assert_eq!(report.criterion, MultiplicityFreeCriterion::AllCoefficientsGeqMinusOne);
    }

    #[test]
    fn grassmannian_pairs_defining_and_dual() {
        let s = AhsStructure::new(AhsFamily::Grassmannian { p: 1, q: 2 }).unwrap();
        assert_eq!(s.dim_g1(), 6);
        // alpha = (pi_1 ; pi_q'), the defining weight paired with the dual
        // defining weight.
        let expected = &s.g0s().fundamental_weight(0) + &s.g0s().fundamental_weight(2);
        assert_eq!(s.alpha(), &expected);
        assert_eq!(s.extremal_weights().len(), 6);
    }

    #[test]
    fn projective_structure_drops_the_trivial_factor() {
        let s = AhsStructure::new(AhsFamily::Grassmannian { p: 0, q: 3 }).unwrap();
        assert_eq!(s.g0s().factor_types().len(), 1);
        assert_eq!(s.dim_g1(), 4);
        assert_eq!(s.alpha(), &s.g0s().fundamental_weight(2));
    }

    #[test]
    fn exceptional_structures_generate_their_orbits() {
        let e6 = AhsStructure::new(AhsFamily::E6).unwrap();
        assert_eq!(e6.g0s().type_name(), "D5");
        assert_eq!(e6.dim_g1(), 16);
        assert_eq!(e6.extremal_weights().len(), 16);

        let e7 = AhsStructure::new(AhsFamily::E7).unwrap();
        assert_eq!(e7.g0s().type_name(), "E6");
        assert_eq!(e7.dim_g1(), 27);
        assert_eq!(e7.extremal_weights().len(), 27);
    }

    #[test]
    fn degree_one_list_is_a_union_of_orbits_headed_by_alpha() {
        for f in all_test_families() {
            let s = AhsStructure::new(f).unwrap();
            let mut expected: Vec<Weight> = s.g0s().weyl_orbit(s.alpha());
            match f {
                // The zero weight forms its own orbit.
                AhsFamily::ConformalOdd { .. } => expected.push(s.g0s().zero_weight()),
                // Two orbits: the diagonal one through alpha and the
                // off-diagonal one through L_1 + L_2.
                AhsFamily::Symplectic { n } => {
                    let mut coords = vec![0i64; n as usize];
                    coords[0] = 1;
                    coords[1] = 1;
                    let second = s.g0s().weight_from_ints(&coords);
                    expected.extend(s.g0s().weyl_orbit(&second));
                }
                _ => {}
            }
            expected.sort();
            expected.dedup();
            let actual: Vec<Weight> =
                s.g1_weights().iter().map(|(w, _)| w.clone()).collect();
            assert_eq!(actual, expected, "{f}");
            // Alpha is the unique dominant member of its orbit.
            let dominant: Vec<_> = s
                .g0s()
                .weyl_orbit(s.alpha())
                .into_iter()
                .filter(|w| w.is_dominant())
                .collect();
            assert_eq!(dominant, vec![s.alpha().clone()], "{f}");
        }
    }

    #[test]
    fn grading_dual_pairs_to_one_with_every_degree_one_root() {
        for f in all_test_families() {
            let s = AhsStructure::new(f).unwrap();
            assert!(s.e_star().norm_sq().is_one());
            for beta in s.g1_ambient_roots() {
                assert!(beta.inner(s.e_star()).is_one(), "{f}");
            }
            // Ambient simple roots other than the crossed one pair to zero.
            for a in 0..s.ambient().rank() {
                let pairing = s.ambient().simple_root(a).inner(s.e_star());
                if a == s.crossed() {
                    assert!(!pairing.is_zero());
                } else {
                    assert!(pairing.is_zero());
                }
            }
        }
    }

    #[test]
    fn a1_matches_the_closed_form_everywhere() {
        for f in all_test_families() {
            let s = AhsStructure::new(f).unwrap();
            let expected = ratio(1, 2) * (s.alpha().norm_sq() + rat(1));
            assert_eq!(*s.a1(), expected);
        }
    }

    #[test]
    fn smallness_classification_per_family() {
        use MultiplicityFreeCriterion::*;
        let cases = [
            (AhsFamily::ConformalEven { n: 4 }, AllCoefficientsGeqMinusOne),
            (AhsFamily::Grassmannian { p: 1, q: 2 }, AllCoefficientsGeqMinusOne),
            (AhsFamily::Spinorial { n: 5 }, AllCoefficientsGeqMinusOne),
            (AhsFamily::E6, AllCoefficientsGeqMinusOne),
            (AhsFamily::E7, AllCoefficientsGeqMinusOne),
            (AhsFamily::ConformalOdd { n: 3 }, SingleMinusTwo),
            (AhsFamily::Symplectic { n: 4 }, SingleMinusTwo),
        ];
        for (f, expected) in cases {
            let s = AhsStructure::new(f).unwrap();
            let report = s.smallness_check();
            assert!(report.all_multiplicity_one);
            assert_eq!(report.criterion, expected, "{f}");
            match expected {
                AllCoefficientsGeqMinusOne => {
                    assert!(report.offending_indices.is_empty());
                    assert!(report.min_fundamental_coefficient >= rat(-1));
                }
                SingleMinusTwo => {
                    assert!(!report.offending_indices.is_empty());
                    assert_eq!(report.min_fundamental_coefficient, rat(-2));
                }
                Neither => unreachable!(),
            }
        }
    }

    #[test]
    fn restrict_and_embed_are_mutually_inverse() {
        for f in all_test_families() {
            let s = AhsStructure::new(f).unwrap();
            let lambda = s.g0s().rho();
            let w = ratio(-7, 3);
            let ambient = s.embed(&lambda, &w);
            assert_eq!(s.restrict(&ambient), lambda, "{f}");
            assert_eq!(ambient.inner(s.e_star()), w, "{f}");
            // Restriction kills exactly the grading direction.
            assert!(s.restrict(s.e_star()).is_zero());
        }
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(AhsStructure::new(AhsFamily::ConformalEven { n: 2 }).is_err());
        assert!(AhsStructure::new(AhsFamily::Symplectic { n: 1 }).is_err());
        assert!(AhsStructure::new(AhsFamily::Spinorial { n: 2 }).is_err());
        assert!(AhsStructure::new(AhsFamily::Grassmannian { p: 0, q: 0 }).is_err());
    }

    #[test]
    fn family_spec_strings_round_trip() {
        for f in all_test_families() {
            assert_eq!(AhsFamily::parse(&f.to_string()).unwrap(), f);
        }
        assert!(AhsFamily::parse("conf-even").is_err());
        assert!(AhsFamily::parse("nope:3").is_err());
        assert!(AhsFamily::parse("grassmannian:1").is_err());
    }
}
