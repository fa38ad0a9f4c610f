//! Command-line interface: catalog inspection, decompositions, constants,
//! formula generation, obstruction audits, and the universality sweep.
//!
//! Exit codes: 0 on success, 1 on domain errors (invalid weights, broken
//! dominance chains, rejected directions), 2 on usage errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use ahs_ops::casimir::{self, OperatorData};
use ahs_ops::catalog::{AhsFamily, AhsStructure, MultiplicityFreeCriterion};
use ahs_ops::coeffs::MultiIndex;
use ahs_ops::decomp;
use ahs_ops::error::{Error, Result};
use ahs_ops::operator::{self, GammaConvention};
use ahs_ops::rootsystem::{RootSystem, Weight};
use ahs_ops::{fmt_rat, parse_rat, rat, Rat};

#[derive(Parser)]
#[command(
    name = "ahs-ops",
    version,
    about = "Exact decomposition data, Casimir constants and universal operator formulas for |1|-graded geometries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the available structures, or inspect one.
    Catalog {
        /// Structure spec: grassmannian:p,q | conf-even:n | conf-odd:n |
        /// symplectic:n | spinorial:n | e6 | e7
        #[arg(long)]
        structure: Option<String>,
    },
    /// Decompose the product of the degree-one module (or of --mu) with
    /// V_lambda into irreducibles.
    Decompose {
        #[arg(long)]
        structure: String,
        /// Weight spec: fundamental coefficients "1,0,0" or an L-combination
        /// like "L1+L2".
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Optional second highest weight; its full weight system is
        /// computed first.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// Dimension cap for weight-system computations.
        #[arg(long, default_value_t = decomp::DEFAULT_DIMENSION_CAP)]
        cap: u64,
    },
    /// Print the normalization constants of a structure, and with
    /// (lambda, theta, k) the full constant ladder and invariance weight.
    Constants {
        #[arg(long)]
        structure: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Print the complete order-k formula for the operator with data
    /// (lambda, theta, k).
    Formula {
        #[arg(long)]
        structure: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long)]
        k: u32,
        /// plain | latex | json
        #[arg(long, default_value = "plain")]
        format: String,
        /// gamma-tilde | gamma
        #[arg(long, default_value = "gamma-tilde")]
        convention: String,
        /// Also verify each link of the straight-line chain by an explicit
        /// decomposition.
        #[arg(long)]
        verify_chain: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Evaluate every obstruction coefficient at the invariance weight and
    /// report the grid.
    Audit {
        #[arg(long)]
        structure: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long)]
        k: u32,
    },
    /// Universality sweep: rescaled coefficient lists across structures,
    /// module data and orders, with a machine-readable report.
    Sweep {
        #[arg(long, default_value_t = 5)]
        kmax: u32,
        /// Comma-separated structure specs; defaults to one structure per
        /// family shape.
        #[arg(long)]
        structures: Option<String>,
        /// Bound on the fundamental coefficients of the swept lambdas.
        #[arg(long, default_value_t = 1)]
        coeff_bound: u32,
        /// Also assert the vanishing of the full obstruction grid per case.
        #[arg(long)]
        audit_obstructions: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli.command) {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

fn run(command: Command) -> Result<()> {
    let mut out = String::new();
    match command {
        Command::Catalog { structure } => match structure {
            None => catalog_overview(&mut out),
            Some(spec) => catalog_detail(&mut out, &load(&spec)?)?,
        },
        Command::Decompose { structure, lambda, mu, cap } => {
            let s = load(&structure)?;
            let lambda = parse_weight(s.g0s(), &lambda)?;
            decompose(&mut out, &s, &lambda, mu.as_deref(), cap)?;
        }
        Command::Constants { structure, lambda, theta, k } => {
            let s = load(&structure)?;
            constants(&mut out, &s)?;
            if let (Some(l), Some(t), Some(k)) = (&lambda, &theta, k) {
                let l = parse_weight(s.g0s(), l)?;
                let t = parse_weight(s.g0s(), t)?;
                ladder(&mut out, &s, &l, &t, k)?;
            }
        }
        Command::Formula {
            structure,
            lambda,
            theta,
            k,
            format,
            convention,
            verify_chain,
            output,
        } => {
            let s = load(&structure)?;
            let lambda = parse_weight(s.g0s(), &lambda)?;
            let theta = parse_weight(s.g0s(), &theta)?;
            if verify_chain {
                decomp::unique_directed_component(&s, &lambda, &theta, k)?;
            }
            let data = casimir::operator_data(&s, &lambda, &theta, k)?;
            let convention = match convention.as_str() {
                "gamma-tilde" => GammaConvention::GammaTilde,
                "gamma" => GammaConvention::Gamma,
                other => return Err(Error::UnknownFormat(other.to_string())),
            };
            let formula = operator::build_formula(&s, &data, convention)?;
            out.push_str(&formula.render(&format)?);
            out.push('\n');
            return emit(out, output);
        }
        Command::Audit { structure, lambda, theta, k } => {
            let s = load(&structure)?;
            let lambda = parse_weight(s.g0s(), &lambda)?;
            let theta = parse_weight(s.g0s(), &theta)?;
            let data = casimir::operator_data(&s, &lambda, &theta, k)?;
            audit(&mut out, &s, &data)?;
        }
        Command::Sweep { kmax, structures, coeff_bound, audit_obstructions, output } => {
            let specs = structures.unwrap_or_else(|| {
                "conf-even:4,conf-odd:3,symplectic:3,spinorial:4,grassmannian:1,2".to_string()
            });
            sweep(&mut out, &specs, kmax, coeff_bound, audit_obstructions)?;
            return emit(out, output);
        }
    }
    emit(out, None)
}

fn emit(out: String, path: Option<PathBuf>) -> Result<()> {
    match path {
        Some(p) => {
            let mut f = std::fs::File::create(&p)
                .unwrap_or_else(|e| panic!("cannot create {}: {e}", p.display()));
            f.write_all(out.as_bytes()).expect("write report");
        }
        None => print!("{out}"),
    }
    Ok(())
}

fn load(spec: &str) -> Result<AhsStructure> {
    AhsStructure::new(AhsFamily::parse(spec)?)
}

/// Weight specs: "0", fundamental coefficients "1,0,2", or an L-combination
/// such as "L1", "-L1", "2L1+L2", "3/2*L1 - L3" over the concatenated
/// coordinates.
fn parse_weight(sys: &RootSystem, spec: &str) -> Result<Weight> {
    let spec = spec.trim();
    let bad = || Error::ParseWeight(spec.to_string());
    if spec.is_empty() {
        return Err(bad());
    }
    if spec == "0" {
        return Ok(sys.zero_weight());
    }
    if spec.to_ascii_uppercase().contains('L') {
        let mut coords = vec![Rat::from_integer(0.into()); sys.dim()];
        let normalized = spec.replace('-', "+-");
        for term in normalized.split('+') {
            let term = term.trim();
            if term.is_empty() {
                continue;
            }
            let upper = term.to_ascii_uppercase();
            let lpos = upper.find('L').ok_or_else(bad)?;
            let (raw_coeff, index_part) = term.split_at(lpos);
            let raw_coeff = raw_coeff.trim().trim_end_matches('*').trim();
            let coeff = match raw_coeff {
                "" => rat(1),
                "-" => rat(-1),
                c => parse_rat(c).map_err(|_| bad())?,
            };
            let index: usize = index_part[1..].trim().parse().map_err(|_| bad())?;
            if index == 0 || index > sys.dim() {
                return Err(bad());
            }
            coords[index - 1] = &coords[index - 1] + coeff;
        }
        Ok(sys.weight(coords))
    } else {
        let coeffs: Vec<Rat> = spec
            .split(',')
            .map(|t| parse_rat(t).map_err(|_| bad()))
            .collect::<Result<_>>()?;
        if coeffs.len() != sys.rank() {
            return Err(bad());
        }
        Ok(sys.from_fundamental(&coeffs))
    }
}

fn fmt_weight(w: &Weight) -> String {
    let fund: Vec<String> = w.fundamental_coeffs().iter().map(fmt_rat).collect();
    format!("[{}] = {}", fund.join(","), w)
}

fn catalog_overview(out: &mut String) {
    out.push_str("available structures:\n");
    let rows = [
        ("grassmannian:p,q", "A_{p+q+1} over A_p x A_q; projective when p = 0"),
        ("conf-even:n", "D_{n+1} over D_n (n >= 3)"),
        ("conf-odd:n", "B_{n+1} over B_n (n >= 1)"),
        ("symplectic:n", "C_n over A_{n-1} (n >= 2)"),
        ("spinorial:n", "D_n over A_{n-1} (n >= 3)"),
        ("e6", "E6 over D5"),
        ("e7", "E7 over E6"),
    ];
    for (spec, desc) in rows {
        out.push_str(&format!("  {spec:<18} {desc}\n"));
    }
}

fn catalog_detail(out: &mut String, s: &AhsStructure) -> Result<()> {
    out.push_str(&format!("structure:      {}\n", s.family()));
    out.push_str(&format!("ambient:        {}\n", s.ambient().type_name()));
    out.push_str(&format!("g0s:            {}\n", s.g0s().type_name()));
    out.push_str(&format!("dim g1:         {}\n", s.dim_g1()));
    out.push_str(&format!("alpha:          {}\n", fmt_weight(s.alpha())));
    out.push_str(&format!("|alpha|^2:      {}\n", fmt_rat(&s.alpha().norm_sq())));
    out.push_str(&format!("A1:             {}\n", fmt_rat(s.a1())));
    let report = s.smallness_check();
    let class = match report.criterion {
        MultiplicityFreeCriterion::AllCoefficientsGeqMinusOne => "all fundamental coefficients >= -1",
        MultiplicityFreeCriterion::SingleMinusTwo => "single -2 coefficient per weight",
        MultiplicityFreeCriterion::Neither => "outside both smallness criteria",
    };
    out.push_str(&format!(
        "smallness:      {class} (min coefficient {})\n",
        fmt_rat(&report.min_fundamental_coefficient)
    ));
    out.push_str(&format!("extremal count: {}\n", s.extremal_weights().len()));
    out.push_str("g1 weights:\n");
    for (w, m) in s.g1_weights() {
        out.push_str(&format!("  {}  x{m}\n", fmt_weight(w)));
    }
    Ok(())
}

fn decompose(
    out: &mut String,
    s: &AhsStructure,
    lambda: &Weight,
    mu: Option<&str>,
    cap: u64,
) -> Result<()> {
    let (dec, factor_dim, factor_name) = match mu {
        None => {
            let dec = decomp::decompose_g1_tensor(s, lambda)?;
            (dec, num_bigint::BigInt::from(s.dim_g1()), "g1".to_string())
        }
        Some(spec) => {
            let mu = parse_weight(s.g0s(), spec)?;
            let ws = decomp::weight_system(&mu, cap)?;
            let dec = decomp::klimyk(lambda, &ws)?;
            (dec, s.g0s().weyl_dimension(&mu)?, format!("V_{}", fmt_weight(&mu)))
        }
    };
    let lambda_dim = s.g0s().weyl_dimension(lambda)?;
    out.push_str(&format!("structure: {}\n", s.family()));
    out.push_str(&format!("lambda:    {} (dim {lambda_dim})\n", fmt_weight(lambda)));
    out.push_str(&format!("factor:    {factor_name} (dim {factor_dim})\n"));
    out.push_str(&format!("components: {}\n", dec.len()));
    for (w, m) in dec.components() {
        let dim = s.g0s().weyl_dimension(w)?;
        out.push_str(&format!("  {}  dim {dim}  x{m}\n", fmt_weight(w)));
    }
    let total = dec.total_dimension(s.g0s());
    let expected = factor_dim * lambda_dim;
    assert_eq!(total, expected, "dimension bookkeeping");
    out.push_str(&format!("dimension check: {total} = {expected} ok\n"));
    out.push_str(&format!(
        "multiplicity-free: {}\n",
        if dec.is_multiplicity_free() { "yes" } else { "no" }
    ));
    Ok(())
}

fn constants(out: &mut String, s: &AhsStructure) -> Result<()> {
    out.push_str(&format!("structure: {}\n", s.family()));
    out.push_str(&format!("alpha:     {}\n", fmt_weight(s.alpha())));
    out.push_str(&format!("|alpha|^2: {}\n", fmt_rat(&s.alpha().norm_sq())));
    out.push_str(&format!("A1:        {}\n", fmt_rat(s.a1())));
    out.push_str(&format!("dim g1:    {}\n", s.dim_g1()));
    out.push_str("components of the degree-one square and their constants:\n");
    for (w, a) in casimir::a_constants(s)? {
        out.push_str(&format!("  {}  A = {}\n", fmt_weight(&w), fmt_rat(&a)));
    }
    Ok(())
}

fn ladder(
    out: &mut String,
    s: &AhsStructure,
    lambda: &Weight,
    theta: &Weight,
    k: u32,
) -> Result<()> {
    let ladder = casimir::c_ladder(s, lambda, theta, k)?;
    out.push_str(&format!("lambda: {}\n", fmt_weight(lambda)));
    out.push_str(&format!("theta:  {}\n", fmt_weight(theta)));
    out.push_str(&format!("k:      {k}\n"));
    for (j, c) in ladder.values.iter().enumerate() {
        out.push_str(&format!("c_{j} = {}\n", fmt_rat(c)));
    }
    let w = casimir::conformal_weight(s, lambda, theta, k)?;
    out.push_str(&format!("w = {}\n", fmt_rat(&w)));
    Ok(())
}

fn audit(out: &mut String, s: &AhsStructure, data: &OperatorData) -> Result<()> {
    let report = operator::obstruction_audit(s, data)?;
    out.push_str(&format!(
        "obstruction grid for k = {} ({} entries):\n",
        report.k,
        report.entries.len()
    ));
    for (j, shape, value) in &report.entries {
        out.push_str(&format!("  j={j} s={shape}: {}\n", fmt_rat(value)));
    }
    out.push_str("all obstruction coefficients vanish\n");
    Ok(())
}

fn sweep(
    out: &mut String,
    specs: &str,
    kmax: u32,
    coeff_bound: u32,
    audit_obstructions: bool,
) -> Result<()> {
    let structures: Vec<AhsStructure> = split_structure_list(specs)
        .into_iter()
        .map(|spec| load(&spec))
        .collect::<Result<_>>()?;

    let mut cases = 0usize;
    let mut failures = 0usize;
    for k in 1..=kmax {
        let expected: Vec<(MultiIndex, u32, Rat)> = operator::universal_coefficients(k)
            .into_iter()
            .map(|t| (t.s, t.i, t.coeff))
            .collect();
        for s in &structures {
            for lambda in dominant_box(s.g0s(), coeff_bound) {
                for theta in s.extremal_weights() {
                    let data = match casimir::operator_data(s, &lambda, &theta, k) {
                        Ok(d) => d,
                        Err(_) => continue, // chain leaves the dominant cone
                    };
                    let formula =
                        operator::build_formula(s, &data, GammaConvention::GammaTilde)?;
                    let got: Vec<(MultiIndex, u32, Rat)> = formula
                        .terms
                        .iter()
                        .map(|t| (t.s.clone(), t.i, t.coeff.clone()))
                        .collect();
                    let matches = got == expected;
                    let obstructions_clear = if audit_obstructions {
                        operator::obstruction_audit(s, &data).is_ok()
                    } else {
                        true
                    };
                    cases += 1;
                    if !matches || !obstructions_clear {
                        failures += 1;
                    }
                    let coeffs: Vec<String> =
                        formula.terms.iter().map(|t| fmt_rat(&t.coeff)).collect();
                    let record = serde_json::json!({
                        "k": k,
                        "structure": s.family().to_string(),
                        "lambda": lambda.fundamental_coeffs().iter().map(fmt_rat).collect::<Vec<_>>(),
                        "theta": theta.canonical().iter().map(fmt_rat).collect::<Vec<_>>(),
                        "coeffs": coeffs,
                        "match": matches,
                    });
                    out.push_str(&record.to_string());
                    out.push('\n');
                }
            }
        }
    }
    let verdict = serde_json::json!({
        "verdict": if failures == 0 { "pass" } else { "fail" },
        "cases": cases,
        "failures": failures,
    });
    out.push_str(&verdict.to_string());
    out.push('\n');
    if failures > 0 {
        return Err(Error::UnknownFormat(format!("{failures} sweep case(s) failed")));
    }
    Ok(())
}

/// Structure specs are comma separated, but the grassmannian spec itself
/// contains a comma; accept both by re-joining numeric continuations.
fn split_structure_list(specs: &str) -> Vec<String> {
    let mut parts: Vec<String> = Vec::new();
    for raw in specs.split(',') {
        let raw = raw.trim();
        if raw.is_empty() {
            continue;
        }
        let is_continuation = raw.chars().all(|c| c.is_ascii_digit())
            && parts.last().is_some_and(|p: &String| p.contains(':'));
        if is_continuation {
            let last = parts.last_mut().unwrap();
            last.push(',');
            last.push_str(raw);
        } else {
            parts.push(raw.to_string());
        }
    }
    parts
}

/// All dominant integral weights with fundamental coefficients in
/// `0..=bound`, in lexicographic order.
fn dominant_box(sys: &RootSystem, bound: u32) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<i64>> = vec![vec![]];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == sys.rank() {
            out.push(sys.from_fundamental(
                &prefix.iter().map(|&c| rat(c)).collect::<Vec<_>>(),
            ));
            continue;
        }
        // Depth-first with reversed push order keeps the output sorted.
        for c in (0..=bound as i64).rev() {
            let mut next = prefix.clone();
            next.push(c);
            stack.push(next);
        }
    }
    out
}
