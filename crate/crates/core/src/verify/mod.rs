//! The verification suites: each block checks one family of identities
//! exactly and records every comparison as a [`Check`].

mod cache;

pub use cache::{BracketCache, CacheStats, SPOT_CHECKS};

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_traits::One;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{int, PolyExpr, Scalar, Symbol};
use crate::charts::{alpha_table_pairs, tilde_generator, verify_alpha_identity_mod, MAX_PAIR_PRECISION};
use crate::error::{Error, Result};
use crate::fock::{FieldExpr, FockSpace, LambdaPolynomial};
use crate::graded::relations::{
    derived_relations, form_polynomial, three_term_form, two_term_alpha, two_term_pairs, two_term_words,
    vanishing_pairs,
};
use crate::graded::{
    enumerate_standard, expand_word, format_combination, format_word, leading_monomial, weyl, StandardWord, WeylGen,
    WeylLabel,
};
use crate::invariants::{
    check_criterion, dimension_report, invariant_subspace, nested_leading_term, nested_operator, weight_basis,
};
use crate::report::{Check, Status};
use crate::sections::{
    certify_product, gr2_symbol, section, shifted_virasoro, verify_descent_relations, weight_space_report, BasisCache,
    SectionName,
};

/// Highest weight at which section products are certified.
pub const CLOSURE_WEIGHT: i64 = 3;
/// Highest weight of the leading-monomial and invariance-criterion checks.
pub const LEADING_WEIGHT: i64 = 3;
/// Highest weight of the lifted-basis checks.
pub const BASIS_WEIGHT: i64 = 2;
/// Derived quadratic relations are checked for `∂^{2k}`, `∂^{2k+1}` with `k` up to this.
pub const DERIVED_ORDER: u32 = 3;
/// Highest `n` for which `ℙ_n` is checked to kill the invariants.
pub const NESTED_ORDER: u32 = 2;
/// Pairs of standard words sampled for leading-monomial multiplicativity.
pub const SAMPLED_PAIRS: usize = 512;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Settings shared by every suite. The defaults reproduce the acceptance run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub max_weight: i64,
    /// Chart truncation order `K`.
    pub trunc_k: i32,
    pub format: OutputFormat,
    pub cache: Option<PathBuf>,
    /// Drives the sampled checks and the cache spot checks only.
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_weight: 4,
            trunc_k: MAX_PAIR_PRECISION,
            format: OutputFormat::Text,
            cache: None,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    N4,
    Quadratics,
    Invariants,
    Charts,
    Basis,
    All,
}

impl Suite {
    /// The suites that `all` runs, in order.
    pub const PARTS: [Suite; 5] = [Suite::N4, Suite::Quadratics, Suite::Invariants, Suite::Charts, Suite::Basis];

    pub fn name(self) -> &'static str {
        match self {
            Suite::N4 => "n4",
            Suite::Quadratics => "quadratics",
            Suite::Invariants => "invariants",
            Suite::Charts => "charts",
            Suite::Basis => "basis",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::PARTS
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A named group of checks; it passes when every check does.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub name: String,
    pub status: Status,
    pub checks: Vec<Check>,
}

impl Block {
    pub fn new(name: impl Into<String>, checks: Vec<Check>) -> Self {
        let status = Status::from_bool(checks.iter().all(Check::passed));
        Block {
            name: name.into(),
            status,
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportConfig {
    pub max_weight: i64,
    pub trunc_k: i32,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub config: ReportConfig,
    pub status: Status,
    pub blocks: Vec<Block>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn check_count(&self) -> usize {
        self.blocks.iter().map(|b| b.checks.len()).sum()
    }

    /// One line per block, followed by each failing check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for b in &self.blocks {
            out.push_str(&format!("[{}] {} ({} checks)\n", b.status, b.name, b.checks.len()));
            for c in b.failures() {
                out.push_str(&format!("    {c}\n"));
            }
        }
        out.push_str(&format!(
            "{}: {} ({} checks)\n",
            self.suite,
            self.status,
            self.check_count()
        ));
        out
    }
}

/// Runs a suite by name.
pub fn run_named(name: &str, config: &RunConfig) -> Result<(VerifyReport, CacheStats)> {
    run_suite(name.parse()?, config)
}

/// Runs a suite and returns its report together with the cache statistics.
pub fn run_suite(suite: Suite, config: &RunConfig) -> Result<(VerifyReport, CacheStats)> {
    if config.trunc_k > MAX_PAIR_PRECISION {
        return Err(Error::TruncationTooDeep {
            requested: config.trunc_k,
            supported: MAX_PAIR_PRECISION,
        });
    }
    let space = FockSpace::new(2);
    let mut cache = match &config.cache {
        Some(path) => BracketCache::open(path, &space, config.seed)?,
        None => BracketCache::in_memory(),
    };
    let parts: Vec<Suite> = match suite {
        Suite::All => Suite::PARTS.to_vec(),
        s => vec![s],
    };
    let mut blocks = Vec::new();
    for part in parts {
        match part {
            Suite::N4 => {
                blocks.push(base_contractions(&space));
                blocks.push(descent_block(&space)?);
                blocks.push(central_charge_block(&space)?);
                blocks.push(closure_block(&space, &mut cache, config.max_weight.min(CLOSURE_WEIGHT))?);
                blocks.push(symbol_block(&space)?);
            }
            Suite::Quadratics => blocks.push(quadratic_block(DERIVED_ORDER)?),
            Suite::Invariants => {
                blocks.push(dimension_block(config.max_weight));
                blocks.push(leading_block(config.max_weight.min(LEADING_WEIGHT), config.seed, SAMPLED_PAIRS)?);
                blocks.push(criterion_block(config.max_weight.min(LEADING_WEIGHT)));
            }
            Suite::Charts => blocks.push(chart_block(config.trunc_k)?),
            Suite::Basis => blocks.push(basis_block(&space, config.max_weight.min(BASIS_WEIGHT))?),
            Suite::All => unreachable!("expanded above"),
        }
    }
    cache.save()?;
    let status = Status::from_bool(blocks.iter().all(Block::passed));
    let report = VerifyReport {
        suite,
        config: ReportConfig {
            max_weight: config.max_weight,
            trunc_k: config.trunc_k,
            seed: config.seed,
        },
        status,
        blocks,
    };
    Ok((report, cache.stats))
}

fn expected_contraction(a: (Symbol, u8), b: (Symbol, u8)) -> LambdaPolynomial {
    use Symbol::*;
    let mut out = LambdaPolynomial::new();
    if a.1 != b.1 {
        return out;
    }
    let value = match (a.0, b.0) {
        (Beta, Gamma) | (B, C) | (C, B) => int(1),
        (Gamma, Beta) => int(-1),
        _ => return out,
    };
    out.insert(0, FieldExpr::scalar(value));
    out
}

/// Every bracket between the `4N` generators against the free-field table.
pub fn base_contractions(space: &FockSpace) -> Block {
    let gens = space.generators();
    let mut checks = Vec::new();
    for (sa, ia, a) in &gens {
        for (sb, ib, b) in &gens {
            let got = space.lambda_bracket(a, b);
            let want = expected_contraction((*sa, *ia), (*sb, *ib));
            checks.push(Check::equality(format!("[{a}_λ {b}]"), &got, &want));
        }
    }
    Block::new("base contractions", checks)
}

pub fn descent_block(space: &FockSpace) -> Result<Block> {
    Ok(Block::new("descent relations", verify_descent_relations(space)?))
}

/// `L' = L − ½∂J` closes on itself with quartic pole 3.
pub fn central_charge_block(space: &FockSpace) -> Result<Block> {
    let l = shifted_virasoro(space)?;
    let expected = [
        (3, FieldExpr::scalar(int(3))),
        (2, FieldExpr::zero()),
        (1, l.scale(&int(2))),
        (0, l.translation()),
    ];
    let bracket = space.lambda_bracket(&l, &l);
    let mut checks: Vec<Check> = expected
        .iter()
        .map(|(n, want)| Check::equality(format!("L'∘{n}L'"), &bracket.get(*n), want))
        .collect();
    checks.push(Check::equality("order of [L'_λ L']", &bracket.order(), &4));
    Ok(Block::new("central charge", checks))
}

/// Every nonzero product of two sections of weight at most `max_weight`
/// is solved in the lifted standard words of its weight.
pub fn closure_block(space: &FockSpace, cache: &mut BracketCache, max_weight: i64) -> Result<Block> {
    let bases = BasisCache::new(space);
    let fields = SectionName::ALL
        .iter()
        .map(|&n| Ok((n, section(space, n)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut checks = Vec::new();
    for (a, fa) in &fields {
        for (b, fb) in &fields {
            let bracket = cache.bracket(space, fa, fb)?;
            for (n, value) in bracket.entries() {
                let weight = a.weight() + b.weight() - n as i64 - 1;
                if weight > max_weight {
                    continue;
                }
                let relation = format!("{a}∘{n}{b} ∈ span of weight-{weight} section words");
                let check = match certify_product(&bases, *a, n, *b, value) {
                    Ok(coords) => Check::new(relation, true, value.to_string(), format_combination(&coords)),
                    Err(Error::ClosureFailure(w)) => {
                        Check::new(relation, false, value.to_string(), "no solution").with_witness(w)
                    }
                    Err(e) => return Err(e),
                };
                checks.push(check);
            }
        }
    }
    Ok(Block::new("closure", checks))
}

/// `gr2_symbol` of each section against its quadratic generator.
pub fn symbol_block(space: &FockSpace) -> Result<Block> {
    let expected = [
        (SectionName::L, weyl(WeylLabel::BetaDGamma, 0)),
        (SectionName::J, -weyl(WeylLabel::BC, 0)),
        (SectionName::Q, weyl(WeylLabel::BetaC, 0)),
        (SectionName::G, weyl(WeylLabel::DGammaB, 0)),
        (SectionName::B, weyl(WeylLabel::BetaB, 0)),
        (SectionName::C, -weyl(WeylLabel::DGammaC, 0)),
        (SectionName::D, weyl(WeylLabel::BB, 0)),
        (SectionName::E, weyl(WeylLabel::CC, 0)),
    ];
    let checks = expected
        .into_iter()
        .map(|(n, p)| Ok(Check::equality(format!("symbol({n})"), &gr2_symbol(&section(space, n)?), &p)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Block::new("symbols", checks))
}

/// The vanishing, two-term and three-term relations, and their derivatives.
pub fn quadratic_block(max_k: u32) -> Result<Block> {
    let mut checks = Vec::new();
    for (xy, z) in vanishing_pairs() {
        let word = [WeylGen::new(xy, 0), WeylGen::new(WeylLabel::from_letters(z, z).expect("zz label"), 0)];
        checks.push(Check::equality(format_word(&word), &expand_word(&word), &PolyExpr::zero()));
    }
    for (xy, z) in two_term_pairs() {
        let (lhs, rhs) = two_term_words(xy, z);
        let relation = format!("{} + α {}", format_word(&lhs), format_word(&rhs));
        checks.push(match two_term_alpha(xy, z) {
            Ok(alpha) => {
                let sum = &expand_word(&lhs) + &expand_word(&rhs).scale(&alpha);
                Check::equality(relation, &sum, &PolyExpr::zero()).with_witness(format!("α = {alpha}"))
            }
            Err(e) => Check::new(relation, false, e.to_string(), "0"),
        });
    }
    checks.push(Check::equality(
        "A[betadgamma] A[bc] + A[betab] A[dgammac] + A[betac] A[dgammab]",
        &form_polynomial(&three_term_form()),
        &PolyExpr::zero(),
    ));
    for rel in derived_relations(max_k)? {
        let result = rel.check();
        let leading = result.leading.map_or("none".to_string(), |w| format_word(&w));
        checks.push(
            Check::new(rel.describe(), result.passed(), rel.polynomial().to_string(), "0")
                .with_witness(format!("leading {leading}")),
        );
    }
    Ok(Block::new("quadratic relations", checks))
}

/// `dim R^{sl₂[t]}_w = #standard words = rank of their expansions` for `w ≤ max_weight`.
pub fn dimension_block(max_weight: i64) -> Block {
    let mut checks = Vec::new();
    for w in 0..=max_weight {
        let r = dimension_report(w);
        checks.push(
            Check::new(
                format!("dim invariants(w={w}) = #standard = rank"),
                r.matches,
                r.dim_invariants.to_string(),
                format!("{} = {}", r.dim_standard, r.rank_standard),
            )
            .with_witness(format!("standard words invariant: {}", r.standard_invariant)),
        );
        if w == 0 {
            checks.push(Check::equality("dim invariants(w=0)", &r.dim_invariants, &2));
        }
    }
    Block::new("invariant dimensions", checks)
}

/// Injectivity of the leading monomial on standard words up to `max_weight`,
/// and `L(ss') = L(s)L(s')` on `samples` seeded pairs with `L(s)L(s') ≠ 0`.
pub fn leading_block(max_weight: i64, seed: u64, samples: usize) -> Result<Block> {
    let words: Vec<StandardWord> = (0..=max_weight).flat_map(enumerate_standard).collect();
    let leads = words
        .iter()
        .map(|s| leading_monomial(&s.expand()))
        .collect::<Result<Vec<_>>>()?;
    let distinct: BTreeSet<_> = leads.iter().collect();
    let mut checks = vec![Check::equality(
        format!("distinct leading monomials, weight ≤ {max_weight}"),
        &distinct.len(),
        &words.len(),
    )];
    let mut pairs: Vec<(usize, usize)> = (0..words.len())
        .flat_map(|i| (0..words.len()).map(move |j| (i, j)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pairs.shuffle(&mut rng);
    let mut tested = 0;
    let mut failures = Vec::new();
    for (i, j) in pairs {
        if tested == samples {
            break;
        }
        let Some((_, prod)) = leads[i].mul(&leads[j]) else {
            continue;
        };
        tested += 1;
        let lp = leading_monomial(&(&words[i].expand() * &words[j].expand()))?;
        if lp != prod {
            failures.push(format!("L({} · {}) = {lp}, expected {prod}", words[i], words[j]));
        }
    }
    let mut check = Check::new(
        format!("L(ss') = L(s)L(s') on {tested} sampled pairs"),
        failures.is_empty(),
        failures.len().to_string(),
        "0",
    );
    if let Some(first) = failures.first() {
        check = check.with_witness(first.clone());
    }
    checks.push(check);
    Ok(Block::new("leading monomials", checks))
}

/// The criterion subspace equals the invariants, `ℙ_n` kills the invariants,
/// and `ℙ₀` equals its leading term on weights ≤ 2.
pub fn criterion_block(max_weight: i64) -> Block {
    let mut checks = Vec::new();
    for w in 0..=max_weight {
        let r = check_criterion(w);
        checks.push(Check::new(
            format!("criterion subspace = invariants (w={w})"),
            r.equal,
            r.dim_criterion.to_string(),
            r.dim_invariants.to_string(),
        ));
        let inv = invariant_subspace(w);
        for n in 0..=NESTED_ORDER {
            let bad = inv.iter().find(|f| !nested_operator(n, f).is_zero());
            let mut check = Check::new(
                format!("ℙ_{n} kills invariants (w={w})"),
                bad.is_none(),
                format!("{} images checked", inv.len()),
                "0",
            );
            if let Some(f) = bad {
                check = check.with_witness(f.to_string());
            }
            checks.push(check);
        }
    }
    for w in 0..=max_weight.min(2) {
        let space = weight_basis(w);
        let bad = space.basis.iter().find(|m| {
            let f = PolyExpr::term(Scalar::one(), (*m).clone());
            nested_operator(0, &f) != nested_leading_term(0, &f)
        });
        let mut check = Check::new(
            format!("ℙ_0 = -(∂γ²)²/2 Gt² on weight {w}"),
            bad.is_none(),
            format!("{} monomials", space.dim()),
            "agree",
        );
        if let Some(m) = bad {
            check = check.with_witness(m.to_string());
        }
        checks.push(check);
    }
    Block::new("invariance criterion", checks)
}

/// The transformation law for all table pairs with `i + j ≤ 2` modulo `t^k`,
/// and odd parity of every chart generator for `l ≤ 2` modulo `t^{k+1}`.
pub fn chart_block(k: i32) -> Result<Block> {
    let mut checks = Vec::new();
    for (x, y) in alpha_table_pairs() {
        for i in 0..=2 {
            for j in 0..=(2 - i) {
                let r = verify_alpha_identity_mod(x, y, i, j, k)?;
                checks.push(
                    Check::new(
                        format!("A~{}, i={i}, j={j}", r.pair),
                        r.status == Status::Pass,
                        r.residual.clone(),
                        "0",
                    )
                    .with_witness(format!("α = {}", r.alpha)),
                );
            }
        }
    }
    for s in Symbol::ALL {
        for j in 1..=2 {
            for l in 0..=2 {
                let g = tilde_generator(s, j, l, k + 1)?;
                checks.push(Check::new(
                    format!("{}~^{j} l={l} has odd powers only", s.name()),
                    g.has_parity(true),
                    g.to_string(),
                    "odd",
                ));
            }
        }
    }
    Ok(Block::new("chart transformation", checks))
}

/// Independence and symbols of the lifted standard words up to `max_weight`.
pub fn basis_block(space: &FockSpace, max_weight: i64) -> Result<Block> {
    let mut checks = Vec::new();
    for w in 0..=max_weight {
        let r = weight_space_report(space, w)?;
        checks.push(Check::equality(
            format!("rank of lifted words (w={w})"),
            &r.dimension,
            &r.words.len(),
        ));
        checks.push(Check::new(
            format!("symbol(α(s)) = s (w={w})"),
            r.symbols_match,
            r.words.join(", "),
            "expanded words",
        ));
    }
    Ok(Block::new("lifted basis", checks))
}
