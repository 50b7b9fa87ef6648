//! `sl₂[t]`-invariants of `R` by weight truncation, the dimension check
//! against standard words, the invariance criterion and its nested operators.
//!
//! Weight spaces are split into sectors by the number of letters of each
//! symbol; the action of `sl₂[t]` preserves these counts.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::One;
use serde::Serialize;

use crate::algebra::{inv_factorial, GenVar, PolyExpr, Scalar, SuperMonomial, Symbol};
use crate::graded::{act, enumerate_standard, LieGen, Sl2};
use crate::linalg::{kernel, Echelon, SparseVec};

/// Letter counts `(β, γ, b, c)` of a monomial.
pub type Sector = [u32; 4];

fn symbol_slot(s: Symbol) -> usize {
    match s {
        Symbol::Beta => 0,
        Symbol::Gamma => 1,
        Symbol::B => 2,
        Symbol::C => 3,
    }
}

pub fn sector_of(m: &SuperMonomial) -> Sector {
    let mut out = [0; 4];
    for v in m.vars() {
        out[symbol_slot(v.symbol)] += 1;
    }
    out
}

/// The monomial basis of the weight-`w` part of `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSpace {
    pub weight: i64,
    pub basis: Vec<SuperMonomial>,
}

impl WeightSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn sectors(&self) -> BTreeMap<Sector, Vec<SuperMonomial>> {
        let mut out: BTreeMap<Sector, Vec<SuperMonomial>> = BTreeMap::new();
        for m in &self.basis {
            out.entry(sector_of(m)).or_default().push(m.clone());
        }
        out
    }
}

/// Variables of `R` (rank 2, `γ` only differentiated) of weight at most `w`.
pub fn ring_variables(w: i64) -> Vec<GenVar> {
    let mut out = Vec::new();
    if w < 0 {
        return out;
    }
    for s in Symbol::ALL {
        for j in 1..=2 {
            for der in 0..=w as u32 {
                let v = GenVar::new(s, j, der);
                if (s != Symbol::Gamma || der > 0) && v.weight() <= w {
                    out.push(v);
                }
            }
        }
    }
    out.sort();
    out
}

pub fn weight_basis(w: i64) -> WeightSpace {
    let vars = ring_variables(w);
    let mut basis = Vec::new();
    if w >= 0 {
        let mut factors = Vec::new();
        monomials(&vars, w, &mut factors, &mut basis);
    }
    basis.sort();
    WeightSpace { weight: w, basis }
}

fn monomials(vars: &[GenVar], remaining: i64, factors: &mut Vec<(GenVar, u32)>, out: &mut Vec<SuperMonomial>) {
    let Some((v, rest)) = vars.split_first() else {
        if remaining == 0 {
            out.push(SuperMonomial::from_sorted_unchecked(factors.clone()));
        }
        return;
    };
    monomials(rest, remaining, factors, out);
    let max_exp = if v.is_odd() { 1 } else { u32::MAX };
    let mut e = 1;
    while e <= max_exp && v.weight() * e as i64 <= remaining {
        // weight-zero even variables never occur in R
        debug_assert!(v.weight() > 0 || v.is_odd());
        factors.push((*v, e));
        monomials(rest, remaining - v.weight() * e as i64, factors, out);
        factors.pop();
        e += 1;
    }
}

/// `H, G, F, Gt`: these generate `sl₂[t]`.
pub fn generating_set() -> [LieGen; 4] {
    [
        LieGen::new(Sl2::H, 0),
        LieGen::new(Sl2::G, 0),
        LieGen::new(Sl2::F, 0),
        LieGen::new(Sl2::G, 1),
    ]
}

fn sl2_set() -> [LieGen; 3] {
    [LieGen::new(Sl2::H, 0), LieGen::new(Sl2::G, 0), LieGen::new(Sl2::F, 0)]
}

fn combination(basis: &[SuperMonomial], coords: &SparseVec<usize>) -> PolyExpr {
    let mut out = PolyExpr::zero();
    for (i, c) in coords {
        out.add_term(c.clone(), basis[*i].clone());
    }
    out
}

/// Joint kernel of `ops` on a list of elements, as combinations of them.
fn joint_kernel(elements: &[PolyExpr], ops: &[LieGen]) -> Vec<SparseVec<usize>> {
    let images = elements.iter().map(|f| {
        let mut img: SparseVec<(usize, SuperMonomial)> = BTreeMap::new();
        for (k, op) in ops.iter().enumerate() {
            for (m, c) in act(*op, f).into_terms() {
                img.insert((k, m), c);
            }
        }
        img
    });
    kernel(images)
}

fn kernel_in_sector(basis: &[SuperMonomial], ops: &[LieGen]) -> Vec<PolyExpr> {
    let elements: Vec<PolyExpr> = basis.iter().map(|m| PolyExpr::term(Scalar::one(), m.clone())).collect();
    joint_kernel(&elements, ops)
        .iter()
        .map(|x| combination(basis, x))
        .collect()
}

/// A basis of the `sl₂[t]`-invariants of weight `w`: the joint kernel of
/// `H, G, F, Gt`, computed sector by sector.
pub fn invariant_subspace(w: i64) -> Vec<PolyExpr> {
    weight_basis(w)
        .sectors()
        .values()
        .flat_map(|basis| kernel_in_sector(basis, &generating_set()))
        .collect()
}

/// The `sl₂`-invariants of weight `w`.
pub fn sl2_invariant_subspace(w: i64) -> Vec<PolyExpr> {
    weight_basis(w)
        .sectors()
        .values()
        .flat_map(|basis| kernel_in_sector(basis, &sl2_set()))
        .collect()
}

pub fn standard_count(w: i64) -> usize {
    enumerate_standard(w).len()
}

/// Rank of a family of polynomials.
pub fn poly_rank<'a>(family: impl IntoIterator<Item = &'a PolyExpr>) -> usize {
    crate::linalg::rank(family.into_iter().map(|p| p.as_map().clone()))
}

/// Whether two families span the same subspace.
pub fn same_span(a: &[PolyExpr], b: &[PolyExpr]) -> bool {
    let ra = poly_rank(a);
    ra == poly_rank(b) && ra == poly_rank(a.iter().chain(b))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DimensionReport {
    pub weight: i64,
    pub dim_invariants: usize,
    pub dim_standard: usize,
    /// Rank of the expanded standard words.
    pub rank_standard: usize,
    /// Every expanded standard word is killed by `H, G, F, Gt`.
    pub standard_invariant: bool,
    #[serde(rename = "match")]
    pub matches: bool,
    /// Seconds.
    pub elapsed: f64,
}

/// Compares the invariant dimension with the number and rank of standard
/// words; a match together with invariance of every standard word means
/// the standard words are a basis of the invariants.
pub fn dimension_report(w: i64) -> DimensionReport {
    let start = Instant::now();
    let dim_invariants = invariant_subspace(w).len();
    let words = enumerate_standard(w);
    let expanded: Vec<PolyExpr> = words.iter().map(|s| s.expand()).collect();
    let rank_standard = poly_rank(&expanded);
    let standard_invariant = expanded
        .iter()
        .all(|p| generating_set().iter().all(|g| act(*g, p).is_zero()));
    let dim_standard = words.len();
    DimensionReport {
        weight: w,
        dim_invariants,
        dim_standard,
        rank_standard,
        standard_invariant,
        matches: dim_invariants == dim_standard && dim_standard == rank_standard && standard_invariant,
        elapsed: start.elapsed().as_secs_f64(),
    }
}

fn gamma_der(j: u8, k: u32) -> PolyExpr {
    PolyExpr::var(GenVar::new(Symbol::Gamma, j, k))
}

/// Largest `k` for which `ξt^k` can act nontrivially on `f`.
fn t_range(f: &PolyExpr) -> u32 {
    f.variables().iter().map(|v| v.der).max().unwrap_or(0)
}

/// `Σ_{k≥1} (Ht^k f) ∂^kγ¹/k! + Σ_{k≥1} (Gt^k f) ∂^kγ²/k!`.
pub fn criterion_lhs(f: &PolyExpr) -> PolyExpr {
    let mut out = PolyExpr::zero();
    for k in 1..=t_range(f) {
        let h = act(LieGen::new(Sl2::H, k), f);
        let g = act(LieGen::new(Sl2::G, k), f);
        out += &(&h * &gamma_der(1, k)).scale(&inv_factorial(k));
        out += &(&g * &gamma_der(2, k)).scale(&inv_factorial(k));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub weight: i64,
    /// `sl₂`-invariants satisfying the criterion.
    pub dim_criterion: usize,
    pub dim_invariants: usize,
    /// Mutual containment of the two subspaces.
    pub equal: bool,
}

/// The subspace of `sl₂`-invariants of weight `w` on which [`criterion_lhs`]
/// vanishes.
pub fn criterion_subspace(w: i64) -> Vec<PolyExpr> {
    let mut out = Vec::new();
    for basis in weight_basis(w).sectors().values() {
        let inv = kernel_in_sector(basis, &sl2_set());
        let images = inv.iter().map(|f| criterion_lhs(f).into_terms());
        for x in kernel(images) {
            let mut f = PolyExpr::zero();
            for (i, c) in &x {
                f.add_scaled(c, &inv[*i]);
            }
            out.push(f);
        }
    }
    out
}

pub fn check_criterion(w: i64) -> CriterionReport {
    let crit = criterion_subspace(w);
    let inv = invariant_subspace(w);
    CriterionReport {
        weight: w,
        dim_criterion: crit.len(),
        dim_invariants: inv.len(),
        equal: same_span(&crit, &inv),
    }
}

/// `𝕆_j f = Σ_{k≥1} (∂^kγ^j/k!) · Gt^k f`.
pub fn o_operator(j: u8, f: &PolyExpr) -> PolyExpr {
    let mut out = PolyExpr::zero();
    for k in 1..=t_range(f) {
        let g = act(LieGen::new(Sl2::G, k), f);
        if !g.is_zero() {
            out += &(&gamma_der(j, k) * &g).scale(&inv_factorial(k));
        }
    }
    out
}

/// `ℙ_n f` with `ℙ_0 = [𝕆₂, 𝕆₁]` and `ℙ_n = [ℙ_{n−1}, 𝕆₁]`.
pub fn nested_operator(n: u32, f: &PolyExpr) -> PolyExpr {
    if n == 0 {
        return o_operator(2, &o_operator(1, f)) - o_operator(1, &o_operator(2, f));
    }
    nested_operator(n - 1, &o_operator(1, f)) - o_operator(1, &nested_operator(n - 1, f))
}

/// `ℙ_n` as a matrix on the weight-`w` monomial basis: column `i` holds the
/// image of `basis[i]`. The operator preserves weight.
pub fn nested_operator_matrix(n: u32, w: i64) -> (WeightSpace, Vec<PolyExpr>) {
    let space = weight_basis(w);
    let cols = space
        .basis
        .iter()
        .map(|m| nested_operator(n, &PolyExpr::term(Scalar::one(), m.clone())))
        .collect();
    (space, cols)
}

/// Leading term of `ℙ_n`: `(−1)^{n+1} (∂γ²)^{n+2}/(n+2)! · Gt^{n+2}`. It is
/// the whole operator on elements killed by `Gt^l` for `l > n + 2`.
pub fn nested_leading_term(n: u32, f: &PolyExpr) -> PolyExpr {
    let g = act(LieGen::new(Sl2::G, n + 2), f);
    let mut power = PolyExpr::one();
    for _ in 0..n + 2 {
        power = &power * &gamma_der(2, 1);
    }
    let sign = if n.is_multiple_of(2) { -Scalar::one() } else { Scalar::one() };
    (&power * &g).scale(&(sign * inv_factorial(n + 2)))
}

/// Whether `p` lies in the span of `family`.
pub fn in_span(family: &[PolyExpr], p: &PolyExpr) -> bool {
    let mut e = Echelon::new();
    for f in family {
        e.insert(f.as_map().clone());
    }
    p.is_zero() || e.contains(p.as_map())
}
