//! The Kummer chart expansions of the generators as series in
//! `t = (γ¹)^{-1/2}`, the chart quadratics `A(x, y, i, j)` and the check
//! that each one transforms by a constant multiple plus a `t²` correction.

mod series;

pub use series::{agree_below, ChartSeries};

use serde::Serialize;

use crate::algebra::{inv_factorial, int, ratio, GenVar, PolyExpr, Scalar, Symbol};
use crate::error::{Error, Result};
use crate::graded::{act, Letter, LieGen, Sl2};
use crate::report::Status;

/// Deepest truncation for which [`tilde_generator`] is supported.
pub const MAX_GENERATOR_PRECISION: i32 = 5;
/// Deepest truncation for which [`tilde_a`] is supported.
pub const MAX_PAIR_PRECISION: i32 = 4;

fn var(s: Symbol, j: u8, der: u32) -> PolyExpr {
    PolyExpr::var(GenVar::new(s, j, der))
}

/// `∂^l x̃^j` for `x = β, b, c` and `∂^{l+1} γ̃^j` for `x = γ`, modulo `t^K`.
///
/// The undifferentiated expansions are
/// `∂γ̃¹ = (t/2)∂γ¹`, `∂γ̃² = (1/t)∂γ² + (t/2)γ²∂γ¹`,
/// `c̃¹ = (t/2)c¹`, `c̃² = (1/t)c² + (t/2)γ²c¹`,
/// `b̃¹ = (2/t)b¹ − tγ²b²`, `b̃² = tb²`, `β̃¹ = (2/t)β¹ − tγ²β²`, `β̃² = tβ²`;
/// higher `l` follow by differentiating.
pub fn tilde_generator(symbol: Symbol, j: u8, l: u32, k: i32) -> Result<ChartSeries> {
    if k > MAX_GENERATOR_PRECISION {
        return Err(Error::TruncationTooDeep {
            requested: k,
            supported: MAX_GENERATOR_PRECISION,
        });
    }
    if !(1..=2).contains(&j) {
        return Err(Error::IndexOutOfRange { index: j, rank: 2 });
    }
    let g2 = var(Symbol::Gamma, 2, 0);
    let term = |m: i32, c: PolyExpr| ChartSeries::monomial(m, c, k);
    let (x, d) = match symbol {
        Symbol::Gamma => (Symbol::Gamma, 1),
        s => (s, 0),
    };
    let other = if j == 1 { 2 } else { 1 };
    let own = var(x, j, d);
    let swapped = var(x, other, d);
    let base = match (symbol, j) {
        (Symbol::Gamma | Symbol::C, 1) => term(1, own.scale(&ratio(1, 2))),
        (Symbol::Gamma | Symbol::C, _) => &term(-1, own) + &term(1, (&g2 * &swapped).scale(&ratio(1, 2))),
        (Symbol::B | Symbol::Beta, 1) => &term(-1, own.scale(&int(2))) - &term(1, &g2 * &swapped),
        (Symbol::B | Symbol::Beta, _) => term(1, own),
    };
    Ok(base.derivative_n(l))
}

/// Sign class of a chart quadratic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PairClass {
    /// `∂^i x¹ ∂^j y¹ + ∂^i x² ∂^j y²`.
    Symmetric,
    /// `∂^i x¹ ∂^j y² − ∂^i x² ∂^j y¹`.
    Antisymmetric,
}

pub fn pair_class(x: Letter, y: Letter) -> Result<PairClass> {
    use Letter::*;
    match (x, y) {
        (Beta, DGamma) | (Beta, C) | (B, DGamma) | (B, C) => Ok(PairClass::Symmetric),
        (Beta, Beta) | (Beta, B) | (B, B) | (C, C) | (DGamma, DGamma) | (C, DGamma) | (DGamma, C) => {
            Ok(PairClass::Antisymmetric)
        }
        _ => Err(Error::UnknownPairClass(x.name().into(), y.name().into())),
    }
}

fn combine<T>(class: PairClass, x: impl Fn(u8) -> T, y: impl Fn(u8) -> T, mul: impl Fn(&T, &T) -> T, add: impl Fn(T, T) -> T, neg: impl Fn(T) -> T) -> T {
    match class {
        PairClass::Symmetric => add(mul(&x(1), &y(1)), mul(&x(2), &y(2))),
        PairClass::Antisymmetric => add(mul(&x(1), &y(2)), neg(mul(&x(2), &y(1)))),
    }
}

/// `A(x, y, i, j)` in the plain chart.
pub fn a_pair(x: Letter, y: Letter, i: u32, j: u32) -> Result<PolyExpr> {
    let class = pair_class(x, y)?;
    Ok(combine(
        class,
        |c| PolyExpr::var(x.var(c, i)),
        |c| PolyExpr::var(y.var(c, j)),
        |a, b| a * b,
        |a, b| a + b,
        |a| -a,
    ))
}

/// `A(x̃, ỹ, i, j)` expanded in the plain chart, modulo `t^K`.
pub fn tilde_a(x: Letter, y: Letter, i: u32, j: u32, k: i32) -> Result<ChartSeries> {
    let class = pair_class(x, y)?;
    if k > MAX_PAIR_PRECISION {
        return Err(Error::TruncationTooDeep {
            requested: k,
            supported: MAX_PAIR_PRECISION,
        });
    }
    // every generator series starts at t^{-1}, so one extra order suffices
    let gen = |l: Letter, c: u8, d: u32| tilde_generator(l.symbol(), c, d, k + 1);
    let xs = [gen(x, 1, i)?, gen(x, 2, i)?];
    let ys = [gen(y, 1, j)?, gen(y, 2, j)?];
    let out = combine(
        class,
        |c| xs[c as usize - 1].clone(),
        |c| ys[c as usize - 1].clone(),
        |a, b| a * b,
        |a, b| &a + &b,
        |a| -&a,
    );
    Ok(out.truncate(k))
}

/// The constant of the transformation law: 2 for pairs of `β, b`, ½ for
/// pairs of `∂γ, c`, 1 for mixed pairs.
pub fn alpha_constant(x: Letter, y: Letter) -> Result<Scalar> {
    pair_class(x, y)?;
    let heavy = |l: Letter| matches!(l, Letter::Beta | Letter::B);
    Ok(match (heavy(x), heavy(y)) {
        (true, true) => int(2),
        (false, false) => ratio(1, 2),
        _ => int(1),
    })
}

/// The ten pairs of the transformation table.
pub fn alpha_table_pairs() -> [(Letter, Letter); 10] {
    use Letter::*;
    [
        (Beta, C),
        (Beta, DGamma),
        (B, C),
        (B, DGamma),
        (Beta, Beta),
        (B, B),
        (Beta, B),
        (DGamma, DGamma),
        (DGamma, C),
        (C, C),
    ]
}

/// Which lowering operator accompanies `∂^kγ²` in the `t²` correction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CorrectionForm {
    /// `Σ Ht^k(f) ∂^kγ¹/k! − Σ Ft^k(f) ∂^kγ²/k!`, which is the correction for
    /// the dual action used here.
    Dual,
    /// `Σ Ht^k(f) ∂^kγ¹/k! + Σ Gt^k(f) ∂^kγ²/k!`, which fails once a derivative occurs.
    Raising,
}

/// The bracket multiplying `t²/2` in the transformation law.
pub fn chart_correction(f: &PolyExpr, form: CorrectionForm) -> PolyExpr {
    let top = f.variables().iter().map(|v| v.der).max().unwrap_or(0);
    let mut out = PolyExpr::zero();
    for k in 1..=top {
        let h = act(LieGen::new(Sl2::H, k), f);
        out += &(&h * &var(Symbol::Gamma, 1, k)).scale(&inv_factorial(k));
        let second = match form {
            CorrectionForm::Dual => -act(LieGen::new(Sl2::F, k), f),
            CorrectionForm::Raising => act(LieGen::new(Sl2::G, k), f),
        };
        out += &(&second * &var(Symbol::Gamma, 2, k)).scale(&inv_factorial(k));
    }
    out
}

/// `α (f + (t²/2) · correction(f))` modulo `t^k`.
pub fn predicted_transform(f: &PolyExpr, alpha: &Scalar, form: CorrectionForm, k: i32) -> ChartSeries {
    let corr = chart_correction(f, form).scale(&ratio(1, 2));
    let series = &ChartSeries::monomial(0, f.clone(), k) + &ChartSeries::monomial(2, corr, k);
    series.scale(alpha)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaReport {
    pub pair: String,
    pub i: u32,
    pub j: u32,
    pub alpha: String,
    pub status: Status,
    /// Truncation order of the comparison.
    pub precision: i32,
    /// `A(x̃,ỹ,i,j) − α(A + (t²/2)·correction)` modulo `t^K`; `"0"` on success.
    pub residual: String,
    /// The same residual with the `Raising` correction.
    pub raising_residual: String,
}

fn residual(x: Letter, y: Letter, i: u32, j: u32, k: i32, form: CorrectionForm) -> Result<ChartSeries> {
    let lhs = tilde_a(x, y, i, j, k)?;
    let rhs = predicted_transform(&a_pair(x, y, i, j)?, &alpha_constant(x, y)?, form, k);
    Ok(&lhs - &rhs)
}

fn series_text(s: &ChartSeries) -> String {
    if s.is_zero() {
        "0".into()
    } else {
        s.to_string()
    }
}

/// Checks `A(x̃,ỹ,i,j) = α(A(x,y,i,j) + (t²/2)(…)) + O(t⁴)`.
pub fn verify_alpha_identity(x: Letter, y: Letter, i: u32, j: u32) -> Result<AlphaReport> {
    verify_alpha_identity_mod(x, y, i, j, MAX_PAIR_PRECISION)
}

/// [`verify_alpha_identity`] modulo `t^k`, `k ≤ 4`.
pub fn verify_alpha_identity_mod(x: Letter, y: Letter, i: u32, j: u32, k: i32) -> Result<AlphaReport> {
    let dual = residual(x, y, i, j, k, CorrectionForm::Dual)?;
    let raising = residual(x, y, i, j, k, CorrectionForm::Raising)?;
    Ok(AlphaReport {
        pair: format!("({}, {})", x.name(), y.name()),
        i,
        j,
        alpha: alpha_constant(x, y)?.to_string(),
        status: Status::from_bool(dual.is_zero() && dual.precision() >= k),
        precision: k,
        residual: series_text(&dual),
        raising_residual: series_text(&raising),
    })
}

#[cfg(test)]
mod tests;
