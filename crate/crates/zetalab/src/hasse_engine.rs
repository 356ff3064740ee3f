//! Forward-difference (Hasse/Newton) series
//! `Σ_n w(n) Σ_k C(n,k) (-1)^k f(u+k)`.
//!
//! Rows are produced by an incremental difference table. For the Hasse
//! weight the argument is first shifted with the exact identity
//! `H[f](u) = H[f](u+M) - Σ_{j<M} f'(u+j)` (the Hasse operator turns forward
//! differences into derivatives), so that rows decay like `1/C(M+n, n)`
//! instead of algebraically. The alternating row sums grow like `2^n` before
//! cancelling; working precision is planned for that and audited afterwards.

use crate::error::{Error, Result};
use crate::precision_core::{binomial, ExtReal};
use rug::Rational;
use std::collections::VecDeque;

/// Guard digits added on top of every precision plan.
pub const GUARD_DIGITS: u32 = 10;
const LOG10_2: f64 = std::f64::consts::LOG10_2;

/// `f(x) = log^r(x) x^(-a)`.
#[derive(Clone, Debug, PartialEq)]
pub enum IntegrandKind {
    PowLog { r: u32, a: Rational },
}

impl IntegrandKind {
    pub fn powlog(r: u32, a: impl Into<Rational>) -> Self {
        IntegrandKind::PowLog { r, a: a.into() }
    }

    /// `f(x)` at `digits`.
    pub fn eval(&self, x: &Rational, digits: u32) -> Result<ExtReal> {
        let IntegrandKind::PowLog { r, a } = self;
        if *x <= 0 {
            return Err(Error::Domain(format!("integrand argument {x} is not positive")));
        }
        let xe = ExtReal::from_rational(x, digits);
        let lg = if *r > 0 { Some(xe.ln()?) } else { None };
        let pw = Self::neg_power(&xe, a, lg.as_ref(), digits)?;
        Ok(match lg {
            Some(l) => &l.powi(*r as i32) * &pw,
            None => pw,
        })
    }

    /// `f'(x) = (r log^{r-1} x - a log^r x) x^{-a-1}`.
    pub fn eval_derivative(&self, x: &Rational, digits: u32) -> Result<ExtReal> {
        let IntegrandKind::PowLog { r, a } = self;
        if *x <= 0 {
            return Err(Error::Domain(format!("integrand argument {x} is not positive")));
        }
        let xe = ExtReal::from_rational(x, digits);
        let l = xe.ln()?;
        let a1 = Rational::from(a + 1u32);
        let pw = Self::neg_power(&xe, &a1, Some(&l), digits)?;
        let ae = ExtReal::from_rational(a, digits);
        let head = if *r == 0 {
            ExtReal::zero(digits)
        } else {
            &l.powi(*r as i32 - 1) * (*r as i64)
        };
        let body = &head - &(&ae * &l.powi(*r as i32));
        Ok(&body * &pw)
    }

    fn neg_power(x: &ExtReal, a: &Rational, ln_x: Option<&ExtReal>, digits: u32) -> Result<ExtReal> {
        if a.denom() == &1u32 {
            if let Some(ai) = a.numer().to_i32() {
                return Ok(x.powi(-ai));
            }
        }
        let l = match ln_x {
            Some(l) => l.clone(),
            None => x.ln()?,
        };
        Ok((&l * &ExtReal::from_rational(&Rational::from(-a), digits)).exp())
    }

    /// Cheap f64 estimate of `log10 |f(x)|`, used only for precision planning.
    fn log10_mag(&self, x: f64) -> f64 {
        let IntegrandKind::PowLog { r, a } = self;
        let a = a.to_f64();
        let lx = x.ln();
        let lpart = if *r == 0 {
            0.0
        } else if lx == 0.0 {
            return f64::NEG_INFINITY;
        } else {
            f64::from(*r) * lx.abs().log10()
        };
        lpart - a * x.log10()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightKind {
    /// `w(n) = 1/(n+1)`
    Hasse,
    /// `w(n) = 2^(-(n+1))`
    Sondow,
    /// `w(n) = 1/(n+1)` for `n ≤ N`, zero beyond.
    Finite(usize),
}

impl WeightKind {
    fn weight(&self, n: usize, digits: u32) -> ExtReal {
        match self {
            WeightKind::Hasse | WeightKind::Finite(_) => {
                ExtReal::from_rational(&Rational::from((1, n as u64 + 1)), digits)
            }
            WeightKind::Sondow => {
                ExtReal::one(digits) / ExtReal::from_integer(&(rug::Integer::from(1) << (n as u32 + 1)), digits)
            }
        }
    }

    fn log10_weight(&self, n: usize) -> f64 {
        match self {
            WeightKind::Hasse | WeightKind::Finite(_) => -((n + 1) as f64).log10(),
            WeightKind::Sondow => -((n + 1) as f64) * LOG10_2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SeriesResult {
    pub value: ExtReal,
    pub err_estimate: ExtReal,
    pub terms_used: usize,
    pub working_digits: u32,
    /// Largest `log10(max partial / |row|)` seen, rows below the target floor clamped.
    pub max_cancellation_digits: i64,
}

/// Term and precision limits for one series evaluation.
#[derive(Clone, Debug)]
pub struct Budget {
    pub max_terms: usize,
    /// Consecutive small weighted rows required to stop.
    pub window: usize,
    pub max_escalations: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_terms: 20_000, window: 8, max_escalations: 2 }
    }
}

impl Budget {
    pub fn with_max_terms(max_terms: usize) -> Self {
        Budget { max_terms, ..Budget::default() }
    }
}

/// Incremental forward-difference table. After pushing `f_0..f_N` it holds
/// `Δ^j f_{N-j}` for `j = 0..=N`.
#[derive(Clone, Debug, Default)]
pub struct DiffTable {
    diag: Vec<ExtReal>,
}

impl DiffTable {
    pub fn new() -> Self {
        DiffTable { diag: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Appends `f_N` and returns row `N = Σ_k C(N,k)(-1)^k f_k = (-1)^N Δ^N f_0`.
    pub fn push(&mut self, f: ExtReal) -> ExtReal {
        let n = self.diag.len();
        let mut next = Vec::with_capacity(n + 1);
        next.push(f);
        for j in 1..=n {
            let v = &next[j - 1] - &self.diag[j - 1];
            next.push(v);
        }
        self.diag = next;
        let top = &self.diag[n];
        if n % 2 == 0 {
            top.clone()
        } else {
            -top
        }
    }
}

/// Working digits for a run that touches rows up to `n_max`.
pub fn precision_plan(weight: &WeightKind, target_digits: u32, n_max: usize) -> u32 {
    let tax = |n: usize| (0.302 * n as f64).ceil() as u32;
    match weight {
        WeightKind::Hasse => target_digits + tax(n_max) + GUARD_DIGITS,
        WeightKind::Sondow => target_digits + GUARD_DIGITS,
        WeightKind::Finite(n) => target_digits + tax(*n) + GUARD_DIGITS,
    }
}

/// Row `n` via the incremental table, at `prec + 0.302 n + guard` working digits.
pub fn diff_row(kind: &IntegrandKind, u: &Rational, n: usize, prec: u32) -> Result<ExtReal> {
    let work = precision_plan(&WeightKind::Finite(n), prec, n);
    let mut t = DiffTable::new();
    let mut row = ExtReal::zero(work);
    for k in 0..=n {
        row = t.push(kind.eval(&Rational::from(u + k as u64), work)?);
    }
    Ok(row.with_digits(prec))
}

/// Row `n` as the explicit binomial sum; oracle for the table path.
pub fn diff_row_direct(kind: &IntegrandKind, u: &Rational, n: usize, prec: u32) -> Result<ExtReal> {
    let work = precision_plan(&WeightKind::Finite(n), prec, n);
    let mut acc = ExtReal::zero(work);
    for k in 0..=n {
        let c = ExtReal::from_integer(&binomial(n as u32, k as u32), work);
        let t = &c * &kind.eval(&Rational::from(u + k as u64), work)?;
        acc = if k % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    Ok(acc.with_digits(prec))
}

pub fn hasse_sum(kind: &IntegrandKind, u: &Rational, weight: &WeightKind, target_digits: u32) -> Result<SeriesResult> {
    hasse_sum_with(kind, u, weight, target_digits, &Budget::default())
}

/// Shift for the Hasse weight: enough that the rows reach the target within
/// about `M` more terms.
fn hasse_shift(target: u32) -> u64 {
    (1.25 * f64::from(target)).ceil() as u64 + 8
}

fn log10_binom(n: f64, k: f64) -> f64 {
    (ln_gamma(n + 1.0) - ln_gamma(k + 1.0) - ln_gamma(n - k + 1.0)) / std::f64::consts::LN_10
}

// Stirling series, plenty for planning purposes.
fn ln_gamma(x: f64) -> f64 {
    if x < 7.0 {
        let mut p = 1.0;
        let mut y = x;
        while y < 7.0 {
            p *= y;
            y += 1.0;
        }
        return ln_gamma(y) - p.ln();
    }
    let x2 = x * x;
    (x - 0.5) * x.ln() - x + 0.5 * (2.0 * std::f64::consts::PI).ln() + 1.0 / (12.0 * x)
        - 1.0 / (360.0 * x * x2)
}

pub fn hasse_sum_with(
    kind: &IntegrandKind,
    u: &Rational,
    weight: &WeightKind,
    target_digits: u32,
    budget: &Budget,
) -> Result<SeriesResult> {
    if *u <= 0 {
        return Err(Error::Domain(format!("hasse_sum needs u > 0, got {u}")));
    }
    let uf = u.to_f64();
    match weight {
        WeightKind::Hasse => {
            let m = hasse_shift(target_digits);
            let v = Rational::from(u + m);
            let vf = uf + m as f64;
            let mag_v = kind.log10_mag(vf).max(kind.log10_mag(vf + 1.0)).max(0.0);
            // n such that C(v+n, n) beats the target plus the magnitude at v
            let need = f64::from(target_digits) + mag_v + 4.0;
            let mut n_est = 8usize;
            while log10_binom(vf + n_est as f64, n_est as f64) < need && n_est < budget.max_terms {
                n_est += 4;
            }
            let mag = sample_mag(kind, uf, m as f64 + n_est as f64);
            let run = |t: u32| -> Result<SeriesResult> {
                let f = |k: usize, d: u32| kind.eval(&Rational::from(&v + k as u64), d);
                let mut r = binomial_series_planned(&f, weight, t, budget, n_est, mag)?;
                let work = r.working_digits;
                let mut corr = ExtReal::zero(work);
                for j in 0..m {
                    corr = &corr + &kind.eval_derivative(&Rational::from(u + j), work)?;
                }
                r.value = &r.value - &corr;
                Ok(r)
            };
            let r = run(target_digits)?;
            Ok(finish(r, target_digits))
        }
        WeightKind::Sondow => {
            let n_est = ((f64::from(target_digits) + 4.0) / LOG10_2) as usize + 16;
            let mag = sample_mag(kind, uf, n_est as f64);
            let f = |k: usize, d: u32| kind.eval(&Rational::from(u + k as u64), d);
            let r = binomial_series_planned(&f, weight, target_digits, budget, n_est, mag)?;
            Ok(finish(r, target_digits))
        }
        WeightKind::Finite(n) => {
            let mag = sample_mag(kind, uf, *n as f64);
            let f = |k: usize, d: u32| kind.eval(&Rational::from(u + k as u64), d);
            let r = binomial_series_planned(&f, weight, target_digits, budget, *n, mag)?;
            Ok(finish(r, target_digits))
        }
    }
}

fn finish(mut r: SeriesResult, target: u32) -> SeriesResult {
    r.value = r.value.with_digits(target.max(1) + 2);
    r
}

fn sample_mag(kind: &IntegrandKind, u: f64, span: f64) -> f64 {
    let IntegrandKind::PowLog { r, a } = kind;
    let mut pts = vec![u, u + 1.0, u + span * 0.5, u + span, u + span + 1.0];
    let af = a.to_f64();
    if af != 0.0 && *r > 0 {
        // stationary point of log^r x * x^-a
        let xs = (f64::from(*r) / af).exp();
        if xs > u && xs < u + span {
            pts.push(xs);
        }
    }
    pts.iter().map(|&x| kind.log10_mag(x)).fold(0.0, f64::max)
}

/// Binomial series over an arbitrary sequence `f(k)` evaluated at the
/// requested working precision. `mag_log10` bounds `log10 max |f_k|`.
pub fn binomial_series(
    f: &dyn Fn(usize, u32) -> Result<ExtReal>,
    weight: &WeightKind,
    target_digits: u32,
    budget: &Budget,
    mag_log10: f64,
) -> Result<SeriesResult> {
    let n_est = match weight {
        WeightKind::Finite(n) => *n,
        WeightKind::Sondow => ((f64::from(target_digits) + mag_log10.max(0.0) + 4.0) / LOG10_2) as usize + 16,
        WeightKind::Hasse => 4 * target_digits as usize,
    };
    let r = binomial_series_planned(f, weight, target_digits, budget, n_est, mag_log10)?;
    Ok(finish(r, target_digits))
}

fn binomial_series_planned(
    f: &dyn Fn(usize, u32) -> Result<ExtReal>,
    weight: &WeightKind,
    target: u32,
    budget: &Budget,
    n_est: usize,
    mag_log10: f64,
) -> Result<SeriesResult> {
    let mag = mag_log10.max(0.0).ceil() as u32;
    let mut work = precision_plan(weight, target, n_est) + mag;
    let mut escalations = 0;
    loop {
        let r = run_rows(f, weight, target, budget, work)?;
        // Absolute rounding scale of row n is about 10^-work * 2^n * max|f|.
        let needed = (r.worst_log10_weighted_growth + f64::from(target) + 4.0).ceil().max(0.0) as u32
            + GUARD_DIGITS / 2;
        if needed <= work {
            let round = ExtReal::from_i64(10, work).powi(-((work - needed + target + 4) as i32));
            let err = &r.tail + &round;
            return Ok(SeriesResult {
                value: r.value,
                err_estimate: err.with_digits(12),
                terms_used: r.terms,
                working_digits: work,
                max_cancellation_digits: r.max_cancel,
            });
        }
        if escalations == budget.max_escalations {
            return Err(Error::NonConverged(format!(
                "cancellation audit needs {needed} digits after {escalations} escalations"
            )));
        }
        escalations += 1;
        work = needed + GUARD_DIGITS;
    }
}

struct RawRun {
    value: ExtReal,
    tail: ExtReal,
    terms: usize,
    max_cancel: i64,
    worst_log10_weighted_growth: f64,
}

fn run_rows(
    f: &dyn Fn(usize, u32) -> Result<ExtReal>,
    weight: &WeightKind,
    target: u32,
    budget: &Budget,
    work: u32,
) -> Result<RawRun> {
    let floor = -(f64::from(target) + 2.0);
    let limit = match weight {
        WeightKind::Finite(n) => *n + 1,
        _ => budget.max_terms,
    };
    let mut table = DiffTable::new();
    let mut sum = ExtReal::zero(work);
    let mut small = 0usize;
    let mut recent: VecDeque<ExtReal> = VecDeque::new();
    let mut sums: VecDeque<ExtReal> = VecDeque::new();
    let mut max_f = f64::NEG_INFINITY;
    let mut max_cancel = 0i64;
    let mut worst_growth = f64::NEG_INFINITY;
    for n in 0..limit {
        let fk = f(n, work)?;
        max_f = max_f.max(fk.log10_abs());
        let row = table.push(fk);
        let wlog = weight.log10_weight(n);
        let term = &row * &weight.weight(n, work);
        sum = &sum + &term;
        let partial = 0.30103 * n as f64 + max_f;
        let rl = row.log10_abs().max(floor - wlog);
        max_cancel = max_cancel.max((partial - rl).ceil() as i64);
        worst_growth = worst_growth.max(wlog + partial);
        if matches!(weight, WeightKind::Finite(_)) {
            continue;
        }
        recent.push_back(term.abs());
        sums.push_back(sum.clone());
        if recent.len() > budget.window {
            recent.pop_front();
        }
        if sums.len() > budget.window + 1 {
            sums.pop_front();
        }
        small = if term.log10_abs() < floor { small + 1 } else { 0 };
        if small >= budget.window {
            let drift = &sum - &sums[0];
            if drift.log10_abs() < floor + 1.0 {
                let tail: ExtReal = recent.iter().cloned().sum();
                return Ok(RawRun { value: sum, tail, terms: n + 1, max_cancel, worst_log10_weighted_growth: worst_growth });
            }
        }
    }
    if let WeightKind::Finite(_) = weight {
        return Ok(RawRun {
            value: sum,
            tail: ExtReal::zero(work),
            terms: limit,
            max_cancel,
            worst_log10_weighted_growth: worst_growth,
        });
    }
    Err(Error::NonConverged(format!("stopping rule not met within {limit} terms")))
}

/// Rows `R_n = 2^{-n} Σ_k C(n,k) g(k)` for `n = 0..=n_max`, i.e. binomial means
/// without alternation. Terms with `|k - n/2| > 8 sqrt(n) + 8` are dropped;
/// their total weight is below `exp(-128)` relative, far under 45 digits only
/// when `g` grows at most polynomially, which is the documented use.
pub fn binomial_mean_rows(g: &[ExtReal], n_max: usize, digits: u32) -> Vec<ExtReal> {
    assert!(g.len() > n_max, "need g(0..=n_max)");
    let mut out = Vec::with_capacity(n_max + 1);
    // p_k = C(n,k) 2^-n, generated from the mode outwards
    for n in 0..=n_max {
        let half = n / 2;
        let width = (8.0 * (n as f64).sqrt()) as usize + 8;
        let lo = half.saturating_sub(width);
        let hi = (half + width).min(n);
        let centre = ExtReal::from_integer(&binomial(n as u32, half as u32), digits)
            / ExtReal::from_integer(&(rug::Integer::from(1) << n as u32), digits);
        let mut acc = &centre * &g[half];
        let mut p = centre.clone();
        for k in (lo..half).rev() {
            // C(n,k) = C(n,k+1) (k+1)/(n-k)
            p = &(&p * (k as i64 + 1)) / (n - k) as i64;
            acc = &acc + &(&p * &g[k]);
        }
        p = centre;
        for k in half + 1..=hi {
            // C(n,k) = C(n,k-1) (n-k+1)/k
            p = &(&p * (n - k + 1) as i64) / k as i64;
            acc = &acc + &(&p * &g[k]);
        }
        out.push(acc);
    }
    out
}

/// Neville extrapolation of `S(N)` to `N → ∞` in the variable `h = 1/N`.
/// Suited to partial sums whose error has an asymptotic expansion in `1/N`.
pub fn extrapolate_to_infinity(ns: &[usize], values: &[ExtReal]) -> ExtReal {
    assert_eq!(ns.len(), values.len());
    let d = values[0].digits();
    let h: Vec<ExtReal> = ns.iter().map(|&n| ExtReal::one(d) / n as i64).collect();
    let mut p = values.to_vec();
    let m = p.len();
    for level in 1..m {
        for i in (level..m).rev() {
            // P(0) from points i-level..=i
            let hi = &h[i];
            let hl = &h[i - level];
            p[i] = &(&(&p[i] * hl) - &(&p[i - 1] * hi)) / &(hl - hi);
        }
    }
    p[m - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rug::float::Constant;
    use rug::Float;

    fn q(a: i64, b: i64) -> Rational {
        Rational::from((a, b))
    }

    fn euler(d: u32) -> ExtReal {
        // oracle only
        ExtReal::from_float(&Float::with_val(crate::precision_core::bits_for(d), Constant::Euler), d)
    }

    #[test]
    fn row_examples() {
        let l2 = ExtReal::ln2(30);
        let r = diff_row(&IntegrandKind::powlog(1, 0), &q(1, 1), 1, 30).unwrap();
        assert!((&r + &l2).below_pow10(-29));
        let r2 = diff_row(&IntegrandKind::powlog(2, 0), &q(1, 1), 2, 30).unwrap();
        let l3 = ExtReal::from_i64(3, 30).ln().unwrap();
        let want = &(&l3 * &l3) - &(&(&l2 * &l2) * 2);
        assert!((&r2 - &want).below_pow10(-29));
    }

    #[test]
    fn table_matches_direct_sums() {
        let kinds = [IntegrandKind::powlog(1, 0), IntegrandKind::powlog(2, q(1, 2)), IntegrandKind::powlog(0, -3)];
        for kind in &kinds {
            for n in [0usize, 1, 5, 17, 40] {
                let a = diff_row(kind, &q(1, 3), n, 30).unwrap();
                let b = diff_row_direct(kind, &q(1, 3), n, 30).unwrap();
                let scale = ExtReal::max_abs(&a, &ExtReal::one(30));
                assert!((&(&a - &b) / &scale).below_pow10(-29), "{kind:?} n={n}");
            }
        }
    }

    #[test]
    fn euler_gamma_from_hasse() {
        let r = hasse_sum(&IntegrandKind::powlog(1, 0), &q(1, 1), &WeightKind::Hasse, 30).unwrap();
        assert!((&r.value + &euler(30)).below_pow10(-30), "{}", r.value);
        assert!(r.terms_used >= 1);
        assert!(!r.err_estimate.is_negative());
    }

    #[test]
    fn hasse_zeta_two() {
        // (s-1) ζ(s,1) at s = 2
        let r = hasse_sum(&IntegrandKind::powlog(0, 1), &q(1, 1), &WeightKind::Hasse, 30).unwrap();
        let z2 = (&ExtReal::pi(30) * &ExtReal::pi(30)) / 6;
        assert!((&r.value - &z2).below_pow10(-30));
    }

    #[test]
    fn sondow_weight_gives_alternating_sum() {
        // Σ (-1)^k/(k+1) = log 2
        let r = hasse_sum(&IntegrandKind::powlog(0, 1), &q(1, 1), &WeightKind::Sondow, 30).unwrap();
        assert!((&r.value - &ExtReal::ln2(30)).below_pow10(-30));
        // Σ (-1)^k/(k+1)^2 = π²/12
        let r = hasse_sum(&IntegrandKind::powlog(0, 2), &q(1, 1), &WeightKind::Sondow, 30).unwrap();
        let want = (&ExtReal::pi(30) * &ExtReal::pi(30)) / 12;
        assert!((&r.value - &want).below_pow10(-30));
    }

    #[test]
    fn precision_plan_examples() {
        assert!(precision_plan(&WeightKind::Hasse, 30, 120) >= 67 + GUARD_DIGITS);
        assert_eq!(precision_plan(&WeightKind::Sondow, 30, 500), 30 + GUARD_DIGITS);
        assert!(precision_plan(&WeightKind::Finite(10), 30, 10) >= 34);
    }

    #[test]
    fn finite_weight_is_exact_sum() {
        let r = hasse_sum(&IntegrandKind::powlog(0, -2), &q(1, 4), &WeightKind::Finite(2), 30).unwrap();
        // B_2(1/4) = 1/16 - 1/4 + 1/6
        let want = ExtReal::from_rational(&q(-1, 48), 30);
        assert!((&r.value - &want).below_pow10(-30));
        assert_eq!(r.terms_used, 3);
    }

    #[test]
    fn cancellation_audit_grows_with_rows() {
        let f = |k: usize, d: u32| IntegrandKind::powlog(1, 0).eval(&Rational::from(k as u64 + 1), d);
        let r = binomial_series(&f, &WeightKind::Finite(60), 20, &Budget::default(), 1.0).unwrap();
        // roughly 0.301 per row
        assert!(r.max_cancellation_digits >= 15 && r.max_cancellation_digits <= 25, "{}", r.max_cancellation_digits);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let b = Budget { max_terms: 5, ..Budget::default() };
        let e = hasse_sum_with(&IntegrandKind::powlog(1, 0), &q(1, 1), &WeightKind::Hasse, 30, &b);
        assert!(matches!(e, Err(Error::NonConverged(_))));
    }

    #[test]
    fn nonpositive_argument_is_domain_error() {
        let e = hasse_sum(&IntegrandKind::powlog(1, 0), &q(0, 1), &WeightKind::Hasse, 20);
        assert!(matches!(e, Err(Error::Domain(_))));
    }

    #[test]
    fn extrapolation_removes_inverse_powers() {
        let d = 40;
        let ns: Vec<usize> = (1..=8).map(|i| 16 * i).collect();
        let vals: Vec<ExtReal> = ns
            .iter()
            .map(|&n| {
                let h = ExtReal::one(d) / n as i64;
                &(&ExtReal::from_i64(3, d) + &(&h * 5)) - &(&h.powi(3) * 7)
            })
            .collect();
        let lim = extrapolate_to_infinity(&ns, &vals);
        assert!((&lim - 3).below_pow10(-30));
    }

    #[test]
    fn binomial_means_of_constant_are_constant() {
        let g = vec![ExtReal::one(30); 101];
        for r in binomial_mean_rows(&g, 100, 30) {
            assert!((&r - 1).below_pow10(-28));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn row_zero_law(n in 0usize..60, num in 1i64..40, den in 1i64..9, prec in 10u32..60) {
            let r = diff_row(&IntegrandKind::powlog(0, 0), &q(num, den), n, prec).unwrap();
            if n == 0 {
                prop_assert!((&r - 1).below_pow10(-(prec as i64) + 2));
            } else {
                prop_assert!(r.below_pow10(-(prec as i64) + 2));
            }
        }
    }
}
