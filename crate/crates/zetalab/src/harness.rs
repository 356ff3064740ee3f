//! Identity registry and verdict reports.
//!
//! Each entry evaluates both sides at `digits + slack` and passes when the
//! residual is below `10^(slack - digits)`. Entries whose printed form is
//! contradicted by the numerics are evaluated as printed and carry a companion
//! `-misprint` adjudication naming the form the numerics support. Adjudications
//! never fail.

use crate::error::{Error, Result};
use crate::hasse_engine::{hasse_sum, Budget, DiffTable, IntegrandKind, WeightKind};
use crate::li_keiper::LiKeiperState;
use crate::precision_core::{factorial, ln_pi, ExtReal};
use crate::quadrature::{integrate, integrate_tail, integrate_unit, IntegrandId, KernelScale, Node};
use crate::stieltjes::{euler_gamma, log_gamma, reflection_sum, stieltjes_em, stieltjes_hasse_with};
use crate::zeta_suite::{
    alt_zeta_deriv, bernoulli_poly, bernoulli_poly_hasse, binomial_mean_sum, hurwitz_zeta, lerch_phi_path,
    zeta_deriv_at_0, zeta_neg_deriv_with, LerchPath,
};
use rayon::prelude::*;
use rug::Rational;
use serde::Serialize;
use std::time::Instant;

pub const DEFAULT_SLACK: u32 = 6;
/// Terms allowed to the polynomial-times-log Hasse rows.
pub const SLOW_MAX_TERMS: usize = 60_000;

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Pass,
    Fail,
    NonConverged,
    Adjudication(String),
}

impl Verdict {
    pub fn label(&self) -> String {
        match self {
            Verdict::Pass => "PASS".into(),
            Verdict::Fail => "FAIL".into(),
            Verdict::NonConverged => "NON_CONVERGED".into(),
            Verdict::Adjudication(d) => format!("ADJUDICATION({d})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct IdentityRecord {
    pub id: String,
    pub description: String,
    pub digits: u32,
    pub residual: Option<ExtReal>,
    pub verdict: Verdict,
    pub seconds: f64,
    /// Widened tolerance or error text, if any.
    pub annotation: Option<String>,
    /// Decimal orders separating the supported variant from the runner-up.
    pub margin_orders: Option<f64>,
}

impl IdentityRecord {
    pub fn residual_log10(&self) -> Option<f64> {
        self.residual.as_ref().filter(|r| !r.is_zero()).map(|r| r.log10_abs())
    }

    pub fn is_adjudication(&self) -> bool {
        matches!(self.verdict, Verdict::Adjudication(_))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunMetadata {
    pub digits: u32,
    pub slack: u32,
    pub max_terms: usize,
    pub slow_max_terms: usize,
    pub mpfr_version: String,
    pub rows: usize,
    pub pass: usize,
    pub fail: usize,
    pub non_converged: usize,
    pub adjudications: usize,
    pub wall_seconds: f64,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub metadata: RunMetadata,
    pub rows: Vec<IdentityRecord>,
}

#[derive(Serialize)]
struct JsonRow<'a> {
    id: &'a str,
    description: &'a str,
    digits: u32,
    residual_log10: Option<f64>,
    verdict: String,
    seconds: f64,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    metadata: &'a RunMetadata,
    rows: Vec<JsonRow<'a>>,
}

fn round_log10(x: Option<f64>) -> Option<f64> {
    x.map(|v| (v * 100.0).round() / 100.0)
}

fn round_secs(s: f64) -> f64 {
    (s * 1000.0).round() / 1000.0
}

impl Report {
    pub fn any_fail(&self) -> bool {
        self.rows.iter().any(|r| r.verdict == Verdict::Fail)
    }

    pub fn any_non_converged(&self) -> bool {
        self.rows.iter().any(|r| r.verdict == Verdict::NonConverged)
    }

    pub fn to_json(&self) -> String {
        let rows = self
            .rows
            .iter()
            .map(|r| JsonRow {
                id: &r.id,
                description: &r.description,
                digits: r.digits,
                residual_log10: round_log10(r.residual_log10()),
                verdict: r.verdict.label(),
                seconds: round_secs(r.seconds),
            })
            .collect();
        serde_json::to_string_pretty(&JsonReport { metadata: &self.metadata, rows }).expect("report serializes")
    }

    /// Aligned table without timings; timings go in the footer only when asked.
    pub fn to_text(&self, with_timing: bool) -> String {
        let idw = self.rows.iter().map(|r| r.id.chars().count()).max().unwrap_or(2).max(2);
        let mut out = format!("{:<idw$}  {:<13}  {:>9}  {}\n", "id", "verdict", "log10|r|", "description");
        for r in &self.rows {
            let v = match &r.verdict {
                Verdict::Adjudication(_) => "ADJUDICATION".to_string(),
                v => v.label(),
            };
            let res = match r.residual_log10() {
                Some(x) => format!("{x:.2}"),
                None if r.residual.is_some() => "exact".into(),
                None => "-".into(),
            };
            out += &format!("{:<idw$}  {:<13}  {:>9}  {}\n", r.id, v, res, r.description);
            if let Verdict::Adjudication(d) = &r.verdict {
                out += &format!("{:<idw$}  -> {d}\n", "");
            }
            if let Some(a) = &r.annotation {
                out += &format!("{:<idw$}  note: {a}\n", "");
            }
        }
        let m = &self.metadata;
        out += &format!(
            "\n{} rows: {} pass, {} fail, {} non-converged, {} adjudications (digits {}, slack {})\n",
            m.rows, m.pass, m.fail, m.non_converged, m.adjudications, m.digits, m.slack
        );
        if with_timing {
            out += &format!("wall time {:.2} s\n", m.wall_seconds);
        }
        out
    }
}

pub struct Ctx {
    /// Working digits: requested digits plus slack.
    pub w: u32,
    pub budget: Budget,
}

type Pairs = Vec<(ExtReal, ExtReal)>;
type IdentityFn = Box<dyn Fn(&Ctx) -> Result<Pairs> + Send + Sync>;
type AdjudicateFn = Box<dyn Fn(&Ctx) -> Result<Adjudged> + Send + Sync>;

pub struct Adjudged {
    pub detail: String,
    pub residual: ExtReal,
    pub margin_orders: f64,
}

enum Kind {
    Identity(IdentityFn),
    Adjudication(AdjudicateFn),
}

/// Tolerance floor for entries whose accuracy is bounded independently of the
/// requested digits.
#[derive(Clone, Debug)]
pub struct Floor {
    pub log10: f64,
    pub why: &'static str,
}

pub struct Entry {
    pub id: String,
    pub description: String,
    kind: Kind,
    pub floor: Option<Floor>,
    pub slow: bool,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub digits: u32,
    pub slack: u32,
    pub max_terms: usize,
}

impl RunConfig {
    pub fn new(digits: u32) -> Self {
        RunConfig { digits, slack: DEFAULT_SLACK, max_terms: Budget::default().max_terms }
    }
}

fn mpfr_version() -> String {
    use gmp_mpfr_sys::mpfr;
    format!("{}.{}.{}", mpfr::VERSION_MAJOR, mpfr::VERSION_MINOR, mpfr::VERSION_PATCHLEVEL)
}

pub fn registry() -> Vec<Entry> {
    build_registry()
}

pub fn ids() -> Vec<String> {
    registry().into_iter().map(|e| e.id).collect()
}

fn evaluate(e: &Entry, cfg: &RunConfig) -> IdentityRecord {
    let t0 = Instant::now();
    let budget = if e.slow {
        Budget::with_max_terms(SLOW_MAX_TERMS.max(cfg.max_terms))
    } else {
        Budget::with_max_terms(cfg.max_terms)
    };
    let ctx = Ctx { w: cfg.digits + cfg.slack, budget };
    let tol = -(f64::from(cfg.digits) - f64::from(cfg.slack));
    let mut rec = IdentityRecord {
        id: e.id.clone(),
        description: e.description.clone(),
        digits: cfg.digits,
        residual: None,
        verdict: Verdict::Fail,
        seconds: 0.0,
        annotation: None,
        margin_orders: None,
    };
    match &e.kind {
        Kind::Identity(f) => match f(&ctx) {
            Ok(pairs) => {
                let res = pairs
                    .iter()
                    .map(|(a, b)| (a - b).abs())
                    .fold(ExtReal::zero(ctx.w), |m, r| if r > m { r } else { m });
                let lim = match &e.floor {
                    Some(fl) if fl.log10 > tol => {
                        rec.annotation = Some(format!("tolerance widened to 1e{:.0}: {}", fl.log10, fl.why));
                        fl.log10
                    }
                    _ => tol,
                };
                rec.verdict = if res.is_zero() || res.log10_abs() < lim { Verdict::Pass } else { Verdict::Fail };
                rec.residual = Some(res);
            }
            Err(err) if err.is_convergence() => {
                rec.verdict = Verdict::NonConverged;
                rec.annotation = Some(err.to_string());
            }
            Err(err) => {
                rec.annotation = Some(err.to_string());
            }
        },
        Kind::Adjudication(f) => match f(&ctx) {
            Ok(a) => {
                rec.verdict = Verdict::Adjudication(a.detail);
                rec.residual = Some(a.residual);
                rec.margin_orders = Some(a.margin_orders);
            }
            Err(err) => {
                rec.verdict = Verdict::Adjudication(format!("undecided: {err}"));
            }
        },
    }
    rec.seconds = t0.elapsed().as_secs_f64();
    rec
}

/// Evaluates one registered identity.
pub fn run_identity(id: &str, digits: u32) -> Result<IdentityRecord> {
    run_identity_with(id, &RunConfig::new(digits))
}

pub fn run_identity_with(id: &str, cfg: &RunConfig) -> Result<IdentityRecord> {
    let reg = registry();
    let e = reg.iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownId(id.to_string()))?;
    Ok(evaluate(e, cfg))
}

/// Runs the entries whose id matches `filter` (a glob, or an exact id).
pub fn run_all(digits: u32, filter: Option<&str>) -> Result<Report> {
    run_all_with(&RunConfig::new(digits), filter)
}

pub fn run_all_with(cfg: &RunConfig, filter: Option<&str>) -> Result<Report> {
    let reg = registry();
    let selected: Vec<&Entry> = match filter {
        None => reg.iter().collect(),
        Some(f) => {
            let pat = glob::Pattern::new(f).map_err(|e| Error::Domain(format!("bad filter '{f}': {e}")))?;
            reg.iter().filter(|e| e.id == f || pat.matches(&e.id)).collect()
        }
    };
    if selected.is_empty() {
        return Err(Error::UnknownId(filter.unwrap_or("").to_string()));
    }
    Ok(run_entries(&selected, cfg))
}

/// Runs the listed ids in the given order.
pub fn run_ids(ids: &[String], cfg: &RunConfig) -> Result<Report> {
    let reg = registry();
    let selected = ids
        .iter()
        .map(|id| reg.iter().find(|e| &e.id == id).ok_or_else(|| Error::UnknownId(id.clone())))
        .collect::<Result<Vec<_>>>()?;
    Ok(run_entries(&selected, cfg))
}

fn run_entries(selected: &[&Entry], cfg: &RunConfig) -> Report {
    let t0 = Instant::now();
    // completion order varies; collect keeps registry order
    let rows: Vec<IdentityRecord> = selected.par_iter().map(|e| evaluate(e, cfg)).collect();
    let count = |v: &Verdict| rows.iter().filter(|r| &r.verdict == v).count();
    let metadata = RunMetadata {
        digits: cfg.digits,
        slack: cfg.slack,
        max_terms: cfg.max_terms,
        slow_max_terms: SLOW_MAX_TERMS.max(cfg.max_terms),
        mpfr_version: mpfr_version(),
        rows: rows.len(),
        pass: count(&Verdict::Pass),
        fail: count(&Verdict::Fail),
        non_converged: count(&Verdict::NonConverged),
        adjudications: rows.iter().filter(|r| r.is_adjudication()).count(),
        wall_seconds: t0.elapsed().as_secs_f64(),
    };
    Report { metadata, rows }
}

// ---------------------------------------------------------------------------
// evaluator helpers

fn q(a: i64, b: i64) -> Rational {
    Rational::from((a, b))
}

fn one() -> Rational {
    Rational::from(1)
}

fn c(x: i64, w: u32) -> ExtReal {
    ExtReal::from_i64(x, w)
}

fn cq(a: i64, b: i64, w: u32) -> ExtReal {
    ExtReal::from_rational(&q(a, b), w)
}

fn gam(w: u32) -> Result<ExtReal> {
    euler_gamma(w)
}

fn gp(p: u32, u: &Rational, x: &Ctx) -> Result<ExtReal> {
    Ok(stieltjes_hasse_with(p, u, x.w, &x.budget)?.value)
}

fn ln_i(n: i64, w: u32) -> Result<ExtReal> {
    c(n, w).ln()
}

fn zeta_i(s: i64, w: u32) -> Result<ExtReal> {
    hurwitz_zeta(&Rational::from(s), &one(), w)
}

fn digamma_q(u: &Rational, w: u32) -> Result<ExtReal> {
    crate::stieltjes::digamma(u, w)
}

fn hasse_powlog(r: u32, a: i64, w: u32) -> Result<ExtReal> {
    Ok(hasse_sum(&IntegrandKind::powlog(r, a), &one(), &WeightKind::Hasse, w)?.value)
}

fn sq(x: &ExtReal) -> ExtReal {
    x * x
}

fn best_of(target: &ExtReal, candidates: &[(&str, ExtReal)]) -> Adjudged {
    let mut scored: Vec<(&str, ExtReal)> = candidates.iter().map(|(n, v)| (*n, (target - v).abs())).collect();
    scored.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
    let lg = |r: &ExtReal| if r.is_zero() { -(r.digits() as f64) } else { r.log10_abs() };
    let (bn, br) = &scored[0];
    let (sn, sr) = &scored[1];
    let margin = lg(sr) - lg(br);
    Adjudged {
        detail: format!(
            "numerics support {bn} (residual 1e{:.1}) over {sn} (residual 1e{:.1}); margin {:.1} orders",
            lg(br),
            lg(sr),
            margin
        ),
        residual: br.clone(),
        margin_orders: margin,
    }
}

/// `Σ_{n≥N} g(n) ≈ ∫_{N-½}^∞ g + g'(N-½)/24 - 7 g'''(N-½)/5760` for smooth `g`
/// decaying algebraically.
fn midpoint_tail(g: &(dyn Fn(&ExtReal) -> Result<ExtReal> + Sync), n: usize, w: u32) -> Result<ExtReal> {
    let a = &c(n as i64, w) - &cq(1, 2, w);
    let integral = integrate_tail(&|nd: &Node| Ok(&a * &g(&(&a * &nd.x))?), w)?.value;
    let h = cq(1, 8, w);
    let at = |k: i64, step: &ExtReal| g(&(&a + &(step * k)));
    let d1 = &(&(&(&at(-2, &h)? - &(&at(2, &h)? * 1)) + &(&at(1, &h)? * 8)) - &(&at(-1, &h)? * 8)) / &(&h * 12);
    let u = ExtReal::one(w);
    let d3 = &(&(&(&at(2, &u)? - &(&at(1, &u)? * 2)) + &(&at(-1, &u)? * 2)) - &at(-2, &u)?) / 2;
    Ok(&(&integral + &(&d1 / 24)) - &(&(&d3 * 7) / 5760))
}

const EULER_N: usize = 1000;

fn harmonic_approx(m: &ExtReal, gamma: &ExtReal) -> Result<ExtReal> {
    // H_m ≈ log(m + ½) + γ + 1/(24 (m + ½)²)
    let mh = m + &cq(1, 2, m.digits());
    Ok(&(&mh.ln()? + gamma) + &(&sq(&mh) * 24).recip()?)
}

// ---------------------------------------------------------------------------
// registry

fn id_entry(id: impl Into<String>, desc: impl Into<String>, f: IdentityFn) -> Entry {
    Entry { id: id.into(), description: desc.into(), kind: Kind::Identity(f), floor: None, slow: false }
}

fn adj_entry(id: impl Into<String>, desc: impl Into<String>, f: AdjudicateFn) -> Entry {
    Entry { id: id.into(), description: desc.into(), kind: Kind::Adjudication(f), floor: None, slow: false }
}

fn with_floor(mut e: Entry, log10: f64, why: &'static str) -> Entry {
    e.floor = Some(Floor { log10, why });
    e
}

fn slow(mut e: Entry) -> Entry {
    e.slow = true;
    e
}

fn gamma1_quarter_closed(x: &Ctx, coef: i64) -> Result<(ExtReal, ExtReal)> {
    // ½[2γ_1 - coef log²2 - 6γ log 2] ∓ ½π[γ + 4 log 2 + 3 log π - 4 log Γ(¼)]
    let w = x.w;
    let g = gam(w)?;
    let g1 = gp(1, &one(), x)?;
    let l2 = ExtReal::ln2(w);
    let pi = ExtReal::pi(w);
    let sym = &(&(&(&g1 * 2) - &(&sq(&l2) * coef)) - &(&(&g * &l2) * 6)) / 2;
    let br = &(&(&g + &(&l2 * 4)) + &(&ln_pi(w) * 3)) - &(&log_gamma(&q(1, 4), w)? * 4);
    let anti = &(&pi * &br) / 2;
    Ok((&sym - &anti, &sym + &anti))
}

fn gamma2_half_printed(x: &Ctx) -> Result<ExtReal> {
    let l2 = ExtReal::ln2(x.w);
    Ok(&(&gp(2, &one(), x)? - &(&(&gp(1, &one(), x)? * 2) * &l2)) + &(&(&l2.powi(3) * 2) / 3))
}

fn tail_loglog_value(x: &Ctx) -> Result<ExtReal> {
    Ok(integrate(&IntegrandId::TailLogLog(one()), x.w)?.value)
}

fn za2_candidate(x: &Ctx, cube: bool, g1_sign: i64) -> Result<ExtReal> {
    let w = x.w;
    let l2 = ExtReal::ln2(w);
    let g = gam(w)?;
    let g1 = gp(1, &one(), x)?;
    let head = &l2.powi(if cube { 3 } else { 2 }) / 3;
    Ok(&(&head - &(&g * &sq(&l2))) + &(&(&g1 * &l2) * (2 * g1_sign)))
}

fn fermi2_rhs(x: &Ctx, sign: i64) -> Result<ExtReal> {
    let w = x.w;
    let g = gam(w)?;
    let l2 = ExtReal::ln2(w);
    let br = &(&(&zeta_i(2, w)? - &sq(&g)) + &(&g * &l2)) * &l2;
    Ok(&alt_zeta_deriv(2, &one(), w)? + &(&br * sign))
}

fn sigma_state(k: usize, x: &Ctx) -> Result<LiKeiperState> {
    LiKeiperState::build(k, x.w)
}

/// Rows `Σ_{k≥1}` of the form `Σ_n w(n) 2^{-n} Σ_{k=1}^n C(n,k) (k+1)^{-s}`.
fn mean_sum_k1(s: i32, w_n: &(dyn Fn(usize, u32) -> ExtReal + Sync), n0: usize, w: u32) -> Result<ExtReal> {
    let g = |k: usize, d: u32| -> Result<ExtReal> {
        if k == 0 {
            Ok(ExtReal::zero(d))
        } else {
            Ok(c(k as i64 + 1, d).powi(-s))
        }
    };
    binomial_mean_sum(&g, w_n, n0, w)
}

fn build_registry() -> Vec<Entry> {
    let mut r: Vec<Entry> = Vec::new();

    r.push(id_entry(
        "4.3.216",
        "Σ_p (-1)^p γ_p(1)/p! = ψ'(1) - 1, truncated at p = 40",
        Box::new(|x| {
            let w = x.w;
            let mut s = ExtReal::zero(w);
            let mut f = ExtReal::one(w);
            for p in 0..=40u32 {
                if p > 0 {
                    f = &f * p as i64;
                }
                let t = &gp(p, &one(), x)? / &f;
                s = if p % 2 == 0 { &s + &t } else { &s - &t };
            }
            Ok(vec![(s, &hurwitz_zeta(&Rational::from(2), &one(), w)? - 1)])
        }),
    ));
    r.push(id_entry(
        "4.3.217",
        "Σ_p γ_p/p! = 1/2, truncated at p = 40",
        Box::new(|x| {
            let w = x.w;
            let mut s = ExtReal::zero(w);
            let mut f = ExtReal::one(w);
            for p in 0..=40u32 {
                if p > 0 {
                    f = &f * p as i64;
                }
                s = &s + &(&gp(p, &one(), x)? / &f);
            }
            Ok(vec![(s, cq(1, 2, w))])
        }),
    ));
    r.push(id_entry(
        "4.3.217a(t=1/2,u=1)",
        "Σ_p (-1)^p t^p γ_p(u)/p! = ζ(t+1,u) - 1/t",
        Box::new(|x| {
            let w = x.w;
            let t = cq(1, 2, w);
            let mut s = ExtReal::zero(w);
            let mut f = ExtReal::one(w);
            for p in 0..=40u32 {
                if p > 0 {
                    f = &(&f * &t) / p as i64;
                }
                let term = &gp(p, &one(), x)? * &f;
                s = if p % 2 == 0 { &s + &term } else { &s - &term };
            }
            Ok(vec![(s, &hurwitz_zeta(&q(3, 2), &one(), w)? - 2)])
        }),
    ));
    r.push(id_entry(
        "4.3.227(p=1,x=1/2)",
        "γ_p(x) - γ_p(1) = Σ_n [log^p(n+x)/(n+x) - log^p(n+1)/(n+1)]: 40 terms plus the shifted remainder by Euler-Maclaurin",
        Box::new(|x| {
            let w = x.w;
            let xq = q(1, 2);
            let lhs = &gp(1, &xq, x)? - &gp(1, &one(), x)?;
            let n = 40u64;
            let mut s = ExtReal::zero(w);
            for k in 0..n {
                let a = ExtReal::from_rational(&Rational::from(&xq + k), w);
                let b = c(k as i64 + 1, w);
                s = &(&s + &(&a.ln()? / &a)) - &(&b.ln()? / &b);
            }
            let tail = &stieltjes_em(1, &Rational::from(&xq + n), w)?.value - &stieltjes_em(1, &Rational::from(n + 1), w)?.value;
            Ok(vec![(lhs, &s + &tail)])
        }),
    ));
    r.push(id_entry(
        "4.3.228d",
        "-γ_1(1/2) + γ_1 = log²2 + 2γ, as printed",
        Box::new(|x| {
            let w = x.w;
            let lhs = &gp(1, &one(), x)? - &gp(1, &q(1, 2), x)?;
            Ok(vec![(lhs, &sq(&ExtReal::ln2(w)) + &(&gam(w)? * 2))])
        }),
    ));
    r.push(adj_entry(
        "4.3.228d-misprint",
        "-γ_1(1/2) + γ_1: printed log²2 + 2γ against log²2 + 2γ log 2",
        Box::new(|x| {
            let w = x.w;
            let lhs = &gp(1, &one(), x)? - &gp(1, &q(1, 2), x)?;
            let l2 = ExtReal::ln2(w);
            let g = gam(w)?;
            Ok(best_of(
                &lhs,
                &[("log²2 + 2γ log 2", &sq(&l2) + &(&(&g * &l2) * 2)), ("printed log²2 + 2γ", &sq(&l2) + &(&g * 2))],
            ))
        }),
    ));
    for p in 0..=2u32 {
        for qq in 2..=4u32 {
            r.push(id_entry(
                format!("4.3.232(p={p},q={qq})"),
                "Σ_{r<q} γ_p(r/q) = -γ_p + q(-1)^p log^{p+1}q/(p+1) + q Σ_j C(p,j)(-1)^j γ_{p-j} log^j q",
                Box::new(move |x| {
                    let mut lhs = ExtReal::zero(x.w);
                    for rr in 1..qq {
                        lhs = &lhs + &gp(p, &q(rr as i64, qq as i64), x)?;
                    }
                    Ok(vec![(lhs, reflection_sum(p, qq, x.w)?)])
                }),
            ));
        }
    }
    r.push(id_entry(
        "4.3.233",
        "γ_1(1/2) = γ_1 - log²2 - 2γ log 2",
        Box::new(|x| {
            let w = x.w;
            let l2 = ExtReal::ln2(w);
            let rhs = &(&gp(1, &one(), x)? - &sq(&l2)) - &(&(&gam(w)? * &l2) * 2);
            Ok(vec![(gp(1, &q(1, 2), x)?, rhs)])
        }),
    ));
    r.push(id_entry(
        "4.3.233a",
        "γ_2(1/2) = γ_2 - 2γ_1 log 2 + (2/3) log³2, as printed",
        Box::new(|x| Ok(vec![(gp(2, &q(1, 2), x)?, gamma2_half_printed(x)?)])),
    ));
    r.push(adj_entry(
        "4.3.233a-misprint",
        "γ_2(1/2): printed form against the q = 2 reflection γ_2 - 4γ_1 log 2 + 2γ log²2 + (2/3) log³2",
        Box::new(|x| {
            let w = x.w;
            let l2 = ExtReal::ln2(w);
            let head = &gp(2, &one(), x)? - &(&(&gp(1, &one(), x)? * &l2) * 4);
            let fixed = &(&head + &(&(&gam(w)? * &sq(&l2)) * 2)) + &(&(&l2.powi(3) * 2) / 3);
            Ok(best_of(&gp(2, &q(1, 2), x)?, &[("the reflection form", fixed), ("the printed form", gamma2_half_printed(x)?)]))
        }),
    ));
    r.push(id_entry(
        "4.3.233h",
        "γ_1(1/4), γ_1(3/4) = ½[2γ_1 - 15 log²2 - 6γ log 2] ∓ ½π[γ + 4 log 2 + 3 log π - 4 log Γ(1/4)], as printed",
        Box::new(|x| {
            let (a, b) = gamma1_quarter_closed(x, 15)?;
            Ok(vec![(gp(1, &q(1, 4), x)?, a), (gp(1, &q(3, 4), x)?, b)])
        }),
    ));
    r.push(adj_entry(
        "4.3.233h-misprint",
        "γ_1(1/4) + γ_1(3/4): coefficient 15 of log²2 as printed against 7",
        Box::new(|x| {
            let lhs = &gp(1, &q(1, 4), x)? + &gp(1, &q(3, 4), x)?;
            let (a7, b7) = gamma1_quarter_closed(x, 7)?;
            let (a15, b15) = gamma1_quarter_closed(x, 15)?;
            Ok(best_of(&lhs, &[("coefficient 7", &a7 + &b7), ("printed coefficient 15", &a15 + &b15)]))
        }),
    ));
    r.push(id_entry(
        "4.3.233i",
        "γ_1(1/3) = γ_1 - (3/2)γ log 3 - (3/4) log²3 - π/(4√3)[2γ - log 3 + 8 log 2π - 12 log Γ(1/3)]",
        Box::new(|x| {
            let w = x.w;
            let g = gam(w)?;
            let l3 = ln_i(3, w)?;
            let pi = ExtReal::pi(w);
            let sym = &(&gp(1, &one(), x)? - &(&(&(&g * &l3) * 3) / 2)) - &(&(&sq(&l3) * 3) / 4);
            let br = &(&(&(&g * 2) - &l3) + &(&(&pi * 2).ln()? * 8)) - &(&log_gamma(&q(1, 3), w)? * 12);
            let coef = &pi / &(&c(3, w).sqrt()? * 4);
            Ok(vec![(gp(1, &q(1, 3), x)?, &sym - &(&coef * &br))])
        }),
    ));
    r.push(id_entry(
        "4.3.234",
        "ζ''(0) = γ_1 + ½γ² - π²/24 - ½ log²(2π)",
        Box::new(|x| {
            let w = x.w;
            let g = gam(w)?;
            let pi = ExtReal::pi(w);
            let rhs = &(&(&gp(1, &one(), x)? + &(&sq(&g) / 2)) - &(&sq(&pi) / 24)) - &(&sq(&(&pi * 2).ln()?) / 2);
            Ok(vec![(zeta_deriv_at_0(2, &one(), w)?, rhs)])
        }),
    ));
    r.push(adj_entry(
        "4.3.230iii-vs-4.3.240",
        "Σ 1/(n+1) Σ C(n,k)(-1)^k k log(k+1): constant -½ log 2π - ½ + γ against γ + ½ - ½ log 2π",
        Box::new(|x| {
            let w = x.w;
            let lhs = &hasse_powlog(1, -1, w)? - &hasse_powlog(1, 0, w)?;
            let base = &gam(w)? - &(&(&ExtReal::pi(w) * 2).ln()? / 2);
            Ok(best_of(&lhs, &[("4.3.240 (+½)", &base + &cq(1, 2, w)), ("4.3.230iii (-½)", &base - &cq(1, 2, w))]))
        }),
    ));
    r.push(id_entry(
        "4.3.248",
        "Σ 1/(n+1) Σ C(n,k)(-1)^k k log²(k+1) = γ_1 - log 2π - ½γ² + π²/24 + ½ log²(2π)",
        Box::new(|x| {
            let w = x.w;
            let lhs = &hasse_powlog(2, -1, w)? - &hasse_powlog(2, 0, w)?;
            let g = gam(w)?;
            let pi = ExtReal::pi(w);
            let l2p = (&pi * 2).ln()?;
            let rhs = &(&(&(&gp(1, &one(), x)? - &l2p) - &(&sq(&g) / 2)) + &(&sq(&pi) / 24)) + &(&sq(&l2p) / 2);
            Ok(vec![(lhs, rhs)])
        }),
    ));
    r.push(slow(id_entry(
        "4.3.245(m=1)",
        "ζ(2m+1) = (-1)^m 2(2π)^{2m}/(2m+1)! Σ 1/(n+1) Σ C(n,k)(-1)^k (k+1)^{2m+1} log(k+1)",
        Box::new(|x| {
            let w = x.w;
            let m = 1u32;
            let h = &zeta_neg_deriv_with(m, w, &x.budget)?.at_even * (2 * m as i64 + 1);
            let two_pi = &ExtReal::pi(w) * 2;
            let v = &(&(&h * 2) * &two_pi.powi(2 * m as i32)) / &ExtReal::from_integer(&factorial(2 * m + 1), w);
            Ok(vec![(-&v, zeta_i(3, w)?)])
        }),
    )));
    r.push(slow(id_entry(
        "4.3.246",
        "ζ(3) = -(4π²/3) Σ 1/(n+1) Σ C(n,k)(-1)^k (k+1)³ log(k+1)",
        Box::new(|x| {
            let w = x.w;
            let h = &zeta_neg_deriv_with(1, w, &x.budget)?.at_even * 3;
            let lhs = &(&(&sq(&ExtReal::pi(w)) * 4) / 3) * &h;
            Ok(vec![(-&lhs, zeta_i(3, w)?)])
        }),
    )));
    r.push(id_entry(
        "4.3.256(x=1/3)",
        "∫_0^1 (1 - y^{x-1})/(1-y) log log(1/y) dy = γ_1(x) - γ_1 - γψ(x) - γ²",
        Box::new(|x| {
            let w = x.w;
            let xq = q(1, 3);
            let lhs = integrate(&IntegrandId::LogLogRatio(xq.clone()), w)?.value;
            let g = gam(w)?;
            let rhs = &(&(&gp(1, &xq, x)? - &gp(1, &one(), x)?) - &(&g * &digamma_q(&xq, w)?)) - &sq(&g);
            Ok(vec![(lhs, rhs)])
        }),
    ));
    r.push(id_entry(
        "4.3.257",
        "∫_0^1 (1-1/√y)/(1-y) log log(1/y) dy = -∫_0^1 (1/√y)/(1+√y) log log(1/y) dy = γ_1(1/2) - γ_1 - γψ(1/2) - γ²",
        Box::new(|x| {
            let w = x.w;
            let a = integrate(&IntegrandId::LogLogRatio(q(1, 2)), w)?.value;
            let b = -&integrate(&IntegrandId::Adamchik { p: q(1, 2), n: q(1, 2) }, w)?.value;
            let g = gam(w)?;
            let rhs = &(&(&gp(1, &q(1, 2), x)? - &gp(1, &one(), x)?) - &(&g * &digamma_q(&q(1, 2), w)?)) - &sq(&g);
            Ok(vec![(a.clone(), b), (a, rhs)])
        }),
    ));
    r.push(id_entry(
        "4.3.262",
        "∫_0^1 (1/√x)/(1+√x) log log(1/x) dx = log²2",
        Box::new(|x| {
            let v = integrate(&IntegrandId::Adamchik { p: q(1, 2), n: q(1, 2) }, x.w)?.value;
            Ok(vec![(v, sq(&ExtReal::ln2(x.w)))])
        }),
    ));
    r.push(id_entry(
        "4.3.266",
        "∫_0^1 (1-x^{-3/4})/(1-x) log log(1/x) dx = γ_1(1/4) - γ_1 + ½γπ + 3γ log 2",
        Box::new(|x| {
            let w = x.w;
            let lhs = integrate(&IntegrandId::LogLogRatio(q(1, 4)), w)?.value;
            let g = gam(w)?;
            let rhs = &(&(&gp(1, &q(1, 4), x)? - &gp(1, &one(), x)?) + &(&(&g * &ExtReal::pi(w)) / 2))
                + &(&(&g * &ExtReal::ln2(w)) * 3);
            Ok(vec![(lhs, rhs)])
        }),
    ));
    r.push(id_entry(
        "4.3.268",
        "γ_1(1/4) - γ_1 + ½γπ + 3γ log 2 = -(7/2) log²2 + ½γπ - ½π[γ + 4 log 2 + 3 log π - 4 log Γ(1/4)], closing the loop with the integral",
        Box::new(|x| {
            let w = x.w;
            let g = gam(w)?;
            let pi = ExtReal::pi(w);
            let l2 = ExtReal::ln2(w);
            let lhs = &(&(&gp(1, &q(1, 4), x)? - &gp(1, &one(), x)?) + &(&(&g * &pi) / 2)) + &(&(&g * &l2) * 3);
            let br = &(&(&g + &(&l2 * 4)) + &(&ln_pi(w) * 3)) - &(&log_gamma(&q(1, 4), w)? * 4);
            let rhs = &(&(&(-&(&sq(&l2) * 7)) / 2) + &(&(&g * &pi) / 2)) - &(&(&pi * &br) / 2);
            let integral = integrate(&IntegrandId::LogLogRatio(q(1, 4)), w)?.value;
            Ok(vec![(lhs, rhs.clone()), (integral, rhs)])
        }),
    ));
    r.push(id_entry(
        "4.3.273",
        "∫_0^∞ t log t/(e^t - 1) dt = ζ'(2) + (1-γ)ζ(2)",
        Box::new(|x| {
            let w = x.w;
            let lhs = integrate(&IntegrandId::Bose { s: one(), r: 1, a: Rational::new(), c: KernelScale::Unit }, w)?.value;
            let z2 = zeta_i(2, w)?;
            let zp2 = crate::zeta_suite::zeta_deriv(1, &Rational::from(2), &one(), w)?;
            Ok(vec![(lhs, &zp2 + &(&(&ExtReal::one(w) - &gam(w)?) * &z2))])
        }),
    ));
    for s in [2i64, 3] {
        r.push(id_entry(
            format!("4.3.276(s={s})"),
            "∫_0^∞ t^s e^t/(e^t - 1)² dt = sΓ(s)ζ(s)",
            Box::new(move |x| {
                let w = x.w;
                let lhs = integrate(&IntegrandId::BoseSquared(Rational::from(s)), w)?.value;
                let fact: i64 = (1..=s).product();
                Ok(vec![(lhs, &zeta_i(s, w)? * fact)])
            }),
        ));
    }
    r.push(id_entry(
        "4.4.42b",
        "∫_0^∞ u log u/(e^{2πu} - 1) du = ½ζ'(-1)",
        Box::new(|x| {
            let w = x.w;
            let lhs = integrate(&IntegrandId::Bose { s: one(), r: 1, a: Rational::new(), c: KernelScale::TwoPi }, w)?.value;
            let zpm1 = crate::zeta_suite::zeta_neg_deriv(1, w)?.at_odd;
            Ok(vec![(lhs, &zpm1 / 2)])
        }),
    ));
    r.push(id_entry(
        "4.3.298-4.3.299(u=1)",
        "∫_1^∞ [1/(1-t) + 1/(t log t)] t^{-u} log log t dt at u = 1 equals 2γ_1 + γ², as printed",
        Box::new(|x| {
            let w = x.w;
            let rhs = &(&gp(1, &one(), x)? * 2) + &sq(&gam(w)?);
            Ok(vec![(tail_loglog_value(x)?, rhs)])
        }),
    ));
    r.push(adj_entry(
        "4.3.299-misprint",
        "tail log-log integral at u = 1: printed 2γ_1 + γ² against γ_1 + γ²",
        Box::new(|x| {
            let w = x.w;
            let v = tail_loglog_value(x)?;
            let g1 = gp(1, &one(), x)?;
            let g2 = sq(&gam(w)?);
            Ok(best_of(&v, &[("γ_1 + γ²", &g1 + &g2), ("printed 2γ_1 + γ²", &(&g1 * 2) + &g2)]))
        }),
    ));
    let zeta_sum = |inv: i64, with_k: bool, x: &Ctx| -> Result<ExtReal> {
        // Σ_{k≥2} (ζ(k) - 1)/(k^{[with_k]} inv^k)
        let w = x.w;
        let ratio = (inv as f64 * 2.0).log10();
        let kmax = ((f64::from(w) + 3.0) / ratio).ceil() as i64 + 2;
        let mut s = ExtReal::zero(w);
        for k in 2..=kmax {
            let zm1 = hurwitz_zeta(&Rational::from(k), &Rational::from(2), w)?;
            let mut t = &zm1 / &c(inv, w).powi(k as i32);
            if with_k {
                t = &t / k;
            }
            s = &s + &t;
        }
        Ok(s)
    };
    r.push(id_entry(
        "4.3.309",
        "Σ_{k≥2} (ζ(k)-1)/(k 2^k) = ½(1-γ) + log(√π/2)",
        Box::new(move |x| {
            let w = x.w;
            let rhs = &(&(&ExtReal::one(w) - &gam(w)?) / 2) + &(&(&ln_pi(w) / 2) - &ExtReal::ln2(w));
            Ok(vec![(zeta_sum(2, true, x)?, rhs)])
        }),
    ));
    r.push(id_entry(
        "4.3.314",
        "Σ_{k≥2} (ζ(k)-1)/2^k = log 2 - ½",
        Box::new(move |x| Ok(vec![(zeta_sum(2, false, x)?, &ExtReal::ln2(x.w) - &cq(1, 2, x.w))])),
    ));
    r.push(id_entry(
        "4.3.315",
        "Σ_{k≥2} (ζ(k)-1)/k = 1 - γ",
        Box::new(move |x| Ok(vec![(zeta_sum(1, true, x)?, &ExtReal::one(x.w) - &gam(x.w)?)])),
    ));
    r.push(id_entry(
        "4.3.317",
        "σ_1 = -½ log π + ½γ + 1 - log 2",
        Box::new(|x| {
            let w = x.w;
            let st = sigma_state(2, x)?;
            let rhs = &(&(&(&gam(w)? / 2) + 1) - &ExtReal::ln2(w)) - &(&ln_pi(w) / 2);
            Ok(vec![(st.sigma[0].clone(), rhs)])
        }),
    ));
    r.push(id_entry(
        "4.3.325",
        "σ_2 = -¾ζ(2) + 1 + 2γ_1 + γ²",
        Box::new(|x| {
            let w = x.w;
            let st = sigma_state(2, x)?;
            let rhs = &(&(&(&(-&(&zeta_i(2, w)? * 3)) / 4) + 1) + &(&gp(1, &one(), x)? * 2)) + &sq(&gam(w)?);
            Ok(vec![(st.sigma[1].clone(), rhs)])
        }),
    ));
    r.push(id_entry(
        "4.3.328",
        "λ_2 = 2σ_1 - σ_2 = -log π + γ + 1 - 2 log 2 + ¾ζ(2) - 2γ_1 - γ²",
        Box::new(|x| {
            let w = x.w;
            let st = sigma_state(2, x)?;
            let g = gam(w)?;
            let closed = &(&(&(&(&(&(-&ln_pi(w)) + &g) + 1) - &(&ExtReal::ln2(w) * 2)) + &(&(&zeta_i(2, w)? * 3) / 4))
                - &(&gp(1, &one(), x)? * 2))
                - &sq(&g);
            let two = &(&st.sigma[0] * 2) - &st.sigma[1];
            Ok(vec![(st.lam[1].clone(), two), (st.lam[1].clone(), closed)])
        }),
    ));
    let tail_floor = "σ_k truncated at k = 30, |σ_31| near 1e-35";
    r.push(with_floor(
        id_entry(
            "4.3.349",
            "Σ_k σ_k/k = 0, summed to k = 30",
            Box::new(|x| {
                let st = sigma_state(30, x)?;
                let s: ExtReal = st.sigma.iter().enumerate().map(|(i, v)| v / (i as i64 + 1)).sum();
                Ok(vec![(s, ExtReal::zero(x.w))])
            }),
        ),
        -33.0,
        tail_floor,
    ));
    r.push(with_floor(
        id_entry(
            "4.3.351",
            "Σ_k σ_k = -σ_1, summed to k = 30",
            Box::new(|x| {
                let st = sigma_state(30, x)?;
                let s: ExtReal = st.sigma.iter().cloned().sum();
                Ok(vec![(s, -&st.sigma[0])])
            }),
        ),
        -33.0,
        tail_floor,
    ));
    r.push(with_floor(
        id_entry(
            "4.3.352(k)",
            "Σ_k k σ_k = σ_2 - σ_1, summed to k = 30",
            Box::new(|x| {
                let st = sigma_state(30, x)?;
                let s: ExtReal = st.sigma.iter().enumerate().map(|(i, v)| v * (i as i64 + 1)).sum();
                Ok(vec![(s, &st.sigma[1] - &st.sigma[0])])
            }),
        ),
        -31.0,
        tail_floor,
    ));
    let k2_sum = |x: &Ctx| -> Result<(ExtReal, LiKeiperState)> {
        let st = sigma_state(30, x)?;
        let s: ExtReal = st.sigma.iter().enumerate().map(|(i, v)| v * ((i as i64 + 1) * (i as i64 + 1))).sum();
        Ok((s, st))
    };
    r.push(with_floor(
        id_entry(
            "4.3.352(k^2)",
            "Σ_k k²σ_k = -σ_3 + 3σ_2 - σ_1, as printed",
            Box::new(move |x| {
                let (s, st) = k2_sum(x)?;
                Ok(vec![(s, &(&(&st.sigma[1] * 3) - &st.sigma[2]) - &st.sigma[0])])
            }),
        ),
        -30.0,
        tail_floor,
    ));
    r.push(adj_entry(
        "4.3.352(k^2)-misprint",
        "Σ_k k²σ_k: printed -σ_3 + 3σ_2 - σ_1 against -2σ_3 + 3σ_2 - σ_1",
        Box::new(move |x| {
            let (s, st) = k2_sum(x)?;
            let base = &(&st.sigma[1] * 3) - &st.sigma[0];
            Ok(best_of(&s, &[("-2σ_3 + 3σ_2 - σ_1", &base - &(&st.sigma[2] * 2)), ("printed -σ_3 + 3σ_2 - σ_1", &base - &st.sigma[2])]))
        }),
    ));
    r.push(adj_entry(
        "4.3.348(s=2)",
        "Σ_k (-1)^k σ_k/k from the s = 2 substitution: claimed 0 against log ξ(-1) = log ξ(2) giving -log(π/3)",
        Box::new(|x| {
            let w = x.w;
            let st = sigma_state(30, x)?;
            let s: ExtReal = st
                .sigma
                .iter()
                .enumerate()
                .map(|(i, v)| if i % 2 == 0 { -&(v / (i as i64 + 1)) } else { v / (i as i64 + 1) })
                .sum();
            let fe = -&(&ln_pi(w) - &ln_i(3, w)?);
            Ok(best_of(&s, &[("-log(π/3)", fe), ("the claimed 0", ExtReal::zero(w))]))
        }),
    ));
    let sondow_zeta3_shift2 = |x: &Ctx| -> Result<ExtReal> {
        lerch_phi_path(&one(), &Rational::from(3), &Rational::from(2), LerchPath::Sondow, x.w)
    };
    r.push(with_floor(
        id_entry(
            "4.4.14(x=2,s=2)",
            "ζ(s+1) = Σ 2^{-(n+1)} Σ C(n,k) (k+x)^{-(s+1)}, as printed",
            Box::new(move |x| Ok(vec![(zeta_i(3, x.w)?, sondow_zeta3_shift2(x)?)])),
        ),
        -17.0,
        "unsigned binomial means extrapolated in 1/N",
    ));
    r.push(adj_entry(
        "4.4.14-misprint",
        "Sondow-weight sum at x = 2, s = 2: printed ζ(s+1) against ζ(s+1,x)",
        Box::new(move |x| {
            let v = sondow_zeta3_shift2(x)?;
            Ok(best_of(
                &v,
                &[
                    ("ζ(s+1,x)", hurwitz_zeta(&Rational::from(3), &Rational::from(2), x.w)?),
                    ("printed ζ(s+1)", zeta_i(3, x.w)?),
                ],
            ))
        }),
    ));
    r.push(id_entry(
        "4.4.24l(N=1)",
        "H_N^(2) - ζ(2) = Σ 1/(n+1) Σ C(n,k)(-1)^{k+1}/(k+N+1)",
        Box::new(|x| {
            let w = x.w;
            let h = hasse_sum(&IntegrandKind::powlog(0, 1), &Rational::from(2), &WeightKind::Hasse, w)?.value;
            Ok(vec![(&ExtReal::one(w) - &zeta_i(2, w)?, -&h)])
        }),
    ));
    let h_n = |n: u32, p: i32, w: u32| -> ExtReal { (1..=n).map(|j| c(j as i64, w).powi(-p)).fold(ExtReal::zero(w), |a, t| &a + &t) };
    for n in [0u32, 1] {
        r.push(id_entry(
            format!("4.4.24o(N={n})"),
            "Σ 1/(n+1) Σ C(n,k)(-1)^k/(k+N+1)² = 2[ζ(3) - H_N^(2)], as printed",
            Box::new(move |x| {
                let w = x.w;
                let h = hasse_sum(&IntegrandKind::powlog(0, 2), &Rational::from(n + 1), &WeightKind::Hasse, w)?.value;
                Ok(vec![(h, &(&zeta_i(3, w)? - &h_n(n, 2, w)) * 2)])
            }),
        ));
    }
    r.push(adj_entry(
        "4.4.24o-order(N=2)",
        "at N = 2 the printed H_N^(2) and H_N^(3) differ: which one the Hasse row supports",
        Box::new(move |x| {
            let w = x.w;
            let h = hasse_sum(&IntegrandKind::powlog(0, 2), &Rational::from(3), &WeightKind::Hasse, w)?.value;
            let z3 = zeta_i(3, w)?;
            Ok(best_of(&h, &[("2[ζ(3) - H_N^(3)]", &(&z3 - &h_n(2, 3, w)) * 2), ("printed 2[ζ(3) - H_N^(2)]", &(&z3 - &h_n(2, 2, w)) * 2)]))
        }),
    ));
    r.push(with_floor(
        id_entry(
            "4.4.24q",
            "Σ_{n≥0} (H_{n+2} - 1)/((n+1)²(n+2)) = 2[ζ(3) - 1]: 1000 terms plus midpoint tail",
            Box::new(|x| {
                let w = x.w;
                let g = gam(w)?;
                let mut s = ExtReal::zero(w);
                let mut h = cq(3, 2, w);
                for n in 0..EULER_N as i64 {
                    s = &s + &(&(&h - 1) / &(&sq(&c(n + 1, w)) * (n + 2)));
                    h = &h + &c(n + 3, w).recip()?;
                }
                let gh = |t: &ExtReal| -> Result<ExtReal> {
                    let hm = &harmonic_approx(&(t + 2), &g)? - 1;
                    Ok(&hm / &(&sq(&(t + 1)) * &(t + 2)))
                };
                let tail = midpoint_tail(&gh, EULER_N, w)?;
                Ok(vec![(&s + &tail, &(&zeta_i(3, w)? - 1) * 2)])
            }),
        ),
        -18.0,
        "asymptotic tail estimate after 1000 terms",
    ));
    let rational_tail_sum = |x: &Ctx| -> Result<ExtReal> {
        // Σ 1/((n+1)²(n+2))
        let w = x.w;
        let mut s = ExtReal::zero(w);
        for n in 0..EULER_N as i64 {
            s = &s + &(&sq(&c(n + 1, w)) * (n + 2)).recip()?;
        }
        let gh = |t: &ExtReal| (&sq(&(t + 1)) * &(t + 2)).recip();
        Ok(&s + &midpoint_tail(&gh, EULER_N, w)?)
    };
    r.push(with_floor(
        id_entry(
            "4.4.24r",
            "ζ(2) - 1 = Σ 1/(n+1) Σ C(n,k)(-1)^k/(k+2) = ½ Σ 1/((n+1)²(n+2)), as printed",
            Box::new(move |x| {
                let w = x.w;
                let z = &zeta_i(2, w)? - 1;
                let h = hasse_sum(&IntegrandKind::powlog(0, 1), &Rational::from(2), &WeightKind::Hasse, w)?.value;
                Ok(vec![(z.clone(), h), (z, &rational_tail_sum(x)? / 2)])
            }),
        ),
        -18.0,
        "asymptotic tail estimate after 1000 terms",
    ));
    r.push(adj_entry(
        "4.4.24r-misprint",
        "Σ 1/((n+1)²(n+2)) against ζ(2) - 1: factor ½ as printed or none",
        Box::new(move |x| {
            let w = x.w;
            let s = rational_tail_sum(x)?;
            let z = &zeta_i(2, w)? - 1;
            Ok(best_of(&s, &[("Σ = ζ(2) - 1", z.clone()), ("printed ½Σ = ζ(2) - 1", &z * 2)]))
        }),
    ));
    r.push(with_floor(
        id_entry(
            "4.4.24v",
            "Σ 1/(n+1)² Σ C(n,k)(-1)^k/(k+1)² = ½ζ(2)²: 1000 difference rows plus a tail from their H_{n+1}/(n+1) form",
            Box::new(|x| {
                let w = x.w;
                let work = w + (0.302 * EULER_N as f64) as u32 + 10;
                let mut t = DiffTable::new();
                let mut s = ExtReal::zero(work);
                for n in 0..EULER_N as i64 {
                    let row = t.push(c(n + 1, work).powi(-2));
                    s = &s + &(&row / &sq(&c(n + 1, work)));
                }
                let g = gam(w)?;
                let gh = |t: &ExtReal| -> Result<ExtReal> { Ok(&harmonic_approx(&(t + 1), &g)? / &(t + 1).powi(3)) };
                let lhs = &s.with_digits(w) + &midpoint_tail(&gh, EULER_N, w)?;
                Ok(vec![(lhs, &sq(&zeta_i(2, w)?) / 2)])
            }),
        ),
        -18.0,
        "asymptotic tail estimate after 1000 rows",
    ));
    r.push(with_floor(
        id_entry(
            "4.4.24vi",
            "Σ_{n≥1} H_n/n³ = ½ζ(2)²: 999 terms plus midpoint tail",
            Box::new(|x| {
                let w = x.w;
                let g = gam(w)?;
                let mut s = ExtReal::zero(w);
                let mut h = ExtReal::zero(w);
                for n in 1..EULER_N as i64 {
                    h = &h + &c(n, w).recip()?;
                    s = &s + &(&h / &c(n, w).powi(3));
                }
                let gh = |t: &ExtReal| -> Result<ExtReal> { Ok(&harmonic_approx(t, &g)? / &t.powi(3)) };
                Ok(vec![(&s + &midpoint_tail(&gh, EULER_N, w)?, &sq(&zeta_i(2, w)?) / 2)])
            }),
        ),
        -18.0,
        "asymptotic tail estimate after 1000 terms",
    ));
    let mean_floor = "unsigned binomial means extrapolated in 1/N";
    r.push(with_floor(
        id_entry(
            "4.4.43mc(s=2)",
            "Σ_{n≥1} 2^{-(n+1)} Σ_{k=1}^n C(n,k)[k^{-s} - (k+1)^{-s}] = 1",
            Box::new(|x| {
                let g = |k: usize, d: u32| -> Result<ExtReal> {
                    if k == 0 {
                        return Ok(ExtReal::zero(d));
                    }
                    Ok(&c(k as i64, d).powi(-2) - &c(k as i64 + 1, d).powi(-2))
                };
                let v = binomial_mean_sum(&g, &|_, d| cq(1, 2, d), 1, x.w)?;
                Ok(vec![(v, ExtReal::one(x.w))])
            }),
        ),
        -17.0,
        mean_floor,
    ));
    r.push(with_floor(
        id_entry(
            "4.4.43x",
            "2 - ζ(2) = Σ_{n≥1} 1/(n 2^n) Σ_{k=1}^n C(n,k)/(k+1)² = ∫_0^1 log x log(1-x) dx",
            Box::new(|x| {
                let w = x.w;
                let v = mean_sum_k1(2, &|n, d| if n == 0 { ExtReal::zero(d) } else { ExtReal::one(d) / n as i64 }, 1, w)?;
                let integral = integrate_unit(&|nd: &Node| Ok(&nd.x.ln()? * &nd.c.ln()?), w)?.value;
                let rhs = &c(2, w) - &zeta_i(2, w)?;
                Ok(vec![(rhs.clone(), v), (rhs, integral)])
            }),
        ),
        -17.0,
        mean_floor,
    ));
    r.push(with_floor(
        id_entry(
            "4.4.43y",
            "3 - ζ(2) - ζ(3) = Σ_{n≥1} 1/(n 2^n) Σ_{k=1}^n C(n,k)/(k+1)³",
            Box::new(|x| {
                let w = x.w;
                let v = mean_sum_k1(3, &|n, d| if n == 0 { ExtReal::zero(d) } else { ExtReal::one(d) / n as i64 }, 1, w)?;
                Ok(vec![(&(&c(3, w) - &zeta_i(2, w)?) - &zeta_i(3, w)?, v)])
            }),
        ),
        -17.0,
        mean_floor,
    ));
    for (xa, xb) in [(-1i64, 2i64), (1, 2), (-3, 4)] {
        for (s, y) in [(q(2, 1), q(1, 1)), (q(5, 2), q(1, 3))] {
            let xr = q(xa, xb);
            r.push(id_entry(
                format!("4.4.44fii(x={xr},s={s},y={y})"),
                "Σ 2^{-(n+1)} Σ C(n,k) x^k (k+y)^{-s} = Φ(x,s,y) = Σ x^n (n+y)^{-s}",
                Box::new(move |x| {
                    let a = lerch_phi_path(&xr, &s, &y, LerchPath::Sondow, x.w)?;
                    let b = lerch_phi_path(&xr, &s, &y, LerchPath::Direct, x.w)?;
                    Ok(vec![(a, b)])
                }),
            ));
        }
    }
    r.push(id_entry(
        "4.4.44i",
        "∫_0^∞ log u/(e^u + 1) du = -½ log²2",
        Box::new(|x| {
            let v = integrate(&IntegrandId::Fermi(1), x.w)?.value;
            Ok(vec![(v, -&(&sq(&ExtReal::ln2(x.w)) / 2))])
        }),
    ));
    r.push(id_entry(
        "4.4.44j",
        "∫_0^∞ log²u/(e^u + 1) du = ζ_a''(1) - [-γ² + ζ(2) + γ log 2] log 2, as printed",
        Box::new(|x| Ok(vec![(integrate(&IntegrandId::Fermi(2), x.w)?.value, fermi2_rhs(x, -1)?)])),
    ));
    r.push(adj_entry(
        "4.4.44j-misprint",
        "∫_0^∞ log²u/(e^u + 1) du: sign of the bracket term",
        Box::new(|x| {
            let v = integrate(&IntegrandId::Fermi(2), x.w)?.value;
            Ok(best_of(&v, &[("ζ_a''(1) + [..] log 2", fermi2_rhs(x, 1)?), ("printed ζ_a''(1) - [..] log 2", fermi2_rhs(x, -1)?)]))
        }),
    ));
    for n in 0..=6u32 {
        r.push(id_entry(
            format!("A.25(N={n})"),
            "B_N(u) = Σ_n 1/(n+1) Σ_k C(n,k)(-1)^k (k+u)^N, exact at u = 1/3",
            Box::new(move |x| {
                let u = q(1, 3);
                let a = ExtReal::from_rational(&bernoulli_poly_hasse(n, &u), x.w);
                let b = ExtReal::from_rational(&bernoulli_poly(n, &u), x.w);
                Ok(vec![(a, b)])
            }),
        ));
    }
    r.push(adj_entry(
        "4.3.226iv-vs-4.3.237",
        "ζ_a''(1): log³2/3 or log²2/3; both printed forms also carry +2γ_1 log 2 where the numerics need -2γ_1 log 2",
        Box::new(|x| {
            let v = alt_zeta_deriv(2, &one(), x.w)?;
            let mut a = best_of(&v, &[("exponent 3 (4.3.226iv)", za2_candidate(x, true, -1)?), ("exponent 2 (4.3.237)", za2_candidate(x, false, -1)?)]);
            let printed = (&v - &za2_candidate(x, true, 1)?).log10_abs();
            a.detail += &format!("; with the printed +2γ_1 log 2 the residual is 1e{printed:.1}");
            Ok(a)
        }),
    ));
    r
}
