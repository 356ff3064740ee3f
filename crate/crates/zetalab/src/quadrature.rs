//! Double-exponential quadrature for log-log and Bose/Fermi integrals.
//!
//! `[0,1]` uses tanh-sinh, `x = 1/(1 + exp(-π sinh τ))`; `[1,∞)` uses
//! exp-sinh, `x = 1 + exp(π/2 sinh τ)`. Each node also carries the distance
//! to the near endpoint in closed form, so integrands never form `1 - x` by
//! subtraction. Half-line integrals are split at 1.
//!
//! Integrals over `(0,1)` with `log log(1/y)` are evaluated after `y = e^{-t}`,
//! which turns them into smooth `log t` integrals on `(0,∞)`.

use crate::error::{Error, Result};
use crate::precision_core::ExtReal;
use crate::stieltjes::{digamma, euler_gamma, stieltjes_hasse};
use crate::zeta_suite::{alt_zeta_deriv, hurwitz_zeta, zeta_deriv, zeta_neg_deriv};
use rug::Rational;
use serde::Serialize;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

const MAX_LEVEL: u32 = 12;

/// Scale `c` in the Bose kernel `1/(e^{ct} - 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelScale {
    Unit,
    TwoPi,
}

#[derive(Clone, Debug, PartialEq)]
pub enum IntegrandId {
    /// `(1 - y^{x-1})/(1 - y) · log log(1/y)` on `(0,1)`.
    LogLogRatio(Rational),
    /// `y^{p-1}/(1 + y^n) · log log(1/y)` on `(0,1)`.
    Adamchik { p: Rational, n: Rational },
    /// `t^s log^r t · e^{-at}/(e^{ct} - 1)` on `(0,∞)`.
    Bose { s: Rational, r: u32, a: Rational, c: KernelScale },
    /// `t^s e^t/(e^t - 1)^2` on `(0,∞)`.
    BoseSquared(Rational),
    /// `log^r u/(e^u + 1)` on `(0,∞)`.
    Fermi(u32),
    /// `-[1/(1-y) + 1/log y] y^{u-1} log log(1/y)` on `(0,1)`: the substitution
    /// `t = 1/y` of `[1/(1-t) + 1/(t log t)] t^{-u} log log t` on `(1,∞)`.
    TailLogLog(Rational),
}

#[derive(Clone, Debug)]
pub struct QuadResult {
    pub value: ExtReal,
    pub err_estimate: ExtReal,
    pub levels_used: u32,
    pub nodes_used: usize,
    pub working_digits: u32,
    /// Inter-level differences, coarsest first.
    pub level_errors: Vec<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Interval {
    Unit,
    Tail,
}

/// Abscissa `x`, distance `c` to the near endpoint (`min(x, 1-x)` side for the
/// unit interval is implied by `low`), and weight `h dx/dτ`.
#[derive(Clone, Debug)]
pub struct Node {
    pub x: ExtReal,
    /// `1 - x` on `[0,1]`, `x - 1` on `[1,∞)`.
    pub c: ExtReal,
    pub w: ExtReal,
}

type NodeKey = (Interval, u32, u32);

fn node_cache() -> &'static RwLock<HashMap<NodeKey, Arc<Vec<Node>>>> {
    static C: OnceLock<RwLock<HashMap<NodeKey, Arc<Vec<Node>>>>> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Nodes new at `level` (all of them at level 0), weights without the step `h`.
fn level_nodes(iv: Interval, level: u32, digits: u32) -> Arc<Vec<Node>> {
    let key = (iv, level, digits);
    if let Some(v) = node_cache().read().expect("node cache poisoned").get(&key) {
        return v.clone();
    }
    let d = digits;
    let pi = ExtReal::pi(d);
    let lim = f64::from(d) * std::f64::consts::LN_10 + 20.0;
    let (tmin, tmax) = match iv {
        // π sinh τ beyond lim: weight below 10^-d relative
        Interval::Unit => {
            let t = (lim / std::f64::consts::PI).asinh();
            (-t, t)
        }
        Interval::Tail => {
            // wide enough on the right for algebraic decay; exponentially
            // decaying integrands underflow to zero there
            let t = (2.0 * lim / std::f64::consts::PI).asinh();
            (-t, t)
        }
    };
    let h_inv = 1u64 << level;
    let step = if level == 0 { 1 } else { 2 };
    let start = if level == 0 { 0i64 } else { 1 };
    let kmax = (tmax * h_inv as f64).ceil() as i64;
    let kmin = (tmin * h_inv as f64).floor() as i64;
    let mut nodes = Vec::new();
    let mut push = |k: i64| {
        let tau = ExtReal::from_rational(&Rational::from((k, h_inv)), d);
        let sh = tau.sinh();
        let ch = tau.cosh();
        match iv {
            Interval::Unit => {
                let e = (&(&pi * &sh)).exp();
                // x = 1/(1+e^{-π sinh τ}) = e/(1+e), 1-x = 1/(1+e)
                let den = &e + 1;
                let x = &e / &den;
                let c = den.recip().expect("positive");
                let w = &(&(&pi * &ch) * &x) * &c;
                nodes.push(Node { x, c, w });
            }
            Interval::Tail => {
                let e = (&(&pi * &sh) / 2).exp();
                let x = &e + 1;
                let w = &(&(&pi * &ch) / 2) * &e;
                nodes.push(Node { x, c: e, w });
            }
        }
    };
    let mut k = start + ((kmin - start).div_euclid(step)) * step;
    while k <= kmax {
        if level == 0 || k.rem_euclid(2) == 1 {
            push(k);
        }
        k += step;
    }
    let v = Arc::new(nodes);
    node_cache().write().expect("node cache poisoned").insert(key, v.clone());
    v
}

type Integrand<'a> = dyn Fn(&Node) -> Result<ExtReal> + Sync + 'a;

fn integrate_interval(iv: Interval, f: &Integrand<'_>, digits: u32) -> Result<QuadResult> {
    let work = digits + 10;
    let mut raw = ExtReal::zero(work);
    let mut prev: Option<ExtReal> = None;
    let mut errs = Vec::new();
    let mut nodes = 0usize;
    let tol = -(f64::from(digits) + 1.0);
    for level in 0..=MAX_LEVEL {
        for n in level_nodes(iv, level, work).iter() {
            if n.w.is_zero() {
                continue;
            }
            let v = f(n)?;
            raw = &raw + &(&v * &n.w);
            nodes += 1;
        }
        let h = ExtReal::one(work) / (1i64 << level);
        let s = &raw * &h;
        if let Some(p) = &prev {
            let e = (&s - p).log10_abs();
            errs.push(e);
            let n = errs.len();
            // quadratic convergence: the next level would be near e^2
            if e < tol || (n >= 2 && e < -5.0 && 2.0 * e < tol && errs[n - 2] > e) {
                let est = if e < tol { 10f64.powf(e) } else { 10f64.powf(2.0 * e) };
                return Ok(QuadResult {
                    value: s.with_digits(digits),
                    err_estimate: ExtReal::from_f64(est.max(1e-300), 12),
                    levels_used: level + 1,
                    nodes_used: nodes,
                    working_digits: work,
                    level_errors: errs,
                });
            }
        }
        prev = Some(s);
    }
    Err(Error::NoConvergence(format!(
        "inter-level difference stalled at 1e{:.1}",
        errs.last().copied().unwrap_or(0.0)
    )))
}

/// `∫_0^1 f`, `f` receiving nodes with `x` and `1 - x`.
pub fn integrate_unit(f: &Integrand<'_>, digits: u32) -> Result<QuadResult> {
    integrate_interval(Interval::Unit, f, digits)
}

/// `∫_1^∞ f`, `f` receiving nodes with `x` and `x - 1`.
pub fn integrate_tail(f: &Integrand<'_>, digits: u32) -> Result<QuadResult> {
    integrate_interval(Interval::Tail, f, digits)
}

/// `∫_0^∞ g(t) dt`, split at `t = 1`.
pub fn integrate_half_line(g: &(dyn Fn(&ExtReal) -> Result<ExtReal> + Sync), digits: u32) -> Result<QuadResult> {
    let a = integrate_unit(&|n: &Node| g(&n.x), digits)?;
    let b = integrate_tail(&|n: &Node| g(&n.x), digits)?;
    let mut errs = a.level_errors.clone();
    errs.extend(&b.level_errors);
    Ok(QuadResult {
        value: &a.value + &b.value,
        err_estimate: &a.err_estimate + &b.err_estimate,
        levels_used: a.levels_used.max(b.levels_used),
        nodes_used: a.nodes_used + b.nodes_used,
        working_digits: a.working_digits,
        level_errors: errs,
    })
}

fn er(q: &Rational, d: u32) -> ExtReal {
    ExtReal::from_rational(q, d)
}

/// `t`-form of the catalogue entry on `(0,∞)` after `y = e^{-t}` where relevant.
fn t_form(id: &IntegrandId, t: &ExtReal) -> Result<ExtReal> {
    let d = t.digits();
    let lt = t.ln()?;
    Ok(match id {
        IntegrandId::LogLogRatio(x) => {
            // [1 - e^{-(x-1)t}] log t / (e^t - 1)
            if *t >= 1 {
                // (e^{-t} - e^{-xt})/(1 - e^{-t}) stays finite for large t
                let num = &(-t).exp() - &(&(-&er(x, d)) * t).exp();
                &(&num * &lt) / &(-&(-t).exp_m1())
            } else {
                let xm1 = er(&Rational::from(x - 1u32), d);
                let num = -(&(-&(&xm1 * t)).exp_m1());
                &(&num * &lt) / &t.exp_m1()
            }
        }
        IntegrandId::Adamchik { p, n } => {
            // e^{-pt}/(1 + e^{-nt}) log t
            let ep = (&(-&er(p, d)) * t).exp();
            let en = (&(-&er(n, d)) * t).exp();
            &(&ep / &(&en + 1)) * &lt
        }
        IntegrandId::Bose { s, r, a, c } => {
            let ct = match c {
                KernelScale::Unit => t.clone(),
                KernelScale::TwoPi => &(&ExtReal::pi(d) * 2) * t,
            };
            let ts = t.powf(&er(s, d))?;
            let ea = (&(-&er(a, d)) * t).exp();
            &(&(&ts * &lt.powi(*r as i32)) * &ea) / &ct.exp_m1()
        }
        IntegrandId::BoseSquared(s) => {
            // t^s / (4 sinh²(t/2))
            let sh = (t / 2).sinh();
            &t.powf(&er(s, d))? / &(&(&sh * &sh) * 4)
        }
        IntegrandId::Fermi(r) => {
            let e = (-t).exp();
            &(&lt.powi(*r as i32) * &e) / &(&e + 1)
        }
        IntegrandId::TailLogLog(u) => {
            // y = e^{-t}: the (0,1) form becomes -e^{-ut}[1/(1-e^{-t}) - 1/t] log t
            let ue = er(u, d);
            let bracket = &(&ExtReal::one(d) / &(-&(-t).exp_m1())) - &t.recip()?;
            -(&(&(&(-&(&ue * t)).exp() * &bracket) * &lt))
        }
    })
}

/// Integrates a catalogued integrand.
pub fn integrate(id: &IntegrandId, digits: u32) -> Result<QuadResult> {
    if let IntegrandId::LogLogRatio(x) = id {
        if *x <= 0 {
            return Err(Error::Domain("LogLogRatio needs x > 0".into()));
        }
    }
    integrate_half_line(&|t: &ExtReal| t_form(id, t), digits)
}

/// The `TailLogLog` integrand in its original `(1,∞)` form,
/// `[1/(1-t) + 1/(t log t)] t^{-u} log log t`, for the endpoint-transform check.
pub fn tail_loglog_direct(u: &Rational, digits: u32) -> Result<QuadResult> {
    let f = |n: &Node| -> Result<ExtReal> {
        let d = n.x.digits();
        let lt = n.c.ln_1p()?;
        let a = -(&n.c.recip()?);
        let b = (&n.x * &lt).recip()?;
        let pw = (&(-&er(u, d)) * &lt).exp();
        Ok(&(&(&a + &b) * &pw) * &lt.ln()?)
    };
    integrate_tail(&f, digits)
}

/// The same integrand after `t = 1/y`, integrated on `(0,1)` directly, with the
/// bracket written through `1 - y` from the node.
pub fn tail_loglog_unit(u: &Rational, digits: u32) -> Result<QuadResult> {
    let f = |n: &Node| -> Result<ExtReal> {
        let d = n.x.digits();
        let ly = if n.c < n.x { (-&n.c).ln_1p()? } else { n.x.ln()? };
        let bracket = &n.c.recip()? + &ly.recip()?;
        let pw = (&er(&Rational::from(u - 1u32), d) * &ly).exp();
        Ok(-(&(&bracket * &pw) * &(-&ly).ln()?))
    };
    integrate_unit(&f, digits)
}

/// `γ_1(x) = ∫ (1-y^{x-1})/(1-y) log log(1/y) dy + γ_1 + γψ(x) + γ²`.
pub fn gamma1_via_integral(x: &Rational, digits: u32) -> Result<ExtReal> {
    Ok(gamma1_via_integral_detailed(x, digits)?.0)
}

pub fn gamma1_via_integral_detailed(x: &Rational, digits: u32) -> Result<(ExtReal, QuadResult)> {
    if *x <= 0 {
        return Err(Error::Domain(format!("γ_1(x) needs x > 0, got {x}")));
    }
    let w = digits + 4;
    let q = integrate(&IntegrandId::LogLogRatio(x.clone()), w)?;
    let g = euler_gamma(w)?;
    let g1 = stieltjes_hasse(1, &Rational::from(1), w)?.value;
    let psi = digamma(x, w)?;
    let v = &(&(&q.value + &g1) + &(&g * &psi)) + &(&g * &g);
    Ok((v.with_digits(digits), q))
}

#[derive(Clone, Debug, Serialize)]
pub struct AnchorRow {
    pub id: &'static str,
    pub description: &'static str,
    pub lhs: String,
    pub rhs: String,
    pub residual_log10: f64,
}

/// Bose-kernel anchors: `∫ t log t/(e^t-1) = ζ'(2) + (1-γ)ζ(2)`,
/// `∫ u log u/(e^{2πu}-1) = ζ'(-1)/2`, `∫ t^s e^t/(e^t-1)^2 = s Γ(s) ζ(s)` at s = 2, 3.
pub fn bose_anchor_checks(digits: u32) -> Result<Vec<AnchorRow>> {
    let w = digits + 4;
    let one = Rational::from(1);
    let mut rows = Vec::new();
    let mut push = |id, description, lhs: ExtReal, rhs: ExtReal| {
        rows.push(AnchorRow {
            id,
            description,
            lhs: lhs.to_string_sig(digits as usize),
            rhs: rhs.to_string_sig(digits as usize),
            residual_log10: (&lhs - &rhs).log10_abs(),
        });
    };
    let g = euler_gamma(w)?;
    let z2 = hurwitz_zeta(&Rational::from(2), &one, w)?;
    let zp2 = zeta_deriv(1, &Rational::from(2), &one, w)?;
    let lhs = integrate(&IntegrandId::Bose { s: one.clone(), r: 1, a: Rational::new(), c: KernelScale::Unit }, w)?.value;
    push("4.3.273", "∫ t log t/(e^t-1) = ζ'(2) + (1-γ)ζ(2)", lhs, &zp2 + &(&(&ExtReal::one(w) - &g) * &z2));
    let zpm1 = zeta_neg_deriv(1, w)?.at_odd;
    let lhs = integrate(&IntegrandId::Bose { s: one.clone(), r: 1, a: Rational::new(), c: KernelScale::TwoPi }, w)?.value;
    push("4.4.42b", "∫ u log u/(e^{2πu}-1) = ζ'(-1)/2", lhs, &zpm1 / 2);
    for s in [2u32, 3] {
        let lhs = integrate(&IntegrandId::BoseSquared(Rational::from(s)), w)?.value;
        // s Γ(s) ζ(s) = s! ζ(s)
        let fact: i64 = (1..=s as i64).product();
        let rhs = &hurwitz_zeta(&Rational::from(s), &one, w)? * fact;
        push(if s == 2 { "4.3.276 s=2" } else { "4.3.276 s=3" }, "∫ t^s e^t/(e^t-1)^2 = s Γ(s) ζ(s)", lhs, rhs);
    }
    Ok(rows)
}

/// `∫ log² u/(e^u+1) du` against `ζ_a''(1) + [-γ² + ζ(2) + γ log 2] log 2`.
pub fn fermi_square_check(digits: u32) -> Result<(ExtReal, ExtReal)> {
    let w = digits + 4;
    let lhs = integrate(&IntegrandId::Fermi(2), w)?.value;
    let g = euler_gamma(w)?;
    let l2 = ExtReal::ln2(w);
    let z2 = hurwitz_zeta(&Rational::from(2), &Rational::from(1), w)?;
    let za2 = alt_zeta_deriv(2, &Rational::from(1), w)?;
    let br = &(&(&z2 - &(&g * &g)) + &(&g * &l2)) * &l2;
    Ok((lhs.with_digits(digits), (&za2 + &br).with_digits(digits)))
}
