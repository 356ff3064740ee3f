//! Hurwitz zeta and its `s`-derivatives, alternating zeta, Hurwitz–Lerch Φ,
//! Bernoulli polynomials from finite binomial sums, and the
//! negative-argument derivative relations that produce odd zeta values.

use crate::error::{Error, Result};
use crate::hasse_engine::{
    binomial_mean_rows, binomial_series, extrapolate_to_infinity, hasse_sum, hasse_sum_with, Budget,
    IntegrandKind, WeightKind, GUARD_DIGITS,
};
use crate::precision_core::{bernoulli_numbers, binomial, factorial, ExtReal, PowerSeries};
use crate::stieltjes::stieltjes_hasse;
use rug::{Integer, Rational};

/// Highest derivative order accepted by [`zeta_deriv`].
pub const MAX_DERIV_ORDER: u32 = 6;

fn check_u(u: &Rational) -> Result<()> {
    if *u <= 0 {
        return Err(Error::Domain(format!("ζ(s,u) needs u > 0, got {u}")));
    }
    Ok(())
}

fn check_pole(s: &Rational) -> Result<()> {
    if *s == 1 {
        return Err(Error::Pole("ζ(s,u) at s = 1".into()));
    }
    Ok(())
}

/// `ζ(s,u)`: Euler–Maclaurin for `s > 1`, the Hasse series otherwise.
pub fn hurwitz_zeta(s: &Rational, u: &Rational, digits: u32) -> Result<ExtReal> {
    if *s > 1 {
        hurwitz_zeta_em(s, u, digits)
    } else {
        hurwitz_zeta_hasse(s, u, digits)
    }
}

/// `ζ(s,u) = H[x^{1-s}](u) / (s-1)`, valid for every real `s ≠ 1`.
pub fn hurwitz_zeta_hasse(s: &Rational, u: &Rational, digits: u32) -> Result<ExtReal> {
    check_pole(s)?;
    check_u(u)?;
    let a = Rational::from(s - 1u32);
    let r = hasse_sum(&IntegrandKind::powlog(0, a.clone()), u, &WeightKind::Hasse, digits + 2)?;
    Ok((&r.value / &ExtReal::from_rational(&a, digits + 2)).with_digits(digits))
}

/// Direct sum plus Euler–Maclaurin tail; the reference path for `s > 1`, and
/// usable for any `s ≠ 1` since the tail is the analytic continuation.
pub fn hurwitz_zeta_em(s: &Rational, u: &Rational, digits: u32) -> Result<ExtReal> {
    let jet = hurwitz_zeta_em_series(s, u, 1, digits)?;
    Ok(jet.c[0].clone())
}

/// `ζ^{(r)}(s,u)` for `r < len` with the Euler–Maclaurin route; returns the
/// Taylor coefficients `ζ^{(r)}(s,u)/r!` in `s`.
pub fn hurwitz_zeta_em_series(s: &Rational, u: &Rational, len: usize, digits: u32) -> Result<PowerSeries> {
    check_pole(s)?;
    check_u(u)?;
    let sf = s.to_f64();
    let uf = u.to_f64();
    let len = len.max(1);
    let mut work = digits + GUARD_DIGITS + len as u32;
    let j = 12usize.max(((work as f64) / 4.0).ceil() as usize);
    // |B_2J/(2J)! (s)_{2J-1}| X^{-s-2J+1} (log X)^(len-1) < 10^-work
    let lg = |x: f64| libm_lgamma(x);
    let rise = if sf > 0.0 {
        (lg(sf + 2.0 * j as f64 - 1.0) - lg(sf)) / std::f64::consts::LN_10
    } else {
        // crude bound for non-positive s
        lg(sf.abs() + 2.0 * j as f64 + 1.0) / std::f64::consts::LN_10
    };
    let bern = 2f64.log10() - 2.0 * j as f64 * (2.0 * std::f64::consts::PI).log10();
    let mut x = uf + 2.0;
    for _ in 0..60 {
        let lhs = bern + rise - (sf + 2.0 * j as f64 - 1.0) * x.log10() + (len as f64 - 1.0) * x.ln().max(1.0).log10();
        if lhs < -f64::from(work) {
            break;
        }
        x *= 1.25;
    }
    let n = ((x - uf).ceil() as usize).max(2);
    // sums of a growing power cancel against the tail
    if sf < 1.0 {
        work += ((1.0 - sf) * (n as f64 + uf).log10()).ceil() as u32 + 2;
    }
    let w = work;
    let se = ExtReal::from_rational(s, w);
    // Σ_{k<n} (k+u)^{-s-ε}
    let mut acc = PowerSeries::constant(ExtReal::zero(w), len);
    for k in 0..n {
        let t = ExtReal::from_rational(&Rational::from(u + k as u64), w);
        acc = acc.add(&power_series_of(&t, &se, len)?);
    }
    let big = ExtReal::from_rational(&Rational::from(u + n as u64), w);
    let p_big = power_series_of(&big, &se, len)?;
    // (N+u)^{1-s-ε}/(s+ε-1)
    let tail_int = p_big
        .scale(&big)
        .mul(&PowerSeries::linear(&se - 1, ExtReal::one(w), len).recip()?);
    acc = acc.add(&tail_int).add(&p_big.scale(&(ExtReal::one(w) / 2)));
    let b = bernoulli_numbers(2 * j as u32);
    // rising factorial (s+ε)_{2j-1} and (N+u)^{-(2j-1)}
    let big_inv = big.recip()?;
    let big_inv2 = &big_inv * &big_inv;
    let mut rising = PowerSeries::linear(se.clone(), ExtReal::one(w), len);
    let mut inv_pow = big_inv.clone();
    let mut last = f64::INFINITY;
    let mut smallest = f64::INFINITY;
    for jj in 1..=j {
        if jj > 1 {
            let k = 2 * jj as i64;
            rising = rising
                .mul(&PowerSeries::linear(&se + (k - 3), ExtReal::one(w), len))
                .mul(&PowerSeries::linear(&se + (k - 2), ExtReal::one(w), len));
            inv_pow = &inv_pow * &big_inv2;
        }
        let coef = ExtReal::from_rational(&b[2 * jj], w) / ExtReal::from_integer(&factorial(2 * jj as u32), w);
        let term = rising.mul(&p_big).scale(&(&coef * &inv_pow));
        let tl = term.c.iter().map(|c| c.log10_abs()).fold(f64::NEG_INFINITY, f64::max);
        if tl > last && jj > 2 {
            break;
        }
        acc = acc.add(&term);
        last = tl;
        smallest = smallest.min(tl);
        if tl < -f64::from(w) {
            break;
        }
    }
    if smallest > -(f64::from(digits) + 1.0) {
        return Err(Error::NonConverged(format!("Euler–Maclaurin tail for ζ({s},{u}) stalled at 1e{smallest:.1}")));
    }
    // coefficient r of the Taylor series is ζ^{(r)}/r!
    Ok(PowerSeries::new(acc.c.iter().map(|c| c.with_digits(digits)).collect()))
}

/// `t^{-s-ε}` as a series in `ε`: `t^{-s} Σ (-log t)^k ε^k / k!`.
fn power_series_of(t: &ExtReal, s: &ExtReal, len: usize) -> Result<PowerSeries> {
    let l = t.ln()?;
    let base = (&(-&l) * s).exp();
    let mut c = Vec::with_capacity(len);
    let mut cur = base;
    for k in 0..len {
        c.push(cur.clone());
        cur = &(&cur * &(-&l)) / (k as i64 + 1);
    }
    Ok(PowerSeries::new(c))
}

// f64 log-gamma for planning only
fn libm_lgamma(x: f64) -> f64 {
    let mut x = x;
    let mut acc = 0.0;
    while x < 8.0 {
        acc -= x.ln();
        x += 1.0;
    }
    acc + (x - 0.5) * x.ln() - x + 0.5 * (2.0 * std::f64::consts::PI).ln() + 1.0 / (12.0 * x)
}

/// Riemann `ζ(s)`.
pub fn zeta(s: &Rational, digits: u32) -> Result<ExtReal> {
    hurwitz_zeta(s, &Rational::from(1), digits)
}

/// `ζ^{(r)}(s,u)` from `(-1)^r ζ^{(r)}(s,u) = r!/(s-1)^{r+1} + Σ_p (-1)^p (s-1)^p γ_{p+r}(u)/p!`,
/// for `s ∈ [0, 2.5]`, `s ≠ 1`, `r ≤ 6`.
pub fn zeta_deriv(r: u32, s: &Rational, u: &Rational, digits: u32) -> Result<ExtReal> {
    check_pole(s)?;
    check_u(u)?;
    if r > MAX_DERIV_ORDER {
        return Err(Error::Unsupported(format!("derivative order {r} exceeds {MAX_DERIV_ORDER}")));
    }
    if *s < 0 || *s > Rational::from((5, 2)) {
        return Err(Error::Unsupported(format!("zeta_deriv is limited to s in [0, 2.5], got {s}")));
    }
    let w = digits + 6;
    let eps = ExtReal::from_rational(&Rational::from(s - 1u32), w);
    let mut acc = &ExtReal::from_integer(&factorial(r), w) / &eps.powi(r as i32 + 1);
    let floor = -(f64::from(digits) + 3.0);
    let mut small = 0;
    let mut pw = ExtReal::one(w);
    let mut pf = Integer::from(1);
    for p in 0..400u32 {
        if p > 0 {
            pw = &pw * &eps;
            pf *= p;
        }
        let g = stieltjes_hasse(p + r, u, w)?.value;
        let t = &(&pw * &g) / &ExtReal::from_integer(&pf, w);
        acc = if p % 2 == 0 { &acc + &t } else { &acc - &t };
        small = if t.log10_abs() < floor { small + 1 } else { 0 };
        if small >= 4 {
            let v = if r % 2 == 0 { acc } else { -acc };
            return Ok(v.with_digits(digits));
        }
    }
    Err(Error::NonConverged(format!("Stieltjes tail for ζ^({r})({s},{u}) did not settle")))
}

/// `ζ^{(m)}(0,u)` through `ζ^{(m)}(0,u) = m ζ^{(m-1)}(0,u) - (-1)^m H[(u+k) log^m(u+k)]`,
/// started from `ζ(0,u)` on the Hasse path.
pub fn zeta_deriv_at_0(m: u32, u: &Rational, digits: u32) -> Result<ExtReal> {
    check_u(u)?;
    if m == 0 {
        return hurwitz_zeta_hasse(&Rational::new(), u, digits);
    }
    let w = digits + 2 + m;
    let mut z = hurwitz_zeta_hasse(&Rational::new(), u, w)?;
    for j in 1..=m {
        let h = hasse_sum(&IntegrandKind::powlog(j, -1), u, &WeightKind::Hasse, w)?.value;
        z = if j % 2 == 0 { &(&z * j as i64) - &h } else { &(&z * j as i64) + &h };
    }
    Ok(z.with_digits(digits))
}

/// `ζ'(-2m)` and `ζ'(1-2m)` from Hasse rows of `(k+1)^{2m+1} log(k+1)` and `(k+1)^{2m} log(k+1)`.
#[derive(Clone, Debug)]
pub struct NegDerivs {
    pub at_even: ExtReal,
    pub at_odd: ExtReal,
}

pub fn zeta_neg_deriv(m: u32, digits: u32) -> Result<NegDerivs> {
    zeta_neg_deriv_with(m, digits, &Budget::default())
}

pub fn zeta_neg_deriv_with(m: u32, digits: u32, budget: &Budget) -> Result<NegDerivs> {
    if m == 0 {
        return Err(Error::Domain("zeta_neg_deriv needs m >= 1".into()));
    }
    let w = digits + 4;
    let one = Rational::from(1);
    let e = hasse_sum_with(&IntegrandKind::powlog(1, -(2 * m as i64 + 1)), &one, &WeightKind::Hasse, w, budget)?;
    let at_even = &e.value / (2 * m as i64 + 1);
    let o = hasse_sum_with(&IntegrandKind::powlog(1, -(2 * m as i64)), &one, &WeightKind::Hasse, w, budget)?;
    let z_odd = hurwitz_zeta_hasse(&Rational::from(1 - 2 * m as i64), &one, w)?;
    let at_odd = &(&o.value + &z_odd) / (2 * m as i64);
    Ok(NegDerivs { at_even: at_even.with_digits(digits), at_odd: at_odd.with_digits(digits) })
}

/// `ζ(2m+1) = (-1)^m 2 (2π)^{2m} ζ'(-2m) / (2m)!`.
pub fn odd_zeta_via_hasse(m: u32, digits: u32) -> Result<ExtReal> {
    let w = digits + 4;
    let d = zeta_neg_deriv(m, w)?.at_even;
    let two_pi = &ExtReal::pi(w) * 2;
    let v = &(&(&d * 2) * &two_pi.powi(2 * m as i32)) / &ExtReal::from_integer(&factorial(2 * m), w);
    Ok(if m % 2 == 0 { v } else { -v }.with_digits(digits))
}

/// `ζ_a(s) = Σ (-1)^k (k+1)^{-s}` via the Sondow weight.
pub fn alt_zeta(s: &Rational, digits: u32) -> Result<ExtReal> {
    alt_zeta_deriv(0, s, digits)
}

/// `ζ_a^{(k)}(s) = (-1)^k Σ_n 2^{-(n+1)} Σ_j C(n,j)(-1)^j log^k(j+1) (j+1)^{-s}`, `k ≤ 4`.
pub fn alt_zeta_deriv(k: u32, s: &Rational, digits: u32) -> Result<ExtReal> {
    if k > 4 {
        return Err(Error::Unsupported(format!("alternating zeta derivative order {k} exceeds 4")));
    }
    let r = hasse_sum(&IntegrandKind::powlog(k, s.clone()), &Rational::from(1), &WeightKind::Sondow, digits + 2)?;
    let v = if k % 2 == 0 { r.value } else { -r.value };
    Ok(v.with_digits(digits))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LerchPath {
    /// Whichever path converges fastest for the arguments.
    Auto,
    Direct,
    Sondow,
}

/// `Φ(x,s,y) = Σ_n x^n (n+y)^{-s}`.
pub fn lerch_phi(x: &Rational, s: &Rational, y: &Rational, digits: u32) -> Result<ExtReal> {
    lerch_phi_path(x, s, y, LerchPath::Auto, digits)
}

pub fn lerch_phi_path(x: &Rational, s: &Rational, y: &Rational, path: LerchPath, digits: u32) -> Result<ExtReal> {
    if *y <= 0 {
        return Err(Error::Domain(format!("Φ needs y > 0, got {y}")));
    }
    let ax = Rational::from(x.abs_ref());
    if ax > 1 || (*x == 1 && *s <= 1) {
        return Err(Error::Domain(format!("Φ({x},{s},{y}): neither path converges")));
    }
    let path = match path {
        LerchPath::Auto if *x == 1 => LerchPath::Direct,
        LerchPath::Auto if ax <= Rational::from((3, 4)) => LerchPath::Direct,
        LerchPath::Auto => LerchPath::Sondow,
        p => p,
    };
    match path {
        LerchPath::Direct => lerch_direct(x, s, y, digits),
        _ => lerch_sondow(x, s, y, digits),
    }
}

fn lerch_direct(x: &Rational, s: &Rational, y: &Rational, digits: u32) -> Result<ExtReal> {
    if *x == 1 {
        return hurwitz_zeta_em(s, y, digits);
    }
    let ax = x.to_f64().abs();
    if ax >= 1.0 {
        return Err(Error::Domain("direct Lerch series needs |x| < 1 (or x = 1, s > 1)".into()));
    }
    let w = digits + GUARD_DIGITS;
    let xe = ExtReal::from_rational(x, w);
    let se = ExtReal::from_rational(s, w);
    let mut acc = ExtReal::zero(w);
    let mut xp = ExtReal::one(w);
    let floor = -(f64::from(digits) + 3.0);
    let mut small = 0;
    let limit = Budget::default().max_terms;
    for n in 0..limit {
        let t = ExtReal::from_rational(&Rational::from(y + n as u64), w);
        let term = &xp * &(&(-&t.ln()?) * &se).exp();
        acc = &acc + &term;
        small = if term.log10_abs() < floor { small + 1 } else { 0 };
        if small >= 4 {
            return Ok(acc.with_digits(digits));
        }
        xp = &xp * &xe;
        if xp.is_zero() {
            return Ok(acc.with_digits(digits));
        }
    }
    Err(Error::NonConverged(format!("direct Lerch series did not converge in {limit} terms")))
}

/// `Φ(x,s,y) = Σ_n 2^{-(n+1)} Σ_k C(n,k) x^k (k+y)^{-s}`. For `x = 1` the rows are
/// binomial means without alternation; their partial sums are extrapolated in `1/N`.
fn lerch_sondow(x: &Rational, s: &Rational, y: &Rational, digits: u32) -> Result<ExtReal> {
    let w = digits + GUARD_DIGITS;
    if *x == 1 {
        return lerch_sondow_unsigned(s, y, digits);
    }
    let xe = ExtReal::from_rational(&Rational::from(-x), w + 20);
    let se = ExtReal::from_rational(s, w + 20);
    let f = |k: usize, d: u32| -> Result<ExtReal> {
        let t = ExtReal::from_rational(&Rational::from(y + k as u64), d);
        let xk = xe.with_digits(d).powi(k as i32);
        Ok(&xk * &(&(-&t.ln()?) * &se.with_digits(d)).exp())
    };
    let mag = (-s.to_f64() * y.to_f64().log10()).max(0.0);
    let r = binomial_series(&f, &WeightKind::Sondow, digits + 2, &Budget::default(), mag)?;
    let ratio = (1.0 + x.to_f64()) / 2.0;
    if ratio >= 0.999 {
        return Err(Error::NonConverged("Sondow Lerch rows decay too slowly".into()));
    }
    Ok(r.value.with_digits(digits))
}

fn lerch_sondow_unsigned(s: &Rational, y: &Rational, digits: u32) -> Result<ExtReal> {
    let se = ExtReal::from_rational(s, digits + 20);
    let g = |k: usize, d: u32| -> Result<ExtReal> {
        let t = ExtReal::from_rational(&Rational::from(y + k as u64), d);
        Ok((&(-&t.ln()?) * &se.with_digits(d)).exp())
    };
    binomial_mean_sum(&g, &|_, d| ExtReal::from_rational(&Rational::from((1, 2)), d), 0, digits)
}

/// `Σ_{n≥n0} w(n) 2^{-n} Σ_k C(n,k) g(k)` for slowly decaying smooth `g`. The
/// partial sums have an error expansion in `1/N`; twelve cuts at `N = 128 i`
/// are extrapolated to `N → ∞`.
pub fn binomial_mean_sum(
    g: &dyn Fn(usize, u32) -> Result<ExtReal>,
    w: &dyn Fn(usize, u32) -> ExtReal,
    n0: usize,
    digits: u32,
) -> Result<ExtReal> {
    let wd = digits + 20;
    let points = 12usize;
    let step = 128usize;
    let n_max = points * step;
    let gv: Vec<ExtReal> = (0..=n_max).map(|k| g(k, wd)).collect::<Result<_>>()?;
    let rows = binomial_mean_rows(&gv, n_max, wd);
    let mut partial = ExtReal::zero(wd);
    let mut ns = vec![];
    let mut vals = vec![];
    for (n, r) in rows.iter().enumerate() {
        if n >= n0 {
            partial = &partial + &(r * &w(n, wd));
        }
        if (n + 1) % step == 0 {
            ns.push(n + 1);
            vals.push(partial.clone());
        }
    }
    Ok(extrapolate_to_infinity(&ns, &vals).with_digits(digits))
}

fn rat_pow(x: &Rational, n: u32) -> Rational {
    use rug::ops::Pow;
    Rational::from(x.pow(n))
}

/// Exact `B_N(u) = Σ_{n=0}^N 1/(n+1) Σ_k C(n,k)(-1)^k (k+u)^N`.
pub fn bernoulli_poly_hasse(n_deg: u32, u: &Rational) -> Rational {
    let mut acc = Rational::new();
    for n in 0..=n_deg {
        let mut row = Rational::new();
        for k in 0..=n {
            let t = rat_pow(&Rational::from(u + k), n_deg);
            let c = binomial(n, k);
            if k % 2 == 0 {
                row += t * c;
            } else {
                row -= t * c;
            }
        }
        acc += row / Integer::from(n + 1);
    }
    acc
}

/// `B_N(u) = Σ_j C(N,j) B_j u^{N-j}` from the Bernoulli numbers; the oracle for
/// [`bernoulli_poly_hasse`].
pub fn bernoulli_poly(n_deg: u32, u: &Rational) -> Rational {
    let b = bernoulli_numbers(n_deg);
    (0..=n_deg)
        .map(|j| Rational::from(&b[j as usize] * binomial(n_deg, j)) * rat_pow(u, n_deg - j))
        .fold(Rational::new(), |a, t| a + t)
}

/// `Z(s,u) = Σ_n 1/(n+1) Σ_k C(n,k)(-1)^k (k+u)^s`.
pub fn zs_function(s: &Rational, u: &Rational, digits: u32) -> Result<ExtReal> {
    check_u(u)?;
    let r = hasse_sum(&IntegrandKind::powlog(0, Rational::from(-s)), u, &WeightKind::Hasse, digits + 2)?;
    Ok(r.value.with_digits(digits))
}

/// `-s ζ(1-s, u)`, the right-hand side partner of [`zs_function`]; `1` at `s = 0`.
pub fn zs_reflection(s: &Rational, u: &Rational, digits: u32) -> Result<ExtReal> {
    if s.cmp0() == std::cmp::Ordering::Equal {
        return Ok(ExtReal::one(digits));
    }
    let z = hurwitz_zeta(&Rational::from(1 - s.clone()), u, digits + 2)?;
    Ok((&(-&z) * &ExtReal::from_rational(s, digits + 2)).with_digits(digits))
}
