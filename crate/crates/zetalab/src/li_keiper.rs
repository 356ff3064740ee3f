//! Li/Keiper pipeline: `η_k` from the log-derivative of `(s-1)ζ(s)`, power sums
//! `σ_k` of reciprocal zeros, and the Li coefficients `λ_n`.
//!
//! Conventions. `d/ds log[(s-1)ζ(s)] = -Σ η_n (s-1)^n`, so `η_0 = -γ`.
//! `log ξ(s) = -log 2 - Σ σ_k s^k / k` about `s = 0`.

use crate::error::{Error, Result};
use crate::precision_core::{binomial, ln_pi, ExtReal, PowerSeries};
use crate::stieltjes::{digamma, stieltjes_batch};
use crate::zeta_suite::zeta;
use rug::Rational;

pub const MAX_DEPTH: usize = 30;
/// Working digits used whenever the depth exceeds 15.
pub const DEEP_DIGITS: u32 = 40;
const GUARD: u32 = 8;

#[derive(Clone, Debug)]
pub struct LiKeiperState {
    pub k: usize,
    /// `η_0..η_{K-1}`.
    pub eta: Vec<ExtReal>,
    /// `σ_1..σ_K`.
    pub sigma: Vec<ExtReal>,
    /// `λ_1..λ_K`.
    pub lam: Vec<ExtReal>,
    pub digits: u32,
}

/// Coefficients of `log ξ(s)` in powers of `s`: `c_0 = -log 2`, `c_k = -σ_k/k`.
#[derive(Clone, Debug)]
pub struct XiExpansion {
    pub coeffs: Vec<ExtReal>,
}

impl XiExpansion {
    pub fn from_sigma(sigma: &[ExtReal], digits: u32) -> Self {
        let mut coeffs = vec![-&ExtReal::ln2(digits)];
        coeffs.extend(sigma.iter().enumerate().map(|(i, s)| -&(s / (i as i64 + 1))));
        XiExpansion { coeffs }
    }

    /// Truncated `log ξ(s)`.
    pub fn eval(&self, s: &ExtReal) -> ExtReal {
        self.coeffs.iter().rev().fold(ExtReal::zero(s.digits()), |acc, c| &(&acc * s) + c)
    }
}

fn check_depth(k: usize) -> Result<()> {
    if k == 0 || k > MAX_DEPTH {
        return Err(Error::Domain(format!("depth {k} outside 1..={MAX_DEPTH}")));
    }
    Ok(())
}

fn working(k: usize, digits: u32) -> u32 {
    let d = if k > 15 { digits.max(DEEP_DIGITS) } else { digits };
    d + GUARD
}

fn eta_at(k: usize, w: u32) -> Result<Vec<ExtReal>> {
    let g = stieltjes_batch(k as u32, &Rational::from(1), w)?;
    // (s-1)ζ(s) = 1 + Σ_p (-1)^p γ_p ε^{p+1}/p!
    let mut c = vec![ExtReal::one(w)];
    let mut fact = ExtReal::one(w);
    for (p, gp) in g.iter().enumerate().take(k) {
        if p > 0 {
            fact = &fact * p as i64;
        }
        let t = gp / &fact;
        c.push(if p % 2 == 0 { t } else { -&t });
    }
    let l = PowerSeries::new(c).log()?;
    Ok((0..k).map(|n| -&(&l.c[n + 1] * (n as i64 + 1))).collect())
}

/// `η_0..η_{K-1}` by the series logarithm of `(s-1)ζ(s)`.
pub fn eta_coeffs(k: usize, digits: u32) -> Result<Vec<ExtReal>> {
    check_depth(k)?;
    Ok(eta_at(k, working(k, digits))?.into_iter().map(|e| e.with_digits(digits)).collect())
}

fn sigma_from_eta(eta: &[ExtReal], w: u32) -> Result<Vec<ExtReal>> {
    // σ_1 = d/ds log ξ at s = 1 = 1 - η_0 - ½ log π + ½ ψ(½)
    let psi = digamma(&Rational::from((1, 2)), w)?;
    let s1 = &(&(&ExtReal::one(w) - &eta[0]) - &(&ln_pi(w) / 2)) + &(&psi / 2);
    let mut out = vec![s1];
    for (n, e) in eta.iter().enumerate().skip(1) {
        // σ_{n+1} = (-1)^{n+1} η_n - (1 - 2^{-(n+1)}) ζ(n+1) + 1
        let m = n as u32 + 1;
        let z = zeta(&Rational::from(m), w)?;
        let f = &ExtReal::one(w) - &(&ExtReal::one(w) / &ExtReal::from_i64(2, w).powi(m as i32));
        let se = if m % 2 == 0 { e.clone() } else { -e };
        out.push(&(&se - &(&f * &z)) + 1);
    }
    Ok(out)
}

/// `σ_1..σ_K`.
pub fn sigma_coeffs(k: usize, digits: u32) -> Result<Vec<ExtReal>> {
    check_depth(k)?;
    let w = working(k, digits);
    let s = sigma_from_eta(&eta_at(k, w)?, w)?;
    Ok(s.into_iter().map(|e| e.with_digits(digits)).collect())
}

/// `λ_n = -Σ_{k=1}^n C(n,k)(-1)^k σ_k`.
pub fn lambda_from_sigma(n: usize, sigma: &[ExtReal]) -> ExtReal {
    let d = sigma[0].digits();
    let mut acc = ExtReal::zero(d);
    for k in 1..=n {
        let t = &sigma[k - 1] * &ExtReal::from_integer(&binomial(n as u32, k as u32), d);
        acc = if k % 2 == 0 { &acc - &t } else { &acc + &t };
    }
    acc
}

/// `λ_n = -Σ_{k≥1} C(k+n-1, k) σ_k`, truncated at the available depth.
pub fn lambda_dual(n: usize, sigma: &[ExtReal]) -> ExtReal {
    let d = sigma[0].digits();
    let mut acc = ExtReal::zero(d);
    for (i, s) in sigma.iter().enumerate() {
        let k = i as u32 + 1;
        acc = &acc - &(s * &ExtReal::from_integer(&binomial(k + n as u32 - 1, k), d));
    }
    acc
}

pub fn lambda(n: usize, digits: u32) -> Result<ExtReal> {
    Ok(lambda_list(n, digits)?.pop().expect("n ≥ 1"))
}

/// `λ_1..λ_M`.
pub fn lambda_list(m: usize, digits: u32) -> Result<Vec<ExtReal>> {
    Ok(LiKeiperState::build(m, digits)?.lam)
}

impl LiKeiperState {
    pub fn build(k: usize, digits: u32) -> Result<Self> {
        check_depth(k)?;
        let w = working(k, digits);
        let eta = eta_at(k, w)?;
        let sig = sigma_from_eta(&eta, w)?;
        let mut lam: Vec<ExtReal> = (1..=k).map(|n| lambda_from_sigma(n, &sig).with_digits(digits)).collect();
        // exact by construction
        lam[0] = sig[0].with_digits(digits);
        Ok(LiKeiperState {
            k,
            eta: eta.into_iter().map(|e| e.with_digits(digits)).collect(),
            sigma: sig.into_iter().map(|e| e.with_digits(digits)).collect(),
            lam,
            digits,
        })
    }

    pub fn xi_expansion(&self) -> XiExpansion {
        XiExpansion::from_sigma(&self.sigma, self.digits)
    }
}

/// `S₁(m) = Σ_{r=2}^m C(m,r)(-1)^r (1 - 2^{-r}) ζ(r)`.
pub fn s1_sum(m: usize, digits: u32) -> Result<ExtReal> {
    let w = digits + GUARD + m as u32 / 3;
    let mut acc = ExtReal::zero(w);
    for r in 2..=m as u32 {
        let f = &ExtReal::one(w) - &(&ExtReal::one(w) / &ExtReal::from_i64(2, w).powi(r as i32));
        let t = &(&f * &zeta(&Rational::from(r), w)?) * &ExtReal::from_integer(&binomial(m as u32, r), w);
        acc = if r % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    Ok(acc.with_digits(digits))
}

#[derive(Clone, Debug)]
pub struct LambdaSplit {
    /// `λ̄_m = 1 - (m/2)[log π + γ + 2 log 2] + S₁(m)`.
    pub trend: ExtReal,
    /// `λ̃_m = -Σ_{n=1}^m C(m,n) η_{n-1}`.
    pub oscillation: ExtReal,
}

pub fn lambda_split(m: usize, digits: u32) -> Result<LambdaSplit> {
    check_depth(m)?;
    let w = working(m, digits);
    let eta = eta_at(m, w)?;
    let gamma = -&eta[0];
    let br = &(&ln_pi(w) + &gamma) + &(&ExtReal::ln2(w) * 2);
    let half_m = ExtReal::from_rational(&Rational::from((m as i64, 2)), w);
    let trend = &(&ExtReal::one(w) - &(&br * &half_m)) + &s1_sum(m, w)?;
    let mut osc = ExtReal::zero(w);
    for n in 1..=m {
        osc = &osc - &(&eta[n - 1] * &ExtReal::from_integer(&binomial(m as u32, n as u32), w));
    }
    Ok(LambdaSplit { trend: trend.with_digits(digits), oscillation: osc.with_digits(digits) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision_core::bits_for;
    use rug::ops::Pow;
    use rug::Float;

    fn close(a: &ExtReal, b: &ExtReal, e: i64) -> bool {
        (a - b).below_pow10(e)
    }

    /// Taylor coefficients `c_0..c_{2M-1}` of `f` at `x0` from samples at
    /// `x0 ± jh`, `j = 1..M`, by an exact-degree polynomial fit.
    fn taylor_fd(f: &dyn Fn(&Float) -> Float, x0: &Float, h: &Float, m: usize, prec: u32) -> Vec<Float> {
        let n = 2 * m;
        let js: Vec<i64> = (1..=m as i64).flat_map(|j| [j, -j]).collect();
        let mut a: Vec<Vec<Float>> = Vec::new();
        for &j in &js {
            let x = Float::with_val(prec, x0 + Float::with_val(prec, h * j));
            let mut row: Vec<Float> = (0..n).map(|k| Float::with_val(prec, j).pow(k as u32) * h.clone().pow(k as u32)).collect();
            row.push(f(&x));
            a.push(row);
        }
        for c in 0..n {
            let piv = (c..n).max_by(|&p, &q| a[p][c].clone().abs().partial_cmp(&a[q][c].clone().abs()).unwrap()).unwrap();
            a.swap(c, piv);
            for r in 0..n {
                if r != c {
                    let fct = Float::with_val(prec, &a[r][c] / &a[c][c]);
                    for k in c..=n {
                        let t = Float::with_val(prec, &a[c][k] * &fct);
                        a[r][k] -= t;
                    }
                }
            }
        }
        (0..n).map(|c| Float::with_val(prec, &a[c][n] / &a[c][c])).collect()
    }

    fn log_xi(s: &Float) -> Float {
        let p = s.prec();
        let pi = Float::with_val(p, rug::float::Constant::Pi);
        let sm1 = Float::with_val(p, s - 1u32);
        let half = Float::with_val(p, s / 2u32);
        let v = Float::with_val(p, s * &sm1) / 2u32 * pi.pow(-half.clone()) * half.gamma() * s.clone().zeta();
        v.ln()
    }

    #[test]
    fn sigma_one_closed_form() {
        let d = 30;
        let s = sigma_coeffs(2, d).unwrap();
        let g = crate::stieltjes::euler_gamma(d).unwrap();
        let want = &(&(&(&g / 2) + 1) - &ExtReal::ln2(d)) - &(&ln_pi(d) / 2);
        assert!(close(&s[0], &want, -27));
        assert!((s[0].to_f64() * 1000.0).round() == 23.0);
    }

    #[test]
    fn sigma_two_closed_form() {
        let d = 30;
        let s = sigma_coeffs(2, d).unwrap();
        let g = crate::stieltjes::euler_gamma(d).unwrap();
        let g1 = crate::stieltjes::stieltjes_hasse(1, &Rational::from(1), d).unwrap().value;
        let z2 = zeta(&Rational::from(2), d).unwrap();
        let want = &(&(&(&(-&(&z2 * 3)) / 4) + 1) + &(&g1 * 2)) + &(&g * &g);
        assert!(close(&s[1], &want, -27));
    }

    #[test]
    fn eta_values() {
        let d = 30;
        let e = eta_coeffs(3, d).unwrap();
        assert_eq!(e.len(), 3);
        assert!(close(&e[0], &-&crate::stieltjes::euler_gamma(d).unwrap(), -28));
        assert_eq!(eta_coeffs(1, d).unwrap().len(), 1);
        // finite-difference oracle on log[(s-1)ζ(s)], truncation O(h^{2M})
        let prec = bits_for(160);
        let f = |s: &Float| {
            let sm1 = Float::with_val(prec, s - 1u32);
            (sm1 * s.clone().zeta()).ln()
        };
        let c = taylor_fd(&f, &Float::with_val(prec, 1), &Float::with_val(prec, 1e-6), 8, prec);
        let eta1 = -&ExtReal::from_float(&c[2], 30) * 2;
        assert!(close(&e[1], &eta1, -25), "{} vs {}", e[1], eta1);
    }

    #[test]
    fn lambda_small_values() {
        let st = LiKeiperState::build(12, 30).unwrap();
        assert_eq!(st.lam[0], st.sigma[0]);
        let l2 = &(&st.sigma[0] * 2) - &st.sigma[1];
        assert!(close(&st.lam[1], &l2, -27));
        for (i, l) in st.lam.iter().enumerate() {
            assert!(l.is_positive(), "λ_{} = {l}", i + 1);
        }
    }

    #[test]
    fn lambda_three_dual_routes() {
        // Li: λ_n = 1/(n-1)! d^n/ds^n [s^{n-1} log ξ(s)] at s = 1
        let d = 25;
        let st = LiKeiperState::build(3, d).unwrap();
        let prec = bits_for(160);
        let c = taylor_fd(&log_xi, &Float::with_val(prec, 1), &Float::with_val(prec, 1e-5), 8, prec);
        // s^2 = 1 + 2ε + ε²; coefficient of ε³ in s² log ξ, times 3!/2!
        let c3 = Float::with_val(prec, &c[3] + Float::with_val(prec, &c[2] * 2u32)) + &c[1];
        let fd = ExtReal::from_float(&(c3 * 3u32), d);
        assert!(close(&st.lam[2], &fd, -20), "{} vs {}", st.lam[2], fd);
        let deep = sigma_coeffs(30, d).unwrap();
        assert!(close(&lambda_dual(3, &deep), &st.lam[2], -20));
    }

    #[test]
    fn xi_expansion_matches_direct() {
        let st = LiKeiperState::build(30, 30).unwrap();
        let xi = st.xi_expansion();
        assert!(close(&xi.coeffs[0], &-&ExtReal::ln2(30), -29));
        let s = Float::with_val(bits_for(60), 0.5);
        let direct = ExtReal::from_float(&log_xi(&s), 30);
        assert!(close(&xi.eval(&ExtReal::from_f64(0.5, 30)), &direct, -25));
    }

    #[test]
    fn partial_sums() {
        let st = LiKeiperState::build(25, 40).unwrap();
        let s = &st.sigma;
        let a: ExtReal = s.iter().take(20).enumerate().map(|(i, x)| x / (i as i64 + 1)).sum();
        let b: ExtReal = s.iter().take(20).cloned().sum();
        assert!(a.below_pow10(-10));
        assert!((&b + &s[0]).below_pow10(-10));
        let w1: ExtReal = s.iter().enumerate().map(|(i, x)| x * (i as i64 + 1)).sum();
        assert!(close(&w1, &(&s[1] - &s[0]), -20));
        let w2: ExtReal = s.iter().enumerate().map(|(i, x)| x * ((i as i64 + 1) * (i as i64 + 1))).sum();
        let want = &(&(&s[1] * 3) - &(&s[2] * 2)) - &s[0];
        assert!(close(&w2, &want, -20));
    }

    #[test]
    fn split_and_bracket() {
        let d = 30;
        assert!(s1_sum(1, d).unwrap().is_zero());
        let st = LiKeiperState::build(10, d).unwrap();
        for m in [1usize, 2, 5, 10] {
            let sp = lambda_split(m, d).unwrap();
            assert!(close(&(&sp.trend + &sp.oscillation), &st.lam[m - 1], -(d as i64) + 8), "m={m}");
        }
        let m = 10.0f64;
        let s1 = s1_sum(10, d).unwrap().to_f64();
        let g = 0.5772156649015329;
        let base = m / 2.0 * m.ln();
        assert!(base + (g - 1.0) * m / 2.0 + 0.5 <= s1 && s1 <= base + (g + 1.0) * m / 2.0 - 0.5, "{s1}");
    }

    #[test]
    fn depth_limits() {
        assert!(eta_coeffs(0, 20).is_err());
        assert!(sigma_coeffs(31, 20).is_err());
    }
}
