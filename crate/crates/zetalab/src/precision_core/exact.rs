use crate::error::{Error, Result};
use rug::{Integer, Rational};
use std::sync::{OnceLock, RwLock};

/// Exact `C(n, k)`; zero for `k > n`.
pub fn binomial(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::new();
    }
    Integer::from(Integer::binomial_u(n, k))
}

pub fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

/// Signed Stirling numbers of the first kind `s(n, 0..=n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingRow {
    pub n: u32,
    pub coeffs: Vec<Integer>,
}

impl StirlingRow {
    /// `s(n, k)`, zero outside `0..=n`.
    pub fn get(&self, k: usize) -> Integer {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }
}

fn stirling_cache() -> &'static RwLock<Vec<Vec<Integer>>> {
    static CACHE: OnceLock<RwLock<Vec<Vec<Integer>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![vec![Integer::from(1)]]))
}

/// Row `n` via `s(n+1, p+1) = s(n, p) - n s(n, p+1)`.
pub fn stirling1_row(n: u32) -> StirlingRow {
    let n_us = n as usize;
    {
        let rows = stirling_cache().read().expect("stirling cache poisoned");
        if let Some(r) = rows.get(n_us) {
            return StirlingRow { n, coeffs: r.clone() };
        }
    }
    let mut rows = stirling_cache().write().expect("stirling cache poisoned");
    while rows.len() <= n_us {
        let m = rows.len() - 1;
        let prev = &rows[m];
        let mut next = vec![Integer::new(); m + 2];
        for p in 0..=m {
            // s(m+1, p+1) = s(m, p) - m s(m, p+1)
            let mut v = prev[p].clone();
            if p + 1 <= m {
                v -= Integer::from(&prev[p + 1] * m as u64);
            }
            next[p + 1] = v;
        }
        rows.push(next);
    }
    StirlingRow { n, coeffs: rows[n_us].clone() }
}

fn bernoulli_cache() -> &'static RwLock<Vec<Rational>> {
    static CACHE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![Rational::from(1)]))
}

/// Exact `B_0..=B_N` with `B_1 = -1/2`, from `Σ_{j≤m} C(m+1, j) B_j = 0`.
pub fn bernoulli_numbers(n: u32) -> Vec<Rational> {
    let want = n as usize + 1;
    {
        let b = bernoulli_cache().read().expect("bernoulli cache poisoned");
        if b.len() >= want {
            return b[..want].to_vec();
        }
    }
    let mut b = bernoulli_cache().write().expect("bernoulli cache poisoned");
    while b.len() < want {
        let m = b.len() as u32;
        if m > 1 && m % 2 == 1 {
            b.push(Rational::new());
            continue;
        }
        let mut acc = Rational::new();
        for (j, bj) in b.iter().enumerate() {
            if bj.cmp0() != std::cmp::Ordering::Equal {
                acc += Rational::from(bj * binomial(m + 1, j as u32));
            }
        }
        b.push(-acc / Integer::from(m + 1));
    }
    b[..want].to_vec()
}

pub fn bernoulli_number(n: u32) -> Rational {
    bernoulli_numbers(n).pop().expect("non-empty")
}

/// Parses `a`, `a/b`, or a decimal with optional exponent into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Domain(format!("cannot parse number '{s}'"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((a, b)) = s.split_once('/') {
        let num = parse_rational(a)?;
        let den = parse_rational(b)?;
        if den.cmp0() == std::cmp::Ordering::Equal {
            return Err(Error::Domain(format!("zero denominator in '{s}'")));
        }
        return Ok(num / den);
    }
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, body) = match mant.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let num = Integer::from_str_radix(if digits.is_empty() { "0" } else { &digits }, 10)
        .map_err(|_| bad())?;
    let scale = exp - frac_part.len() as i32;
    let mut q = Rational::from(num);
    let pow10 = Integer::from(Integer::u_pow_u(10, scale.unsigned_abs()));
    if scale >= 0 {
        q *= pow10;
    } else {
        q /= pow10;
    }
    Ok(if neg { -q } else { q })
}
