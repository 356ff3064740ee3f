use super::ExtReal;
use crate::error::{Error, Result};

/// Truncated power series `Σ c_i ε^i`, `i < len`.
#[derive(Clone, Debug)]
pub struct PowerSeries {
    pub c: Vec<ExtReal>,
}

impl PowerSeries {
    pub fn new(c: Vec<ExtReal>) -> Self {
        assert!(!c.is_empty(), "power series needs at least one coefficient");
        PowerSeries { c }
    }

    pub fn constant(x: ExtReal, len: usize) -> Self {
        let d = x.digits();
        let mut c = vec![ExtReal::zero(d); len.max(1)];
        c[0] = x;
        PowerSeries { c }
    }

    /// `a + b ε`.
    pub fn linear(a: ExtReal, b: ExtReal, len: usize) -> Self {
        let mut s = Self::constant(a, len);
        if len > 1 {
            s.c[1] = b;
        }
        s
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coeff(&self, i: usize) -> &ExtReal {
        &self.c[i]
    }

    pub fn add(&self, o: &PowerSeries) -> PowerSeries {
        let n = self.len().min(o.len());
        PowerSeries { c: (0..n).map(|i| &self.c[i] + &o.c[i]).collect() }
    }

    pub fn sub(&self, o: &PowerSeries) -> PowerSeries {
        let n = self.len().min(o.len());
        PowerSeries { c: (0..n).map(|i| &self.c[i] - &o.c[i]).collect() }
    }

    pub fn scale(&self, x: &ExtReal) -> PowerSeries {
        PowerSeries { c: self.c.iter().map(|a| a * x).collect() }
    }

    pub fn mul(&self, o: &PowerSeries) -> PowerSeries {
        let n = self.len().min(o.len());
        let d = self.c[0].digits().min(o.c[0].digits());
        let mut c = vec![ExtReal::zero(d); n];
        for (i, a) in self.c.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate().take(n - i) {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        PowerSeries { c }
    }

    pub fn recip(&self) -> Result<PowerSeries> {
        let c0 = &self.c[0];
        let inv0 = c0.recip()?;
        let mut b: Vec<ExtReal> = Vec::with_capacity(self.len());
        b.push(inv0.clone());
        for n in 1..self.len() {
            let mut acc = ExtReal::zero(c0.digits());
            for j in 1..=n {
                acc = &acc + &(&self.c[j] * &b[n - j]);
            }
            b.push(-(&acc * &inv0));
        }
        Ok(PowerSeries { c: b })
    }

    /// Logarithm for positive constant term, via `n l_n = n g_n - Σ_{j<n} j l_j g_{n-j}`
    /// on the normalized series `g = f / c_0`.
    pub fn log(&self) -> Result<PowerSeries> {
        let c0 = &self.c[0];
        if !c0.is_positive() {
            return Err(Error::Domain("series log needs a positive constant term".into()));
        }
        let g: Vec<ExtReal> = self.c.iter().map(|a| a / c0).collect();
        let mut l = vec![c0.ln()?];
        for n in 1..self.len() {
            let mut acc = &g[n] * n as i64;
            for j in 1..n {
                acc = &acc - &(&(&l[j] * j as i64) * &g[n - j]);
            }
            l.push(acc / n as i64);
        }
        Ok(PowerSeries { c: l })
    }

    /// Formal derivative, one coefficient shorter.
    pub fn derivative(&self) -> PowerSeries {
        if self.len() == 1 {
            return PowerSeries::constant(ExtReal::zero(self.c[0].digits()), 1);
        }
        PowerSeries { c: (1..self.len()).map(|i| &self.c[i] * i as i64).collect() }
    }

    pub fn eval(&self, x: &ExtReal) -> ExtReal {
        let mut acc = self.c[self.len() - 1].clone();
        for a in self.c.iter().rev().skip(1) {
            acc = &(&acc * x) + a;
        }
        acc
    }
}
