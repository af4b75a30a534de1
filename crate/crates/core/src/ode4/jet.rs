//! Truncated Taylor series with complex coefficients.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Highest supported truncation order.
pub const MAX_ORDER: usize = 6;

/// `Σ_{k ≤ order} c_k (t - t₀)^k`; `coeffs[k]` is the k-th Taylor coefficient
/// (the k-th derivative divided by k!).
#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    coeffs: Vec<Complex64>,
}

impl Jet {
    fn check(order: usize) -> Result<()> {
        if order > MAX_ORDER {
            Err(Error::JetOrder(order))
        } else {
            Ok(())
        }
    }

    pub fn constant(c: Complex64, order: usize) -> Result<Jet> {
        Jet::check(order)?;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
        coeffs[0] = c;
        Ok(Jet { coeffs })
    }

    /// The identity function expanded at `t0`.
    pub fn variable(t0: Complex64, order: usize) -> Result<Jet> {
        let mut j = Jet::constant(t0, order)?;
        if order >= 1 {
            j.coeffs[1] = Complex64::new(1.0, 0.0);
        }
        Ok(j)
    }

    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Result<Jet> {
        if coeffs.is_empty() {
            return Err(Error::Invalid("empty jet".into()));
        }
        Jet::check(coeffs.len() - 1)?;
        Ok(Jet { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Value at the base point.
    pub fn value(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// k-th derivative at the base point.
    pub fn derivative_value(&self, k: usize) -> Complex64 {
        let fact: f64 = (1..=k).map(|i| i as f64).product();
        self.coeffs.get(k).copied().unwrap_or_default() * fact
    }

    /// Derivative as a jet of one lower order.
    pub fn derivative(&self) -> Jet {
        if self.coeffs.len() == 1 {
            return Jet {
                coeffs: vec![Complex64::new(0.0, 0.0)],
            };
        }
        Jet {
            coeffs: (1..self.coeffs.len())
                .map(|k| self.coeffs[k] * k as f64)
                .collect(),
        }
    }

    fn zip_order(&self, other: &Jet) -> usize {
        self.order().min(other.order())
    }

    pub fn scale(&self, c: Complex64) -> Jet {
        Jet {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn exp(&self) -> Jet {
        let n = self.coeffs.len();
        let f = &self.coeffs;
        let mut g = vec![Complex64::new(0.0, 0.0); n];
        g[0] = f[0].exp();
        for k in 1..n {
            let mut s = Complex64::new(0.0, 0.0);
            for j in 1..=k {
                s += f[j] * g[k - j] * j as f64;
            }
            g[k] = s / k as f64;
        }
        Jet { coeffs: g }
    }

    /// `self^alpha` on the principal branch; the constant term must be nonzero.
    pub fn powf(&self, alpha: f64) -> Result<Jet> {
        let f = &self.coeffs;
        if f[0].norm() == 0.0 {
            return Err(Error::BranchPoint("zero constant term".into()));
        }
        let n = f.len();
        let mut g = vec![Complex64::new(0.0, 0.0); n];
        g[0] = f[0].powf(alpha);
        for k in 1..n {
            let mut s = Complex64::new(0.0, 0.0);
            for j in 1..=k {
                s += f[j] * g[k - j] * (alpha * j as f64 - (k - j) as f64);
            }
            g[k] = s / (f[0] * k as f64);
        }
        Ok(Jet { coeffs: g })
    }

    pub fn sqrt(&self) -> Result<Jet> {
        self.powf(0.5)
    }

    pub fn pow_3_2(&self) -> Result<Jet> {
        self.powf(1.5)
    }

    pub fn tanh(&self) -> Result<Jet> {
        let e2 = self.scale(Complex64::new(2.0, 0.0)).exp();
        let one = Jet::constant(Complex64::new(1.0, 0.0), self.order())?;
        &(&e2 - &one) / &(&e2 + &one)
    }

    pub fn recip(&self) -> Result<Jet> {
        let one = Jet::constant(Complex64::new(1.0, 0.0), self.order())?;
        &one / self
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, rhs: &Jet) -> Jet {
        let n = self.zip_order(rhs) + 1;
        Jet {
            coeffs: (0..n).map(|k| self.coeffs[k] + rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        let n = self.zip_order(rhs) + 1;
        Jet {
            coeffs: (0..n).map(|k| self.coeffs[k] - rhs.coeffs[k]).collect(),
        }
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        let n = self.zip_order(rhs) + 1;
        Jet {
            coeffs: (0..n)
                .map(|k| (0..=k).map(|j| self.coeffs[j] * rhs.coeffs[k - j]).sum())
                .collect(),
        }
    }
}

impl Div for &Jet {
    type Output = Result<Jet>;
    fn div(self, rhs: &Jet) -> Result<Jet> {
        if rhs.coeffs[0].norm() == 0.0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.zip_order(rhs) + 1;
        let mut h = vec![Complex64::new(0.0, 0.0); n];
        for k in 0..n {
            let mut s = self.coeffs[k];
            for j in 1..=k {
                s -= rhs.coeffs[j] * h[k - j];
            }
            h[k] = s / rhs.coeffs[0];
        }
        Ok(Jet { coeffs: h })
    }
}
