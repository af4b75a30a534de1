//! Numeric check of the hyperbolic-tangent reparametrization that brings
//! `u'''' + c₂u'' + c₀u = 0` to Laguerre–Forsyth form.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::jet::{Jet, MAX_ORDER};
use crate::error::{Error, Result};

/// Residuals at one sample point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LfSample {
    pub t: f64,
    pub p3: f64,
    pub p2: f64,
    pub p1: f64,
    /// `|p̃₀ - q₀(λ(t))|`.
    pub p0: f64,
}

/// Maximum residuals over all sample points.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LfResidual {
    pub samples: Vec<LfSample>,
    pub max_p3: f64,
    pub max_p2: f64,
    pub max_p1: f64,
    pub max_p0: f64,
}

impl LfResidual {
    pub fn max(&self) -> f64 {
        self.max_p3.max(self.max_p2).max(self.max_p1).max(self.max_p0)
    }
}

fn cx(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `q₀(T) = -1600(9c₂² - 100c₀)/(T² + 40c₂)⁴`.
fn q0_value(c2: Complex64, c0: Complex64, big_t: Complex64) -> Complex64 {
    let num = (c2 * c2 * 9.0 - c0 * 100.0) * -1600.0;
    num / (big_t * big_t + c2 * 40.0).powi(4)
}

/// Transformed coefficients `p̃ⱼ∘λ` at one point, from jets of `λ` and `μ`.
fn transformed_at(c2: Complex64, c0: Complex64, lambda: &Jet, mu: &Jet) -> Result<[Complex64; 4]> {
    let lp = lambda.derivative();
    let v = mu.recip()?;
    // a[k][j]: coefficient of ũ^{(j)}∘λ in u^{(k)}, each a jet that loses one
    // order per differentiation.
    let mut a: Vec<Vec<Jet>> = vec![vec![v]];
    for k in 0..4 {
        let prev = &a[k];
        let mut next = Vec::with_capacity(k + 2);
        for j in 0..=k + 1 {
            let from_d = if j <= k { Some(prev[j].derivative()) } else { None };
            let from_l = if j >= 1 { Some(&lp * &prev[j - 1]) } else { None };
            next.push(match (from_d, from_l) {
                (Some(x), Some(y)) => &x + &y,
                (Some(x), None) => x,
                (None, Some(y)) => y,
                (None, None) => unreachable!(),
            });
        }
        a.push(next);
    }
    let p = [c0, cx(0.0), c2, cx(0.0)];
    let lead = a[4][4].value();
    let mut out = [cx(0.0); 4];
    for (j, slot) in out.iter_mut().enumerate() {
        let mut acc = a[4][j].value();
        for k in j..4 {
            acc += p[k] * a[k][j].value();
        }
        *slot = acc / lead;
    }
    Ok(out)
}

/// Transforms `u'''' + c₂u'' + c₀u = 0` by
/// `λ = -2√(-10c₂)·tanh(t√(-c₂/10))`, `μ = (λ')^{3/2}` using order-6 jets and
/// reports how far the result is from `u'''' + q₀u = 0`.
///
/// `flip_branch` negates both square roots and `μ`, which must not change the
/// outcome.
pub fn numeric_lf_reduce(
    c2: Complex64,
    c0: Complex64,
    sample_ts: &[f64],
    flip_branch: bool,
) -> Result<LfResidual> {
    if c2.norm() == 0.0 {
        return Err(Error::AlreadyLaguerreForsyth);
    }
    let sign = if flip_branch { -1.0 } else { 1.0 };
    let s_outer = (-c2 * 10.0).sqrt() * sign;
    let s_inner = (-c2 / 10.0).sqrt() * sign;
    let mut samples = Vec::with_capacity(sample_ts.len());
    for &t0 in sample_ts {
        let t = Jet::variable(cx(t0), MAX_ORDER)?;
        let lambda = t.scale(s_inner).tanh()?.scale(s_outer * -2.0);
        let lp = lambda.derivative();
        if lp.value().norm() < 1e-300 {
            return Err(Error::BranchPoint(format!("λ' vanishes at t = {t0}")));
        }
        let mu = lp.pow_3_2()?.scale(cx(sign));
        let p = transformed_at(c2, c0, &lambda, &mu)?;
        let q0 = q0_value(c2, c0, lambda.value());
        samples.push(LfSample {
            t: t0,
            p3: p[3].norm(),
            p2: p[2].norm(),
            p1: p[1].norm(),
            p0: (p[0] - q0).norm(),
        });
    }
    let max = |f: fn(&LfSample) -> f64| samples.iter().map(f).fold(0.0, f64::max);
    Ok(LfResidual {
        max_p3: max(|s| s.p3),
        max_p2: max(|s| s.p2),
        max_p1: max(|s| s.p1),
        max_p0: max(|s| s.p0),
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_example() {
        let r = numeric_lf_reduce(cx(-5.0), cx(4.0), &[0.1, 0.3, 0.7], false).unwrap();
        assert!(r.max() < 1e-9, "{r:?}");
    }

    #[test]
    fn branch_independent() {
        let a = numeric_lf_reduce(cx(-5.0), cx(4.0), &[0.3], false).unwrap();
        let b = numeric_lf_reduce(cx(-5.0), cx(4.0), &[0.3], true).unwrap();
        assert!(a.max() < 1e-9 && b.max() < 1e-9);
    }

    #[test]
    fn zero_c2_is_rejected() {
        assert_eq!(
            numeric_lf_reduce(cx(0.0), cx(-1.0), &[0.1], false),
            Err(Error::AlreadyLaguerreForsyth)
        );
    }
}
