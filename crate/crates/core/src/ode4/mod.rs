//! Linear fourth-order ODEs `u'''' + p₃u''' + p₂u'' + p₁u' + p₀u = 0` under
//! point transformations `(t, u) ↦ (λ(t), μ(t)u)`: the Laguerre–Forsyth
//! class, the relative invariants `q₀` and `𝓡 = 8q₀q₀'' - 9q₀'²`, and the
//! absolute invariant built from them.

mod jet;
mod lf;

use serde::{Deserialize, Serialize};

pub use jet::{Jet, MAX_ORDER};
pub use lf::{numeric_lf_reduce, LfResidual, LfSample};

use crate::error::{Error, Result};
use crate::exact::{serial, RatFunc, Var};

/// Coefficients `[p₀, p₁, p₂, p₃]` of a monic fourth-order linear ODE in `t`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Ode4 {
    #[serde(with = "serial::array_string")]
    pub p: [RatFunc; 4],
}

impl Ode4 {
    pub fn new(p0: RatFunc, p1: RatFunc, p2: RatFunc, p3: RatFunc) -> Ode4 {
        Ode4 {
            p: [p0, p1, p2, p3],
        }
    }

    /// `u'''' + q₀u = 0`.
    pub fn laguerre_forsyth(q0: RatFunc) -> Ode4 {
        Ode4::new(q0, RatFunc::zero(), RatFunc::zero(), RatFunc::zero())
    }

    /// `u'''' + c₂u'' + c₀u = 0`.
    pub fn constant(c2: RatFunc, c0: RatFunc) -> Ode4 {
        Ode4::new(c0, RatFunc::zero(), c2, RatFunc::zero())
    }

    /// `p₃ = p₂ = 0`.
    pub fn is_lf(&self) -> bool {
        self.p[3].is_zero() && self.p[2].is_zero()
    }

    /// Laguerre–Forsyth form with vanishing `q₁`, i.e. `u'''' + q₀u = 0`.
    pub fn is_legendrian_lf(&self) -> bool {
        self.is_lf() && self.p[1].is_zero()
    }

    /// The weight-3 Wilczynski invariant, normalized to equal `q₁` on
    /// Laguerre–Forsyth form.
    pub fn theta3(&self) -> RatFunc {
        let t = Var::t();
        let p = self.semi_canonical();
        &p[1] - &p[2].derivative(t)
    }

    /// True when the weight-3 invariant vanishes identically.
    pub fn is_legendrian_class(&self) -> bool {
        self.theta3().is_zero()
    }

    /// Coefficients after `u = m·v` with `m'/m = -p₃/4`, which removes the
    /// third-derivative term. Returned as `[P₀, P₁, P₂, 0]`.
    pub fn semi_canonical(&self) -> [RatFunc; 4] {
        let t = Var::t();
        let w = self.p[3].scale(&crate::exact::rat(-1, 4));
        // g[k] = m^{(k)} / m
        let mut g = vec![RatFunc::one()];
        for k in 0..4 {
            let next = &g[k].derivative(t) + &(&w * &g[k]);
            g.push(next);
        }
        let coeff = |k: usize| -> RatFunc {
            if k == 4 {
                RatFunc::one()
            } else {
                self.p[k].clone()
            }
        };
        let mut out: [RatFunc; 4] = Default::default();
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = RatFunc::zero();
            for k in i..=4 {
                let pk = coeff(k);
                if pk.is_zero() {
                    continue;
                }
                let binom = binomial(k, i) as i64;
                acc = &acc + &(&pk * &g[k - i]).scale(&crate::exact::int(binom));
            }
            *slot = acc;
        }
        out
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Invariants of `u'''' + q₀u = 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    #[serde(with = "serial::as_string")]
    pub q0: RatFunc,
    /// `8q₀q₀'' - 9q₀'²`.
    #[serde(rename = "R", with = "serial::as_string")]
    pub r: RatFunc,
    /// `𝓡² / (4096 q₀⁵)`, absent when `q₀ = 0`.
    #[serde(rename = "I_lit", with = "serial::opt_string")]
    pub i_lit: Option<RatFunc>,
    /// Classification convention, `-I_lit`; absent when `q₀ = 0`.
    #[serde(rename = "I_cls", with = "serial::opt_string")]
    pub i_cls: Option<RatFunc>,
    /// `q₀ = 0`: the curve is a rational normal curve.
    pub rational_normal: bool,
    /// Whether `I_lit` is independent of `t` (reported only).
    pub i_lit_constant: Option<bool>,
}

/// `𝓡 = 8q₀q₀'' - 9(q₀')²`.
pub fn weight_ten_invariant(q0: &RatFunc) -> RatFunc {
    let t = Var::t();
    let d1 = q0.derivative(t);
    let d2 = d1.derivative(t);
    &(q0 * &d2).scale(&crate::exact::int(8)) - &(&d1 * &d1).scale(&crate::exact::int(9))
}

pub fn legendrian_invariants(q0: &RatFunc) -> InvariantReport {
    let r = weight_ten_invariant(q0);
    if q0.is_zero() {
        return InvariantReport {
            q0: q0.clone(),
            r,
            i_lit: None,
            i_cls: None,
            rational_normal: true,
            i_lit_constant: None,
        };
    }
    let denom = q0.pow(5).scale(&crate::exact::int(4096));
    let i_lit = (&r * &r).div(&denom).expect("q0 is nonzero");
    let constant = i_lit.derivative(Var::t()).is_zero();
    InvariantReport {
        q0: q0.clone(),
        r,
        i_cls: Some(-&i_lit),
        i_lit: Some(i_lit),
        rational_normal: false,
        i_lit_constant: Some(constant),
    }
}

/// `9c₂² - 100c₀`.
pub fn q0_discriminant(c2: &RatFunc, c0: &RatFunc) -> RatFunc {
    &(c2 * c2).scale(&crate::exact::int(9)) - &c0.scale(&crate::exact::int(100))
}

/// `(q₀ = 0, I_cls)` for `f_A(s) = s⁴ + c₂s² + c₀`, with
/// `I_cls = c₂² / (9c₂² - 100c₀)`.
pub fn class_invariant_from_charpoly(c2: &RatFunc, c0: &RatFunc) -> (bool, Option<RatFunc>) {
    let disc = q0_discriminant(c2, c0);
    if disc.is_zero() {
        (true, None)
    } else {
        (false, Some((c2 * c2).div(&disc).expect("nonzero")))
    }
}

/// Laguerre–Forsyth potential of `u'''' + c₂u'' + c₀u = 0`:
/// `q₀ = -1600(9c₂² - 100c₀) / (t² + 40c₂)⁴`.
pub fn q0_family(c2: &RatFunc, c0: &RatFunc) -> RatFunc {
    let t = RatFunc::t();
    let base = &(&t * &t) + &c2.scale(&crate::exact::int(40));
    q0_discriminant(c2, c0)
        .scale(&crate::exact::int(-1600))
        .div(&base.pow(4))
        .expect("nonzero denominator")
}

/// Möbius map `t ↦ (at + b)/(ct + d)` with coefficients free of `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mobius {
    pub a: RatFunc,
    pub b: RatFunc,
    pub c: RatFunc,
    pub d: RatFunc,
}

impl Mobius {
    pub fn new(a: RatFunc, b: RatFunc, c: RatFunc, d: RatFunc) -> Result<Mobius> {
        let t = Var::t();
        if [&a, &b, &c, &d].iter().any(|x| x.contains(t)) {
            return Err(Error::Invalid("Möbius coefficients must not involve t".into()));
        }
        let m = Mobius { a, b, c, d };
        if m.det().is_zero() {
            return Err(Error::SingularMobius);
        }
        Ok(m)
    }

    /// Reads `a, b, c, d` off a rational function of degree at most one in `t`.
    pub fn from_ratfunc(lambda: &RatFunc) -> Result<Mobius> {
        let t = Var::t();
        let num = lambda.num().coeffs_in(t);
        let den = lambda.den().coeffs_in(t);
        if num.len() > 2 || den.len() > 2 {
            return Err(Error::DegenerateTransformation(
                "λ must be a Möbius map (at+b)/(ct+d)".into(),
            ));
        }
        let get = |v: &Vec<crate::exact::MPoly>, k: usize| {
            v.get(k)
                .cloned()
                .map(RatFunc::from_poly)
                .unwrap_or_else(RatFunc::zero)
        };
        Mobius::new(get(&num, 1), get(&num, 0), get(&den, 1), get(&den, 0)).map_err(|e| match e {
            Error::SingularMobius => {
                Error::DegenerateTransformation("λ is constant".into())
            }
            other => other,
        })
    }

    pub fn det(&self) -> RatFunc {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn as_ratfunc(&self) -> RatFunc {
        let t = RatFunc::t();
        (&(&self.a * &t) + &self.b)
            .div(&(&(&self.c * &t) + &self.d))
            .expect("nonsingular map has nonzero denominator")
    }

    /// `λ' = (ad - bc)/(ct + d)²`.
    pub fn derivative(&self) -> RatFunc {
        self.as_ratfunc().derivative(Var::t())
    }

    pub fn inverse(&self) -> Mobius {
        Mobius {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Mobius) -> Mobius {
        Mobius {
            a: &(&self.a * &other.a) + &(&self.b * &other.c),
            b: &(&self.a * &other.b) + &(&self.b * &other.d),
            c: &(&self.c * &other.a) + &(&self.d * &other.c),
            d: &(&self.c * &other.b) + &(&self.d * &other.d),
        }
    }

    /// `f ∘ λ⁻¹`: rewrites a function of `t` in terms of the new parameter.
    pub fn push_forward(&self, f: &RatFunc) -> Result<RatFunc> {
        f.substitute(Var::t(), &self.inverse().as_ratfunc())
    }

    /// `f ∘ λ`.
    pub fn pull_back(&self, f: &RatFunc) -> Result<RatFunc> {
        f.substitute(Var::t(), &self.as_ratfunc())
    }
}

/// `q̃₀` with `q̃₀∘λ = q₀/(λ')⁴` for the Möbius map `λ`.
pub fn mobius_transform_q0(q0: &RatFunc, m: &Mobius) -> Result<RatFunc> {
    let lp = m.derivative();
    let pulled = q0.div(&lp.pow(4))?;
    m.push_forward(&pulled)
}

/// Transformed coefficients composed with `λ`: entry `j` is `p̃ⱼ∘λ` as a
/// function of the old parameter `t`, for `ũ(λ(t)) = μ(t)u(t)`.
///
/// Works for any rational `λ` since no inversion is needed.
pub fn transform_coefficients_along(
    e: &Ode4,
    lambda: &RatFunc,
    mu: &RatFunc,
) -> Result<[RatFunc; 4]> {
    let t = Var::t();
    let lp = lambda.derivative(t);
    if lp.is_zero() {
        return Err(Error::DegenerateTransformation("λ' vanishes identically".into()));
    }
    if mu.is_zero() {
        return Err(Error::DegenerateTransformation("μ vanishes identically".into()));
    }
    let v = mu.inv()?;
    // u^{(k)} = Σ_j a[k][j] · ũ^{(j)}(λ(t)),  a[k+1][j] = a[k][j]' + λ' a[k][j-1]
    let mut a: Vec<Vec<RatFunc>> = vec![vec![v.clone()]];
    for k in 0..4 {
        let prev = &a[k];
        let mut next = vec![RatFunc::zero(); k + 2];
        for (j, slot) in next.iter_mut().enumerate() {
            let mut x = if j <= k {
                prev[j].derivative(t)
            } else {
                RatFunc::zero()
            };
            if j >= 1 {
                x = &x + &(&lp * &prev[j - 1]);
            }
            *slot = x;
        }
        a.push(next);
    }
    let lead = &a[4][4];
    let mut out: [RatFunc; 4] = Default::default();
    for (j, slot) in out.iter_mut().enumerate() {
        let mut acc = a[4][j].clone();
        for k in j..4 {
            if !e.p[k].is_zero() {
                acc = &acc + &(&e.p[k] * &a[k][j]);
            }
        }
        *slot = acc.div(lead)?;
    }
    Ok(out)
}

/// Applies `(t, u) ↦ (λ(t), μ(t)u)` with `λ` a Möbius map, so the result is
/// again rational in the new parameter (also named `t`).
pub fn general_transform_ode(e: &Ode4, lambda: &RatFunc, mu: &RatFunc) -> Result<Ode4> {
    let m = Mobius::from_ratfunc(lambda)?;
    let along = transform_coefficients_along(e, lambda, mu)?;
    let mut p: [RatFunc; 4] = Default::default();
    for (slot, c) in p.iter_mut().zip(along.iter()) {
        *slot = m.push_forward(c)?;
    }
    Ok(Ode4 { p })
}

/// Outcome of the symbolic weight-10 check on jet coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightCheck {
    pub first_derivative: bool,
    pub second_derivative: bool,
    pub weight_ten: bool,
}

impl WeightCheck {
    pub fn all(&self) -> bool {
        self.first_derivative && self.second_derivative && self.weight_ten
    }
}

/// Verifies `𝓡̃ = (ct+d)²⁰/(ad-bc)¹⁰ · 𝓡` for symbolic `a, b, c, d` by treating
/// `q₀, q₀', q₀'', q₀'''` as independent jet coordinates and differentiating
/// with the total derivative.
pub fn weight_ten_identity() -> Result<WeightCheck> {
    let t = Var::t();
    let q: Vec<Var> = (0..4).map(|i| Var::new(&format!("q{i}"))).collect();
    let total = |f: &RatFunc| -> RatFunc {
        let mut acc = f.derivative(t);
        for k in 0..3 {
            acc = &acc + &(&RatFunc::var(q[k + 1]) * &f.derivative(q[k]));
        }
        acc
    };
    let (a, b, c, d) = (
        RatFunc::named("a"),
        RatFunc::named("b"),
        RatFunc::named("c"),
        RatFunc::named("d"),
    );
    let m = Mobius::new(a.clone(), b.clone(), c.clone(), d.clone())?;
    let lp = m.derivative();
    let q0 = RatFunc::var(q[0]);
    let q1 = RatFunc::var(q[1]);
    let q2 = RatFunc::var(q[2]);
    let big_q0 = q0.div(&lp.pow(4))?;
    let big_q1 = total(&big_q0).div(&lp)?;
    let big_q2 = total(&big_q1).div(&lp)?;

    let ctd = &(&c * &RatFunc::t()) + &d;
    let det = m.det();
    let n = |k: i64| RatFunc::from_int(k);
    let want1 = (&ctd.pow(9) * &(&(&ctd * &q1) + &(&(&n(8) * &q0) * &c))).div(&det.pow(5))?;
    let inner2 = &(&(&ctd.pow(2) * &q2) + &(&(&n(18) * &c) * &(&ctd * &q1)))
        + &(&(&n(72) * &q0) * &c.pow(2));
    let want2 = (&ctd.pow(10) * &inner2).div(&det.pow(6))?;
    let r_old = &(&n(8) * &(&q0 * &q2)) - &(&n(9) * &q1.pow(2));
    let r_new = &(&n(8) * &(&big_q0 * &big_q2)) - &(&n(9) * &big_q1.pow(2));
    let want_r = (&ctd.pow(20) * &r_old).div(&det.pow(10))?;
    Ok(WeightCheck {
        first_derivative: big_q1 == want1,
        second_derivative: big_q2 == want2,
        weight_ten: r_new == want_r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rf;

    #[test]
    fn invariants_of_constant_and_zero() {
        let rep = legendrian_invariants(&rf("k"));
        assert!(rep.r.is_zero());
        assert_eq!(rep.i_lit, Some(RatFunc::zero()));
        let rep = legendrian_invariants(&RatFunc::zero());
        assert!(rep.rational_normal);
        assert!(rep.i_lit.is_none() && rep.i_cls.is_none());
    }

    #[test]
    fn invariant_of_sample_family_member() {
        let rep = legendrian_invariants(&rf("280000/(t^2-200)^4"));
        assert_eq!(rep.i_lit, Some(rf("1/7")));
        assert_eq!(rep.i_cls, Some(rf("-1/7")));
        assert_eq!(rep.i_lit_constant, Some(true));
    }

    #[test]
    fn charpoly_invariant_examples() {
        assert_eq!(class_invariant_from_charpoly(&rf("-10"), &rf("9")), (true, None));
        assert_eq!(
            class_invariant_from_charpoly(&rf("-10c"), &rf("9c^2+6")),
            (false, Some(rf("-c^2/6")))
        );
        assert_eq!(
            class_invariant_from_charpoly(&rf("-2"), &rf("1")),
            (false, Some(rf("-1/16")))
        );
    }

    #[test]
    fn mobius_examples() {
        let q0 = rf("1/(t^2+3)");
        let id = Mobius::new(rf("1"), rf("0"), rf("0"), rf("1")).unwrap();
        assert_eq!(mobius_transform_q0(&q0, &id).unwrap(), q0);
        let shift = Mobius::new(rf("1"), rf("1"), rf("0"), rf("1")).unwrap();
        assert_eq!(mobius_transform_q0(&q0, &shift).unwrap(), rf("1/((t-1)^2+3)"));
        assert_eq!(
            Mobius::new(rf("1"), rf("2"), rf("2"), rf("4")),
            Err(Error::SingularMobius)
        );
    }

    #[test]
    fn symbolic_weight_identity() {
        assert!(weight_ten_identity().unwrap().all());
    }

    #[test]
    fn transform_examples() {
        let e = Ode4::laguerre_forsyth(rf("1/(t^2+1)"));
        assert_eq!(general_transform_ode(&e, &rf("t"), &rf("1")).unwrap(), e);
        let flat = Ode4::laguerre_forsyth(RatFunc::zero());
        assert_eq!(general_transform_ode(&flat, &rf("t+b"), &rf("1")).unwrap(), flat);
        assert!(matches!(
            general_transform_ode(&e, &rf("t^2"), &rf("1")),
            Err(Error::DegenerateTransformation(_))
        ));
        assert!(matches!(
            general_transform_ode(&e, &rf("3"), &rf("1")),
            Err(Error::DegenerateTransformation(_))
        ));
    }

    #[test]
    fn residual_lf_transformation() {
        // λ = (2t+1)/(t+1): λ' = 1/(t+1)², so (λ')^{3/2} = 1/(t+1)³ up to sign
        let q0 = rf("1/(t^2+2)^2");
        let e = Ode4::laguerre_forsyth(q0.clone());
        let lambda = rf("(2t+1)/(t+1)");
        let mu = rf("5/(t+1)^3");
        let out = general_transform_ode(&e, &lambda, &mu).unwrap();
        assert!(out.is_legendrian_lf());
        let m = Mobius::from_ratfunc(&lambda).unwrap();
        assert_eq!(out.p[0], mobius_transform_q0(&q0, &m).unwrap());
    }

    #[test]
    fn theta3_is_q1_on_lf_form() {
        let e = Ode4::new(rf("t"), rf("t^2"), RatFunc::zero(), RatFunc::zero());
        assert_eq!(e.theta3(), rf("t^2"));
        assert!(Ode4::constant(rf("c2"), rf("c0")).is_legendrian_class());
    }
}
