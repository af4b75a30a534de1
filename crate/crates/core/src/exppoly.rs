//! Exponential polynomials `Σ pⱼ(t)·e^{λⱼ t}` with exponents and
//! coefficients in ℚ(parameters).
//!
//! Exponents are compared as rational functions, so symbolically distinct
//! exponents such as `r` and `1` stay in separate buckets, while specializing
//! `r = 3` merges anything that collides.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::{MPoly, RatFunc, Var};
use crate::linalg::{rank_nullspace, Mat, MatF};

/// A finite sum `Σ coeff(t)·e^{exponent·t}`. Coefficients are polynomial in `t`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ExpPoly {
    terms: BTreeMap<RatFunc, RatFunc>,
}

/// Fixed-length vector of exponential polynomials.
pub type ExpPolyVec = Vec<ExpPoly>;

impl ExpPoly {
    pub fn zero() -> ExpPoly {
        ExpPoly::default()
    }

    /// `coeff · e^{exponent·t}`.
    pub fn term(exponent: RatFunc, coeff: RatFunc) -> ExpPoly {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        ExpPoly { terms }
    }

    /// A polynomial (exponent zero).
    pub fn poly(coeff: RatFunc) -> ExpPoly {
        ExpPoly::term(RatFunc::zero(), coeff)
    }

    pub fn exp(exponent: RatFunc) -> ExpPoly {
        ExpPoly::term(exponent, RatFunc::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent, coefficient)` pairs in a fixed order.
    pub fn terms(&self) -> impl Iterator<Item = (&RatFunc, &RatFunc)> {
        self.terms.iter()
    }

    /// Coefficient of `e^{exponent·t}`.
    pub fn coeff(&self, exponent: &RatFunc) -> RatFunc {
        self.terms.get(exponent).cloned().unwrap_or_else(RatFunc::zero)
    }

    fn insert_add(&mut self, exponent: RatFunc, coeff: RatFunc) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&exponent) {
            Some(c) => {
                let s = &c + &coeff;
                if !s.is_zero() {
                    self.terms.insert(exponent, s);
                }
            }
            None => {
                self.terms.insert(exponent, coeff);
            }
        }
    }

    pub fn scale(&self, c: &RatFunc) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for (e, p) in &self.terms {
            out.insert_add(e.clone(), p * c);
        }
        out
    }

    /// `d/dt`: each term `p e^{λt}` becomes `(p' + λp) e^{λt}`.
    pub fn derivative(&self) -> ExpPoly {
        let t = Var::t();
        let mut out = ExpPoly::zero();
        for (e, p) in &self.terms {
            out.insert_add(e.clone(), &p.derivative(t) + &(e * p));
        }
        out
    }

    pub fn nth_derivative(&self, n: usize) -> ExpPoly {
        (0..n).fold(self.clone(), |acc, _| acc.derivative())
    }

    /// Value at `t = 0`.
    pub fn at_zero(&self) -> Result<RatFunc> {
        let t = Var::t();
        let zero = RatFunc::zero();
        let mut acc = RatFunc::zero();
        for p in self.terms.values() {
            acc = &acc + &p.substitute(t, &zero)?;
        }
        Ok(acc)
    }

    /// Substitutes a parameter (not `t`) everywhere, merging exponents that
    /// become equal.
    pub fn specialize(&self, v: Var, val: &RatFunc) -> Result<ExpPoly> {
        if v == Var::t() {
            return Err(Error::Invalid("cannot specialize t".into()));
        }
        let mut out = ExpPoly::zero();
        for (e, p) in &self.terms {
            out.insert_add(e.substitute(v, val)?, p.substitute(v, val)?);
        }
        Ok(out)
    }
}

/// Solves `y' - λy = f` with `y(0) = y0` inside the exponential-polynomial class.
fn solve_first_order(lambda: &RatFunc, f: &ExpPoly, y0: &RatFunc) -> Result<ExpPoly> {
    let t = Var::t();
    let mut y = ExpPoly::zero();
    for (mu, p) in &f.terms {
        let diff = mu - lambda;
        let q = if diff.is_zero() {
            antiderivative_t(p)?
        } else {
            // q' + (μ-λ) q = p  ⇒  q = Σ_k (-1)^k p^{(k)} / (μ-λ)^{k+1}
            let inv = diff.inv()?;
            let mut q = RatFunc::zero();
            let mut dk = p.clone();
            let mut factor = inv.clone();
            let mut sign = RatFunc::one();
            while !dk.is_zero() {
                q = &q + &(&(&sign * &dk) * &factor);
                dk = dk.derivative(t);
                factor = &factor * &inv;
                sign = -sign;
            }
            q
        };
        y.insert_add(mu.clone(), q);
    }
    let c = y0 - &y.at_zero()?;
    y.insert_add(lambda.clone(), c);
    Ok(y)
}

fn antiderivative_t(p: &RatFunc) -> Result<RatFunc> {
    let t = Var::t();
    if p.den().contains(t) {
        return Err(Error::Invalid("coefficient is not polynomial in t".into()));
    }
    let cs = p.num().coeffs_in(t);
    let lifted: Vec<MPoly> = std::iter::once(MPoly::zero())
        .chain(cs.iter().enumerate().map(|(k, c)| {
            c.scale(&crate::exact::rat(1, k as i64 + 1))
        }))
        .collect();
    let num = MPoly::from_coeffs_in(t, &lifted);
    RatFunc::new(num, p.den().clone())
}

fn is_upper(a: &MatF) -> bool {
    (0..a.rows()).all(|i| (0..i).all(|j| a[(i, j)].is_zero()))
}

fn is_lower(a: &MatF) -> bool {
    (0..a.rows()).all(|i| (i + 1..a.cols()).all(|j| a[(i, j)].is_zero()))
}

/// `exp(tA)z` for triangular `A`, by back substitution.
fn triangular_orbit(a: &MatF, z: &[RatFunc]) -> Result<ExpPolyVec> {
    let n = a.rows();
    let upper = is_upper(a);
    let order: Vec<usize> = if upper {
        (0..n).rev().collect()
    } else {
        (0..n).collect()
    };
    let mut y: Vec<ExpPoly> = vec![ExpPoly::zero(); n];
    for &i in &order {
        let mut f = ExpPoly::zero();
        let others: Vec<usize> = if upper {
            (i + 1..n).collect()
        } else {
            (0..i).collect()
        };
        for j in others {
            if !a[(i, j)].is_zero() {
                f = &f + &y[j].scale(&a[(i, j)]);
            }
        }
        y[i] = solve_first_order(&a[(i, i)], &f, &z[i])?;
    }
    Ok(y)
}

/// `γ(t) = exp(tA)z`.
///
/// `A` must be triangular (every catalog normal form is), or `p` must be
/// supplied with `p⁻¹AP` triangular.
pub fn exp_orbit(a: &MatF, z: &[RatFunc], p: Option<&MatF>) -> Result<ExpPolyVec> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if z.len() != a.rows() {
        return Err(Error::DimensionMismatch("base point length".into()));
    }
    match p {
        None => {
            if is_upper(a) || is_lower(a) {
                triangular_orbit(a, z)
            } else {
                Err(Error::NonCatalogMatrix(
                    "matrix is not triangular and no conjugator was supplied".into(),
                ))
            }
        }
        Some(p) => {
            let pinv = p.inverse()?;
            let b = &(&pinv * a) * p;
            if !(is_upper(&b) || is_lower(&b)) {
                return Err(Error::NonCatalogMatrix(
                    "conjugated matrix is not triangular".into(),
                ));
            }
            let w = pinv.mul_vec(z)?;
            let inner = triangular_orbit(&b, &w)?;
            Ok(mat_apply(p, &inner))
        }
    }
}

/// Entrywise derivative.
pub fn ep_derivative(v: &[ExpPoly]) -> ExpPolyVec {
    v.iter().map(ExpPoly::derivative).collect()
}

/// `M·v` for a constant matrix.
pub fn mat_apply(m: &MatF, v: &[ExpPoly]) -> ExpPolyVec {
    (0..m.rows())
        .map(|i| {
            let mut acc = ExpPoly::zero();
            for (j, x) in v.iter().enumerate() {
                if !m[(i, j)].is_zero() {
                    acc = &acc + &x.scale(&m[(i, j)]);
                }
            }
            acc
        })
        .collect()
}

/// Signed 3×3 minors of the 4×3 matrix with columns `a, b, c`; all four vanish
/// exactly when `a ∧ b ∧ c = 0` in `Λ³` of a 4-dimensional space.
pub fn wedge3(a: &[ExpPoly], b: &[ExpPoly], c: &[ExpPoly]) -> Result<[ExpPoly; 4]> {
    if a.len() != 4 || b.len() != 4 || c.len() != 4 {
        return Err(Error::DimensionMismatch("wedge3 needs 4-vectors".into()));
    }
    let minor = |skip: usize| -> ExpPoly {
        let rows: Vec<usize> = (0..4).filter(|&i| i != skip).collect();
        let m = |r: usize, col: usize| -> &ExpPoly {
            match col {
                0 => &a[rows[r]],
                1 => &b[rows[r]],
                _ => &c[rows[r]],
            }
        };
        let t1 = m(0, 0) * &(&(m(1, 1) * m(2, 2)) - &(m(1, 2) * m(2, 1)));
        let t2 = m(0, 1) * &(&(m(1, 0) * m(2, 2)) - &(m(1, 2) * m(2, 0)));
        let t3 = m(0, 2) * &(&(m(1, 0) * m(2, 1)) - &(m(1, 1) * m(2, 0)));
        let d = &(&t1 - &t2) + &t3;
        if skip % 2 == 0 {
            d
        } else {
            -&d
        }
    };
    Ok([minor(0), minor(1), minor(2), minor(3)])
}

/// One scalar linear equation per (exponent, power of `t`) in `conditions`,
/// returned as coefficient rows over `unknowns`.
pub fn ep_equations(conditions: &[ExpPoly], unknowns: &[Var]) -> Result<Vec<Vec<RatFunc>>> {
    let t = Var::t();
    let mut rows = Vec::new();
    for cond in conditions {
        for p in cond.terms.values() {
            let den = p.den();
            if den.contains(t) {
                return Err(Error::Nonlinear("coefficient is not polynomial in t".into()));
            }
            if unknowns.iter().any(|u| den.contains(*u)) {
                return Err(Error::Nonlinear("unknown in a denominator".into()));
            }
            let den_inv = RatFunc::new(MPoly::one(), den.clone())?;
            for ck in p.num().coeffs_in(t) {
                if ck.is_zero() {
                    continue;
                }
                let mut row = vec![RatFunc::zero(); unknowns.len()];
                let mut rest = ck.clone();
                for (i, u) in unknowns.iter().enumerate() {
                    let cs = rest.coeffs_in(*u);
                    if cs.len() > 2 {
                        return Err(Error::Nonlinear(format!("{u} appears nonlinearly")));
                    }
                    if cs.len() == 2 {
                        if unknowns.iter().any(|w| cs[1].contains(*w)) {
                            return Err(Error::Nonlinear(format!("product involving {u}")));
                        }
                        row[i] = &RatFunc::from_poly(cs[1].clone()) * &den_inv;
                        rest = cs[0].clone();
                    }
                }
                if !rest.is_zero() {
                    return Err(Error::Nonlinear(
                        "term free of unknowns (system is not homogeneous)".into(),
                    ));
                }
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

/// Solution space of homogeneous linear exponential-polynomial conditions.
pub fn ep_linear_system(conditions: &[ExpPoly], unknowns: &[Var]) -> Result<Vec<Vec<RatFunc>>> {
    let rows = ep_equations(conditions, unknowns)?;
    if rows.is_empty() {
        return Ok((0..unknowns.len())
            .map(|i| {
                let mut v = vec![RatFunc::zero(); unknowns.len()];
                v[i] = RatFunc::one();
                v
            })
            .collect());
    }
    let m = Mat::from_rows(rows)?;
    Ok(rank_nullspace(&m).1)
}

impl Add for &ExpPoly {
    type Output = ExpPoly;
    fn add(self, rhs: &ExpPoly) -> ExpPoly {
        let mut out = self.clone();
        for (e, p) in &rhs.terms {
            out.insert_add(e.clone(), p.clone());
        }
        out
    }
}

impl Sub for &ExpPoly {
    type Output = ExpPoly;
    fn sub(self, rhs: &ExpPoly) -> ExpPoly {
        let mut out = self.clone();
        for (e, p) in &rhs.terms {
            out.insert_add(e.clone(), -p);
        }
        out
    }
}

impl Neg for &ExpPoly {
    type Output = ExpPoly;
    fn neg(self) -> ExpPoly {
        ExpPoly {
            terms: self.terms.iter().map(|(e, p)| (e.clone(), -p)).collect(),
        }
    }
}

impl Mul for &ExpPoly {
    type Output = ExpPoly;
    fn mul(self, rhs: &ExpPoly) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for (e1, p1) in &self.terms {
            for (e2, p2) in &rhs.terms {
                out.insert_add(e1 + e2, p1 * p2);
            }
        }
        out
    }
}

impl fmt::Display for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, p)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if e.is_zero() {
                write!(f, "({p})")?;
            } else {
                write!(f, "({p})*exp(({e})*t)")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExpPoly[{self}]")
    }
}

/// Unknown matrix `(u_ij)` built from fresh variables named `{prefix}{i}{j}`.
pub fn unknown_matrix(prefix: &str, n: usize) -> (MatF, Vec<Var>) {
    let mut vars = Vec::with_capacity(n * n);
    let m = Mat::from_fn(n, n, |i, j| {
        let v = Var::new(&format!("{prefix}{}{}", i + 1, j + 1));
        vars.push(v);
        RatFunc::var(v)
    });
    (m, vars)
}

/// Coefficient of `u` in a linear form (used to read solution vectors back).
pub fn linear_coeff(form: &RatFunc, u: Var) -> RatFunc {
    let cs = form.num().coeffs_in(u);
    match cs.get(1) {
        Some(c) => {
            RatFunc::from_poly(c.clone())
                * RatFunc::new(MPoly::one(), form.den().clone()).expect("nonzero den")
        }
        None => RatFunc::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rf;

    fn ep(e: &str, c: &str) -> ExpPoly {
        ExpPoly::term(rf(e), rf(c))
    }

    #[test]
    fn diagonal_orbit() {
        let a = MatF::diag(&[rf("r"), rf("1"), rf("-1"), rf("-r")]);
        let z = vec![RatFunc::one(); 4];
        let g = exp_orbit(&a, &z, None).unwrap();
        assert_eq!(g[0], ep("r", "1"));
        assert_eq!(g[3], ep("-r", "1"));
    }

    #[test]
    fn nilpotent_orbit_is_polynomial() {
        let a = MatF::from_i64(&[&[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
        let z = vec![rf("1"), rf("0"), rf("0"), rf("0")];
        let g = exp_orbit(&a, &z, None).unwrap();
        let want = ["1", "t", "t^2/2", "t^3/6"];
        for (gi, w) in g.iter().zip(want) {
            assert_eq!(*gi, ExpPoly::poly(rf(w)));
        }
    }

    #[test]
    fn jordan_orbit() {
        let a = MatF::from_i64(&[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 1], &[0, 0, 0, -1]]);
        let z: Vec<RatFunc> = ["z1", "z2", "z3", "z4"].iter().map(|s| rf(s)).collect();
        let g = exp_orbit(&a, &z, None).unwrap();
        assert_eq!(g[0], ep("1", "z1+t*z2"));
        assert_eq!(g[1], ep("1", "z2"));
        assert_eq!(g[2], ep("-1", "z3+t*z4"));
        assert_eq!(g[3], ep("-1", "z4"));
        let d = ep_derivative(&g);
        assert_eq!(d, mat_apply(&a, &g));
    }

    #[test]
    fn conjugated_orbit() {
        let b = MatF::diag(&[rf("2"), rf("-2")]);
        let p = MatF::from_i64(&[&[1, 1], &[1, 2]]);
        let a = &(&p * &b) * &p.inverse().unwrap();
        let z = vec![rf("1"), rf("0")];
        assert!(matches!(exp_orbit(&a, &z, None), Err(Error::NonCatalogMatrix(_))));
        let g = exp_orbit(&a, &z, Some(&p)).unwrap();
        assert_eq!(ep_derivative(&g), mat_apply(&a, &g));
        assert_eq!(g[0].at_zero().unwrap(), rf("1"));
        assert_eq!(g[1].at_zero().unwrap(), rf("0"));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(ep("r", "1").derivative(), ep("r", "r"));
        assert_eq!(ep("1", "t").derivative(), ep("1", "1+t"));
    }

    #[test]
    fn linear_systems() {
        let u = Var::new("u");
        let v = Var::new("v");
        let sol = ep_linear_system(&[ep("1", "u")], &[u]).unwrap();
        assert!(sol.is_empty());
        let sol = ep_linear_system(&[ep("r", "(u-v)*t")], &[u, v]).unwrap();
        assert_eq!(sol, vec![vec![rf("1"), rf("1")]]);
        assert_eq!(ep_linear_system(&[], &[u, v]).unwrap().len(), 2);
        assert!(matches!(
            ep_linear_system(&[ep("1", "u*v")], &[u, v]),
            Err(Error::Nonlinear(_))
        ));
    }

    #[test]
    fn specialization_merges_exponents() {
        let x = &ep("r", "1") + &ep("3", "1");
        let y = x.specialize(Var::new("r"), &rf("3")).unwrap();
        assert_eq!(y, ep("3", "2"));
    }
}
