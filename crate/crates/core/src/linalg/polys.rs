use std::fmt;

use num_traits::{One, Signed};

use super::mat::{rank_nullspace, Mat};
use crate::error::{Error, Result};
use crate::exact::{parse_ratfunc, rat_to_string, Field, RatFunc};

/// Univariate polynomial in a formal symbol `s`; `coeffs[k]` multiplies `s^k`.
#[derive(Clone, PartialEq)]
pub struct PolyInS<F> {
    coeffs: Vec<F>,
}

impl<F: Field> PolyInS<F> {
    /// Trailing zero coefficients are dropped.
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(F::is_zero) {
            coeffs.pop();
        }
        PolyInS { coeffs }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `s^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(F::is_one)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when every odd-degree coefficient vanishes.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(F::is_zero)
    }

    /// Remainder of division by a nonzero polynomial.
    pub fn rem(&self, d: &Self) -> Result<Self> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.coeffs[dd].inv().ok_or(Error::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let lead = r.last().expect("nonempty").clone() * &inv;
            let shift = r.len() - 1 - dd;
            for (i, c) in d.coeffs.iter().enumerate() {
                let x = std::mem::replace(&mut r[shift + i], F::zero());
                r[shift + i] = x - &(lead.clone() * c);
            }
            r.pop();
            while r.last().is_some_and(F::is_zero) {
                r.pop();
            }
        }
        Ok(PolyInS::new(r))
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// `p(A)` for a square matrix `A`, by Horner's rule.
    pub fn eval_matrix(&self, a: &Mat<F>) -> Result<Mat<F>> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        let n = a.rows();
        let mut acc = Mat::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * a) + &Mat::identity(n).scale(c);
        }
        Ok(acc)
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x + c)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> PolyInS<G> {
        PolyInS::new(self.coeffs.iter().map(f).collect())
    }
}

/// Characteristic polynomial `det(sI - A)` by the Faddeev–LeVerrier recursion.
pub fn charpoly<F: Field>(a: &Mat<F>) -> Result<PolyInS<F>> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut c = vec![F::zero(); n + 1];
    c[n] = F::one();
    let mut m = Mat::zeros(n, n);
    for k in 1..=n {
        m = &(a * &m) + &Mat::identity(n).scale(&c[n - k + 1]);
        let am = a * &m;
        let k_inv = F::from_i64(k as i64).inv().expect("characteristic zero");
        c[n - k] = -(am.trace() * &k_inv);
    }
    Ok(PolyInS::new(c))
}

/// Monic minimal polynomial: the first linear dependency among `I, A, A², …`.
pub fn minpoly<F: Field>(a: &Mat<F>) -> Result<PolyInS<F>> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut powers = vec![Mat::identity(n).vectorize()];
    let mut p = Mat::identity(n);
    for _ in 1..=n {
        p = &p * a;
        powers.push(p.vectorize());
        let m = Mat::from_cols(&powers)?;
        let (_, null) = rank_nullspace(&m);
        if let Some(v) = null.into_iter().next() {
            // earlier powers are independent, so the top coefficient is nonzero
            let lead = v.last().expect("nonempty").inv().expect("nonzero");
            return Ok(PolyInS::new(v.into_iter().map(|x| x * &lead).collect()));
        }
    }
    unreachable!("Cayley-Hamilton bounds the minimal polynomial degree")
}

/// Both polynomials, checked to satisfy `min | char`.
pub fn charpoly_minpoly<F: Field>(a: &Mat<F>) -> Result<(PolyInS<F>, PolyInS<F>)> {
    let ch = charpoly(a)?;
    let mi = minpoly(a)?;
    debug_assert!(mi.divides(&ch).unwrap_or(false));
    Ok((ch, mi))
}

impl PolyInS<RatFunc> {
    /// Parses `"s^4-60s^2+576"`-style input: `s` is treated as the polynomial
    /// variable, everything else as coefficients.
    pub fn parse(text: &str) -> Result<Self> {
        let v = crate::exact::Var::new("s");
        let f = parse_ratfunc(text)?;
        if f.den().contains(v) {
            return Err(Error::Invalid(format!("`{text}` is not polynomial in s")));
        }
        let den = RatFunc::new(crate::exact::MPoly::one(), f.den().clone())?;
        let coeffs = f
            .num()
            .coeffs_in(v)
            .into_iter()
            .map(|c| RatFunc::from_poly(c) * &den)
            .collect();
        Ok(PolyInS::new(coeffs))
    }
}

impl fmt::Display for PolyInS<RatFunc> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let spow = match k {
                0 => String::new(),
                1 => "s".to_string(),
                _ => format!("s^{k}"),
            };
            if let Some(q) = c.as_constant() {
                let neg = q.is_negative();
                let a = q.abs();
                if neg {
                    write!(f, "-")?;
                } else if !first {
                    write!(f, "+")?;
                }
                if k == 0 || !a.is_one() {
                    write!(f, "{}", rat_to_string(&a))?;
                }
                write!(f, "{spow}")?;
            } else {
                let text = c.to_string();
                let single = c.is_polynomial() && c.num().num_terms() == 1;
                if single {
                    match text.strip_prefix('-') {
                        Some(rest) => write!(f, "-{rest}")?,
                        None if first => write!(f, "{text}")?,
                        None => write!(f, "+{text}")?,
                    }
                    if k > 0 {
                        write!(f, "*{spow}")?;
                    }
                } else {
                    if !first {
                        write!(f, "+")?;
                    }
                    write!(f, "({text})")?;
                    if k > 0 {
                        write!(f, "*{spow}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for PolyInS<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyInS{:?}", self.coeffs)
    }
}
