//! Multivariate polynomial gcd over ℚ.
//!
//! Cheap cases (constants, monomials, one operand dividing the other, a
//! variable occurring on one side only) are peeled off first. What remains is
//! handled recursively: split off the content with respect to a main variable
//! and run a subresultant remainder sequence on the primitive parts.

use num_traits::One;

use super::mpoly::{Monomial, MPoly};
use super::rat::Rat;
use super::var::Var;

/// Monic gcd (leading coefficient 1 under the term order); `gcd(0, 0) = 0`.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mg = ma.gcd(&mb);
    let a1 = strip_monomial(a, &ma);
    let b1 = strip_monomial(b, &mb);
    let g = gcd_nomono(&a1, &b1);
    g.mul_term(&mg, &Rat::one()).monic()
}

/// Gcd of a list of polynomials.
pub fn gcd_all<'a, I: IntoIterator<Item = &'a MPoly>>(polys: I) -> MPoly {
    let mut g = MPoly::zero();
    for p in polys {
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

fn strip_monomial(p: &MPoly, m: &Monomial) -> MPoly {
    if m.is_one() {
        return p.clone();
    }
    p.div_exact(&MPoly::monomial(m.clone(), Rat::one()))
        .expect("monomial content divides")
}

/// Gcd of two polynomials with trivial monomial content.
fn gcd_nomono(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    if a.is_monomial() || b.is_monomial() {
        // no monomial factor is shared once contents are stripped
        return MPoly::one();
    }
    let (small, large) = if a.num_terms() <= b.num_terms() {
        (a, b)
    } else {
        (b, a)
    };
    if large.div_exact(small).is_some() {
        return small.monic();
    }

    let va = a.vars();
    let vb = b.vars();
    // A variable present on one side only: the gcd divides every coefficient
    // of that side with respect to the variable.
    if let Some(&v) = va.iter().find(|v| !vb.contains(v)) {
        let c = content_in(a, v);
        return gcd(&c, b);
    }
    if let Some(&v) = vb.iter().find(|v| !va.contains(v)) {
        let c = content_in(b, v);
        return gcd(a, &c);
    }

    // Same variable set: pick the one of least degree as main variable.
    let v = *va
        .iter()
        .min_by_key(|v| (a.degree_in(**v).max(b.degree_in(**v)), v.index()))
        .expect("nonconstant");
    if va.len() == 1 {
        return euclid_univariate(a, b, v);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let cg = gcd(&ca, &cb);
    let pg = subresultant_pp(&pa, &pb, v);
    (&cg * &pg).monic()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub fn content_in(p: &MPoly, v: Var) -> MPoly {
    let cs = p.coeffs_in(v);
    let mut nonzero: Vec<&MPoly> = cs.iter().filter(|c| !c.is_zero()).collect();
    nonzero.sort_by_key(|c| c.num_terms());
    gcd_all(nonzero)
}

fn euclid_univariate(a: &MPoly, b: &MPoly, v: Var) -> MPoly {
    let mut x = a.coeffs_in(v);
    let mut y = b.coeffs_in(v);
    let to_rat = |cs: Vec<MPoly>| -> Vec<Rat> {
        cs.into_iter()
            .map(|c| c.as_constant().expect("univariate"))
            .collect()
    };
    let mut x = to_rat(std::mem::take(&mut x));
    let mut y = to_rat(std::mem::take(&mut y));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let mut r = urem(&x, &y);
        // keep remainders monic to limit coefficient growth
        if let Some(lc) = r.last().cloned() {
            for c in r.iter_mut() {
                *c /= &lc;
            }
        }
        x = y;
        y = r;
    }
    let lc = x.last().expect("nonzero").clone();
    let coeffs: Vec<MPoly> = x.iter().map(|c| MPoly::constant(c / &lc)).collect();
    MPoly::from_coeffs_in(v, &coeffs)
}

fn urem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut r: Vec<Rat> = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db {
        let lr = r.last().expect("nonempty").clone();
        let q = &lr / &lb;
        let shift = r.len() - 1 - db;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &q * bi;
        }
        r.pop();
        while r.last().is_some_and(num_traits::Zero::is_zero) {
            r.pop();
        }
    }
    r
}

/// Univariate view: index `k` holds the coefficient of `v^k`.
type UPoly = Vec<MPoly>;

fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn prem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    let mut steps = 0usize;
    let total = a.len() - db;
    while r.len() > db && !r.is_empty() {
        let lr = r.last().expect("nonempty").clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(bi * &lr);
        }
        r.pop();
        trim(&mut r);
        steps += 1;
    }
    if steps < total {
        let f = lb.pow((total - steps) as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

/// Primitive part (in `v`) of the gcd of two primitive polynomials.
fn subresultant_pp(a: &MPoly, b: &MPoly, v: Var) -> MPoly {
    let mut x: UPoly = a.coeffs_in(v);
    let mut y: UPoly = b.coeffs_in(v);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    let mut g = MPoly::one();
    let mut h = MPoly::one();
    loop {
        let delta = (x.len() - y.len()) as u32;
        let r = prem(&x, &y);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return MPoly::one();
        }
        let divisor = &g * &h.pow(delta);
        let next: UPoly = r
            .iter()
            .map(|c| c.div_exact(&divisor).expect("subresultant division is exact"))
            .collect();
        x = std::mem::replace(&mut y, next);
        g = x.last().expect("nonzero").clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant division is exact")
        };
    }
    let p = MPoly::from_coeffs_in(v, &y);
    let c = content_in(&p, v);
    p.div_exact(&c).expect("content divides")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse_poly;

    fn p(s: &str) -> MPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn univariate() {
        assert_eq!(gcd(&p("t^2-1"), &p("t^2+2*t+1")), p("t+1"));
        assert_eq!(gcd(&p("2*t+2"), &p("4*t+4")), p("t+1"));
        assert_eq!(gcd(&p("t^2+1"), &p("t-1")), MPoly::one());
    }

    #[test]
    fn multivariate() {
        let f = p("(t+r)*(t-c)^2*(a*t+1)");
        let g = p("(t+r)*(t-c)*(r+c+1)");
        assert_eq!(gcd(&f, &g), p("(t+r)*(t-c)").monic());
        let h = p("t^3*r^2+t*r");
        let k = p("t^2*r");
        assert_eq!(gcd(&h, &k), p("t*r"));
    }

    #[test]
    fn with_one_sided_variable() {
        let f = p("(t^2+c)*(a+1)");
        let g = p("(t^2+c)*(t-1)");
        assert_eq!(gcd(&f, &g), p("t^2+c"));
    }

    #[test]
    fn zero_cases() {
        assert_eq!(gcd(&MPoly::zero(), &p("3*t+6")), p("t+2"));
        assert!(gcd(&MPoly::zero(), &MPoly::zero()).is_zero());
    }
}
