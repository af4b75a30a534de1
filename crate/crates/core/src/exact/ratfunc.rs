use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::gcd::gcd;
use super::mpoly::MPoly;
use super::rat::{int, Rat};
use super::var::Var;
use crate::error::{Error, Result};

/// Element of ℚ(t, parameters): a reduced quotient of polynomials.
///
/// The denominator is always monic under the graded-lex order, so equal
/// values have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    /// `num / den` in canonical form.
    pub fn new(num: MPoly, den: MPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: MPoly, den: MPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        Self::normalize_lc(num, den)
    }

    /// Scales so the denominator is monic; assumes the pair is already coprime.
    fn normalize_lc(num: MPoly, den: MPoly) -> RatFunc {
        let lc = den.lc();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: MPoly) -> RatFunc {
        RatFunc {
            num: p,
            den: MPoly::one(),
        }
    }

    pub fn constant(c: Rat) -> RatFunc {
        RatFunc::from_poly(MPoly::constant(c))
    }

    pub fn from_int(n: i64) -> RatFunc {
        RatFunc::constant(int(n))
    }

    pub fn var(v: Var) -> RatFunc {
        RatFunc::from_poly(MPoly::var(v))
    }

    /// Variable by name, registering it if new.
    pub fn named(name: &str) -> RatFunc {
        RatFunc::var(Var::new(name))
    }

    pub fn t() -> RatFunc {
        RatFunc::var(Var::t())
    }

    pub fn zero() -> RatFunc {
        RatFunc::from_poly(MPoly::zero())
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(MPoly::one())
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn contains(&self, v: Var) -> bool {
        self.num.contains(v) || self.den.contains(v)
    }

    /// Variables occurring in numerator or denominator, in registry order.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs = self.num.vars();
        for v in self.den.vars() {
            if !vs.contains(&v) {
                vs.push(v);
            }
        }
        vs.sort();
        vs
    }

    /// Checks that the value is unchanged by re-reduction.
    pub fn is_canonical(&self) -> bool {
        Self::reduce(self.num.clone(), self.den.clone()) == *self
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_lc(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, e: i32) -> Result<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let n = e.unsigned_abs();
        Ok(RatFunc {
            num: base.num.pow(n),
            den: base.den.pow(n),
        })
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn derivative(&self, v: Var) -> RatFunc {
        let dn = self.num.derivative(v);
        let dd = self.den.derivative(v);
        if dd.is_zero() {
            return RatFunc {
                num: dn,
                den: self.den.clone(),
            }
            .recanon_num();
        }
        // (n/d)' = (n' d/g - n d'/g) / (d * d/g) with g = gcd(d, d')
        let g = gcd(&self.den, &dd);
        let dg = self.den.div_exact(&g).expect("gcd divides");
        let ddg = dd.div_exact(&g).expect("gcd divides");
        let num = &(&dn * &dg) - &(&self.num * &ddg);
        let den = &self.den * &dg;
        Self::reduce(num, den)
    }

    /// Derivative by variable name; the variable must already be registered.
    pub fn derivative_by_name(&self, name: &str) -> Result<RatFunc> {
        let v = Var::lookup(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(self.derivative(v))
    }

    fn recanon_num(self) -> RatFunc {
        Self::reduce(self.num, self.den)
    }

    /// Replaces `v` by `val`.
    pub fn substitute(&self, v: Var, val: &RatFunc) -> Result<RatFunc> {
        if !self.contains(v) {
            return Ok(self.clone());
        }
        let (p, q) = (&val.num, &val.den);
        let n = homogenized(&self.num, v, p, q);
        let d = homogenized(&self.den, v, p, q);
        if d.0.is_zero() {
            return Err(Error::DegenerateSubstitution);
        }
        // n.0 / q^n.1 divided by d.0 / q^d.1
        let (num, den) = match n.1.cmp(&d.1) {
            Ordering::Equal => (n.0, d.0),
            Ordering::Less => (&n.0 * &q.pow(d.1 - n.1), d.0),
            Ordering::Greater => (n.0, &d.0 * &q.pow(n.1 - d.1)),
        };
        RatFunc::new(num, den)
    }

    /// Simultaneous substitution of several variables.
    pub fn substitute_many(&self, subs: &[(Var, RatFunc)]) -> Result<RatFunc> {
        if subs.len() == 1 {
            return self.substitute(subs[0].0, &subs[0].1);
        }
        // Rename to fresh variables first so that values may mention substituted names.
        let mut x = self.clone();
        let mut fresh = Vec::with_capacity(subs.len());
        for (i, (v, _)) in subs.iter().enumerate() {
            let f = Var::new(&format!("__subst{i}"));
            x = x.substitute(*v, &RatFunc::var(f))?;
            fresh.push(f);
        }
        for (f, (_, val)) in fresh.iter().zip(subs) {
            x = x.substitute(*f, val)?;
        }
        Ok(x)
    }

    /// Evaluates at a rational point; `None` if a variable is missing or the
    /// denominator vanishes.
    pub fn eval(&self, point: &dyn Fn(Var) -> Option<Rat>) -> Option<Rat> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point)? / d)
    }

    /// Numerator and denominator scaled to coprime integer coefficients, with
    /// the denominator's leading coefficient positive.
    pub fn integer_parts(&self) -> (MPoly, MPoly) {
        let l = self.num.denominator_lcm().lcm(&self.den.denominator_lcm());
        let lr = Rat::from_integer(l);
        let n = self.num.scale(&lr);
        let d = self.den.scale(&lr);
        let mut g = BigInt::zero();
        for (_, c) in n.terms().iter().chain(d.terms()) {
            g = g.gcd(c.numer());
        }
        if g.is_zero() || g.is_one() {
            return (n, d);
        }
        let gi = Rat::from_integer(g).recip();
        (n.scale(&gi), d.scale(&gi))
    }
}

/// `p(v = a/b) * b^deg`, returned with `deg`.
fn homogenized(p: &MPoly, v: Var, a: &MPoly, b: &MPoly) -> (MPoly, u32) {
    let cs = p.coeffs_in(v);
    let deg = (cs.len() - 1) as u32;
    if deg == 0 {
        return (p.clone(), 0);
    }
    // Horner in the homogeneous form: sum c_k a^k b^(deg-k)
    let mut acc = MPoly::zero();
    let mut bpow = MPoly::one();
    let mut apows = Vec::with_capacity(cs.len());
    let mut ap = MPoly::one();
    for _ in 0..cs.len() {
        apows.push(ap.clone());
        ap = &ap * a;
    }
    for k in (0..cs.len()).rev() {
        if !cs[k].is_zero() {
            acc = &acc + &(&(&cs[k] * &apows[k]) * &bpow);
        }
        if k > 0 {
            bpow = &bpow * b;
        }
    }
    (acc, deg)
}

/// Structural total order (numerator first); used only to key maps.
impl Ord for RatFunc {
    fn cmp(&self, other: &Self) -> Ordering {
        self.num.cmp(&other.num).then_with(|| self.den.cmp(&other.den))
    }
}

impl PartialOrd for RatFunc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<MPoly> for RatFunc {
    fn from(p: MPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<Rat> for RatFunc {
    fn from(c: Rat) -> Self {
        RatFunc::constant(c)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

fn write_part(f: &mut fmt::Formatter<'_>, p: &MPoly, wrap: bool) -> fmt::Result {
    if wrap {
        write!(f, "(")?;
        p.fmt_terms(f)?;
        write!(f, ")")
    } else {
        p.fmt_terms(f)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() && self.num.denominator_lcm().is_one() {
            return self.num.fmt_terms(f);
        }
        let (mut n, mut d) = self.integer_parts();
        if d.lc().is_negative() {
            n = -n;
            d = -d;
        }
        if d.is_one() {
            return n.fmt_terms(f);
        }
        write_part(f, &n, n.num_terms() > 1)?;
        write!(f, "/")?;
        let simple_den = d.num_terms() == 1
            && (d.is_constant()
                || (d.lc().is_one() && d.terms()[0].0.factors().count() == 1));
        write_part(f, &d, !simple_den)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc {
                num: &(&self.num * &rhs.den) + &rhs.num,
                den: rhs.den.clone(),
            };
        }
        if rhs.den.is_one() {
            return RatFunc {
                num: &self.num + &(&rhs.num * &self.den),
                den: self.den.clone(),
            };
        }
        let g = gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            return RatFunc::normalize_lc(num, den);
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g2 = gcd(&num, &g);
        let num = num.div_exact(&g2).expect("gcd divides");
        let den = &b1 * &rhs.den.div_exact(&g2).expect("gcd divides");
        RatFunc::normalize_lc(num, den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (
                self.num.div_exact(&g1).expect("gcd divides"),
                rhs.den.div_exact(&g1).expect("gcd divides"),
            )
        };
        let (c, b) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (
                rhs.num.div_exact(&g2).expect("gcd divides"),
                self.den.div_exact(&g2).expect("gcd divides"),
            )
        };
        RatFunc::normalize_lc(&a * &c, &b * &d)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self).ok()
    }
    fn from_rat(q: &Rat) -> Self {
        RatFunc::constant(q.clone())
    }
    fn powu(&self, e: u32) -> Self {
        RatFunc::pow(self, e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse_ratfunc;
    use crate::exact::rat::rat;

    fn f(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn field_operation_examples() {
        assert_eq!(&f("t") + &f("t"), f("2*t"));
        assert_eq!(&f("1/(t-1)") * &f("1/(t+1)"), f("1/(t^2-1)"));
        assert_eq!(&f("(t^2-1)/(t-1)") * &RatFunc::one(), f("t+1"));
        assert_eq!(RatFunc::one().div(&RatFunc::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let x = f("3/(2*t+4)");
        assert!(x.den().lc().is_one());
        assert_eq!(x.num().as_constant(), Some(rat(3, 2)));
        assert!(x.is_canonical());
        let y = f("(-t)/(-t^2)");
        assert_eq!(y, f("1/t"));
    }

    #[test]
    fn derivative_examples() {
        let t = Var::t();
        assert_eq!(f("t^3").derivative(t), f("3*t^2"));
        assert_eq!(f("1/(t^2-200)^4").derivative(t), f("-8*t/(t^2-200)^5"));
        assert!(f("c^2").derivative(t).is_zero());
        assert!(f("t").derivative_by_name("no_such_variable_here").is_err());
    }

    #[test]
    fn substitution_examples() {
        let t = Var::t();
        assert_eq!(f("t^2").substitute(t, &f("t+1")).unwrap(), f("t^2+2*t+1"));
        assert_eq!(f("1/t").substitute(t, &f("1/t")).unwrap(), f("t"));
        let mob = f("(a*t+b)/(c*t+d)");
        assert_eq!(
            f("1/t^4").substitute(t, &mob).unwrap(),
            f("(c*t+d)^4/(a*t+b)^4")
        );
        assert_eq!(
            f("1/(t-1)").substitute(t, &f("1")),
            Err(Error::DegenerateSubstitution)
        );
    }

    #[test]
    fn simultaneous_substitution_swaps() {
        let x = f("a-c");
        let a = Var::new("a");
        let c = Var::new("c");
        let y = x.substitute_many(&[(a, f("c")), (c, f("a"))]).unwrap();
        assert_eq!(y, f("c-a"));
    }

    #[test]
    fn display_uses_integer_coefficients() {
        assert_eq!(f("-c^2/6").to_string(), "-c^2/6");
        assert_eq!(f("-1/7").to_string(), "-1/7");
        assert_eq!(f("a^2/36").to_string(), "a^2/36");
        assert_eq!(f("1/(2*t)").to_string(), "1/(2*t)");
        assert_eq!(f("(t+1)/(t-1)").to_string(), "(t+1)/(t-1)");
        assert_eq!(f("t/r").to_string(), "t/r");
    }
}
