//! JSON forms of the exact types.
//!
//! A rational function serializes as
//! `{"vars": ["t", "c"], "num": [{"exps": [2, 1], "coef": "3/2"}], "den": [...]}`
//! where each exponent vector is indexed by `vars`. Deserialization also
//! accepts a plain infix string such as `"-c^2/6"`.

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use super::mpoly::{Monomial, MPoly};
use super::parse::parse_ratfunc;
use super::rat::{parse_rat, rat_to_string};
use super::ratfunc::RatFunc;
use super::var::Var;

#[derive(Serialize, Deserialize)]
struct TermJson {
    exps: Vec<u32>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct RatFuncJson {
    vars: Vec<String>,
    num: Vec<TermJson>,
    den: Vec<TermJson>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RatFuncInput {
    Text(String),
    Int(i64),
    Structured(RatFuncJson),
}

fn terms_json(p: &MPoly, vars: &[Var]) -> Vec<TermJson> {
    p.terms()
        .iter()
        .map(|(m, c)| TermJson {
            exps: vars.iter().map(|v| m.exp(*v)).collect(),
            coef: rat_to_string(c),
        })
        .collect()
}

fn poly_from_json(terms: &[TermJson], vars: &[Var]) -> Result<MPoly, String> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        if t.exps.len() != vars.len() {
            return Err(format!(
                "exponent vector of length {} for {} variables",
                t.exps.len(),
                vars.len()
            ));
        }
        let mut m = Monomial::one();
        for (v, e) in vars.iter().zip(&t.exps) {
            m.set(*v, *e);
        }
        let c = parse_rat(&t.coef).map_err(|e| e.to_string())?;
        out.push((m, c));
    }
    Ok(MPoly::from_terms(out))
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let vars = self.vars();
        RatFuncJson {
            vars: vars.iter().map(|v| v.name()).collect(),
            num: terms_json(self.num(), &vars),
            den: terms_json(self.den(), &vars),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match RatFuncInput::deserialize(d)? {
            RatFuncInput::Text(s) => parse_ratfunc(&s).map_err(de::Error::custom),
            RatFuncInput::Int(n) => Ok(RatFunc::from_int(n)),
            RatFuncInput::Structured(j) => {
                let vars: Vec<Var> = j.vars.iter().map(|n| Var::new(n)).collect();
                let num = poly_from_json(&j.num, &vars).map_err(de::Error::custom)?;
                let den = poly_from_json(&j.den, &vars).map_err(de::Error::custom)?;
                RatFunc::new(num, den).map_err(de::Error::custom)
            }
        }
    }
}

/// Serde adapter writing a rational function as its display string.
pub mod as_string {
    use super::*;

    pub fn serialize<S: Serializer>(x: &RatFunc, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<RatFunc, D::Error> {
        RatFunc::deserialize(d)
    }
}

/// Serde adapter for `Option<RatFunc>` as a display string or `null`.
pub mod opt_string {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<RatFunc>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(v) => s.serialize_str(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<RatFunc>, D::Error> {
        Option::<RatFunc>::deserialize(d)
    }
}

/// Serde adapter for a list of rational functions as display strings.
pub mod vec_string {
    use super::*;

    pub fn serialize<S: Serializer, T: AsRef<[RatFunc]>>(x: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(x.as_ref().iter().map(|v| v.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<RatFunc>, D::Error> {
        Vec::<RatFunc>::deserialize(d)
    }
}

/// Like [`vec_string`] for a fixed-length array.
pub mod array_string {
    use super::*;

    pub use super::vec_string::serialize;

    pub fn deserialize<'de, D: Deserializer<'de>, const N: usize>(
        d: D,
    ) -> Result<[RatFunc; N], D::Error> {
        let v = Vec::<RatFunc>::deserialize(d)?;
        let len = v.len();
        v.try_into()
            .map_err(|_| de::Error::custom(format!("expected {N} entries, got {len}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structured_round_trip() {
        let x = parse_ratfunc("(3*t^2*c-1)/(2*t+c^3)").unwrap();
        let j = serde_json::to_string(&x).unwrap();
        let y: RatFunc = serde_json::from_str(&j).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn string_input() {
        let y: RatFunc = serde_json::from_str("\"-c^2/6\"").unwrap();
        assert_eq!(y, parse_ratfunc("-c^2/6").unwrap());
        let z: RatFunc = serde_json::from_str("7").unwrap();
        assert_eq!(z, RatFunc::from_int(7));
    }

    #[test]
    fn rejects_bad_arity() {
        let bad = r#"{"vars":["t"],"num":[{"exps":[1,2],"coef":"1"}],"den":[{"exps":[0],"coef":"1"}]}"#;
        assert!(serde_json::from_str::<RatFunc>(bad).is_err());
    }
}
