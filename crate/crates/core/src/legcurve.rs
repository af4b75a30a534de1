//! Homogeneous nondegenerate Legendrian curves `γ(t) = exp(tA)z` in ℙ³:
//! admissibility, compatible symplectic forms, the invariant label,
//! equivalence of labels, base-point normalization and symmetry dimension.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{rat_sqrt, rat_to_string, serial, Rat, RatFunc, Var};
use crate::exppoly::{ep_equations, exp_orbit, unknown_matrix, wedge3, ExpPoly};
use crate::linalg::{charpoly, minpoly, rank_nullspace, Mat, MatF};
use crate::ode4::class_invariant_from_charpoly;

/// A pair `(A, z)` generating `γ(t) = exp(tA)z`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveSpec {
    #[serde(rename = "A")]
    pub a: MatF,
    #[serde(with = "serial::vec_string")]
    pub z: Vec<RatFunc>,
}

impl CurveSpec {
    pub fn new(a: MatF, z: Vec<RatFunc>) -> CurveSpec {
        CurveSpec { a, z }
    }

    fn check_shape(&self) -> Result<()> {
        if self.a.rows() != 4 || self.a.cols() != 4 {
            return Err(Error::DimensionMismatch(format!(
                "expected a 4x4 matrix, got {}x{}",
                self.a.rows(),
                self.a.cols()
            )));
        }
        if self.z.len() != 4 {
            return Err(Error::DimensionMismatch(format!(
                "expected a base point of length 4, got {}",
                self.z.len()
            )));
        }
        Ok(())
    }

    /// Columns `z, Az, A²z, A³z`.
    pub fn osculating_matrix(&self) -> Result<MatF> {
        self.check_shape()?;
        let mut cols = vec![self.z.clone()];
        for _ in 0..3 {
            let next = self.a.mul_vec(cols.last().expect("nonempty"))?;
            cols.push(next);
        }
        Mat::from_cols(&cols)
    }
}

/// Normal forms of the classification.
#[derive(Clone, Debug, PartialEq)]
pub enum CatalogForm {
    /// `diag(r, 1, -1, -r)`.
    Lr2(RatFunc),
    /// Jordan blocks for eigenvalues `±1`.
    L1,
    /// `diag(1, N₂, -1)` with a nilpotent middle block.
    L0,
    /// `diag(3, 1, -1, -3)`.
    RncDiagonal,
    /// Single nilpotent Jordan block (ones on the subdiagonal).
    RncNilpotent,
}

impl CatalogForm {
    pub fn name(&self) -> String {
        match self {
            CatalogForm::Lr2(r) => format!("L_r2(r={r})"),
            CatalogForm::L1 => "L1".into(),
            CatalogForm::L0 => "L0".into(),
            CatalogForm::RncDiagonal => "RNC-diagonal".into(),
            CatalogForm::RncNilpotent => "RNC-nilpotent".into(),
        }
    }

    /// All five forms, with `L_{r²}` at a symbolic `r`.
    pub fn all() -> Vec<CatalogForm> {
        vec![
            CatalogForm::Lr2(RatFunc::named("r")),
            CatalogForm::L1,
            CatalogForm::L0,
            CatalogForm::RncDiagonal,
            CatalogForm::RncNilpotent,
        ]
    }

    pub fn matrix(&self) -> MatF {
        match self {
            CatalogForm::Lr2(r) => MatF::diag(&[r.clone(), RatFunc::one(), -RatFunc::one(), -r]),
            CatalogForm::L1 => {
                MatF::from_i64(&[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 1], &[0, 0, 0, -1]])
            }
            CatalogForm::L0 => {
                MatF::from_i64(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 0], &[0, 0, 0, -1]])
            }
            CatalogForm::RncDiagonal => MatF::from_i64(&[
                &[3, 0, 0, 0],
                &[0, 1, 0, 0],
                &[0, 0, -1, 0],
                &[0, 0, 0, -3],
            ]),
            CatalogForm::RncNilpotent => {
                MatF::from_i64(&[&[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]])
            }
        }
    }

    /// Normalized base point: `(1,1,1,1)`, or `e₁` for the nilpotent form.
    pub fn base_point(&self) -> Vec<RatFunc> {
        match self {
            CatalogForm::RncNilpotent => vec![
                RatFunc::one(),
                RatFunc::zero(),
                RatFunc::zero(),
                RatFunc::zero(),
            ],
            _ => vec![RatFunc::one(); 4],
        }
    }

    pub fn spec(&self) -> CurveSpec {
        CurveSpec::new(self.matrix(), self.base_point())
    }

    /// The compatible symplectic form listed with the normal form.
    pub fn sigma_table(&self) -> MatF {
        match self {
            CatalogForm::Lr2(r) => {
                let z = RatFunc::zero;
                let one = RatFunc::one;
                Mat::from_rows(vec![
                    vec![z(), z(), z(), one()],
                    vec![z(), z(), -r, z()],
                    vec![z(), r.clone(), z(), z()],
                    vec![-one(), z(), z(), z()],
                ])
                .expect("4x4")
            }
            CatalogForm::L1 => MatF::from_i64(&[
                &[0, 0, 0, 1],
                &[0, 0, -1, -1],
                &[0, 1, 0, 0],
                &[-1, 1, 0, 0],
            ]),
            CatalogForm::L0 => MatF::from_i64(&[
                &[0, 0, 0, 1],
                &[0, 0, -2, 0],
                &[0, 2, 0, 0],
                &[-1, 0, 0, 0],
            ]),
            CatalogForm::RncDiagonal => MatF::from_i64(&[
                &[0, 0, 0, 1],
                &[0, 0, -3, 0],
                &[0, 3, 0, 0],
                &[-1, 0, 0, 0],
            ]),
            CatalogForm::RncNilpotent => MatF::from_i64(&[
                &[0, 0, 0, 1],
                &[0, 0, -1, 0],
                &[0, 1, 0, 0],
                &[-1, 0, 0, 0],
            ]),
        }
    }

    /// Nondegeneracy condition on a base point `z̃` for this form.
    pub fn admissibility_condition(&self, z: &[RatFunc]) -> RatFunc {
        match self {
            CatalogForm::Lr2(_) | CatalogForm::RncDiagonal => &(&z[0] * &z[1]) * &(&z[2] * &z[3]),
            CatalogForm::L1 => &z[1] * &z[3],
            CatalogForm::L0 => &(&z[0] * &z[2]) * &z[3],
            CatalogForm::RncNilpotent => z[0].clone(),
        }
    }

    /// `P` commuting with the normal form and sending the normalized base
    /// point to `z̃`.
    pub fn normalize_basepoint(&self, z: &[RatFunc]) -> Result<MatF> {
        if z.len() != 4 {
            return Err(Error::DimensionMismatch("base point must have length 4".into()));
        }
        if self.admissibility_condition(z).is_zero() {
            return Err(Error::Inadmissible);
        }
        let o = RatFunc::zero;
        let p = match self {
            CatalogForm::Lr2(_) | CatalogForm::RncDiagonal => MatF::diag(z),
            CatalogForm::L1 => Mat::from_rows(vec![
                vec![z[1].clone(), &z[0] - &z[1], o(), o()],
                vec![o(), z[1].clone(), o(), o()],
                vec![o(), o(), z[3].clone(), &z[2] - &z[3]],
                vec![o(), o(), o(), z[3].clone()],
            ])?,
            CatalogForm::L0 => Mat::from_rows(vec![
                vec![z[0].clone(), o(), o(), o()],
                vec![o(), z[2].clone(), &z[1] - &z[2], o()],
                vec![o(), o(), z[2].clone(), o()],
                vec![o(), o(), o(), z[3].clone()],
            ])?,
            CatalogForm::RncNilpotent => Mat::from_fn(4, 4, |i, j| {
                if i >= j {
                    z[i - j].clone()
                } else {
                    RatFunc::zero()
                }
            }),
        };
        Ok(p)
    }
}

/// `(⋆)`: minimal and characteristic polynomials agree.
pub fn check_star(a: &MatF) -> Result<bool> {
    Ok(minpoly(a)? == charpoly(a)?)
}

/// `z, Az, A²z, A³z` span the space.
pub fn admissible(spec: &CurveSpec) -> Result<bool> {
    Ok(spec.osculating_matrix()?.rank() == 4)
}

/// Skew `Σ` with `AᵀΣ + ΣA = 0` and `Σ(γ, γ') ≡ 0`, normalized so that the
/// `(1,4)` entry is 1 (or the first nonzero entry, if that one vanishes).
pub fn compatible_sigma(spec: &CurveSpec) -> Result<MatF> {
    spec.check_shape()?;
    if !admissible(spec)? {
        return Err(Error::Inadmissible);
    }
    let pairs: Vec<(usize, usize)> = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .collect();
    let vars: Vec<Var> = pairs
        .iter()
        .map(|(i, j)| Var::new(&format!("sigma{}{}", i + 1, j + 1)))
        .collect();
    let sigma_sym = Mat::from_fn(4, 4, |i, j| {
        if i == j {
            return RatFunc::zero();
        }
        let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
        let k = pairs.iter().position(|p| *p == (a, b)).expect("pair");
        RatFunc::var(vars[k]).scale(&crate::exact::int(sign))
    });

    let mut rows = linear_rows(
        &(&(&spec.a.transpose() * &sigma_sym) + &(&sigma_sym * &spec.a)),
        &vars,
    )?;
    let gamma = exp_orbit(&spec.a, &spec.z, None)?;
    let dgamma: Vec<ExpPoly> = gamma.iter().map(ExpPoly::derivative).collect();
    let mut legendre = ExpPoly::zero();
    for i in 0..4 {
        for j in 0..4 {
            let s = &sigma_sym[(i, j)];
            if !s.is_zero() {
                legendre = &legendre + &(&gamma[i] * &dgamma[j]).scale(s);
            }
        }
    }
    rows.extend(ep_equations(&[legendre], &vars)?);
    let (_, null) = rank_nullspace(&Mat::from_rows(rows)?);
    if null.len() != 1 {
        return Err(Error::SigmaDimension(null.len()));
    }
    let v = &null[0];
    let mut sigma = MatF::zeros(4, 4);
    for (k, (i, j)) in pairs.iter().enumerate() {
        sigma[(*i, *j)] = v[k].clone();
        sigma[(*j, *i)] = -&v[k];
    }
    let pivot = if !sigma[(0, 3)].is_zero() {
        sigma[(0, 3)].clone()
    } else {
        pairs
            .iter()
            .map(|(i, j)| sigma[(*i, *j)].clone())
            .find(|x| !x.is_zero())
            .expect("nonzero solution")
    };
    Ok(sigma.scale(&pivot.inv()?))
}

/// Rows of the homogeneous linear system `entries(M) = 0`, where each entry
/// of `M` is a linear form in `vars`.
fn linear_rows(m: &MatF, vars: &[Var]) -> Result<Vec<Vec<RatFunc>>> {
    let conds: Vec<ExpPoly> = m.entries().iter().map(|x| ExpPoly::poly(x.clone())).collect();
    ep_equations(&conds, vars)
}

/// Classification verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum CurveKind {
    RationalNormal,
    Lclass,
}

/// A representative `(A, σ, z)` of a class.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Representative {
    pub form: String,
    #[serde(rename = "A")]
    pub a: MatF,
    pub sigma: MatF,
    #[serde(with = "serial::vec_string")]
    pub z: Vec<RatFunc>,
}

impl Representative {
    fn of(form: &CatalogForm) -> Representative {
        Representative {
            form: form.name(),
            a: form.matrix(),
            sigma: form.sigma_table(),
            z: form.base_point(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveClass {
    pub kind: CurveKind,
    /// `c₂²/(9c₂² - 100c₀)`; absent for the rational normal class.
    #[serde(
        rename = "I",
        with = "serial::opt_string",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub invariant_cls: Option<RatFunc>,
    /// A rational `r²` label (the root with `|r²| ≥ 1`), when one exists.
    #[serde(
        with = "opt_rat",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub r_squared: Option<Rat>,
    /// Present when an exact normal form can be named.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representative: Option<Representative>,
}

mod opt_rat {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<Rat>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match x {
            Some(q) => s.serialize_str(&rat_to_string(q)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Rat>, D::Error> {
        let s = Option::<String>::deserialize(d)?;
        s.map(|s| crate::exact::parse_rat(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// `𝓘(x) = (x+1)²/((x-9)(9x-1))` for the label `x = r²`.
pub fn invariant_of_label(x: &RatFunc) -> Result<RatFunc> {
    let one = RatFunc::one();
    let num = (x + &one).pow(2);
    let den = &(x - &RatFunc::from_int(9)) * &(&x.scale(&crate::exact::int(9)) - &one);
    num.div(&den)
}

/// Rational solutions `x` of `(x+1)² = I·(x-9)(9x-1)`, preferring `|x| ≥ 1`.
pub fn label_from_invariant(i: &Rat) -> Option<Rat> {
    let nine = Rat::from_integer(9.into());
    let a = &nine * i - Rat::one();
    let b = -(Rat::from_integer(82.into()) * i + Rat::from_integer(2.into()));
    if a.is_zero() {
        // linear: b x = 0
        return Some(Rat::zero());
    }
    let disc = &b * &b - Rat::from_integer(4.into()) * &a * &a;
    let s = rat_sqrt(&disc)?;
    let two_a = Rat::from_integer(2.into()) * &a;
    let x1 = (-&b + &s) / &two_a;
    let x2 = (-&b - &s) / &two_a;
    Some(if x1.abs() >= Rat::one() { x1 } else { x2 })
}

/// Classifies `(A, z)` through the even characteristic polynomial
/// `s⁴ + c₂s² + c₀`.
pub fn classify(spec: &CurveSpec) -> Result<CurveClass> {
    spec.check_shape()?;
    let ch = charpoly(&spec.a)?;
    if !ch.is_even() {
        return Err(Error::AsymmetricSpectrum);
    }
    if minpoly(&spec.a)? != ch {
        return Err(Error::Derogatory);
    }
    if !admissible(spec)? {
        return Err(Error::Inadmissible);
    }
    let (c2, c0) = (ch.coeff(2), ch.coeff(0));
    let (rnc, inv) = class_invariant_from_charpoly(&c2, &c0);
    if rnc {
        return Ok(CurveClass {
            kind: CurveKind::RationalNormal,
            invariant_cls: None,
            r_squared: None,
            representative: Some(Representative::of(&CatalogForm::RncDiagonal)),
        });
    }
    let inv = inv.expect("defined off the rational normal class");
    let r_squared = inv.as_constant().and_then(|i| label_from_invariant(&i));
    let representative = representative_for(r_squared.as_ref(), &spec.a);
    Ok(CurveClass {
        kind: CurveKind::Lclass,
        invariant_cls: Some(inv),
        r_squared,
        representative,
    })
}

fn representative_for(x: Option<&Rat>, a: &MatF) -> Option<Representative> {
    if let Some(x) = x {
        if x.is_zero() {
            return Some(Representative::of(&CatalogForm::L0));
        }
        if x.is_one() {
            return Some(Representative::of(&CatalogForm::L1));
        }
        if let Some(r) = rat_sqrt(x) {
            return Some(Representative::of(&CatalogForm::Lr2(RatFunc::constant(r))));
        }
    }
    // diag(α, β, -β, -α) rescales to diag(α/β, 1, -1, -α/β)
    let is_diag = (0..4).all(|i| (0..4).all(|j| i == j || a[(i, j)].is_zero()));
    if is_diag && !a[(1, 1)].is_zero() && a[(2, 2)] == -&a[(1, 1)] && a[(3, 3)] == -&a[(0, 0)] {
        let r = a[(0, 0)].div(&a[(1, 1)]).ok()?;
        return Some(Representative::of(&CatalogForm::Lr2(r)));
    }
    None
}

/// Whether two `r²` labels name the same class: `a = b` or `ab = 1`.
pub fn equivalent(a: &Rat, b: &Rat) -> Result<bool> {
    let nine = Rat::from_integer(9.into());
    let ninth = nine.recip();
    for x in [a, b] {
        if *x == nine || *x == ninth {
            return Err(Error::RationalNormalLabel(rat_to_string(x)));
        }
    }
    Ok(a == b || (a * b).is_one())
}

/// Dimension of `{u ∈ 𝔠𝔰𝔭(σ) : uγ ∧ γ ∧ γ' ≡ 0}` for a triangular `A`.
pub fn aut_dimension(spec: &CurveSpec) -> Result<usize> {
    Ok(aut_algebra(spec)?.len())
}

/// Basis of the infinitesimal symmetries as 4×4 matrices.
pub fn aut_algebra(spec: &CurveSpec) -> Result<Vec<MatF>> {
    let sigma = compatible_sigma(spec)?;
    let (u, mut vars) = unknown_matrix("aut_u", 4);
    let scale_var = Var::new("aut_lambda");
    vars.push(scale_var);

    let gamma = exp_orbit(&spec.a, &spec.z, None)?;
    let dgamma: Vec<ExpPoly> = gamma.iter().map(ExpPoly::derivative).collect();
    let ugamma: Vec<ExpPoly> = (0..4)
        .map(|i| {
            let mut acc = ExpPoly::zero();
            for (j, g) in gamma.iter().enumerate() {
                acc = &acc + &g.scale(&u[(i, j)]);
            }
            acc
        })
        .collect();
    let minors = wedge3(&ugamma, &gamma, &dgamma)?;
    let mut rows = ep_equations(&minors, &vars)?;
    let csp = &(&(&u.transpose() * &sigma) + &(&sigma * &u))
        - &sigma.scale(&RatFunc::var(scale_var));
    rows.extend(linear_rows(&csp, &vars)?);
    let (_, null) = rank_nullspace(&Mat::from_rows(rows)?);
    Ok(null
        .into_iter()
        .map(|v| Mat::from_fn(4, 4, |i, j| v[4 * i + j].clone()))
        .collect())
}

/// Class of the curve attached to two spheres rolling with radius ratio `ρ`.
pub fn rolling_class(rho: &Rat) -> Result<CurveClass> {
    if rho.is_zero() {
        return Err(Error::Invalid("radius ratio must be nonzero".into()));
    }
    let x = rho * rho;
    let nine = Rat::from_integer(9.into());
    if x == nine || x == nine.recip() {
        return Ok(CurveClass {
            kind: CurveKind::RationalNormal,
            invariant_cls: None,
            r_squared: None,
            representative: Some(Representative::of(&CatalogForm::RncDiagonal)),
        });
    }
    let inv = invariant_of_label(&RatFunc::constant(x.clone()))?;
    let rep = representative_for(Some(&x), &MatF::zeros(4, 4));
    Ok(CurveClass {
        kind: CurveKind::Lclass,
        invariant_cls: Some(inv),
        r_squared: Some(x),
        representative: rep,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, rf};

    fn ones() -> Vec<RatFunc> {
        vec![RatFunc::one(); 4]
    }

    #[test]
    fn star_examples() {
        assert!(check_star(&CatalogForm::Lr2(rf("r")).matrix()).unwrap());
        assert!(!check_star(&MatF::diag(&[rf("1"), rf("1"), rf("-1"), rf("-1")])).unwrap());
        assert!(check_star(&CatalogForm::RncNilpotent.matrix()).unwrap());
    }

    #[test]
    fn admissibility_examples() {
        let a = CatalogForm::Lr2(rf("r")).matrix();
        assert!(admissible(&CurveSpec::new(a.clone(), ones())).unwrap());
        let z = vec![rf("1"), rf("1"), rf("1"), rf("0")];
        assert!(!admissible(&CurveSpec::new(a, z)).unwrap());
        let z = vec![rf("1"), rf("1"), rf("0"), rf("1")];
        assert!(!admissible(&CurveSpec::new(CatalogForm::L0.matrix(), z)).unwrap());
    }

    #[test]
    fn sigma_matches_tables() {
        for form in CatalogForm::all() {
            let s = compatible_sigma(&form.spec()).unwrap();
            assert_eq!(s, form.sigma_table(), "{}", form.name());
        }
    }

    #[test]
    fn classify_examples() {
        let rnc = classify(&CatalogForm::RncDiagonal.spec()).unwrap();
        assert_eq!(rnc.kind, CurveKind::RationalNormal);
        let nil = classify(&CatalogForm::RncNilpotent.spec()).unwrap();
        assert_eq!(nil.kind, CurveKind::RationalNormal);
        let l4 = classify(&CurveSpec::new(
            MatF::diag(&[rf("2"), rf("1"), rf("-1"), rf("-2")]),
            ones(),
        ))
        .unwrap();
        assert_eq!(l4.invariant_cls, Some(rf("-1/7")));
        assert_eq!(l4.r_squared, Some(int(4)));
    }

    #[test]
    fn classify_errors() {
        let asym = MatF::diag(&[rf("1"), rf("2"), rf("3"), rf("4")]);
        assert_eq!(
            classify(&CurveSpec::new(asym, ones())),
            Err(Error::AsymmetricSpectrum)
        );
        let der = MatF::diag(&[rf("1"), rf("1"), rf("-1"), rf("-1")]);
        assert_eq!(classify(&CurveSpec::new(der, ones())), Err(Error::Derogatory));
        let z = vec![rf("1"), rf("0"), rf("1"), rf("1")];
        assert_eq!(
            classify(&CurveSpec::new(CatalogForm::L1.matrix(), z)),
            Err(Error::Inadmissible)
        );
    }

    #[test]
    fn label_equivalence() {
        assert!(equivalent(&int(4), &rat(1, 4)).unwrap());
        assert!(equivalent(&int(4), &int(4)).unwrap());
        assert!(!equivalent(&int(4), &int(2)).unwrap());
        assert!(matches!(
            equivalent(&int(9), &int(2)),
            Err(Error::RationalNormalLabel(_))
        ));
    }

    #[test]
    fn label_recovery() {
        assert_eq!(label_from_invariant(&rat(-1, 7)), Some(int(4)));
        assert_eq!(label_from_invariant(&rat(-1, 16)), Some(int(1)));
        assert_eq!(label_from_invariant(&rat(1, 9)), Some(int(0)));
    }

    #[test]
    fn normalization_examples() {
        let z: Vec<RatFunc> = ["2", "3", "5", "7"].iter().map(|s| rf(s)).collect();
        let p = CatalogForm::Lr2(rf("r")).normalize_basepoint(&z).unwrap();
        assert_eq!(p, MatF::diag(&z));
        let e1 = CatalogForm::RncNilpotent.base_point();
        let p = CatalogForm::RncNilpotent.normalize_basepoint(&e1).unwrap();
        assert_eq!(p, MatF::identity(4));
        let zs: Vec<RatFunc> = ["z1", "z2", "z3", "z4"].iter().map(|s| rf(s)).collect();
        for form in CatalogForm::all() {
            let p = form.normalize_basepoint(&zs).unwrap();
            let a = form.matrix();
            assert_eq!(&p * &a, &a * &p, "{}", form.name());
            assert_eq!(p.mul_vec(&form.base_point()).unwrap(), zs, "{}", form.name());
        }
    }

    #[test]
    fn symmetry_dimensions() {
        assert_eq!(aut_dimension(&CatalogForm::Lr2(rf("r")).spec()).unwrap(), 2);
        assert_eq!(aut_dimension(&CatalogForm::Lr2(rf("3")).spec()).unwrap(), 4);
        assert_eq!(aut_dimension(&CatalogForm::L1.spec()).unwrap(), 2);
        assert_eq!(aut_dimension(&CatalogForm::L0.spec()).unwrap(), 2);
    }

    #[test]
    fn rolling_examples() {
        assert_eq!(rolling_class(&int(3)).unwrap().kind, CurveKind::RationalNormal);
        assert_eq!(rolling_class(&int(2)).unwrap().invariant_cls, Some(rf("-1/7")));
        assert_eq!(rolling_class(&int(1)).unwrap().invariant_cls, Some(rf("-1/16")));
        assert!(rolling_class(&int(0)).is_err());
    }
}
