//! The multiply-transitive (2,3,5) models `N7_c`, `N6`, `D6_a`: symmetry
//! algebras, their lifts to the projectivized distribution, the induced
//! Legendrian curve data and consistency checks between them.

mod tables;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{parse_ratfunc, serial, MPoly, RatFunc, Var};
use crate::legcurve::{admissible, CurveSpec};
use crate::liealg::FiltLieAlg;
use crate::linalg::{charpoly_minpoly, solve_linear, Mat, MatF, PolyInS, Solution};
use crate::ode4::{class_invariant_from_charpoly, q0_discriminant};

use tables::{LiftData, TableData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModelName {
    N7c,
    N6,
    D6a,
}

impl ModelName {
    pub const ALL: [ModelName; 3] = [ModelName::N7c, ModelName::N6, ModelName::D6a];

    fn table(self) -> &'static TableData {
        match self {
            ModelName::N7c => &tables::N7C,
            ModelName::N6 => &tables::N6,
            ModelName::D6a => &tables::D6A,
        }
    }

    fn lift(self) -> &'static LiftData {
        match self {
            ModelName::N7c => &tables::N7C_LIFT,
            ModelName::N6 => &tables::N6_LIFT,
            ModelName::D6a => &tables::D6A_LIFT,
        }
    }

    /// Name of the parameter (`c` or `a`), if the model has one.
    pub fn param_name(self) -> Option<&'static str> {
        self.table().param
    }
}

impl fmt::Display for ModelName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelName::N7c => "N7c",
            ModelName::N6 => "N6",
            ModelName::D6a => "D6a",
        })
    }
}

impl FromStr for ModelName {
    type Err = Error;
    fn from_str(s: &str) -> Result<ModelName> {
        match s {
            "N7c" | "N7_c" => Ok(ModelName::N7c),
            "N6" => Ok(ModelName::N6),
            "D6a" | "D6_a" => Ok(ModelName::D6a),
            _ => Err(Error::Invalid(format!("unknown model {s:?} (expected N7c, N6 or D6a)"))),
        }
    }
}

/// A symmetry algebra with its filtration indices.
#[derive(Clone, Debug, PartialEq)]
pub struct Model235 {
    pub name: ModelName,
    /// Value substituted for the parameter; `None` keeps it symbolic.
    pub param: Option<RatFunc>,
    pub algebra: FiltLieAlg,
}

fn coefficient(text: &str, param: Option<(&str, &RatFunc)>) -> Result<RatFunc> {
    let c = parse_ratfunc(text)?;
    match param {
        Some((name, value)) => c.substitute(Var::new(name), value),
        None => Ok(c),
    }
}

/// Builds a model and checks the Jacobi identity (symbolically when the
/// parameter is left free).
pub fn build_model(name: ModelName, param: Option<&RatFunc>) -> Result<Model235> {
    let table = name.table();
    let subst = match (table.param, param) {
        (Some(p), Some(v)) => Some((p, v)),
        (None, Some(_)) => {
            return Err(Error::Invalid(format!("model {name} has no parameter")));
        }
        _ => None,
    };
    let names: Vec<String> = table.basis.iter().map(|(n, _)| n.to_string()).collect();
    let degrees: Vec<i32> = table.basis.iter().map(|(_, d)| *d).collect();
    let idx = |s: &str| {
        names
            .iter()
            .position(|n| n == s)
            .ok_or_else(|| Error::Invalid(format!("unknown basis element {s}")))
    };
    let mut brackets = Vec::new();
    for (x, y, terms) in table.brackets {
        let mut v = vec![RatFunc::zero(); names.len()];
        for (coef, z) in terms.iter() {
            let k = idx(z)?;
            v[k] = &v[k] + &coefficient(coef, subst)?;
        }
        brackets.push((idx(x)?, idx(y)?, v));
    }
    let algebra = FiltLieAlg::new(names, degrees, brackets)?;
    if let Some(w) = algebra.jacobi_check() {
        return Err(Error::Jacobi(w.i, w.j, w.k));
    }
    Ok(Model235 {
        name,
        param: param.cloned(),
        algebra,
    })
}

impl Model235 {
    fn element(&self, terms: &[(&str, &str)]) -> Result<Vec<RatFunc>> {
        let subst = match (self.name.param_name(), &self.param) {
            (Some(p), Some(v)) => Some((p, v)),
            _ => None,
        };
        let mut v = vec![RatFunc::zero(); self.algebra.dim()];
        for (coef, z) in terms {
            let k = self
                .algebra
                .index_of(z)
                .ok_or_else(|| Error::Invalid(format!("unknown basis element {z}")))?;
            v[k] = &v[k] + &coefficient(coef, subst)?;
        }
        Ok(v)
    }

    /// Basis elements with filtration index `≥ d`.
    fn filtration_piece(&self, d: i32) -> Vec<Vec<RatFunc>> {
        (0..self.algebra.dim())
            .filter(|&i| self.algebra.degrees()[i] >= d)
            .map(|i| self.algebra.basis_vector(i))
            .collect()
    }

    /// Linear combination written with basis names.
    pub fn format_element(&self, v: &[RatFunc]) -> String {
        format_combination(self.algebra.names(), v)
    }
}

fn format_combination(names: &[String], v: &[RatFunc]) -> String {
    let mut out = String::new();
    for (c, n) in v.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let coef = c.to_string();
        let term = match coef.as_str() {
            "1" => n.clone(),
            "-1" => format!("-{n}"),
            s if s.contains(['+', '/']) || s[1..].contains('-') => format!("({s})*{n}"),
            s => format!("{s}*{n}"),
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Rank of a list of vectors.
fn rank(vs: &[Vec<RatFunc>]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    Mat::from_rows(vs.to_vec()).expect("equal lengths").rank()
}

fn in_span(span: &[Vec<RatFunc>], v: &[RatFunc]) -> bool {
    let mut ext = span.to_vec();
    ext.push(v.to_vec());
    rank(&ext) == rank(span)
}

/// Independent subset spanning the same space.
fn basis_of(vs: &[Vec<RatFunc>]) -> Vec<Vec<RatFunc>> {
    let mut out: Vec<Vec<RatFunc>> = Vec::new();
    for v in vs {
        if !in_span(&out, v) {
            out.push(v.clone());
        }
    }
    out
}

/// Weak derived flag `D¹ = d1`, `Dᵏ⁺¹ = Dᵏ + [D¹, Dᵏ]`, up to `steps` terms.
fn derived_flag(alg: &FiltLieAlg, d1: &[Vec<RatFunc>], steps: usize) -> Vec<Vec<Vec<RatFunc>>> {
    let mut flag = vec![basis_of(d1)];
    while flag.len() < steps {
        let last = flag.last().expect("nonempty").clone();
        let mut next = last.clone();
        for x in &flag[0] {
            for y in &last {
                next.push(alg.bracket(x, y));
            }
        }
        flag.push(basis_of(&next));
    }
    flag
}

/// Dimensions of `𝔣⁻¹/𝔣⁰, 𝔣⁻²/𝔣⁰, 𝔣⁻³/𝔣⁰` for the flag generated by
/// `⟨X₁, X₂⟩ + 𝔣⁰`.
pub fn growth_vector(m: &Model235) -> [usize; 3] {
    let f0 = m.filtration_piece(0);
    let d1 = m.filtration_piece(-1);
    let flag = derived_flag(&m.algebra, &d1, 3);
    let base = rank(&f0);
    [0, 1, 2].map(|k| rank(&flag[k]) - base)
}

/// A model together with a generic line `ℓ ∈ ℙ(𝔣⁻¹/𝔣⁰)` and the induced
/// filtration of the lifted algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftedModel {
    pub base: Model235,
    pub e_gen: Vec<RatFunc>,
    pub v_gen: Vec<RatFunc>,
    pub f0_lift: Vec<Vec<RatFunc>>,
    /// Pieces `𝔣̃⁻¹ ⊂ 𝔣̃⁻² ⊂ … ⊂ 𝔣̃⁻⁵` as spanning lists (each contains `𝔣̃⁰`).
    pub filtration: Vec<Vec<Vec<RatFunc>>>,
    /// Basis of `𝔣̃⁻⁴/(𝔣̃⁰ + E)` in the printed order.
    pub quotient_basis: Vec<Vec<RatFunc>>,
}

impl LiftedModel {
    /// `dim 𝔣̃⁻ⁱ/𝔣̃⁰` for `i = 1..5`.
    pub fn quotient_dims(&self) -> Vec<usize> {
        let base = rank(&self.f0_lift);
        self.filtration.iter().map(|p| rank(p) - base).collect()
    }

    pub fn names(&self) -> Vec<String> {
        self.quotient_basis
            .iter()
            .map(|v| self.base.format_element(v))
            .collect()
    }
}

/// Lifts the model using the tabulated data and checks that the filtration
/// generated by `𝔣̃⁰ + ⟨E, V⟩` has the tabulated successive pieces.
pub fn lift_model(m: &Model235) -> Result<LiftedModel> {
    let data = m.name.lift();
    let f0: Vec<Vec<RatFunc>> = data.f0.iter().map(|t| m.element(t)).collect::<Result<_>>()?;
    let e = m.element(data.e)?;
    let v = m.element(data.v)?;
    let mut d1 = f0.clone();
    d1.push(e.clone());
    d1.push(v.clone());
    let flag = derived_flag(&m.algebra, &d1, 5);

    // tabulated pieces: f0 + <E,V>, then one representative per step
    let mut expected = d1.clone();
    for (k, step) in data.steps.iter().enumerate() {
        expected.push(m.element(step)?);
        if rank(&expected) != rank(&flag[k + 1]) || !flag[k + 1].iter().all(|x| in_span(&expected, x))
        {
            return Err(Error::Invalid(format!(
                "lifted filtration of {} differs from the tabulated piece in degree -{}",
                m.name,
                k + 2
            )));
        }
    }
    // f0 must be a subalgebra preserving every piece
    for x in &f0 {
        for piece in &flag {
            if piece.iter().any(|y| !in_span(piece, &m.algebra.bracket(x, y))) {
                return Err(Error::Invalid("lifted isotropy does not preserve the filtration".into()));
            }
        }
    }
    let quotient_basis = data.quotient.iter().map(|t| m.element(t)).collect::<Result<_>>()?;
    Ok(LiftedModel {
        base: m.clone(),
        e_gen: e,
        v_gen: v,
        f0_lift: f0,
        filtration: flag,
        quotient_basis,
    })
}

/// Matrix of `ad(E)` on `𝔣̃⁻⁴/(𝔣̃⁰ + E)`, its characteristic polynomial and
/// the base point `V mod (𝔣̃⁰ + E)`.
#[derive(Clone, Debug, PartialEq)]
pub struct EAction {
    pub a: MatF,
    pub f_a: PolyInS<RatFunc>,
    pub minpoly_equals_charpoly: bool,
    pub base_point: Vec<RatFunc>,
}

/// Coordinates of `x` in `basis` modulo `ideal`; `None` if `x` is not in
/// their span.
fn reduce(basis: &[Vec<RatFunc>], ideal: &[Vec<RatFunc>], x: &[RatFunc]) -> Result<Option<Vec<RatFunc>>> {
    let mut cols: Vec<Vec<RatFunc>> = basis.to_vec();
    cols.extend(basis_of(ideal));
    let m = Mat::from_cols(&cols)?;
    Ok(match solve_linear(&m, x)? {
        Solution::None => None,
        Solution::Unique(v) => Some(v[..basis.len()].to_vec()),
        Solution::Family { .. } => {
            return Err(Error::Invalid("quotient basis is not independent modulo f0 + E".into()))
        }
    })
}

pub fn e_action_matrix(lm: &LiftedModel) -> Result<EAction> {
    let mut ideal = lm.f0_lift.clone();
    ideal.push(lm.e_gen.clone());
    let d4 = &lm.filtration[3];
    let q = rank(d4) - rank(&basis_of(&ideal));
    if q != 4 || lm.quotient_basis.len() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "quotient has dimension {q}, expected 4"
        )));
    }
    let mut cols = Vec::with_capacity(4);
    for b in &lm.quotient_basis {
        let image = lm.base.algebra.bracket(&lm.e_gen, b);
        let coords = reduce(&lm.quotient_basis, &ideal, &image)?
            .ok_or_else(|| Error::Invalid("E does not preserve the degree -4 piece".into()))?;
        cols.push(coords);
    }
    let a = Mat::from_cols(&cols)?;
    let (f_a, mp) = charpoly_minpoly(&a)?;
    let base_point = reduce(&lm.quotient_basis, &ideal, &lm.v_gen)?
        .ok_or_else(|| Error::Invalid("V is not in the degree -4 piece".into()))?;
    Ok(EAction {
        minpoly_equals_charpoly: mp == f_a,
        a,
        f_a,
        base_point,
    })
}

/// `q₀ ≠ 0` and `𝓘_cls` of the curve induced by a model.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelInvariants {
    pub q0_nonzero: bool,
    #[serde(rename = "I", with = "serial::opt_string")]
    pub i_cls: Option<RatFunc>,
}

pub fn model_invariants(name: ModelName, param: Option<&RatFunc>) -> Result<ModelInvariants> {
    let lm = lift_model(&build_model(name, param)?)?;
    let act = e_action_matrix(&lm)?;
    let (rnc, i) = class_invariant_from_charpoly(&act.f_a.coeff(2), &act.f_a.coeff(0));
    Ok(ModelInvariants {
        q0_nonzero: !rnc,
        i_cls: i,
    })
}

/// A subspace element whose bracket leaves the target.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub element: String,
    pub bracket: String,
}

/// Filtered-level Cauchy characteristic checks for `E` and `V`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CauchyReport {
    /// `[V, 𝔣̃⁻²] ⊆ 𝔣̃⁻²`.
    pub v_preserves_d2: bool,
    /// `[E, 𝔣̃⁻⁴] ⊆ 𝔣̃⁻⁴`.
    pub e_preserves_d4: bool,
    /// Element of `𝔣̃⁻²` moved out by `E`.
    pub e_moves_d2: Option<Witness>,
    /// Element of `𝔣̃⁻⁴` moved out by `V`.
    pub v_moves_d4: Option<Witness>,
    /// Number of flag steps until `⟨E, V⟩` generates everything mod `𝔣̃⁰`.
    pub generation_depth: usize,
    pub dim_quotient: usize,
}

impl CauchyReport {
    pub fn passed(&self) -> bool {
        self.v_preserves_d2
            && self.e_preserves_d4
            && self.e_moves_d2.is_some()
            && self.v_moves_d4.is_some()
            && self.generation_depth == 5
    }
}

pub fn cauchy_char_check(lm: &LiftedModel) -> CauchyReport {
    let alg = &lm.base.algebra;
    let d2 = &lm.filtration[1];
    let d4 = &lm.filtration[3];
    let preserves = |x: &[RatFunc], piece: &[Vec<RatFunc>]| {
        piece.iter().all(|y| in_span(piece, &alg.bracket(x, y)))
    };
    let moves = |x: &[RatFunc], piece: &[Vec<RatFunc>]| {
        piece.iter().find_map(|y| {
            let b = alg.bracket(x, y);
            (!in_span(piece, &b)).then(|| Witness {
                element: lm.base.format_element(y),
                bracket: lm.base.format_element(&b),
            })
        })
    };
    let total = alg.dim() - rank(&lm.f0_lift);
    let base = rank(&lm.f0_lift);
    let depth = lm
        .filtration
        .iter()
        .position(|p| rank(p) - base == total)
        .map_or(usize::MAX, |k| k + 1);
    CauchyReport {
        v_preserves_d2: preserves(&lm.v_gen, d2),
        e_preserves_d4: preserves(&lm.e_gen, d4),
        e_moves_d2: moves(&lm.e_gen, d2),
        v_moves_d4: moves(&lm.v_gen, d4),
        generation_depth: depth,
        dim_quotient: total,
    }
}

/// Replaces `v²` by `value` in a rational function that is even in `v`.
pub fn substitute_square(f: &RatFunc, v: Var, value: &RatFunc) -> Result<RatFunc> {
    let even = |p: &MPoly| -> Result<RatFunc> {
        let mut acc = RatFunc::zero();
        for (k, c) in p.coeffs_in(v).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k % 2 == 1 {
                return Err(Error::Invalid(format!("not even in {}", v.name())));
            }
            acc = &acc + &(&RatFunc::from_poly(c.clone()) * &value.pow((k / 2) as u32));
        }
        Ok(acc)
    };
    even(f.num())?.div(&even(f.den())?)
}

/// Symbolic comparison of the curve invariants of the three models.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossReport {
    #[serde(with = "serial::as_string")]
    pub i_n7c: RatFunc,
    #[serde(with = "serial::as_string")]
    pub i_n6: RatFunc,
    #[serde(with = "serial::as_string")]
    pub i_d6a: RatFunc,
    /// `𝓘(D6_a)` with `a² = -6c²`.
    #[serde(with = "serial::as_string")]
    pub d6a_at_minus_6c2: RatFunc,
    /// `𝓘(N7_c)` at `c² = 6/7`.
    #[serde(with = "serial::as_string")]
    pub n7c_at_c2: RatFunc,
    /// `𝓘(D6_a)` at `a² = -36/7`.
    #[serde(with = "serial::as_string")]
    pub d6a_at_a2: RatFunc,
    pub all_match: bool,
}

pub fn cross_equivalences() -> Result<CrossReport> {
    let inv = |n| -> Result<RatFunc> {
        model_invariants(n, None)?
            .i_cls
            .ok_or_else(|| Error::Invalid(format!("model {n} gives a rational normal curve")))
    };
    let (i7, i6, id) = (inv(ModelName::N7c)?, inv(ModelName::N6)?, inv(ModelName::D6a)?);
    let (c, a) = (Var::new("c"), Var::new("a"));
    let c2 = RatFunc::var(c).pow(2);
    let d6a_at = substitute_square(&id, a, &c2.scale(&crate::exact::int(-6)))?;
    let n7c_at = substitute_square(&i7, c, &crate::exact::rf("6/7"))?;
    let d6a_at_a2 = substitute_square(&id, a, &crate::exact::rf("-36/7"))?;
    let all_match = d6a_at == i7 && n7c_at == i6 && d6a_at_a2 == i6;
    Ok(CrossReport {
        i_n7c: i7,
        i_n6: i6,
        i_d6a: id,
        d6a_at_minus_6c2: d6a_at,
        n7c_at_c2: n7c_at,
        d6a_at_a2,
        all_match,
    })
}

/// One row of the model tables: the symmetry generator, its polynomial and
/// the curve invariant, with the dimension count behind local flatness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelRow {
    pub name: ModelName,
    #[serde(with = "serial::opt_string", default)]
    pub param: Option<RatFunc>,
    pub basis: Vec<String>,
    #[serde(rename = "A")]
    pub a: MatF,
    #[serde(rename = "fA")]
    pub f_a: String,
    pub q0_nonzero: bool,
    #[serde(rename = "I", with = "serial::opt_string")]
    pub i_cls: Option<RatFunc>,
    /// Base point `V` in the quotient basis.
    #[serde(with = "serial::vec_string")]
    pub base_point: Vec<RatFunc>,
    pub admissible: bool,
    pub dim_f: usize,
    /// Symmetry dimension of the induced curve (2 off the rational normal
    /// class, 4 on it).
    pub dim_aut_curve: usize,
    /// `dim 𝔣 = 5 + dim 𝔞𝔲𝔱(Z)`.
    pub dimension_count_flat: bool,
}

pub fn model_row(name: ModelName, param: Option<&RatFunc>) -> Result<ModelRow> {
    let m = build_model(name, param)?;
    let lm = lift_model(&m)?;
    let act = e_action_matrix(&lm)?;
    let (rnc, i) = class_invariant_from_charpoly(&act.f_a.coeff(2), &act.f_a.coeff(0));
    let adm = admissible(&CurveSpec::new(act.a.clone(), act.base_point.clone()))?;
    let dim_aut_curve = if rnc { 4 } else { 2 };
    Ok(ModelRow {
        name,
        param: param.cloned(),
        basis: lm.names(),
        f_a: act.f_a.to_string(),
        q0_nonzero: !rnc && !q0_discriminant(&act.f_a.coeff(2), &act.f_a.coeff(0)).is_zero(),
        i_cls: i,
        base_point: act.base_point,
        admissible: adm,
        dim_f: m.algebra.dim(),
        dim_aut_curve,
        dimension_count_flat: m.algebra.dim() == 5 + dim_aut_curve,
        a: act.a,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rf;

    fn symbolic(n: ModelName) -> Model235 {
        build_model(n, None).unwrap()
    }

    #[test]
    fn tables_satisfy_jacobi() {
        for n in ModelName::ALL {
            let m = symbolic(n);
            assert!(m.algebra.is_filtered(), "{n}");
            assert_eq!(growth_vector(&m), [2, 3, 5], "{n}");
        }
        assert_eq!(symbolic(ModelName::N7c).algebra.dim(), 7);
        let d = build_model(ModelName::D6a, Some(&rf("1"))).unwrap();
        let i4 = d.algebra.index_of("X4").unwrap();
        let i5 = d.algebra.index_of("X5").unwrap();
        assert_eq!(d.format_element(d.algebra.bracket_basis(i4, i5)), "-2*X3");
    }

    #[test]
    fn transcription_error_detected() {
        let m = symbolic(ModelName::N7c);
        let (i1, i4) = (m.algebra.index_of("X1").unwrap(), m.algebra.index_of("X4").unwrap());
        let mut brackets = Vec::new();
        for i in 0..7 {
            for j in i + 1..7 {
                let mut v = m.algebra.bracket_basis(i, j).to_vec();
                if (i, j) == (i1, i4) {
                    v[m.algebra.index_of("X3").unwrap()] = RatFunc::zero();
                }
                brackets.push((i, j, v));
            }
        }
        let broken = FiltLieAlg::new(m.algebra.names().to_vec(), m.algebra.degrees().to_vec(), brackets).unwrap();
        assert!(broken.jacobi_check().is_some());
    }

    #[test]
    fn e_action_tables() {
        let expect = [
            (ModelName::N7c, "s^4-10c s^2+9c^2+6", "[[0,-3c,0,-1],[-1,0,-2c,0],[0,-2,0,c],[0,0,3,0]]"),
            (ModelName::N6, "s^4-60s^2+576", "[[0,-18,0,-42],[-1,0,-12,0],[0,-2,0,6],[0,0,3,0]]"),
            (ModelName::D6a, "s^4-20a s^2+36a^2-144", "[[0,-3a,0,-12],[-2,0,4a,0],[0,2,0,2a],[0,0,3,0]]"),
        ];
        for (n, f, a) in expect {
            let lm = lift_model(&symbolic(n)).unwrap();
            let act = e_action_matrix(&lm).unwrap();
            assert_eq!(act.f_a, PolyInS::parse(&f.replace(' ', "*")).unwrap(), "{n}");
            assert!(act.minpoly_equals_charpoly);
            assert_eq!(act.a.to_string().replace(['*', ' '], ""), a, "{n}");
            assert_eq!(lm.quotient_dims(), vec![2, 3, 4, 5, 6]);
        }
    }

    #[test]
    fn invariants_and_cross_checks() {
        let i = |n| model_invariants(n, None).unwrap();
        assert_eq!(i(ModelName::N7c).i_cls, Some(rf("-c^2/6")));
        assert_eq!(i(ModelName::N6).i_cls, Some(rf("-1/7")));
        assert_eq!(i(ModelName::D6a).i_cls, Some(rf("a^2/36")));
        assert!(cross_equivalences().unwrap().all_match);
    }

    #[test]
    fn cauchy_checks() {
        for n in ModelName::ALL {
            let r = cauchy_char_check(&lift_model(&symbolic(n)).unwrap());
            assert!(r.passed(), "{n}: {r:?}");
        }
    }

    #[test]
    fn rows() {
        let r = model_row(ModelName::N6, None).unwrap();
        assert_eq!(r.f_a, "s^4-60s^2+576");
        assert!(r.admissible && !r.dimension_count_flat);
        assert!(model_row(ModelName::N7c, None).unwrap().dimension_count_flat);
    }
}
