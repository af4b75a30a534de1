//! Self-contained invariant suites, one per module, driven by a seeded RNG.
//! Each check recomputes a value along an independent route and compares
//! exactly (or to a stated tolerance for the floating-point jet check).

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{int, rat, rf, MPoly, Monomial, Rat, RatFunc, Var};
use crate::exppoly::exp_orbit;
use crate::legcurve::{
    aut_dimension, classify, compatible_sigma, equivalent, invariant_of_label, CatalogForm,
    CurveKind, CurveSpec,
};
use crate::liealg::{
    contact_form_at, csp_scale, csp_to_derivation, delta_kernel, heis_build, heis_group,
    left_translation_jacobian, sym3_embed, tanaka_prolong, FiltLieAlg, Prolongation,
};
use crate::linalg::{charpoly, Mat, MatF, MatQ};
use crate::models235::{
    build_model, cauchy_char_check, cross_equivalences, e_action_matrix, growth_vector,
    lift_model, model_invariants, ModelName,
};
use crate::ode4::{
    general_transform_ode, legendrian_invariants, mobius_transform_q0, numeric_lf_reduce,
    q0_family, weight_ten_identity, weight_ten_invariant, Mobius, Ode4,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Exact,
    Linalg,
    Exppoly,
    Ode4,
    Legcurve,
    Liealg,
    Models235,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Exact,
        Suite::Linalg,
        Suite::Exppoly,
        Suite::Ode4,
        Suite::Legcurve,
        Suite::Liealg,
        Suite::Models235,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Exact => "exact",
            Suite::Linalg => "linalg",
            Suite::Exppoly => "exppoly",
            Suite::Ode4 => "ode4",
            Suite::Legcurve => "legcurve",
            Suite::Liealg => "liealg",
            Suite::Models235 => "models235",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

struct Recorder(Vec<Check>);

impl Recorder {
    fn check(&mut self, name: &str, outcome: Result<bool>) {
        let (passed, detail) = match outcome {
            Ok(b) => (b, String::new()),
            Err(e) => (false, e.to_string()),
        };
        self.0.push(Check {
            name: name.into(),
            passed,
            detail,
        });
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Recorder(Vec::new());
    match suite {
        Suite::Exact => exact_suite(&mut r, &mut rng),
        Suite::Linalg => linalg_suite(&mut r, &mut rng),
        Suite::Exppoly => exppoly_suite(&mut r),
        Suite::Ode4 => ode4_suite(&mut r, &mut rng),
        Suite::Legcurve => legcurve_suite(&mut r, &mut rng),
        Suite::Liealg => liealg_suite(&mut r, &mut rng),
        Suite::Models235 => models_suite(&mut r),
    }
    SuiteReport {
        suite,
        checks: r.0,
    }
}

pub fn run_all(seed: u64) -> Vec<SuiteReport> {
    Suite::ALL.iter().map(|&s| run_suite(s, seed)).collect()
}

/// Random rational with numerator in `[-n, n]` and denominator in `[1, d]`.
pub fn random_rat<R: Rng>(rng: &mut R, n: i64, d: i64) -> Rat {
    rat(rng.gen_range(-n..=n), rng.gen_range(1..=d))
}

/// Nonzero random rational.
pub fn random_nonzero_rat<R: Rng>(rng: &mut R, n: i64, d: i64) -> Rat {
    loop {
        let q = random_rat(rng, n, d);
        if q != int(0) {
            return q;
        }
    }
}

/// Random polynomial in `vars` with up to `terms` terms of degree `≤ deg`.
pub fn random_poly<R: Rng>(rng: &mut R, vars: &[Var], deg: u32, terms: usize) -> MPoly {
    let mut p = MPoly::zero();
    for _ in 0..terms {
        let mut m = Monomial::one();
        let mut left = rng.gen_range(0..=deg);
        for &v in vars {
            let e = rng.gen_range(0..=left);
            m.set(v, e);
            left -= e;
        }
        p = &p + &MPoly::monomial(m, random_rat(rng, 5, 3));
    }
    p
}

/// Random rational function in `vars` with a nonzero denominator.
pub fn random_ratfunc<R: Rng>(rng: &mut R, vars: &[Var]) -> RatFunc {
    let num = random_poly(rng, vars, 2, 3);
    loop {
        let den = random_poly(rng, vars, 2, 2);
        if !den.is_zero() {
            return RatFunc::new(num, den).expect("nonzero denominator");
        }
    }
}

pub fn random_matrix_q<R: Rng>(rng: &mut R, n: usize) -> MatQ {
    Mat::from_fn(n, n, |_, _| random_rat(rng, 6, 4))
}

/// Random Möbius map with small integer coefficients.
pub fn random_mobius<R: Rng>(rng: &mut R) -> Mobius {
    loop {
        let v: Vec<i64> = (0..4).map(|_| rng.gen_range(-4..=4)).collect();
        if v[0] * v[3] - v[1] * v[2] != 0 {
            let f = |x: i64| RatFunc::from_int(x);
            return Mobius::new(f(v[0]), f(v[1]), f(v[2]), f(v[3])).expect("nonsingular");
        }
    }
}

fn exact_suite<R: Rng>(r: &mut Recorder, rng: &mut R) {
    let vars = [Var::t(), Var::new("r"), Var::new("c")];
    let mut axioms = true;
    let mut canonical = true;
    let mut leibniz = true;
    let mut subst = true;
    let mut roundtrip = true;
    for _ in 0..40 {
        let (a, b, c) = (
            random_ratfunc(rng, &vars),
            random_ratfunc(rng, &vars),
            random_ratfunc(rng, &vars),
        );
        axioms &= &(&a + &b) + &c == &a + &(&b + &c);
        axioms &= &(&a * &b) * &c == &a * &(&b * &c);
        axioms &= &a * &(&b + &c) == &(&a * &b) + &(&a * &c);
        axioms &= &a * &b == &b * &a;
        axioms &= (&a + &(-&a)).is_zero();
        if !a.is_zero() {
            axioms &= (&a * &a.inv().expect("nonzero")).is_one();
        }
        canonical &= a.is_canonical() && (&a * &b).is_canonical();
        let t = Var::t();
        leibniz &= (&a * &b).derivative(t) == &(&a.derivative(t) * &b) + &(&a * &b.derivative(t));
        let val = RatFunc::constant(random_rat(rng, 7, 3));
        let r_var = Var::new("r");
        if let (Ok(x), Ok(y), Ok(z)) = (
            (&a * &b).substitute(r_var, &val),
            a.substitute(r_var, &val),
            b.substitute(r_var, &val),
        ) {
            subst &= x == &y * &z;
        }
        roundtrip &= crate::exact::parse_ratfunc(&a.to_string()).ok() == Some(a.clone());
    }
    r.check("field axioms on random rational functions", Ok(axioms));
    r.check("results are in canonical form", Ok(canonical));
    r.check("Leibniz rule", Ok(leibniz));
    r.check("substitution is multiplicative", Ok(subst));
    r.check("display and parse round trip", Ok(roundtrip));
    r.check(
        "integer-normalized display",
        Ok(rf("-c^2/6").to_string() == "-c^2/6" && rf("2/(4t)").to_string() == "1/(2*t)"),
    );
}

fn linalg_suite<R: Rng>(r: &mut Recorder, rng: &mut R) {
    let mut ch = true;
    let mut rank_t = true;
    let mut inv = true;
    for _ in 0..20 {
        let m = random_matrix_q(rng, 4);
        match charpoly(&m).and_then(|p| p.eval_matrix(&m)) {
            Ok(z) => ch &= z.is_zero(),
            Err(_) => ch = false,
        }
        rank_t &= m.rank() == m.transpose().rank();
        if let Ok(i) = m.inverse() {
            inv &= (&m * &i) == MatQ::identity(4);
        }
    }
    r.check("Cayley-Hamilton on random 4x4 matrices", Ok(ch));
    r.check("rank is transpose-invariant", Ok(rank_t));
    r.check("inverse is two-sided", Ok(inv));
    let sym = CatalogForm::Lr2(rf("r")).matrix();
    r.check(
        "Cayley-Hamilton for symbolic diag(r,1,-1,-r)",
        charpoly(&sym).and_then(|p| p.eval_matrix(&sym)).map(|z| z.is_zero()),
    );
}

/// Components of `exp(tA)z` solve `u'''' + c₂u'' + c₀u = 0`.
pub fn orbit_solves_ode(spec: &CurveSpec) -> Result<bool> {
    let gamma = exp_orbit(&spec.a, &spec.z, None)?;
    let ch = charpoly(&spec.a)?;
    let (c2, c0) = (ch.coeff(2), ch.coeff(0));
    let at_zero_ok = gamma
        .iter()
        .zip(&spec.z)
        .all(|(g, z)| g.at_zero().ok().as_ref() == Some(z));
    let solves = gamma.iter().all(|u| {
        let lhs = &(&u.nth_derivative(4) + &u.nth_derivative(2).scale(&c2)) + &u.scale(&c0);
        lhs.is_zero()
    });
    Ok(at_zero_ok && solves && ch.coeff(1).is_zero() && ch.coeff(3).is_zero())
}

fn exppoly_suite(r: &mut Recorder) {
    for form in CatalogForm::all() {
        r.check(
            &format!("orbit of {} solves its ODE", form.name()),
            orbit_solves_ode(&form.spec()),
        );
    }
}

fn ode4_suite<R: Rng>(r: &mut Recorder, rng: &mut R) {
    r.check("symbolic weight-10 identity", weight_ten_identity().map(|w| w.all()));
    let mut w4 = true;
    let mut w10 = true;
    let mut inv = true;
    for _ in 0..10 {
        let m = random_mobius(rng);
        let k = random_nonzero_rat(rng, 5, 2);
        let q0 = rf("t+1").div(&(&(&RatFunc::t() * &RatFunc::t()) + &RatFunc::constant(k)).pow(3));
        let Ok(q0) = q0 else { continue };
        let outcome = (|| -> Result<(bool, bool, bool)> {
            let new_q0 = mobius_transform_q0(&q0, &m)?;
            let ctd = &(&m.c * &RatFunc::t()) + &m.d;
            let mu = ctd.powi(-3)?;
            let ode = general_transform_ode(&Ode4::laguerre_forsyth(q0.clone()), &m.as_ratfunc(), &mu)?;
            let a = ode == Ode4::laguerre_forsyth(new_q0.clone());
            let lp = m.derivative();
            let r_old = weight_ten_invariant(&q0);
            let r_new = m.pull_back(&weight_ten_invariant(&new_q0))?;
            let b = &r_new * &lp.pow(10) == r_old;
            let i_old = legendrian_invariants(&q0).i_lit;
            let i_new = legendrian_invariants(&new_q0).i_lit.map(|i| m.pull_back(&i)).transpose()?;
            Ok((a, b, i_old == i_new))
        })();
        match outcome {
            Ok((a, b, c)) => {
                w4 &= a;
                w10 &= b;
                inv &= c;
            }
            Err(_) => {
                w4 = false;
            }
        }
    }
    r.check("q0 has weight 4 under random Möbius maps", Ok(w4));
    r.check("R has weight 10 under random Möbius maps", Ok(w10));
    r.check("I_lit is invariant under random Möbius maps", Ok(inv));
    r.check("family q0: R and sign of I", family_sign_check());
    let mut worst: f64 = 0.0;
    let mut lf_ok = true;
    for _ in 0..5 {
        let mag = rng.gen_range(1.0..10.0);
        let c2 = Complex64::from_polar(mag, rng.gen_range(0.0..std::f64::consts::TAU));
        let c0 = Complex64::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
        let ts: Vec<f64> = (0..5).map(|_| rng.gen_range(-0.3..0.3)).collect();
        match numeric_lf_reduce(c2, c0, &ts, false) {
            Ok(res) => worst = worst.max(res.max()),
            Err(_) => lf_ok = false,
        }
    }
    r.check(
        "jet Laguerre-Forsyth residuals below 1e-9",
        Ok(lf_ok && worst < 1e-9),
    );
}

/// On the family `q₀ = N/(t²+40c₂)⁴` with `N = -1600(9c₂² - 100c₀)`,
/// `𝓡 = -2560c₂N²(t²+40c₂)⁻¹⁰` and `I_lit` is the negative of the class
/// invariant.
pub fn family_sign_check() -> Result<bool> {
    let (c2, c0) = (rf("c2"), rf("c0"));
    let q0 = q0_family(&c2, &c0);
    let n = crate::ode4::q0_discriminant(&c2, &c0).scale(&int(-1600));
    let base = &(&RatFunc::t() * &RatFunc::t()) + &c2.scale(&int(40));
    let want_r = (&c2 * &n.pow(2)).scale(&int(-2560)).div(&base.pow(10))?;
    let rep = legendrian_invariants(&q0);
    let (_, i_cls) = crate::ode4::class_invariant_from_charpoly(&c2, &c0);
    Ok(rep.r == want_r
        && rep.i_lit.as_ref().map(|i| -i) == i_cls
        && rep.i_cls == i_cls
        && rep.i_lit_constant == Some(true))
}

fn legcurve_suite<R: Rng>(r: &mut Recorder, rng: &mut R) {
    for form in CatalogForm::all() {
        let spec = form.spec();
        r.check(
            &format!("sigma of {} matches its table", form.name()),
            compatible_sigma(&spec).map(|s| s == form.sigma_table()),
        );
    }
    let dims = [
        (CatalogForm::Lr2(rf("r")), 2),
        (CatalogForm::L1, 2),
        (CatalogForm::L0, 2),
        (CatalogForm::Lr2(rf("3")), 4),
    ];
    for (form, want) in dims {
        r.check(
            &format!("symmetry dimension of {}", form.name()),
            aut_dimension(&form.spec()).map(|d| d == want),
        );
    }
    let invariant = |f: CatalogForm| classify(&f.spec()).map(|c| c.invariant_cls);
    r.check("I(L1) = -1/16", invariant(CatalogForm::L1).map(|i| i == Some(rf("-1/16"))));
    r.check("I(L0) = 1/9", invariant(CatalogForm::L0).map(|i| i == Some(rf("1/9"))));
    r.check(
        "I(L_r2) formula",
        invariant(CatalogForm::Lr2(rf("r"))).map(|i| i == Some(rf("(r^2+1)^2/((r^2-9)(9r^2-1))"))),
    );
    r.check(
        "I(r^2) = I(1/r^2)",
        invariant_of_label(&rf("x")).and_then(|a| Ok(a == invariant_of_label(&rf("1/x"))?)),
    );
    let mut eq_ok = true;
    for k in 0..50 {
        let a = random_label(rng);
        let b = match k % 3 {
            0 => a.clone(),
            1 => a.recip(),
            _ => random_label(rng),
        };
        let ia = invariant_of_label(&RatFunc::constant(a.clone()));
        let ib = invariant_of_label(&RatFunc::constant(b.clone()));
        match (ia, ib, equivalent(&a, &b)) {
            (Ok(x), Ok(y), Ok(e)) => eq_ok &= (x == y) == e,
            _ => eq_ok = false,
        }
    }
    r.check("equal invariants iff a = b or ab = 1 (50 pairs)", Ok(eq_ok));
    let mut conj_ok = true;
    for _ in 0..5 {
        let p = random_matrix_q(rng, 4).map(|q| RatFunc::constant(q.clone()));
        let Ok(pinv) = p.inverse() else { continue };
        let form = CatalogForm::Lr2(RatFunc::constant(random_label(rng)));
        let spec = form.spec();
        let conj = CurveSpec::new(&(&p * &spec.a) * &pinv, p.mul_vec(&spec.z).expect("4x4"));
        match (classify(&spec), classify(&conj)) {
            (Ok(x), Ok(y)) => conj_ok &= x.kind == y.kind && x.invariant_cls == y.invariant_cls,
            _ => conj_ok = false,
        }
    }
    r.check("class is invariant under conjugation", Ok(conj_ok));
    r.check(
        "rational normal curve has q0 = 0",
        classify(&CatalogForm::Lr2(rf("3")).spec()).map(|c| c.kind == CurveKind::RationalNormal),
    );
}

/// A label `x ∉ {0, ±1, 9, 1/9}`.
fn random_label<R: Rng>(rng: &mut R) -> Rat {
    loop {
        let x = random_nonzero_rat(rng, 12, 5);
        let bad = [int(1), int(-1), int(9), rat(1, 9)];
        if !bad.contains(&x) {
            return x;
        }
    }
}

fn sym3_sigma() -> MatQ {
    MatQ::from_i64(&[&[0, 0, 0, 1], &[0, 0, -3, 0], &[0, 3, 0, 0], &[-1, 0, 0, 0]])
}

fn gl2_basis() -> Vec<MatQ> {
    (0..4)
        .map(|k| {
            let mut e = MatQ::zeros(2, 2);
            e[(k / 2, k % 2)] = int(1);
            e
        })
        .collect()
}

fn liealg_suite<R: Rng>(r: &mut Recorder, rng: &mut R) {
    let s = sym3_sigma();
    let mut hom = true;
    let mut csp = true;
    for _ in 0..10 {
        let x = random_matrix_q(rng, 2);
        let y = random_matrix_q(rng, 2);
        match (sym3_embed(&x), sym3_embed(&y), sym3_embed(&x.commutator(&y))) {
            (Ok(ex), Ok(ey), Ok(exy)) => {
                hom &= ex.commutator(&ey) == exy;
                csp &= csp_scale(&ex, &s).is_some();
            }
            _ => hom = false,
        }
    }
    r.check("Sym3 embedding preserves brackets", Ok(hom));
    r.check("Sym3 image is conformally symplectic", Ok(csp));

    let heis = heis_build(&s);
    r.check(
        "heis(5) satisfies Jacobi and has 11 graded derivations",
        heis.clone()
            .and_then(|h| Ok(h.jacobi_check().is_none() && h.graded_derivations()?.len() == 11)),
    );
    let gl2: Vec<MatQ> = gl2_basis().iter().map(|x| sym3_embed(x).expect("2x2")).collect();
    let g2 = heis.clone().and_then(|h| {
        let g0: Vec<MatQ> = gl2.iter().map(|x| csp_to_derivation(x, &s)).collect::<Result<_>>()?;
        let p = tanaka_prolong(&h, &g0, 5)?;
        let d = delta_kernel(&gl2, &s)?;
        Ok(p.dims == vec![4, 1, 0] && p.total == 14 && d.dim == p.dims[0])
    });
    r.check("gl(2) prolongation is 14-dimensional", g2);
    r.check("generic pair has no contact prolongation", generic_pair_check());
    r.check(
        "zero degree stays zero when forced",
        heis.clone().and_then(|h| {
            let g0: Vec<MatQ> = gl2.iter().map(|x| csp_to_derivation(x, &s)).collect::<Result<_>>()?;
            let mut p = Prolongation::new(&h, &g0)?;
            let dims: Vec<usize> = (0..4).map(|_| p.extend()).collect();
            Ok(dims == vec![4, 1, 0, 0])
        }),
    );
    r.check(
        "derivation counts of small algebras",
        (|| {
            let ab = FiltLieAlg::<Rat>::abelian(vec![-1, -1]).graded_derivations()?.len();
            let h3 = heis_build(&MatQ::from_i64(&[&[0, 1], &[-1, 0]]))?.graded_derivations()?.len();
            Ok(ab == 4 && h3 == 4)
        })(),
    );

    let mut assoc = true;
    let mut contact = true;
    for _ in 0..10 {
        let pt = |rng: &mut R| -> [Rat; 5] { std::array::from_fn(|_| random_rat(rng, 5, 3)) };
        let (p, q, w) = (pt(rng), pt(rng), pt(rng));
        assoc &= heis_group(&heis_group(&p, &q), &w) == heis_group(&p, &heis_group(&q, &w));
        let j = left_translation_jacobian(&p);
        let moved = contact_form_at(&heis_group(&p, &q));
        let pulled: Vec<Rat> = (0..5)
            .map(|i| (0..5).fold(int(0), |acc, k| acc + &moved[k] * &j[(k, i)]))
            .collect();
        contact &= pulled == contact_form_at(&q).to_vec();
    }
    r.check("Heisenberg product is associative", Ok(assoc));
    r.check("left translations preserve the contact form", Ok(contact));
}

/// `𝔤₀ = ⟨Id, diag(r,1,-1,-r)⟩` over ℚ(r): no prolongation, δ-kernel zero,
/// and `⟨Id⟩` alone also has a zero δ-kernel.
pub fn generic_pair_check() -> Result<bool> {
    let r = rf("r");
    let s = CatalogForm::Lr2(r.clone()).sigma_table();
    let h = heis_build(&s)?;
    let g = vec![MatF::identity(4), CatalogForm::Lr2(r).matrix()];
    let der: Vec<MatF> = g.iter().map(|x| csp_to_derivation(x, &s)).collect::<Result<_>>()?;
    let p = tanaka_prolong(&h, &der, 5)?;
    Ok(p.dims == vec![0]
        && p.total == 7
        && delta_kernel(&g, &s)?.dim == 0
        && delta_kernel(&g[..1], &s)?.dim == 0)
}

fn models_suite(r: &mut Recorder) {
    for n in ModelName::ALL {
        r.check(
            &format!("{n}: Jacobi, filtration and growth (2,3,5)"),
            build_model(n, None).map(|m| m.algebra.is_filtered() && growth_vector(&m) == [2, 3, 5]),
        );
        r.check(
            &format!("{n}: lifted quotient dims and Cauchy checks"),
            build_model(n, None)
                .and_then(|m| lift_model(&m))
                .map(|lm| lm.quotient_dims() == vec![2, 3, 4, 5, 6] && cauchy_char_check(&lm).passed()),
        );
        r.check(
            &format!("{n}: E-action has even cyclic characteristic polynomial"),
            build_model(n, None)
                .and_then(|m| lift_model(&m))
                .and_then(|lm| e_action_matrix(&lm))
                .map(|a| a.minpoly_equals_charpoly && a.f_a.is_even()),
        );
    }
    r.check(
        "N6 curve is of class L4",
        (|| {
            let l4 = CurveSpec::new(MatF::diag(&[rf("2"), rf("1"), rf("-1"), rf("-2")]), vec![rf("1"); 4]);
            Ok(model_invariants(ModelName::N6, None)?.i_cls == classify(&l4)?.invariant_cls)
        })(),
    );
    r.check("cross-equivalences", cross_equivalences().map(|c| c.all_match));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        for rep in run_all(7) {
            for c in &rep.checks {
                assert!(c.passed, "{}: {} {}", rep.suite, c.name, c.detail);
            }
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
    }
}
