use legendrian::exact::{rat, rf, MPoly, Monomial, Rat, RatFunc, Var};
use legendrian::legcurve::{classify, CatalogForm, CurveSpec};
use legendrian::liealg::{
    contact_form_at, heis_group, left_translation_jacobian, sym3_embed, HeisPoint,
};
use legendrian::linalg::{charpoly, MatF, MatQ};
use legendrian::ode4::{general_transform_ode, mobius_transform_q0, Mobius, Ode4};
use num_traits::Zero;
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("nonzero", |q| !q.is_zero())
}

/// Polynomials in `t` and `c` with up to four terms of low degree.
fn poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((small_rat(), 0u32..=3, 0u32..=2), 0..=4).prop_map(|terms| {
        let (t, c) = (Var::t(), Var::new("c"));
        MPoly::from_terms(terms.into_iter().map(|(q, et, ec)| {
            let mut m = Monomial::one();
            m.set(t, et);
            m.set(c, ec);
            (m, q)
        }))
    })
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly().prop_filter("nonzero", |p| !p.is_zero()))
        .prop_map(|(n, d)| RatFunc::new(n, d).expect("nonzero denominator"))
}

fn nonzero_ratfunc() -> impl Strategy<Value = RatFunc> {
    ratfunc().prop_filter("nonzero", |x| !x.is_zero())
}

fn mat_q(n: usize) -> impl Strategy<Value = MatQ> {
    prop::collection::vec(small_rat(), n * n)
        .prop_map(move |v| MatQ::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

fn mobius() -> impl Strategy<Value = Mobius> {
    prop::array::uniform4(-4i64..=4)
        .prop_filter("nonsingular", |v| v[0] * v[3] != v[1] * v[2])
        .prop_map(|v| {
            let f = RatFunc::from_int;
            Mobius::new(f(v[0]), f(v[1]), f(v[2]), f(v[3])).expect("nonsingular")
        })
}

fn heis_point() -> impl Strategy<Value = HeisPoint<Rat>> {
    prop::array::uniform5(small_rat())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert!((&x + &(-&x)).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_unique(x in ratfunc(), k in nonzero_ratfunc()) {
        prop_assert!(x.is_canonical());
        let scaled = RatFunc::new(
            x.num() * k.num(),
            x.den() * k.num(),
        ).unwrap();
        prop_assert!(scaled.is_canonical());
        prop_assert_eq!(&scaled, &x);
        let again = RatFunc::new(scaled.num().clone(), scaled.den().clone()).unwrap();
        prop_assert_eq!(again, scaled);
    }

    #[test]
    fn leibniz_rule(x in ratfunc(), y in ratfunc()) {
        let t = Var::t();
        let lhs = (&x * &y).derivative(t);
        let rhs = &(&x.derivative(t) * &y) + &(&x * &y.derivative(t));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_ring_map(x in ratfunc(), y in ratfunc(), v in ratfunc()) {
        let t = Var::t();
        let v = v.substitute(t, &RatFunc::named("c")).unwrap();
        let (Ok(sx), Ok(sy), Ok(sxy), Ok(sxpy)) = (
            x.substitute(t, &v),
            y.substitute(t, &v),
            (&x * &y).substitute(t, &v),
            (&x + &y).substitute(t, &v),
        ) else {
            return Ok(());
        };
        prop_assert_eq!(sxy, &sx * &sy);
        prop_assert_eq!(sxpy, &sx + &sy);
    }

    #[test]
    fn display_parse_round_trip(x in ratfunc()) {
        prop_assert_eq!(legendrian::exact::parse_ratfunc(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn rank_of_transpose(m in mat_q(4), k in 0usize..4) {
        // Duplicate a row to produce rank-deficient cases too.
        let mut rows = m.to_rows();
        rows[3] = rows[k].clone();
        for m in [m, MatQ::from_rows(rows).unwrap()] {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }
    }

    #[test]
    fn sym3_is_a_homomorphism(x in mat_q(2), y in mat_q(2)) {
        let lhs = sym3_embed(&x.commutator(&y)).unwrap();
        let rhs = sym3_embed(&x).unwrap().commutator(&sym3_embed(&y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn heisenberg_group_laws(p in heis_point(), q in heis_point(), r in heis_point()) {
        prop_assert_eq!(
            heis_group(&heis_group(&p, &q), &r),
            heis_group(&p, &heis_group(&q, &r))
        );
        // Left translation preserves the contact form: θ(p∘q)·J = θ(q).
        let j = left_translation_jacobian(&p);
        let theta = contact_form_at(&heis_group(&p, &q));
        let pulled: Vec<Rat> = (0..5)
            .map(|k| (0..5).map(|i| &theta[i] * &j[(i, k)]).sum())
            .collect();
        prop_assert_eq!(pulled, contact_form_at(&q).to_vec());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn cayley_hamilton(m in mat_q(4)) {
        let p = charpoly(&m).unwrap();
        prop_assert!(p.eval_matrix(&m).unwrap().is_zero());
    }

    #[test]
    fn mobius_composition(m1 in mobius(), m2 in mobius(), k in nonzero_rat()) {
        let t = RatFunc::t();
        let q0 = (&t + &RatFunc::one()).div(&(&(&t * &t) + &RatFunc::constant(k)).pow(2)).unwrap();
        let step = mobius_transform_q0(&mobius_transform_q0(&q0, &m1).unwrap(), &m2).unwrap();
        let direct = mobius_transform_q0(&q0, &m2.compose(&m1)).unwrap();
        prop_assert_eq!(step, direct);
    }

    #[test]
    fn affine_transform_composition(
        a1 in nonzero_rat(), b1 in small_rat(), a2 in nonzero_rat(), b2 in small_rat(),
        k1 in small_rat(), k2 in small_rat(),
    ) {
        let t = RatFunc::t();
        let c = |q: &Rat| RatFunc::constant(q.clone());
        let e = Ode4::new(
            rf("t^2+1"),
            rf("t"),
            rf("3"),
            rf("1/(t^2+2)"),
        );
        let l1 = &(&c(&a1) * &t) + &c(&b1);
        let l2 = &(&c(&a2) * &t) + &c(&b2);
        let mu1 = &(&t * &t) + &c(&(&k1 * &k1 + Rat::from_integer(1.into())));
        let mu2 = &t + &c(&(&k2 + Rat::from_integer(20.into())));
        let one = general_transform_ode(&e, &l1, &mu1).unwrap();
        let two = general_transform_ode(&one, &l2, &mu2).unwrap();
        let l = l2.substitute(Var::t(), &l1).unwrap();
        let mu = &mu2.substitute(Var::t(), &l1).unwrap() * &mu1;
        prop_assert_eq!(two, general_transform_ode(&e, &l, &mu).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn classification_is_conjugation_invariant(r in 2i64..=7, p in mat_q(4)) {
        prop_assume!(!p.det().unwrap().is_zero());
        let form = CatalogForm::Lr2(RatFunc::from_int(r));
        let spec = form.spec();
        let pf = MatF::from_rat(&p);
        let a = &(&pf * &spec.a) * &pf.inverse().unwrap();
        let z = pf.mul_vec(&spec.z).unwrap();
        let moved = classify(&CurveSpec::new(a, z)).unwrap();
        let original = classify(&spec).unwrap();
        prop_assert_eq!(moved.kind, original.kind);
        prop_assert_eq!(moved.invariant_cls, original.invariant_cls);
    }
}
