//! Bracket tables of the multiply-transitive (2,3,5) symmetry algebras and
//! the data of their lifts. Each entry `(x, y, [(coef, z), …])` reads
//! `[x, y] = Σ coef·z`; unlisted pairs commute.

pub(super) struct TableData {
    /// Basis names with filtration index.
    pub basis: &'static [(&'static str, i32)],
    pub brackets: &'static [(&'static str, &'static str, &'static [(&'static str, &'static str)])],
    /// The parameter name, if any.
    pub param: Option<&'static str>,
}

pub(super) struct LiftData {
    pub f0: &'static [&'static [(&'static str, &'static str)]],
    pub e: &'static [(&'static str, &'static str)],
    pub v: &'static [(&'static str, &'static str)],
    /// Representatives of the successive quotients in degrees -2, -3, -4.
    pub steps: [&'static [(&'static str, &'static str)]; 3],
    /// Basis of the degree -4 piece modulo `f0 + E`, in printed order.
    pub quotient: [&'static [(&'static str, &'static str)]; 4],
}

pub(super) const N7C: TableData = TableData {
    basis: &[
        ("T", 0),
        ("N", 0),
        ("X1", -1),
        ("X2", -1),
        ("X3", -2),
        ("X4", -3),
        ("X5", -3),
    ],
    brackets: &[
        ("T", "N", &[("-1", "N")]),
        ("T", "X2", &[("-1", "X2")]),
        ("T", "X3", &[("-1", "X3")]),
        ("T", "X4", &[("-1", "X4")]),
        ("T", "X5", &[("-2", "X5")]),
        ("N", "X1", &[("1", "X2")]),
        ("N", "X4", &[("-1", "X5")]),
        ("X1", "X2", &[("-3c", "N"), ("-2", "X3")]),
        ("X1", "X3", &[("-2c", "X2"), ("3", "X4")]),
        ("X1", "X4", &[("-1", "N"), ("c", "X3")]),
        ("X2", "X3", &[("-3", "X5")]),
    ],
    param: Some("c"),
};

pub(super) const N6: TableData = TableData {
    basis: &[
        ("N", 0),
        ("X1", -1),
        ("X2", -1),
        ("X3", -2),
        ("X4", -3),
        ("X5", -3),
    ],
    brackets: &[
        ("N", "X1", &[("1", "X2")]),
        ("N", "X2", &[("-2", "N")]),
        ("N", "X4", &[("-1", "X5"), ("1", "N")]),
        ("X1", "X2", &[("-18", "N"), ("2", "X1"), ("-2", "X3")]),
        ("X1", "X3", &[("-12", "X2"), ("3", "X4")]),
        ("X1", "X4", &[("-2", "X1"), ("6", "X3"), ("-42", "N")]),
        ("X1", "X5", &[("-1", "X4")]),
        ("X2", "X3", &[("27", "N"), ("-3", "X5")]),
        ("X2", "X4", &[("-1", "X2"), ("-1", "X4")]),
        ("X2", "X5", &[("-1", "N"), ("1", "X5")]),
        ("X3", "X4", &[("-60", "N"), ("6", "X3")]),
        ("X4", "X5", &[("-24", "N"), ("2", "X3"), ("4", "X5")]),
    ],
    param: None,
};

pub(super) const D6A: TableData = TableData {
    basis: &[
        ("T", 0),
        ("X1", -1),
        ("X2", -1),
        ("X3", -2),
        ("X4", -3),
        ("X5", -3),
    ],
    brackets: &[
        ("T", "X1", &[("1", "X1")]),
        ("T", "X2", &[("-1", "X2")]),
        ("T", "X4", &[("1", "X4")]),
        ("T", "X5", &[("-1", "X5")]),
        ("X1", "X2", &[("3a", "T"), ("-2", "X3")]),
        ("X1", "X3", &[("2a", "X1"), ("3", "X4")]),
        ("X1", "X5", &[("6", "T"), ("-a", "X3")]),
        ("X2", "X3", &[("-2a", "X2"), ("-3", "X5")]),
        ("X2", "X4", &[("-6", "T"), ("a", "X3")]),
        ("X3", "X4", &[("-(a^2+3)", "X1")]),
        ("X3", "X5", &[("a^2+3", "X2")]),
        ("X4", "X5", &[("a(a^2-1)", "T"), ("-2", "X3")]),
    ],
    param: Some("a"),
};

pub(super) const N7C_LIFT: LiftData = LiftData {
    f0: &[&[("1", "T")]],
    e: &[("1", "X1")],
    v: &[("1", "N")],
    steps: [&[("1", "X2")], &[("1", "X3")], &[("1", "X4")]],
    quotient: [&[("1", "N")], &[("1", "X2")], &[("1", "X3")], &[("1", "X4")]],
};

pub(super) const N6_LIFT: LiftData = LiftData {
    f0: &[],
    e: &[("1", "X1")],
    v: &[("1", "N")],
    steps: [&[("1", "X2")], &[("1", "X3")], &[("1", "X4")]],
    quotient: [&[("1", "N")], &[("1", "X2")], &[("1", "X3")], &[("1", "X4")]],
};

pub(super) const D6A_LIFT: LiftData = LiftData {
    f0: &[],
    e: &[("1", "X1"), ("1", "X2")],
    v: &[("1", "T")],
    steps: [&[("1", "X1")], &[("1", "X3")], &[("1", "X4"), ("-1", "X5")]],
    quotient: [
        &[("1", "T")],
        &[("1", "X1")],
        &[("1", "X3")],
        &[("1", "X4"), ("-1", "X5")],
    ],
};
