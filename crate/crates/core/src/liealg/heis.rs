//! The Heisenberg algebra `V ⊕ ℂ` of a symplectic form and the coordinate
//! model of the five-dimensional Heisenberg group.

use crate::error::{Error, Result};
use crate::exact::Field;
use crate::linalg::Mat;

use super::FiltLieAlg;

/// `[v, w] = σ(v, w) Z₀` on `V ⊕ ⟨Z₀⟩`, graded in degrees `-1` and `-2`.
pub fn heis_build<F: Field>(sigma: &Mat<F>) -> Result<FiltLieAlg<F>> {
    let n = sigma.rows();
    if !sigma.is_square() || n % 2 != 0 || n == 0 {
        return Err(Error::DegenerateForm);
    }
    if sigma.transpose() != -sigma || sigma.det()?.is_zero() {
        return Err(Error::DegenerateForm);
    }
    let mut names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    names.push("Z0".into());
    let mut degrees = vec![-1; n];
    degrees.push(-2);
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !sigma[(i, j)].is_zero() {
                let mut v = vec![F::zero(); n + 1];
                v[n] = sigma[(i, j)].clone();
                brackets.push((i, j, v));
            }
        }
    }
    FiltLieAlg::new(names, degrees, brackets)
}

/// Coordinates `(x₁, …, x₅)` on the Heisenberg group.
pub type HeisPoint<F> = [F; 5];

fn half<F: Field>() -> F {
    F::from_rat(&crate::exact::rat(1, 2))
}

/// `p ∘ q = p + q` with `x₅` corrected by `(x₁x̃₃ - x₃x̃₁ + x₂x̃₄ - x₄x̃₂)/2`.
pub fn heis_group<F: Field>(p: &HeisPoint<F>, q: &HeisPoint<F>) -> HeisPoint<F> {
    let corr = p[0].clone() * &q[2] - p[2].clone() * &q[0] + p[1].clone() * &q[3]
        - p[3].clone() * &q[1];
    [
        p[0].clone() + &q[0],
        p[1].clone() + &q[1],
        p[2].clone() + &q[2],
        p[3].clone() + &q[3],
        p[4].clone() + &q[4] + &(corr * &half()),
    ]
}

pub fn heis_inverse<F: Field>(p: &HeisPoint<F>) -> HeisPoint<F> {
    p.clone().map(|x| -x)
}

/// Coefficients of `x₁dx₃ - x₃dx₁ + x₂dx₄ - x₄dx₂ - 2dx₅` at `p`.
pub fn contact_form_at<F: Field>(p: &HeisPoint<F>) -> [F; 5] {
    [
        -p[2].clone(),
        -p[3].clone(),
        p[0].clone(),
        p[1].clone(),
        F::from_i64(-2),
    ]
}

/// Jacobian of `q ↦ p ∘ q` (independent of `q`).
pub fn left_translation_jacobian<F: Field>(p: &HeisPoint<F>) -> Mat<F> {
    let mut j = Mat::identity(5);
    let h = half::<F>();
    j[(4, 0)] = -(p[2].clone() * &h);
    j[(4, 1)] = -(p[3].clone() * &h);
    j[(4, 2)] = p[0].clone() * &h;
    j[(4, 3)] = p[1].clone() * &h;
    j
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, Rat};
    use crate::linalg::MatQ;

    fn pt(v: [Rat; 5]) -> HeisPoint<Rat> {
        v
    }

    #[test]
    fn sym3_form() {
        let s = MatQ::from_i64(&[&[0, 0, 0, 1], &[0, 0, -3, 0], &[0, 3, 0, 0], &[-1, 0, 0, 0]]);
        let h = heis_build(&s).unwrap();
        assert_eq!(h.bracket_basis(0, 3), &[int(0), int(0), int(0), int(0), int(1)]);
        assert_eq!(h.bracket_basis(1, 2)[4], int(-3));
        assert!(h.jacobi_check().is_none());
        assert!(h.is_graded());
        assert_eq!(h.graded_derivations().unwrap().len(), 11);
    }

    #[test]
    fn degenerate_rejected() {
        let s = MatQ::from_i64(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        assert_eq!(heis_build(&s), Err(Error::DegenerateForm));
    }

    #[test]
    fn product_example() {
        let p = pt([int(1), int(0), int(0), int(0), int(0)]);
        let q = pt([int(0), int(0), int(1), int(0), int(0)]);
        assert_eq!(
            heis_group(&p, &q),
            [int(1), int(0), int(1), int(0), rat(1, 2)]
        );
        let zero = pt([int(0), int(0), int(0), int(0), int(0)]);
        assert_eq!(heis_group(&p, &zero), p);
        assert_eq!(heis_group(&p, &heis_inverse(&p)), zero);
    }
}
