//! Finite-dimensional Lie algebras given by structure constants, the
//! Heisenberg algebra and group, graded derivations and Tanaka
//! prolongation of depth-two symbols.

mod heis;
mod prolong;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Field, RatFunc};
use crate::linalg::{nullspace_of_rows, Mat};

pub use heis::{
    contact_form_at, heis_build, heis_group, heis_inverse, left_translation_jacobian, HeisPoint,
};
pub use prolong::{
    csp_scale, csp_to_derivation, delta_kernel, sym3_embed, tanaka_prolong, DeltaKernel,
    ProlongResult, Prolongation,
};

/// Lie algebra with structure constants `[eᵢ, eⱼ] = Σₖ cᵢⱼᵏ eₖ` and an integer
/// label per basis element: a degree for graded algebras, a filtration index
/// for filtered ones.
#[derive(Clone, Debug, PartialEq)]
pub struct FiltLieAlg<F: Field = RatFunc> {
    names: Vec<String>,
    degrees: Vec<i32>,
    // consts[i][j][k] = c_ij^k
    consts: Vec<Vec<Vec<F>>>,
}

/// A failing Jacobi triple with its defect `Σ_cyc [[eᵢ,eⱼ],eₖ]`.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiWitness<F: Field = RatFunc> {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub defect: Vec<F>,
}

impl<F: Field> FiltLieAlg<F> {
    /// Builds the algebra from the brackets `(i, j, [eᵢ, eⱼ])`; the entries
    /// for `(j, i)` follow by antisymmetry. A pair listed twice must agree.
    pub fn new(
        names: Vec<String>,
        degrees: Vec<i32>,
        brackets: Vec<(usize, usize, Vec<F>)>,
    ) -> Result<Self> {
        let n = names.len();
        if degrees.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{n} names but {} degrees",
                degrees.len()
            )));
        }
        let mut consts = vec![vec![vec![F::zero(); n]; n]; n];
        let mut seen = vec![vec![false; n]; n];
        for (i, j, v) in brackets {
            if i >= n || j >= n || v.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "bracket ({i}, {j}) out of range for dimension {n}"
                )));
            }
            if i == j {
                if v.iter().any(|x| !x.is_zero()) {
                    return Err(Error::Invalid(format!("[e{i}, e{i}] must vanish")));
                }
                continue;
            }
            let neg: Vec<F> = v.iter().map(|x| -x.clone()).collect();
            if seen[i][j] && consts[i][j] != v {
                return Err(Error::Invalid(format!(
                    "inconsistent entries for the bracket ({i}, {j})"
                )));
            }
            seen[i][j] = true;
            seen[j][i] = true;
            consts[i][j] = v;
            consts[j][i] = neg;
        }
        Ok(FiltLieAlg {
            names,
            degrees,
            consts,
        })
    }

    /// Abelian algebra with the given degrees.
    pub fn abelian(degrees: Vec<i32>) -> Self {
        let names = (1..=degrees.len()).map(|i| format!("e{i}")).collect();
        FiltLieAlg::new(names, degrees, vec![]).expect("consistent")
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `[eᵢ, eⱼ]` in coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[F] {
        &self.consts[i][j]
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = x[i].clone() * &y[j];
                for k in 0..n {
                    let c = &self.consts[i][j][k];
                    if !c.is_zero() {
                        out[k] = out[k].clone() + &(xy.clone() * c);
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        v
    }

    /// `ad(x)` as a matrix acting on coordinate columns.
    pub fn ad(&self, x: &[F]) -> Mat<F> {
        let n = self.dim();
        let cols: Vec<Vec<F>> = (0..n).map(|j| self.bracket(x, &self.basis_vector(j))).collect();
        Mat::from_cols(&cols).expect("square")
    }

    /// `None` when the Jacobi identity holds for every basis triple.
    pub fn jacobi_check(&self) -> Option<JacobiWitness<F>> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let e = |a: usize| self.basis_vector(a);
                    let t1 = self.bracket(&self.consts[i][j], &e(k));
                    let t2 = self.bracket(&self.consts[j][k], &e(i));
                    let t3 = self.bracket(&self.consts[k][i], &e(j));
                    let defect: Vec<F> = (0..n)
                        .map(|a| t1[a].clone() + &t2[a] + &t3[a])
                        .collect();
                    if defect.iter().any(|x| !x.is_zero()) {
                        return Some(JacobiWitness { i, j, k, defect });
                    }
                }
            }
        }
        None
    }

    /// `[gᵢ, gⱼ] ⊆ g_{i+j}` for the degree labels.
    pub fn is_graded(&self) -> bool {
        self.bracket_violation(|target, k| target == k).is_none()
    }

    /// `[fⁱ, fʲ] ⊆ f^{i+j}` where `fᵈ` is spanned by elements labelled `≥ d`.
    pub fn is_filtered(&self) -> bool {
        self.bracket_violation(|target, k| k >= target).is_none()
    }

    fn bracket_violation(&self, allowed: impl Fn(i32, i32) -> bool) -> Option<(usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                let target = self.degrees[i] + self.degrees[j];
                let bad = (0..n).any(|k| !self.consts[i][j][k].is_zero() && !allowed(target, self.degrees[k]));
                if bad {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Applies `f` to every structure constant.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> FiltLieAlg<G> {
        FiltLieAlg {
            names: self.names.clone(),
            degrees: self.degrees.clone(),
            consts: self
                .consts
                .iter()
                .map(|row| row.iter().map(|v| v.iter().map(&f).collect()).collect())
                .collect(),
        }
    }

    /// Basis of all degree-preserving derivations, as matrices whose column
    /// `i` is `D(eᵢ)`.
    pub fn graded_derivations(&self) -> Result<Vec<Mat<F>>> {
        let n = self.dim();
        // unknown D[k][i] for degree(k) == degree(i)
        let mut slots: Vec<(usize, usize)> = Vec::new();
        for i in 0..n {
            for k in 0..n {
                if self.degrees[k] == self.degrees[i] {
                    slots.push((k, i));
                }
            }
        }
        let mut index = BTreeMap::new();
        for (s, &ki) in slots.iter().enumerate() {
            index.insert(ki, s);
        }
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                // D[eᵢ,eⱼ] - [Deᵢ,eⱼ] - [eᵢ,Deⱼ], component l
                for l in 0..n {
                    let mut row = vec![F::zero(); slots.len()];
                    for (m, c) in self.consts[i][j].iter().enumerate() {
                        if let Some(&s) = index.get(&(l, m)) {
                            row[s] = row[s].clone() + c;
                        }
                    }
                    for k in 0..n {
                        if let Some(&s) = index.get(&(k, i)) {
                            row[s] = row[s].clone() - &self.consts[k][j][l];
                        }
                        if let Some(&s) = index.get(&(k, j)) {
                            row[s] = row[s].clone() - &self.consts[i][k][l];
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let null = nullspace_of_rows(rows, slots.len())?;
        Ok(null
            .into_iter()
            .map(|v| {
                let mut d = Mat::zeros(n, n);
                for (s, &(k, i)) in slots.iter().enumerate() {
                    d[(k, i)] = v[s].clone();
                }
                d
            })
            .collect())
    }

    /// Checks `D[x,y] = [Dx,y] + [x,Dy]` on basis pairs.
    pub fn is_derivation(&self, d: &Mat<F>) -> bool {
        let n = self.dim();
        if d.rows() != n || d.cols() != n {
            return false;
        }
        let col = |i: usize| d.col(i);
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.mul_vec(&self.consts[i][j]).expect("square");
                let a = self.bracket(&col(i), &self.basis_vector(j));
                let b = self.bracket(&self.basis_vector(i), &col(j));
                if (0..n).any(|k| lhs[k] != a[k].clone() + &b[k]) {
                    return false;
                }
            }
        }
        true
    }
}

/// On-disk form: `{dim, names, degrees, brackets: [{i, j, coeffs: {k: "..."}}]}`
/// with zero-based indices and coefficients as rational-function strings.
#[derive(Serialize, Deserialize)]
struct AlgebraJson<C> {
    dim: usize,
    names: Vec<String>,
    degrees: Vec<i32>,
    brackets: Vec<BracketJson<C>>,
}

#[derive(Serialize, Deserialize)]
struct BracketJson<C> {
    i: usize,
    j: usize,
    coeffs: BTreeMap<usize, C>,
}

impl Serialize for FiltLieAlg<RatFunc> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let coeffs: BTreeMap<usize, String> = self.consts[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.to_string()))
                    .collect();
                if !coeffs.is_empty() {
                    brackets.push(BracketJson { i, j, coeffs });
                }
            }
        }
        AlgebraJson {
            dim: n,
            names: self.names.clone(),
            degrees: self.degrees.clone(),
            brackets,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiltLieAlg<RatFunc> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = AlgebraJson::<RatFunc>::deserialize(d)?;
        if doc.names.len() != doc.dim {
            return Err(serde::de::Error::custom("dim does not match the number of names"));
        }
        let mut brackets = Vec::with_capacity(doc.brackets.len());
        for b in doc.brackets {
            let mut v = vec![RatFunc::zero(); doc.dim];
            for (k, c) in b.coeffs {
                if k >= doc.dim {
                    return Err(serde::de::Error::custom(format!("index {k} out of range")));
                }
                v[k] = c;
            }
            brackets.push((b.i, b.j, v));
        }
        FiltLieAlg::new(doc.names, doc.degrees, brackets).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rf, Rat};

    fn heis3() -> FiltLieAlg<Rat> {
        let z = |v: [i64; 3]| v.iter().map(|&x| Rat::from_i64(x)).collect::<Vec<_>>();
        FiltLieAlg::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![-1, -1, -2],
            vec![(0, 1, z([0, 0, 1]))],
        )
        .unwrap()
    }

    #[test]
    fn abelian_is_lie() {
        assert!(FiltLieAlg::<Rat>::abelian(vec![-1, -1]).jacobi_check().is_none());
    }

    #[test]
    fn inconsistent_entries_rejected() {
        let one = vec![Rat::from_i64(1), Rat::from_i64(0)];
        let two = vec![Rat::from_i64(2), Rat::from_i64(0)];
        assert!(FiltLieAlg::new(
            vec!["a".into(), "b".into()],
            vec![0, 0],
            vec![(0, 1, one), (0, 1, two)]
        )
        .is_err());
    }

    #[test]
    fn jacobi_failure_found() {
        // [x,y] = y, [x,z] = z, [y,z] = x fails Jacobi
        let v = |a: [i64; 3]| a.iter().map(|&x| Rat::from_i64(x)).collect::<Vec<_>>();
        let l = FiltLieAlg::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![0, 0, 0],
            vec![(0, 1, v([0, 1, 0])), (0, 2, v([0, 0, 1])), (1, 2, v([1, 0, 0]))],
        )
        .unwrap();
        let w = l.jacobi_check().expect("defect");
        assert_eq!((w.i, w.j, w.k), (0, 1, 2));
    }

    #[test]
    fn derivation_counts() {
        assert_eq!(heis3().graded_derivations().unwrap().len(), 4);
        let ab = FiltLieAlg::<Rat>::abelian(vec![-1, -1]);
        assert_eq!(ab.graded_derivations().unwrap().len(), 4);
        for d in heis3().graded_derivations().unwrap() {
            assert!(heis3().is_derivation(&d));
        }
    }

    #[test]
    fn json_round_trip() {
        let l = heis3().map(|q| RatFunc::constant(q.clone()));
        let s = serde_json::to_string(&l).unwrap();
        assert!(s.contains("\"coeffs\":{\"2\":\"1\"}"), "{s}");
        let back: FiltLieAlg = serde_json::from_str(&s).unwrap();
        assert_eq!(back, l);
        let sym = FiltLieAlg::new(
            vec!["a".into(), "b".into()],
            vec![0, 0],
            vec![(0, 1, vec![rf("c"), rf("0")])],
        )
        .unwrap();
        let back: FiltLieAlg = serde_json::from_str(&serde_json::to_string(&sym).unwrap()).unwrap();
        assert_eq!(back, sym);
    }
}
