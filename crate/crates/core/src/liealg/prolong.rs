//! Tanaka prolongation of a depth-two graded nilpotent algebra, the δ-map
//! description of its first prolongation, and the `Sym³` embedding
//! `𝔤𝔩(2) → 𝔠𝔰𝔭(4)`.

use crate::error::{Error, Result};
use crate::exact::{Field, Rat};
use crate::linalg::{nullspace_of_rows, Mat};

use super::FiltLieAlg;

/// An element of degree `k ≥ 0`, stored by its values on the basis of `𝔪`:
/// `values[i]` holds the coordinates of `[x, eᵢ]` in the space of degree
/// `k + deg(eᵢ)` (a graded piece of `𝔪` when negative, a computed `𝔤ⱼ`
/// otherwise).
pub type ValueTable<F> = Vec<Vec<F>>;

/// Outcome of [`tanaka_prolong`].
#[derive(Clone, Debug, PartialEq)]
pub struct ProlongResult<F: Field> {
    /// `dim 𝔤ₖ` for `k = 1, 2, …`, ending at the first zero or at the cap.
    pub dims: Vec<usize>,
    /// `dim 𝔪 + dim 𝔤₀ + Σ dims`.
    pub total: usize,
    /// Bases of `𝔤₁, 𝔤₂, …` as value tables.
    pub bases: Vec<Vec<ValueTable<F>>>,
}

/// Incremental prolongation state; `levels[k]` is a basis of `𝔤ₖ`.
#[derive(Clone, Debug)]
pub struct Prolongation<F: Field> {
    m: FiltLieAlg<F>,
    // m-basis indices of degree -1 and -2
    neg: [Vec<usize>; 2],
    levels: Vec<Vec<ValueTable<F>>>,
}

impl<F: Field> Prolongation<F> {
    /// Validates `(𝔪, 𝔤₀)` and records `𝔤₀`. Each element of `g0` is a
    /// degree-preserving derivation of `𝔪` given as a matrix.
    pub fn new(m: &FiltLieAlg<F>, g0: &[Mat<F>]) -> Result<Self> {
        let min = m.degrees().iter().copied().min().unwrap_or(-1);
        if min < -2 {
            return Err(Error::UnsupportedDepth((-min) as usize));
        }
        if m.degrees().iter().any(|&d| d >= 0) {
            return Err(Error::Invalid("the symbol must be negatively graded".into()));
        }
        if !m.is_graded() {
            return Err(Error::Invalid("the symbol is not graded".into()));
        }
        let neg = [
            (0..m.dim()).filter(|&i| m.degrees()[i] == -1).collect::<Vec<_>>(),
            (0..m.dim()).filter(|&i| m.degrees()[i] == -2).collect::<Vec<_>>(),
        ];
        // m_{-2} must be spanned by [m_{-1}, m_{-1}]
        let gens: Vec<Vec<F>> = neg[0]
            .iter()
            .flat_map(|&i| neg[0].iter().map(move |&j| (i, j)))
            .map(|(i, j)| m.bracket_basis(i, j).to_vec())
            .collect();
        let span_rank = if gens.is_empty() {
            0
        } else {
            Mat::from_rows(gens)?.rank()
        };
        if span_rank != neg[1].len() {
            return Err(Error::Invalid("the degree -1 part does not generate".into()));
        }

        let n = m.dim();
        for (idx, d) in g0.iter().enumerate() {
            if d.rows() != n || d.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "g0 element {idx} is {}x{}, expected {n}x{n}",
                    d.rows(),
                    d.cols()
                )));
            }
            let mixes = (0..n).any(|i| (0..n).any(|k| m.degrees()[i] != m.degrees()[k] && !d[(k, i)].is_zero()));
            if mixes || !m.is_derivation(d) {
                return Err(Error::NotDerivation(format!("g0 element {idx}")));
            }
        }
        let g0 = independent_subset(g0)?;
        check_closed(&g0)?;

        let mut state = Prolongation {
            m: m.clone(),
            neg,
            levels: Vec::new(),
        };
        let level0 = g0
            .iter()
            .map(|d| {
                (0..n)
                    .map(|i| {
                        let deg = state.m.degrees()[i];
                        state.neg_indices(deg).iter().map(|&k| d[(k, i)].clone()).collect()
                    })
                    .collect()
            })
            .collect();
        state.levels.push(level0);
        Ok(state)
    }

    fn neg_indices(&self, deg: i32) -> &[usize] {
        match deg {
            -1 => &self.neg[0],
            -2 => &self.neg[1],
            _ => &[],
        }
    }

    fn space_dim(&self, deg: i32) -> usize {
        if deg < 0 {
            self.neg_indices(deg).len()
        } else {
            self.levels.get(deg as usize).map_or(0, Vec::len)
        }
    }

    /// `[x, e_v]` for `x` of degree `a` given in coordinates.
    fn bracket_with_basis(&self, a: i32, x: &[F], v: usize) -> Vec<F> {
        let target = a + self.m.degrees()[v];
        let out_dim = self.space_dim(target);
        let mut out = vec![F::zero(); out_dim];
        if out_dim == 0 {
            return out;
        }
        if a >= 0 {
            for (alpha, coef) in x.iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                let val = &self.levels[a as usize][alpha][v];
                for (o, w) in out.iter_mut().zip(val) {
                    *o = o.clone() + &(coef.clone() * w);
                }
            }
        } else {
            let mut full = vec![F::zero(); self.m.dim()];
            for (c, &i) in x.iter().zip(self.neg_indices(a)) {
                full[i] = c.clone();
            }
            let br = self.m.bracket(&full, &self.m.basis_vector(v));
            for (o, &k) in out.iter_mut().zip(self.neg_indices(target)) {
                *o = br[k].clone();
            }
        }
        out
    }

    /// Computed degrees so far (`𝔤₀` included).
    pub fn levels(&self) -> &[Vec<ValueTable<F>>] {
        &self.levels
    }

    pub fn dim_g0(&self) -> usize {
        self.levels[0].len()
    }

    /// Computes the next degree and returns its dimension.
    pub fn extend(&mut self) -> usize {
        let k = self.levels.len() as i32;
        let n = self.m.dim();
        let degs = self.m.degrees().to_vec();
        let block: Vec<usize> = degs.iter().map(|&d| self.space_dim(k + d)).collect();
        let offsets: Vec<usize> = block
            .iter()
            .scan(0, |acc, &b| {
                let o = *acc;
                *acc += b;
                Some(o)
            })
            .collect();
        let unknowns: usize = block.iter().sum();

        // residual of φ on every basis pair, as one long vector
        let residual = |phi: &[F]| -> Vec<F> {
            let value = |i: usize| &phi[offsets[i]..offsets[i] + block[i]];
            let mut res = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    let target = k + degs[u] + degs[v];
                    let dim = self.space_dim(target);
                    if dim == 0 {
                        continue;
                    }
                    let mut r = vec![F::zero(); dim];
                    for (w, c) in self.m.bracket_basis(u, v).iter().enumerate() {
                        if !c.is_zero() {
                            for (ri, x) in r.iter_mut().zip(value(w)) {
                                *ri = ri.clone() + &(c.clone() * x);
                            }
                        }
                    }
                    let a = self.bracket_with_basis(k + degs[u], value(u), v);
                    let b = self.bracket_with_basis(k + degs[v], value(v), u);
                    for ((ri, x), y) in r.iter_mut().zip(a).zip(b) {
                        *ri = ri.clone() - &x + &y;
                    }
                    res.extend(r);
                }
            }
            res
        };

        let cols: Vec<Vec<F>> = (0..unknowns)
            .map(|s| {
                let mut e = vec![F::zero(); unknowns];
                e[s] = F::one();
                residual(&e)
            })
            .collect();
        let eqs = cols.first().map_or(0, Vec::len);
        let rows: Vec<Vec<F>> = (0..eqs)
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .filter(|row: &Vec<F>| row.iter().any(|x| !x.is_zero()))
            .collect();
        let null = nullspace_of_rows(rows, unknowns).expect("consistent dimensions");
        let level: Vec<ValueTable<F>> = null
            .into_iter()
            .map(|vec| {
                (0..n)
                    .map(|i| vec[offsets[i]..offsets[i] + block[i]].to_vec())
                    .collect()
            })
            .collect();
        let dim = level.len();
        self.levels.push(level);
        dim
    }
}

fn independent_subset<F: Field>(g0: &[Mat<F>]) -> Result<Vec<Mat<F>>> {
    let mut kept: Vec<Mat<F>> = Vec::new();
    let mut rows: Vec<Vec<F>> = Vec::new();
    for d in g0 {
        rows.push(d.vectorize());
        if Mat::from_rows(rows.clone())?.rank() == rows.len() {
            kept.push(d.clone());
        } else {
            rows.pop();
        }
    }
    Ok(kept)
}

fn check_closed<F: Field>(g0: &[Mat<F>]) -> Result<()> {
    if g0.is_empty() {
        return Ok(());
    }
    let base: Vec<Vec<F>> = g0.iter().map(Mat::vectorize).collect();
    let r = g0.len();
    for i in 0..r {
        for j in i + 1..r {
            let c = g0[i].commutator(&g0[j]);
            let mut rows = base.clone();
            rows.push(c.vectorize());
            if Mat::from_rows(rows)?.rank() > r {
                return Err(Error::NotClosed);
            }
        }
    }
    Ok(())
}

/// Prolongs `(𝔪, 𝔤₀)` degree by degree, stopping at the first zero degree
/// or after `max_deg` degrees.
pub fn tanaka_prolong<F: Field>(
    m: &FiltLieAlg<F>,
    g0: &[Mat<F>],
    max_deg: usize,
) -> Result<ProlongResult<F>> {
    let mut p = Prolongation::new(m, g0)?;
    let mut dims = Vec::new();
    for _ in 0..max_deg {
        let d = p.extend();
        dims.push(d);
        if d == 0 {
            break;
        }
    }
    let total = m.dim() + p.dim_g0() + dims.iter().sum::<usize>();
    Ok(ProlongResult {
        dims,
        total,
        bases: p.levels[1..].to_vec(),
    })
}

/// `λ` with `XᵀΣ + ΣX = λΣ`, if `X` is conformally symplectic.
pub fn csp_scale<F: Field>(x: &Mat<F>, sigma: &Mat<F>) -> Option<F> {
    let lhs = &(&x.transpose() * sigma) + &(sigma * x);
    let (i, j) = (0..sigma.rows())
        .flat_map(|i| (0..sigma.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| !sigma[(i, j)].is_zero())?;
    let lambda = lhs[(i, j)].checked_div(&sigma[(i, j)])?;
    (lhs == sigma.scale(&lambda)).then_some(lambda)
}

/// The derivation of the Heisenberg algebra of `σ` induced by
/// `X ∈ 𝔠𝔰𝔭(σ)`: `X` on `V` and multiplication by `λ` on the centre.
pub fn csp_to_derivation<F: Field>(x: &Mat<F>, sigma: &Mat<F>) -> Result<Mat<F>> {
    let n = sigma.rows();
    if x.rows() != n || x.cols() != n {
        return Err(Error::DimensionMismatch("matrix and form differ in size".into()));
    }
    let lambda = csp_scale(x, sigma)
        .ok_or_else(|| Error::NotDerivation("matrix is not conformally symplectic".into()))?;
    Ok(Mat::from_fn(n + 1, n + 1, |i, j| {
        if i < n && j < n {
            x[(i, j)].clone()
        } else if i == n && j == n {
            lambda.clone()
        } else {
            F::zero()
        }
    }))
}

/// Kernel of `δ` on `Hom(V, 𝔤₀)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DeltaKernel<F: Field> {
    pub dim: usize,
    /// Each element lists `A_{e₁}, …, A_{eₙ}`.
    pub basis: Vec<Vec<Mat<F>>>,
}

/// Solves `A_u v - A_v u - σ(u,v)Ā = 0` for `A ∈ Hom(V, 𝔤₀)`, where
/// `σ(Ā, u) = (2/dim V) tr(A_u)`.
pub fn delta_kernel<F: Field>(g0: &[Mat<F>], sigma: &Mat<F>) -> Result<DeltaKernel<F>> {
    let n = sigma.rows();
    if !sigma.is_square() || sigma.transpose() != -sigma || sigma.det()?.is_zero() {
        return Err(Error::DegenerateForm);
    }
    for (idx, g) in g0.iter().enumerate() {
        if g.rows() != n || g.cols() != n || csp_scale(g, sigma).is_none() {
            return Err(Error::NotDerivation(format!("g0 element {idx} is not in csp")));
        }
    }
    let g0 = independent_subset(g0)?;
    let r = g0.len();
    let sigma_t_inv = sigma.transpose().inverse()?;
    let two_over_n = F::from_rat(&Rat::new(2.into(), (n as i64).into()));
    let traces: Vec<F> = g0.iter().map(Mat::trace).collect();
    let unknowns = n * r;

    let a_of = |coef: &[F], u: usize| -> Mat<F> {
        let mut acc = Mat::zeros(n, n);
        for (b, g) in g0.iter().enumerate() {
            let c = &coef[u * r + b];
            if !c.is_zero() {
                acc = &acc + &g.scale(c);
            }
        }
        acc
    };
    let residual = |coef: &[F]| -> Vec<F> {
        let tau: Vec<F> = (0..n)
            .map(|w| {
                (0..r).fold(F::zero(), |acc, b| acc + &(coef[w * r + b].clone() * &traces[b]))
                    * &two_over_n
            })
            .collect();
        let abar = sigma_t_inv.mul_vec(&tau).expect("square");
        let mut res = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let au = a_of(coef, u).col(v);
                let av = a_of(coef, v).col(u);
                for i in 0..n {
                    res.push(au[i].clone() - &av[i] - &(sigma[(u, v)].clone() * &abar[i]));
                }
            }
        }
        res
    };
    let cols: Vec<Vec<F>> = (0..unknowns)
        .map(|s| {
            let mut e = vec![F::zero(); unknowns];
            e[s] = F::one();
            residual(&e)
        })
        .collect();
    let eqs = cols.first().map_or(0, Vec::len);
    let rows: Vec<Vec<F>> = (0..eqs)
        .map(|q| cols.iter().map(|c| c[q].clone()).collect())
        .collect();
    let null = nullspace_of_rows(rows, unknowns)?;
    let basis: Vec<Vec<Mat<F>>> = null.iter().map(|v| (0..n).map(|u| a_of(v, u)).collect()).collect();
    Ok(DeltaKernel {
        dim: basis.len(),
        basis,
    })
}

/// Action of `X ∈ 𝔤𝔩(2)` on cubic forms in the basis `x³, 3x²y, 3xy², y³`,
/// where `X` sends `x ↦ X₁₁x + X₂₁y` and `y ↦ X₁₂x + X₂₂y`.
pub fn sym3_embed<F: Field>(x: &Mat<F>) -> Result<Mat<F>> {
    if x.rows() != 2 || x.cols() != 2 {
        return Err(Error::DimensionMismatch("expected a 2x2 matrix".into()));
    }
    let binom = [1i64, 3, 3, 1];
    let mut out = Mat::zeros(4, 4);
    for a in 0..4usize {
        // X(x^{3-a} y^a) in monomials, then rescaled by the binomial weights
        let p = F::from_i64(3 - a as i64);
        let q = F::from_i64(a as i64);
        let scale = |c: usize| F::from_rat(&Rat::new(binom[a].into(), binom[c].into()));
        let diag = p.clone() * &x[(0, 0)] + &(q.clone() * &x[(1, 1)]);
        out[(a, a)] = diag;
        if a < 3 {
            out[(a + 1, a)] = p * &x[(1, 0)] * &scale(a + 1);
        }
        if a > 0 {
            out[(a - 1, a)] = q * &x[(0, 1)] * &scale(a - 1);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rf};
    use crate::liealg::heis_build;
    use crate::linalg::{MatF, MatQ};

    fn sym3_sigma() -> MatQ {
        MatQ::from_i64(&[&[0, 0, 0, 1], &[0, 0, -3, 0], &[0, 3, 0, 0], &[-1, 0, 0, 0]])
    }

    fn gl2() -> Vec<MatQ> {
        (0..4)
            .map(|k| {
                let mut e = MatQ::zeros(2, 2);
                e[(k / 2, k % 2)] = int(1);
                sym3_embed(&e).unwrap()
            })
            .collect()
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(sym3_embed(&MatQ::identity(2)).unwrap(), MatQ::identity(4).scale(&int(3)));
        let h = MatQ::from_i64(&[&[1, 0], &[0, -1]]);
        assert_eq!(
            sym3_embed(&h).unwrap(),
            MatQ::from_i64(&[&[3, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, -3]])
        );
        let e21 = MatQ::from_i64(&[&[0, 0], &[1, 0]]);
        let n = sym3_embed(&e21).unwrap();
        assert_eq!(
            n,
            MatQ::from_i64(&[&[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 3, 0]])
        );
        let c = MatQ::diag(&[int(1), int(1), int(2), int(6)]);
        let conj = &(&c.inverse().unwrap() * &n) * &c;
        assert_eq!(
            conj,
            MatQ::from_i64(&[&[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]])
        );
        for g in gl2() {
            assert!(csp_scale(&g, &sym3_sigma()).is_some());
        }
    }

    #[test]
    fn g2_prolongation() {
        let s = sym3_sigma();
        let m = heis_build(&s).unwrap();
        let g0: Vec<MatQ> = gl2().iter().map(|g| csp_to_derivation(g, &s).unwrap()).collect();
        let p = tanaka_prolong(&m, &g0, 5).unwrap();
        assert_eq!(p.dims, vec![4, 1, 0]);
        assert_eq!(p.total, 14);
        assert_eq!(delta_kernel(&gl2(), &s).unwrap().dim, 4);
    }

    #[test]
    fn generic_pair_has_no_prolongation() {
        let r = rf("r");
        let s = crate::legcurve::CatalogForm::Lr2(r.clone()).sigma_table();
        let m = heis_build(&s).unwrap();
        let a = MatF::diag(&[r.clone(), rf("1"), rf("-1"), -r.clone()]);
        let g = vec![MatF::identity(4), a];
        let der: Vec<MatF> = g.iter().map(|x| csp_to_derivation(x, &s).unwrap()).collect();
        let p = tanaka_prolong(&m, &der, 5).unwrap();
        assert_eq!(p.dims, vec![0]);
        assert_eq!(p.total, 7);
        assert_eq!(delta_kernel(&g, &s).unwrap().dim, 0);
        assert_eq!(delta_kernel(&g[..1], &s).unwrap().dim, 0);
    }

    #[test]
    fn full_csp_does_not_terminate() {
        let s = sym3_sigma();
        let m = heis_build(&s).unwrap();
        let g0 = m.graded_derivations().unwrap();
        assert_eq!(g0.len(), 11);
        let p = tanaka_prolong(&m, &g0, 3).unwrap();
        assert_eq!(p.dims, vec![24, 46, 80]);
    }

    #[test]
    fn zero_degree_stays_zero() {
        let s = sym3_sigma();
        let m = heis_build(&s).unwrap();
        let g0: Vec<MatQ> = gl2().iter().map(|g| csp_to_derivation(g, &s).unwrap()).collect();
        let mut p = Prolongation::new(&m, &g0).unwrap();
        let dims: Vec<usize> = (0..4).map(|_| p.extend()).collect();
        assert_eq!(dims, vec![4, 1, 0, 0]);
    }

    #[test]
    fn non_closed_g0_rejected() {
        let s = sym3_sigma();
        let m = heis_build(&s).unwrap();
        let g = gl2();
        // e12 and e21 without their bracket
        let g0 = vec![
            csp_to_derivation(&g[1], &s).unwrap(),
            csp_to_derivation(&g[2], &s).unwrap(),
        ];
        assert_eq!(tanaka_prolong(&m, &g0, 3).unwrap_err(), Error::NotClosed);
    }

    #[test]
    fn deep_symbol_rejected() {
        let m = FiltLieAlg::<Rat>::abelian(vec![-1, -3]);
        assert_eq!(
            tanaka_prolong(&m, &[], 2).unwrap_err(),
            Error::UnsupportedDepth(3)
        );
    }
}
