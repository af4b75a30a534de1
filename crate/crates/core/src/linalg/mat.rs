use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::{Field, Rat, RatFunc};

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq)]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Matrix over rational functions.
pub type MatF = Mat<RatFunc>;
/// Matrix over the rationals.
pub type MatQ = Mat<Rat>;

/// Outcome of [`solve_linear`].
#[derive(Clone, Debug, PartialEq)]
pub enum Solution<F> {
    /// The system is inconsistent.
    None,
    Unique(Vec<F>),
    /// `particular + span(basis)`.
    Family { particular: Vec<F>, basis: Vec<Vec<F>> },
}

impl<F: Field> Mat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn diag(entries: &[F]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<F>]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|col| col.len() != r) {
            return Err(Error::DimensionMismatch("ragged columns".into()));
        }
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Converts entries from rationals.
    pub fn from_rat(m: &MatQ) -> Self {
        Mat {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(F::from_rat).collect(),
        }
    }

    /// Integer matrix literal.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|x| F::from_i64(*x)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vec<F> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Mat<G> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<Mat<G>> {
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|x| x.clone() * c)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.cols {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc + &(a.clone() * &v[j]);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let cur = std::mem::replace(&mut out[(i, j)], F::zero());
                        out[(i, j)] = cur + &(a.clone() * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        }))
    }

    /// Entries in row-major order as one vector.
    pub fn vectorize(&self) -> Vec<F> {
        self.data.clone()
    }

    /// Reduced row echelon form and pivot columns.
    ///
    /// The pivot in each column is the first structurally nonzero entry at or
    /// below the current row.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let x = std::mem::replace(&mut m[(r, j)], F::zero());
                m[(r, j)] = x * &inv;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let d = f.clone() * &m[(r, j)];
                    let x = std::mem::replace(&mut m[(i, j)], F::zero());
                    m[(i, j)] = x - &d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant by elimination.
    pub fn det(&self) -> Result<F> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(F::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = det * &piv;
            let inv = piv.inv().expect("nonzero pivot");
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() * &inv;
                for j in c..n {
                    let d = f.clone() * &m[(c, j)];
                    let x = std::mem::replace(&mut m[(i, j)], F::zero());
                    m[(i, j)] = x - &d;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(n))?;
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] >= n {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_fn(n, n, |i, j| r[(i, j + n)].clone()))
    }
}

/// Rank and a basis of the right nullspace `{v : Mv = 0}`.
pub fn rank_nullspace<F: Field>(m: &Mat<F>) -> (usize, Vec<Vec<F>>) {
    let (r, piv) = m.rref();
    let free: Vec<usize> = (0..m.cols).filter(|c| !piv.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![F::zero(); m.cols];
            v[f] = F::one();
            for (row, &p) in piv.iter().enumerate() {
                v[p] = -r[(row, f)].clone();
            }
            v
        })
        .collect();
    (piv.len(), basis)
}

/// Solves `Mx = b` exactly.
pub fn solve_linear<F: Field>(m: &Mat<F>, b: &[F]) -> Result<Solution<F>> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch(format!(
            "{} equations but right-hand side of length {}",
            m.rows,
            b.len()
        )));
    }
    let aug = m.hstack(&Mat::from_cols(&[b.to_vec()])?)?;
    let (r, piv) = aug.rref();
    if piv.last() == Some(&m.cols) {
        return Ok(Solution::None);
    }
    let mut x = vec![F::zero(); m.cols];
    for (row, &p) in piv.iter().enumerate() {
        x[p] = r[(row, m.cols)].clone();
    }
    let (_, basis) = rank_nullspace(m);
    if basis.is_empty() {
        Ok(Solution::Unique(x))
    } else {
        Ok(Solution::Family {
            particular: x,
            basis,
        })
    }
}

impl<F> Index<(usize, usize)> for Mat<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Mat<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> Mul for &Mat<F> {
    type Output = Mat<F>;
    /// Panics on incompatible shapes; see [`Mat::try_mul`].
    fn mul(self, rhs: &Mat<F>) -> Mat<F> {
        self.try_mul(rhs).expect("matrix shapes agree")
    }
}

impl<F: Field> Add for &Mat<F> {
    type Output = Mat<F>;
    fn add(self, rhs: &Mat<F>) -> Mat<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        }
    }
}

impl<F: Field> Sub for &Mat<F> {
    type Output = Mat<F>;
    fn sub(self, rhs: &Mat<F>) -> Mat<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        }
    }
}

impl<F: Field> Neg for &Mat<F> {
    type Output = Mat<F>;
    fn neg(self) -> Mat<F> {
        self.map(|x| -x.clone())
    }
}

impl<F: Field> fmt::Display for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{self}")
    }
}

impl MatF {
    /// Parses a row list of infix expressions.
    pub fn parse(rows: &[&[&str]]) -> Result<MatF> {
        Mat::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|s| crate::exact::parse_ratfunc(s))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// Strings of the entries, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.to_rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect()
    }

    /// Substitutes into every entry.
    pub fn substitute(&self, v: crate::exact::Var, val: &RatFunc) -> Result<MatF> {
        self.try_map(|x| x.substitute(v, val))
    }
}

impl serde::Serialize for MatF {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for MatF {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<RatFunc>>::deserialize(d)?;
        Mat::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rf};

    #[test]
    fn identity_and_zero_rank() {
        let i4 = MatQ::identity(4);
        let (r, b) = rank_nullspace(&i4);
        assert_eq!((r, b.len()), (4, 0));
        let z = MatQ::zeros(3, 3);
        let (r, b) = rank_nullspace(&z);
        assert_eq!((r, b.len()), (0, 3));
    }

    #[test]
    fn nullspace_vectors_annihilate() {
        let m = MatQ::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let (r, basis) = rank_nullspace(&m);
        assert_eq!(r, 2);
        for v in &basis {
            assert!(m.mul_vec(v).unwrap().iter().all(|x| *x == int(0)));
        }
    }

    #[test]
    fn symbolic_osculating_rank() {
        let a = MatF::diag(&[rf("r"), rf("1"), rf("-1"), rf("-r")]);
        let z = vec![RatFunc::one(); 4];
        let mut cols = vec![z.clone()];
        for _ in 0..3 {
            let next = a.mul_vec(cols.last().unwrap()).unwrap();
            cols.push(next);
        }
        assert_eq!(MatF::from_cols(&cols).unwrap().rank(), 4);
    }

    #[test]
    fn solve_cases() {
        let b = vec![int(1), int(2)];
        assert_eq!(
            solve_linear(&MatQ::identity(2), &b).unwrap(),
            Solution::Unique(b.clone())
        );
        match solve_linear(&MatQ::zeros(2, 2), &[int(0), int(0)]).unwrap() {
            Solution::Family { basis, .. } => assert_eq!(basis.len(), 2),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            solve_linear(&MatQ::zeros(1, 1), &[int(1)]).unwrap(),
            Solution::None
        );
    }

    #[test]
    fn determinant_and_inverse() {
        let m = MatF::parse(&[&["a", "b"], &["c", "d"]]).unwrap();
        assert_eq!(m.det().unwrap(), rf("a*d-b*c"));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, MatF::identity(2));
    }
}

/// Nullspace of the system whose rows are given, with an explicit column
/// count so that an empty system yields the full space.
pub fn nullspace_of_rows<F: Field>(rows: Vec<Vec<F>>, cols: usize) -> Result<Vec<Vec<F>>> {
    if rows.is_empty() {
        return Ok((0..cols)
            .map(|i| (0..cols).map(|j| if i == j { F::one() } else { F::zero() }).collect())
            .collect());
    }
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch("row length differs from column count".into()));
    }
    Ok(rank_nullspace(&Mat::from_rows(rows)?).1)
}
